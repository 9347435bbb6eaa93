//! Classification of a resolved loop by its homology class and, when that
//! vanishes, by the lattice points its planar lift encloses.

use num_integer::Integer;

use super::OracleError;
use crate::skein::PQ;

/// What a simple closed curve on the one-holed torus is, up to isotopy.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum LoopClass {
    /// Bounds a disk.
    Trivial,
    /// Parallel to the boundary.
    Peripheral,
    /// Primitive slope, canonical sign.
    Essential(PQ),
}

/// A closed polygonal loop lifted to the plane, in integer coordinates
/// where the lattice of punctures is `scale * Z^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracedLoop {
    /// Lift of the loop; consecutive vertices are joined, and the last
    /// joins `vertices[0] + displacement`.
    pub vertices: Vec<(i128, i128)>,
    /// End point minus start point of the lift.
    pub displacement: (i128, i128),
    pub scale: i128,
}

impl TracedLoop {
    pub fn classify(&self) -> Result<LoopClass, OracleError> {
        let (dx, dy) = self.displacement;
        if dx % self.scale != 0 || dy % self.scale != 0 {
            return Err(OracleError::Tracing("loop does not close up on the torus".into()));
        }
        let (a, b) = ((dx / self.scale) as i64, (dy / self.scale) as i64);
        if (a, b) != (0, 0) {
            if a.gcd(&b) != 1 {
                return Err(OracleError::Tracing(format!("essential loop with non-primitive class ({a},{b})")));
            }
            return Ok(LoopClass::Essential(PQ::new(a, b)));
        }
        match self.enclosed_lattice_points() {
            0 => Ok(LoopClass::Trivial),
            1 => Ok(LoopClass::Peripheral),
            n => Err(OracleError::Tracing(format!("null-homologous loop encloses {n} punctures"))),
        }
    }

    /// Lattice points with non-zero winding number.
    fn enclosed_lattice_points(&self) -> usize {
        let xs = self.vertices.iter().map(|v| v.0);
        let ys = self.vertices.iter().map(|v| v.1);
        let (x0, x1) = (xs.clone().min().unwrap(), xs.max().unwrap());
        let (y0, y1) = (ys.clone().min().unwrap(), ys.max().unwrap());
        let s = self.scale;
        let mut count = 0;
        for i in -(-x0).div_euclid(s)..=x1.div_euclid(s) {
            for j in -(-y0).div_euclid(s)..=y1.div_euclid(s) {
                if winding_number(&self.vertices, (i * s, j * s)) != 0 {
                    count += 1;
                }
            }
        }
        count
    }
}

/// Winding number of a closed polygon around `z`, which must not lie on it.
pub(crate) fn winding_number(poly: &[(i128, i128)], z: (i128, i128)) -> i64 {
    let mut w = 0;
    for (i, &a) in poly.iter().enumerate() {
        let b = poly[(i + 1) % poly.len()];
        let cross = (b.0 - a.0) * (z.1 - a.1) - (z.0 - a.0) * (b.1 - a.1);
        if a.1 <= z.1 {
            if b.1 > z.1 && cross > 0 {
                w += 1;
            }
        } else if b.1 <= z.1 && cross < 0 {
            w -= 1;
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(cx: i128, cy: i128, r: i128) -> Vec<(i128, i128)> {
        vec![(cx - r, cy - r), (cx + r, cy - r), (cx + r, cy + r), (cx - r, cy + r)]
    }

    #[test]
    fn circle_around_corner_is_peripheral() {
        let l = TracedLoop { vertices: square(100, 100, 10), displacement: (0, 0), scale: 100 };
        assert_eq!(l.classify().unwrap(), LoopClass::Peripheral);
    }

    #[test]
    fn interior_circle_is_trivial() {
        let l = TracedLoop { vertices: square(50, 50, 10), displacement: (0, 0), scale: 100 };
        assert_eq!(l.classify().unwrap(), LoopClass::Trivial);
    }

    #[test]
    fn diagonal_is_essential() {
        let l = TracedLoop { vertices: vec![(30, 10)], displacement: (100, 100), scale: 100 };
        assert_eq!(l.classify().unwrap(), LoopClass::Essential(PQ::new(1, 1)));
        let l = TracedLoop { vertices: vec![(30, 10)], displacement: (-100, 200), scale: 100 };
        assert_eq!(l.classify().unwrap(), LoopClass::Essential(PQ::new(1, -2)));
    }

    #[test]
    fn malformed_loops_fail() {
        let two = TracedLoop { vertices: vec![(50, 50), (250, 50), (250, 150), (50, 150)], displacement: (0, 0), scale: 100 };
        assert!(two.classify().is_err());
        let double = TracedLoop { vertices: vec![(0, 10)], displacement: (200, 0), scale: 100 };
        assert!(double.classify().is_err());
        let open = TracedLoop { vertices: vec![(0, 10)], displacement: (150, 0), scale: 100 };
        assert!(open.classify().is_err());
    }

    #[test]
    fn winding_orientation() {
        let mut sq = square(0, 0, 5);
        assert_eq!(winding_number(&sq, (0, 0)), 1);
        sq.reverse();
        assert_eq!(winding_number(&sq, (0, 0)), -1);
        assert_eq!(winding_number(&sq, (20, 0)), 0);
    }
}
