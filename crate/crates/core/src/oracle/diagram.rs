//! Exact two-family diagram of `(p,q)` over `(r,s)` on the torus `R^2 / Z^2`
//! with the puncture at the lattice points.
//!
//! Each component is a straight closed geodesic `P + t v`, `t in [0,1)`, with
//! `v` the primitive slope. Coordinates are integers scaled by a common
//! denominator `scale`, so all intersection arithmetic is exact.

use num_integer::Integer;
use serde::Serialize;

use super::classify::TracedLoop;
use super::OracleError;

/// Denominators of the strand offsets of the two families.
const OFFSET_DEN: [i128; 2] = [1009, 1013];

/// Ray directions at a crossing: over forward/backward, under forward/backward.
pub const OVER_FWD: usize = 0;
pub const OVER_BWD: usize = 1;
pub const UNDER_FWD: usize = 2;
pub const UNDER_BWD: usize = 3;

#[derive(Clone, Debug, Serialize)]
pub struct Crossing {
    /// Position in scaled coordinates, reduced into `[0, scale)^2`.
    pub position: (i128, i128),
    /// `(component, parameter)` on the over and under families; parameters
    /// are scaled to `[0, scale)`.
    pub over: (usize, i128),
    pub under: (usize, i128),
}

#[derive(Clone, Debug)]
pub struct Diagram {
    pub over_slope: (i64, i64),
    pub under_slope: (i64, i64),
    /// `det(v1, v2)` of the primitive slopes.
    pub orientation: i64,
    pub scale: i128,
    pub crossings: Vec<Crossing>,
    /// For ray `4 c + dir`: the ray it runs into and the displacement along
    /// the way.
    follow: Vec<(usize, (i128, i128))>,
    offsets: [Vec<(i128, i128)>; 2],
}

/// A smoothing choice per crossing: bit `c` set means the B-smoothing.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct State(pub u64);

impl State {
    pub fn is_b(&self, c: usize) -> bool {
        self.0 >> c & 1 == 1
    }

    /// `#A - #B` over `n` crossings.
    pub fn weight(&self, n: usize) -> i64 {
        n as i64 - 2 * (self.0.count_ones() as i64)
    }
}

fn primitive(p: i64, q: i64) -> (i128, i128, i128) {
    let g = p.gcd(&q);
    ((p / g) as i128, (q / g) as i128, g as i128)
}

fn det(a: (i128, i128), b: (i128, i128)) -> i128 {
    a.0 * b.1 - a.1 * b.0
}

/// `w` with `det(v, w) = -1`, i.e. `b w_x - a w_y = 1` for `v = (a, b)`:
/// one step of `w` moves a line of slope `v` to the next parallel line.
fn transversal(v: (i128, i128)) -> (i128, i128) {
    let e = v.0.extended_gcd(&v.1);
    // x a + y b = +-1
    let (x, y) = if e.gcd < 0 { (-e.x, -e.y) } else { (e.x, e.y) };
    (y, -x)
}

fn offset_numerators(seed: u64) -> [i128; 2] {
    let mix = |k: u64, den: i128| -> i128 {
        let h = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(k.wrapping_mul(0xBF58_476D_1CE4_E5B9));
        1 + (h >> 11) as i128 % (den - 1)
    };
    [mix(1, OFFSET_DEN[0]), mix(2, OFFSET_DEN[1])]
}

impl Diagram {
    /// `(p,q)` over `(r,s)`; both non-empty and not parallel. `seed` picks
    /// the strand offsets; offsets putting a crossing on the edge of the
    /// fundamental square are skipped deterministically.
    pub fn build(p: i64, q: i64, r: i64, s: i64, seed: u64) -> Result<Self, OracleError> {
        if (p, q) == (0, 0) || (r, s) == (0, 0) || p * s - r * q == 0 {
            return Err(OracleError::Degenerate);
        }
        for attempt in 0..64 {
            if let Some(d) = Self::build_once(p, q, r, s, seed.wrapping_add(attempt))? {
                return Ok(d);
            }
        }
        Err(OracleError::Tracing("no admissible strand offsets".into()))
    }

    fn build_once(p: i64, q: i64, r: i64, s: i64, seed: u64) -> Result<Option<Self>, OracleError> {
        let (a1, b1, d1) = primitive(p, q);
        let (a2, b2, d2) = primitive(r, s);
        let (v1, v2) = ((a1, b1), (a2, b2));
        let delta = det(v1, v2);
        let nums = offset_numerators(seed);
        let den = [d1 * OFFSET_DEN[0], d2 * OFFSET_DEN[1]];
        let e = den[0] * den[1];
        let scale = e * delta.abs();
        let (w1, w2) = (transversal(v1), transversal(v2));
        // start points P_j = t_j w with t_j = (j N + n) / (d N), scaled by `scale`
        let starts = |d: i128, n: i128, big_n: i128, w: (i128, i128), unit: i128| -> Vec<(i128, i128)> {
            (0..d).map(|j| ((j * big_n + n) * w.0 * unit, (j * big_n + n) * w.1 * unit)).collect()
        };
        let o1 = starts(d1, nums[0], OFFSET_DEN[0], w1, scale / den[0]);
        let o2 = starts(d2, nums[1], OFFSET_DEN[1], w2, scale / den[1]);

        // det(n0, v2) = 1
        let n0 = transversal(v2);
        debug_assert_eq!(det(n0, v2), 1);
        let sgn = delta.signum();
        let mut crossings = Vec::new();
        for (j, pj) in o1.iter().enumerate() {
            for (k, qk) in o2.iter().enumerate() {
                // R0 = Q - P, at denominator `scale`; crossing solves
                // lam v1 - mu v2 = R0 + n for integer n.
                let r0 = (qk.0 - pj.0, qk.1 - pj.1);
                // lam * scale * delta = det(R0, v2) + scale * k'
                let c0 = det(r0, v2);
                let base = (-c0).div_euclid(scale);
                for kk in base - delta.abs() - 1..=base + delta.abs() + 1 {
                    let lam_num = (c0 + scale * kk) * sgn;
                    if lam_num < 0 || lam_num >= scale * delta.abs() {
                        continue;
                    }
                    debug_assert_eq!(lam_num % delta.abs(), 0);
                    let lam = lam_num / delta.abs();
                    let x = pj.0 + lam * v1.0;
                    let y = pj.1 + lam * v1.1;
                    // in the unimodular basis (v2, n0), the v2-coordinate of
                    // X - Q is the under parameter modulo the lattice
                    let mu = det(n0, (x - qk.0, y - qk.1)).rem_euclid(scale);
                    debug_assert_eq!(det((x - qk.0, y - qk.1), v2) % scale, 0);
                    crossings.push(Crossing {
                        position: (x.rem_euclid(scale), y.rem_euclid(scale)),
                        over: (j, lam),
                        under: (k, mu),
                    });
                }
            }
        }
        let expected = (p * s - r * q).unsigned_abs() as usize;
        if crossings.len() != expected {
            return Err(OracleError::Tracing(format!("found {} crossings, expected {expected}", crossings.len())));
        }
        crossings.sort_by_key(|c| c.position);
        if crossings.iter().any(|c| c.position.0 == 0 || c.position.1 == 0) {
            return Ok(None);
        }
        if crossings.windows(2).any(|w| w[0].position == w[1].position) {
            return Err(OracleError::Tracing("two crossings coincide".into()));
        }
        let mut diagram = Diagram {
            over_slope: (a1 as i64, b1 as i64),
            under_slope: (a2 as i64, b2 as i64),
            orientation: delta as i64,
            scale,
            crossings,
            follow: Vec::new(),
            offsets: [o1, o2],
        };
        diagram.link_rays(v1, v2);
        Ok(Some(diagram))
    }

    fn link_rays(&mut self, v1: (i128, i128), v2: (i128, i128)) {
        let n = self.crossings.len();
        let mut follow = vec![(0, (0, 0)); 4 * n];
        for family in 0..2 {
            let comps = self.offsets[family].len();
            let v = if family == 0 { v1 } else { v2 };
            let (fwd, bwd) = if family == 0 { (OVER_FWD, OVER_BWD) } else { (UNDER_FWD, UNDER_BWD) };
            for comp in 0..comps {
                let mut on: Vec<(i128, usize)> = self
                    .crossings
                    .iter()
                    .enumerate()
                    .filter_map(|(i, c)| {
                        let (cc, t) = if family == 0 { c.over } else { c.under };
                        (cc == comp).then_some((t, i))
                    })
                    .collect();
                on.sort();
                for (idx, &(t, c)) in on.iter().enumerate() {
                    let (t_next, c_next) = on[(idx + 1) % on.len()];
                    let mut dt = (t_next - t).rem_euclid(self.scale);
                    if dt == 0 {
                        dt = self.scale;
                    }
                    let d = (dt * v.0, dt * v.1);
                    follow[4 * c + fwd] = (4 * c_next + bwd, d);
                    follow[4 * c_next + bwd] = (4 * c + fwd, (-d.0, -d.1));
                }
            }
        }
        self.follow = follow;
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Ray paired with `ray` by the smoothing at its crossing. The
    /// A-smoothing joins the forward over-ray with the ray clockwise next
    /// to it.
    fn partner(&self, ray: usize, state: State) -> usize {
        let (c, dir) = (ray / 4, ray % 4);
        let a_smoothing = !state.is_b(c);
        // with det(v1, v2) > 0 the rays run counterclockwise O+, U+, O-, U-
        let joins_reverse_under = a_smoothing == (self.orientation > 0);
        let other = match (dir, joins_reverse_under) {
            (OVER_FWD, true) | (OVER_BWD, false) => UNDER_BWD,
            (OVER_FWD, false) | (OVER_BWD, true) => UNDER_FWD,
            (UNDER_BWD, true) | (UNDER_FWD, false) => OVER_FWD,
            (UNDER_BWD, false) | (UNDER_FWD, true) => OVER_BWD,
            _ => unreachable!(),
        };
        4 * c + other
    }

    /// Resolves every crossing per `state` and returns the resulting loops.
    pub fn trace(&self, state: State) -> Vec<TracedLoop> {
        let mut visited = vec![false; self.follow.len()];
        let mut loops = Vec::new();
        for start in 0..self.follow.len() {
            if visited[start] {
                continue;
            }
            let c0 = &self.crossings[start / 4];
            let mut pos = c0.position;
            let mut vertices = vec![pos];
            let mut ray = start;
            loop {
                visited[ray] = true;
                let (arrive, d) = self.follow[ray];
                visited[arrive] = true;
                pos = (pos.0 + d.0, pos.1 + d.1);
                ray = self.partner(arrive, state);
                if ray == start {
                    break;
                }
                vertices.push(pos);
            }
            let displacement = (pos.0 - c0.position.0, pos.1 - c0.position.1);
            loops.push(TracedLoop { vertices, displacement, scale: self.scale });
        }
        loops
    }

    /// JSON description of the diagram and, optionally, one state.
    pub fn debug_json(&self, state: Option<State>) -> serde_json::Value {
        let strands = |family: usize, v: (i64, i64)| -> Vec<serde_json::Value> {
            self.offsets[family]
                .iter()
                .map(|o| {
                    serde_json::json!({
                        "start": [o.0.to_string(), o.1.to_string()],
                        "direction": [v.0, v.1],
                    })
                })
                .collect()
        };
        let smoothing = state.map(|s| {
            (0..self.crossings.len())
                .map(|c| if s.is_b(c) { "B" } else { "A" })
                .collect::<Vec<_>>()
        });
        serde_json::json!({
            "scale": self.scale.to_string(),
            "over": strands(0, self.over_slope),
            "under": strands(1, self.under_slope),
            "crossings": self.crossings.iter().map(|c| [c.position.0.to_string(), c.position.1.to_string()]).collect::<Vec<_>>(),
            "smoothing": smoothing,
        })
    }
}
