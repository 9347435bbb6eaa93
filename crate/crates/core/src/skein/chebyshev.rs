//! Chebyshev polynomials as integer coefficient lists in the power basis
//! (index `i` holds the coefficient of `x^i`).

use dashu_int::IBig;

fn recurrence(first: Vec<IBig>, second: Vec<IBig>, n: usize) -> Vec<IBig> {
    if n == 0 {
        return first;
    }
    let (mut prev, mut cur) = (first, second);
    for _ in 1..n {
        let mut next = vec![IBig::ZERO; cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// First kind: `T_0 = 2`, `T_1 = x`, `T_k = x T_{k-1} - T_{k-2}`.
pub fn chebyshev_t(n: usize) -> Vec<IBig> {
    recurrence(vec![IBig::from(2)], vec![IBig::ZERO, IBig::ONE], n)
}

/// Same as [`chebyshev_t`] except `T'_0 = 1`.
pub fn chebyshev_t_prime(n: usize) -> Vec<IBig> {
    if n == 0 {
        vec![IBig::ONE]
    } else {
        chebyshev_t(n)
    }
}

/// Second kind: `S_0 = 1`, `S_1 = x`, `S_k = x S_{k-1} - S_{k-2}`.
pub fn chebyshev_s(n: usize) -> Vec<IBig> {
    recurrence(vec![IBig::ONE], vec![IBig::ZERO, IBig::ONE], n)
}

/// Coefficients `e_k` with `x^n = sum_k e_k T'_k(x)`.
///
/// Each `T'_k` is monic of degree `k`, so the change of basis is unitriangular
/// and is inverted by peeling off the leading term.
pub fn power_in_t_prime(n: usize) -> Vec<IBig> {
    let mut out = vec![IBig::ZERO; n + 1];
    let mut rem = vec![IBig::ZERO; n + 1];
    rem[n] = IBig::ONE;
    for k in (0..=n).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        for (i, t) in chebyshev_t_prime(k).iter().enumerate() {
            rem[i] -= &c * t;
        }
        out[k] = c;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::binomial;

    fn ints(v: &[i64]) -> Vec<IBig> {
        v.iter().map(|&c| IBig::from(c)).collect()
    }

    fn eval(coeffs: &[IBig], x: f64) -> f64 {
        coeffs.iter().rev().fold(0.0, |acc, c| acc * x + i64::try_from(c).unwrap() as f64)
    }

    // composition of coefficient lists, for T_m(T_n(x))
    fn compose(outer: &[IBig], inner: &[IBig]) -> Vec<IBig> {
        let mut acc = vec![IBig::ZERO];
        for c in outer.iter().rev() {
            let mut next = vec![IBig::ZERO; acc.len() + inner.len() - 1];
            for (i, a) in acc.iter().enumerate() {
                for (j, b) in inner.iter().enumerate() {
                    next[i + j] += a * b;
                }
            }
            next[0] += c;
            acc = next;
        }
        while acc.len() > 1 && acc.last().unwrap().is_zero() {
            acc.pop();
        }
        acc
    }

    #[test]
    fn t_values() {
        assert_eq!(chebyshev_t(0), ints(&[2]));
        assert_eq!(chebyshev_t(1), ints(&[0, 1]));
        assert_eq!(chebyshev_t(2), ints(&[-2, 0, 1]));
        assert_eq!(chebyshev_t(5), ints(&[0, 5, 0, -5, 0, 1]));
    }

    #[test]
    fn t_prime_and_s_values() {
        assert_eq!(chebyshev_t_prime(0), ints(&[1]));
        assert_eq!(chebyshev_s(2), ints(&[-1, 0, 1]));
        assert_eq!(chebyshev_t_prime(3), ints(&[0, -3, 0, 1]));
        assert_eq!(chebyshev_t_prime(3), chebyshev_t(3));
    }

    #[test]
    fn t_of_two_cos() {
        let mut theta = 0.1234_f64;
        for _ in 0..100 {
            theta = (theta * 7.77 + 0.913).rem_euclid(std::f64::consts::TAU);
            for k in 0..=10 {
                let lhs = eval(&chebyshev_t(k), 2.0 * theta.cos());
                assert!((lhs - 2.0 * (k as f64 * theta).cos()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn composition_law() {
        for m in 0..=6 {
            for n in 0..=6 {
                assert_eq!(compose(&chebyshev_t(m), &chebyshev_t(n)), chebyshev_t(m * n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn powers_match_binomial_expansion() {
        // (z + 1/z)^n, pairing z^j with z^-j
        for n in 0..=20u32 {
            let got = power_in_t_prime(n as usize);
            let mut expected = vec![IBig::ZERO; n as usize + 1];
            for j in 0..=n / 2 {
                expected[(n - 2 * j) as usize] = binomial(n, j);
            }
            assert_eq!(got, expected, "n = {n}");
        }
        assert_eq!(power_in_t_prime(4), ints(&[6, 0, 4, 0, 1]));
    }
}
