//! Exact determinant and interpolation kernels.
//!
//! Fraction-free Bareiss elimination over the integers and over the
//! Laurent ring, plus exact Lagrange interpolation used to reconstruct
//! determinant polynomials from integer evaluations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::laurent::LaurentPoly;

/// Determinant of an integer matrix by fraction-free Bareiss elimination.
pub fn det_bigint(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num_integer::Integer::div_rem(&num, &prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if sign < 0 {
        -prev
    } else {
        prev
    }
}

/// Determinant of a matrix of Laurent polynomials, by Bareiss elimination
/// in the Laurent ring. Intended for small matrices (the reduced Burau
/// image); the pivot divisions are exact by the Bareiss identity.
pub fn det_laurent(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .exact_division(&prev)
                    .expect("Bareiss division is exact in an integral domain");
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    prev.mul_unit(negate, 0)
}

/// Reconstructs the unique integer polynomial of degree < `points.len()`
/// through the given `(x, y)` samples. Panics if the data is not
/// polynomial with integer coefficients (callers control both).
pub fn interpolate_integer_poly(points: &[(i64, BigInt)]) -> Vec<BigInt> {
    let n = points.len();
    assert!(n > 0);
    // Newton's divided differences over exact rationals.
    let mut diffs: Vec<BigRational> =
        points.iter().map(|(_, y)| BigRational::from(y.clone())).collect();
    let xs: Vec<BigRational> =
        points.iter().map(|(x, _)| BigRational::from(BigInt::from(*x))).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &diffs[i] - &diffs[i - 1];
            let den = &xs[i] - &xs[i - level];
            diffs[i] = num / den;
        }
    }
    // Expand the Newton form into monomial coefficients:
    // acc <- acc * (x - x_i) + diffs[i], from the innermost node out.
    let mut acc = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut next = vec![BigRational::zero(); n];
        for j in 0..n - 1 {
            next[j + 1] = acc[j].clone();
        }
        for j in 0..n {
            next[j] -= acc[j].clone() * &xs[i];
        }
        next[0] += diffs[i].clone();
        acc = next;
    }
    acc.into_iter()
        .map(|c| {
            assert!(c.denom().is_one(), "interpolation data is not integral");
            c.numer().clone()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn integer_determinants() {
        assert_eq!(det_bigint(vec![]), BigInt::one());
        assert_eq!(det_bigint(mat(&[&[5]])), BigInt::from(5));
        assert_eq!(det_bigint(mat(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        // Needs a pivot swap.
        assert_eq!(det_bigint(mat(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            det_bigint(mat(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]])),
            BigInt::from(2)
        );
        // Singular.
        assert_eq!(det_bigint(mat(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    /// Oracle: cofactor expansion.
    fn det_cofactor(m: &[Vec<BigInt>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = BigInt::zero();
        for col in 0..n {
            let minor: Vec<Vec<BigInt>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != col)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][col] * det_cofactor(&minor);
            if col % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn bareiss_matches_cofactor_oracle() {
        // Deterministic pseudo-random small matrices.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 11) as i64 - 5
        };
        for n in 1..=5usize {
            for _ in 0..20 {
                let m: Vec<Vec<BigInt>> =
                    (0..n).map(|_| (0..n).map(|_| BigInt::from(next())).collect()).collect();
                assert_eq!(det_bigint(m.clone()), det_cofactor(&m));
            }
        }
    }

    #[test]
    fn laurent_determinant() {
        let t = LaurentPoly::term(1, 1);
        let one = LaurentPoly::one();
        // det [[t, 1], [1, t]] = t^2 - 1
        let d = det_laurent(vec![vec![t.clone(), one.clone()], vec![one.clone(), t.clone()]]);
        assert_eq!(d, LaurentPoly::from_coeffs(0, vec![-1, 0, 1]));
        // Zero column.
        let z = LaurentPoly::zero();
        assert_eq!(det_laurent(vec![vec![z.clone(), one.clone()], vec![z, t]]), LaurentPoly::zero());
    }

    #[test]
    fn interpolation_reconstructs_polynomials() {
        // p(x) = 3x^3 - 2x + 7
        let p = |x: i64| BigInt::from(3 * x * x * x - 2 * x + 7);
        let points: Vec<(i64, BigInt)> = (-2..=2).map(|x| (x, p(x))).collect();
        let coeffs = interpolate_integer_poly(&points);
        assert_eq!(
            coeffs,
            vec![BigInt::from(7), BigInt::from(-2), BigInt::zero(), BigInt::from(3), BigInt::zero()]
        );
    }
}
