//! Alexander polynomial via the reduced Burau representation.
//!
//! This route is independent of the Seifert-matrix route: the word is
//! pushed through the reduced Burau matrices over the Laurent ring, and
//! `det(I - B) * (1 - t) / (1 - t^m)` recovers the Alexander polynomial
//! of a knot closure up to units. The two routes cross-validate each
//! other throughout the test suite.

use num_bigint::BigInt;
use num_traits::One;

use crate::braid::{BraidWord, Sign};
use crate::laurent::LaurentPoly;

use super::linalg::det_laurent;
use super::{normalize_alexander, InvariantError};

/// `det(I - reduced_burau(b))` as an exact Laurent polynomial.
pub fn burau_characteristic(b: &BraidWord) -> LaurentPoly {
    let n = b.strands() - 1;
    // Identity matrix, updated column-wise per letter.
    let mut m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() })
                .collect()
        })
        .collect();
    let t = LaurentPoly::term(1, 1);
    let t_inv = LaurentPoly::term(1, -1);
    for l in b.letters() {
        let i = l.index - 1; // 0-based column of the acted generator
        // Right-multiplication by the reduced Burau matrix of sigma_i^len:
        // only columns i-1, i, i+1 change, all in terms of the old column i.
        let col_i: Vec<LaurentPoly> = (0..n).map(|r| m[r][i].clone()).collect();
        match l.sign {
            Sign::Positive => {
                for r in 0..n {
                    if i > 0 {
                        let add = &t * &col_i[r];
                        m[r][i - 1] = &m[r][i - 1] + &add;
                    }
                    if i + 1 < n {
                        m[r][i + 1] = &m[r][i + 1] + &col_i[r];
                    }
                    m[r][i] = &col_i[r] * &LaurentPoly::term(-1, 1);
                }
            }
            Sign::Negative => {
                for r in 0..n {
                    if i > 0 {
                        m[r][i - 1] = &m[r][i - 1] + &col_i[r];
                    }
                    if i + 1 < n {
                        let add = &t_inv * &col_i[r];
                        m[r][i + 1] = &m[r][i + 1] + &add;
                    }
                    m[r][i] = &col_i[r] * &LaurentPoly::term(-1, -1);
                }
            }
        }
    }
    // det(I - M)
    for (i, row) in m.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let id = if i == j { LaurentPoly::one() } else { LaurentPoly::zero() };
            *entry = &id - entry;
        }
    }
    det_laurent(m)
}

/// Alexander polynomial of a knot closure via the reduced Burau
/// determinant, normalized to the symmetric representative with positive
/// leading coefficient.
pub fn alexander_burau(b: &BraidWord) -> Result<LaurentPoly, InvariantError> {
    let summary = b.closure_summary();
    if !summary.is_knot() {
        return Err(InvariantError::NotAKnot { components: summary.components });
    }
    let m = b.strands();
    let chi = burau_characteristic(b);
    let one_minus_t = LaurentPoly::from_coeffs(0, vec![BigInt::one(), BigInt::from(-1)]);
    // 1 - t^m
    let mut cs = vec![BigInt::from(0); m + 1];
    cs[0] = BigInt::one();
    cs[m] = BigInt::from(-1);
    let one_minus_tm = LaurentPoly::from_coeffs(0, cs);
    let num = &chi * &one_minus_t;
    let delta = num
        .exact_division(&one_minus_tm)
        .map_err(|_| InvariantError::BurauDivision { strands: m })?;
    Ok(normalize_alexander(&delta))
}
