//! Exact classical invariants of braid closures.
//!
//! The Seifert matrix of the closed-braid surface feeds every signature
//! computation; the Alexander polynomial is computed both from it and via
//! the reduced Burau representation, and the two independent routes are
//! required to agree throughout the test suite. Tristram-Levine
//! signatures are evaluated exactly in a cyclotomic field for angle
//! denominators up to [`EXACT_DENOMINATOR_LIMIT`] and with certified
//! rational-interval arithmetic beyond that, erroring instead of ever
//! returning an uncertified value.

mod burau;
mod cyclotomic;
mod inertia;
mod interval;
mod linalg;
mod seifert;

pub use burau::{alexander_burau, burau_characteristic};
pub use cyclotomic::{cyclotomic_polynomial, CycElem, CyclotomicField};
pub use inertia::{hermitian_inertia, symmetric_inertia, CInterval, Inertia};
pub use interval::{cos_sin_two_pi, pi_interval, RatInterval};
pub use seifert::{seifert_matrix, seifert_matrix_stabilized};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::braid::{cable_braid, torus_braid, BraidWord};
use crate::laurent::LaurentPoly;

/// Largest angle denominator handled by exact cyclotomic arithmetic;
/// larger denominators use the certified interval path.
pub const EXACT_DENOMINATOR_LIMIT: i64 = 60;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("closure is not a knot: {components} components")]
    NotAKnot { components: usize },
    #[error(
        "Seifert surface is disconnected: generator index(es) {missing:?} never occur; \
         appending one letter per missing index reconnects the diagram"
    )]
    DisconnectedSurface { missing: Vec<usize> },
    #[error("Burau determinant not divisible by 1 - t^{strands}; closure is not a knot")]
    BurauDivision { strands: usize },
    #[error("{m} and {n} are not relatively prime")]
    NotCoprime { m: i64, n: i64 },
    #[error("theta must be a rational strictly between 0 and 1, got {theta}")]
    BadTheta { theta: Ratio<i64> },
    #[error("omega is at (or within certification margin of) an Alexander root: theta = {theta}")]
    JumpPoint { theta: Ratio<i64> },
    #[error("cannot certify {what} at the supported precision")]
    CannotCertify { what: String },
    #[error(transparent)]
    Braid(#[from] crate::braid::BraidError),
}

/// Seifert surface data of a closed braid: the Seifert matrix over the
/// standard loop basis, the surface genus, and the closure component
/// count. For a knot closure the matrix rank is twice the genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertData {
    pub matrix: Vec<Vec<i64>>,
    pub genus: usize,
    pub components: usize,
    pub strands: usize,
}

impl SeifertData {
    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_knot(&self) -> bool {
        self.components == 1
    }

    /// `V + V^T`, the symmetrized Seifert form.
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.matrix[i][j] + self.matrix[j][i]).collect())
            .collect()
    }
}

/// A Tristram-Levine signature value at `omega = exp(2 pi i theta)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignatureValue {
    pub value: i64,
    pub theta: Ratio<i64>,
    /// Whether the value came from exact field arithmetic rather than
    /// certified interval arithmetic.
    pub certified_exact: bool,
}

/// Normalizes an Alexander polynomial to the symmetric representative
/// with positive leading coefficient.
pub(crate) fn normalize_alexander(delta: &LaurentPoly) -> LaurentPoly {
    if delta.is_zero() {
        return LaurentPoly::zero();
    }
    let span = delta.degree_span() as i64;
    let centered_min = -span.div_floor(&2);
    let shift = centered_min - delta.min_degree();
    let negate = delta.leading_coeff().is_negative();
    delta.mul_unit(negate, shift)
}

/// Alexander polynomial from the Seifert matrix: `det(V - t V^T)` up to
/// units, normalized symmetric with positive leading coefficient.
///
/// The determinant polynomial is reconstructed from exact integer
/// determinant evaluations, which keeps the elimination fraction-free.
pub fn alexander_from_seifert(s: &SeifertData) -> Result<LaurentPoly, InvariantError> {
    if !s.is_knot() {
        return Err(InvariantError::NotAKnot { components: s.components });
    }
    let r = s.rank();
    if r == 0 {
        return Ok(LaurentPoly::one());
    }
    // det(V - t V^T) has degree at most r; sample r+1 integer points.
    let points: Vec<(i64, BigInt)> = (0..=r as i64)
        .map(|x| {
            let m: Vec<Vec<BigInt>> = (0..r)
                .map(|i| {
                    (0..r)
                        .map(|j| BigInt::from(s.matrix[i][j] - x * s.matrix[j][i]))
                        .collect()
                })
                .collect();
            (x, linalg::det_bigint(m))
        })
        .collect();
    let coeffs = linalg::interpolate_integer_poly(&points);
    let delta = LaurentPoly::from_coeffs(0, coeffs);
    debug_assert!(!delta.is_zero(), "knot Alexander polynomial cannot vanish");
    Ok(normalize_alexander(&delta))
}

/// Closed form for torus knots:
/// `(t^(mn) - 1)(t - 1) / ((t^m - 1)(t^n - 1))`, coprime `m, n >= 1`.
pub fn torus_alexander(m: u32, n: u32) -> Result<LaurentPoly, InvariantError> {
    if (m as i64).gcd(&(n as i64)) != 1 {
        return Err(InvariantError::NotCoprime { m: m as i64, n: n as i64 });
    }
    let power_minus_one = |k: u32| {
        let mut cs = vec![BigInt::zero(); k as usize + 1];
        cs[0] = BigInt::from(-1);
        cs[k as usize] = BigInt::from(1);
        LaurentPoly::from_coeffs(0, cs)
    };
    let num = &power_minus_one(m * n) * &power_minus_one(1);
    let den = &power_minus_one(m) * &power_minus_one(n);
    let delta = num.exact_division(&den).expect("classical quotient is exact");
    Ok(normalize_alexander(&delta))
}

/// The cable formula: `Delta_K(t^m) * Delta_{T(m,n)}(t)` for coprime
/// `m, n`; negative `n` uses the mirror invariance of the Alexander
/// polynomial.
pub fn cable_alexander(
    delta_companion: &LaurentPoly,
    m: u32,
    n: i64,
) -> Result<LaurentPoly, InvariantError> {
    if (m as i64).gcd(&n) != 1 {
        return Err(InvariantError::NotCoprime { m: m as i64, n });
    }
    let torus = torus_alexander(m, n.unsigned_abs() as u32)?;
    let product = &delta_companion.substitute_power(m) * &torus;
    Ok(normalize_alexander(&product))
}

/// Knot signature: the signature of `V + V^T`. The convention makes the
/// right-handed trefoil come out at -2.
pub fn signature(s: &SeifertData) -> Result<i64, InvariantError> {
    if !s.is_knot() {
        return Err(InvariantError::NotAKnot { components: s.components });
    }
    Ok(symmetric_inertia(&s.symmetrized())?.signature())
}

fn validate_theta(theta: Ratio<i64>) -> Result<(i64, i64), InvariantError> {
    if theta <= Ratio::new(0, 1) || theta >= Ratio::new(1, 1) {
        return Err(InvariantError::BadTheta { theta });
    }
    Ok((*theta.numer(), *theta.denom()))
}

/// Tristram-Levine signature at `omega = exp(2 pi i theta)`, exact
/// rational `theta` in (0, 1).
///
/// Errors with [`InvariantError::JumpPoint`] when `omega` is a root of
/// the Alexander polynomial (where the value is convention-dependent).
pub fn tristram_levine(
    s: &SeifertData,
    theta: Ratio<i64>,
) -> Result<SignatureValue, InvariantError> {
    if !s.is_knot() {
        return Err(InvariantError::NotAKnot { components: s.components });
    }
    let (a, b) = validate_theta(theta)?;
    let delta = alexander_from_seifert(s)?;
    let r = s.rank();
    if r == 0 {
        return Ok(SignatureValue { value: 0, theta, certified_exact: true });
    }

    if b <= EXACT_DENOMINATOR_LIMIT {
        let field = CyclotomicField::new(a as u32, b as u32);
        // Jump check is exact: omega is a root of Delta iff the reduced
        // evaluation is the zero element.
        if field.is_zero(&field.eval_laurent(&delta)) {
            return Err(InvariantError::JumpPoint { theta });
        }
        let omega = field.root_power(1);
        let one_minus_omega = field.sub(&field.one(), &omega);
        let one_minus_conj = field.conj(&one_minus_omega);
        let h: Vec<Vec<CycElem>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let x = field.mul(&one_minus_omega, &field.from_int(s.matrix[i][j]));
                        let y = field.mul(&one_minus_conj, &field.from_int(s.matrix[j][i]));
                        field.add(&x, &y)
                    })
                    .collect()
            })
            .collect();
        let inertia = hermitian_inertia(&field, h)?;
        debug_assert_eq!(inertia.zero, 0, "form is nondegenerate off Alexander roots");
        return Ok(SignatureValue { value: inertia.signature(), theta, certified_exact: true });
    }

    // Certified interval path for large denominators: escalate precision
    // until every needed sign is certain, or fail.
    let q = BigRational::new(BigInt::from(a), BigInt::from(b));
    let mut delta_separated = false;
    for terms in [32usize, 64, 128, 256, 512] {
        let (cos, sin) = cos_sin_two_pi(&q, terms);
        let omega = CInterval { re: cos, im: sin };
        // Jump guard: certify Delta(omega) != 0 before trusting inertia.
        if !delta_separated {
            let mut delta_val = CInterval::zero();
            for (k, c) in delta.terms() {
                if c.is_zero() {
                    continue;
                }
                let qk = BigRational::new(BigInt::from(k * a), BigInt::from(b));
                let (ck, sk) = cos_sin_two_pi(&qk, terms);
                let term = CInterval { re: ck, im: sk }.scale(&BigRational::from(c.clone()));
                delta_val = delta_val.add(&term);
            }
            delta_separated = delta_val.re.certified_sign().is_some()
                || delta_val.im.certified_sign().is_some();
            if !delta_separated {
                if terms == 512 {
                    return Err(InvariantError::JumpPoint { theta });
                }
                continue;
            }
        }
        let one = CInterval::real(RatInterval::from_int(1));
        let a1 = one.sub(&omega);
        let a2 = a1.conj();
        let h: Vec<Vec<CInterval>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let x = a1.scale(&BigRational::from(BigInt::from(s.matrix[i][j])));
                        let y = a2.scale(&BigRational::from(BigInt::from(s.matrix[j][i])));
                        x.add(&y)
                    })
                    .collect()
            })
            .collect();
        match inertia::hermitian_inertia_certified(&h) {
            Ok(inertia) => {
                return Ok(SignatureValue {
                    value: inertia.signature(),
                    theta,
                    certified_exact: false,
                })
            }
            Err(InvariantError::CannotCertify { .. }) if terms < 512 => continue,
            Err(e) => return Err(e),
        }
    }
    Err(InvariantError::CannotCertify { what: format!("signature at theta = {theta}") })
}

/// Both sides of the cabling formula for Tristram-Levine signatures,
/// computed independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LitherlandReport {
    pub cable_side: i64,
    pub companion_term: i64,
    pub torus_term: i64,
    pub holds: bool,
    pub theta: Ratio<i64>,
    pub companion_theta: Option<Ratio<i64>>,
}

/// Checks `sigma_omega(K_{m,n}) = sigma_{omega^m}(K) + sigma_omega(T(m,n))`
/// by building the cable braid and evaluating each side on its own Seifert
/// matrix. `omega^m` corresponds to `m * theta mod 1`; when that lands on
/// an integer the companion term is zero by definition.
pub fn check_litherland(
    companion: &BraidWord,
    m: u32,
    n: i64,
    theta: Ratio<i64>,
) -> Result<LitherlandReport, InvariantError> {
    validate_theta(theta)?;
    if (m as i64).gcd(&n) != 1 {
        return Err(InvariantError::NotCoprime { m: m as i64, n });
    }
    let cable = cable_braid(companion, m as usize, n)?;
    let cable_side = tristram_levine(&seifert_matrix(&cable)?, theta)?.value;

    let m_theta = theta * Ratio::new(m as i64, 1);
    let fractional = m_theta - m_theta.floor();
    let (companion_term, companion_theta) = if fractional == Ratio::new(0, 1) {
        (0, None)
    } else if companion.strands() == 1 {
        (0, Some(fractional))
    } else {
        let term = tristram_levine(&seifert_matrix(companion)?, fractional)?.value;
        (term, Some(fractional))
    };

    let torus = torus_braid(m as usize, n);
    let torus_term = if m == 1 || n.abs() <= 1 {
        0
    } else {
        tristram_levine(&seifert_matrix(&torus)?, theta)?.value
    };

    Ok(LitherlandReport {
        cable_side,
        companion_term,
        torus_term,
        holds: cable_side == companion_term + torus_term,
        theta,
        companion_theta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{connected_sum, BraidWord};

    fn braid(text: &str, strands: usize) -> BraidWord {
        BraidWord::parse(text, strands).unwrap()
    }

    fn theta(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn trefoil_seifert_route() {
        let s = seifert_matrix(&braid("1 1 1", 2)).unwrap();
        let delta = alexander_from_seifert(&s).unwrap();
        assert!(delta.equal_up_to_units(&LaurentPoly::from_coeffs(-1, vec![1, -1, 1])));
        // Symplectic check: det(V - V^T) = ±1 for a knot.
        let r = s.rank();
        let skew: Vec<Vec<BigInt>> = (0..r)
            .map(|i| (0..r).map(|j| BigInt::from(s.matrix[i][j] - s.matrix[j][i])).collect())
            .collect();
        assert_eq!(linalg::det_bigint(skew).abs(), BigInt::from(1));
    }

    #[test]
    fn unknot_alexander_is_one() {
        let s = seifert_matrix(&braid("1", 2)).unwrap();
        assert_eq!(alexander_from_seifert(&s).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn figure_eight_seifert_route() {
        let s = seifert_matrix(&braid("1 -2 1 -2", 3)).unwrap();
        let delta = alexander_from_seifert(&s).unwrap();
        assert_eq!(delta, LaurentPoly::from_coeffs(-1, vec![1, -3, 1]));
    }

    #[test]
    fn dual_routes_agree_on_small_corpus() {
        let words: Vec<BraidWord> = vec![
            braid("1 1 1", 2),
            braid("1 1 1 1 1", 2),
            braid("1 -2 1 -2", 3),
            braid("2 1 2 1", 3),
            braid("1 1 1 2 -1 2", 3),
            torus_braid(3, 4),
            torus_braid(3, 5),
            torus_braid(4, 5),
            braid("1 1 -2 1 -2 3 2 3", 4),
        ];
        for b in words {
            if !b.closure_summary().is_knot() {
                continue;
            }
            let from_v = alexander_from_seifert(&seifert_matrix(&b).unwrap()).unwrap();
            let from_burau = alexander_burau(&b).unwrap();
            assert!(
                from_v.equal_up_to_units(&from_burau),
                "braid {b}: {from_v} vs {from_burau}"
            );
        }
    }

    #[test]
    fn torus_alexander_closed_form_values() {
        assert!(torus_alexander(2, 3)
            .unwrap()
            .equal_up_to_units(&LaurentPoly::from_coeffs(0, vec![1, -1, 1])));
        assert_eq!(torus_alexander(1, 7).unwrap(), LaurentPoly::one());
        assert!(torus_alexander(2, 5)
            .unwrap()
            .equal_up_to_units(&LaurentPoly::from_coeffs(0, vec![1, -1, 1, -1, 1])));
        assert!(torus_alexander(2, 4).is_err());
    }

    #[test]
    fn cable_alexander_formula_end_to_end() {
        // Flagship oracle: the braid construction must satisfy the
        // classical product formula.
        let trefoil = braid("1 1 1", 2);
        let delta_trefoil = alexander_burau(&trefoil).unwrap();
        let cable = cable_braid(&trefoil, 2, 7).unwrap();
        let direct = alexander_from_seifert(&seifert_matrix(&cable).unwrap()).unwrap();
        let formula = cable_alexander(&delta_trefoil, 2, 7).unwrap();
        assert!(direct.equal_up_to_units(&formula), "{direct} vs {formula}");
        assert!(cable_alexander(&delta_trefoil, 2, 6).is_err());
        // Unknot companion reduces to the torus polynomial.
        let u = cable_alexander(&LaurentPoly::one(), 3, 4).unwrap();
        assert!(u.equal_up_to_units(&torus_alexander(3, 4).unwrap()));
    }

    #[test]
    fn signature_values() {
        assert_eq!(signature(&seifert_matrix(&braid("1 1 1", 2)).unwrap()).unwrap(), -2);
        assert_eq!(signature(&seifert_matrix(&braid("-1 -1 -1", 2)).unwrap()).unwrap(), 2);
        assert_eq!(signature(&seifert_matrix(&braid("1", 2)).unwrap()).unwrap(), 0);
        assert_eq!(signature(&seifert_matrix(&braid("1 -2 1 -2", 3)).unwrap()).unwrap(), 0);
        // Anchors for the convention on more strands.
        assert_eq!(signature(&seifert_matrix(&torus_braid(2, 5)).unwrap()).unwrap(), -4);
        assert_eq!(signature(&seifert_matrix(&torus_braid(2, 7)).unwrap()).unwrap(), -6);
        assert_eq!(signature(&seifert_matrix(&torus_braid(3, 4)).unwrap()).unwrap(), -6);
        assert_eq!(signature(&seifert_matrix(&torus_braid(3, 5)).unwrap()).unwrap(), -8);
    }

    #[test]
    fn signature_negates_under_mirror() {
        for b in [braid("1 1 1", 2), torus_braid(3, 4), braid("1 1 -2 1 -2 3 2 3", 4)] {
            if !b.closure_summary().is_knot() {
                continue;
            }
            let s = signature(&seifert_matrix(&b).unwrap()).unwrap();
            let sm = signature(&seifert_matrix(&b.mirror()).unwrap()).unwrap();
            assert_eq!(s, -sm, "braid {b}");
        }
    }

    #[test]
    fn signature_is_additive_under_connected_sum() {
        let trefoil = braid("1 1 1", 2);
        let sum = connected_sum(&trefoil, &trefoil).unwrap();
        assert_eq!(signature(&seifert_matrix(&sum).unwrap()).unwrap(), -4);
        let zero_sum = connected_sum(&trefoil, &trefoil.mirror()).unwrap();
        assert_eq!(signature(&seifert_matrix(&zero_sum).unwrap()).unwrap(), 0);
    }

    #[test]
    fn tristram_levine_at_one_half_is_signature() {
        for b in [braid("1 1 1", 2), braid("1 -2 1 -2", 3), torus_braid(3, 4)] {
            let s = seifert_matrix(&b).unwrap();
            let tl = tristram_levine(&s, theta(1, 2)).unwrap();
            assert_eq!(tl.value, signature(&s).unwrap(), "braid {b}");
            assert!(tl.certified_exact);
        }
    }

    #[test]
    fn tristram_levine_before_first_root_vanishes() {
        // Trefoil roots sit at theta = 1/6; before it the form is balanced.
        let s = seifert_matrix(&braid("1 1 1", 2)).unwrap();
        assert_eq!(tristram_levine(&s, theta(1, 12)).unwrap().value, 0);
        // Just past the root the signature has jumped to -2.
        assert_eq!(tristram_levine(&s, theta(1, 4)).unwrap().value, -2);
    }

    #[test]
    fn tristram_levine_jump_points_error() {
        let s = seifert_matrix(&braid("1 1 1", 2)).unwrap();
        assert!(matches!(
            tristram_levine(&s, theta(1, 6)),
            Err(InvariantError::JumpPoint { .. })
        ));
        assert!(matches!(
            tristram_levine(&s, theta(3, 2)),
            Err(InvariantError::BadTheta { .. })
        ));
    }

    #[test]
    fn tristram_levine_unknot() {
        let s = seifert_matrix(&braid("1", 2)).unwrap();
        for th in [theta(1, 2), theta(3, 10), theta(1, 7)] {
            assert_eq!(tristram_levine(&s, th).unwrap().value, 0);
        }
    }

    #[test]
    fn tristram_levine_certified_path_matches_exact() {
        // theta = 30/61 has a prime denominator past the exact limit;
        // the trefoil only jumps at 1/6 and 5/6, so the value matches the
        // exact one at 1/2.
        let s = seifert_matrix(&braid("1 1 1", 2)).unwrap();
        let exact = tristram_levine(&s, theta(1, 2)).unwrap();
        let certified = tristram_levine(&s, theta(30, 61)).unwrap();
        assert_eq!(certified.value, exact.value);
        assert!(!certified.certified_exact);
    }

    #[test]
    fn tristram_levine_respects_mirror() {
        let b = torus_braid(3, 4);
        for th in [theta(1, 3), theta(3, 10), theta(1, 2)] {
            let v = tristram_levine(&seifert_matrix(&b).unwrap(), th).unwrap().value;
            let vm = tristram_levine(&seifert_matrix(&b.mirror()).unwrap(), th).unwrap().value;
            assert_eq!(v, -vm, "theta = {th}");
        }
    }

    #[test]
    fn litherland_on_trefoil_cable() {
        // m*theta integral: companion term drops out and the cable takes
        // the torus value sigma(T(2,7)) = -6.
        let report = check_litherland(&braid("1 1 1", 2), 2, 7, theta(1, 2)).unwrap();
        assert!(report.holds);
        assert_eq!(report.cable_side, -6);
        assert_eq!(report.companion_term, 0);
        assert!(report.companion_theta.is_none());
        assert_eq!(report.torus_term, -6);
    }

    #[test]
    fn litherland_on_unknot_companion() {
        let report = check_litherland(&BraidWord::empty(1), 3, 4, theta(1, 3)).unwrap();
        assert!(report.holds);
        assert_eq!(report.companion_term + report.torus_term, report.cable_side);
    }

    #[test]
    fn litherland_mirror_case() {
        let pos = check_litherland(&braid("1 1 1", 2), 2, 7, theta(1, 2)).unwrap();
        let neg = check_litherland(&braid("-1 -1 -1", 2), 2, -7, theta(1, 2)).unwrap();
        assert!(neg.holds);
        assert_eq!(neg.cable_side, -pos.cable_side);
    }

    #[test]
    fn positive_braid_genus_matches_alexander_span() {
        for b in [braid("1 1 1", 2), torus_braid(3, 4), torus_braid(2, 7), torus_braid(4, 5)] {
            let s = seifert_matrix(&b).unwrap();
            let delta = alexander_from_seifert(&s).unwrap();
            assert_eq!(s.genus as u64 * 2, delta.degree_span(), "braid {b}");
            assert_eq!(s.genus * 2, s.rank());
        }
    }

    #[test]
    fn alexander_symmetry_and_determinant() {
        for b in [braid("1 1 1", 2), braid("1 -2 1 -2", 3), torus_braid(3, 5)] {
            let delta = alexander_from_seifert(&seifert_matrix(&b).unwrap()).unwrap();
            assert!(delta.equal_up_to_units(&delta.invert_variable()), "braid {b}");
            let at_one: BigInt = delta.terms().map(|(_, c)| c.clone()).sum();
            assert_eq!(at_one.abs(), BigInt::from(1), "braid {b}");
        }
    }
}
