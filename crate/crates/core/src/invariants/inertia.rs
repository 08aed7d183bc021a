//! Inertia of Hermitian forms by congruence reduction.
//!
//! Two paths share the same pivoting scheme. The exact path works over a
//! cyclotomic field where the zero test is exact, so every pivot sign is
//! certain and zero eigenvalue counts are meaningful. The certified path
//! works over complex intervals with exact rational endpoints: it applies
//! when the angle denominator is too large for comfortable field
//! arithmetic, requires the form to be nondegenerate, and fails loudly
//! whenever a needed sign cannot be certified at the working precision.

use num_rational::BigRational;

use super::cyclotomic::{CycElem, CyclotomicField};
use super::interval::RatInterval;
use super::InvariantError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }
}

/// Inertia of a Hermitian matrix over the given cyclotomic field.
///
/// `h[i][j]` must satisfy `h[j][i] = conj(h[i][j])` with real diagonal;
/// the reduction preserves this. Pivots with zero diagonal are handled by
/// mixing in a root-of-unity multiple of another basis vector, which
/// always produces a nonzero real diagonal entry for a nonzero form.
pub fn hermitian_inertia(
    f: &CyclotomicField,
    mut h: Vec<Vec<CycElem>>,
) -> Result<Inertia, InvariantError> {
    let n = h.len();
    debug_assert!(h.iter().all(|r| r.len() == n));
    let mut active: Vec<usize> = (0..n).collect();
    let mut inertia = Inertia { positive: 0, negative: 0, zero: 0 };

    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !f.is_zero(&h[i][i])) {
            let i = active.remove(pos);
            let pivot = h[i][i].clone();
            match f.sign_of_real(&pivot)? {
                1 => inertia.positive += 1,
                -1 => inertia.negative += 1,
                _ => unreachable!("pivot is nonzero"),
            }
            let pivot_inv = f.inv(&pivot).expect("nonzero pivot");
            for &j in &active {
                if f.is_zero(&h[j][i]) {
                    continue;
                }
                for &k in &active {
                    let t = f.mul(&h[j][i], &h[i][k]);
                    let t = f.mul(&t, &pivot_inv);
                    h[j][k] = f.sub(&h[j][k], &t);
                }
            }
            continue;
        }

        // Zero diagonal on the whole active block: find any coupling.
        let mut coupling = None;
        'search: for (pi, &i) in active.iter().enumerate() {
            for &j in &active[pi + 1..] {
                if !f.is_zero(&h[i][j]) {
                    coupling = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((i, j)) = coupling else {
            inertia.zero += active.len();
            break;
        };
        // Find a unit u with Re(u * h[i][j]) nonzero; u = 1 or u = w works
        // for every nonzero entry.
        let h_ij = h[i][j].clone();
        let unit = (0..2)
            .map(|k| f.root_power(k))
            .find(|u| {
                let t = f.mul(u, &h_ij);
                !f.is_zero(&f.add(&t, &f.conj(&t)))
            })
            .expect("a root of unity exposes a real part");
        // Congruence v_i <- v_i + u v_j: row then column update.
        let u_conj = f.conj(&unit);
        for &k in &active {
            let add = f.mul(&u_conj, &h[j][k]);
            h[i][k] = f.add(&h[i][k], &add);
        }
        for &r in &active {
            let add = f.mul(&h[r][j], &unit);
            h[r][i] = f.add(&h[r][i], &add);
        }
    }
    Ok(inertia)
}

/// A complex interval with exact rational endpoints.
#[derive(Debug, Clone)]
pub struct CInterval {
    pub re: RatInterval,
    pub im: RatInterval,
}

impl CInterval {
    pub fn zero() -> Self {
        CInterval { re: RatInterval::zero(), im: RatInterval::zero() }
    }

    pub fn real(re: RatInterval) -> Self {
        CInterval { re, im: RatInterval::zero() }
    }

    pub fn add(&self, o: &CInterval) -> CInterval {
        CInterval { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &CInterval) -> CInterval {
        CInterval { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn mul(&self, o: &CInterval) -> CInterval {
        CInterval {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn conj(&self) -> CInterval {
        CInterval { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn scale(&self, c: &BigRational) -> CInterval {
        CInterval { re: self.re.scale(c), im: self.im.scale(c) }
    }

    /// Division by a real interval that certifiably excludes zero.
    fn div_real(&self, p: &RatInterval) -> Option<CInterval> {
        p.certified_sign()?;
        let recip = RatInterval {
            lo: p.hi.recip(),
            hi: p.lo.recip(),
        };
        // Reciprocal of a negative interval also swaps endpoints, which
        // the constructor above already does.
        let recip = if recip.lo <= recip.hi {
            recip
        } else {
            RatInterval { lo: recip.hi.clone(), hi: recip.lo.clone() }
        };
        Some(CInterval { re: self.re.mul(&recip), im: self.im.mul(&recip) })
    }

    /// Certified nonzero test (either part excludes zero).
    fn certified_nonzero(&self) -> bool {
        self.re.certified_sign().is_some() || self.im.certified_sign().is_some()
    }
}

/// Inertia of a nondegenerate Hermitian interval matrix.
///
/// Every pivot must be certifiable at the supplied precision; the matrix
/// is assumed to enclose an exactly Hermitian form (real diagonal), so
/// pivot signs are read from the real-part intervals.
pub fn hermitian_inertia_certified(h: &[Vec<CInterval>]) -> Result<Inertia, InvariantError> {
    let n = h.len();
    let mut h: Vec<Vec<CInterval>> = h.to_vec();
    let mut active: Vec<usize> = (0..n).collect();
    let mut inertia = Inertia { positive: 0, negative: 0, zero: 0 };
    while !active.is_empty() {
        // A certified-nonzero diagonal pivot, if any.
        let diag = active
            .iter()
            .position(|&i| h[i][i].re.certified_sign().is_some());
        if let Some(pos) = diag {
            let i = active.remove(pos);
            let pivot = h[i][i].re.clone();
            match pivot.certified_sign().expect("checked above") {
                1 => inertia.positive += 1,
                -1 => inertia.negative += 1,
                _ => unreachable!(),
            }
            for &j in &active {
                for &k in &active {
                    let t = h[j][i].mul(&h[i][k]);
                    let t = t.div_real(&pivot).expect("pivot excludes zero");
                    h[j][k] = h[j][k].sub(&t);
                }
            }
            continue;
        }
        // No certifiable diagonal: mix in another vector through a
        // certified coupling, exposing 2 Re(h[i][j]) on the diagonal.
        let mut coupling = None;
        'search: for (pi, &i) in active.iter().enumerate() {
            for &j in &active[pi + 1..] {
                if h[i][j].certified_nonzero() {
                    coupling = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((i, j)) = coupling else {
            return Err(InvariantError::CannotCertify {
                what: "a pivot of the Hermitian form".into(),
            });
        };
        // u = 1 or u = i; one of Re(h_ij), Im(h_ij) is certified nonzero.
        let uses_real = h[i][j].re.certified_sign().is_some();
        for &k in &active {
            let add = if uses_real {
                h[j][k].clone()
            } else {
                // conj(u) * h[j][k] with u = i: -i * (re + i im) = im - i re
                CInterval { re: h[j][k].im.clone(), im: h[j][k].re.neg() }
            };
            h[i][k] = h[i][k].add(&add);
        }
        for &r in &active {
            let add = if uses_real {
                h[r][j].clone()
            } else {
                // h[r][j] * i = -im + i re
                CInterval { re: h[r][j].im.neg(), im: h[r][j].re.clone() }
            };
            h[r][i] = h[r][i].add(&add);
        }
        // If the exposed diagonal still cannot be certified, give up
        // rather than loop; the caller escalates precision.
        if h[i][i].re.certified_sign().is_none() {
            return Err(InvariantError::CannotCertify {
                what: "a mixed pivot of the Hermitian form".into(),
            });
        }
    }
    Ok(inertia)
}

/// Inertia of a symmetric integer matrix, through the trivial field.
pub fn symmetric_inertia(m: &[Vec<i64>]) -> Result<Inertia, InvariantError> {
    let f = CyclotomicField::new(0, 1);
    let h: Vec<Vec<CycElem>> =
        m.iter().map(|row| row.iter().map(|&v| f.from_int(v)).collect()).collect();
    hermitian_inertia(&f, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_definite_and_indefinite() {
        let id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(
            symmetric_inertia(&id).unwrap(),
            Inertia { positive: 2, negative: 0, zero: 0 }
        );
        let neg = vec![vec![-2, 1], vec![1, -2]];
        assert_eq!(
            symmetric_inertia(&neg).unwrap(),
            Inertia { positive: 0, negative: 2, zero: 0 }
        );
        let hyper = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(
            symmetric_inertia(&hyper).unwrap(),
            Inertia { positive: 1, negative: 1, zero: 0 }
        );
        let singular = vec![vec![1, 1], vec![1, 1]];
        assert_eq!(
            symmetric_inertia(&singular).unwrap(),
            Inertia { positive: 1, negative: 0, zero: 1 }
        );
        let zero = vec![vec![0, 0], vec![0, 0]];
        assert_eq!(
            symmetric_inertia(&zero).unwrap(),
            Inertia { positive: 0, negative: 0, zero: 2 }
        );
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(
            symmetric_inertia(&[]).unwrap(),
            Inertia { positive: 0, negative: 0, zero: 0 }
        );
    }

    #[test]
    fn hermitian_over_sixth_roots() {
        // H = [[0, w], [conj(w), 0]] has eigenvalues ±|w| = ±1.
        let f = CyclotomicField::new(1, 6);
        let w = f.root_power(1);
        let h = vec![
            vec![f.zero(), w.clone()],
            vec![f.conj(&w), f.zero()],
        ];
        let inertia = hermitian_inertia(&f, h).unwrap();
        assert_eq!(inertia, Inertia { positive: 1, negative: 1, zero: 0 });
    }

    #[test]
    fn certified_path_matches_exact_on_an_easy_case() {
        use super::super::interval::cos_sin_two_pi;
        use num_bigint::BigInt;
        // Same matrix as above, with w = exp(2 pi i / 6) as intervals.
        let q = BigRational::new(BigInt::from(1), BigInt::from(6));
        let (cos, sin) = cos_sin_two_pi(&q, 32);
        let w = CInterval { re: cos, im: sin };
        let h = vec![
            vec![CInterval::zero(), w.clone()],
            vec![w.conj(), CInterval::zero()],
        ];
        let inertia = hermitian_inertia_certified(&h).unwrap();
        assert_eq!(inertia, Inertia { positive: 1, negative: 1, zero: 0 });
    }

    #[test]
    fn certified_path_reports_uncertifiable_forms() {
        let z = CInterval::zero();
        let h = vec![vec![z.clone(), z.clone()], vec![z.clone(), z]];
        assert!(matches!(
            hermitian_inertia_certified(&h),
            Err(InvariantError::CannotCertify { .. })
        ));
    }
}
