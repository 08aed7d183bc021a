//! Exact arithmetic in the cyclotomic field `Q(w)` where `w` is the
//! primitive `b`-th root of unity `exp(2 pi i a / b)`, `gcd(a, b) = 1`.
//!
//! Elements are rational polynomials in `w` reduced modulo the `b`-th
//! cyclotomic polynomial, so the zero test is exact. Complex conjugation
//! is the substitution `w -> w^(b-1)`. Signs of real elements at the
//! chosen embedding are certified with rational interval enclosures of
//! `cos(2 pi k a / b)`, refined until zero is excluded; the exact zero
//! test guarantees termination for nonzero elements.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::interval::{cos_sin_two_pi, RatInterval};
use super::InvariantError;

/// Cyclotomic polynomials by the recursive quotient
/// `Phi_b = (x^b - 1) / prod_{d | b, d < b} Phi_d`, monic integer
/// coefficients, returned dense from degree 0 up.
pub fn cyclotomic_polynomial(b: u32) -> Vec<BigInt> {
    assert!(b >= 1);
    let mut table: Vec<Vec<BigInt>> = Vec::with_capacity(b as usize);
    for n in 1..=b {
        // x^n - 1
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = -BigInt::one();
        num[n as usize] = BigInt::one();
        for d in 1..n {
            if n % d == 0 {
                num = poly_div_exact(&num, &table[(d - 1) as usize]);
            }
        }
        table.push(num);
    }
    table.pop().expect("b >= 1")
}

/// Exact division of dense integer polynomials (monic divisor).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one(), "cyclotomic divisors are monic");
    let qlen = rem.len() - dd;
    let mut quot = vec![BigInt::zero(); qlen];
    for qi in (0..qlen).rev() {
        let c = rem[qi + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[qi] = c.clone();
        for (j, d) in den.iter().enumerate() {
            let sub = d * &c;
            rem[qi + j] -= sub;
        }
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division must be exact");
    quot
}

/// The field `Q(w)`, `w = exp(2 pi i a / b)`.
#[derive(Debug, Clone)]
pub struct CyclotomicField {
    a: u32,
    b: u32,
    /// Minimal polynomial of `w`, monic of degree `phi(b)`.
    modulus: Vec<BigRational>,
    degree: usize,
}

/// An element as a rational polynomial in `w` of degree < `phi(b)`.
pub type CycElem = Vec<BigRational>;

impl CyclotomicField {
    pub fn new(a: u32, b: u32) -> Self {
        assert!(b >= 1 && a < b.max(1) || b == 1);
        assert_eq!(num_integer::Integer::gcd(&(a as i64), &(b as i64)), 1, "a/b must be reduced");
        let modulus: Vec<BigRational> = cyclotomic_polynomial(b)
            .into_iter()
            .map(BigRational::from)
            .collect();
        let degree = modulus.len() - 1;
        CyclotomicField { a, b, modulus, degree }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn zero(&self) -> CycElem {
        vec![BigRational::zero(); self.degree]
    }

    pub fn one(&self) -> CycElem {
        let mut e = self.zero();
        if self.degree > 0 {
            e[0] = BigRational::one();
        }
        e
    }

    pub fn from_rational(&self, r: BigRational) -> CycElem {
        let mut e = self.zero();
        if self.degree > 0 {
            e[0] = r;
        }
        e
    }

    pub fn from_int(&self, v: i64) -> CycElem {
        self.from_rational(BigRational::from(BigInt::from(v)))
    }

    /// `w^k` for any integer `k` (exponent taken mod `b`).
    pub fn root_power(&self, k: i64) -> CycElem {
        let b = self.b as i64;
        let k = k.rem_euclid(b) as usize;
        let mut dense = vec![BigRational::zero(); k + 1];
        dense[k] = BigRational::one();
        self.reduce(dense)
    }

    pub fn is_zero(&self, e: &CycElem) -> bool {
        e.iter().all(Zero::is_zero)
    }

    pub fn add(&self, x: &CycElem, y: &CycElem) -> CycElem {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }

    pub fn sub(&self, x: &CycElem, y: &CycElem) -> CycElem {
        x.iter().zip(y).map(|(a, b)| a - b).collect()
    }

    pub fn neg(&self, x: &CycElem) -> CycElem {
        x.iter().map(|a| -a).collect()
    }

    pub fn mul(&self, x: &CycElem, y: &CycElem) -> CycElem {
        if self.degree == 0 {
            return Vec::new();
        }
        let mut prod = vec![BigRational::zero(); 2 * self.degree];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.reduce(prod)
    }

    /// Reduces a dense polynomial modulo the minimal polynomial.
    fn reduce(&self, mut dense: Vec<BigRational>) -> CycElem {
        let d = self.degree;
        if d == 0 {
            return Vec::new();
        }
        for i in (d..dense.len()).rev() {
            let c = std::mem::replace(&mut dense[i], BigRational::zero());
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                let sub = &self.modulus[j] * &c;
                dense[i - d + j] -= sub;
            }
        }
        dense.truncate(d);
        dense.resize(d, BigRational::zero());
        dense
    }

    /// Complex conjugation: `w -> w^(b-1)`.
    pub fn conj(&self, x: &CycElem) -> CycElem {
        if self.b <= 2 {
            return x.clone();
        }
        let mut dense = vec![BigRational::zero(); self.b as usize];
        for (j, c) in x.iter().enumerate() {
            if !c.is_zero() {
                let e = (j * (self.b as usize - 1)) % self.b as usize;
                dense[e] += c;
            }
        }
        self.reduce(dense)
    }

    pub fn is_real(&self, x: &CycElem) -> bool {
        self.conj(x) == *x
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// `Q[x]` against the (irreducible) minimal polynomial.
    pub fn inv(&self, x: &CycElem) -> Option<CycElem> {
        if self.is_zero(x) {
            return None;
        }
        if self.degree == 0 {
            return None;
        }
        // Extended gcd of x (degree < d) and the modulus.
        let mut r0: Vec<BigRational> = self.modulus.clone();
        let mut r1: Vec<BigRational> = trim(x.clone());
        let mut s0: Vec<BigRational> = vec![];
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is a nonzero constant: gcd(x, Phi) with Phi irreducible.
        debug_assert_eq!(r0.len(), 1, "minimal polynomial must be irreducible");
        let c = r0[0].clone();
        let inv: Vec<BigRational> = s0.iter().map(|v| v / &c).collect();
        let mut e = self.reduce(inv);
        e.resize(self.degree, BigRational::zero());
        Some(e)
    }

    pub fn div(&self, x: &CycElem, y: &CycElem) -> Option<CycElem> {
        Some(self.mul(x, &self.inv(y)?))
    }

    /// Certified interval enclosure of the real part of the element under
    /// the embedding `w -> exp(2 pi i a / b)`.
    pub fn real_part_interval(&self, x: &CycElem, terms: usize) -> RatInterval {
        let mut acc = RatInterval::zero();
        for (k, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = BigRational::new(
                BigInt::from(k as i64 * self.a as i64),
                BigInt::from(self.b.max(1) as i64),
            );
            let (cos, _) = cos_sin_two_pi(&q, terms);
            acc = acc.add(&cos.scale(c));
        }
        acc
    }

    /// Exact sign of a real element: 0 for the zero element, otherwise
    /// refined interval evaluation (terminates because nonzero elements
    /// have nonzero value at a primitive root).
    pub fn sign_of_real(&self, x: &CycElem) -> Result<i32, InvariantError> {
        if self.is_zero(x) {
            return Ok(0);
        }
        debug_assert!(self.is_real(x), "sign is only defined for real elements");
        let mut terms = 24;
        loop {
            if let Some(s) = self.real_part_interval(x, terms).certified_sign() {
                return Ok(s);
            }
            terms *= 2;
            if terms > 3000 {
                return Err(InvariantError::CannotCertify {
                    what: "sign of a cyclotomic element".into(),
                });
            }
        }
    }

    /// Evaluates an integer Laurent polynomial at `w`.
    pub fn eval_laurent(&self, p: &crate::laurent::LaurentPoly) -> CycElem {
        let mut acc = self.zero();
        for (k, c) in p.terms() {
            if c.is_zero() {
                continue;
            }
            let term = self.root_power(k);
            let scaled: CycElem =
                term.iter().map(|v| v * BigRational::from(c.clone())).collect();
            acc = self.add(&acc, &scaled);
        }
        acc
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let den = den.to_vec();
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (vec![], trim(rem));
    }
    let lead = den[dd].clone();
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    for qi in (0..quot.len()).rev() {
        let c = &rem[qi + dd] / &lead;
        if c.is_zero() {
            continue;
        }
        quot[qi] = c.clone();
        for (j, d) in den.iter().enumerate() {
            let sub = d * &c;
            rem[qi + j] -= sub;
        }
    }
    (trim(quot), trim(rem))
}
