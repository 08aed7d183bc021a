//! Rational interval arithmetic with certified enclosures of pi and of
//! cosine/sine at rational multiples of 2*pi.
//!
//! All endpoints are exact rationals, so the only interval width comes
//! from explicit series truncation bounds: Machin's formula with the
//! alternating-series remainder for pi, and the cosine/sine Taylor series
//! at a halved argument followed by double-angle steps. Widths shrink as
//! the term count grows, which is what the sign-certification ladder in
//! the signature code relies on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A closed interval with exact rational endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn point(v: BigRational) -> Self {
        RatInterval { lo: v.clone(), hi: v }
    }

    pub fn from_int(v: i64) -> Self {
        Self::point(BigRational::from(BigInt::from(v)))
    }

    pub fn with_error(center: BigRational, err: BigRational) -> Self {
        debug_assert!(!err.is_negative());
        RatInterval { lo: &center - &err, hi: center + err }
    }

    pub fn zero() -> Self {
        Self::point(BigRational::zero())
    }

    pub fn add(&self, o: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, o: &RatInterval) -> RatInterval {
        let products = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if *p < lo {
                lo = p.clone();
            }
            if *p > hi {
                hi = p.clone();
            }
        }
        RatInterval { lo, hi }
    }

    pub fn scale(&self, c: &BigRational) -> RatInterval {
        if c.is_negative() {
            RatInterval { lo: &self.hi * c, hi: &self.lo * c }
        } else {
            RatInterval { lo: &self.lo * c, hi: &self.hi * c }
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// `Some(sign)` when zero is certifiably excluded.
    pub fn certified_sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from(BigInt::from(2))
    }
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `arctan(1/x)` for integer `x >= 2`, bracketed by the alternating
/// partial sums of the Leibniz series.
fn atan_inv(x: i64, terms: usize) -> RatInterval {
    let x2 = BigRational::from(BigInt::from(x * x));
    let mut term = ratio(1, x); // 1/x, then divided by x^2 each step
    let mut sum = BigRational::zero();
    let mut last_term_mag = term.clone();
    for k in 0..terms {
        let contrib = &term / BigRational::from(BigInt::from(2 * k as i64 + 1));
        if k % 2 == 0 {
            sum += &contrib;
        } else {
            sum -= &contrib;
        }
        term /= &x2;
        last_term_mag = &term / BigRational::from(BigInt::from(2 * k as i64 + 3));
    }
    // Alternating series with decreasing terms: the remainder is bounded
    // by the first omitted term.
    RatInterval::with_error(sum, last_term_mag)
}

/// Certified enclosure of pi via Machin's formula.
pub fn pi_interval(terms: usize) -> RatInterval {
    let a = atan_inv(5, terms).scale(&BigRational::from(BigInt::from(16)));
    let b = atan_inv(239, terms).scale(&BigRational::from(BigInt::from(4)));
    a.sub(&b)
}

/// Taylor enclosures of `cos` and `sin` at an exact rational point with
/// `|x| <= 1/2`, remainder bounded by the first omitted term.
fn cos_sin_small(x: &BigRational, terms: usize) -> (RatInterval, RatInterval) {
    debug_assert!(x.abs() <= ratio(1, 2));
    let x2 = x * x;
    // cos: sum (-1)^k x^(2k) / (2k)!
    let mut cos_sum = BigRational::zero();
    let mut term = BigRational::one();
    let mut k = 0usize;
    while k < terms {
        if k % 2 == 0 {
            cos_sum += &term;
        } else {
            cos_sum -= &term;
        }
        let denom = BigRational::from(BigInt::from(((2 * k + 1) * (2 * k + 2)) as i64));
        term = &term * &x2 / denom;
        k += 1;
    }
    let cos = RatInterval::with_error(cos_sum, term.abs());
    // sin: sum (-1)^k x^(2k+1) / (2k+1)!
    let mut sin_sum = BigRational::zero();
    let mut term = x.clone();
    let mut k = 0usize;
    while k < terms {
        if k % 2 == 0 {
            sin_sum += &term;
        } else {
            sin_sum -= &term;
        }
        let denom = BigRational::from(BigInt::from(((2 * k + 2) * (2 * k + 3)) as i64));
        term = &term * &x2 / denom;
        k += 1;
    }
    let sin = RatInterval::with_error(sin_sum, term.abs());
    (cos, sin)
}

/// Certified `(cos, sin)` of the angle `2 * pi * q` for exact rational
/// `q`. Precision grows with `terms`.
pub fn cos_sin_two_pi(q: &BigRational, terms: usize) -> (RatInterval, RatInterval) {
    // Reduce q modulo 1 so the angle magnitude stays below 2 pi.
    let q = q - q.floor();
    let pi = pi_interval(terms);
    let angle = pi.scale(&(&q * BigRational::from(BigInt::from(2))));
    // Halve the rational center until it is small enough for the series,
    // then rebuild with exact double-angle steps in interval arithmetic.
    let mut center = angle.mid();
    let radius = angle.width() / BigRational::from(BigInt::from(2));
    let half = ratio(1, 2);
    let mut doublings = 0usize;
    while center.abs() > half {
        center /= BigRational::from(BigInt::from(2));
        doublings += 1;
    }
    let (mut cos, mut sin) = cos_sin_small(&center, terms);
    for _ in 0..doublings {
        // cos(2x) = 2 cos^2 x - 1, sin(2x) = 2 sin x cos x
        let two = BigRational::from(BigInt::from(2));
        let new_cos = cos.mul(&cos).scale(&two).sub(&RatInterval::from_int(1));
        let new_sin = sin.mul(&cos).scale(&two);
        cos = new_cos;
        sin = new_sin;
    }
    // The argument is only known to within `radius`; cos and sin are
    // 1-Lipschitz.
    (
        RatInterval { lo: &cos.lo - &radius, hi: &cos.hi + &radius },
        RatInterval { lo: &sin.lo - &radius, hi: &sin.hi + &radius },
    )
}
