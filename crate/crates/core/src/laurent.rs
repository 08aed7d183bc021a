//! Exact integer Laurent polynomials in one variable.
//!
//! This is the coefficient substrate for Alexander polynomials. Values are
//! kept in a canonical normalized form (first and last stored coefficients
//! nonzero, explicit minimum degree) so that structural equality is
//! meaningful, while comparisons "up to units" (`±t^k`) are available for
//! quantities that are only defined up to a unit of the Laurent ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("non-exact division, remainder {remainder}")]
    NonExactDivision { remainder: Box<LaurentPoly> },
    #[error("cannot parse Laurent polynomial term `{token}`: {reason}")]
    Parse { token: String, reason: String },
}

/// An integer Laurent polynomial `sum coeffs[i] * t^(min_degree + i)`.
///
/// Invariant: `coeffs` is empty exactly for the zero polynomial, and
/// otherwise has nonzero first and last entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    min_degree: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { min_degree: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::term(BigInt::one(), 0)
    }

    /// The monomial `c * t^k` (zero if `c` is zero).
    pub fn term(c: impl Into<BigInt>, k: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { min_degree: k, coeffs: vec![c] }
        }
    }

    /// Builds from a coefficient run starting at `min_degree`, normalizing.
    pub fn from_coeffs(min_degree: i64, coeffs: Vec<impl Into<BigInt>>) -> Self {
        let coeffs = coeffs.into_iter().map(Into::into).collect();
        Self::normalized(min_degree, coeffs)
    }

    fn normalized(min_degree: i64, mut coeffs: Vec<BigInt>) -> Self {
        let leading_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading_zeros == coeffs.len() {
            return LaurentPoly::zero();
        }
        coeffs.drain(..leading_zeros);
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        LaurentPoly { min_degree: min_degree + leading_zeros as i64, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.coeffs.len() as i64 - 1
    }

    /// Difference between the highest and lowest exponent, 0 for zero.
    pub fn degree_span(&self) -> u64 {
        if self.is_zero() { 0 } else { (self.coeffs.len() - 1) as u64 }
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        if self.is_zero() || k < self.min_degree || k > self.max_degree() {
            BigInt::zero()
        } else {
            self.coeffs[(k - self.min_degree) as usize].clone()
        }
    }

    /// Iterates `(exponent, coefficient)` over stored (possibly zero) slots.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let base = self.min_degree;
        self.coeffs.iter().enumerate().map(move |(i, c)| (base + i as i64, c))
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> num_rational::BigRational {
        use num_rational::BigRational;
        let mut acc = BigRational::zero();
        let xr = BigRational::from(x.clone());
        // Horner over the stored run, then shift by t^min_degree.
        for c in self.coeffs.iter().rev() {
            acc = acc * &xr + BigRational::from(c.clone());
        }
        let shift = if self.min_degree >= 0 {
            BigRational::from(x.pow(self.min_degree as u32))
        } else {
            BigRational::from(BigInt::one()) / BigRational::from(x.pow((-self.min_degree) as u32))
        };
        acc * shift
    }

    /// `p(t^m)`: every exponent multiplied by `m >= 1`.
    pub fn substitute_power(&self, m: u32) -> LaurentPoly {
        assert!(m >= 1, "substitute_power requires m >= 1");
        if self.is_zero() || m == 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * m as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m as usize] = c.clone();
        }
        LaurentPoly { min_degree: self.min_degree * m as i64, coeffs }
    }

    /// Multiplies by the unit `sign * t^k`.
    pub fn mul_unit(&self, negate: bool, k: i64) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let coeffs = if negate {
            self.coeffs.iter().map(|c| -c).collect()
        } else {
            self.coeffs.clone()
        };
        LaurentPoly { min_degree: self.min_degree + k, coeffs }
    }

    /// True iff `self = ±t^k * other` for some integer `k`.
    pub fn equal_up_to_units(&self, other: &LaurentPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.coeffs.len() != other.coeffs.len() {
            return false;
        }
        self.coeffs == other.coeffs
            || self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| *a == -b)
    }

    /// Mirror substitution `t -> t^-1`.
    pub fn invert_variable(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let coeffs: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        LaurentPoly { min_degree: -self.max_degree(), coeffs }
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    ///
    /// Errors with the remainder if the division is not exact.
    pub fn exact_division(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Work with the plain polynomial parts; reattach the degree shift at the end.
        let mut rem = self.coeffs.clone();
        let div = &divisor.coeffs;
        let dlead = div.last().expect("nonzero divisor");
        if rem.len() < div.len() {
            return Err(LaurentError::NonExactDivision { remainder: Box::new(self.clone()) });
        }
        let qlen = rem.len() - div.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for qi in (0..qlen).rev() {
            let lead = rem[qi + div.len() - 1].clone();
            if lead.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&lead, dlead);
            if !r.is_zero() {
                let remainder = LaurentPoly::normalized(self.min_degree, rem);
                return Err(LaurentError::NonExactDivision { remainder: Box::new(remainder) });
            }
            for (j, d) in div.iter().enumerate() {
                let sub = d * &q;
                rem[qi + j] -= sub;
            }
            quot[qi] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            let remainder = LaurentPoly::normalized(self.min_degree, rem);
            return Err(LaurentError::NonExactDivision { remainder: Box::new(remainder) });
        }
        Ok(LaurentPoly::normalized(self.min_degree - divisor.min_degree, quot))
    }

    /// Parses the sparse text form produced by `Display`.
    ///
    /// Terms look like `c*t^k`, `t^k`, `-t^k` or a bare integer, joined by
    /// `+` / `-`; `0` is the zero polynomial.
    pub fn parse(text: &str) -> Result<LaurentPoly, LaurentError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(LaurentError::Parse { token: String::new(), reason: "empty input".into() });
        }
        if text == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut acc = LaurentPoly::zero();
        // Split into signed terms on top-level +/- separators.
        let normalized = text.replace(" - ", " + -");
        for raw in normalized.split(" + ") {
            let term = raw.trim();
            if term.is_empty() {
                continue;
            }
            acc = &acc + &Self::parse_term(term)?;
        }
        Ok(acc)
    }

    fn parse_term(term: &str) -> Result<LaurentPoly, LaurentError> {
        let err = |reason: &str| LaurentError::Parse { token: term.to_string(), reason: reason.into() };
        let (coeff_text, exp_text) = match term.find('t') {
            None => (term, None),
            Some(pos) => {
                let c = term[..pos].trim_end_matches('*').trim();
                let rest = &term[pos + 1..];
                let e = match rest.strip_prefix('^') {
                    Some(e) => e,
                    None if rest.is_empty() => "1",
                    None => return Err(err("malformed exponent")),
                };
                (c, Some(e))
            }
        };
        let coeff: BigInt = match coeff_text {
            "" | "+" => BigInt::one(),
            "-" => -BigInt::one(),
            c => c.parse().map_err(|_| err("bad coefficient"))?,
        };
        let exp: i64 = match exp_text {
            None => 0,
            Some(e) => e.parse().map_err(|_| err("bad exponent"))?,
        };
        Ok(LaurentPoly::term(coeff, exp))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (mag.is_one(), k) {
                (true, 0) => write!(f, "1")?,
                (false, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "t")?,
                (false, 1) => write!(f, "{mag}*t")?,
                (true, _) => write!(f, "t^{k}")?,
                (false, _) => write!(f, "{mag}*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_degree.min(rhs.min_degree);
        let hi = self.max_degree().max(rhs.max_degree());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.terms() {
            coeffs[(k - lo) as usize] += c;
        }
        for (k, c) in rhs.terms() {
            coeffs[(k - lo) as usize] += c;
        }
        LaurentPoly::normalized(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_degree: self.min_degree,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::normalized(self.min_degree + rhs.min_degree, coeffs)
    }
}
