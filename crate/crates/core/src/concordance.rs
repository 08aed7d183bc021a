//! The nu-calculus: exact half-integer arithmetic for concordance
//! invariants satisfying the three formal properties (homomorphism on the
//! concordance group, bounded by the 4-genus, `(m-1)(n-1)/2` on positive
//! torus knots), interval bounds for cables, the h and g correction
//! tables with their monotonicity checks, and obstruction verdicts.
//!
//! `nu` is abstract throughout: the same operations serve tau and s/2.
//! No floating point appears anywhere in this module.

mod table;

pub use table::{parse_knot_table, read_knot_table, TableError};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use thiserror::Error;

use crate::braid::BraidWord;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConcordanceError {
    #[error("{m} and {n} are not relatively prime")]
    NotCoprime { m: i64, n: i64 },
    #[error("cable bounds need m >= 2; use the degenerate m = 1 variant explicitly")]
    DegenerateCable,
    #[error("torus parameters must be positive, got ({m}, {n})")]
    NonPositiveTorus { m: i64, n: i64 },
    #[error("g({r}) = {value} is not an integer")]
    NonIntegralG { r: i64, value: HalfInt },
    #[error("table violates monotonicity at pair ({n}, {r}): h({n}) - h({r}) = {diff}")]
    MonotonicityViolated { n: i64, r: i64, diff: HalfInt },
    #[error("insufficient range: the table has not stabilized on the {side} side")]
    InsufficientRange { side: &'static str },
    #[error("knot record `{name}` violates {constraint}")]
    RecordInvariant { name: String, constraint: String },
}

/// An exact half-integer, stored doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };

    pub fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub fn from_int(v: i64) -> Self {
        HalfInt { doubled: 2 * v }
    }

    /// `numerator / 2` as an exact value.
    pub fn halves(numerator: i64) -> Self {
        HalfInt { doubled: numerator }
    }

    pub fn doubled(self) -> i64 {
        self.doubled
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    pub fn as_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.doubled / 2)
    }

    pub fn abs(self) -> HalfInt {
        HalfInt { doubled: self.doubled.abs() }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled + rhs.doubled }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled - rhs.doubled }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { doubled: -self.doubled }
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        HalfInt { doubled: self.doubled * rhs }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

/// A closed interval of half-integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NuInterval {
    lower: HalfInt,
    upper: HalfInt,
}

impl NuInterval {
    pub fn new(lower: HalfInt, upper: HalfInt) -> Self {
        assert!(lower <= upper, "interval endpoints out of order: [{lower}, {upper}]");
        NuInterval { lower, upper }
    }

    pub fn point(v: HalfInt) -> Self {
        NuInterval { lower: v, upper: v }
    }

    pub fn lower(&self) -> HalfInt {
        self.lower
    }

    pub fn upper(&self) -> HalfInt {
        self.upper
    }

    pub fn width(&self) -> HalfInt {
        self.upper - self.lower
    }

    pub fn contains(&self, v: HalfInt) -> bool {
        self.lower <= v && v <= self.upper
    }

    pub fn intersect(&self, other: &NuInterval) -> Option<NuInterval> {
        let lower = self.lower.max(other.lower);
        let upper = self.upper.min(other.upper);
        (lower <= upper).then(|| NuInterval { lower, upper })
    }
}

impl fmt::Display for NuInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lower, self.upper)
    }
}

/// Ingested knot data: a braid representative and whichever invariants are
/// known. `|tau| <= g4 <= g3` is enforced where the fields are present; a
/// `true` class membership requires `tau = g3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub braid: Option<BraidWord>,
    pub tau: Option<HalfInt>,
    /// Rasmussen s divided by two (the normalization that shares tau's
    /// formal properties).
    pub s_half: Option<HalfInt>,
    pub genus3: Option<u32>,
    pub genus4: Option<u32>,
    /// Whether tau equals the Seifert genus.
    pub in_p: Option<bool>,
}

impl KnotRecord {
    pub fn validate(&self) -> Result<(), ConcordanceError> {
        let violation = |constraint: &str| ConcordanceError::RecordInvariant {
            name: self.name.clone(),
            constraint: constraint.to_string(),
        };
        if let (Some(tau), Some(g4)) = (self.tau, self.genus4) {
            if tau.abs() > HalfInt::from_int(g4 as i64) {
                return Err(violation("|tau| <= g4"));
            }
        }
        if let (Some(g4), Some(g3)) = (self.genus4, self.genus3) {
            if g4 > g3 {
                return Err(violation("g4 <= g3"));
            }
        }
        if let (Some(true), Some(tau), Some(g3)) = (self.in_p, self.tau, self.genus3) {
            if tau != HalfInt::from_int(g3 as i64) {
                return Err(violation("class membership requires tau = g3"));
            }
        }
        Ok(())
    }

    /// `tau = g3`, when both are known.
    pub fn tau_equals_genus(&self) -> Option<bool> {
        match (self.tau, self.genus3) {
            (Some(tau), Some(g3)) => Some(tau == HalfInt::from_int(g3 as i64)),
            _ => None,
        }
    }
}

fn require_coprime(m: i64, n: i64) -> Result<(), ConcordanceError> {
    if m.gcd(&n) != 1 {
        return Err(ConcordanceError::NotCoprime { m, n });
    }
    Ok(())
}

/// `nu(T(m, n)) = (m-1)(n-1)/2` for positive coprime `m`, `n`.
pub fn torus_nu(m: u32, n: u32) -> Result<HalfInt, ConcordanceError> {
    if m < 1 || n < 1 {
        return Err(ConcordanceError::NonPositiveTorus { m: m as i64, n: n as i64 });
    }
    require_coprime(m as i64, n as i64)?;
    Ok(HalfInt::halves((m as i64 - 1) * (n as i64 - 1)))
}

/// `nu` on torus knots for any coprime twisting, negative included:
/// `nu(T(m, n)) = -nu(T(m, -n))` via the mirror, and 0 at `n = ±1`.
pub fn torus_nu_signed(m: u32, n: i64) -> Result<HalfInt, ConcordanceError> {
    require_coprime(m as i64, n)?;
    if n >= 0 {
        torus_nu(m, n as u32)
    } else {
        Ok(-torus_nu(m, (-n) as u32)?)
    }
}

/// Which equality clause of the cable bounds applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqualityClause {
    /// `tau = g`: the value sits on the lower endpoint.
    TauEqualsGenus,
    /// `tau = -g`: the value sits on the upper endpoint.
    TauEqualsMinusGenus,
}

/// A pinned cable value from one of the equality clauses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EqualityValue {
    pub value: HalfInt,
    pub clause: EqualityClause,
    /// Set when `tau = g = -g = 0` so both clauses formally apply; the
    /// lower clause is reported. Only the unknot companion lands here,
    /// outside the hypotheses of the bounds.
    pub ambiguous: bool,
}

/// Bounds on `nu` of the `(m, mr+1)`-cable:
/// `[m tau + mr(m-1)/2, m tau + mr(m-1)/2 + m-1]`.
pub fn cable_bounds_from_twists(
    tau: HalfInt,
    m: u32,
    r: i64,
) -> Result<NuInterval, ConcordanceError> {
    if m < 2 {
        return Err(ConcordanceError::DegenerateCable);
    }
    let m = m as i64;
    let lower = tau * m + HalfInt::halves(m * r * (m - 1));
    Ok(NuInterval::new(lower, lower + HalfInt::from_int(m - 1)))
}

/// Equality clauses for the `(m, mr+1)`-cable: the lower endpoint when
/// `tau = g`, the upper when `tau = -g`, absent otherwise.
pub fn cable_equality_from_twists(
    tau: HalfInt,
    g3: u32,
    m: u32,
    r: i64,
) -> Result<Option<EqualityValue>, ConcordanceError> {
    let bounds = cable_bounds_from_twists(tau, m, r)?;
    Ok(equality_from_bounds(tau, g3, bounds))
}

/// Bounds on `nu` of the general `(m, n)`-cable:
/// `[m tau + (m-1)(n-1)/2, m tau + (m-1)(n+1)/2]`, width exactly `m-1`.
pub fn cable_bounds(tau: HalfInt, m: u32, n: i64) -> Result<NuInterval, ConcordanceError> {
    require_coprime(m as i64, n)?;
    if m < 2 {
        return Err(ConcordanceError::DegenerateCable);
    }
    let m = m as i64;
    let lower = tau * m + HalfInt::halves((m - 1) * (n - 1));
    let upper = tau * m + HalfInt::halves((m - 1) * (n + 1));
    Ok(NuInterval::new(lower, upper))
}

/// The `m = 1` cable is the companion itself; every bound degenerates to
/// the single point `tau`. Kept separate so ordinary callers cannot reach
/// it by accident.
pub fn cable_bounds_degenerate(tau: HalfInt) -> NuInterval {
    NuInterval::point(tau)
}

/// Equality clauses for the general `(m, n)`-cable.
pub fn cable_equality(
    tau: HalfInt,
    g3: u32,
    m: u32,
    n: i64,
) -> Result<Option<EqualityValue>, ConcordanceError> {
    let bounds = cable_bounds(tau, m, n)?;
    Ok(equality_from_bounds(tau, g3, bounds))
}

fn equality_from_bounds(tau: HalfInt, g3: u32, bounds: NuInterval) -> Option<EqualityValue> {
    let g = HalfInt::from_int(g3 as i64);
    match (tau == g, tau == -g) {
        (true, true) => Some(EqualityValue {
            value: bounds.lower(),
            clause: EqualityClause::TauEqualsGenus,
            ambiguous: true,
        }),
        (true, false) => Some(EqualityValue {
            value: bounds.lower(),
            clause: EqualityClause::TauEqualsGenus,
            ambiguous: false,
        }),
        (false, true) => Some(EqualityValue {
            value: bounds.upper(),
            clause: EqualityClause::TauEqualsMinusGenus,
            ambiguous: false,
        }),
        (false, false) => None,
    }
}

/// `h(n) = nu(K_{m,n}) - (m-1) n / 2`, pointwise over a table of cable
/// values keyed by `n`. Every key must be coprime to `m`.
pub fn h_table(
    nu_values: &BTreeMap<i64, HalfInt>,
    m: u32,
) -> Result<BTreeMap<i64, HalfInt>, ConcordanceError> {
    let mut out = BTreeMap::new();
    for (&n, &nu) in nu_values {
        require_coprime(m as i64, n)?;
        out.insert(n, nu - HalfInt::halves((m as i64 - 1) * n));
    }
    Ok(out)
}

/// The h-table of the unknot companion: `(m-1)/2` for `n < 0` and
/// `-(m-1)/2` for `n > 0`, the extremal two-step shape.
pub fn unknot_h_value(m: u32, n: i64) -> HalfInt {
    if n < 0 {
        HalfInt::halves(m as i64 - 1)
    } else {
        HalfInt::halves(-(m as i64 - 1))
    }
}

/// Outcome of a monotonicity check over a correction table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonotoneVerdict {
    Holds,
    /// `value(n) - value(r)` escaped `[-(m-1), 0]` for this `n > r`.
    Violated { n: i64, r: i64, diff: HalfInt },
}

impl MonotoneVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, MonotoneVerdict::Holds)
    }
}

/// Checks `-(m-1) <= h(n) - h(r) <= 0` for every pair `n > r` of keys,
/// reporting the first violating pair in key order.
pub fn check_h_monotone(h: &BTreeMap<i64, HalfInt>, m: u32) -> MonotoneVerdict {
    let bound = HalfInt::from_int(-(m as i64 - 1));
    let entries: Vec<(i64, HalfInt)> = h.iter().map(|(&k, &v)| (k, v)).collect();
    for (i, &(r, hr)) in entries.iter().enumerate() {
        for &(n, hn) in &entries[i + 1..] {
            let diff = hn - hr;
            if diff > HalfInt::ZERO || diff < bound {
                return MonotoneVerdict::Violated { n, r, diff };
            }
        }
    }
    MonotoneVerdict::Holds
}

/// `g(r) = nu(K_{beta_r}) - (m-1) m r / 2` over a table keyed by the twist
/// count `r`. The subtracted term is always an integer; a non-integer
/// `g(r)` means the supplied values are not those of a knot invariant and
/// is reported as an invariant violation.
pub fn g_table(
    nu_values: &BTreeMap<i64, HalfInt>,
    m: u32,
) -> Result<BTreeMap<i64, HalfInt>, ConcordanceError> {
    let m = m as i64;
    let mut out = BTreeMap::new();
    for (&r, &nu) in nu_values {
        let g = nu - HalfInt::halves((m - 1) * m * r);
        if !g.is_integer() {
            return Err(ConcordanceError::NonIntegralG { r, value: g });
        }
        out.insert(r, g);
    }
    Ok(out)
}

/// Same two-sided monotonicity check as for h, applied to a g-table.
pub fn check_g_monotone(g: &BTreeMap<i64, HalfInt>, m: u32) -> MonotoneVerdict {
    check_h_monotone(g, m)
}

/// Witness that the table is eventually constant for large keys: the
/// stabilized offset `c` with `nu(K_{m,n}) = nu(T(m,n)) + c` for all
/// `n > N`, where `N` is the smallest key of the constant tail.
///
/// The tail must contain at least two keys and span at least `m`
/// consecutive integers (one full residue cycle); monotonicity is checked
/// first, and a violation is reported before any constancy claim.
pub fn stable_offset_above(
    h: &BTreeMap<i64, HalfInt>,
    m: u32,
) -> Result<(HalfInt, i64), ConcordanceError> {
    guard_monotone(h, m)?;
    let entries: Vec<(i64, HalfInt)> = h.iter().map(|(&k, &v)| (k, v)).collect();
    let tail_value =
        entries.last().ok_or(ConcordanceError::InsufficientRange { side: "upper" })?.1;
    let mut start = entries.len() - 1;
    while start > 0 && entries[start - 1].1 == tail_value {
        start -= 1;
    }
    let span = entries[entries.len() - 1].0 - entries[start].0;
    if entries.len() - start < 2 || span < m as i64 {
        return Err(ConcordanceError::InsufficientRange { side: "upper" });
    }
    // For n > 0 the unknot table sits at -(m-1)/2; the offset of this
    // table against it is the constant c.
    let c = tail_value - unknot_h_value(m, 1);
    Ok((c, entries[start].0))
}

/// The `n -> -infinity` analogue: offset `c'` with
/// `nu(K_{m,n}) = nu(T(m,n)) + c'` for all `n < N'`.
pub fn stable_offset_below(
    h: &BTreeMap<i64, HalfInt>,
    m: u32,
) -> Result<(HalfInt, i64), ConcordanceError> {
    guard_monotone(h, m)?;
    let entries: Vec<(i64, HalfInt)> = h.iter().map(|(&k, &v)| (k, v)).collect();
    let head_value =
        entries.first().ok_or(ConcordanceError::InsufficientRange { side: "lower" })?.1;
    let mut end = 0;
    while end + 1 < entries.len() && entries[end + 1].1 == head_value {
        end += 1;
    }
    let span = entries[end].0 - entries[0].0;
    if end + 1 < 2 || span < m as i64 {
        return Err(ConcordanceError::InsufficientRange { side: "lower" });
    }
    let c = head_value - unknot_h_value(m, -1);
    Ok((c, entries[end].0))
}

fn guard_monotone(h: &BTreeMap<i64, HalfInt>, m: u32) -> Result<(), ConcordanceError> {
    match check_h_monotone(h, m) {
        MonotoneVerdict::Holds => Ok(()),
        MonotoneVerdict::Violated { n, r, diff } => {
            Err(ConcordanceError::MonotonicityViolated { n, r, diff })
        }
    }
}

/// Class membership of the `(m, n)`-cable for a nontrivial companion:
/// in the class iff the companion is and `n > 0`.
pub fn class_p_propagate(in_p: bool, n: i64) -> bool {
    in_p && n > 0
}

/// Three-valued obstruction outcome. The corollaries give necessary
/// conditions only, so `Consistent` never asserts the property holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Obstructed { reason: String },
    Consistent,
    Inconclusive { missing: Vec<&'static str> },
}

impl Verdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, Verdict::Obstructed { .. })
    }

    pub fn is_consistent(&self) -> bool {
        matches!(self, Verdict::Consistent)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Obstructed { reason } => write!(f, "obstructed ({reason})"),
            Verdict::Consistent => write!(f, "consistent"),
            Verdict::Inconclusive { missing } => {
                write!(f, "inconclusive (missing: {})", missing.join(", "))
            }
        }
    }
}

/// A knot bounding a properly embedded complex curve in the 4-ball has
/// `tau = g4 >= 0`; the cable bound then forces `n >= -2m tau/(m-1) - 1`.
/// Returns `Obstructed` when `n` is strictly below that threshold, by
/// exact rational comparison.
pub fn c_knot_obstruction(tau: HalfInt, m: u32, n: i64) -> Result<Verdict, ConcordanceError> {
    if m < 2 {
        return Err(ConcordanceError::DegenerateCable);
    }
    require_coprime(m as i64, n)?;
    let m = m as i64;
    // n < -2m tau/(m-1) - 1  <=>  (n+1)(m-1) < -m * (2 tau), exactly.
    if (n + 1) * (m - 1) < -m * tau.doubled() {
        Ok(Verdict::Obstructed {
            reason: format!("n = {n} is below the complex-curve threshold for tau = {tau}"),
        })
    } else {
        Ok(Verdict::Consistent)
    }
}

fn necessary_conditions(record: &KnotRecord, n: i64, property: &str) -> Verdict {
    let mut missing = Vec::new();
    if record.tau.is_none() {
        missing.push("tau");
    }
    if record.genus3.is_none() {
        missing.push("g3");
    }
    if !missing.is_empty() {
        return Verdict::Inconclusive { missing };
    }
    if n <= 0 {
        return Verdict::Obstructed { reason: format!("{property} requires n > 0, got n = {n}") };
    }
    if record.tau_equals_genus() != Some(true) {
        return Verdict::Obstructed {
            reason: format!("{property} requires tau(K) = g(K) for the companion"),
        };
    }
    Verdict::Consistent
}

/// Necessary conditions for the cable to bound a complex curve of genus
/// equal to its Seifert genus: `n > 0` and `tau(K) = g(K)`.
pub fn complex_curve_obstruction(record: &KnotRecord, _m: u32, n: i64) -> Verdict {
    necessary_conditions(record, n, "a genus-realizing complex curve")
}

/// Necessary conditions for the cable to admit a positive lens space or
/// L-space surgery: `n > 0` and `tau(K) = g(K)`.
pub fn lspace_obstruction(record: &KnotRecord, _m: u32, n: i64) -> Verdict {
    necessary_conditions(record, n, "a positive L-space surgery")
}

/// Necessary conditions for the cable to be a positive knot. Positive
/// knots realize their genus by complex curves, so the same companion
/// conditions apply.
pub fn positivity_obstruction(record: &KnotRecord, _m: u32, n: i64) -> Verdict {
    necessary_conditions(record, n, "positivity")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halfint_arithmetic_and_display() {
        let a = HalfInt::halves(5);
        let b = HalfInt::from_int(2);
        assert_eq!((a + b).doubled(), 9);
        assert_eq!((a - b).to_string(), "1/2");
        assert_eq!(b.to_string(), "2");
        assert_eq!((-a).to_string(), "-5/2");
        assert!(b.is_integer());
        assert!(!a.is_integer());
        assert_eq!(b.as_integer(), Some(2));
        assert_eq!((a * 2).as_integer(), Some(5));
    }

    #[test]
    fn torus_nu_values() {
        assert_eq!(torus_nu(3, 2).unwrap(), HalfInt::from_int(1));
        assert_eq!(torus_nu(1, 5).unwrap(), HalfInt::ZERO);
        assert_eq!(torus_nu(4, 5).unwrap(), HalfInt::from_int(6));
        assert!(torus_nu(2, 4).is_err());
    }

    #[test]
    fn torus_nu_signed_is_odd_in_n() {
        assert_eq!(torus_nu_signed(3, -2).unwrap(), HalfInt::from_int(-1));
        assert_eq!(torus_nu_signed(5, 1).unwrap(), HalfInt::ZERO);
        assert_eq!(torus_nu_signed(2, -7).unwrap(), HalfInt::from_int(-3));
        for m in 2..=6u32 {
            for n in 1..=20i64 {
                if (m as i64).gcd(&n) == 1 {
                    assert_eq!(
                        torus_nu_signed(m, -n).unwrap(),
                        -torus_nu_signed(m, n).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn twist_bounds_examples() {
        let i = cable_bounds_from_twists(HalfInt::from_int(1), 2, 3).unwrap();
        assert_eq!((i.lower(), i.upper()), (HalfInt::from_int(5), HalfInt::from_int(6)));
        let i = cable_bounds_from_twists(HalfInt::ZERO, 2, 0).unwrap();
        assert_eq!((i.lower(), i.upper()), (HalfInt::ZERO, HalfInt::from_int(1)));
        let i = cable_bounds_from_twists(HalfInt::from_int(-1), 3, 0).unwrap();
        assert_eq!((i.lower(), i.upper()), (HalfInt::from_int(-3), HalfInt::from_int(-1)));
        assert!(cable_bounds_from_twists(HalfInt::ZERO, 1, 0).is_err());
    }

    #[test]
    fn twist_equality_examples() {
        // Right trefoil: tau = g = 1.
        let v = cable_equality_from_twists(HalfInt::from_int(1), 1, 2, 3).unwrap().unwrap();
        assert_eq!(v.value, HalfInt::from_int(5));
        assert_eq!(v.clause, EqualityClause::TauEqualsGenus);
        // Left trefoil: tau = -1, g = 1. Upper endpoint -2 + (m-1) = -1;
        // cross-checked through the mirror of the right trefoil's
        // (2,-1)-cable value.
        let v = cable_equality_from_twists(HalfInt::from_int(-1), 1, 2, 0).unwrap().unwrap();
        assert_eq!(v.value, HalfInt::from_int(-1));
        assert_eq!(v.clause, EqualityClause::TauEqualsMinusGenus);
        // Neither clause.
        assert!(cable_equality_from_twists(HalfInt::ZERO, 2, 2, 1).unwrap().is_none());
        // Both clauses only for tau = g = 0; flagged.
        let v = cable_equality_from_twists(HalfInt::ZERO, 0, 3, 1).unwrap().unwrap();
        assert!(v.ambiguous);
        assert_eq!(v.clause, EqualityClause::TauEqualsGenus);
    }

    #[test]
    fn general_bounds_examples() {
        let i = cable_bounds(HalfInt::from_int(1), 2, 7).unwrap();
        assert_eq!((i.lower(), i.upper()), (HalfInt::from_int(5), HalfInt::from_int(6)));
        let i = cable_bounds(HalfInt::ZERO, 3, 1).unwrap();
        assert_eq!((i.lower(), i.upper()), (HalfInt::ZERO, HalfInt::from_int(2)));
        let i = cable_bounds(HalfInt::from_int(1), 3, -5).unwrap();
        assert_eq!((i.lower(), i.upper()), (HalfInt::from_int(-3), HalfInt::from_int(-1)));
        assert!(cable_bounds(HalfInt::ZERO, 2, 6).is_err());
        assert_eq!(cable_bounds_degenerate(HalfInt::halves(3)).width(), HalfInt::ZERO);
    }

    #[test]
    fn general_equality_examples() {
        let v = cable_equality(HalfInt::from_int(1), 1, 2, 7).unwrap().unwrap();
        assert_eq!(v.value, HalfInt::from_int(5));
        // tau = g pins the lower endpoint: 2 + (1)(-8)/2 = -2. The mirror
        // route (left trefoil at (2,7), upper clause, value 2) agrees.
        let v = cable_equality(HalfInt::from_int(1), 1, 2, -7).unwrap().unwrap();
        assert_eq!(v.value, HalfInt::from_int(-2));
        assert_eq!(v.clause, EqualityClause::TauEqualsGenus);
    }

    #[test]
    fn bounds_agree_on_overlap() {
        for tau2 in (-6..=6i64).step_by(2) {
            let tau = HalfInt::from_doubled(tau2);
            for m in 2..=5u32 {
                for r in -6..=6i64 {
                    let n = m as i64 * r + 1;
                    let a = cable_bounds_from_twists(tau, m, r).unwrap();
                    let b = cable_bounds(tau, m, n).unwrap();
                    assert_eq!(a, b, "tau={tau}, m={m}, r={r}");
                    assert_eq!(b.width(), HalfInt::from_int(m as i64 - 1));
                }
            }
        }
    }

    #[test]
    fn h_table_of_unknot_is_two_step() {
        let m = 3u32;
        let mut nu = BTreeMap::new();
        for n in [-4i64, -2, -1, 1, 2, 4] {
            nu.insert(n, torus_nu_signed(m, n).unwrap());
        }
        let h = h_table(&nu, m).unwrap();
        for (&n, &v) in &h {
            assert_eq!(v, unknot_h_value(m, n), "n={n}");
        }
        // Drop across n = 0 is maximal: h(1) - h(-1) = -(m-1).
        assert_eq!(h[&1] - h[&-1], HalfInt::from_int(-2));
        assert!(check_h_monotone(&h, m).holds());
    }

    #[test]
    fn h_table_rejects_non_coprime_keys() {
        let mut nu = BTreeMap::new();
        nu.insert(3i64, HalfInt::ZERO);
        assert!(matches!(h_table(&nu, 3), Err(ConcordanceError::NotCoprime { .. })));
    }

    #[test]
    fn monotone_check_reports_violations() {
        let mut h = BTreeMap::new();
        h.insert(1i64, HalfInt::ZERO);
        h.insert(3, HalfInt::from_int(1));
        match check_h_monotone(&h, 2) {
            MonotoneVerdict::Violated { n: 3, r: 1, diff } => {
                assert_eq!(diff, HalfInt::from_int(1));
            }
            other => panic!("unexpected {other:?}"),
        }
        let mut h = BTreeMap::new();
        h.insert(1i64, HalfInt::ZERO);
        h.insert(3, HalfInt::from_int(-2));
        assert!(!check_h_monotone(&h, 2).holds());
    }

    #[test]
    fn g_table_for_single_positive_generator() {
        // beta = sigma_1 in B_2 over the unknot: the closure of beta_r is
        // T(2, 2r+1), so g(r) = nu(T(2,2r+1)) - r.
        let m = 2u32;
        let mut nu = BTreeMap::new();
        for r in -6..=6i64 {
            nu.insert(r, torus_nu_signed(m, 2 * r + 1).unwrap());
        }
        let g = g_table(&nu, m).unwrap();
        for (&r, &v) in &g {
            let expected = if r >= 0 { HalfInt::ZERO } else { HalfInt::from_int(1) };
            assert_eq!(v, expected, "r={r}");
        }
        assert!(check_g_monotone(&g, m).holds());
        // Total variation is exactly m - 1 = 1.
        let max = g.values().max().unwrap();
        let min = g.values().min().unwrap();
        assert_eq!(*max - *min, HalfInt::from_int(1));
    }

    #[test]
    fn g_table_flags_non_integers() {
        let mut nu = BTreeMap::new();
        nu.insert(0i64, HalfInt::halves(1));
        assert!(matches!(g_table(&nu, 2), Err(ConcordanceError::NonIntegralG { .. })));
    }

    #[test]
    fn stable_offsets() {
        let m = 2u32;
        // Unknot table over odd n in [-9, 9].
        let mut nu = BTreeMap::new();
        for n in (-9..=9i64).filter(|n| n % 2 != 0) {
            nu.insert(n, torus_nu_signed(m, n).unwrap());
        }
        let h = h_table(&nu, m).unwrap();
        let (c, witness) = stable_offset_above(&h, m).unwrap();
        assert_eq!(c, HalfInt::ZERO);
        assert!(witness <= 1);
        let (c, _) = stable_offset_below(&h, m).unwrap();
        assert_eq!(c, HalfInt::ZERO);

        // Trefoil equality values: nu(K_{2,n}) = 2 + (n-1)/2, so c = 2.
        let mut nu = BTreeMap::new();
        for n in (-9..=9i64).filter(|n| n % 2 != 0) {
            nu.insert(n, cable_equality(HalfInt::from_int(1), 1, m, n).unwrap().unwrap().value);
        }
        let h = h_table(&nu, m).unwrap();
        let (c, _) = stable_offset_above(&h, m).unwrap();
        assert_eq!(c, HalfInt::from_int(2));
    }

    #[test]
    fn stable_offset_guards() {
        // Too small a table.
        let mut h = BTreeMap::new();
        h.insert(1i64, HalfInt::ZERO);
        assert!(matches!(
            stable_offset_above(&h, 2),
            Err(ConcordanceError::InsufficientRange { .. })
        ));
        // Monotonicity violations surface before constancy.
        let mut h = BTreeMap::new();
        h.insert(1i64, HalfInt::ZERO);
        h.insert(3, HalfInt::from_int(5));
        h.insert(5, HalfInt::from_int(5));
        assert!(matches!(
            stable_offset_above(&h, 2),
            Err(ConcordanceError::MonotonicityViolated { .. })
        ));
    }

    #[test]
    fn class_propagation() {
        assert!(class_p_propagate(true, 7));
        assert!(!class_p_propagate(true, -3));
        assert!(!class_p_propagate(false, 7));
    }

    #[test]
    fn c_knot_thresholds() {
        // Left trefoil, tau = -1, m = 2: threshold n >= 3.
        let tau = HalfInt::from_int(-1);
        assert!(c_knot_obstruction(tau, 2, 1).unwrap().is_obstructed());
        assert!(c_knot_obstruction(tau, 2, -5).unwrap().is_obstructed());
        assert!(c_knot_obstruction(tau, 2, 3).unwrap().is_consistent());
        // Right trefoil: threshold -5, so n = 1 passes.
        assert!(c_knot_obstruction(HalfInt::from_int(1), 2, 1).unwrap().is_consistent());
        // tau = 0, m = 3: threshold -1.
        assert!(c_knot_obstruction(HalfInt::ZERO, 3, -5).unwrap().is_obstructed());
        assert!(c_knot_obstruction(HalfInt::ZERO, 3, -1).unwrap().is_consistent());
        assert!(c_knot_obstruction(HalfInt::ZERO, 2, 4).is_err());
    }

    fn record(name: &str, tau: Option<i64>, g3: Option<u32>) -> KnotRecord {
        KnotRecord {
            name: name.into(),
            braid: None,
            tau: tau.map(HalfInt::from_int),
            s_half: None,
            genus3: g3,
            genus4: g3,
            in_p: None,
        }
    }

    #[test]
    fn geometric_obstructions() {
        let fig8 = record("figure-eight", Some(0), Some(1));
        for (m, n) in [(2u32, 3i64), (2, -3), (3, 7), (5, 2)] {
            assert!(positivity_obstruction(&fig8, m, n).is_obstructed(), "({m},{n})");
        }
        let trefoil = record("trefoil", Some(1), Some(1));
        assert!(lspace_obstruction(&trefoil, 2, -3).is_obstructed());
        assert!(lspace_obstruction(&trefoil, 2, 7).is_consistent());
        assert!(complex_curve_obstruction(&trefoil, 2, 7).is_consistent());
        assert!(positivity_obstruction(&trefoil, 2, 7).is_consistent());
        let unknown = record("mystery", None, Some(1));
        match complex_curve_obstruction(&unknown, 2, 7) {
            Verdict::Inconclusive { missing } => assert_eq!(missing, vec!["tau"]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn record_validation() {
        let mut r = record("bad", Some(4), Some(1));
        assert!(r.validate().is_err());
        r.tau = Some(HalfInt::from_int(1));
        assert!(r.validate().is_ok());
        r.in_p = Some(true);
        assert!(r.validate().is_ok());
        r.tau = Some(HalfInt::ZERO);
        assert!(r.validate().is_err());
    }
}
