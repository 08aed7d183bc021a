//! Braid-group words, closure analysis, and knot constructions.
//!
//! A [`BraidWord`] is a word in the standard generators of the braid group
//! on an explicit number of strands. All knots handled by this crate are
//! braid closures; the constructions here build torus braids, cables,
//! twisted satellites, connected sums and mirrors directly at the word
//! level, so downstream invariants can certify them end to end.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("cannot parse braid letter `{token}`: {reason}")]
    Parse { token: String, reason: String },
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("closure is not a knot: {components} components")]
    NotAKnot { components: usize },
}

/// Crossing sign of a braid generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// One braid generator occurrence: `sigma_index^(±1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    /// Generator index in `1..strands`.
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Self {
        Letter { index, sign }
    }

    fn signed(self) -> i64 {
        self.index as i64 * self.sign.value()
    }
}

/// A word in the braid group `B_strands`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

/// Closure component count together with basic word data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureSummary {
    pub components: usize,
    pub exponent_sum: i64,
    pub strands: usize,
}

impl ClosureSummary {
    pub fn is_knot(&self) -> bool {
        self.components == 1
    }
}

impl BraidWord {
    /// The empty word, valid for any `strands >= 1`.
    pub fn empty(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        assert!(strands >= 1, "a braid needs at least one strand");
        for l in &letters {
            if l.index == 0 || l.index >= strands {
                return Err(BraidError::IndexOutOfRange { index: l.index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses whitespace-separated signed generator indices.
    ///
    /// `"1 -2 1"` on 3 strands is `sigma_1 sigma_2^-1 sigma_1`. Zero,
    /// non-integer and out-of-range tokens are rejected by name.
    pub fn parse(text: &str, strands: usize) -> Result<Self, BraidError> {
        assert!(strands >= 1, "a braid needs at least one strand");
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let value: i64 = token.parse().map_err(|_| BraidError::Parse {
                token: token.to_string(),
                reason: "not an integer".into(),
            })?;
            if value == 0 {
                return Err(BraidError::Parse {
                    token: token.to_string(),
                    reason: "generator index must be nonzero".into(),
                });
            }
            let index = value.unsigned_abs() as usize;
            if index >= strands {
                return Err(BraidError::IndexOutOfRange { index, strands });
            }
            let sign = if value > 0 { Sign::Positive } else { Sign::Negative };
            letters.push(Letter::new(index, sign));
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.value()).sum()
    }

    /// Permutation induced on strand positions by the whole word.
    pub fn closure_permutation(&self) -> Permutation {
        let mut perm = Permutation::identity(self.strands);
        for l in &self.letters {
            perm.swap_images(l.index - 1, l.index);
        }
        perm
    }

    pub fn closure_summary(&self) -> ClosureSummary {
        ClosureSummary {
            components: self.closure_permutation().cycle_count(),
            exponent_sum: self.exponent_sum(),
            strands: self.strands,
        }
    }

    /// Word concatenation; both words must live on the same strand count.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "concat requires equal strand counts");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    /// Reinterprets the word on a larger strand count (indices unchanged).
    pub fn embed(&self, strands: usize) -> BraidWord {
        assert!(strands >= self.strands, "embed cannot shrink the strand count");
        BraidWord { strands, letters: self.letters.clone() }
    }

    /// All letter signs inverted; the closure is the mirror knot.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| Letter::new(l.index, l.sign.flip())).collect(),
        }
    }

    /// The exact inverse word: letters inverted and order reversed.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter::new(l.index, l.sign.flip()))
                .collect(),
        }
    }

    /// Set of generator indices that occur in the word.
    pub fn used_indices(&self) -> Vec<bool> {
        let mut used = vec![false; self.strands];
        for l in &self.letters {
            used[l.index] = true;
        }
        used
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", l.signed())?;
            first = false;
        }
        Ok(())
    }
}

/// A bijection of `{0..n-1}` stored by images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn new(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Post-composes with the transposition `(a b)`.
    pub fn swap_images(&mut self, a: usize, b: usize) {
        self.images.swap(a, b);
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
            }
        }
        cycles
    }
}

/// `(sigma_{m-1} sigma_{m-2} ... sigma_1)^q`; negative `q` gives the exact
/// inverse word. The closure is the torus link `T(m, q)` with `gcd(m, q)`
/// components (`gcd(m, 0) = m`).
pub fn torus_braid(m: usize, q: i64) -> BraidWord {
    assert!(m >= 1);
    let block: Vec<usize> = (1..m).rev().collect();
    let mut letters = Vec::with_capacity(block.len() * q.unsigned_abs() as usize);
    if q >= 0 {
        for _ in 0..q {
            letters.extend(block.iter().map(|&i| Letter::new(i, Sign::Positive)));
        }
    } else {
        for _ in 0..-q {
            letters.extend(block.iter().rev().map(|&i| Letter::new(i, Sign::Negative)));
        }
    }
    BraidWord { strands: m, letters }
}

/// Adjoins `r` full twists to the end of `b`: `b * (sigma_{m-1}...sigma_1)^(m r)`.
pub fn full_twists(b: &BraidWord, r: i64) -> BraidWord {
    let m = b.strands() as i64;
    b.concat(&torus_braid(b.strands(), m * r))
}

/// Connected sum of two knot closures as a single braid closure.
///
/// The second word is shifted onto strands `strands(a) ..`, sharing one
/// strand with the first. Errors if either closure is not a knot.
pub fn connected_sum(a: &BraidWord, b: &BraidWord) -> Result<BraidWord, BraidError> {
    for w in [a, b] {
        let summary = w.closure_summary();
        if !summary.is_knot() {
            return Err(BraidError::NotAKnot { components: summary.components });
        }
    }
    let shift = a.strands() - 1;
    let strands = a.strands() + b.strands() - 1;
    let mut letters = a.letters.clone();
    letters.extend(b.letters.iter().map(|l| Letter::new(l.index + shift, l.sign)));
    Ok(BraidWord { strands, letters })
}

/// Replaces every strand by `m` parallel strands.
///
/// Each letter becomes the block braid exchanging two adjacent bundles of
/// `m` strands: `m^2` letters of the same sign, the negative block being
/// the exact inverse word of the positive one.
pub fn m_parallel(b: &BraidWord, m: usize) -> BraidWord {
    assert!(m >= 1);
    if m == 1 {
        return b.clone();
    }
    let strands = b.strands() * m;
    let mut letters = Vec::with_capacity(b.len() * m * m);
    for l in &b.letters {
        let base = (l.index - 1) * m;
        // Positive block transposition: carry each strand of the right
        // bundle across the left bundle, one row at a time.
        let mut block = Vec::with_capacity(m * m);
        for j in 1..=m {
            for i in (j..j + m).rev() {
                block.push(base + i);
            }
        }
        match l.sign {
            Sign::Positive => {
                letters.extend(block.into_iter().map(|i| Letter::new(i, Sign::Positive)));
            }
            Sign::Negative => {
                letters.extend(block.into_iter().rev().map(|i| Letter::new(i, Sign::Negative)));
            }
        }
    }
    BraidWord { strands, letters }
}

/// The `(m, n)` cable of the companion closure.
///
/// `m` parallel copies of the companion followed by the framing correction
/// `torus_braid(m, n - m*e)` on the first `m` strands, where `e` is the
/// companion exponent sum (blackboard framing of the closed braid). The
/// closure has `gcd(m, n)` components.
pub fn cable_braid(companion: &BraidWord, m: usize, n: i64) -> Result<BraidWord, BraidError> {
    assert!(m >= 1);
    let summary = companion.closure_summary();
    if !summary.is_knot() {
        return Err(BraidError::NotAKnot { components: summary.components });
    }
    let e = companion.exponent_sum();
    let parallel = m_parallel(companion, m);
    let correction = torus_braid(m, n - m as i64 * e).embed(parallel.strands());
    Ok(parallel.concat(&correction))
}

/// Satellite with companion `companion` and pattern the closure of `beta`
/// inside its braid-axis solid torus, glued longitude to longitude.
///
/// Built as `m` parallel copies, a zero-framing correction, then `beta` on
/// the first `m` strands. With `beta = torus_braid(m, n)` this closes to
/// the same knot as [`cable_braid`].
pub fn satellite_braid(companion: &BraidWord, beta: &BraidWord) -> Result<BraidWord, BraidError> {
    let comp_summary = companion.closure_summary();
    if !comp_summary.is_knot() {
        return Err(BraidError::NotAKnot { components: comp_summary.components });
    }
    let beta_summary = beta.closure_summary();
    if !beta_summary.is_knot() {
        return Err(BraidError::NotAKnot { components: beta_summary.components });
    }
    let m = beta.strands();
    let e = companion.exponent_sum();
    let parallel = m_parallel(companion, m);
    let strands = parallel.strands();
    let zero_framing = torus_braid(m, -(m as i64) * e).embed(strands);
    Ok(parallel.concat(&zero_framing).concat(&beta.embed(strands)))
}

/// Component count of the closure of `torus_braid(m, q)` without building
/// the word: `gcd(m, |q|)`, with `gcd(m, 0) = m`.
pub fn torus_components(m: usize, q: i64) -> usize {
    (m as i64).gcd(&q) as usize
}
