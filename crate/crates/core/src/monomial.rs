//! Finite generator sets `I`, signs, and permutation parity.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::Coefficient;

/// Index `α` of a generator `e_α`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeneratorLabel(pub u64);

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u64> for GeneratorLabel {
    fn from(v: u64) -> Self {
        GeneratorLabel(v)
    }
}

/// A value of the ε-symbol: `0`, `+1` or `-1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn from_odd(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_odd(self) -> bool {
        self == Sign::Minus
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Zero => 0,
            Sign::Plus => 1,
        }
    }

    pub fn to_coefficient<C: Coefficient>(self, d: C::Descriptor) -> C {
        match self {
            Sign::Minus => C::one(d).neg(),
            Sign::Zero => C::zero(d),
            Sign::Plus => C::one(d),
        }
    }

    /// Multiplies `c` by this sign.
    pub fn apply<C: Coefficient>(self, c: C) -> C {
        match self {
            Sign::Minus => c.neg(),
            Sign::Zero => C::zero(c.descriptor()),
            Sign::Plus => c,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) => Sign::from_odd(a.is_odd() != b.is_odd()),
        }
    }
}

/// A finite set `I` of generator labels, stored strictly increasing.
///
/// Monomials order first by cardinality, then lexicographically; this is the
/// order terms are printed and serialized in.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<GeneratorLabel>);

impl Monomial {
    /// `∅`, which indexes the unit.
    pub fn empty() -> Self {
        Monomial(Vec::new())
    }

    pub fn singleton(label: impl Into<GeneratorLabel>) -> Self {
        Monomial(vec![label.into()])
    }

    /// Builds the set of the given labels; order and repetition are ignored.
    pub fn new<L: Into<GeneratorLabel>>(labels: impl IntoIterator<Item = L>) -> Self {
        let mut v: Vec<GeneratorLabel> = labels.into_iter().map(Into::into).collect();
        v.sort_unstable();
        v.dedup();
        Monomial(v)
    }

    pub fn labels(&self) -> &[GeneratorLabel] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, label: GeneratorLabel) -> bool {
        self.0.binary_search(&label).is_ok()
    }

    pub fn is_disjoint(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// Merges two sets, returning `None` if they intersect, else the union and
    /// whether the number of pairs `(α, β) ∈ self × other` with `α > β` is odd.
    pub fn merge_disjoint(&self, other: &Monomial) -> Option<(Monomial, bool)> {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut odd = false;
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    // b[j] jumps over the remaining a.len() - i labels
                    odd ^= (a.len() - i) % 2 == 1;
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => return None,
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Some((Monomial(out), odd))
    }

    /// Bit mask of the labels when all are below 64.
    pub fn mask(&self) -> Option<u64> {
        self.0
            .iter()
            .try_fold(0u64, |m, l| (l.0 < 64).then(|| m | (1 << l.0)))
    }

    pub fn from_mask(mut mask: u64) -> Self {
        let mut v = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            let b = mask.trailing_zeros();
            v.push(GeneratorLabel(b as u64));
            mask &= mask - 1;
        }
        Monomial(v)
    }

    pub fn is_even(&self) -> bool {
        self.0.len().is_multiple_of(2)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "e{l}")?;
        }
        Ok(())
    }
}

/// Parity of the strictly-above count for disjoint masks: the canonical
/// ε-symbol of `(left, right)` is odd iff this returns true.
#[inline]
pub(crate) fn mask_inversion_odd(left: u64, right: u64) -> bool {
    // bit j of `s` is the parity of the left labels strictly above j
    let mut s = left >> 1;
    s ^= s >> 1;
    s ^= s >> 2;
    s ^= s >> 4;
    s ^= s >> 8;
    s ^= s >> 16;
    s ^= s >> 32;
    (s & right).count_ones() % 2 == 1
}

/// Counts inversions of `v` by merge sort, returning only the parity.
fn inversion_parity(v: &mut [usize], scratch: &mut Vec<usize>) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mid = n / 2;
    let mut odd = inversion_parity(&mut v[..mid], scratch);
    odd ^= inversion_parity(&mut v[mid..], scratch);
    scratch.clear();
    let (mut i, mut j) = (0, mid);
    while i < mid && j < n {
        if v[i] <= v[j] {
            scratch.push(v[i]);
            i += 1;
        } else {
            odd ^= (mid - i) % 2 == 1;
            scratch.push(v[j]);
            j += 1;
        }
    }
    scratch.extend_from_slice(&v[i..mid]);
    scratch.extend_from_slice(&v[j..]);
    v.copy_from_slice(scratch);
    odd
}

/// Sign of the permutation carrying the tuple `perm` to `reference`.
///
/// Both must list the same distinct labels. Runs in `O(k log k)`.
pub fn permutation_parity(perm: &[GeneratorLabel], reference: &[GeneratorLabel]) -> Result<Sign> {
    if perm.len() != reference.len() {
        return Err(Error::LabelMismatch);
    }
    let position: HashMap<GeneratorLabel, usize> =
        reference.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    if position.len() != reference.len() {
        return Err(Error::LabelMismatch);
    }
    let mut seen = vec![false; perm.len()];
    let mut idx = Vec::with_capacity(perm.len());
    for l in perm {
        let &i = position.get(l).ok_or(Error::LabelMismatch)?;
        if std::mem::replace(&mut seen[i], true) {
            return Err(Error::LabelMismatch);
        }
        idx.push(i);
    }
    let mut scratch = Vec::with_capacity(idx.len());
    Ok(Sign::from_odd(inversion_parity(&mut idx, &mut scratch)))
}
