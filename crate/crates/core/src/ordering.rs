//! Ordering functions `⟨.⟩` and the ε-symbol.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{permutation_parity, GeneratorLabel, Monomial, Sign};

/// Assigns each nonempty finite set an ordered tuple of its labels.
///
/// `Canonical` lists labels ascending. `Table` overrides finitely many sets
/// and falls back to ascending order elsewhere. Tables are normalized on
/// construction (identity entries dropped, empty tables become `Canonical`)
/// so equality is semantic.
#[derive(Clone, Debug, Default)]
pub enum OrderingFunction {
    #[default]
    Canonical,
    Table(Arc<BTreeMap<Monomial, (Vec<GeneratorLabel>, Sign)>>),
}

/// One row of a serialized ordering table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingEntry {
    pub set: Vec<u64>,
    pub order: Vec<u64>,
}

impl OrderingFunction {
    /// Builds a table ordering from tuples; each tuple is the order of its own
    /// label set.
    pub fn table<T, L>(tuples: impl IntoIterator<Item = T>) -> Result<Self>
    where
        T: IntoIterator<Item = L>,
        L: Into<GeneratorLabel>,
    {
        let mut map = BTreeMap::new();
        let mut seen: BTreeMap<Monomial, Vec<GeneratorLabel>> = BTreeMap::new();
        for t in tuples {
            let tuple: Vec<GeneratorLabel> = t.into_iter().map(Into::into).collect();
            if tuple.is_empty() {
                return Err(Error::InvalidOrdering(
                    "the empty set has no ordering".into(),
                ));
            }
            let set = Monomial::new(tuple.iter().copied());
            if set.len() != tuple.len() {
                return Err(Error::InvalidOrdering(format!(
                    "repeated label in {tuple:?}"
                )));
            }
            let twist = permutation_parity(set.labels(), &tuple)?;
            match seen.get(&set) {
                Some(prev) if *prev != tuple => {
                    return Err(Error::InvalidOrdering(format!(
                        "conflicting orders for {set:?}"
                    )));
                }
                _ => {
                    seen.insert(set.clone(), tuple.clone());
                }
            }
            if tuple.as_slice() != set.labels() {
                map.insert(set, (tuple, twist));
            }
        }
        if map.is_empty() {
            Ok(OrderingFunction::Canonical)
        } else {
            Ok(OrderingFunction::Table(Arc::new(map)))
        }
    }

    pub fn from_entries(entries: &[OrderingEntry]) -> Result<Self> {
        for e in entries {
            if Monomial::new(e.set.iter().copied()) != Monomial::new(e.order.iter().copied())
                || e.set.len() != e.order.len()
            {
                return Err(Error::InvalidOrdering(format!(
                    "{:?} is not a permutation of {:?}",
                    e.order, e.set
                )));
            }
        }
        OrderingFunction::table(entries.iter().map(|e| e.order.iter().copied()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let entries: Vec<OrderingEntry> =
            serde_json::from_str(text).map_err(|e| Error::InvalidOrdering(e.to_string()))?;
        OrderingFunction::from_entries(&entries)
    }

    pub fn is_canonical(&self) -> bool {
        matches!(self, OrderingFunction::Canonical)
    }

    /// `⟨I⟩`.
    pub fn order(&self, set: &Monomial) -> Result<Vec<GeneratorLabel>> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(self.order_or_empty(set))
    }

    pub(crate) fn order_or_empty(&self, set: &Monomial) -> Vec<GeneratorLabel> {
        match self {
            OrderingFunction::Table(t) => match t.get(set) {
                Some((tuple, _)) => tuple.clone(),
                None => set.labels().to_vec(),
            },
            OrderingFunction::Canonical => set.labels().to_vec(),
        }
    }

    /// Parity of `⟨I⟩` relative to ascending order.
    pub fn twist(&self, set: &Monomial) -> Sign {
        match self {
            OrderingFunction::Table(t) => t.get(set).map_or(Sign::Plus, |(_, s)| *s),
            OrderingFunction::Canonical => Sign::Plus,
        }
    }
}

impl PartialEq for OrderingFunction {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (OrderingFunction::Canonical, OrderingFunction::Canonical) => true,
            (OrderingFunction::Table(a), OrderingFunction::Table(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }
}

impl Eq for OrderingFunction {}

/// The ε-symbol `ε(I1, I2)`.
///
/// Zero on overlapping sets, `+1` when either set is empty, otherwise the
/// parity of the permutation `(⟨I1⟩, ⟨I2⟩) ↦ ⟨I1 ∪ I2⟩`. For the canonical
/// ordering this is the parity of the inversion count found by a linear merge.
pub fn epsilon(left: &Monomial, right: &Monomial, ordering: &OrderingFunction) -> Sign {
    if left.is_empty() || right.is_empty() {
        return Sign::Plus;
    }
    let Some((union, odd)) = left.merge_disjoint(right) else {
        return Sign::Zero;
    };
    match ordering {
        OrderingFunction::Canonical => Sign::from_odd(odd),
        OrderingFunction::Table(_) => {
            let mut tuple = ordering.order_or_empty(left);
            tuple.extend(ordering.order_or_empty(right));
            permutation_parity(&tuple, &ordering.order_or_empty(&union))
                .expect("union of disjoint sets is a permutation")
        }
    }
}

/// ε-symbol together with the union, using the factorization
/// `ε(I1, I2) = τ(I1) τ(I2) ε₀(I1, I2) τ(I1 ∪ I2)` where `τ` is the twist
/// of the ordering and `ε₀` the canonical symbol.
pub(crate) fn epsilon_with_union(
    left: &Monomial,
    right: &Monomial,
    ordering: &OrderingFunction,
) -> Option<(Monomial, Sign)> {
    let (union, odd) = left.merge_disjoint(right)?;
    let mut sign = Sign::from_odd(odd);
    if !ordering.is_canonical() {
        sign = sign * ordering.twist(left) * ordering.twist(right) * ordering.twist(&union);
    }
    Some((union, sign))
}
