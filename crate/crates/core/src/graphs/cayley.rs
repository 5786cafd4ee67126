use std::collections::BTreeSet;

use super::Digraph;
use crate::error::{invalid, Error, Result};
use crate::groups::{AbelianGroup, GroupElement};

/// A subset `S` of an abelian group, used to define `Cay(group, S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionSet {
    group: AbelianGroup,
    members: BTreeSet<GroupElement>,
}

impl ConnectionSet {
    pub fn new<I>(group: AbelianGroup, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = GroupElement>,
    {
        let members: BTreeSet<_> = members.into_iter().collect();
        if let Some(x) = members.iter().find(|x| !group.contains(x)) {
            return invalid(format!("{x} is not an element of {group}"));
        }
        Ok(Self { group, members })
    }

    /// A subset of `Z_n` given by (possibly negative) residues.
    pub fn cyclic(n: u64, residues: &[i64]) -> Result<Self> {
        let group = AbelianGroup::cyclic(n)?;
        let members = residues
            .iter()
            .map(|&r| group.element(&[r]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, members)
    }

    /// A subset of a product group given by coordinate tuples.
    pub fn from_tuples(group: AbelianGroup, tuples: &[&[i64]]) -> Result<Self> {
        let members = tuples
            .iter()
            .map(|t| group.element(t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, members)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn members(&self) -> &BTreeSet<GroupElement> {
        &self.members
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `-S`.
    pub fn negated(&self) -> Self {
        Self {
            group: self.group.clone(),
            members: self.members.iter().map(|x| self.group.neg(x)).collect(),
        }
    }

    /// True when `S = -S`, i.e. the Cayley digraph is an undirected graph.
    pub fn is_symmetric(&self) -> bool {
        self.members
            .iter()
            .all(|x| self.members.contains(&self.group.neg(x)))
    }
}

/// Builds `Cay(group, S)`: vertex `g` has an arc to `h` exactly when `h - g ∈ S`.
///
/// Vertices are group elements indexed by [`AbelianGroup::index_of`].
pub fn cayley_digraph(s: &ConnectionSet) -> Result<Digraph> {
    let group = s.group();
    if s.contains(&group.identity()) {
        return Err(Error::InvalidConnectionSet(
            "connection set contains the identity".into(),
        ));
    }
    let mut g = Digraph::empty(group.order());
    for (gi, x) in group.elements().enumerate() {
        for y in s.members() {
            g.set(gi, group.index_of(&group.add(&x, y)));
        }
    }
    Ok(g)
}

/// True when `S` defines a Cayley tournament: `0 ∉ S`, `S ∩ -S = ∅` and
/// `S ∪ -S` covers every non-identity element.
pub fn validate_tournament_set(s: &ConnectionSet) -> bool {
    let group = s.group();
    let zero = group.identity();
    if s.contains(&zero) {
        return false;
    }
    group.elements().filter(|x| *x != zero).all(|x| {
        let neg = group.neg(&x);
        // self-paired elements (x = -x) fail here: both sides agree
        s.contains(&x) != s.contains(&neg)
    })
}

/// Looks for an `x ∈ S \ H` whose coset `x + H` is not contained in `S`.
///
/// Returns the smallest such `x`, or `None` when every coset condition holds.
pub fn coset_condition_witness(
    s: &ConnectionSet,
    subgroup: &BTreeSet<GroupElement>,
) -> Result<Option<GroupElement>> {
    let group = s.group();
    if !group.is_subgroup(subgroup) {
        return invalid("given set is not a subgroup");
    }
    Ok(s.members()
        .iter()
        .filter(|x| !subgroup.contains(*x))
        .find(|x| subgroup.iter().any(|h| !s.contains(&group.add(x, h))))
        .cloned())
}

/// For all `x ∈ S \ H`: `x + H ⊆ S`.
pub fn morris_coset_condition(
    s: &ConnectionSet,
    subgroup: &BTreeSet<GroupElement>,
) -> Result<bool> {
    Ok(coset_condition_witness(s, subgroup)?.is_none())
}
