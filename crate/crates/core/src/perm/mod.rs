//! Permutations and explicitly materialized permutation groups, digraph
//! isomorphism and automorphism search, orbit machinery and regular-subgroup
//! (Cayley) recognition.
//!
//! Permutations act on the right: `v^g` is `g.apply(v)`, and `g.then(h)` is
//! the permutation `v ↦ (v^g)^h`.

mod recognize;
mod search;

use std::collections::{HashSet, VecDeque};
use std::fmt;

pub use recognize::{is_cayley, is_vertex_transitive};
pub use search::{automorphisms, isomorphic, DEFAULT_AUT_CAP, MAX_GROUP_ORDER};

use crate::error::{invalid, Error, Result};

/// A bijection on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

impl fmt::Display for Permutation {
    /// Disjoint cycle notation, fixed points omitted; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut any = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.images[x];
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return invalid("images do not form a bijection");
            }
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    /// `v ↦ other(self(v))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i == x)
            .count()
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.then(self);
            k += 1;
        }
        k
    }
}

/// A finite permutation group with all elements listed.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
    lookup: HashSet<Permutation>,
}

impl PermGroup {
    /// Wraps an explicit element list, checking that it is a group.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        if elements.iter().any(|p| p.degree() != degree) {
            return invalid("element degree does not match group degree");
        }
        let group = Self::from_sorted_unchecked(degree, elements);
        if !group.contains(&Permutation::identity(degree)) {
            return invalid("element list lacks the identity");
        }
        for a in &group.elements {
            if !group.contains(&a.inverse()) {
                return invalid("element list is not closed under inverses");
            }
            for b in &group.elements {
                if !group.contains(&a.then(b)) {
                    return invalid("element list is not closed under composition");
                }
            }
        }
        Ok(group)
    }

    pub(crate) fn from_sorted_unchecked(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        let lookup = elements.iter().cloned().collect();
        Self {
            degree,
            elements,
            lookup,
        }
    }

    /// The group generated by `gens`, failing if it grows beyond `limit` elements.
    pub fn generate(degree: usize, gens: &[Permutation], limit: usize) -> Result<Self> {
        if gens.iter().any(|p| p.degree() != degree) {
            return invalid("generator degree does not match group degree");
        }
        let id = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.then(g);
                if seen.insert(y.clone()) {
                    if seen.len() > limit {
                        return Err(Error::SizeLimit {
                            what: "group order",
                            actual: seen.len(),
                            cap: limit,
                        });
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(Self::from_sorted_unchecked(
            degree,
            seen.into_iter().collect(),
        ))
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_sorted_unchecked(degree, vec![Permutation::identity(degree)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in lexicographic order of their image lists.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.lookup.contains(p)
    }

    /// `v^Γ`, sorted.
    pub fn orbit(&self, v: usize) -> Vec<usize> {
        let mut o: Vec<usize> = self.elements.iter().map(|g| g.apply(v)).collect();
        o.sort_unstable();
        o.dedup();
        o
    }

    /// `Γ_v`, the elements fixing `v`.
    pub fn stabilizer(&self, v: usize) -> PermGroup {
        let elems = self
            .elements
            .iter()
            .filter(|g| g.apply(v) == v)
            .cloned()
            .collect();
        Self::from_sorted_unchecked(self.degree, elems)
    }

    /// `g^{-1} H g` as a set of elements, where `self` plays `H`.
    pub fn conjugate_by(&self, g: &Permutation) -> PermGroup {
        let gi = g.inverse();
        let elems = self.elements.iter().map(|h| gi.then(h).then(g)).collect();
        Self::from_sorted_unchecked(self.degree, elems)
    }

    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

/// Orbit partition of `0..n`; blocks sorted internally and by first element.
pub fn orbits(group: &PermGroup, n: usize) -> Result<Vec<Vec<usize>>> {
    if group.degree() != n {
        return invalid(format!("group has degree {}, expected {n}", group.degree()));
    }
    let mut block_of = vec![usize::MAX; n];
    let mut blocks = Vec::new();
    for v in 0..n {
        if block_of[v] != usize::MAX {
            continue;
        }
        let orbit = group.orbit(v);
        for &w in &orbit {
            block_of[w] = blocks.len();
        }
        blocks.push(orbit);
    }
    Ok(blocks)
}

/// Number of orbits as the average number of fixed points.
pub fn burnside_orbit_count(group: &PermGroup, n: usize) -> Result<usize> {
    if group.degree() != n {
        return invalid(format!("group has degree {}, expected {n}", group.degree()));
    }
    let total: usize = group.elements().iter().map(Permutation::fixed_points).sum();
    if group.order() == 0 || !total.is_multiple_of(group.order()) {
        return Err(Error::InternalInconsistency(format!(
            "fixed-point total {total} is not divisible by group order {}",
            group.order()
        )));
    }
    Ok(total / group.order())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let a = p(&[1, 2, 0, 3]);
        assert_eq!(a.order(), 3);
        assert_eq!(a.fixed_points(), 1);
        assert_eq!(a.then(&a.inverse()), Permutation::identity(4));
        assert_eq!(a.to_string(), "(0 1 2)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
        // right action: 0 -a-> 1 -b-> 0
        let b = p(&[1, 0, 2, 3]);
        assert_eq!(a.then(&b).apply(0), 0);
    }

    #[test]
    fn trivial_group_orbits() {
        let g = PermGroup::trivial(4);
        assert_eq!(
            orbits(&g, 4).unwrap(),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        assert_eq!(burnside_orbit_count(&g, 4).unwrap(), 4);
        assert!(orbits(&g, 5).is_err());
    }

    #[test]
    fn rotations_of_five() {
        let g = PermGroup::generate(5, &[p(&[1, 2, 3, 4, 0])], 100).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(orbits(&g, 5).unwrap(), vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(burnside_orbit_count(&g, 5).unwrap(), 1);
    }

    #[test]
    fn generate_respects_limit() {
        let gens = [p(&[1, 2, 3, 4, 5, 0]), p(&[1, 0, 2, 3, 4, 5])];
        assert!(matches!(
            PermGroup::generate(6, &gens, 100),
            Err(Error::SizeLimit { .. })
        ));
        assert_eq!(PermGroup::generate(6, &gens, 720).unwrap().order(), 720);
    }

    #[test]
    fn from_elements_validates() {
        let id = Permutation::identity(3);
        let r = p(&[1, 2, 0]);
        assert!(PermGroup::from_elements(3, vec![id.clone(), r.clone()]).is_err());
        let r2 = r.then(&r);
        assert!(PermGroup::from_elements(3, vec![id.clone(), r, r2]).is_ok());
        assert!(PermGroup::from_elements(3, vec![p(&[1, 0, 2])]).is_err());
    }

    #[test]
    fn burnside_rejects_non_group() {
        // {id, (0 1 2)} is not a group: 3 + 0 fixed points over 2 elements
        let g = PermGroup::from_sorted_unchecked(3, vec![Permutation::identity(3), p(&[1, 2, 0])]);
        assert!(matches!(
            burnside_orbit_count(&g, 3),
            Err(Error::InternalInconsistency(_))
        ));
    }
}
