use std::collections::{HashSet, VecDeque};

use super::{automorphisms, orbits, PermGroup, Permutation};
use crate::error::Result;
use crate::graphs::Digraph;

/// Single orbit of the automorphism group.
pub fn is_vertex_transitive(g: &Digraph, cap: usize) -> Result<bool> {
    let aut = automorphisms(g, cap)?;
    Ok(orbits(&aut, g.order())?.len() <= 1)
}

/// A regular subgroup of `Aut(g)` if one exists.
///
/// A digraph is a Cayley digraph exactly when its automorphism group has a
/// regular subgroup. Every non-identity element of a regular group is
/// fixed-point-free, so the search only combines such elements. It grows a
/// subgroup one generator at a time, always adding an element that carries
/// vertex 0 to the smallest vertex not yet reached, and abandons a branch as
/// soon as the generated group contains an element with a fixed point.
pub fn is_cayley(g: &Digraph, cap: usize) -> Result<Option<PermGroup>> {
    let aut = automorphisms(g, cap)?;
    Ok(regular_subgroup(&aut))
}

pub(crate) fn regular_subgroup(aut: &PermGroup) -> Option<PermGroup> {
    let n = aut.degree();
    if n == 0 {
        return Some(PermGroup::trivial(0));
    }
    let mut by_image: Vec<Vec<&Permutation>> = vec![Vec::new(); n];
    for p in aut.elements() {
        if p.fixed_points() == 0 {
            by_image[p.apply(0)].push(p);
        }
    }
    let start = vec![Permutation::identity(n)];
    let found = extend(&start, &[], &by_image, n)?;
    Some(PermGroup::from_sorted_unchecked(n, found))
}

fn extend(
    group: &[Permutation],
    gens: &[Permutation],
    by_image: &[Vec<&Permutation>],
    n: usize,
) -> Option<Vec<Permutation>> {
    if group.len() == n {
        return Some(group.to_vec());
    }
    let mut reached = vec![false; n];
    for p in group {
        reached[p.apply(0)] = true;
    }
    let target = reached.iter().position(|r| !r)?;
    for &x in &by_image[target] {
        let mut next_gens = gens.to_vec();
        next_gens.push(x.clone());
        if let Some(closed) = semiregular_closure(&next_gens, n) {
            if let Some(found) = extend(&closed, &next_gens, by_image, n) {
                return Some(found);
            }
        }
    }
    None
}

/// The group generated by `gens`, or `None` once it exceeds `n` elements or
/// contains a non-identity element with a fixed point.
fn semiregular_closure(gens: &[Permutation], n: usize) -> Option<Vec<Permutation>> {
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(a) = queue.pop_front() {
        for g in gens {
            let b = a.then(g);
            if seen.contains(&b) {
                continue;
            }
            if b.fixed_points() != 0 || seen.len() == n {
                return None;
            }
            seen.insert(b.clone());
            queue.push_back(b);
        }
    }
    Some(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{cayley_digraph, directed_cycle, k_cube, petersen, ConnectionSet};
    use crate::perm::DEFAULT_AUT_CAP;

    fn assert_regular(h: &PermGroup, n: usize) {
        assert_eq!(h.order(), n);
        assert_eq!(orbits(h, n).unwrap().len(), 1);
        assert!(h
            .elements()
            .iter()
            .all(|p| p.is_identity() || p.fixed_points() == 0));
        assert!(PermGroup::from_elements(n, h.elements().to_vec()).is_ok());
    }

    #[test]
    fn three_cycle_rotations() {
        let h = is_cayley(&directed_cycle(3).unwrap(), DEFAULT_AUT_CAP)
            .unwrap()
            .unwrap();
        assert_regular(&h, 3);
    }

    #[test]
    fn cube_is_cayley() {
        let h = is_cayley(&k_cube(3).unwrap(), DEFAULT_AUT_CAP)
            .unwrap()
            .unwrap();
        assert_regular(&h, 8);
    }

    #[test]
    fn z7_tournament_is_cayley() {
        let g = cayley_digraph(&ConnectionSet::cyclic(7, &[1, 2, 3]).unwrap()).unwrap();
        assert!(is_vertex_transitive(&g, DEFAULT_AUT_CAP).unwrap());
        assert_regular(&is_cayley(&g, DEFAULT_AUT_CAP).unwrap().unwrap(), 7);
    }

    #[test]
    fn petersen_is_not_cayley() {
        let g = petersen();
        assert!(is_vertex_transitive(&g, DEFAULT_AUT_CAP).unwrap());
        assert!(is_cayley(&g, DEFAULT_AUT_CAP).unwrap().is_none());
    }

    #[test]
    fn non_transitive_graph() {
        // a path on 3 vertices
        let g = Digraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!is_vertex_transitive(&g, DEFAULT_AUT_CAP).unwrap());
        assert!(is_cayley(&g, DEFAULT_AUT_CAP).unwrap().is_none());
    }
}
