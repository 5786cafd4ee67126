use super::Digraph;
use crate::error::{invalid, Result};

/// Directed 3-cycle counts per arc of a tournament.
///
/// For an arc `u -> v` the count is the number of `w` with `v -> w -> u`.
/// The sorted multiset of counts is an isomorphism invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleProfile {
    /// `(u, v, count)` for every arc, in lexicographic arc order.
    pub arcs: Vec<(usize, usize, usize)>,
    /// All counts, sorted ascending.
    pub summary: Vec<usize>,
    pub max: usize,
}

impl TriangleProfile {
    /// An arc attaining the maximum count, if the tournament has arcs.
    pub fn argmax(&self) -> Option<(usize, usize)> {
        self.arcs
            .iter()
            .find(|a| a.2 == self.max)
            .map(|&(u, v, _)| (u, v))
    }
}

pub(crate) fn arc_triangle_counts(g: &Digraph) -> Vec<(usize, usize, usize)> {
    let pred = g.transpose();
    g.arcs()
        .map(|(u, v)| (u, v, g.row_and_count(v, &pred, u)))
        .collect()
}

pub fn triangle_profile(g: &Digraph) -> Result<TriangleProfile> {
    if !g.is_tournament() {
        return invalid("triangle profile requires a tournament");
    }
    let arcs = arc_triangle_counts(g);
    let mut summary: Vec<usize> = arcs.iter().map(|a| a.2).collect();
    summary.sort_unstable();
    let max = summary.last().copied().unwrap_or(0);
    Ok(TriangleProfile { arcs, summary, max })
}

/// Number of directed 3-cycles `v -> a -> b -> v` through each vertex, counted
/// by their first arc out of `v`. Defined for any digraph.
pub fn vertex_triangle_counts(g: &Digraph) -> Vec<usize> {
    let pred = g.transpose();
    (0..g.order())
        .map(|v| {
            g.out_neighbors(v)
                .map(|a| g.row_and_count(a, &pred, v))
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{cayley_digraph, directed_cycle, ConnectionSet};
    use crate::groups::AbelianGroup;

    /// Brute-force count straight from the definition.
    fn naive(g: &Digraph, u: usize, v: usize) -> usize {
        (0..g.order())
            .filter(|&w| g.has_arc(v, w) && g.has_arc(w, u))
            .count()
    }

    #[test]
    fn three_cycle() {
        let p = triangle_profile(&directed_cycle(3).unwrap()).unwrap();
        assert_eq!(p.summary, vec![1, 1, 1]);
        assert_eq!(
            vertex_triangle_counts(&directed_cycle(3).unwrap()),
            vec![1, 1, 1]
        );
    }

    #[test]
    fn z9_has_arc_with_four() {
        let g = cayley_digraph(&ConnectionSet::cyclic(9, &[1, 7, 3, 5]).unwrap()).unwrap();
        let p = triangle_profile(&g).unwrap();
        let c01 = p.arcs.iter().find(|a| (a.0, a.1) == (0, 1)).unwrap().2;
        assert_eq!(c01, 4);
        assert_eq!(p.max, 4);
        // frozen from an independent enumeration: nine arcs each with 1..=4
        let mut expected = Vec::new();
        for k in 1..=4 {
            expected.extend(vec![k; 9]);
        }
        assert_eq!(p.summary, expected);
    }

    #[test]
    fn z3_squared_profile() {
        let group = AbelianGroup::new(vec![3, 3]).unwrap();
        let s = ConnectionSet::from_tuples(group, &[&[0, 1], &[2, 0], &[1, 1], &[2, 1]]).unwrap();
        let g = cayley_digraph(&s).unwrap();
        let p = triangle_profile(&g).unwrap();
        assert_eq!(p.arcs.len(), 36);
        for &(u, v, c) in &p.arcs {
            assert_eq!(c, naive(&g, u, v));
        }
        assert!(p.max < 4);
        // frozen from an independent enumeration of all 36 arcs: the 9 arcs
        // inside cosets of {(i,0)} close one 3-cycle, the 27 others close three
        let mut expected = vec![1; 9];
        expected.extend(vec![3; 27]);
        assert_eq!(p.summary, expected);
    }

    #[test]
    fn requires_tournament() {
        let c5 = cayley_digraph(&ConnectionSet::cyclic(5, &[1, 4]).unwrap()).unwrap();
        assert!(triangle_profile(&c5).is_err());
    }
}
