//! Digraphs stored as per-vertex successor bitsets, with the Cayley and
//! product constructors used throughout the crate.
//!
//! Undirected graphs are symmetric digraphs: an edge `{u, v}` is the pair of
//! arcs `u -> v` and `v -> u`.

mod cayley;
mod families;
mod io;
mod triangles;

pub use cayley::{
    cayley_digraph, coset_condition_witness, morris_coset_condition, validate_tournament_set,
    ConnectionSet,
};
pub use families::{
    cycle, directed_cycle, k_cube, kneser, lexicographic_product, metacirculant, petersen,
    wreath_product,
};
pub use io::{export, parse_graph, ExportFormat};
pub use triangles::{triangle_profile, vertex_triangle_counts, TriangleProfile};

use crate::error::{invalid, Result};

const WORD: usize = 64;

/// A loopless digraph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    words: usize,
    succ: Vec<u64>,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

impl Digraph {
    /// The arcless digraph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        Self {
            n,
            words,
            succ: vec![0; n * words],
        }
    }

    /// Builds a digraph from an arc list. Duplicate arcs are merged.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in arcs {
            g.try_add_arc(u, v)?;
        }
        Ok(g)
    }

    /// Builds a symmetric digraph from an undirected edge list.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.try_add_arc(u, v)?;
            g.try_add_arc(v, u)?;
        }
        Ok(g)
    }

    fn try_add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return invalid(format!(
                "arc ({u},{v}) out of range for {} vertices",
                self.n
            ));
        }
        if u == v {
            return invalid(format!("loop at vertex {u}"));
        }
        self.set(u, v);
        Ok(())
    }

    /// Sets the arc `u -> v`; callers guarantee `u != v` and both in range.
    pub(crate) fn set(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.succ[u * self.words + v / WORD] |= 1 << (v % WORD);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.succ[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.succ[u * self.words..(u + 1) * self.words]
    }

    /// Successors of `u` in ascending order.
    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * WORD + b)
            })
        })
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_arc(u, v)).count()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).map(move |v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.succ.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs().all(|(u, v)| self.has_arc(v, u))
    }

    /// Exactly one arc between every pair of distinct vertices.
    pub fn is_tournament(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.has_arc(u, v) != self.has_arc(v, u)))
    }

    /// The digraph with every vertex `v` renamed to `images[v]`.
    pub fn relabel(&self, images: &[usize]) -> Result<Self> {
        if images.len() != self.n {
            return invalid("relabeling has wrong length");
        }
        let mut seen = vec![false; self.n];
        for &x in images {
            if x >= self.n || std::mem::replace(&mut seen[x], true) {
                return invalid("relabeling is not a bijection");
            }
        }
        let mut g = Self::empty(self.n);
        for (u, v) in self.arcs() {
            g.set(images[u], images[v]);
        }
        Ok(g)
    }

    /// The digraph with every arc reversed.
    pub fn transpose(&self) -> Self {
        let mut t = Self::empty(self.n);
        for (u, v) in self.arcs() {
            t.set(v, u);
        }
        t
    }

    /// `|succ(u) ∩ succ'(v)|` where `other` supplies the second row.
    pub(crate) fn row_and_count(&self, u: usize, other: &Digraph, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(other.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Checks that `images` maps the arcs of `self` exactly onto the arcs of `other`.
    pub fn maps_onto(&self, other: &Digraph, images: &[usize]) -> bool {
        self.n == other.n
            && images.len() == self.n
            && self.arc_count() == other.arc_count()
            && self
                .arcs()
                .all(|(u, v)| other.has_arc(images[u], images[v]))
    }
}
