//! Backtracking isomorphism search shared by [`isomorphic`] and
//! [`automorphisms`].
//!
//! Vertices of the source graph are matched in a fixed order that keeps each
//! new vertex adjacent to as many already-matched vertices as possible.
//! Candidates are tried in ascending index. A candidate must agree with the
//! source vertex on `(out-degree, in-degree, directed 3-cycles through it)`
//! and, against every matched vertex, on both arc directions and on the
//! number of directed 3-cycles closing each ordered pair.

use std::ops::ControlFlow;

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};
use crate::graphs::{vertex_triangle_counts, Digraph};

/// Largest vertex count for full automorphism enumeration unless overridden.
pub const DEFAULT_AUT_CAP: usize = 16;

/// Enumeration stops with a size-limit error beyond this many automorphisms.
pub const MAX_GROUP_ORDER: usize = 1 << 20;

struct Side<'a> {
    g: &'a Digraph,
    invariant: Vec<(usize, usize, usize)>,
    // pair[u * n + v]: number of w with v -> w -> u
    pair: Vec<u32>,
}

impl<'a> Side<'a> {
    fn new(g: &'a Digraph) -> Self {
        let n = g.order();
        let tri = vertex_triangle_counts(g);
        let invariant = (0..n)
            .map(|v| (g.out_degree(v), g.in_degree(v), tri[v]))
            .collect();
        let pred = g.transpose();
        let mut pair = vec![0u32; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    pair[u * n + v] = g.row_and_count(v, &pred, u) as u32;
                }
            }
        }
        Self { g, invariant, pair }
    }

    fn sorted_invariants(&self) -> Vec<(usize, usize, usize)> {
        let mut s = self.invariant.clone();
        s.sort_unstable();
        s
    }
}

struct Matcher<'a> {
    src: Side<'a>,
    dst: Side<'a>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

const UNMAPPED: usize = usize::MAX;

impl<'a> Matcher<'a> {
    /// `None` when cheap invariants already rule out an isomorphism.
    fn new(g: &'a Digraph, h: &'a Digraph) -> Option<Self> {
        if g.order() != h.order() || g.arc_count() != h.arc_count() {
            return None;
        }
        let src = Side::new(g);
        let dst = if std::ptr::eq(g, h) {
            Side {
                g: h,
                invariant: src.invariant.clone(),
                pair: src.pair.clone(),
            }
        } else {
            Side::new(h)
        };
        if src.sorted_invariants() != dst.sorted_invariants() {
            return None;
        }
        let n = g.order();
        Some(Self {
            order: match_order(g),
            src,
            dst,
            map: vec![UNMAPPED; n],
            used: vec![false; n],
        })
    }

    fn feasible(&self, depth: usize, x: usize, y: usize) -> bool {
        if self.used[y] || self.src.invariant[x] != self.dst.invariant[y] {
            return false;
        }
        let n = self.src.g.order();
        self.order[..depth].iter().all(|&u| {
            let hu = self.map[u];
            self.src.g.has_arc(u, x) == self.dst.g.has_arc(hu, y)
                && self.src.g.has_arc(x, u) == self.dst.g.has_arc(y, hu)
                && self.src.pair[u * n + x] == self.dst.pair[hu * n + y]
                && self.src.pair[x * n + u] == self.dst.pair[y * n + hu]
        })
    }

    fn search<F>(&mut self, depth: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = self.src.g.order();
        if depth == n {
            return visit(&self.map);
        }
        let x = self.order[depth];
        for y in 0..n {
            if !self.feasible(depth, x, y) {
                continue;
            }
            self.map[x] = y;
            self.used[y] = true;
            let flow = self.search(depth + 1, visit);
            self.used[y] = false;
            self.map[x] = UNMAPPED;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Greedy order: next is the unplaced vertex with the most arcs (either
/// direction) to placed vertices, ties broken by lowest index.
fn match_order(g: &Digraph) -> Vec<usize> {
    let n = g.order();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], std::cmp::Reverse(v)))
            .expect("vertices remain");
        placed[next] = true;
        order.push(next);
        for w in 0..n {
            if !placed[w] {
                links[w] += g.has_arc(next, w) as usize + g.has_arc(w, next) as usize;
            }
        }
    }
    order
}

/// An isomorphism `π` from `g` to `h` (`u -> v` in `g` iff `π(u) -> π(v)` in
/// `h`), if one exists. The returned witness is verified arc by arc.
pub fn isomorphic(g: &Digraph, h: &Digraph) -> Option<Permutation> {
    let mut m = Matcher::new(g, h)?;
    let mut found = None;
    let _ = m.search(0, &mut |map| {
        found = Some(map.to_vec());
        ControlFlow::Break(())
    });
    let images = found?;
    assert!(
        g.maps_onto(h, &images),
        "isomorphism search returned a map that does not preserve arcs"
    );
    Some(Permutation::from_images_unchecked(images))
}

/// The full automorphism group of `g`, for `g.order() <= cap`.
pub fn automorphisms(g: &Digraph, cap: usize) -> Result<PermGroup> {
    let n = g.order();
    if n > cap {
        return Err(Error::SizeLimit {
            what: "vertex count for automorphism enumeration",
            actual: n,
            cap,
        });
    }
    let mut m = Matcher::new(g, g).expect("a graph matches itself");
    let mut elems = Vec::new();
    let mut overflow = false;
    let _ = m.search(0, &mut |map| {
        if elems.len() == MAX_GROUP_ORDER {
            overflow = true;
            return ControlFlow::Break(());
        }
        elems.push(Permutation::from_images_unchecked(map.to_vec()));
        ControlFlow::Continue(())
    });
    if overflow {
        return Err(Error::SizeLimit {
            what: "automorphism group order",
            actual: MAX_GROUP_ORDER + 1,
            cap: MAX_GROUP_ORDER,
        });
    }
    Ok(PermGroup::from_sorted_unchecked(n, elems))
}
