use super::{cayley_digraph, ConnectionSet, Digraph};
use crate::error::{invalid, Result};
use crate::groups::{gcd, mul_mod, pow_mod};

/// The directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n < 2 {
        return invalid("a directed cycle needs at least 2 vertices");
    }
    Digraph::from_arcs(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// The undirected cycle `C_n = Cay(Z_n, {±1})`.
pub fn cycle(n: usize) -> Result<Digraph> {
    if n < 3 {
        return invalid("a cycle needs at least 3 vertices");
    }
    cayley_digraph(&ConnectionSet::cyclic(n as u64, &[1, -1])?)
}

/// The `k`-cube `Q_k`: bit strings of length `k`, adjacent when they differ in
/// exactly one position.
pub fn k_cube(k: u32) -> Result<Digraph> {
    if !(1..=20).contains(&k) {
        return invalid(format!("cube dimension {k} outside 1..=20"));
    }
    let n = 1usize << k;
    Digraph::from_arcs(
        n,
        (0..n).flat_map(|v| (0..k).map(move |b| (v, v ^ (1 << b)))),
    )
}

/// `J(v, k, i)`: the `k`-subsets of a `v`-set, two distinct subsets adjacent
/// when they share exactly `i` elements.
///
/// Subsets are indexed in lexicographic order of their sorted elements.
pub fn kneser(v: u32, k: u32, i: u32) -> Result<Digraph> {
    if !(v >= k && k >= i && k >= 1) {
        return invalid(format!("J({v},{k},{i}) needs v >= k >= i and k >= 1"));
    }
    if v > 24 {
        return invalid("ground set larger than 24");
    }
    let mut subsets: Vec<u32> = (0u32..1 << v).filter(|s| s.count_ones() == k).collect();
    // lexicographic order of the element lists
    subsets.sort_by_key(|&s| (0..v).filter(|b| s >> b & 1 == 1).collect::<Vec<_>>());
    let n = subsets.len();
    let mut g = Digraph::empty(n);
    for (x, &a) in subsets.iter().enumerate() {
        for (y, &b) in subsets.iter().enumerate() {
            if x != y && (a & b).count_ones() == i {
                g.set(x, y);
            }
        }
    }
    Ok(g)
}

/// The Petersen graph `J(5, 2, 0)`.
pub fn petersen() -> Digraph {
    kneser(5, 2, 0).expect("valid parameters")
}

/// The metacirculant digraph `G(m, n, a, S_0, ..., S_{m-1})`.
///
/// Vertex `v_j^i` (`i ∈ Z_m`, `j ∈ Z_n`) has index `i·n + j`, and there is an
/// arc `v_j^i -> v_h^{i+r}` exactly when `h ∈ j + a^i S_r`. Requires
/// `0 ∉ S_0` and `a^m S_r = S_r` for every `r`.
pub fn metacirculant(m: usize, n: u64, a: u64, sets: &[Vec<u64>]) -> Result<Digraph> {
    if m < 1 || n < 2 {
        return invalid("metacirculant needs m >= 1 and n >= 2");
    }
    if gcd(a % n, n) != 1 {
        return invalid(format!("{a} is not a unit modulo {n}"));
    }
    if sets.len() != m {
        return invalid(format!("expected {m} connection sets, got {}", sets.len()));
    }
    let sets: Vec<Vec<u64>> = sets
        .iter()
        .map(|s| {
            let mut s: Vec<u64> = s.iter().map(|x| x % n).collect();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    if sets[0].contains(&0) {
        return invalid("condition 1 violated: 0 ∈ S_0");
    }
    let am = pow_mod(a, m as u64, n);
    for (r, s) in sets.iter().enumerate() {
        let mut image: Vec<u64> = s.iter().map(|&x| mul_mod(am, x, n)).collect();
        image.sort_unstable();
        if &image != s {
            return invalid(format!("condition 2 violated: a^m S_{r} != S_{r}"));
        }
    }
    let nn = n as usize;
    let mut g = Digraph::empty(m * nn);
    for i in 0..m {
        let ai = pow_mod(a, i as u64, n);
        for (r, s) in sets.iter().enumerate() {
            let target_block = (i + r) % m;
            for j in 0..n {
                for &x in s {
                    let h = (j + mul_mod(ai, x, n)) % n;
                    g.set(i * nn + j as usize, target_block * nn + h as usize);
                }
            }
        }
    }
    Ok(g)
}

/// `G ≀ H`: vertex `(v, w)` has index `v·|H| + w`; `(v,w) -> (v',w')` when
/// `v -> v'`, or `v = v'` and `w -> w'`.
pub fn wreath_product(g: &Digraph, h: &Digraph) -> Digraph {
    let (gn, hn) = (g.order(), h.order());
    let mut out = Digraph::empty(gn * hn);
    for v in 0..gn {
        for w in 0..hn {
            let src = v * hn + w;
            for w2 in h.out_neighbors(w) {
                out.set(src, v * hn + w2);
            }
            for v2 in g.out_neighbors(v) {
                for w2 in 0..hn {
                    out.set(src, v2 * hn + w2);
                }
            }
        }
    }
    out
}

/// Same construction as [`wreath_product`].
pub fn lexicographic_product(g: &Digraph, h: &Digraph) -> Digraph {
    wreath_product(g, h)
}
