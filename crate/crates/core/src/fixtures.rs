//! Worked comparisons on composite orders, bundled as reproducible checks.
//!
//! - `Z_25`: two circulants isomorphic to `C5 ≀ C5` whose connection sets are
//!   not related by any unit multiplier.
//! - `Z_9` against `Z_3 × Z_3`: two Cayley tournaments told apart by their
//!   directed 3-cycle counts.
//! - The `Z_3 × Z_3` tournament is nevertheless isomorphic to some Cayley
//!   tournament on `Z_9`.

use std::fmt;

use crate::enumeration::find_unit_multiplier;
use crate::error::Result;
use crate::graphs::{
    cayley_digraph, cycle, triangle_profile, validate_tournament_set, wreath_product, ConnectionSet,
};
use crate::groups::{units, AbelianGroup};
use crate::perm::{isomorphic, Permutation};

pub const Z25_S: [i64; 12] = [1, 4, 5, 6, 9, 11, 14, 16, 19, 20, 21, 24];
pub const Z25_S_PRIME: [i64; 12] = [1, 4, 6, 9, 10, 11, 14, 15, 16, 19, 21, 24];
pub const Z9_S: [i64; 4] = [1, 7, 3, 5];
pub const Z3SQ_S: [[i64; 2]; 4] = [[0, 1], [2, 0], [1, 1], [2, 1]];

pub fn z3_squared_set() -> ConnectionSet {
    let group = AbelianGroup::new(vec![3, 3]).expect("valid moduli");
    let tuples: Vec<&[i64]> = Z3SQ_S.iter().map(|t| t.as_slice()).collect();
    ConnectionSet::from_tuples(group, &tuples).expect("elements of Z3 x Z3")
}

pub fn z9_set() -> ConnectionSet {
    ConnectionSet::cyclic(9, &Z9_S).expect("residues of Z9")
}

#[derive(Debug, Clone)]
pub struct Z25Report {
    /// Units `a` with `a ∈ S'`; any multiplier must be one of these since `1 ∈ S`.
    pub candidates: Vec<u64>,
    pub units_tried: usize,
    pub multiplier: Option<u64>,
    pub s_matches_wreath: Option<Permutation>,
    pub s_prime_matches_wreath: Option<Permutation>,
}

impl Z25Report {
    pub fn passed(&self) -> bool {
        self.multiplier.is_none()
            && self.s_matches_wreath.is_some()
            && self.s_prime_matches_wreath.is_some()
    }
}

impl fmt::Display for Z25Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "candidate multipliers in S' ∩ Z25^x: {:?}",
            self.candidates
        )?;
        match self.multiplier {
            Some(a) => writeln!(f, "unit multiplier found: a = {a}")?,
            None => writeln!(f, "no unit multiplier among {} units", self.units_tried)?,
        }
        let yn = |o: &Option<Permutation>| if o.is_some() { "yes" } else { "no" };
        writeln!(f, "Cay(Z25,S) ≅ C5 wr C5: {}", yn(&self.s_matches_wreath))?;
        write!(
            f,
            "Cay(Z25,S') ≅ C5 wr C5: {}",
            yn(&self.s_prime_matches_wreath)
        )
    }
}

pub fn z25_check() -> Result<Z25Report> {
    let s = ConnectionSet::cyclic(25, &Z25_S)?;
    let s2 = ConnectionSet::cyclic(25, &Z25_S_PRIME)?;
    let group = s.group().clone();
    let candidates = units(25)?
        .into_iter()
        .filter(|&a| s2.contains(&group.scale(a, &group.element(&[1]).expect("in range"))))
        .collect();
    let multiplier = find_unit_multiplier(&s, &s2)?;
    let c5 = cycle(5)?;
    let w = wreath_product(&c5, &c5);
    Ok(Z25Report {
        candidates,
        units_tried: units(25)?.len(),
        multiplier,
        s_matches_wreath: isomorphic(&w, &cayley_digraph(&s)?),
        s_prime_matches_wreath: isomorphic(&w, &cayley_digraph(&s2)?),
    })
}

#[derive(Debug, Clone)]
pub struct TriangleComparison {
    pub z9_max: usize,
    /// An arc of the `Z_9` tournament attaining `z9_max`.
    pub z9_arc: Option<(usize, usize)>,
    pub z3sq_max: usize,
    pub isomorphic: bool,
}

impl TriangleComparison {
    pub fn passed(&self) -> bool {
        self.z9_max == 4 && self.z3sq_max < 4 && !self.isomorphic
    }
}

impl fmt::Display for TriangleComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z9 max arc 3-cycles: {}", self.z9_max)?;
        if let Some((u, v)) = self.z9_arc {
            write!(f, " (arc {u}->{v})")?;
        }
        writeln!(f)?;
        writeln!(f, "Z3xZ3 max arc 3-cycles: {}", self.z3sq_max)?;
        write!(
            f,
            "isomorphic: {}",
            if self.isomorphic { "yes" } else { "no" }
        )
    }
}

pub fn z9_vs_z3_squared() -> Result<TriangleComparison> {
    let g9 = cayley_digraph(&z9_set())?;
    let g33 = cayley_digraph(&z3_squared_set())?;
    let p9 = triangle_profile(&g9)?;
    let p33 = triangle_profile(&g33)?;
    Ok(TriangleComparison {
        z9_max: p9.max,
        z9_arc: p9.argmax(),
        z3sq_max: p33.max,
        isomorphic: isomorphic(&g9, &g33).is_some(),
    })
}

#[derive(Debug, Clone)]
pub struct CyclicMatch {
    pub tournament_sets_tried: usize,
    /// The first tournament set on `Z_9` (ascending residues) that matches.
    pub set: Option<Vec<u64>>,
    pub witness: Option<Permutation>,
}

impl CyclicMatch {
    pub fn passed(&self) -> bool {
        self.set.is_some() && self.witness.is_some()
    }
}

impl fmt::Display for CyclicMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "tournament sets on Z9 tried: {}",
            self.tournament_sets_tried
        )?;
        match (&self.set, &self.witness) {
            (Some(s), Some(w)) => write!(f, "match: S = {s:?}, map = {w}"),
            _ => write!(f, "no Cayley tournament on Z9 matches"),
        }
    }
}

/// Searches every tournament set on `Z_9` for one isomorphic to the
/// `Z_3 × Z_3` tournament.
pub fn z3_squared_on_z9() -> Result<CyclicMatch> {
    let target = cayley_digraph(&z3_squared_set())?;
    let mut tried = 0;
    // one of ±1, ±2, ±3, ±4 each
    for choice in 0u32..16 {
        let residues: Vec<i64> = (1..=4)
            .map(|i| if choice >> (i - 1) & 1 == 1 { i } else { 9 - i })
            .collect();
        let s = ConnectionSet::cyclic(9, &residues)?;
        debug_assert!(validate_tournament_set(&s));
        tried += 1;
        let g = cayley_digraph(&s)?;
        if let Some(pi) = isomorphic(&g, &target) {
            let mut set: Vec<u64> = residues.iter().map(|&x| x as u64).collect();
            set.sort_unstable();
            return Ok(CyclicMatch {
                tournament_sets_tried: tried,
                set: Some(set),
                witness: Some(pi),
            });
        }
    }
    Ok(CyclicMatch {
        tournament_sets_tried: tried,
        set: None,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z25() {
        let r = z25_check().unwrap();
        assert_eq!(r.candidates, vec![1, 4, 6, 9, 11, 14, 16, 19, 21, 24]);
        assert_eq!(r.units_tried, 20);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn z9_triangles() {
        let r = z9_vs_z3_squared().unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.z9_arc, Some((0, 1)));
    }

    #[test]
    fn z3_squared_matches_some_z9_tournament() {
        let r = z3_squared_on_z9().unwrap();
        assert!(r.passed(), "{r}");
        let set = r.set.unwrap();
        let residues: Vec<i64> = set.iter().map(|&x| x as i64).collect();
        let g = cayley_digraph(&ConnectionSet::cyclic(9, &residues).unwrap()).unwrap();
        let target = cayley_digraph(&z3_squared_set()).unwrap();
        assert!(g.maps_onto(&target, r.witness.unwrap().images()));
    }
}
