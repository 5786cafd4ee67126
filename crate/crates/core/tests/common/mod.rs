// Deterministic checks shared by the property tests and the acceptance gate.
// Each returns Err with a description of the first counterexample.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use vtt_core::enumeration::{act, all_sets, orbit_of, SetMask};
use vtt_core::graphs::{
    self, cayley_digraph, metacirculant, validate_tournament_set, ConnectionSet, Digraph,
};
use vtt_core::groups::{is_prime, mult_order, units, AbelianGroup};
use vtt_core::perm::{automorphisms, burnside_orbit_count, orbits, PermGroup, Permutation};

pub type Check = Result<(), String>;

pub fn odd_primes(max: u64) -> impl Iterator<Item = u64> {
    (3..=max).filter(|&p| is_prime(p))
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `1·S = S` and `a·(b·S) = (ab)·S` for every unit pair and every set.
pub fn action_laws(max_p: u64) -> Check {
    for p in odd_primes(max_p) {
        let us = units(p).unwrap();
        for s in all_sets(p, 30).unwrap() {
            if act(1, s).unwrap() != s {
                return Err(format!("p={p}: 1·{s} != {s}"));
            }
            for &a in &us {
                let as_ = act(a, s).unwrap();
                for &b in &us {
                    let lhs = act(b, as_).unwrap();
                    let rhs = act(a * b % p, s).unwrap();
                    if lhs != rhs {
                        return Err(format!("p={p}, a={a}, b={b}, S={s}: {lhs} != {rhs}"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// All abelian groups of order at most 8, as invariant-factor lists.
pub fn small_groups() -> Vec<AbelianGroup> {
    [
        vec![2],
        vec![3],
        vec![4],
        vec![2, 2],
        vec![5],
        vec![6],
        vec![7],
        vec![8],
        vec![2, 4],
        vec![2, 2, 2],
    ]
    .into_iter()
    .map(|m| AbelianGroup::new(m).unwrap())
    .collect()
}

/// Some subset of `Γ \ {0}` is a tournament set exactly when `|Γ|` is odd,
/// and then there are `2^((|Γ|-1)/2)` of them.
pub fn tournament_parity() -> Check {
    for g in small_groups() {
        let nonzero: Vec<_> = g.elements().filter(|x| *x != g.identity()).collect();
        let mut valid = 0u64;
        for bits in 0u64..(1 << nonzero.len()) {
            let members = (0..nonzero.len())
                .filter(|i| bits >> i & 1 == 1)
                .map(|i| nonzero[i].clone());
            let s = ConnectionSet::new(g.clone(), members).unwrap();
            let ok = validate_tournament_set(&s);
            if ok != cayley_digraph(&s).unwrap().is_tournament() {
                return Err(format!("{g}: validity disagrees with the digraph"));
            }
            valid += ok as u64;
        }
        let n = g.order() as u64;
        let expect = if n % 2 == 1 { 1 << ((n - 1) / 2) } else { 0 };
        if valid != expect {
            return Err(format!("{g}: {valid} tournament sets, expected {expect}"));
        }
    }
    Ok(())
}

/// Every mask on `Z_p` gives a tournament.
pub fn masks_are_tournaments(max_p: u64) -> Check {
    for p in odd_primes(max_p) {
        for s in all_sets(p, 30).unwrap() {
            if !validate_tournament_set(&s.connection_set()) || !s.tournament().is_tournament() {
                return Err(format!("p={p}: {s} is not a tournament set"));
            }
        }
    }
    Ok(())
}

fn random_group(rng: &mut StdRng) -> AbelianGroup {
    loop {
        let factors = rng.gen_range(1..=3);
        let moduli: Vec<u64> = (0..factors).map(|_| rng.gen_range(2..=9)).collect();
        if moduli.iter().product::<u64>() <= 81 {
            return AbelianGroup::new(moduli).unwrap();
        }
    }
}

fn random_set(g: &AbelianGroup, rng: &mut StdRng) -> ConnectionSet {
    let id = g.identity();
    let members: Vec<_> = g
        .elements()
        .filter(|x| *x != id && rng.gen_bool(0.4))
        .collect();
    ConnectionSet::new(g.clone(), members).unwrap()
}

/// Translations `x -> x + t` are automorphisms of `Cay(Γ, S)`, so the
/// digraph is vertex-transitive.
pub fn translations(trials: usize, seed: u64) -> Check {
    let mut rng = rng(seed);
    for _ in 0..trials {
        let g = random_group(&mut rng);
        let s = random_set(&g, &mut rng);
        let d = cayley_digraph(&s).unwrap();
        let mut reached = BTreeSet::new();
        for t in g.elements() {
            let images: Vec<usize> = g.elements().map(|x| g.index_of(&g.add(&x, &t))).collect();
            if !d.maps_onto(&d, &images) {
                return Err(format!("{g}: translation by {t} is not an automorphism"));
            }
            reached.insert(images[0]);
        }
        if reached.len() != g.order() {
            return Err(format!("{g}: translations do not act transitively"));
        }
    }
    Ok(())
}

/// `ρ: v_j^i -> v_{j+1}^i` and `σ: v_j^i -> v_{aj}^{i+1}` preserve the
/// metacirculant.
pub fn metacirculant_maps() -> Check {
    let cases: Vec<(usize, u64, u64, Vec<Vec<u64>>)> = vec![
        (2, 5, 4, vec![vec![1, 4], vec![0]]),
        (2, 7, 6, vec![vec![1, 6], vec![0, 2, 5]]),
        (3, 7, 2, vec![vec![1, 2, 4], vec![0], vec![3, 5, 6]]),
        (2, 5, 2, vec![vec![1, 2, 3, 4], vec![]]),
        (4, 5, 2, vec![vec![1, 4], vec![0, 1], vec![2, 3], vec![]]),
    ];
    for (m, n, a, sets) in cases {
        let g = metacirculant(m, n, a, &sets).map_err(|e| e.to_string())?;
        let nn = n as usize;
        let rho: Vec<usize> = (0..m * nn)
            .map(|v| (v / nn) * nn + (v % nn + 1) % nn)
            .collect();
        let sigma: Vec<usize> = (0..m * nn)
            .map(|v| ((v / nn + 1) % m) * nn + (a as usize * (v % nn)) % nn)
            .collect();
        if !g.maps_onto(&g, &rho) || !g.maps_onto(&g, &sigma) {
            return Err(format!("G({m},{n},{a},{sets:?}): rho or sigma fails"));
        }
    }
    Ok(())
}

/// Vertex-transitive graphs whose automorphism groups stay small.
pub fn sample_graphs() -> Vec<(String, Digraph)> {
    let mut out = vec![
        ("petersen".to_string(), graphs::petersen()),
        ("Q3".to_string(), graphs::k_cube(3).unwrap()),
        ("C6".to_string(), graphs::cycle(6).unwrap()),
        ("K(6,2,0)".to_string(), graphs::kneser(6, 2, 0).unwrap()),
        (
            "Z3xZ3".to_string(),
            cayley_digraph(&vtt_core::fixtures::z3_squared_set()).unwrap(),
        ),
        (
            "Z9".to_string(),
            cayley_digraph(&vtt_core::fixtures::z9_set()).unwrap(),
        ),
    ];
    for (p, bits) in [(7, 0b011), (11, 0b10111), (13, 0b100101)] {
        out.push((
            format!("Z{p}:{bits}"),
            SetMask::new(p, bits).unwrap().tournament(),
        ));
    }
    out
}

/// `|Γ_v| · |v^Γ| = |Γ|` for every vertex, and stabilizers of points in one
/// orbit are conjugate.
pub fn orbit_stabilizer() -> Check {
    for (name, g) in sample_graphs() {
        let aut = automorphisms(&g, 16).map_err(|e| format!("{name}: {e}"))?;
        let stab0 = aut.stabilizer(0);
        for v in 0..g.order() {
            let stab = aut.stabilizer(v);
            if stab.order() * aut.orbit(v).len() != aut.order() {
                return Err(format!("{name}: orbit-stabilizer fails at {v}"));
            }
            if let Some(x) = aut.elements().iter().find(|x| x.apply(0) == v) {
                if !stab0.conjugate_by(x).same_elements(&stab) {
                    return Err(format!(
                        "{name}: stabilizers of 0 and {v} are not conjugate"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn random_perm(n: usize, rng: &mut StdRng) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::new(images).unwrap()
}

/// Orbit partition size agrees with the Burnside average on random groups.
pub fn burnside_random(trials: usize, seed: u64) -> Check {
    let mut rng = rng(seed);
    for t in 0..trials {
        let n = rng.gen_range(1..=7);
        let gens: Vec<Permutation> = (0..rng.gen_range(1..=3))
            .map(|_| {
                // sparse generators keep orbits interesting
                let mut images: Vec<usize> = (0..n).collect();
                let k = rng.gen_range(0..=n);
                let mut idx: Vec<usize> = (0..n).collect();
                idx.shuffle(&mut rng);
                let moved = &idx[..k];
                let mut targets = moved.to_vec();
                targets.shuffle(&mut rng);
                for (a, b) in moved.iter().zip(&targets) {
                    images[*a] = *b;
                }
                Permutation::new(images).unwrap()
            })
            .collect();
        let gens = if t % 5 == 0 {
            vec![random_perm(n, &mut rng)]
        } else {
            gens
        };
        let group = PermGroup::generate(n, &gens, 5040).map_err(|e| e.to_string())?;
        let by_orbits = orbits(&group, n).unwrap().len();
        let by_burnside = burnside_orbit_count(&group, n).map_err(|e| e.to_string())?;
        if by_orbits != by_burnside {
            return Err(format!(
                "trial {t}: {by_orbits} orbits vs Burnside {by_burnside}"
            ));
        }
    }
    Ok(())
}

/// `bS = S` with `a ∈ <b>` implies `aS = S`.
pub fn invariance_descends(max_p: u64) -> Check {
    for p in odd_primes(max_p) {
        let us = units(p).unwrap();
        for s in all_sets(p, 30).unwrap() {
            let fixed: Vec<u64> = us
                .iter()
                .copied()
                .filter(|&b| act(b, s).unwrap() == s)
                .collect();
            for &b in &fixed {
                let mut a = b;
                loop {
                    if act(a, s).unwrap() != s {
                        return Err(format!("p={p}: {s} fixed by {b} but not by {a}"));
                    }
                    a = a * b % p;
                    if a == b {
                        break;
                    }
                }
            }
        }
    }
    Ok(())
}

/// A unit of even order fixes no tournament set; one of odd order `d` fixes
/// `2^((p-1)/(2d))`.
pub fn invariant_set_law(max_p: u64) -> Check {
    for p in odd_primes(max_p) {
        for a in units(p).unwrap() {
            let d = mult_order(a, p).unwrap();
            let got = vtt_core::enumeration::invariant_sets(p, a).unwrap().len() as u64;
            let expect = if d.is_multiple_of(2) {
                0
            } else {
                1 << ((p - 1) / (2 * d))
            };
            if got != expect {
                return Err(format!(
                    "p={p}, a={a}: {got} invariant sets, expected {expect}"
                ));
            }
        }
    }
    Ok(())
}

/// Unit-equivalence of masks agrees with isomorphism of the tournaments.
pub fn equivalent_iff_isomorphic(s: SetMask, t: SetMask) -> Check {
    let equivalent = orbit_of(s).contains(&t);
    let iso = vtt_core::perm::isomorphic(&s.tournament(), &t.tournament());
    if let Some(pi) = &iso {
        if !s.tournament().maps_onto(&t.tournament(), pi.images()) {
            return Err(format!("{s} vs {t}: bad witness"));
        }
    }
    if equivalent != iso.is_some() {
        return Err(format!(
            "{s} vs {t}: equivalent={equivalent}, isomorphic={}",
            iso.is_some()
        ));
    }
    Ok(())
}

/// A random relabeling of a tournament has the same sorted triangle profile.
pub fn triangle_profile_relabel(trials: usize, seed: u64) -> Check {
    let mut rng = rng(seed);
    for _ in 0..trials {
        let p = [5u64, 7, 11, 13, 17][rng.gen_range(0..5)];
        let bits = rng.gen_range(0..1u64 << ((p - 1) / 2));
        let g = SetMask::new(p, bits).unwrap().tournament();
        let pi = random_perm(g.order(), &mut rng);
        let h = g.relabel(pi.images()).unwrap();
        let a = graphs::triangle_profile(&g).unwrap();
        let b = graphs::triangle_profile(&h).unwrap();
        if a.summary != b.summary {
            return Err(format!("p={p}, bits={bits}: profile changed under {pi}"));
        }
    }
    Ok(())
}
