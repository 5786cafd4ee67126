//! Explicit enumeration of Cayley tournament connection sets on `Z_p`.
//!
//! A tournament connection set picks exactly one of `i`, `-i` for every
//! `i = 1..=(p-1)/2`, so it is a bitmask of width `(p-1)/2`: bit `i-1` set
//! means `i ∈ S`, clear means `p-i ∈ S`. The unit group `Z_p^×` acts on these
//! masks by multiplication, and its orbits are the isomorphism classes of
//! vertex-transitive tournaments on `p` vertices.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graphs::{cayley_digraph, ConnectionSet, Digraph};
use crate::groups::{self, ensure_odd_prime, mul_mod};

/// Default cap on the mask width `(p-1)/2` for explicit enumeration.
pub const DEFAULT_BUDGET_BITS: u32 = 30;

const CHUNK: u64 = 1 << 12;

/// A tournament connection set on `Z_p` in `±` bitmask form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetMask {
    p: u64,
    bits: u64,
}

fn half(p: u64) -> u32 {
    ((p - 1) / 2) as u32
}

impl SetMask {
    pub fn new(p: u64, bits: u64) -> Result<Self> {
        ensure_odd_prime(p)?;
        if half(p) > 63 || bits >> half(p) != 0 {
            return invalid(format!("mask {bits:#b} is too wide for p = {p}"));
        }
        Ok(Self { p, bits })
    }

    /// Encodes a set of residues; it must be a valid tournament set.
    pub fn from_residues(p: u64, residues: &[i64]) -> Result<Self> {
        ensure_odd_prime(p)?;
        if half(p) > 63 {
            return invalid(format!("p = {p} is too large for a mask"));
        }
        let h = half(p) as u64;
        let mut chosen = vec![None; h as usize + 1];
        for &r in residues {
            let x = r.rem_euclid(p as i64) as u64;
            if x == 0 {
                return Err(Error::InvalidConnectionSet("0 is in the set".into()));
            }
            let (i, positive) = if x <= h { (x, true) } else { (p - x, false) };
            match chosen[i as usize] {
                Some(prev) if prev != positive => {
                    return Err(Error::InvalidConnectionSet(format!(
                        "both {i} and -{i} are in the set"
                    )))
                }
                _ => chosen[i as usize] = Some(positive),
            }
        }
        let mut bits = 0u64;
        for i in 1..=h {
            match chosen[i as usize] {
                Some(true) => bits |= 1 << (i - 1),
                Some(false) => {}
                None => {
                    return Err(Error::InvalidConnectionSet(format!(
                        "neither {i} nor -{i} is in the set"
                    )))
                }
            }
        }
        Ok(Self { p, bits })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Members as residues in `[1, p)`, ascending.
    pub fn residues(&self) -> Vec<u64> {
        let h = half(self.p) as u64;
        let mut out: Vec<u64> = (1..=h)
            .map(|i| {
                if self.bits >> (i - 1) & 1 == 1 {
                    i
                } else {
                    self.p - i
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Members as signed representatives `x_1, ..., x_{(p-1)/2}`, `x_i = ±i`.
    pub fn signed(&self) -> Vec<i64> {
        (1..=half(self.p) as i64)
            .map(|i| if self.bits >> (i - 1) & 1 == 1 { i } else { -i })
            .collect()
    }

    pub fn connection_set(&self) -> ConnectionSet {
        let r: Vec<i64> = self.residues().iter().map(|&x| x as i64).collect();
        ConnectionSet::cyclic(self.p, &r).expect("residues are in range")
    }

    pub fn tournament(&self) -> Digraph {
        cayley_digraph(&self.connection_set()).expect("0 is never a member")
    }
}

impl fmt::Display for SetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, x) in self.residues().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Multiplication by a fixed unit, tabulated on `±` positions.
///
/// `a·i ≡ ±j (mod p)` with `j ∈ 1..=(p-1)/2`; bit `i-1` moves to bit `j-1`,
/// inverted when the sign is negative.
#[derive(Debug, Clone)]
pub struct UnitAction {
    a: u64,
    target: Vec<u8>,
    flip: u64,
}

impl UnitAction {
    pub fn new(p: u64, a: u64) -> Result<Self> {
        ensure_odd_prime(p)?;
        if a.is_multiple_of(p) {
            return invalid(format!("{a} is not a unit modulo {p}"));
        }
        let h = half(p) as u64;
        let mut target = Vec::with_capacity(h as usize);
        let mut flip = 0u64;
        for i in 1..=h {
            let y = mul_mod(a % p, i, p);
            let (j, negative) = if y <= h { (y, false) } else { (p - y, true) };
            target.push((j - 1) as u8);
            if negative {
                flip |= 1 << (i - 1);
            }
        }
        Ok(Self {
            a: a % p,
            target,
            flip,
        })
    }

    pub fn unit(&self) -> u64 {
        self.a
    }

    #[inline]
    pub fn apply_bits(&self, bits: u64) -> u64 {
        let b = bits ^ self.flip;
        let mut out = 0u64;
        for (i, &j) in self.target.iter().enumerate() {
            out |= (b >> i & 1) << j;
        }
        out
    }
}

fn check_budget(p: u64, budget_bits: u32) -> Result<()> {
    ensure_odd_prime(p)?;
    let width = (p - 1) / 2;
    if width > budget_bits as u64 || width > 63 {
        return Err(Error::SizeLimit {
            what: "mask width (p-1)/2",
            actual: width as usize,
            cap: budget_bits.min(63) as usize,
        });
    }
    Ok(())
}

/// Every tournament connection set on `Z_p`, in ascending mask order.
pub fn all_sets(p: u64, budget_bits: u32) -> Result<impl Iterator<Item = SetMask>> {
    check_budget(p, budget_bits)?;
    Ok((0..1u64 << half(p)).map(move |bits| SetMask { p, bits }))
}

/// The mask of `aS`.
pub fn act(a: u64, s: SetMask) -> Result<SetMask> {
    let action = UnitAction::new(s.p, a)?;
    Ok(SetMask {
        p: s.p,
        bits: action.apply_bits(s.bits),
    })
}

fn unit_actions(p: u64) -> Vec<UnitAction> {
    (1..p)
        .map(|a| UnitAction::new(p, a).expect("p is an odd prime"))
        .collect()
}

/// One orbit of the unit action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceClass {
    /// Smallest mask in the orbit.
    pub representative: SetMask,
    pub size: u64,
    /// The orbit in ascending mask order, when requested.
    pub members: Option<Vec<SetMask>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub p: u64,
    pub total_sets: u64,
    /// Sorted by representative.
    pub classes: Vec<EquivalenceClass>,
}

#[derive(Serialize)]
struct ClassLine {
    p: u64,
    rep: Vec<u64>,
    size: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    members: Option<Vec<Vec<u64>>>,
}

impl ClassReport {
    /// One JSON object per class: `{"p":..,"rep":[..],"size":..}` plus
    /// `"members"` when they were collected.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.classes {
            let line = ClassLine {
                p: self.p,
                rep: c.representative.residues(),
                size: c.size,
                members: c
                    .members
                    .as_ref()
                    .map(|m| m.iter().map(SetMask::residues).collect()),
            };
            out.push_str(&serde_json::to_string(&line).expect("plain data serializes"));
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct EnumerationOptions {
    pub budget_bits: u32,
    pub with_members: bool,
    /// Worker threads; 0 uses the global pool.
    pub workers: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            budget_bits: DEFAULT_BUDGET_BITS,
            with_members: false,
            workers: 0,
        }
    }
}

/// Orbit of `s` under all units, ascending and deduplicated.
pub fn orbit_of(s: SetMask) -> Vec<SetMask> {
    orbit_with(&unit_actions(s.p), s)
}

fn orbit_with(actions: &[UnitAction], s: SetMask) -> Vec<SetMask> {
    let mut out: Vec<SetMask> = actions
        .iter()
        .map(|a| SetMask {
            p: s.p,
            bits: a.apply_bits(s.bits),
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `Some(orbit size)` when `bits` is the smallest mask of its orbit.
fn representative_size(actions: &[UnitAction], bits: u64) -> Option<u64> {
    let mut stabilizer = 0u64;
    for a in actions {
        let img = a.apply_bits(bits);
        if img < bits {
            return None;
        }
        stabilizer += (img == bits) as u64;
    }
    Some(actions.len() as u64 / stabilizer)
}

/// The orbits of `Z_p^×` on tournament connection sets.
///
/// A mask is reported as a representative when no unit maps it to a smaller
/// mask; its class size is `(p-1) / |stabilizer|`. The mask range is split into
/// chunks processed in parallel and concatenated in order, so the report does
/// not depend on the number of workers.
pub fn equivalence_classes(p: u64, opts: &EnumerationOptions) -> Result<ClassReport> {
    check_budget(p, opts.budget_bits)?;
    let actions = unit_actions(p);
    let total = 1u64 << half(p);
    let scan = || -> Vec<(u64, u64)> {
        (0..total.div_ceil(CHUNK))
            .into_par_iter()
            .flat_map_iter(|c| {
                let actions = &actions;
                (c * CHUNK..((c + 1) * CHUNK).min(total))
                    .filter_map(move |bits| representative_size(actions, bits).map(|s| (bits, s)))
            })
            .collect()
    };
    let reps = if opts.workers == 0 {
        scan()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("cannot start workers: {e}")))?
            .install(scan)
    };
    let classes = reps
        .into_iter()
        .map(|(bits, size)| {
            let representative = SetMask { p, bits };
            let members = opts
                .with_members
                .then(|| orbit_with(&actions, representative));
            EquivalenceClass {
                representative,
                size,
                members,
            }
        })
        .collect::<Vec<_>>();
    let sum: u64 = classes.iter().map(|c| c.size).sum();
    if sum != total {
        return Err(Error::InternalInconsistency(format!(
            "class sizes sum to {sum}, expected {total}"
        )));
    }
    Ok(ClassReport {
        p,
        total_sets: total,
        classes,
    })
}

/// All `a`-invariant connection sets (`aS = S`), ascending.
///
/// When `<a>` has even order it contains `-1` and no set is invariant.
/// Otherwise the cosets of `<a>` in `Z_p^×` come in pairs `C, -C`, and the
/// invariant sets are exactly the unions picking one coset from every pair.
pub fn invariant_sets(p: u64, a: u64) -> Result<Vec<SetMask>> {
    ensure_odd_prime(p)?;
    if half(p) > 63 {
        return invalid(format!("p = {p} is too large for a mask"));
    }
    let sub = groups::cyclic_subgroup(a, p)?;
    if sub.len() % 2 == 0 {
        return Ok(Vec::new());
    }
    let cosets = groups::left_cosets(&sub, p)?;
    // keep the coset of each pair whose smallest element is smaller
    let firsts: Vec<&Vec<u64>> = cosets
        .iter()
        .filter(|c| {
            let neg_min = c
                .iter()
                .map(|&x| p - x)
                .min()
                .expect("cosets are non-empty");
            c[0] < neg_min
        })
        .collect();
    if firsts.len() * 2 != cosets.len() {
        return Err(Error::InternalInconsistency(
            "cosets do not pair up under negation".into(),
        ));
    }
    let h = half(p) as u64;
    let coset_bits = |c: &Vec<u64>, positive: bool| -> u64 {
        c.iter()
            .map(|&x| if positive { x } else { p - x })
            .filter(|&y| y <= h)
            .fold(0u64, |acc, y| acc | 1 << (y - 1))
    };
    if firsts.len() > 30 {
        return invalid("too many invariant sets to list");
    }
    let mut out: Vec<SetMask> = (0..1u64 << firsts.len())
        .map(|choice| {
            let bits = firsts.iter().enumerate().fold(0u64, |acc, (k, c)| {
                acc | coset_bits(c, choice >> k & 1 == 0)
            });
            SetMask { p, bits }
        })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Class count by Burnside's lemma.
///
/// A unit of odd order `d` fixes `2^((p-1)/(2d))` sets and a unit of even
/// order fixes none; the count is the average over all `p - 1` units.
pub fn burnside_count(p: u64) -> Result<BigUint> {
    ensure_odd_prime(p)?;
    let mut total = BigUint::zero();
    for a in 1..p {
        let d = groups::mult_order(a, p)?;
        if d % 2 == 1 {
            total += BigUint::one() << ((p - 1) / (2 * d));
        }
    }
    let units = BigUint::from(p - 1);
    if !(&total % &units).is_zero() {
        return Err(Error::InternalInconsistency(format!(
            "fixed-point total {total} is not divisible by {units}"
        )));
    }
    Ok(total / units)
}

/// Some unit `a` with `aS = S'` on `Z_n`, trying every unit in ascending order.
pub fn find_unit_multiplier(s: &ConnectionSet, target: &ConnectionSet) -> Result<Option<u64>> {
    let group = s.group();
    if group.moduli().len() != 1 || target.group() != group {
        return invalid("unit multipliers need two subsets of the same cyclic group");
    }
    let n = group.moduli()[0];
    for a in groups::units(n)? {
        if s.len() == target.len()
            && s.members()
                .iter()
                .all(|x| target.contains(&group.scale(a, x)))
        {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Signed rendering used in listings, e.g. `(1 -2 3 4 5)`.
pub fn signed_tuple(s: &SetMask) -> String {
    let parts: Vec<String> = s.signed().iter().map(i64::to_string).collect();
    format!("({})", parts.join(" "))
}
