//! Exact class counts from the divisor recursion.
//!
//! Write `p - 1 = 2^e · r` with `r` odd. For every divisor `m` of `r` let
//! `c = (p-1)/m`. Going down the divisor lattice from `r`,
//!
//! ```text
//! S(r) = 0
//! S(m) = Σ k_n · c_n      over divisors n of r with m | n, n > m
//! k_m  = (2^(c/2) - S(m)) / c
//! ```
//!
//! `k_m` is the number of classes of size `c`, i.e. of connection sets whose
//! stabilizer in `Z_p^×` is exactly the subgroup of order `m`. The class
//! count is `Σ k_m`. Every division is exact; a remainder is reported as an
//! internal inconsistency.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::groups::{divisors, ensure_odd_prime, is_prime};

/// One row of the table: `φ_p(m) = (k, c)` and the partial sum `S(m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiEntry {
    pub m: u64,
    /// Number of classes of size `c`.
    pub k: BigUint,
    /// Class size `(p-1)/m`.
    pub c: u64,
    pub s: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiTable {
    pub p: u64,
    /// Exponent of 2 in `p - 1`.
    pub two_exponent: u32,
    /// Odd part of `p - 1`.
    pub r: u64,
    /// Rows ordered by ascending `m`.
    pub entries: Vec<PhiEntry>,
}

impl PhiTable {
    pub fn entry(&self, m: u64) -> Option<&PhiEntry> {
        self.entries.iter().find(|e| e.m == m)
    }

    /// `(k, c)` for divisor `m`.
    pub fn phi(&self, m: u64) -> Option<(&BigUint, u64)> {
        self.entry(m).map(|e| (&e.k, e.c))
    }

    pub fn s_value(&self, m: u64) -> Option<&BigUint> {
        self.entry(m).map(|e| &e.s)
    }

    pub fn class_count(&self) -> BigUint {
        self.entries.iter().map(|e| &e.k).sum()
    }

    /// `Σ k_m · c_m`, which must equal `2^((p-1)/2)`.
    pub fn mass(&self) -> BigUint {
        self.entries.iter().map(|e| &e.k * e.c).sum()
    }
}

pub fn phi_table(p: u64) -> Result<PhiTable> {
    ensure_odd_prime(p)?;
    let order = p - 1;
    let two_exponent = order.trailing_zeros();
    let r = order >> two_exponent;
    let divs = divisors(r)?;

    let mut done: BTreeMap<u64, PhiEntry> = BTreeMap::new();
    for &m in divs.iter().rev() {
        let c = order / m;
        if !c.is_multiple_of(2) {
            return Err(Error::InternalInconsistency(format!(
                "class size {c} for m = {m} is odd"
            )));
        }
        let s: BigUint = done
            .values()
            .filter(|e| e.m % m == 0)
            .map(|e| &e.k * e.c)
            .sum();
        let sets = BigUint::one() << (c / 2);
        if s > sets {
            return Err(Error::InternalInconsistency(format!(
                "S({m}) = {s} exceeds 2^{}",
                c / 2
            )));
        }
        let rest = sets - &s;
        let cc = BigUint::from(c);
        if !(&rest % &cc).is_zero() {
            return Err(Error::InternalInconsistency(format!(
                "2^{} - S({m}) = {rest} is not divisible by {c}",
                c / 2
            )));
        }
        done.insert(
            m,
            PhiEntry {
                m,
                k: rest / cc,
                c,
                s,
            },
        );
    }
    Ok(PhiTable {
        p,
        two_exponent,
        r,
        entries: done.into_values().collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub p: u64,
    pub class_count: BigUint,
    pub table: PhiTable,
}

pub fn count(p: u64) -> Result<CountResult> {
    let table = phi_table(p)?;
    let class_count = table.class_count();
    if class_count.is_zero() {
        return Err(Error::InternalInconsistency(format!(
            "no classes computed for p = {p}"
        )));
    }
    Ok(CountResult {
        p,
        class_count,
        table,
    })
}

/// Number of isomorphism classes of vertex-transitive tournaments of order `p`.
pub fn class_count(p: u64) -> Result<BigUint> {
    Ok(count(p)?.class_count)
}

/// Class counts for every odd prime in `p_min..=p_max`, ascending.
pub fn count_table(p_min: u64, p_max: u64) -> Result<Vec<(u64, BigUint)>> {
    if p_min > p_max {
        return invalid(format!("empty range {p_min}..{p_max}"));
    }
    let primes: Vec<u64> = (p_min.max(3)..=p_max).filter(|&p| is_prime(p)).collect();
    primes
        .par_iter()
        .map(|&p| class_count(p).map(|c| (p, c)))
        .collect()
}

/// `p<TAB>count` per line.
pub fn table_to_tsv(rows: &[(u64, BigUint)]) -> String {
    let mut out = String::new();
    for (p, c) in rows {
        let _ = writeln!(out, "{p}\t{c}");
    }
    out
}

/// One `{"p":..,"count":..}` object per line; counts are exact decimal
/// JSON numbers.
pub fn table_to_json_lines(rows: &[(u64, BigUint)]) -> String {
    let mut out = String::new();
    for (p, c) in rows {
        let _ = writeln!(out, "{{\"p\":{p},\"count\":{c}}}");
    }
    out
}
