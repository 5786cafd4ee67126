//! Finite abelian groups given as products of cyclic factors, and the unit
//! groups `Z_n^×` with their cyclic subgroups and cosets.
//!
//! Residues are always stored canonically in `[0, n)`. Signed representatives
//! in `-(n-1)/2..=(n-1)/2` are only produced for display.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{invalid, Result};

/// Direct product `Z_{m_0} × Z_{m_1} × ...` of cyclic groups.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    moduli: Vec<u64>,
    order: usize,
}

/// A residue tuple, one coordinate per modulus of its group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [x] = self.coords.as_slice() {
            return write!(f, "{x}");
        }
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl AbelianGroup {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() {
            return invalid("a group needs at least one cyclic factor");
        }
        if let Some(m) = moduli.iter().find(|&&m| m < 2) {
            return invalid(format!("modulus {m} is smaller than 2"));
        }
        let order = moduli
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(usize::try_from(m).ok()?));
        match order {
            Some(order) => Ok(Self { moduli, order }),
            None => invalid("group order overflows"),
        }
    }

    /// The cyclic group `Z_n`.
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.moduli.len()],
        }
    }

    /// Builds an element, reducing each coordinate modulo its factor.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.moduli.len() {
            return invalid(format!(
                "element has {} coordinates, group has {} factors",
                coords.len(),
                self.moduli.len()
            ));
        }
        let coords = coords
            .iter()
            .zip(&self.moduli)
            .map(|(&c, &m)| c.rem_euclid(m as i64) as u64)
            .collect();
        Ok(GroupElement { coords })
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.coords.len() == self.moduli.len() && x.coords.iter().zip(&self.moduli).all(|(c, m)| c < m)
    }

    /// Mixed-radix rank of `x`; the first factor is the most significant digit.
    pub fn index_of(&self, x: &GroupElement) -> usize {
        x.coords
            .iter()
            .zip(&self.moduli)
            .fold(0usize, |acc, (&c, &m)| acc * m as usize + c as usize)
    }

    /// Inverse of [`index_of`](Self::index_of).
    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut coords = vec![0; self.moduli.len()];
        for (slot, &m) in coords.iter_mut().zip(&self.moduli).rev() {
            *slot = (index % m as usize) as u64;
            index /= m as usize;
        }
        GroupElement { coords }
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(|i| self.element_at(i))
    }

    pub fn add(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        let coords = x
            .coords
            .iter()
            .zip(&y.coords)
            .zip(&self.moduli)
            .map(|((a, b), m)| (a + b) % m)
            .collect();
        GroupElement { coords }
    }

    pub fn neg(&self, x: &GroupElement) -> GroupElement {
        let coords = x
            .coords
            .iter()
            .zip(&self.moduli)
            .map(|(a, m)| (m - a) % m)
            .collect();
        GroupElement { coords }
    }

    pub fn sub(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.add(x, &self.neg(y))
    }

    /// `k · x`, computed componentwise.
    pub fn scale(&self, k: u64, x: &GroupElement) -> GroupElement {
        let coords = x
            .coords
            .iter()
            .zip(&self.moduli)
            .map(|(&a, &m)| mul_mod(k % m, a, m))
            .collect();
        GroupElement { coords }
    }

    /// Checks that `set` is a subgroup: non-empty, contains the identity and is
    /// closed under addition. In a finite group this implies closure under
    /// negation.
    pub fn is_subgroup(&self, set: &BTreeSet<GroupElement>) -> bool {
        if !set.contains(&self.identity()) || !set.iter().all(|x| self.contains(x)) {
            return false;
        }
        set.iter()
            .all(|x| set.iter().all(|y| set.contains(&self.add(x, y))))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.moduli.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "Z{m}")?;
        }
        Ok(())
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    let mut b = base % n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, b, n);
        }
        b = mul_mod(b, b, n);
        exp >>= 1;
    }
    acc
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Checks that `p` is an odd prime.
pub fn ensure_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return invalid(format!("{p} is not an odd prime"));
    }
    Ok(())
}

/// Euler's totient by trial division.
pub fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            while n.is_multiple_of(d) {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Sorted residues in `[1, n)` coprime to `n`.
pub fn units(n: u64) -> Result<Vec<u64>> {
    if n < 2 {
        return invalid(format!("modulus {n} is smaller than 2"));
    }
    Ok((1..n).filter(|&a| gcd(a, n) == 1).collect())
}

fn ensure_unit(a: u64, n: u64) -> Result<()> {
    if n < 2 {
        return invalid(format!("modulus {n} is smaller than 2"));
    }
    if gcd(a % n, n) != 1 {
        return invalid(format!("{a} is not a unit modulo {n}"));
    }
    Ok(())
}

/// Multiplicative order of the unit `a` modulo `n`.
pub fn mult_order(a: u64, n: u64) -> Result<u64> {
    ensure_unit(a, n)?;
    let a = a % n;
    let mut x = a;
    let mut t = 1;
    while x != 1 % n {
        x = mul_mod(x, a, n);
        t += 1;
    }
    Ok(t)
}

/// The cyclic subgroup `<a>` of `Z_n^×`, sorted.
pub fn cyclic_subgroup(a: u64, n: u64) -> Result<Vec<u64>> {
    ensure_unit(a, n)?;
    let a = a % n;
    let mut out = vec![1 % n];
    let mut x = a;
    while x != 1 % n {
        out.push(x);
        x = mul_mod(x, a, n);
    }
    out.sort_unstable();
    Ok(out)
}

/// Partitions `Z_n^×` into the cosets `b·H` of the subgroup `H`.
///
/// Each coset is sorted and the cosets are ordered by their smallest element.
pub fn left_cosets(subgroup: &[u64], n: u64) -> Result<Vec<Vec<u64>>> {
    let units = units(n)?;
    let h: BTreeSet<u64> = subgroup.iter().map(|&x| x % n).collect();
    if h.is_empty() || !h.contains(&(1 % n)) {
        return invalid("subgroup must contain 1");
    }
    if h.iter().any(|&x| gcd(x, n) != 1) {
        return invalid("subgroup contains a non-unit");
    }
    if h.iter()
        .any(|&x| h.iter().any(|&y| !h.contains(&mul_mod(x, y, n))))
    {
        return invalid("set is not closed under multiplication");
    }
    let mut seen = BTreeSet::new();
    let mut cosets = Vec::with_capacity(units.len() / h.len());
    for &b in &units {
        if seen.contains(&b) {
            continue;
        }
        let mut coset: Vec<u64> = h.iter().map(|&x| mul_mod(b, x, n)).collect();
        coset.sort_unstable();
        seen.extend(coset.iter().copied());
        cosets.push(coset);
    }
    Ok(cosets)
}

/// Positive divisors of `r` in increasing order.
pub fn divisors(r: u64) -> Result<Vec<u64>> {
    if r < 1 {
        return invalid("divisors are only defined for r >= 1");
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= r {
        if r.is_multiple_of(d) {
            small.push(d);
            if d * d != r {
                large.push(r / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Signed representative of `x mod n` in `-(n-1)/2..=n/2`.
pub fn signed_residue(x: u64, n: u64) -> i64 {
    let x = x % n;
    if x > n / 2 {
        x as i64 - n as i64
    } else {
        x as i64
    }
}
