//! Finite abelian groups as tuples of cyclic moduli, with divisor tuples,
//! gcd-sets and the Cayley graphs built from them.
//!
//! Groups are kept in a canonical form: the 2-power cyclic factors come
//! first (largest exponent first), then the odd prime-power factors in
//! ascending order. Cyclic factors of order 1 are dropped, so the trivial
//! group has an empty moduli tuple. Componentwise gcd follows the
//! convention `gcd(0, n) = n`, which makes the gcd of the zero element the
//! moduli tuple itself.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::integer::{gcd, lcm};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Default cap on group order; exhaustive element enumeration stays
/// tractable below it.
pub const DEFAULT_MAX_ORDER: u64 = 1_000_000;

fn prime_power_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// A finite abelian group `Z_{m_1} + ... + Z_{m_k}` in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Group {
    moduli: Vec<u64>,
    two_part_count: usize,
    strides: Vec<u64>,
    order: u64,
}

impl Group {
    /// Builds the canonical form of the group with the given cyclic moduli,
    /// under the default order cap.
    pub fn new(moduli: &[u64]) -> Result<Group> {
        Group::with_max_order(moduli, DEFAULT_MAX_ORDER)
    }

    /// Like [`Group::new`] with an explicit order cap.
    pub fn with_max_order(moduli: &[u64], max_order: u64) -> Result<Group> {
        let mut order: u128 = 1;
        for &m in moduli {
            if m == 0 {
                return Err(Error::ZeroModulus);
            }
            order *= m as u128;
            if order > max_order as u128 {
                return Err(Error::OrderCap { order, cap: max_order });
            }
        }
        let mut twos: Vec<u64> = Vec::new();
        let mut odds: Vec<u64> = Vec::new();
        for &m in moduli {
            for (p, e) in prime_power_factors(m) {
                let pp = p.pow(e);
                if p == 2 {
                    twos.push(pp);
                } else {
                    odds.push(pp);
                }
            }
        }
        twos.sort_unstable_by(|a, b| b.cmp(a));
        odds.sort_unstable();
        let two_part_count = twos.len();
        let canonical: Vec<u64> = twos.into_iter().chain(odds).collect();
        let mut strides = vec![1u64; canonical.len()];
        for i in (0..canonical.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * canonical[i + 1];
        }
        Ok(Group {
            order: order as u64,
            two_part_count,
            strides,
            moduli: canonical,
        })
    }

    /// Parses a literal like `"Z4xZ2xZ3"` (case-insensitive) and
    /// canonicalizes it.
    pub fn parse(literal: &str) -> Result<Group> {
        Group::parse_with_max_order(literal, DEFAULT_MAX_ORDER)
    }

    /// Like [`Group::parse`] with an explicit order cap.
    pub fn parse_with_max_order(literal: &str, max_order: u64) -> Result<Group> {
        let bad = || Error::GroupLiteral(literal.to_string());
        let mut moduli = Vec::new();
        for part in literal.split(['x', 'X']) {
            let part = part.trim();
            let digits = part
                .strip_prefix('Z')
                .or_else(|| part.strip_prefix('z'))
                .ok_or_else(bad)?;
            let m: u64 = digits.parse().map_err(|_| bad())?;
            if m == 0 {
                return Err(bad());
            }
            moduli.push(m);
        }
        if moduli.is_empty() {
            return Err(bad());
        }
        Group::with_max_order(&moduli, max_order)
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    /// Number of leading 2-power factors.
    pub fn two_part_count(&self) -> usize {
        self.two_part_count
    }

    /// Number of trailing odd prime-power factors.
    pub fn odd_part_count(&self) -> usize {
        self.moduli.len() - self.two_part_count
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.moduli.is_empty()
    }

    /// Least common multiple of the moduli (1 for the trivial group).
    pub fn exponent(&self) -> u64 {
        self.moduli.iter().fold(1, |acc, &m| lcm(acc, m))
    }

    /// The subgroup formed by the 2-power factors.
    pub fn two_part(&self) -> Group {
        Group::new(&self.moduli[..self.two_part_count]).expect("subgroup of a valid group")
    }

    /// The subgroup formed by the odd factors.
    pub fn odd_part(&self) -> Group {
        Group::new(&self.moduli[self.two_part_count..]).expect("subgroup of a valid group")
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { coords: vec![0; self.moduli.len()] }
    }

    /// Builds an element after checking coordinate ranges.
    pub fn element(&self, coords: Vec<u64>) -> Result<GroupElement> {
        if coords.len() != self.moduli.len() {
            return Err(Error::DimensionMismatch {
                expected: self.moduli.len(),
                got: coords.len(),
            });
        }
        for (&c, &m) in coords.iter().zip(&self.moduli) {
            if c >= m {
                return Err(Error::CoordinateRange { value: c, modulus: m });
            }
        }
        Ok(GroupElement { coords })
    }

    /// Mixed-radix rank of an element; the last coordinate varies fastest.
    pub fn element_index(&self, e: &GroupElement) -> u64 {
        debug_assert_eq!(e.coords.len(), self.moduli.len());
        e.coords.iter().zip(&self.strides).map(|(&c, &s)| c * s).sum()
    }

    pub fn element_from_index(&self, mut index: u64) -> GroupElement {
        debug_assert!(index < self.order);
        let mut coords = vec![0u64; self.moduli.len()];
        for i in 0..self.moduli.len() {
            coords[i] = index / self.strides[i];
            index %= self.strides[i];
        }
        GroupElement { coords }
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(|i| self.element_from_index(i))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .zip(&self.moduli)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect();
        GroupElement { coords }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        let coords = a
            .coords
            .iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| (m - x) % m)
            .collect();
        GroupElement { coords }
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    /// Splits an element into its 2-part and odd-part coordinates.
    pub fn split_element(&self, e: &GroupElement) -> (GroupElement, GroupElement) {
        let (two, odd) = e.coords.split_at(self.two_part_count);
        (GroupElement { coords: two.to_vec() }, GroupElement { coords: odd.to_vec() })
    }

    /// Inverse of [`Group::split_element`].
    pub fn join_elements(&self, two: &GroupElement, odd: &GroupElement) -> GroupElement {
        debug_assert_eq!(two.coords.len(), self.two_part_count);
        debug_assert_eq!(odd.coords.len(), self.odd_part_count());
        let coords = two.coords.iter().chain(&odd.coords).copied().collect();
        GroupElement { coords }
    }

    /// Componentwise gcd of an element with the moduli, under the
    /// convention `gcd(0, m) = m`.
    pub fn gcd_tuple(&self, x: &GroupElement) -> Result<DivisorTuple> {
        if x.coords.len() != self.moduli.len() {
            return Err(Error::DimensionMismatch {
                expected: self.moduli.len(),
                got: x.coords.len(),
            });
        }
        let divisors = x
            .coords
            .iter()
            .zip(&self.moduli)
            .map(|(&c, &m)| gcd(c, m))
            .collect();
        Ok(DivisorTuple { divisors })
    }

    /// Maps raw entries onto legal divisors: every 0 becomes the modulus
    /// (since `gcd(0, m) = m`), other entries must divide their modulus.
    pub fn normalize_divisor(&self, raw: &[u64]) -> Result<DivisorTuple> {
        if raw.len() != self.moduli.len() {
            return Err(Error::DimensionMismatch {
                expected: self.moduli.len(),
                got: raw.len(),
            });
        }
        let mut divisors = Vec::with_capacity(raw.len());
        for (&d, &m) in raw.iter().zip(&self.moduli) {
            if d == 0 {
                divisors.push(m);
            } else if m % d == 0 {
                divisors.push(d);
            } else {
                return Err(Error::NotADivisor { value: d, modulus: m });
            }
        }
        Ok(DivisorTuple { divisors })
    }

    /// The moduli tuple itself as a divisor tuple; it selects `{0}`.
    pub fn full_tuple(&self) -> DivisorTuple {
        DivisorTuple { divisors: self.moduli.clone() }
    }

    /// All divisor tuples of the moduli, in lexicographic order.
    pub fn divisor_tuples(&self) -> Vec<DivisorTuple> {
        let per_coord: Vec<Vec<u64>> = self
            .moduli
            .iter()
            .map(|&m| {
                let mut divs: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
                divs.sort_unstable();
                divs
            })
            .collect();
        let mut out = vec![Vec::new()];
        for divs in &per_coord {
            let mut next = Vec::with_capacity(out.len() * divs.len());
            for prefix in &out {
                for &d in divs {
                    let mut t = prefix.clone();
                    t.push(d);
                    next.push(t);
                }
            }
            out = next;
        }
        out.into_iter().map(|divisors| DivisorTuple { divisors }).collect()
    }

    /// The gcd-set of a divisor set: all elements whose gcd tuple lies in
    /// `divisors`, with per-tuple membership counts.
    pub fn gcd_set(&self, divisors: &DivisorSet) -> Result<ConnectionSet> {
        if divisors.moduli != self.moduli {
            return Err(Error::ModuliMismatch);
        }
        if divisors.is_empty() {
            return Err(Error::EmptyDivisorSet);
        }
        let mut elements = BTreeSet::new();
        let mut counts: BTreeMap<DivisorTuple, usize> =
            divisors.iter().map(|t| (t.clone(), 0)).collect();
        for x in self.elements() {
            let t = self.gcd_tuple(&x).expect("enumerated element");
            if let Some(n) = counts.get_mut(&t) {
                *n += 1;
                elements.insert(x);
            }
        }
        // The level sets are pairwise disjoint because each element has a
        // single gcd tuple; the counts must therefore sum to the set size.
        debug_assert_eq!(counts.values().sum::<usize>(), elements.len());
        let allow_identity = divisors.contains_full();
        debug_assert_eq!(allow_identity, elements.contains(&self.zero()));
        Ok(ConnectionSet {
            elements,
            allow_identity,
            tuple_counts: counts.into_iter().collect(),
        })
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.moduli.is_empty() {
            return write!(f, "Z1");
        }
        let parts: Vec<String> = self.moduli.iter().map(|m| format!("Z{m}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({self})")
    }
}

/// An element of a [`Group`], as coordinates modulo the moduli tuple.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coords.iter().map(|&c| json!(c)).collect())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A componentwise divisor of the moduli tuple, each entry in `1..=m_i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivisorTuple {
    divisors: Vec<u64>,
}

impl DivisorTuple {
    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    /// The trailing odd-part entries, given the number of 2-power moduli.
    pub fn odd_tail(&self, two_part_count: usize) -> &[u64] {
        &self.divisors[two_part_count..]
    }

    /// The leading 2-part entries.
    pub fn two_head(&self, two_part_count: usize) -> &[u64] {
        &self.divisors[..two_part_count]
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.divisors.iter().map(|&d| json!(d)).collect())
    }
}

impl fmt::Display for DivisorTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.divisors.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for DivisorTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A set of divisor tuples over a fixed moduli tuple.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DivisorSet {
    moduli: Vec<u64>,
    tuples: BTreeSet<DivisorTuple>,
}

impl DivisorSet {
    /// Builds a divisor set from raw entries, normalizing `0 -> m_i`.
    pub fn new(group: &Group, raw_tuples: &[Vec<u64>]) -> Result<DivisorSet> {
        let mut tuples = BTreeSet::new();
        for raw in raw_tuples {
            tuples.insert(group.normalize_divisor(raw)?);
        }
        Ok(DivisorSet { moduli: group.moduli().to_vec(), tuples })
    }

    pub fn from_tuples(
        group: &Group,
        tuples: impl IntoIterator<Item = DivisorTuple>,
    ) -> Result<DivisorSet> {
        let raw: Vec<Vec<u64>> = tuples.into_iter().map(|t| t.divisors).collect();
        DivisorSet::new(group, &raw)
    }

    pub fn empty(group: &Group) -> DivisorSet {
        DivisorSet { moduli: group.moduli().to_vec(), tuples: BTreeSet::new() }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &DivisorTuple> {
        self.tuples.iter()
    }

    pub fn contains(&self, t: &DivisorTuple) -> bool {
        self.tuples.contains(t)
    }

    /// Whether the moduli tuple itself is a member.
    pub fn contains_full(&self) -> bool {
        self.tuples.contains(&DivisorTuple { divisors: self.moduli.clone() })
    }

    pub fn is_disjoint(&self, other: &DivisorSet) -> bool {
        self.tuples.is_disjoint(&other.tuples)
    }

    pub fn union(&self, other: &DivisorSet) -> Result<DivisorSet> {
        if self.moduli != other.moduli {
            return Err(Error::ModuliMismatch);
        }
        let tuples = self.tuples.union(&other.tuples).cloned().collect();
        Ok(DivisorSet { moduli: self.moduli.clone(), tuples })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.tuples.iter().map(|t| t.to_json()).collect())
    }
}

impl fmt::Debug for DivisorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.tuples.iter()).finish()
    }
}

/// A symmetric subset of a group; `0` in the set marks loops.
#[derive(Clone, PartialEq, Eq)]
pub struct ConnectionSet {
    elements: BTreeSet<GroupElement>,
    allow_identity: bool,
    tuple_counts: Vec<(DivisorTuple, usize)>,
}

impl ConnectionSet {
    /// Builds a connection set, checking symmetry by exhaustive scan.
    pub fn new(group: &Group, elements: impl IntoIterator<Item = GroupElement>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for e in elements {
            group.element(e.coords().to_vec())?;
            set.insert(e);
        }
        for e in &set {
            if !set.contains(&group.neg(e)) {
                return Err(Error::Asymmetric(e.coords().to_vec()));
            }
        }
        let allow_identity = set.contains(&group.zero());
        Ok(ConnectionSet { elements: set, allow_identity, tuple_counts: Vec::new() })
    }

    pub fn empty() -> Self {
        ConnectionSet {
            elements: BTreeSet::new(),
            allow_identity: false,
            tuple_counts: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &GroupElement> {
        self.elements.iter()
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        self.elements.contains(e)
    }

    /// Whether `0` belongs to the set (the graph carries loops).
    pub fn allow_identity(&self) -> bool {
        self.allow_identity
    }

    /// Membership counts per divisor tuple when built by [`Group::gcd_set`];
    /// empty for hand-built sets.
    pub fn tuple_counts(&self) -> &[(DivisorTuple, usize)] {
        &self.tuple_counts
    }

    /// Whether the subgroup generated by the set is the whole group
    /// (breadth-first closure under addition).
    pub fn generates(&self, group: &Group) -> bool {
        let order = group.order() as usize;
        let mut seen = vec![false; order];
        let zero = group.zero();
        seen[group.element_index(&zero) as usize] = true;
        let mut frontier = vec![zero];
        let mut count = 1usize;
        while let Some(v) = frontier.pop() {
            for s in &self.elements {
                let w = group.add(&v, s);
                let idx = group.element_index(&w) as usize;
                if !seen[idx] {
                    seen[idx] = true;
                    count += 1;
                    frontier.push(w);
                }
            }
        }
        count == order
    }

    pub fn to_json(&self) -> Value {
        json!({
            "elements": Value::Array(self.elements.iter().map(|e| e.to_json()).collect()),
            "allow_identity": self.allow_identity,
            "tuple_counts": Value::Array(
                self.tuple_counts
                    .iter()
                    .map(|(t, n)| json!({"tuple": t.to_json(), "count": n}))
                    .collect(),
            ),
        })
    }
}

impl fmt::Debug for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements.iter()).finish()
    }
}

/// A Cayley graph over a finite abelian group: vertices are the group
/// elements, `a ~ b` iff `a - b` lies in the connection set. A `0` in the
/// connection set puts a loop at every vertex, contributing one to each
/// diagonal entry of the adjacency matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct CayleyGraph {
    group: Group,
    connection: ConnectionSet,
}

impl CayleyGraph {
    pub fn new(group: Group, connection: ConnectionSet) -> Result<CayleyGraph> {
        for e in connection.iter() {
            group.element(e.coords().to_vec())?;
        }
        Ok(CayleyGraph { group, connection })
    }

    /// The gcd-graph of a divisor set.
    pub fn gcd_graph(group: &Group, divisors: &DivisorSet) -> Result<CayleyGraph> {
        let connection = group.gcd_set(divisors)?;
        Ok(CayleyGraph { group: group.clone(), connection })
    }

    /// The edgeless graph on the group.
    pub fn edgeless(group: &Group) -> CayleyGraph {
        CayleyGraph { group: group.clone(), connection: ConnectionSet::empty() }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn connection(&self) -> &ConnectionSet {
        &self.connection
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn degree(&self) -> usize {
        self.connection.len()
    }

    pub fn has_loops(&self) -> bool {
        self.connection.allow_identity()
    }

    pub fn is_adjacent(&self, a: &GroupElement, b: &GroupElement) -> bool {
        self.connection.contains(&self.group.sub(a, b))
    }

    /// Connected iff the connection set generates the group.
    pub fn is_connected(&self) -> bool {
        self.connection.generates(&self.group)
    }

    /// Dense 0/1 adjacency matrix, indexed by element rank.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.order() as usize;
        let elements: Vec<GroupElement> = self.group.elements().collect();
        let mut a = vec![vec![0u8; n]; n];
        for (i, u) in elements.iter().enumerate() {
            for (j, v) in elements.iter().enumerate() {
                if self.is_adjacent(u, v) {
                    a[i][j] = 1;
                }
            }
        }
        a
    }
}

impl fmt::Debug for CayleyGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cay({}, {:?})", self.group, self.connection)
    }
}

fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All abelian groups of the given order, one per isomorphism class.
pub fn abelian_groups_of_order(n: u64) -> Vec<Group> {
    let mut combos: Vec<Vec<u64>> = vec![Vec::new()];
    for (p, e) in prime_power_factors(n) {
        let mut next = Vec::new();
        for lambda in partitions(e) {
            let powers: Vec<u64> = lambda.iter().map(|&k| p.pow(k)).collect();
            for prefix in &combos {
                let mut moduli = prefix.clone();
                moduli.extend_from_slice(&powers);
                next.push(moduli);
            }
        }
        combos = next;
    }
    combos
        .into_iter()
        .map(|moduli| Group::new(&moduli).expect("order within cap"))
        .collect()
}

/// All abelian groups of order `1..=max`, ascending by order.
pub fn abelian_groups_up_to(max: u64) -> Vec<Group> {
    (1..=max).flat_map(abelian_groups_of_order).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(lit: &str) -> Group {
        Group::parse(lit).unwrap()
    }

    fn elem(g: &Group, coords: &[u64]) -> GroupElement {
        g.element(coords.to_vec()).unwrap()
    }

    #[test]
    fn canonical_form_orders_factors() {
        let g = grp("Z3xZ2xZ4");
        assert_eq!(g.moduli(), &[4, 2, 3]);
        assert_eq!(g.two_part_count(), 2);
        assert_eq!(g.odd_part_count(), 1);

        let g = grp("Z12");
        assert_eq!(g.moduli(), &[4, 3]);

        let g = grp("Z1");
        assert!(g.is_trivial());
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Group::parse("4x2").is_err());
        assert!(Group::parse("Z0").is_err());
        assert!(Group::parse("").is_err());
        assert!(Group::parse("ZxZ2").is_err());
    }

    #[test]
    fn order_cap_is_enforced() {
        let err = Group::with_max_order(&[1024, 1024], 1024).unwrap_err();
        assert!(matches!(err, Error::OrderCap { .. }));
        assert!(err.is_resource());
    }

    #[test]
    fn gcd_tuple_zero_convention() {
        let g = grp("Z4xZ3");
        assert_eq!(g.gcd_tuple(&elem(&g, &[0, 0])).unwrap().divisors(), &[4, 3]);
        assert_eq!(g.gcd_tuple(&elem(&g, &[3, 0])).unwrap().divisors(), &[1, 3]);
        let g = grp("Z4xZ2");
        assert_eq!(g.gcd_tuple(&elem(&g, &[2, 1])).unwrap().divisors(), &[2, 1]);
    }

    #[test]
    fn gcd_tuple_is_even() {
        for g in abelian_groups_up_to(30) {
            for x in g.elements() {
                let a = g.gcd_tuple(&x).unwrap();
                let b = g.gcd_tuple(&g.neg(&x)).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn normalize_divisor_examples() {
        let g = grp("Z4xZ2xZ3");
        assert_eq!(g.normalize_divisor(&[1, 0, 0]).unwrap().divisors(), &[1, 2, 3]);
        assert_eq!(g.normalize_divisor(&[2, 0, 0]).unwrap().divisors(), &[2, 2, 3]);
        assert_eq!(g.normalize_divisor(&[1, 1, 1]).unwrap().divisors(), &[1, 1, 1]);
        assert!(matches!(
            g.normalize_divisor(&[3, 1, 1]),
            Err(Error::NotADivisor { value: 3, modulus: 4 })
        ));
    }

    #[test]
    fn gcd_set_examples() {
        let g = grp("Z4xZ2");
        let d = DivisorSet::new(&g, &[vec![1, 2]]).unwrap();
        let s = g.gcd_set(&d).unwrap();
        let want: BTreeSet<GroupElement> =
            [elem(&g, &[1, 0]), elem(&g, &[3, 0])].into_iter().collect();
        assert_eq!(s.iter().cloned().collect::<BTreeSet<_>>(), want);
        assert!(!s.allow_identity());
        assert_eq!(s.tuple_counts().len(), 1);
        assert_eq!(s.tuple_counts()[0].1, 2);

        let g = grp("Z2");
        let d = DivisorSet::new(&g, &[vec![1]]).unwrap();
        let s = g.gcd_set(&d).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.contains(&elem(&g, &[1])));

        let g = grp("Z4xZ2xZ3");
        let d = DivisorSet::new(&g, &[vec![4, 2, 3]]).unwrap();
        let s = g.gcd_set(&d).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.contains(&g.zero()));
        assert!(s.allow_identity());
    }

    #[test]
    fn gcd_set_rejects_empty() {
        let g = grp("Z4");
        let d = DivisorSet::empty(&g);
        assert!(matches!(g.gcd_set(&d), Err(Error::EmptyDivisorSet)));
    }

    #[test]
    fn gcd_sets_are_symmetric_and_partition_the_group() {
        for g in abelian_groups_up_to(48) {
            let tuples = g.divisor_tuples();
            let mut covered = 0usize;
            for t in &tuples {
                let d = DivisorSet::from_tuples(&g, [t.clone()]).unwrap();
                let s = g.gcd_set(&d).unwrap();
                covered += s.len();
                for e in s.iter() {
                    assert!(s.contains(&g.neg(e)), "{g}: {t} not symmetric at {e}");
                }
            }
            // Levels are pairwise disjoint and exhaust the group.
            assert_eq!(covered as u64, g.order(), "{g}");
        }
    }

    #[test]
    fn connection_set_symmetry_check() {
        let g = grp("Z4");
        let err = ConnectionSet::new(&g, [elem(&g, &[1])]).unwrap_err();
        assert!(matches!(err, Error::Asymmetric(_)));
        let ok = ConnectionSet::new(&g, [elem(&g, &[1]), elem(&g, &[3])]).unwrap();
        assert_eq!(ok.len(), 2);
    }

    #[test]
    fn generates_examples() {
        let g = grp("Z4");
        let s = ConnectionSet::new(&g, [elem(&g, &[2])]).unwrap();
        assert!(!s.generates(&g));

        let g = grp("Z2");
        let s = ConnectionSet::new(&g, [elem(&g, &[1])]).unwrap();
        assert!(s.generates(&g));

        // The divisor set from the perfect-state-transfer example generates.
        let g = grp("Z4xZ2xZ3");
        let d = DivisorSet::new(
            &g,
            &[vec![1, 1, 1], vec![1, 2, 1], vec![2, 2, 3], vec![4, 1, 3]],
        )
        .unwrap();
        assert!(g.gcd_set(&d).unwrap().generates(&g));
    }

    #[test]
    fn element_index_round_trip() {
        let g = grp("Z4xZ2xZ3");
        for i in 0..g.order() {
            let e = g.element_from_index(i);
            assert_eq!(g.element_index(&e), i);
        }
    }

    #[test]
    fn group_enumeration_counts() {
        assert_eq!(abelian_groups_of_order(1).len(), 1);
        assert_eq!(abelian_groups_of_order(8).len(), 3);
        assert_eq!(abelian_groups_of_order(16).len(), 5);
        assert_eq!(abelian_groups_of_order(36).len(), 4);
        assert_eq!(abelian_groups_of_order(30).len(), 1);
    }

    #[test]
    fn divisor_tuples_count() {
        let g = grp("Z4xZ2xZ3");
        assert_eq!(g.divisor_tuples().len(), 3 * 2 * 2);
        let g = grp("Z1");
        assert_eq!(g.divisor_tuples().len(), 1);
    }

    #[test]
    fn split_and_join() {
        let g = grp("Z4xZ2xZ3");
        let e = elem(&g, &[3, 1, 2]);
        let (two, odd) = g.split_element(&e);
        assert_eq!(two.coords(), &[3, 1]);
        assert_eq!(odd.coords(), &[2]);
        assert_eq!(g.join_elements(&two, &odd), e);
    }
}
