//! Characters of finite abelian groups and exact spectra of Cayley graphs.
//!
//! Characters of an abelian group are indexed by the group itself:
//! `chi_g(x) = prod_j zeta_{m_j}^{g_j x_j}`. They diagonalize every Cayley
//! adjacency matrix at once, independently of the connection set, so the
//! eigenvalue at `g` is the plain character sum over the connection set.
//! gcd-graphs are integral: every such sum reduces to a rational integer,
//! and a non-integer reduction is reported as an error rather than
//! approximated.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::abelian::{CayleyGraph, Group, GroupElement};
use crate::cyclo::{CycloContext, CycloNum};
use crate::error::{Error, Result};

/// Characters are labelled by group elements.
pub type CharacterIndex = GroupElement;

/// Exponent `e` with `chi_g(x) = zeta_L^e`, for a context order divisible
/// by every modulus.
pub(crate) fn character_exponent(group: &Group, l: u64, g: &GroupElement, x: &GroupElement) -> u64 {
    let mut acc: u128 = 0;
    for ((&gj, &xj), &m) in g.coords().iter().zip(x.coords()).zip(group.moduli()) {
        acc += (l / m) as u128 * gj as u128 * xj as u128;
    }
    (acc % l as u128) as u64
}

fn ensure_divisible(group: &Group, l: u64) -> Result<()> {
    for &m in group.moduli() {
        if l % m != 0 {
            return Err(Error::ContextOrder { modulus: m, order: l });
        }
    }
    Ok(())
}

/// The character value `chi_g(x)` as an exact root of unity.
pub fn character_value(
    ctx: &Arc<CycloContext>,
    group: &Group,
    g: &CharacterIndex,
    x: &GroupElement,
) -> Result<CycloNum> {
    ensure_divisible(group, ctx.order())?;
    let e = character_exponent(group, ctx.order(), g, x);
    Ok(CycloNum::root_of_unity(ctx, e as i64))
}

/// Exact eigenvalue of the graph at character `g`: the character sum over
/// the connection set, which must reduce to a rational integer.
pub fn eigenvalue(graph: &CayleyGraph, g: &CharacterIndex) -> Result<i64> {
    let group = graph.group();
    let l = group.exponent();
    let ctx = CycloContext::shared(l)?;
    eigenvalue_in_ctx(graph, g, &ctx)
}

pub(crate) fn eigenvalue_in_ctx(
    graph: &CayleyGraph,
    g: &CharacterIndex,
    ctx: &Arc<CycloContext>,
) -> Result<i64> {
    let group = graph.group();
    let l = ctx.order();
    ensure_divisible(group, l)?;
    let mut counts = vec![0i64; l as usize];
    for s in graph.connection().iter() {
        counts[character_exponent(group, l, g, s) as usize] += 1;
    }
    let sum = CycloNum::from_root_combination(ctx, &counts, 1);
    match sum.as_integer() {
        Some(n) => Ok(n.try_into().expect("eigenvalue bounded by the degree")),
        None => Err(Error::IntegralityViolation { character: g.coords().to_vec() }),
    }
}

/// An eigenspace: the eigenvalue and the characters spanning it. The
/// spectral projector is never materialized; its entries are computed on
/// demand from the member list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenspace {
    eigenvalue: i64,
    members: Vec<CharacterIndex>,
}

impl Eigenspace {
    pub fn eigenvalue(&self) -> i64 {
        self.eigenvalue
    }

    pub fn members(&self) -> &[CharacterIndex] {
        &self.members
    }

    pub fn multiplicity(&self) -> usize {
        self.members.len()
    }

    /// Entry `(u, v)` of the spectral projector:
    /// `(1/|G|) * sum_{g in members} chi_g(u - v)`.
    pub fn projector_entry(
        &self,
        ctx: &Arc<CycloContext>,
        group: &Group,
        u: &GroupElement,
        v: &GroupElement,
    ) -> Result<CycloNum> {
        ensure_divisible(group, ctx.order())?;
        let w = group.sub(u, v);
        let mut counts = vec![0i64; ctx.order() as usize];
        for g in &self.members {
            counts[character_exponent(group, ctx.order(), g, &w) as usize] += 1;
        }
        Ok(CycloNum::from_root_combination(ctx, &counts, group.order()))
    }
}

/// The full spectrum of a Cayley graph, grouped by eigenvalue in strictly
/// decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    group: Group,
    spaces: Vec<Eigenspace>,
}

/// Computes the exact spectrum by per-character sums; never by dense
/// diagonalization.
pub fn spectrum(graph: &CayleyGraph) -> Result<Spectrum> {
    let group = graph.group();
    let ctx = CycloContext::shared(group.exponent())?;
    let mut grouped: BTreeMap<i64, Vec<CharacterIndex>> = BTreeMap::new();
    for g in group.elements() {
        let lambda = eigenvalue_in_ctx(graph, &g, &ctx)?;
        grouped.entry(lambda).or_default().push(g);
    }
    let spaces = grouped
        .into_iter()
        .rev()
        .map(|(eigenvalue, members)| Eigenspace { eigenvalue, members })
        .collect();
    Ok(Spectrum { group: group.clone(), spaces })
}

impl Spectrum {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn spaces(&self) -> &[Eigenspace] {
        &self.spaces
    }

    pub fn distinct_eigenvalues(&self) -> Vec<i64> {
        self.spaces.iter().map(|s| s.eigenvalue).collect()
    }

    /// Eigenvalues with multiplicity, descending.
    pub fn eigenvalue_multiset(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.group.order() as usize);
        for s in &self.spaces {
            out.extend(std::iter::repeat(s.eigenvalue).take(s.multiplicity()));
        }
        out
    }

    /// `sum lambda * multiplicity`, the trace of the adjacency matrix.
    pub fn trace(&self) -> i64 {
        self.spaces
            .iter()
            .map(|s| s.eigenvalue * s.multiplicity() as i64)
            .sum()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.spaces
                .iter()
                .map(|s| {
                    json!({
                        "eigenvalue": s.eigenvalue,
                        "multiplicity": s.multiplicity(),
                        "characters": Value::Array(
                            s.members.iter().map(|g| g.to_json()).collect(),
                        ),
                    })
                })
                .collect(),
        )
    }
}

/// Parity classification of the distinct eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    AllEven,
    AllOdd,
    Mixed,
}

impl Parity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Parity::AllEven => "all_even",
            Parity::AllOdd => "all_odd",
            Parity::Mixed => "mixed",
        }
    }

    /// True unless the parities are mixed.
    pub fn is_uniform(&self) -> bool {
        !matches!(self, Parity::Mixed)
    }
}

pub fn eigenvalue_parities(spectrum: &Spectrum) -> Parity {
    let mut even = false;
    let mut odd = false;
    for s in &spectrum.spaces {
        if s.eigenvalue.rem_euclid(2) == 0 {
            even = true;
        } else {
            odd = true;
        }
    }
    match (even, odd) {
        (true, true) => Parity::Mixed,
        (false, true) => Parity::AllOdd,
        // An empty spectrum cannot occur; groups have at least one element.
        _ => Parity::AllEven,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{ConnectionSet, DivisorSet};

    fn grp(lit: &str) -> Group {
        Group::parse(lit).unwrap()
    }

    fn gcd_graph(lit: &str, tuples: &[Vec<u64>]) -> CayleyGraph {
        let g = grp(lit);
        let d = DivisorSet::new(&g, &tuples.to_vec()).unwrap();
        CayleyGraph::gcd_graph(&g, &d).unwrap()
    }

    #[test]
    fn principal_character_is_one() {
        let g = grp("Z4xZ3");
        let ctx = CycloContext::shared(g.exponent()).unwrap();
        let zero = g.zero();
        for x in g.elements() {
            assert!(character_value(&ctx, &g, &zero, &x).unwrap().is_one());
        }
    }

    #[test]
    fn character_values_on_cyclic_groups() {
        let g = grp("Z2");
        let ctx = CycloContext::shared(2).unwrap();
        let one = g.element(vec![1]).unwrap();
        let v = character_value(&ctx, &g, &one, &one).unwrap();
        assert_eq!(v.as_integer().unwrap(), (-1).into());

        let g = grp("Z3");
        let ctx = CycloContext::shared(3).unwrap();
        let gch = g.element(vec![1]).unwrap();
        let x = g.element(vec![2]).unwrap();
        let v = character_value(&ctx, &g, &gch, &x).unwrap();
        assert_eq!(v, CycloNum::root_of_unity(&ctx, 2));
    }

    #[test]
    fn character_requires_compatible_context() {
        let g = grp("Z5");
        let ctx = CycloContext::shared(4).unwrap();
        let e = g.element(vec![1]).unwrap();
        assert!(matches!(
            character_value(&ctx, &g, &e, &e),
            Err(Error::ContextOrder { .. })
        ));
    }

    #[test]
    fn triangle_spectrum() {
        let k3 = gcd_graph("Z3", &[vec![1]]);
        let spec = spectrum(&k3).unwrap();
        assert_eq!(spec.distinct_eigenvalues(), vec![2, -1]);
        assert_eq!(spec.eigenvalue_multiset(), vec![2, -1, -1]);
        assert_eq!(spec.spaces()[0].members(), &[Group::parse("Z3").unwrap().zero()]);
    }

    #[test]
    fn edge_spectrum() {
        let k2 = gcd_graph("Z2", &[vec![1]]);
        let g = grp("Z2");
        assert_eq!(eigenvalue(&k2, &g.zero()).unwrap(), 1);
        assert_eq!(eigenvalue(&k2, &g.element(vec![1]).unwrap()).unwrap(), -1);
    }

    #[test]
    fn cube_spectrum_by_brute_force() {
        // Connection set {(1,0),(0,1),(1,1)} over Z2xZ2.
        let g = grp("Z2xZ2");
        let s = ConnectionSet::new(
            &g,
            [
                g.element(vec![1, 0]).unwrap(),
                g.element(vec![0, 1]).unwrap(),
                g.element(vec![1, 1]).unwrap(),
            ],
        )
        .unwrap();
        let graph = CayleyGraph::new(g.clone(), s).unwrap();
        let target = g.element(vec![1, 1]).unwrap();
        assert_eq!(eigenvalue(&graph, &target).unwrap(), -1);
        let spec = spectrum(&graph).unwrap();
        assert_eq!(spec.eigenvalue_multiset(), vec![3, -1, -1, -1]);
    }

    #[test]
    fn degenerate_spectra() {
        let g = grp("Z3");
        let edgeless = CayleyGraph::edgeless(&g);
        let spec = spectrum(&edgeless).unwrap();
        assert_eq!(spec.distinct_eigenvalues(), vec![0]);
        assert_eq!(spec.spaces()[0].multiplicity(), 3);

        let loops = gcd_graph("Z3", &[vec![3]]);
        let spec = spectrum(&loops).unwrap();
        assert_eq!(spec.distinct_eigenvalues(), vec![1]);
        assert_eq!(spec.spaces()[0].multiplicity(), 3);
    }

    #[test]
    fn parities() {
        let k3 = spectrum(&gcd_graph("Z3", &[vec![1]])).unwrap();
        assert_eq!(eigenvalue_parities(&k3), Parity::Mixed);
        let k2 = spectrum(&gcd_graph("Z2", &[vec![1]])).unwrap();
        assert_eq!(eigenvalue_parities(&k2), Parity::AllOdd);
        let edgeless = spectrum(&CayleyGraph::edgeless(&grp("Z3"))).unwrap();
        assert_eq!(eigenvalue_parities(&edgeless), Parity::AllEven);
    }

    #[test]
    fn trace_identity() {
        // Trace is |G| with loops, 0 without.
        let with_loops = gcd_graph("Z4xZ3", &[vec![4, 3], vec![1, 1]]);
        assert_eq!(spectrum(&with_loops).unwrap().trace(), 12);
        let simple = gcd_graph("Z4xZ3", &[vec![1, 1]]);
        assert_eq!(spectrum(&simple).unwrap().trace(), 0);
    }

    #[test]
    fn frobenius_norm_identity() {
        // sum lambda(g)^2 over characters equals |G| * |S|.
        for lit in ["Z4xZ2", "Z8", "Z3xZ3", "Z4xZ3"] {
            let g = grp(lit);
            for t in g.divisor_tuples() {
                let d = DivisorSet::from_tuples(&g, [t]).unwrap();
                let graph = CayleyGraph::gcd_graph(&g, &d).unwrap();
                let sq: i64 = g
                    .elements()
                    .map(|ch| {
                        let lam = eigenvalue(&graph, &ch).unwrap();
                        lam * lam
                    })
                    .sum();
                assert_eq!(sq, g.order() as i64 * graph.degree() as i64);
            }
        }
    }

    #[test]
    fn non_integral_connection_set_is_rejected() {
        // {1, 4} in Z5 has irrational character sums.
        let g = grp("Z5");
        let s = ConnectionSet::new(
            &g,
            [g.element(vec![1]).unwrap(), g.element(vec![4]).unwrap()],
        )
        .unwrap();
        let graph = CayleyGraph::new(g.clone(), s).unwrap();
        let ch = g.element(vec![1]).unwrap();
        assert!(matches!(
            eigenvalue(&graph, &ch),
            Err(Error::IntegralityViolation { .. })
        ));
    }

    #[test]
    fn projector_entries_sum_to_identity() {
        // Projectors resolve the identity: sum_s F_s = I.
        let graph = gcd_graph("Z4xZ3", &[vec![1, 3]]);
        let g = graph.group().clone();
        let ctx = CycloContext::shared(g.exponent()).unwrap();
        let spec = spectrum(&graph).unwrap();
        for v in g.elements() {
            let mut acc = CycloNum::zero(&ctx);
            for space in spec.spaces() {
                acc = acc
                    .add(&space.projector_entry(&ctx, &g, &g.zero(), &v).unwrap())
                    .unwrap();
            }
            if v.is_zero() {
                assert!(acc.is_one());
            } else {
                assert!(acc.is_zero());
            }
        }
    }
}
