//! Property tests: ring laws and substitution laws for the polynomial
//! arithmetic, structural laws for the graph operations, and degree/
//! nonnegativity facts about the graph polynomials.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use graphpoly::invariants::{
    self, eep_recurrence, potts_subset, scomp_subset, scp_subset, tcp_expansion, SizeGuard,
};
use graphpoly::poly::{Exponents, Polynomial, Substitution, Var};
use graphpoly::{Graph, GraphFormat};

fn arb_exponents(laurent: bool) -> impl Strategy<Value = Exponents> {
    let range = if laurent { -3..=3i32 } else { 0..=3i32 };
    [range.clone(), range.clone(), range.clone(), range]
        .prop_map(|[a, b, c, d]| Exponents::new(a, b, c, d))
}

fn arb_poly(laurent: bool, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((arb_exponents(laurent), -5..=5i64), 0..=max_terms).prop_map(
        |terms| {
            let mut p = Polynomial::zero();
            for (e, c) in terms {
                p = p + Polynomial::monomial(e, BigInt::from(c));
            }
            p
        },
    )
}

fn arb_binding() -> impl Strategy<Value = Polynomial> {
    arb_poly(false, 2)
}

fn arb_point() -> impl Strategy<Value = Vec<(Var, i64)>> {
    [-3..=3i64, -3..=3i64, -3..=3i64, -3..=3i64].prop_map(|[v, x, y, z]| {
        vec![(Var::V, v), (Var::X, x), (Var::Y, y), (Var::Z, z)]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_laws(a in arb_poly(true, 4), b in arb_poly(true, 4), c in arb_poly(true, 4)) {
        prop_assert_eq!(&a + &(&b + &c), &(&a + &b) + &c);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a - &a, Polynomial::zero());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
    }

    #[test]
    fn substitution_identity(p in arb_poly(true, 4)) {
        prop_assert_eq!(p.substitute(&Substitution::new()).unwrap(), p.clone());
    }

    #[test]
    fn substitution_is_a_ring_map(
        a in arb_poly(false, 3),
        b in arb_poly(false, 3),
        bx in arb_binding(),
        by in arb_binding(),
    ) {
        let s = Substitution::new().bind(Var::X, bx).bind(Var::Y, by);
        let add_lhs = (&a + &b).substitute(&s).unwrap();
        let add_rhs = a.substitute(&s).unwrap() + b.substitute(&s).unwrap();
        prop_assert_eq!(add_lhs, add_rhs);
        let mul_lhs = (&a * &b).substitute(&s).unwrap();
        let mul_rhs = a.substitute(&s).unwrap() * b.substitute(&s).unwrap();
        prop_assert_eq!(mul_lhs, mul_rhs);
    }

    #[test]
    fn evaluation_commutes_with_substitution(
        p in arb_poly(false, 3),
        bv in arb_binding(),
        bz in arb_binding(),
        point in arb_point(),
    ) {
        let s = Substitution::new().bind(Var::V, bv.clone()).bind(Var::Z, bz.clone());
        let lhs = p.substitute(&s).unwrap().evaluate(&point).unwrap();
        let composed: Vec<(Var, i64)> = point
            .iter()
            .map(|&(var, value)| {
                let v = match var {
                    Var::V => bv.evaluate(&point).unwrap(),
                    Var::Z => bz.evaluate(&point).unwrap(),
                    _ => BigRational::from(BigInt::from(value)),
                };
                (var, v.to_integer().to_i64().expect("small composed value"))
            })
            .collect();
        let rhs = p.evaluate(&composed).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_text_is_injective(a in arb_poly(true, 4), b in arb_poly(true, 4)) {
        prop_assert_eq!(Polynomial::parse_text(&a.to_canonical_text()).unwrap(), a.clone());
        prop_assert_eq!(
            a.to_canonical_text() == b.to_canonical_text(),
            a == b
        );
    }
}

#[derive(Debug, Clone)]
struct SmallGraph(Graph);

fn arb_graph() -> impl Strategy<Value = SmallGraph> {
    (1..=5u32)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec((1..=n, 1..=n), 0..=6),
            )
        })
        .prop_map(|(n, edges)| SmallGraph(Graph::from_parts(1..=n, edges).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn edge_operation_counts(g in arb_graph()) {
        let g = g.0;
        for e in g.edge_refs() {
            let is_loop = g.is_loop(e).unwrap();
            let contracted = g.contract_edge(e).unwrap();
            let extracted = g.extract_edge(e).unwrap();
            let deleted = g.delete_edge(e).unwrap();
            prop_assert_eq!(deleted.edge_count(), g.edge_count() - 1);
            prop_assert!(contracted.edge_count() < g.edge_count() + 1);
            if is_loop {
                prop_assert_eq!(contracted.vertex_count(), g.vertex_count());
                prop_assert_eq!(extracted.vertex_count(), g.vertex_count() - 1);
            } else {
                prop_assert_eq!(contracted.vertex_count(), g.vertex_count() - 1);
                prop_assert_eq!(extracted.vertex_count(), g.vertex_count() - 2);
            }
        }
    }

    #[test]
    fn union_adds_components(a in arb_graph(), b in arb_graph()) {
        let u = a.0.disjoint_union(&b.0);
        prop_assert_eq!(
            u.component_count(),
            a.0.component_count() + b.0.component_count()
        );
        prop_assert_eq!(u.vertex_count(), a.0.vertex_count() + b.0.vertex_count());
        prop_assert_eq!(u.edge_count(), a.0.edge_count() + b.0.edge_count());
    }

    #[test]
    fn degree_sum_law(g in arb_graph()) {
        let g = g.0;
        let total: usize = g.vertices().map(|u| g.degree(u).unwrap()).sum();
        let loops = g.edges().iter().filter(|(a, b)| a == b).count();
        prop_assert_eq!(total, 2 * (g.edge_count() - loops) + loops);
    }

    #[test]
    fn edgelist_round_trip(g in arb_graph()) {
        let g = g.0;
        let back = Graph::parse(&g.to_edgelist_string(), GraphFormat::EdgeList).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.component_count(), g.component_count());
        let canon = |g: &Graph| {
            let index: Vec<u32> = g.vertices().collect();
            let mut edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(u, w)| {
                    let i = index.binary_search(&u).unwrap();
                    let j = index.binary_search(&w).unwrap();
                    (i.min(j), i.max(j))
                })
                .collect();
            edges.sort();
            edges
        };
        prop_assert_eq!(canon(&back), canon(&g));
    }

    #[test]
    fn induced_subgraph_edges_are_inside(g in arb_graph(), mask in 0u32..32) {
        let g = g.0;
        let w: BTreeSet<u32> = g
            .vertices()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, v)| v)
            .collect();
        let sub = g.induced_subgraph(&w).unwrap();
        prop_assert_eq!(sub.vertex_count(), w.len());
        for &(u, x) in sub.edges() {
            prop_assert!(w.contains(&u) && w.contains(&x));
        }
        let expected = g
            .edges()
            .iter()
            .filter(|&&(u, x)| w.contains(&u) && w.contains(&x))
            .count();
        prop_assert_eq!(sub.edge_count(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn polynomial_degree_and_positivity(g in arb_graph()) {
        let g = g.0;
        let guard = SizeGuard::default();
        let h = scp_subset(&g, &guard).unwrap();
        let z = potts_subset(&g, &guard).unwrap();
        let q = scomp_subset(&g, &guard).unwrap();

        prop_assert_eq!(h.degree_in(Var::V).unwrap(), g.vertex_count() as i32);
        if g.edge_count() > 0 {
            prop_assert_eq!(z.degree_in(Var::Y).unwrap(), g.edge_count() as i32);
        }
        for poly in [&h, &z, &q] {
            for (_, c) in poly.terms() {
                prop_assert!(c > &BigInt::from(0));
            }
        }
        for (e, _) in q.terms() {
            prop_assert!(e.get(Var::X) <= e.get(Var::V));
        }
    }

    #[test]
    fn polynomials_are_multiplicative(a in arb_graph(), b in arb_graph()) {
        let guard = SizeGuard { max_vertices: 10, max_edges: 12, ..SizeGuard::default() };
        let u = a.0.disjoint_union(&b.0);
        if u.edge_count() <= guard.max_edges {
            let product = |f: &dyn Fn(&Graph) -> Polynomial| {
                (f(&a.0) * f(&b.0), f(&u))
            };
            let (lhs, rhs) = product(&|g| eep_recurrence(g, &guard).unwrap());
            prop_assert_eq!(lhs, rhs);
            let (lhs, rhs) = product(&|g| scp_subset(g, &guard).unwrap());
            prop_assert_eq!(lhs, rhs);
            let (lhs, rhs) = product(&|g| tcp_expansion(g, &guard).unwrap());
            prop_assert_eq!(lhs, rhs);
            let (lhs, rhs) = product(&|g| potts_subset(g, &guard).unwrap());
            prop_assert_eq!(lhs, rhs);
            let (lhs, rhs) = product(&|g| invariants::bad_coloring(g, &guard).unwrap());
            prop_assert_eq!(lhs, rhs);
            let (lhs, rhs) = product(&|g| invariants::bivariate_chromatic(g, &guard).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
