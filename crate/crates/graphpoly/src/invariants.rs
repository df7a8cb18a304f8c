//! The graph polynomials themselves, each computable by at least two
//! independent routes: a deletion/contraction/extraction recurrence and a
//! direct combinatorial enumeration.
//!
//! * `eep_*` — edge elimination polynomial ξ(G,x,y,z), the most general
//!   polynomial satisfying a linear recurrence in the three edge operations.
//! * `potts_*` — Potts model Z(G,x,y) = Σ_{A⊆E} x^{k(V,A)} y^{|A|}.
//! * `scp_*` — subgraph counting polynomial H(G,v,x,y) = Σ_{(W,F)⊆G}
//!   v^{|W|} x^{k(W,F)} y^{|F|}.
//! * `tcp_*` — trivariate chromatic polynomial P̃(G,x,y,z), the generating
//!   function over x-colorings for edges monochromatic in a color ≤ y.
//! * `scomp_subset` — subgraph component polynomial Q(G,v,x) over induced
//!   subgraphs.
//!
//! Everything is exact; size guards keep the exponential enumerations at
//! desk scale.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{EdgeRef, Graph, GraphError};
use crate::poly::{PolyError, Polynomial, Substitution, Var};

/// Caps on the exponential algorithms. The defaults keep every recurrence
/// and subset enumeration comfortably interactive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeGuard {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Bound on x^{|V|} for the coloring enumeration oracle.
    pub max_colorings: u64,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            max_vertices: 12,
            max_edges: 16,
            max_colorings: 10_000_000,
        }
    }
}

impl SizeGuard {
    pub fn with_max_edges(max_edges: usize) -> Self {
        SizeGuard {
            max_edges,
            ..SizeGuard::default()
        }
    }
}

/// Which edge the recurrences branch on. The computed polynomial is
/// invariant under the choice; the tests exercise that.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pivot {
    First,
    Last,
    Random(u64),
}

enum PivotState {
    First,
    Last,
    Random(Box<ChaCha8Rng>),
}

impl PivotState {
    fn new(pivot: Pivot) -> Self {
        match pivot {
            Pivot::First => PivotState::First,
            Pivot::Last => PivotState::Last,
            Pivot::Random(seed) => {
                PivotState::Random(Box::new(ChaCha8Rng::seed_from_u64(seed)))
            }
        }
    }

    fn pick(&mut self, edges: usize) -> EdgeRef {
        debug_assert!(edges > 0);
        EdgeRef(match self {
            PivotState::First => 0,
            PivotState::Last => edges - 1,
            PivotState::Random(rng) => rng.gen_range(0..edges),
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("size guard exceeded: {quantity} = {value} > {limit}")]
    SizeGuardExceeded {
        quantity: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("coloring enumeration would visit {colorings} assignments (limit {limit})")]
    EnumerationGuardExceeded { colorings: u128, limit: u64 },
    #[error("invalid palette: need 0 <= y <= x, got x = {x}, y = {y}")]
    InvalidPalette { x: i64, y: i64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn check_vertices(g: &Graph, guard: &SizeGuard) -> Result<(), InvariantError> {
    let limit = guard.max_vertices.min(30);
    if g.vertex_count() > limit {
        return Err(InvariantError::SizeGuardExceeded {
            quantity: "vertices",
            value: g.vertex_count(),
            limit,
        });
    }
    Ok(())
}

fn check_edges(g: &Graph, guard: &SizeGuard) -> Result<(), InvariantError> {
    let limit = guard.max_edges.min(62);
    if g.edge_count() > limit {
        return Err(InvariantError::SizeGuardExceeded {
            quantity: "edges",
            value: g.edge_count(),
            limit,
        });
    }
    Ok(())
}

fn check_guard(g: &Graph, guard: &SizeGuard) -> Result<(), InvariantError> {
    check_vertices(g, guard)?;
    check_edges(g, guard)
}

fn var(v: Var) -> Polynomial {
    Polynomial::var(v)
}

/// ξ(G,x,y,z) by the recurrence
/// `ξ(G) = ξ(G−e) + y·ξ(G/e) + z·ξ(G†e)` with `ξ(K₁) = x` and
/// multiplicativity over disjoint unions, branching on the first edge.
pub fn eep_recurrence(g: &Graph, guard: &SizeGuard) -> Result<Polynomial, InvariantError> {
    eep_recurrence_pivot(g, guard, Pivot::First)
}

pub fn eep_recurrence_pivot(
    g: &Graph,
    guard: &SizeGuard,
    pivot: Pivot,
) -> Result<Polynomial, InvariantError> {
    check_guard(g, guard)?;
    let mut state = PivotState::new(pivot);
    Ok(eep_rec(g, &mut state))
}

fn eep_rec(g: &Graph, state: &mut PivotState) -> Polynomial {
    if g.vertex_count() == 0 {
        return Polynomial::one();
    }
    if let Some(u) = g.isolated_vertex() {
        let rest = g.delete_vertex(u).expect("isolated vertex exists");
        return var(Var::X) * eep_rec(&rest, state);
    }
    let e = state.pick(g.edge_count());
    let deleted = eep_rec(&g.delete_edge(e).expect("pivot edge"), state);
    let contracted = eep_rec(&g.contract_edge(e).expect("pivot edge"), state);
    let extracted = eep_rec(&g.extract_edge(e).expect("pivot edge"), state);
    deleted + var(Var::Y) * contracted + var(Var::Z) * extracted
}

/// Z(G,x,y) by enumerating all 2^{|E|} spanning edge sub-multisets.
pub fn potts_subset(g: &Graph, guard: &SizeGuard) -> Result<Polynomial, InvariantError> {
    check_edges(g, guard)?;
    let verts: Vec<u32> = g.vertices().collect();
    let index: BTreeMap<u32, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let m = g.edge_count();
    let mut counts: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    for mask in 0u64..(1u64 << m) {
        let mut uf = UnionFind::new(verts.len());
        for (i, &(u, w)) in g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                uf.union(index[&u], index[&w]);
            }
        }
        let k = uf.count();
        *counts.entry((k, mask.count_ones())).or_insert(0) += 1;
    }
    Ok(counts_to_poly(counts.into_iter().map(|((k, a), c)| {
        (Exps::new().x(k as i32).y(a as i32), c)
    })))
}

/// Z(G,x,y) by the deletion–contraction recurrence
/// `Z(G) = Z(G−e) + y·Z(G/e)` with `Z(K₁) = x`.
pub fn potts_recurrence(g: &Graph, guard: &SizeGuard) -> Result<Polynomial, InvariantError> {
    potts_recurrence_pivot(g, guard, Pivot::First)
}

pub fn potts_recurrence_pivot(
    g: &Graph,
    guard: &SizeGuard,
    pivot: Pivot,
) -> Result<Polynomial, InvariantError> {
    check_guard(g, guard)?;
    let mut state = PivotState::new(pivot);
    Ok(potts_rec(g, &mut state))
}

fn potts_rec(g: &Graph, state: &mut PivotState) -> Polynomial {
    if g.vertex_count() == 0 {
        return Polynomial::one();
    }
    if let Some(u) = g.isolated_vertex() {
        let rest = g.delete_vertex(u).expect("isolated vertex exists");
        return var(Var::X) * potts_rec(&rest, state);
    }
    let e = state.pick(g.edge_count());
    let deleted = potts_rec(&g.delete_edge(e).expect("pivot edge"), state);
    let contracted = potts_rec(&g.contract_edge(e).expect("pivot edge"), state);
    deleted + var(Var::Y) * contracted
}

/// H(G,v,x,y) by enumerating every subgraph (W,F): vertex subsets W
/// together with sub-multisets F of the edges inside W.
pub fn scp_subset(g: &Graph, guard: &SizeGuard) -> Result<Polynomial, InvariantError> {
    check_guard(g, guard)?;
    let verts: Vec<u32> = g.vertices().collect();
    let index: BTreeMap<u32, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = verts.len();
    let mut counts: BTreeMap<(u32, usize, u32), u64> = BTreeMap::new();
    for wmask in 0u64..(1u64 << n) {
        let inside: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .filter(|&&(u, w)| wmask >> index[&u] & 1 == 1 && wmask >> index[&w] & 1 == 1)
            .map(|&(u, w)| (index[&u], index[&w]))
            .collect();
        let wsize = wmask.count_ones();
        // Positions of W's vertices, for a compact union-find.
        let mut local = vec![usize::MAX; n];
        let mut next = 0usize;
        for (i, slot) in local.iter_mut().enumerate() {
            if wmask >> i & 1 == 1 {
                *slot = next;
                next += 1;
            }
        }
        for fmask in 0u64..(1u64 << inside.len()) {
            let mut uf = UnionFind::new(wsize as usize);
            for (j, &(a, b)) in inside.iter().enumerate() {
                if fmask >> j & 1 == 1 {
                    uf.union(local[a], local[b]);
                }
            }
            let k = uf.count();
            *counts.entry((wsize, k, fmask.count_ones())).or_insert(0) += 1;
        }
    }
    Ok(counts_to_poly(counts.into_iter().map(|((w, k, f), c)| {
        (Exps::new().v(w as i32).x(k as i32).y(f as i32), c)
    })))
}

/// H(G,v,x,y) as `Σ_{W⊆V} v^{|W|} · Z(G[W],x,y)`, an independent route
/// through the Potts models of the induced subgraphs.
pub fn scp_induced(g: &Graph, guard: &SizeGuard) -> Result<Polynomial, InvariantError> {
    check_guard(g, guard)?;
    let verts: Vec<u32> = g.vertices().collect();
    let n = verts.len();
    let mut acc = Polynomial::zero();
    for wmask in 0u64..(1u64 << n) {
        let w: BTreeSet<u32> = verts
            .iter()
            .enumerate()
            .filter(|(i, _)| wmask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let induced = g.induced_subgraph(&w)?;
        let z = potts_subset(&induced, guard)?;
        let vpow = Polynomial::monomial(
            crate::poly::Exponents::of_var(Var::V, w.len() as i32),
            BigInt::from(1),
        );
        acc = acc + vpow * z;
    }
    Ok(acc)
}

/// H(G,v,x,y) by the recurrence
/// `H(G) = H(G−e) + v^{|e|−1}·y·H(G/e) − v^{|e|−1}·y·H(G†e)` with
/// `H(K₁) = 1 + vx`; `|e|` is the number of distinct endpoints, so loops
/// carry no `v` factor.
pub fn scp_recurrence(g: &Graph, guard: &SizeGuard) -> Result<Polynomial, InvariantError> {
    scp_recurrence_pivot(g, guard, Pivot::First)
}

pub fn scp_recurrence_pivot(
    g: &Graph,
    guard: &SizeGuard,
    pivot: Pivot,
) -> Result<Polynomial, InvariantError> {
    check_guard(g, guard)?;
    let mut state = PivotState::new(pivot);
    Ok(scp_rec(g, &mut state))
}

fn scp_rec(g: &Graph, state: &mut PivotState) -> Polynomial {
    if g.vertex_count() == 0 {
        return Polynomial::one();
    }
    if let Some(u) = g.isolated_vertex() {
        let rest = g.delete_vertex(u).expect("isolated vertex exists");
        let base = Polynomial::one() + var(Var::V) * var(Var::X);
        return base * scp_rec(&rest, state);
    }
    let e = state.pick(g.edge_count());
    let is_loop = g.is_loop(e).expect("pivot edge");
    let deleted = scp_rec(&g.delete_edge(e).expect("pivot edge"), state);
    let contracted = scp_rec(&g.contract_edge(e).expect("pivot edge"), state);
    let extracted = scp_rec(&g.extract_edge(e).expect("pivot edge"), state);
    let weight = if is_loop {
        var(Var::Y)
    } else {
        var(Var::V) * var(Var::Y)
    };
    deleted + weight * (contracted - extracted)
}

/// The bad coloring polynomial χ̃(G,x,z) = Z(G,x,z−1): colorings graded by
/// their number of monochromatic edges.
pub fn bad_coloring(g: &Graph, guard: &SizeGuard) -> Result<Polynomial, InvariantError> {
    let z = potts_subset(g, guard)?;
    let subst = Substitution::new().bind(Var::Y, var(Var::Z) - Polynomial::one());
    Ok(z.substitute(&subst)?)
}

/// Same polynomial via the Potts recurrence, for cross-checking.
pub fn bad_coloring_recurrence(
    g: &Graph,
    guard: &SizeGuard,
) -> Result<Polynomial, InvariantError> {
    let z = potts_recurrence(g, guard)?;
    let subst = Substitution::new().bind(Var::Y, var(Var::Z) - Polynomial::one());
    Ok(z.substitute(&subst)?)
}

/// P̃(G,x,y,z) as Σ_{W⊆V} (x−y)^{|W|} · χ̃(G−W, y, z): the vertices in W
/// take one of the x−y high colors, the rest are colored with the y low
/// colors and graded by monochromatic edges.
pub fn tcp_expansion(g: &Graph, guard: &SizeGuard) -> Result<Polynomial, InvariantError> {
    check_guard(g, guard)?;
    let verts: Vec<u32> = g.vertices().collect();
    let n = verts.len();
    let x_minus_y = var(Var::X) - var(Var::Y);
    let mut powers = Vec::with_capacity(n + 1);
    powers.push(Polynomial::one());
    for i in 1..=n {
        powers.push(powers[i - 1].checked_mul(&x_minus_y)?);
    }
    // χ̃(h, y, z) = Z(h, x, y) with x ↦ y and y ↦ z−1, simultaneously.
    let chi_subst = Substitution::new()
        .bind(Var::X, var(Var::Y))
        .bind(Var::Y, var(Var::Z) - Polynomial::one());
    let mut acc = Polynomial::zero();
    for wmask in 0u64..(1u64 << n) {
        let w: BTreeSet<u32> = verts
            .iter()
            .enumerate()
            .filter(|(i, _)| wmask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let rest = g.delete_vertices(&w)?;
        let chi = potts_subset(&rest, guard)?.substitute(&chi_subst)?;
        acc = acc + powers[w.len()].clone() * chi;
    }
    Ok(acc)
}

/// P̃(G,x,y,z) by the recurrence
/// `P̃(G) = P̃(G−e) + (z−1)·P̃(G/e) + (1−z)(x−y)·P̃(G†e)` with `P̃(K₁) = x`.
pub fn tcp_recurrence(g: &Graph, guard: &SizeGuard) -> Result<Polynomial, InvariantError> {
    tcp_recurrence_pivot(g, guard, Pivot::First)
}

pub fn tcp_recurrence_pivot(
    g: &Graph,
    guard: &SizeGuard,
    pivot: Pivot,
) -> Result<Polynomial, InvariantError> {
    check_guard(g, guard)?;
    let mut state = PivotState::new(pivot);
    Ok(tcp_rec(g, &mut state))
}

fn tcp_rec(g: &Graph, state: &mut PivotState) -> Polynomial {
    if g.vertex_count() == 0 {
        return Polynomial::one();
    }
    if let Some(u) = g.isolated_vertex() {
        let rest = g.delete_vertex(u).expect("isolated vertex exists");
        return var(Var::X) * tcp_rec(&rest, state);
    }
    let e = state.pick(g.edge_count());
    let deleted = tcp_rec(&g.delete_edge(e).expect("pivot edge"), state);
    let contracted = tcp_rec(&g.contract_edge(e).expect("pivot edge"), state);
    let extracted = tcp_rec(&g.extract_edge(e).expect("pivot edge"), state);
    let z_minus_1 = var(Var::Z) - Polynomial::one();
    let good_weight = (Polynomial::one() - var(Var::Z)) * (var(Var::X) - var(Var::Y));
    deleted + z_minus_1 * contracted + good_weight * extracted
}

/// P̃(G,x,y,·) for concrete palette sizes, by enumerating all x^{|V|}
/// colorings. Returns a univariate polynomial in z: each coloring
/// contributes z^{#edges monochromatic in a color ≤ y}. A loop is always
/// monochromatic.
pub fn tcp_coloring_oracle(
    g: &Graph,
    x: i64,
    y: i64,
    guard: &SizeGuard,
) -> Result<Polynomial, InvariantError> {
    if x < 0 || y < 0 || y > x {
        return Err(InvariantError::InvalidPalette { x, y });
    }
    let n = g.vertex_count();
    let total = (x as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > guard.max_colorings as u128 {
        return Err(InvariantError::EnumerationGuardExceeded {
            colorings: total,
            limit: guard.max_colorings,
        });
    }
    if n > 0 && x == 0 {
        return Ok(Polynomial::zero());
    }
    let verts: Vec<u32> = g.vertices().collect();
    let index: BTreeMap<u32, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, w)| (index[&u], index[&w]))
        .collect();
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    let mut coloring = vec![1i64; n];
    loop {
        let bad = edges
            .iter()
            .filter(|&&(a, b)| coloring[a] == coloring[b] && coloring[a] <= y)
            .count();
        *counts.entry(bad).or_insert(0) += 1;
        // Next assignment in mixed-radix order.
        let mut pos = 0;
        loop {
            if pos == n {
                let poly = counts_to_poly(
                    counts
                        .into_iter()
                        .map(|(bad, c)| (Exps::new().z(bad as i32), c)),
                );
                return Ok(poly);
            }
            if coloring[pos] < x {
                coloring[pos] += 1;
                break;
            }
            coloring[pos] = 1;
            pos += 1;
        }
    }
}

/// The bivariate chromatic polynomial P(G,x,y) = P̃(G,x,y,0): colorings in
/// which no edge is monochromatic in one of the first y colors.
pub fn bivariate_chromatic(g: &Graph, guard: &SizeGuard) -> Result<Polynomial, InvariantError> {
    let pt = tcp_expansion(g, guard)?;
    let subst = Substitution::new().bind(Var::Z, Polynomial::zero());
    Ok(pt.substitute(&subst)?)
}

/// `Q(G,v,x) = Σ_{W⊆V} v^{|W|} x^{k(G[W])}`, the subgraph component
/// polynomial over induced subgraphs.
pub fn scomp_subset(g: &Graph, guard: &SizeGuard) -> Result<Polynomial, InvariantError> {
    check_guard(g, guard)?;
    let verts: Vec<u32> = g.vertices().collect();
    let index: BTreeMap<u32, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = verts.len();
    let mut counts: BTreeMap<(u32, usize), u64> = BTreeMap::new();
    for wmask in 0u64..(1u64 << n) {
        let mut local = vec![usize::MAX; n];
        let mut next = 0usize;
        for (i, slot) in local.iter_mut().enumerate() {
            if wmask >> i & 1 == 1 {
                *slot = next;
                next += 1;
            }
        }
        let mut uf = UnionFind::new(next);
        for &(u, w) in g.edges() {
            let (a, b) = (index[&u], index[&w]);
            if wmask >> a & 1 == 1 && wmask >> b & 1 == 1 {
                uf.union(local[a], local[b]);
            }
        }
        let k = uf.count();
        *counts.entry((wmask.count_ones(), k)).or_insert(0) += 1;
    }
    Ok(counts_to_poly(counts.into_iter().map(|((w, k), c)| {
        (Exps::new().v(w as i32).x(k as i32), c)
    })))
}

/// Tiny builder for exponent tuples, local to this module.
#[derive(Clone, Copy)]
struct Exps(crate::poly::Exponents);

impl Exps {
    fn new() -> Self {
        Exps(crate::poly::Exponents::ZERO)
    }
    fn v(self, e: i32) -> Self {
        Exps(self.0.with(Var::V, e))
    }
    fn x(self, e: i32) -> Self {
        Exps(self.0.with(Var::X, e))
    }
    fn y(self, e: i32) -> Self {
        Exps(self.0.with(Var::Y, e))
    }
    fn z(self, e: i32) -> Self {
        Exps(self.0.with(Var::Z, e))
    }
}

fn counts_to_poly(items: impl Iterator<Item = (Exps, u64)>) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (e, c) in items {
        acc = acc + Polynomial::monomial(e.0, BigInt::from(c));
    }
    acc
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Polynomial {
        Polynomial::parse_text(text).unwrap()
    }

    fn guard() -> SizeGuard {
        SizeGuard::default()
    }

    fn loop_graph() -> Graph {
        Graph::from_parts([1], [(1, 1)]).unwrap()
    }

    #[test]
    fn eep_base_cases() {
        assert_eq!(eep_recurrence(&Graph::edgeless(1), &guard()).unwrap(), p("x"));
        assert_eq!(
            eep_recurrence(&Graph::complete(2), &guard()).unwrap(),
            p("x^2 + x*y + z")
        );
        assert_eq!(
            eep_recurrence(&Graph::edgeless(2), &guard()).unwrap(),
            p("x^2")
        );
    }

    #[test]
    fn eep_size_guard() {
        let g = Graph::complete(7); // 21 edges > 16
        assert!(matches!(
            eep_recurrence(&g, &guard()),
            Err(InvariantError::SizeGuardExceeded { .. })
        ));
    }

    #[test]
    fn potts_subset_cases() {
        assert_eq!(
            potts_subset(&Graph::complete(2), &guard()).unwrap(),
            p("x^2 + x*y")
        );
        assert_eq!(
            potts_subset(&Graph::complete(3), &guard()).unwrap(),
            p("x^3 + 3*x^2*y + 3*x*y^2 + x*y^3")
        );
        assert_eq!(potts_subset(&Graph::new(), &guard()).unwrap(), p("1"));
    }

    #[test]
    fn potts_recurrence_cases() {
        assert_eq!(
            potts_recurrence(&Graph::complete(2), &guard()).unwrap(),
            p("x^2 + x*y")
        );
        assert_eq!(
            potts_recurrence(&loop_graph(), &guard()).unwrap(),
            p("x + x*y")
        );
        assert_eq!(
            potts_recurrence(&Graph::edgeless(1), &guard()).unwrap(),
            p("x")
        );
    }

    #[test]
    fn scp_subset_cases() {
        assert_eq!(
            scp_subset(&Graph::edgeless(1), &guard()).unwrap(),
            p("1 + v*x")
        );
        assert_eq!(
            scp_subset(&Graph::complete(2), &guard()).unwrap(),
            p("1 + 2*v*x + v^2*x^2 + v^2*x*y")
        );
        assert_eq!(
            scp_subset(&loop_graph(), &guard()).unwrap(),
            p("1 + v*x + v*x*y")
        );
    }

    #[test]
    fn scp_induced_cases() {
        assert_eq!(
            scp_induced(&Graph::complete(2), &guard()).unwrap(),
            p("1 + 2*v*x + v^2*x^2 + v^2*x*y")
        );
        assert_eq!(scp_induced(&Graph::new(), &guard()).unwrap(), p("1"));
        assert_eq!(
            scp_induced(&Graph::edgeless(1), &guard()).unwrap(),
            p("1 + v*x")
        );
    }

    #[test]
    fn scp_recurrence_cases() {
        assert_eq!(
            scp_recurrence(&Graph::complete(2), &guard()).unwrap(),
            p("1 + 2*v*x + v^2*x^2 + v^2*x*y")
        );
        assert_eq!(
            scp_recurrence(&loop_graph(), &guard()).unwrap(),
            p("1 + v*x + v*x*y")
        );
        assert_eq!(
            scp_recurrence(&Graph::edgeless(2), &guard()).unwrap(),
            p("1 + v*x") * p("1 + v*x")
        );
    }

    #[test]
    fn tcp_expansion_cases() {
        assert_eq!(tcp_expansion(&Graph::edgeless(1), &guard()).unwrap(), p("x"));
        assert_eq!(
            tcp_expansion(&Graph::complete(2), &guard()).unwrap(),
            p("x^2 - y + y*z")
        );
        assert_eq!(tcp_expansion(&Graph::new(), &guard()).unwrap(), p("1"));
    }

    #[test]
    fn tcp_recurrence_cases() {
        assert_eq!(
            tcp_recurrence(&Graph::complete(2), &guard()).unwrap(),
            p("x^2 - y + y*z")
        );
        assert_eq!(tcp_recurrence(&Graph::edgeless(1), &guard()).unwrap(), p("x"));
        let k2_k1 = Graph::complete(2).disjoint_union(&Graph::edgeless(1));
        assert_eq!(
            tcp_recurrence(&k2_k1, &guard()).unwrap(),
            p("x") * p("x^2 - y + y*z")
        );
    }

    #[test]
    fn tcp_oracle_cases() {
        assert_eq!(
            tcp_coloring_oracle(&Graph::complete(2), 2, 1, &guard()).unwrap(),
            p("3 + z")
        );
        assert_eq!(
            tcp_coloring_oracle(&Graph::edgeless(1), 3, 0, &guard()).unwrap(),
            p("3")
        );
        assert_eq!(
            tcp_coloring_oracle(&Graph::complete(2), 0, 0, &guard()).unwrap(),
            Polynomial::zero()
        );
    }

    #[test]
    fn tcp_oracle_guards() {
        assert!(matches!(
            tcp_coloring_oracle(&Graph::complete(2), 1, 2, &guard()),
            Err(InvariantError::InvalidPalette { .. })
        ));
        assert!(matches!(
            tcp_coloring_oracle(&Graph::complete(2), -1, -1, &guard()),
            Err(InvariantError::InvalidPalette { .. })
        ));
        let tight = SizeGuard {
            max_colorings: 10,
            ..SizeGuard::default()
        };
        assert!(matches!(
            tcp_coloring_oracle(&Graph::complete(4), 3, 1, &tight),
            Err(InvariantError::EnumerationGuardExceeded { .. })
        ));
    }

    #[test]
    fn loop_is_always_monochromatic_in_oracle() {
        // One vertex with a loop, x=3, y=1: color 1 is bad (z), colors 2,3 good.
        assert_eq!(
            tcp_coloring_oracle(&loop_graph(), 3, 1, &guard()).unwrap(),
            p("2 + z")
        );
    }

    #[test]
    fn bivariate_chromatic_cases() {
        assert_eq!(
            bivariate_chromatic(&Graph::complete(2), &guard()).unwrap(),
            p("x^2 - y")
        );
        assert_eq!(
            bivariate_chromatic(&Graph::edgeless(1), &guard()).unwrap(),
            p("x")
        );
        let chromatic = bivariate_chromatic(&Graph::complete(2), &guard())
            .unwrap()
            .evaluate(&[(Var::X, 2), (Var::Y, 2)])
            .unwrap();
        assert_eq!(chromatic, num_rational::BigRational::from(BigInt::from(2)));
    }

    #[test]
    fn scomp_cases() {
        assert_eq!(
            scomp_subset(&Graph::complete(2), &guard()).unwrap(),
            p("1 + 2*v*x + v^2*x")
        );
        assert_eq!(
            scomp_subset(&Graph::path(3), &guard()).unwrap(),
            p("1 + 3*v*x + 2*v^2*x + v^2*x^2 + v^3*x")
        );
        assert_eq!(scomp_subset(&Graph::new(), &guard()).unwrap(), p("1"));
    }

    #[test]
    fn pivot_choice_does_not_change_results() {
        let graphs = [
            Graph::complete(4),
            Graph::path(5),
            Graph::from_parts([1, 2, 3], [(1, 2), (1, 2), (3, 3), (2, 3)]).unwrap(),
        ];
        for g in &graphs {
            let first = eep_recurrence_pivot(g, &guard(), Pivot::First).unwrap();
            assert_eq!(first, eep_recurrence_pivot(g, &guard(), Pivot::Last).unwrap());
            assert_eq!(
                first,
                eep_recurrence_pivot(g, &guard(), Pivot::Random(7)).unwrap()
            );
            let first = scp_recurrence_pivot(g, &guard(), Pivot::First).unwrap();
            assert_eq!(first, scp_recurrence_pivot(g, &guard(), Pivot::Last).unwrap());
            assert_eq!(
                first,
                scp_recurrence_pivot(g, &guard(), Pivot::Random(7)).unwrap()
            );
            let first = tcp_recurrence_pivot(g, &guard(), Pivot::First).unwrap();
            assert_eq!(first, tcp_recurrence_pivot(g, &guard(), Pivot::Last).unwrap());
            assert_eq!(
                first,
                tcp_recurrence_pivot(g, &guard(), Pivot::Random(7)).unwrap()
            );
        }
    }

    #[test]
    fn loop_conventions_agree_across_algorithms() {
        let g = Graph::from_parts([1, 2], [(1, 1), (1, 2), (1, 2)]).unwrap();
        assert_eq!(
            potts_subset(&g, &guard()).unwrap(),
            potts_recurrence(&g, &guard()).unwrap()
        );
        let h = scp_subset(&g, &guard()).unwrap();
        assert_eq!(h, scp_induced(&g, &guard()).unwrap());
        assert_eq!(h, scp_recurrence(&g, &guard()).unwrap());
        assert_eq!(
            tcp_expansion(&g, &guard()).unwrap(),
            tcp_recurrence(&g, &guard()).unwrap()
        );
    }
}
