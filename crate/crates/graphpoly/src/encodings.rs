//! What the polynomials encode: reconstruction of the subgraph counting
//! polynomial from the polynomial deck of a simple graph, and extraction of
//! the degree sequence from the trivariate chromatic polynomial.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::corpus;
use crate::graph::{Graph, GraphError};
use crate::invariants::{scp_subset, InvariantError, SizeGuard};
use crate::poly::{PolyError, Polynomial, Substitution, Var};

/// Hard cap on the brute-force candidate search: 2^{n(n-1)/2} labeled
/// graphs are enumerated.
pub const MAX_BRUTE_FORCE_VERTICES: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EncodingError {
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("invalid polynomial deck: {0}")]
    DeckShape(String),
    #[error("deck stratum v^{stratum} has a coefficient not divisible by {divisor}; inconsistent deck")]
    NonIntegralDivision { stratum: i32, divisor: usize },
    #[error("brute-force reconstruction supports at most {limit} vertices, got {value}")]
    SizeGuardExceeded { value: usize, limit: usize },
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The multiset of subgraph-counting polynomials of the vertex-deleted
/// subgraphs, together with the original vertex count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyDeck {
    polys: Vec<Polynomial>,
    n: usize,
}

impl PolyDeck {
    pub fn new(polys: Vec<Polynomial>, n: usize) -> Result<PolyDeck, EncodingError> {
        if n == 0 {
            return Err(EncodingError::DeckShape(
                "vertex count must be at least 1".to_string(),
            ));
        }
        if polys.len() != n {
            return Err(EncodingError::DeckShape(format!(
                "deck has {} members but n = {n}",
                polys.len()
            )));
        }
        for (i, p) in polys.iter().enumerate() {
            if !p.is_polynomial() {
                return Err(EncodingError::DeckShape(format!(
                    "deck member {i} has negative exponents"
                )));
            }
            if let Ok(d) = p.degree_in(Var::V) {
                if d as i64 > n as i64 - 1 {
                    return Err(EncodingError::DeckShape(format!(
                        "deck member {i} has v-degree {d} > n-1 = {}",
                        n - 1
                    )));
                }
            }
        }
        Ok(PolyDeck { polys, n })
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Order-insensitive fingerprint: the sorted canonical texts.
    fn key(&self) -> Vec<String> {
        deck_key(&self.polys)
    }
}

fn deck_key(polys: &[Polynomial]) -> Vec<String> {
    let mut key: Vec<String> = polys.iter().map(Polynomial::to_canonical_text).collect();
    key.sort();
    key
}

/// Degree histogram `i -> d(G,i)` plus the edge count it was read off
/// with. Zero counts are omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeHistogram {
    counts: BTreeMap<usize, u64>,
    edge_count: usize,
}

impl DegreeHistogram {
    pub fn from_graph(g: &Graph) -> DegreeHistogram {
        DegreeHistogram {
            counts: g
                .degree_histogram()
                .into_iter()
                .map(|(d, c)| (d, c as u64))
                .collect(),
            edge_count: g.edge_count(),
        }
    }

    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn get(&self, degree: usize) -> u64 {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    pub fn vertex_count(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }
}

/// The polynomial deck `{H(G - u) | u ∈ V}` of a graph.
pub fn polynomial_deck(g: &Graph, guard: &SizeGuard) -> Result<PolyDeck, EncodingError> {
    if g.vertex_count() == 0 {
        return Err(EncodingError::EmptyGraph);
    }
    let polys = g
        .deck()?
        .iter()
        .map(|card| scp_subset(card, guard))
        .collect::<Result<Vec<_>, _>>()?;
    PolyDeck::new(polys, g.vertex_count())
}

/// Recovers every `v^i` stratum of H(G) for `i < n` from the deck: in the
/// sum of the deck polynomials each summand containing `v^i` appears
/// exactly `n - i` times, so the sum divides stratum-wise. The `v^n`
/// stratum (the Potts model of G itself) is absent from the result.
pub fn reconstruct_lower_coeffs(deck: &PolyDeck) -> Result<Polynomial, EncodingError> {
    let n = deck.n();
    let mut sum = Polynomial::zero();
    for p in deck.polys() {
        sum = sum.add(p);
    }
    let mut out = Polynomial::zero();
    for (exps, coeff) in sum.terms() {
        let i = exps.get(Var::V);
        let divisor = n - i as usize;
        let (q, r) = coeff.div_rem(&BigInt::from(divisor));
        if !r.is_zero() {
            return Err(EncodingError::NonIntegralDivision {
                stratum: i,
                divisor,
            });
        }
        out = out.add(&Polynomial::monomial(*exps, q));
    }
    Ok(out)
}

type CandidateTable = HashMap<Vec<String>, Vec<Polynomial>>;

fn candidate_table(n: usize) -> Arc<CandidateTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CandidateTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut cache = cache.lock().expect("candidate table lock");
    if let Some(table) = cache.get(&n) {
        return Arc::clone(table);
    }
    let guard = SizeGuard {
        max_vertices: n.max(1),
        max_edges: n * (n.saturating_sub(1)) / 2,
        ..SizeGuard::default()
    };
    let masks: Vec<u64> = (0..(1u64 << (n * (n - 1) / 2))).collect();
    let entries: Vec<(Vec<String>, Polynomial)> = masks
        .par_iter()
        .map(|&mask| {
            let g = corpus::labeled_simple_graph(n as u32, mask);
            let deck_polys: Vec<Polynomial> = g
                .deck()
                .expect("n >= 1")
                .iter()
                .map(|card| scp_subset(card, &guard).expect("guard sized for enumeration"))
                .collect();
            let h = scp_subset(&g, &guard).expect("guard sized for enumeration");
            (deck_key(&deck_polys), h)
        })
        .collect();
    let mut table: CandidateTable = HashMap::new();
    for (key, h) in entries {
        let bucket = table.entry(key).or_default();
        if !bucket.contains(&h) {
            bucket.push(h);
        }
    }
    for bucket in table.values_mut() {
        bucket.sort_by_key(Polynomial::to_canonical_text);
    }
    let table = Arc::new(table);
    cache.insert(n, Arc::clone(&table));
    table
}

/// Scans every labeled simple graph on `n` vertices and returns the
/// distinct subgraph-counting polynomials of those whose polynomial deck
/// equals the given one as a multiset (compared via canonical text). For
/// decks of simple graphs with `n >= 3` the result is predicted to be a
/// singleton. The candidate table is cached per `n` and the scan is
/// partitioned across threads.
pub fn brute_force_reconstruct_check(
    deck: &PolyDeck,
) -> Result<Vec<Polynomial>, EncodingError> {
    let n = deck.n();
    if n > MAX_BRUTE_FORCE_VERTICES {
        return Err(EncodingError::SizeGuardExceeded {
            value: n,
            limit: MAX_BRUTE_FORCE_VERTICES,
        });
    }
    let table = candidate_table(n);
    Ok(table.get(&deck.key()).cloned().unwrap_or_default())
}

/// Reads the degree histogram out of P̃(G,x,y,z): with R = P̃(G, v+1, 1, z)
/// one has R = Σ_{W⊆V} v^{|W|} z^{|E(G−W)|}, so `d(G,i)` is the
/// coefficient of `v^1 z^{|E|-i}` and `|E| = deg_z R`.
pub fn degree_histogram_from_tcp(pt: &Polynomial) -> Result<DegreeHistogram, EncodingError> {
    if pt.contains_var(Var::V) {
        return Err(EncodingError::MalformedInput(
            "input already contains the variable v".to_string(),
        ));
    }
    if !pt.is_polynomial() {
        return Err(EncodingError::MalformedInput(
            "input has negative exponents".to_string(),
        ));
    }
    if pt.is_zero() {
        return Err(EncodingError::MalformedInput(
            "the zero polynomial is not a trivariate chromatic polynomial".to_string(),
        ));
    }
    let subst = Substitution::new()
        .bind(Var::X, Polynomial::var(Var::V).add(&Polynomial::one()))
        .bind(Var::Y, Polynomial::one());
    let r = pt.substitute(&subst)?;
    if r.is_zero() || r.contains_var(Var::X) || r.contains_var(Var::Y) {
        return Err(EncodingError::MalformedInput(
            "substituted polynomial is not of the expected shape".to_string(),
        ));
    }
    let m = r.degree_in(Var::Z)?;
    if m < 0 {
        return Err(EncodingError::MalformedInput(
            "negative z-degree after substitution".to_string(),
        ));
    }
    // The W = ∅ summand forces the v^0 stratum to be exactly z^m.
    let base = r.coefficient_of(&[(Var::V, 0)]);
    let want = Polynomial::monomial(crate::poly::Exponents::of_var(Var::Z, m), BigInt::one());
    if base != want {
        return Err(EncodingError::MalformedInput(format!(
            "v^0 stratum is {}, expected z^{m}",
            base.to_canonical_text()
        )));
    }
    let vertex_count = r.degree_in(Var::V)? as i64;
    let stratum = r.coefficient_of(&[(Var::V, 1)]);
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    let mut total: i64 = 0;
    for (exps, coeff) in stratum.terms() {
        let ez = exps.get(Var::Z);
        let degree = m - ez;
        let c = coeff
            .to_u64()
            .filter(|_| !coeff.is_negative())
            .ok_or_else(|| {
                EncodingError::MalformedInput(format!(
                    "v^1 z^{ez} coefficient {coeff} is not a small nonnegative integer"
                ))
            })?;
        if c > 0 {
            counts.insert(degree as usize, c);
            total += c as i64;
        }
    }
    if total != vertex_count {
        return Err(EncodingError::MalformedInput(format!(
            "v^1 stratum counts sum to {total}, expected the vertex count {vertex_count}"
        )));
    }
    Ok(DegreeHistogram {
        counts,
        edge_count: m as usize,
    })
}

/// Deck file format: line 1 is `n`, then `n` canonical-text polynomial
/// lines.
pub fn write_deck(deck: &PolyDeck) -> String {
    let mut out = format!("{}\n", deck.n());
    for p in deck.polys() {
        out.push_str(&p.to_canonical_text());
        out.push('\n');
    }
    out
}

pub fn parse_deck(text: &str) -> Result<PolyDeck, EncodingError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| EncodingError::MalformedInput("empty deck file".to_string()))?;
    let n: usize = header.parse().map_err(|_| {
        EncodingError::MalformedInput(format!(
            "line {lineno}: expected the vertex count, got {header:?}"
        ))
    })?;
    let mut polys = Vec::with_capacity(n);
    for (lineno, line) in lines {
        let p = Polynomial::parse_text(line).map_err(|e| {
            EncodingError::MalformedInput(format!("line {lineno}: {e}"))
        })?;
        polys.push(p);
    }
    PolyDeck::new(polys, n)
}
