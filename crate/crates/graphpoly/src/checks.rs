//! Per-graph identity suite: cross-algorithm agreement, specializations,
//! transform round trips, the Potts stratum identity, the degree histogram
//! and the deck-sum counting identity, evaluated with exact arithmetic.

use num_bigint::BigInt;
use thiserror::Error;

use crate::encodings::{
    degree_histogram_from_tcp, polynomial_deck, reconstruct_lower_coeffs, DegreeHistogram,
    EncodingError,
};
use crate::graph::Graph;
use crate::invariants::{
    bad_coloring, bivariate_chromatic, eep_recurrence, eep_recurrence_pivot, potts_recurrence,
    potts_subset, scomp_subset, scp_induced, scp_recurrence, scp_recurrence_pivot, scp_subset,
    tcp_expansion, tcp_recurrence, tcp_recurrence_pivot, InvariantError, Pivot, SizeGuard,
};
use crate::poly::{Exponents, Polynomial, Substitution, Var};
use crate::transforms::{
    eep_from_scp, eep_from_tcp, scomp_from_scp_forest, scp_from_eep, scp_from_scomp_forest,
    tcp_from_eep,
};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Encoding(#[from] EncodingError),
}

/// Outcome of one identity on one graph.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: Option<String>,
}

impl Check {
    fn ok(name: &'static str) -> Check {
        Check {
            name,
            pass: true,
            detail: None,
        }
    }

    fn fail(name: &'static str, detail: String) -> Check {
        Check {
            name,
            pass: false,
            detail: Some(detail),
        }
    }

    fn equal(name: &'static str, lhs: &Polynomial, rhs: &Polynomial) -> Check {
        if lhs == rhs {
            Check::ok(name)
        } else {
            Check::fail(
                name,
                format!("{} != {}", lhs.to_canonical_text(), rhs.to_canonical_text()),
            )
        }
    }
}

/// Runs every identity on `g`. Guard violations surface as errors (the
/// graph is too large to check), identity violations as failed checks.
pub fn identity_suite(g: &Graph, guard: &SizeGuard) -> Result<Vec<Check>, SuiteError> {
    let n = g.vertex_count();
    let mut checks = Vec::new();

    let z_sub = potts_subset(g, guard)?;
    let z_rec = potts_recurrence(g, guard)?;
    let h_sub = scp_subset(g, guard)?;
    let h_ind = scp_induced(g, guard)?;
    let h_rec = scp_recurrence(g, guard)?;
    let xi = eep_recurrence(g, guard)?;
    let pt_exp = tcp_expansion(g, guard)?;
    let pt_rec = tcp_recurrence(g, guard)?;
    let chi = bad_coloring(g, guard)?;
    let p_biv = bivariate_chromatic(g, guard)?;

    checks.push(Check::equal("potts: subset = recurrence", &z_sub, &z_rec));
    checks.push(Check::equal("scp: subset = induced", &h_sub, &h_ind));
    checks.push(Check::equal("scp: subset = recurrence", &h_sub, &h_rec));
    checks.push(Check::equal(
        "tcp: expansion = recurrence",
        &pt_exp,
        &pt_rec,
    ));

    let pivots_agree = eep_recurrence_pivot(g, guard, Pivot::Last)? == xi
        && eep_recurrence_pivot(g, guard, Pivot::Random(0xC0FFEE))? == xi
        && scp_recurrence_pivot(g, guard, Pivot::Last)? == h_rec
        && scp_recurrence_pivot(g, guard, Pivot::Random(0xC0FFEE))? == h_rec
        && tcp_recurrence_pivot(g, guard, Pivot::Last)? == pt_rec
        && tcp_recurrence_pivot(g, guard, Pivot::Random(0xC0FFEE))? == pt_rec;
    checks.push(if pivots_agree {
        Check::ok("recurrences: edge-choice independence")
    } else {
        Check::fail(
            "recurrences: edge-choice independence",
            "pivot rule changed a result".to_string(),
        )
    });

    // Specializations of xi.
    let z_spec = xi
        .substitute(&Substitution::new().bind(Var::Z, Polynomial::zero()))
        .map_err(InvariantError::from)?;
    checks.push(Check::equal("xi(x,y,0) = potts", &z_spec, &z_sub));

    let chi_subst = Substitution::new()
        .bind(Var::Y, Polynomial::var(Var::Z) - Polynomial::one())
        .bind(Var::Z, Polynomial::zero());
    let chi_spec = xi.substitute(&chi_subst).map_err(InvariantError::from)?;
    checks.push(Check::equal("xi(x,z-1,0) = badcol", &chi_spec, &chi));
    let chi_from_z = z_sub
        .substitute(
            &Substitution::new().bind(Var::Y, Polynomial::var(Var::Z) - Polynomial::one()),
        )
        .map_err(InvariantError::from)?;
    checks.push(Check::equal("potts(x,z-1) = badcol", &chi_from_z, &chi));

    let biv_subst = Substitution::new()
        .bind(Var::Y, Polynomial::int(-1))
        .bind(Var::Z, Polynomial::var(Var::X) - Polynomial::var(Var::Y));
    let biv_spec = xi.substitute(&biv_subst).map_err(InvariantError::from)?;
    checks.push(Check::equal("xi(x,-1,x-y) = bivchrom", &biv_spec, &p_biv));

    // Top v-stratum of H is the Potts model.
    let stratum = h_sub.coefficient_of(&[(Var::V, n as i32)]);
    checks.push(Check::equal("scp v^n stratum = potts", &stratum, &z_sub));

    // Transform round trips.
    match (scp_from_eep(&xi, n), eep_from_scp(&h_sub, n)) {
        (Ok(h_from_xi), Ok(xi_from_h)) => {
            checks.push(Check::equal("transform: scp from eep", &h_from_xi, &h_sub));
            checks.push(Check::equal("transform: eep from scp", &xi_from_h, &xi));
        }
        (a, b) => checks.push(Check::fail(
            "transform: scp <-> eep",
            format!("{a:?} / {b:?}"),
        )),
    }
    match (tcp_from_eep(&xi), eep_from_tcp(&pt_exp)) {
        (Ok(pt_from_xi), Ok(xi_from_pt)) => {
            checks.push(Check::equal("transform: tcp from eep", &pt_from_xi, &pt_exp));
            checks.push(Check::equal("transform: eep from tcp", &xi_from_pt, &xi));
        }
        (a, b) => checks.push(Check::fail(
            "transform: tcp <-> eep",
            format!("{a:?} / {b:?}"),
        )),
    }

    if g.is_forest() {
        let q = scomp_subset(g, guard)?;
        let fwd = scp_from_scomp_forest(&q);
        let back = scomp_from_scp_forest(&h_sub);
        match (fwd, back) {
            (Ok(h_from_q), Ok(q_from_h)) => {
                checks.push(Check::equal("forest: scp from scomp", &h_from_q, &h_sub));
                checks.push(Check::equal("forest: scomp from scp", &q_from_h, &q));
            }
            (a, b) => checks.push(Check::fail(
                "forest: scp <-> scomp",
                format!("{a:?} / {b:?}"),
            )),
        }
    }

    // Degree histogram encoded in the trivariate chromatic polynomial.
    if n >= 1 {
        let hist = degree_histogram_from_tcp(&pt_exp);
        let direct = DegreeHistogram::from_graph(g);
        checks.push(match hist {
            Ok(h) if h == direct => Check::ok("degseq from tcp = direct"),
            Ok(h) => Check::fail("degseq from tcp = direct", format!("{h:?} != {direct:?}")),
            Err(e) => Check::fail("degseq from tcp = direct", e.to_string()),
        });
    }

    // Deck-sum counting identity and stratum reconstruction.
    if n >= 1 {
        let deck = polynomial_deck(g, guard)?;
        let mut sum = Polynomial::zero();
        for p in deck.polys() {
            sum = sum.add(p);
        }
        let mut deck_sum_ok = true;
        let mut detail = String::new();
        for i in 0..n {
            let lhs = sum.coefficient_of(&[(Var::V, i as i32)]);
            let rhs = h_sub
                .coefficient_of(&[(Var::V, i as i32)])
                .scale(&BigInt::from(n - i));
            if lhs != rhs {
                deck_sum_ok = false;
                detail = format!("stratum v^{i}: {lhs} != {rhs}");
                break;
            }
        }
        checks.push(if deck_sum_ok {
            Check::ok("deck sum identity")
        } else {
            Check::fail("deck sum identity", detail)
        });

        let top = Polynomial::monomial(Exponents::of_var(Var::V, n as i32), BigInt::from(1))
            .checked_mul(&h_sub.coefficient_of(&[(Var::V, n as i32)]))
            .map_err(InvariantError::from)?;
        let lower = h_sub.sub(&top);
        match reconstruct_lower_coeffs(&deck) {
            Ok(rec) => checks.push(Check::equal("deck reconstructs lower strata", &rec, &lower)),
            Err(e) => checks.push(Check::fail(
                "deck reconstructs lower strata",
                e.to_string(),
            )),
        }
    }

    Ok(checks)
}
