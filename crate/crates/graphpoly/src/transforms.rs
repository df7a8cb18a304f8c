//! Equivalence substitutions between the edge elimination polynomial ξ,
//! the subgraph counting polynomial H and the trivariate chromatic
//! polynomial P̃, plus the forest-only correspondence between H and the
//! subgraph component polynomial Q.
//!
//! The ξ↔H directions pass through Laurent intermediates (powers of v⁻¹
//! and y⁻¹); each transform asserts that the final result collapses to a
//! true polynomial and reports `NonPolynomialResult` otherwise, which
//! catches a wrong vertex count or malformed input.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::poly::{Exponents, PolyError, Polynomial, Substitution, Var};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("transform result is not a polynomial (offending monomial exponents {exponents:?}); wrong vertex count or invalid input")]
    NonPolynomialResult { exponents: [i32; 4] },
    #[error("input polynomial must not contain the variable {0}")]
    UnexpectedVariable(Var),
    #[error("not a subgraph component polynomial: monomial with v-exponent {v} and x-exponent {x}")]
    MalformedQ { v: i32, x: i32 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn ensure_polynomial(p: Polynomial) -> Result<Polynomial, TransformError> {
    if let Some(exps) = p.terms().map(|(e, _)| *e).find(|e| !e.is_nonnegative()) {
        return Err(TransformError::NonPolynomialResult {
            exponents: exps.as_array(),
        });
    }
    Ok(p)
}

fn ensure_free_of(p: &Polynomial, vars: &[Var]) -> Result<(), TransformError> {
    for &v in vars {
        if p.contains_var(v) {
            return Err(TransformError::UnexpectedVariable(v));
        }
    }
    Ok(())
}

/// H(G,v,x,y) from ξ(G,x,y,z) on a graph with `n` vertices:
/// `H = v^n · ξ(G, (1+vx)/v, y, −y/v)`, realized with the Laurent binding
/// `x ↦ v⁻¹ + x` and `z ↦ −y·v⁻¹`.
pub fn scp_from_eep(xi: &Polynomial, n: usize) -> Result<Polynomial, TransformError> {
    ensure_free_of(xi, &[Var::V])?;
    let subst = Substitution::new()
        .bind(
            Var::X,
            Polynomial::monomial(Exponents::of_var(Var::V, -1), BigInt::one())
                .add(&Polynomial::var(Var::X)),
        )
        .bind(
            Var::Z,
            Polynomial::monomial(
                Exponents::of_var(Var::V, -1).with(Var::Y, 1),
                BigInt::from(-1),
            ),
        );
    let s = xi.substitute(&subst)?;
    let shift = Polynomial::monomial(Exponents::of_var(Var::V, n as i32), BigInt::one());
    ensure_polynomial(shift.checked_mul(&s)?)
}

/// ξ(G,x,y,z) from H(G,v,x,y) on a graph with `n` vertices. Inverting the
/// forward map gives `v = −y/z`, `x_H = x + z/y` and the prefactor
/// `v^{−n} = (−z/y)^n`, so
/// `ξ = (−1)^n y^{−n} z^n · H(G, −y·z⁻¹, x + z·y⁻¹, y)`.
pub fn eep_from_scp(h: &Polynomial, n: usize) -> Result<Polynomial, TransformError> {
    ensure_free_of(h, &[Var::Z])?;
    let subst = Substitution::new()
        .bind(
            Var::V,
            Polynomial::monomial(
                Exponents::of_var(Var::Y, 1).with(Var::Z, -1),
                BigInt::from(-1),
            ),
        )
        .bind(
            Var::X,
            Polynomial::var(Var::X).add(&Polynomial::monomial(
                Exponents::of_var(Var::Z, 1).with(Var::Y, -1),
                BigInt::one(),
            )),
        );
    let s = h.substitute(&subst)?;
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let prefactor = Polynomial::monomial(
        Exponents::of_var(Var::Y, -(n as i32)).with(Var::Z, n as i32),
        BigInt::from(sign),
    );
    ensure_polynomial(prefactor.checked_mul(&s)?)
}

/// P̃(G,x,y,z) from ξ(G,x,y,z): the plain substitution
/// `P̃ = ξ(G, x, z−1, (1−z)(x−y))`.
pub fn tcp_from_eep(xi: &Polynomial) -> Result<Polynomial, TransformError> {
    ensure_free_of(xi, &[Var::V])?;
    let one = Polynomial::one();
    let z = Polynomial::var(Var::Z);
    let x = Polynomial::var(Var::X);
    let y = Polynomial::var(Var::Y);
    let subst = Substitution::new()
        .bind(Var::Y, z.sub(&one))
        .bind(Var::Z, one.sub(&z).checked_mul(&x.sub(&y))?);
    Ok(xi.substitute(&subst)?)
}

/// ξ(G,x,y,z) from P̃(G,x,y,z): `ξ = P̃(G, x, x + z/y, y+1)` with the
/// Laurent binding `y ↦ x + z·y⁻¹`; the result is asserted polynomial.
pub fn eep_from_tcp(pt: &Polynomial) -> Result<Polynomial, TransformError> {
    ensure_free_of(pt, &[Var::V])?;
    let subst = Substitution::new()
        .bind(
            Var::Y,
            Polynomial::var(Var::X).add(&Polynomial::monomial(
                Exponents::of_var(Var::Z, 1).with(Var::Y, -1),
                BigInt::one(),
            )),
        )
        .bind(Var::Z, Polynomial::var(Var::Y).add(&Polynomial::one()));
    ensure_polynomial(pt.substitute(&subst)?)
}

/// H(F,v,x,y) from Q(F,v,x) when F is a forest:
/// `H = Q(F, v(x+y), x/(x+y))`, realized division-free as the
/// monomial-wise map `v^a x^b ↦ v^a x^b (x+y)^{a−b}`. Every subgraph
/// component polynomial satisfies `b ≤ a` (an induced subgraph has at most
/// `|W|` components); violations are rejected.
pub fn scp_from_scomp_forest(q: &Polynomial) -> Result<Polynomial, TransformError> {
    ensure_free_of(q, &[Var::Y, Var::Z])?;
    let x_plus_y = Polynomial::var(Var::X).add(&Polynomial::var(Var::Y));
    let mut acc = Polynomial::zero();
    for (exps, coeff) in q.terms() {
        let (a, b) = (exps.get(Var::V), exps.get(Var::X));
        if b > a || a < 0 || b < 0 {
            return Err(TransformError::MalformedQ { v: a, x: b });
        }
        let base = Polynomial::monomial(*exps, coeff.clone());
        acc = acc.add(&base.checked_mul(&x_plus_y.checked_pow((a - b) as u32)?)?);
    }
    Ok(acc)
}

/// Q(F,v,x) from H(F,v,x,y) when F is a forest: `Q = H(F, v, x, 1−x)`.
pub fn scomp_from_scp_forest(h: &Polynomial) -> Result<Polynomial, TransformError> {
    ensure_free_of(h, &[Var::Z])?;
    let subst = Substitution::new()
        .bind(Var::Y, Polynomial::one().sub(&Polynomial::var(Var::X)));
    Ok(h.substitute(&subst)?)
}
