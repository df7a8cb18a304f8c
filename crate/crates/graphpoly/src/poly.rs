//! Sparse multivariate Laurent polynomials in the fixed variable set
//! `{v, x, y, z}` with exact arbitrary-precision integer coefficients.
//!
//! Polynomials are canonical sparse maps from exponent tuples to nonzero
//! coefficients, so structural equality is polynomial equality. Exponents
//! are signed (Laurent); negative powers only ever need to be taken of
//! single monomials, which is all the equivalence transforms require.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// The four polynomial variables, totally ordered `V < X < Y < Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    V,
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::V, Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        match self {
            Var::V => 0,
            Var::X => 1,
            Var::Y => 2,
            Var::Z => 3,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Var::V => 'v',
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        match c {
            'v' => Some(Var::V),
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Exponent tuple `(e_v, e_x, e_y, e_z)` of one monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponents([i32; 4]);

impl Exponents {
    pub const ZERO: Exponents = Exponents([0; 4]);

    pub fn new(ev: i32, ex: i32, ey: i32, ez: i32) -> Self {
        Exponents([ev, ex, ey, ez])
    }

    pub fn of_var(var: Var, e: i32) -> Self {
        let mut t = [0; 4];
        t[var.index()] = e;
        Exponents(t)
    }

    pub fn get(&self, var: Var) -> i32 {
        self.0[var.index()]
    }

    pub fn with(mut self, var: Var, e: i32) -> Self {
        self.0[var.index()] = e;
        self
    }

    pub fn as_array(&self) -> [i32; 4] {
        self.0
    }

    pub fn checked_add(&self, other: &Exponents) -> Option<Exponents> {
        let mut t = [0; 4];
        for (slot, (a, b)) in t.iter_mut().zip(self.0.iter().zip(&other.0)) {
            *slot = a.checked_add(*b)?;
        }
        Some(Exponents(t))
    }

    /// Componentwise multiplication by a scalar, for monomial powers.
    pub fn checked_scale(&self, k: i32) -> Option<Exponents> {
        let mut t = [0; 4];
        for (slot, a) in t.iter_mut().zip(&self.0) {
            *slot = a.checked_mul(k)?;
        }
        Some(Exponents(t))
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("monomial exponent overflows the signed 32-bit range")]
    ExponentOverflow,
    #[error("variable {var} occurs with a negative exponent but its binding is not a single monomial")]
    NegativePowerOfNonMonomial { var: Var },
    #[error("variable {var} occurs with a negative exponent but its binding has coefficient {coeff}, which has no integer inverse")]
    NonUnitMonomialCoefficient { var: Var, coeff: BigInt },
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("variable {var} is raised to a negative power but evaluated at 0")]
    DivisionByZero { var: Var },
    #[error("variable {var} occurs in the polynomial but the evaluation point does not bind it")]
    UnboundVariable { var: Var },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Simultaneous variable bindings for [`Polynomial::substitute`].
/// Unbound variables map to themselves.
#[derive(Debug, Clone, Default)]
pub struct Substitution {
    bindings: [Option<Polynomial>; 4],
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(mut self, var: Var, p: Polynomial) -> Self {
        self.bindings[var.index()] = Some(p);
        self
    }

    pub fn get(&self, var: Var) -> Option<&Polynomial> {
        self.bindings[var.index()].as_ref()
    }
}

/// Sparse Laurent polynomial over `{v, x, y, z}` with `BigInt` coefficients.
///
/// Invariant: no stored coefficient is zero, so `==` is exact polynomial
/// equality. All operations are pure; values are safe to share across
/// threads.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Exponents, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponents::ZERO, c);
        }
        Polynomial { terms }
    }

    pub fn int(c: i64) -> Self {
        Polynomial::constant(BigInt::from(c))
    }

    pub fn var(var: Var) -> Self {
        Polynomial::monomial(Exponents::of_var(var, 1), BigInt::one())
    }

    pub fn monomial(exps: Exponents, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Exponents::ZERO)
                .is_some_and(|c| c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    /// True when no exponent is negative, i.e. the value is an ordinary
    /// polynomial rather than a proper Laurent one.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Exponents::is_nonnegative)
    }

    pub fn contains_var(&self, var: Var) -> bool {
        self.terms.keys().any(|e| e.get(var) != 0)
    }

    fn insert_add(&mut self, exps: Exponents, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    /// Exact product; fails only when some exponent sum leaves the i32 range.
    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.checked_add(eb).ok_or(PolyError::ExponentOverflow)?;
                out.insert_add(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn checked_pow(&self, k: u32) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::one();
        for _ in 0..k {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }

    /// Panicking variant of [`checked_pow`](Self::checked_pow) for contexts
    /// where size guards already bound every exponent.
    pub fn pow(&self, k: u32) -> Polynomial {
        self.checked_pow(k).expect("polynomial exponent overflow")
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Simultaneous substitution of Laurent polynomials for variables.
    ///
    /// Every monomial `c*v^a*x^b*y^c*z^d` becomes
    /// `c*B(v)^a*B(x)^b*B(y)^c*B(z)^d` and the results are summed. A
    /// variable occurring with a negative exponent requires its binding to
    /// be a single monomial with coefficient ±1, because general Laurent
    /// inversion is undefined over the integers.
    pub fn substitute(&self, subst: &Substitution) -> Result<Polynomial, PolyError> {
        let mut cache: HashMap<(usize, i32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (exps, coeff) in &self.terms {
            let mut term = Polynomial::constant(coeff.clone());
            for var in Var::ALL {
                let e = exps.get(var);
                if e == 0 {
                    continue;
                }
                let factor = match cache.entry((var.index(), e)) {
                    std::collections::hash_map::Entry::Occupied(o) => o.get().clone(),
                    std::collections::hash_map::Entry::Vacant(slot) => {
                        let p = binding_power(subst.get(var), var, e)?;
                        slot.insert(p.clone());
                        p
                    }
                };
                term = term.checked_mul(&factor)?;
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Collects the terms whose exponents match every constraint exactly and
    /// deletes the constrained variables from the surviving exponent tuples.
    pub fn coefficient_of(&self, constraints: &[(Var, i32)]) -> Polynomial {
        let mut out = Polynomial::zero();
        'term: for (exps, coeff) in &self.terms {
            let mut rest = *exps;
            for &(var, want) in constraints {
                if exps.get(var) != want {
                    continue 'term;
                }
                rest = rest.with(var, 0);
            }
            out.insert_add(rest, coeff.clone());
        }
        out
    }

    /// Maximum exponent of `var` over all terms.
    pub fn degree_in(&self, var: Var) -> Result<i32, PolyError> {
        self.terms
            .keys()
            .map(|e| e.get(var))
            .max()
            .ok_or(PolyError::ZeroPolynomial)
    }

    /// Exact evaluation at an integer point. The result is rational because
    /// negative exponents divide; it is integral whenever all exponents are
    /// nonnegative.
    pub fn evaluate(&self, point: &[(Var, i64)]) -> Result<BigRational, PolyError> {
        let mut vals: [Option<BigInt>; 4] = [None, None, None, None];
        for &(var, value) in point {
            vals[var.index()] = Some(BigInt::from(value));
        }
        let mut sum = BigRational::zero();
        for (exps, coeff) in &self.terms {
            let mut num = coeff.clone();
            let mut den = BigInt::one();
            for var in Var::ALL {
                let e = exps.get(var);
                if e == 0 {
                    continue;
                }
                let value = vals[var.index()]
                    .as_ref()
                    .ok_or(PolyError::UnboundVariable { var })?;
                if e < 0 && value.is_zero() {
                    return Err(PolyError::DivisionByZero { var });
                }
                let p = value.pow(e.unsigned_abs());
                if e > 0 {
                    num *= p;
                } else {
                    den *= p;
                }
            }
            sum += BigRational::new(num, den);
        }
        Ok(sum)
    }

    fn sorted_terms(&self) -> Vec<(&Exponents, &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(ea, _), (eb, _)| {
            eb.total_degree()
                .cmp(&ea.total_degree())
                .then_with(|| eb.as_array().cmp(&ea.as_array()))
        });
        terms
    }

    /// Deterministic rendering: terms by total degree descending, ties by
    /// the exponent tuple `(v,x,y,z)` descending. Exponent-0 factors are
    /// omitted, exponent 1 drops the caret, and a unit coefficient is
    /// omitted unless the term is constant. The zero polynomial is `0`.
    pub fn to_canonical_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exps, coeff)) in self.sorted_terms().into_iter().enumerate() {
            let mag = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    out.push('-');
                }
            } else if coeff.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors = String::new();
            for var in Var::ALL {
                let e = exps.get(var);
                if e == 0 {
                    continue;
                }
                if !factors.is_empty() {
                    factors.push('*');
                }
                factors.push(var.symbol());
                if e != 1 {
                    factors.push('^');
                    factors.push_str(&e.to_string());
                }
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&factors);
            } else {
                out.push_str(&mag.to_string());
                out.push('*');
                out.push_str(&factors);
            }
        }
        out
    }

    /// JSON rendering: a list of `{"e":[a,b,c,d],"c":"<decimal>"}` objects
    /// in canonical text order.
    pub fn to_json_text(&self) -> String {
        let mut out = String::from("[");
        for (i, (exps, coeff)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let [a, b, c, d] = exps.as_array();
            out.push_str(&format!(
                "{{\"e\":[{},{},{},{}],\"c\":\"{}\"}}",
                a, b, c, d, coeff
            ));
        }
        out.push(']');
        out
    }

    /// Parses the canonical text format (and unsorted variants of it).
    pub fn parse_text(input: &str) -> Result<Polynomial, PolyError> {
        Parser::new(input).parse()
    }
}

fn binding_power(
    binding: Option<&Polynomial>,
    var: Var,
    e: i32,
) -> Result<Polynomial, PolyError> {
    match binding {
        // Unbound variables map to themselves; a bare variable is a
        // monomial, so negative powers are fine.
        None => Ok(Polynomial::monomial(
            Exponents::of_var(var, e),
            BigInt::one(),
        )),
        Some(b) => {
            if e >= 0 {
                return b.checked_pow(e as u32);
            }
            if b.terms.len() != 1 {
                return Err(PolyError::NegativePowerOfNonMonomial { var });
            }
            let (m, c) = b.terms.iter().next().expect("len checked");
            if !c.abs().is_one() {
                return Err(PolyError::NonUnitMonomialCoefficient {
                    var,
                    coeff: c.clone(),
                });
            }
            let exps = m.checked_scale(e).ok_or(PolyError::ExponentOverflow)?;
            // c is ±1, so c^e = c^|e|.
            Ok(Polynomial::monomial(exps, c.pow(e.unsigned_abs())))
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_text())
    }
}

impl FromStr for Polynomial {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Polynomial::parse_text(s)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $delegate:ident) => {
        impl $trait for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                Polynomial::$delegate(self, rhs)
            }
        }
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                Polynomial::$delegate(&self, &rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                Polynomial::$delegate(&self, rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                Polynomial::$delegate(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);

fn mul_unwrap(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a.checked_mul(b).expect("polynomial exponent overflow")
}

forward_binop!(Mul, mul, mul_fwd);

impl Polynomial {
    fn mul_fwd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        mul_unwrap(a, b)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(&self)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, msg: impl Into<String>) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        text.parse::<BigInt>()
            .map_err(|e| self.error(format!("bad integer literal: {e}")))
    }

    fn exponent(&mut self) -> Result<i32, PolyError> {
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self.number()?;
        let mag = n
            .to_i32()
            .ok_or_else(|| self.error("exponent out of i32 range"))?;
        Ok(if negative { -mag } else { mag })
    }

    /// term := number ('*' factor)* | factor ('*' factor)*
    fn term(&mut self) -> Result<(Exponents, BigInt), PolyError> {
        let mut coeff = BigInt::one();
        let mut exps = Exponents::ZERO;
        let mut saw_atom = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    coeff *= self.number()?;
                    saw_atom = true;
                }
                Some(b) => {
                    if let Some(var) = Var::from_symbol(b as char) {
                        self.pos += 1;
                        let mut e: i32 = 1;
                        self.skip_ws();
                        if self.peek() == Some(b'^') {
                            self.pos += 1;
                            self.skip_ws();
                            e = self.exponent()?;
                        }
                        exps = exps
                            .checked_add(&Exponents::of_var(var, e))
                            .ok_or(PolyError::ExponentOverflow)?;
                        saw_atom = true;
                    } else {
                        break;
                    }
                }
                None => break,
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if !saw_atom {
            return Err(self.error("expected a term"));
        }
        Ok((exps, coeff))
    }

    fn parse(&mut self) -> Result<Polynomial, PolyError> {
        let mut out = Polynomial::zero();
        self.skip_ws();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (exps, coeff) = self.term()?;
            out.insert_add(exps, coeff * BigInt::from(sign));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                Some(c) => {
                    return Err(self.error(format!("unexpected character {:?}", c as char)))
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Polynomial {
        Polynomial::parse_text(text).expect("test polynomial parses")
    }

    #[test]
    fn add_merges_and_cancels() {
        assert_eq!(p("x") + p("y"), p("x + y"));
        assert_eq!(p("x") + p("-x"), Polynomial::zero());
        assert_eq!(p("x^2 + x*y") + p("z"), p("x^2 + x*y + z"));
    }

    #[test]
    fn mul_expands_exactly() {
        assert_eq!(p("x + y") * p("x - y"), p("x^2 - y^2"));
        assert_eq!(p("1 + v*x") * p("1 + v*x"), p("1 + 2*v*x + v^2*x^2"));
        assert_eq!(p("v^-1") * p("v"), Polynomial::one());
    }

    #[test]
    fn mul_distributes_over_add() {
        let (a, b, c) = (p("v - 2*y"), p("x^2 + z"), p("3 + x*y*z"));
        assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
    }

    #[test]
    fn checked_mul_signals_exponent_overflow() {
        let big = Polynomial::monomial(Exponents::of_var(Var::X, i32::MAX), BigInt::one());
        assert_eq!(
            big.checked_mul(&Polynomial::var(Var::X)),
            Err(PolyError::ExponentOverflow)
        );
    }

    #[test]
    fn substitute_simultaneous() {
        // y -> z-1 and z -> 0 applied at once.
        let s = Substitution::new()
            .bind(Var::Y, p("z - 1"))
            .bind(Var::Z, Polynomial::zero());
        assert_eq!(p("x^2 + x*y + z").substitute(&s).unwrap(), p("x^2 + x*z - x"));
    }

    #[test]
    fn substitute_identity_and_monomial_inverse() {
        let id = Substitution::new();
        assert_eq!(p("x").substitute(&id).unwrap(), p("x"));
        let s = Substitution::new().bind(Var::V, p("-y*z^-1"));
        assert_eq!(p("v*z").substitute(&s).unwrap(), p("-y"));
    }

    #[test]
    fn substitute_rejects_nonmonomial_inverse() {
        let s = Substitution::new().bind(Var::V, p("x + y"));
        assert_eq!(
            p("v^-1").substitute(&s),
            Err(PolyError::NegativePowerOfNonMonomial { var: Var::V })
        );
        let s2 = Substitution::new().bind(Var::V, p("2*x"));
        assert_eq!(
            p("v^-1").substitute(&s2),
            Err(PolyError::NonUnitMonomialCoefficient {
                var: Var::V,
                coeff: BigInt::from(2)
            })
        );
    }

    #[test]
    fn coefficient_of_collects_strata() {
        let h_k2 = p("1 + 2*v*x + v^2*x^2 + v^2*x*y");
        assert_eq!(h_k2.coefficient_of(&[(Var::V, 2)]), p("x^2 + x*y"));
        assert_eq!(p("x").coefficient_of(&[(Var::V, 0)]), p("x"));
        assert_eq!(
            Polynomial::zero().coefficient_of(&[(Var::Z, 3)]),
            Polynomial::zero()
        );
    }

    #[test]
    fn degree_in_examples() {
        assert_eq!(p("x^2 + x*y + z").degree_in(Var::X), Ok(2));
        assert_eq!(p("1 + v*x").degree_in(Var::V), Ok(1));
        assert_eq!(p("v*z^2 + v^3").degree_in(Var::Z), Ok(2));
        assert_eq!(
            Polynomial::zero().degree_in(Var::X),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn evaluate_exact() {
        let val = p("x^2 + x*y + z")
            .evaluate(&[(Var::X, 3), (Var::Y, 0), (Var::Z, 0)])
            .unwrap();
        assert_eq!(val, BigRational::from(BigInt::from(9)));
        let val = p("1 + v*x").evaluate(&[(Var::V, 1), (Var::X, 4)]).unwrap();
        assert_eq!(val, BigRational::from(BigInt::from(5)));
        let val = p("v^-1*y").evaluate(&[(Var::V, 2), (Var::Y, 6)]).unwrap();
        assert_eq!(val, BigRational::from(BigInt::from(3)));
    }

    #[test]
    fn evaluate_errors() {
        assert_eq!(
            p("v^-1").evaluate(&[(Var::V, 0)]),
            Err(PolyError::DivisionByZero { var: Var::V })
        );
        assert_eq!(
            p("x + y").evaluate(&[(Var::X, 1)]),
            Err(PolyError::UnboundVariable { var: Var::Y })
        );
    }

    #[test]
    fn canonical_text_ordering() {
        assert_eq!(
            p("1 + 2*v*x + v^2*x*y + v^2*x^2").to_canonical_text(),
            "v^2*x^2 + v^2*x*y + 2*v*x + 1"
        );
        assert_eq!(Polynomial::zero().to_canonical_text(), "0");
        assert_eq!(p("x").to_canonical_text(), "x");
        assert_eq!(p("x^2 - y + y*z").to_canonical_text(), "x^2 + y*z - y");
        assert_eq!(p("v^-1 - 1").to_canonical_text(), "-1 + v^-1");
    }

    #[test]
    fn json_rendering() {
        assert_eq!(Polynomial::zero().to_json_text(), "[]");
        assert_eq!(
            p("1 + 2*v*x + v^2*x^2 + v^2*x*y").to_json_text(),
            "[{\"e\":[2,2,0,0],\"c\":\"1\"},{\"e\":[2,1,1,0],\"c\":\"1\"},{\"e\":[1,1,0,0],\"c\":\"2\"},{\"e\":[0,0,0,0],\"c\":\"1\"}]"
        );
    }

    #[test]
    fn parse_round_trip() {
        for text in [
            "0",
            "x",
            "v^2*x^2 + v^2*x*y + 2*v*x + 1",
            "x^2 + y*z - y",
            "-1 + v^-1",
            "42",
            "-x^3 - 7",
        ] {
            assert_eq!(p(text).to_canonical_text(), text);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(
            Polynomial::parse_text("x + & y"),
            Err(PolyError::Parse { .. })
        ));
        assert!(matches!(
            Polynomial::parse_text(""),
            Err(PolyError::Parse { .. })
        ));
        assert!(matches!(
            Polynomial::parse_text("x^"),
            Err(PolyError::Parse { .. })
        ));
    }
}
