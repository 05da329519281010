use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::AlgebraError;
use crate::Rational;

/// Coefficient ring bound for [`LaurentPolynomial`]. Blanket-implemented
/// for anything with exact ring operations (`BigRational`, `Ratio<i64>`,
/// floats if you must).
pub trait Coefficient:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
}

impl<T> Coefficient for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T> + Mul<Output = T>
{
}

/// Signed exponent triple `(e_α, e_β, e_q)` of one Laurent monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponents {
    pub a: i64,
    pub b: i64,
    pub q: i64,
}

impl Exponents {
    pub const fn new(a: i64, b: i64, q: i64) -> Self {
        Exponents { a, b, q }
    }
}

impl Add for Exponents {
    type Output = Exponents;
    fn add(self, rhs: Exponents) -> Exponents {
        Exponents::new(self.a + rhs.a, self.b + rhs.b, self.q + rhs.q)
    }
}

/// Sparse Laurent polynomial in three variables `α`, `β`, `q`.
///
/// Canonical form: no stored zero coefficients, terms keyed by exponent
/// triple in lexicographic order. Equality is structural, which on the
/// canonical form coincides with mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomial<C: Coefficient> {
    terms: BTreeMap<Exponents, C>,
}

impl<C: Coefficient> Default for LaurentPolynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> LaurentPolynomial<C> {
    pub fn zero() -> Self {
        LaurentPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(Exponents::default(), C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(Exponents::default(), c)
    }

    pub fn monomial(exps: Exponents, coeff: C) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        LaurentPolynomial { terms }
    }

    /// The variable `α`.
    pub fn alpha() -> Self {
        Self::monomial(Exponents::new(1, 0, 0), C::one())
    }

    /// The variable `β`.
    pub fn beta() -> Self {
        Self::monomial(Exponents::new(0, 1, 0), C::one())
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(Exponents::new(0, 0, 1), C::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Exponents) -> Option<&C> {
        self.terms.get(exps)
    }

    fn insert_term(&mut self, exps: Exponents, coeff: C) {
        match self.terms.remove(&exps) {
            None => {
                if !coeff.is_zero() {
                    self.terms.insert(exps, coeff);
                }
            }
            Some(old) => {
                let sum = old + coeff;
                if !sum.is_zero() {
                    self.terms.insert(exps, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.insert_term(*e1 + *e2, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, factor: &C) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.insert_term(*e, c.clone() * factor.clone());
        }
        out
    }

    /// Substitutes `q = 1`, keeping `α` and `β` symbolic.
    pub fn substitute_q_one(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.insert_term(Exponents::new(e.a, e.b, 0), c.clone());
        }
        out
    }
}

fn pow_signed<C>(base: &C, exp: i64, var: char) -> Result<C, AlgebraError>
where
    C: Coefficient + Div<Output = C>,
{
    if exp == 0 {
        return Ok(C::one());
    }
    if base.is_zero() {
        if exp < 0 {
            return Err(AlgebraError::ZeroToNegativePower { var });
        }
        return Ok(C::zero());
    }
    let positive = if exp < 0 {
        C::one() / base.clone()
    } else {
        base.clone()
    };
    let mut acc = C::one();
    for _ in 0..exp.unsigned_abs() {
        acc = acc * positive.clone();
    }
    Ok(acc)
}

impl<C> LaurentPolynomial<C>
where
    C: Coefficient + Div<Output = C>,
{
    /// Exact evaluation at a rational point. Substituting zero into a
    /// negative exponent is a domain error.
    pub fn eval(&self, a: &C, b: &C, q: &C) -> Result<C, AlgebraError> {
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let term = c.clone()
                * pow_signed(a, e.a, 'a')?
                * pow_signed(b, e.b, 'b')?
                * pow_signed(q, e.q, 'q')?;
            acc = acc + term;
        }
        Ok(acc)
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for LaurentPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (var, exp) in [('a', e.a), ('b', e.b), ('q', e.q)] {
                if exp != 0 {
                    write!(f, "*{}^{}", var, exp)?;
                }
            }
        }
        Ok(())
    }
}

impl LaurentPolynomial<Rational> {
    /// JSON wire form: array of `{"ea", "eb", "eq", "c"}` records sorted
    /// lexicographically by exponent triple.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| {
                    json!({
                        "ea": e.a,
                        "eb": e.b,
                        "eq": e.q,
                        "c": super::rational_to_string(c),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self, AlgebraError> {
        let bad = |reason: &str| AlgebraError::BadPolynomialJson {
            reason: reason.to_string(),
        };
        let arr = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut poly = Self::zero();
        for item in arr {
            let obj = item
                .as_object()
                .ok_or_else(|| bad("term is not an object"))?;
            let exp = |key: &str| -> Result<i64, AlgebraError> {
                obj.get(key)
                    .and_then(Value::as_i64)
                    .ok_or_else(|| bad(&format!("missing integer field `{key}`")))
            };
            let coeff_text = obj
                .get("c")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("missing string field `c`"))?;
            let coeff = super::parse_rational(coeff_text)?;
            poly.insert_term(Exponents::new(exp("ea")?, exp("eb")?, exp("eq")?), coeff);
        }
        Ok(poly)
    }
}
