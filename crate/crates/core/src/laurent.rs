//! Integer Laurent polynomials in a single variable `t`.
//!
//! Every graded dimension and graded decomposition number produced by this
//! crate lives in `Z[t, t^-1]`. Coefficients are arbitrary precision so that
//! binomial-sized dimensions never overflow.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A Laurent polynomial with integer coefficients.
///
/// Canonical form: no stored coefficient is zero, so the zero polynomial has
/// an empty term map and equality is plain map equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff * t^exp`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// `t^exp`.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Adds `coeff * t^exp` in place, keeping the canonical form.
    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    /// Coefficient of `t^exp` (zero when absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Returns `Some(d)` when the polynomial is exactly `t^d`.
    pub fn as_unit_monomial(&self) -> Option<i64> {
        match self.terms.iter().next() {
            Some((e, c)) if self.terms.len() == 1 && c.is_one() => Some(*e),
            _ => None,
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Multiplication by `t^d`, the grade shift `<d>`.
    pub fn shift(&self, d: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + d, c.clone())).collect(),
        }
    }

    /// Sum of the coefficients: the value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// The bar involution `t -> t^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::monomial(0, c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(0, c);
        p
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

/// Renders terms in descending exponent order with unit coefficients elided,
/// e.g. `t^3+t`, `2t^2+1`, `t^-1`, `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exp, coeff)) in self.terms.iter().rev().enumerate() {
            let mag = coeff.abs();
            if coeff.is_negative() {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            if *exp == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match exp {
                1 => f.write_str("t")?,
                e => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

// JSON form: ascending array of [exponent, coefficient] pairs. Coefficients
// that do not fit an i64 are written as decimal strings.

struct Coeff<'a>(&'a BigInt);

impl Serialize for Coeff<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, Coeff(c)))?;
        }
        seq.end()
    }
}

struct OwnedCoeff(BigInt);

impl<'de> Deserialize<'de> for OwnedCoeff {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct CoeffVisitor;
        impl Visitor<'_> for CoeffVisitor {
            type Value = OwnedCoeff;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<OwnedCoeff, E> {
                Ok(OwnedCoeff(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<OwnedCoeff, E> {
                Ok(OwnedCoeff(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<OwnedCoeff, E> {
                v.parse().map(OwnedCoeff).map_err(E::custom)
            }
        }
        d.deserialize_any(CoeffVisitor)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct PolyVisitor;
        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = LaurentPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of [exponent, coefficient] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<LaurentPoly, A::Error> {
                let mut p = LaurentPoly::zero();
                let mut last: Option<i64> = None;
                while let Some((e, OwnedCoeff(c))) = seq.next_element::<(i64, OwnedCoeff)>()? {
                    if last.is_some_and(|prev| prev >= e) {
                        return Err(de::Error::custom("exponents must be strictly ascending"));
                    }
                    if c.is_zero() {
                        return Err(de::Error::custom("zero coefficients are not canonical"));
                    }
                    last = Some(e);
                    p.add_term(e, c);
                }
                Ok(p)
            }
        }
        d.deserialize_seq(PolyVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(e: i64) -> LaurentPoly {
        LaurentPoly::t_pow(e)
    }

    #[test]
    fn shift_and_eval() {
        let p = &LaurentPoly::one() + &t(2);
        assert_eq!(p.shift(1), &t(1) + &t(3));
        assert_eq!((&t(3) + &t(1)).eval_at_one(), BigInt::from(2));
        assert_eq!(&t(1) * &t(-1), LaurentPoly::one());
    }

    #[test]
    fn rendering() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!((&t(2) + &LaurentPoly::one()).to_string(), "t^2+1");
        assert_eq!(LaurentPoly::monomial(-2, 3).to_string(), "3t^-2");
        assert_eq!((&t(3) + &t(1)).to_string(), "t^3+t");
        assert_eq!(LaurentPoly::one().to_string(), "1");
        assert_eq!(t(-1).to_string(), "t^-1");
        assert_eq!(
            LaurentPoly::from_terms([(2, 2), (0, 1)]).to_string(),
            "2t^2+1"
        );
        assert_eq!(
            LaurentPoly::from_terms([(1, 1), (0, -1)]).to_string(),
            "t-1"
        );
        assert_eq!(
            LaurentPoly::from_terms([(1, -1), (0, 3)]).to_string(),
            "-t+3"
        );
        assert_eq!(LaurentPoly::from(-1).to_string(), "-1");
    }

    #[test]
    fn canonical_form_drops_cancelled_terms() {
        let p = &(&t(1) + &t(2)) - &t(2);
        assert_eq!(p, t(1));
        assert_eq!(p.num_terms(), 1);
        assert!((&t(4) - &t(4)).is_zero());
        assert_eq!(LaurentPoly::monomial(3, 0), LaurentPoly::zero());
    }

    #[test]
    fn json_shape() {
        let p = &t(3) + &t(1);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[1,1],[3,1]]");
        let back: LaurentPoly = serde_json::from_str("[[1,1],[3,1]]").unwrap();
        assert_eq!(back, p);
        assert_eq!(serde_json::to_string(&LaurentPoly::zero()).unwrap(), "[]");
        assert!(serde_json::from_str::<LaurentPoly>("[[3,1],[1,1]]").is_err());
        assert!(serde_json::from_str::<LaurentPoly>("[[1,0]]").is_err());
    }

    #[test]
    fn huge_coefficients_survive_json() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = LaurentPoly::monomial(-4, big.clone());
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, "[[-4,\"123456789012345678901234567890\"]]");
        let back: LaurentPoly = serde_json::from_str(&text).unwrap();
        assert_eq!(back.coeff(-4), big);
    }

    #[test]
    fn monomial_detection() {
        assert_eq!(t(3).as_unit_monomial(), Some(3));
        assert_eq!(LaurentPoly::monomial(3, 2).as_unit_monomial(), None);
        assert_eq!((&t(1) + &t(2)).as_unit_monomial(), None);
        assert!(LaurentPoly::one().is_one());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-8i64..=8, -9i64..=9), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
            prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn eval_at_one_is_multiplicative(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
            prop_assert_eq!((&a + &b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
        }

        #[test]
        fn shift_is_multiplication_by_t_power(a in arb_poly(), d in -5i64..=5) {
            prop_assert_eq!(a.shift(d), &a * &LaurentPoly::t_pow(d));
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            let text = serde_json::to_string(&a).unwrap();
            let back: LaurentPoly = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
