//! Exact arithmetic in `Z[q]`.
//!
//! [`QPoly`] is a dense polynomial with arbitrary-precision integer
//! coefficients, kept in canonical form (no trailing zeros, zero is the empty
//! coefficient list). Division is only ever exact: a nonzero remainder is an
//! error, never a truncation.
//!
//! [`NegOneJet`] is the image of a polynomial in `Z[q] / (q + 1)^2`, i.e. its
//! value and first derivative at `q = -1`. Reduction is a ring homomorphism,
//! so identities that hold in `Z[q]` hold for jets, and the value at `-1` of an
//! exact quotient `a / b` can be recovered even when `b(-1) = 0` provided `b`
//! has only a simple root there.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<Integer>,
}

impl QPoly {
    pub const fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Integer::one())
    }

    pub fn constant(c: impl Into<Integer>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^degree`.
    pub fn monomial(degree: usize, c: impl Into<Integer>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Integer::zero(); degree + 1];
        coeffs[degree] = c;
        Self { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Integer {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplies by `q^shift`.
    pub fn shifted(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Integer::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Integer) -> Integer {
        self.coeffs
            .iter()
            .rev()
            .fold(Integer::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> Integer {
        self.eval(&Integer::from(x))
    }

    /// Reduction modulo `(q + 1)^2`.
    pub fn jet_at_neg_one(&self) -> NegOneJet {
        let mut value = Integer::zero();
        let mut slope = Integer::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            // d/dq q^i at -1 is i * (-1)^(i-1)
            if i % 2 == 0 {
                value += c;
                if i > 0 {
                    slope -= c * i;
                }
            } else {
                value -= c;
                slope += c * i;
            }
        }
        NegOneJet { value, slope }
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Fails with [`Error::NotDivisible`] if the division leaves a remainder
    /// or needs a non-integer coefficient.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let not_divisible = || Error::NotDivisible {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        if self.coeffs.len() < divisor.coeffs.len() {
            return Err(not_divisible());
        }
        let quotient = match div_exact_small(&self.coeffs, &divisor.coeffs) {
            Some(Ok(q)) => q,
            Some(Err(())) => return Err(not_divisible()),
            None => div_exact_big(&self.coeffs, &divisor.coeffs).ok_or_else(not_divisible)?,
        };
        Ok(QPoly::from_coeffs(quotient))
    }

    pub fn pow(&self, mut exp: u32) -> QPoly {
        let mut base = self.clone();
        let mut acc = QPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

fn to_small(coeffs: &[Integer]) -> Option<Vec<i128>> {
    coeffs.iter().map(ToPrimitive::to_i128).collect()
}

fn from_small(coeffs: Vec<i128>) -> Vec<Integer> {
    coeffs.into_iter().map(Integer::from).collect()
}

// Schoolbook convolution in i128; `None` on overflow.
fn mul_small(a: &[Integer], b: &[Integer]) -> Option<Vec<Integer>> {
    let a = to_small(a)?;
    let b = to_small(b)?;
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y == 0 {
                continue;
            }
            let slot = &mut out[i + j];
            *slot = slot.checked_add(x.checked_mul(y)?)?;
        }
    }
    Some(from_small(out))
}

fn mul_big(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let mut out = vec![Integer::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

// `None` on i128 overflow, `Some(Err)` when not divisible.
fn div_exact_small(a: &[Integer], b: &[Integer]) -> Option<std::result::Result<Vec<Integer>, ()>> {
    let mut rem = to_small(a)?;
    let b = to_small(b)?;
    let db = b.len() - 1;
    let lead = b[db];
    let support: Vec<(usize, i128)> = b[..db]
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, c)| c != 0)
        .collect();
    let mut quot = vec![0i128; rem.len() - db];
    for i in (0..quot.len()).rev() {
        let top = rem[i + db];
        if top == 0 {
            continue;
        }
        if top.checked_rem(lead)? != 0 {
            return Some(Err(()));
        }
        let c = top.checked_div(lead)?;
        quot[i] = c;
        rem[i + db] = 0;
        for &(j, bj) in &support {
            rem[i + j] = rem[i + j].checked_sub(c.checked_mul(bj)?)?;
        }
    }
    if rem.iter().any(|&r| r != 0) {
        return Some(Err(()));
    }
    Some(Ok(from_small(quot)))
}

fn div_exact_big(a: &[Integer], b: &[Integer]) -> Option<Vec<Integer>> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = &b[db];
    let support: Vec<(usize, &Integer)> = b[..db]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let mut quot = vec![Integer::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let top = std::mem::take(&mut rem[i + db]);
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for &(j, bj) in &support {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (slot, c) in coeffs.iter_mut().zip(&short.coeffs) {
            *slot += c;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Add for QPoly {
    type Output = QPoly;

    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let coeffs = mul_small(&self.coeffs, &rhs.coeffs)
            .unwrap_or_else(|| mul_big(&self.coeffs, &rhs.coeffs));
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| &acc + &p)
    }
}

/// Ascending powers, e.g. `1 + 2*q^2 + q^4`; zero prints as `0`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, magnitude.is_one()) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{magnitude}*q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{magnitude}*q^{i}")?,
            }
        }
        Ok(())
    }
}

/// `value + slope * (q + 1)`, an element of `Z[q] / (q + 1)^2`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NegOneJet {
    pub value: Integer,
    pub slope: Integer,
}

impl NegOneJet {
    pub fn constant(value: impl Into<Integer>) -> Self {
        Self {
            value: value.into(),
            slope: Integer::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// Image of `q^k`: `(-1)^k + k (-1)^(k-1) (q + 1)`.
    pub fn q_power(k: usize) -> Self {
        let sign: i64 = if k.is_multiple_of(2) { 1 } else { -1 };
        Self {
            value: Integer::from(sign),
            slope: Integer::from(k) * -sign,
        }
    }

    /// Value at `q = -1` of the exact polynomial quotient `self / divisor`.
    ///
    /// When `divisor(-1) = 0` the quotient value is `self' / divisor'`, which
    /// requires `self(-1) = 0` and a simple root of the divisor.
    pub fn quotient_value(&self, divisor: &NegOneJet) -> Result<Integer> {
        let not_divisible = || Error::NotDivisible {
            dividend: format!("jet({}, {})", self.value, self.slope),
            divisor: format!("jet({}, {})", divisor.value, divisor.slope),
        };
        let (num, den) = if !divisor.value.is_zero() {
            (&self.value, &divisor.value)
        } else if self.value.is_zero() && !divisor.slope.is_zero() {
            (&self.slope, &divisor.slope)
        } else {
            return Err(not_divisible());
        };
        let (quot, rem) = num.div_rem(den);
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(not_divisible())
        }
    }
}

impl Add for &NegOneJet {
    type Output = NegOneJet;

    fn add(self, rhs: &NegOneJet) -> NegOneJet {
        NegOneJet {
            value: &self.value + &rhs.value,
            slope: &self.slope + &rhs.slope,
        }
    }
}

impl Mul for &NegOneJet {
    type Output = NegOneJet;

    fn mul(self, rhs: &NegOneJet) -> NegOneJet {
        NegOneJet {
            value: &self.value * &rhs.value,
            slope: &self.value * &rhs.slope + &self.slope * &rhs.value,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn add_cancels_to_canonical_form() {
        assert_eq!(&p(&[1, 1]) + &p(&[1, -1]), p(&[2]));
        assert_eq!((&p(&[1, 1]) + &p(&[0, -1])).coeffs().len(), 1);
        assert_eq!(&p(&[0, 3]) + &p(&[0, -3]), QPoly::zero());
        assert_eq!(&p(&[1, 1, 1]) + &p(&[0, 0, 1]), p(&[1, 1, 2]));
        assert_eq!(&p(&[4, 5]) + &QPoly::zero(), p(&[4, 5]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(&p(&[1, 1, 1]) * &p(&[1, 0, 1]), p(&[1, 1, 2, 1, 1]));
        assert_eq!(&p(&[3, 0, 7]) * &QPoly::one(), p(&[3, 0, 7]));
        assert_eq!(&p(&[3, 0, 7]) * &QPoly::zero(), QPoly::zero());
    }

    #[test]
    fn mul_falls_back_to_bigints() {
        let big = QPoly::constant(Integer::from(i128::MAX));
        let sq = &big * &big;
        assert_eq!(
            sq.coeff(0),
            Integer::from(i128::MAX) * Integer::from(i128::MAX)
        );
    }

    #[test]
    fn div_exact_examples() {
        assert_eq!(p(&[1, 2, 1]).div_exact(&p(&[1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(
            p(&[1, 1, 2, 1, 1]).div_exact(&p(&[1, 1, 1])).unwrap(),
            p(&[1, 0, 1])
        );
        assert!(matches!(
            p(&[1, 1]).div_exact(&p(&[1, 1, 1])),
            Err(Error::NotDivisible { .. })
        ));
        // remainder in low degrees
        assert!(p(&[2, 2, 1]).div_exact(&p(&[1, 1])).is_err());
        // non-integer quotient coefficient
        assert!(p(&[1, 1]).div_exact(&p(&[2])).is_err());
        assert_eq!(QPoly::zero().div_exact(&p(&[1, 1])).unwrap(), QPoly::zero());
    }

    #[test]
    fn div_exact_with_huge_coefficients() {
        let c = QPoly::constant(Integer::from(10).pow(60u32));
        let a = &(&c * &p(&[1, 1])) * &p(&[1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[1, 0, 1])).unwrap(), &c * &p(&[1, 1]));
        assert!((&a + &QPoly::one()).div_exact(&p(&[1, 0, 1])).is_err());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[1, 1, 1]).eval_i64(-1), Integer::from(1));
        assert_eq!(p(&[1, 1, 1, 1]).eval_i64(-1), Integer::from(0));
        assert_eq!(QPoly::zero().eval_i64(7), Integer::from(0));
        assert_eq!(p(&[1, 2, 3]).eval_i64(2), Integer::from(17));
    }

    #[test]
    fn display_forms() {
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(p(&[1, 0, 2, 0, 1]).to_string(), "1 + 2*q^2 + q^4");
        assert_eq!(p(&[0, 1]).to_string(), "q");
        assert_eq!(p(&[-1, 3, -1]).to_string(), "-1 + 3*q - q^2");
        assert_eq!(p(&[0, 0, -5]).to_string(), "-5*q^2");
    }

    #[test]
    fn jet_of_q_integers() {
        // [2m] = (1 + q) * (stuff) with stuff(-1) = m
        for m in 1..10usize {
            let even = QPoly::from_coeffs(vec![Integer::one(); 2 * m]);
            let jet = even.jet_at_neg_one();
            assert_eq!(jet.value, Integer::zero());
            assert_eq!(jet.slope, Integer::from(m));
            let odd = QPoly::from_coeffs(vec![Integer::one(); 2 * m + 1]);
            assert_eq!(odd.jet_at_neg_one().value, Integer::one());
        }
    }

    #[test]
    fn quotient_value_at_a_simple_root() {
        // (1+q)^2 (2+q) / (1+q) = (1+q)(2+q), value 0 at -1
        let d = p(&[1, 1]);
        let a = &(&d * &d) * &p(&[2, 1]);
        let v = a
            .jet_at_neg_one()
            .quotient_value(&d.jet_at_neg_one())
            .unwrap();
        assert_eq!(v, Integer::zero());
        // (1+q)(3+q) / (1+q) = 3+q -> 2
        let a = &d * &p(&[3, 1]);
        let v = a
            .jet_at_neg_one()
            .quotient_value(&d.jet_at_neg_one())
            .unwrap();
        assert_eq!(v, Integer::from(2));
        // double root in the divisor cannot be resolved at first order
        let dd = &d * &d;
        assert!(a
            .jet_at_neg_one()
            .quotient_value(&dd.jet_at_neg_one())
            .is_err());
    }

    fn small_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-20i64..20, 0..7).prop_map(|c| QPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn canonical_form_everywhere(a in small_poly(), b in small_poly()) {
            for r in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(r.coeffs().last().is_none_or(|c| !c.is_zero()));
            }
        }

        #[test]
        fn division_inverts_multiplication(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
        }

        #[test]
        fn eval_is_a_homomorphism(a in small_poly(), b in small_poly(), x in -5i64..5) {
            let x = Integer::from(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }

        #[test]
        fn jet_is_a_homomorphism(a in small_poly(), b in small_poly()) {
            prop_assert_eq!((&a * &b).jet_at_neg_one(), &a.jet_at_neg_one() * &b.jet_at_neg_one());
            prop_assert_eq!((&a + &b).jet_at_neg_one(), &a.jet_at_neg_one() + &b.jet_at_neg_one());
            prop_assert_eq!(a.jet_at_neg_one().value, a.eval_i64(-1));
        }

        #[test]
        fn q_power_jet(k in 0usize..40) {
            prop_assert_eq!(QPoly::monomial(k, 1).jet_at_neg_one(), NegOneJet::q_power(k));
        }
    }
}
