//! Exact field scalars and shared integer combinatorics.
//!
//! Two fields are provided: [`Rat`], arbitrary-precision rationals kept in
//! lowest terms with positive denominator, and [`Fp`], a word-sized prime
//! field used for fast randomized verification runs. All arithmetic is
//! exact; `(a + b) - b == a` holds structurally for every pair.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// An exact field element.
///
/// Elements are immutable values, safe to share and send between threads.
pub trait Field:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Self;

    /// Parse the rational text format `-?digits(/digits)?`.
    fn parse(text: &str) -> Result<Self, Error>;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn is_zero(&self) -> bool;

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv().expect("division by zero scalar"))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow_usize(&self, e: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// `(-1)^exp` as a field element; `exp` may be negative.
pub fn sign_pow<K: Field>(exp: i64) -> K {
    if exp.rem_euclid(2) == 0 {
        K::one()
    } else {
        K::one().neg()
    }
}

/// Split the rational text format into numerator and denominator strings.
fn split_rational_text(text: &str) -> Result<(BigInt, BigInt), Error> {
    let s = text.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (s, None),
    };

    let parse_int = |part: &str, allow_sign: bool| -> Result<BigInt, Error> {
        let digits = match part.strip_prefix('-') {
            Some(rest) if allow_sign => rest,
            Some(_) => return Err(Error::MalformedScalar(text.to_string())),
            None => part,
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::MalformedScalar(text.to_string()));
        }
        let sign = if part.starts_with('-') { -1 } else { 1 };
        let mag: BigInt = digits.parse().expect("digits already validated");
        Ok(mag * sign)
    };

    let num = parse_int(num_str, true)?;
    let den = match den_str {
        Some(d) => {
            let den = parse_int(d, false)?;
            if den.is_zero() {
                return Err(Error::ZeroDenominator(text.to_string()));
            }
            den
        }
        None => BigInt::one(),
    };
    Ok((num, den))
}

/// Arbitrary-precision rational scalar.
///
/// `BigRational` canonicalizes on construction (lowest terms, positive
/// denominator), so equality is structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }

    fn one() -> Self {
        Rat(BigRational::one())
    }

    fn from_i64(v: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(v)))
    }

    fn from_bigint(v: &BigInt) -> Self {
        Rat(BigRational::from_integer(v.clone()))
    }

    fn parse(text: &str) -> Result<Self, Error> {
        let (num, den) = split_rational_text(text)?;
        Ok(Rat(BigRational::new(num, den)))
    }

    fn add(&self, rhs: &Self) -> Self {
        Rat(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rat(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rat(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rat(-&self.0)
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// Prime-field scalar with fixed word-sized modulus `P`.
///
/// The modulus is a compile-time constant, so every element of one
/// computation automatically carries the same modulus. `P` must be prime
/// and below 2^63.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp<const P: u64>(u64);

/// The default verification prime, 2^61 - 1.
pub const VERIFY_PRIME: u64 = 2_305_843_009_213_693_951;

/// Prime field used by the fast verification mode.
pub type Fp61 = Fp<VERIFY_PRIME>;

impl<const P: u64> Fp<P> {
    pub fn new(residue: u64) -> Self {
        Fp(residue % P)
    }

    pub fn residue(self) -> u64 {
        self.0
    }

    fn mul_mod(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % P as u128) as u64
    }

    fn pow_mod(mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = Self::mul_mod(acc, base);
            }
            base = Self::mul_mod(base, base);
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1 % P)
    }

    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    fn from_bigint(v: &BigInt) -> Self {
        let m = v.mod_floor(&BigInt::from(P));
        let (_, digits) = m.to_u64_digits();
        Fp(digits.first().copied().unwrap_or(0))
    }

    fn parse(text: &str) -> Result<Self, Error> {
        let (num, den) = split_rational_text(text)?;
        let n = Self::from_bigint(&num);
        let d = Self::from_bigint(&den);
        let d_inv = d
            .inv()
            .ok_or_else(|| Error::ZeroDenominator(text.to_string()))?;
        Ok(n.mul(&d_inv))
    }

    fn add(&self, rhs: &Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        Fp(Self::mul_mod(self.0, rhs.0))
    }

    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat: a^(P-2) mod P for prime P.
            Some(Fp(Self::pow_mod(self.0, P - 2)))
        }
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

/// Binomial coefficient with the out-of-range convention `C(n,k) = 0`
/// for `k < 0`, `k > n` or `n < 0`.
///
/// The convention matters: the double-sum case split uses binomials like
/// `C(k, n-q)` and `C(k+1, m-p)` whose arguments routinely fall outside
/// `[0, n]`, and those terms must drop out.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_reduces_to_lowest_terms() {
        let a = Rat::parse("3/2").unwrap();
        assert_eq!(a, Rat::from_ratio(3, 2));
        let b = Rat::parse("-6/4").unwrap();
        assert_eq!(b, Rat::from_ratio(-3, 2));
        assert_eq!(Rat::parse("6/4").unwrap(), a);
        assert_eq!(Rat::parse("0/7").unwrap(), Rat::zero());
    }

    #[test]
    fn parse_rejects_malformed_text() {
        assert!(matches!(Rat::parse(""), Err(Error::MalformedScalar(_))));
        assert!(matches!(Rat::parse("1.5"), Err(Error::MalformedScalar(_))));
        assert!(matches!(Rat::parse("a/2"), Err(Error::MalformedScalar(_))));
        assert!(matches!(Rat::parse("2/-3"), Err(Error::MalformedScalar(_))));
        assert!(matches!(Rat::parse("1/0"), Err(Error::ZeroDenominator(_))));
    }

    #[test]
    fn display_round_trips() {
        for s in ["3/2", "-3/2", "0", "7", "-12"] {
            let v = Rat::parse(s).unwrap();
            assert_eq!(v.to_string(), s);
            assert_eq!(Rat::parse(&v.to_string()).unwrap(), v);
        }
    }

    #[test]
    fn binomial_values_and_convention() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(1, 2), BigInt::zero());
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(40, 20), "137846528820".parse().unwrap());
    }

    #[test]
    fn prime_field_parse_maps_rationals() {
        type F = Fp61;
        let half = F::parse("1/2").unwrap();
        assert_eq!(half.add(&half), F::one());
        let v = F::parse("-6/4").unwrap();
        assert_eq!(v.mul(&F::from_i64(2)), F::from_i64(-3));
    }

    #[test]
    fn sign_pow_handles_negative_exponents() {
        assert_eq!(sign_pow::<Rat>(-1), Rat::from_i64(-1));
        assert_eq!(sign_pow::<Rat>(-2), Rat::one());
        assert_eq!(sign_pow::<Rat>(3), Rat::from_i64(-1));
    }

    fn rat_strategy() -> impl Strategy<Value = Rat> {
        (-1000i64..=1000, 1i64..=60).prop_map(|(n, d)| Rat::from_ratio(n, d))
    }

    fn fp_strategy() -> impl Strategy<Value = Fp61> {
        any::<u64>().prop_map(Fp61::new)
    }

    proptest! {
        #[test]
        fn rat_field_axioms(a in rat_strategy(), b in rat_strategy(), c in rat_strategy()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&b).sub(&b), a.clone());
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv().unwrap()), Rat::one());
            }
        }

        #[test]
        fn fp_field_axioms(a in fp_strategy(), b in fp_strategy(), c in fp_strategy()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&b).sub(&b), a);
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv().unwrap()), Fp61::one());
            }
        }

        #[test]
        fn binomial_symmetry_and_pascal(n in 0i64..=30, k in 0i64..=30) {
            if k <= n {
                prop_assert_eq!(binomial(n, k), binomial(n, n - k));
            }
            if n >= 1 {
                prop_assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k)
                );
            }
        }
    }
}
