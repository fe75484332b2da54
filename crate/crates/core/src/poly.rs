//! Dense univariate polynomials over an exact field, and root tuples.
//!
//! `UniPoly` stores coefficients in ascending degree order: `coeffs[i]` is
//! the coefficient of x^i. The representation is canonical: the vector is
//! empty for the zero polynomial and the last element is nonzero otherwise,
//! so polynomial equality is structural equality of coefficient vectors.

use std::fmt;

use serde_json::{json, Value};

use crate::error::Error;
use crate::scalar::Field;

/// Dense univariate polynomial with canonical (trimmed) coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly<K: Field> {
    coeffs: Vec<K>,
}

impl<K: Field> UniPoly<K> {
    fn normalize(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::normalize(vec![c])
    }

    /// The indeterminate x.
    pub fn x() -> Self {
        UniPoly {
            coeffs: vec![K::zero(), K::one()],
        }
    }

    /// The monomial `c * x^deg`.
    pub fn monomial(c: K, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    /// Construct from ascending coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<K>) -> Self {
        Self::normalize(coeffs)
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::normalize(coeffs.iter().map(|&c| K::from_i64(c)).collect())
    }

    /// The monic product `(x - r_1) ... (x - r_k)`; repeats are allowed.
    /// The empty product is 1.
    pub fn from_roots(roots: &[K]) -> Self {
        let mut acc = Self::one();
        for r in roots {
            acc = acc.mul(&UniPoly {
                coeffs: vec![r.neg(), K::one()],
            });
        }
        acc
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of x^i; zero beyond the degree.
    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    /// Coefficient of x^i with out-of-range (including negative) reads
    /// yielding zero. Shifted determinant rows rely on this convention.
    pub fn coeff_i64(&self, i: i64) -> K {
        if i < 0 {
            K::zero()
        } else {
            self.coeff(i as usize)
        }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    /// Horner evaluation, exact.
    pub fn eval(&self, t: &K) -> K {
        let mut acc = K::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(t).add(c);
        }
        acc
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        Self::normalize(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect();
        Self::normalize(coeffs)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Schoolbook product; every instance here is desk-scale.
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::normalize(coeffs)
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::normalize(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = quotient * rhs + remainder` and `deg r < deg rhs`.
    ///
    /// Panics on a zero divisor.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        let d = rhs.degree().expect("division by the zero polynomial");
        let lead_inv = rhs.leading().unwrap().inv().expect("nonzero leading");
        let mut rem = self.coeffs.clone();
        if rem.len() < d + 1 {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![K::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].mul(&lead_inv);
            for j in 0..=d {
                let delta = q.mul(&rhs.coeff(j));
                rem[i - d + j] = rem[i - d + j].sub(&delta);
            }
            quot[i - d] = q;
        }
        (Self::normalize(quot), Self::normalize(rem))
    }

    /// Unique polynomial of degree < points.len() through the given
    /// `(abscissa, value)` pairs. Abscissae must be pairwise distinct.
    pub fn interpolate(points: &[(K, K)]) -> Self {
        let mut acc = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut num = Self::one();
            let mut den = K::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                num = num.mul(&UniPoly {
                    coeffs: vec![xj.neg(), K::one()],
                });
                den = den.mul(&xi.sub(xj));
            }
            let w = yi.mul(&den.inv().expect("repeated interpolation abscissa"));
            acc = acc.add(&num.scale(&w));
        }
        acc
    }

    /// JSON form `{"coeffs": ["c0", "c1", ...]}`, ascending powers.
    pub fn to_json(&self) -> Value {
        json!({
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let arr = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidArgument("expected {\"coeffs\": [...]}".into()))?;
        let mut coeffs = Vec::with_capacity(arr.len());
        for item in arr {
            let s = item
                .as_str()
                .ok_or_else(|| Error::InvalidArgument("coefficients must be strings".into()))?;
            coeffs.push(K::parse(s)?);
        }
        Ok(Self::normalize(coeffs))
    }
}

impl<K: Field> fmt::Display for UniPoly<K> {
    /// Descending powers with explicit signs: `-4x + 10`, `x^2 - 3x + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            // A leading '-' in the coefficient text becomes the joining sign.
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, text.as_str()),
            };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if i == 0 || magnitude != "1" {
                write!(f, "{magnitude}")?;
            }
            if i >= 1 {
                write!(f, "x")?;
                if i >= 2 {
                    write!(f, "^{i}")?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// Ordered tuple of pairwise-distinct scalars (a set of polynomial roots).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSet<K: Field> {
    elems: Vec<K>,
}

impl<K: Field> RootSet<K> {
    /// Elements must be pairwise distinct: every difference product over a
    /// root set and its complements must be invertible.
    pub fn new(elems: Vec<K>) -> Result<Self, Error> {
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                if elems[i] == elems[j] {
                    return Err(Error::RepeatedRoot);
                }
            }
        }
        Ok(RootSet { elems })
    }

    pub fn from_i64(elems: &[i64]) -> Result<Self, Error> {
        Self::new(elems.iter().map(|&v| K::from_i64(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[K] {
        &self.elems
    }

    pub fn contains(&self, v: &K) -> bool {
        self.elems.contains(v)
    }

    /// The monic polynomial vanishing exactly on this root set.
    pub fn poly(&self) -> UniPoly<K> {
        UniPoly::from_roots(&self.elems)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    use proptest::prelude::*;

    type P = UniPoly<Rat>;

    fn roots(vals: &[i64]) -> RootSet<Rat> {
        RootSet::from_i64(vals).unwrap()
    }

    #[test]
    fn from_roots_builds_monic_polynomials() {
        assert_eq!(P::from_roots(&[]), P::one());
        assert_eq!(roots(&[1, 2]).poly(), P::from_i64_coeffs(&[2, -3, 1]));
        assert_eq!(roots(&[3, 4]).poly(), P::from_i64_coeffs(&[12, -7, 1]));
    }

    #[test]
    fn eval_is_exact() {
        let f = P::from_i64_coeffs(&[2, -3, 1]);
        assert_eq!(f.eval(&Rat::from_i64(3)), Rat::from_i64(2));
        assert_eq!(f.eval(&Rat::from_i64(1)), Rat::zero());
        assert_eq!(P::zero().eval(&Rat::from_i64(5)), Rat::zero());
    }

    #[test]
    fn ring_arithmetic_fixture() {
        let f = roots(&[1, 2]).poly();
        let g = roots(&[3, 4]).poly();
        assert_eq!(
            P::from_roots(&[Rat::from_i64(1)]).mul(&P::from_roots(&[Rat::from_i64(2)])),
            f
        );
        // g - f is reused as the degree-1 subresultant fixture.
        assert_eq!(g.sub(&f), P::from_i64_coeffs(&[10, -4]));
        assert_eq!(f.add(&P::zero()), f);
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(P::zero().degree(), None);
        assert_eq!(P::one().degree(), Some(0));
        assert_eq!(P::from_i64_coeffs(&[0, 0, 0]), P::zero());
    }

    #[test]
    fn display_uses_descending_powers() {
        assert_eq!(P::from_i64_coeffs(&[10, -4]).to_string(), "-4x + 10");
        assert_eq!(P::from_i64_coeffs(&[2, -3, 1]).to_string(), "x^2 - 3x + 2");
        assert_eq!(P::from_i64_coeffs(&[0, 0, -1]).to_string(), "-x^2");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::from_i64_coeffs(&[12]).to_string(), "12");
        let half = UniPoly::monomial(Rat::from_ratio(1, 2), 1);
        assert_eq!(half.to_string(), "1/2x");
    }

    #[test]
    fn json_round_trip() {
        let f = P::from_i64_coeffs(&[10, -4]);
        let v = f.to_json();
        assert_eq!(v.to_string(), r#"{"coeffs":["10","-4"]}"#);
        assert_eq!(P::from_json(&v).unwrap(), f);
    }

    #[test]
    fn div_rem_recovers_quotient_and_remainder() {
        let f = roots(&[1, 2, 5]).poly();
        let d = roots(&[2, 5]).poly();
        let (q, r) = f.div_rem(&d);
        assert_eq!(q, P::from_i64_coeffs(&[-1, 1]));
        assert!(r.is_zero());

        let (q, r) = P::from_i64_coeffs(&[1, 0, 1]).div_rem(&P::from_i64_coeffs(&[1, 1]));
        assert_eq!(q, P::from_i64_coeffs(&[-1, 1]));
        assert_eq!(r, P::from_i64_coeffs(&[2]));
    }

    #[test]
    fn interpolate_matches_known_polynomial() {
        let f = P::from_i64_coeffs(&[2, -3, 1]);
        let pts: Vec<(Rat, Rat)> = (0..3)
            .map(|t| (Rat::from_i64(t), f.eval(&Rat::from_i64(t))))
            .collect();
        assert_eq!(P::interpolate(&pts), f);
    }

    #[test]
    fn root_sets_reject_repeats() {
        assert!(matches!(
            RootSet::<Rat>::from_i64(&[1, 2, 1]),
            Err(Error::RepeatedRoot)
        ));
    }

    fn poly_strategy() -> impl Strategy<Value = P> {
        prop::collection::vec(-20i64..=20, 0..=5).prop_map(|cs| P::from_i64_coeffs(&cs))
    }

    proptest! {
        #[test]
        fn roots_evaluate_to_zero(vals in prop::collection::btree_set(-50i64..=50, 1..=5), probe in -50i64..=50) {
            let vals: Vec<i64> = vals.into_iter().collect();
            let rs = roots(&vals);
            let f = rs.poly();
            for v in &vals {
                prop_assert!(f.eval(&Rat::from_i64(*v)).is_zero());
            }
            if !vals.contains(&probe) {
                prop_assert!(!f.eval(&Rat::from_i64(probe)).is_zero());
            }
        }

        #[test]
        fn degree_of_product_adds(a in poly_strategy(), b in poly_strategy()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            // No leading-term cancellation over an exact field.
            prop_assert_eq!(
                a.mul(&b).degree().unwrap(),
                a.degree().unwrap() + b.degree().unwrap()
            );
        }

        #[test]
        fn add_and_mul_commute_and_associate(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn div_rem_is_euclidean(a in poly_strategy(), b in poly_strategy()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.degree().is_none_or(|dr| dr < b.degree().unwrap()));
        }
    }
}
