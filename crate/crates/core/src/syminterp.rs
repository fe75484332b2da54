//! Symmetric multivariate Lagrange interpolation.
//!
//! `S_(l,d)` is the space of symmetric polynomials in `l` variables with
//! degree at most `d` in each variable; its dimension is `C(l+d, d)`.
//! For a node set B with `|B| = n` and `l = n-d`, the difference products
//! `{R(X,B') : B' subset B, |B'| = d}` form a basis, and interpolation on
//! the node tuples `B \ B'` is a triangular read-off. Symmetric
//! polynomials are kept in this basis and evaluated on demand; they are
//! never expanded into monomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::linalg::Matrix;
use crate::poly::RootSet;
use crate::scalar::{binomial, Field};
use crate::subsets::{complement_mask, k_subsets, split_by_mask};
use crate::sylvester::rprod_vals;

/// `dim S_(l,d) = C(l+d, d)`.
pub fn sym_dim(l: usize, d: usize) -> BigInt {
    assert!(l >= 1, "at least one variable");
    binomial((l + d) as i64, d as i64)
}

/// A symmetric polynomial in `|B| - d` variables, stored as coefficients
/// over the basis `{R(X,B')}` indexed by the d-subset bitmask of B'.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymPolyInBasis<K: Field> {
    nodes: RootSet<K>,
    d: usize,
    coeffs: BTreeMap<u64, K>,
}

impl<K: Field> SymPolyInBasis<K> {
    pub fn node_set(&self) -> &RootSet<K> {
        &self.nodes
    }

    pub fn degree_bound(&self) -> usize {
        self.d
    }

    pub fn vars(&self) -> usize {
        self.nodes.len() - self.d
    }

    /// Basis coefficients, keyed by the d-subset bitmask, in mask order.
    pub fn coeffs(&self) -> &BTreeMap<u64, K> {
        &self.coeffs
    }

    /// JSON form `{"B": [..], "d": d, "coeffs": {"mask": "value", ..}}`.
    pub fn to_json(&self) -> Value {
        let mut coeffs = Map::new();
        for (mask, c) in &self.coeffs {
            coeffs.insert(mask.to_string(), Value::String(c.to_string()));
        }
        json!({
            "B": self.nodes.elems().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "d": self.d,
            "coeffs": coeffs,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let invalid = |msg: &str| Error::InvalidArgument(msg.to_string());
        let b = v
            .get("B")
            .and_then(Value::as_array)
            .ok_or_else(|| invalid("expected \"B\" array"))?;
        let elems = b
            .iter()
            .map(|s| {
                s.as_str()
                    .ok_or_else(|| invalid("node entries must be strings"))
                    .and_then(K::parse)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let nodes = RootSet::new(elems)?;
        let d = v
            .get("d")
            .and_then(Value::as_u64)
            .ok_or_else(|| invalid("expected integer \"d\""))? as usize;
        let raw = v
            .get("coeffs")
            .and_then(Value::as_object)
            .ok_or_else(|| invalid("expected \"coeffs\" object"))?;
        let mut coeffs = BTreeMap::new();
        for (key, val) in raw {
            let mask: u64 = key
                .parse()
                .map_err(|_| invalid("coefficient keys must be bitmasks"))?;
            if mask.count_ones() as usize != d || mask >> nodes.len() != 0 {
                return Err(invalid("coefficient mask does not select a d-subset"));
            }
            let s = val
                .as_str()
                .ok_or_else(|| invalid("coefficient values must be strings"))?;
            coeffs.insert(mask, K::parse(s)?);
        }
        if coeffs.len() != k_subsets(nodes.len(), d).len() {
            return Err(invalid("wrong number of basis coefficients"));
        }
        Ok(SymPolyInBasis { nodes, d, coeffs })
    }

    /// Evaluate at a tuple of `|B| - d` scalars.
    pub fn eval(&self, point: &[K]) -> Result<K, Error> {
        if point.len() != self.vars() {
            return Err(Error::TupleSizeMismatch {
                expected: self.vars(),
                got: point.len(),
            });
        }
        let mut acc = K::zero();
        for (mask, c) in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            let (basis_subset, _) = split_by_mask(self.nodes.elems(), *mask);
            acc = acc.add(&c.mul(&rprod_vals(point, &basis_subset)));
        }
        Ok(acc)
    }
}

/// Interpolate values given on every node tuple `B \ B'` into basis
/// coefficients: `c_{B'} = values(B\B') / R(B\B', B')`.
///
/// `values` is keyed by the (n-d)-subset bitmask of the node tuple.
pub fn sym_interpolate<K: Field>(
    b: &RootSet<K>,
    d: usize,
    values: &BTreeMap<u64, K>,
) -> Result<SymPolyInBasis<K>, Error> {
    let n = b.len();
    if n == 0 || d > n - 1 {
        return Err(Error::DegreeBoundOutOfRange { d, n });
    }
    let mut coeffs = BTreeMap::new();
    for basis_mask in k_subsets(n, d) {
        let node_mask = complement_mask(basis_mask, n);
        let value = values
            .get(&node_mask)
            .ok_or(Error::MissingNodeValue { mask: node_mask })?;
        let (basis_subset, node_tuple) = split_by_mask(b.elems(), basis_mask);
        let den = rprod_vals(&node_tuple, &basis_subset);
        coeffs.insert(basis_mask, value.div(&den));
    }
    Ok(SymPolyInBasis {
        nodes: b.clone(),
        d,
        coeffs,
    })
}

/// Determinant test for linear independence of the basis: the matrix of
/// all basis elements evaluated at all node tuples must be nonsingular.
pub fn basis_independence_check<K: Field>(b: &RootSet<K>, d: usize) -> Result<bool, Error> {
    let n = b.len();
    if n == 0 || d > n - 1 {
        return Err(Error::DegreeBoundOutOfRange { d, n });
    }
    let masks = k_subsets(n, d);
    let evaluation = Matrix::from_fn(masks.len(), masks.len(), |row, col| {
        let (_, node_tuple) = split_by_mask(b.elems(), masks[row]);
        let (basis_subset, _) = split_by_mask(b.elems(), masks[col]);
        rprod_vals(&node_tuple, &basis_subset)
    });
    Ok(!evaluation.det()?.is_zero())
}
