//! Root-side objects: difference products R(Y,Z), Sylvester double sums,
//! the multivariate single sum in evaluated form, and both orientations of
//! the exchange identity between root subsets of two sets.
//!
//! Multivariate objects are handled by evaluation at scalar tuples rather
//! than by a general multivariate ring; identity checks certify equality
//! on grids that exceed every per-variable degree bound.

use crate::error::Error;
use crate::linalg::{vandermonde_product, Matrix};
use crate::poly::{RootSet, UniPoly};
use crate::scalar::{sign_pow, Field};
use crate::subsets::{k_subsets, split_by_mask};

/// Entry of a mixed tuple: either the single indeterminate x or a scalar.
///
/// Tuples like `x ∪ B'` appear on both sides of difference products, so
/// the marker may occur in either argument of [`rprod`]. There is only one
/// indeterminate; two markers meeting yields the zero factor x - x.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum XElem<K: Field> {
    Var,
    Val(K),
}

/// Wrap scalars for use in mixed tuples.
pub fn vals<K: Field>(items: &[K]) -> Vec<XElem<K>> {
    items.iter().cloned().map(XElem::Val).collect()
}

/// The tuple `(x, t_1, .., t_k)`.
pub fn x_and_vals<K: Field>(items: &[K]) -> Vec<XElem<K>> {
    let mut out = Vec::with_capacity(items.len() + 1);
    out.push(XElem::Var);
    out.extend(items.iter().cloned().map(XElem::Val));
    out
}

/// The difference product `R(Y,Z) = prod_{y in Y, z in Z} (y - z)` as a
/// polynomial in x; 1 if either tuple is empty.
pub fn rprod<K: Field>(left: &[XElem<K>], right: &[XElem<K>]) -> UniPoly<K> {
    let mut scalar = K::one();
    let mut neg_factors = 0usize;
    let mut linear_roots: Vec<K> = Vec::new();
    for l in left {
        for r in right {
            match (l, r) {
                (XElem::Val(a), XElem::Val(b)) => scalar = scalar.mul(&a.sub(b)),
                (XElem::Var, XElem::Val(b)) => linear_roots.push(b.clone()),
                (XElem::Val(a), XElem::Var) => {
                    // (a - x) = -(x - a)
                    linear_roots.push(a.clone());
                    neg_factors += 1;
                }
                (XElem::Var, XElem::Var) => return UniPoly::zero(),
            }
        }
    }
    if scalar.is_zero() {
        return UniPoly::zero();
    }
    if neg_factors % 2 == 1 {
        scalar = scalar.neg();
    }
    UniPoly::from_roots(&linear_roots).scale(&scalar)
}

/// Scalar-only difference product `prod (y - z)`; 1 on empty input.
pub fn rprod_vals<K: Field>(left: &[K], right: &[K]) -> K {
    let mut acc = K::one();
    for y in left {
        for z in right {
            acc = acc.mul(&y.sub(z));
        }
    }
    acc
}

/// The Sylvester double sum `Syl_{p,q}(A,B)(x)`: the sum over all subset
/// pairs `(A', B')` with `|A'| = p`, `|B'| = q` of
///
/// ```text
/// R(A',B') R(A\A', B\B') R(x,A') R(x,B') / ( R(A',A\A') R(B',B\B') )
/// ```
///
/// a polynomial in x of degree at most `p + q`.
pub fn syl_double<K: Field>(
    a: &RootSet<K>,
    b: &RootSet<K>,
    p: usize,
    q: usize,
) -> Result<UniPoly<K>, Error> {
    let (m, n) = (a.len(), b.len());
    if p > m {
        return Err(Error::SubsetSizeOutOfRange { size: p, len: m });
    }
    if q > n {
        return Err(Error::SubsetSizeOutOfRange { size: q, len: n });
    }
    let mut acc = UniPoly::zero();
    for a_mask in k_subsets(m, p) {
        let (a_sel, a_rest) = split_by_mask(a.elems(), a_mask);
        let a_den = rprod_vals(&a_sel, &a_rest);
        for b_mask in k_subsets(n, q) {
            let (b_sel, b_rest) = split_by_mask(b.elems(), b_mask);
            let num = rprod_vals(&a_sel, &b_sel).mul(&rprod_vals(&a_rest, &b_rest));
            if num.is_zero() {
                continue;
            }
            let den = a_den.mul(&rprod_vals(&b_sel, &b_rest));
            let mut roots = a_sel.clone();
            roots.extend_from_slice(&b_sel);
            let term = UniPoly::from_roots(&roots).scale(&num.div(&den));
            acc = acc.add(&term);
        }
    }
    debug_assert!(acc.degree().is_none_or(|d| d <= p + q));
    Ok(acc)
}

/// Evaluate the multivariate single sum `MSyl_{0,d}(A,B)` at a tuple of
/// `|B| - d` scalars:
///
/// ```text
/// (-1)^{(m-d)(n-d)} sum_{B' subset B, |B'|=d}
///     (prod_{beta notin B'} f(beta)) R(X,B') / R(B\B', B')
/// ```
///
/// At a node tuple `B \ B'` every term but one vanishes and the value is
/// `(-1)^{(m-d)(n-d)} prod_{beta in B\B'} f(beta)`.
pub fn msyl_eval<K: Field>(
    a: &RootSet<K>,
    b: &RootSet<K>,
    d: usize,
    point: &[K],
) -> Result<K, Error> {
    let (m, n) = (a.len(), b.len());
    if n == 0 || d > n - 1 {
        return Err(Error::DegreeBoundOutOfRange { d, n });
    }
    if point.len() != n - d {
        return Err(Error::TupleSizeMismatch {
            expected: n - d,
            got: point.len(),
        });
    }
    let f = a.poly();
    let mut acc = K::zero();
    for b_mask in k_subsets(n, d) {
        let (b_sel, b_rest) = split_by_mask(b.elems(), b_mask);
        let mut num = K::one();
        for beta in &b_rest {
            num = num.mul(&f.eval(beta));
        }
        if num.is_zero() {
            continue;
        }
        num = num.mul(&rprod_vals(point, &b_sel));
        if num.is_zero() {
            continue;
        }
        acc = acc.add(&num.div(&rprod_vals(&b_rest, &b_sel)));
    }
    Ok(acc.mul(&sign_pow((m as i64 - d as i64) * (n as i64 - d as i64))))
}

/// Evaluate the determinantal form of `MSyl_{0,d}(A,B)` at a tuple of
/// pairwise-distinct scalars: the coefficient-block determinant with
/// columns `x_k^j f(x_k)`, `x_k^j g(x_k)` divided by the Vandermonde
/// determinant of the tuple. Requires `d <= min{|B|-1, |A|}`.
pub fn msyl_det_eval<K: Field>(
    a: &RootSet<K>,
    b: &RootSet<K>,
    d: usize,
    point: &[K],
) -> Result<K, Error> {
    let (m, n) = (a.len(), b.len());
    if n == 0 || d > n - 1 || d > m {
        return Err(Error::DegreeBoundOutOfRange { d, n });
    }
    if point.len() != n - d {
        return Err(Error::TupleSizeMismatch {
            expected: n - d,
            got: point.len(),
        });
    }
    for i in 0..point.len() {
        for j in i + 1..point.len() {
            if point[i] == point[j] {
                return Err(Error::RepeatedTupleEntry);
            }
        }
    }
    let f = a.poly();
    let g = b.poly();
    let f_at: Vec<K> = point.iter().map(|t| f.eval(t)).collect();
    let g_at: Vec<K> = point.iter().map(|t| g.eval(t)).collect();
    let size = m + n - 2 * d;
    let coeff_cols = m - d;
    // Rows: n-d shifted rows of f coefficients, then m-d shifted rows of g
    // coefficients; trailing n-d columns hold weighted powers of the point.
    let numer = Matrix::from_fn(size, size, |i, j| {
        if i < n - d {
            if j < coeff_cols {
                f.coeff_i64(m as i64 - j as i64 + i as i64)
            } else {
                let k = j - coeff_cols;
                point[k].pow_usize(n - d - 1 - i).mul(&f_at[k])
            }
        } else {
            let i = i - (n - d);
            if j < coeff_cols {
                g.coeff_i64(n as i64 - j as i64 + i as i64)
            } else {
                let k = j - coeff_cols;
                point[k].pow_usize(m - d - 1 - i).mul(&g_at[k])
            }
        }
    });
    let den = vandermonde_product(point);
    Ok(numer.det()?.div(&den))
}

/// Denominator orientation of the A-side exchange sum.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    /// Denominator `R(A\A', A')`, no global sign.
    Body,
    /// Denominator `R(A', A\A')`; relates to [`Orientation::Body`] by the
    /// factor `(-1)^{p(|A|-p)}`.
    Intro,
}

/// Both sides of the exchange identity for `p`-subsets, as polynomials in
/// x. `X` is a tuple of at most `|A| - p` entries, at most one of them the
/// indeterminate.
///
/// ```text
/// LHS = sum_{A' subset A, |A'|=p} R(A\A', B) R(X,A') / R(A\A', A')
/// RHS = sum_{B' subset B, |B'|=p} R(A, B\B') R(X,B') / R(B', B\B')
/// ```
///
/// The two components are equal whenever `|B| >= p`.
pub fn exchange_sides<K: Field>(
    a: &RootSet<K>,
    b: &RootSet<K>,
    p: usize,
    x: &[XElem<K>],
) -> Result<(UniPoly<K>, UniPoly<K>), Error> {
    let (m, n) = (a.len(), b.len());
    if p > m || p > n {
        return Err(Error::SubsetSizeOutOfRange {
            size: p,
            len: m.min(n),
        });
    }
    if x.len() > m - p {
        return Err(Error::TupleSizeMismatch {
            expected: m - p,
            got: x.len(),
        });
    }
    let lhs = exchange_lhs(a, b, p, x, Orientation::Body);
    let mut rhs = UniPoly::zero();
    for b_mask in k_subsets(n, p) {
        let (b_sel, b_rest) = split_by_mask(b.elems(), b_mask);
        let num = rprod_vals(a.elems(), &b_rest);
        if num.is_zero() {
            continue;
        }
        let den = rprod_vals(&b_sel, &b_rest);
        let term = rprod(x, &vals(&b_sel)).scale(&num.div(&den));
        rhs = rhs.add(&term);
    }
    Ok((lhs, rhs))
}

/// The A-side exchange sum in either denominator orientation.
pub fn exchange_lhs<K: Field>(
    a: &RootSet<K>,
    b: &RootSet<K>,
    p: usize,
    x: &[XElem<K>],
    orientation: Orientation,
) -> UniPoly<K> {
    let m = a.len();
    let mut acc = UniPoly::zero();
    for a_mask in k_subsets(m, p) {
        let (a_sel, a_rest) = split_by_mask(a.elems(), a_mask);
        let num = rprod_vals(&a_rest, b.elems());
        if num.is_zero() {
            continue;
        }
        let den = match orientation {
            Orientation::Body => rprod_vals(&a_rest, &a_sel),
            Orientation::Intro => rprod_vals(&a_sel, &a_rest),
        };
        let term = rprod(x, &vals(&a_sel)).scale(&num.div(&den));
        acc = acc.add(&term);
    }
    acc
}
