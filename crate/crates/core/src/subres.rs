//! Coefficient-side objects: subresultants, the resultant, and the Bézout
//! cofactors of the subresultant in their three equivalent constructions
//! (determinantal, as sums over root subsets, and in exchange form).

use crate::error::Error;
use crate::linalg::{Matrix, PolyColMatrix};
use crate::poly::{RootSet, UniPoly};
use crate::scalar::{sign_pow, Field};
use crate::subsets::{k_subsets, split_by_mask};
use crate::sylvester::{rprod, rprod_vals, vals, XElem};

/// Nonzero degrees of an `(f, g)` pair.
fn degrees<K: Field>(f: &UniPoly<K>, g: &UniPoly<K>) -> Result<(usize, usize), Error> {
    match (f.degree(), g.degree()) {
        (Some(m), Some(n)) => Ok((m, n)),
        _ => Err(Error::ZeroPolynomial),
    }
}

/// `d` is admissible for `Sres_d(f,g)` when `d <= min{m,n}` if `m != n`,
/// or `d < m` if `m == n`.
fn check_sres_index(d: usize, m: usize, n: usize) -> Result<(), Error> {
    let admissible = if m == n { d < m } else { d <= m.min(n) };
    if admissible {
        Ok(())
    } else {
        Err(Error::InadmissibleSubresultant { d, m, n })
    }
}

/// The shared (m+n-2d) x (m+n-2d-1) coefficient block: n-d shifted rows of
/// f coefficients over m-d shifted rows of g coefficients.
fn coefficient_block<K: Field>(
    f: &UniPoly<K>,
    g: &UniPoly<K>,
    m: usize,
    n: usize,
    d: usize,
) -> Matrix<K> {
    let rows = m + n - 2 * d;
    Matrix::from_fn(rows, rows - 1, |i, j| {
        if i < n - d {
            f.coeff_i64(m as i64 - j as i64 + i as i64)
        } else {
            g.coeff_i64(n as i64 - j as i64 + (i - (n - d)) as i64)
        }
    })
}

/// The subresultant `Sres_d(f,g)`: the determinant of the coefficient
/// block bordered by the polynomial column
/// `(x^{n-d-1} f, .., f, x^{m-d-1} g, .., g)`. Degree at most `d`.
pub fn sres<K: Field>(f: &UniPoly<K>, g: &UniPoly<K>, d: usize) -> Result<UniPoly<K>, Error> {
    let (m, n) = degrees(f, g)?;
    check_sres_index(d, m, n)?;
    let last_col = (0..n - d)
        .map(|i| UniPoly::monomial(K::one(), n - d - 1 - i).mul(f))
        .chain((0..m - d).map(|i| UniPoly::monomial(K::one(), m - d - 1 - i).mul(g)))
        .collect();
    let result = PolyColMatrix {
        block: coefficient_block(f, g, m, n, d),
        last_col,
    }
    .det_poly()?;
    debug_assert!(result.degree().is_none_or(|deg| deg <= d));
    Ok(result)
}

/// The resultant `Res(f,g) = Sres_0(f,g)`, read as a scalar. For monic f
/// built from roots A it equals `prod_{alpha in A} g(alpha)`.
pub fn resultant<K: Field>(f: &UniPoly<K>, g: &UniPoly<K>) -> Result<K, Error> {
    let (m, n) = degrees(f, g)?;
    if m == 0 && n == 0 {
        return Err(Error::InadmissibleSubresultant { d: 0, m, n });
    }
    Ok(sres(f, g, 0)?.coeff(0))
}

/// `k` is admissible for the cofactors when `k <= min{m-1, n-1}`.
fn check_cofactor_index(k: usize, m: usize, n: usize) -> Result<(), Error> {
    if m == 0 || n == 0 || k > (m - 1).min(n - 1) {
        Err(Error::CofactorIndexOutOfRange { k, m, n })
    } else {
        Ok(())
    }
}

/// The Bézout cofactors `(F_k, G_k)` of `Sres_k(f,g) = F_k f + G_k g`, as
/// determinants sharing the `Sres_k` coefficient block: the last column is
/// `(x^{n-k-1}, .., 1, 0, .., 0)` for `F_k` and `(0, .., 0, x^{m-k-1}, .., 1)`
/// for `G_k`. Degrees: `deg F_k <= n-k-1`, `deg G_k <= m-k-1`.
pub fn bezout_cofactors_det<K: Field>(
    f: &UniPoly<K>,
    g: &UniPoly<K>,
    k: usize,
) -> Result<(UniPoly<K>, UniPoly<K>), Error> {
    let (m, n) = degrees(f, g)?;
    check_cofactor_index(k, m, n)?;
    let block = coefficient_block(f, g, m, n, k);

    let f_col = (0..n - k)
        .map(|i| UniPoly::monomial(K::one(), n - k - 1 - i))
        .chain((0..m - k).map(|_| UniPoly::zero()))
        .collect();
    let g_col = (0..n - k)
        .map(|_| UniPoly::zero())
        .chain((0..m - k).map(|i| UniPoly::monomial(K::one(), m - k - 1 - i)))
        .collect();

    let f_k = PolyColMatrix {
        block: block.clone(),
        last_col: f_col,
    }
    .det_poly()?;
    let g_k = PolyColMatrix {
        block,
        last_col: g_col,
    }
    .det_poly()?;
    debug_assert!(f_k.degree().is_none_or(|deg| deg < n - k));
    debug_assert!(g_k.degree().is_none_or(|deg| deg < m - k));
    Ok((f_k, g_k))
}

/// The cofactors as sums over root subsets:
///
/// ```text
/// F_k = (-1)^{m-k}   sum_{B' subset B, |B'|=k+1} R(A,B\B') R(x,B\B') / R(B',B\B')
/// G_k = (-1)^{m-k+1} sum_{A' subset A, |A'|=k+1} R(A\A',B) R(x,A\A') / R(A\A',A')
/// ```
pub fn cofactors_from_roots<K: Field>(
    a: &RootSet<K>,
    b: &RootSet<K>,
    k: usize,
) -> Result<(UniPoly<K>, UniPoly<K>), Error> {
    let (m, n) = (a.len(), b.len());
    check_cofactor_index(k, m, n)?;

    let mut f_k = UniPoly::zero();
    for b_mask in k_subsets(n, k + 1) {
        let (b_sel, b_rest) = split_by_mask(b.elems(), b_mask);
        let num = rprod_vals(a.elems(), &b_rest);
        if num.is_zero() {
            continue;
        }
        let den = rprod_vals(&b_sel, &b_rest);
        f_k = f_k.add(&UniPoly::from_roots(&b_rest).scale(&num.div(&den)));
    }
    f_k = f_k.scale(&sign_pow((m - k) as i64));

    let mut g_k = UniPoly::zero();
    for a_mask in k_subsets(m, k + 1) {
        let (a_sel, a_rest) = split_by_mask(a.elems(), a_mask);
        let num = rprod_vals(&a_rest, b.elems());
        if num.is_zero() {
            continue;
        }
        let den = rprod_vals(&a_rest, &a_sel);
        g_k = g_k.add(&UniPoly::from_roots(&a_rest).scale(&num.div(&den)));
    }
    g_k = g_k.scale(&sign_pow((m - k + 1) as i64));

    Ok((f_k, g_k))
}

/// The cofactors in exchange form, as sums over subsets of `A ∪ {x}` and
/// `B ∪ {x}`:
///
/// ```text
/// F_k = (-1)^{k(m-k)} sum_{C' subset A∪{x}, |C'|=k+1} R((A∪{x})\C', B) / R(C', (A∪{x})\C')
/// G_k = (-1)^{m(n-k)} sum_{D' subset B∪{x}, |D'|=k+1} R((B∪{x})\D', A) / R(D', (B∪{x})\D')
/// ```
///
/// Each term is rational in x but the sum is polynomial: the common
/// denominator `prod (x - root)` is cleared and the final division is
/// checked to be exact.
pub fn cofactors_exchange_form<K: Field>(
    a: &RootSet<K>,
    b: &RootSet<K>,
    k: usize,
) -> Result<(UniPoly<K>, UniPoly<K>), Error> {
    let (m, n) = (a.len(), b.len());
    check_cofactor_index(k, m, n)?;
    let f_k = exchange_cofactor_sum(a, b, k, (k * (m - k)) as i64);
    let g_k = exchange_cofactor_sum(b, a, k, (m * (n - k)) as i64);
    Ok((f_k, g_k))
}

/// `sign * sum_{C' subset S∪{x}, |C'|=k+1} R((S∪{x})\C', other) / R(C', (S∪{x})\C')`
/// with the denominator cleared through `prod_{s in S} (x - s)`.
fn exchange_cofactor_sum<K: Field>(
    s: &RootSet<K>,
    other: &RootSet<K>,
    k: usize,
    sign_exp: i64,
) -> UniPoly<K> {
    let mixed: Vec<XElem<K>> = {
        let mut v = vals(s.elems());
        v.push(XElem::Var);
        v
    };
    let full = s.poly();
    let other_vals = vals(other.elems());
    let mut acc = UniPoly::zero();
    for mask in k_subsets(mixed.len(), k + 1) {
        let (sel, rest) = split_by_mask(&mixed, mask);
        let num = rprod(&rest, &other_vals);
        if num.is_zero() {
            continue;
        }
        // The denominator is scalar * prod (x - root) for a subset of the
        // roots of `full`, so it divides `full` up to that scalar.
        let den = rprod(&sel, &rest);
        let lead = den.leading().expect("denominator is nonzero").clone();
        let den_monic = den.scale(&lead.inv().expect("nonzero leading"));
        let (cleared, rem) = full.div_rem(&den_monic);
        assert!(rem.is_zero(), "denominator must divide the root product");
        acc = acc.add(&num.mul(&cleared).scale(&lead.inv().unwrap()));
    }
    let (quot, rem) = acc.div_rem(&full);
    assert!(
        rem.is_zero(),
        "exchange-form cofactor sum must be polynomial"
    );
    quot.scale(&sign_pow(sign_exp))
}

/// The single sum `Syl_{0,d}(A,B)` for arbitrary m, n and `0 <= d <= n`,
/// per the closing case table:
///
/// ```text
/// Sres_d(f,g)      for d <= min{m-1, n} or d = m < n
/// 0                for m < d < n-1
/// (-1)^{m+n-1} f   for m < d = n-1
/// g                for m <= d = n
/// ```
pub fn single_sum_expected<K: Field>(
    a: &RootSet<K>,
    b: &RootSet<K>,
    d: usize,
) -> Result<UniPoly<K>, Error> {
    let (m, n) = (a.len(), b.len());
    if d > n {
        return Err(Error::SubsetSizeOutOfRange { size: d, len: n });
    }
    let f = a.poly();
    let g = b.poly();
    if (m >= 1 && d <= (m - 1).min(n)) || (d == m && m < n) {
        sres(&f, &g, d)
    } else if m < d && d + 1 < n {
        Ok(UniPoly::zero())
    } else if m < d && d + 1 == n {
        Ok(f.scale(&sign_pow((m + n) as i64 - 1)))
    } else {
        // m <= d = n
        Ok(g)
    }
}
