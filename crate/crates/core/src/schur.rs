//! Schur polynomials via the bialternant ratio, Schur-determinant forms of
//! the Bézout cofactors, the power-of-x special case, and the matrix
//! factorization behind it (Cauchy-Binet shape).
//!
//! Schur values are always computed by evaluating the bialternant at
//! distinct points, never by expanding into monomial sums.

use crate::error::Error;
use crate::linalg::{vandermonde, vandermonde_product, Matrix};
use crate::poly::{RootSet, UniPoly};
use crate::scalar::{sign_pow, Field};

/// Weakly decreasing tuple of non-negative integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition);
        }
        Ok(Partition { parts })
    }

    /// The rectangle-with-padding shape `(w^h; 0^pad)`.
    pub fn rectangle(w: usize, h: usize, pad: usize) -> Self {
        let mut parts = vec![w; h];
        parts.extend(std::iter::repeat_n(0, pad));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// The Schur polynomial `s_lambda(X)` as the bialternant ratio
/// `det(x_j^{lambda_i + l - 1 - i}) / det(V(X))`, evaluated at a tuple of
/// pairwise-distinct scalars with `|X| == len(lambda)`.
pub fn schur_eval<K: Field>(lambda: &Partition, xs: &[K]) -> Result<K, Error> {
    let l = xs.len();
    if lambda.len() != l {
        return Err(Error::PartitionLengthMismatch {
            len: lambda.len(),
            vars: l,
        });
    }
    for i in 0..l {
        for j in i + 1..l {
            if xs[i] == xs[j] {
                return Err(Error::RepeatedTupleEntry);
            }
        }
    }
    let numer = Matrix::from_fn(l, l, |i, j| xs[j].pow_usize(lambda.parts()[i] + l - 1 - i));
    Ok(numer.det()?.div(&vandermonde_product(xs)))
}

/// The F-side cofactor as a ratio of alternants over `A ∪ {t}`: a block of
/// g-weighted powers over a block of plain powers, divided by the
/// Vandermonde determinant, times `(-1)^{m-k}`. Equals `F_k(f,g)(t)`.
pub fn cofactor_f_schur_eval<K: Field>(
    a: &RootSet<K>,
    g: &UniPoly<K>,
    k: usize,
    t: &K,
) -> Result<K, Error> {
    let m = a.len();
    let n = g.degree().ok_or(Error::ZeroPolynomial)?;
    if m == 0 || n == 0 || k > (m - 1).min(n - 1) {
        return Err(Error::CofactorIndexOutOfRange { k, m, n });
    }
    if a.contains(t) {
        return Err(Error::PointCollidesWithRoot);
    }
    let mut cols: Vec<K> = a.elems().to_vec();
    cols.push(t.clone());
    Ok(weighted_alternant_ratio(&cols, g, m - k, k).mul(&sign_pow((m - k) as i64)))
}

/// The G-side cofactor as the mirrored ratio over `B ∪ {t}` weighted by f,
/// times `(-1)^{(m-k-1)(n-k)}` where `m = deg f`. Equals `G_k(f,g)(t)`.
pub fn cofactor_g_schur_eval<K: Field>(
    b: &RootSet<K>,
    f: &UniPoly<K>,
    k: usize,
    t: &K,
) -> Result<K, Error> {
    let n = b.len();
    let m = f.degree().ok_or(Error::ZeroPolynomial)?;
    if m == 0 || n == 0 || k > (m - 1).min(n - 1) {
        return Err(Error::CofactorIndexOutOfRange { k, m, n });
    }
    if b.contains(t) {
        return Err(Error::PointCollidesWithRoot);
    }
    let mut cols: Vec<K> = b.elems().to_vec();
    cols.push(t.clone());
    let sign = sign_pow((m as i64 - k as i64 - 1) * (n as i64 - k as i64));
    Ok(weighted_alternant_ratio(&cols, f, n - k, k).mul(&sign))
}

/// `det [ w(c_j) c_j^{top-1-i} ; c_j^{k-i} ] / det V(cols)` with `top` rows
/// of weighted powers and `k+1` rows of plain powers.
fn weighted_alternant_ratio<K: Field>(cols: &[K], weight: &UniPoly<K>, top: usize, k: usize) -> K {
    let size = cols.len();
    debug_assert_eq!(size, top + k + 1);
    let weighted: Vec<K> = cols.iter().map(|c| weight.eval(c)).collect();
    let numer = Matrix::from_fn(size, size, |i, j| {
        if i < top {
            weighted[j].mul(&cols[j].pow_usize(top - 1 - i))
        } else {
            cols[j].pow_usize(k - (i - top))
        }
    });
    numer
        .det()
        .expect("square by construction")
        .div(&vandermonde_product(cols))
}

/// For `g = x^n` the F-side cofactor is a Schur polynomial: returns the
/// pair `(F_k(f, x^n)(t), (-1)^{m-k} s_lambda(A ∪ {t}))` with
/// `lambda = ((n-k-1)^{m-k}; 0^{k+1})`. The two components must be equal.
pub fn schur_special_case<K: Field>(
    a: &RootSet<K>,
    n: usize,
    k: usize,
    t: &K,
) -> Result<(K, K), Error> {
    let m = a.len();
    if m == 0 || n == 0 || k > (m - 1).min(n - 1) {
        return Err(Error::CofactorIndexOutOfRange { k, m, n });
    }
    if a.contains(t) {
        return Err(Error::PointCollidesWithRoot);
    }
    let f = a.poly();
    let g = UniPoly::monomial(K::one(), n);
    let (f_k, _) = crate::subres::bezout_cofactors_det(&f, &g, k)?;

    let lambda = Partition::rectangle(n - k - 1, m - k, k + 1);
    let mut xs: Vec<K> = a.elems().to_vec();
    xs.push(t.clone());
    let schur = schur_eval(&lambda, &xs)?.mul(&sign_pow((m - k) as i64));
    Ok((f_k.eval(t), schur))
}

/// Check the matrix factorization behind the general-g Schur expansion:
/// the g-weighted alternant matrix over `A ∪ {t}` equals the banded
/// g-coefficient matrix stacked on `[0 | Id]`, times the shifted
/// Vandermonde matrix `V_{m+n-k}(A ∪ {t})`. Entrywise exact equality.
pub fn cauchy_binet_factorization_check<K: Field>(
    a: &RootSet<K>,
    g: &UniPoly<K>,
    k: usize,
    t: &K,
) -> Result<bool, Error> {
    let m = a.len();
    let n = g.degree().ok_or(Error::ZeroPolynomial)?;
    if m == 0 || n == 0 || k > (m - 1).min(n - 1) {
        return Err(Error::CofactorIndexOutOfRange { k, m, n });
    }
    if a.contains(t) {
        return Err(Error::PointCollidesWithRoot);
    }
    let mut cols: Vec<K> = a.elems().to_vec();
    cols.push(t.clone());
    let weighted: Vec<K> = cols.iter().map(|c| g.eval(c)).collect();

    let lhs = Matrix::from_fn(m + 1, m + 1, |i, j| {
        if i < m - k {
            weighted[j].mul(&cols[j].pow_usize(m - k - 1 - i))
        } else {
            cols[j].pow_usize(k - (i - (m - k)))
        }
    });

    // Band of g coefficients (descending from g_n) over [0 | Id].
    let width = m + n - k;
    let stacked = Matrix::from_fn(m + 1, width, |i, j| {
        if i < m - k {
            if j >= i && j <= i + n {
                g.coeff(n - (j - i))
            } else {
                K::zero()
            }
        } else if j == width - (k + 1) + (i - (m - k)) {
            K::one()
        } else {
            K::zero()
        }
    });
    let rhs = stacked.mul(&vandermonde(&cols, width));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    use crate::subres::bezout_cofactors_det;

    fn roots(vals: &[i64]) -> RootSet<Rat> {
        RootSet::from_i64(vals).unwrap()
    }

    fn rats(vals: &[i64]) -> Vec<Rat> {
        vals.iter().map(|&v| Rat::from_i64(v)).collect()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 1, 1, 0]).is_ok());
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(Error::NotAPartition)
        ));
        assert_eq!(Partition::rectangle(2, 3, 2).parts(), &[2, 2, 2, 0, 0]);
    }

    #[test]
    fn schur_fixtures() {
        // Zero partition: the numerator is the Vandermonde itself.
        let zero = Partition::new(vec![0, 0, 0]).unwrap();
        assert_eq!(schur_eval(&zero, &rats(&[2, 5, -1])).unwrap(), Rat::one());

        // s_(1,0)(a, b) = a + b.
        let hook = Partition::new(vec![1, 0]).unwrap();
        for (a, b) in [(2i64, 7i64), (-3, 4), (0, 9)] {
            assert_eq!(
                schur_eval(&hook, &rats(&[a, b])).unwrap(),
                Rat::from_i64(a + b)
            );
        }

        // s_(2,1)(x1, x2) = x1^2 x2 + x1 x2^2, so s_(2,1)(1, 2) = 6.
        let lam = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(schur_eval(&lam, &rats(&[1, 2])).unwrap(), Rat::from_i64(6));

        assert!(schur_eval(&lam, &rats(&[1, 1])).is_err());
        assert!(schur_eval(&lam, &rats(&[1, 2, 3])).is_err());
    }

    #[test]
    fn schur_is_symmetric_and_polynomial() {
        let lam = Partition::new(vec![3, 1, 0]).unwrap();
        let xs = rats(&[2, -1, 5]);
        let base = schur_eval(&lam, &xs).unwrap();
        for perm in [[0usize, 2, 1], [1, 0, 2], [2, 1, 0], [1, 2, 0], [2, 0, 1]] {
            let permuted: Vec<Rat> = perm.iter().map(|&i| xs[i].clone()).collect();
            assert_eq!(schur_eval(&lam, &permuted).unwrap(), base);
        }

        // Clearing the denominator: numerator det == schur * vandermonde det.
        let l = xs.len();
        let numer = Matrix::from_fn(l, l, |i, j| xs[j].pow_usize(lam.parts()[i] + l - 1 - i));
        assert_eq!(numer.det().unwrap(), base.mul(&vandermonde_product(&xs)));
    }

    #[test]
    fn cofactor_ratios_match_determinant_cofactors() {
        let a = roots(&[1, 2]);
        let b = roots(&[3, 4]);
        let f = a.poly();
        let g = b.poly();
        // F_0(0) = 18 from the standard fixture.
        assert_eq!(
            cofactor_f_schur_eval(&a, &g, 0, &Rat::zero()).unwrap(),
            Rat::from_i64(18)
        );
        // k = m-1: sign bookkeeping reproduces the forced F_1 = -1.
        assert_eq!(
            cofactor_f_schur_eval(&a, &g, 1, &Rat::zero()).unwrap(),
            Rat::from_i64(-1)
        );

        let a = roots(&[-3, 1, 4]);
        let b = roots(&[-5, 0, 2, 6]);
        let f2 = a.poly();
        let g2 = b.poly();
        for k in 0..=2usize {
            let (fk, gk) = bezout_cofactors_det(&f2, &g2, k).unwrap();
            for t in [-2i64, 3, 7, 10] {
                let t = Rat::from_i64(t);
                assert_eq!(
                    cofactor_f_schur_eval(&a, &g2, k, &t).unwrap(),
                    fk.eval(&t),
                    "F side k={k}"
                );
                assert_eq!(
                    cofactor_g_schur_eval(&b, &f2, k, &t).unwrap(),
                    gk.eval(&t),
                    "G side k={k}"
                );
            }
        }
        assert!(cofactor_f_schur_eval(&a, &g, 0, &Rat::from_i64(1)).is_err());
        let _ = f;
    }

    #[test]
    fn power_special_case_is_a_schur_polynomial() {
        let a = roots(&[1, 2, 5]);
        for (n, k) in [(4usize, 0usize), (4, 1), (4, 2), (3, 1), (2, 1)] {
            let (lhs, rhs) = schur_special_case(&a, n, k, &Rat::from_i64(7)).unwrap();
            assert_eq!(lhs, rhs, "n={n}, k={k}");
        }
        // k = m-1 = n-1: the zero partition, so the pair is (+-1, +-1).
        let a2 = roots(&[4, -2]);
        let (lhs, rhs) = schur_special_case(&a2, 2, 1, &Rat::from_i64(1)).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, Rat::from_i64(-1));

        // m = n = 1 admits only k = 0, again the zero partition.
        let (lhs, rhs) = schur_special_case(&roots(&[3]), 1, 0, &Rat::zero()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, Rat::from_i64(-1));
        assert!(schur_special_case(&roots(&[3]), 1, 1, &Rat::zero()).is_err());
    }

    #[test]
    fn factorization_check_holds() {
        let a = roots(&[1, 2, 5]);
        let g = roots(&[-4, 0, 3, 8]).poly();
        for k in 0..=2usize {
            assert!(
                cauchy_binet_factorization_check(&a, &g, k, &Rat::from_i64(7)).unwrap(),
                "k={k}"
            );
        }
        // g = x^n reduces the band to a shifted identity.
        let xn = UniPoly::monomial(Rat::one(), 4);
        assert!(cauchy_binet_factorization_check(&a, &xn, 1, &Rat::from_i64(7)).unwrap());
        // Minimal block at k = m-1.
        assert!(cauchy_binet_factorization_check(&a, &g, 2, &Rat::from_i64(-1)).unwrap());
        assert!(cauchy_binet_factorization_check(&a, &g, 0, &Rat::from_i64(2)).is_err());
    }
}
