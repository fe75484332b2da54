//! Identity-verification engine: evaluates every branch of the classical
//! case description of Sylvester double sums in terms of subresultants and
//! Bézout cofactors, plus the supporting reduction and interpolation
//! identities, on generated instances. All comparisons are exact; there
//! are no tolerances anywhere. Failures carry the full instance data for
//! one-command reproduction.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::Error;
use crate::poly::{RootSet, UniPoly};
use crate::scalar::{binomial, sign_pow, Field};
use crate::schur::{
    cauchy_binet_factorization_check, cofactor_f_schur_eval, cofactor_g_schur_eval,
    schur_special_case,
};
use crate::subres::{bezout_cofactors_det, single_sum_expected, sres};
use crate::subsets::{k_subsets, split_by_mask};
use crate::sylvester::{
    exchange_lhs, exchange_sides, msyl_det_eval, msyl_eval, rprod_vals, syl_double, x_and_vals,
    Orientation,
};
use crate::syminterp::sym_interpolate;

/// Deterministic split-mix generator; the whole suite is reproducible
/// from the seed alone.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `[-range, range]`.
    pub fn next_in_range(&mut self, range: i64) -> i64 {
        let width = 2 * range as u64 + 1;
        (self.next_u64() % width) as i64 - range
    }
}

/// A generated test instance: two root sets and their monic polynomials.
#[derive(Clone, Debug)]
pub struct Instance<K: Field> {
    pub seed: u64,
    pub a: RootSet<K>,
    pub b: RootSet<K>,
    pub f: UniPoly<K>,
    pub g: UniPoly<K>,
    pub root_range: i64,
}

impl<K: Field> Instance<K> {
    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn from_roots(a: RootSet<K>, b: RootSet<K>, root_range: i64) -> Self {
        let f = a.poly();
        let g = b.poly();
        Instance {
            seed: 0,
            a,
            b,
            f,
            g,
            root_range,
        }
    }

    /// The instance with the roles of A and B exchanged.
    fn swapped(&self) -> Self {
        Instance {
            seed: self.seed,
            a: self.b.clone(),
            b: self.a.clone(),
            f: self.g.clone(),
            g: self.f.clone(),
            root_range: self.root_range,
        }
    }
}

/// Deterministic pseudo-random instance with pairwise-distinct integer
/// roots in `[-range, range]`, resampling on collision. When `disjoint`
/// is set, A and B share no root.
pub fn gen_instance<K: Field>(
    seed: u64,
    m: usize,
    n: usize,
    range: i64,
    disjoint: bool,
) -> Result<Instance<K>, Error> {
    let needed = if disjoint { m + n } else { m.max(n) };
    if range < 0 || (2 * range + 1) < needed as i64 {
        return Err(Error::RangeTooSmall { range, needed });
    }
    let mut rng = SplitMix64::new(seed);
    let mut draw_distinct = |count: usize, taken: &[i64]| -> Vec<i64> {
        let mut out: Vec<i64> = Vec::with_capacity(count);
        while out.len() < count {
            let v = rng.next_in_range(range);
            if !out.contains(&v) && !taken.contains(&v) {
                out.push(v);
            }
        }
        out
    };
    let a_roots = draw_distinct(m, &[]);
    let b_roots = draw_distinct(n, if disjoint { &a_roots } else { &[] });
    let a = RootSet::from_i64(&a_roots)?;
    let b = RootSet::from_i64(&b_roots)?;
    let mut inst = Instance::from_roots(a, b, range);
    inst.seed = seed;
    Ok(inst)
}

/// Outcome of one `(p, q)` cell of the double-sum case table.
#[derive(Clone, Debug)]
pub struct BranchReport<K: Field> {
    pub m: usize,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub d: usize,
    pub k: usize,
    pub seed: u64,
    pub branch: &'static str,
    /// Sign exponents used by the cofactor branch (zero elsewhere).
    pub sigma: i64,
    pub c: i64,
    pub e: i64,
    pub expected: UniPoly<K>,
    pub computed: UniPoly<K>,
    pub pass: bool,
}

impl<K: Field> BranchReport<K> {
    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "d": self.d,
            "k": self.k,
            "seed": self.seed,
            "branch": self.branch,
            "pass": self.pass,
            "expected": self.expected.to_json(),
            "computed": self.computed.to_json(),
        })
    }
}

/// Outcome of one named identity check on one instance.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub m: usize,
    pub n: usize,
    pub seed: u64,
    pub context: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl CheckReport {
    fn compare<T: PartialEq + std::fmt::Display>(
        name: &'static str,
        inst_meta: (usize, usize, u64),
        context: String,
        expected: &T,
        computed: &T,
    ) -> Self {
        CheckReport {
            name,
            m: inst_meta.0,
            n: inst_meta.1,
            seed: inst_meta.2,
            context,
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass: expected == computed,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "m": self.m,
            "n": self.n,
            "seed": self.seed,
            "context": self.context,
            "pass": self.pass,
            "expected": self.expected,
            "computed": self.computed,
        })
    }
}

fn meta<K: Field>(inst: &Instance<K>) -> (usize, usize, u64) {
    (inst.m(), inst.n(), inst.seed)
}

fn scale_bigint<K: Field>(p: &UniPoly<K>, c: &num_bigint::BigInt) -> UniPoly<K> {
    p.scale(&K::from_bigint(c))
}

/// The expected value of `Syl_{p,q}(A,B)` from the case table, for
/// instances with `m <= n`. Returns the branch label, the sign exponents,
/// and (for the cofactor branch) both displayed forms, which must agree.
pub fn expected_double_sum<K: Field>(
    inst: &Instance<K>,
    p: usize,
    q: usize,
) -> (UniPoly<K>, &'static str, [i64; 3], Option<UniPoly<K>>) {
    let (m, n) = (inst.m(), inst.n());
    assert!(m <= n, "case table is stated for m <= n");
    assert!(p <= m && q <= n);
    let (mi, ni, pi, qi) = (m as i64, n as i64, p as i64, q as i64);
    let d = p + q;
    let di = d as i64;
    let (f, g) = (&inst.f, &inst.g);

    if d < m || (d == m && m < n) {
        let sign = sign_pow::<K>(pi * (mi - di));
        let expected =
            scale_bigint(&sres(f, g, d).expect("admissible index"), &binomial(di, pi)).scale(&sign);
        return (expected, "subresultant", [0, 0, 0], None);
    }
    if d == m + n {
        let res = rprod_vals(inst.a.elems(), inst.b.elems());
        return (f.mul(g).scale(&res), "resultant-f-g", [0, 0, 0], None);
    }
    if d >= n {
        // n <= d <= m+n-1: combination of cofactors, two displayed forms.
        let k = m + n - d - 1;
        let ki = k as i64;
        let sigma = (di - mi) * (ni - qi) + di - ni - 1;
        let (f_k, g_k) = bezout_cofactors_det(f, g, k).expect("admissible cofactor index");
        let first = scale_bigint(&f_k.mul(f), &binomial(ki, mi - pi))
            .sub(&scale_bigint(&g_k.mul(g), &binomial(ki, ni - qi)))
            .scale(&sign_pow(sigma));
        let second = scale_bigint(
            &sres(f, g, k).expect("admissible index"),
            &binomial(ki, ni - qi),
        )
        .sub(&scale_bigint(&f_k.mul(f), &binomial(ki + 1, mi - pi)))
        .scale(&sign_pow(sigma + 1));
        let c = (di - mi) * (ni - qi) + di - ni;
        let e = (di - mi) * (qi + 1);
        return (first, "cofactor-combination", [sigma, c, e], Some(second));
    }
    if d + 1 == n {
        // m < d = n-1.
        let sign = sign_pow::<K>((pi + 1) * (mi + ni - 1));
        let expected = scale_bigint(f, &binomial(mi, pi)).scale(&sign);
        return (expected, "scaled-f", [0, 0, 0], None);
    }
    // m < d < n-1.
    (UniPoly::zero(), "zero", [0, 0, 0], None)
}

/// Evaluate the full case table against the subset-sum definition for
/// every `(p, q)`. Instances with `m > n` are routed through the
/// double-sum symmetry first, as the table requires.
pub fn check_double_sum_table<K: Field>(
    inst: &Instance<K>,
) -> (Vec<BranchReport<K>>, Vec<CheckReport>) {
    let (m, n) = (inst.m(), inst.n());
    let mut branch_reports = Vec::new();
    let mut checks = Vec::new();
    let swapped = (m > n).then(|| inst.swapped());
    for p in 0..=m {
        for q in 0..=n {
            let computed = syl_double(&inst.a, &inst.b, p, q).expect("ranges checked");
            let (expected, branch, signs, second_form) = match &swapped {
                None => expected_double_sum(inst, p, q),
                Some(sw) => {
                    let (e, branch, signs, second) = expected_double_sum(sw, q, p);
                    let sign = sign_pow::<K>((p * q + (m - p) * (n - q)) as i64);
                    (
                        e.scale(&sign),
                        branch,
                        signs,
                        second.map(|s| s.scale(&sign)),
                    )
                }
            };
            let d = p + q;
            let k = (m + n).saturating_sub(d + 1);
            if let Some(second) = second_form {
                // Mutual equality of the two displayed cofactor forms
                // encodes the Bézout identity.
                checks.push(CheckReport::compare(
                    "cofactor-forms-agree",
                    meta(inst),
                    format!("p={p}, q={q}"),
                    &expected,
                    &second,
                ));
            }
            branch_reports.push(BranchReport {
                m,
                n,
                p,
                q,
                d,
                k,
                seed: inst.seed,
                branch,
                sigma: signs[0],
                c: signs[1],
                e: signs[2],
                pass: expected == computed,
                expected,
                computed,
            });
        }
    }
    (branch_reports, checks)
}

/// The value of `H_{A'}` at a tuple: the q-subset sum
/// `sum_{B'} R(B\B', A\A') R(X,B') / R(B\B', B')`.
fn h_sum_eval<K: Field>(a_rest: &[K], b: &RootSet<K>, q: usize, point: &[K]) -> K {
    let n = b.len();
    let mut acc = K::zero();
    for b_mask in k_subsets(n, q) {
        let (b_sel, b_rest) = split_by_mask(b.elems(), b_mask);
        let num = rprod_vals(&b_rest, a_rest).mul(&rprod_vals(point, &b_sel));
        if num.is_zero() {
            continue;
        }
        acc = acc.add(&num.div(&rprod_vals(&b_rest, &b_sel)));
    }
    acc
}

/// Odometer over the cartesian product of per-variable abscissa lists.
fn for_each_grid_point<K: Field>(per_var: &[Vec<K>], mut visit: impl FnMut(&[K])) {
    let slots = per_var.len();
    if slots == 0 {
        visit(&[]);
        return;
    }
    let mut idx = vec![0usize; slots];
    let mut point: Vec<K> = per_var.iter().map(|v| v[0].clone()).collect();
    loop {
        visit(&point);
        let mut carry = slots;
        while carry > 0 {
            let slot = carry - 1;
            idx[slot] += 1;
            if idx[slot] < per_var[slot].len() {
                point[slot] = per_var[slot][idx[slot]].clone();
                break;
            }
            idx[slot] = 0;
            point[slot] = per_var[slot][0].clone();
            carry -= 1;
        }
        if carry == 0 {
            return;
        }
    }
}

/// `count` consecutive integer abscissae starting past the root range.
fn shifted_abscissae<K: Field>(inst_range: i64, offset: usize, count: usize) -> Vec<K> {
    (0..count)
        .map(|j| K::from_i64(inst_range + 1 + (offset * count + j) as i64))
        .collect()
}

/// Leading coefficient of the degree-`<= xs.len()-1` polynomial through
/// `(xs[i], ys[i])`: `sum_i y_i / prod_{j != i} (x_i - x_j)`.
fn leading_coeff_from_values<K: Field>(xs: &[K], ys: &[K]) -> K {
    let mut acc = K::zero();
    for (i, y) in ys.iter().enumerate() {
        if y.is_zero() {
            continue;
        }
        let mut den = K::one();
        for (j, x) in xs.iter().enumerate() {
            if i != j {
                den = den.mul(&xs[i].sub(x));
            }
        }
        acc = acc.add(&y.div(&den));
    }
    acc
}

/// Coefficient of `x_1^d .. x_{n-d-1}^d` of the multivariate single sum,
/// as a function of the last variable fixed to `tail`: extracted by
/// iterated leading-coefficient interpolation on `d+1` abscissae per
/// variable.
fn msyl_top_coeff_at<K: Field>(inst: &Instance<K>, d: usize, tail: &K) -> K {
    let n = inst.n();
    let abscissae = shifted_abscissae::<K>(inst.root_range, 1, d + 1);
    fn extract<K: Field>(
        inst: &Instance<K>,
        d: usize,
        prefix: &mut Vec<K>,
        remaining: usize,
        abscissae: &[K],
        tail: &K,
    ) -> K {
        if remaining == 0 {
            prefix.push(tail.clone());
            let v = msyl_eval(&inst.a, &inst.b, d, prefix).expect("valid point");
            prefix.pop();
            return v;
        }
        let ys: Vec<K> = abscissae
            .iter()
            .map(|t| {
                prefix.push(t.clone());
                let v = extract(inst, d, prefix, remaining - 1, abscissae, tail);
                prefix.pop();
                v
            })
            .collect();
        leading_coeff_from_values(abscissae, &ys)
    }
    extract(inst, d, &mut Vec::new(), n - d - 1, &abscissae, tail)
}

/// Supporting reduction identities: the small-d scaling of double sums to
/// single sums, the d <= n-1 case split, the large-d decomposition into
/// `Syl_{0,k}` and `Syl_{m,d-m}`, the cofactor form of `Syl_{m,d-m}`, and
/// the product factorization of the inner interpolation sums.
pub fn check_section_props<K: Field>(inst: &Instance<K>) -> Vec<CheckReport> {
    let (m, n) = (inst.m(), inst.n());
    let (mi, ni) = (m as i64, n as i64);
    let mut out = Vec::new();

    // Syl_{p,q} = (-1)^{p(m-d)} C(d,p) Syl_{0,d} for d <= min{m-1, n-1}.
    for p in 0..=m {
        for q in 0..=n {
            let d = p + q;
            if m == 0 || n == 0 || d > (m - 1).min(n - 1) {
                continue;
            }
            let single = syl_double(&inst.a, &inst.b, 0, d).unwrap();
            let expected = scale_bigint(&single, &binomial(d as i64, p as i64))
                .scale(&sign_pow((p as i64) * (mi - d as i64)));
            let computed = syl_double(&inst.a, &inst.b, p, q).unwrap();
            out.push(CheckReport::compare(
                "small-d-scaling",
                meta(inst),
                format!("p={p}, q={q}"),
                &expected,
                &computed,
            ));
        }
    }

    // The d <= n-1 case split, valid for any m:
    //   d <= min{m, n-1}    -> (-1)^{p(m-d)} C(d,p) Sres_d
    //   m < d < n-1         -> 0
    //   m < d = n-1         -> (-1)^{(p+1)(m+n-1)} C(m,p) f
    for p in 0..=m {
        for q in 0..=n {
            let d = p + q;
            if n == 0 || d > n - 1 {
                continue;
            }
            let di = d as i64;
            let expected = if d <= m.min(n.saturating_sub(1)) {
                scale_bigint(&sres(&inst.f, &inst.g, d).unwrap(), &binomial(di, p as i64))
                    .scale(&sign_pow((p as i64) * (mi - di)))
            } else if d + 1 < n {
                UniPoly::zero()
            } else {
                scale_bigint(&inst.f, &binomial(mi, p as i64))
                    .scale(&sign_pow((p as i64 + 1) * (mi + ni - 1)))
            };
            let computed = syl_double(&inst.a, &inst.b, p, q).unwrap();
            out.push(CheckReport::compare(
                "case-split-below-n",
                meta(inst),
                format!("p={p}, q={q}"),
                &expected,
                &computed,
            ));
        }
    }

    // Large d: Syl_{p,q} = (-1)^c C(k,n-q) Syl_{0,k} + (-1)^e C(k+1,m-p) Syl_{m,d-m}
    // with k = m+n-d-1, c = (d-m)(n-q)+d-n, e = (d-m)(q+1).
    for p in 0..=m {
        for q in 0..=n {
            let d = p + q;
            if d < m.max(n) || d > m + n - 1 {
                continue;
            }
            let (di, pi, qi) = (d as i64, p as i64, q as i64);
            let k = m + n - d - 1;
            let ki = k as i64;
            let c = (di - mi) * (ni - qi) + di - ni;
            let e = (di - mi) * (qi + 1);
            let single = syl_double(&inst.a, &inst.b, 0, k).unwrap();
            let corner = syl_double(&inst.a, &inst.b, m, d - m).unwrap();
            let expected = scale_bigint(&single, &binomial(ki, ni - qi))
                .scale(&sign_pow(c))
                .add(&scale_bigint(&corner, &binomial(ki + 1, mi - pi)).scale(&sign_pow(e)));
            let computed = syl_double(&inst.a, &inst.b, p, q).unwrap();
            out.push(CheckReport::compare(
                "large-d-decomposition",
                meta(inst),
                format!("p={p}, q={q}, k={k}"),
                &expected,
                &computed,
            ));
        }
    }

    // Syl_{m,d-m} = (-1)^{(d-m)n + m+n-1} F_k f for max{m,n} <= d <= m+n-1.
    for d in m.max(n)..=m + n - 1 {
        let k = m + n - d - 1;
        let (f_k, _) = bezout_cofactors_det(&inst.f, &inst.g, k).unwrap();
        let sign = sign_pow::<K>((d as i64 - mi) * ni + mi + ni - 1);
        let expected = f_k.mul(&inst.f).scale(&sign);
        let computed = syl_double(&inst.a, &inst.b, m, d - m).unwrap();
        out.push(CheckReport::compare(
            "corner-sum-cofactor-form",
            meta(inst),
            format!("d={d}, k={k}"),
            &expected,
            &computed,
        ));
    }

    // For m <= d <= n-1 the inner interpolation sum factors as a product:
    // H_{A'}(X) = prod_i f_{A\A'}(x_i), certified on a grid of q+1
    // abscissae per variable.
    for p in 0..=m {
        for q in 0..=n {
            let d = p + q;
            if n == 0 || d < m || d > n - 1 {
                continue;
            }
            for a_mask in k_subsets(m, p) {
                let (_, a_rest) = split_by_mask(inst.a.elems(), a_mask);
                let reduced = UniPoly::from_roots(&a_rest);
                let per_var: Vec<Vec<K>> = (0..n - q)
                    .map(|_| shifted_abscissae(inst.root_range, 2, q + 1))
                    .collect();
                let mut all_equal = true;
                for_each_grid_point(&per_var, |point| {
                    let lhs = h_sum_eval(&a_rest, &inst.b, q, point);
                    let rhs = point
                        .iter()
                        .fold(K::one(), |acc, t| acc.mul(&reduced.eval(t)));
                    if lhs != rhs {
                        all_equal = false;
                    }
                });
                out.push(CheckReport::compare(
                    "inner-sum-factorization",
                    meta(inst),
                    format!("p={p}, q={q}, A' mask={a_mask:#b}"),
                    &true,
                    &all_equal,
                ));
            }
        }
    }

    out
}

/// Everything else: single-sum sign relation, both symmetry laws, the
/// product interpolation identity, the determinantal form of the
/// multivariate sum, top-coefficient extraction, the exchange identity
/// in both orientations, and the closing single-sum table.
pub fn check_misc<K: Field>(inst: &Instance<K>) -> Vec<CheckReport> {
    let (m, n) = (inst.m(), inst.n());
    let (mi, ni) = (m as i64, n as i64);
    let mut out = Vec::new();
    let mut rng = SplitMix64::new(inst.seed ^ 0xa5a5_a5a5_a5a5_a5a5);

    // Syl_{d,0} = (-1)^{d(m-d)} Syl_{0,d} for d <= min{m,n}, excluding
    // d = m = n (there Syl_{m,0} = f while Syl_{0,n} = g): the boundary is
    // treated exactly like the subresultant admissibility clause.
    for d in 0..=m.min(n) {
        if d == m && m == n {
            continue;
        }
        let expected = syl_double(&inst.a, &inst.b, 0, d)
            .unwrap()
            .scale(&sign_pow((d as i64) * (mi - d as i64)));
        let computed = syl_double(&inst.a, &inst.b, d, 0).unwrap();
        out.push(CheckReport::compare(
            "single-sum-sign-relation",
            meta(inst),
            format!("d={d}"),
            &expected,
            &computed,
        ));
    }

    // Syl_{p,q}(A,B) = (-1)^{pq+(m-p)(n-q)} Syl_{q,p}(B,A).
    for p in 0..=m {
        for q in 0..=n {
            let swapped = syl_double(&inst.b, &inst.a, q, p).unwrap();
            let sign = sign_pow::<K>((p * q + (m - p) * (n - q)) as i64);
            let computed = syl_double(&inst.a, &inst.b, p, q).unwrap();
            out.push(CheckReport::compare(
                "double-sum-symmetry",
                meta(inst),
                format!("p={p}, q={q}"),
                &swapped.scale(&sign),
                &computed,
            ));
        }
    }

    // Sres_d(f,g) = (-1)^{(m-d)(n-d)} Sres_d(g,f) on admissible d.
    for d in 0..=m.min(n) {
        if d == m && m == n {
            continue;
        }
        let sign = sign_pow::<K>((mi - d as i64) * (ni - d as i64));
        let expected = sres(&inst.g, &inst.f, d).unwrap().scale(&sign);
        let computed = sres(&inst.f, &inst.g, d).unwrap();
        out.push(CheckReport::compare(
            "subresultant-symmetry",
            meta(inst),
            format!("d={d}"),
            &expected,
            &computed,
        ));
    }

    // Product interpolation identity: interpolating h(X) = x_1 .. x_{m-d}
    // on node tuples from A reproduces the product, certified on a grid
    // of d+1 abscissae per variable.
    for d in 1..m {
        let mut values = BTreeMap::new();
        for node_mask in k_subsets(m, m - d) {
            let (node_tuple, _) = split_by_mask(inst.a.elems(), node_mask);
            let prod = node_tuple.iter().fold(K::one(), |acc, v| acc.mul(v));
            values.insert(node_mask, prod);
        }
        let h = sym_interpolate(&inst.a, d, &values).unwrap();
        let per_var: Vec<Vec<K>> = (0..m - d)
            .map(|_| shifted_abscissae(inst.root_range, 3, d + 1))
            .collect();
        let mut all_equal = true;
        for_each_grid_point(&per_var, |point| {
            let lhs = h.eval(point).unwrap();
            let rhs = point.iter().fold(K::one(), |acc, t| acc.mul(t));
            if lhs != rhs {
                all_equal = false;
            }
        });
        out.push(CheckReport::compare(
            "product-interpolation-identity",
            meta(inst),
            format!("d={d}"),
            &true,
            &all_equal,
        ));
    }

    // Determinantal form of the multivariate sum versus its subset-sum
    // definition: full certification grid when small (abscissae exceed the
    // per-variable degree bound m+n-d-1 of the cleared identity), plus
    // random distinct points.
    for d in 0..=m.min(n.saturating_sub(1)) {
        let vars = n - d;
        let per_var_count = m + n - d;
        let grid_size = (per_var_count as u64).checked_pow(vars as u32);
        if grid_size.is_some_and(|s| s <= 5_000) {
            let per_var: Vec<Vec<K>> = (0..vars)
                .map(|i| shifted_abscissae(inst.root_range, 4 + i, per_var_count))
                .collect();
            let mut all_equal = true;
            for_each_grid_point(&per_var, |point| {
                let det = msyl_det_eval(&inst.a, &inst.b, d, point).unwrap();
                let sum = msyl_eval(&inst.a, &inst.b, d, point).unwrap();
                if det != sum {
                    all_equal = false;
                }
            });
            out.push(CheckReport::compare(
                "multivariate-sum-determinant-grid",
                meta(inst),
                format!("d={d}, grid={per_var_count}^{vars}"),
                &true,
                &all_equal,
            ));
        }
        for _ in 0..3 {
            let point = random_distinct_point::<K>(&mut rng, vars, 4 * inst.root_range + 17);
            let det = msyl_det_eval(&inst.a, &inst.b, d, &point).unwrap();
            let sum = msyl_eval(&inst.a, &inst.b, d, &point).unwrap();
            out.push(CheckReport::compare(
                "multivariate-sum-determinant-random",
                meta(inst),
                format!("d={d}"),
                &det,
                &sum,
            ));
        }
    }

    // The single sum is the top coefficient of the multivariate sum in the
    // leading variables (the whole polynomial when d = n-1).
    for d in 0..n {
        let tails = shifted_abscissae::<K>(inst.root_range, 0, d + 1);
        let points: Vec<(K, K)> = tails
            .iter()
            .map(|t| (t.clone(), msyl_top_coeff_at(inst, d, t)))
            .collect();
        let extracted = UniPoly::interpolate(&points);
        let computed = syl_double(&inst.a, &inst.b, 0, d).unwrap();
        out.push(CheckReport::compare(
            "single-sum-is-top-coefficient",
            meta(inst),
            format!("d={d}"),
            &extracted,
            &computed,
        ));
    }

    // Exchange identity: both sides agree for every subset size and tuple
    // length, with scalar slots certified on p+1 abscissae each; and the
    // two denominator orientations differ by exactly (-1)^{p(m-p)}.
    for p in 0..=m.min(n) {
        for r in 0..=m - p {
            let slot_count = r.saturating_sub(1);
            let per_var: Vec<Vec<K>> = (0..slot_count)
                .map(|i| shifted_abscissae(inst.root_range, 5 + i, p + 1))
                .collect();
            let mut all_equal = true;
            let mut reconciled = true;
            for_each_grid_point(&per_var, |scalars| {
                let x = if r == 0 {
                    Vec::new()
                } else {
                    x_and_vals(scalars)
                };
                let (lhs, rhs) = exchange_sides(&inst.a, &inst.b, p, &x).unwrap();
                if lhs != rhs {
                    all_equal = false;
                }
                let intro = exchange_lhs(&inst.a, &inst.b, p, &x, Orientation::Intro);
                if intro != lhs.scale(&sign_pow((p * (m - p)) as i64)) {
                    reconciled = false;
                }
            });
            out.push(CheckReport::compare(
                "exchange-sides-equal",
                meta(inst),
                format!("p={p}, r={r}"),
                &true,
                &all_equal,
            ));
            out.push(CheckReport::compare(
                "exchange-orientation-reconciliation",
                meta(inst),
                format!("p={p}, r={r}"),
                &true,
                &reconciled,
            ));
        }
    }

    // Closing single-sum table over the whole d range.
    for d in 0..=n {
        let expected = single_sum_expected(&inst.a, &inst.b, d).unwrap();
        let computed = syl_double(&inst.a, &inst.b, 0, d).unwrap();
        out.push(CheckReport::compare(
            "single-sum-case-table",
            meta(inst),
            format!("d={d}"),
            &expected,
            &computed,
        ));
    }

    // The two printed forms of the first-branch condition must classify
    // every d identically when m <= n; any disagreement is flagged.
    if m <= n {
        let mut agree = true;
        for d in 0..=n {
            let case_split_form = d < m || (d == m && m < n);
            let closing_table_form = (m >= 1 && d <= (m - 1).min(n)) || (d == m && m < n);
            if case_split_form != closing_table_form {
                agree = false;
            }
        }
        out.push(CheckReport::compare(
            "first-branch-conditions-agree",
            meta(inst),
            String::new(),
            &true,
            &agree,
        ));
    }

    out
}

/// Schur-side checks: cofactor alternant ratios against the determinantal
/// cofactors, the power-of-x Schur special case, and the matrix
/// factorization identity.
pub fn check_schur<K: Field>(inst: &Instance<K>) -> Vec<CheckReport> {
    let (m, n) = (inst.m(), inst.n());
    let mut out = Vec::new();
    let mut rng = SplitMix64::new(inst.seed ^ 0x5c5c_5c5c_5c5c_5c5c);
    if m == 0 || n == 0 {
        return out;
    }
    let mut fresh_t = |taken: &dyn Fn(&K) -> bool| loop {
        let t = K::from_i64(rng.next_in_range(4 * inst.root_range + 23));
        if !taken(&t) {
            return t;
        }
    };
    for k in 0..=(m - 1).min(n - 1) {
        let (f_k, g_k) = bezout_cofactors_det(&inst.f, &inst.g, k).unwrap();
        for _ in 0..2 {
            let t = fresh_t(&|t| inst.a.contains(t));
            out.push(CheckReport::compare(
                "cofactor-alternant-ratio-f",
                meta(inst),
                format!("k={k}, t={t}"),
                &f_k.eval(&t),
                &cofactor_f_schur_eval(&inst.a, &inst.g, k, &t).unwrap(),
            ));
            let t = fresh_t(&|t| inst.b.contains(t));
            out.push(CheckReport::compare(
                "cofactor-alternant-ratio-g",
                meta(inst),
                format!("k={k}, t={t}"),
                &g_k.eval(&t),
                &cofactor_g_schur_eval(&inst.b, &inst.f, k, &t).unwrap(),
            ));
        }

        let t = fresh_t(&|t| inst.a.contains(t));
        let (lhs, rhs) = schur_special_case(&inst.a, n, k, &t).unwrap();
        out.push(CheckReport::compare(
            "power-case-schur-value",
            meta(inst),
            format!("k={k}, t={t}"),
            &lhs,
            &rhs,
        ));

        let t = fresh_t(&|t| inst.a.contains(t));
        let ok = cauchy_binet_factorization_check(&inst.a, &inst.g, k, &t).unwrap();
        out.push(CheckReport::compare(
            "alternant-factorization",
            meta(inst),
            format!("k={k}, t={t}"),
            &true,
            &ok,
        ));
    }
    out
}

fn random_distinct_point<K: Field>(rng: &mut SplitMix64, count: usize, range: i64) -> Vec<K> {
    let mut raw: Vec<i64> = Vec::with_capacity(count);
    while raw.len() < count {
        let v = rng.next_in_range(range);
        if !raw.contains(&v) {
            raw.push(v);
        }
    }
    raw.into_iter().map(K::from_i64).collect()
}

/// Suite configuration: instance sizes, seeds per size, and root range.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_m: usize,
    pub max_n: usize,
    pub seeds_per_size: u64,
    pub base_seed: u64,
    pub root_range: i64,
    pub disjoint: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_m: 4,
            max_n: 4,
            seeds_per_size: 3,
            base_seed: 0,
            root_range: 50,
            disjoint: true,
        }
    }
}

/// All reports produced by one suite run, in deterministic order.
#[derive(Clone, Debug)]
pub struct SuiteReport<K: Field> {
    pub branches: Vec<BranchReport<K>>,
    pub checks: Vec<CheckReport>,
}

impl<K: Field> Default for SuiteReport<K> {
    fn default() -> Self {
        SuiteReport {
            branches: Vec::new(),
            checks: Vec::new(),
        }
    }
}

impl<K: Field> SuiteReport<K> {
    pub fn all_pass(&self) -> bool {
        self.branches.iter().all(|r| r.pass) && self.checks.iter().all(|r| r.pass)
    }

    pub fn total(&self) -> usize {
        self.branches.len() + self.checks.len()
    }

    pub fn failures(&self) -> (Vec<&BranchReport<K>>, Vec<&CheckReport>) {
        (
            self.branches.iter().filter(|r| !r.pass).collect(),
            self.checks.iter().filter(|r| !r.pass).collect(),
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pass": self.all_pass(),
            "total": self.total(),
            "branch_reports": self.branches.iter().map(BranchReport::to_json).collect::<Vec<_>>(),
            "checks": self.checks.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Run every check on deterministic instances for all sizes up to the
/// configured bounds.
pub fn run_suite<K: Field>(cfg: &SuiteConfig) -> SuiteReport<K> {
    let mut report = SuiteReport::default();
    for m in 1..=cfg.max_m {
        for n in 1..=cfg.max_n {
            for i in 0..cfg.seeds_per_size {
                let seed = cfg
                    .base_seed
                    .wrapping_add((m as u64) << 24)
                    .wrapping_add((n as u64) << 16)
                    .wrapping_add(i);
                let inst = gen_instance::<K>(seed, m, n, cfg.root_range, cfg.disjoint)
                    .expect("suite range is large enough");
                let (branches, mut form_checks) = check_double_sum_table(&inst);
                report.branches.extend(branches);
                report.checks.append(&mut form_checks);
                report.checks.extend(check_section_props(&inst));
                report.checks.extend(check_misc(&inst));
                report.checks.extend(check_schur(&inst));
            }
        }
    }
    report
}
