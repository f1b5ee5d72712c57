//! Reality questions in the matrix models: involutions, strong reality
//! with explicit witnesses, symmetric conjugators, square roots in the
//! twisted coset, and the regular unipotent locus of the coset.

use crate::{Error, Result};

use super::{elementary_divisors, ExtElement, GroupSpec, Mat};
use crate::charmap::GroupKind;

/// Elements `s` of the base group with `s^2 = 1`, the identity included.
pub fn plain_involutions(spec: &GroupSpec) -> Vec<Mat> {
    let id = spec.identity();
    spec.elements
        .iter()
        .copied()
        .filter(|g| spec.mat_mul(g, g) == id)
        .collect()
}

/// Elements of the extended group squaring to the identity, the identity
/// included; both the base group and the twisted coset contribute.
pub fn extended_involutions(spec: &GroupSpec) -> Vec<ExtElement> {
    let id = spec.ext_identity();
    let mut out = Vec::new();
    for g in &spec.elements {
        for t in [false, true] {
            let e = ExtElement { g: *g, t };
            if spec.ext_mul(&e, &e) == id {
                out.push(e);
            }
        }
    }
    out
}

/// A witness `s` with `s^2 = 1` and `s x s = x^{-1}`, searched in the
/// given involution list; `None` if the element is not strongly real
/// relative to that ambient set.
pub fn strongly_real_witness(
    spec: &GroupSpec,
    x: &ExtElement,
    involutions: &[ExtElement],
) -> Option<ExtElement> {
    let xi = spec.ext_inv(x);
    involutions
        .iter()
        .find(|s| spec.ext_mul(&spec.ext_mul(s, x), s) == xi)
        .copied()
}

/// True if some element of the base group inverts `g` by conjugation.
pub fn is_real_element(spec: &GroupSpec, g: &Mat) -> bool {
    let gi = spec.inverse(g).expect("singular group element");
    spec.elements.iter().any(|h| {
        let hi = spec.inverse(h).expect("singular group element");
        spec.mat_mul(&spec.mat_mul(h, g), &hi) == gi
    })
}

/// A symmetric `s` in the group with `s^{-1} x s = x'`.  Every unitary
/// element has one; failing to find one is a hard error, not a value.
pub fn symmetric_conjugator(spec: &GroupSpec, x: &Mat) -> Result<Mat> {
    let xt = spec.transpose(x);
    for s in &spec.elements {
        if *s != spec.transpose(s) {
            continue;
        }
        // s^{-1} x s = x'  <=>  x s = s x'
        if spec.mat_mul(x, s) == spec.mat_mul(s, &xt) {
            return Ok(*s);
        }
    }
    Err(Error::MatchFailure(format!(
        "no symmetric conjugator onto the transpose for {x:?}"
    )))
}

/// A group element `x` with `(x tau)^2 = u`, i.e. `x = u x'`: solve the
/// linear system first and fall back to scanning the group; `None` means
/// no square root exists in the coset.
pub fn find_coset_sqrt(spec: &GroupSpec, u: &Mat) -> Option<Mat> {
    let f = &spec.field;
    let n = spec.n;
    let nn = n * n;
    // equations x_ij - sum_k u_ik x_jk = 0 in the n^2 unknowns x_ab
    let mut rows = Vec::with_capacity(nn);
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![0u8; nn];
            row[i * n + j] = f.add(row[i * n + j], f.one());
            for k in 0..n {
                let c = f.neg(u.get(i, k));
                row[j * n + k] = f.add(row[j * n + k], f.mul(c, f.one()));
            }
            rows.push(row);
        }
    }
    let basis = nullspace(f, rows, nn);
    let dim = basis.len() as u32;
    let combos = (f.q as u128).checked_pow(dim);
    if let Some(combos) = combos.filter(|&c| c <= 1 << 16) {
        for mut idx in 1..combos {
            let mut v = vec![0u8; nn];
            for b in &basis {
                let c = (idx % f.q as u128) as u8;
                idx /= f.q as u128;
                if c != 0 {
                    for (slot, &bv) in v.iter_mut().zip(b) {
                        *slot = f.add(*slot, f.mul(c, bv));
                    }
                }
            }
            let mut x = Mat::zero(n);
            for i in 0..n {
                for j in 0..n {
                    x.set(i, j, v[i * n + j]);
                }
            }
            if spec.is_member(&x) {
                debug_assert_eq!(spec.coset_square(&x), *u);
                return Some(x);
            }
        }
        return None;
    }
    // solution space too large to sweep: scan the group directly
    spec.elements
        .iter()
        .copied()
        .find(|x| spec.coset_square(x) == *u)
}

/// Basis of the right nullspace of the given row system.
fn nullspace(
    f: &crate::algebra::SmallField,
    mut rows: Vec<Vec<u8>>,
    ncols: usize,
) -> Vec<Vec<u8>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let s = f.inv(rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = f.mul(s, *x);
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col] == 0 {
                continue;
            }
            let c = rows[i][col];
            for j in 0..ncols {
                let sub = f.mul(c, rows[r][j]);
                rows[i][j] = f.sub(rows[i][j], sub);
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![0u8; ncols];
        v[free] = f.one();
        for (row_i, &piv) in pivots.iter().enumerate() {
            v[piv] = f.neg(rows[row_i][free]);
        }
        basis.push(v);
    }
    basis
}

/// The stated sufficient condition for strong reality: in odd
/// characteristic every elementary divisor `(t - 1)^{2m}` or
/// `(t + 1)^{2m}` must occur an even number of times; in characteristic 2
/// every `(t + 1)^{2m+1}` must.
pub fn strong_reality_condition(spec: &GroupSpec, g: &Mat) -> bool {
    let t = &spec.field.tower;
    let one = t.one();
    let minus_one = t.neg(one);
    for ed in elementary_divisors(spec, g) {
        if ed.factor.degree() != 1 {
            continue;
        }
        let root = t.neg(ed.factor.constant_term());
        if root != one && root != minus_one {
            continue;
        }
        let bad_exponent = if t.p == 2 {
            ed.exponent % 2 == 1
        } else {
            ed.exponent % 2 == 0
        };
        if bad_exponent && ed.multiplicity % 2 == 1 {
            return false;
        }
    }
    true
}

pub fn is_regular_unipotent(spec: &GroupSpec, m: &Mat) -> bool {
    let f = &spec.field;
    let n = spec.n;
    let mut nil = *m;
    for i in 0..n {
        nil.set(i, i, f.sub(nil.get(i, i), f.one()));
    }
    let mut pw = spec.identity();
    for _ in 0..n - 1 {
        pw = spec.mat_mul(&pw, &nil);
    }
    pw != Mat::zero(n) && spec.mat_mul(&pw, &nil) == Mat::zero(n)
}

/// The antidiagonal permutation matrix; it lies in both groups, so the
/// twisted coset can be written through `sigma = w0 tau` without leaving
/// the extended group.
pub fn w0(spec: &GroupSpec) -> Mat {
    let mut m = Mat::zero(spec.n);
    for i in 0..spec.n {
        m.set(i, spec.n - 1 - i, spec.field.one());
    }
    m
}

/// The explicit seed `v`: ones on the diagonal and at `(i, i+1)` for the
/// first `floor(n/2)` rows.  `v sigma` is the canonical regular unipotent
/// element of the twisted coset in characteristic 2.
pub fn standard_regular_v(spec: &GroupSpec) -> Mat {
    let mut m = spec.identity();
    for i in 0..spec.n / 2 {
        m.set(i, i + 1, spec.field.one());
    }
    m
}

/// All coset elements `g tau` that are regular unipotent in the twisted
/// sense, for even q.  For odd n these are exactly the `g` with
/// `(g tau)^2` regular unipotent; for even n (general linear side only)
/// they are the conjugates of `v w0 tau`.  Checks along the way: the set
/// is a union of twisted classes with exactly `|G| / q^{floor(n/2)}`
/// elements.  (At the rational level the set can split into two classes
/// of equal size even though the corresponding elements of the ambient
/// algebraic group are all conjugate; the census and the character
/// values do not depend on the splitting.)
pub fn regular_unipotent_coset_elements(spec: &GroupSpec) -> Result<Vec<Mat>> {
    if spec.field.tower.p != 2 {
        return Err(Error::Usage(
            "the regular unipotent coset census is defined for even q".into(),
        ));
    }
    let m = spec.n / 2;
    let expected = spec.order / spec.q.pow(m as u32);
    let mut locus: Vec<Mat> = if spec.n % 2 == 1 {
        spec.elements
            .iter()
            .copied()
            .filter(|g| is_regular_unipotent(spec, &spec.coset_square(g)))
            .collect()
    } else {
        if spec.kind != GroupKind::GeneralLinear {
            return Err(Error::Usage(
                "the even-rank census is modeled on the general linear side".into(),
            ));
        }
        let seed = spec.mat_mul(&standard_regular_v(spec), &w0(spec));
        // (v sigma)^2 must be unipotent of type (n-1, 1)
        let sq = spec.coset_square(&seed);
        let eds = elementary_divisors(spec, &sq);
        let shape: Vec<(usize, u32, u32)> = eds
            .iter()
            .map(|ed| (ed.factor.degree(), ed.exponent, ed.multiplicity))
            .collect();
        let want: Vec<(usize, u32, u32)> = if spec.n == 2 {
            vec![(1, 1, 2)]
        } else {
            vec![(1, 1, 1), (1, (spec.n - 1) as u32, 1)]
        };
        if shape != want {
            return Err(Error::Internal(format!(
                "(v sigma)^2 has elementary divisor shape {shape:?}"
            )));
        }
        let mut orbit = std::collections::HashSet::new();
        for x in &spec.elements {
            orbit.insert(spec.mat_mul(&spec.mat_mul(x, &seed), &spec.transpose(x)));
        }
        orbit.into_iter().collect()
    };
    locus.sort_unstable();
    if locus.len() as u64 != expected {
        return Err(Error::Internal(format!(
            "regular unipotent census {} differs from {expected}",
            locus.len()
        )));
    }
    if spec.n % 2 == 1 {
        // a union of twisted classes: every orbit launched from the locus
        // must stay inside it
        let mut remaining: std::collections::BTreeSet<Mat> = locus.iter().copied().collect();
        while let Some(&seed) = remaining.iter().next() {
            let mut orbit = std::collections::HashSet::new();
            for x in &spec.elements {
                orbit.insert(spec.mat_mul(&spec.mat_mul(x, &seed), &spec.transpose(x)));
            }
            if !orbit.iter().all(|g| remaining.contains(g)) {
                return Err(Error::Internal(
                    "regular unipotent locus is not closed under twisted conjugation".into(),
                ));
            }
            for g in &orbit {
                remaining.remove(g);
            }
        }
        if spec.kind == GroupKind::GeneralLinear {
            let vw = spec.mat_mul(&standard_regular_v(spec), &w0(spec));
            assert!(
                locus.binary_search(&vw).is_ok(),
                "the explicit seed is missing from the locus"
            );
        }
    }
    Ok(locus)
}
