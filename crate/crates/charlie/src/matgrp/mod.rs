//! Explicit matrix models of the finite general linear and unitary groups
//! and of their extensions by the transpose-inverse automorphism, at
//! orders where full enumeration is feasible.
//!
//! Elements are n x n matrices with entries coded in a `SmallField`; the
//! unitary group sits inside `GL(n, q^2)` cut out by `g J F(g)' = J` with
//! `F` the entrywise q-th power map and `J` the Gram matrix of the
//! hermitian form, either the identity or the antidiagonal.  The
//! extended group adjoins `tau` acting by `g -> (g')^{-1}`; an element is
//! stored as `(g, t)` meaning `g tau^t`.  Conjugating `g tau` by `x` in
//! the base group gives `(x g x') tau`, so coset conjugacy is the twisted
//! action `g -> x g x'`; a second route through plain extended-element
//! arithmetic is kept alongside and the two are compared in tests.

mod invariant;
mod reality;

pub use invariant::{
    class_invariant, elementary_divisors, is_cyclic, phi_match, ClassInvariant,
    ElementaryDivisor, PhiMatch,
};
pub use reality::{
    extended_involutions, find_coset_sqrt, is_real_element, is_regular_unipotent,
    plain_involutions, regular_unipotent_coset_elements, standard_regular_v,
    strong_reality_condition, strongly_real_witness, symmetric_conjugator, w0,
};

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::algebra::fp::prime_power;
use crate::algebra::{SmallField, Tower};
use crate::charmap::GroupKind;
use crate::{Error, Result};

/// Hard ceiling on the base group order for full enumeration.
pub const DEFAULT_MAX_GROUP_ORDER: u64 = 100_000;

const MAX_N: usize = 4;
const MAX_TOWER_ORDER: u64 = 1 << 22;

/// A packed n x n matrix; entry `(i, j)` is the `SmallField` code at
/// `a[i * n + j]`.  Ordering is lexicographic on the packed entries, which
/// fixes canonical class representatives.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat {
    pub n: u8,
    pub a: [u8; 16],
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.n as usize;
        write!(f, "[")?;
        for i in 0..n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.a[i * n + j])?;
            }
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zero(n: usize) -> Mat {
        assert!(n <= MAX_N);
        Mat {
            n: n as u8,
            a: [0; 16],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.a[i * self.n as usize + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.a[i * self.n as usize + j] = v;
    }
}

/// An element of the extended group: `g tau^t`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExtElement {
    pub g: Mat,
    pub t: bool,
}

impl ExtElement {
    pub fn plain(g: Mat) -> ExtElement {
        ExtElement { g, t: false }
    }

    pub fn coset(g: Mat) -> ExtElement {
        ExtElement { g, t: true }
    }
}

/// A conjugacy class of the coset `G tau` inside the extended group.
/// The representative stands for `rep * tau`; the centralizer order is
/// taken in the extended group.
#[derive(Clone, Debug)]
pub struct CosetClass {
    pub rep: Mat,
    pub size: u64,
    pub order: u32,
    pub centralizer_order: u64,
}

/// A conjugacy class of the base group.
#[derive(Clone, Debug)]
pub struct PlainClass {
    pub rep: Mat,
    pub size: u64,
    pub order: u32,
    pub centralizer_order: u64,
}

/// Gram matrix of the hermitian form cutting out the unitary group.  The
/// two choices are equivalent forms, so the groups are conjugate inside
/// `GL(n, q^2)`; the antidiagonal model is the one whose Borel subgroup
/// is upper triangular, which the unipotent-subgroup constructions need.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UnitaryForm {
    Identity,
    Antidiagonal,
}

/// One of the matrix groups, fully enumerated, together with the field
/// tables and the ambient tower used for invariants.
pub struct GroupSpec {
    pub kind: GroupKind,
    pub n: usize,
    /// Defining parameter; the unitary group lives over `F_{q^2}`.
    pub q: u64,
    /// Entry field: `F_q` for the general linear case, `F_{q^2}` for the
    /// unitary case.
    pub field: SmallField,
    pub order: u64,
    pub elements: Vec<Mat>,
    /// Gram matrix for the unitary case; the identity for general linear.
    pub gram: Mat,
}

impl GroupSpec {
    pub fn new(kind: GroupKind, n: usize, q: u64) -> Result<GroupSpec> {
        Self::with_limit(kind, n, q, DEFAULT_MAX_GROUP_ORDER)
    }

    /// The unitary group of the antidiagonal form, with the default size
    /// limit.
    pub fn unitary_antidiagonal(n: usize, q: u64) -> Result<GroupSpec> {
        Self::build(
            GroupKind::Unitary,
            n,
            q,
            DEFAULT_MAX_GROUP_ORDER,
            UnitaryForm::Antidiagonal,
        )
    }

    pub fn with_limit(kind: GroupKind, n: usize, q: u64, limit: u64) -> Result<GroupSpec> {
        Self::build(kind, n, q, limit, UnitaryForm::Identity)
    }

    fn build(
        kind: GroupKind,
        n: usize,
        q: u64,
        limit: u64,
        form: UnitaryForm,
    ) -> Result<GroupSpec> {
        if n == 0 || n > MAX_N {
            return Err(Error::ResourceBound(format!(
                "matrix rank {n} outside the supported range 1..={MAX_N}"
            )));
        }
        let (p, e) = prime_power(q).ok_or(Error::NotPrime(q))?;
        let order = kind.order(n, q);
        if order > limit {
            return Err(Error::ResourceBound(format!(
                "group order {order} exceeds the enumeration limit {limit}"
            )));
        }
        let sub = match kind {
            GroupKind::GeneralLinear => e,
            GroupKind::Unitary => 2 * e,
        };
        let tower = invariant_tower(p, e, sub, n)?;
        let field = SmallField::new(tower, sub);
        let mut gram = Mat::zero(n);
        for i in 0..n {
            let j = match form {
                UnitaryForm::Identity => i,
                UnitaryForm::Antidiagonal => n - 1 - i,
            };
            gram.set(i, j, field.one());
        }
        let elements = match kind {
            GroupKind::GeneralLinear => enumerate_gl(&field, n),
            GroupKind::Unitary => enumerate_unitary(&field, n, q, &gram),
        };
        assert_eq!(
            elements.len() as u64,
            order,
            "enumeration does not match the order formula"
        );
        Ok(GroupSpec {
            kind,
            n,
            q,
            field,
            order,
            elements,
            gram,
        })
    }

    pub fn identity(&self) -> Mat {
        let mut m = Mat::zero(self.n);
        for i in 0..self.n {
            m.set(i, i, self.field.one());
        }
        m
    }

    pub fn mat_mul(&self, a: &Mat, b: &Mat) -> Mat {
        let n = self.n;
        let f = &self.field;
        let mut c = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut s = 0u8;
                for k in 0..n {
                    s = f.add(s, f.mul(a.get(i, k), b.get(k, j)));
                }
                c.set(i, j, s);
            }
        }
        c
    }

    pub fn transpose(&self, a: &Mat) -> Mat {
        let mut c = Mat::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                c.set(i, j, a.get(j, i));
            }
        }
        c
    }

    /// Entrywise q-th power composed with transposition.  Unitary entry
    /// fields only.
    pub fn conj_transpose(&self, a: &Mat) -> Mat {
        let mut c = Mat::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                c.set(i, j, self.field.conj_sqrt(a.get(j, i)));
            }
        }
        c
    }

    pub fn neg_mat(&self, a: &Mat) -> Mat {
        let mut c = *a;
        for i in 0..self.n {
            for j in 0..self.n {
                c.set(i, j, self.field.neg(a.get(i, j)));
            }
        }
        c
    }

    /// Gauss-Jordan inverse; `None` for singular input.
    pub fn inverse(&self, a: &Mat) -> Option<Mat> {
        let n = self.n;
        let f = &self.field;
        let mut m = *a;
        let mut inv = self.identity();
        for col in 0..n {
            let piv = (col..n).find(|&r| m.get(r, col) != 0)?;
            if piv != col {
                for j in 0..n {
                    let (x, y) = (m.get(col, j), m.get(piv, j));
                    m.set(col, j, y);
                    m.set(piv, j, x);
                    let (x, y) = (inv.get(col, j), inv.get(piv, j));
                    inv.set(col, j, y);
                    inv.set(piv, j, x);
                }
            }
            let s = f.inv(m.get(col, col));
            for j in 0..n {
                m.set(col, j, f.mul(s, m.get(col, j)));
                inv.set(col, j, f.mul(s, inv.get(col, j)));
            }
            for r in 0..n {
                if r == col || m.get(r, col) == 0 {
                    continue;
                }
                let c = m.get(r, col);
                for j in 0..n {
                    m.set(r, j, f.sub(m.get(r, j), f.mul(c, m.get(col, j))));
                    inv.set(r, j, f.sub(inv.get(r, j), f.mul(c, inv.get(col, j))));
                }
            }
        }
        Some(inv)
    }

    /// `tau(g) = (g')^{-1}`; group elements only.
    pub fn tau(&self, a: &Mat) -> Mat {
        self.inverse(&self.transpose(a))
            .expect("tau of a singular matrix")
    }

    pub fn is_member(&self, a: &Mat) -> bool {
        match self.kind {
            GroupKind::GeneralLinear => self.inverse(a).is_some(),
            GroupKind::Unitary => {
                self.mat_mul(&self.mat_mul(a, &self.gram), &self.conj_transpose(a)) == self.gram
            }
        }
    }

    pub fn ext_mul(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        let h = if a.t { self.tau(&b.g) } else { b.g };
        ExtElement {
            g: self.mat_mul(&a.g, &h),
            t: a.t ^ b.t,
        }
    }

    pub fn ext_inv(&self, a: &ExtElement) -> ExtElement {
        if a.t {
            // (g tau)^{-1} = g' tau
            ExtElement {
                g: self.transpose(&a.g),
                t: true,
            }
        } else {
            ExtElement {
                g: self.inverse(&a.g).expect("singular group element"),
                t: false,
            }
        }
    }

    pub fn ext_identity(&self) -> ExtElement {
        ExtElement::plain(self.identity())
    }

    pub fn ext_conj(&self, x: &ExtElement, a: &ExtElement) -> ExtElement {
        self.ext_mul(&self.ext_mul(x, a), &self.ext_inv(x))
    }

    pub fn ext_order(&self, a: &ExtElement) -> u32 {
        let id = self.ext_identity();
        let mut cur = *a;
        let mut k = 1u32;
        while cur != id {
            cur = self.ext_mul(&cur, a);
            k += 1;
            assert!(k as u64 <= 2 * self.order, "order loop ran away");
        }
        k
    }

    pub fn mat_order(&self, a: &Mat) -> u32 {
        self.ext_order(&ExtElement::plain(*a))
    }

    /// `(g tau)^2 = g (g')^{-1}`.
    pub fn coset_square(&self, g: &Mat) -> Mat {
        let e = ExtElement::coset(*g);
        let sq = self.ext_mul(&e, &e);
        debug_assert!(!sq.t);
        sq.g
    }

    /// Conjugacy classes of the base group, canonical representatives,
    /// sorted by representative.
    pub fn plain_classes(&self) -> Vec<PlainClass> {
        let inverses: Vec<Mat> = self
            .elements
            .iter()
            .map(|x| self.inverse(x).expect("singular group element"))
            .collect();
        let mut seen: HashSet<Mat> = HashSet::with_capacity(self.elements.len());
        let mut out = Vec::new();
        for g in &self.elements {
            if seen.contains(g) {
                continue;
            }
            let mut orbit: HashSet<Mat> = HashSet::new();
            for (x, xi) in self.elements.iter().zip(&inverses) {
                orbit.insert(self.mat_mul(&self.mat_mul(x, g), xi));
            }
            let rep = *orbit.iter().min().unwrap();
            let size = orbit.len() as u64;
            assert_eq!(self.order % size, 0);
            out.push(PlainClass {
                rep,
                size,
                order: self.mat_order(&rep),
                centralizer_order: self.order / size,
            });
            seen.extend(orbit);
        }
        out.sort_by_key(|c| c.rep);
        out
    }

    /// Conjugacy classes of the coset `G tau` under the extended group,
    /// via the twisted action `g -> x g x'`.  Conjugation by `tau` itself
    /// is the case `x = g^{-1}`, so the twisted orbits are already the
    /// extended-group classes; the centralizer order is reported in the
    /// extended group.
    pub fn coset_classes(&self) -> Vec<CosetClass> {
        let transposes: Vec<Mat> = self.elements.iter().map(|x| self.transpose(x)).collect();
        let mut seen: HashSet<Mat> = HashSet::with_capacity(self.elements.len());
        let mut out = Vec::new();
        for g in &self.elements {
            if seen.contains(g) {
                continue;
            }
            let mut orbit: HashSet<Mat> = HashSet::new();
            for (x, xt) in self.elements.iter().zip(&transposes) {
                orbit.insert(self.mat_mul(&self.mat_mul(x, g), xt));
            }
            let rep = *orbit.iter().min().unwrap();
            let size = orbit.len() as u64;
            assert_eq!(self.order % size, 0);
            out.push(CosetClass {
                rep,
                size,
                order: self.ext_order(&ExtElement::coset(rep)),
                centralizer_order: 2 * self.order / size,
            });
            seen.extend(orbit);
        }
        out.sort_by_key(|c| c.rep);
        out
    }

    /// The same partition computed independently: plain conjugation of
    /// `(g, 1)` by every element of the extended group, using only
    /// extended-element arithmetic.
    pub fn coset_classes_via_extension(&self) -> Vec<CosetClass> {
        let mut seen: HashSet<Mat> = HashSet::with_capacity(self.elements.len());
        let mut out = Vec::new();
        for g in &self.elements {
            if seen.contains(g) {
                continue;
            }
            let a = ExtElement::coset(*g);
            let mut orbit: HashSet<Mat> = HashSet::new();
            for x in &self.elements {
                for t in [false, true] {
                    let conj = self.ext_conj(&ExtElement { g: *x, t }, &a);
                    debug_assert!(conj.t);
                    orbit.insert(conj.g);
                }
            }
            let rep = *orbit.iter().min().unwrap();
            let size = orbit.len() as u64;
            out.push(CosetClass {
                rep,
                size,
                order: self.ext_order(&ExtElement::coset(rep)),
                centralizer_order: 2 * self.order / size,
            });
            seen.extend(orbit);
        }
        out.sort_by_key(|c| c.rep);
        out
    }

    /// Index from matrix to its position in `elements`.
    pub fn element_index(&self) -> HashMap<Mat, u32> {
        self.elements
            .iter()
            .enumerate()
            .map(|(i, m)| (*m, i as u32))
            .collect()
    }
}

/// Tower hosting the entry field and the splitting fields used by class
/// invariants: degree `2 e lcm(1..=k)` for the largest `k <= n` keeping
/// the tower order enumerable.  Eigenvalue extraction for factors of a
/// degree beyond `k` is then unavailable, but elementary divisors over
/// the entry field never need it.
fn invariant_tower(p: u64, e: u32, sub: u32, n: usize) -> Result<Arc<Tower>> {
    for k in (1..=n as u32).rev() {
        let mut l = 1u64;
        for i in 2..=k as u64 {
            l = num_integer::lcm(l, i);
        }
        let degree = 2 * e * l as u32;
        let degree = num_integer::lcm(degree, sub);
        let mut order = 1u64;
        let mut fits = true;
        for _ in 0..degree {
            order = order.saturating_mul(p);
            if order > MAX_TOWER_ORDER {
                fits = false;
                break;
            }
        }
        if fits {
            return Ok(Tower::shared(p, degree));
        }
    }
    Err(Error::ResourceBound(format!(
        "no feasible splitting tower for p = {p}, entry degree {sub}"
    )))
}

/// All vectors of length `n` over the field, by counting codes, least
/// significant coordinate last.
fn all_vectors(field: &SmallField, n: usize) -> Vec<Vec<u8>> {
    let q = field.q as usize;
    let total = q.pow(n as u32);
    let mut out = Vec::with_capacity(total);
    for mut idx in 0..total {
        let mut v = vec![0u8; n];
        for slot in (0..n).rev() {
            v[slot] = (idx % q) as u8;
            idx /= q;
        }
        out.push(v);
    }
    out
}

fn enumerate_gl(field: &SmallField, n: usize) -> Vec<Mat> {
    let vectors = all_vectors(field, n);
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u8>> = Vec::new();
    // reduced echelon basis of the span of the chosen rows, with pivots
    let mut basis: Vec<(usize, Vec<u8>)> = Vec::new();
    gl_extend(field, n, &vectors, &mut rows, &mut basis, &mut out);
    out
}

fn gl_extend(
    field: &SmallField,
    n: usize,
    vectors: &[Vec<u8>],
    rows: &mut Vec<Vec<u8>>,
    basis: &mut Vec<(usize, Vec<u8>)>,
    out: &mut Vec<Mat>,
) {
    if rows.len() == n {
        let mut m = Mat::zero(n);
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        out.push(m);
        return;
    }
    for cand in vectors {
        let mut red = cand.clone();
        for (piv, b) in basis.iter() {
            let c = red[*piv];
            if c != 0 {
                for j in 0..n {
                    red[j] = field.sub(red[j], field.mul(c, b[j]));
                }
            }
        }
        let Some(piv) = red.iter().position(|&x| x != 0) else {
            continue;
        };
        let s = field.inv(red[piv]);
        let norm: Vec<u8> = red.iter().map(|&x| field.mul(s, x)).collect();
        rows.push(cand.clone());
        basis.push((piv, norm));
        gl_extend(field, n, vectors, rows, basis, out);
        basis.pop();
        rows.pop();
    }
}

fn enumerate_unitary(field: &SmallField, n: usize, q: u64, gram: &Mat) -> Vec<Mat> {
    assert_eq!(field.q, q * q, "unitary entries live in F_{{q^2}}");
    let vectors = all_vectors(field, n);
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u8>> = Vec::new();
    unitary_extend(field, n, &vectors, gram, &mut rows, &mut out);
    out
}

/// `<u, v> = sum_{k,l} u_k J_kl v_l^q`; the hermitian form with Gram
/// matrix `J`, on rows.
fn herm(field: &SmallField, gram: &Mat, u: &[u8], v: &[u8]) -> u8 {
    let n = gram.n as usize;
    let mut s = 0u8;
    for k in 0..n {
        if u[k] == 0 {
            continue;
        }
        for l in 0..n {
            let j = gram.get(k, l);
            if j != 0 {
                s = field.add(s, field.mul(u[k], field.mul(j, field.conj_sqrt(v[l]))));
            }
        }
    }
    s
}

/// The membership constraint `g J F(g)' = J` reads row by row as
/// `<r_i, r_j> = J_ij`; rows are placed top down, checking each new pair.
fn unitary_extend(
    field: &SmallField,
    n: usize,
    vectors: &[Vec<u8>],
    gram: &Mat,
    rows: &mut Vec<Vec<u8>>,
    out: &mut Vec<Mat>,
) {
    if rows.len() == n {
        let mut m = Mat::zero(n);
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        out.push(m);
        return;
    }
    let i = rows.len();
    for cand in vectors {
        if herm(field, gram, cand, cand) != gram.get(i, i) {
            continue;
        }
        if rows
            .iter()
            .enumerate()
            .any(|(j, r)| herm(field, gram, cand, r) != gram.get(i, j))
        {
            continue;
        }
        rows.push(cand.clone());
        unitary_extend(field, n, vectors, gram, rows, out);
        rows.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(kind: GroupKind, n: usize, q: u64) -> GroupSpec {
        GroupSpec::new(kind, n, q).unwrap()
    }

    #[test]
    fn enumerated_orders_match_the_formula() {
        for (kind, n, q, expected) in [
            (GroupKind::GeneralLinear, 2, 2, 6u64),
            (GroupKind::GeneralLinear, 2, 3, 48),
            (GroupKind::GeneralLinear, 2, 4, 180),
            (GroupKind::GeneralLinear, 2, 5, 480),
            (GroupKind::GeneralLinear, 3, 2, 168),
            (GroupKind::GeneralLinear, 3, 3, 11232),
            (GroupKind::Unitary, 2, 2, 18),
            (GroupKind::Unitary, 2, 3, 96),
            (GroupKind::Unitary, 3, 2, 648),
        ] {
            let g = spec(kind, n, q);
            assert_eq!(g.order, expected, "{} n={n} q={q}", kind.name());
            assert_eq!(g.elements.len() as u64, expected);
        }
    }

    #[test]
    fn resource_bounds_reject_large_groups() {
        assert!(matches!(
            GroupSpec::new(GroupKind::Unitary, 3, 4),
            Err(Error::ResourceBound(_))
        ));
        assert!(matches!(
            GroupSpec::new(GroupKind::GeneralLinear, 4, 3),
            Err(Error::ResourceBound(_))
        ));
    }

    #[test]
    fn group_axioms_on_samples() {
        for (kind, n, q) in [
            (GroupKind::GeneralLinear, 2, 3),
            (GroupKind::Unitary, 2, 3),
            (GroupKind::Unitary, 3, 2),
        ] {
            let g = spec(kind, n, q);
            let id = g.identity();
            let step = (g.elements.len() / 17).max(1);
            let sample: Vec<Mat> = g.elements.iter().step_by(step).copied().collect();
            for a in &sample {
                assert!(g.is_member(a));
                let ai = g.inverse(a).unwrap();
                assert_eq!(g.mat_mul(a, &ai), id);
                assert!(g.is_member(&ai), "inverse left the group");
                for b in &sample {
                    assert!(g.is_member(&g.mat_mul(a, b)), "product left the group");
                }
            }
        }
    }

    #[test]
    fn extended_element_algebra() {
        let g = spec(GroupKind::GeneralLinear, 2, 3);
        let id = g.ext_identity();
        let step = (g.elements.len() / 11).max(1);
        let sample: Vec<ExtElement> = g
            .elements
            .iter()
            .step_by(step)
            .flat_map(|m| [ExtElement::plain(*m), ExtElement::coset(*m)])
            .collect();
        for a in &sample {
            assert_eq!(g.ext_mul(a, &g.ext_inv(a)), id);
            for b in &sample {
                for c in &sample {
                    let ab_c = g.ext_mul(&g.ext_mul(a, b), c);
                    let a_bc = g.ext_mul(a, &g.ext_mul(b, c));
                    assert_eq!(ab_c, a_bc);
                }
            }
        }
        // (g tau)^2 = g (g')^{-1}
        for a in &g.elements {
            let sq = g.coset_square(a);
            let expect = g.mat_mul(a, &g.tau(a));
            assert_eq!(sq, expect);
        }
    }

    #[test]
    fn coset_square_is_inverted_transpose_conjugate() {
        // for g = (y tau)^2 the element y carries g to (g')^{-1}
        for (kind, n, q) in [
            (GroupKind::GeneralLinear, 2, 3),
            (GroupKind::Unitary, 2, 3),
            (GroupKind::Unitary, 3, 2),
        ] {
            let grp = spec(kind, n, q);
            for y in &grp.elements {
                let g = grp.coset_square(y);
                let yi = grp.inverse(y).unwrap();
                let lhs = grp.mat_mul(&grp.mat_mul(&yi, &g), y);
                let rhs = grp.inverse(&grp.transpose(&g)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn plain_class_counts_match_the_label_counts() {
        use crate::polyorb::OrbitContext;
        use crate::xpart::enumerate_xpartitions;
        for (kind, n, q) in [
            (GroupKind::GeneralLinear, 2, 2),
            (GroupKind::GeneralLinear, 2, 3),
            (GroupKind::GeneralLinear, 3, 2),
            (GroupKind::Unitary, 2, 2),
            (GroupKind::Unitary, 2, 3),
            (GroupKind::Unitary, 3, 2),
        ] {
            let grp = spec(kind, n, q);
            let classes = grp.plain_classes();
            assert_eq!(
                classes.iter().map(|c| c.size).sum::<u64>(),
                grp.order,
                "class equation"
            );
            let ctx = OrbitContext::new(q, n).unwrap();
            let labels = enumerate_xpartitions(&ctx, kind.class_kind(), n as u32);
            assert_eq!(
                classes.len(),
                labels.len(),
                "{} n={n} q={q}",
                kind.name()
            );
        }
    }

    #[test]
    fn antidiagonal_model_is_a_conjugate_unitary_group() {
        for (n, q) in [(2usize, 2u64), (2, 3), (3, 2)] {
            let u = GroupSpec::unitary_antidiagonal(n, q).unwrap();
            assert_eq!(u.order, GroupKind::Unitary.order(n, q));
            assert!(u.is_member(&w0(&u)), "w0 lies in the antidiagonal model");
            // transpose-inverse preserves the form, so tau acts
            for g in u.elements.iter().step_by(7) {
                assert!(u.is_member(&u.tau(g)));
            }
            // upper unitriangular members form the standard unipotent
            // subgroup, which the identity model lacks
            let unip = u
                .elements
                .iter()
                .filter(|g| {
                    (0..n).all(|i| (0..=i).all(|j| g.get(i, j) == if i == j { u.field.one() } else { 0 }))
                })
                .count() as u64;
            assert_eq!(unip, q.pow((n * (n - 1) / 2) as u32));
            // conjugate models share class data
            let id = spec(GroupKind::Unitary, n, q);
            let mut a: Vec<u64> = id.plain_classes().iter().map(|c| c.size).collect();
            let mut b: Vec<u64> = u.plain_classes().iter().map(|c| c.size).collect();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn coset_class_routes_agree() {
        for (kind, n, q) in [
            (GroupKind::GeneralLinear, 2, 2),
            (GroupKind::GeneralLinear, 2, 3),
            (GroupKind::Unitary, 2, 2),
            (GroupKind::Unitary, 2, 3),
        ] {
            let grp = spec(kind, n, q);
            let a = grp.coset_classes();
            let b = grp.coset_classes_via_extension();
            assert_eq!(a.len(), b.len(), "{} n={n} q={q}", kind.name());
            for (x, y) in a.iter().zip(&b) {
                assert_eq!(x.rep, y.rep);
                assert_eq!(x.size, y.size);
                assert_eq!(x.order, y.order);
                assert_eq!(x.centralizer_order, y.centralizer_order);
            }
            assert_eq!(a.iter().map(|c| c.size).sum::<u64>(), grp.order);
        }
    }
}
