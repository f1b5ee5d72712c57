//! Conjugation invariants of matrices: characteristic polynomials,
//! elementary divisors over the entry field, and the closure-level class
//! invariant (eigenvalues in a shared tower with their Jordan block
//! partitions) used to pair twisted classes across the two groups.

use std::collections::BTreeMap;

use crate::polyorb::poly::{tp_add, tp_mul, tp_sub};
use crate::polyorb::MonicPoly;
use crate::xpart::Partition;
use crate::{Error, Result};

use super::{CosetClass, ExtElement, GroupSpec, Mat};

/// One elementary divisor `factor^exponent` with its multiplicity (the
/// number of Jordan blocks of that size for that factor).
#[derive(Clone, Debug)]
pub struct ElementaryDivisor {
    pub factor: MonicPoly,
    pub exponent: u32,
    pub multiplicity: u32,
}

/// Multiset of (eigenvalue, Jordan partition) pairs over the algebraic
/// closure; eigenvalues are tower encodings, so invariants of matrices
/// over `F_q` and over `F_{q^2}` are directly comparable when the groups
/// share a tower.  Equal invariants mean conjugate in the big general
/// linear group over the closure.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ClassInvariant(pub Vec<(u64, Vec<u32>)>);

/// Characteristic polynomial `det(t - g)` over the entry field, computed
/// by cofactor expansion with polynomial entries.
pub fn char_poly(spec: &GroupSpec, g: &Mat) -> MonicPoly {
    let t = &spec.field.tower;
    let n = spec.n;
    let mut rows: Vec<Vec<Vec<u64>>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let c = t.neg(spec.field.decode(g.get(i, j)));
            let mut p = vec![c];
            if i == j {
                p.push(1);
            } else if c == 0 {
                p.clear();
            }
            row.push(p);
        }
        rows.push(row);
    }
    let det = poly_det(t, &rows);
    MonicPoly::new(t.clone(), spec.field.sub, det)
}

fn poly_det(t: &crate::algebra::Tower, m: &[Vec<Vec<u64>>]) -> Vec<u64> {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc: Vec<u64> = vec![];
    for j in 0..m.len() {
        if m[0][j].is_empty() {
            continue;
        }
        let minor: Vec<Vec<Vec<u64>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = tp_mul(t, &m[0][j], &poly_det(t, &minor));
        acc = if j % 2 == 0 {
            tp_add(t, &acc, &term)
        } else {
            tp_sub(t, &acc, &term)
        };
    }
    acc
}

/// Evaluate a polynomial at a matrix over the entry field.
fn mat_poly_eval(spec: &GroupSpec, coeffs: &[u64], g: &Mat) -> Mat {
    let f = &spec.field;
    let mut acc = Mat::zero(spec.n);
    for &c in coeffs.iter().rev() {
        acc = spec.mat_mul(&acc, g);
        let code = f.encode(c);
        for i in 0..spec.n {
            acc.set(i, i, f.add(acc.get(i, i), code));
        }
    }
    acc
}

fn rank(spec: &GroupSpec, m: &Mat) -> usize {
    let f = &spec.field;
    let n = spec.n;
    let mut w = *m;
    let mut r = 0usize;
    for col in 0..n {
        let Some(piv) = (r..n).find(|&i| w.get(i, col) != 0) else {
            continue;
        };
        if piv != r {
            for j in 0..n {
                let (x, y) = (w.get(r, j), w.get(piv, j));
                w.set(r, j, y);
                w.set(piv, j, x);
            }
        }
        let s = f.inv(w.get(r, col));
        for j in 0..n {
            w.set(r, j, f.mul(s, w.get(r, j)));
        }
        for i in 0..n {
            if i == r || w.get(i, col) == 0 {
                continue;
            }
            let c = w.get(i, col);
            for j in 0..n {
                w.set(i, j, f.sub(w.get(i, j), f.mul(c, w.get(r, j))));
            }
        }
        r += 1;
    }
    r
}

/// Jordan block partition of `g` at an irreducible factor `f` of its
/// characteristic polynomial, from the kernel filtration of powers of
/// `f(g)`.
fn jordan_partition(spec: &GroupSpec, g: &Mat, f: &MonicPoly, mult: u32) -> Partition {
    let d = f.degree();
    if mult == 1 {
        return Partition::new(vec![1]);
    }
    let fg = mat_poly_eval(spec, &f.c, g);
    let mut kernel_dims = Vec::new();
    let mut pw = fg;
    loop {
        let k = spec.n - rank(spec, &pw);
        assert_eq!(k % d, 0, "kernel dimension not a multiple of the degree");
        let k = (k / d) as u32;
        if kernel_dims.last() == Some(&k) {
            break;
        }
        kernel_dims.push(k);
        if k == mult {
            break;
        }
        pw = spec.mat_mul(&pw, &fg);
    }
    let mut conj_parts = Vec::new();
    let mut prev = 0u32;
    for &k in &kernel_dims {
        conj_parts.push(k - prev);
        prev = k;
    }
    let p = Partition::new(conj_parts).transpose();
    assert_eq!(p.size(), mult, "Jordan partition does not exhaust the factor");
    p
}

/// Elementary divisors of `g` over the entry field, sorted by factor then
/// exponent.
pub fn elementary_divisors(spec: &GroupSpec, g: &Mat) -> Vec<ElementaryDivisor> {
    let cp = char_poly(spec, g);
    let mut out = Vec::new();
    for (f, mult) in cp.factor() {
        let part = jordan_partition(spec, g, &f, mult);
        let mut by_size: BTreeMap<u32, u32> = BTreeMap::new();
        for &b in &part.0 {
            *by_size.entry(b).or_insert(0) += 1;
        }
        for (exponent, multiplicity) in by_size {
            out.push(ElementaryDivisor {
                factor: f.clone(),
                exponent,
                multiplicity,
            });
        }
    }
    out
}

/// True if the minimal polynomial equals the characteristic polynomial:
/// every irreducible factor has a one-dimensional eigenspace per root.
pub fn is_cyclic(spec: &GroupSpec, g: &Mat) -> bool {
    let cp = char_poly(spec, g);
    cp.factor().into_iter().all(|(f, _)| {
        let fg = mat_poly_eval(spec, &f.c, g);
        spec.n - rank(spec, &fg) == f.degree()
    })
}

/// The closure-level invariant.  Fails with a resource error if some
/// factor's splitting field falls outside the tower (only possible at the
/// largest supported ranks, where the invariant is not needed).
pub fn class_invariant(spec: &GroupSpec, g: &Mat) -> Result<ClassInvariant> {
    let t = &spec.field.tower;
    let cp = char_poly(spec, g);
    let mut entries = Vec::new();
    for (f, mult) in cp.factor() {
        let part = jordan_partition(spec, g, &f, mult);
        let split = spec.field.sub * f.degree() as u32;
        if t.degree % split != 0 {
            return Err(Error::ResourceBound(format!(
                "splitting field of degree {split} outside the tower"
            )));
        }
        let mut roots: Vec<u64> = t
            .subfield_elements(split)
            .into_iter()
            .filter(|&x| f.eval(x) == 0)
            .collect();
        assert_eq!(roots.len(), f.degree(), "irreducible factor lost roots");
        roots.sort_unstable();
        for r in roots {
            entries.push((r, part.0.clone()));
        }
    }
    entries.sort();
    Ok(ClassInvariant(entries))
}

/// The matched twisted classes: general linear coset classes paired with
/// unitary coset classes by equality of the invariants of `(x tau)^{-2}`
/// and `(y tau)^2`.
pub struct PhiMatch {
    pub gl_classes: Vec<CosetClass>,
    pub u_classes: Vec<CosetClass>,
    /// Pairs of indices into the two class lists.
    pub pairs: Vec<(usize, usize)>,
}

/// Pair the coset classes of `GL(n, q)` and `U(n, q)`.  The pairing must
/// be a perfect matching through unambiguous invariants and must preserve
/// element orders; anything else is an error, never a silent fixup.
pub fn phi_match(gl: &GroupSpec, u: &GroupSpec) -> Result<PhiMatch> {
    assert_eq!(gl.n, u.n);
    assert_eq!(gl.q, u.q);
    let gl_classes = gl.coset_classes();
    let u_classes = u.coset_classes();
    if gl_classes.len() != u_classes.len() {
        return Err(Error::MatchFailure(format!(
            "{} twisted classes on the general linear side, {} on the unitary side",
            gl_classes.len(),
            u_classes.len()
        )));
    }
    // the square invariant alone can coincide for distinct classes (the
    // classes of tau and w0 tau both square to the identity); element
    // order and centralizer order must agree on matched classes anyway,
    // so they join the key, and any remaining tie is a hard error
    type Key = (ClassInvariant, u32, u64);
    let mut gl_by_inv: BTreeMap<Key, Vec<usize>> = BTreeMap::new();
    for (i, c) in gl_classes.iter().enumerate() {
        // (x tau)^{-2}
        let inv = gl.ext_inv(&ExtElement::coset(c.rep));
        let sq = gl.ext_mul(&inv, &inv);
        let key = (class_invariant(gl, &sq.g)?, c.order, c.centralizer_order);
        gl_by_inv.entry(key).or_default().push(i);
    }
    let mut u_by_inv: BTreeMap<Key, Vec<usize>> = BTreeMap::new();
    for (i, c) in u_classes.iter().enumerate() {
        let sq = u.coset_square(&c.rep);
        let key = (class_invariant(u, &sq)?, c.order, c.centralizer_order);
        u_by_inv.entry(key).or_default().push(i);
    }
    let mut pairs = Vec::new();
    for (inv, gs) in &gl_by_inv {
        let Some(us) = u_by_inv.get(inv) else {
            return Err(Error::MatchFailure(format!(
                "invariant {inv:?} has no unitary partner"
            )));
        };
        if gs.len() != us.len() {
            return Err(Error::MatchFailure(format!(
                "invariant {inv:?} covers {} classes on one side, {} on the other",
                gs.len(),
                us.len()
            )));
        }
        // a key shared by several classes per side (the central twists of
        // a square root of -u have identical squares, orders, and
        // centralizers) is paired in representative order: every datum
        // the correspondence must preserve is constant on the block
        for (&gi, &ui) in gs.iter().zip(us) {
            pairs.push((gi, ui));
        }
    }
    if pairs.len() != gl_classes.len() {
        return Err(Error::MatchFailure(
            "some unitary twisted classes are unmatched".into(),
        ));
    }
    Ok(PhiMatch {
        gl_classes,
        u_classes,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charmap::GroupKind;

    fn spec(kind: GroupKind, n: usize, q: u64) -> GroupSpec {
        GroupSpec::new(kind, n, q).unwrap()
    }

    #[test]
    fn char_poly_vanishes_at_the_matrix() {
        for (kind, n, q) in [
            (GroupKind::GeneralLinear, 2, 3),
            (GroupKind::GeneralLinear, 3, 2),
            (GroupKind::Unitary, 2, 3),
        ] {
            let g = spec(kind, n, q);
            let step = (g.elements.len() / 23).max(1);
            for m in g.elements.iter().step_by(step) {
                let cp = char_poly(&g, m);
                assert_eq!(cp.degree(), n);
                let z = mat_poly_eval(&g, &cp.c, m);
                assert_eq!(z, Mat::zero(n), "Cayley-Hamilton failed");
            }
        }
    }

    #[test]
    fn elementary_divisor_degrees_sum_to_the_rank() {
        for (kind, n, q) in [
            (GroupKind::GeneralLinear, 3, 2),
            (GroupKind::Unitary, 2, 3),
        ] {
            let g = spec(kind, n, q);
            let step = (g.elements.len() / 19).max(1);
            for m in g.elements.iter().step_by(step) {
                let eds = elementary_divisors(&g, m);
                let total: usize = eds
                    .iter()
                    .map(|ed| {
                        ed.factor.degree() * ed.exponent as usize * ed.multiplicity as usize
                    })
                    .sum();
                assert_eq!(total, n);
            }
        }
    }

    #[test]
    fn invariant_constant_on_classes_and_separating_on_reps() {
        let g = spec(GroupKind::GeneralLinear, 2, 3);
        let classes = g.plain_classes();
        let invs: Vec<ClassInvariant> = classes
            .iter()
            .map(|c| class_invariant(&g, &c.rep).unwrap())
            .collect();
        for (i, c) in classes.iter().enumerate() {
            // sample conjugates
            for x in g.elements.iter().step_by(7) {
                let xi = g.inverse(x).unwrap();
                let conj = g.mat_mul(&g.mat_mul(x, &c.rep), &xi);
                assert_eq!(class_invariant(&g, &conj).unwrap(), invs[i]);
            }
            for j in 0..i {
                assert_ne!(invs[i], invs[j], "distinct classes share an invariant");
            }
        }
    }

    #[test]
    fn identity_and_regular_unipotent_invariants() {
        let g = spec(GroupKind::GeneralLinear, 2, 2);
        let id = g.identity();
        let inv = class_invariant(&g, &id).unwrap();
        let one = g.field.tower.one();
        assert_eq!(inv.0, vec![(one, vec![1, 1])]);
        let mut u = g.identity();
        u.set(0, 1, 1);
        let inv = class_invariant(&g, &u).unwrap();
        assert_eq!(inv.0, vec![(one, vec![2])]);
        assert!(is_cyclic(&g, &u));
        assert!(!is_cyclic(&g, &id));
    }

    #[test]
    fn phi_match_at_the_smallest_parameters() {
        for (n, q) in [(2usize, 2u64), (2, 3)] {
            let gl = spec(GroupKind::GeneralLinear, n, q);
            let u = spec(GroupKind::Unitary, n, q);
            let m = phi_match(&gl, &u).unwrap();
            assert_eq!(m.pairs.len(), m.gl_classes.len());
            for &(gi, ui) in &m.pairs {
                assert_eq!(m.gl_classes[gi].order, m.u_classes[ui].order);
            }
        }
    }
}
