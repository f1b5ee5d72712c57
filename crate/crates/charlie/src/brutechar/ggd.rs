//! Gelfand-Graev characters and the truncation-induction duality
//! operator, both computed by explicit induction from concrete subgroups.
//!
//! The unipotent subgroup is the set of upper unitriangular members, so
//! the unitary group must be taken in its antidiagonal-form model (the
//! identity-form model meets the upper triangulars only in 1).  Linear
//! characters of N come from the character table of the abelianization,
//! reusing the oracle; non-degenerate means nontrivial on every simple
//! root subgroup.  The extension of the base group enters through
//! `sigma = w0 tau`, the graph-times-inner involution that stabilizes N.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::cyclotomic::Cyclotomic;
use crate::charmap::GroupKind;
use crate::matgrp::{w0, ExtElement, GroupSpec, Mat};
use crate::{Error, Result};

use super::{oracle_table, BruteGroup, ExtGroup, OracleTable};

/// The unipotent subgroup of upper unitriangular members, its derived
/// subgroup, and the abelianization as a quotient group on canonical
/// coset representatives.
pub struct UnipotentSetup<'a> {
    pub spec: &'a GroupSpec,
    pub members: Vec<Mat>,
    pub derived: Vec<Mat>,
    canon: HashMap<Mat, Mat>,
    reps: Vec<Mat>,
}

fn is_upper_unitriangular(spec: &GroupSpec, g: &Mat) -> bool {
    let one = spec.field.one();
    (0..spec.n).all(|i| (0..=i).all(|j| g.get(i, j) == if i == j { one } else { 0 }))
}

pub fn unipotent_setup(spec: &GroupSpec) -> Result<UnipotentSetup<'_>> {
    if spec.kind == GroupKind::Unitary {
        let anti = spec.gram.get(0, spec.n - 1) == spec.field.one();
        if spec.n > 1 && !anti {
            return Err(Error::Usage(
                "unipotent constructions need the antidiagonal-form unitary model".into(),
            ));
        }
    }
    let members: Vec<Mat> = spec
        .elements
        .iter()
        .filter(|g| is_upper_unitriangular(spec, g))
        .copied()
        .collect();
    let expected = spec.q.pow((spec.n * (spec.n - 1) / 2) as u32);
    assert_eq!(
        members.len() as u64,
        expected,
        "unipotent subgroup has the wrong order"
    );
    // derived subgroup: closure of the commutators
    let mut derived: HashSet<Mat> = HashSet::from([spec.identity()]);
    let mut frontier: Vec<Mat> = Vec::new();
    for a in &members {
        for b in &members {
            let ai = spec.inverse(a).unwrap();
            let bi = spec.inverse(b).unwrap();
            let c = spec.mat_mul(&spec.mat_mul(a, b), &spec.mat_mul(&ai, &bi));
            if derived.insert(c) {
                frontier.push(c);
            }
        }
    }
    while let Some(x) = frontier.pop() {
        for y in derived.clone() {
            let p = spec.mat_mul(&x, &y);
            if derived.insert(p) {
                frontier.push(p);
            }
        }
    }
    let derived: Vec<Mat> = {
        let mut v: Vec<Mat> = derived.into_iter().collect();
        v.sort_unstable();
        v
    };
    // canonical coset representatives
    let mut canon: HashMap<Mat, Mat> = HashMap::new();
    let mut reps: Vec<Mat> = Vec::new();
    for x in &members {
        if canon.contains_key(x) {
            continue;
        }
        let coset: Vec<Mat> = derived.iter().map(|d| spec.mat_mul(x, d)).collect();
        let rep = *coset.iter().min().unwrap();
        for c in coset {
            assert!(canon.insert(c, rep).is_none(), "cosets overlap");
        }
        reps.push(rep);
    }
    reps.sort_unstable();
    assert_eq!(reps.len() * derived.len(), members.len());
    Ok(UnipotentSetup {
        spec,
        members,
        derived,
        canon,
        reps,
    })
}

struct AbelianQuotient<'a> {
    setup: &'a UnipotentSetup<'a>,
}

impl BruteGroup for AbelianQuotient<'_> {
    type El = Mat;

    fn elements(&self) -> &[Mat] {
        &self.setup.reps
    }

    fn mul(&self, a: &Mat, b: &Mat) -> Mat {
        self.setup.canon[&self.setup.spec.mat_mul(a, b)]
    }

    fn inv(&self, a: &Mat) -> Mat {
        self.setup.canon[&self.setup.spec.inverse(a).unwrap()]
    }

    fn id(&self) -> Mat {
        self.setup.canon[&self.setup.spec.identity()]
    }
}

/// A linear character of the unipotent subgroup, tabulated on members.
#[derive(Clone)]
pub struct LinearChar {
    pub conductor: u32,
    values: HashMap<Mat, Cyclotomic>,
}

impl LinearChar {
    pub fn eval(&self, x: &Mat) -> &Cyclotomic {
        &self.values[x]
    }
}

/// All linear characters of N, in the canonical order of the oracle table
/// of the abelianization.
pub fn linear_characters(setup: &UnipotentSetup<'_>) -> Vec<LinearChar> {
    let quot = AbelianQuotient { setup };
    let table = oracle_table(&quot).expect("abelianization is tiny");
    assert!(table.degrees.iter().all(|&d| d == 1));
    let index: HashMap<Mat, usize> = setup
        .reps
        .iter()
        .enumerate()
        .map(|(i, m)| (*m, i))
        .collect();
    (0..table.k())
        .map(|chi| {
            let values = setup
                .members
                .iter()
                .map(|x| {
                    let cls = table.class_of_index(index[&setup.canon[x]]);
                    (*x, table.value(chi, cls))
                })
                .collect();
            LinearChar {
                conductor: table.conductor,
                values,
            }
        })
        .collect()
}

/// Nontrivial on each simple root subgroup.  The character factors
/// through the abelianization, which is coordinatized by the superdiagonal
/// entries; in the unitary model the form couples entry `i` with entry
/// `n-2-i`, so the simple roots are grouped into orbits of that flip and
/// nondegeneracy is demanded per orbit.
pub fn is_nondegenerate(setup: &UnipotentSetup<'_>, theta: &LinearChar) -> bool {
    let spec = setup.spec;
    let n = spec.n;
    let one = Cyclotomic::one(theta.conductor);
    let roots = n - 1;
    let orbits: Vec<Vec<usize>> = match spec.kind {
        GroupKind::GeneralLinear => (0..roots).map(|i| vec![i]).collect(),
        GroupKind::Unitary => (0..roots)
            .filter(|&i| i <= roots - 1 - i)
            .map(|i| {
                if i == roots - 1 - i {
                    vec![i]
                } else {
                    vec![i, roots - 1 - i]
                }
            })
            .collect(),
    };
    orbits.iter().all(|orbit| {
        setup.members.iter().any(|x| {
            (0..roots).all(|j| orbit.contains(&j) || x.get(j, j + 1) == 0)
                && orbit.iter().any(|&j| x.get(j, j + 1) != 0)
                && *theta.eval(x) != one
        })
    })
}

/// `sigma(x) = w0 tau(x) w0`, the involution of the base group induced by
/// the coset element `w0 tau`; it stabilizes the unipotent subgroup.
pub fn sigma_map(spec: &GroupSpec, x: &Mat) -> Mat {
    let w = w0(spec);
    spec.mat_mul(&spec.mat_mul(&w, &spec.tau(x)), &w)
}

/// `theta(sigma(x)) = theta(x)` on all of N.
pub fn is_sigma_fixed(setup: &UnipotentSetup<'_>, theta: &LinearChar) -> bool {
    setup
        .members
        .iter()
        .all(|x| theta.eval(&sigma_map(setup.spec, x)) == theta.eval(x))
}

pub fn is_real_valued(setup: &UnipotentSetup<'_>, theta: &LinearChar) -> bool {
    setup.members.iter().all(|x| theta.eval(x).is_real())
}

/// The Gelfand-Graev character of the group underlying `group`, as values
/// on the classes of its oracle table, at the table's conductor.
///
/// For the plain group this induces a non-degenerate linear character
/// from N; for the extended group it induces the extension with
/// `theta(sigma) = 1` of a sigma-fixed non-degenerate character from
/// `N<sigma>`.  The result is checked to be multiplicity-free.
pub fn gelfand_graev(group: &ExtGroup<'_>, table: &OracleTable) -> Result<Vec<Cyclotomic>> {
    let spec = group.spec;
    let setup = unipotent_setup(spec)?;
    let thetas = linear_characters(&setup);
    let theta = if group.extended {
        thetas
            .iter()
            .find(|t| is_nondegenerate(&setup, t) && is_sigma_fixed(&setup, t))
            .ok_or_else(|| {
                Error::Internal("no sigma-fixed non-degenerate linear character found".into())
            })?
    } else {
        thetas
            .iter()
            .find(|t| is_nondegenerate(&setup, t))
            .ok_or_else(|| {
                Error::Internal("no non-degenerate linear character found".into())
            })?
    };
    let m = table.conductor;
    // the induced-from subgroup and the character on it
    let mut sub: HashMap<ExtElement, Cyclotomic> = setup
        .members
        .iter()
        .map(|x| (ExtElement::plain(*x), theta.eval(x).lift(m)))
        .collect();
    if group.extended {
        let w = w0(spec);
        for x in &setup.members {
            // x sigma = (x w0) tau, with theta+(sigma) = 1
            sub.insert(ExtElement::coset(spec.mat_mul(x, &w)), theta.eval(x).lift(m));
        }
        // theta+ must be a homomorphism on N<sigma>
        let keys: Vec<ExtElement> = sub.keys().copied().collect();
        for a in &keys {
            for b in &keys {
                let ab = spec.ext_mul(a, b);
                assert_eq!(
                    sub[&ab],
                    sub[a].mul(&sub[b]),
                    "extension of theta is not multiplicative"
                );
            }
        }
    }
    let gamma = induce(group, table, &sub);
    // degree |K| / |H|
    let id_class = table.class_of_index(
        group
            .elements()
            .iter()
            .position(|e| *e == group.id())
            .unwrap(),
    );
    let expect =
        BigRational::from_integer(BigInt::from(table.order / sub.len() as u64));
    assert_eq!(
        gamma[id_class].as_rational(),
        Some(expect),
        "Gelfand-Graev degree must be |G| / |N|"
    );
    // multiplicity-free
    for chi in 0..table.k() {
        let c = table.multiplicity(&gamma, chi);
        assert!(
            c.is_zero() || c.is_one(),
            "Gelfand-Graev character is not multiplicity-free"
        );
    }
    Ok(gamma)
}

/// Induction of a subgroup character to the full group, by the averaging
/// formula, evaluated on class representatives of the oracle table.
fn induce(
    group: &ExtGroup<'_>,
    table: &OracleTable,
    sub: &HashMap<ExtElement, Cyclotomic>,
) -> Vec<Cyclotomic> {
    let m = table.conductor;
    let els = group.elements();
    let invs: Vec<ExtElement> = els.iter().map(|x| group.inv(x)).collect();
    let h_inv = BigRational::new(BigInt::one(), BigInt::from(sub.len()));
    table
        .classes
        .iter()
        .map(|cls| {
            let rep = els[cls.rep];
            let mut acc = Cyclotomic::zero(m);
            for (x, xi) in els.iter().zip(&invs) {
                let y = group.mul(&group.mul(x, &rep), xi);
                if let Some(v) = sub.get(&y) {
                    acc = acc.add(v);
                }
            }
            acc.scale(&h_inv)
        })
        .collect()
}

/// Inner product of two class functions over the outer coset only, i.e.
/// `(1/|G|) sum over the coset` of `a conj(b)`; the table must belong to
/// the extended group, whose coset classes are the ones with a
/// representative above the base-group block of the element list.
pub fn coset_inner(
    group: &ExtGroup<'_>,
    table: &OracleTable,
    a: &[Cyclotomic],
    b: &[Cyclotomic],
) -> BigRational {
    assert!(group.extended);
    let base = group.spec.order;
    let m = table.conductor;
    let mut acc = Cyclotomic::zero(m);
    for (j, cls) in table.classes.iter().enumerate() {
        if (cls.rep as u64) < base {
            continue;
        }
        let t = a[j]
            .lift(m)
            .mul(&b[j].lift(m).conj())
            .scale_int(cls.size as i64);
        acc = acc.add(&t);
    }
    acc.as_rational()
        .expect("coset inner product must be rational here")
        / BigRational::from_integer(BigInt::from(base))
}

/// Standard parabolic data for a subset J of the simple roots: the block
/// to which each matrix position belongs.
fn block_of(n: usize, j_set: &[bool]) -> Vec<usize> {
    let mut b = vec![0usize; n];
    for i in 1..n {
        b[i] = b[i - 1] + usize::from(!j_set[i - 1]);
    }
    b
}

/// The duality operator: alternating sum over the graph-stable subsets J
/// of truncation to the standard parabolic `P_J` followed by induction
/// back up.  `xi` is a class function on the plain group given by values
/// on the classes of its oracle table.
pub fn alvis_dual(
    group: &ExtGroup<'_>,
    table: &OracleTable,
    xi: &[Cyclotomic],
) -> Result<Vec<Cyclotomic>> {
    assert!(!group.extended, "duality acts on the connected group");
    let spec = group.spec;
    let n = spec.n;
    if spec.kind == GroupKind::Unitary && n > 1 {
        // the parabolic subgroups below presume an upper-triangular Borel
        let _ = unipotent_setup(spec)?;
    }
    let m = table.conductor;
    let roots = n - 1;
    let mut out = vec![Cyclotomic::zero(m); table.k()];
    for mask in 0..(1u32 << roots) {
        let j_set: Vec<bool> = (0..roots).map(|i| mask >> i & 1 == 1).collect();
        // graph automorphism: trivial for general linear, root flip for
        // unitary
        let stable = match spec.kind {
            GroupKind::GeneralLinear => true,
            GroupKind::Unitary => (0..roots).all(|i| j_set[i] == j_set[roots - 1 - i]),
        };
        if !stable {
            continue;
        }
        let orbits = match spec.kind {
            GroupKind::GeneralLinear => j_set.iter().filter(|&&b| b).count(),
            GroupKind::Unitary => {
                let mut c = 0;
                for i in 0..roots {
                    if j_set[i] && i <= roots - 1 - i {
                        c += 1;
                    }
                }
                c
            }
        };
        let sign = if orbits % 2 == 0 { 1i64 } else { -1 };
        let blocks = block_of(n, &j_set);
        let one = spec.field.one();
        let para: Vec<Mat> = spec
            .elements
            .iter()
            .filter(|g| {
                (0..n).all(|r| (0..n).all(|c| blocks[r] <= blocks[c] || g.get(r, c) == 0))
            })
            .copied()
            .collect();
        let radical: Vec<Mat> = para
            .iter()
            .filter(|g| {
                (0..n).all(|r| {
                    (0..n).all(|c| {
                        blocks[r] != blocks[c] || g.get(r, c) == (if r == c { one } else { 0 })
                    })
                })
            })
            .copied()
            .collect();
        let para_set: HashSet<Mat> = para.iter().copied().collect();
        let p_inv = BigRational::new(BigInt::one(), BigInt::from(para.len()));
        let u_inv = BigRational::new(BigInt::one(), BigInt::from(radical.len()));
        let index = spec.element_index();
        let invs: Vec<Mat> = spec
            .elements
            .iter()
            .map(|x| spec.inverse(x).unwrap())
            .collect();
        for (jc, cls) in table.classes.iter().enumerate() {
            let rep = group.elements()[cls.rep];
            assert!(!rep.t);
            let mut acc = Cyclotomic::zero(m);
            for (x, xi_inv) in spec.elements.iter().zip(&invs) {
                let h = spec.mat_mul(&spec.mat_mul(x, &rep.g), xi_inv);
                if !para_set.contains(&h) {
                    continue;
                }
                // truncation: average xi over the unipotent radical
                let mut t = Cyclotomic::zero(m);
                for u in &radical {
                    let uh = spec.mat_mul(u, &h);
                    let cls_uh = table.class_of_index(index[&uh] as usize);
                    t = t.add(&xi[cls_uh].lift(m));
                }
                acc = acc.add(&t.scale(&u_inv));
            }
            let term = acc.scale(&p_inv).scale_int(sign);
            out[jc] = out[jc].add(&term);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brutechar::oracle_table;
    use num_traits::Zero;

    fn plain(kind: GroupKind, n: usize, q: u64) -> GroupSpec {
        match kind {
            GroupKind::GeneralLinear => GroupSpec::new(kind, n, q).unwrap(),
            GroupKind::Unitary => GroupSpec::unitary_antidiagonal(n, q).unwrap(),
        }
    }

    #[test]
    fn unipotent_setup_shapes() {
        for (kind, n, q, derived) in [
            (GroupKind::GeneralLinear, 2, 3, 1usize),
            (GroupKind::GeneralLinear, 3, 2, 2),
            (GroupKind::Unitary, 2, 2, 1),
            (GroupKind::Unitary, 3, 2, 2),
        ] {
            let spec = plain(kind, n, q);
            let s = unipotent_setup(&spec).unwrap();
            assert_eq!(s.members.len() as u64, q.pow((n * (n - 1) / 2) as u32));
            assert_eq!(s.derived.len(), derived, "{} n={n} q={q}", kind.name());
            let chars = linear_characters(&s);
            assert_eq!(chars.len(), s.members.len() / s.derived.len());
        }
    }

    #[test]
    fn identity_form_unitary_model_is_rejected() {
        let spec = GroupSpec::new(GroupKind::Unitary, 2, 3).unwrap();
        assert!(matches!(unipotent_setup(&spec), Err(Error::Usage(_))));
    }

    #[test]
    fn gelfand_graev_of_the_smallest_group_has_degree_three() {
        let spec = plain(GroupKind::GeneralLinear, 2, 2);
        let group = ExtGroup::new(&spec, false);
        let table = oracle_table(&group).unwrap();
        let gamma = gelfand_graev(&group, &table).unwrap();
        let id_class = 0;
        assert_eq!(
            gamma[id_class].as_integer(),
            Some(BigInt::from(3)),
            "degree |G|/|N| = 3"
        );
    }

    #[test]
    fn sigma_fixed_nondegenerate_characters_exist_and_are_real_in_characteristic_two() {
        for (kind, n, q) in [
            (GroupKind::GeneralLinear, 2, 2u64),
            (GroupKind::GeneralLinear, 3, 2),
            (GroupKind::Unitary, 2, 2),
            (GroupKind::Unitary, 3, 2),
        ] {
            let spec = plain(kind, n, q);
            let s = unipotent_setup(&spec).unwrap();
            // the converse fails: at U(3, 2) the abelianization of N is
            // the additive quartic field, every character is valued in
            // {1, -1}, yet sigma acts by Frobenius and fixes only one of
            // the three non-degenerate characters
            let mut found = 0usize;
            for theta in linear_characters(&s) {
                if is_nondegenerate(&s, &theta) && is_sigma_fixed(&s, &theta) {
                    found += 1;
                    assert!(
                        is_real_valued(&s, &theta),
                        "{} n={n} q={q}",
                        kind.name()
                    );
                }
            }
            assert!(found > 0, "{} n={n} q={q}", kind.name());
        }
    }

    #[test]
    fn extended_gelfand_graev_restricts_to_the_plain_one() {
        let spec = plain(GroupKind::GeneralLinear, 2, 2);
        let ext = ExtGroup::new(&spec, true);
        let ext_table = oracle_table(&ext).unwrap();
        let gamma_ext = gelfand_graev(&ext, &ext_table).unwrap();
        let plain_group = ExtGroup::new(&spec, false);
        let plain_table = oracle_table(&plain_group).unwrap();
        let gamma = gelfand_graev(&plain_group, &plain_table).unwrap();
        // compare on base-group classes via representatives
        for (j, cls) in plain_table.classes.iter().enumerate() {
            let rep = plain_group.elements()[cls.rep];
            let idx = ext
                .elements()
                .iter()
                .position(|e| *e == rep)
                .unwrap();
            let jc = ext_table.class_of_index(idx);
            assert!(
                gamma[j].same_value(&gamma_ext[jc]),
                "restriction differs at class {j}"
            );
        }
        // coset self-pairing q^{floor(n/2)} = 2
        let ip = coset_inner(&ext, &ext_table, &gamma_ext, &gamma_ext);
        assert_eq!(ip, BigRational::from_integer(BigInt::from(2)));
    }

    #[test]
    fn dual_of_the_trivial_character_is_plus_minus_steinberg() {
        let spec = plain(GroupKind::GeneralLinear, 2, 2);
        let group = ExtGroup::new(&spec, false);
        let table = oracle_table(&group).unwrap();
        let triv: Vec<Cyclotomic> =
            (0..table.k()).map(|_| Cyclotomic::one(table.conductor)).collect();
        let dual = alvis_dual(&group, &table, &triv).unwrap();
        // Steinberg of GL(2, 2): degree 2
        let st = (0..table.k())
            .find(|&i| table.degrees[i] == 2)
            .unwrap();
        let sign = dual[0].as_integer().unwrap();
        assert!(sign == BigInt::from(2) || sign == BigInt::from(-2));
        for j in 0..table.k() {
            let expect = if sign > BigInt::zero() {
                table.value(st, j)
            } else {
                table.value(st, j).neg()
            };
            assert!(dual[j].same_value(&expect));
        }
    }

    #[test]
    fn duality_is_an_involution_on_general_linear_two_three() {
        let spec = plain(GroupKind::GeneralLinear, 2, 3);
        let group = ExtGroup::new(&spec, false);
        let table = oracle_table(&group).unwrap();
        for chi in 0..table.k() {
            let row: Vec<Cyclotomic> =
                (0..table.k()).map(|j| table.value(chi, j)).collect();
            let d = alvis_dual(&group, &table, &row).unwrap();
            let dd = alvis_dual(&group, &table, &d).unwrap();
            for j in 0..table.k() {
                assert!(dd[j].same_value(&row[j]), "double dual differs");
            }
        }
    }

    #[test]
    fn unitary_duality_has_two_stable_subsets_and_is_an_isometry() {
        let spec = plain(GroupKind::Unitary, 3, 2);
        let group = ExtGroup::new(&spec, false);
        let table = oracle_table(&group).unwrap();
        // rows map to plus or minus rows (duals of irreducibles are
        // irreducible up to sign), which also proves the isometry
        for chi in 0..table.k() {
            let row: Vec<Cyclotomic> =
                (0..table.k()).map(|j| table.value(chi, j)).collect();
            let d = alvis_dual(&group, &table, &row).unwrap();
            let norm = table.inner(&d, &d);
            assert_eq!(norm, BigRational::one(), "dual is not a unit vector");
            let dd = alvis_dual(&group, &table, &d).unwrap();
            for j in 0..table.k() {
                assert!(dd[j].same_value(&row[j]));
            }
        }
    }
}
