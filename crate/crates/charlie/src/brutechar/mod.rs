//! Brute-force character-table oracle for concrete finite groups, plus
//! the constructions built on top of it: Frobenius-Schur indicators,
//! Gelfand-Graev characters, the truncation-induction duality operator,
//! and the per-theorem verification routines.
//!
//! The oracle is Dixon-Burnside: common eigenvectors of the class-algebra
//! matrices over a prime field `F_l` with `l = 1 (mod exp(G))` give the
//! central characters, degrees and values are recovered mod `l`, and the
//! values are lifted exactly to `Q(zeta_{exp(G)})` by discrete-Fourier
//! inversion of the eigenvalue multiplicities along the power maps.  The
//! finished table is verified exactly: both orthogonality relations, the
//! degree sum, and closure of the rows under complex conjugation.

mod dixon;
mod ggd;
pub mod verify;

pub use verify::{expected_real_constituents, verify as verify_theorem, Report};

pub use ggd::{
    alvis_dual, coset_inner, gelfand_graev, is_nondegenerate, is_real_valued, is_sigma_fixed,
    linear_characters, sigma_map, unipotent_setup, LinearChar, UnipotentSetup,
};

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::algebra::cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
use crate::algebra::fp::{inv_mod_prime, pow_mod_u64};
use crate::matgrp::{ExtElement, GroupSpec};
use crate::{Error, Result};

/// Order bound for the oracle; beyond it the class matrices and the
/// exhaustive scans stop being desk-scale.
pub const MAX_ORACLE_ORDER: usize = 50_000;
/// Class-count bound for the oracle.
pub const MAX_ORACLE_CLASSES: usize = 200;

/// A concrete finite group given by an element list and multiplication.
/// Elements must be cheap values; the list order is the enumeration order
/// and is part of the table's deterministic output.
pub trait BruteGroup: Sync {
    type El: Copy + Eq + std::hash::Hash + Ord + Send + Sync;
    fn elements(&self) -> &[Self::El];
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn inv(&self, a: &Self::El) -> Self::El;
    fn id(&self) -> Self::El;
}

/// A matrix group, or its extension by the transpose-inverse coset, seen
/// through the `BruteGroup` interface.
pub struct ExtGroup<'a> {
    pub spec: &'a GroupSpec,
    pub extended: bool,
    elements: Vec<ExtElement>,
}

impl<'a> ExtGroup<'a> {
    pub fn new(spec: &'a GroupSpec, extended: bool) -> Self {
        let mut elements: Vec<ExtElement> =
            spec.elements.iter().map(|m| ExtElement::plain(*m)).collect();
        if extended {
            elements.extend(spec.elements.iter().map(|m| ExtElement::coset(*m)));
        }
        ExtGroup {
            spec,
            extended,
            elements,
        }
    }
}

impl BruteGroup for ExtGroup<'_> {
    type El = ExtElement;

    fn elements(&self) -> &[ExtElement] {
        &self.elements
    }

    fn mul(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        self.spec.ext_mul(a, b)
    }

    fn inv(&self, a: &ExtElement) -> ExtElement {
        self.spec.ext_inv(a)
    }

    fn id(&self) -> ExtElement {
        self.spec.ext_identity()
    }
}

/// Images under a permutation of `0..degree`; slots past the degree are
/// fixed points, so the array is its own canonical form.
pub type Perm = [u8; 8];

/// A permutation group on at most 8 points, for oracle sanity inputs.
pub struct PermGroup {
    pub degree: usize,
    elements: Vec<Perm>,
}

impl PermGroup {
    pub fn from_generators(degree: usize, gens: &[Perm]) -> PermGroup {
        assert!(degree <= 8);
        let id = perm_identity();
        let mut seen: std::collections::HashSet<Perm> = [id].into();
        let mut queue = vec![id];
        while let Some(g) = queue.pop() {
            for h in gens {
                let gh = perm_mul(&g, h);
                if seen.insert(gh) {
                    queue.push(gh);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort_unstable();
        PermGroup { degree, elements }
    }

    pub fn symmetric(n: usize) -> PermGroup {
        assert!((1..=8).contains(&n));
        let mut gens = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let mut p = perm_identity();
            p.swap(i, i + 1);
            gens.push(p);
        }
        PermGroup::from_generators(n, &gens)
    }

    pub fn cyclic(n: usize) -> PermGroup {
        assert!((1..=8).contains(&n));
        let mut p = perm_identity();
        for i in 0..n {
            p[i] = ((i + 1) % n) as u8;
        }
        PermGroup::from_generators(n, &[p])
    }

    pub fn klein_four() -> PermGroup {
        let mut a = perm_identity();
        a.swap(0, 1);
        let mut b = perm_identity();
        b.swap(2, 3);
        PermGroup::from_generators(4, &[a, b])
    }
}

fn perm_identity() -> Perm {
    let mut p = [0u8; 8];
    for (i, v) in p.iter_mut().enumerate() {
        *v = i as u8;
    }
    p
}

fn perm_mul(a: &Perm, b: &Perm) -> Perm {
    let mut c = [0u8; 8];
    for i in 0..8 {
        c[i] = a[b[i] as usize];
    }
    c
}

impl BruteGroup for PermGroup {
    type El = Perm;

    fn elements(&self) -> &[Perm] {
        &self.elements
    }

    fn mul(&self, a: &Perm, b: &Perm) -> Perm {
        perm_mul(a, b)
    }

    fn inv(&self, a: &Perm) -> Perm {
        let mut c = [0u8; 8];
        for i in 0..8 {
            c[a[i] as usize] = i as u8;
        }
        c
    }

    fn id(&self) -> Perm {
        perm_identity()
    }
}

/// One table value: a nonnegative-integer combination of roots of unity,
/// kept both as the sparse multiset of exponents (for fast exact sums)
/// and reduced to the power basis of `Q(zeta_M)` (for equality tests).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TableEntry {
    /// `(exponent mod M, multiplicity)` pairs, exponent-sorted.
    pub terms: Vec<(u32, i64)>,
    /// Integer coordinates in the power basis, length `phi(M)`.
    pub red: Vec<i64>,
}

impl TableEntry {
    pub fn from_terms(mut terms: Vec<(u32, i64)>, m: u32) -> TableEntry {
        terms.retain(|&(_, c)| c != 0);
        terms.sort_unstable();
        let red = reduce_terms(&terms, m);
        TableEntry { terms, red }
    }

    pub fn conj(&self, m: u32) -> TableEntry {
        let terms = self
            .terms
            .iter()
            .map(|&(e, c)| ((m - e) % m, c))
            .collect();
        TableEntry::from_terms(terms, m)
    }

    pub fn cyclo(&self, m: u32) -> Cyclotomic {
        let mut z = Cyclotomic::zero(m);
        for (i, &c) in self.red.iter().enumerate() {
            z.coeffs[i] = BigRational::from_integer(BigInt::from(c));
        }
        z
    }

    pub fn is_zero(&self) -> bool {
        self.red.iter().all(|&c| c == 0)
    }

    pub fn as_integer(&self) -> Option<i64> {
        if self.red[1..].iter().all(|&c| c == 0) {
            Some(self.red[0])
        } else {
            None
        }
    }

    pub fn is_real(&self, m: u32) -> bool {
        *self == self.conj(m)
    }
}

/// Reduce a sparse sum of `M`-th roots modulo the `M`-th cyclotomic
/// polynomial, exactly in integers.
fn reduce_terms(terms: &[(u32, i64)], m: u32) -> Vec<i64> {
    let phi = euler_phi(m) as usize;
    let mut acc = vec![0i128; m as usize];
    for &(e, c) in terms {
        acc[(e % m) as usize] += c as i128;
    }
    reduce_dense(&mut acc, m);
    acc[..phi]
        .iter()
        .map(|&c| i64::try_from(c).expect("reduced coordinate overflow"))
        .collect()
}

/// In-place remainder of a dense integer polynomial by the `M`-th
/// cyclotomic polynomial; on return only the first `phi(M)` slots can be
/// nonzero.
fn reduce_dense(acc: &mut [i128], m: u32) {
    let phi = euler_phi(m) as usize;
    let phi_poly = cyclotomic_polynomial(m);
    for k in (phi..acc.len()).rev() {
        let c = acc[k];
        if c == 0 {
            continue;
        }
        acc[k] = 0;
        let shift = k - phi;
        for (j, &b) in phi_poly.iter().take(phi).enumerate() {
            acc[shift + j] -= c * b;
        }
    }
}

/// A conjugacy class of the brute group.
#[derive(Clone, Debug)]
pub struct OracleClass {
    /// Index of the canonical (least) representative in the element list.
    pub rep: usize,
    pub size: u64,
    pub order: u32,
    /// Class of the inverse of the representative.
    pub inverse: u32,
    /// Class of `rep^s` for `s` in `0..order`.
    pub power: Vec<u32>,
}

/// The finished table: classes, degrees, and exact character values over
/// `Q(zeta_M)` with `M = exp(G)`.  Rows are sorted by degree and then by
/// value coordinates, so the table is canonical for a given element list.
pub struct OracleTable {
    pub order: u64,
    pub conductor: u32,
    pub classes: Vec<OracleClass>,
    /// Class index of each group element, aligned with the element list.
    pub class_of: Vec<u32>,
    pub degrees: Vec<u64>,
    /// `entries[chi][class]`.
    pub entries: Vec<Vec<TableEntry>>,
    /// Row index of the complex-conjugate character.
    pub conj_row: Vec<u32>,
}

impl OracleTable {
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn value(&self, chi: usize, class: usize) -> Cyclotomic {
        self.entries[chi][class].cyclo(self.conductor)
    }

    pub fn row_is_real(&self, chi: usize) -> bool {
        self.conj_row[chi] as usize == chi
    }

    /// Frobenius-Schur indicator via the squaring map on classes.
    pub fn fs_indicator(&self, chi: usize) -> i64 {
        let phi = euler_phi(self.conductor) as usize;
        let mut acc = vec![0i128; phi];
        for (_j, cls) in self.classes.iter().enumerate() {
            let sq = cls.power[(2 % cls.order) as usize] as usize;
            for (i, &c) in self.entries[chi][sq].red.iter().enumerate() {
                acc[i] += cls.size as i128 * c as i128;
            }
        }
        assert!(acc[1..].iter().all(|&c| c == 0), "indicator not rational");
        let num = acc[0];
        assert_eq!(num % self.order as i128, 0, "indicator not integral");
        let nu = (num / self.order as i128) as i64;
        assert!((-1..=1).contains(&nu), "indicator out of range");
        nu
    }

    /// Inner product of two class functions given by values per class.
    pub fn inner(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> BigRational {
        let m = self.conductor;
        let mut acc = Cyclotomic::zero(m);
        for (j, cls) in self.classes.iter().enumerate() {
            let t = a[j].lift(m).mul(&b[j].lift(m).conj()).scale_int(cls.size as i64);
            acc = acc.add(&t);
        }
        let r = acc
            .as_rational()
            .expect("inner product of class functions must be rational here");
        r / BigRational::from_integer(BigInt::from(self.order))
    }

    /// Multiplicity of row `chi` in the class function `f`.
    pub fn multiplicity(&self, f: &[Cyclotomic], chi: usize) -> BigRational {
        let row: Vec<Cyclotomic> = (0..self.k()).map(|j| self.value(chi, j)).collect();
        self.inner(f, &row)
    }

    /// The class index of a specific element, via the element index map.
    pub fn class_of_index(&self, element_index: usize) -> usize {
        self.class_of[element_index] as usize
    }
}

/// Build the character table of a brute group.
pub fn oracle_table<G: BruteGroup>(group: &G) -> Result<OracleTable> {
    let els = group.elements();
    let n = els.len();
    if n == 0 || n > MAX_ORACLE_ORDER {
        return Err(Error::ResourceBound(format!(
            "group order {n} outside the oracle range 1..={MAX_ORACLE_ORDER}"
        )));
    }
    let index: HashMap<G::El, u32> = els
        .iter()
        .enumerate()
        .map(|(i, e)| (*e, i as u32))
        .collect();
    assert_eq!(index.len(), n, "element list has duplicates");
    let inv_idx: Vec<u32> = els.iter().map(|e| index[&group.inv(e)]).collect();

    // conjugacy classes by full orbit scans; identity class first, the
    // rest ordered by canonical representative
    let mut class_of = vec![u32::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for start in 0..n {
        if class_of[start] != u32::MAX {
            continue;
        }
        let cid = reps.len() as u32;
        let mut rep = els[start];
        for (x, &xi) in els.iter().zip(&inv_idx) {
            let c = group.mul(&group.mul(x, &els[start]), &els[xi as usize]);
            let ci = index[&c] as usize;
            if class_of[ci] == u32::MAX {
                class_of[ci] = cid;
                if c < rep {
                    rep = c;
                }
            } else {
                assert_eq!(class_of[ci], cid, "conjugation mixed two classes");
            }
        }
        reps.push(index[&rep] as usize);
    }
    let k = reps.len();
    if k > MAX_ORACLE_CLASSES {
        return Err(Error::ResourceBound(format!(
            "class count {k} exceeds the oracle bound {MAX_ORACLE_CLASSES}"
        )));
    }
    let id_idx = index[&group.id()] as usize;
    let mut order_keys: Vec<usize> = (0..k).collect();
    order_keys.sort_by_key(|&c| (class_of[id_idx] as usize != c, els[reps[c]]));
    let renumber: Vec<u32> = {
        let mut r = vec![0u32; k];
        for (newc, &oldc) in order_keys.iter().enumerate() {
            r[oldc] = newc as u32;
        }
        r
    };
    for c in class_of.iter_mut() {
        *c = renumber[*c as usize];
    }
    let reps: Vec<usize> = order_keys.iter().map(|&c| reps[c]).collect();

    let mut sizes = vec![0u64; k];
    for &c in &class_of {
        sizes[c as usize] += 1;
    }
    assert_eq!(sizes.iter().sum::<u64>(), n as u64, "class equation");

    // element orders, power maps, exponent
    let mut classes = Vec::with_capacity(k);
    let mut exponent = 1u64;
    for (c, &rep) in reps.iter().enumerate() {
        // power[s] = class of rep^s for s in 0..order
        let mut power = Vec::new();
        let mut cur = group.id();
        loop {
            power.push(class_of[index[&cur] as usize]);
            cur = group.mul(&cur, &els[rep]);
            if cur == group.id() {
                break;
            }
        }
        let order = power.len() as u32;
        exponent = num_integer::lcm(exponent, order as u64);
        classes.push(OracleClass {
            rep,
            size: sizes[c],
            order,
            inverse: class_of[inv_idx[rep] as usize],
            power,
        });
    }
    assert_eq!(classes[0].order, 1, "identity class must come first");

    // class matrices mod l and the common eigenvectors
    let l = dixon::working_prime(exponent, n as u64);
    let size_inv: Vec<u64> = sizes.iter().map(|&s| inv_mod_prime(s, l)).collect();
    let mats: Vec<Vec<Vec<u64>>> = (1..k)
        .into_par_iter()
        .map(|j| {
            let rj = els[classes[j].rep];
            let mut counts = vec![vec![0u64; k]; k];
            for (yi, y) in els.iter().enumerate() {
                let prod = group.mul(&rj, y);
                let kk = class_of[yi] as usize;
                let mm = class_of[index[&prod] as usize] as usize;
                counts[kk][mm] += 1;
            }
            // a_{jkm} = |K_j| counts[k][m] / |K_m|
            let mut a = vec![vec![0u64; k]; k];
            for kk in 0..k {
                for mm in 0..k {
                    if counts[kk][mm] != 0 {
                        let v = counts[kk][mm] % l;
                        let v = (v as u128 * (sizes[j] % l) as u128 % l as u128) as u64;
                        a[kk][mm] = (v as u128 * size_inv[mm] as u128 % l as u128) as u64;
                    }
                }
            }
            a
        })
        .collect();
    let eig = dixon::common_eigenvectors(&mats, l);
    assert_eq!(eig.len(), k, "wrong number of central characters");

    // central characters, degrees, values mod l
    let mut degrees = Vec::with_capacity(k);
    let mut values_mod = Vec::with_capacity(k);
    let order_mod = (n as u64) % l;
    for v in &eig {
        assert!(v[0] != 0, "central character vanished at the identity");
        let s = inv_mod_prime(v[0], l);
        let omega: Vec<u64> = v.iter().map(|&x| (x as u128 * s as u128 % l as u128) as u64).collect();
        let mut denom = 0u64;
        for j in 0..k {
            let t = (omega[j] as u128 * omega[classes[j].inverse as usize] as u128 % l as u128)
                as u64;
            let t = (t as u128 * size_inv[j] as u128 % l as u128) as u64;
            denom = (denom + t) % l;
        }
        let d2 = (order_mod as u128 * inv_mod_prime(denom, l) as u128 % l as u128) as u64;
        let bound = (n as f64).sqrt() as u64 + 1;
        let mut found = None;
        for d in 1..=bound {
            if (d as u128 * d as u128 % l as u128) as u64 == d2 {
                assert!(found.is_none(), "degree recovery ambiguous");
                found = Some(d);
            }
        }
        let d = found.expect("no degree matches the central character");
        let vals: Vec<u64> = (0..k)
            .map(|j| {
                let t = (d as u128 * omega[j] as u128 % l as u128) as u64;
                (t as u128 * size_inv[j] as u128 % l as u128) as u64
            })
            .collect();
        degrees.push(d);
        values_mod.push(vals);
    }
    assert_eq!(
        degrees.iter().map(|&d| d * d).sum::<u64>(),
        n as u64,
        "degree squares must sum to the group order"
    );

    // exact lift: eigenvalue multiplicities by discrete Fourier inversion
    // along the power maps, with all roots drawn from one primitive M-th
    // root mod l
    let m_cond = u32::try_from(exponent).expect("exponent fits in u32");
    let w = dixon::primitive_root(l);
    let z_m = pow_mod_u64(w, (l - 1) / exponent, l);
    let entries: Vec<Vec<TableEntry>> = (0..k)
        .into_par_iter()
        .map(|chi| {
            (0..k)
                .map(|j| {
                    let o = classes[j].order as u64;
                    assert_eq!(exponent % o, 0);
                    let z_o = pow_mod_u64(z_m, exponent / o, l);
                    let z_o_inv = inv_mod_prime(z_o, l);
                    let o_inv = inv_mod_prime(o, l);
                    let mut terms = Vec::new();
                    for t in 0..o {
                        let mut s_acc = 0u64;
                        let step = pow_mod_u64(z_o_inv, t, l);
                        let mut factor = 1u64;
                        for s in 0..o {
                            let v = values_mod[chi][classes[j].power[s as usize] as usize];
                            s_acc = (s_acc + (v as u128 * factor as u128 % l as u128) as u64) % l;
                            factor = (factor as u128 * step as u128 % l as u128) as u64;
                        }
                        let mult = (s_acc as u128 * o_inv as u128 % l as u128) as u64;
                        assert!(
                            mult <= degrees[chi],
                            "eigenvalue multiplicity exceeds the degree"
                        );
                        if mult != 0 {
                            terms.push(((t * (exponent / o)) as u32, mult as i64));
                        }
                    }
                    let total: i64 = terms.iter().map(|&(_, c)| c).sum();
                    assert_eq!(
                        total as u64, degrees[chi],
                        "multiplicities must sum to the degree"
                    );
                    TableEntry::from_terms(terms, m_cond)
                })
                .collect()
        })
        .collect();

    // canonical row order
    let mut row_order: Vec<usize> = (0..k).collect();
    row_order.sort_by(|&a, &b| {
        degrees[a]
            .cmp(&degrees[b])
            .then_with(|| entries[a].cmp(&entries[b]))
    });
    let degrees: Vec<u64> = row_order.iter().map(|&i| degrees[i]).collect();
    let entries: Vec<Vec<TableEntry>> = row_order.into_iter().map(|i| entries[i].clone()).collect();

    // conjugate-row closure
    let row_index: HashMap<&Vec<TableEntry>, u32> = entries
        .iter()
        .enumerate()
        .map(|(i, r)| (r, i as u32))
        .collect();
    assert_eq!(row_index.len(), k, "duplicate rows in the table");
    let conj_row: Vec<u32> = entries
        .iter()
        .map(|row| {
            let conj: Vec<TableEntry> = row.iter().map(|e| e.conj(m_cond)).collect();
            *row_index
                .get(&conj)
                .expect("rows are not closed under complex conjugation")
        })
        .collect();

    let table = OracleTable {
        order: n as u64,
        conductor: m_cond,
        classes,
        class_of,
        degrees,
        entries,
        conj_row,
    };
    verify_orthogonality(&table);
    Ok(table)
}

/// Exact first and second orthogonality over `Z[zeta_M]`, with integer
/// accumulation per exponent and one reduction per pair.
fn verify_orthogonality(table: &OracleTable) {
    let k = table.k();
    let m = table.conductor;
    let phi = euler_phi(m) as usize;
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|a| (a..k).map(move |b| (a, b)))
        .collect();
    pairs.par_iter().for_each(|&(a, b)| {
        // rows: sum_j |K_j| chi_a(g_j) conj(chi_b(g_j)) = |G| delta
        let mut acc = vec![0i128; m as usize];
        for (j, cls) in table.classes.iter().enumerate() {
            pair_accumulate(
                &mut acc,
                &table.entries[a][j],
                &table.entries[b][j],
                cls.size as i128,
                m,
            );
        }
        reduce_dense(&mut acc, m);
        let expect = if a == b { table.order as i128 } else { 0 };
        assert_eq!(acc[0], expect, "row orthogonality failed at ({a}, {b})");
        assert!(
            acc[1..phi].iter().all(|&c| c == 0),
            "row orthogonality not rational at ({a}, {b})"
        );
        // columns: sum_chi chi(g_a) conj(chi(g_b)) = |C(g_a)| delta
        let mut acc = vec![0i128; m as usize];
        for chi in 0..k {
            pair_accumulate(
                &mut acc,
                &table.entries[chi][a],
                &table.entries[chi][b],
                1,
                m,
            );
        }
        reduce_dense(&mut acc, m);
        let expect = if a == b {
            (table.order / table.classes[a].size) as i128
        } else {
            0
        };
        assert_eq!(acc[0], expect, "column orthogonality failed at ({a}, {b})");
        assert!(
            acc[1..phi].iter().all(|&c| c == 0),
            "column orthogonality not rational at ({a}, {b})"
        );
    });
}

/// `acc += w * x * conj(y)` as sparse root multisets.
fn pair_accumulate(acc: &mut [i128], x: &TableEntry, y: &TableEntry, w: i128, m: u32) {
    for &(e1, c1) in &x.terms {
        for &(e2, c2) in &y.terms {
            let e = (e1 + m - e2) % m;
            acc[e as usize] += w * c1 as i128 * c2 as i128;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charmap::{CharTable, GroupKind};

    #[test]
    fn cyclic_three_table() {
        let g = PermGroup::cyclic(3);
        let t = oracle_table(&g).unwrap();
        assert_eq!(t.k(), 3);
        assert_eq!(t.degrees, vec![1, 1, 1]);
        assert_eq!(t.conductor, 3);
        // the two nontrivial rows are conjugate
        let triv = (0..3).position(|i| {
            (0..3).all(|j| t.entries[i][j].as_integer() == Some(1))
        });
        let triv = triv.expect("trivial character missing");
        assert_eq!(t.fs_indicator(triv), 1);
        let others: Vec<usize> = (0..3).filter(|&i| i != triv).collect();
        assert_eq!(t.conj_row[others[0]] as usize, others[1]);
        assert_eq!(t.fs_indicator(others[0]), 0);
    }

    #[test]
    fn symmetric_group_tables() {
        let s3 = oracle_table(&PermGroup::symmetric(3)).unwrap();
        assert_eq!(s3.degrees, vec![1, 1, 2]);
        assert!((0..3).all(|i| s3.fs_indicator(i) == 1));
        let s4 = oracle_table(&PermGroup::symmetric(4)).unwrap();
        assert_eq!(s4.degrees, vec![1, 1, 2, 3, 3]);
        assert!((0..5).all(|i| s4.fs_indicator(i) == 1));
        let v4 = oracle_table(&PermGroup::klein_four()).unwrap();
        assert_eq!(v4.degrees, vec![1, 1, 1, 1]);
        assert_eq!(v4.conductor, 2);
    }

    #[test]
    fn general_linear_two_two_is_symmetric_three() {
        let spec = GroupSpec::new(GroupKind::GeneralLinear, 2, 2).unwrap();
        let g = ExtGroup::new(&spec, false);
        let t = oracle_table(&g).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 2]);
    }

    #[test]
    fn general_linear_two_three_matches_the_combinatorial_table() {
        let spec = GroupSpec::new(GroupKind::GeneralLinear, 2, 3).unwrap();
        let g = ExtGroup::new(&spec, false);
        let t = oracle_table(&g).unwrap();
        assert_eq!(t.k(), 8);
        assert_eq!(t.degrees.iter().map(|d| d * d).sum::<u64>(), 48);
        let comb = CharTable::build(GroupKind::GeneralLinear, 2, 3).unwrap();
        use num_traits::ToPrimitive;
        let mut a: Vec<u64> = (0..comb.chars.len())
            .map(|i| comb.degree(i).to_u64().unwrap())
            .collect();
        a.sort_unstable();
        assert_eq!(t.degrees, a);
    }

    #[test]
    fn real_characters_of_general_linear_two_three_have_indicator_one() {
        let spec = GroupSpec::new(GroupKind::GeneralLinear, 2, 3).unwrap();
        let g = ExtGroup::new(&spec, false);
        let t = oracle_table(&g).unwrap();
        for chi in 0..t.k() {
            if t.row_is_real(chi) {
                assert_eq!(t.fs_indicator(chi), 1);
            } else {
                assert_eq!(t.fs_indicator(chi), 0);
            }
        }
    }

    #[test]
    fn some_unitary_two_three_character_has_indicator_minus_one() {
        let spec = GroupSpec::new(GroupKind::Unitary, 2, 3).unwrap();
        let g = ExtGroup::new(&spec, false);
        let t = oracle_table(&g).unwrap();
        assert!((0..t.k()).any(|chi| t.fs_indicator(chi) == -1));
    }

    #[test]
    fn extended_group_table_at_the_smallest_size() {
        let spec = GroupSpec::new(GroupKind::GeneralLinear, 2, 2).unwrap();
        let g = ExtGroup::new(&spec, true);
        let t = oracle_table(&g).unwrap();
        assert_eq!(t.order, 12);
        assert_eq!(t.degrees.iter().map(|d| d * d).sum::<u64>(), 12);
        // restriction consistency: plain classes refine under the overgroup
        assert_eq!(t.classes.iter().map(|c| c.size).sum::<u64>(), 12);
    }

    #[test]
    fn congruence_of_squares_mod_two(){
        // chi(g)^2 = chi(g^2) mod 2 for algebraic integers: check on the
        // oracle values of U(2, 2)
        let spec = GroupSpec::new(GroupKind::Unitary, 2, 2).unwrap();
        let g = ExtGroup::new(&spec, false);
        let t = oracle_table(&g).unwrap();
        for chi in 0..t.k() {
            for (j, cls) in t.classes.iter().enumerate() {
                let sq = cls.power[(2 % cls.order) as usize] as usize;
                let v = t.value(chi, j);
                let diff = v.mul(&v).sub(&t.value(chi, sq));
                assert!(diff.divisible_by(2), "square congruence failed");
            }
        }
    }
}
