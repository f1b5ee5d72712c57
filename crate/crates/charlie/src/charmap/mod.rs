//! Full irreducible character tables of the finite general linear and
//! unitary groups, built combinatorially: Schur functions over character
//! orbits, the variable transforms to class orbits, and Hall-Littlewood
//! expansions whose coefficients are Green polynomial values.
//!
//! The value of the character labeled `lambda` on the class labeled `mu`
//! is read off as the coefficient of the normalized Hall-Littlewood
//! product for `mu` in the expanded Schur product for `lambda`, times the
//! table sign.  All arithmetic is exact in a cyclotomic field whose
//! conductor is the lcm of the torus orders that occur.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::Cyclotomic;
use crate::polyorb::{OrbitContext, OrbitKind, OrbitLabel};
use crate::symfunc::{schur_to_power, variable_transform, HlTransition};
use crate::xpart::{enumerate_xpartitions, Partition, XPartition};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GroupKind {
    GeneralLinear,
    Unitary,
}

impl GroupKind {
    pub fn name(self) -> &'static str {
        match self {
            GroupKind::GeneralLinear => "gl",
            GroupKind::Unitary => "u",
        }
    }

    pub fn class_kind(self) -> OrbitKind {
        match self {
            GroupKind::GeneralLinear => OrbitKind::Phi,
            GroupKind::Unitary => OrbitKind::PhiTilde,
        }
    }

    pub fn char_kind(self) -> OrbitKind {
        match self {
            GroupKind::GeneralLinear => OrbitKind::Theta,
            GroupKind::Unitary => OrbitKind::ThetaTilde,
        }
    }

    /// `q^{n(n-1)/2} prod_{i=1}^n (q^i - (+-1)^i)` with `+1` in the
    /// general linear case and `-1` in the unitary case.
    pub fn order(self, n: usize, q: u64) -> u64 {
        let mut acc = q.pow((n * (n - 1) / 2) as u32);
        for i in 1..=n as u32 {
            let qi = q.pow(i);
            acc *= match self {
                GroupKind::GeneralLinear => qi - 1,
                GroupKind::Unitary => {
                    if i % 2 == 1 {
                        qi + 1
                    } else {
                        qi - 1
                    }
                }
            };
        }
        acc
    }

    /// The signed size `Q` attached to a class orbit of size `d`: `q^d`
    /// plain, `(-q)^d` twisted.
    pub fn big_q(self, q: u64, d: u32) -> i64 {
        let v = (q as i64).pow(d);
        match self {
            GroupKind::GeneralLinear => v,
            GroupKind::Unitary => {
                if d % 2 == 1 {
                    -v
                } else {
                    v
                }
            }
        }
    }

    /// Conductor of the cyclotomic field containing every table entry:
    /// the lcm of the torus orders `q^s - (+-1)^s`, `s <= n`.
    pub fn conductor(self, n: usize, q: u64) -> u32 {
        let mut m = 1u64;
        for s in 1..=n as u32 {
            let torus = match self {
                GroupKind::GeneralLinear => q.pow(s) - 1,
                GroupKind::Unitary => {
                    if s % 2 == 1 {
                        q.pow(s) + 1
                    } else {
                        q.pow(s) - 1
                    }
                }
            };
            m = m.lcm(&torus.max(1));
        }
        m as u32
    }
}

/// `zeta_ambient^e` expressed in `Q(zeta_conductor)`; the order of the
/// root must divide the conductor.
fn root_from_ambient(conductor: u32, ambient: u64, e: u64) -> Cyclotomic {
    let e = e % ambient;
    if e == 0 {
        return Cyclotomic::one(conductor);
    }
    let g = e.gcd(&ambient);
    let order = ambient / g;
    assert_eq!(
        conductor as u64 % order,
        0,
        "root of order {order} outside Q(zeta_{conductor})"
    );
    let k = (e / g) % order * (conductor as u64 / order);
    Cyclotomic::root(conductor, k as i64)
}

/// `prod_{j=1}^m (1 - x^j)`.
fn phi_factor(m: u32, x: &BigRational) -> BigRational {
    let mut acc = BigRational::one();
    let mut xj = x.clone();
    for _ in 0..m {
        acc *= BigRational::one() - &xj;
        xj *= x;
    }
    acc
}

fn rat_pow(x: &BigRational, e: u64) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Centralizer order of the class labeled `mu`:
/// `prod_f Q_f^{|mu(f)| + 2 n(mu(f))} prod_i phi_{m_i}(Q_f^{-1})`.
pub fn centralizer_order(kind: GroupKind, q: u64, mu: &XPartition) -> u64 {
    let mut acc = BigRational::one();
    for (o, lam) in &mu.parts {
        let bq = BigRational::from_integer(BigInt::from(kind.big_q(q, o.size)));
        let inv = BigRational::one() / &bq;
        acc *= rat_pow(&bq, lam.size() as u64 + 2 * lam.n_stat());
        for (_, m) in lam.multiplicities() {
            acc *= phi_factor(m, &inv);
        }
    }
    // the twisted substitution produces the order up to a sign
    assert!(acc.is_integer() && !acc.is_zero(), "bad centralizer {acc}");
    acc.to_integer().abs().to_u64().expect("centralizer fits u64")
}

/// Power-sum products over class orbits: for each orbit, the sorted list
/// of power-sum indices attached to it.
type PowerMap = BTreeMap<OrbitLabel, Vec<u32>>;

/// Expand `s_{nu}(Y^{(theta)})` in class-orbit power sums.
fn alphabet_expansion(
    ctx: &OrbitContext,
    conductor: u32,
    theta: &OrbitLabel,
    nu: &Partition,
) -> BTreeMap<PowerMap, Cyclotomic> {
    let mut out: BTreeMap<PowerMap, Cyclotomic> = BTreeMap::new();
    for (rho, c) in schur_to_power(nu) {
        let mut acc: Vec<(PowerMap, Cyclotomic)> =
            vec![(PowerMap::new(), Cyclotomic::from_rational(conductor, c))];
        for &r in &rho.0 {
            let (sign, terms) = variable_transform(ctx, theta, r);
            let mut merged: BTreeMap<PowerMap, Cyclotomic> = BTreeMap::new();
            for (pm, coeff) in &acc {
                for t in &terms {
                    let mut pm2 = pm.clone();
                    let slot = pm2.entry(t.orbit.clone()).or_default();
                    slot.push(t.p_index);
                    slot.sort_unstable();
                    let v = coeff.mul_root_of_ambient(conductor, ctx.ambient, t.coeff_exp);
                    let v = if sign < 0 { v.neg() } else { v };
                    match merged.get_mut(&pm2) {
                        Some(prev) => *prev = prev.add(&v),
                        None => {
                            merged.insert(pm2, v);
                        }
                    }
                }
            }
            acc = merged.into_iter().collect();
        }
        for (pm, v) in acc {
            match out.get_mut(&pm) {
                Some(prev) => *prev = prev.add(&v),
                None => {
                    out.insert(pm, v);
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

trait MulRootExt {
    fn mul_root_of_ambient(&self, conductor: u32, ambient: u64, e: u64) -> Cyclotomic;
}

impl MulRootExt for Cyclotomic {
    fn mul_root_of_ambient(&self, conductor: u32, ambient: u64, e: u64) -> Cyclotomic {
        let root = root_from_ambient(conductor, ambient, e);
        self.mul(&root)
    }
}

/// A full character table with exact cyclotomic entries.  Rows are
/// characters, columns conjugacy classes, both in canonical label order.
pub struct CharTable {
    pub kind: GroupKind,
    pub n: usize,
    pub q: u64,
    pub ctx: OrbitContext,
    pub conductor: u32,
    pub order: u64,
    pub classes: Vec<XPartition>,
    pub chars: Vec<XPartition>,
    pub centralizers: Vec<u64>,
    pub values: Vec<Vec<Cyclotomic>>,
}

impl CharTable {
    pub fn build(kind: GroupKind, n: usize, q: u64) -> Result<CharTable> {
        let ctx = OrbitContext::new(q, n)?;
        let conductor = kind.conductor(n, q);
        let order = kind.order(n, q);
        let classes = enumerate_xpartitions(&ctx, kind.class_kind(), n as u32);
        let chars = enumerate_xpartitions(&ctx, kind.char_kind(), n as u32);
        let centralizers: Vec<u64> = classes
            .iter()
            .map(|mu| centralizer_order(kind, q, mu))
            .collect();
        // class equation: the class sizes partition the group
        let total: u64 = centralizers.iter().map(|&a| order / a).sum();
        if total != order {
            return Err(Error::Internal(format!(
                "class equation fails: {total} != {order}"
            )));
        }
        let class_index: HashMap<&XPartition, usize> =
            classes.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut hl: HashMap<i64, HlTransition> = HashMap::new();
        let mut values = Vec::with_capacity(chars.len());
        for nu in &chars {
            values.push(Self::row(
                kind,
                &ctx,
                conductor,
                nu,
                &classes,
                &class_index,
                &mut hl,
            )?);
        }
        Ok(CharTable {
            kind,
            n,
            q,
            ctx,
            conductor,
            order,
            classes,
            chars,
            centralizers,
            values,
        })
    }

    fn row(
        kind: GroupKind,
        ctx: &OrbitContext,
        conductor: u32,
        nu: &XPartition,
        classes: &[XPartition],
        class_index: &HashMap<&XPartition, usize>,
        hl: &mut HashMap<i64, HlTransition>,
    ) -> Result<Vec<Cyclotomic>> {
        // product of the per-alphabet expansions
        let mut global: BTreeMap<PowerMap, Cyclotomic> =
            [(PowerMap::new(), Cyclotomic::one(conductor))].into();
        for (theta, lam) in &nu.parts {
            let alpha = alphabet_expansion(ctx, conductor, theta, lam);
            let mut next: BTreeMap<PowerMap, Cyclotomic> = BTreeMap::new();
            for (pm1, c1) in &global {
                for (pm2, c2) in &alpha {
                    let mut pm = pm1.clone();
                    for (o, idx) in pm2 {
                        let slot = pm.entry(o.clone()).or_default();
                        slot.extend_from_slice(idx);
                        slot.sort_unstable();
                    }
                    let v = c1.mul(c2);
                    match next.get_mut(&pm) {
                        Some(prev) => *prev = prev.add(&v),
                        None => {
                            next.insert(pm, v);
                        }
                    }
                }
            }
            global = next;
        }
        // Hall-Littlewood step: expand each alphabet's power product; the
        // coefficient times Q^{n(gamma)} is a Green polynomial value.
        let mut row = vec![Cyclotomic::zero(conductor); classes.len()];
        for (pm, coeff) in &global {
            if coeff.is_zero() {
                continue;
            }
            let mut partial: Vec<(BTreeMap<OrbitLabel, Partition>, BigRational)> =
                vec![(BTreeMap::new(), BigRational::one())];
            for (orbit, indices) in pm {
                let bq = kind.big_q(ctx.q, orbit.size);
                let tr = hl.entry(bq).or_insert_with(|| {
                    HlTransition::new(BigRational::new(BigInt::one(), BigInt::from(bq)))
                });
                let rho = Partition::new(indices.clone());
                let expansion = tr.expand_power_product(&rho);
                let bqr = BigRational::from_integer(BigInt::from(bq));
                let mut next = Vec::new();
                for (assign, g) in &partial {
                    for (gamma, c) in &expansion {
                        let green = c * rat_pow(&bqr, gamma.n_stat());
                        debug_assert!(green.is_integer(), "non-integral Green value");
                        let mut a2 = assign.clone();
                        a2.insert(orbit.clone(), gamma.clone());
                        next.push((a2, g * green));
                    }
                }
                partial = next;
            }
            for (assign, g) in partial {
                if g.is_zero() {
                    continue;
                }
                let label = XPartition::new(kind.class_kind(), assign);
                let j = *class_index
                    .get(&label)
                    .ok_or_else(|| Error::Internal(format!("unknown class label {label:?}")))?;
                row[j] = row[j].add(&coeff.scale(&g));
            }
        }
        // unitary table sign (-1)^{floor(n/2) + n(nu)}
        if kind == GroupKind::Unitary {
            let n = nu.norm() as u64;
            let nstat: u64 = nu
                .parts
                .iter()
                .map(|(o, p)| o.size as u64 * p.n_stat())
                .sum();
            if (n / 2 + nstat) % 2 == 1 {
                for v in &mut row {
                    *v = v.neg();
                }
            }
        }
        Ok(row)
    }

    /// Index of the class of the identity element.
    pub fn identity_class(&self) -> usize {
        let one = self.ctx.orbit_of_exponent(self.kind.class_kind(), 0);
        let label = XPartition::new(
            self.kind.class_kind(),
            [(one, Partition::new(vec![1; self.n]))].into_iter().collect(),
        );
        self.classes
            .iter()
            .position(|c| *c == label)
            .expect("identity class present")
    }

    pub fn class_size(&self, j: usize) -> u64 {
        self.order / self.centralizers[j]
    }

    /// Character degree (value at the identity), a positive integer.
    pub fn degree(&self, i: usize) -> BigInt {
        let d = self.values[i][self.identity_class()]
            .as_integer()
            .expect("integral degree");
        assert!(d.is_positive(), "non-positive degree");
        d
    }

    /// True if the label is fixed by conjugation; equivalent to the row
    /// being real-valued.
    pub fn char_self_conjugate(&self, i: usize) -> bool {
        self.chars[i].is_self_conjugate(&self.ctx)
    }

    pub fn row_is_real(&self, i: usize) -> bool {
        self.values[i].iter().all(|v| v.is_real())
    }

    /// A class is regular when each Jordan partition has at most one part
    /// (one block per elementary divisor).
    pub fn class_is_regular(&self, j: usize) -> bool {
        self.classes[j].parts.values().all(|p| p.length() <= 1)
    }

    /// A class is semisimple when every Jordan block is trivial.
    pub fn class_is_semisimple(&self, j: usize) -> bool {
        self.classes[j].parts.values().all(|p| p.0.iter().all(|&x| x == 1))
    }

    /// The regular unipotent class: a single Jordan block at `t - 1`.
    pub fn regular_unipotent_class(&self) -> usize {
        let one = self.ctx.orbit_of_exponent(self.kind.class_kind(), 0);
        let label = XPartition::new(
            self.kind.class_kind(),
            [(one, Partition::new(vec![self.n as u32]))]
                .into_iter()
                .collect(),
        );
        self.classes
            .iter()
            .position(|c| *c == label)
            .expect("regular unipotent class present")
    }

    /// First and second orthogonality relations, checked exactly.
    pub fn check_orthogonality(&self) -> Result<()> {
        let m = self.conductor;
        let k = self.chars.len();
        for i1 in 0..k {
            for i2 in i1..k {
                let mut s = Cyclotomic::zero(m);
                for j in 0..k {
                    let t = self.values[i1][j].mul(&self.values[i2][j].conj());
                    let w = BigRational::new(
                        BigInt::from(self.class_size(j)),
                        BigInt::from(self.order),
                    );
                    s = s.add(&t.scale(&w));
                }
                let expect = Cyclotomic::from_integer(m, (i1 == i2) as i64);
                if s != expect {
                    return Err(Error::MatchFailure(format!(
                        "row orthogonality fails at characters {i1}, {i2}"
                    )));
                }
            }
        }
        for j1 in 0..k {
            for j2 in j1..k {
                let mut s = Cyclotomic::zero(m);
                for i in 0..k {
                    s = s.add(&self.values[i][j1].mul(&self.values[i][j2].conj()));
                }
                let expect = if j1 == j2 {
                    Cyclotomic::from_integer(m, self.centralizers[j1] as i64)
                } else {
                    Cyclotomic::zero(m)
                };
                if s != expect {
                    return Err(Error::MatchFailure(format!(
                        "column orthogonality fails at classes {j1}, {j2}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "group": self.kind.name(),
            "n": self.n,
            "q": self.q,
            "order": self.order,
            "conductor": self.conductor,
            "field_modulus": self.ctx.tower.modulus.c,
            "classes": self.classes.iter().map(|c| serde_json::json!({
                "label": c.to_json(&self.ctx),
                "centralizer": centralizer_order(self.kind, self.q, c),
            })).collect::<Vec<_>>(),
            "characters": self.chars.iter().map(|c| c.to_json(&self.ctx)).collect::<Vec<_>>(),
            "values": self.values.iter().map(|row| {
                row.iter().map(|v| v.to_json()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(GroupKind::GeneralLinear.order(2, 2), 6);
        assert_eq!(GroupKind::GeneralLinear.order(2, 3), 48);
        assert_eq!(GroupKind::GeneralLinear.order(3, 2), 168);
        assert_eq!(GroupKind::GeneralLinear.order(3, 3), 11232);
        assert_eq!(GroupKind::Unitary.order(2, 2), 18);
        assert_eq!(GroupKind::Unitary.order(2, 3), 96);
        assert_eq!(GroupKind::Unitary.order(3, 2), 648);
    }

    #[test]
    fn ambient_roots_map_to_the_conductor() {
        // ambient 15 at q = 2, n = 2: conductor lcm(1, 3) = 3
        let c = GroupKind::GeneralLinear.conductor(2, 2);
        assert_eq!(c, 3);
        assert_eq!(root_from_ambient(3, 15, 0), Cyclotomic::one(3));
        assert_eq!(root_from_ambient(3, 15, 5), Cyclotomic::root(3, 1));
        assert_eq!(root_from_ambient(3, 15, 10), Cyclotomic::root(3, 2));
        assert_eq!(GroupKind::Unitary.conductor(2, 2), 3);
        assert_eq!(GroupKind::GeneralLinear.conductor(2, 5), 24);
        assert_eq!(GroupKind::Unitary.conductor(3, 2), 9);
    }

    #[test]
    fn centralizers_sum_to_the_group_order() {
        for (kind, n, q) in [
            (GroupKind::GeneralLinear, 2usize, 2u64),
            (GroupKind::GeneralLinear, 2, 3),
            (GroupKind::GeneralLinear, 3, 2),
            (GroupKind::GeneralLinear, 3, 3),
            (GroupKind::Unitary, 2, 2),
            (GroupKind::Unitary, 2, 3),
            (GroupKind::Unitary, 3, 2),
            (GroupKind::Unitary, 3, 3),
        ] {
            let ctx = OrbitContext::new(q, n).unwrap();
            let order = kind.order(n, q);
            let total: u64 = enumerate_xpartitions(&ctx, kind.class_kind(), n as u32)
                .iter()
                .map(|mu| order / centralizer_order(kind, q, mu))
                .sum();
            assert_eq!(total, order, "{kind:?} n={n} q={q}");
        }
    }

    #[test]
    fn gl_2_2_is_the_symmetric_group_s3() {
        let t = CharTable::build(GroupKind::GeneralLinear, 2, 2).unwrap();
        assert_eq!(t.classes.len(), 3);
        assert_eq!(t.chars.len(), 3);
        // degrees 1, 1, 2; all values rational integers
        let mut degs: Vec<i64> = (0..3)
            .map(|i| t.degree(i).to_i64().unwrap())
            .collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2]);
        // centralizer orders 6, 2, 3 as a multiset
        let mut cents = t.centralizers.clone();
        cents.sort_unstable();
        assert_eq!(cents, vec![2, 3, 6]);
        t.check_orthogonality().unwrap();
    }

    #[test]
    fn gl_2_3_degrees_and_orthogonality() {
        let t = CharTable::build(GroupKind::GeneralLinear, 2, 3).unwrap();
        // q-1 = 2 each of degrees 1 and q; (q-1)(q-2)/2 = 1 of degree q+1;
        // q(q-1)/2 = 3 of degree q-1
        let mut degs: Vec<i64> = (0..t.chars.len())
            .map(|i| t.degree(i).to_i64().unwrap())
            .collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2, 2, 3, 3, 4]);
        let sq: i64 = degs.iter().map(|d| d * d).sum();
        assert_eq!(sq as u64, t.order);
        t.check_orthogonality().unwrap();
    }

    #[test]
    fn u_2_2_table_is_consistent() {
        let t = CharTable::build(GroupKind::Unitary, 2, 2).unwrap();
        assert_eq!(t.order, 18);
        let sq: BigInt = (0..t.chars.len()).map(|i| t.degree(i).pow(2)).sum();
        assert_eq!(sq, BigInt::from(18));
        t.check_orthogonality().unwrap();
        // U(2,2) has a normal Sylow 3-subgroup with quotient C2: degrees
        // are 1 and 2 only
        for i in 0..t.chars.len() {
            let d = t.degree(i).to_i64().unwrap();
            assert!(d == 1 || d == 2, "unexpected degree {d}");
        }
    }

    #[test]
    fn u_2_3_degrees() {
        let t = CharTable::build(GroupKind::Unitary, 2, 3).unwrap();
        assert_eq!(t.order, 96);
        // unitary degree pattern: q+1 = 4 each of degrees 1 and q,
        // q(q+1)/2 = 6 of degree q+1, (q+1)q/2 ... check only the square sum
        let sq: BigInt = (0..t.chars.len()).map(|i| t.degree(i).pow(2)).sum();
        assert_eq!(sq, BigInt::from(96));
        t.check_orthogonality().unwrap();
    }

    #[test]
    fn real_rows_match_self_conjugate_labels() {
        for (kind, n, q) in [
            (GroupKind::GeneralLinear, 2usize, 3u64),
            (GroupKind::GeneralLinear, 3, 2),
            (GroupKind::Unitary, 2, 2),
            (GroupKind::Unitary, 2, 3),
        ] {
            let t = CharTable::build(kind, n, q).unwrap();
            for i in 0..t.chars.len() {
                assert_eq!(
                    t.row_is_real(i),
                    t.char_self_conjugate(i),
                    "{kind:?} n={n} q={q} char {i}"
                );
            }
        }
    }

    #[test]
    fn class_flags() {
        let t = CharTable::build(GroupKind::GeneralLinear, 2, 3).unwrap();
        let j = t.identity_class();
        assert!(t.class_is_semisimple(j));
        assert!(!t.class_is_regular(j));
        let r = t.regular_unipotent_class();
        assert!(t.class_is_regular(r));
        assert!(!t.class_is_semisimple(r));
        assert_eq!(t.class_size(j), 1);
    }
}

