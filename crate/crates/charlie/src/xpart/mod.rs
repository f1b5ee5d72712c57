//! Partitions and partition-valued functions on orbit sets: the labels of
//! conjugacy classes and irreducible characters, their statistics, the
//! conjugation involution, and the bijection carrying self-conjugate
//! labels of the plain kind to the twisted kind.

use std::collections::BTreeMap;

use crate::polyorb::{OrbitContext, OrbitKind, OrbitLabel};
use crate::{Error, Result};

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(vec![])
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// `n(lambda) = sum (i-1) lambda_i`.
    pub fn n_stat(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &x)| i as u64 * x as u64)
            .sum()
    }

    pub fn transpose(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let max = self.0[0] as usize;
        let parts = (1..=max)
            .map(|j| self.0.iter().filter(|&&x| x as usize >= j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Multiplicity of each part value, decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &x in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == x => *m += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            let top = remaining.min(max);
            for next in (1..=top).rev() {
                cur.push(next);
                rec(remaining - next, next, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

/// A partition-valued function on an orbit set, stored sparsely.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct XPartition {
    pub kind: OrbitKind,
    pub parts: BTreeMap<OrbitLabel, Partition>,
}

impl XPartition {
    pub fn new(kind: OrbitKind, parts: BTreeMap<OrbitLabel, Partition>) -> Self {
        let mut parts = parts;
        parts.retain(|_, p| !p.0.is_empty());
        debug_assert!(parts.keys().all(|o| o.kind == kind));
        XPartition { kind, parts }
    }

    /// `||lambda|| = sum |x| * |lambda(x)|`.
    pub fn norm(&self) -> u32 {
        self.parts
            .iter()
            .map(|(o, p)| o.size * p.size())
            .sum()
    }

    /// `ht(lambda) = max length of a part`.
    pub fn height(&self) -> usize {
        self.parts.values().map(|p| p.length()).max().unwrap_or(0)
    }

    pub fn get(&self, o: &OrbitLabel) -> Option<&Partition> {
        self.parts.get(o)
    }

    pub fn conjugate(&self, ctx: &OrbitContext) -> XPartition {
        let parts = self
            .parts
            .iter()
            .map(|(o, p)| (ctx.conjugate_orbit(o), p.clone()))
            .collect();
        XPartition::new(self.kind, parts)
    }

    pub fn is_self_conjugate(&self, ctx: &OrbitContext) -> bool {
        self.conjugate(ctx) == *self
    }

    pub fn to_json(&self, ctx: &OrbitContext) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind.name(),
            "parts": self.parts.iter().map(|(o, p)| serde_json::json!({
                "orbit": ctx.serialize_orbit(o),
                "partition": p.0,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Every X-partition of total weight `n` over the size-`<= n` orbits of the
/// given kind, canonically ordered.
pub fn enumerate_xpartitions(ctx: &OrbitContext, kind: OrbitKind, n: u32) -> Vec<XPartition> {
    let orbits = ctx.enumerate(kind);
    let mut out = Vec::new();
    let mut acc: Vec<(OrbitLabel, Partition)> = Vec::new();
    fn rec(
        kind: OrbitKind,
        orbits: &[OrbitLabel],
        remaining: u32,
        acc: &mut Vec<(OrbitLabel, Partition)>,
        out: &mut Vec<XPartition>,
    ) {
        if remaining == 0 {
            out.push(XPartition::new(kind, acc.iter().cloned().collect()));
            return;
        }
        let Some(o) = orbits.first() else { return };
        let s = o.size;
        for w in (0..=remaining / s).rev() {
            if w == 0 {
                rec(kind, &orbits[1..], remaining, acc, out);
                continue;
            }
            for p in Partition::all(w) {
                acc.push((o.clone(), p));
                rec(kind, &orbits[1..], remaining - w * s, acc, out);
                acc.pop();
            }
        }
    }
    rec(kind, &orbits, n, &mut acc, &mut out);
    out.sort();
    out
}

/// The size-, height- and reality-preserving bijection from self-conjugate
/// labels over the plain character orbits to self-conjugate labels over the
/// twisted ones: the orbit through exponent `k` maps to the twisted orbit
/// through `k` in the common ambient group.
pub fn r_bijection(ctx: &OrbitContext, lambda: &XPartition) -> Result<XPartition> {
    assert_eq!(lambda.kind, OrbitKind::Theta);
    if !lambda.is_self_conjugate(ctx) {
        return Err(Error::NotSelfConjugate);
    }
    let mut parts: BTreeMap<OrbitLabel, Partition> = BTreeMap::new();
    for (o, p) in &lambda.parts {
        for &k in &ctx.orbit_exponents(OrbitKind::Theta, o.exp_min) {
            let img = ctx.orbit_of_exponent(OrbitKind::ThetaTilde, k);
            if let Some(prev) = parts.get(&img) {
                if prev != p {
                    return Err(Error::Internal(format!(
                        "bijection conflict at exponent {k}"
                    )));
                }
            } else {
                parts.insert(img, p.clone());
            }
        }
    }
    let nu = XPartition::new(OrbitKind::ThetaTilde, parts);
    debug_assert_eq!(nu.norm(), lambda.norm());
    debug_assert_eq!(nu.height(), lambda.height());
    debug_assert!(nu.is_self_conjugate(ctx));
    Ok(nu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyorb::count_self_reciprocal;

    #[test]
    fn partition_statistics() {
        let p = Partition::new(vec![1, 2, 2]);
        assert_eq!(p.0, vec![2, 2, 1]);
        assert_eq!(p.size(), 5);
        assert_eq!(p.length(), 3);
        assert_eq!(p.n_stat(), 2 + 2 * 1);
        assert_eq!(p.transpose().0, vec![3, 2]);
        assert_eq!(p.transpose().transpose(), p);
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::new(vec![2, 1]).n_stat(), 1);
    }

    #[test]
    fn xpartition_counts_are_class_counts() {
        // weight 1: the single class of the trivial group over F_2
        let ctx = OrbitContext::new(2, 1).unwrap();
        assert_eq!(enumerate_xpartitions(&ctx, OrbitKind::Phi, 1).len(), 1);
        // weight 2 over F_2: three classes of the order-6 group
        let ctx = OrbitContext::new(2, 2).unwrap();
        assert_eq!(enumerate_xpartitions(&ctx, OrbitKind::Phi, 2).len(), 3);
        // plain class and character counts agree at (3, 2)
        let ctx = OrbitContext::new(2, 3).unwrap();
        assert_eq!(
            enumerate_xpartitions(&ctx, OrbitKind::Phi, 3).len(),
            enumerate_xpartitions(&ctx, OrbitKind::Theta, 3).len()
        );
    }

    #[test]
    fn conjugation_is_involution_preserving_stats() {
        for (n, q) in [(3usize, 2u64), (2, 3), (3, 3)] {
            let ctx = OrbitContext::new(q, n).unwrap();
            for kind in [OrbitKind::Theta, OrbitKind::ThetaTilde, OrbitKind::Phi] {
                for l in enumerate_xpartitions(&ctx, kind, n as u32) {
                    let c = l.conjugate(&ctx);
                    assert_eq!(c.conjugate(&ctx), l);
                    assert_eq!(c.norm(), l.norm());
                    assert_eq!(c.height(), l.height());
                    let n1: u64 = l.parts.values().map(|p| p.n_stat()).sum();
                    let n2: u64 = c.parts.values().map(|p| p.n_stat()).sum();
                    assert_eq!(n1, n2);
                }
            }
        }
    }

    #[test]
    fn self_conjugate_height1_count_is_self_reciprocal_count() {
        for (n, q) in [(2usize, 2u64), (3, 2), (2, 3), (3, 3)] {
            let ctx = OrbitContext::new(q, n).unwrap();
            let count = enumerate_xpartitions(&ctx, OrbitKind::Theta, n as u32)
                .into_iter()
                .filter(|l| l.height() == 1 && l.is_self_conjugate(&ctx))
                .count() as u64;
            assert_eq!(count, count_self_reciprocal(n, q), "(n,q)=({n},{q})");
        }
    }

    #[test]
    fn bijection_fixes_trivial_label() {
        let ctx = OrbitContext::new(3, 3).unwrap();
        let triv_theta = ctx.orbit_of_exponent(OrbitKind::Theta, 0);
        let lambda = XPartition::new(
            OrbitKind::Theta,
            [(triv_theta, Partition::new(vec![3]))].into_iter().collect(),
        );
        let nu = r_bijection(&ctx, &lambda).unwrap();
        let triv_tilde = ctx.orbit_of_exponent(OrbitKind::ThetaTilde, 0);
        assert_eq!(nu.parts.len(), 1);
        assert_eq!(nu.get(&triv_tilde).unwrap().0, vec![3]);
    }

    #[test]
    fn bijection_is_bijective_on_self_conjugate_labels() {
        for (n, q) in [(2usize, 3u64), (3, 3), (3, 2)] {
            let ctx = OrbitContext::new(q, n).unwrap();
            let sources: Vec<XPartition> = enumerate_xpartitions(&ctx, OrbitKind::Theta, n as u32)
                .into_iter()
                .filter(|l| l.is_self_conjugate(&ctx))
                .collect();
            let targets: Vec<XPartition> =
                enumerate_xpartitions(&ctx, OrbitKind::ThetaTilde, n as u32)
                    .into_iter()
                    .filter(|l| l.is_self_conjugate(&ctx))
                    .collect();
            let mut images: Vec<XPartition> = sources
                .iter()
                .map(|l| r_bijection(&ctx, l).unwrap())
                .collect();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), sources.len(), "injectivity at ({n},{q})");
            let mut t = targets.clone();
            t.sort();
            assert_eq!(images, t, "surjectivity at ({n},{q})");
        }
    }

    #[test]
    fn height1_self_conjugate_images_at_3_3() {
        let ctx = OrbitContext::new(3, 3).unwrap();
        let inputs: Vec<XPartition> = enumerate_xpartitions(&ctx, OrbitKind::Theta, 3)
            .into_iter()
            .filter(|l| l.is_self_conjugate(&ctx) && l.height() == 1)
            .collect();
        assert_eq!(inputs.len(), 6);
        for l in inputs {
            let nu = r_bijection(&ctx, &l).unwrap();
            assert_eq!(nu.height(), 1);
            assert!(nu.is_self_conjugate(&ctx));
        }
    }

    #[test]
    fn bijection_rejects_non_self_conjugate() {
        let ctx = OrbitContext::new(3, 2).unwrap();
        let bad = enumerate_xpartitions(&ctx, OrbitKind::Theta, 2)
            .into_iter()
            .find(|l| !l.is_self_conjugate(&ctx))
            .unwrap();
        assert!(r_bijection(&ctx, &bad).is_err());
    }
}
