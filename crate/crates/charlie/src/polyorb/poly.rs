//! Polynomials with coefficients in a subfield of a shared tower.
//!
//! Coefficients are tower encodings.  The public face is `MonicPoly`;
//! the free `tp_*` helpers operate on raw coefficient vectors (low degree
//! first, trimmed) and are shared with the factorization routines.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Tower;
use crate::{Error, Result};

pub(crate) fn tp_trim(c: &mut Vec<u64>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

pub(crate) fn tp_deg(c: &[u64]) -> usize {
    c.len().saturating_sub(1)
}

pub(crate) fn tp_add(t: &Tower, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut c: Vec<u64> = (0..n)
        .map(|i| {
            t.add(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
            )
        })
        .collect();
    tp_trim(&mut c);
    c
}

pub(crate) fn tp_sub(t: &Tower, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut c: Vec<u64> = (0..n)
        .map(|i| {
            t.sub(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
            )
        })
        .collect();
    tp_trim(&mut c);
    c
}

pub(crate) fn tp_mul(t: &Tower, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                c[i + j] = t.add(c[i + j], t.mul(x, y));
            }
        }
    }
    tp_trim(&mut c);
    c
}

pub(crate) fn tp_scale(t: &Tower, a: &[u64], s: u64) -> Vec<u64> {
    let mut c: Vec<u64> = a.iter().map(|&x| t.mul(x, s)).collect();
    tp_trim(&mut c);
    c
}

pub(crate) fn tp_divrem(t: &Tower, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.len() < b.len() {
        return (vec![], a.to_vec());
    }
    let lead_inv = t.inv(*b.last().unwrap());
    let mut rem = a.to_vec();
    let mut quo = vec![0u64; a.len() - b.len() + 1];
    for k in (0..quo.len()).rev() {
        let top = rem[k + b.len() - 1];
        if top == 0 {
            continue;
        }
        let f = t.mul(top, lead_inv);
        quo[k] = f;
        for (j, &y) in b.iter().enumerate() {
            rem[k + j] = t.sub(rem[k + j], t.mul(f, y));
        }
    }
    tp_trim(&mut quo);
    tp_trim(&mut rem);
    (quo, rem)
}

pub(crate) fn tp_rem(t: &Tower, a: &[u64], b: &[u64]) -> Vec<u64> {
    tp_divrem(t, a, b).1
}

/// Monic gcd.
pub(crate) fn tp_gcd(t: &Tower, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let r = tp_rem(t, &a, &b);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        let inv = t.inv(*a.last().unwrap());
        tp_scale(t, &a, inv)
    }
}

pub(crate) fn tp_pow_mod(t: &Tower, base: &[u64], e: &BigUint, m: &[u64]) -> Vec<u64> {
    let mut base = tp_rem(t, base, m);
    let mut acc = tp_rem(t, &[1], m);
    let mut e = e.clone();
    let two = BigUint::from(2u32);
    while !e.is_zero() {
        if (&e % &two).is_one() {
            acc = tp_rem(t, &tp_mul(t, &acc, &base), m);
        }
        base = tp_rem(t, &tp_mul(t, &base, &base), m);
        e >>= 1;
    }
    acc
}

pub(crate) fn tp_derivative(t: &Tower, a: &[u64]) -> Vec<u64> {
    let mut c: Vec<u64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &x)| {
            // multiply by the integer i in characteristic p
            let mut acc = 0u64;
            for _ in 0..(i as u64 % t.p) {
                acc = t.add(acc, x);
            }
            acc
        })
        .collect();
    tp_trim(&mut c);
    c
}

pub(crate) fn tp_eval(t: &Tower, a: &[u64], x: u64) -> u64 {
    let mut acc = 0u64;
    for &v in a.iter().rev() {
        acc = t.add(t.mul(acc, x), v);
    }
    acc
}

/// A monic polynomial with coefficients in the subfield `F_{p^sub}` of a
/// shared tower.  `c` includes the leading 1 and has length `degree + 1`.
#[derive(Clone)]
pub struct MonicPoly {
    pub tower: Arc<Tower>,
    pub sub: u32,
    pub c: Vec<u64>,
}

impl PartialEq for MonicPoly {
    fn eq(&self, other: &Self) -> bool {
        self.tower.p == other.tower.p
            && self.tower.degree == other.tower.degree
            && self.sub == other.sub
            && self.c == other.c
    }
}
impl Eq for MonicPoly {}

impl std::fmt::Debug for MonicPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MonicPoly(F_{{{}^{}}}, {:?})", self.tower.p, self.sub, self.c)
    }
}

impl MonicPoly {
    pub fn new(tower: Arc<Tower>, sub: u32, c: Vec<u64>) -> Self {
        assert_eq!(c.last(), Some(&1), "not monic");
        assert!(
            c.iter().all(|&x| tower.in_subfield(x, sub)),
            "coefficient outside subfield"
        );
        MonicPoly { tower, sub, c }
    }

    /// The field order of the coefficient field.
    pub fn field_order(&self) -> u64 {
        self.tower.subfield_order(self.sub)
    }

    pub fn degree(&self) -> usize {
        self.c.len() - 1
    }

    pub fn constant_term(&self) -> u64 {
        self.c[0]
    }

    pub fn eval(&self, x: u64) -> u64 {
        tp_eval(&self.tower, &self.c, x)
    }

    pub fn mul(&self, other: &MonicPoly) -> MonicPoly {
        assert_eq!(self.sub, other.sub);
        MonicPoly {
            tower: self.tower.clone(),
            sub: self.sub,
            c: tp_mul(&self.tower, &self.c, &other.c),
        }
    }

    pub fn div_exact(&self, other: &MonicPoly) -> MonicPoly {
        let (q, r) = tp_divrem(&self.tower, &self.c, &other.c);
        assert!(r.is_empty(), "non-exact division");
        MonicPoly {
            tower: self.tower.clone(),
            sub: self.sub,
            c: q,
        }
    }

    pub fn divides(&self, other: &MonicPoly) -> bool {
        tp_rem(&self.tower, &other.c, &self.c).is_empty()
    }

    /// The reciprocal `a_0^{-1} t^n f(1/t)`: coefficients reversed and
    /// scaled so the result stays monic.  Requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<MonicPoly> {
        let a0 = self.constant_term();
        if a0 == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = self.tower.inv(a0);
        let c: Vec<u64> = self
            .c
            .iter()
            .rev()
            .map(|&x| self.tower.mul(x, inv))
            .collect();
        Ok(MonicPoly {
            tower: self.tower.clone(),
            sub: self.sub,
            c,
        })
    }

    /// Frobenius criterion over the coefficient field `F_Q`.
    pub fn is_irreducible(&self) -> bool {
        let n = self.degree();
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let t = &self.tower;
        let q = BigUint::from(self.field_order());
        let x = vec![0u64, 1];
        // x^{Q^k} mod f by iterated Q-th powers
        let mut frob = Vec::with_capacity(n + 1);
        let mut cur = tp_rem(t, &x, &self.c);
        for _ in 0..n {
            cur = tp_pow_mod(t, &cur, &q, &self.c);
            frob.push(cur.clone());
        }
        if frob[n - 1] != tp_rem(t, &x, &self.c) {
            return false;
        }
        for l in crate::algebra::fp::distinct_prime_factors(n as u64) {
            let k = n / l as usize;
            let g = tp_gcd(t, &tp_sub(t, &frob[k - 1], &x), &self.c);
            if tp_deg(&g) > 0 || g.is_empty() {
                return false;
            }
        }
        true
    }

    /// Full factorization into monic irreducibles with multiplicities,
    /// by distinct-degree then equal-degree (Cantor-Zassenhaus) splitting.
    /// The probabilistic splits use a fixed seed, so results are stable.
    pub fn factor(&self) -> Vec<(MonicPoly, u32)> {
        if self.degree() == 0 {
            return vec![];
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x0DDB1A5E5);
        let mut distinct = Vec::new();
        self.distinct_factors(&mut distinct, &mut rng);
        distinct.sort_by(|a, b| (a.degree(), &a.c).cmp(&(b.degree(), &b.c)));
        let mut out = Vec::new();
        let mut rest = self.clone();
        for f in distinct {
            let mut m = 0;
            while f.divides(&rest) {
                rest = rest.div_exact(&f);
                m += 1;
            }
            debug_assert!(m > 0);
            out.push((f, m));
        }
        debug_assert_eq!(rest.degree(), 0);
        out
    }

    fn with(&self, c: Vec<u64>) -> MonicPoly {
        MonicPoly {
            tower: self.tower.clone(),
            sub: self.sub,
            c,
        }
    }

    fn distinct_factors(&self, out: &mut Vec<MonicPoly>, rng: &mut ChaCha8Rng) {
        let t = &self.tower;
        if self.degree() == 0 {
            return;
        }
        let der = tp_derivative(t, &self.c);
        if der.is_empty() {
            // f = g(t^p); p-th roots of the coefficients give g
            let p = t.p as usize;
            let q = self.field_order();
            let root_exp = q / t.p; // a^{Q/p} is the p-th root in F_Q
            let g: Vec<u64> = self
                .c
                .iter()
                .step_by(p)
                .map(|&a| t.pow(a, root_exp))
                .collect();
            self.with(g).distinct_factors(out, rng);
            return;
        }
        let g = tp_gcd(t, &self.c, &der);
        if tp_deg(&g) > 0 {
            self.with(g.clone()).distinct_factors(out, rng);
            let sf = self.div_exact(&self.with(g));
            sf.merge_squarefree_factors(out, rng);
        } else {
            self.merge_squarefree_factors(out, rng);
        }
    }

    fn merge_squarefree_factors(&self, out: &mut Vec<MonicPoly>, rng: &mut ChaCha8Rng) {
        for f in self.factor_squarefree(rng) {
            if !out.contains(&f) {
                out.push(f);
            }
        }
    }

    /// Distinct-degree decomposition of a squarefree input, with each
    /// degree bucket split by Cantor-Zassenhaus.
    fn factor_squarefree(&self, rng: &mut ChaCha8Rng) -> Vec<MonicPoly> {
        let t = &self.tower;
        let q = BigUint::from(self.field_order());
        let x = vec![0u64, 1];
        let mut out = Vec::new();
        let mut rest = self.c.clone();
        let mut h = tp_rem(t, &x, &rest);
        let mut d = 0usize;
        while tp_deg(&rest) > 0 {
            d += 1;
            if 2 * d > tp_deg(&rest) {
                out.push(self.with(rest.clone()));
                break;
            }
            h = tp_pow_mod(t, &h, &q, &rest);
            let g = tp_gcd(t, &tp_sub(t, &h, &x), &rest);
            if tp_deg(&g) > 0 {
                self.equal_degree_split(&self.with(g.clone()), d, rng, &mut out);
                rest = tp_divrem(t, &rest, &g).0;
                h = tp_rem(t, &h, &rest);
            }
        }
        out
    }

    /// Cantor-Zassenhaus split of a product of distinct degree-`d`
    /// irreducibles.
    fn equal_degree_split(
        &self,
        f: &MonicPoly,
        d: usize,
        rng: &mut ChaCha8Rng,
        out: &mut Vec<MonicPoly>,
    ) {
        let t = &self.tower;
        if f.degree() == d {
            out.push(f.clone());
            return;
        }
        let elems = t.subfield_elements(self.sub);
        loop {
            // random polynomial of degree < deg f
            let r: Vec<u64> = {
                let mut c: Vec<u64> = (0..f.degree())
                    .map(|_| elems[rng.gen_range(0..elems.len())])
                    .collect();
                tp_trim(&mut c);
                c
            };
            if r.is_empty() {
                continue;
            }
            let g = if t.p == 2 {
                // trace map splitting in characteristic 2
                let k = self.sub as usize * d;
                let mut tr = tp_rem(t, &r, &f.c);
                let mut sq = tr.clone();
                for _ in 1..k {
                    sq = tp_rem(t, &tp_mul(t, &sq, &sq), &f.c);
                    tr = tp_add(t, &tr, &sq);
                }
                tp_gcd(t, &tr, &f.c)
            } else {
                let e = (BigUint::from(self.field_order()).pow(d as u32)
                    - BigUint::from(1u32))
                    / BigUint::from(2u32);
                let s = tp_pow_mod(t, &r, &e, &f.c);
                tp_gcd(t, &tp_sub(t, &s, &[1]), &f.c)
            };
            let dg = tp_deg(&g);
            if !g.is_empty() && dg > 0 && dg < f.degree() {
                let a = self.with(g.clone());
                let b = f.div_exact(&a);
                self.equal_degree_split(&a, d, rng, out);
                self.equal_degree_split(&b, d, rng, out);
                return;
            }
        }
    }
}

/// All monic polynomials of the given degree over `F_{p^sub}`, optionally
/// restricted to nonzero constant term.  Small fields only (test support).
pub fn all_monic_polys(
    tower: &Arc<Tower>,
    sub: u32,
    degree: usize,
    nonzero_constant: bool,
) -> Vec<MonicPoly> {
    let elems = tower.subfield_elements(sub);
    let q = elems.len();
    let mut out = Vec::new();
    let total = (q as u64).pow(degree as u32);
    for mut idx in 0..total {
        let mut c = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            c.push(elems[(idx % q as u64) as usize]);
            idx /= q as u64;
        }
        if nonzero_constant && degree > 0 && c[0] == 0 {
            continue;
        }
        c.push(1);
        out.push(MonicPoly::new(tower.clone(), sub, c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reciprocal_example_over_f3() {
        // t^2 + t + 2 over F_3 -> t^2 + 2t + 2
        let t = Tower::shared(3, 4);
        let f = MonicPoly::new(t.clone(), 1, vec![2, 1, 1]);
        let r = f.reciprocal().unwrap();
        assert_eq!(r.c, vec![2, 2, 1]);
        // t - 1 is self-reciprocal
        let g = MonicPoly::new(t.clone(), 1, vec![t.neg(1), 1]);
        assert_eq!(g.reciprocal().unwrap(), g);
    }

    #[test]
    fn reciprocal_is_involution() {
        for (p, d) in [(2u64, 4u32), (3, 4)] {
            let t = Tower::shared(p, d);
            for deg in 1..=3usize {
                for f in all_monic_polys(&t, 1, deg, true) {
                    assert_eq!(f.reciprocal().unwrap().reciprocal().unwrap(), f);
                }
            }
        }
    }

    #[test]
    fn reciprocal_rejects_zero_constant() {
        let t = Tower::shared(2, 4);
        let f = MonicPoly::new(t, 1, vec![0, 1, 1]);
        assert!(f.reciprocal().is_err());
    }

    #[test]
    fn irreducibility_against_root_and_factor_structure() {
        let t = Tower::shared(2, 4);
        // over F_4 (sub = 2)
        let elems = t.subfield_elements(2);
        for f in all_monic_polys(&t, 2, 2, false) {
            let has_root = elems.iter().any(|&x| f.eval(x) == 0);
            assert_eq!(f.is_irreducible(), !has_root, "{f:?}");
        }
    }

    #[test]
    fn factorization_roundtrip() {
        for (p, d, sub) in [(2u64, 4u32, 1u32), (2, 4, 2), (3, 4, 1), (5, 4, 2)] {
            let t = Tower::shared(p, d);
            for deg in 1..=4usize {
                for f in all_monic_polys(&t, sub, deg, false).into_iter().take(200) {
                    let fac = f.factor();
                    let mut prod = MonicPoly::new(t.clone(), sub, vec![1]);
                    for (g, m) in &fac {
                        assert!(g.is_irreducible(), "non-irreducible factor {g:?} of {f:?}");
                        for _ in 0..*m {
                            prod = prod.mul(g);
                        }
                    }
                    assert_eq!(prod, f, "factor product mismatch");
                }
            }
        }
    }

    #[test]
    fn factor_field_polynomial_counts_irreducibles() {
        // t^{q^d} - t factors into all monic irreducibles of degree | d.
        let counts = |q: u64, d: u32, t: &Arc<Tower>, sub: u32| -> usize {
            let qd = (q as u128).pow(d) as usize;
            let mut c = vec![0u64; qd + 1];
            c[1] = t.neg(1);
            c[qd] = 1;
            let f = MonicPoly::new(t.clone(), sub, c);
            f.factor()
                .into_iter()
                .filter(|(g, _)| g.degree() == d as usize)
                .count()
        };
        let t2 = Tower::shared(2, 4);
        assert_eq!(counts(2, 2, &t2, 1), 1); // x^2+x+1
        let t3 = Tower::shared(3, 4);
        assert_eq!(counts(3, 2, &t3, 1), 3);
        let t5 = Tower::shared(5, 4);
        assert_eq!(counts(5, 3, &t5, 1), 40);
    }
}
