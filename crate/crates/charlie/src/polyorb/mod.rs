//! Orbits of the Frobenius maps on the multiplicative group of the
//! algebraic closure and on its character group, together with the
//! polynomial machinery they need.
//!
//! For a fixed `(q, n)` everything happens inside one ambient cyclic group
//! `Z/(q^{2L} - 1)` with `L = lcm(1..n)`, realized as the unit group of the
//! tower `F_{q^{2L}}`.  The four orbit kinds are
//!
//! * `Phi` / `Theta`: orbits of multiplication by `q` (classes of the
//!   general linear group / its characters),
//! * `PhiTilde` / `ThetaTilde`: orbits of multiplication by `-q` (the
//!   unitary analogues).
//!
//! `Phi` orbits also carry the monic polynomial over `F_q` whose roots form
//! the orbit; `PhiTilde` orbits carry the polynomial over `F_{q^2}` of one
//! square-Frobenius orbit inside them.

pub mod poly;

use std::collections::HashSet;
use std::sync::Arc;

use num_integer::Integer;

use crate::algebra::fp::prime_power;
use crate::algebra::Tower;
use crate::{Error, Result};

pub use poly::{all_monic_polys, MonicPoly};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum OrbitKind {
    Phi,
    PhiTilde,
    Theta,
    ThetaTilde,
}

impl OrbitKind {
    pub fn is_twisted(self) -> bool {
        matches!(self, OrbitKind::PhiTilde | OrbitKind::ThetaTilde)
    }

    pub fn is_polynomial(self) -> bool {
        matches!(self, OrbitKind::Phi | OrbitKind::PhiTilde)
    }

    pub fn name(self) -> &'static str {
        match self {
            OrbitKind::Phi => "phi",
            OrbitKind::PhiTilde => "phi~",
            OrbitKind::Theta => "theta",
            OrbitKind::ThetaTilde => "theta~",
        }
    }
}

/// One orbit.  Ordering is by (size, least exponent), the canonical order
/// used for serialized labels.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OrbitLabel {
    pub size: u32,
    /// Least exponent of the orbit in the ambient group.
    pub exp_min: u64,
    pub kind: OrbitKind,
    /// Orbit polynomial coefficients (tower encodings) for Phi kinds.
    pub poly: Option<Vec<u64>>,
}

/// Shared data for all orbit computations at a fixed `(q, n)`.
pub struct OrbitContext {
    pub q: u64,
    pub p: u64,
    pub e: u32,
    pub n: usize,
    /// `lcm(1..n)`.
    pub l: u32,
    pub tower: Arc<Tower>,
    /// `q^{2L} - 1`, the ambient cyclic group order (= tower units).
    pub ambient: u64,
}

impl OrbitContext {
    pub fn new(q: u64, n: usize) -> Result<OrbitContext> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrime(q))?;
        assert!(n >= 1);
        let l = (1..=n as u64).fold(1u64, |a, b| a.lcm(&b)) as u32;
        let degree = 2 * e * l;
        if (p as u128).pow(degree) > 1 << 22 {
            return Err(Error::ResourceBound(format!(
                "ambient field F_{{{q}^{}}} too large",
                2 * l
            )));
        }
        let tower = Tower::shared(p, degree);
        let ambient = tower.units;
        Ok(OrbitContext {
            q,
            p,
            e,
            n,
            l,
            tower,
            ambient,
        })
    }

    fn multiplier(&self, kind: OrbitKind) -> u64 {
        let q = self.q % self.ambient;
        if kind.is_twisted() {
            (self.ambient - q) % self.ambient
        } else {
            q
        }
    }

    /// Exponents of the orbit of `k`, starting at `k`.
    pub fn orbit_exponents(&self, kind: OrbitKind, k: u64) -> Vec<u64> {
        let m = self.multiplier(kind) as u128;
        let amb = self.ambient as u128;
        let k = k % self.ambient;
        let mut v = vec![k];
        let mut cur = (k as u128 * m % amb) as u64;
        while cur != k {
            v.push(cur);
            cur = (cur as u128 * m % amb) as u64;
        }
        v
    }

    /// The orbit label containing exponent `k`.
    pub fn orbit_of_exponent(&self, kind: OrbitKind, k: u64) -> OrbitLabel {
        let exps = self.orbit_exponents(kind, k);
        let exp_min = *exps.iter().min().unwrap();
        let size = exps.len() as u32;
        let poly = if kind.is_polynomial() {
            Some(self.orbit_poly(kind, exp_min).c)
        } else {
            None
        };
        OrbitLabel {
            size,
            exp_min,
            kind,
            poly,
        }
    }

    /// Subfield degree over the prime field of the natural coefficient
    /// field: `F_q` for plain kinds, `F_{q^2}` for twisted kinds.
    pub fn coeff_sub(&self, kind: OrbitKind) -> u32 {
        if kind.is_twisted() {
            2 * self.e
        } else {
            self.e
        }
    }

    /// The monic polynomial attached to a Phi-kind orbit: for `Phi` the
    /// minimal polynomial over `F_q` of the orbit elements; for `PhiTilde`
    /// the minimal polynomial over `F_{q^2}` of the square-Frobenius orbit
    /// of the least exponent.
    pub fn orbit_poly(&self, kind: OrbitKind, exp_min: u64) -> MonicPoly {
        let t = &self.tower;
        let roots: Vec<u64> = match kind {
            OrbitKind::Phi => self
                .orbit_exponents(kind, exp_min)
                .iter()
                .map(|&k| t.exp_gen(k))
                .collect(),
            OrbitKind::PhiTilde => {
                // orbit of exp_min under multiplication by q^2
                let q2 = (self.q as u128 * self.q as u128 % self.ambient as u128) as u64;
                let mut v = vec![exp_min];
                let mut cur = (exp_min as u128 * q2 as u128 % self.ambient as u128) as u64;
                while cur != exp_min {
                    v.push(cur);
                    cur = (cur as u128 * q2 as u128 % self.ambient as u128) as u64;
                }
                v.iter().map(|&k| t.exp_gen(k)).collect()
            }
            _ => panic!("coset kinds carry no polynomial"),
        };
        let mut c = vec![1u64];
        for r in roots {
            c = poly::tp_mul(t, &c, &[t.neg(r), 1]);
        }
        MonicPoly::new(t.clone(), self.coeff_sub(kind), c)
    }

    /// All orbits of size at most `n`, canonically sorted.
    pub fn enumerate(&self, kind: OrbitKind) -> Vec<OrbitLabel> {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut out = Vec::new();
        for s in 1..=self.n as u32 {
            // exponents fixed by the s-fold map form the subgroup of order m
            let m = if kind.is_twisted() && s % 2 == 1 {
                (self.q as u128).pow(s) + 1
            } else {
                (self.q as u128).pow(s) - 1
            } as u64;
            debug_assert_eq!(self.ambient % m, 0);
            let step = self.ambient / m;
            for j in 0..m {
                let k = j * step;
                let exps = self.orbit_exponents(kind, k);
                if exps.len() > self.n {
                    continue;
                }
                let exp_min = *exps.iter().min().unwrap();
                if seen.insert(exp_min) {
                    out.push(self.orbit_of_exponent(kind, exp_min));
                }
            }
        }
        out.sort();
        out
    }

    /// The orbit of the inverse exponent (reciprocal roots / inverse
    /// characters).  An involution preserving size.
    pub fn conjugate_orbit(&self, o: &OrbitLabel) -> OrbitLabel {
        let k = (self.ambient - o.exp_min % self.ambient) % self.ambient;
        self.orbit_of_exponent(o.kind, k)
    }

    pub fn serialize_orbit(&self, o: &OrbitLabel) -> serde_json::Value {
        let mut v = serde_json::json!({
            "kind": o.kind.name(),
            "size": o.size,
            "coset_min": o.exp_min,
            "ambient": self.ambient,
        });
        if let Some(poly) = &o.poly {
            v["poly"] = serde_json::json!(poly);
        }
        v
    }
}

/// Number of monic degree-`n` polynomials over `F_q` with nonzero constant
/// term fixed by the reciprocal involution, by the closed-form case split:
/// `2q^m` for odd q and n = 2m+1, `q^m + q^{m-1}` for odd q and n = 2m,
/// `q^{floor(n/2)}` for even q.
pub fn count_self_reciprocal(n: usize, q: u64) -> u64 {
    assert!(n >= 1);
    if q % 2 == 0 {
        q.pow((n / 2) as u32)
    } else if n % 2 == 1 {
        2 * q.pow((n / 2) as u32)
    } else {
        let m = (n / 2) as u32;
        q.pow(m) + q.pow(m - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_reciprocal_closed_form_values() {
        assert_eq!(count_self_reciprocal(3, 3), 6);
        assert_eq!(count_self_reciprocal(2, 3), 4);
        assert_eq!(count_self_reciprocal(3, 2), 2);
    }

    #[test]
    fn phi_orbits_at_2_2_are_the_irreducibles() {
        let ctx = OrbitContext::new(2, 2).unwrap();
        let orbits = ctx.enumerate(OrbitKind::Phi);
        // {t+1, t^2+t+1}
        assert_eq!(orbits.len(), 2);
        assert_eq!(orbits[0].size, 1);
        assert_eq!(orbits[0].poly.as_ref().unwrap(), &vec![1, 1]);
        assert_eq!(orbits[1].size, 2);
        assert_eq!(orbits[1].poly.as_ref().unwrap(), &vec![1, 1, 1]);
    }

    #[test]
    fn theta_orbits_at_2_2() {
        // ambient = 2^4 - 1 = 15; characters of F_2 and F_4 are the
        // multiples of 15 and 5; orbits under x2: {0}, {5,10}.
        let ctx = OrbitContext::new(2, 2).unwrap();
        let orbits = ctx.enumerate(OrbitKind::Theta);
        assert_eq!(orbits.len(), 2);
        assert_eq!((orbits[0].size, orbits[0].exp_min), (1, 0));
        assert_eq!((orbits[1].size, orbits[1].exp_min), (2, 5));
    }

    #[test]
    fn theta_tilde_orbits_at_2_2() {
        // multiplication by -2 fixes every multiple of 5 mod 15: three
        // singleton orbits, the avatar of the three characters of the
        // order-3 unitary torus.
        let ctx = OrbitContext::new(2, 2).unwrap();
        let orbits = ctx.enumerate(OrbitKind::ThetaTilde);
        assert_eq!(orbits.len(), 3);
        assert!(orbits.iter().all(|o| o.size == 1));
        let mins: Vec<u64> = orbits.iter().map(|o| o.exp_min).collect();
        assert_eq!(mins, vec![0, 5, 10]);
    }

    #[test]
    fn phi_orbit_count_matches_irreducible_count() {
        for (n, q) in [(2usize, 2u64), (2, 3), (3, 2), (3, 3), (2, 4), (2, 5)] {
            let ctx = OrbitContext::new(q, n).unwrap();
            let orbits = ctx.enumerate(OrbitKind::Phi);
            for d in 1..=n {
                let by_orbit = orbits.iter().filter(|o| o.size == d as u32).count();
                let direct = all_monic_polys(&ctx.tower, ctx.e, d, true)
                    .into_iter()
                    .filter(|f| f.is_irreducible())
                    .count();
                assert_eq!(by_orbit, direct, "n={n} q={q} d={d}");
            }
            // every Phi orbit polynomial is irreducible with nonzero constant
            for o in &orbits {
                let f = ctx.orbit_poly(OrbitKind::Phi, o.exp_min);
                assert!(f.is_irreducible());
                assert!(f.constant_term() != 0);
                assert_eq!(f.degree() as u32, o.size);
            }
        }
    }

    #[test]
    fn orbit_counts_pair_up() {
        for (n, q) in [(2usize, 2u64), (3, 2), (2, 3), (3, 3)] {
            let ctx = OrbitContext::new(q, n).unwrap();
            let phi = ctx.enumerate(OrbitKind::Phi);
            let theta = ctx.enumerate(OrbitKind::Theta);
            let phit = ctx.enumerate(OrbitKind::PhiTilde);
            let thetat = ctx.enumerate(OrbitKind::ThetaTilde);
            for d in 1..=n as u32 {
                assert_eq!(
                    phi.iter().filter(|o| o.size == d).count(),
                    theta.iter().filter(|o| o.size == d).count()
                );
                assert_eq!(
                    phit.iter().filter(|o| o.size == d).count(),
                    thetat.iter().filter(|o| o.size == d).count()
                );
            }
        }
    }

    #[test]
    fn conjugate_orbit_is_involution_preserving_size() {
        let ctx = OrbitContext::new(3, 3).unwrap();
        for kind in [
            OrbitKind::Phi,
            OrbitKind::PhiTilde,
            OrbitKind::Theta,
            OrbitKind::ThetaTilde,
        ] {
            for o in ctx.enumerate(kind) {
                let c = ctx.conjugate_orbit(&o);
                assert_eq!(c.size, o.size);
                assert_eq!(ctx.conjugate_orbit(&c), o);
            }
        }
        // trivial orbit is self-conjugate
        let triv = ctx.orbit_of_exponent(OrbitKind::Theta, 0);
        assert_eq!(ctx.conjugate_orbit(&triv), triv);
    }

    #[test]
    fn conjugate_phi_orbit_matches_reciprocal() {
        let ctx = OrbitContext::new(3, 2).unwrap();
        for o in ctx.enumerate(OrbitKind::Phi) {
            let c = ctx.conjugate_orbit(&o);
            let f = ctx.orbit_poly(OrbitKind::Phi, o.exp_min);
            let fc = ctx.orbit_poly(OrbitKind::Phi, c.exp_min);
            assert_eq!(f.reciprocal().unwrap(), fc);
        }
    }

    #[test]
    fn orbit_union_identity_between_plain_and_twisted() {
        // [x]_F union [x^{-1}]_F = [x]_{F~} union [x^{-1}]_{F~}
        for (n, q) in [(2usize, 3u64), (3, 2)] {
            let ctx = OrbitContext::new(q, n).unwrap();
            let all: Vec<u64> = ctx
                .enumerate(OrbitKind::Theta)
                .iter()
                .flat_map(|o| ctx.orbit_exponents(OrbitKind::Theta, o.exp_min))
                .collect();
            for k in all {
                let neg = (ctx.ambient - k % ctx.ambient) % ctx.ambient;
                let mut f: Vec<u64> = ctx
                    .orbit_exponents(OrbitKind::Theta, k)
                    .into_iter()
                    .chain(ctx.orbit_exponents(OrbitKind::Theta, neg))
                    .collect();
                let mut ft: Vec<u64> = ctx
                    .orbit_exponents(OrbitKind::ThetaTilde, k)
                    .into_iter()
                    .chain(ctx.orbit_exponents(OrbitKind::ThetaTilde, neg))
                    .collect();
                f.sort_unstable();
                f.dedup();
                ft.sort_unstable();
                ft.dedup();
                assert_eq!(f, ft, "orbit union mismatch at k={k}, (n,q)=({n},{q})");
            }
        }
    }

    #[test]
    fn self_reciprocal_count_exhaustive() {
        for q in [2u64, 3, 4, 5] {
            let (p, e) = prime_power(q).unwrap();
            let t = Tower::shared(p, 4 * e);
            for n in 1..=4usize {
                let direct = all_monic_polys(&t, e, n, true)
                    .into_iter()
                    .filter(|f| &f.reciprocal().unwrap() == f)
                    .count() as u64;
                assert_eq!(direct, count_self_reciprocal(n, q), "n={n} q={q}");
            }
        }
    }
}
