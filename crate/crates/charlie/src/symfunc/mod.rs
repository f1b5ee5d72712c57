//! The symmetric-function engine: symmetric-group characters, Schur /
//! monomial / power-sum / Hall-Littlewood bases with exact parameters, and
//! the character-side to class-side variable transforms.
//!
//! The transforms rewrite a power sum in a character-orbit alphabet as a
//! root-of-unity-weighted sum of power sums in class-orbit alphabets:
//!
//! `p_n(Y^(theta)) = (-1)^{n|theta| - 1} sum_alpha xi(alpha)
//!     p_{n|theta| / |f_alpha|}(X^(f_alpha))`
//!
//! where `alpha` ranges over the fixed points of the `n|theta|`-th power of
//! the (twisted) Frobenius, `xi` is a character in the orbit `theta`, and
//! `f_alpha` is the class orbit of `alpha`.  Coefficients are tracked as
//! exponents of a root of unity of ambient order and only later mapped
//! into the working cyclotomic field.

pub mod hl;
pub mod mn;
pub mod mpoly;

pub use hl::{hall_littlewood, HlTransition};
pub use mn::{schur_to_power, sn_character, z_rho};
pub use mpoly::MPoly;

use crate::polyorb::{OrbitContext, OrbitKind, OrbitLabel};

/// One term of a transform: `zeta_A^{coeff_exp} * p_{p_index}(X^{(orbit)})`
/// with `A` the ambient group order of the context.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TransformTerm {
    pub orbit: OrbitLabel,
    pub p_index: u32,
    pub coeff_exp: u64,
}

/// Expand `p_n` of a character-orbit alphabet into class-orbit power sums.
/// Returns the global sign `(-1)^{n|theta| - 1}` and the term list.
pub fn variable_transform(
    ctx: &OrbitContext,
    theta: &OrbitLabel,
    n: u32,
) -> (i64, Vec<TransformTerm>) {
    variable_transform_with_rep(ctx, theta, theta.exp_min, n)
}

/// Same, with an explicit choice of representative exponent from the orbit
/// (the expansion does not depend on it; tests verify that).
pub fn variable_transform_with_rep(
    ctx: &OrbitContext,
    theta: &OrbitLabel,
    rep_exp: u64,
    n: u32,
) -> (i64, Vec<TransformTerm>) {
    let (class_kind, twisted) = match theta.kind {
        OrbitKind::Theta => (OrbitKind::Phi, false),
        OrbitKind::ThetaTilde => (OrbitKind::PhiTilde, true),
        _ => panic!("transform source must be a character orbit"),
    };
    let m = n * theta.size;
    // fixed points of the m-th power of the (twisted) Frobenius form the
    // subgroup of order q^m - (+-1)^m
    let fixed = if twisted && m % 2 == 1 {
        (ctx.q as u128).pow(m) + 1
    } else {
        (ctx.q as u128).pow(m) - 1
    } as u64;
    assert_eq!(
        ctx.ambient % fixed,
        0,
        "transform index {m} outside the ambient group"
    );
    let step = ctx.ambient / fixed;
    let sign = if m % 2 == 0 { -1 } else { 1 };
    let amb = ctx.ambient as u128;
    let mut terms = Vec::with_capacity(fixed as usize);
    for j in 0..fixed {
        let alpha_exp = j * step;
        let f_alpha = ctx.orbit_of_exponent(class_kind, alpha_exp);
        debug_assert_eq!(m % f_alpha.size, 0);
        let p_index = m / f_alpha.size;
        // the character lives at the orbit's own level and is evaluated
        // through the norm map: the exponent pairs with the index of
        // alpha inside the order-`fixed` subgroup, not with alpha itself;
        // the twisted norm x -> x^{((-q)^m - 1)/((-q)^s - 1)} sends index
        // j to -j when m is even and the orbit level s is odd
        let mut coeff_exp = (rep_exp as u128 * j as u128 % amb) as u64;
        if twisted && m % 2 == 0 && theta.size % 2 == 1 && coeff_exp != 0 {
            coeff_exp = ctx.ambient - coeff_exp;
        }
        terms.push(TransformTerm {
            orbit: f_alpha,
            p_index,
            coeff_exp,
        });
    }
    (sign, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_orbit_transform_is_one_term() {
        // q = 2, trivial character orbit, n = 1: the only fixed point is 1,
        // giving p_1 of the orbit of t - 1 with coefficient +1.
        let ctx = OrbitContext::new(2, 1).unwrap();
        let theta = ctx.orbit_of_exponent(OrbitKind::Theta, 0);
        let (sign, terms) = variable_transform(&ctx, &theta, 1);
        assert_eq!(sign, 1);
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].p_index, 1);
        assert_eq!(terms[0].coeff_exp, 0);
        assert_eq!(terms[0].orbit.size, 1);
        assert_eq!(terms[0].orbit.exp_min, 0);
    }

    #[test]
    fn transform_is_representative_independent() {
        let ctx = OrbitContext::new(2, 2).unwrap();
        for kind in [OrbitKind::Theta, OrbitKind::ThetaTilde] {
            for theta in ctx.enumerate(kind) {
                let exps = ctx.orbit_exponents(kind, theta.exp_min);
                for n in 1..=2u32 {
                    let (s0, mut t0) = variable_transform_with_rep(&ctx, &theta, exps[0], n);
                    t0.sort();
                    for &k in &exps[1..] {
                        let (s1, mut t1) = variable_transform_with_rep(&ctx, &theta, k, n);
                        t1.sort();
                        assert_eq!(s0, s1);
                        assert_eq!(t0, t1, "orbit {theta:?} rep {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn transform_term_count_is_the_fixed_field_size() {
        let ctx = OrbitContext::new(3, 2).unwrap();
        let theta = ctx.orbit_of_exponent(OrbitKind::Theta, 0);
        // n = 2, |theta| = 1: fixed points of F^2 are F_9^*
        let (sign, terms) = variable_transform(&ctx, &theta, 2);
        assert_eq!(sign, -1);
        assert_eq!(terms.len(), 8);
        let tt = ctx.orbit_of_exponent(OrbitKind::ThetaTilde, 0);
        // twisted, m = 1: the norm-one subgroup of order q + 1
        let (sign, terms) = variable_transform(&ctx, &tt, 1);
        assert_eq!(sign, 1);
        assert_eq!(terms.len(), 4);
        assert!(terms.iter().all(|t| t.orbit.kind == OrbitKind::PhiTilde));
    }

    #[test]
    fn conjugating_the_label_conjugates_the_coefficients() {
        // the mechanism behind row conjugation: the transform of the
        // conjugate orbit, read at conjugated class orbits, has conjugated
        // (negated-exponent) coefficients
        let ctx = OrbitContext::new(2, 2).unwrap();
        let nontrivial = ctx
            .enumerate(OrbitKind::Theta)
            .into_iter()
            .find(|o| o.exp_min != 0)
            .unwrap();
        let conj = ctx.conjugate_orbit(&nontrivial);
        for n in 1..=2u32 {
            let (s0, t0) = variable_transform(&ctx, &nontrivial, n);
            let (s1, t1) = variable_transform_with_rep(
                &ctx,
                &conj,
                (ctx.ambient - nontrivial.exp_min) % ctx.ambient,
                n,
            );
            assert_eq!(s0, s1);
            let mut mapped: Vec<TransformTerm> = t0
                .iter()
                .map(|t| TransformTerm {
                    orbit: t.orbit.clone(),
                    p_index: t.p_index,
                    coeff_exp: (ctx.ambient - t.coeff_exp % ctx.ambient) % ctx.ambient,
                })
                .collect();
            mapped.sort();
            let mut t1 = t1;
            t1.sort();
            assert_eq!(mapped, t1);
        }
    }
}
