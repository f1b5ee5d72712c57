//! Strong-reality invariants of the unitary matrix models: the
//! elementary-divisor sufficient condition, the cyclic-square criteria for
//! coset elements, and the square-conjugation identity, checked
//! exhaustively at small sizes and by fixed-seed sampling at U(4, 2).

use charlie::charmap::GroupKind;
use charlie::matgrp::{
    elementary_divisors, extended_involutions, is_cyclic, is_real_element, plain_involutions,
    strong_reality_condition, strongly_real_witness, ExtElement, GroupSpec, Mat,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Whether the sufficient condition has an applicable clause at these
/// parameters: odd q always (clause on `(t +- 1)^{2m}`), even q only for
/// even n (clause on `(t + 1)^{2m+1}`).
fn condition_applies(spec: &GroupSpec) -> bool {
    spec.field.tower.p != 2 || spec.n % 2 == 0
}

/// An involution of the base group inverting `x` by conjugation.
fn plain_strongly_real(spec: &GroupSpec, x: &Mat, involutions: &[Mat]) -> bool {
    let xi = spec.inverse(x).expect("group element");
    involutions
        .iter()
        .any(|s| spec.mat_mul(&spec.mat_mul(s, x), s) == xi)
}

/// `g` has no elementary divisor `(t + 1)^e` with the stated exponent
/// parity (`e` even for odd q, `e` odd for even q).
fn square_hypothesis(spec: &GroupSpec, g: &Mat) -> bool {
    let t = &spec.field.tower;
    let minus_one = t.neg(t.one());
    elementary_divisors(spec, g).iter().all(|ed| {
        if ed.factor.degree() != 1 || t.neg(ed.factor.constant_term()) != minus_one {
            return true;
        }
        if t.p == 2 {
            ed.exponent % 2 == 0
        } else {
            ed.exponent % 2 == 1
        }
    })
}

#[test]
fn real_elements_meeting_the_divisor_condition_are_strongly_real() {
    for (n, q) in [(2usize, 2u64), (2, 3), (3, 2)] {
        let spec = GroupSpec::new(GroupKind::Unitary, n, q).unwrap();
        if !condition_applies(&spec) {
            continue;
        }
        let involutions = plain_involutions(&spec);
        let mut checked = 0u64;
        for x in &spec.elements {
            if !strong_reality_condition(&spec, x) || !is_real_element(&spec, x) {
                continue;
            }
            assert!(
                plain_strongly_real(&spec, x, &involutions),
                "U({n}, {q}): a real element meeting the condition has no involution witness"
            );
            checked += 1;
        }
        assert!(checked > 0, "U({n}, {q}): the condition never applied");
    }
}

#[test]
fn sampled_large_unitary_group_obeys_the_divisor_condition() {
    let spec = GroupSpec::new(GroupKind::Unitary, 4, 2).unwrap();
    assert!(condition_applies(&spec));
    let involutions = plain_involutions(&spec);
    let mut rng = ChaCha8Rng::seed_from_u64(0x0DDB1A5E5);
    let sample: Vec<Mat> = spec
        .elements
        .choose_multiple(&mut rng, 40)
        .copied()
        .collect();
    let mut checked = 0u64;
    for x in &sample {
        if !strong_reality_condition(&spec, x) || !is_real_element(&spec, x) {
            continue;
        }
        assert!(
            plain_strongly_real(&spec, x, &involutions),
            "U(4, 2): a sampled real element meeting the condition has no involution witness"
        );
        checked += 1;
    }
    assert!(checked > 0, "U(4, 2): no sampled element met the condition");
}

#[test]
fn involutions_inverting_a_cyclic_square_invert_the_coset_element() {
    for (n, q) in [(2usize, 2u64), (2, 3), (3, 2)] {
        let spec = GroupSpec::new(GroupKind::Unitary, n, q).unwrap();
        let involutions = plain_involutions(&spec);
        for y in &spec.elements {
            let g = spec.coset_square(y);
            if !is_cyclic(&spec, &g) {
                continue;
            }
            let gi = spec.inverse(&g).unwrap();
            let yt = ExtElement::coset(*y);
            let yt_inv = spec.ext_inv(&yt);
            for pi in &involutions {
                if spec.mat_mul(&spec.mat_mul(pi, &g), pi) != gi {
                    continue;
                }
                let pe = ExtElement::plain(*pi);
                assert_eq!(
                    spec.ext_mul(&spec.ext_mul(&pe, &yt), &pe),
                    yt_inv,
                    "U({n}, {q}): an involution inverting the cyclic square fails to invert the coset element"
                );
            }
        }
    }
}

#[test]
fn coset_elements_with_admissible_cyclic_squares_are_strongly_real() {
    // exhaustive at the sizes where a clause of the square criterion is
    // in force: q odd, or q even with n even
    for (n, q) in [(2usize, 2u64), (2, 3)] {
        let spec = GroupSpec::new(GroupKind::Unitary, n, q).unwrap();
        assert!(condition_applies(&spec));
        let involutions = extended_involutions(&spec);
        let mut checked = 0u64;
        for y in &spec.elements {
            let g = spec.coset_square(y);
            if !is_cyclic(&spec, &g) || !square_hypothesis(&spec, &g) {
                continue;
            }
            let yt = ExtElement::coset(*y);
            assert!(
                strongly_real_witness(&spec, &yt, &involutions).is_some(),
                "U({n}, {q}): an admissible coset element is not strongly real"
            );
            checked += 1;
        }
        assert!(checked > 0, "U({n}, {q}): the square criterion never applied");
    }
}

#[test]
fn coset_squares_are_conjugate_to_their_inverse_transpose() {
    for (kind, n, q) in [
        (GroupKind::Unitary, 2usize, 2u64),
        (GroupKind::Unitary, 2, 3),
        (GroupKind::Unitary, 3, 2),
        (GroupKind::GeneralLinear, 2, 3),
        (GroupKind::GeneralLinear, 3, 2),
    ] {
        let spec = GroupSpec::new(kind, n, q).unwrap();
        for y in &spec.elements {
            let g = spec.coset_square(y);
            let lhs = spec.mat_mul(
                &spec.mat_mul(&spec.inverse(y).unwrap(), &g),
                y,
            );
            let rhs = spec.inverse(&spec.transpose(&g)).unwrap();
            assert_eq!(
                lhs, rhs,
                "{}({n}, {q}): y^-1 (y tau)^2 y is not the inverse transpose of the square",
                kind.name()
            );
        }
    }
}
