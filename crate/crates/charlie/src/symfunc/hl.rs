//! Hall-Littlewood symmetric functions with an exact rational parameter,
//! and the expansion of power-sum products in the Hall-Littlewood basis.
//!
//! `P_lambda(x_1..x_N; t)` is computed from the antisymmetrization formula:
//! antisymmetrize `x^lambda prod_{i<j}(x_i - t x_j)`, divide by the
//! Vandermonde product, and normalize by `v_lambda(t)`.  The parameter can
//! be any rational except roots of the `v` normalization (in particular
//! negative values are fine; the substituted arguments here are `q^{-d}`
//! and `(-q)^{-d}`, never on the unit circle).

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::mpoly::MPoly;
use crate::xpart::Partition;
use crate::{Error, Result};

/// `v_m(t) = prod_{j=1}^m (1-t^j)/(1-t)`.
fn v_m(m: u32, t: &BigRational) -> BigRational {
    let mut acc = BigRational::one();
    let mut tj = t.clone();
    let one = BigRational::one();
    let denom = &one - t;
    assert!(!denom.is_zero(), "Hall-Littlewood parameter t = 1");
    for _ in 1..=m {
        acc *= (&one - &tj) / &denom;
        tj *= t;
    }
    acc
}

/// `v_lambda(t)` including the multiplicity of the part 0 in `N` slots.
fn v_lambda(lambda: &Partition, t: &BigRational, nvars: usize) -> BigRational {
    let mut acc = v_m((nvars - lambda.length()) as u32, t);
    for (_, m) in lambda.multiplicities() {
        acc *= v_m(m, t);
    }
    acc
}

/// `P_lambda(x_1..x_N; t)` in the monomial basis.
pub fn hall_littlewood(
    lambda: &Partition,
    t: &BigRational,
    nvars: usize,
) -> Result<BTreeMap<Partition, BigRational>> {
    if nvars < lambda.length() {
        return Err(Error::TooFewVariables {
            needed: lambda.length(),
            got: nvars,
        });
    }
    let mut exps = vec![0u16; nvars];
    for (i, &x) in lambda.0.iter().enumerate() {
        exps[i] = x as u16;
    }
    let mono = MPoly::monomial(nvars, exps, BigRational::one());
    // prod_{i<j} (x_i - t x_j)
    let mut prod = MPoly::one(nvars);
    for i in 0..nvars {
        for j in i + 1..nvars {
            let f = MPoly::var_pow(nvars, i, 1)
                .sub(&MPoly::var_pow(nvars, j, 1).scale(t));
            prod = prod.mul(&f);
        }
    }
    let mut a = mono.mul(&prod).antisymmetrize();
    for i in 0..nvars {
        for j in i + 1..nvars {
            a = a.divide_linear(i, j);
        }
    }
    let v = v_lambda(lambda, t, nvars);
    assert!(!v.is_zero(), "degenerate Hall-Littlewood normalization");
    let inv = BigRational::one() / v;
    Ok(a.scale(&inv).monomial_basis())
}

/// Expansions of power-sum products `p_rho` in the `P_mu(.; t)` basis,
/// memoized per parameter value.
pub struct HlTransition {
    pub t: BigRational,
    cache: HashMap<Partition, BTreeMap<Partition, BigRational>>,
    hl_cache: HashMap<u32, Vec<(Partition, BTreeMap<Partition, BigRational>)>>,
}

impl HlTransition {
    pub fn new(t: BigRational) -> Self {
        HlTransition {
            t,
            cache: HashMap::new(),
            hl_cache: HashMap::new(),
        }
    }

    fn hl_table(&mut self, grade: u32) -> &Vec<(Partition, BTreeMap<Partition, BigRational>)> {
        let t = self.t.clone();
        self.hl_cache.entry(grade).or_insert_with(|| {
            Partition::all(grade)
                .into_iter()
                .map(|mu| {
                    let e = hall_littlewood(&mu, &t, grade as usize)
                        .expect("grade many variables suffice");
                    (mu, e)
                })
                .collect()
        })
    }

    /// Coefficients `c_mu` with `p_rho = sum_mu c_mu P_mu(x; t)`.
    pub fn expand_power_product(&mut self, rho: &Partition) -> BTreeMap<Partition, BigRational> {
        if let Some(hit) = self.cache.get(rho) {
            return hit.clone();
        }
        let grade = rho.size();
        let nvars = grade as usize;
        // p_rho in the monomial basis
        let mut p = MPoly::one(nvars);
        for &k in &rho.0 {
            p = p.mul(&MPoly::power_sum(nvars, k as u16));
        }
        let target = p.monomial_basis();
        let hl = self.hl_table(grade).clone();
        let mus: Vec<Partition> = hl.iter().map(|(m, _)| m.clone()).collect();
        let kappas: Vec<Partition> = Partition::all(grade);
        // solve sum_mu c_mu * HL[mu][kappa] = target[kappa]
        let n = mus.len();
        let mut mat = vec![vec![BigRational::zero(); n + 1]; kappas.len()];
        for (ki, kappa) in kappas.iter().enumerate() {
            for (mi, (_, e)) in hl.iter().enumerate() {
                if let Some(c) = e.get(kappa) {
                    mat[ki][mi] = c.clone();
                }
            }
            if let Some(c) = target.get(kappa) {
                mat[ki][n] = c.clone();
            }
        }
        let sol = solve_square(mat, n).expect("Hall-Littlewood basis is invertible");
        let mut out = BTreeMap::new();
        for (mi, mu) in mus.into_iter().enumerate() {
            if !sol[mi].is_zero() {
                out.insert(mu, sol[mi].clone());
            }
        }
        self.cache.insert(rho.clone(), out.clone());
        out
    }
}

/// Gaussian elimination for an overdetermined consistent system given as
/// rows `[a_0 .. a_{n-1} | b]`; returns the unique solution.
fn solve_square(mut rows: Vec<Vec<BigRational>>, n: usize) -> Option<Vec<BigRational>> {
    let m = rows.len();
    let mut rank_row = 0usize;
    let mut pivots = Vec::new();
    for col in 0..n {
        let Some(piv) = (rank_row..m).find(|&r| !rows[r][col].is_zero()) else {
            return None;
        };
        rows.swap(rank_row, piv);
        let inv = BigRational::one() / rows[rank_row][col].clone();
        for v in rows[rank_row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..m {
            if r != rank_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..=n {
                    let t = &rows[rank_row][c] * &f;
                    rows[r][c] -= t;
                }
            }
        }
        pivots.push(rank_row);
        rank_row += 1;
    }
    // consistency of the remaining rows
    for r in rank_row..m {
        if !rows[r][n].is_zero() {
            return None;
        }
    }
    Some((0..n).map(|c| rows[c][n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use crate::symfunc::mn::schur_to_power;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn some_ts() -> Vec<BigRational> {
        vec![
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::new(BigInt::from(-1), BigInt::from(2)),
            BigRational::new(BigInt::from(-1), BigInt::from(3)),
            BigRational::new(BigInt::from(2), BigInt::from(5)),
            BigRational::new(BigInt::from(-3), BigInt::from(7)),
        ]
    }

    #[test]
    fn single_box_and_column() {
        for t in some_ts() {
            // P_(1) = m_(1)
            let e = hall_littlewood(&p(&[1]), &t, 3).unwrap();
            assert_eq!(e.len(), 1);
            assert_eq!(e.get(&p(&[1])), Some(&rat(1)));
            // P_(1,1) = e_2 = m_(1,1), independent of t
            let e = hall_littlewood(&p(&[1, 1]), &t, 3).unwrap();
            assert_eq!(e.len(), 1);
            assert_eq!(e.get(&p(&[1, 1])), Some(&rat(1)));
        }
    }

    #[test]
    fn t_zero_is_schur() {
        // P_(2)(x; 0) = s_(2) = m_(2) + m_(1,1)
        let t = BigRational::zero();
        let e = hall_littlewood(&p(&[2]), &t, 3).unwrap();
        assert_eq!(e.get(&p(&[2])), Some(&rat(1)));
        assert_eq!(e.get(&p(&[1, 1])), Some(&rat(1)));
        assert_eq!(e.len(), 2);
        // compare P_lambda(x;0) with the Schur expansion from power sums
        for lam in Partition::all(3) {
            let hl = hall_littlewood(&lam, &t, 3).unwrap();
            let mut schur = MPoly::zero(3);
            for (rho, c) in schur_to_power(&lam) {
                let mut term = MPoly::one(3);
                for &k in &rho.0 {
                    term = term.mul(&MPoly::power_sum(3, k as u16));
                }
                schur = schur.add(&term.scale(&c));
            }
            assert_eq!(hl, schur.monomial_basis(), "lambda = {lam:?}");
        }
    }

    fn dominates(a: &Partition, b: &Partition) -> bool {
        // a >= b in dominance order (equal sizes)
        let mut sa = 0i64;
        let mut sb = 0i64;
        for i in 0..a.0.len().max(b.0.len()) {
            sa += *a.0.get(i).unwrap_or(&0) as i64;
            sb += *b.0.get(i).unwrap_or(&0) as i64;
            if sa < sb {
                return false;
            }
        }
        true
    }

    #[test]
    fn triangular_with_unit_diagonal() {
        for t in some_ts() {
            for n in 1..=4u32 {
                for lam in Partition::all(n) {
                    let e = hall_littlewood(&lam, &t, n as usize).unwrap();
                    assert_eq!(e.get(&lam), Some(&rat(1)), "diagonal at {lam:?}");
                    for (mu, c) in &e {
                        if !c.is_zero() {
                            assert!(
                                dominates(&lam, mu),
                                "non-triangular term {mu:?} in P_{lam:?} at t={t}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn power_sum_expansions_reconstruct() {
        for t in some_ts() {
            let mut tr = HlTransition::new(t.clone());
            for rho in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[3]), p(&[2, 1]), p(&[1, 1, 1])] {
                let e = tr.expand_power_product(&rho);
                // rebuild p_rho from the expansion in the monomial basis
                let grade = rho.size();
                let nvars = grade as usize;
                let mut rebuilt: BTreeMap<Partition, BigRational> = BTreeMap::new();
                for (mu, c) in &e {
                    for (kappa, hc) in hall_littlewood(mu, &t, nvars).unwrap() {
                        let entry = rebuilt.entry(kappa).or_insert_with(BigRational::zero);
                        *entry += hc * c;
                    }
                }
                rebuilt.retain(|_, v| !v.is_zero());
                let mut direct = MPoly::one(nvars);
                for &k in &rho.0 {
                    direct = direct.mul(&MPoly::power_sum(nvars, k as u16));
                }
                assert_eq!(rebuilt, direct.monomial_basis(), "rho = {rho:?}");
            }
        }
    }

    #[test]
    fn p1_is_single_box() {
        let mut tr = HlTransition::new(BigRational::new(BigInt::from(-1), BigInt::from(2)));
        let e = tr.expand_power_product(&p(&[1]));
        assert_eq!(e.len(), 1);
        assert_eq!(e.get(&p(&[1])), Some(&rat(1)));
    }

    #[test]
    fn t_zero_transition_is_sn_character_table() {
        // at t = 0, p_rho = sum_nu omega^nu(rho) s_nu
        let mut tr = HlTransition::new(BigRational::zero());
        for n in 1..=3u32 {
            for rho in Partition::all(n) {
                let e = tr.expand_power_product(&rho);
                for nu in Partition::all(n) {
                    let w = crate::symfunc::mn::sn_character(&nu, &rho).unwrap();
                    let got = e.get(&nu).cloned().unwrap_or_else(BigRational::zero);
                    assert_eq!(got, rat(w), "rho={rho:?} nu={nu:?}");
                }
            }
        }
    }

    #[test]
    fn green_coefficients_are_integral_after_normalization() {
        // coefficient of P_gamma in p_k at t = Q^{-1}, times Q^{n(gamma)},
        // is an integer (a Green polynomial value), for Q = +-q.
        for bigq in [2i64, 3, -2, -3, 4, -4] {
            let t = BigRational::new(BigInt::from(1), BigInt::from(bigq));
            let mut tr = HlTransition::new(t);
            for k in 1..=3u32 {
                let e = tr.expand_power_product(&p(&[k]));
                for (gamma, c) in e {
                    let mut scaled = c;
                    for _ in 0..gamma.n_stat() {
                        scaled *= BigRational::from_integer(BigInt::from(bigq));
                    }
                    assert!(
                        scaled.is_integer(),
                        "non-integral Green value at Q={bigq}, k={k}, gamma={gamma:?}"
                    );
                }
            }
        }
    }
}
