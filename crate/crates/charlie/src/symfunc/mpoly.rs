//! Sparse multivariate polynomials over the rationals, used to expand
//! symmetric functions in a finite alphabet.  Exponent vectors have fixed
//! length equal to the alphabet size.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::xpart::Partition;

#[derive(Clone, Debug)]
pub struct MPoly {
    pub nvars: usize,
    pub terms: HashMap<Vec<u16>, BigRational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: HashMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut m = Self::zero(nvars);
        if !c.is_zero() {
            m.terms.insert(vec![0; nvars], c);
        }
        m
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u16>, c: BigRational) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut m = Self::zero(nvars);
        if !c.is_zero() {
            m.terms.insert(exps, c);
        }
        m
    }

    /// `x_i^k`.
    pub fn var_pow(nvars: usize, i: usize, k: u16) -> Self {
        let mut e = vec![0; nvars];
        e[i] = k;
        Self::monomial(nvars, e, BigRational::one())
    }

    pub fn add_term(&mut self, exps: Vec<u16>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            // re-fetch key to remove: collect zero keys lazily instead
        }
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let entry = out.terms.entry(e.clone()).or_insert_with(BigRational::zero);
            *entry += c;
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, r: &BigRational) -> MPoly {
        if r.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * r)).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let entry = out.terms.entry(e).or_insert_with(BigRational::zero);
                *entry += c1 * c2;
            }
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `p_k = sum_i x_i^k`.
    pub fn power_sum(nvars: usize, k: u16) -> MPoly {
        let mut out = MPoly::zero(nvars);
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = k;
            out.terms.insert(e, BigRational::one());
        }
        out
    }

    /// The monomial symmetric function `m_lambda` in this alphabet.
    pub fn monomial_symmetric(nvars: usize, lambda: &Partition) -> MPoly {
        let mut out = MPoly::zero(nvars);
        if lambda.length() > nvars {
            return out;
        }
        let mut exps = vec![0u16; nvars];
        for (i, &x) in lambda.0.iter().enumerate() {
            exps[i] = x as u16;
        }
        // distinct permutations of the exponent vector
        exps.sort_unstable();
        loop {
            out.terms.insert(exps.clone(), BigRational::one());
            if !next_permutation(&mut exps) {
                break;
            }
        }
        out
    }

    /// `sum_w sgn(w) w(self)`, computed monomial-wise: monomials with a
    /// repeated exponent vanish; the rest contribute their sorted pattern
    /// with the sign of the sorting permutation, summed over all distinct
    /// rearrangements with alternating signs folded in.
    pub fn antisymmetrize(&self) -> MPoly {
        // Collect, per sorted-descending exponent pattern with distinct
        // entries, the signed sum of coefficients; then redistribute over
        // all permutations with signs.
        let mut collected: HashMap<Vec<u16>, BigRational> = HashMap::new();
        for (e, c) in &self.terms {
            let mut s = e.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            if s.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let sign = perm_sign_to_sorted(e);
            let entry = collected.entry(s).or_insert_with(BigRational::zero);
            if sign {
                *entry += c;
            } else {
                *entry -= c;
            }
        }
        let mut out = MPoly::zero(self.nvars);
        for (s, c) in collected {
            if c.is_zero() {
                continue;
            }
            // all permutations of s with sign
            let mut asc = s.clone();
            asc.sort_unstable();
            loop {
                let sign = perm_sign_to_sorted(&asc);
                let entry = out
                    .terms
                    .entry(asc.clone())
                    .or_insert_with(BigRational::zero);
                if sign {
                    *entry += &c;
                } else {
                    *entry -= &c;
                }
                if !next_permutation(&mut asc) {
                    break;
                }
            }
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    /// Exact division by `(x_i - x_j)` (synthetic division in `x_i` at the
    /// "root" `x_j`); panics if the remainder is nonzero.
    pub fn divide_linear(&self, i: usize, j: usize) -> MPoly {
        // view as polynomial in x_i: coefficients are maps without the i slot
        let mut by_deg: BTreeMap<u16, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = e[i];
            let mut rest = e.clone();
            rest[i] = 0;
            by_deg
                .entry(d)
                .or_insert_with(|| MPoly::zero(self.nvars))
                .add_term(rest, c.clone());
        }
        let max_deg = by_deg.keys().max().copied().unwrap_or(0);
        let coeff = |d: u16, by: &BTreeMap<u16, MPoly>| -> MPoly {
            by.get(&d).cloned().unwrap_or_else(|| MPoly::zero(self.nvars))
        };
        // b_k = a_{k+1} + x_j * b_{k+1}
        let xj = MPoly::var_pow(self.nvars, j, 1);
        let mut quo: BTreeMap<u16, MPoly> = BTreeMap::new();
        let mut prev = MPoly::zero(self.nvars);
        for k in (0..max_deg).rev() {
            let b = coeff(k + 1, &by_deg).add(&xj.mul(&prev));
            quo.insert(k, b.clone());
            prev = b;
        }
        let rem = coeff(0, &by_deg).add(&xj.mul(&prev));
        assert!(rem.is_zero(), "non-exact division by linear factor");
        let mut out = MPoly::zero(self.nvars);
        for (d, p) in quo {
            for (e, c) in p.terms {
                let mut e2 = e;
                e2[i] += d;
                out.add_term(e2, c);
            }
        }
        out
    }

    /// For a symmetric polynomial: coefficients in the monomial basis, read
    /// off at sorted-descending exponent vectors.
    pub fn monomial_basis(&self) -> BTreeMap<Partition, BigRational> {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut s = e.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            if s != *e {
                continue;
            }
            let parts: Vec<u32> = s.iter().filter(|&&x| x > 0).map(|&x| x as u32).collect();
            out.insert(Partition::new(parts), c.clone());
        }
        out
    }

    /// Evaluate with all variables set to rational values (test support).
    pub fn eval(&self, vals: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in vals.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }
}

/// Sign of the permutation sorting `e` into descending order; `true` = +1.
/// Entries are distinct when this is called on antisymmetric patterns; for
/// safety equal entries count as no inversion.
fn perm_sign_to_sorted(e: &[u16]) -> bool {
    let mut inv = 0usize;
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            if e[i] < e[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 0
}

/// Next lexicographic permutation; standard algorithm.
fn next_permutation(a: &mut [u16]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// `x^delta` Vandermonde product `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde(nvars: usize) -> MPoly {
    let mut v = MPoly::one(nvars);
    for i in 0..nvars {
        for j in i + 1..nvars {
            let d = MPoly::var_pow(nvars, i, 1).sub(&MPoly::var_pow(nvars, j, 1));
            v = v.mul(&d);
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn arithmetic_basics() {
        let p1 = MPoly::power_sum(3, 1);
        let p2 = MPoly::power_sum(3, 2);
        let sq = p1.mul(&p1);
        // p1^2 = p2 + 2 e2
        let e2 = sq.sub(&p2).scale(&BigRational::new(BigInt::from(1), BigInt::from(2)));
        let mb = e2.monomial_basis();
        assert_eq!(mb.len(), 1);
        assert_eq!(
            mb.get(&Partition::new(vec![1, 1])).unwrap(),
            &rat(1)
        );
    }

    #[test]
    fn monomial_symmetric_orbit() {
        let m = MPoly::monomial_symmetric(3, &Partition::new(vec![2, 1]));
        assert_eq!(m.terms.len(), 6);
        let m2 = MPoly::monomial_symmetric(3, &Partition::new(vec![1, 1]));
        assert_eq!(m2.terms.len(), 3);
    }

    #[test]
    fn vandermonde_antisymmetrization() {
        // antisymmetrizing x^(n-1, n-2, .., 0) gives the Vandermonde
        for n in 2..=4usize {
            let exps: Vec<u16> = (0..n).map(|i| (n - 1 - i) as u16).collect();
            let mono = MPoly::monomial(n, exps, BigRational::one());
            let a = mono.antisymmetrize();
            let v = vandermonde(n);
            assert!(a.sub(&v).is_zero(), "n = {n}");
        }
    }

    #[test]
    fn division_by_linear_factor() {
        let n = 3;
        let v = vandermonde(n);
        let mut q = v.clone();
        for i in 0..n {
            for j in i + 1..n {
                q = q.divide_linear(i, j);
            }
        }
        let mb = q.monomial_basis();
        assert_eq!(mb.get(&Partition::empty()), Some(&rat(1)));
        assert_eq!(mb.len(), 1);
    }

    #[test]
    fn eval_spot_check() {
        let p2 = MPoly::power_sum(2, 2);
        let v = p2.eval(&[rat(2), rat(3)]);
        assert_eq!(v, rat(13));
    }
}
