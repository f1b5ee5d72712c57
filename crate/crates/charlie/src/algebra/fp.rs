//! Dense polynomials over the prime field `F_p`, plus the small amount of
//! integer number theory the crate needs (primality, factoring `u64`s).
//!
//! Coefficient vectors are stored low degree first with no trailing zeros,
//! so the zero polynomial is the empty vector.

/// Trial-division primality test; plenty for the word-sized moduli used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization of `n` as (prime, multiplicity) pairs, increasing.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0);
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut m = 0;
            while n % d == 0 {
                n /= d;
                m += 1;
            }
            out.push((d, m));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The distinct primes dividing `n`.
pub fn distinct_prime_factors(n: u64) -> Vec<u64> {
    factor_u64(n).into_iter().map(|(p, _)| p).collect()
}

/// `(p, e)` with `q = p^e`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = factor_u64(q);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

/// `a^e mod m` for `u64` arguments.
pub fn pow_mod_u64(a: u64, mut e: u64, m: u64) -> u64 {
    let mut base = (a % m) as u128;
    let m = m as u128;
    let mut acc = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo the prime `p`.
pub fn inv_mod_prime(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod {p}");
    pow_mod_u64(a, p - 2, p)
}

/// A polynomial over `F_p`.  `c[i]` is the coefficient of `x^i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FpPoly {
    pub p: u64,
    pub c: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for v in &mut c {
            *v %= p;
        }
        let mut f = FpPoly { p, c };
        f.trim();
        f
    }

    fn trim(&mut self) {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, c: vec![] }
    }

    pub fn constant(p: u64, v: u64) -> Self {
        FpPoly::new(p, vec![v])
    }

    pub fn one(p: u64) -> Self {
        FpPoly::constant(p, 1)
    }

    /// The monomial `x^k`.
    pub fn monomial(p: u64, k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        FpPoly { p, c }
    }

    pub fn x(p: u64) -> Self {
        FpPoly::monomial(p, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with the convention that the zero polynomial has degree 0
    /// where a usize is needed; use `is_zero` to disambiguate.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn leading(&self) -> u64 {
        *self.c.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.c.last() == Some(&1)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        assert_eq!(self.p, other.p);
        let p = self.p;
        let n = self.c.len().max(other.c.len());
        let c = (0..n)
            .map(|i| (self.coeff(i) + other.coeff(i)) % p)
            .collect();
        let mut f = FpPoly { p, c };
        f.trim();
        f
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        assert_eq!(self.p, other.p);
        let p = self.p;
        let n = self.c.len().max(other.c.len());
        let c = (0..n)
            .map(|i| (self.coeff(i) + p - other.coeff(i)) % p)
            .collect();
        let mut f = FpPoly { p, c };
        f.trim();
        f
    }

    pub fn neg(&self) -> FpPoly {
        let p = self.p;
        FpPoly::new(p, self.c.iter().map(|&v| (p - v) % p).collect())
    }

    pub fn scale(&self, s: u64) -> FpPoly {
        let p = self.p;
        FpPoly::new(p, self.c.iter().map(|&v| v * s % p).collect())
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        assert_eq!(self.p, other.p);
        let p = self.p as u128;
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.p);
        }
        let mut acc = vec![0u128; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.c.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % p;
            }
        }
        let mut f = FpPoly {
            p: self.p,
            c: acc.into_iter().map(|v| v as u64).collect(),
        };
        f.trim();
        f
    }

    /// Euclidean division; `other` must be nonzero.
    pub fn div_rem(&self, other: &FpPoly) -> (FpPoly, FpPoly) {
        assert_eq!(self.p, other.p);
        assert!(!other.is_zero(), "division by zero polynomial");
        let p = self.p;
        if self.c.len() < other.c.len() {
            return (FpPoly::zero(p), self.clone());
        }
        let lead_inv = inv_mod_prime(other.leading(), p);
        let mut rem = self.c.clone();
        let mut quo = vec![0u64; rem.len() - other.c.len() + 1];
        for k in (0..quo.len()).rev() {
            let top = rem[k + other.c.len() - 1];
            if top == 0 {
                continue;
            }
            let f = top * lead_inv % p;
            quo[k] = f;
            for (j, &b) in other.c.iter().enumerate() {
                let t = f * b % p;
                rem[k + j] = (rem[k + j] + p - t) % p;
            }
        }
        let mut q = FpPoly { p, c: quo };
        let mut r = FpPoly { p, c: rem };
        q.trim();
        r.trim();
        (q, r)
    }

    pub fn rem(&self, other: &FpPoly) -> FpPoly {
        self.div_rem(other).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let inv = inv_mod_prime(a.leading(), a.p);
            a.scale(inv)
        }
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p;
        let mut acc = 0u64;
        for &v in self.c.iter().rev() {
            acc = (acc * x + v) % p;
        }
        acc
    }

    pub fn derivative(&self) -> FpPoly {
        let p = self.p;
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &v)| (i as u64 % p) * v % p)
            .collect();
        let mut f = FpPoly { p, c };
        f.trim();
        f
    }

    /// Irreducibility over `F_p` by the standard Frobenius criterion:
    /// `x^{p^n} = x (mod f)` and `gcd(x^{p^{n/l}} - x, f) = 1` for each
    /// prime `l | n`.
    pub fn is_irreducible(&self) -> bool {
        let n = if self.is_zero() { return false } else { self.degree() };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let p = self.p;
        let x = FpPoly::x(p);
        let xq = |k: u32| -> FpPoly {
            let e = (p as u128).pow(k);
            x.pow_mod(e, self)
        };
        if xq(n as u32) != x.rem(self) {
            return false;
        }
        for l in distinct_prime_factors(n as u64) {
            let k = (n as u64 / l) as u32;
            let g = xq(k).sub(&x).gcd(self);
            if !(g.is_zero() || g.degree() == 0) {
                return false;
            }
        }
        true
    }

    /// The lexicographically least monic irreducible of degree `n` over
    /// `F_p`, comparing coefficient tuples `(c_{n-1}, ..., c_0)`.
    pub fn lex_least_irreducible(p: u64, n: u32) -> FpPoly {
        let n = n as usize;
        let total = (p as u128).pow(n as u32);
        let mut m = 0u128;
        while m < total {
            // digits of m base p, most significant first, give (c_{n-1},..,c_0)
            let mut c = vec![0u64; n + 1];
            c[n] = 1;
            let mut v = m;
            for i in 0..n {
                c[i] = (v % p as u128) as u64;
                v /= p as u128;
            }
            let f = FpPoly { p, c };
            if f.is_irreducible() {
                return f;
            }
            m += 1;
        }
        unreachable!("irreducibles of every degree exist over F_p")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_and_factoring() {
        assert!(is_prime(2));
        assert!(is_prime(97));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
        assert_eq!(factor_u64(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(12), None);
    }

    #[test]
    fn div_rem_roundtrip() {
        let p = 5;
        let f = FpPoly::new(p, vec![1, 2, 3, 4]);
        let g = FpPoly::new(p, vec![2, 1]);
        let (q, r) = f.div_rem(&g);
        assert_eq!(g.mul(&q).add(&r), f);
        assert!(r.is_zero() || r.degree() < g.degree());
    }

    #[test]
    fn irreducibility_matches_root_count_for_quadratics() {
        for p in [2u64, 3, 5] {
            for a in 0..p {
                for b in 0..p {
                    let f = FpPoly::new(p, vec![b, a, 1]);
                    let has_root = (0..p).any(|x| f.eval(x) == 0);
                    assert_eq!(f.is_irreducible(), !has_root);
                }
            }
        }
    }

    #[test]
    fn lex_least_irreducibles() {
        // x^2 + x + 1 is the only irreducible quadratic over F_2.
        assert_eq!(
            FpPoly::lex_least_irreducible(2, 2),
            FpPoly::new(2, vec![1, 1, 1])
        );
        // Over F_3 the candidates with c_1 = 0 come first: x^2 + 1 works.
        assert_eq!(
            FpPoly::lex_least_irreducible(3, 2),
            FpPoly::new(3, vec![1, 0, 1])
        );
        let f = FpPoly::lex_least_irreducible(2, 12);
        assert_eq!(f.degree(), 12);
        assert!(f.is_irreducible());
    }

    #[test]
    fn gcd_is_monic_common_divisor() {
        let p = 3;
        let a = FpPoly::new(p, vec![1, 1]); // x + 1
        let b = FpPoly::new(p, vec![2, 1]); // x + 2
        let f = a.mul(&b);
        let g = a.mul(&a);
        let d = f.gcd(&g);
        assert_eq!(d, a);
    }

    #[test]
    fn pow_mod_agrees_with_repeated_mul() {
        let p = 3;
        let m = FpPoly::new(p, vec![1, 2, 0, 0, 1]);
        let x = FpPoly::new(p, vec![2, 1, 1]);
        let mut acc = FpPoly::one(p);
        for e in 0..20u32 {
            assert_eq!(x.pow_mod(e as u128, &m), acc.rem(&m));
            acc = acc.mul(&x);
        }
    }
}
