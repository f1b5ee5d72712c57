//! Exact arithmetic in cyclotomic fields `Q(zeta_M)`.
//!
//! An element is a rational coefficient vector of length `phi(M)` in the
//! power basis `1, zeta, ..., zeta^{phi(M)-1}`, reduced modulo the `M`-th
//! cyclotomic polynomial.  The representation is unique, so equality,
//! realness, and rationality tests are exact.  Floats appear only in
//! `approx`, which exists for human-readable reporting.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::sync::Lazy;

pub fn euler_phi(m: u32) -> u32 {
    let mut n = m as u64;
    let mut phi = n;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            phi -= phi / d;
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi as u32
}

static PHI_CACHE: Lazy<Mutex<HashMap<u32, Arc<Vec<i128>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Coefficients (low degree first) of the `m`-th cyclotomic polynomial,
/// computed by dividing `x^m - 1` by the cyclotomic polynomials of the
/// proper divisors of `m`.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i128>> {
    assert!(m >= 1);
    if let Some(f) = PHI_CACHE.lock().unwrap().get(&m) {
        return f.clone();
    }
    let result = {
        // x^m - 1
        let mut num = vec![0i128; m as usize + 1];
        num[0] = -1;
        num[m as usize] = 1;
        for d in 1..m {
            if m % d == 0 {
                let phi_d = cyclotomic_polynomial(d);
                num = divide_exact(&num, &phi_d);
            }
        }
        Arc::new(num)
    };
    PHI_CACHE
        .lock()
        .unwrap()
        .entry(m)
        .or_insert(result)
        .clone()
}

/// Exact division of integer polynomials with monic divisor.
fn divide_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    assert_eq!(*den.last().unwrap(), 1);
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut quo = vec![0i128; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd];
        if c == 0 {
            continue;
        }
        quo[k] = c;
        for (j, &b) in den.iter().enumerate() {
            rem[k + j] -= c * b;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "non-exact division");
    quo
}

/// An element of `Q(zeta_M)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cyclotomic {
    pub conductor: u32,
    /// Length `phi(conductor)`, reduced mod the cyclotomic polynomial.
    pub coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(m: u32) -> Self {
        Cyclotomic {
            conductor: m,
            coeffs: vec![BigRational::zero(); euler_phi(m) as usize],
        }
    }

    pub fn one(m: u32) -> Self {
        Self::from_rational(m, BigRational::one())
    }

    pub fn from_rational(m: u32, r: BigRational) -> Self {
        let mut z = Self::zero(m);
        z.coeffs[0] = r;
        z
    }

    pub fn from_integer(m: u32, v: i64) -> Self {
        Self::from_rational(m, BigRational::from_integer(BigInt::from(v)))
    }

    /// `zeta_M^k`, any integer `k`.
    pub fn root(m: u32, k: i64) -> Self {
        let k = (k.rem_euclid(m as i64)) as usize;
        let mut poly = vec![BigRational::zero(); k + 1];
        poly[k] = BigRational::one();
        Self::reduce(m, poly)
    }

    /// Reduce an arbitrary polynomial in `zeta_M` to the canonical basis.
    fn reduce(m: u32, mut poly: Vec<BigRational>) -> Self {
        let phi = euler_phi(m) as usize;
        // fold exponents mod m first
        if poly.len() > m as usize {
            let mut folded = vec![BigRational::zero(); m as usize];
            for (i, c) in poly.into_iter().enumerate() {
                if !c.is_zero() {
                    folded[i % m as usize] += c;
                }
            }
            poly = folded;
        }
        let phi_poly = cyclotomic_polynomial(m);
        while poly.len() > phi {
            let lead = poly.pop().unwrap();
            if lead.is_zero() {
                continue;
            }
            let shift = poly.len() - phi;
            for (j, &b) in phi_poly.iter().take(phi).enumerate() {
                let t = &lead * BigRational::from_integer(BigInt::from(b));
                poly[shift + j] -= t;
            }
        }
        poly.resize(phi, BigRational::zero());
        Cyclotomic {
            conductor: m,
            coeffs: poly,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Exact rational value if the element is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, r: &BigRational) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    pub fn scale_int(&self, v: i64) -> Cyclotomic {
        self.scale(&BigRational::from_integer(BigInt::from(v)))
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero(self.conductor);
        }
        let mut acc = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    acc[i + j] += a * b;
                }
            }
        }
        Self::reduce(self.conductor, acc)
    }

    /// Multiply by `zeta_M^k` without a full convolution.
    pub fn mul_root(&self, k: i64) -> Cyclotomic {
        let m = self.conductor as usize;
        let k = (k.rem_euclid(m as i64)) as usize;
        let mut poly = vec![BigRational::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(i + k) % m] += c;
            }
        }
        Self::reduce(self.conductor, poly)
    }

    /// Galois automorphism `zeta -> zeta^k`, `gcd(k, M) = 1`.
    pub fn galois(&self, k: u32) -> Cyclotomic {
        let m = self.conductor;
        assert_eq!((k as u64).gcd(&(m as u64)), 1, "galois exponent not coprime");
        let mut poly = vec![BigRational::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(i * k as usize) % m as usize] += c;
            }
        }
        Self::reduce(m, poly)
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Cyclotomic {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Re-express in `Q(zeta_M)` for a multiple `M` of the conductor.
    pub fn lift(&self, m: u32) -> Cyclotomic {
        assert_eq!(m % self.conductor, 0, "not a conductor multiple");
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut poly = vec![BigRational::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[i * step] += c;
            }
        }
        Self::reduce(m, poly)
    }

    /// Compare as complex numbers, lifting to a common conductor.
    pub fn same_value(&self, other: &Cyclotomic) -> bool {
        let m = (self.conductor as u64).lcm(&(other.conductor as u64)) as u32;
        self.lift(m) == other.lift(m)
    }

    /// Floating approximation `(re, im)`, for reporting only.
    pub fn approx(&self) -> (f64, f64) {
        let m = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * i as f64 / m;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    /// Short human-readable form.
    pub fn approx_string(&self) -> String {
        if let Some(r) = self.as_rational() {
            return r.to_string();
        }
        let (re, im) = self.approx();
        format!("{re:.6}{im:+.6}i")
    }

    /// Serialization per the output schema: numerators and denominators of
    /// the basis coefficients, as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "conductor": self.conductor,
            "num": self.coeffs.iter().map(|c| c.numer().to_string()).collect::<Vec<_>>(),
            "den": self.coeffs.iter().map(|c| c.denom().to_string()).collect::<Vec<_>>(),
        })
    }

    /// True if every coefficient is an integer divisible by `d` (used for
    /// mod-`d` congruences of algebraic integers, with `d` a rational int).
    pub fn divisible_by(&self, d: i64) -> bool {
        self.coeffs.iter().all(|c| {
            c.is_integer() && (c.to_integer() % BigInt::from(d)).is_zero()
        })
    }

    /// Sum of a sequence with a given conductor.
    pub fn sum<'a>(m: u32, it: impl IntoIterator<Item = &'a Cyclotomic>) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(m);
        for x in it {
            acc = acc.add(x);
        }
        acc
    }
}
