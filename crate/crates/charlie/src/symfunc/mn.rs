//! Symmetric group characters by the Murnaghan-Nakayama rule.

use std::collections::HashMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;

use crate::xpart::Partition;
use crate::{Error, Result};

static CACHE: Lazy<Mutex<HashMap<(Vec<u32>, Vec<u32>), i64>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// `omega^nu(rho)`: the value of the irreducible character of `S_n`
/// labeled by `nu` on elements of cycle type `rho` (`|nu| = |rho| = n`).
pub fn sn_character(nu: &Partition, rho: &Partition) -> Result<i64> {
    if nu.size() != rho.size() {
        return Err(Error::SizeMismatch(nu.0.clone(), rho.0.clone()));
    }
    Ok(mn(&nu.0, &rho.0))
}

fn mn(nu: &[u32], rho: &[u32]) -> i64 {
    if nu.is_empty() {
        return 1;
    }
    let key = (nu.to_vec(), rho.to_vec());
    if let Some(&v) = CACHE.lock().unwrap().get(&key) {
        return v;
    }
    let r = rho[0] as i64;
    let rest = &rho[1..];
    let l = nu.len();
    // first-column hook lengths: strictly decreasing beta-set
    let beta: Vec<i64> = nu
        .iter()
        .enumerate()
        .map(|(i, &x)| x as i64 + (l - 1 - i) as i64)
        .collect();
    let mut total = 0i64;
    for i in 0..l {
        let b = beta[i] - r;
        if b < 0 || beta.contains(&b) {
            continue;
        }
        // height of the removed strip = number of beta entries jumped over
        let jumped = beta.iter().filter(|&&x| b < x && x < beta[i]).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[i] = b;
        nb.sort_unstable_by(|a, c| c.cmp(a));
        let mut parts: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(j, &x)| (x - (l - 1 - j) as i64) as u32)
            .collect();
        parts.retain(|&x| x > 0);
        total += sign * mn(&parts, rest);
    }
    CACHE.lock().unwrap().insert(key, total);
    total
}

/// Centralizer size `z_rho = prod k^{m_k} m_k!` of cycle type `rho`.
pub fn z_rho(rho: &Partition) -> u64 {
    let mut z = 1u64;
    for (k, m) in rho.multiplicities() {
        z *= (k as u64).pow(m);
        for j in 1..=m as u64 {
            z *= j;
        }
    }
    z
}

/// `s_nu = sum_rho omega^nu(rho)/z_rho p_rho`: the coefficient list over
/// cycle types.
pub fn schur_to_power(nu: &Partition) -> Vec<(Partition, num_rational::BigRational)> {
    use num_bigint::BigInt;
    Partition::all(nu.size())
        .into_iter()
        .map(|rho| {
            let w = sn_character(nu, &rho).expect("equal sizes");
            let c = num_rational::BigRational::new(BigInt::from(w), BigInt::from(z_rho(&rho)));
            (rho, c)
        })
        .filter(|(_, c)| !num_traits::Zero::is_zero(c))
        .collect()
}
