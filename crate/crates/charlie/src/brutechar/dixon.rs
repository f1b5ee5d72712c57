//! Modular linear algebra for the character-table oracle: the working
//! prime, common-eigenvector splitting of the class-algebra matrices over
//! `F_l`, and root extraction for their characteristic polynomials.

use crate::algebra::fp::{factor_u64, inv_mod_prime, is_prime, pow_mod_u64, FpPoly};

/// The smallest prime `l = 1 (mod exponent)` exceeding `2 * order`; the
/// choice is deterministic, so tables are byte-stable.
pub fn working_prime(exponent: u64, order: u64) -> u64 {
    let mut t = (2 * order) / exponent + 1;
    loop {
        let cand = exponent * t + 1;
        if cand > 2 * order && is_prime(cand) {
            return cand;
        }
        t += 1;
    }
}

/// A generator of the unit group mod the prime `l`.
pub fn primitive_root(l: u64) -> u64 {
    let factors = factor_u64(l - 1);
    'cand: for g in 2..l {
        for &(p, _) in &factors {
            if pow_mod_u64(g, (l - 1) / p, l) == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("prime fields have primitive roots")
}

#[inline]
fn mulm(a: u64, b: u64, l: u64) -> u64 {
    (a as u128 * b as u128 % l as u128) as u64
}

#[inline]
fn addm(a: u64, b: u64, l: u64) -> u64 {
    let s = a + b;
    if s >= l {
        s - l
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, l: u64) -> u64 {
    addm(a, l - b, l)
}

/// Characteristic polynomial of a dense `d x d` matrix mod `l`, low degree
/// first, by the Faddeev-LeVerrier recursion (`l` exceeds `d`, so the
/// integer divisions are invertible).
pub fn charpoly_mod(a: &[Vec<u64>], l: u64) -> Vec<u64> {
    let d = a.len();
    let mut c = vec![0u64; d + 1];
    c[d] = 1;
    // m = identity; c_{d-k} = -tr(a m)/k, m <- a m + c_{d-k} I
    let mut m: Vec<Vec<u64>> = (0..d)
        .map(|i| (0..d).map(|j| u64::from(i == j)).collect())
        .collect();
    for k in 1..=d {
        let am = mat_mul_mod(a, &m, l);
        let tr = (0..d).fold(0u64, |s, i| addm(s, am[i][i], l));
        let ck = subm(0, mulm(tr, inv_mod_prime(k as u64, l), l), l);
        c[d - k] = ck;
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = addm(row[i], ck, l);
        }
    }
    c
}

fn mat_mul_mod(a: &[Vec<u64>], b: &[Vec<u64>], l: u64) -> Vec<Vec<u64>> {
    let d = a.len();
    let mut c = vec![vec![0u64; d]; d];
    for i in 0..d {
        for k in 0..d {
            let v = a[i][k];
            if v == 0 {
                continue;
            }
            for j in 0..d {
                c[i][j] = addm(c[i][j], mulm(v, b[k][j], l), l);
            }
        }
    }
    c
}

/// The distinct roots in `F_l` of a polynomial given low degree first.
/// Splitting uses `gcd(x^l - x, f)` and then deterministic shifts with the
/// Legendre-symbol power, so the output order is stable; roots come sorted.
pub fn poly_roots_mod(coeffs: &[u64], l: u64) -> Vec<u64> {
    let f = FpPoly::new(l, coeffs.to_vec());
    assert!(!f.is_zero());
    if f.degree() == 0 {
        return vec![];
    }
    let x = FpPoly::x(l);
    let xl = x.pow_mod(l as u128, &f);
    let lin = xl.sub(&x).gcd(&f);
    let mut roots = Vec::new();
    let mut stack = vec![lin];
    let mut shift = 0u64;
    while let Some(g) = stack.pop() {
        if g.is_zero() || g.degree() == 0 {
            continue;
        }
        if g.degree() == 1 {
            // monic x + c: root -c
            let c = g.coeff(0);
            roots.push((l - c) % l);
            continue;
        }
        // h = (x + shift)^((l-1)/2) - 1 splits the product of linears
        loop {
            let base = FpPoly::new(l, vec![shift, 1]);
            let h = base.pow_mod(((l - 1) / 2) as u128, &g).sub(&FpPoly::one(l));
            let d = h.gcd(&g);
            shift += 1;
            if !d.is_zero() && d.degree() > 0 && d.degree() < g.degree() {
                let (q, r) = g.div_rem(&d);
                assert!(r.is_zero());
                stack.push(d);
                stack.push(q);
                break;
            }
        }
    }
    roots.sort_unstable();
    roots
}

/// Reduced row echelon form mod `l`, in place; returns the pivot columns.
pub fn rref_mod(rows: &mut Vec<Vec<u64>>, l: u64) -> Vec<usize> {
    let width = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..width {
        let Some(src) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, src);
        let inv = inv_mod_prime(rows[r][col], l);
        for v in rows[r].iter_mut() {
            *v = mulm(*v, inv, l);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let c = rows[i][col];
                for j in 0..width {
                    let t = mulm(c, rows[r][j], l);
                    rows[i][j] = subm(rows[i][j], t, l);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of the kernel of a `d x d` matrix mod `l` (column vectors).
pub fn kernel_mod(a: &[Vec<u64>], l: u64) -> Vec<Vec<u64>> {
    let d = a.len();
    let mut rows: Vec<Vec<u64>> = a.to_vec();
    let pivots = rref_mod(&mut rows, l);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..d {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; d];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = subm(0, rows[r][free], l);
        }
        basis.push(v);
    }
    basis
}

/// Common one-dimensional eigenspaces of a commuting family of `k x k`
/// matrices mod `l` that is known to split completely (the class-algebra
/// matrices of a finite group under a Dixon prime).  Returns `k` vectors.
pub fn common_eigenvectors(mats: &[Vec<Vec<u64>>], l: u64) -> Vec<Vec<u64>> {
    let k = mats.first().map_or(0, |m| m.len());
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect()];
    for a in mats {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::with_capacity(spaces.len());
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            next.extend(split_space(a, &basis, l));
        }
        spaces = next;
    }
    assert!(
        spaces.iter().all(|s| s.len() == 1),
        "class algebra failed to split into one-dimensional joint eigenspaces"
    );
    let mut out: Vec<Vec<u64>> = spaces.into_iter().map(|mut s| s.pop().unwrap()).collect();
    out.sort_unstable();
    out
}

/// Split an invariant subspace (reduced echelon basis rows) into the
/// eigenspaces of `a` restricted to it.
fn split_space(a: &[Vec<u64>], basis: &[Vec<u64>], l: u64) -> Vec<Vec<Vec<u64>>> {
    let k = a.len();
    let d = basis.len();
    let mut rows = basis.to_vec();
    let pivots = rref_mod(&mut rows, l);
    assert_eq!(rows.len(), d, "subspace basis was not independent");
    // restricted matrix: image of each basis vector in pivot coordinates
    let mut x = vec![vec![0u64; d]; d];
    for (i, b) in rows.iter().enumerate() {
        let mut img = vec![0u64; k];
        for (m, &bm) in b.iter().enumerate() {
            if bm == 0 {
                continue;
            }
            for j in 0..k {
                img[j] = addm(img[j], mulm(a[j][m], bm, l), l);
            }
        }
        for (m, &pc) in pivots.iter().enumerate() {
            x[m][i] = img[pc];
        }
        // invariance: the image must lie in the subspace
        for (m, &pc) in pivots.iter().enumerate() {
            let c = img[pc];
            if c != 0 {
                for j in 0..k {
                    img[j] = subm(img[j], mulm(c, rows[m][j], l), l);
                }
            }
        }
        assert!(img.iter().all(|&v| v == 0), "class matrix left the subspace");
    }
    let cp = charpoly_mod(&x, l);
    let roots = poly_roots_mod(&cp, l);
    let mut out = Vec::new();
    for lam in roots {
        let mut shifted = x.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = subm(row[i], lam, l);
        }
        let ker = kernel_mod(&shifted, l);
        assert!(!ker.is_empty());
        let mut sub: Vec<Vec<u64>> = ker
            .iter()
            .map(|c| {
                let mut v = vec![0u64; k];
                for (m, &cm) in c.iter().enumerate() {
                    if cm == 0 {
                        continue;
                    }
                    for j in 0..k {
                        v[j] = addm(v[j], mulm(cm, rows[m][j], l), l);
                    }
                }
                v
            })
            .collect();
        rref_mod(&mut sub, l);
        out.push(sub);
    }
    assert_eq!(
        out.iter().map(|s| s.len()).sum::<usize>(),
        d,
        "eigenspaces of the restriction do not fill the subspace"
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn working_prime_properties() {
        let l = working_prime(6, 24);
        assert!(is_prime(l));
        assert_eq!((l - 1) % 6, 0);
        assert!(l > 48);
        // deterministic
        assert_eq!(l, working_prime(6, 24));
    }

    #[test]
    fn charpoly_of_companion_matrix() {
        // companion of x^3 + 2x + 5 mod 101
        let l = 101;
        let a = vec![vec![0, 0, 96], vec![1, 0, 99], vec![0, 1, 0]];
        let cp = charpoly_mod(&a, l);
        assert_eq!(cp, vec![5, 2, 0, 1]);
    }

    #[test]
    fn roots_found_exactly() {
        let l = 103;
        // (x - 3)(x - 7)(x - 7)(x - 50)
        let mut f = vec![1u64];
        for r in [3u64, 7, 7, 50] {
            let mut g = vec![0u64; f.len() + 1];
            for (i, &c) in f.iter().enumerate() {
                g[i + 1] = addm(g[i + 1], c, l);
                g[i] = subm(g[i], mulm(c, r, l), l);
            }
            f = g;
        }
        assert_eq!(poly_roots_mod(&f, l), vec![3, 7, 50]);
    }

    #[test]
    fn kernel_and_rref() {
        let l = 101;
        // rank-1 matrix: kernel dimension 2
        let a = vec![vec![1, 2, 3], vec![2, 4, 6], vec![3, 6, 9]];
        let ker = kernel_mod(&a, l);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for row in &a {
                let s = row
                    .iter()
                    .zip(v)
                    .fold(0u64, |s, (&m, &x)| addm(s, mulm(m, x, l), l));
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn commuting_diagonalizable_family_splits() {
        let l = 13;
        // diag(1,2,3) and diag(5,5,7) in a rotated basis would be ideal;
        // use the plain diagonal case plus a permutation-symmetric matrix
        let a = vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]];
        let b = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 5]];
        let vecs = common_eigenvectors(&[a.clone(), b], l);
        assert_eq!(vecs.len(), 3);
        for v in &vecs {
            // eigenvector of the swap matrix: v0 = +-v1
            let av: Vec<u64> = (0..3)
                .map(|i| {
                    (0..3).fold(0u64, |s, j| addm(s, mulm(a[i][j], v[j], l), l))
                })
                .collect();
            let prop = v
                .iter()
                .zip(&av)
                .filter(|(&x, _)| x != 0)
                .map(|(&x, &y)| mulm(y, inv_mod_prime(x, l), l))
                .collect::<std::collections::HashSet<_>>();
            assert!(prop.len() <= 1, "not an eigenvector of the first matrix");
        }
    }
}
