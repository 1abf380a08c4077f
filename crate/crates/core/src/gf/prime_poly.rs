//! Bare-bones arithmetic in GF(p)[x] on `Vec<u32>` coefficient lists
//! (low degree first, no trailing zeros). Only what the modulus search needs.

use crate::numtheory::prime_factors;

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (a, p) = (a as u64, p as u64);
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc as u32
}

fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p = p as u64;
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Remainder of `a` modulo a nonzero `m`.
fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p) as u64;
    let p64 = p as u64;
    while a.len() > dm {
        let da = a.len() - 1;
        let factor = a[da] as u64 * lead_inv % p64;
        let shift = da - dm;
        for (k, &mk) in m.iter().enumerate() {
            let sub = factor * mk as u64 % p64;
            a[shift + k] = ((a[shift + k] as u64 + p64 - sub) % p64) as u32;
        }
        a = trim(a);
    }
    a
}

fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

/// `base^(p^k) mod m`, by `k` successive `p`-th powers.
fn frobenius_iterate(base: &[u32], k: u32, m: &[u32], p: u32) -> Vec<u32> {
    let mut cur = rem(base, m, p);
    for _ in 0..k {
        cur = pow_mod(&cur, p as u64, m, p);
    }
    cur
}

fn pow_mod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut acc = vec![1];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

/// Rabin's test: a monic `f` of degree `r` is irreducible over GF(p) iff
/// `x^(p^r) = x mod f` and `gcd(x^(p^(r/l)) - x, f) = 1` for every prime `l | r`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let f = trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let r = (f.len() - 1) as u32;
    if r == 1 {
        return true;
    }
    let x = vec![0, 1];
    if sub(&frobenius_iterate(&x, r, &f, p), &x, p) != Vec::<u32>::new() {
        return false;
    }
    prime_factors(r as u64).into_iter().all(|l| {
        let h = sub(&frobenius_iterate(&x, r / l as u32, &f, p), &x, p);
        gcd(&h, &f, p).len() == 1
    })
}

/// Smallest monic irreducible of degree `r` when candidates are ranked by the
/// integer `sum c_i p^i` of their non-leading coefficients.
pub fn smallest_irreducible(p: u32, r: u32) -> Vec<u32> {
    let count = (p as u64).pow(r);
    for rank in 0..count {
        let mut coeffs = Vec::with_capacity(r as usize + 1);
        let mut m = rank;
        for _ in 0..r {
            coeffs.push((m % p as u64) as u32);
            m /= p as u64;
        }
        coeffs.push(1);
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force oracle for degree <= 3: irreducible iff no root.
    fn has_root(f: &[u32], p: u32) -> bool {
        (0..p).any(|c| {
            let v = f
                .iter()
                .rev()
                .fold(0u64, |acc, &k| (acc * c as u64 + k as u64) % p as u64);
            v == 0
        })
    }

    #[test]
    fn rabin_matches_root_oracle_low_degree() {
        for p in [2u32, 3, 5, 7] {
            for r in 2..=3u32 {
                for rank in 0..(p as u64).pow(r) {
                    let mut f: Vec<u32> = (0..r)
                        .map(|i| ((rank / (p as u64).pow(i)) % p as u64) as u32)
                        .collect();
                    f.push(1);
                    assert_eq!(is_irreducible(&f, p), !has_root(&f, p), "p={p} f={f:?}");
                }
            }
        }
    }

    #[test]
    fn quartic_over_gf2() {
        // x^4 + x + 1 irreducible, (x^2+x+1)^2 = x^4 + x^2 + 1 is not (and has no root).
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn smallest_moduli() {
        assert_eq!(smallest_irreducible(3, 1), vec![0, 1]);
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(smallest_irreducible(2, 3), vec![1, 1, 0, 1]);
    }
}
