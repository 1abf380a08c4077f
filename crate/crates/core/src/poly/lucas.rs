/// `C(n, m) mod p` as the product of the base-`p` digitwise binomials.
pub fn binom_mod_p(mut n: u64, mut m: u64, p: u64) -> u64 {
    debug_assert!(p >= 2);
    if m > n {
        return 0;
    }
    let mut acc = 1u64;
    while m > 0 {
        let (ni, mi) = (n % p, m % p);
        if mi > ni {
            return 0;
        }
        acc = acc * small_binom_mod(ni, mi, p) % p;
        n /= p;
        m /= p;
    }
    acc
}

/// `C(n, k) mod p` for `k <= n < p`.
fn small_binom_mod(n: u64, k: u64, p: u64) -> u64 {
    let k = k.min(n - k);
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}
