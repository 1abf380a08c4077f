//! Exact identity checks over fixed parameter grids and randomized lemma
//! suites. Each check produces an [`IdentityReport`]; the command-line tool
//! and the acceptance tests both run these.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exceptional::{
    dickson_exceptional, heuristic_exceptional, is_bijection, monomial_permutes, monomial_verdict,
    Status,
};
use crate::gf::{build_field, FieldSpec, GfElem};
use crate::numtheory::{gcd, prime_power};
use crate::poly::difference::{
    b_squared_expansion, build_b, centered_difference, centered_difference_at_squares,
    closed_form_coeff, closed_form_in_c, factored_t3, shift_difference, TopOffset,
};
use crate::poly::{binom_mod_p, dickson, DensePoly, Integers, LaurentPoly};
use crate::report::IdentityReport;

pub const DEFAULT_SEED: u64 = 0x5eed_2b05;
pub const DEFAULT_INSTANCES: usize = 1000;

fn gf(p: u64, r: u32) -> FieldSpec {
    build_field(p, r).expect("grid fields are small prime powers")
}

fn check(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

/// `(x+1)^t - x^t - 1 = x^(p^i) + x^(p^j)` over GF(p) for `t = p^i + p^j`.
pub fn additive_identity() -> IdentityReport {
    let mut rep = IdentityReport::new(
        "additive_shift",
        "p in {3,5,7}, 0 <= j <= i <= 4, t = p^i + p^j, over GF(p)",
    );
    for p in [3u64, 5, 7] {
        let f = gf(p, 1);
        for i in 0..=4u32 {
            for j in 0..=i {
                let (pi, pj) = (p.pow(i) as usize, p.pow(j) as usize);
                let lhs = &shift_difference(&f, (pi + pj) as u64) - &DensePoly::one(f.clone());
                let rhs = &DensePoly::from_terms(f.clone(), &[(pi, 1)])
                    + &DensePoly::from_terms(f.clone(), &[(pj, 1)]);
                rep.record(
                    &[("p", p as i64), ("i", i as i64), ("j", j as i64)],
                    check(lhs == rhs, || format!("left side has {} terms", lhs.terms().count())),
                );
            }
        }
    }
    rep
}

/// `(x+1)^t - x^t = -D_s(x-1, 1)` over GF(3) with `t = (3^i + 3^j)/2` and
/// `s = (3^i - 3^j)/2`, for `i > j` and `i - j` odd.
pub fn dickson_shift_identity() -> IdentityReport {
    let mut rep = IdentityReport::new(
        "dickson_shift_gf3",
        "0 <= j < i <= 4, i - j odd, t = (3^i + 3^j)/2, s = (3^i - 3^j)/2, over GF(3)",
    );
    let f = gf(3, 1);
    let x_minus_1 = DensePoly::from_ints(f.clone(), &[-1, 1]);
    for i in 1..=4u32 {
        for j in (0..i).filter(|j| (i - j) % 2 == 1) {
            let (a, b) = (3u64.pow(i), 3u64.pow(j));
            let (t, s) = ((a + b) / 2, (a - b) / 2);
            let lhs = shift_difference(&f, t);
            let rhs = -dickson(&f, s, &f.one()).compose(&x_minus_1).expect("same ring");
            rep.record(
                &[("i", i as i64), ("j", j as i64), ("t", t as i64), ("s", s as i64)],
                check(lhs == rhs, || format!("{lhs:?} != {rhs:?}")),
            );
        }
    }
    rep
}

/// For `q = p^s` and `2t = q + 1`, with `F = (x+2)^t - (x-2)^t` over GF(p):
/// `F(x^2 + x^-2) = 2(x^(q-1) + x^(1-q))` and `F = 2 D_((q-1)/2)(x, 1)`.
pub fn terminal_identities() -> IdentityReport {
    let mut rep = IdentityReport::new(
        "terminal",
        "(p, s) in {(3,1), (3,3), (5,1), (7,1)}, q = p^s, t = (q+1)/2, over GF(p)",
    );
    for (p, s) in [(3u64, 1u32), (3, 3), (5, 1), (7, 1)] {
        let f = gf(p, 1);
        let q = p.pow(s);
        let t = (q + 1) / 2;
        let two = f.from_int(2);
        let laurent = centered_difference_at_squares(&f, t);
        let expected = &LaurentPoly::monomial(f.clone(), two, q as i64 - 1)
            + &LaurentPoly::monomial(f.clone(), two, 1 - q as i64);
        let dense = centered_difference(&f, t);
        let twice_d = dickson(&f, (q - 1) / 2, &f.one()).scale(&two);
        let outcome = if laurent != expected {
            Err("F(x^2 + x^-2) differs from 2(x^(q-1) + x^(1-q))".to_string())
        } else if dense != twice_d {
            Err("F differs from 2 D_((q-1)/2)(x, 1)".to_string())
        } else {
            Ok(())
        };
        rep.record(&[("p", p as i64), ("s", s as i64), ("t", t as i64)], outcome);
    }
    rep
}

const COEFF_CS: [i64; 5] = [1, 2, 3, 5, 7];

/// Coefficients of `x^(t-1)`, `x^(t-3)`, `x^(t-5)`, `x^(t-7)` in `B(x)`
/// against `t c` and the three closed forms, over the integers.
pub fn b_coefficient_identities() -> IdentityReport {
    let mut rep = IdentityReport::new(
        "b_top_coefficients",
        "even 2 <= t <= 64, c in {1,2,3,5,7}, offsets 1,3,5,7, over Z",
    );
    for t in (2..=64u64).step_by(2) {
        for c in COEFF_CS {
            let cz = BigInt::from(c);
            let b = build_b(&Integers, t, &cz).expect("t is even");
            let top = b.coeff(t as i64 - 1);
            let expected = BigInt::from(t) * &cz;
            rep.record(
                &[("t", t as i64), ("c", c), ("offset", 1)],
                check(top == expected, || format!("got {top}, expected {expected}")),
            );
            for which in TopOffset::ALL {
                let got = b.coeff(t as i64 - which.offset());
                let expected = closed_form_coeff(&Integers, t, &cz, which);
                rep.record(
                    &[("t", t as i64), ("c", c), ("offset", which.offset())],
                    check(got == expected, || format!("got {got}, expected {expected}")),
                );
            }
        }
    }
    rep
}

/// `t c (t-1) + C(t,3) c^3 = c t (t-1) ((t-2) c^2 / 6 + 1)` in Q[c].
pub fn factored_t3_identity() -> IdentityReport {
    let mut rep = IdentityReport::new("t3_factored", "even 2 <= t <= 64, over Q[c]");
    for t in (2..=64u64).step_by(2) {
        let lhs = closed_form_in_c(t, TopOffset::Three);
        let rhs = factored_t3(t);
        rep.record(&[("t", t as i64)], check(lhs == rhs, || format!("{lhs:?} != {rhs:?}")));
    }
    rep
}

/// `2 B(x^2)` at `c = 2 eps` equals `2 sum_{odd i < 2t} C(2t, i) eps^i x^(2t-2i)`.
pub fn b_squared_identity() -> IdentityReport {
    let mut rep = IdentityReport::new("b_at_squares", "even 2 <= t <= 40, eps in {1,-1}, over Z");
    for t in (2..=40u64).step_by(2) {
        for eps in [1i64, -1] {
            let b = build_b(&Integers, t, &BigInt::from(2 * eps)).expect("t is even");
            let two = BigInt::from(2);
            let lhs = b.substitute_power(2).scale(&two);
            let rhs = b_squared_expansion(&Integers, t, eps).scale(&two);
            rep.record(
                &[("t", t as i64), ("eps", eps)],
                check(lhs == rhs, || "expansions differ".to_string()),
            );
        }
    }
    rep
}

/// `D_n(y + a/y, a) = y^n + (a/y)^n` for `y` in GF(q^2)*, with the Dickson
/// coefficients computed over GF(q) and embedded.
pub fn dickson_functional_equation() -> IdentityReport {
    let mut rep = IdentityReport::new(
        "dickson_functional_equation",
        "q in {3,5,7,9}, a in GF(q)*, 0 <= n <= 50, y in GF(q^2)*",
    );
    for q in [3u64, 5, 7, 9] {
        let (p, r) = prime_power(q).expect("grid values are prime powers");
        let (small, large) = (gf(p, r), gf(p, 2 * r));
        let embed = small.embedding(&large).expect("GF(q) sits inside GF(q^2)");
        for a in small.raw_elements().skip(1) {
            let a_big = embed[a.rank()];
            for n in 0..=50u64 {
                let d = dickson(&small, n, &a).map_ring(large.clone(), |c| embed[c.rank()]);
                let bad = large.raw_elements().skip(1).find(|&y| {
                    let a_over_y = large.mul(a_big, large.inv(y).expect("y is nonzero"));
                    let lhs = d.eval(&large.add(y, a_over_y));
                    let rhs = large.add(large.pow(y, n), large.pow(a_over_y, n));
                    lhs != rhs
                });
                rep.record(
                    &[("q", q as i64), ("a", a.rank() as i64), ("n", n as i64)],
                    check(bad.is_none(), || format!("fails at y of rank {}", bad.unwrap().rank())),
                );
            }
        }
    }
    rep
}

fn pascal_rows(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![BigInt::from(1); n + 1];
        for k in 1..n {
            row[k] = &prev[k - 1] + &prev[k];
        }
        rows.push(row);
    }
    rows
}

/// Digit-product binomials against Pascal's triangle reduced mod `p`.
pub fn lucas_agreement() -> IdentityReport {
    let mut rep = IdentityReport::new("lucas", "p in {2,3,5,7}, 0 <= m <= n <= 500");
    let rows = pascal_rows(500);
    for p in [2u64, 3, 5, 7] {
        let pb = BigInt::from(p);
        for (n, row) in rows.iter().enumerate() {
            let bad = row.iter().enumerate().find(|(m, exact)| {
                BigInt::from(binom_mod_p(n as u64, *m as u64, p)) != *exact % &pb
            });
            rep.record(
                &[("p", p as i64), ("n", n as i64)],
                check(bad.is_none(), || format!("disagrees at m = {}", bad.unwrap().0)),
            );
        }
    }
    rep
}

/// Prime powers `q <= bound`, ascending.
pub fn prime_powers_up_to(bound: u64) -> Vec<(u64, u64, u32)> {
    (2..=bound)
        .filter_map(|q| prime_power(q).map(|(p, r)| (q, p, r)))
        .collect()
}

/// `gcd(m, q-1) = 1` against brute-force bijectivity of `x^m`.
pub fn monomial_permutation_law() -> IdentityReport {
    let mut rep = IdentityReport::new("monomial_permutation", "prime powers q <= 343, 1 <= m <= 50");
    for (q, p, r) in prime_powers_up_to(343) {
        let field = gf(p, r);
        let bad = (1..=50u64).find(|&m| {
            let f = DensePoly::from_terms(field.clone(), &[(m as usize, 1)]);
            is_bijection(&f, &field).expect("same field") != monomial_permutes(m, q)
        });
        rep.record(&[("q", q as i64)], check(bad.is_none(), || format!("disagrees at m = {}", bad.unwrap())));
    }
    rep
}

/// `D_n(x, 1)` permutes GF(q) iff `gcd(n, q^2 - 1) = 1`.
pub fn dickson_permutation_law() -> IdentityReport {
    let mut rep = IdentityReport::new("dickson_permutation", "odd prime powers q <= 81, 1 <= n <= 40");
    for (q, p, r) in prime_powers_up_to(81).into_iter().filter(|t| t.1 != 2) {
        let field = gf(p, r);
        let bad = (1..=40u64).find(|&n| {
            let d = dickson(&field, n, &field.one());
            is_bijection(&d, &field).expect("same field") != (gcd(n, q * q - 1) == 1)
        });
        rep.record(&[("q", q as i64)], check(bad.is_none(), || format!("disagrees at n = {}", bad.unwrap())));
    }
    rep
}

/// The certified criteria for exceptionality over GF(p) against brute force:
/// a certified-exceptional monomial or Dickson polynomial permutes GF(p), and
/// a certified-not one permutes none of GF(p), GF(p^2), GF(p^3).
pub fn exceptional_criteria_cross_check() -> IdentityReport {
    let mut rep = IdentityReport::new(
        "exceptional_criteria",
        "p in {3,5,7,11,13}; x^m for 1 <= m <= 30 and D_n(x,1) for 1 <= n <= 30; GF(p^k), k <= 3",
    );
    for p in [3u64, 5, 7, 11, 13] {
        let fields: Vec<FieldSpec> = (1..=3).map(|k| gf(p, k)).collect();
        let base = &fields[0];
        let pattern = |f: &DensePoly<FieldSpec>| -> Vec<bool> {
            fields.iter().map(|fk| is_bijection(f, fk).expect("prime field")).collect()
        };
        for kind in ["monomial", "dickson"] {
            let bad = (1..=30u64).find(|&n| {
                let (f, exc) = if kind == "monomial" {
                    let f = DensePoly::from_terms(base.clone(), &[(n as usize, 1)]);
                    (f, monomial_verdict(n, p).status() == Status::CertifiedExceptional)
                } else {
                    (dickson(base, n, &base.one()), dickson_exceptional(n, p))
                };
                let bij = pattern(&f);
                if exc {
                    !bij[0]
                } else {
                    bij.iter().any(|&b| b)
                }
            });
            rep.record(
                &[("p", p as i64), ("dickson", (kind == "dickson") as i64)],
                check(bad.is_none(), || format!("{kind} criterion disagrees at degree {}", bad.unwrap())),
            );
        }
    }
    rep
}

/// Heuristic scans never contradict the certified monomial criterion: a
/// certified-not monomial has no bijective degree, a certified one is
/// bijective at `k = 1`.
pub fn heuristic_consistency(k_max: u32) -> IdentityReport {
    let mut rep = IdentityReport::new(
        "heuristic_vs_certified",
        format!("p in {{3,5,7}}, 1 <= m <= 12, k <= {k_max} (capped)"),
    );
    for p in [3u64, 5, 7] {
        let mut k = k_max.max(1);
        while p.pow(k) > 1 << 16 {
            k -= 1;
        }
        let base = gf(p, 1);
        for m in 1..=12u64 {
            let f = DensePoly::from_terms(base.clone(), &[(m as usize, 1)]);
            let v = heuristic_exceptional(&f, p, k).expect("within cap");
            let hits = v.bijective_degrees().expect("heuristic verdict");
            let ok = match monomial_verdict(m, p).status() {
                Status::CertifiedExceptional => hits.first() == Some(&1),
                _ => hits.is_empty(),
            };
            rep.record(
                &[("p", p as i64), ("m", m as i64), ("k_max", k as i64)],
                check(ok, || format!("bijective degrees {hits:?}")),
            );
        }
    }
    rep
}

pub fn all_identities(k_max: u32) -> Vec<IdentityReport> {
    vec![
        additive_identity(),
        dickson_shift_identity(),
        terminal_identities(),
        b_coefficient_identities(),
        factored_t3_identity(),
        b_squared_identity(),
        dickson_functional_equation(),
        lucas_agreement(),
        monomial_permutation_law(),
        dickson_permutation_law(),
        exceptional_criteria_cross_check(),
        heuristic_consistency(k_max),
    ]
}

fn random_elem(rng: &mut ChaCha8Rng, f: &FieldSpec, nonzero: bool) -> GfElem {
    let lo = nonzero as u32;
    GfElem(rng.random_range(lo..f.q()))
}

/// Random polynomial of exact degree `deg`; with `odd` set, only odd powers
/// appear.
fn random_poly(rng: &mut ChaCha8Rng, f: &FieldSpec, deg: usize, odd: bool) -> DensePoly<FieldSpec> {
    let mut coeffs: Vec<GfElem> = (0..=deg)
        .map(|k| {
            if odd && k % 2 == 0 {
                GfElem::ZERO
            } else {
                random_elem(rng, f, false)
            }
        })
        .collect();
    coeffs[deg] = random_elem(rng, f, true);
    DensePoly::new(f.clone(), coeffs)
}

fn random_degree_coprime(rng: &mut ChaCha8Rng, p: u64, range: std::ops::RangeInclusive<usize>, odd: bool) -> usize {
    loop {
        let d = rng.random_range(range.clone());
        if d as u64 % p != 0 && (!odd || d % 2 == 1) {
            return d;
        }
    }
}

const LEMMA_FIELDS: [u64; 3] = [3, 5, 7];

/// If `G(H)` is odd and `deg G` is prime to `q`, then `H - H(0)` is odd.
///
/// Even instances build an odd composite as `G = G0(x - c)`, `H = H0 + c` with
/// `G0`, `H0` odd, so the hypothesis holds without `H` being odd. Odd
/// instances take `H` with an even positive-degree term and check that the
/// composite is then not odd.
pub fn lemma_odd_composition(instances: usize, seed: u64) -> IdentityReport {
    let mut rep = IdentityReport::new(
        "odd_composition",
        format!("{instances} random instances over GF(q), q in {{3,5,7}}, seed {seed}"),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 0..instances {
        let q = LEMMA_FIELDS[rng.random_range(0..LEMMA_FIELDS.len())];
        let f = gf(q, 1);
        let (g, h, mode) = if n % 2 == 0 {
            let deg_g = random_degree_coprime(&mut rng, q, 1..=9, true);
            let g0 = random_poly(&mut rng, &f, deg_g, true);
            let deg_h = rng.random_range(0..5) * 2 + 1;
            let h0 = random_poly(&mut rng, &f, deg_h, true);
            let c = random_elem(&mut rng, &f, false);
            let shift = DensePoly::new(f.clone(), vec![f.neg(c), GfElem::ONE]);
            let g = g0.compose(&shift).expect("same ring");
            let h = &h0 + &DensePoly::constant(f.clone(), c);
            (g, h, 0)
        } else {
            let deg_g = random_degree_coprime(&mut rng, q, 1..=6, false);
            let g = random_poly(&mut rng, &f, deg_g, false);
            let deg_h = rng.random_range(2..=6);
            let mut h = random_poly(&mut rng, &f, deg_h, false).coeffs().to_vec();
            let gamma = 2 * rng.random_range(1..=deg_h / 2);
            h[gamma] = random_elem(&mut rng, &f, true);
            (g, DensePoly::new(f.clone(), h), 1)
        };
        let gh = g.compose(&h).expect("same ring");
        let deg_g = g.degree().unwrap_or(0) as u64;
        let hypothesis = gh.is_odd() && gcd(deg_g, q) == 1;
        let conclusion = h.without_constant().is_odd();
        // Even instances must meet the hypothesis, odd ones must not.
        let expected_hypothesis = mode == 0;
        let ok = (!hypothesis || conclusion) && hypothesis == expected_hypothesis;
        rep.record(
            &[("instance", n as i64), ("q", q as i64), ("mode", mode)],
            check(ok, || format!("G = {g:?}, H = {h:?}")),
        );
    }
    rep
}

/// For linear `mu = a x + e`, `nu = c x + d` with `d != 0` and odd `G` of
/// degree `beta >= 3` prime to `q`, the `x^(beta-1)` coefficient of
/// `mu(G(nu))` is `a b beta c^(beta-1) d`, which is nonzero.
pub fn lemma_linear_conjugate(instances: usize, seed: u64) -> IdentityReport {
    let mut rep = IdentityReport::new(
        "linear_conjugate",
        format!("{instances} random instances over GF(q), q in {{3,5,7}}, seed {seed}"),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    for n in 0..instances {
        let q = LEMMA_FIELDS[rng.random_range(0..LEMMA_FIELDS.len())];
        let f = gf(q, 1);
        let beta = random_degree_coprime(&mut rng, q, 3..=15, true);
        let g = random_poly(&mut rng, &f, beta, true);
        let (a, e) = (random_elem(&mut rng, &f, true), random_elem(&mut rng, &f, false));
        let (c, d) = (random_elem(&mut rng, &f, true), random_elem(&mut rng, &f, true));
        let mu = DensePoly::new(f.clone(), vec![e, a]);
        let nu = DensePoly::new(f.clone(), vec![d, c]);
        let composite = mu
            .compose(&g.compose(&nu).expect("same ring"))
            .expect("same ring");
        let b = g.coeff(beta);
        let expected = [b, f.from_int(beta as i64), f.pow(c, beta as u64 - 1), d]
            .iter()
            .fold(a, |acc, &v| f.mul(acc, v));
        let got = composite.coeff(beta - 1);
        let ok = got == expected && got != GfElem::ZERO && !composite.is_odd();
        rep.record(
            &[("instance", n as i64), ("q", q as i64), ("beta", beta as i64)],
            check(ok, || format!("coefficient {} vs expected {}", got.rank(), expected.rank())),
        );
    }
    rep
}

/// `G = (x+1)^s (x-1)^(q-s)`, `H = x^q + (x+1)^(q-s) (x-1)^s`: the composite is
/// odd, `H - H(0)` is not, and `deg G = q` so the degree hypothesis fails.
pub fn degree_hypothesis_counterexample() -> IdentityReport {
    let mut rep = IdentityReport::new("degree_hypothesis_counterexample", "q in {3,5,7}, 0 < s < q, over GF(q)");
    for q in LEMMA_FIELDS {
        let f = gf(q, 1);
        let plus = DensePoly::from_ints(f.clone(), &[1, 1]);
        let minus = DensePoly::from_ints(f.clone(), &[-1, 1]);
        for s in 1..q {
            let g = &plus.pow(s) * &minus.pow(q - s);
            let h = &DensePoly::from_terms(f.clone(), &[(q as usize, 1)])
                + &(&plus.pow(q - s) * &minus.pow(s));
            let gh = g.compose(&h).expect("same ring");
            let deg_g = g.degree().unwrap_or(0) as u64;
            let outcome = if !gh.is_odd() {
                Err("G(H) is not odd".to_string())
            } else if h.without_constant().is_odd() {
                Err("H - H(0) is odd".to_string())
            } else if gcd(deg_g, q) == 1 {
                Err(format!("deg G = {deg_g} is prime to q"))
            } else {
                Ok(())
            };
            rep.record(&[("q", q as i64), ("s", s as i64)], outcome);
        }
    }
    rep
}

pub fn all_lemmas(instances: usize, seed: u64) -> Vec<IdentityReport> {
    vec![
        lemma_odd_composition(instances, seed),
        lemma_linear_conjugate(instances, seed),
        degree_hypothesis_counterexample(),
    ]
}
