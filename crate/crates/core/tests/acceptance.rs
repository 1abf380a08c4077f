//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use planar_core::exceptional::{
    dickson_exceptional, is_bijection, weil_certificate, Evidence, Status,
};
use planar_core::geometry::{
    hyperoval_scan, monomial_point_set, sb_coefficient_scan, SbRow,
};
use planar_core::gf::{build_field, FieldSpec, GfElem};
use planar_core::numtheory::{gcd, prime_power};
use planar_core::planar::{
    family1_members, family2_members, family_tag, in_theorem_range, is_planar_monomial,
    search_planar, Planarity,
};
use planar_core::poly::{binom_mod_p, DensePoly};
use planar_core::report::IdentityReport;
use planar_core::verify;

type Outcome = Result<String, String>;

fn gf(p: u64, r: u32) -> FieldSpec {
    build_field(p, r).unwrap()
}

fn odd_prime_powers(bound: u64) -> Vec<(u64, u64, u32)> {
    (3..=bound)
        .filter_map(|q| prime_power(q).filter(|&(p, _)| p != 2).map(|(p, r)| (q, p, r)))
        .collect()
}

fn suites(reports: &[IdentityReport]) -> Outcome {
    let points: usize = reports.iter().map(|r| r.points.len()).sum();
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(format!("{} suites, {points} grid points", reports.len())),
        Some(r) => Err(format!("{} failed: {:?}", r.identity_name, r.counterexample)),
    }
}

fn criterion_1() -> Outcome {
    let mut fields = 0;
    for (q, p, r) in odd_prime_powers(343).into_iter().filter(|t| t.2 <= 2) {
        let rep = search_planar(&gf(p, r)).map_err(|e| e.to_string())?;
        let planar: BTreeSet<u64> = rep.planar_exponents().into_iter().collect();
        let predicted: BTreeSet<u64> = rep
            .entries
            .iter()
            .filter(|e| !e.family.is_none())
            .map(|e| e.canonical_t)
            .collect();
        if planar != predicted || !rep.mismatches.is_empty() {
            return Err(format!("q = {q}: planar {planar:?}, predicted {predicted:?}"));
        }
        fields += 1;
    }
    Ok(format!("{fields} fields, zero mismatches"))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for (q, p, r) in odd_prime_powers(729) {
        let field = gf(p, r);
        for (t, _) in family1_members(p, r).into_iter().chain(family2_members(p, r)) {
            if t >= q {
                continue;
            }
            if is_planar_monomial(&field, t) != Planarity::Planar {
                return Err(format!("q = {q}, t = {t} not planar"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} family members planar"))
}

fn criterion_3() -> Outcome {
    let mut planar_seen = 0;
    for (p, r) in [(5u64, 4u32), (7, 4), (3, 8)] {
        let field = gf(p, r);
        let q = field.q() as u64;
        for t in (1..q).take_while(|&t| in_theorem_range(q, t)).filter(|t| t % p != 0) {
            if is_planar_monomial(&field, t).is_planar() {
                planar_seen += 1;
                if family_tag(p, r, t).map_err(|e| e.to_string())?.is_none() {
                    return Err(format!("q = {q}, t = {t} planar outside both families"));
                }
            }
        }
    }
    Ok(format!("{planar_seen} planar exponents in range, all in a family"))
}

fn criterion_4() -> Outcome {
    suites(&[verify::dickson_functional_equation()])
}

fn criterion_5() -> Outcome {
    suites(&[verify::b_coefficient_identities(), verify::factored_t3_identity()])
}

fn criterion_6() -> Outcome {
    let shift = verify::dickson_shift_identity();
    for (i, j) in [(1, 0), (3, 0), (2, 1), (3, 2)] {
        if !shift.points.iter().any(|pt| pt.params["i"] == i && pt.params["j"] == j) {
            return Err(format!("grid point (i, j) = ({i}, {j}) missing"));
        }
    }
    suites(&[
        verify::additive_identity(),
        shift,
        verify::terminal_identities(),
        verify::b_squared_identity(),
    ])
}

/// Binomial by the multiplicative formula, reduced at the end.
fn exact_binom_mod(n: u64, m: u64, p: u64) -> u64 {
    let mut acc = BigUint::from(1u32);
    for i in 0..m {
        acc = acc * (n - i) / (i + 1);
    }
    (acc % p).try_into().unwrap()
}

fn criterion_7() -> Outcome {
    let mut pairs = 0u64;
    for p in [2u64, 3, 5, 7] {
        for n in 0..=500u64 {
            for m in 0..=n {
                if binom_mod_p(n, m, p) != exact_binom_mod(n, m, p) {
                    return Err(format!("C({n}, {m}) mod {p}"));
                }
                pairs += 1;
            }
        }
    }
    suites(&[verify::lucas_agreement()])?;
    Ok(format!("{pairs} (n, m, p) triples agree"))
}

fn criterion_8() -> Outcome {
    let counter = verify::degree_hypothesis_counterexample();
    if !counter.points.iter().any(|pt| pt.params["q"] == 3 && pt.params["s"] == 1 && pt.pass) {
        return Err("q = 3, s = 1 counterexample not confirmed".into());
    }
    suites(&[
        verify::lemma_odd_composition(verify::DEFAULT_INSTANCES, verify::DEFAULT_SEED),
        verify::lemma_linear_conjugate(verify::DEFAULT_INSTANCES, verify::DEFAULT_SEED),
        counter,
    ])
}

/// Coefficient of `x^e` in `sum_i C(t, i) (x + 1/x)^(i-1)` mod 2, using
/// `[x^e] (x + 1/x)^n = C(n, (n + e)/2)`.
fn sb_oracle(t: u64, e: i64) -> u8 {
    let mut acc = BigUint::from(0u32);
    for i in 1..=t {
        let n = i as i64 - 1;
        if e.abs() <= n && (n + e) % 2 == 0 {
            let k = ((n + e) / 2) as u64;
            acc += big_binom(t, i) * big_binom(n as u64, k);
        }
    }
    (acc % 2u32 == BigUint::from(1u32)) as u8
}

fn big_binom(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

/// Sequential triple scan with its own determinant.
fn hyperoval_oracle(field: &FieldSpec, t: u64) -> bool {
    let mut pts: Vec<[GfElem; 3]> = field
        .raw_elements()
        .map(|c| [GfElem::ONE, c, field.pow(c, t)])
        .collect();
    pts.push([GfElem::ZERO, GfElem::ZERO, GfElem::ONE]);
    pts.push([GfElem::ZERO, GfElem::ONE, GfElem::ZERO]);
    let m = |a, b| field.mul(a, b);
    let n = pts.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (pts[i], pts[j], pts[k]);
                let d = [
                    m(a[0], m(b[1], c[2])),
                    m(a[1], m(b[2], c[0])),
                    m(a[2], m(b[0], c[1])),
                    m(a[2], m(b[1], c[0])),
                    m(a[0], m(b[2], c[1])),
                    m(a[1], m(b[0], c[2])),
                ];
                let pos = field.add(field.add(d[0], d[1]), d[2]);
                let neg = field.add(field.add(d[3], d[4]), d[5]);
                if pos == neg {
                    return false;
                }
            }
        }
    }
    true
}

fn criterion_9() -> Outcome {
    let rows: Vec<SbRow> = sb_coefficient_scan(100).map_err(|e| e.to_string())?;
    for row in &rows {
        let expected = (sb_oracle(row.t, row.t as i64 - 3), sb_oracle(row.t, row.t as i64 - 7));
        if (row.c_t3, row.c_t7) != expected {
            return Err(format!("t = {}: scan {:?}, oracle {expected:?}", row.t, (row.c_t3, row.c_t7)));
        }
    }
    let zeros: Vec<u64> = rows.iter().filter(|r| r.both_zero()).map(|r| r.t).collect();
    if zeros != vec![6] {
        return Err(format!("(0, 0) rows at t = {zeros:?}"));
    }
    let gf32 = gf(2, 5);
    if !hyperoval_scan(&monomial_point_set(&gf32, 6)).is_hyperoval || !hyperoval_oracle(&gf32, 6) {
        return Err("D(x^6) over GF(32) is not a hyperoval".into());
    }
    let mut translations = 0;
    for k in 2..=6u32 {
        let field = gf(2, k);
        for i in (1..k).filter(|&i| gcd(i as u64, k as u64) == 1) {
            let t = 1u64 << i;
            if !hyperoval_scan(&monomial_point_set(&field, t)).is_hyperoval || !hyperoval_oracle(&field, t) {
                return Err(format!("D(x^{t}) over GF(2^{k}) is not a hyperoval"));
            }
            translations += 1;
        }
    }
    Ok(format!("(0, 0) only at t = 6; D(x^6) over GF(32) and {translations} translation sets are hyperovals"))
}

/// First `(q, m)` with odd `q`, `p` not dividing `m`, `m^4 <= q`, and `x^m`
/// permuting GF(q), found by exhaustive evaluation.
fn first_weil_instance() -> (u64, u64, u32, u64) {
    for (q, p, r) in odd_prime_powers(1 << 12) {
        let field = gf(p, r);
        for m in (2..).take_while(|m: &u64| m.pow(4) <= q).filter(|m| m % p != 0) {
            let image: BTreeSet<u32> = field.raw_elements().map(|c| field.pow(c, m).0).collect();
            if image.len() as u64 == q {
                return (q, p, r, m);
            }
        }
    }
    unreachable!("x^3 permutes GF(83)")
}

fn criterion_10() -> Outcome {
    suites(&[
        verify::monomial_permutation_law(),
        verify::dickson_permutation_law(),
        verify::exceptional_criteria_cross_check(),
    ])?;
    if !(dickson_exceptional(13, 3) && dickson_exceptional(5, 3) && !dickson_exceptional(2, 5)) {
        return Err("Dickson criterion examples".into());
    }
    let (q, p, r, m) = first_weil_instance();
    if (q, m) != (83, 3) {
        return Err(format!("first Weil instance moved to q = {q}, m = {m}"));
    }
    let field = gf(p, r);
    let f = DensePoly::from_terms(gf(p, 1), &[(m as usize, 1)]);
    let v = weil_certificate(&f, &field).map_err(|e| e.to_string())?;
    let named = matches!(v.evidence(), Evidence::Criterion { name, .. } if name == "weil_bound");
    if v.status() != Status::CertifiedExceptional || !named || !is_bijection(&f, &field).unwrap() {
        return Err(format!("x^{m} over GF({q}): {v:?}"));
    }
    let linear = DensePoly::from_ints(gf(3, 1), &[1, 2]);
    if weil_certificate(&linear, &gf(3, 4)).unwrap().status() != Status::CertifiedExceptional {
        return Err("2x + 1 over GF(81) not certified".into());
    }
    Ok(format!("gcd criteria agree; Weil certificate for x^{m} over GF({q})"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("classification for r <= 2, q <= 343", criterion_1),
        ("family members planar, q <= 729", criterion_2),
        ("theorem range, q in {625, 2401, 6561}", criterion_3),
        ("Dickson functional equation", criterion_4),
        ("B(x) top coefficients", criterion_5),
        ("shift and Dickson identities", criterion_6),
        ("Lucas digit products", criterion_7),
        ("odd-composition lemmas and counterexample", criterion_8),
        ("Segre-Bartocci scan and hyperovals", criterion_9),
        ("exceptionality criteria", criterion_10),
    ];
    let mut failures = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS [{secs:.2}s] {name}: {detail}", n + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL [{secs:.2}s] {name}: {detail}", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
