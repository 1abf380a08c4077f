use num_bigint::BigInt;
use proptest::prelude::*;
use rayon::prelude::*;

use planar_core::exceptional::is_bijection;
use planar_core::geometry::{collinear, is_hyperoval, monomial_point_set, ProjectivePoint};
use planar_core::gf::{build_field, FieldSpec, GfElem};
use planar_core::numtheory::prime_power;
use planar_core::planar::{
    canonicalize, exponent_orbit, family_tag, is_planar_function, is_planar_monomial, power_table,
};
use planar_core::poly::difference::build_b;
use planar_core::poly::{decompose_tame, dickson, DensePoly, Integers};

const SMALL_FIELDS: [(u64, u32); 10] = [
    (2, 1),
    (2, 3),
    (3, 1),
    (3, 2),
    (3, 3),
    (5, 1),
    (5, 2),
    (7, 1),
    (7, 2),
    (11, 1),
];

fn gf(p: u64, r: u32) -> FieldSpec {
    build_field(p, r).unwrap()
}

fn odd_fields(bound: u64) -> Vec<FieldSpec> {
    (3..=bound)
        .filter_map(prime_power)
        .filter(|&(p, _)| p != 2)
        .map(|(p, r)| gf(p, r))
        .collect()
}

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(SMALL_FIELDS.to_vec()).prop_map(|(p, r)| gf(p, r))
}

fn elem(f: &FieldSpec, seed: u32) -> GfElem {
    GfElem(seed % f.q())
}

fn poly_from(f: &FieldSpec, seeds: &[u32]) -> DensePoly<FieldSpec> {
    DensePoly::new(f.clone(), seeds.iter().map(|&s| elem(f, s)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn frobenius_is_additive(f in field_strategy(), a in any::<u32>(), b in any::<u32>()) {
        let (a, b) = (elem(&f, a), elem(&f, b));
        let p = f.p() as u64;
        prop_assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
    }

    #[test]
    fn inverses(f in field_strategy(), a in 1u32..) {
        let a = GfElem(1 + a % (f.q() - 1));
        prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), GfElem::ONE);
    }

    #[test]
    fn composition_is_associative(
        f in field_strategy(),
        g in prop::collection::vec(any::<u32>(), 1..5),
        h in prop::collection::vec(any::<u32>(), 1..4),
        k in prop::collection::vec(any::<u32>(), 1..4),
    ) {
        let (g, h, k) = (poly_from(&f, &g), poly_from(&f, &h), poly_from(&f, &k));
        let left = g.compose(&h).unwrap().compose(&k).unwrap();
        let right = g.compose(&h.compose(&k).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    /// Compose a random tame pair over GF(7) and recover a decomposition.
    #[test]
    fn tame_round_trip(
        g in prop::collection::vec(0u32..7, 2..5),
        h in prop::collection::vec(0u32..7, 2..4),
    ) {
        let f7 = gf(7, 1);
        let mut g = poly_from(&f7, &g).coeffs().to_vec();
        let mut h = poly_from(&f7, &h).coeffs().to_vec();
        g.resize(g.len().max(2), GfElem::ZERO);
        h.resize(h.len().max(2), GfElem::ZERO);
        *g.last_mut().unwrap() = GfElem(3);
        *h.last_mut().unwrap() = GfElem(5);
        let (g, h) = (DensePoly::new(f7.clone(), g), DensePoly::new(f7.clone(), h));
        let f = g.compose(&h).unwrap();
        let d = h.degree().unwrap();
        let (g2, h2) = decompose_tame(&f, d).unwrap().expect("a decomposition exists");
        prop_assert_eq!(g2.compose(&h2).unwrap(), f);
        prop_assert_eq!(h2.degree(), Some(d));
        prop_assert_eq!(h2.coeff(0), GfElem::ZERO);
    }

    #[test]
    fn b_is_symmetric(half_t in 1u64..16, c in -9i64..10) {
        let b = build_b(&Integers, 2 * half_t, &BigInt::from(c)).unwrap();
        prop_assert!(b.is_symmetric());
        prop_assert_eq!(b.coeff(2 * half_t as i64 - 1), BigInt::from(2 * half_t as i64 * c));
    }

    #[test]
    fn canonical_class(idx in 0usize..6, t in 1u64..1_000_000) {
        let (p, r) = [(3u64, 3u32), (3, 4), (5, 2), (5, 3), (7, 2), (11, 2)][idx];
        let f = gf(p, r);
        let q = f.q() as u64;
        let class = canonicalize(&f, t).unwrap();
        prop_assert!(class.t() >= 1 && class.t() < q && class.t() % p != 0);
        prop_assert!(class.canonical() <= class.t());
        prop_assert!(class.canonical() % p != 0);
        prop_assert!(exponent_orbit(p, q, class.t()).contains(&class.canonical()));
        prop_assert_eq!(
            is_planar_monomial(&f, t),
            is_planar_monomial(&f, class.canonical())
        );
    }

    #[test]
    fn family_tag_is_orbit_invariant(idx in 0usize..4, t in 1u64..2000) {
        let (p, r) = [(3u64, 5u32), (3, 3), (5, 3), (7, 3)][idx];
        let q = p.pow(r);
        let t = t % q;
        prop_assume!(t > 0 && t % p != 0);
        let tag = family_tag(p, r, t).unwrap();
        for m in exponent_orbit(p, q, t).into_iter().filter(|m| m % p != 0) {
            prop_assert_eq!(family_tag(p, r, m).unwrap(), tag);
        }
    }

    /// A bijective composite forces a bijective inner component.
    #[test]
    fn composite_bijection_needs_bijective_inner(
        idx in 0usize..5,
        g in prop::collection::vec(any::<u32>(), 2..5),
        h in prop::collection::vec(any::<u32>(), 2..5),
    ) {
        let (p, r) = [(3u64, 1u32), (3, 2), (5, 2), (7, 2), (2, 3)][idx];
        let f = gf(p, r);
        let (g, h) = (poly_from(&f, &g), poly_from(&f, &h));
        if is_bijection(&g.compose(&h).unwrap(), &f).unwrap() {
            prop_assert!(is_bijection(&h, &f).unwrap());
            prop_assert!(is_bijection(&g, &f).unwrap());
        }
    }

    #[test]
    fn collinearity_ignores_scaling(
        f in field_strategy(),
        pts in prop::collection::vec((any::<u32>(), any::<u32>(), any::<u32>()), 3),
        scale in 1u32..,
    ) {
        let pt = |(a, b, c): (u32, u32, u32)| [elem(&f, a), elem(&f, b), elem(&f, c)];
        let coords: Vec<[GfElem; 3]> = pts.into_iter().map(pt).collect();
        prop_assume!(coords.iter().all(|c| c.iter().any(|&x| x != GfElem::ZERO)));
        let s = GfElem(1 + scale % (f.q() - 1));
        let base: Vec<ProjectivePoint> =
            coords.iter().map(|&c| ProjectivePoint::new(&f, c).unwrap()).collect();
        let scaled = ProjectivePoint::new(&f, coords[0].map(|x| f.mul(x, s))).unwrap();
        prop_assert_eq!(&scaled, &base[0]);
        prop_assert_eq!(
            collinear(&base[0], &base[1], &base[2]).unwrap(),
            collinear(&scaled, &base[1], &base[2]).unwrap()
        );
    }
}

/// For a monomial the shift `a = 1` decides planarity: checked against the
/// full definition for every odd q <= 343 and every t < q prime to p.
#[test]
fn single_shift_sufficiency() {
    odd_fields(343).par_iter().for_each(|f| {
        let p = f.p() as u64;
        for t in (1..f.q() as u64).filter(|t| t % p != 0) {
            let full = is_planar_function(f, &power_table(f, t));
            assert_eq!(full, is_planar_monomial(f, t).is_planar(), "q={} t={t}", f.q());
        }
    });
}

#[test]
fn planarity_is_orbit_invariant() {
    for f in odd_fields(81) {
        let (p, q) = (f.p() as u64, f.q() as u64);
        for t in (1..q).filter(|t| t % p != 0) {
            let v = is_planar_monomial(&f, t);
            for m in exponent_orbit(p, q, t) {
                assert_eq!(is_planar_monomial(&f, m), v, "q={q} t={t} m={m}");
            }
        }
    }
}

#[test]
fn dickson_parity() {
    for (p, r) in [(3, 2), (5, 1), (7, 1)] {
        let f = gf(p, r);
        for a in f.raw_elements().skip(1) {
            for n in 0..=50u64 {
                let d = dickson(&f, n, &a);
                let expected = if n % 2 == 0 { d.clone() } else { -d.clone() };
                assert_eq!(d.reflect(), expected, "q={} n={n}", f.q());
            }
        }
    }
    for n in 0..=50u64 {
        let d = dickson(&Integers, n, &BigInt::from(3));
        let expected = if n % 2 == 0 { d.clone() } else { -d.clone() };
        assert_eq!(d.reflect(), expected);
    }
}

#[test]
fn hyperconics_and_translation_sets() {
    for k in 2..=6u32 {
        let f = gf(2, k);
        assert!(is_hyperoval(&monomial_point_set(&f, 2)), "k={k}");
        for i in 1..k {
            let expected = planar_core::numtheory::gcd(i as u64, k as u64) == 1;
            if expected {
                assert!(is_hyperoval(&monomial_point_set(&f, 1 << i)), "k={k} i={i}");
            }
        }
    }
}

#[test]
fn odd_order_monomial_sets_never_hyperovals() {
    for f in odd_fields(27) {
        for t in 2..6 {
            assert!(!is_hyperoval(&monomial_point_set(&f, t)), "q={} t={t}", f.q());
        }
    }
}
