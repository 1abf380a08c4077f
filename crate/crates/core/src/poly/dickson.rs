use super::ring::Ring;
use super::DensePoly;

/// Dickson polynomial of the first kind `D_n(x, a)`, built from
/// `D_0 = 2`, `D_1 = x`, `D_n = x D_{n-1} - a D_{n-2}`.
///
/// It satisfies `D_n(y + a/y, a) = y^n + (a/y)^n`.
pub fn dickson<R: Ring>(ring: &R, n: u64, a: &R::Elem) -> DensePoly<R> {
    let two = DensePoly::constant(ring.clone(), ring.from_i64(2));
    if n == 0 {
        return two;
    }
    let x = DensePoly::x(ring.clone());
    let (mut prev, mut cur) = (two, x.clone());
    for _ in 1..n {
        let next = &(&x * &cur) - &prev.scale(a);
        prev = cur;
        cur = next;
    }
    cur
}

/// Whether `f` can be written as `G(D_n(x, a))` for some polynomial `G`, tested
/// by checking that `f(x + a/x)` only has exponents divisible by `n`.
///
/// Needs `a` invertible and `n` coprime to the characteristic for the converse
/// direction to hold; callers outside that range get a one-sided test.
pub fn is_function_of_dickson<R: Ring>(f: &DensePoly<R>, n: u64, a: &R::Elem) -> bool {
    let ring = f.ring();
    f.substitute_laurent(&ring.one(), a, &ring.zero())
        .support_divisible_by(n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_field;
    use crate::poly::{Integers, LaurentPoly};
    use num_bigint::BigInt;

    #[test]
    fn small_cases() {
        let a = BigInt::from(7);
        assert_eq!(dickson(&Integers, 0, &a), DensePoly::from_ints(Integers, &[2]));
        assert_eq!(dickson(&Integers, 2, &a), DensePoly::from_ints(Integers, &[-14, 0, 1]));
        assert_eq!(
            dickson(&Integers, 5, &BigInt::from(1)),
            DensePoly::from_ints(Integers, &[0, 5, 0, -5, 0, 1])
        );
    }

    #[test]
    fn functional_equation_symbolic() {
        for a in [-3i64, 1, 2, 5] {
            let a = BigInt::from(a);
            for n in 0..=30u64 {
                let lhs = dickson(&Integers, n, &a).substitute_laurent(&BigInt::from(1), &a, &BigInt::from(0));
                let rhs = &LaurentPoly::monomial(Integers, BigInt::from(1), n as i64)
                    + &LaurentPoly::monomial(Integers, a.pow(n as u32), -(n as i64));
                assert_eq!(lhs, rhs, "n={n} a={a}");
            }
        }
    }

    #[test]
    fn odd_index_gives_odd_polynomial() {
        for n in (1..=49).step_by(2) {
            for a in [1i64, -2, 3] {
                assert!(dickson(&Integers, n, &BigInt::from(a)).is_odd(), "n={n}");
            }
        }
    }

    #[test]
    fn dickson_right_factor_detection() {
        let gf7 = build_field(7, 1).unwrap();
        let a = gf7.from_int(3);
        let d5 = dickson(&gf7, 5, &a);
        let g = DensePoly::from_ints(gf7.clone(), &[1, 4, 0, 2]);
        let f = g.compose(&d5).unwrap();
        assert!(is_function_of_dickson(&f, 5, &a));
        let not = &f + &DensePoly::x(gf7.clone());
        assert!(!is_function_of_dickson(&not, 5, &a));
    }
}
