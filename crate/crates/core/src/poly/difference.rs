//! Differences of shifted powers and the Laurent polynomial
//! `B(x) = ((u + c)^t - (u - c)^t) / 2` with `u = x + 1/x`, together with
//! closed forms for its coefficients at `x^(t-3)`, `x^(t-5)` and `x^(t-7)`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ring::{binomial, Rationals, Ring};
use super::{DensePoly, LaurentPoly, PolyError, PolyRing};

/// Which top coefficient of `B(x)` a closed form describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TopOffset {
    /// `x^(t-3)`
    Three,
    /// `x^(t-5)`
    Five,
    /// `x^(t-7)`
    Seven,
}

impl TopOffset {
    pub const ALL: [TopOffset; 3] = [TopOffset::Three, TopOffset::Five, TopOffset::Seven];

    pub fn offset(self) -> i64 {
        match self {
            TopOffset::Three => 3,
            TopOffset::Five => 5,
            TopOffset::Seven => 7,
        }
    }
}

/// `(x + 1)^t - x^t`.
pub fn shift_difference<R: Ring>(ring: &R, t: u64) -> DensePoly<R> {
    let x = DensePoly::x(ring.clone());
    let one = DensePoly::one(ring.clone());
    &(&x + &one).pow(t) - &x.pow(t)
}

/// `(x + 2)^t - (x - 2)^t`.
pub fn centered_difference<R: Ring>(ring: &R, t: u64) -> DensePoly<R> {
    let x = DensePoly::x(ring.clone());
    let two = DensePoly::constant(ring.clone(), ring.from_i64(2));
    &(&x + &two).pow(t) - &(&x - &two).pow(t)
}

/// `B(x)` for even `t >= 2`.
pub fn build_b<R: Ring>(ring: &R, t: u64, c: &R::Elem) -> Result<LaurentPoly<R>, PolyError> {
    if t < 2 || t % 2 == 1 {
        return Err(PolyError::BadExponent(t));
    }
    if ring.characteristic() == 2 {
        return Err(PolyError::EvenCharacteristic);
    }
    let one = ring.one();
    let zero = ring.zero();
    let plus = LaurentPoly::x_plus_inverse(ring.clone(), one.clone(), one.clone(), c.clone());
    let minus = LaurentPoly::x_plus_inverse(ring.clone(), one.clone(), one, ring.sub(&zero, c));
    (&plus.pow(t) - &minus.pow(t))
        .halve()
        .ok_or(PolyError::EvenCharacteristic)
}

/// Closed form for a top coefficient of `B(x)`, evaluated in `ring`:
///
/// * `x^(t-3)`: `t c (t-1) + C(t,3) c^3`
/// * `x^(t-5)`: `t c C(t-1,2) + C(t,3) c^3 (t-3) + C(t,5) c^5`
/// * `x^(t-7)`: `t c C(t-1,3) + C(t,3) c^3 C(t-3,2) + C(t,5) c^5 (t-5) + C(t,7) c^7`
///
/// Binomials with bottom above top vanish, so small `t` is allowed.
pub fn closed_form_coeff<R: Ring>(ring: &R, t: u64, c: &R::Elem, which: TopOffset) -> R::Elem {
    let big = |n: BigInt| ring.from_bigint(&n);
    let bin = |n: u64, k: u64| big(binomial(n, k));
    let tt = big(BigInt::from(t));
    let signed = |k: i64| big(BigInt::from(t as i64 - k));
    let cp = |k: u64| ring.pow(c, k);
    let term = |factors: &[R::Elem]| {
        factors
            .iter()
            .fold(ring.one(), |acc, f| ring.mul(&acc, f))
    };
    let bin_sub = |k: u64, m: u64| if t >= k { bin(t - k, m) } else { ring.zero() };
    let parts: Vec<R::Elem> = match which {
        TopOffset::Three => vec![
            term(&[tt.clone(), c.clone(), signed(1)]),
            term(&[bin(t, 3), cp(3)]),
        ],
        TopOffset::Five => vec![
            term(&[tt.clone(), c.clone(), bin_sub(1, 2)]),
            term(&[bin(t, 3), cp(3), signed(3)]),
            term(&[bin(t, 5), cp(5)]),
        ],
        TopOffset::Seven => vec![
            term(&[tt.clone(), c.clone(), bin_sub(1, 3)]),
            term(&[bin(t, 3), cp(3), bin_sub(3, 2)]),
            term(&[bin(t, 5), cp(5), signed(5)]),
            term(&[bin(t, 7), cp(7)]),
        ],
    };
    parts.iter().fold(ring.zero(), |acc, p| ring.add(&acc, p))
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `DensePoly` in the indeterminate `c` over the rationals.
fn c_poly(terms: &[(usize, BigRational)]) -> DensePoly<Rationals> {
    let deg = terms.iter().map(|(k, _)| *k).max().unwrap_or(0);
    let mut coeffs = vec![rat(0, 1); deg + 1];
    for (k, v) in terms {
        coeffs[*k] += v;
    }
    DensePoly::new(Rationals, coeffs)
}

/// The closed form of [`closed_form_coeff`] as a polynomial in `c` over Q.
pub fn closed_form_in_c(t: u64, which: TopOffset) -> DensePoly<Rationals> {
    let ring = PolyRing::new(Rationals);
    let c = ring.var();
    closed_form_coeff(&ring, t, &c, which)
}

/// `c t (t-1) ((t-2)/6 c^2 + 1)`, the factored `x^(t-3)` coefficient.
pub fn factored_t3(t: u64) -> DensePoly<Rationals> {
    let t = t as i64;
    let scale = rat(t * (t - 1), 1);
    c_poly(&[(1, scale.clone()), (3, scale * rat(t - 2, 6))])
}

/// Simplified `x^(t-5)` and `x^(t-7)` coefficients, valid once
/// `(t-2)/6 c^2 = -1` is imposed:
///
/// * `c^3 t(t-1)/2 (t-1/2)(t-4)/15`
/// * `-2 c^5 t(t-1)(t+1)(t-1/2)(t-3)(t-5) / (3^3 5 7)`
///
/// Both vanish exactly when `t` is a root of the displayed linear factors.
pub fn reduced_form(t: u64, which: TopOffset) -> DensePoly<Rationals> {
    let tq = rat(t as i64, 1);
    let half = rat(1, 2);
    let one = rat(1, 1);
    match which {
        TopOffset::Three => factored_t3(t),
        TopOffset::Five => {
            let v = &tq * (&tq - &one) / rat(2, 1) * (&tq - &half) * (&tq - rat(4, 1)) / rat(15, 1);
            c_poly(&[(3, v)])
        }
        TopOffset::Seven => {
            let v = -(rat(2, 1) * &tq * (&tq - &one) * (&tq + &one) * (&tq - &half) * (&tq - rat(3, 1)) * (&tq - rat(5, 1)))
                / rat(27 * 5 * 7, 1);
            c_poly(&[(5, v)])
        }
    }
}

/// Reduces a polynomial in `c` modulo `c^2 + 6/(t-2)`, i.e. imposes
/// `(t-2)/6 c^2 = -1`. Requires `t != 2`.
pub fn impose_t3_relation(f: &DensePoly<Rationals>, t: u64) -> DensePoly<Rationals> {
    assert_ne!(t, 2, "the relation is vacuous at t = 2");
    let relation = c_poly(&[(0, rat(6, t as i64 - 2)), (2, rat(1, 1))]);
    f.div_rem(&relation).expect("nonzero modulus").1
}

/// `sum_{0 < i < 2t, i odd} C(2t, i) eps^i x^(2t - 2i)` for `eps = +-1`;
/// equal to `B(x^2)` at `c = 2 eps`.
pub fn b_squared_expansion<R: Ring>(ring: &R, t: u64, eps: i64) -> LaurentPoly<R> {
    assert!(eps == 1 || eps == -1);
    (1..2 * t).step_by(2).fold(LaurentPoly::zero(ring.clone()), |acc, i| {
        let coeff = binomial(2 * t, i) * BigInt::from(eps);
        let term = LaurentPoly::monomial(ring.clone(), ring.from_bigint(&coeff), 2 * t as i64 - 2 * i as i64);
        &acc + &term
    })
}

/// `F(x^2 + x^-2)` for `F = (x+2)^t - (x-2)^t`.
pub fn centered_difference_at_squares<R: Ring>(ring: &R, t: u64) -> LaurentPoly<R> {
    let one = ring.one();
    centered_difference(ring, t)
        .substitute_laurent(&one, &one, &ring.zero())
        .substitute_power(2)
}
