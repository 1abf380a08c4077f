//! Coefficient rings for [`DensePoly`](super::DensePoly) and
//! [`LaurentPoly`](super::LaurentPoly).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::gf::{FieldSpec, GfElem};

use super::DensePoly;

/// A commutative ring with identity, given as a context object so that
/// runtime-parameterized rings such as GF(q) need no global state.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    /// `a / 2` when it exists in the ring.
    fn halve(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
}

/// The integers, with unbounded coefficients.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_bigint(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn halve(&self, a: &BigInt) -> Option<BigInt> {
        a.is_even().then(|| a / 2)
    }
}

/// The rationals.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn halve(&self, a: &BigRational) -> Option<BigRational> {
        Some(a / BigInt::from(2))
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
}

impl Ring for FieldSpec {
    type Elem = GfElem;

    fn zero(&self) -> GfElem {
        GfElem::ZERO
    }
    fn one(&self) -> GfElem {
        GfElem::ONE
    }
    fn is_zero(&self, a: &GfElem) -> bool {
        *a == GfElem::ZERO
    }
    fn add(&self, a: &GfElem, b: &GfElem) -> GfElem {
        FieldSpec::add(self, *a, *b)
    }
    fn neg(&self, a: &GfElem) -> GfElem {
        FieldSpec::neg(self, *a)
    }
    fn sub(&self, a: &GfElem, b: &GfElem) -> GfElem {
        FieldSpec::sub(self, *a, *b)
    }
    fn mul(&self, a: &GfElem, b: &GfElem) -> GfElem {
        FieldSpec::mul(self, *a, *b)
    }
    fn from_bigint(&self, n: &BigInt) -> GfElem {
        let p = BigInt::from(self.p());
        let m = n.mod_floor(&p);
        GfElem(m.to_u32().expect("residue below p"))
    }
    fn from_i64(&self, n: i64) -> GfElem {
        FieldSpec::from_int(self, n)
    }
    fn characteristic(&self) -> u64 {
        self.p() as u64
    }
    fn halve(&self, a: &GfElem) -> Option<GfElem> {
        if self.p() == 2 {
            return None;
        }
        let half = FieldSpec::inv(self, GfElem(2)).expect("2 is a unit in odd characteristic");
        Some(FieldSpec::mul(self, *a, half))
    }
    fn pow(&self, a: &GfElem, n: u64) -> GfElem {
        FieldSpec::pow(self, *a, n)
    }
}

impl Field for FieldSpec {
    fn inv(&self, a: &GfElem) -> Option<GfElem> {
        FieldSpec::inv(self, *a).ok()
    }
}

/// Polynomials over `R` used as a coefficient ring, e.g. Z[c] for keeping a
/// parameter symbolic.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<R: Ring> {
    pub base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    /// The indeterminate of this ring.
    pub fn var(&self) -> DensePoly<R> {
        DensePoly::monomial(self.base.clone(), self.base.one(), 1)
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = DensePoly<R>;

    fn zero(&self) -> DensePoly<R> {
        DensePoly::zero(self.base.clone())
    }
    fn one(&self) -> DensePoly<R> {
        DensePoly::constant(self.base.clone(), self.base.one())
    }
    fn is_zero(&self, a: &DensePoly<R>) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &DensePoly<R>, b: &DensePoly<R>) -> DensePoly<R> {
        a + b
    }
    fn neg(&self, a: &DensePoly<R>) -> DensePoly<R> {
        -a
    }
    fn mul(&self, a: &DensePoly<R>, b: &DensePoly<R>) -> DensePoly<R> {
        a * b
    }
    fn from_bigint(&self, n: &BigInt) -> DensePoly<R> {
        DensePoly::constant(self.base.clone(), self.base.from_bigint(n))
    }
    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }
    fn halve(&self, a: &DensePoly<R>) -> Option<DensePoly<R>> {
        let coeffs = a
            .coeffs()
            .iter()
            .map(|c| self.base.halve(c))
            .collect::<Option<Vec<_>>>()?;
        Some(DensePoly::new(self.base.clone(), coeffs))
    }
}

/// Exact `C(n, k)` as a big integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
