use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::{Field, Ring};
use super::PolyError;

/// Univariate polynomial with coefficients `coeffs[k]` of `x^k`, normalized
/// so the last stored coefficient is nonzero. The zero polynomial stores
/// nothing and has degree `None`.
#[derive(Clone, PartialEq)]
pub struct DensePoly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> fmt::Debug for DensePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if self.ring.is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c:?}")?,
                1 => write!(f, "{c:?}*x")?,
                _ => write!(f, "{c:?}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<R: Ring> DensePoly<R> {
    pub fn new(ring: R, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        DensePoly { ring, coeffs }
    }

    pub fn zero(ring: R) -> Self {
        DensePoly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: R) -> Self {
        let one = ring.one();
        Self::constant(ring, one)
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::new(ring, vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(ring: R, c: R::Elem, k: usize) -> Self {
        let mut coeffs = vec![ring.zero(); k];
        coeffs.push(c);
        Self::new(ring, coeffs)
    }

    /// The polynomial `x`.
    pub fn x(ring: R) -> Self {
        let one = ring.one();
        Self::monomial(ring, one, 1)
    }

    /// Coefficients given as machine integers, low degree first.
    pub fn from_ints(ring: R, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| ring.from_i64(c)).collect();
        Self::new(ring, coeffs)
    }

    /// `sum_k c_k x^k` from sparse `(k, c_k)` pairs.
    pub fn from_terms(ring: R, terms: &[(usize, i64)]) -> Self {
        let deg = terms.iter().map(|&(k, _)| k).max().unwrap_or(0);
        let mut coeffs = vec![ring.zero(); deg + 1];
        for &(k, c) in terms {
            coeffs[k] = ring.add(&coeffs[k], &ring.from_i64(c));
        }
        Self::new(ring, coeffs)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> R::Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn leading(&self) -> Option<&R::Elem> {
        self.coeffs.last()
    }

    /// Nonzero terms as `(degree, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &R::Elem)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.ring.is_zero(c))
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => self.ring.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Self::new(self.ring.clone(), coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&other.neg_poly())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ring.clone()));
        }
        let ring = &self.ring;
        let mut out = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !ring.is_zero(b) {
                    out[i + j] = ring.add(&out[i + j], &ring.mul(a, b));
                }
            }
        }
        Ok(Self::new(ring.clone(), out))
    }

    fn neg_poly(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Self::new(self.ring.clone(), coeffs)
    }

    /// `c * self`.
    pub fn scale(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        Self::new(self.ring.clone(), coeffs)
    }

    /// Horner evaluation at `c`.
    pub fn eval(&self, c: &R::Elem) -> R::Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(self.ring.zero(), |acc, a| self.ring.add(&self.ring.mul(&acc, c), a))
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = Self::one(self.ring.clone());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(h(x))`, by Horner's rule in the polynomial ring.
    pub fn compose(&self, h: &Self) -> Result<Self, PolyError> {
        self.check_ring(h)?;
        let mut acc = Self::zero(self.ring.clone());
        for a in self.coeffs.iter().rev() {
            acc = acc.checked_mul(h)?;
            acc = acc.checked_add(&Self::constant(self.ring.clone(), a.clone()))?;
        }
        Ok(acc)
    }

    /// True iff every nonzero coefficient sits at an odd degree. The zero
    /// polynomial is odd.
    pub fn is_odd(&self) -> bool {
        self.terms().all(|(k, _)| k % 2 == 1)
    }

    /// `self(-x)`.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { self.ring.neg(c) } else { c.clone() })
            .collect();
        Self::new(self.ring.clone(), coeffs)
    }

    /// Image under a coefficient map into another ring.
    pub fn map_ring<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> DensePoly<S> {
        let coeffs = self.coeffs.iter().map(f).collect();
        DensePoly::new(target, coeffs)
    }

    /// `self - self(0)`.
    pub fn without_constant(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        if let Some(c0) = coeffs.first_mut() {
            *c0 = self.ring.zero();
        }
        Self::new(self.ring.clone(), coeffs)
    }
}

impl<F: Field> DensePoly<F> {
    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        self.check_ring(d)?;
        let ring = &self.ring;
        let dd = d.degree().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = ring
            .inv(d.leading().expect("nonzero divisor"))
            .ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        let quot_len = rem.len().saturating_sub(dd);
        let mut quot = vec![ring.zero(); quot_len];
        for k in (0..quot_len).rev() {
            let c = ring.mul(&rem[k + dd], &lead_inv);
            if ring.is_zero(&c) {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] = ring.sub(&rem[k + j], &ring.mul(&c, dj));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(ring.clone(), quot), Self::new(ring.clone(), rem)))
    }

    /// Scales to leading coefficient 1; the zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => {
                let inv = self.ring.inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<R: Ring> $tr<&DensePoly<R>> for &DensePoly<R> {
            type Output = DensePoly<R>;

            /// Panics if the operands live over different rings.
            fn $method(self, rhs: &DensePoly<R>) -> DensePoly<R> {
                self.$checked(rhs).expect("polynomials over different rings")
            }
        }

        impl<R: Ring> $tr for DensePoly<R> {
            type Output = DensePoly<R>;

            fn $method(self, rhs: DensePoly<R>) -> DensePoly<R> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<R: Ring> Neg for &DensePoly<R> {
    type Output = DensePoly<R>;

    fn neg(self) -> DensePoly<R> {
        self.neg_poly()
    }
}

impl<R: Ring> Neg for DensePoly<R> {
    type Output = DensePoly<R>;

    fn neg(self) -> DensePoly<R> {
        self.neg_poly()
    }
}
