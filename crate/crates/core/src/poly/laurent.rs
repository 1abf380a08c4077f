use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::Ring;
use super::{DensePoly, PolyError};

/// Laurent polynomial `sum_{k=lo}^{hi} c_k x^k`, stored densely from `lo`.
/// Both end coefficients are nonzero unless the polynomial is zero, in which
/// case `lo == 0` and nothing is stored.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<R: Ring> {
    ring: R,
    lo: i64,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> fmt::Debug for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .rev()
            .map(|(k, c)| format!("{c:?}*x^{k}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<R: Ring> LaurentPoly<R> {
    pub fn new(ring: R, lo: i64, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| ring.is_zero(c)).count();
        if lead_zeros == coeffs.len() {
            return Self::zero(ring);
        }
        coeffs.drain(..lead_zeros);
        LaurentPoly {
            ring,
            lo: lo + lead_zeros as i64,
            coeffs,
        }
    }

    pub fn zero(ring: R) -> Self {
        LaurentPoly {
            ring,
            lo: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::new(ring, 0, vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(ring: R, c: R::Elem, k: i64) -> Self {
        Self::new(ring, k, vec![c])
    }

    /// `alpha * x + gamma + beta * x^-1`.
    pub fn x_plus_inverse(ring: R, alpha: R::Elem, beta: R::Elem, gamma: R::Elem) -> Self {
        Self::new(ring, -1, vec![beta, gamma, alpha])
    }

    pub fn from_dense(f: &DensePoly<R>) -> Self {
        Self::new(f.ring().clone(), 0, f.coeffs().to_vec())
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn lo(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.lo)
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn hi(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.lo + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: i64) -> R::Elem {
        let idx = k - self.lo;
        if idx < 0 {
            return self.ring.zero();
        }
        self.coeffs
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &R::Elem)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.ring.is_zero(c))
            .map(|(i, c)| (self.lo + i as i64, c))
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
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().unwrap().max(other.hi().unwrap());
        let coeffs = (lo..=hi)
            .map(|k| self.ring.add(&self.coeff(k), &other.coeff(k)))
            .collect();
        Ok(Self::new(self.ring.clone(), lo, coeffs))
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
        Ok(Self::new(ring.clone(), self.lo + other.lo, out))
    }

    fn neg_poly(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.ring.neg(c)).collect();
        Self::new(self.ring.clone(), self.lo, coeffs)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        Self::new(self.ring.clone(), self.lo, coeffs)
    }

    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = Self::constant(self.ring.clone(), self.ring.one());
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

    /// Divides every coefficient by 2, failing if some coefficient has no half.
    pub fn halve(&self) -> Option<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| self.ring.halve(c))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(self.ring.clone(), self.lo, coeffs))
    }

    /// The substitution `x -> x^k` for `k >= 1`.
    pub fn substitute_power(&self, k: u32) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let k = k as i64;
        let len = (self.coeffs.len() - 1) * k as usize + 1;
        let mut coeffs = vec![self.ring.zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k as usize] = c.clone();
        }
        Self::new(self.ring.clone(), self.lo * k, coeffs)
    }

    /// True iff every exponent with a nonzero coefficient is divisible by `n`,
    /// i.e. the polynomial lies in `R[x^n, x^-n]`.
    pub fn support_divisible_by(&self, n: i64) -> bool {
        self.terms().all(|(k, _)| k % n == 0)
    }

    /// True iff the coefficient of `x^k` equals that of `x^-k` for all `k`.
    pub fn is_symmetric(&self) -> bool {
        self.terms().all(|(k, c)| self.coeff(-k) == *c)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<R: Ring> $tr<&LaurentPoly<R>> for &LaurentPoly<R> {
            type Output = LaurentPoly<R>;

            /// Panics if the operands live over different rings.
            fn $method(self, rhs: &LaurentPoly<R>) -> LaurentPoly<R> {
                self.$checked(rhs).expect("Laurent polynomials over different rings")
            }
        }

        impl<R: Ring> $tr for LaurentPoly<R> {
            type Output = LaurentPoly<R>;

            fn $method(self, rhs: LaurentPoly<R>) -> LaurentPoly<R> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<R: Ring> Neg for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;

    fn neg(self) -> LaurentPoly<R> {
        self.neg_poly()
    }
}

impl<R: Ring> DensePoly<R> {
    /// Exact Laurent expansion of `self(alpha*x + beta/x + gamma)`.
    pub fn substitute_laurent(&self, alpha: &R::Elem, beta: &R::Elem, gamma: &R::Elem) -> LaurentPoly<R> {
        let ring = self.ring().clone();
        let u = LaurentPoly::x_plus_inverse(ring.clone(), alpha.clone(), beta.clone(), gamma.clone());
        self.compose_laurent(&u)
    }

    /// `self(u)` for a Laurent polynomial `u`, by Horner's rule.
    pub fn compose_laurent(&self, u: &LaurentPoly<R>) -> LaurentPoly<R> {
        let ring = self.ring().clone();
        self.coeffs().iter().rev().fold(LaurentPoly::zero(ring.clone()), |acc, a| {
            &(&acc * u) + &LaurentPoly::constant(ring.clone(), a.clone())
        })
    }
}
