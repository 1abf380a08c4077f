//! Finite fields GF(p^r) in a polynomial basis.
//!
//! An element is stored as its rank `c_0 + c_1 p + ... + c_{r-1} p^{r-1}`, where
//! `c_0 + c_1 x + ... + c_{r-1} x^{r-1}` is its residue modulo the field modulus.
//! Ranks double as indices into occupancy bitmaps, and the prime subfield
//! occupies ranks `0..p`.
//!
//! [`FieldSpec`] is a cheaply clonable handle. Hot loops use its raw methods on
//! [`GfElem`]; [`FieldElement`] pairs a value with its field and checks that
//! operands agree.
//!
//! ```
//! use planar_core::gf::build_field;
//!
//! let gf9 = build_field(3, 2).unwrap();
//! assert_eq!(gf9.modulus(), &[1, 0, 1]); // x^2 + 1
//! let x = gf9.element(&[0, 1]).unwrap();
//! assert_eq!(x.mul(&x).unwrap().coeffs(), vec![2, 0]);
//! ```

mod prime_poly;

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::numtheory::{checked_pow, is_prime, prime_factors};

pub use prime_poly::is_irreducible;

/// Largest field order accepted by [`build_field`].
pub const DEFAULT_FIELD_CAP: u64 = 1 << 22;

/// Fields up to this order get discrete log / antilog tables.
const TABLE_LIMIT: u64 = 1 << 16;

const TABLE_CHECK_PAIRS: usize = 1000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field too large: {p}^{r} exceeds the cap {cap}")]
    FieldTooLarge { p: u64, r: u32, cap: u64 },
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("expected {expected} coordinates in [0, {p}), got {got:?}")]
    BadCoordinates { expected: usize, p: u32, got: Vec<u32> },
    #[error("GF({p}^{small}) is not a subfield of GF({p}^{large})")]
    NotSubfield { p: u32, small: u32, large: u32 },
    #[error("log tables disagree with polynomial-basis multiplication at ({0}, {1})")]
    TableMismatch(u32, u32),
}

/// Raw element of some field, identified by its rank.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfElem(pub u32);

impl GfElem {
    pub const ZERO: GfElem = GfElem(0);
    pub const ONE: GfElem = GfElem(1);

    pub fn rank(self) -> usize {
        self.0 as usize
    }
}

struct LogTables {
    /// `exp[i] = g^i` for `i < 2(q-1)`, doubled so sums of two logs need no reduction.
    exp: Vec<u32>,
    /// `log[g^i] = i`; entry 0 unused.
    log: Vec<u32>,
}

struct Inner {
    p: u32,
    r: u32,
    q: u32,
    modulus: Vec<u32>,
    /// Coefficients of `x^r` reduced modulo the modulus.
    reduction: Vec<u32>,
    tables: Option<LogTables>,
}

/// A concrete field GF(p^r) with a fixed modulus.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<Inner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r() == 1 {
            write!(f, "GF({})", self.p())
        } else {
            write!(f, "GF({}^{})", self.p(), self.r())
        }
    }
}

/// Builds GF(p^r) with the default size cap.
pub fn build_field(p: u64, r: u32) -> Result<FieldSpec, GfError> {
    build_field_with_cap(p, r, DEFAULT_FIELD_CAP)
}

/// Builds GF(p^r). The modulus is the monic irreducible of degree `r` whose
/// lower coefficients have the smallest rank, so repeated calls agree.
pub fn build_field_with_cap(p: u64, r: u32, cap: u64) -> Result<FieldSpec, GfError> {
    if !is_prime(p) {
        return Err(GfError::NotPrime(p));
    }
    if r == 0 {
        return Err(GfError::ZeroDegree);
    }
    let q = match checked_pow(p, r) {
        Some(q) if q <= cap && q <= u32::MAX as u64 => q,
        _ => return Err(GfError::FieldTooLarge { p, r, cap }),
    };
    let p32 = p as u32;
    let modulus = prime_poly::smallest_irreducible(p32, r);
    let reduction = modulus[..r as usize]
        .iter()
        .map(|&m| (p32 - m) % p32)
        .collect();
    let mut field = FieldSpec {
        inner: Arc::new(Inner {
            p: p32,
            r,
            q: q as u32,
            modulus,
            reduction,
            tables: None,
        }),
    };
    if q <= TABLE_LIMIT {
        let tables = field.build_tables()?;
        Arc::get_mut(&mut field.inner)
            .expect("freshly built field is uniquely owned")
            .tables = Some(tables);
    }
    Ok(field)
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn r(&self) -> u32 {
        self.inner.r
    }

    pub fn q(&self) -> u32 {
        self.inner.q
    }

    /// Modulus coefficients, low degree first, monic of length `r + 1`.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn has_log_tables(&self) -> bool {
        self.inner.tables.is_some()
    }

    pub fn zero(&self) -> GfElem {
        GfElem::ZERO
    }

    pub fn one(&self) -> GfElem {
        GfElem::ONE
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> GfElem {
        GfElem(n.rem_euclid(self.inner.p as i64) as u32)
    }

    /// Polynomial-basis coordinates `(c_0, ..., c_{r-1})` of `a`.
    pub fn digits(&self, a: GfElem) -> Vec<u32> {
        let p = self.inner.p;
        let mut m = a.0;
        (0..self.inner.r)
            .map(|_| {
                let d = m % p;
                m /= p;
                d
            })
            .collect()
    }

    fn from_digits(&self, digits: &[u32]) -> GfElem {
        let p = self.inner.p;
        GfElem(digits.iter().rev().fold(0, |acc, &d| acc * p + d))
    }

    pub fn add(&self, a: GfElem, b: GfElem) -> GfElem {
        let Inner { p, r, .. } = *self.inner;
        if r == 1 {
            return GfElem((a.0 + b.0) % p);
        }
        if p == 2 {
            return GfElem(a.0 ^ b.0);
        }
        let (mut x, mut y, mut place, mut out) = (a.0, b.0, 1u32, 0u32);
        while x != 0 || y != 0 {
            let s = (x % p + y % p) % p;
            out += s * place;
            place *= p;
            x /= p;
            y /= p;
        }
        GfElem(out)
    }

    pub fn neg(&self, a: GfElem) -> GfElem {
        let p = self.inner.p;
        if p == 2 {
            return a;
        }
        if self.inner.r == 1 {
            return GfElem((p - a.0) % p);
        }
        let (mut x, mut place, mut out) = (a.0, 1u32, 0u32);
        while x != 0 {
            out += ((p - x % p) % p) * place;
            place *= p;
            x /= p;
        }
        GfElem(out)
    }

    pub fn sub(&self, a: GfElem, b: GfElem) -> GfElem {
        self.add(a, self.neg(b))
    }

    /// `a + 1`, computed on the rank directly.
    pub fn succ(&self, a: GfElem) -> GfElem {
        let p = self.inner.p;
        if a.0 % p == p - 1 {
            GfElem(a.0 + 1 - p)
        } else {
            GfElem(a.0 + 1)
        }
    }

    pub fn mul(&self, a: GfElem, b: GfElem) -> GfElem {
        if a.0 == 0 || b.0 == 0 {
            return GfElem::ZERO;
        }
        match &self.inner.tables {
            Some(t) => GfElem(t.exp[(t.log[a.rank()] + t.log[b.rank()]) as usize]),
            None => self.mul_poly_basis(a, b),
        }
    }

    /// Multiplication by schoolbook product and reduction, bypassing the tables.
    pub fn mul_poly_basis(&self, a: GfElem, b: GfElem) -> GfElem {
        let Inner {
            p, r, ref reduction, ..
        } = *self.inner;
        if r == 1 {
            return GfElem(((a.0 as u64 * b.0 as u64) % p as u64) as u32);
        }
        let p64 = p as u64;
        let (da, db) = (self.digits(a), self.digits(b));
        let r = r as usize;
        let mut prod = vec![0u64; 2 * r - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p64;
            }
        }
        for k in (r..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &red) in reduction.iter().enumerate() {
                prod[k - r + i] = (prod[k - r + i] + c * red as u64) % p64;
            }
        }
        let digits: Vec<u32> = prod[..r].iter().map(|&c| c as u32).collect();
        self.from_digits(&digits)
    }

    pub fn pow(&self, a: GfElem, n: u64) -> GfElem {
        if n == 0 {
            return GfElem::ONE;
        }
        if a.0 == 0 {
            return GfElem::ZERO;
        }
        let order = self.inner.q as u64 - 1;
        match &self.inner.tables {
            Some(t) => {
                let e = (t.log[a.rank()] as u64 * (n % order)) % order;
                GfElem(t.exp[e as usize])
            }
            None => self.pow_poly_basis(a, n % order + order),
        }
    }

    fn pow_poly_basis(&self, a: GfElem, mut n: u64) -> GfElem {
        let mut acc = GfElem::ONE;
        let mut base = a;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul_poly_basis(acc, base);
            }
            base = self.mul_poly_basis(base, base);
            n >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: GfElem) -> Result<GfElem, GfError> {
        if a.0 == 0 {
            return Err(GfError::ZeroInverse);
        }
        let order = self.inner.q - 1;
        Ok(match &self.inner.tables {
            Some(t) => GfElem(t.exp[((order - t.log[a.rank()]) % order) as usize]),
            None => self.pow_poly_basis(a, order as u64 - 1),
        })
    }

    /// All `q` elements in ascending rank order.
    pub fn raw_elements(&self) -> impl Iterator<Item = GfElem> + Clone {
        (0..self.inner.q).map(GfElem)
    }

    /// All `q` elements, each exactly once, in ascending rank order.
    pub fn enumerate(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.raw_elements().map(|v| self.wrap(v))
    }

    pub fn wrap(&self, value: GfElem) -> FieldElement {
        debug_assert!(value.0 < self.inner.q);
        FieldElement {
            field: self.clone(),
            value,
        }
    }

    /// Element with polynomial-basis coordinates `coeffs` (low degree first).
    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement, GfError> {
        let p = self.inner.p;
        if coeffs.len() != self.inner.r as usize || coeffs.iter().any(|&c| c >= p) {
            return Err(GfError::BadCoordinates {
                expected: self.inner.r as usize,
                p,
                got: coeffs.to_vec(),
            });
        }
        Ok(self.wrap(self.from_digits(coeffs)))
    }

    /// Images of every element of `self`, indexed by rank, under a field
    /// embedding into `large`. The generator `x` is sent to the smallest-rank
    /// root of this field's modulus.
    pub fn embedding(&self, large: &FieldSpec) -> Result<Vec<GfElem>, GfError> {
        let (p, r, big_r) = (self.inner.p, self.inner.r, large.r());
        if large.p() != p || big_r % r != 0 {
            return Err(GfError::NotSubfield { p, small: r, large: big_r });
        }
        let modulus: Vec<GfElem> = self.inner.modulus.iter().map(|&c| GfElem(c)).collect();
        let eval = |a: GfElem| {
            modulus
                .iter()
                .rev()
                .fold(GfElem::ZERO, |acc, &c| large.add(large.mul(acc, a), c))
        };
        let root = large
            .raw_elements()
            .find(|&a| eval(a) == GfElem::ZERO)
            .expect("a field contains every subfield of matching degree");
        Ok(self
            .raw_elements()
            .map(|a| {
                self.digits(a)
                    .iter()
                    .rev()
                    .fold(GfElem::ZERO, |acc, &d| large.add(large.mul(acc, root), GfElem(d)))
            })
            .collect())
    }

    fn primitive_element(&self) -> GfElem {
        let order = self.inner.q as u64 - 1;
        let factors = prime_factors(order);
        (1..self.inner.q)
            .map(GfElem)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&l| self.pow_poly_basis(g, order / l) != GfElem::ONE)
            })
            .expect("the multiplicative group of a finite field is cyclic")
    }

    fn build_tables(&self) -> Result<LogTables, GfError> {
        let q = self.inner.q as usize;
        let g = self.primitive_element();
        let mut exp = Vec::with_capacity(2 * (q - 1));
        let mut log = vec![0u32; q];
        let mut cur = GfElem::ONE;
        for i in 0..q - 1 {
            exp.push(cur.0);
            log[cur.rank()] = i as u32;
            cur = self.mul_poly_basis(cur, g);
        }
        exp.extend_from_within(..);
        let tables = LogTables { exp, log };

        let mut rng = ChaCha8Rng::seed_from_u64(((self.inner.p as u64) << 32) | self.inner.r as u64);
        for _ in 0..TABLE_CHECK_PAIRS {
            let a = rng.random_range(1..q as u32);
            let b = rng.random_range(1..q as u32);
            let via_tables = tables.exp[(tables.log[a as usize] + tables.log[b as usize]) as usize];
            if via_tables != self.mul_poly_basis(GfElem(a), GfElem(b)).0 {
                return Err(GfError::TableMismatch(a, b));
            }
        }
        Ok(tables)
    }
}

/// An element together with the field it lives in.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FieldSpec,
    value: GfElem,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.field, self.coeffs())
    }
}

impl FieldElement {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn value(&self) -> GfElem {
        self.value
    }

    /// Polynomial-basis coordinates, low degree first; always `r` entries.
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.digits(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == GfElem::ZERO
    }

    fn same_field(&self, other: &Self) -> Result<(), GfError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(GfError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.field.wrap(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> Self {
        self.field.wrap(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<Self, GfError> {
        Ok(self.field.wrap(self.field.inv(self.value)?))
    }

    pub fn pow(&self, n: u64) -> Self {
        self.field.wrap(self.field.pow(self.value, n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, r: u32) -> FieldSpec {
        build_field(p, r).unwrap()
    }

    #[test]
    fn moduli_are_smallest_irreducibles() {
        assert_eq!(gf(3, 1).modulus(), &[0, 1]);
        assert_eq!(gf(3, 2).modulus(), &[1, 0, 1]);
        assert_eq!(gf(2, 3).modulus(), &[1, 1, 0, 1]);
    }

    /// Independent scan: every monic quadratic over GF(3) ranked below x^2+1
    /// has a root, and x^2+1 has none.
    #[test]
    fn gf9_modulus_scan() {
        let has_root = |c0: u32, c1: u32| (0..3).any(|x| (x * x + c1 * x + c0) % 3 == 0);
        let first = (0..9u32).find(|&rank| !has_root(rank % 3, rank / 3)).unwrap();
        assert_eq!(first, 1);
    }

    #[test]
    fn build_errors() {
        assert_eq!(build_field(9, 1).unwrap_err(), GfError::NotPrime(9));
        assert_eq!(build_field(3, 0).unwrap_err(), GfError::ZeroDegree);
        assert!(matches!(
            build_field(2, 23),
            Err(GfError::FieldTooLarge { .. })
        ));
        assert!(build_field_with_cap(3, 5, 100).is_err());
        assert!(build_field(2, 22).is_ok());
    }

    #[test]
    fn gf9_examples() {
        let f = gf(3, 2);
        let el = |c: [u32; 2]| f.element(&c).unwrap();
        let x = el([0, 1]);
        assert_eq!(el([2, 1]).add(&el([2, 2])).unwrap(), el([1, 0]));
        assert_eq!(x.mul(&x).unwrap(), el([2, 0]));
        assert_eq!(x.inv().unwrap(), el([0, 2]));
        for a in f.enumerate() {
            assert_eq!(a.add(&el([0, 0])).unwrap(), a);
            assert!(a.add(&a.neg()).unwrap().is_zero());
            if !a.is_zero() {
                assert_eq!(a.pow(8), el([1, 0]));
            }
        }
        assert_eq!(el([0, 0]).inv().unwrap_err(), GfError::ZeroInverse);
        assert_eq!(x.pow(0), el([1, 0]));
        assert_eq!(el([0, 0]).pow(0), el([1, 0]));
    }

    #[test]
    fn mismatched_fields_rejected() {
        let a = gf(3, 2).element(&[1, 1]).unwrap();
        let b = gf(3, 3).element(&[1, 1, 0]).unwrap();
        assert_eq!(a.add(&b).unwrap_err(), GfError::FieldMismatch);
        assert_eq!(a.mul(&b).unwrap_err(), GfError::FieldMismatch);
        assert!(gf(3, 2).element(&[3, 0]).is_err());
        assert!(gf(3, 2).element(&[1]).is_err());
    }

    #[test]
    fn enumeration() {
        let g3: Vec<Vec<u32>> = gf(3, 1).enumerate().map(|e| e.coeffs()).collect();
        assert_eq!(g3, vec![vec![0], vec![1], vec![2]]);
        let g9: std::collections::HashSet<Vec<u32>> =
            gf(3, 2).enumerate().map(|e| e.coeffs()).collect();
        assert_eq!(g9.len(), 9);
        let g4: Vec<FieldElement> = gf(2, 2).enumerate().collect();
        assert_eq!(g4.len(), 4);
        assert!(g4.iter().all(|a| a.pow(4) == *a));
    }

    #[test]
    fn deterministic_construction() {
        for (p, r) in [(2, 8), (3, 5), (7, 3)] {
            assert_eq!(gf(p, r).modulus(), gf(p, r).modulus());
        }
    }

    #[test]
    fn axioms_exhaustive_up_to_81() {
        for (p, r) in (2..=81).filter_map(crate::numtheory::prime_power) {
            let f = gf(p, r);
            let q = f.q() as u64;
            let els: Vec<GfElem> = f.raw_elements().collect();
            for &a in &els {
                assert_eq!(f.pow(a, q), a, "Frobenius in {f:?}");
                if a != GfElem::ZERO {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), GfElem::ONE);
                }
                assert_eq!(f.add(a, f.neg(a)), GfElem::ZERO);
                assert_eq!(f.succ(a), f.add(a, GfElem::ONE));
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.mul(a, b), f.mul_poly_basis(a, b));
                }
            }
            for &a in &els {
                for &b in &els {
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn large_field_without_tables() {
        let f = gf(2, 17);
        assert!(!f.has_log_tables());
        let a = GfElem(12345);
        let b = f.inv(a).unwrap();
        assert_eq!(f.mul(a, b), GfElem::ONE);
        assert_eq!(f.pow(a, f.q() as u64), a);
        let g = gf(3, 11);
        assert_eq!(g.pow(GfElem(4242), g.q() as u64), GfElem(4242));
    }

    #[test]
    fn subfield_embedding_is_a_homomorphism() {
        for (p, r, big) in [(3, 1, 2), (3, 2, 4), (5, 1, 2), (2, 2, 4), (7, 1, 2)] {
            let (small, large) = (gf(p, r), gf(p, big));
            let e = small.embedding(&large).unwrap();
            let distinct: std::collections::HashSet<_> = e.iter().collect();
            assert_eq!(distinct.len(), small.q() as usize);
            for a in small.raw_elements() {
                for b in small.raw_elements() {
                    assert_eq!(e[small.add(a, b).rank()], large.add(e[a.rank()], e[b.rank()]));
                    assert_eq!(e[small.mul(a, b).rank()], large.mul(e[a.rank()], e[b.rank()]));
                }
            }
        }
        assert!(gf(3, 2).embedding(&gf(3, 3)).is_err());
        assert!(gf(3, 1).embedding(&gf(5, 2)).is_err());
    }
}
