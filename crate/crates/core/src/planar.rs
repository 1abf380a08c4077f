//! Planarity of monomials `x^t` over GF(q) and the two known families of
//! planar exponents.
//!
//! `x^t` is planar when every difference `c -> (c+a)^t - c^t`, `a != 0`, is a
//! bijection. For a monomial the shift `a` can be scaled out:
//! `(c+a)^t - c^t = a^t ((c/a + 1)^t - (c/a)^t)`, so testing `a = 1` suffices.
//! Planarity is also unchanged by `t -> t + (q-1)` and `t -> t p`, which is why
//! exponents are handled through [`ExponentClass`].
//!
//! The families, for `p` odd and `q = p^r`:
//!
//! * F1: `t = p^i + 1` with `0 <= i < r` and `r / gcd(i, r)` odd;
//! * F2: `p = 3`, `t = (3^i + 1) / 2` with `2 < i < r` and `gcd(i, 2r) = 1`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{FieldSpec, GfElem, GfError};
use crate::numtheory::{checked_pow, gcd, is_prime};
use crate::report::{SearchEntry, SearchReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanarError {
    #[error("p must be odd, got p = {0}")]
    EvenCharacteristic(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("exponent {t} must satisfy 1 <= t < q = {q} and p = {p} must not divide it")]
    ExponentOutOfRange { p: u64, q: u64, t: u64 },
    #[error("field of order {q} exceeds the search cap {cap}")]
    SearchCapExceeded { q: u64, cap: u64 },
    #[error(transparent)]
    Field(#[from] GfError),
}

/// Orbit of `t` under `t -> t p mod (q-1)`, with representatives in
/// `[1, q-1]`, sorted ascending.
pub fn exponent_orbit(p: u64, q: u64, t: u64) -> Vec<u64> {
    let m = q - 1;
    let reduce = |v: u64| if v % m == 0 { m } else { v % m };
    let mut cur = reduce(t);
    let mut out = vec![cur];
    loop {
        cur = reduce((cur as u128 * p as u128 % m as u128) as u64);
        if out.contains(&cur) {
            break;
        }
        out.push(cur);
    }
    out.sort_unstable();
    out
}

/// An exponent together with the canonical representative of its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentClass {
    field: FieldSpec,
    t: u64,
    canonical: u64,
}

impl ExponentClass {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// The exponent reduced into `[1, q-1]` with factors of `p` removed.
    pub fn t(&self) -> u64 {
        self.t
    }

    /// Smallest member of the orbit of `t`.
    pub fn canonical(&self) -> u64 {
        self.canonical
    }

    pub fn orbit(&self) -> Vec<u64> {
        exponent_orbit(self.field.p() as u64, self.field.q() as u64, self.t)
    }
}

/// Canonical class of `x^t` over `field`: strip factors of `p`, reduce into
/// `[1, q-1]`, and take the minimum of the orbit under multiplication by `p`.
pub fn canonicalize(field: &FieldSpec, t: u64) -> Result<ExponentClass, PlanarError> {
    if t == 0 {
        return Err(PlanarError::ZeroExponent);
    }
    let (p, q) = (field.p() as u64, field.q() as u64);
    let mut t = t;
    loop {
        while t % p == 0 {
            t /= p;
        }
        if t < q {
            break;
        }
        t = (t - 1) % (q - 1) + 1;
    }
    let canonical = exponent_orbit(p, q, t)[0];
    debug_assert!(canonical % p != 0);
    Ok(ExponentClass {
        field: field.clone(),
        t,
        canonical,
    })
}

/// Outcome of a planarity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Planarity {
    Planar,
    NotPlanar,
    /// Even characteristic: `(c+1)^t - c^t` takes equal values at `c` and
    /// `c+1`, so nothing was tested.
    EvenCharacteristic,
}

impl Planarity {
    pub fn is_planar(self) -> bool {
        self == Planarity::Planar
    }
}

/// Values `c^t` for every element, indexed by rank.
pub fn power_table(field: &FieldSpec, t: u64) -> Vec<GfElem> {
    field.raw_elements().map(|c| field.pow(c, t)).collect()
}

/// True iff `values[rank]` lists a bijection of the field.
fn is_permutation(values: impl Iterator<Item = GfElem>, q: usize) -> bool {
    let mut seen = vec![false; q];
    for v in values {
        let slot = &mut seen[v.rank()];
        if *slot {
            return false;
        }
        *slot = true;
    }
    true
}

/// Whether `c -> (c+1)^t - c^t` is a bijection on the field, which for a
/// monomial is equivalent to planarity.
pub fn is_planar_monomial(field: &FieldSpec, t: u64) -> Planarity {
    if field.p() == 2 {
        return Planarity::EvenCharacteristic;
    }
    let pw = power_table(field, t);
    let diffs = field
        .raw_elements()
        .map(|c| field.sub(pw[field.succ(c).rank()], pw[c.rank()]));
    if is_permutation(diffs, field.q() as usize) {
        Planarity::Planar
    } else {
        Planarity::NotPlanar
    }
}

/// Planarity straight from the definition, over every nonzero shift, for the
/// function whose values are `values[rank]`.
pub fn is_planar_function(field: &FieldSpec, values: &[GfElem]) -> bool {
    let q = field.q() as usize;
    assert_eq!(values.len(), q);
    field.raw_elements().skip(1).all(|a| {
        let diffs = field
            .raw_elements()
            .map(|c| field.sub(values[field.add(c, a).rank()], values[c.rank()]));
        is_permutation(diffs, q)
    })
}

/// Family membership of an exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyKind {
    F1,
    F2,
    #[serde(rename = "NONE")]
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyTag {
    pub kind: FamilyKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub i: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub j: Option<u32>,
}

impl FamilyTag {
    pub const NONE: FamilyTag = FamilyTag {
        kind: FamilyKind::None,
        i: None,
        j: None,
    };

    pub fn f1(i: u32) -> Self {
        FamilyTag {
            kind: FamilyKind::F1,
            i: Some(i),
            j: None,
        }
    }

    pub fn f2(i: u32) -> Self {
        FamilyTag {
            kind: FamilyKind::F2,
            i: Some(i),
            j: None,
        }
    }

    pub fn is_none(&self) -> bool {
        self.kind == FamilyKind::None
    }
}

fn check_odd_prime(p: u64) -> Result<(), PlanarError> {
    if !is_prime(p) {
        return Err(PlanarError::NotPrime(p));
    }
    if p == 2 {
        return Err(PlanarError::EvenCharacteristic(p));
    }
    Ok(())
}

/// Exponents of family F1 over GF(p^r), with their parameter `i`.
pub fn family1_members(p: u64, r: u32) -> Vec<(u64, u32)> {
    (0..r)
        .filter(|&i| (r / gcd(i as u64, r as u64) as u32) % 2 == 1)
        .map(|i| (p.pow(i) + 1, i))
        .collect()
}

/// Exponents of family F2 over GF(p^r) (empty unless `p = 3`).
pub fn family2_members(p: u64, r: u32) -> Vec<(u64, u32)> {
    if p != 3 {
        return Vec::new();
    }
    (3..r)
        .filter(|&i| gcd(i as u64, 2 * r as u64) == 1)
        .map(|i| ((3u64.pow(i) + 1) / 2, i))
        .collect()
}

/// Which family, if any, the class of `t` belongs to. Every member of the
/// orbit of `t` is tried, F1 before F2.
pub fn family_tag(p: u64, r: u32, t: u64) -> Result<FamilyTag, PlanarError> {
    check_odd_prime(p)?;
    let q = checked_pow(p, r).ok_or(PlanarError::ExponentOutOfRange { p, q: u64::MAX, t })?;
    if r == 0 || t == 0 || t >= q || t % p == 0 {
        return Err(PlanarError::ExponentOutOfRange { p, q, t });
    }
    let orbit = exponent_orbit(p, q, t);
    let find = |members: Vec<(u64, u32)>| {
        orbit
            .iter()
            .find_map(|m| members.iter().find(|(v, _)| v == m).map(|&(_, i)| i))
    };
    if let Some(i) = find(family1_members(p, r)) {
        return Ok(FamilyTag::f1(i));
    }
    if let Some(i) = find(family2_members(p, r)) {
        return Ok(FamilyTag::f2(i));
    }
    Ok(FamilyTag::NONE)
}

/// Family of `t` in the form valid for infinitely many extensions:
/// `t = p^i + p^j` (`i >= j >= 0`), or `p = 3` and `t = (3^i + 3^j)/2` with
/// `i > j >= 0` and `i - j` odd.
pub fn corollary_family(p: u64, t: u64) -> Result<FamilyTag, PlanarError> {
    check_odd_prime(p)?;
    if t == 0 {
        return Err(PlanarError::ZeroExponent);
    }
    let powers: Vec<u64> = std::iter::successors(Some(1u64), |&x| x.checked_mul(p))
        .take_while(|&x| x <= 2 * t)
        .collect();
    for (j, &pj) in powers.iter().enumerate() {
        for (i, &pi) in powers.iter().enumerate().skip(j) {
            if pi + pj == t {
                return Ok(FamilyTag {
                    kind: FamilyKind::F1,
                    i: Some(i as u32),
                    j: Some(j as u32),
                });
            }
        }
    }
    if p == 3 {
        for (j, &pj) in powers.iter().enumerate() {
            for (i, &pi) in powers.iter().enumerate().skip(j + 1) {
                if (i - j) % 2 == 1 && pi + pj == 2 * t {
                    return Ok(FamilyTag {
                        kind: FamilyKind::F2,
                        i: Some(i as u32),
                        j: Some(j as u32),
                    });
                }
            }
        }
    }
    Ok(FamilyTag::NONE)
}

/// Whether `q >= (t - 1)^4`, the range in which planarity forces family
/// membership.
pub fn in_theorem_range(q: u64, t: u64) -> bool {
    let d = t.saturating_sub(1) as u128;
    q as u128 >= d * d * d * d
}

/// Canonical exponents `t` (orbit minima with `p` not dividing `t`) below `q`.
pub fn canonical_exponents(field: &FieldSpec) -> Vec<u64> {
    let (p, q) = (field.p() as u64, field.q() as u64);
    (1..q)
        .filter(|&t| t % p != 0 && exponent_orbit(p, q, t)[0] == t)
        .collect()
}

/// Largest field order [`search_planar`] accepts.
pub const DEFAULT_SEARCH_CAP: u64 = crate::gf::DEFAULT_FIELD_CAP;

/// Tests every canonical exponent class over `field` and tags each with its
/// family and whether it lies in the theorem range.
pub fn search_planar(field: &FieldSpec) -> Result<SearchReport, PlanarError> {
    search_planar_capped(field, DEFAULT_SEARCH_CAP)
}

pub fn search_planar_capped(field: &FieldSpec, cap: u64) -> Result<SearchReport, PlanarError> {
    let (p, r, q) = (field.p() as u64, field.r(), field.q() as u64);
    if p == 2 {
        return Err(PlanarError::EvenCharacteristic(p));
    }
    if q > cap {
        return Err(PlanarError::SearchCapExceeded { q, cap });
    }
    let entries = canonical_exponents(field)
        .into_par_iter()
        .map(|t| {
            Ok(SearchEntry {
                canonical_t: t,
                planar: is_planar_monomial(field, t).is_planar(),
                family: family_tag(p, r, t)?,
                in_theorem_range: in_theorem_range(q, t),
            })
        })
        .collect::<Result<Vec<_>, PlanarError>>()?;
    Ok(SearchReport::new(p, r, q, entries))
}
