//! Exceptionality: bijectivity on GF(q^k) for infinitely many `k`.
//!
//! No finite computation decides this in general. Monomials and Dickson
//! polynomials have exact gcd criteria, a bijection of small degree is
//! certified by the Weil bound, and everything else gets a bounded scan over
//! extension degrees whose verdict is marked as heuristic.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{build_field, FieldSpec, GfElem, GfError, DEFAULT_FIELD_CAP};
use crate::numtheory::{checked_pow, gcd};
use crate::poly::DensePoly;

pub const DEFAULT_K_MAX: u32 = 6;

/// Number of bijective extension degrees needed for a heuristic pass.
pub const HEURISTIC_THRESHOLD: usize = 2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExceptionalError {
    #[error("polynomial over {poly:?} cannot be evaluated on {field:?}")]
    FieldMismatch { poly: FieldSpec, field: FieldSpec },
    #[error("k_max must be at least 1")]
    ZeroDegree,
    #[error("{p}^{k_max} exceeds the field cap {cap}")]
    CapExceeded { p: u64, k_max: u32, cap: u64 },
    #[error(transparent)]
    Field(#[from] GfError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    CertifiedExceptional,
    CertifiedNot,
    HeuristicPass,
    HeuristicFail,
}

impl Status {
    pub fn is_certified(self) -> bool {
        matches!(self, Status::CertifiedExceptional | Status::CertifiedNot)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeOutcome {
    pub k: u32,
    pub bijective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    Criterion {
        name: String,
        params: Vec<(String, u64)>,
    },
    Degrees(Vec<DegreeOutcome>),
}

/// A conclusion about exceptionality. Certified verdicts always carry the
/// criterion that decided them, heuristic ones the degrees that were tried;
/// the constructors are the only way to build one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalityVerdict {
    status: Status,
    evidence: Evidence,
}

impl ExceptionalityVerdict {
    fn certified(exceptional: bool, name: &str, params: &[(&str, u64)]) -> Self {
        ExceptionalityVerdict {
            status: if exceptional {
                Status::CertifiedExceptional
            } else {
                Status::CertifiedNot
            },
            evidence: Evidence::Criterion {
                name: name.to_string(),
                params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            },
        }
    }

    fn heuristic(outcomes: Vec<DegreeOutcome>) -> Self {
        let hits = outcomes.iter().filter(|o| o.bijective).count();
        ExceptionalityVerdict {
            status: if hits >= HEURISTIC_THRESHOLD {
                Status::HeuristicPass
            } else {
                Status::HeuristicFail
            },
            evidence: Evidence::Degrees(outcomes),
        }
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn evidence(&self) -> &Evidence {
        &self.evidence
    }

    /// Degrees at which the polynomial was a bijection, for heuristic verdicts.
    pub fn bijective_degrees(&self) -> Option<Vec<u32>> {
        match &self.evidence {
            Evidence::Degrees(d) => Some(d.iter().filter(|o| o.bijective).map(|o| o.k).collect()),
            Evidence::Criterion { .. } => None,
        }
    }
}

/// Coefficients of `f` as elements of `field`. `f` may live over `field`
/// itself or over its prime field.
fn embed(f: &DensePoly<FieldSpec>, field: &FieldSpec) -> Result<Vec<GfElem>, ExceptionalError> {
    let ring = f.ring();
    if ring == field {
        return Ok(f.coeffs().to_vec());
    }
    if ring.r() == 1 && ring.p() == field.p() {
        return Ok(f
            .coeffs()
            .iter()
            .map(|c| field.from_int(c.rank() as i64))
            .collect());
    }
    Err(ExceptionalError::FieldMismatch {
        poly: ring.clone(),
        field: field.clone(),
    })
}

fn horner(field: &FieldSpec, coeffs: &[GfElem], x: GfElem) -> GfElem {
    coeffs
        .iter()
        .rev()
        .fold(GfElem::ZERO, |acc, &c| field.add(field.mul(acc, x), c))
}

/// Brute-force check that `c -> f(c)` permutes `field`.
pub fn is_bijection(f: &DensePoly<FieldSpec>, field: &FieldSpec) -> Result<bool, ExceptionalError> {
    let coeffs = embed(f, field)?;
    let mut seen = vec![false; field.q() as usize];
    for x in field.raw_elements() {
        let slot = &mut seen[horner(field, &coeffs, x).rank()];
        if *slot {
            return Ok(false);
        }
        *slot = true;
    }
    Ok(true)
}

/// `x^m` permutes GF(q) iff `gcd(m, q-1) = 1`.
pub fn monomial_permutes(m: u64, q: u64) -> bool {
    debug_assert!(m >= 1 && q >= 2);
    gcd(m, q - 1) == 1
}

/// `D_n(x, a)`, `a != 0`, is exceptional over GF(p) iff `gcd(n, p^2 - 1) = 1`.
pub fn dickson_exceptional(n: u64, p: u64) -> bool {
    debug_assert!(n >= 1 && p >= 3);
    gcd(n, p * p - 1) == 1
}

/// Certified verdict for `x^m` over GF(p). The degrees `k` where it permutes
/// GF(p^k) form a periodic set that contains `k = 1` exactly when
/// `gcd(m, p-1) = 1` and is empty otherwise.
pub fn monomial_verdict(m: u64, p: u64) -> ExceptionalityVerdict {
    ExceptionalityVerdict::certified(
        gcd(m, p - 1) == 1,
        "monomial_gcd",
        &[("m", m), ("p", p)],
    )
}

pub fn dickson_verdict(n: u64, p: u64) -> ExceptionalityVerdict {
    ExceptionalityVerdict::certified(
        dickson_exceptional(n, p),
        "dickson_gcd",
        &[("n", n), ("p", p)],
    )
}

/// Certifies `f` when `deg(f)^4 <= q` and `f` permutes `field`; otherwise
/// falls back to [`heuristic_exceptional`] with `k_max` lowered until the
/// largest field fits under the default cap.
pub fn weil_certificate(
    f: &DensePoly<FieldSpec>,
    field: &FieldSpec,
) -> Result<ExceptionalityVerdict, ExceptionalError> {
    let deg = f.degree().unwrap_or(0) as u64;
    let q = field.q() as u64;
    let small = checked_pow(deg, 4).is_some_and(|d4| d4 <= q);
    if deg >= 1 && small && is_bijection(f, field)? {
        return Ok(ExceptionalityVerdict::certified(
            true,
            "weil_bound",
            &[("degree", deg), ("q", q)],
        ));
    }
    let p = field.p() as u64;
    let mut k_max = DEFAULT_K_MAX;
    while k_max > 1 && checked_pow(p, k_max).is_none_or(|v| v > DEFAULT_FIELD_CAP) {
        k_max -= 1;
    }
    heuristic_exceptional(f, p, k_max)
}

pub fn heuristic_exceptional(
    f: &DensePoly<FieldSpec>,
    p: u64,
    k_max: u32,
) -> Result<ExceptionalityVerdict, ExceptionalError> {
    heuristic_exceptional_capped(f, p, k_max, DEFAULT_FIELD_CAP)
}

/// Tests bijectivity on GF(p^k) for `1 <= k <= k_max`; passes when at least
/// [`HEURISTIC_THRESHOLD`] degrees give a bijection. A pass is evidence, not
/// proof.
pub fn heuristic_exceptional_capped(
    f: &DensePoly<FieldSpec>,
    p: u64,
    k_max: u32,
    cap: u64,
) -> Result<ExceptionalityVerdict, ExceptionalError> {
    if k_max == 0 {
        return Err(ExceptionalError::ZeroDegree);
    }
    if checked_pow(p, k_max).is_none_or(|v| v > cap) {
        return Err(ExceptionalError::CapExceeded { p, k_max, cap });
    }
    let outcomes = (1..=k_max)
        .into_par_iter()
        .map(|k| {
            let field = build_field(p, k)?;
            Ok(DegreeOutcome {
                k,
                bijective: is_bijection(f, &field)?,
            })
        })
        .collect::<Result<Vec<_>, ExceptionalError>>()?;
    Ok(ExceptionalityVerdict::heuristic(outcomes))
}
