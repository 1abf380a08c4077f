//! Points of PG(2, q), collinearity, and hyperovals of the form
//! `D(x^t) = {(1 : c : c^t)} ∪ {(0 : 0 : 1), (0 : 1 : 0)}`.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{build_field, FieldElement, FieldSpec, GfElem, GfError};
use crate::poly::{binom_mod_p, DensePoly, LaurentPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("(0 : 0 : 0) is not a projective point")]
    ZeroPoint,
    #[error("points lie in planes over different fields")]
    FieldMismatch,
    #[error("t must be at least 2, got {0}")]
    BadExponent(u64),
    #[error("scan bound must be at least 8, got {0}")]
    ScanBoundTooSmall(u64),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// A point of PG(2, q), scaled so its first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjectivePoint {
    field: FieldSpec,
    coords: [GfElem; 3],
}

impl ProjectivePoint {
    pub fn new(field: &FieldSpec, coords: [GfElem; 3]) -> Result<Self, GeometryError> {
        let lead = coords
            .iter()
            .find(|c| **c != GfElem::ZERO)
            .ok_or(GeometryError::ZeroPoint)?;
        let s = field.inv(*lead)?;
        Ok(ProjectivePoint {
            field: field.clone(),
            coords: coords.map(|c| field.mul(c, s)),
        })
    }

    pub fn from_elements(coords: [&FieldElement; 3]) -> Result<Self, GeometryError> {
        let field = coords[0].field();
        if coords.iter().any(|c| c.field() != field) {
            return Err(GeometryError::FieldMismatch);
        }
        Self::new(field, coords.map(|c| c.value()))
    }

    /// Convenience constructor from coordinate ranks.
    pub fn from_ranks(field: &FieldSpec, ranks: [u32; 3]) -> Result<Self, GeometryError> {
        Self::new(field, ranks.map(GfElem))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn raw(&self) -> [GfElem; 3] {
        self.coords
    }

    pub fn coords(&self) -> [FieldElement; 3] {
        self.coords.map(|c| self.field.wrap(c))
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.coords;
        write!(f, "({} : {} : {})", a.0, b.0, c.0)
    }
}

fn det3(field: &FieldSpec, a: [GfElem; 3], b: [GfElem; 3], c: [GfElem; 3]) -> GfElem {
    let m = |x, y| field.mul(x, y);
    let minor = |i: usize, j: usize| field.sub(m(b[i], c[j]), m(b[j], c[i]));
    let t0 = m(a[0], minor(1, 2));
    let t1 = m(a[1], minor(0, 2));
    let t2 = m(a[2], minor(0, 1));
    field.add(field.sub(t0, t1), t2)
}

/// Three points are collinear iff the determinant of their coordinates
/// vanishes.
pub fn collinear(
    a: &ProjectivePoint,
    b: &ProjectivePoint,
    c: &ProjectivePoint,
) -> Result<bool, GeometryError> {
    if a.field != b.field || a.field != c.field {
        return Err(GeometryError::FieldMismatch);
    }
    Ok(det3(&a.field, a.coords, b.coords, c.coords) == GfElem::ZERO)
}

/// Points over one field, without repeats, in insertion order.
#[derive(Clone, Debug)]
pub struct PointSet {
    field: FieldSpec,
    points: Vec<ProjectivePoint>,
}

impl PointSet {
    pub fn new(
        field: &FieldSpec,
        points: impl IntoIterator<Item = ProjectivePoint>,
    ) -> Result<Self, GeometryError> {
        let mut seen = HashSet::new();
        let mut kept = Vec::new();
        for pt in points {
            if pt.field != *field {
                return Err(GeometryError::FieldMismatch);
            }
            if seen.insert(pt.coords) {
                kept.push(pt);
            }
        }
        Ok(PointSet {
            field: field.clone(),
            points: kept,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// `D(x^t)`: the affine points `(1 : c : c^t)` in rank order of `c`, then
/// `(0 : 0 : 1)` and `(0 : 1 : 0)`.
pub fn monomial_point_set(field: &FieldSpec, t: u64) -> PointSet {
    let affine = field.raw_elements().map(|c| ProjectivePoint {
        field: field.clone(),
        coords: [GfElem::ONE, c, field.pow(c, t)],
    });
    let ideal = [
        [GfElem::ZERO, GfElem::ZERO, GfElem::ONE],
        [GfElem::ZERO, GfElem::ONE, GfElem::ZERO],
    ]
    .map(|coords| ProjectivePoint {
        field: field.clone(),
        coords,
    });
    PointSet::new(field, affine.chain(ideal)).expect("all points share the field")
}

/// Result of a full triple scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperovalScan {
    pub is_hyperoval: bool,
    /// Triples tested in lexicographic order up to and including the first
    /// collinear one.
    pub triples_examined: u64,
    /// Indices of the lexicographically first collinear triple.
    pub witness: Option<[usize; 3]>,
}

fn choose2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

fn choose3(n: u64) -> u64 {
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

/// 1-based position of `(i, j, k)` among increasing triples of `0..n`.
fn triple_position(n: u64, [i, j, k]: [u64; 3]) -> u64 {
    let before_i: u64 = (0..i).map(|a| choose2(n - 1 - a)).sum();
    let before_j: u64 = (i + 1..j).map(|b| n - 1 - b).sum();
    before_i + before_j + (k - j - 1) + 1
}

pub fn is_hyperoval(s: &PointSet) -> bool {
    hyperoval_scan(s).is_hyperoval
}

/// Checks `|s| = q + 2` and then looks for a collinear triple. Outer indices
/// are split across threads; the reported witness and count do not depend on
/// the thread count.
pub fn hyperoval_scan(s: &PointSet) -> HyperovalScan {
    let n = s.len();
    if n as u64 != s.field.q() as u64 + 2 {
        return HyperovalScan {
            is_hyperoval: false,
            triples_examined: 0,
            witness: None,
        };
    }
    let field = &s.field;
    let pts: Vec<[GfElem; 3]> = s.points.iter().map(|p| p.coords).collect();
    let witness = (0..n).into_par_iter().find_map_first(|i| {
        for j in i + 1..n {
            for k in j + 1..n {
                if det3(field, pts[i], pts[j], pts[k]) == GfElem::ZERO {
                    return Some([i, j, k]);
                }
            }
        }
        None
    });
    let n64 = n as u64;
    let triples_examined = match witness {
        Some(w) => triple_position(n64, w.map(|v| v as u64)),
        None => choose3(n64),
    };
    HyperovalScan {
        is_hyperoval: witness.is_none(),
        triples_examined,
        witness,
    }
}

/// `1 + x + ... + x^(t-1)` over GF(2).
pub fn segre_bartocci_poly(t: u64) -> Result<DensePoly<FieldSpec>, GeometryError> {
    if t < 2 {
        return Err(GeometryError::BadExponent(t));
    }
    let gf2 = build_field(2, 1)?;
    Ok(DensePoly::new(gf2, vec![GfElem::ONE; t as usize]))
}

/// `F(x) = ((x + 1)^t + 1) / x = sum_{i=1}^{t} C(t, i) x^(i-1)` over GF(2).
pub fn sb_shift_quotient(t: u64) -> Result<DensePoly<FieldSpec>, GeometryError> {
    if t < 2 {
        return Err(GeometryError::BadExponent(t));
    }
    let gf2 = build_field(2, 1)?;
    let coeffs = (1..=t).map(|i| GfElem(binom_mod_p(t, i, 2) as u32)).collect();
    Ok(DensePoly::new(gf2, coeffs))
}

/// `F(x + 1/x)` as an exact Laurent polynomial over GF(2).
pub fn sb_laurent(t: u64) -> Result<LaurentPoly<FieldSpec>, GeometryError> {
    let f = sb_shift_quotient(t)?;
    let one = GfElem::ONE;
    Ok(f.substitute_laurent(&one, &one, &GfElem::ZERO))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SbRow {
    pub t: u64,
    pub c_t3: u8,
    pub c_t7: u8,
    pub power_of_two: bool,
}

impl SbRow {
    pub fn both_zero(&self) -> bool {
        self.c_t3 == 0 && self.c_t7 == 0
    }
}

pub fn sb_row(t: u64) -> Result<SbRow, GeometryError> {
    let l = sb_laurent(t)?;
    let c = |k: i64| l.coeff(k).0 as u8;
    Ok(SbRow {
        t,
        c_t3: c(t as i64 - 3),
        c_t7: c(t as i64 - 7),
        power_of_two: t.is_power_of_two(),
    })
}

/// Coefficients of `x^(t-3)` and `x^(t-7)` in `F(x + 1/x)` for every even
/// `2 <= t <= t_max`.
pub fn sb_coefficient_scan(t_max: u64) -> Result<Vec<SbRow>, GeometryError> {
    if t_max < 8 {
        return Err(GeometryError::ScanBoundTooSmall(t_max));
    }
    (1..=t_max / 2).into_par_iter().map(|h| sb_row(2 * h)).collect()
}
