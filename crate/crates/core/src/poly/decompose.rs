use super::ring::Field;
use super::{DensePoly, PolyError};

/// Finds `(g, h)` with `f = g(h(x))`, `deg h = d`, `h` monic and `h(0) = 0`.
///
/// Only the tame case is handled: the characteristic must not divide
/// `deg f / d`. There `h` is determined by the top `d` coefficients of `f`
/// (it is the polynomial part of the `r`-th root of the monic `f`), so the
/// search reduces to computing that candidate and expanding `f` in powers of it.
pub fn decompose_tame<F: Field>(
    f: &DensePoly<F>,
    d: usize,
) -> Result<Option<(DensePoly<F>, DensePoly<F>)>, PolyError> {
    let ring = f.ring().clone();
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(PolyError::NotDecomposable),
    };
    if d == 0 || n % d != 0 {
        return Err(PolyError::DegreeNotDivisor { n, d });
    }
    let r = n / d;
    let p = ring.characteristic();
    if p != 0 && r as u64 % p == 0 {
        return Err(PolyError::WildDecomposition { p, outer: r });
    }

    let monic = f.monic();
    let r_inv = ring
        .inv(&ring.from_i64(r as i64))
        .expect("outer degree is a unit in the tame case");
    let mut h_coeffs = vec![ring.zero(); d + 1];
    h_coeffs[d] = ring.one();
    for k in 1..d {
        let h = DensePoly::new(ring.clone(), h_coeffs.clone());
        let power = h.pow(r as u64);
        let gap = ring.sub(&monic.coeff(n - k), &power.coeff(n - k));
        h_coeffs[d - k] = ring.mul(&gap, &r_inv);
    }
    let h = DensePoly::new(ring.clone(), h_coeffs);

    // h-adic expansion: every digit must be a constant.
    let mut g_coeffs = Vec::with_capacity(r + 1);
    let mut rest = f.clone();
    while !rest.is_zero() {
        let (quot, rem) = rest.div_rem(&h)?;
        if rem.degree().unwrap_or(0) > 0 {
            return Ok(None);
        }
        g_coeffs.push(rem.coeff(0));
        rest = quot;
    }
    let g = DensePoly::new(ring, g_coeffs);
    debug_assert_eq!(g.compose(&h).as_ref(), Ok(f));
    Ok(Some((g, h)))
}
