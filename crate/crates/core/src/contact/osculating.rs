use crate::family::{CubicParams, Param};
use crate::poly::Poly;
use crate::projective::{complementary_minors, HPlane};

/// Plane coordinates of the osculating planes as polynomials in the curve
/// parameter, from the minors of `(c, c′, c″)`.
fn osculating_polynomials(curve: [Poly; 4]) -> [Poly; 4] {
    let d1 = curve.clone().map(|p| p.derivative());
    let d2 = d1.clone().map(|p| p.derivative());
    complementary_minors(&[curve, d1, d2])
}

/// Osculating planes of `c_{α,β,γ}` as polynomials in `u`.
pub fn osculating_polynomials_finite(p: &CubicParams) -> [Poly; 4] {
    osculating_polynomials(p.polynomials())
}

/// Osculating planes in the chart `v = 1/u` after clearing the pole; `v = 0`
/// gives the osculating plane at `U`.
pub fn osculating_polynomials_at_infinity(p: &CubicParams) -> [Poly; 4] {
    osculating_polynomials(p.polynomials_at_infinity())
}

/// The osculating plane of `c_{α,β,γ}` at parameter `u`.
pub fn osculating_plane(p: &CubicParams, u: &Param) -> HPlane {
    let coords = match u {
        Param::Finite(u) => osculating_polynomials_finite(p).map(|poly| poly.eval(u)),
        Param::Infinity => osculating_polynomials_at_infinity(p).map(|poly| poly.coeff(0)),
    };
    HPlane::new(coords).expect("a twisted cubic has an osculating plane at every point")
}
