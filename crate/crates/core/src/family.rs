//! The three-parameter family of cubic parabolas `c_{α,β,γ}` on the Cayley
//! surface, the planar `β = 3` parabolas, the parabolic cylinders carrying
//! the curves, and recovery of `(α, β, γ)` from sample points.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{solve_exact, LinearError};
use crate::poly::Poly;
use crate::projective::{incidence, plane_through, HPlane, HPoint};
use crate::rational::{format_list, format_rational, int, parse_list, parse_rational, Rational};
use crate::surface::{on_surface, u_point};

/// A curve parameter: a rational `u` or the point at infinity (which maps to `U`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    Finite(Rational),
    Infinity,
}

impl From<Rational> for Param {
    fn from(u: Rational) -> Self {
        Param::Finite(u)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Finite(u) => f.write_str(&format_rational(u)),
            Param::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "\u{221e}" => Ok(Param::Infinity),
            other => parse_rational(other).map(Param::Finite),
        }
    }
}

/// Parameters `(α, β, γ)` of a curve `c_{α,β,γ}`; `β ∉ {0, 3}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CubicParams {
    #[serde(serialize_with = "crate::rational::serde_str::serialize")]
    alpha: Rational,
    #[serde(serialize_with = "crate::rational::serde_str::serialize")]
    beta: Rational,
    #[serde(serialize_with = "crate::rational::serde_str::serialize")]
    gamma: Rational,
}

impl CubicParams {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Result<Self> {
        if beta.is_zero() || beta == int(3) {
            return Err(Error::InvalidParameter(beta));
        }
        Ok(Self { alpha, beta, gamma })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    /// Homogeneous coordinates of the curve as cubic polynomials in `u`.
    pub fn polynomials(&self) -> [Poly; 4] {
        let u = Poly::x();
        let shifted = u.clone() - Poly::constant(self.gamma.clone());
        let quad = u.clone() * u + Poly::constant(self.alpha.clone());
        let beta_inv = self.beta.recip();
        let x3 = shifted.clone()
            * (quad.scale(&int(3)) - (shifted.clone() * shifted.clone()).scale(&self.beta));
        [
            Poly::constant(int(1)),
            shifted,
            quad.scale(&beta_inv),
            x3.scale(&(beta_inv / int(3))),
        ]
    }

    /// The curve in the chart `v = 1/u` with the cubic pole cleared; `v = 0` is `U`.
    pub fn polynomials_at_infinity(&self) -> [Poly; 4] {
        self.polynomials().map(|p| p.reciprocal(3))
    }
}

impl fmt::Display for CubicParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_list(&[
            self.alpha.clone(),
            self.beta.clone(),
            self.gamma.clone(),
        ]))
    }
}

impl FromStr for CubicParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let [a, b, c]: [Rational; 3] = parse_list(s, 3)?.try_into().unwrap();
        Self::new(a, b, c)
    }
}

/// Parameters `(α, γ)` of a planar parabola `c_{α,3,γ}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParabolaParams {
    pub alpha: Rational,
    pub gamma: Rational,
}

impl ParabolaParams {
    pub fn new(alpha: Rational, gamma: Rational) -> Self {
        Self { alpha, gamma }
    }
}

/// The point of `c_{α,β,γ}` at parameter `u`; `u = ∞` gives `U`.
pub fn curve_point(p: &CubicParams, u: &Param) -> HPoint {
    match u {
        Param::Infinity => u_point(),
        Param::Finite(u) => {
            let coords = p.polynomials().map(|poly| poly.eval(u));
            HPoint::new(coords).expect("first coordinate is 1")
        }
    }
}

/// The quadric `α·x0² − β·x0·x2 + (x1 + γ·x0)²`, a parabolic cylinder with vertex `U`.
pub fn cylinder_eval(p: &CubicParams, point: &HPoint) -> Rational {
    let [x0, x1, x2, _] = point.coords();
    let shifted = x1 + p.gamma() * x0;
    p.alpha() * x0 * x0 - p.beta() * x0 * x2 + &shifted * &shifted
}

/// The point of the planar parabola `c_{α,3,γ}` at `u`. The cubic terms
/// cancel, so `u = ∞` gives `(0, 0, 1, 2γ)` on `t`, not `U`.
pub fn parabola_point(q: &ParabolaParams, u: &Param) -> HPoint {
    match u {
        Param::Infinity => HPoint::new([int(0), int(0), int(1), int(2) * &q.gamma]).unwrap(),
        Param::Finite(u) => {
            let (alpha, gamma) = (&q.alpha, &q.gamma);
            let shifted = u - gamma;
            let x2 = (u * u + alpha) / int(3);
            let x3 = &shifted / int(3) * (alpha + int(2) * u * gamma - gamma * gamma);
            HPoint::new([int(1), shifted, x2, x3]).expect("first coordinate is 1")
        }
    }
}

/// The plane carrying the parabola `c_{α,3,γ}`, fitted through three of its
/// points and checked against further samples.
pub fn plane_of_parabola(q: &ParabolaParams) -> Result<HPlane> {
    let at = |u: i64| parabola_point(q, &Param::Finite(int(u)));
    let plane = plane_through(&at(0), &at(1), &at(-1))?;
    let extra = [
        Param::Finite(int(2)),
        Param::Finite(int(-3)),
        Param::Infinity,
    ];
    if extra
        .iter()
        .any(|u| !incidence(&parabola_point(q, u), &plane))
    {
        return Err(Error::DegenerateSpan);
    }
    Ok(plane)
}

/// A point of the projective plane `x3 = 0`, up to scale.
#[derive(Clone, Debug)]
pub struct PlanarPoint([Rational; 3]);

impl PlanarPoint {
    pub fn new(coords: [Rational; 3]) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::InvalidObject);
        }
        Ok(Self(coords))
    }

    pub fn from_ints(c: [i64; 3]) -> Result<Self> {
        Self::new(c.map(int))
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.0
    }
}

impl PartialEq for PlanarPoint {
    fn eq(&self, other: &Self) -> bool {
        let (p, q) = (&self.0, &other.0);
        (0..3).all(|i| (i + 1..3).all(|j| &p[i] * &q[j] == &p[j] * &q[i]))
    }
}

impl Eq for PlanarPoint {}

impl fmt::Display for PlanarPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_list(&self.0))
    }
}

impl FromStr for PlanarPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = parse_list(s, 3)?;
        Self::new(std::array::from_fn(|i| v[i].clone()))
    }
}

/// Central projection from `U` onto the plane `x3 = 0`.
pub fn project_from_u(p: &HPoint) -> Result<PlanarPoint> {
    let [x0, x1, x2, _] = p.coords();
    PlanarPoint::new([x0.clone(), x1.clone(), x2.clone()]).map_err(|_| Error::ProjectionCenter)
}

/// A ternary quadratic form
/// `a00·x0² + a11·x1² + a22·x2² + a01·x0x1 + a02·x0x2 + a12·x1x2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConicForm {
    #[serde(serialize_with = "crate::rational::serde_str::serialize_vec")]
    coeffs: [Rational; 6],
}

impl ConicForm {
    /// Coefficients in the order `x0², x1², x2², x0x1, x0x2, x1x2`.
    pub fn new(coeffs: [Rational; 6]) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::InvalidObject);
        }
        Ok(Self { coeffs })
    }

    pub fn from_ints(c: [i64; 6]) -> Result<Self> {
        Self::new(c.map(int))
    }

    pub fn coeffs(&self) -> &[Rational; 6] {
        &self.coeffs
    }

    /// The symmetric matrix `A` with `q(x) = xᵀ A x`.
    pub fn matrix(&self) -> [[Rational; 3]; 3] {
        let [a00, a11, a22, a01, a02, a12] = &self.coeffs;
        let h = |v: &Rational| v / int(2);
        [
            [a00.clone(), h(a01), h(a02)],
            [h(a01), a11.clone(), h(a12)],
            [h(a02), h(a12), a22.clone()],
        ]
    }

    pub fn eval(&self, x: &[Rational; 3]) -> Rational {
        let [a00, a11, a22, a01, a02, a12] = &self.coeffs;
        let [x0, x1, x2] = x;
        a00 * x0 * x0
            + a11 * x1 * x1
            + a22 * x2 * x2
            + a01 * x0 * x1
            + a02 * x0 * x2
            + a12 * x1 * x2
    }

    /// Equality up to a nonzero factor.
    pub fn proportional(&self, other: &Self) -> bool {
        let (p, q) = (&self.coeffs, &other.coeffs);
        (0..6).all(|i| (i + 1..6).all(|j| &p[i] * &q[j] == &p[j] * &q[i]))
    }
}

impl fmt::Display for ConicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const MONOMIALS: [&str; 6] = ["x0^2", "x1^2", "x2^2", "x0*x1", "x0*x2", "x1*x2"];
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .zip(MONOMIALS)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, m)| format!("({})*{m}", format_rational(c)))
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// The cylinder restricted to `x3 = 0`: the image of `c_{α,β,γ}` under
/// projection from `U`.
pub fn projected_conic(p: &CubicParams) -> ConicForm {
    let (alpha, beta, gamma) = (p.alpha(), p.beta(), p.gamma());
    ConicForm::new([
        alpha + gamma * gamma,
        int(1),
        int(0),
        int(2) * gamma,
        -beta.clone(),
        int(0),
    ])
    .expect("x1² coefficient is 1")
}

/// Recovers `(α, β, γ)` from at least three affine points of one family curve.
///
/// Solves `p·x0² − q·x0·x2 + r·x0·x1 = −x1²` exactly for `(p, q, r)`, then
/// `γ = r/2`, `β = q`, `α = p − γ²`. Surplus points must satisfy the fitted
/// cylinder, and every point must lie on the recovered curve.
pub fn identify_params(points: &[HPoint]) -> Result<CubicParams> {
    if points.len() < 3 {
        return Err(Error::InsufficientData(format!(
            "need at least 3 points, got {}",
            points.len()
        )));
    }
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(points.len());
    for (index, point) in points.iter().enumerate() {
        let [x0, x1, x2, _] = point.coords();
        if x0.is_zero() {
            return Err(Error::InconsistentInput {
                index,
                reason: "is not affine (x0 = 0)",
            });
        }
        let (y1, y2) = (x1 / x0, x2 / x0);
        rows.push(vec![int(1), -y2, y1.clone(), -(&y1 * &y1)]);
    }
    let solution = solve_exact(rows, 3).map_err(|e| match e {
        LinearError::Underdetermined { rank } => Error::InsufficientData(format!(
            "sample points determine only {rank} of 3 cylinder coefficients"
        )),
        LinearError::Inconsistent { row } => Error::InconsistentInput {
            index: row,
            reason: "violates the fitted cylinder",
        },
    })?;
    let [p, q, r]: [Rational; 3] = solution.try_into().unwrap();

    let gamma = r / int(2);
    let alpha = p - &gamma * &gamma;
    if q.is_zero() || q == int(3) {
        return Err(Error::NotInFamily(q));
    }
    let params = CubicParams::new(alpha, q, gamma)?;
    for (index, point) in points.iter().enumerate() {
        if !on_surface(point) {
            return Err(Error::InconsistentInput {
                index,
                reason: "is not on the Cayley surface",
            });
        }
        let [x0, x1, ..] = point.coords();
        let u = x1 / x0 + params.gamma();
        if curve_point(&params, &Param::Finite(u)) != *point {
            return Err(Error::InconsistentInput {
                index,
                reason: "is not on the fitted curve",
            });
        }
    }
    Ok(params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::surface::cayley_eval;

    fn params(a: Rational, b: Rational, c: Rational) -> CubicParams {
        CubicParams::new(a, b, c).unwrap()
    }

    fn fin(u: i64) -> Param {
        Param::Finite(int(u))
    }

    #[test]
    fn excluded_beta() {
        assert_eq!(
            CubicParams::new(int(0), int(3), int(0)),
            Err(Error::InvalidParameter(int(3)))
        );
        assert!(CubicParams::new(int(0), int(0), int(0)).is_err());
        assert!("1,3,0".parse::<CubicParams>().is_err());
    }

    #[test]
    fn curve_point_examples() {
        let p = params(int(0), int(1), int(0));
        assert_eq!(
            curve_point(&p, &fin(1)).coords(),
            &[int(1), int(1), int(1), rat(2, 3)]
        );
        assert_eq!(curve_point(&p, &Param::Infinity), u_point());
        let q = params(int(1), int(2), int(1));
        assert_eq!(
            curve_point(&q, &fin(1)).coords(),
            &[int(1), int(0), int(1), int(0)]
        );
    }

    #[test]
    fn curve_points_lie_on_surface_and_cylinder() {
        let p = params(rat(-5, 1), rat(7, 3), rat(1, 2));
        for u in [-3, -1, 0, 1, 2, 5] {
            let x = curve_point(&p, &fin(u));
            assert_eq!(cayley_eval(&x), int(0));
            assert_eq!(cylinder_eval(&p, &x), int(0));
        }
    }

    #[test]
    fn chart_at_infinity_starts_at_u() {
        let p = params(rat(2, 3), int(4), int(-1));
        let at_v0 = p.polynomials_at_infinity().map(|poly| poly.coeff(0));
        assert_eq!(HPoint::new(at_v0).unwrap(), u_point());
    }

    #[test]
    fn cylinder_examples() {
        let p = params(int(0), int(1), int(0));
        let on = HPoint::new([int(1), int(1), int(1), rat(2, 3)]).unwrap();
        assert_eq!(cylinder_eval(&p, &on), int(0));
        assert_eq!(cylinder_eval(&p, &u_point()), int(0));
        assert_eq!(
            cylinder_eval(&p, &HPoint::from_ints([1, 1, 0, 0]).unwrap()),
            int(1)
        );
    }

    #[test]
    fn parabola_examples() {
        let q = ParabolaParams::new(int(0), int(0));
        assert_eq!(
            parabola_point(&q, &fin(1)).coords(),
            &[int(1), int(1), rat(1, 3), int(0)]
        );
        assert_eq!(
            parabola_point(&q, &Param::Infinity),
            HPoint::from_ints([0, 0, 1, 0]).unwrap()
        );
        let sheared = ParabolaParams::new(int(1), rat(-1, 2));
        assert_eq!(
            parabola_point(&sheared, &Param::Infinity),
            HPoint::from_ints([0, 0, 1, -1]).unwrap()
        );
        assert_eq!(
            plane_of_parabola(&q).unwrap(),
            HPlane::from_ints([0, 0, 0, 1]).unwrap()
        );

        let alpha = rat(5, 2);
        let q = ParabolaParams::new(alpha.clone(), int(0));
        let expected = HPlane::new([int(0), alpha / int(3), int(0), int(-1)]).unwrap();
        assert_eq!(plane_of_parabola(&q).unwrap(), expected);
    }

    #[test]
    fn parabolas_lie_in_their_plane_and_on_surface() {
        let q = ParabolaParams::new(rat(-3, 4), rat(2, 5));
        let plane = plane_of_parabola(&q).unwrap();
        for u in -5..5 {
            let x = parabola_point(&q, &fin(u));
            assert!(on_surface(&x));
            assert!(incidence(&x, &plane));
        }
    }

    #[test]
    fn projection_examples() {
        let p = HPoint::new([int(1), int(1), int(1), rat(2, 3)]).unwrap();
        assert_eq!(
            project_from_u(&p).unwrap(),
            PlanarPoint::from_ints([1, 1, 1]).unwrap()
        );
        let t = HPoint::from_ints([0, 0, 1, 5]).unwrap();
        assert_eq!(
            project_from_u(&t).unwrap(),
            PlanarPoint::from_ints([0, 0, 1]).unwrap()
        );
        assert_eq!(
            project_from_u(&u_point()).unwrap_err(),
            Error::ProjectionCenter
        );
    }

    #[test]
    fn projected_conic_examples() {
        let q = projected_conic(&params(int(0), int(2), int(0)));
        assert_eq!(q, ConicForm::from_ints([0, 1, 0, 0, -2, 0]).unwrap());
        let q = projected_conic(&params(int(0), int(1), int(0)));
        assert_eq!(q, ConicForm::from_ints([0, 1, 0, 0, -1, 0]).unwrap());
        let q1 = projected_conic(&params(int(1), int(2), int(0)));
        let diff: Vec<bool> = (0..6).map(|i| q.coeffs()[i] != q1.coeffs()[i]).collect();
        assert_eq!(diff, [true, false, false, false, true, false]);
    }

    #[test]
    fn projected_curve_lies_on_projected_conic() {
        let p = params(rat(1, 3), rat(-2, 1), rat(3, 2));
        let conic = projected_conic(&p);
        for u in -4..4 {
            let image = project_from_u(&curve_point(&p, &fin(u))).unwrap();
            assert_eq!(conic.eval(image.coords()), int(0));
        }
    }

    #[test]
    fn identify_examples() {
        let p = params(int(0), int(1), int(0));
        let pts: Vec<_> = [1, 2, 4].map(|u| curve_point(&p, &fin(u))).to_vec();
        assert_eq!(identify_params(&pts).unwrap(), p);

        let p = params(int(-5), rat(7, 3), rat(1, 2));
        let pts: Vec<_> = [0, 1, -1, 3].map(|u| curve_point(&p, &fin(u))).to_vec();
        assert_eq!(identify_params(&pts).unwrap(), p);
    }

    #[test]
    fn identify_rejects_parabola_samples() {
        let q = ParabolaParams::new(int(0), int(0));
        let pts: Vec<_> = [0, 1, 2].map(|u| parabola_point(&q, &fin(u))).to_vec();
        assert_eq!(identify_params(&pts), Err(Error::NotInFamily(int(3))));
    }

    #[test]
    fn identify_error_paths() {
        let p = params(int(1), int(2), int(0));
        let two: Vec<_> = [0, 1].map(|u| curve_point(&p, &fin(u))).to_vec();
        assert!(matches!(
            identify_params(&two),
            Err(Error::InsufficientData(_))
        ));

        let repeated = vec![curve_point(&p, &fin(1)); 3];
        assert!(matches!(
            identify_params(&repeated),
            Err(Error::InsufficientData(_))
        ));

        let other = params(int(2), int(2), int(0));
        let mut mixed: Vec<_> = [0, 1, 2].map(|u| curve_point(&p, &fin(u))).to_vec();
        mixed.push(curve_point(&other, &fin(5)));
        assert!(matches!(
            identify_params(&mixed),
            Err(Error::InconsistentInput { index: 3, .. })
        ));

        let mut with_u = [0, 1, 2].map(|u| curve_point(&p, &fin(u))).to_vec();
        with_u.push(u_point());
        assert!(matches!(
            identify_params(&with_u),
            Err(Error::InconsistentInput { .. })
        ));
    }

    #[test]
    fn identify_rejects_points_off_the_surface() {
        // on the cylinder of (0,1,0) but not on F
        let pts = [[1, 0, 0, 1], [1, 1, 1, 0], [1, 2, 4, 0]]
            .map(|c| HPoint::from_ints(c).unwrap())
            .to_vec();
        assert!(matches!(
            identify_params(&pts),
            Err(Error::InconsistentInput { .. })
        ));
    }

    #[test]
    fn param_text_form() {
        assert_eq!("inf".parse::<Param>().unwrap(), Param::Infinity);
        assert_eq!("-1/2".parse::<Param>().unwrap(), Param::Finite(rat(-1, 2)));
        assert_eq!(
            "-5,7/3,1/2".parse::<CubicParams>().unwrap().to_string(),
            "-5,7/3,1/2"
        );
    }
}
