//! The Cayley ruled cubic surface `3·x0·x1·x2 − x1³ − 3·x3·x0² = 0`, its flag
//! `(U, t, ω)`, its generators and the three-parameter group `G` of
//! collineations preserving it.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::CubicParams;
use crate::projective::{incidence, Collineation, HPlane, HPoint};
use crate::rational::{format_list, int, parse_list, rat, Rational};

/// Value of the cubic form defining the surface, for this representative.
pub fn cayley_eval(p: &HPoint) -> Rational {
    let [x0, x1, x2, x3] = p.coords();
    int(3) * x0 * x1 * x2 - x1 * x1 * x1 - int(3) * x3 * x0 * x0
}

pub fn on_surface(p: &HPoint) -> bool {
    cayley_eval(p).is_zero()
}

/// The distinguished flag: the pinch point `U`, the torsal generator `t`
/// through it, and the plane `ω` at infinity containing `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct Flag {
    pub u: HPoint,
    pub t: [HPoint; 2],
    pub omega: HPlane,
}

impl Flag {
    pub fn standard() -> Self {
        Self {
            u: u_point(),
            t: [
                HPoint::from_ints([0, 0, 1, 0]).unwrap(),
                HPoint::from_ints([0, 0, 0, 1]).unwrap(),
            ],
            omega: omega(),
        }
    }

    pub fn on_t(&self, p: &HPoint) -> bool {
        let [x0, x1, ..] = p.coords();
        x0.is_zero() && x1.is_zero()
    }

    /// `U ∈ t ⊂ ω`.
    pub fn is_consistent(&self) -> bool {
        self.on_t(&self.u) && self.t.iter().all(|p| incidence(p, &self.omega))
    }
}

pub fn u_point() -> HPoint {
    HPoint::from_ints([0, 0, 0, 1]).unwrap()
}

pub fn omega() -> HPlane {
    HPlane::from_ints([1, 0, 0, 0]).unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SurfaceOrbit {
    AffineSurfacePoint,
    TMinusU,
    UPoint,
    NotOnSurface,
}

impl fmt::Display for SurfaceOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The `G`-orbit of `p`: `F∖ω`, `t∖{U}`, `{U}`, or off the surface.
pub fn orbit_of(p: &HPoint) -> SurfaceOrbit {
    let [x0, x1, ..] = p.coords();
    if p.proj_eq(&u_point()) {
        SurfaceOrbit::UPoint
    } else if x0.is_zero() && x1.is_zero() {
        SurfaceOrbit::TMinusU
    } else if !x0.is_zero() && on_surface(p) {
        SurfaceOrbit::AffineSurfacePoint
    } else {
        SurfaceOrbit::NotOnSurface
    }
}

/// A generator of the surface other than `t`, as the intersection of two planes.
#[derive(Clone, Debug, PartialEq)]
pub struct Generator {
    pub planes: [HPlane; 2],
    /// Two points spanning the line; the first is its intersection with `t`.
    pub span: [HPoint; 2],
}

impl Generator {
    pub fn contains(&self, p: &HPoint) -> bool {
        self.planes.iter().all(|h| incidence(p, h))
    }

    /// The point `λ·span[0] + μ·span[1]`.
    pub fn point(&self, lambda: &Rational, mu: &Rational) -> Result<HPoint> {
        let (a, b) = (self.span[0].coords(), self.span[1].coords());
        HPoint::new(std::array::from_fn(|i| lambda * &a[i] + mu * &b[i]))
    }
}

/// The residual generator cut out by the plane `x1 = m·x0` through `t`.
pub fn residual_generator(m: &Rational) -> Generator {
    let m3 = m * m * m;
    let pencil_plane = HPlane::new([-m.clone(), int(1), int(0), int(0)]).unwrap();
    let second = HPlane::new([-m3.clone(), int(0), int(3) * m, int(-3)]).unwrap();
    let on_t = HPoint::new([int(0), int(0), int(1), m.clone()]).unwrap();
    let affine = HPoint::new([int(1), m.clone(), int(0), -m3 / int(3)]).unwrap();
    Generator {
        planes: [pencil_plane, second],
        span: [on_t, affine],
    }
}

/// An element `M_{a,b,c}` of the group `G`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupElem {
    #[serde(serialize_with = "crate::rational::serde_str::serialize")]
    a: Rational,
    #[serde(serialize_with = "crate::rational::serde_str::serialize")]
    b: Rational,
    #[serde(serialize_with = "crate::rational::serde_str::serialize")]
    c: Rational,
}

impl GroupElem {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::InvalidGroupElement);
        }
        Ok(Self { a, b, c })
    }

    pub fn identity() -> Self {
        Self {
            a: int(0),
            b: int(0),
            c: int(1),
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// The lower-triangular matrix of the group element.
    pub fn matrix(&self) -> Collineation {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let z = || int(0);
        Collineation::new([
            [int(1), z(), z(), z()],
            [a.clone(), c.clone(), z(), z()],
            [b.clone(), a * c, c * c, z()],
            [a * b - rat(1, 3) * a * a * a, b * c, a * c * c, c * c * c],
        ])
        .expect("c ≠ 0 makes the matrix invertible")
    }

    /// Reads `(a, b, c)` off entries (1,0), (2,0), (1,1) of a matrix and
    /// checks that the matrix is exactly the corresponding group matrix.
    pub fn from_matrix(m: &Collineation) -> Option<Self> {
        let scale = m.entry(0, 0);
        if scale.is_zero() {
            return None;
        }
        let read = |r, c| m.entry(r, c) / scale;
        let g = Self::new(read(1, 0), read(2, 0), read(1, 1)).ok()?;
        let rebuilt = g.matrix();
        let exact = (0..4).all(|r| (0..4).all(|c| read(r, c) == *rebuilt.entry(r, c)));
        exact.then_some(g)
    }

    /// The product `self · rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Self) -> Self {
        Self::from_matrix(&self.matrix().compose(&rhs.matrix()))
            .expect("G is closed under multiplication")
    }

    pub fn inverse(&self) -> Self {
        let c_inv = self.c.recip();
        Self {
            a: -&self.a * &c_inv,
            b: (&self.a * &self.a - &self.b) * &c_inv * &c_inv,
            c: c_inv,
        }
    }

    /// Transported curve parameters: `M_{a,b,c}` maps `c_{α,β,γ}` onto
    /// `c_{ᾱ,β,γ̄}`.
    pub fn act_on_params(&self, p: &CubicParams) -> CubicParams {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let (alpha, beta, gamma) = (p.alpha(), p.beta(), p.gamma());
        let new_alpha =
            -(a * a) * beta * beta / int(4) - a * c * beta * gamma + c * c * alpha + b * beta;
        let new_gamma = a * (beta - int(2)) / int(2) + c * gamma;
        CubicParams::new(new_alpha, beta.clone(), new_gamma).expect("beta is unchanged")
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_list(&[
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
        ]))
    }
}

impl FromStr for GroupElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let [a, b, c]: [Rational; 3] = parse_list(s, 3)?.try_into().unwrap();
        Self::new(a, b, c)
    }
}

/// Conical curvature `β(3−β)/2` of the cubic parabolas with parameter `β`.
pub fn conical_curvature(beta: &Rational) -> Result<Rational> {
    if beta.is_zero() || *beta == int(3) {
        return Err(Error::InvalidParameter(beta.clone()));
    }
    Ok(beta * (int(3) - beta) / int(2))
}

/// The largest conical curvature, attained only at `β = 3/2`.
pub fn max_conical_curvature() -> Rational {
    rat(9, 8)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::curve_point;
    use crate::family::Param;
    use crate::projective::HPlane;

    fn pt(c: [i64; 4]) -> HPoint {
        HPoint::from_ints(c).unwrap()
    }

    fn g(a: Rational, b: Rational, c: Rational) -> GroupElem {
        GroupElem::new(a, b, c).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(cayley_eval(&pt([0, 0, 0, 1])), int(0));
        let p = HPoint::new([int(1), int(1), int(1), rat(2, 3)]).unwrap();
        assert_eq!(cayley_eval(&p), int(0));
        assert_eq!(cayley_eval(&pt([1, 1, 1, 0])), int(2));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(orbit_of(&pt([0, 0, 0, 1])), SurfaceOrbit::UPoint);
        assert_eq!(orbit_of(&pt([0, 0, 0, -4])), SurfaceOrbit::UPoint);
        assert_eq!(orbit_of(&pt([0, 0, 1, 7])), SurfaceOrbit::TMinusU);
        let p = HPoint::new([int(1), int(1), int(1), rat(2, 3)]).unwrap();
        assert_eq!(orbit_of(&p), SurfaceOrbit::AffineSurfacePoint);
        assert_eq!(orbit_of(&pt([1, 1, 1, 0])), SurfaceOrbit::NotOnSurface);
        // ω ∩ F = t, so x0 = 0, x1 ≠ 0 is off the surface
        assert_eq!(orbit_of(&pt([0, 1, 0, 0])), SurfaceOrbit::NotOnSurface);
    }

    #[test]
    fn flag_is_consistent() {
        let flag = Flag::standard();
        assert!(flag.is_consistent());
        assert!(incidence(&flag.u, &flag.omega));
    }

    #[test]
    fn residual_generator_at_zero() {
        let gen = residual_generator(&int(0));
        assert_eq!(gen.planes[0], HPlane::from_ints([0, 1, 0, 0]).unwrap());
        assert_eq!(gen.planes[1], HPlane::from_ints([0, 0, 0, 1]).unwrap());
        assert!(gen.contains(&pt([1, 0, 0, 0])));
        assert!(gen.contains(&pt([0, 0, 1, 0])));
    }

    #[test]
    fn residual_generators_lie_on_surface_and_meet_t() {
        for m in [int(0), int(1), rat(-5, 2), rat(7, 3)] {
            let gen = residual_generator(&m);
            let meet = HPoint::new([int(0), int(0), int(1), m.clone()]).unwrap();
            assert!(gen.contains(&meet));
            assert!(!gen.contains(&u_point()));
            for (l, mu) in [(1, 0), (0, 1), (1, 1), (2, -3), (-1, 5)] {
                let p = gen.point(&int(l), &int(mu)).unwrap();
                assert!(gen.contains(&p));
                assert!(on_surface(&p), "m = {m}, point {p}");
            }
        }
    }

    #[test]
    fn group_matrix_examples() {
        let id = g(int(0), int(0), int(1)).matrix();
        assert_eq!(&id, &Collineation::identity());
        let m = g(int(1), int(0), int(1)).matrix();
        let expected = [
            [int(1), int(0), int(0), int(0)],
            [int(1), int(1), int(0), int(0)],
            [int(0), int(1), int(1), int(0)],
            [rat(-1, 3), int(0), int(1), int(1)],
        ];
        assert_eq!(m.matrix(), &expected);
        let d = g(int(0), int(0), int(2)).matrix();
        for (i, v) in [1, 2, 4, 8].into_iter().enumerate() {
            assert_eq!(d.entry(i, i), &int(v));
        }
        assert_eq!(
            GroupElem::new(int(1), int(1), int(0)),
            Err(Error::InvalidGroupElement)
        );
    }

    #[test]
    fn apply_group_matrix_to_origin() {
        let image = g(int(1), int(0), int(1))
            .matrix()
            .apply_point(&pt([1, 0, 0, 0]));
        assert_eq!(image.coords(), &[int(1), int(1), int(0), rat(-1, 3)]);
    }

    #[test]
    fn omega_is_fixed() {
        let m = g(rat(2, 3), int(-1), rat(5, 2)).matrix();
        assert_eq!(m.apply_plane(&omega()), omega());
    }

    #[test]
    fn compose_examples() {
        let x = g(int(1), int(0), int(1));
        assert_eq!(x.compose(&x), g(int(2), int(1), int(1)));
        let y = g(rat(-2, 3), rat(1, 7), int(-3));
        assert_eq!(GroupElem::identity().compose(&y), y);
        assert_eq!(y.compose(&y.inverse()), GroupElem::identity());
        assert_eq!(y.inverse().compose(&y), GroupElem::identity());
        assert_eq!(y.inverse().c(), &rat(-1, 3));
    }

    #[test]
    fn from_matrix_rejects_non_group_matrices() {
        let d = Collineation::diagonal([int(1), int(2), int(3), int(8)]).unwrap();
        assert_eq!(GroupElem::from_matrix(&d), None);
        let scaled = Collineation::diagonal([int(5), int(10), int(20), int(40)]).unwrap();
        assert_eq!(
            GroupElem::from_matrix(&scaled),
            Some(g(int(0), int(0), int(2)))
        );
    }

    #[test]
    fn action_examples() {
        let p = CubicParams::new(int(0), int(2), int(0)).unwrap();
        assert_eq!(GroupElem::identity().act_on_params(&p), p);
        assert_eq!(
            g(int(0), int(1), int(1)).act_on_params(&p),
            CubicParams::new(int(2), int(2), int(0)).unwrap()
        );
        assert_eq!(
            g(int(1), int(0), int(1)).act_on_params(&p),
            CubicParams::new(int(-1), int(2), int(0)).unwrap()
        );
    }

    #[test]
    fn action_moves_curve_points_onto_transported_curve() {
        let p = CubicParams::new(rat(-5, 2), rat(7, 3), rat(1, 2)).unwrap();
        let elem = g(rat(3, 2), int(-2), rat(-1, 3));
        let moved = elem.act_on_params(&p);
        for u in [int(0), int(1), rat(-4, 5), int(9)] {
            let image = elem
                .matrix()
                .apply_point(&curve_point(&p, &Param::Finite(u)));
            let x = image.coords();
            let u_bar = &x[1] / &x[0] + moved.gamma();
            assert_eq!(image, curve_point(&moved, &Param::Finite(u_bar)));
        }
    }

    #[test]
    fn curvature_examples() {
        assert_eq!(conical_curvature(&rat(3, 2)).unwrap(), rat(9, 8));
        assert_eq!(conical_curvature(&int(2)).unwrap(), int(1));
        assert_eq!(
            conical_curvature(&int(1)).unwrap(),
            conical_curvature(&int(2)).unwrap()
        );
        assert!(conical_curvature(&int(0)).is_err());
        assert!(conical_curvature(&int(3)).is_err());
    }

    #[test]
    fn group_elem_text_form() {
        let e: GroupElem = "1,-1/2,3".parse().unwrap();
        assert_eq!(e, g(int(1), rat(-1, 2), int(3)));
        assert_eq!(e.to_string(), "1,-1/2,3");
        assert!("1,2,0".parse::<GroupElem>().is_err());
    }
}
