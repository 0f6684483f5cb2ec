use num_traits::Zero;

use crate::error::{Error, Result};
use crate::family::{ConicForm, PlanarPoint};
use crate::projective::HPoint;
use crate::rational::{int, Rational};
use crate::series::Series;

use super::jet::{Basepoint, Jet};

/// Truncation for branch substitution. Two distinct conics meet with
/// multiplicity at most 4, so vanishing through this order means a shared
/// component.
const BRANCH_TRUNCATION: usize = 8;

fn gradient(q: &ConicForm, p: &[Rational; 3]) -> [Rational; 3] {
    let a = q.matrix();
    std::array::from_fn(|i| (0..3).map(|j| &a[i][j] * &p[j]).sum())
}

fn bilinear(q: &ConicForm, x: &[Rational; 3], y: &[Rational; 3]) -> Rational {
    let a = q.matrix();
    (0..3)
        .map(|i| (0..3).map(|j| &x[i] * &a[i][j] * &y[j]).sum::<Rational>())
        .sum()
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn unit(i: usize) -> [Rational; 3] {
    std::array::from_fn(|j| int((i == j) as i64))
}

/// A branch `t ↦ p + t·w + y(t)·n` of the conic through the smooth point
/// `p`, with `w` tangent and `n` transversal, as homogeneous series.
pub fn conic_branch(q: &ConicForm, p: &PlanarPoint, order: usize) -> Result<[Series; 3]> {
    let p = p.coords();
    if !q.eval(p).is_zero() {
        return Err(Error::InvalidBasepoint("point is not on the conic"));
    }
    let g = gradient(q, p);
    if g.iter().all(Zero::is_zero) {
        return Err(Error::InvalidBasepoint("conic is singular at the point"));
    }
    // g·p = q(p) = 0, so the tangent line g·x = 0 contains p; take a second
    // point on it.
    let tangent = (0..3)
        .map(|i| cross(&g, &unit(i)))
        .find(|w| cross(w, p).iter().any(|c| !c.is_zero()))
        .expect("the tangent line has two independent points");
    let transversal = unit((0..3).find(|&i| !g[i].is_zero()).unwrap());

    // q(p + t·w + y·n) = 0 with q(p) = 0 and B(p, w) = 0 gives
    //   y = −(t²·q(w) + 2t·y·B(w, n) + y²·q(n)) / (2·B(p, n)).
    let pn = int(2) * bilinear(q, p, &transversal);
    let qw = bilinear(q, &tangent, &tangent);
    let wn = int(2) * bilinear(q, &tangent, &transversal);
    let qn = bilinear(q, &transversal, &transversal);
    let t = Series::var(order);
    let t2 = &t * &t;
    let mut y = Series::zero(order);
    for _ in 0..order {
        let rhs = &(&t2.scale(&qw) + &(&t * &y).scale(&wn)) + &(&y * &y).scale(&qn);
        y = rhs.scale(&(-pn.recip()));
    }
    Ok(std::array::from_fn(|i| {
        let mut c = vec![Rational::zero(); order + 1];
        c[0] = p[i].clone();
        c[1] = tangent[i].clone();
        &Series::new(c) + &y.scale(&transversal[i])
    }))
}

fn substitute(q: &ConicForm, x: &[Series; 3]) -> Series {
    let [a00, a11, a22, a01, a02, a12] = q.coeffs();
    let m = |i: usize, j: usize| &x[i] * &x[j];
    let terms = [
        m(0, 0).scale(a00),
        m(1, 1).scale(a11),
        m(2, 2).scale(a22),
        m(0, 1).scale(a01),
        m(0, 2).scale(a02),
        m(1, 2).scale(a12),
    ];
    terms
        .iter()
        .skip(1)
        .fold(terms[0].clone(), |acc, t| &acc + t)
}

/// Intersection multiplicity of two distinct conics at a common smooth point.
pub fn planar_intersection_multiplicity(
    q1: &ConicForm,
    q2: &ConicForm,
    p: &PlanarPoint,
) -> Result<u32> {
    if q1.proportional(q2) {
        return Err(Error::IdenticalCurves);
    }
    if !q2.eval(p.coords()).is_zero() {
        return Err(Error::InvalidBasepoint("point is not on both conics"));
    }
    if gradient(q2, p.coords()).iter().all(Zero::is_zero) {
        return Err(Error::InvalidBasepoint("conic is singular at the point"));
    }
    let branch = conic_branch(q1, p, BRANCH_TRUNCATION)?;
    substitute(q2, &branch)
        .valuation()
        .map(|v| v as u32)
        .ok_or(Error::CommonComponent)
}

/// The branch of a conic at `p` as a space jet in the plane `x3 = 0`, for
/// comparing planar multiplicities with jet contact orders.
pub fn conic_jet(q: &ConicForm, p: &PlanarPoint, order: usize) -> Result<Jet> {
    let [b0, b1, b2] = conic_branch(q, p, order)?;
    let chart = (0..3).find(|&i| !p.coords()[i].is_zero()).unwrap();
    let [x0, x1, x2] = p.coords();
    let base = HPoint::new([x0.clone(), x1.clone(), x2.clone(), int(0)])?;
    Jet::from_homogeneous(
        chart,
        Basepoint::Point(base),
        [b0, b1, b2, Series::zero(order)],
    )
}
