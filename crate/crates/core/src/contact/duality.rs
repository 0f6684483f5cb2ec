//! Dual curves in an explicit coordinate frame of dual space.
//!
//! The dual curve of `c_{α,β,γ}` is the curve `u ↦ osculating plane`. To
//! compare it with the primal family we read plane coordinates
//! `(X0, X1, X2, X3)` as the point `(X3, X2, X1, X0)`, so that `ω` becomes
//! `U`, and then rescale the last two coordinates so the curve lies on the
//! standard Cayley surface. The `x1` scale is fixed to 1; any other choice
//! differs by a diagonal element of `G` and rescales `α` by a square.
//! The frame is a convention of this crate, not a canonical one.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{identify_params, CubicParams};
use crate::linalg::{solve_exact, LinearError};
use crate::poly::Poly;
use crate::projective::HPoint;
use crate::rational::{int, Rational};

use super::osculating::osculating_polynomials_finite;

/// Two dual curves placed on the standard Cayley surface in one common
/// frame, together with the diagonal scales used.
#[derive(Clone, Debug, Serialize)]
pub struct DualFrame {
    /// Diagonal scales applied after reversing the plane coordinates.
    #[serde(serialize_with = "crate::rational::serde_str::serialize_vec")]
    pub scales: [Rational; 4],
    /// Family parameters of the two dual curves in this frame.
    pub params: [CubicParams; 2],
}

fn reversed_dual(p: &CubicParams) -> [Poly; 4] {
    let [x0, x1, x2, x3] = osculating_polynomials_finite(p);
    [x3, x2, x1, x0]
}

/// Coefficient rows of `3·y0·y1·(d2·y2) − y1³ − 3·(d3·y3)·y0² ≡ 0`, which is
/// linear in the scales `(d2, d3)`.
fn scale_equations(y: &[Poly; 4]) -> Vec<Vec<Rational>> {
    let [y0, y1, y2, y3] = y.clone();
    let a = (y0.clone() * y1.clone() * y2).scale(&int(3));
    let b = (y3 * y0.clone() * y0).scale(&int(-3));
    let c = y1.clone() * y1.clone() * y1;
    let degree = [&a, &b, &c]
        .iter()
        .filter_map(|q| q.degree())
        .max()
        .unwrap_or(0);
    (0..=degree)
        .map(|k| vec![a.coeff(k), b.coeff(k), c.coeff(k)])
        .collect()
}

/// Places the dual curves of `p` and `q` in one common frame of the kind
/// described above and identifies both as family members, if they are.
/// A single dual curve may not pin the frame down, so the scales are
/// fitted to both curves at once.
pub fn dual_frame(p: &CubicParams, q: &CubicParams) -> Result<DualFrame> {
    let curves = [reversed_dual(p), reversed_dual(q)];
    let rows = curves.iter().flat_map(scale_equations).collect();
    let scales = solve_exact(rows, 2).map_err(|e| match e {
        LinearError::Underdetermined { .. } => {
            Error::InsufficientData("dual frame scales are not determined".into())
        }
        LinearError::Inconsistent { .. } => Error::NotInFamily(p.beta().clone()),
    })?;
    let (d2, d3) = (scales[0].clone(), scales[1].clone());
    let identify = |[y0, y1, y2, y3]: &[Poly; 4]| {
        let points = (1..=4)
            .map(|u| {
                let u = int(u);
                HPoint::new([
                    y0.eval(&u),
                    y1.eval(&u),
                    &d2 * y2.eval(&u),
                    &d3 * y3.eval(&u),
                ])
            })
            .collect::<Result<Vec<_>>>()?;
        identify_params(&points)
    };
    let params = [identify(&curves[0])?, identify(&curves[1])?];
    Ok(DualFrame {
        scales: [int(1), int(1), d2.clone(), d3.clone()],
        params,
    })
}
