use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::CubicParams;
use crate::projective::{HPlane, HPoint};
use crate::rational::Rational;
use crate::series::Series;
use crate::surface::{omega, u_point};

use super::osculating::osculating_polynomials_at_infinity;

/// Shortest truncation a [`Jet`] may carry.
pub const MIN_TRUNCATION: usize = 6;

/// Truncation used when none is requested: one past the largest contact
/// order the engine decides, plus the basepoint.
pub const DEFAULT_TRUNCATION: usize = 7;

/// Chart at `U`: dehomogenize by `x3`.
pub const CHART_AT_U: usize = 3;

/// Chart at `ω` in dual space: dehomogenize by `X0`.
pub const CHART_AT_OMEGA: usize = 0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Basepoint {
    Point(HPoint),
    Plane(HPlane),
}

impl Basepoint {
    fn coords(&self) -> &[Rational; 4] {
        match self {
            Basepoint::Point(p) => p.coords(),
            Basepoint::Plane(h) => h.coords(),
        }
    }
}

/// A truncated branch of a curve in an affine chart.
///
/// The chart divides by homogeneous coordinate `chart`; the three components
/// are the remaining affine coordinates in increasing index order, translated
/// so the basepoint sits at the origin. Every component vanishes at `s = 0`
/// and at least one has a nonzero linear term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jet {
    chart: usize,
    basepoint: Basepoint,
    components: [Series; 3],
}

impl Jet {
    pub fn new(chart: usize, basepoint: Basepoint, components: [Series; 3]) -> Result<Self> {
        assert!(chart < 4, "chart index out of range");
        if basepoint.coords()[chart].is_zero() {
            return Err(Error::InvalidBasepoint("basepoint is outside the chart"));
        }
        let truncation = components.iter().map(Series::order).min().unwrap();
        if truncation < MIN_TRUNCATION {
            return Err(Error::Truncation {
                have: truncation,
                need: MIN_TRUNCATION,
            });
        }
        if components.iter().any(|c| !c.coeff(0).is_zero()) {
            return Err(Error::InvalidBasepoint(
                "jet components must vanish at s = 0",
            ));
        }
        if components.iter().all(|c| c.coeff(1).is_zero()) {
            return Err(Error::IrregularBranch);
        }
        let components = components.map(|c| c.truncate(truncation));
        Ok(Self {
            chart,
            basepoint,
            components,
        })
    }

    /// Dehomogenizes a branch `s ↦ coords(s)` of homogeneous coordinates
    /// through the basepoint at `s = 0`.
    pub fn from_homogeneous(
        chart: usize,
        basepoint: Basepoint,
        coords: [Series; 4],
    ) -> Result<Self> {
        let denom = coords[chart].recip().ok_or(Error::InvalidBasepoint(
            "chart coordinate vanishes at the basepoint",
        ))?;
        let base = basepoint.coords();
        if base[chart].is_zero() {
            return Err(Error::InvalidBasepoint("basepoint is outside the chart"));
        }
        let mut components = Vec::with_capacity(3);
        for i in (0..4).filter(|&i| i != chart) {
            let mut z = &coords[i] * &denom;
            let offset = &base[i] / &base[chart];
            if *z.coeff(0) != offset {
                return Err(Error::InvalidBasepoint(
                    "branch does not pass through the basepoint",
                ));
            }
            z = &z - &Series::new(vec![offset]).truncate(z.order());
            components.push(z);
        }
        Self::new(chart, basepoint, components.try_into().unwrap())
    }

    pub fn chart(&self) -> usize {
        self.chart
    }

    pub fn basepoint(&self) -> &Basepoint {
        &self.basepoint
    }

    pub fn components(&self) -> &[Series; 3] {
        &self.components
    }

    pub fn truncation(&self) -> usize {
        self.components[0].order()
    }

    /// Homogeneous coordinate index of component `k`.
    pub fn coordinate_of(&self, k: usize) -> usize {
        (0..4).filter(|&i| i != self.chart).nth(k).unwrap()
    }

    /// Reparametrizes so that component `k` becomes exactly `s`.
    pub fn graph_form(&self, k: usize) -> Result<Self> {
        let inverse = self.components[k]
            .reversion()
            .ok_or(Error::IrregularBranch)?;
        let components = std::array::from_fn(|i| {
            if i == k {
                Series::var(self.truncation())
            } else {
                self.components[i].compose(&inverse)
            }
        });
        Ok(Self {
            chart: self.chart,
            basepoint: self.basepoint.clone(),
            components,
        })
    }

    pub fn dump(&self) -> JetDump {
        JetDump {
            chart: self.chart,
            coordinates: (0..3).map(|k| self.coordinate_of(k)).collect(),
            basepoint: match &self.basepoint {
                Basepoint::Point(p) => format!("point {p}"),
                Basepoint::Plane(h) => format!("plane {h}"),
            },
            truncation: self.truncation(),
            components: self.components.iter().map(Series::to_strings).collect(),
        }
    }
}

/// Serializable view of a jet with coefficients as rational strings.
#[derive(Clone, Debug, Serialize)]
pub struct JetDump {
    pub chart: usize,
    pub coordinates: Vec<usize>,
    pub basepoint: String,
    pub truncation: usize,
    pub components: Vec<Vec<String>>,
}

/// The branch of `c_{α,β,γ}` at `U` in the chart `x3 ≠ 0`, in graph form
/// over the `x2/x3` coordinate.
pub fn curve_jet_at_u(p: &CubicParams, truncation: usize) -> Result<Jet> {
    let coords = p
        .polynomials_at_infinity()
        .map(|poly| poly.to_series(truncation));
    let jet = Jet::from_homogeneous(CHART_AT_U, Basepoint::Point(u_point()), coords)?;
    jet.graph_form(2)
}

/// The branch of the dual curve (osculating planes) of `c_{α,β,γ}` at `ω`
/// in the chart `X0 ≠ 0`, in graph form over the `X1/X0` coordinate.
pub fn dual_jet_at_omega(p: &CubicParams, truncation: usize) -> Result<Jet> {
    let coords = osculating_polynomials_at_infinity(p).map(|poly| poly.to_series(truncation));
    let jet = Jet::from_homogeneous(CHART_AT_OMEGA, Basepoint::Plane(omega()), coords)?;
    jet.graph_form(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::surface::conical_curvature;

    fn params(a: Rational, b: Rational, c: Rational) -> CubicParams {
        CubicParams::new(a, b, c).unwrap()
    }

    #[test]
    fn asymptotic_curve_jet() {
        let alpha = rat(5, 7);
        let jet = curve_jet_at_u(&params(alpha.clone(), int(2), int(0)), 7).unwrap();
        let [y0, y1, y2] = jet.components();
        assert_eq!(y2, &Series::var(7));
        assert_eq!(y1.coeff(1), &int(0));
        assert_eq!(y1.coeff(2), &rat(2, 3));
        assert_eq!(y1.coeff(3), &int(0));
        assert_eq!(y1.coeff(4), &(int(2) * &alpha / int(27)));
        assert_eq!(y0.coeff(2), &int(0));
        assert_eq!(y0.coeff(3), &rat(2, 9));
        assert_eq!(y0.coeff(4), &int(0));
    }

    #[test]
    fn quadratic_coefficient_is_curvature() {
        for (a, b, c) in [
            (0, rat(1, 1), 0),
            (3, rat(3, 2), -1),
            (-2, rat(7, 3), 4),
            (1, rat(-5, 4), 2),
        ] {
            let p = params(int(a), b.clone(), int(c));
            let jet = curve_jet_at_u(&p, 7).unwrap();
            let expected = int(2) * conical_curvature(&b).unwrap() / int(3);
            assert_eq!(jet.components()[1].coeff(2), &expected);
            assert_eq!(jet.components()[0].coeff(2), &int(0));
            if c == 0 {
                let cubic = &b * (int(3) - &b) * (int(3) - &b) / int(9);
                assert_eq!(jet.components()[0].coeff(3), &cubic);
            }
        }
    }

    #[test]
    fn dual_jet_basepoint_and_tangent() {
        let jet = dual_jet_at_omega(&params(rat(1, 2), rat(5, 2), int(-3)), 7).unwrap();
        assert_eq!(jet.basepoint(), &Basepoint::Plane(omega()));
        let [x1, x2, x3] = jet.components();
        assert_eq!(x1, &Series::var(7));
        assert!(x2.coeff(1).is_zero() && x3.coeff(1).is_zero());
    }

    #[test]
    fn rejects_malformed_jets() {
        let base = Basepoint::Point(u_point());
        let zero = Series::zero(7);
        assert_eq!(
            Jet::new(3, base.clone(), [zero.clone(), zero.clone(), zero.clone()]),
            Err(Error::IrregularBranch)
        );
        let short = Series::var(4);
        assert!(matches!(
            Jet::new(3, base.clone(), [short.clone(), short.clone(), short]),
            Err(Error::Truncation { have: 4, need: 6 })
        ));
        assert!(matches!(
            Jet::new(0, base, [Series::var(7), zero.clone(), zero]),
            Err(Error::InvalidBasepoint(_))
        ));
    }

    #[test]
    fn dump_serializes_rational_strings() {
        let jet = curve_jet_at_u(&params(int(0), int(2), int(0)), 6).unwrap();
        let json = serde_json::to_value(jet.dump()).unwrap();
        assert_eq!(json["chart"], 3);
        assert_eq!(json["components"][1][2], "2/3");
        assert_eq!(json["coordinates"], serde_json::json!([0, 1, 2]));
    }
}
