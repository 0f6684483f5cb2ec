use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::family::CubicParams;
use crate::rational::{format_rational, Rational};
use crate::series::Series;

use super::jet::{curve_jet_at_u, dual_jet_at_omega, Jet, DEFAULT_TRUNCATION};

/// Largest contact order the engine decides by default. Distinct twisted
/// cubics never reach it.
pub const MAX_ORDER: u32 = 5;

/// Order of contact between two branches at a common point: branches agree
/// through order `k` after a reparametrization (`k + 1`-point contact).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ContactOrder {
    Exact(u32),
    /// Matching succeeded up to the cap that was asked for.
    AtLeast(u32),
}

impl ContactOrder {
    pub fn at_least(&self, k: u32) -> bool {
        match *self {
            ContactOrder::Exact(v) | ContactOrder::AtLeast(v) => v >= k,
        }
    }

    /// Lower bound carried by the value.
    pub fn value(&self) -> u32 {
        match *self {
            ContactOrder::Exact(v) | ContactOrder::AtLeast(v) => v,
        }
    }

    /// Clamps an exact order to the sentinel `AtLeast(cap)`.
    pub fn capped(self, cap: u32) -> Self {
        match self {
            ContactOrder::Exact(v) if v < cap => self,
            ContactOrder::AtLeast(v) if v < cap => self,
            _ => ContactOrder::AtLeast(cap),
        }
    }
}

impl fmt::Display for ContactOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContactOrder::Exact(v) => write!(f, "{v}"),
            ContactOrder::AtLeast(v) => write!(f, "AtLeast({v})"),
        }
    }
}

impl Serialize for ContactOrder {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Outcome of matching two jets order by order.
#[derive(Clone, Debug, Serialize)]
pub struct MatchTrace {
    pub order: ContactOrder,
    /// Coefficients `φ1, φ2, …` of the reparametrization found so far.
    pub reparametrization: Vec<String>,
    /// First order at which no reparametrization matches, with the residual
    /// per component.
    pub first_failure: Option<(u32, Vec<String>)>,
}

/// Order of contact of two jets with a shared chart and basepoint, decided
/// up to `cap`.
pub fn contact_order(j1: &Jet, j2: &Jet, cap: u32) -> Result<ContactOrder> {
    match_jets(j1, j2, cap).map(|t| t.order)
}

/// Searches for `φ(s) = φ1·s + φ2·s² + …` with `j1(s) ≡ j2(φ(s))` order by
/// order. At order `n` the coefficient of `s^n` in `j2(φ(s))` is linear in
/// `φn` with slope given by the linear terms of `j2`, so `φn` is fixed by one
/// pivot component and the others must agree exactly.
pub fn match_jets(j1: &Jet, j2: &Jet, cap: u32) -> Result<MatchTrace> {
    if j1.chart() != j2.chart() {
        return Err(Error::IncomparableJets("jets live in different charts"));
    }
    if j1.basepoint() != j2.basepoint() {
        return Err(Error::IncomparableJets("jets have different basepoints"));
    }
    let need = cap as usize + 1;
    let have = j1.truncation().min(j2.truncation());
    if have < need {
        return Err(Error::Truncation { have, need });
    }
    let (a, b) = (j1.components(), j2.components());
    let pivot = (0..3)
        .find(|&i| !b[i].coeff(1).is_zero())
        .ok_or(Error::IrregularBranch)?;

    let mut phi = Series::zero(cap as usize);
    for n in 1..=cap as usize {
        // j2(φ) with φn still zero; its s^n coefficient is the known part.
        let partial: Vec<Series> = b
            .iter()
            .map(|c| c.truncate(n).compose(&phi.truncate(n)))
            .collect();
        let residual: Vec<Rational> = (0..3)
            .map(|i| a[i].coeff(n) - partial[i].coeff(n))
            .collect();
        let phi_n = &residual[pivot] / b[pivot].coeff(1);
        let mismatch: Vec<Rational> = (0..3)
            .map(|i| &residual[i] - b[i].coeff(1) * &phi_n)
            .collect();
        if mismatch.iter().any(|m| !m.is_zero()) {
            return Ok(MatchTrace {
                order: ContactOrder::Exact(n as u32 - 1),
                reparametrization: phi.coeffs()[1..n].iter().map(format_rational).collect(),
                first_failure: Some((n as u32, mismatch.iter().map(format_rational).collect())),
            });
        }
        let mut coeffs = phi.coeffs().to_vec();
        coeffs[n] = phi_n;
        phi = Series::new(coeffs);
    }
    Ok(MatchTrace {
        order: ContactOrder::AtLeast(cap),
        reparametrization: phi.coeffs()[1..].iter().map(format_rational).collect(),
        first_failure: None,
    })
}

/// Contact order at `U` of two family curves.
pub fn curve_contact_order(p: &CubicParams, q: &CubicParams, cap: u32) -> Result<ContactOrder> {
    let n = DEFAULT_TRUNCATION.max(cap as usize + 1);
    contact_order(&curve_jet_at_u(p, n)?, &curve_jet_at_u(q, n)?, cap)
}

/// Contact order at `ω` of the dual curves (osculating planes) of two family curves.
pub fn dual_contact_order(p: &CubicParams, q: &CubicParams, cap: u32) -> Result<ContactOrder> {
    let n = DEFAULT_TRUNCATION.max(cap as usize + 1);
    contact_order(&dual_jet_at_omega(p, n)?, &dual_jet_at_omega(q, n)?, cap)
}
