//! Closed-form classification of contact orders between family curves,
//! independent of the jet engine.

use crate::family::CubicParams;
use crate::rational::{int, rat};

use super::order::{ContactOrder, MAX_ORDER};

/// Predicted contact order at `U` of `c_{α,β,γ}` and `c_{ᾱ,β̄,γ̄}`.
pub fn predicted_contact(p: &CubicParams, q: &CubicParams) -> ContactOrder {
    if p == q {
        return ContactOrder::AtLeast(MAX_ORDER);
    }
    let (b, bb) = (p.beta(), q.beta());
    let same_beta = b == bb;
    let same_gamma = p.gamma() == q.gamma();
    let three_halves = rat(3, 2);
    let second = same_beta || *b == int(3) - bb;
    let third = (same_beta && same_gamma) || (same_beta && *b == three_halves);
    let fourth = same_beta && *b == three_halves && same_gamma;
    ContactOrder::Exact(1 + second as u32 + third as u32 + fourth as u32)
}

/// Predicted contact order at `ω` of the dual curves.
pub fn predicted_dual_contact(p: &CubicParams, q: &CubicParams) -> ContactOrder {
    if p == q {
        return ContactOrder::AtLeast(MAX_ORDER);
    }
    let same_beta = p.beta() == q.beta();
    let same_gamma = p.gamma() == q.gamma();
    let second = same_beta;
    let third = (same_beta && same_gamma) || (same_beta && *p.beta() == rat(5, 2));
    let fourth = same_beta && *p.beta() == rat(7, 3) && same_gamma;
    ContactOrder::Exact(1 + second as u32 + third as u32 + fourth as u32)
}

/// Human-readable name of the strongest clause that holds, for reports.
pub fn clause(order: ContactOrder, dual: bool) -> &'static str {
    match (order, dual) {
        (ContactOrder::AtLeast(_), _) => "identical curves",
        (ContactOrder::Exact(4), false) => "(c) beta = beta' = 3/2 and gamma = gamma'",
        (ContactOrder::Exact(3), false) => {
            "(b) beta = beta' and gamma = gamma', or beta = beta' = 3/2"
        }
        (ContactOrder::Exact(2), false) => "(a) beta = beta' or beta = 3 - beta'",
        (ContactOrder::Exact(4), true) => "(f) beta = beta' = 7/3 and gamma = gamma'",
        (ContactOrder::Exact(3), true) => {
            "(e) beta = beta' and gamma = gamma', or beta = beta' = 5/2"
        }
        (ContactOrder::Exact(2), true) => "(d) beta = beta'",
        (ContactOrder::Exact(_), _) => "shared point and tangent only",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn params(a: i64, b: Rational, c: i64) -> CubicParams {
        CubicParams::new(int(a), b, int(c)).unwrap()
    }

    #[test]
    fn primal_clauses() {
        let e = ContactOrder::Exact;
        assert_eq!(
            predicted_contact(&params(0, int(2), 0), &params(1, int(2), 0)),
            e(3)
        );
        assert_eq!(
            predicted_contact(&params(0, rat(3, 2), 0), &params(1, rat(3, 2), 0)),
            e(4)
        );
        assert_eq!(
            predicted_contact(&params(0, rat(3, 2), 0), &params(1, rat(3, 2), 1)),
            e(3)
        );
        assert_eq!(
            predicted_contact(&params(0, int(1), 0), &params(0, int(2), 0)),
            e(2)
        );
        assert_eq!(
            predicted_contact(&params(0, int(1), 0), &params(0, int(4), 0)),
            e(1)
        );
        assert_eq!(
            predicted_contact(&params(0, int(2), 0), &params(0, int(2), 1)),
            e(2)
        );
        assert_eq!(
            predicted_contact(&params(0, int(1), 0), &params(0, int(1), 0)),
            ContactOrder::AtLeast(5)
        );
    }

    #[test]
    fn dual_clauses() {
        let e = ContactOrder::Exact;
        assert_eq!(
            predicted_dual_contact(&params(0, rat(7, 3), 0), &params(1, rat(7, 3), 0)),
            e(4)
        );
        assert_eq!(
            predicted_dual_contact(&params(0, rat(5, 2), 0), &params(0, rat(5, 2), 1)),
            e(3)
        );
        assert_eq!(
            predicted_dual_contact(&params(0, int(1), 0), &params(0, int(2), 0)),
            e(1)
        );
        assert_eq!(
            predicted_dual_contact(&params(0, rat(7, 3), 0), &params(0, rat(7, 3), 1)),
            e(2)
        );
        assert_eq!(
            predicted_dual_contact(&params(0, int(1), 0), &params(1, int(1), 0)),
            e(3)
        );
    }
}
