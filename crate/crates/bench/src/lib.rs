//! Fixtures shared by the benchmarks.

use cayley_core::family::curve_point;
use cayley_core::rational::{int, rat};
use cayley_core::{CubicParams, HPoint, Param};

/// Pairs covering the generic case and each special clause, labelled.
pub fn contact_pairs() -> Vec<(&'static str, CubicParams, CubicParams)> {
    let c = |a, b, g| CubicParams::new(a, b, g).unwrap();
    vec![
        (
            "generic",
            c(rat(-5, 3), int(4), rat(1, 2)),
            c(int(2), rat(1, 7), int(-3)),
        ),
        (
            "asymptotic",
            c(int(0), int(2), int(0)),
            c(int(1), int(2), int(0)),
        ),
        (
            "three-halves",
            c(rat(2, 5), rat(3, 2), int(1)),
            c(rat(-7, 4), rat(3, 2), int(1)),
        ),
        (
            "seven-thirds",
            c(int(3), rat(7, 3), int(0)),
            c(rat(-1, 9), rat(7, 3), int(0)),
        ),
    ]
}

/// `n` points of `c_{-5, 7/3, 1/2}` at `u = 0, 1, …`.
pub fn sample_points(n: i64) -> Vec<HPoint> {
    let p = CubicParams::new(int(-5), rat(7, 3), rat(1, 2)).unwrap();
    (0..n)
        .map(|u| curve_point(&p, &Param::Finite(int(u))))
        .collect()
}
