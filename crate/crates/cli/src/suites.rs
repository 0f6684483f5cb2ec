//! Named verification suites. Each runs a deterministic grid followed by
//! `count` seeded random cases.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use cayley_core::contact::{
    contact_order, curve_jet_at_u, dual_frame, dual_jet_at_omega, osculating_plane,
    planar_intersection_multiplicity, predicted_contact, predicted_dual_contact, ContactOrder, Jet,
    DEFAULT_TRUNCATION, MAX_ORDER,
};
use cayley_core::family::{
    curve_point, cylinder_eval, identify_params, parabola_point, projected_conic,
};
use cayley_core::rational::{format_list, format_rational, int, rat};
use cayley_core::surface::{conical_curvature, max_conical_curvature, omega, on_surface, u_point};
use cayley_core::{
    CubicParams, Error, GroupElem, HPlane, HPoint, ParabolaParams, Param, PlanarPoint, Rational,
};
use clap::ValueEnum;
use num_traits::Zero;
use rayon::prelude::*;

use crate::report::{expect_eq, Mismatch, Outcome, SuiteReport, Tally};
use crate::sample::{SampleSpec, Sampler};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorem1,
    BraunerAction,
    Curvature,
    Asymptotic,
    DualLink,
    Identify,
    GroupLaws,
    All,
}

impl Suite {
    pub const NAMED: [Suite; 7] = [
        Suite::Theorem1,
        Suite::BraunerAction,
        Suite::Curvature,
        Suite::Asymptotic,
        Suite::DualLink,
        Suite::Identify,
        Suite::GroupLaws,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::BraunerAction => "brauner-action",
            Suite::Curvature => "curvature",
            Suite::Asymptotic => "asymptotic",
            Suite::DualLink => "dual-link",
            Suite::Identify => "identify",
            Suite::GroupLaws => "group-laws",
            Suite::All => "all",
        }
    }
}

/// Runs a suite with contact orders decided up to `max_order`.
pub fn run_suite(suite: Suite, spec: &SampleSpec, max_order: u32) -> SuiteReport {
    if suite == Suite::All {
        let parts = Suite::NAMED
            .iter()
            .map(|&s| run_suite(s, spec, max_order))
            .collect();
        return SuiteReport::combine(suite.name(), spec.seed, parts);
    }
    let start = Instant::now();
    let mut report = match suite {
        Suite::Theorem1 => theorem1(spec, max_order),
        Suite::BraunerAction => brauner_action(spec),
        Suite::Curvature => curvature(spec),
        Suite::Asymptotic => asymptotic(spec, max_order),
        Suite::DualLink => dual_link(spec, max_order),
        Suite::Identify => identify(spec),
        Suite::GroupLaws => group_laws(spec),
        Suite::All => unreachable!(),
    };
    report.elapsed = start.elapsed();
    report
}

fn params(a: Rational, b: Rational, c: Rational) -> CubicParams {
    CubicParams::new(a, b, c).expect("beta is admissible")
}

fn labelled(pairs: &[(&'static str, &dyn ToString)]) -> Vec<(&'static str, String)> {
    pairs.iter().map(|(k, v)| (*k, v.to_string())).collect()
}

fn ensure(ok: bool, what: &str, inputs: impl FnOnce() -> Vec<(&'static str, String)>) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Mismatch::new(inputs(), what, format!("not {what}")))
    }
}

// ---- theorem1 ----

#[derive(Clone, Debug)]
pub struct PairCase {
    pub p: CubicParams,
    pub q: CubicParams,
}

/// Values of `β` on the grid: the special ones, a generic one and their
/// reflections `3 − β`.
pub fn theorem1_betas() -> Vec<Rational> {
    let base = [int(1), rat(3, 2), int(2), rat(7, 3), rat(5, 2), int(4)];
    let mut out: Vec<Rational> = base.to_vec();
    for b in &base {
        let r = int(3) - b;
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

pub fn theorem1_grid() -> Vec<PairCase> {
    let betas = theorem1_betas();
    let small = [int(0), int(1)];
    let mut cases = Vec::new();
    for b in &betas {
        for bb in &betas {
            for g in &small {
                for gg in &small {
                    for a in &small {
                        for aa in &small {
                            cases.push(PairCase {
                                p: params(a.clone(), b.clone(), g.clone()),
                                q: params(aa.clone(), bb.clone(), gg.clone()),
                            });
                        }
                    }
                }
            }
        }
    }
    cases
}

/// Random pairs, biased so that the special clauses keep firing.
pub fn theorem1_random(sampler: &mut Sampler, count: usize) -> Vec<PairCase> {
    let special = [rat(3, 2), rat(5, 2), rat(7, 3), int(2)];
    (0..count)
        .map(|_| {
            let beta = if sampler.chance(1, 2) {
                sampler.pick(&special).clone()
            } else {
                sampler.beta()
            };
            let beta_bar = match (sampler.chance(1, 2), sampler.chance(1, 2)) {
                (true, _) => beta.clone(),
                (false, true) => int(3) - &beta,
                (false, false) => sampler.beta(),
            };
            let p = sampler.params_with_beta(beta);
            let gamma_bar = if sampler.chance(1, 2) {
                p.gamma().clone()
            } else {
                sampler.rational()
            };
            let alpha_bar = if sampler.chance(1, 8) {
                p.alpha().clone()
            } else {
                sampler.rational()
            };
            let q = params(alpha_bar, beta_bar, gamma_bar);
            PairCase { p, q }
        })
        .collect()
}

/// Primal and dual jets of every curve in a batch of pairs, computed once.
pub struct JetCache(HashMap<CubicParams, (Jet, Jet)>);

impl JetCache {
    pub fn build(cases: &[PairCase]) -> Self {
        let mut all: Vec<CubicParams> = cases
            .iter()
            .flat_map(|c| [c.p.clone(), c.q.clone()])
            .collect();
        all.sort_by_cached_key(|p| p.to_string());
        all.dedup();
        let map = all
            .into_par_iter()
            .map(|p| {
                let primal =
                    curve_jet_at_u(&p, DEFAULT_TRUNCATION).expect("family curves are regular at U");
                let dual = dual_jet_at_omega(&p, DEFAULT_TRUNCATION)
                    .expect("dual curves are regular at omega");
                (p, (primal, dual))
            })
            .collect();
        JetCache(map)
    }

    /// Contact and dual contact orders of a pair, decided up to `cap`.
    pub fn orders(&self, case: &PairCase, cap: u32) -> (ContactOrder, ContactOrder) {
        let (p1, d1) = &self.0[&case.p];
        let (p2, d2) = &self.0[&case.q];
        let order = |a, b| contact_order(a, b, cap).expect("jets share chart and basepoint");
        (order(p1, p2), order(d1, d2))
    }
}

/// Checks the computed contact and dual-contact orders of one pair against
/// the closed-form classification.
fn check_pair(cache: &JetCache, case: &PairCase, cap: u32) -> Outcome {
    let (primal, dual) = cache.orders(case, cap);
    let inputs = |kind: &str| {
        vec![
            ("P", case.p.to_string()),
            ("P_bar", case.q.to_string()),
            ("kind", kind.to_string()),
        ]
    };
    expect_eq(
        || inputs("contact"),
        predicted_contact(&case.p, &case.q).capped(cap),
        primal,
    )?;
    expect_eq(
        || inputs("dual contact"),
        predicted_dual_contact(&case.p, &case.q).capped(cap),
        dual,
    )?;
    if cap >= MAX_ORDER {
        // contact through order five forces equal curves
        let high = primal.at_least(MAX_ORDER) || dual.at_least(MAX_ORDER);
        expect_eq(|| inputs("order five identity"), case.p == case.q, high)?;
    }
    Ok(())
}

pub fn theorem1(spec: &SampleSpec, cap: u32) -> SuiteReport {
    let grid = theorem1_grid();
    let random = theorem1_random(&mut spec.sampler(), spec.count);
    let all: Vec<PairCase> = grid.iter().chain(&random).cloned().collect();
    let cache = JetCache::build(&all);
    let check = |c: &PairCase| check_pair(&cache, c, cap);
    let mut report = SuiteReport::new(
        "theorem1",
        spec.seed,
        Tally::run(&grid, check),
        Tally::run(&random, check),
    );
    // how often each predicted order occurs among the random pairs
    for (key, predict) in [
        (
            "random contact orders",
            predicted_contact as fn(&CubicParams, &CubicParams) -> ContactOrder,
        ),
        ("random dual orders", predicted_dual_contact),
    ] {
        let mut counts: BTreeMap<String, usize> = BTreeMap::new();
        for c in &random {
            *counts.entry(predict(&c.p, &c.q).to_string()).or_default() += 1;
        }
        let summary: Vec<String> = counts.iter().map(|(k, n)| format!("{k}:{n}")).collect();
        report.info.insert(key.into(), summary.join(" "));
    }
    report
}

// ---- brauner-action ----

#[derive(Clone, Debug)]
pub struct ActionCase {
    pub g: GroupElem,
    pub p: CubicParams,
    pub us: Vec<Rational>,
}

fn check_action(case: &ActionCase) -> Outcome {
    let moved = case.g.act_on_params(&case.p);
    let m = case.g.matrix();
    for u in &case.us {
        let inputs = || {
            labelled(&[
                ("g", &case.g),
                ("P", &case.p),
                ("u", &format_rational(u)),
                ("moved", &moved),
            ])
        };
        let image = m.apply_point(&curve_point(&case.p, &Param::Finite(u.clone())));
        ensure(on_surface(&image), "image on the surface", inputs)?;
        expect_eq(
            inputs,
            "0".to_string(),
            format_rational(&cylinder_eval(&moved, &image)),
        )?;
        // finite points stay finite, and the image parameter is x1/x0 + γ̄
        let x = image.coords();
        let u_bar = &x[1] / &x[0] + moved.gamma();
        expect_eq(inputs, curve_point(&moved, &Param::Finite(u_bar)), image)?;
    }
    Ok(())
}

pub fn brauner_action(spec: &SampleSpec) -> SuiteReport {
    let us: Vec<Rational> = [-2, -1, 0, 1, 2].map(int).to_vec();
    let elements = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (0, 0, -2), (2, -1, 3)];
    let curves = [
        params(int(0), int(2), int(0)),
        params(int(-5), rat(7, 3), rat(1, 2)),
    ];
    let grid: Vec<ActionCase> = elements
        .iter()
        .flat_map(|&(a, b, c)| {
            let g = GroupElem::new(int(a), int(b), int(c)).unwrap();
            let us = us.clone();
            curves.iter().map(move |p| ActionCase {
                g: g.clone(),
                p: p.clone(),
                us: us.clone(),
            })
        })
        .collect();
    let mut sampler = spec.sampler();
    let random: Vec<ActionCase> = (0..spec.count)
        .map(|_| ActionCase {
            g: sampler.group_elem(),
            p: sampler.params(),
            us: sampler.distinct(5),
        })
        .collect();
    SuiteReport::new(
        "brauner-action",
        spec.seed,
        Tally::run(&grid, check_action),
        Tally::run(&random, check_action),
    )
}

// ---- curvature ----

fn check_curvature_bound(beta: &Rational) -> Outcome {
    let inputs = || vec![("beta", format_rational(beta))];
    let kappa = conical_curvature(beta).expect("grid avoids 0 and 3");
    let max = max_conical_curvature();
    ensure(kappa <= max, "curvature at most 9/8", inputs)?;
    expect_eq(inputs, *beta == rat(3, 2), kappa == max)
}

fn check_jet_curvature(p: &CubicParams) -> Outcome {
    let jet = curve_jet_at_u(p, DEFAULT_TRUNCATION).expect("family curves are regular at U");
    let kappa = conical_curvature(p.beta()).expect("beta is admissible");
    expect_eq(
        || vec![("P", p.to_string())],
        format_rational(&(rat(2, 3) * kappa)),
        format_rational(jet.components()[1].coeff(2)),
    )
}

pub fn curvature_grid() -> Vec<Rational> {
    (-24..=60)
        .map(|k| rat(k, 12))
        .filter(|b| !b.is_zero() && *b != int(3))
        .collect()
}

pub fn curvature(spec: &SampleSpec) -> SuiteReport {
    let grid = curvature_grid();
    let mut sampler = spec.sampler();
    let random: Vec<CubicParams> = (0..spec.count).map(|_| sampler.params()).collect();
    let mut report = SuiteReport::new(
        "curvature",
        spec.seed,
        Tally::run(&grid, check_curvature_bound),
        Tally::run(&random, check_jet_curvature),
    );
    let argmax: Vec<String> = grid
        .iter()
        .filter(|b| conical_curvature(b).ok() == Some(max_conical_curvature()))
        .map(format_rational)
        .collect();
    let max = grid
        .iter()
        .filter_map(|b| conical_curvature(b).ok())
        .max()
        .expect("grid is nonempty");
    report
        .info
        .insert("grid maximum".into(), format_rational(&max));
    report.info.insert("grid argmax".into(), argmax.join(","));
    report
}

// ---- asymptotic ----

/// Tangent plane of the surface at a smooth point.
fn tangent_plane(x: &HPoint) -> Option<HPlane> {
    let [x0, x1, x2, x3] = x.coords();
    let three = int(3);
    HPlane::new([
        &three * x1 * x2 - int(6) * x3 * x0,
        &three * (x0 * x2 - x1 * x1),
        &three * x0 * x1,
        -(&three * x0 * x0),
    ])
    .ok()
}

fn check_asymptotic(pair: &(Rational, Rational), cap: u32) -> Outcome {
    let p = params(pair.0.clone(), int(2), int(0));
    let q = params(pair.1.clone(), int(2), int(0));
    let inputs = || labelled(&[("P", &p), ("P_bar", &q)]);
    let jet = |c: &CubicParams| curve_jet_at_u(c, DEFAULT_TRUNCATION).expect("regular at U");
    let order = contact_order(&jet(&p), &jet(&q), cap).expect("comparable jets");
    expect_eq(inputs, ContactOrder::Exact(3).capped(cap), order)?;
    let vertex = PlanarPoint::from_ints([0, 0, 1]).unwrap();
    let mult =
        planar_intersection_multiplicity(&projected_conic(&p), &projected_conic(&q), &vertex);
    expect_eq(
        inputs,
        "4".to_string(),
        mult.map_or_else(|e| e.to_string(), |m| m.to_string()),
    )?;
    // osculating planes are tangent planes: these are asymptotic curves
    for u in [int(-1), int(1), int(2)] {
        let u = Param::Finite(u);
        let tangent = tangent_plane(&curve_point(&p, &u));
        expect_eq(
            inputs,
            tangent.map(|t| t.to_string()).unwrap_or_default(),
            osculating_plane(&p, &u).to_string(),
        )?;
    }
    Ok(())
}

fn distinct_pairs(sampler: &mut Sampler, count: usize) -> Vec<(Rational, Rational)> {
    (0..count)
        .map(|_| {
            let v = sampler.distinct(2);
            (v[0].clone(), v[1].clone())
        })
        .collect()
}

fn alpha_grid() -> Vec<(Rational, Rational)> {
    let alphas = [int(0), int(1), int(-1), rat(1, 2)];
    let mut out = Vec::new();
    for a in &alphas {
        for b in &alphas {
            if a != b {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

pub fn asymptotic(spec: &SampleSpec, cap: u32) -> SuiteReport {
    let random = distinct_pairs(&mut spec.sampler(), spec.count);
    let check = |pair: &(Rational, Rational)| check_asymptotic(pair, cap);
    SuiteReport::new(
        "asymptotic",
        spec.seed,
        Tally::run(&alpha_grid(), check),
        Tally::run(&random, check),
    )
}

// ---- dual-link ----

fn check_dual_link(pair: &(Rational, Rational), cap: u32) -> Outcome {
    let with_beta = |b: Rational| {
        (
            params(pair.0.clone(), b.clone(), int(0)),
            params(pair.1.clone(), b, int(0)),
        )
    };
    for (beta, primal, dual) in [(rat(7, 3), 3, 4), (rat(3, 2), 4, 3)] {
        let (p, q) = with_beta(beta);
        let inputs = || labelled(&[("P", &p), ("P_bar", &q)]);
        let jets = |c: &CubicParams| {
            (
                curve_jet_at_u(c, DEFAULT_TRUNCATION).expect("regular at U"),
                dual_jet_at_omega(c, DEFAULT_TRUNCATION).expect("regular at omega"),
            )
        };
        let ((a1, a2), (b1, b2)) = (jets(&p), jets(&q));
        let order = |x, y| contact_order(x, y, cap).expect("comparable jets");
        let expected = format!(
            "contact {}, dual {}",
            ContactOrder::Exact(primal).capped(cap),
            ContactOrder::Exact(dual).capped(cap)
        );
        let actual = format!("contact {}, dual {}", order(&a1, &b1), order(&a2, &b2));
        expect_eq(inputs, expected, actual)?;
    }
    Ok(())
}

/// Frame-dependent constants of the duals of `β = 7/3` curves, reported
/// for information.
fn dual_frame_info() -> BTreeMap<String, String> {
    let (a1, a2) = (int(1), int(2));
    let p = params(a1.clone(), rat(7, 3), int(0));
    let q = params(a2, rat(7, 3), int(0));
    let mut info = BTreeMap::new();
    match dual_frame(&p, &q) {
        Ok(frame) => {
            let dual = &frame.params[0];
            info.insert("dual frame scales".into(), format_list(&frame.scales));
            info.insert("dual beta".into(), format_rational(dual.beta()));
            info.insert("dual gamma".into(), format_rational(dual.gamma()));
            info.insert(
                "dual alpha ratio".into(),
                format_rational(&(dual.alpha() / &a1)),
            );
        }
        Err(e) => {
            info.insert("dual frame".into(), e.to_string());
        }
    }
    info
}

pub fn dual_link(spec: &SampleSpec, cap: u32) -> SuiteReport {
    let random = distinct_pairs(&mut spec.sampler(), spec.count);
    let check = |pair: &(Rational, Rational)| check_dual_link(pair, cap);
    let mut report = SuiteReport::new(
        "dual-link",
        spec.seed,
        Tally::run(&alpha_grid(), check),
        Tally::run(&random, check),
    );
    report.info = dual_frame_info();
    report
}

// ---- identify ----

#[derive(Clone, Debug)]
pub enum IdentifyCase {
    RoundTrip { p: CubicParams, us: Vec<Rational> },
    TooFew { p: CubicParams },
    Parabola { q: ParabolaParams },
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InsufficientData(_) => "insufficient-data",
        Error::NotInFamily(_) => "not-in-family",
        Error::InconsistentInput { .. } => "inconsistent-input",
        _ => "other error",
    }
}

fn check_identify(case: &IdentifyCase) -> Outcome {
    let points = |p: &CubicParams, us: &[Rational]| -> Vec<HPoint> {
        us.iter()
            .map(|u| curve_point(p, &Param::Finite(u.clone())))
            .collect()
    };
    let outcome = |r: cayley_core::Result<CubicParams>| match r {
        Ok(p) => p.to_string(),
        Err(e) => error_kind(&e).to_string(),
    };
    match case {
        IdentifyCase::RoundTrip { p, us } => expect_eq(
            || vec![("P", p.to_string()), ("u", format_list(us))],
            p.to_string(),
            outcome(identify_params(&points(p, us))),
        ),
        IdentifyCase::TooFew { p } => expect_eq(
            || vec![("P", p.to_string()), ("u", "0,1".into())],
            "insufficient-data".to_string(),
            outcome(identify_params(&points(p, &[int(0), int(1)]))),
        ),
        IdentifyCase::Parabola { q } => {
            let pts: Vec<HPoint> = (0..4)
                .map(|u| parabola_point(q, &Param::Finite(int(u))))
                .collect();
            expect_eq(
                || vec![("parabola", format_list(&[q.alpha.clone(), q.gamma.clone()]))],
                "not-in-family".to_string(),
                outcome(identify_params(&pts)),
            )
        }
    }
}

pub fn identify(spec: &SampleSpec) -> SuiteReport {
    let example = params(int(-5), rat(7, 3), rat(1, 2));
    let grid = vec![
        IdentifyCase::RoundTrip {
            p: example.clone(),
            us: [0, 1, -1, 2].map(int).to_vec(),
        },
        IdentifyCase::TooFew { p: example },
        IdentifyCase::Parabola {
            q: ParabolaParams::new(int(1), int(0)),
        },
        IdentifyCase::Parabola {
            q: ParabolaParams::new(rat(-2, 3), int(4)),
        },
    ];
    let mut sampler = spec.sampler();
    let random: Vec<IdentifyCase> = (0..spec.count)
        .map(|_| IdentifyCase::RoundTrip {
            p: sampler.params(),
            us: sampler.distinct(4),
        })
        .collect();
    SuiteReport::new(
        "identify",
        spec.seed,
        Tally::run(&grid, check_identify),
        Tally::run(&random, check_identify),
    )
}

// ---- group-laws ----

#[derive(Clone, Debug)]
pub struct GroupCase {
    pub g: [GroupElem; 3],
    pub p: CubicParams,
    /// An affine point of the surface and an arbitrary point.
    pub points: [HPoint; 2],
}

fn surface_point(x1: Rational, x2: Rational) -> HPoint {
    let x3 = &x1 * &x2 - &x1 * &x1 * &x1 / int(3);
    HPoint::new([int(1), x1, x2, x3]).expect("x0 = 1")
}

fn check_group(case: &GroupCase) -> Outcome {
    let [a, b, c] = &case.g;
    let inputs = || {
        labelled(&[
            ("g1", a),
            ("g2", b),
            ("g3", c),
            ("P", &case.p),
            ("x", &case.points[0]),
            ("y", &case.points[1]),
        ])
    };
    let id = GroupElem::identity();
    expect_eq(inputs, a.compose(b).compose(c), a.compose(&b.compose(c)))?;
    expect_eq(inputs, a.clone(), id.compose(a))?;
    expect_eq(inputs, a.clone(), a.compose(&id))?;
    expect_eq(inputs, id.clone(), a.compose(&a.inverse()))?;
    expect_eq(inputs, id.clone(), a.inverse().compose(a))?;
    let read_back = GroupElem::from_matrix(&a.matrix()).map(|g| g.to_string());
    expect_eq(
        inputs,
        a.to_string(),
        read_back.unwrap_or_else(|| "not a group matrix".into()),
    )?;

    let m = a.matrix();
    let [x, y] = &case.points;
    ensure(
        on_surface(&m.apply_point(x)),
        "surface point mapped into the surface",
        inputs,
    )?;
    expect_eq(inputs, on_surface(y), on_surface(&m.apply_point(y)))?;
    expect_eq(inputs, u_point(), m.apply_point(&u_point()))?;
    expect_eq(inputs, omega(), m.apply_plane(&omega()))?;
    for t in [
        HPoint::from_ints([0, 0, 1, 0]).unwrap(),
        HPoint::from_ints([0, 0, 1, 1]).unwrap(),
    ] {
        let image = m.apply_point(&t);
        ensure(
            image.coords()[0].is_zero() && image.coords()[1].is_zero(),
            "t mapped into t",
            inputs,
        )?;
    }

    let lhs = a.compose(b).act_on_params(&case.p);
    let rhs = a.act_on_params(&b.act_on_params(&case.p));
    expect_eq(inputs, lhs.clone(), rhs)?;
    expect_eq(inputs, case.p.clone(), id.act_on_params(&case.p))?;
    expect_eq(
        inputs,
        format_rational(case.p.beta()),
        format_rational(lhs.beta()),
    )
}

pub fn group_laws(spec: &SampleSpec) -> SuiteReport {
    let e = |a, b, c| GroupElem::new(int(a), int(b), int(c)).unwrap();
    let grid = vec![
        GroupCase {
            g: [
                GroupElem::identity(),
                GroupElem::identity(),
                GroupElem::identity(),
            ],
            p: params(int(0), int(1), int(0)),
            points: [
                surface_point(int(0), int(0)),
                HPoint::from_ints([1, 1, 1, 0]).unwrap(),
            ],
        },
        GroupCase {
            g: [e(1, 0, 1), e(0, 1, 1), e(0, 0, -1)],
            p: params(int(0), rat(3, 2), int(1)),
            points: [
                surface_point(int(2), rat(-1, 3)),
                HPoint::from_ints([0, 0, 1, 7]).unwrap(),
            ],
        },
    ];
    let mut s = spec.sampler();
    let random: Vec<GroupCase> = (0..spec.count)
        .map(|_| GroupCase {
            g: [s.group_elem(), s.group_elem(), s.group_elem()],
            p: s.params(),
            points: [
                surface_point(s.rational(), s.rational()),
                HPoint::new([s.rational(), s.rational(), s.rational(), s.nonzero()])
                    .expect("x3 is nonzero"),
            ],
        })
        .collect();
    SuiteReport::new(
        "group-laws",
        spec.seed,
        Tally::run(&grid, check_group),
        Tally::run(&random, check_group),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(count: usize) -> SampleSpec {
        SampleSpec::new(1, count, 6).unwrap()
    }

    #[test]
    fn grid_covers_reflections() {
        let betas = theorem1_betas();
        assert_eq!(betas.len(), 9);
        for b in [rat(2, 3), rat(1, 2), int(-1)] {
            assert!(betas.contains(&b));
        }
        assert_eq!(theorem1_grid().len(), 9 * 9 * 16);
    }

    #[test]
    fn each_named_suite_passes_on_a_small_sample() {
        for suite in Suite::NAMED {
            if suite == Suite::Theorem1 {
                continue;
            }
            let r = run_suite(suite, &spec(5), MAX_ORDER);
            assert!(r.all_passed(), "{}", r.render());
            assert_eq!(r.random_cases, 5);
        }
    }

    #[test]
    fn lower_cap_still_agrees() {
        let random = theorem1_random(&mut spec(40).sampler(), 40);
        let cache = JetCache::build(&random);
        for cap in 0..=MAX_ORDER {
            for case in &random {
                assert_eq!(check_pair(&cache, case, cap), Ok(()));
            }
        }
    }

    #[test]
    fn wrong_prediction_yields_counterexample() {
        let p = params(int(0), int(2), int(0));
        let case = PairCase {
            p: p.clone(),
            q: params(int(1), int(2), int(0)),
        };
        let cache = JetCache::build(std::slice::from_ref(&case));
        let (primal, _) = cache.orders(&case, MAX_ORDER);
        assert_eq!(primal, ContactOrder::Exact(3));
        let tally = Tally::run(&[case], |c| {
            let (primal, _) = cache.orders(c, MAX_ORDER);
            expect_eq(
                || vec![("P", c.p.to_string())],
                ContactOrder::Exact(2),
                primal,
            )
        });
        let c = tally.counterexample.unwrap();
        assert_eq!((c.expected.as_str(), c.actual.as_str()), ("2", "3"));
    }

    #[test]
    fn curvature_info_reports_the_maximizer() {
        let r = curvature(&spec(3));
        assert_eq!(r.info["grid maximum"], "9/8");
        assert_eq!(r.info["grid argmax"], "3/2");
    }

    #[test]
    fn dual_link_reports_frame_constants() {
        let info = dual_frame_info();
        assert_eq!(info["dual beta"], "3/2");
        assert_eq!(info["dual alpha ratio"], "-2/3");
        assert_eq!(info["dual frame scales"], "1,1,28/27,28/27");
    }
}
