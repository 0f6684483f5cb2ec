use std::fmt::Write as _;
use std::path::Path;

use cayley_core::contact::{
    curve_jet_at_u, dual_jet_at_omega, match_jets, osculating_plane, predicted_contact,
    predicted_dual_contact, theorem::clause, JetDump, MatchTrace, DEFAULT_TRUNCATION,
};
use cayley_core::family::{curve_point, cylinder_eval, identify_params};
use cayley_core::rational::{format_rational, parse_rational};
use cayley_core::surface::{cayley_eval, orbit_of};
use cayley_core::{CubicParams, GroupElem, HPoint, Param};
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;

/// What a command prints, in both renderings, and whether its mathematical
/// checks held.
#[derive(Clone, Debug)]
pub struct Output {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            ok: true,
        }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(&self.json).expect("values serialize") + "\n"
        } else {
            self.text.clone()
        }
    }
}

pub fn eval(point: &HPoint) -> Output {
    let value = format_rational(&cayley_eval(point));
    let orbit = orbit_of(point);
    Output::new(
        format!("value {value}\norbit {orbit}\n"),
        json!({ "point": point.to_string(), "value": value, "orbit": orbit }),
    )
}

/// Points of `c_{α,β,γ}` at the given parameters, with their osculating
/// planes and a membership check on the surface and the cylinder.
pub fn curve(p: &CubicParams, us: &[Param]) -> Output {
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for u in us {
        let x = curve_point(p, u);
        let on = cayley_eval(&x).is_zero() && cylinder_eval(p, &x).is_zero();
        ok &= on;
        let plane = osculating_plane(p, u);
        let _ = writeln!(
            text,
            "u={u} point ({x}) osculating plane ({plane}) on surface and cylinder: {on}"
        );
        rows.push(json!({
            "u": u.to_string(),
            "point": x.to_string(),
            "osculating_plane": plane.to_string(),
            "on_surface_and_cylinder": on,
        }));
    }
    Output {
        text,
        json: json!({ "params": p.to_string(), "points": rows }),
        ok,
    }
}

pub fn act(g: &GroupElem, p: &CubicParams) -> Output {
    let moved = g.act_on_params(p);
    Output::new(
        format!("{moved}\n"),
        json!({ "g": g.to_string(), "params": p.to_string(), "image": moved.to_string() }),
    )
}

#[derive(Serialize)]
struct Explanation {
    jets: [JetDump; 2],
    trace: MatchTrace,
}

pub fn contact(
    p: &CubicParams,
    q: &CubicParams,
    dual: bool,
    max_order: u32,
    explain: bool,
) -> Result<Output, CliError> {
    let truncation = DEFAULT_TRUNCATION.max(max_order as usize + 1);
    let jet = |c| {
        if dual {
            dual_jet_at_omega(c, truncation)
        } else {
            curve_jet_at_u(c, truncation)
        }
    };
    let (j1, j2) = (jet(p)?, jet(q)?);
    let trace = match_jets(&j1, &j2, max_order)?;
    let computed = trace.order;
    let full = if dual {
        predicted_dual_contact(p, q)
    } else {
        predicted_contact(p, q)
    };
    let predicted = full.capped(max_order);
    let agree = computed == predicted;
    let clause = clause(full, dual);
    let kind = if dual { "dual contact" } else { "contact" };

    let mut text = format!(
        "{kind} order {computed}\npredicted {predicted} ({clause})\n{}\n",
        if agree { "agree" } else { "DISAGREE" }
    );
    let mut json = json!({
        "P": p.to_string(),
        "P_bar": q.to_string(),
        "dual": dual,
        "max_order": max_order,
        "order": computed,
        "predicted": predicted,
        "clause": clause,
        "agree": agree,
    });
    if explain {
        let first = match &trace.first_failure {
            Some((n, residual)) => {
                format!("first failing order {n}, residual {}", residual.join(","))
            }
            None => format!("no failure through order {max_order}"),
        };
        let _ = writeln!(
            text,
            "reparametrization {}",
            trace.reparametrization.join(",")
        );
        let _ = writeln!(text, "{first}");
        for (name, j) in [("P", &j1), ("P_bar", &j2)] {
            let dump = serde_json::to_string(&j.dump()).expect("jets serialize");
            let _ = writeln!(text, "jet {name} {dump}");
        }
        json["explain"] = serde_json::to_value(Explanation {
            jets: [j1.dump(), j2.dump()],
            trace,
        })
        .expect("jets serialize");
    }
    Ok(Output {
        text,
        json,
        ok: agree,
    })
}

/// Reads a point list: a JSON array of 4-arrays of rational strings.
pub fn read_points(path: &Path) -> Result<Vec<HPoint>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let rows: Vec<[String; 4]> = serde_json::from_str(&text)?;
    rows.iter()
        .map(|row| {
            let coords = [&row[0], &row[1], &row[2], &row[3]].map(|s| parse_rational(s));
            let [a, b, c, d] = coords;
            Ok(HPoint::new([a?, b?, c?, d?])?)
        })
        .collect()
}

pub fn identify(path: &Path) -> Result<Output, CliError> {
    let points = read_points(path)?;
    let p = identify_params(&points)?;
    Ok(Output::new(
        format!("{}\n", p.to_string().replace(',', ", ")),
        json!({ "params": p, "points": points.len() }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use cayley_core::rational::{int, rat};

    fn params(s: &str) -> CubicParams {
        s.parse().unwrap()
    }

    #[test]
    fn eval_examples() {
        let out = eval(&"0,0,0,1".parse().unwrap());
        assert_eq!(out.text, "value 0\norbit UPoint\n");
        let out = eval(&"1,1,1,0".parse().unwrap());
        assert_eq!(out.json["value"], "2");
        assert_eq!(out.json["orbit"], "NotOnSurface");
        assert_eq!(eval(&"0,0,1,7".parse().unwrap()).json["orbit"], "TMinusU");
    }

    #[test]
    fn contact_examples() {
        let out = contact(&params("0,3/2,0"), &params("1,3/2,0"), false, 5, false).unwrap();
        assert!(out.ok);
        assert_eq!(out.json["order"], "4");
        let out = contact(&params("0,7/3,0"), &params("1,7/3,0"), true, 5, false).unwrap();
        assert_eq!((out.json["order"].as_str(), out.ok), (Some("4"), true));
        let out = contact(&params("0,1,0"), &params("0,1,0"), false, 5, false).unwrap();
        assert_eq!(out.json["order"], "AtLeast(5)");
        assert_eq!(out.json["clause"], "identical curves");
    }

    #[test]
    fn explain_reports_first_failure() {
        let out = contact(&params("0,2,0"), &params("1,2,0"), false, 5, true).unwrap();
        assert_eq!(out.json["explain"]["trace"]["first_failure"][0], 4);
        assert_eq!(out.json["explain"]["jets"][0]["chart"], 3);
        assert!(out.text.contains("first failing order 4"));
    }

    #[test]
    fn lower_cap_is_reported_as_a_bound() {
        let out = contact(&params("0,3/2,0"), &params("1,3/2,0"), false, 2, false).unwrap();
        assert_eq!(out.json["order"], "AtLeast(2)");
        assert!(out.ok);
    }

    #[test]
    fn curve_points_and_action() {
        let p = CubicParams::new(int(-5), rat(7, 3), rat(1, 2)).unwrap();
        let out = curve(&p, &[Param::Finite(int(1)), Param::Infinity]);
        assert!(out.ok);
        assert!(out.text.contains("u=inf point (0,0,0,1)"));
        let g: GroupElem = "1,0,1".parse().unwrap();
        let out = act(&g, &params("0,1,0"));
        assert_eq!(out.text, "-1/4,1,-1/2\n");
    }
}
