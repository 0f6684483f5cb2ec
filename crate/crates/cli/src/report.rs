use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::time::Duration;

use rayon::prelude::*;
use serde::Serialize;

/// A failed check: what went in, what was expected and what came out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub index: usize,
    pub inputs: BTreeMap<String, String>,
    pub expected: String,
    pub actual: String,
}

/// Result of checking one case.
pub type Outcome = Result<(), Mismatch>;

/// The part of a counterexample a check itself produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub inputs: Vec<(&'static str, String)>,
    pub expected: String,
    pub actual: String,
}

impl Mismatch {
    pub fn new(
        inputs: Vec<(&'static str, String)>,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        Mismatch {
            inputs,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

/// Fails with a mismatch unless `expected == actual`.
pub fn expect_eq<T: PartialEq + fmt::Display>(
    inputs: impl FnOnce() -> Vec<(&'static str, String)>,
    expected: T,
    actual: T,
) -> Outcome {
    if expected == actual {
        Ok(())
    } else {
        Err(Mismatch::new(inputs(), expected, actual))
    }
}

/// Tally of a batch of cases.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub samples: usize,
    pub passed: usize,
    pub counterexample: Option<Counterexample>,
}

impl Tally {
    /// Runs `check` over `cases` in parallel. The counterexample is the
    /// failure with the smallest index, so the result does not depend on
    /// scheduling.
    pub fn run<T: Sync>(cases: &[T], check: impl Fn(&T) -> Outcome + Sync) -> Self {
        let failures: Vec<(usize, Mismatch)> = cases
            .par_iter()
            .enumerate()
            .filter_map(|(i, case)| check(case).err().map(|m| (i, m)))
            .collect();
        let counterexample = failures
            .iter()
            .min_by_key(|(i, _)| *i)
            .map(|(i, m)| Counterexample {
                index: *i,
                inputs: m
                    .inputs
                    .iter()
                    .map(|(k, v)| (k.to_string(), v.clone()))
                    .collect(),
                expected: m.expected.clone(),
                actual: m.actual.clone(),
            });
        Tally {
            samples: cases.len(),
            passed: cases.len() - failures.len(),
            counterexample,
        }
    }

    /// Concatenates two tallies; indices of `next` continue after `self`.
    pub fn then(mut self, next: Tally) -> Self {
        if self.counterexample.is_none() {
            self.counterexample = next.counterexample.map(|mut c| {
                c.index += self.samples;
                c
            });
        }
        self.samples += next.samples;
        self.passed += next.passed;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    /// Deterministic grid cases followed by random ones.
    pub samples: usize,
    pub grid_cases: usize,
    pub random_cases: usize,
    pub passed: usize,
    pub counterexample: Option<Counterexample>,
    /// Values reported for information only; they never affect the verdict.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub info: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<SuiteReport>,
    /// Wall-clock time, left out of JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: u64, grid: Tally, random: Tally) -> Self {
        let (grid_cases, random_cases) = (grid.samples, random.samples);
        let total = grid.then(random);
        SuiteReport {
            suite: suite.to_string(),
            seed,
            samples: total.samples,
            grid_cases,
            random_cases,
            passed: total.passed,
            counterexample: total.counterexample,
            info: BTreeMap::new(),
            parts: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    /// Union of several reports. The first failing part supplies the
    /// counterexample, tagged with the part name.
    pub fn combine(suite: &str, seed: u64, parts: Vec<SuiteReport>) -> Self {
        let mut counterexample = None;
        let mut offset = 0;
        for part in &parts {
            if let (None, Some(c)) = (&counterexample, &part.counterexample) {
                let mut c: Counterexample = c.clone();
                c.index += offset;
                c.inputs.insert("suite".into(), part.suite.clone());
                counterexample = Some(c);
            }
            offset += part.samples;
        }
        SuiteReport {
            suite: suite.to_string(),
            seed,
            samples: parts.iter().map(|p| p.samples).sum(),
            grid_cases: parts.iter().map(|p| p.grid_cases).sum(),
            random_cases: parts.iter().map(|p| p.random_cases).sum(),
            passed: parts.iter().map(|p| p.passed).sum(),
            counterexample,
            info: BTreeMap::new(),
            elapsed: parts.iter().map(|p| p.elapsed).sum(),
            parts,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.samples
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        let verdict = if self.all_passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{pad}{verdict} {}: {}/{} passed (grid {}, random {}, seed {}) in {:.2?}",
            self.suite,
            self.passed,
            self.samples,
            self.grid_cases,
            self.random_cases,
            self.seed,
            self.elapsed
        );
        for (k, v) in &self.info {
            let _ = writeln!(out, "{pad}  info {k}: {v}");
        }
        if let Some(c) = &self.counterexample {
            let inputs: Vec<String> = c.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(
                out,
                "{pad}  counterexample #{}: {}",
                c.index,
                inputs.join(" ")
            );
            let _ = writeln!(out, "{pad}    expected {}", c.expected);
            let _ = writeln!(out, "{pad}    actual   {}", c.actual);
        }
        for part in &self.parts {
            part.render_into(out, depth + 1);
        }
    }
}
