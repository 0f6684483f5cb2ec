use cayley_core::rational::{int, rat};
use cayley_core::{CubicParams, GroupElem, Rational};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CliError;

/// Seed and size of a random sample stream. Identical specs give identical
/// streams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SampleSpec {
    pub seed: u64,
    pub count: usize,
    /// Height bound: rationals are `n/d` with `|n| ≤ bound`, `1 ≤ d ≤ bound`.
    pub bound: u32,
}

impl SampleSpec {
    pub fn new(seed: u64, count: usize, bound: u32) -> Result<Self, CliError> {
        if count == 0 {
            return Err(CliError::Usage("sample count must be positive".into()));
        }
        if bound == 0 {
            return Err(CliError::Usage("height bound must be positive".into()));
        }
        Ok(SampleSpec { seed, count, bound })
    }

    /// The same spec with another count, for suites with a fixed sample size.
    pub fn with_count(self, count: usize) -> Self {
        SampleSpec { count, ..self }
    }

    pub fn sampler(&self) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(self.seed),
            bound: i64::from(self.bound),
        }
    }
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec {
            seed: 1,
            count: 100,
            bound: 6,
        }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    pub fn rational(&mut self) -> Rational {
        let n = self.rng.random_range(-self.bound..=self.bound);
        let d = self.rng.random_range(1..=self.bound);
        rat(n, d)
    }

    pub fn nonzero(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// An admissible `β`, i.e. one different from 0 and 3.
    pub fn beta(&mut self) -> Rational {
        loop {
            let b = self.rational();
            if !b.is_zero() && b != int(3) {
                return b;
            }
        }
    }

    pub fn params(&mut self) -> CubicParams {
        let beta = self.beta();
        self.params_with_beta(beta)
    }

    pub fn params_with_beta(&mut self, beta: Rational) -> CubicParams {
        let alpha = self.rational();
        let gamma = self.rational();
        CubicParams::new(alpha, beta, gamma).expect("beta is admissible")
    }

    pub fn group_elem(&mut self) -> GroupElem {
        let (a, b, c) = (self.rational(), self.rational(), self.nonzero());
        GroupElem::new(a, b, c).expect("c is nonzero")
    }

    /// `k` pairwise distinct rationals.
    pub fn distinct(&mut self, k: usize) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::with_capacity(k);
        let mut spread = 0;
        while out.len() < k {
            // small bounds cannot always supply k values; widen by integers
            let r = self.rational() + int(spread);
            if !out.contains(&r) {
                out.push(r);
            } else {
                spread += 1;
            }
        }
        out
    }

    pub fn chance(&mut self, numerator: u32, denominator: u32) -> bool {
        self.rng.random_range(0..denominator) < numerator
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.rng.random_range(0..items.len())]
    }
}
