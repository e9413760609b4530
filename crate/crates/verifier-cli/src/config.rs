//! Suite configuration: the (p, n, q) grid, resource caps, randomized-case
//! counts and the seed.

use monoid_core::Caps;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputMode {
    Text,
    Json,
}

/// Resource caps and test volumes. Every bound is explicit so that a run
/// either completes within budget or reports "unknown" — never a silent
/// wrong answer. Defaults keep every suite under a minute on commodity
/// hardware.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct CapsConfig {
    /// bound on the absolute value of generator entries in randomized
    /// instances
    pub element_norm: i64,
    /// Hilbert-basis candidate bound (per cone)
    pub hilbert_candidates: u64,
    /// membership search node bound
    pub membership_nodes: u64,
    /// largest Kummer exponent scanned
    pub kummer_exponent: u32,
    /// largest torsion group enumerated element by element
    pub torsion_enumeration: u64,
    /// isomorphism search node bound
    pub iso_nodes: u64,
    /// starting Laurent degree window for the two-chart model
    /// (`None` = twice the thickening order plus two)
    pub degree_window: Option<i64>,
    /// randomized cases per property
    pub random_cases: u32,
    /// treat "unknown" outcomes as fatal (exit code 3)
    pub fail_on_unknown: bool,
    /// include runtimes in the JSON report (off by default so reports are
    /// byte-identical across runs)
    pub timings: bool,
}

impl Default for CapsConfig {
    fn default() -> Self {
        CapsConfig {
            element_norm: 3,
            hilbert_candidates: 200_000,
            membership_nodes: 1_000_000,
            kummer_exponent: 64,
            torsion_enumeration: 65_536,
            iso_nodes: 1_000_000,
            degree_window: None,
            random_cases: 500,
            fail_on_unknown: false,
            timings: false,
        }
    }
}

impl CapsConfig {
    pub fn monoid_caps(&self) -> Caps {
        Caps {
            hilbert_candidates: self.hilbert_candidates,
            membership_nodes: self.membership_nodes,
            kummer_exponent: self.kummer_exponent,
            torsion_enumeration: self.torsion_enumeration,
            iso_nodes: self.iso_nodes,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub primes: Vec<u32>,
    pub max_n: u32,
    pub field_sizes: Vec<u32>,
    pub caps: CapsConfig,
    pub seed: u64,
    pub output: OutputMode,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl Default for SuiteConfig {
    fn default() -> Self {
        // grid: p ∈ {2, 3}, n ≤ 2, q ∈ {p, p²}
        SuiteConfig {
            primes: vec![2, 3],
            max_n: 2,
            field_sizes: vec![2, 3, 4, 9],
            caps: CapsConfig::default(),
            seed: 0,
            output: OutputMode::Text,
        }
    }
}

impl SuiteConfig {
    /// Validate: caps positive, primes prime, every field size a power of
    /// a listed prime.
    pub fn validate(&self) -> Result<(), String> {
        if self.primes.is_empty() {
            return Err("prime set is empty".into());
        }
        for &p in &self.primes {
            if !is_prime(p) {
                return Err(format!("{p} is not prime"));
            }
        }
        if self.field_sizes.is_empty() {
            return Err("field size set is empty".into());
        }
        for &q in &self.field_sizes {
            let ok = self.primes.iter().any(|&p| {
                let mut t = q;
                while t % p == 0 {
                    t /= p;
                }
                t == 1 && q > 1
            });
            if !ok {
                return Err(format!("field size {q} is not a power of a listed prime"));
            }
        }
        let c = &self.caps;
        if c.element_norm <= 0
            || c.hilbert_candidates == 0
            || c.membership_nodes == 0
            || c.kummer_exponent == 0
            || c.torsion_enumeration == 0
            || c.iso_nodes == 0
            || c.random_cases == 0
        {
            return Err("all caps must be positive".into());
        }
        if let Some(w) = c.degree_window {
            if w <= 0 {
                return Err("degree window must be positive".into());
            }
        }
        Ok(())
    }

    /// Field sizes that are powers of this p, sorted.
    pub fn field_sizes_for(&self, p: u32) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .field_sizes
            .iter()
            .copied()
            .filter(|&q| {
                let mut t = q;
                while t % p == 0 {
                    t /= p;
                }
                t == 1
            })
            .collect();
        out.sort_unstable();
        out
    }
}
