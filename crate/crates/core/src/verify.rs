//! Cross-checks of the integer recurrence against independent computations.
//!
//! Each check returns the first counterexample it finds, so a broken engine
//! is reported with a concrete word.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::backend::IntegerBackend;
use crate::bchcore::{bch_coefficient_with, EvalOptions};
use crate::denominators::common_denominator;
use crate::error::BchError;
use crate::lietools::{dynkin_representation_with, expand_terms};
use crate::oracle::{oracle_log_series, FreeSeries, ORACLE_CAP};
use crate::rational::ExactRational;
use crate::tabulation::{coefficient_of_word_via_table, coefficient_table_with};
use crate::word::{mask_to_string, BlockWord};

/// Highest degree swept against the oracle word by word.
pub const ORACLE_SWEEP_MAX: u32 = 10;
/// Highest degree of the Dynkin expansion check.
pub const DYNKIN_MAX: u32 = 8;
/// Highest degree of the table symmetry check.
pub const SYMMETRY_MAX: u32 = 8;
/// Highest degree of the denominator lcm check.
pub const DENOMINATOR_MAX: u32 = ORACLE_CAP;

/// A failed comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub word: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "word {}: expected {}, got {}",
            self.word, self.expected, self.actual
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// Number of comparisons made (up to the first failure).
    pub cases: usize,
    pub failure: Option<Mismatch>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS  {} ({} cases)", self.name, self.cases),
            Some(m) => write!(f, "FAIL  {}: {}", self.name, m),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<(&'static str, &Mismatch)> {
        self.outcomes
            .iter()
            .find_map(|o| o.failure.as_ref().map(|m| (o.name, m)))
    }
}

fn show(result: &Result<ExactRational, BchError>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => format!("error ({e})"),
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self { name, cases: 0 }
    }

    fn compare(
        &mut self,
        word: impl FnOnce() -> String,
        expected: &ExactRational,
        actual: &Result<ExactRational, BchError>,
    ) -> Option<CheckOutcome> {
        self.cases += 1;
        match actual {
            Ok(v) if v == expected => None,
            _ => Some(CheckOutcome {
                name: self.name,
                cases: self.cases,
                failure: Some(Mismatch {
                    word: word(),
                    expected: expected.to_string(),
                    actual: show(actual),
                }),
            }),
        }
    }

    fn done(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name,
            cases: self.cases,
            failure: None,
        }
    }
}

fn oracle_failure(name: &'static str, err: BchError) -> CheckOutcome {
    CheckOutcome {
        name,
        cases: 0,
        failure: Some(Mismatch {
            word: "-".into(),
            expected: "oracle series".into(),
            actual: format!("error ({err})"),
        }),
    }
}

/// Compares every word of degree `1..=max_n` with the oracle series, which
/// must be truncated at `max_n` or higher.
pub fn check_oracle_equivalence(
    oracle: &FreeSeries,
    max_n: u32,
    backend: IntegerBackend,
    opts: &EvalOptions,
) -> CheckOutcome {
    let mut tally = Tally::new("oracle equivalence");
    for n in 1..=max_n {
        for mask in 0..(1u64 << n) {
            let word = BlockWord::from_mask(mask, n).expect("valid length");
            let actual = bch_coefficient_with(&word, backend, opts);
            if let Some(fail) = tally.compare(|| word.render(), oracle.get(n, mask), &actual) {
                return fail;
            }
        }
    }
    tally.done()
}

/// Expands the Dynkin form of `H_n` and compares it with the oracle, for
/// `n` in `1..=max_n`.
pub fn check_dynkin(oracle: &FreeSeries, max_n: u32, opts: &EvalOptions) -> CheckOutcome {
    let mut tally = Tally::new("dynkin identity");
    for n in 1..=max_n {
        let expanded = dynkin_representation_with(n, IntegerBackend::Auto, opts)
            .and_then(|terms| expand_terms(&terms, n));
        let expanded = match expanded {
            Ok(v) => v,
            Err(e) => {
                tally.cases += 1;
                return CheckOutcome {
                    name: tally.name,
                    cases: tally.cases,
                    failure: Some(Mismatch {
                        word: format!("degree {n}"),
                        expected: "expansion".into(),
                        actual: format!("error ({e})"),
                    }),
                };
            }
        };
        for (mask, value) in expanded.into_iter().enumerate() {
            let mask = mask as u64;
            if let Some(fail) =
                tally.compare(|| mask_to_string(mask, n), oracle.get(n, mask), &Ok(value))
            {
                return fail;
            }
        }
    }
    tally.done()
}

/// Builds the partition table and compares the symmetry lookup against the
/// direct computation for every word of degree `1..=max_n`.
pub fn check_symmetry(max_n: u32, opts: &EvalOptions) -> CheckOutcome {
    let mut tally = Tally::new("table symmetry");
    let table = match coefficient_table_with(max_n, IntegerBackend::Auto, opts, 1) {
        Ok(t) => t,
        Err(e) => return oracle_failure(tally.name, e),
    };
    for n in 1..=max_n {
        for mask in 0..(1u64 << n) {
            let word = BlockWord::from_mask(mask, n).expect("valid length");
            let direct = match bch_coefficient_with(&word, IntegerBackend::Auto, opts) {
                Ok(v) => v,
                Err(e) => return oracle_failure(tally.name, e),
            };
            let via_table = coefficient_of_word_via_table(&word.render(), &table);
            if let Some(fail) = tally.compare(|| word.render(), &direct, &via_table) {
                return fail;
            }
        }
    }
    tally.done()
}

/// The lcm of the reduced denominators of all oracle coefficients of degree `n`.
pub fn oracle_denominator_lcm(oracle: &FreeSeries, n: u32) -> BigUint {
    oracle
        .degree_slice(n)
        .iter()
        .fold(BigUint::one(), |acc, c| acc.lcm(&c.denom_unsigned()))
}

/// Checks that the lcm of the degree-`n` denominators is exactly `n! d_n`.
pub fn check_denominators(oracle: &FreeSeries, max_n: u32) -> CheckOutcome {
    let mut tally = Tally::new("smallest common denominator");
    for n in 1..=max_n {
        tally.cases += 1;
        let lcm = oracle_denominator_lcm(oracle, n);
        let expected = common_denominator(n);
        if lcm != expected {
            return CheckOutcome {
                name: tally.name,
                cases: tally.cases,
                failure: Some(Mismatch {
                    word: format!("degree {n}"),
                    expected: expected.to_string(),
                    actual: lcm.to_string(),
                }),
            };
        }
    }
    tally.done()
}

/// Runs every check at the largest degree allowed by `max_n` and each check's cap.
pub fn run_verification(max_n: u32, opts: &EvalOptions) -> VerifyReport {
    let oracle_n = max_n.clamp(1, ORACLE_CAP);
    let oracle = match oracle_log_series(oracle_n) {
        Ok(s) => s,
        Err(e) => {
            return VerifyReport {
                outcomes: vec![oracle_failure("oracle series", e)],
            }
        }
    };
    let outcomes = vec![
        check_oracle_equivalence(
            &oracle,
            max_n.min(ORACLE_SWEEP_MAX),
            IntegerBackend::Auto,
            opts,
        ),
        check_dynkin(&oracle, max_n.min(DYNKIN_MAX), opts),
        check_symmetry(max_n.min(SYMMETRY_MAX), opts),
        check_denominators(&oracle, max_n.min(DENOMINATOR_MAX)),
    ];
    VerifyReport { outcomes }
}
