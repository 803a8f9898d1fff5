//! Right-nested commutators and the Dynkin form
//! `H_n = (1/n) sum_w h_w [w]` of the homogeneous BCH components.

use std::collections::BTreeMap;

use crate::backend::IntegerBackend;
use crate::bchcore::{bch_coefficient_with, EvalOptions};
use crate::error::{BchError, Result};
use crate::oracle::{oracle_log_series, ORACLE_CAP};
use crate::rational::ExactRational;
use crate::word::{mask_to_string, BlockWord};

/// Homogeneous integer combination of words of one degree, keyed by bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordCombination {
    degree: u32,
    terms: BTreeMap<u64, i64>,
}

impl WordCombination {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_of_mask(&self, mask: u64) -> i64 {
        self.terms.get(&mask).copied().unwrap_or(0)
    }

    /// Coefficient of a letter string; words of another length give 0.
    pub fn coefficient(&self, letters: &str) -> Result<i64> {
        let w = BlockWord::parse(letters)?;
        if w.degree() != self.degree {
            return Ok(0);
        }
        Ok(w.to_mask().map_or(0, |m| self.coefficient_of_mask(m)))
    }

    /// Nonzero terms in ascending bitmask order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    /// Terms as `(letters, coefficient)`.
    pub fn named_terms(&self) -> Vec<(String, i64)> {
        self.terms()
            .map(|(m, c)| (mask_to_string(m, self.degree), c))
            .collect()
    }
}

/// Expands `[w_1, [w_2, [..., [w_{n-1}, w_n]...]]]` with `[u, v] = uv - vu`,
/// innermost bracket first.
pub fn expand_iterated_commutator(letters: &str) -> Result<WordCombination> {
    let word = BlockWord::parse(letters)?;
    let n = word.degree();
    if n > 63 {
        return Err(BchError::InvalidWord(letters.to_owned()));
    }
    let bits: Vec<u64> = word.letters().map(|l| l.bit()).collect();

    let mut terms = BTreeMap::from([(bits[n as usize - 1], 1i64)]);
    for (degree, &x) in (1u32..).zip(bits[..n as usize - 1].iter().rev()) {
        let mut next: BTreeMap<u64, i64> = BTreeMap::new();
        for (&u, &c) in &terms {
            *next.entry((x << degree) | u).or_default() += c;
            *next.entry((u << 1) | x).or_default() -= c;
        }
        next.retain(|_, c| *c != 0);
        terms = next;
    }
    Ok(WordCombination { degree: n, terms })
}

/// One term `coefficient * [word]` of the Dynkin form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorTerm {
    pub word: String,
    /// `h_w / n`.
    pub coefficient: ExactRational,
}

/// The nonzero terms `(h_w / n) [w]` of `H_n`, in ascending bitmask order.
pub fn dynkin_representation(n: u32, backend: IntegerBackend) -> Result<Vec<CommutatorTerm>> {
    dynkin_representation_with(n, backend, &EvalOptions::default())
}

pub fn dynkin_representation_with(
    n: u32,
    backend: IntegerBackend,
    opts: &EvalOptions,
) -> Result<Vec<CommutatorTerm>> {
    if n == 0 || n > 63 {
        return Err(BchError::InvalidBlocks(format!("degree {n} not in 1..=63")));
    }
    let scale = ExactRational::new(1, i64::from(n));
    let mut terms = Vec::new();
    for mask in 0..(1u64 << n) {
        let word = BlockWord::from_mask(mask, n)?;
        let h = bch_coefficient_with(&word, backend, opts)?;
        if !h.is_zero() {
            terms.push(CommutatorTerm {
                word: word.render(),
                coefficient: &h * &scale,
            });
        }
    }
    Ok(terms)
}

/// Expands a Dynkin-form sum into dense word coefficients of degree `n`.
pub fn expand_terms(terms: &[CommutatorTerm], n: u32) -> Result<Vec<ExactRational>> {
    let mut out = vec![ExactRational::zero(); 1usize << n];
    for term in terms {
        let expansion = expand_iterated_commutator(&term.word)?;
        for (mask, c) in expansion.terms() {
            out[mask as usize] += &(&term.coefficient * &ExactRational::from(c));
        }
    }
    Ok(out)
}

/// Checks that `(1/n) sum_w h_w [w]` expands back to the word coefficients
/// `h_w` of the oracle's `H_n`.
pub fn verify_dynkin(n: u32) -> Result<bool> {
    if n > ORACLE_CAP {
        return Err(BchError::OracleRangeExceeded {
            degree: n,
            cap: ORACLE_CAP,
        });
    }
    let terms = dynkin_representation(n, IntegerBackend::Auto)?;
    let expanded = expand_terms(&terms, n)?;
    let h = oracle_log_series(n)?;
    Ok(expanded.as_slice() == h.degree_slice(n))
}
