//! Coefficients of `log(e^A e^B)` in pure integer arithmetic.
//!
//! For a word `w = w_1 ... w_n` with common denominator `d = n! * d_n`, the
//! workspace entry `C[k, l]` holds `d * coeff(v_l, Y^k)` where
//! `Y = e^A e^B - 1` and `v_l` is the suffix of `w` of length `l`. Suffixes
//! are processed by growing length, walking the blocks of `w` from the last
//! one backwards, and
//!
//! ```text
//! h_w = (1/d) * sum_k (-1)^(k+1) C[k, n] / k.
//! ```
//!
//! A prefix `u` of a suffix has a nonzero coefficient in `Y` only if it is a
//! single run of one letter (`1/j!`) or of the form `A^r B^j` (`1/(r! j!)`),
//! which is why only the current block and the block after it matter.

use num_bigint::BigInt;

use crate::backend::{factorial_table, narrow, BackendInt, IntegerBackend};
use crate::denominators::common_denominator;
use crate::error::{BchError, DivisionSite, Result};
use crate::rational::ExactRational;
use crate::word::BlockWord;

/// Deliberate corruptions of the recurrence, used to check that the
/// verification suite catches a broken engine.
#[doc(hidden)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Writes `2d` instead of `d` on the diagonal.
    DoubledDiagonal,
}

/// Knobs for a single evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalOptions {
    /// Check every division for a zero remainder. On by default in debug builds.
    pub check_divisions: bool,
    /// Use `multiplier * n! * d_n` as the working denominator. Any positive
    /// multiple gives the same coefficient.
    pub denominator_multiplier: u32,
    #[doc(hidden)]
    pub fault: Option<Fault>,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            check_divisions: cfg!(debug_assertions),
            denominator_multiplier: 1,
            fault: None,
        }
    }
}

impl EvalOptions {
    pub fn checked() -> Self {
        Self {
            check_divisions: true,
            ..Self::default()
        }
    }
}

/// Dense `n x n` workspace, stored column by column (one column per suffix
/// length `l`). Indices are 1-based to match `C[k, l]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: BackendInt> CoeffMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![T::zero(); n * n],
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, k: usize, l: usize) -> &T {
        &self.entries[(l - 1) * self.n + (k - 1)]
    }

    #[inline]
    fn set(&mut self, k: usize, l: usize, value: T) {
        self.entries[(l - 1) * self.n + (k - 1)] = value;
    }

    /// Column `l` as a slice of rows `1..=n`.
    pub fn column(&self, l: usize) -> &[T] {
        &self.entries[(l - 1) * self.n..l * self.n]
    }
}

/// Why the recurrence stopped before producing a result.
enum Halt {
    Overflow,
    Inexact { site: DivisionSite, k: usize, l: usize },
}

#[inline]
fn divide<T: BackendInt>(
    value: &T,
    divisor: &T,
    check: bool,
    site: DivisionSite,
    k: usize,
    l: usize,
) -> Result<T, Halt> {
    if check {
        value.exact_quotient(divisor).ok_or(Halt::Inexact { site, k, l })
    } else {
        Ok(value.quotient(divisor))
    }
}

#[inline]
fn accumulate<T: BackendInt>(acc: &mut T, term: &T) -> Result<(), Halt> {
    if acc.add_in_place(term) {
        Ok(())
    } else {
        Err(Halt::Overflow)
    }
}

#[allow(clippy::needless_range_loop)]
fn fill_matrix<T: BackendInt>(
    word: &BlockWord,
    d: &T,
    opts: &EvalOptions,
) -> Result<CoeffMatrix<T>, Halt> {
    let q = word.blocks();
    let m = q.len();
    let n = word.degree() as usize;
    let check = opts.check_divisions;
    let fact = factorial_table::<T>(n as u32).ok_or(Halt::Overflow)?;
    let q_last = q[m - 1] as usize;

    let diagonal = match opts.fault {
        Some(Fault::DoubledDiagonal) => {
            let mut twice = d.clone();
            accumulate(&mut twice, d)?;
            twice
        }
        None => d.clone(),
    };

    let mut c = CoeffMatrix::zeros(n);
    // Blocks are walked from the end, so the letter of the last block follows
    // from the parity of m.
    let mut a_current = word.a_first() ^ m.is_multiple_of(2);
    let mut cross: Vec<T> = Vec::new();
    let mut l = 0usize;

    for i in (1..=m).rev() {
        let q_i = q[i - 1] as usize;
        let q_next = if i < m { q[i] as usize } else { 0 };
        let spans_next = a_current && i < m;

        for r in 1..=q_i {
            l += 1;

            let seed = if i == m {
                divide(d, &fact[l], check, DivisionSite::SeedSingleBlock, 1, l)?
            } else if a_current && i == m - 1 {
                let denom = fact[r].checked_mul(&fact[q_last]).ok_or(Halt::Overflow)?;
                divide(d, &denom, check, DivisionSite::SeedTwoBlocks, 1, l)?
            } else {
                T::zero()
            };
            c.set(1, l, seed);

            if spans_next {
                cross.clear();
                for j in 1..=q_next {
                    cross.push(fact[r].checked_mul(&fact[j]).ok_or(Halt::Overflow)?);
                }
            }

            for k in 2..l {
                let mut h = T::zero();
                for j in 1..=r {
                    if l > j {
                        let prev = c.get(k - 1, l - j);
                        if !prev.is_zero() {
                            let term = divide(
                                prev,
                                &fact[j],
                                check,
                                DivisionSite::RecurrenceSameBlock,
                                k,
                                l,
                            )?;
                            accumulate(&mut h, &term)?;
                        }
                    }
                }
                if spans_next {
                    for j in 1..=q_next {
                        if l > r + j {
                            let prev = c.get(k - 1, l - r - j);
                            if !prev.is_zero() {
                                let term = divide(
                                    prev,
                                    &cross[j - 1],
                                    check,
                                    DivisionSite::RecurrenceCrossBlock,
                                    k,
                                    l,
                                )?;
                                accumulate(&mut h, &term)?;
                            }
                        }
                    }
                }
                c.set(k, l, h);
            }

            c.set(l, l, diagonal.clone());
        }
        a_current = !a_current;
    }
    Ok(c)
}

/// `sum_k (-1)^(k+1) C[k, n] / k`, the numerator of `h_w` over `d`.
fn alternating_sum<T: BackendInt>(c: &CoeffMatrix<T>, check: bool) -> Result<T, Halt> {
    let n = c.degree();
    let mut total = T::zero();
    for k in 1..=n {
        let term = divide(
            c.get(k, n),
            &T::from_u32(k as u32),
            check,
            DivisionSite::FinalSum,
            k,
            n,
        )?;
        let ok = if k % 2 == 1 {
            total.add_in_place(&term)
        } else {
            total.sub_in_place(&term)
        };
        if !ok {
            return Err(Halt::Overflow);
        }
    }
    Ok(total)
}

fn working_denominator<T: BackendInt>(n: u32, opts: &EvalOptions) -> Result<T, Halt> {
    assert!(opts.denominator_multiplier > 0, "denominator multiplier must be positive");
    let d = common_denominator(n) * opts.denominator_multiplier;
    narrow::<T>(&d).ok_or(Halt::Overflow)
}

fn into_error<T: BackendInt>(halt: Halt, degree: u32) -> BchError {
    match halt {
        Halt::Overflow => BchError::BackendOverflow {
            backend: T::BACKEND,
            degree,
            suggested: T::BACKEND.wider().unwrap_or(IntegerBackend::Arbitrary),
        },
        Halt::Inexact { site, k, l } => BchError::InexactDivision {
            site,
            degree,
            k: k as u32,
            l: l as u32,
        },
    }
}

/// Runs the recurrence and returns the filled workspace together with the
/// working denominator `d`.
pub fn coefficient_matrix<T: BackendInt>(
    word: &BlockWord,
    opts: &EvalOptions,
) -> Result<(CoeffMatrix<T>, T)> {
    let n = word.degree();
    let run = || {
        let d = working_denominator::<T>(n, opts)?;
        let c = fill_matrix(word, &d, opts)?;
        Ok((c, d))
    };
    run().map_err(|halt| into_error::<T>(halt, n))
}

/// `h_w` evaluated in the integer type `T`.
pub fn coefficient_in<T: BackendInt>(word: &BlockWord, opts: &EvalOptions) -> Result<ExactRational> {
    let n = word.degree();
    let run = || {
        let d = working_denominator::<T>(n, opts)?;
        let c = fill_matrix(word, &d, opts)?;
        let numer = alternating_sum(&c, opts.check_divisions)?;
        Ok((numer, d))
    };
    let (numer, d): (T, T) = run().map_err(|halt| into_error::<T>(halt, n))?;
    Ok(ExactRational::new(numer.to_bigint(), d.to_bigint()))
}

fn coefficient_on(word: &BlockWord, backend: IntegerBackend, opts: &EvalOptions) -> Result<ExactRational> {
    match backend {
        IntegerBackend::Fixed64 => coefficient_in::<i64>(word, opts),
        IntegerBackend::Fixed128 => coefficient_in::<i128>(word, opts),
        IntegerBackend::Arbitrary => coefficient_in::<BigInt>(word, opts),
        IntegerBackend::Auto => {
            let mut current = IntegerBackend::Auto.resolve(word.degree());
            loop {
                match coefficient_on(word, current, opts) {
                    Err(BchError::BackendOverflow { .. }) if current.wider().is_some() => {
                        current = current.wider().unwrap();
                    }
                    other => return other,
                }
            }
        }
    }
}

/// The coefficient `h_w` of `w` in `log(e^A e^B)`.
///
/// Fixed-width backends report [`BchError::BackendOverflow`] instead of
/// wrapping; `Auto` widens automatically and never overflows.
pub fn bch_coefficient(word: &BlockWord, backend: IntegerBackend) -> Result<ExactRational> {
    coefficient_on(word, backend, &EvalOptions::default())
}

pub fn bch_coefficient_with(
    word: &BlockWord,
    backend: IntegerBackend,
    opts: &EvalOptions,
) -> Result<ExactRational> {
    coefficient_on(word, backend, opts)
}

/// Parses a letter string and returns its coefficient.
pub fn bch_coefficient_any(letters: &str, backend: IntegerBackend) -> Result<ExactRational> {
    bch_coefficient(&BlockWord::parse(letters)?, backend)
}
