//! Brute-force BCH coefficients by truncated multiplication in the free
//! associative algebra `Q<A, B>`.
//!
//! This is deliberately slow and simple: it only exists to cross-check the
//! integer recurrence at small degree.

use crate::error::{BchError, Result};
use crate::rational::ExactRational;
use crate::word::BlockWord;

/// Largest truncation degree the oracle accepts.
pub const ORACLE_CAP: u32 = 12;

/// A power series truncated after degree `max_degree`.
///
/// Degree `l` is stored densely as `2^l` coefficients indexed by the word's
/// bitmask (`A` = 0, `B` = 1, first letter in the most significant bit).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeSeries {
    max_degree: u32,
    coeffs: Vec<Vec<ExactRational>>,
}

fn check_cap(degree: u32) -> Result<()> {
    if degree > ORACLE_CAP {
        Err(BchError::OracleRangeExceeded {
            degree,
            cap: ORACLE_CAP,
        })
    } else {
        Ok(())
    }
}

impl FreeSeries {
    pub fn zero(max_degree: u32) -> Result<Self> {
        check_cap(max_degree)?;
        let coeffs = (0..=max_degree)
            .map(|l| vec![ExactRational::zero(); 1usize << l])
            .collect();
        Ok(Self { max_degree, coeffs })
    }

    /// The unit series `1`.
    pub fn one(max_degree: u32) -> Result<Self> {
        let mut s = Self::zero(max_degree)?;
        s.coeffs[0][0] = ExactRational::one();
        Ok(s)
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn scalar(&self) -> &ExactRational {
        &self.coeffs[0][0]
    }

    /// Coefficients of degree `l`, indexed by bitmask.
    pub fn degree_slice(&self, l: u32) -> &[ExactRational] {
        &self.coeffs[l as usize]
    }

    pub fn get(&self, len: u32, mask: u64) -> &ExactRational {
        &self.coeffs[len as usize][mask as usize]
    }

    pub fn set(&mut self, len: u32, mask: u64, value: ExactRational) {
        self.coeffs[len as usize][mask as usize] = value;
    }

    /// Coefficient of a letter string such as `"ABA"`. The empty string
    /// addresses the scalar term.
    pub fn coefficient(&self, letters: &str) -> Result<ExactRational> {
        if letters.is_empty() {
            return Ok(self.scalar().clone());
        }
        let word = BlockWord::parse(letters)?;
        let len = word.degree();
        if len > self.max_degree {
            return Err(BchError::OracleRangeExceeded {
                degree: len,
                cap: self.max_degree,
            });
        }
        Ok(self.get(len, word.to_mask().expect("length within cap")).clone())
    }

    /// Word coefficients of degree `l` that are nonzero, as `(mask, value)`.
    pub fn nonzero_terms(&self, l: u32) -> impl Iterator<Item = (u64, &ExactRational)> {
        self.coeffs[l as usize]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mask, c)| (mask as u64, c))
    }

    pub fn scaled(&self, factor: &ExactRational) -> Self {
        Self {
            max_degree: self.max_degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|level| level.iter().map(|c| c * factor).collect())
                .collect(),
        }
    }

    pub fn add_assign(&mut self, other: &FreeSeries) {
        let top = self.max_degree.min(other.max_degree) as usize;
        for l in 0..=top {
            for (a, b) in self.coeffs[l].iter_mut().zip(&other.coeffs[l]) {
                if !b.is_zero() {
                    *a += b;
                }
            }
        }
    }
}

/// `Y = e^A e^B - 1` truncated at degree `n`: `A^i B^j` has coefficient
/// `1/(i! j!)` and every other word is absent.
pub fn series_y(n: u32) -> Result<FreeSeries> {
    let mut y = FreeSeries::zero(n)?;
    let mut fact = vec![ExactRational::one()];
    for k in 1..=n {
        fact.push(&fact[k as usize - 1] * &ExactRational::from(i64::from(k)));
    }
    for l in 1..=n {
        for i in 0..=l {
            let j = l - i;
            // A^i B^j: the low j bits are set.
            let mask = (1u64 << j) - 1;
            let value = ExactRational::one() / (&fact[i as usize] * &fact[j as usize]);
            y.set(l, mask, value);
        }
    }
    Ok(y)
}

/// Truncated concatenation product:
/// `coeff(w, S T) = sum over w = u v of coeff(u, S) coeff(v, T)`.
pub fn series_mul(s: &FreeSeries, t: &FreeSeries, n: u32) -> Result<FreeSeries> {
    check_cap(n)?;
    assert!(
        s.max_degree >= n && t.max_degree >= n,
        "factors must be truncated at degree {n} or higher"
    );
    let mut out = FreeSeries::zero(n)?;
    for a in 0..=n {
        for (u, cu) in s.nonzero_terms(a) {
            for b in 0..=(n - a) {
                let target = &mut out.coeffs[(a + b) as usize];
                for (v, cv) in t.nonzero_terms(b) {
                    target[((u << b) | v) as usize] += &(cu * cv);
                }
            }
        }
    }
    Ok(out)
}

/// `log(e^A e^B) = sum_{k=1}^{n} (-1)^(k+1)/k Y^k`, truncated at degree `n`.
///
/// `Y` has no scalar term, so powers above `n` cannot contribute.
pub fn oracle_log_series(n: u32) -> Result<FreeSeries> {
    let y = series_y(n)?;
    let mut h = FreeSeries::zero(n)?;
    let mut power = y.clone();
    for k in 1..=n {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        h.add_assign(&power.scaled(&ExactRational::new(sign, i64::from(k))));
        if k < n {
            power = series_mul(&y, &power, n)?;
        }
    }
    Ok(h)
}

/// `exp(S) = sum_k S^k / k!` truncated at degree `n`; `S` must have no scalar term.
pub fn series_exp(s: &FreeSeries, n: u32) -> Result<FreeSeries> {
    assert!(s.scalar().is_zero(), "exponent must have zero scalar term");
    let mut out = FreeSeries::one(n)?;
    let mut power = FreeSeries::one(n)?;
    let mut inv_fact = ExactRational::one();
    for k in 1..=n {
        power = series_mul(s, &power, n)?;
        inv_fact = &inv_fact / &ExactRational::from(i64::from(k));
        out.add_assign(&power.scaled(&inv_fact));
    }
    Ok(out)
}

/// `h_w` looked up in the truncated log series.
pub fn oracle_coefficient(letters: &str) -> Result<ExactRational> {
    let word = BlockWord::parse(letters)?;
    let h = oracle_log_series(word.degree())?;
    Ok(h.get(word.degree(), word.to_mask().expect("length within cap")).clone())
}
