//! Partition-indexed coefficient tables.
//!
//! `h_w` is invariant under permuting the block lengths of `w` and changes by
//! `(-1)^(n+1)` when `A` and `B` are exchanged, so one value per partition of
//! `n` (read as `A^{q_1} B^{q_2} ...`) determines every coefficient of degree `n`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io;

use rayon::prelude::*;

use crate::backend::IntegerBackend;
use crate::bchcore::{bch_coefficient_with, EvalOptions};
use crate::error::{BchError, Result};
use crate::rational::ExactRational;
use crate::word::BlockWord;

/// A non-increasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts into non-increasing order. Parts must be positive.
    pub fn from_parts(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(BchError::InvalidBlocks(format!(
                "partition parts must be positive, got {parts:?}"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The word `A^{q_1} B^{q_2} ...`.
    pub fn word(&self) -> BlockWord {
        BlockWord::new(self.parts.clone(), true).expect("partition parts are positive")
    }

    /// Comma-joined parts, e.g. `2,1`.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            write!(s, "{p}").unwrap();
        }
        s
    }
}

/// Partitions of a single `n` in reverse-lexicographic order, starting at `[n]`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Partitions {
    pub fn of(n: u32) -> Self {
        Self {
            current: (n > 0).then(|| vec![n]),
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let out = Partition {
            parts: current.clone(),
        };
        // Successor: drop trailing ones, decrease the last part > 1 and refill
        // with copies of it.
        let mut parts = current;
        let mut ones = 0u32;
        while parts.last() == Some(&1) {
            parts.pop();
            ones += 1;
        }
        if let Some(last) = parts.pop() {
            let k = last - 1;
            let mut rest = ones + 1;
            parts.push(k);
            while rest > 0 {
                let take = rest.min(k);
                parts.push(take);
                rest -= take;
            }
            self.current = Some(parts);
        }
        Some(out)
    }
}

/// Every partition of every `n` in `1..=max_n`: ascending `n`, then
/// reverse-lexicographic within each `n`.
pub fn partitions_up_to(max_n: u32) -> Vec<Partition> {
    (1..=max_n).flat_map(Partitions::of).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTableEntry {
    pub partition: Partition,
    pub value: ExactRational,
}

/// Coefficients for all partitions up to a maximal degree.
#[derive(Debug, Clone)]
pub struct CoeffTable {
    max_degree: u32,
    entries: Vec<CoeffTableEntry>,
    index: HashMap<Vec<u32>, usize>,
}

impl CoeffTable {
    pub fn from_entries(max_degree: u32, entries: Vec<CoeffTableEntry>) -> Self {
        let index = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.partition.parts.clone(), i))
            .collect();
        Self {
            max_degree,
            entries,
            index,
        }
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn entries(&self) -> &[CoeffTableEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, parts: &[u32]) -> Option<&ExactRational> {
        self.index.get(parts).map(|&i| &self.entries[i].value)
    }

    /// Tab-separated rows with a header line.
    pub fn write_tsv<W: io::Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "n\tpartition\tnumerator\tdenominator")?;
        for e in &self.entries {
            writeln!(
                out,
                "{}\t{}\t{}\t{}",
                e.partition.n(),
                e.partition.render(),
                e.value.numer(),
                e.value.denom()
            )?;
        }
        Ok(())
    }

    /// A JSON array of `{"n", "parts", "num", "den"}` objects. Numerators and
    /// denominators are written as JSON integers at full precision.
    pub fn to_json(&self) -> serde_json::Value {
        let big = |v: &num_bigint::BigInt| {
            serde_json::Value::Number(v.to_string().parse().expect("integer literal is valid JSON"))
        };
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "n": e.partition.n(),
                        "parts": e.partition.parts(),
                        "num": big(e.value.numer()),
                        "den": big(e.value.denom()),
                    })
                })
                .collect(),
        )
    }
}

/// Computes `h_w` for `w = A^{q_1} B^{q_2} ...` over the given partitions,
/// keeping their order. `threads > 1` fans the work out over a thread pool.
pub fn coefficients_for(
    partitions: &[Partition],
    backend: IntegerBackend,
    opts: &EvalOptions,
    threads: usize,
) -> Result<Vec<ExactRational>> {
    let one = |p: &Partition| bch_coefficient_with(&p.word(), backend, opts);
    if threads <= 1 {
        partitions.iter().map(one).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| partitions.par_iter().map(one).collect())
    }
}

/// The coefficient table for every partition of every `n <= max_n`.
pub fn coefficient_table(max_n: u32, backend: IntegerBackend) -> Result<CoeffTable> {
    coefficient_table_with(max_n, backend, &EvalOptions::default(), 1)
}

pub fn coefficient_table_with(
    max_n: u32,
    backend: IntegerBackend,
    opts: &EvalOptions,
    threads: usize,
) -> Result<CoeffTable> {
    let partitions = partitions_up_to(max_n);
    let values = coefficients_for(&partitions, backend, opts, threads)?;
    let entries = partitions
        .into_iter()
        .zip(values)
        .map(|(partition, value)| CoeffTableEntry { partition, value })
        .collect();
    Ok(CoeffTable::from_entries(max_n, entries))
}

/// Looks up `h_w` for an arbitrary word through the symmetry reduction.
pub fn coefficient_of_word_via_table(letters: &str, table: &CoeffTable) -> Result<ExactRational> {
    let word = BlockWord::parse(letters)?;
    let n = word.degree();
    if n > table.max_degree() {
        return Err(BchError::DegreeOutOfRange {
            degree: n,
            max: table.max_degree(),
        });
    }
    let partition = Partition::from_parts(word.blocks().to_vec())?;
    let value = table
        .get(partition.parts())
        .ok_or(BchError::DegreeOutOfRange {
            degree: n,
            max: table.max_degree(),
        })?
        .clone();
    if word.a_first() || n % 2 == 1 {
        Ok(value)
    } else {
        Ok(-value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExactRational {
        s.parse().unwrap()
    }

    #[test]
    fn partitions_of_three() {
        let ps: Vec<Vec<u32>> = partitions_up_to(3).into_iter().map(|p| p.parts).collect();
        assert_eq!(ps, vec![vec![1], vec![2], vec![1, 1], vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn partitions_of_six_in_order() {
        let ps: Vec<String> = Partitions::of(6).map(|p| p.render()).collect();
        assert_eq!(
            ps,
            [
                "6", "5,1", "4,2", "4,1,1", "3,3", "3,2,1", "3,1,1,1", "2,2,2", "2,2,1,1",
                "2,1,1,1,1", "1,1,1,1,1,1"
            ]
        );
        assert_eq!(Partitions::of(0).count(), 0);
    }

    #[test]
    fn small_table() {
        let t = coefficient_table(3, IntegerBackend::Auto).unwrap();
        assert_eq!(t.len(), 6);
        assert_eq!(t.get(&[1]).unwrap(), &q("1"));
        assert_eq!(t.get(&[2, 1]).unwrap(), &q("1/12"));
        assert_eq!(t.get(&[1, 1, 1]).unwrap(), &q("-1/6"));
    }

    #[test]
    fn symmetry_lookup() {
        let t = coefficient_table(4, IntegerBackend::Auto).unwrap();
        assert_eq!(coefficient_of_word_via_table("ABA", &t).unwrap(), q("-1/6"));
        assert_eq!(coefficient_of_word_via_table("BAB", &t).unwrap(), q("-1/6"));
        assert_eq!(coefficient_of_word_via_table("BAA", &t).unwrap(), q("1/12"));
        assert_eq!(coefficient_of_word_via_table("BA", &t).unwrap(), q("-1/2"));
        assert!(matches!(
            coefficient_of_word_via_table("ABABA", &t),
            Err(BchError::DegreeOutOfRange { degree: 5, max: 4 })
        ));
    }

    #[test]
    fn tsv_and_json() {
        let t = coefficient_table(3, IntegerBackend::Auto).unwrap();
        let mut buf = Vec::new();
        t.write_tsv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("n\tpartition\tnumerator\tdenominator\n"));
        assert!(text.contains("\n3\t2,1\t1\t12\n"));
        assert!(text.contains("\n3\t1,1,1\t-1\t6\n"));
        let json = serde_json::to_string(&t.to_json()).unwrap();
        assert!(json.contains(r#"{"den":12,"n":3,"num":1,"parts":[2,1]}"#), "{json}");
    }

    #[test]
    fn parallel_matches_serial() {
        let opts = EvalOptions::default();
        let serial = coefficient_table_with(9, IntegerBackend::Auto, &opts, 1).unwrap();
        let parallel = coefficient_table_with(9, IntegerBackend::Auto, &opts, 4).unwrap();
        assert_eq!(serial.entries(), parallel.entries());
    }
}
