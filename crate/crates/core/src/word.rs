//! Words over the alphabet `{A, B}` and their run-length (block) encoding.

use std::fmt;
use std::str::FromStr;

use crate::error::{BchError, Result};

/// One letter of the two-letter alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn flip(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
        }
    }

    /// Bit used in word bitmasks: `A` is 0, `B` is 1.
    pub fn bit(self) -> u64 {
        match self {
            Letter::A => 0,
            Letter::B => 1,
        }
    }

    fn from_char(c: char) -> Option<Letter> {
        match c {
            'A' | 'a' => Some(Letter::A),
            'B' | 'b' => Some(Letter::B),
            _ => None,
        }
    }
}

/// A word written as alternating maximal blocks of equal letters.
///
/// `AABAB` is `blocks = [2, 1, 1, 1]` with `a_first = true`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockWord {
    blocks: Vec<u32>,
    a_first: bool,
}

impl BlockWord {
    /// Builds a block word. Every block length must be positive and there must
    /// be at least one block.
    pub fn new(blocks: Vec<u32>, a_first: bool) -> Result<Self> {
        if blocks.is_empty() {
            return Err(BchError::InvalidBlocks("no blocks given".into()));
        }
        if blocks.contains(&0) {
            return Err(BchError::InvalidBlocks(format!(
                "block lengths must be positive, got {blocks:?}"
            )));
        }
        if blocks.iter().map(|&q| u64::from(q)).sum::<u64>() > u64::from(u32::MAX) {
            return Err(BchError::InvalidBlocks("degree too large".into()));
        }
        Ok(Self { blocks, a_first })
    }

    /// Run-length encodes a letter string. Lowercase letters are accepted.
    pub fn parse(letters: &str) -> Result<Self> {
        let invalid = || BchError::InvalidWord(letters.to_owned());
        let mut chars = letters.chars();
        let first = chars.next().and_then(Letter::from_char).ok_or_else(invalid)?;
        let mut blocks = vec![1u32];
        let mut current = first;
        for c in chars {
            let letter = Letter::from_char(c).ok_or_else(invalid)?;
            if letter == current {
                *blocks.last_mut().unwrap() += 1;
            } else {
                blocks.push(1);
                current = letter;
            }
        }
        Ok(Self {
            blocks,
            a_first: first == Letter::A,
        })
    }

    /// Decodes the `len`-letter word stored in `mask` (most significant bit first).
    pub fn from_mask(mask: u64, len: u32) -> Result<Self> {
        if len == 0 || len > 64 {
            return Err(BchError::InvalidBlocks(format!("word length {len} not in 1..=64")));
        }
        let letter_at = |i: u32| {
            if (mask >> (len - 1 - i)) & 1 == 0 {
                Letter::A
            } else {
                Letter::B
            }
        };
        let first = letter_at(0);
        let mut blocks = vec![1u32];
        for i in 1..len {
            if letter_at(i) == letter_at(i - 1) {
                *blocks.last_mut().unwrap() += 1;
            } else {
                blocks.push(1);
            }
        }
        Ok(Self {
            blocks,
            a_first: first == Letter::A,
        })
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    pub fn a_first(&self) -> bool {
        self.a_first
    }

    /// Number of blocks `m`.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Word length `n`.
    pub fn degree(&self) -> u32 {
        self.blocks.iter().sum()
    }

    pub fn first_letter(&self) -> Letter {
        if self.a_first {
            Letter::A
        } else {
            Letter::B
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        let first = self.first_letter();
        self.blocks.iter().enumerate().flat_map(move |(i, &q)| {
            let letter = if i % 2 == 0 { first } else { first.flip() };
            std::iter::repeat_n(letter, q as usize)
        })
    }

    /// The letter-string form, e.g. `"AABAB"`.
    pub fn render(&self) -> String {
        self.letters().map(Letter::as_char).collect()
    }

    /// Bitmask form; only defined for words of length at most 64.
    pub fn to_mask(&self) -> Option<u64> {
        if self.degree() > 64 {
            return None;
        }
        Some(self.letters().fold(0u64, |acc, l| (acc << 1) | l.bit()))
    }

    /// The same blocks with every letter exchanged (`A <-> B`).
    pub fn swapped(&self) -> Self {
        Self {
            blocks: self.blocks.clone(),
            a_first: !self.a_first,
        }
    }
}

impl fmt::Display for BlockWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for BlockWord {
    type Err = BchError;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Renders a `len`-letter bitmask as a letter string.
pub fn mask_to_string(mask: u64, len: u32) -> String {
    (0..len)
        .map(|i| if (mask >> (len - 1 - i)) & 1 == 0 { 'A' } else { 'B' })
        .collect()
}

/// Parses a comma-separated block list such as `2,1,1`.
pub fn parse_block_list(list: &str) -> Result<Vec<u32>> {
    list.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| BchError::InvalidBlocks(format!("cannot parse {list:?}")))
        })
        .collect()
}
