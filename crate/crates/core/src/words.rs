//! Finite words over `{0, 1}` or `{0, 1, 2}` and their combinatorial measures.
//!
//! All counting operations look only at factors that fit entirely inside the
//! finite word. For an infinite word, the numbers computed on a prefix are
//! lower bounds; for the linearly recurrent words this crate deals with, a
//! prefix fifty times longer than the factor length is enough in practice.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

pub type Letter = u8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("alphabet size must be 2 or 3, got {0}")]
    AlphabetSize(u8),
    #[error("symbol {symbol} at position {position} is outside the alphabet of size {alphabet}")]
    InvalidSymbol {
        position: usize,
        symbol: u8,
        alphabet: u8,
    },
    #[error("factor length {n} out of range for a word of length {len}")]
    LengthOutOfRange { n: usize, len: usize },
    #[error("letter {letter} is not in the alphabet of size {alphabet}")]
    LetterNotInAlphabet { letter: Letter, alphabet: u8 },
    #[error("expected a binary word")]
    NotBinary,
    #[error("cannot parse word: {0}")]
    Parse(String),
}

/// A finite word. Symbols are stored as small integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<Letter>,
    alphabet: u8,
}

impl Word {
    pub fn new(symbols: Vec<Letter>, alphabet: u8) -> Result<Self, WordError> {
        if !(2..=3).contains(&alphabet) {
            return Err(WordError::AlphabetSize(alphabet));
        }
        if let Some((position, &symbol)) = symbols.iter().enumerate().find(|(_, &s)| s >= alphabet)
        {
            return Err(WordError::InvalidSymbol {
                position,
                symbol,
                alphabet,
            });
        }
        Ok(Word { symbols, alphabet })
    }

    pub fn binary(symbols: Vec<Letter>) -> Result<Self, WordError> {
        Self::new(symbols, 2)
    }

    pub fn ternary(symbols: Vec<Letter>) -> Result<Self, WordError> {
        Self::new(symbols, 3)
    }

    /// Smallest alphabet that holds every symbol.
    pub fn infer(symbols: Vec<Letter>) -> Result<Self, WordError> {
        let alphabet = if symbols.contains(&2) { 3 } else { 2 };
        Self::new(symbols, alphabet)
    }

    /// Caller guarantees every symbol is below `alphabet`.
    pub(crate) fn from_trusted(symbols: Vec<Letter>, alphabet: u8) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < alphabet));
        Word { symbols, alphabet }
    }

    pub fn symbols(&self) -> &[Letter] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Letter> {
        self.symbols
    }

    pub fn alphabet(&self) -> u8 {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn is_binary(&self) -> bool {
        self.alphabet == 2
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.symbols.iter().filter(|&&s| s == letter).count()
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word::from_trusted(self.symbols[..n.min(self.len())].to_vec(), self.alphabet)
    }

    fn check_length(&self, n: usize) -> Result<(), WordError> {
        if n == 0 || n > self.len() {
            Err(WordError::LengthOutOfRange { n, len: self.len() })
        } else {
            Ok(())
        }
    }

    fn check_letter(&self, letter: Letter) -> Result<(), WordError> {
        if letter >= self.alphabet {
            Err(WordError::LetterNotInAlphabet {
                letter,
                alphabet: self.alphabet,
            })
        } else {
            Ok(())
        }
    }

    /// Distinct length-`n` windows as borrowed slices.
    pub fn factor_slices(&self, n: usize) -> Result<HashSet<&[Letter]>, WordError> {
        self.check_length(n)?;
        Ok(self.symbols.windows(n).collect())
    }

    /// The set `f_n` of distinct factors of length `n`, in lexicographic order.
    pub fn factors(&self, n: usize) -> Result<BTreeSet<Word>, WordError> {
        Ok(self
            .factor_slices(n)?
            .into_iter()
            .map(|s| Word::from_trusted(s.to_vec(), self.alphabet))
            .collect())
    }

    /// Number of distinct factors of length `n`; a lower bound for the
    /// complexity of any infinite word this is a prefix of.
    pub fn complexity(&self, n: usize) -> Result<usize, WordError> {
        Ok(self.factor_slices(n)?.len())
    }

    /// For each letter `a`, the largest difference `| |u|_a - |v|_a |` over
    /// pairs of equal-length factors `u`, `v` with length at most `n`.
    ///
    /// The word is C-balanced up to length `n` iff every entry is `<= C`.
    pub fn balance_deficit(&self, n: usize) -> Result<Vec<usize>, WordError> {
        self.check_length(n)?;
        let prefixes = self.letter_prefix_sums();
        Ok(prefixes
            .iter()
            .map(|prefix| (1..=n).map(|m| spread(prefix, m)).max().unwrap_or(0))
            .collect())
    }

    /// Per-letter imbalance among factors of length exactly `n`.
    pub fn balance_deficit_at(&self, n: usize) -> Result<Vec<usize>, WordError> {
        self.check_length(n)?;
        Ok(self
            .letter_prefix_sums()
            .iter()
            .map(|prefix| spread(prefix, n))
            .collect())
    }

    fn letter_prefix_sums(&self) -> Vec<Vec<usize>> {
        (0..self.alphabet)
            .map(|letter| {
                let mut prefix = Vec::with_capacity(self.len() + 1);
                prefix.push(0usize);
                for &s in &self.symbols {
                    prefix.push(prefix.last().unwrap() + usize::from(s == letter));
                }
                prefix
            })
            .collect()
    }

    /// Number of distinct length-`n` factors equal to their own reversal.
    pub fn palindrome_count(&self, n: usize) -> Result<usize, WordError> {
        Ok(self
            .factor_slices(n)?
            .into_iter()
            .filter(|u| u.iter().eq(u.iter().rev()))
            .count())
    }

    pub fn reverse(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word::from_trusted(symbols, self.alphabet)
    }

    pub fn is_palindrome(&self) -> bool {
        self.symbols.iter().eq(self.symbols.iter().rev())
    }

    /// Sequential projection `P_a`: `a -> 0`, every other letter `-> 1`.
    pub fn seq_projection(&self, letter: Letter) -> Result<Word, WordError> {
        self.check_letter(letter)?;
        Ok(Word::from_trusted(
            self.symbols
                .iter()
                .map(|&s| u8::from(s != letter))
                .collect(),
            2,
        ))
    }

    /// Deletes every occurrence of `letter` and relabels the remaining letters
    /// to `0` and `1` in ascending order. The relabeling is returned with the
    /// word.
    pub fn removal_projection(&self, letter: Letter) -> Result<(Word, Relabeling), WordError> {
        self.check_letter(letter)?;
        let relabeling = Relabeling::removing(letter, self.alphabet);
        let symbols = self
            .symbols
            .iter()
            .filter_map(|&s| relabeling.image(s))
            .collect();
        Ok((Word::from_trusted(symbols, 2), relabeling))
    }

    /// Exchanges letters 0 and 1 of a binary word.
    pub fn swap_binary(&self) -> Result<Word, WordError> {
        if !self.is_binary() {
            return Err(WordError::NotBinary);
        }
        Ok(Word::from_trusted(
            self.symbols.iter().map(|&s| 1 - s).collect(),
            2,
        ))
    }

    /// Maximal runs of equal letters as `(letter, length)` pairs.
    pub fn runs(&self) -> Vec<(Letter, usize)> {
        let mut runs: Vec<(Letter, usize)> = Vec::new();
        for &s in &self.symbols {
            match runs.last_mut() {
                Some((l, n)) if *l == s => *n += 1,
                _ => runs.push((s, 1)),
            }
        }
        runs
    }

    /// Power representation of the word.
    ///
    /// A word that is a whole power `u^k` (`k >= 2`) of a primitive block
    /// longer than one letter compacts to that single block; otherwise each
    /// run of equal letters becomes one block.
    pub fn compact(&self) -> CompactForm {
        let n = self.len();
        for period in 2..=n / 2 {
            if n.is_multiple_of(period) && self.symbols[period..] == self.symbols[..n - period] {
                let root = &self.symbols[..period];
                if root.iter().all(|&s| s == root[0]) {
                    break;
                }
                return CompactForm {
                    blocks: vec![Block {
                        word: root.to_vec(),
                        exponent: n / period,
                    }],
                };
            }
        }
        CompactForm {
            blocks: self
                .runs()
                .into_iter()
                .map(|(letter, len)| Block {
                    word: vec![letter],
                    exponent: len,
                })
                .collect(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", (b'0' + s) as char)?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    /// Parses a bare digit string such as `01020`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let symbols = s
            .trim()
            .bytes()
            .enumerate()
            .map(|(i, b)| match b {
                b'0'..=b'2' => Ok(b - b'0'),
                _ => Err(WordError::Parse(format!(
                    "unexpected {:?} at position {i}",
                    b as char
                ))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Word::infer(symbols)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Max minus min letter count over windows of length `m`.
fn spread(prefix: &[usize], m: usize) -> usize {
    let (lo, hi) = prefix
        .windows(m + 1)
        .map(|w| w[m] - w[0])
        .fold((usize::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)));
    hi.saturating_sub(lo)
}

/// Letter map used by [`Word::removal_projection`].
///
/// Removing 0 maps `1 -> 0, 2 -> 1`; removing 1 maps `0 -> 0, 2 -> 1`;
/// removing 2 maps `0 -> 0, 1 -> 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Relabeling {
    pub removed: Letter,
    /// `map[s]` is the image of source letter `s`, `None` for the removed one.
    pub map: [Option<Letter>; 3],
}

impl Relabeling {
    pub fn removing(removed: Letter, alphabet: u8) -> Self {
        let mut map = [None; 3];
        let mut next = 0;
        for s in 0..alphabet {
            if s != removed {
                map[s as usize] = Some(next);
                next += 1;
            }
        }
        Relabeling { removed, map }
    }

    pub fn image(&self, letter: Letter) -> Option<Letter> {
        self.map.get(letter as usize).copied().flatten()
    }

    /// Source letter that maps onto `image`.
    pub fn source(&self, image: Letter) -> Option<Letter> {
        (0..3u8).find(|&s| self.image(s) == Some(image))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub word: Vec<Letter>,
    pub exponent: usize,
}

/// A word written as a sequence of powered blocks, e.g. `0^2 1 0^2 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompactForm {
    pub blocks: Vec<Block>,
}

impl CompactForm {
    pub fn expand(&self) -> Result<Word, WordError> {
        let symbols = self
            .blocks
            .iter()
            .flat_map(|b| {
                b.word
                    .iter()
                    .copied()
                    .cycle()
                    .take(b.word.len() * b.exponent)
            })
            .collect();
        Word::infer(symbols)
    }
}

impl fmt::Display for CompactForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            for &s in &block.word {
                write!(f, "{}", (b'0' + s) as char)?;
            }
            if block.exponent != 1 {
                write!(f, "^{}", block.exponent)?;
            }
        }
        Ok(())
    }
}

impl FromStr for CompactForm {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let blocks = s
            .split_whitespace()
            .map(|token| {
                let (body, exponent) = match token.split_once('^') {
                    Some((body, e)) => (
                        body,
                        e.parse::<usize>()
                            .map_err(|_| WordError::Parse(format!("bad exponent in {token:?}")))?,
                    ),
                    None => (token, 1),
                };
                let word: Word = body.parse()?;
                if word.is_empty() {
                    return Err(WordError::Parse(format!("empty block in {token:?}")));
                }
                Ok(Block {
                    word: word.into_symbols(),
                    exponent,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CompactForm { blocks })
    }
}
