//! Cutting sequences of lines `y = λx` through the origin.
//!
//! Letter 0 records a crossing of a horizontal grid line, letter 1 a crossing
//! of a vertical one, and a lattice point is written `10`. Generation starts
//! at the origin, so the first block of a word may be shorter than the rest
//! (for example the slope 2 gives `010010…`).

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{ArithError, CfExpansion, Surd};
use crate::words::{Letter, Word, WordError};

/// Fewer complete blocks than this and continued-fraction recovery stops.
pub const MIN_RECOVERY_BLOCKS: usize = 3;

/// Prefix length must be at least this many times the largest factor length.
pub const MARGIN_FACTOR: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CuttingError {
    #[error("slope must be positive, got {0}")]
    NonPositiveSlope(String),
    #[error("slope 1 has no value or derivation")]
    TrivialSlopeOne,
    #[error("word is not in two-block form at derivation level {level}: runs of {letter} have lengths {run_lengths:?}")]
    NotBlockForm {
        level: usize,
        letter: Letter,
        run_lengths: Vec<usize>,
    },
    #[error("word too short: no complete interior block")]
    TooShort,
    #[error(
        "prefix of length {len} is too short for factor length {n_max}; need at least {required}"
    )]
    MarginTooSmall {
        n_max: usize,
        len: usize,
        required: usize,
    },
    #[error("continued fraction has no quotients")]
    EmptyExpansion,
    #[error("invalid continued fraction: {0}")]
    InvalidExpansion(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// The line `y = λx` with `λ > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuttingLine {
    slope: Surd,
}

impl CuttingLine {
    pub fn new(slope: Surd) -> Result<Self, CuttingError> {
        if !slope.is_positive() {
            return Err(CuttingError::NonPositiveSlope(slope.to_string()));
        }
        Ok(CuttingLine { slope })
    }

    pub fn slope(&self) -> &Surd {
        &self.slope
    }

    /// First `n` letters of the cutting sequence.
    ///
    /// Vertical crossings `x = k` happen at parameter `k`, horizontal ones
    /// `y = m` at `m/λ`; the two streams are merged by exact comparison of
    /// `kλ` with `m`.
    pub fn generate(&self, n: usize) -> Word {
        let one = Surd::one();
        let mut out = Vec::with_capacity(n + 1);
        let (mut k, mut m) = (1u64, 1u64);
        while out.len() < n {
            let order = self
                .slope
                .cmp_multiples(k, &one, m)
                .expect("a rational operand always shares the field");
            match order {
                std::cmp::Ordering::Less => {
                    out.push(1);
                    k += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(0);
                    m += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.extend([1, 0]);
                    k += 1;
                    m += 1;
                }
            }
        }
        out.truncate(n);
        Word::from_trusted(out, 2)
    }

    /// `⌊λ⌋` for `λ > 1`, `⌊1/λ⌋` for `λ < 1`.
    pub fn value(&self) -> Result<u64, CuttingError> {
        let one = Surd::one();
        let x = match self.slope.try_cmp(&one)? {
            std::cmp::Ordering::Equal => return Err(CuttingError::TrivialSlopeOne),
            std::cmp::Ordering::Greater => self.slope.floor(),
            std::cmp::Ordering::Less => self.slope.recip()?.floor(),
        };
        x.to_u64()
            .ok_or_else(|| ArithError::Overflow(x.to_string()).into())
    }
}

/// Outcome of a block-form scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlockVerdict {
    /// Interior runs of the majority letter take exactly the lengths `v` and `v+1`.
    TwoBlock { value: u64 },
    /// Every interior run has the same length `v`.
    SingleBlock { value: u64 },
    /// Runs of `letter` are incompatible with any line.
    Violation {
        letter: Letter,
        run_lengths: Vec<usize>,
    },
    /// No interior run of the majority letter was observed.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockFormReport {
    pub majority: Option<Letter>,
    /// Interior run length of the majority letter to its number of occurrences.
    pub run_lengths: BTreeMap<usize, usize>,
    pub verdict: BlockVerdict,
}

impl BlockFormReport {
    /// Number of complete blocks, i.e. interior majority runs.
    pub fn blocks(&self) -> usize {
        self.run_lengths.values().sum()
    }
}

/// Checks that a binary word is built from blocks `m^v n` and `m^(v+1) n`
/// (`m` the majority letter, `n` the isolated one). The first and last runs
/// may be truncated and are ignored.
pub fn check_block_form(word: &Word) -> Result<BlockFormReport, WordError> {
    if !word.is_binary() {
        return Err(WordError::NotBinary);
    }
    let runs = word.runs();
    let interior = if runs.len() > 2 {
        &runs[1..runs.len() - 1]
    } else {
        &[][..]
    };
    let isolated = |letter: Letter| interior.iter().all(|&(l, len)| l != letter || len == 1);
    let distinct = |letter: Letter| -> Vec<usize> {
        let mut v: Vec<usize> = interior
            .iter()
            .filter(|&&(l, _)| l == letter)
            .map(|&(_, len)| len)
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    };

    let majority = match (isolated(0), isolated(1)) {
        (false, true) => 0,
        (true, false) => 1,
        (true, true) => u8::from(word.count(1) > word.count(0)),
        (false, false) => {
            let minority = u8::from(word.count(1) < word.count(0));
            let run_lengths = distinct(minority);
            return Ok(BlockFormReport {
                majority: Some(1 - minority),
                run_lengths: BTreeMap::new(),
                verdict: BlockVerdict::Violation {
                    letter: minority,
                    run_lengths,
                },
            });
        }
    };

    let mut run_lengths = BTreeMap::new();
    for &(l, len) in interior {
        if l == majority {
            *run_lengths.entry(len).or_insert(0) += 1;
        }
    }
    let lengths: Vec<usize> = run_lengths.keys().copied().collect();
    let verdict = match lengths.as_slice() {
        [] => BlockVerdict::Inconclusive,
        [v] => BlockVerdict::SingleBlock { value: *v as u64 },
        [v, w] if *w == v + 1 => BlockVerdict::TwoBlock { value: *v as u64 },
        _ => BlockVerdict::Violation {
            letter: majority,
            run_lengths: lengths.clone(),
        },
    };
    Ok(BlockFormReport {
        majority: Some(majority),
        run_lengths,
        verdict,
    })
}

/// Result of one derivation step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Derivation {
    pub derived: Word,
    pub value: u64,
    /// Whether letters were exchanged first because 1 was the majority letter.
    pub swapped: bool,
    pub trimmed_leading: usize,
    pub trimmed_trailing: usize,
}

/// One derivation step.
///
/// With 0 the majority letter, every complete block `1 0^v` becomes `1` and
/// the extra `0` of a long block stays `0`. For a slope `λ > 1` this turns a
/// factor of `Cs(λ)` into a factor of `Cs(λ - v)`. When 1 is the majority
/// letter the word is read as `Cs(1/λ)` with letters exchanged. The leading
/// and trailing partial blocks are dropped.
pub fn derive(word: &Word) -> Result<Derivation, CuttingError> {
    let report = check_block_form(word)?;
    let value = match report.verdict {
        BlockVerdict::TwoBlock { value } | BlockVerdict::SingleBlock { value } => value,
        BlockVerdict::Violation {
            letter,
            run_lengths,
        } => {
            return Err(CuttingError::NotBlockForm {
                level: 0,
                letter,
                run_lengths,
            })
        }
        BlockVerdict::Inconclusive => return Err(CuttingError::TooShort),
    };
    let swapped = report.majority == Some(1);
    let oriented = if swapped {
        word.swap_binary()?
    } else {
        word.clone()
    };

    let s = oriented.symbols();
    let first = s
        .iter()
        .position(|&x| x == 1)
        .ok_or(CuttingError::TooShort)?;
    let last = s
        .iter()
        .rposition(|&x| x == 1)
        .ok_or(CuttingError::TooShort)?;
    if first == last {
        return Err(CuttingError::TooShort);
    }
    let mut derived = Vec::new();
    let mut run = 0u64;
    for &x in &s[first + 1..=last] {
        if x == 0 {
            run += 1;
        } else {
            derived.push(1);
            derived.extend(std::iter::repeat_n(0, (run - value) as usize));
            run = 0;
        }
    }
    Ok(Derivation {
        derived: Word::from_trusted(derived, 2),
        value,
        swapped,
        trimmed_leading: first,
        trimmed_trailing: s.len() - last,
    })
}

/// Recovers a prefix of the continued fraction of the slope by iterated
/// derivation. A word whose majority letter is 1 (slope below 1) gets a
/// leading quotient 0.
pub fn recover_cf(word: &Word, depth: usize) -> Result<CfExpansion, CuttingError> {
    let top = check_block_form(word)?;
    let mut quotients = Vec::new();
    if top.majority == Some(1) && depth > 0 {
        quotients.push(0);
    }
    let mut current = word.clone();
    let mut complete = false;
    while quotients.len() < depth {
        let report = check_block_form(&current)?;
        let level = quotients.len();
        match report.verdict {
            BlockVerdict::Violation {
                letter,
                run_lengths,
            } => {
                return Err(CuttingError::NotBlockForm {
                    level,
                    letter,
                    run_lengths,
                })
            }
            BlockVerdict::Inconclusive => break,
            _ if report.blocks() < MIN_RECOVERY_BLOCKS => break,
            BlockVerdict::SingleBlock { value } => {
                quotients.push(value);
                complete = true;
                break;
            }
            BlockVerdict::TwoBlock { value } => {
                quotients.push(value);
                current = derive(&current)
                    .map_err(|e| match e {
                        CuttingError::NotBlockForm {
                            letter,
                            run_lengths,
                            ..
                        } => CuttingError::NotBlockForm {
                            level,
                            letter,
                            run_lengths,
                        },
                        other => other,
                    })?
                    .derived;
            }
        }
    }
    Ok(CfExpansion::new(quotients, complete))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SturmianFailure {
    Complexity { n: usize, observed: usize },
    Unbalanced { n: usize, deficits: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SturmianReport {
    pub n_max: usize,
    pub passed: bool,
    pub failure: Option<SturmianFailure>,
}

/// Checks `C(w, n) = n + 1` and 1-balance for every `n <= n_max`.
///
/// Complexity growing by exactly one per length is also the aperiodicity
/// evidence. Requires `n_max * 50 <= len`.
pub fn is_sturmian_prefix(word: &Word, n_max: usize) -> Result<SturmianReport, CuttingError> {
    if !word.is_binary() {
        return Err(WordError::NotBinary.into());
    }
    let required = n_max.max(1) * MARGIN_FACTOR;
    if word.len() < required {
        return Err(CuttingError::MarginTooSmall {
            n_max,
            len: word.len(),
            required,
        });
    }
    for n in 1..=n_max {
        let observed = word.complexity(n)?;
        if observed != n + 1 {
            return Ok(SturmianReport {
                n_max,
                passed: false,
                failure: Some(SturmianFailure::Complexity { n, observed }),
            });
        }
        let deficits = word.balance_deficit_at(n)?;
        if deficits.iter().any(|&d| d > 1) {
            return Ok(SturmianReport {
                n_max,
                passed: false,
                failure: Some(SturmianFailure::Unbalanced { n, deficits }),
            });
        }
    }
    Ok(SturmianReport {
        n_max,
        passed: true,
        failure: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rounding {
    /// Run lengths `⌈(k+1)λ⌉ - ⌈kλ⌉`: the cutting sequence itself.
    Ceil,
    /// Run lengths `⌊kλ⌋ - ⌊(k-1)λ⌋`.
    Floor,
}

impl Rounding {
    fn other(self) -> Self {
        match self {
            Rounding::Ceil => Rounding::Floor,
            Rounding::Floor => Rounding::Ceil,
        }
    }
}

fn push_zeros(out: &mut Vec<Letter>, count: u64, cap: usize) {
    let room = cap.saturating_sub(out.len()) as u64;
    out.extend(std::iter::repeat_n(0, count.min(room) as usize));
}

/// Mechanical word for the canonical expansion `q`, at least `n` letters
/// (truncated to `n`).
///
/// With `λ = v + μ`, `0 < μ < 1`:
/// ceil-word(λ) = `0^v` followed by the image of ceil-word(μ) under
/// `1 -> 1 0^v, 0 -> 0`; floor-word(λ) is the image of floor-word(μ) under
/// `1 -> 0^v 1, 0 -> 0`; and for `μ < 1` each kind equals the other kind of
/// `1/μ` with letters exchanged.
fn mechanical(kind: Rounding, q: &[u64], n: usize) -> Vec<Letter> {
    let v = q[0];
    let mut out = Vec::with_capacity(n);
    if q.len() == 1 {
        if kind == Rounding::Ceil {
            push_zeros(&mut out, v - 1, n);
        }
        while out.len() < n {
            match kind {
                Rounding::Ceil => {
                    out.push(1);
                    push_zeros(&mut out, v, n);
                }
                Rounding::Floor => {
                    push_zeros(&mut out, v, n);
                    out.push(1);
                }
            }
        }
        out.truncate(n);
        return out;
    }
    let inner: Vec<Letter> = mechanical(kind.other(), &q[1..], n)
        .into_iter()
        .map(|s| 1 - s)
        .collect();
    if v == 0 {
        return inner;
    }
    if kind == Rounding::Ceil {
        push_zeros(&mut out, v, n);
    }
    for s in inner {
        if out.len() >= n {
            break;
        }
        match (kind, s) {
            (_, 0) => out.push(0),
            (Rounding::Ceil, _) => {
                out.push(1);
                push_zeros(&mut out, v, n);
            }
            (Rounding::Floor, _) => {
                push_zeros(&mut out, v, n);
                out.push(1);
            }
        }
    }
    out.truncate(n);
    out
}

/// Builds the cutting sequence of the slope `[a0; a1, …, ak]` by undoing
/// derivation from the innermost quotient outward, without any arithmetic
/// on the slope itself. A finite expansion is read as the exact rational it
/// denotes.
pub fn generate_from_cf(cf: &CfExpansion, n: usize) -> Result<Word, CuttingError> {
    if cf.is_empty() {
        return Err(CuttingError::EmptyExpansion);
    }
    if let Some(i) = cf.quotients.iter().skip(1).position(|&a| a == 0) {
        return Err(CuttingError::InvalidExpansion(format!(
            "quotient {} is zero",
            i + 1
        )));
    }
    let canonical = cf.canonical();
    if canonical.quotients == [0] {
        return Err(CuttingError::InvalidExpansion("slope is zero".into()));
    }
    Ok(Word::from_trusted(
        mechanical(Rounding::Ceil, &canonical.quotients, n),
        2,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(text: &str) -> CuttingLine {
        CuttingLine::new(text.parse().unwrap()).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Independent oracle: walk the line by floating-free rational stepping
    /// for rational slopes `a/b`, comparing `k*a` and `m*b` as integers.
    fn rational_oracle(a: u64, b: u64, n: usize) -> String {
        let mut out = String::new();
        let (mut k, mut m) = (1u64, 1u64);
        while out.len() < n {
            let (t_vert, t_horiz) = (k * a, m * b);
            if t_vert < t_horiz {
                out.push('1');
                k += 1;
            } else if t_vert > t_horiz {
                out.push('0');
                m += 1;
            } else {
                out.push_str("10");
                k += 1;
                m += 1;
            }
        }
        out.truncate(n);
        out
    }

    #[test]
    fn generate_examples() {
        assert_eq!(line("phi").generate(19).to_string(), "0100101001001010010");
        assert_eq!(line("2").generate(9).to_string(), "010010010");
        assert_eq!(line("1").generate(8).to_string(), "10101010");
        assert_eq!(line("7/3").generate(13).to_string(), "0010010010001");
        for (a, b) in [(7, 3), (5, 2), (3, 5), (1, 4), (13, 8)] {
            let l = CuttingLine::new(Surd::rational(a, b).unwrap()).unwrap();
            assert_eq!(l.generate(200).to_string(), rational_oracle(a, b, 200));
        }
    }

    #[test]
    fn nonpositive_slope_rejected() {
        assert!(CuttingLine::new(Surd::zero()).is_err());
        assert!(CuttingLine::new("1-sqrt(2)".parse().unwrap()).is_err());
    }

    #[test]
    fn value_examples() {
        assert_eq!(line("phi").value().unwrap(), 1);
        assert_eq!(line("1/3").value().unwrap(), 3);
        assert_eq!(line("7/3").value().unwrap(), 2);
        assert_eq!(line("1").value(), Err(CuttingError::TrivialSlopeOne));
    }

    #[test]
    fn block_form_examples() {
        let fib = line("phi").generate(2000);
        let r = check_block_form(&fib).unwrap();
        assert_eq!(r.verdict, BlockVerdict::TwoBlock { value: 1 });
        assert_eq!(r.majority, Some(0));
        let r = check_block_form(&line("2").generate(300)).unwrap();
        assert_eq!(r.verdict, BlockVerdict::SingleBlock { value: 2 });
        let r = check_block_form(&line("1/3").generate(300)).unwrap();
        assert_eq!(r.majority, Some(1));
        assert_eq!(r.verdict, BlockVerdict::SingleBlock { value: 3 });
        let r = check_block_form(&w("010001001010")).unwrap();
        assert_eq!(
            r.verdict,
            BlockVerdict::Violation {
                letter: 0,
                run_lengths: vec![1, 2, 3]
            }
        );
        let r = check_block_form(&w("0011001100")).unwrap();
        assert!(matches!(r.verdict, BlockVerdict::Violation { .. }));
        assert_eq!(
            check_block_form(&w("000")).unwrap().verdict,
            BlockVerdict::Inconclusive
        );
        assert_eq!(
            check_block_form(&w("0001000")).unwrap().verdict,
            BlockVerdict::Inconclusive
        );
        assert_eq!(check_block_form(&w("0120")), Err(WordError::NotBinary));
    }

    #[test]
    fn derive_examples() {
        let d = derive(&w("010010010")).unwrap();
        assert_eq!(d.value, 2);
        assert_eq!(d.derived.to_string(), "11");
        assert_eq!((d.trimmed_leading, d.trimmed_trailing), (1, 2));
        let d = derive(&w("0101")).unwrap();
        assert_eq!(d.value, 1);
        assert_eq!(d.derived.to_string(), "1");
        assert_eq!(derive(&w("0100")), Err(CuttingError::TooShort));
        assert!(matches!(
            derive(&w("010001001010")),
            Err(CuttingError::NotBlockForm { level: 0, .. })
        ));
    }

    #[test]
    fn derive_fibonacci_gives_cutting_sequence_of_phi_minus_one() {
        let fib = line("phi").generate(3000);
        let d = derive(&fib).unwrap();
        assert_eq!(d.value, 1);
        assert!(!d.swapped);
        let target = line("phi - 1").generate(3000).to_string();
        let derived = d.derived.to_string();
        assert!(target.contains(&derived));
        // Cs(φ−1) starts with the vertical crossing x = 1, which is exactly
        // where the trimmed word starts.
        assert!(target.starts_with(&derived));
    }

    #[test]
    fn recover_examples() {
        let cf = recover_cf(&line("phi").generate(10_000), 8).unwrap();
        assert_eq!(cf.quotients, vec![1; 8]);
        assert!(!cf.complete);
        let cf = recover_cf(&line("1+sqrt(2)").generate(10_000), 6).unwrap();
        assert_eq!(cf.quotients, vec![2; 6]);
        let cf = recover_cf(&line("7/3").generate(10_000), 4).unwrap();
        assert_eq!(cf, CfExpansion::new(vec![2, 3], true));
        let cf = recover_cf(&line("3/7").generate(10_000), 4).unwrap();
        assert_eq!(cf, CfExpansion::new(vec![0, 2, 3], true));
        let cf = recover_cf(&line("1").generate(100), 4).unwrap();
        assert_eq!(cf, CfExpansion::new(vec![1], true));
        assert!(matches!(
            recover_cf(&w("0010001000100101"), 4),
            Err(CuttingError::NotBlockForm { level: 0, .. })
        ));
    }

    #[test]
    fn sturmian_examples() {
        let r = is_sturmian_prefix(&line("phi").generate(5000), 50).unwrap();
        assert!(r.passed, "{r:?}");
        let r = is_sturmian_prefix(&line("7/3").generate(5000), 50).unwrap();
        assert!(!r.passed);
        assert_eq!(
            r.failure,
            Some(SturmianFailure::Complexity {
                n: 10,
                observed: 10
            })
        );
        assert!(matches!(
            is_sturmian_prefix(&line("phi").generate(100), 50),
            Err(CuttingError::MarginTooSmall { required: 2500, .. })
        ));
    }

    #[test]
    fn from_cf_examples() {
        let fib = generate_from_cf(&CfExpansion::new(vec![1; 12], false), 19).unwrap();
        assert_eq!(fib.to_string(), "0100101001001010010");
        let two = generate_from_cf(&CfExpansion::new(vec![2], true), 12).unwrap();
        assert_eq!(two.to_string(), "010010010010");
        // [1; 1] is the slope 2
        let w11 = generate_from_cf(&CfExpansion::new(vec![1, 1], true), 40).unwrap();
        assert_eq!(w11, line("2").generate(40));
        let w12 = generate_from_cf(&CfExpansion::new(vec![1, 2], true), 40).unwrap();
        assert_eq!(w12.to_string(), rational_oracle(3, 2, 40));
        assert_eq!(
            generate_from_cf(&CfExpansion::new(vec![], true), 4),
            Err(CuttingError::EmptyExpansion)
        );
        assert!(generate_from_cf(&CfExpansion::new(vec![1, 0, 2], true), 4).is_err());
        assert!(generate_from_cf(&CfExpansion::new(vec![0], true), 4).is_err());
    }

    #[test]
    fn from_cf_matches_rational_oracle() {
        for (a, b) in [
            (7u64, 3u64),
            (5, 2),
            (3, 7),
            (2, 5),
            (1, 3),
            (4, 1),
            (22, 7),
            (355, 113),
        ] {
            let cf = crate::exactnum::cf_expand(&Surd::rational(a, b).unwrap(), 20).unwrap();
            let got = generate_from_cf(&cf, 500).unwrap().to_string();
            assert_eq!(got, rational_oracle(a, b, 500), "{a}/{b}");
        }
    }
}
