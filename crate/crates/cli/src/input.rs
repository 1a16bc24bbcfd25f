//! Where a word comes from: literal digits, a file, stdin, or a generator.
//!
//! Text input is either bare digits (`0100101`) or compact form
//! (`0^2 1 0^2 1`, `100^3`); whitespace between digits is ignored.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use lineword::{
    fibonacci_word, generate_from_cf, s_m_word, tribonacci_word, CfExpansion, CompactForm,
    CuttingLine, Line3, Surd, TieOrder, Word,
};

use crate::failure::Failure;

/// Longest word the tool accepts.
pub const MAX_LENGTH: usize = 10_000_000;

/// Prefix length used by generator selectors outside `generate` when
/// `--length` is omitted.
pub const DEFAULT_LENGTH: usize = 10_000;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Named {
    Fibonacci,
    Sm,
    Tribonacci,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
pub enum Ties {
    #[default]
    Ascending,
    Descending,
}

#[derive(Args, Debug)]
#[group(id = "source", multiple = false)]
pub struct Selector {
    /// Word as digits or compact form
    #[arg(long)]
    word: Option<String>,
    /// File holding the word
    #[arg(long)]
    file: Option<PathBuf>,
    /// Cutting sequence of y = λx, e.g. `phi` or `(1+sqrt(5))/2`
    #[arg(long)]
    slope: Option<String>,
    /// Intersection sequence of the line with direction `dx,dy,dz`
    #[arg(long)]
    line: Option<String>,
    /// Cutting sequence of the slope with continued fraction `a0,a1,...`
    #[arg(long, value_delimiter = ',')]
    cf: Option<Vec<u64>>,
    /// Named sequence
    #[arg(long, value_enum)]
    named: Option<Named>,
}

#[derive(Args, Debug)]
pub struct Source {
    #[command(flatten)]
    selector: Selector,
    /// Number of letters to generate
    #[arg(long)]
    length: Option<usize>,
    /// Letter order for simultaneous crossings with `--line`
    #[arg(long, value_enum, default_value_t)]
    ties: Ties,
}

pub struct Input {
    pub word: Word,
    pub descriptor: String,
}

impl Source {
    fn is_generator(&self) -> bool {
        let s = &self.selector;
        s.slope.is_some() || s.line.is_some() || s.cf.is_some() || s.named.is_some()
    }

    /// For `generate`: a generator and `--length` are both mandatory.
    pub fn load_generated(&self) -> Result<Input, Failure> {
        if !self.is_generator() {
            return Err(Failure::Usage(
                "generate needs one of --slope, --line, --cf, --named".into(),
            ));
        }
        let length = self
            .length
            .ok_or_else(|| Failure::Usage("--length is required".into()))?;
        self.generate(length)
    }

    pub fn load(&self) -> Result<Input, Failure> {
        if self.is_generator() {
            return self.generate(self.length.unwrap_or(DEFAULT_LENGTH));
        }
        if self.length.is_some() {
            return Err(Failure::Usage("--length only applies to generators".into()));
        }
        let s = &self.selector;
        let (text, descriptor) = if let Some(w) = &s.word {
            (w.clone(), "word".to_string())
        } else if let Some(path) = &s.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            (text, format!("file:{}", path.display()))
        } else {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            (text, "stdin".to_string())
        };
        let word = parse_text(&text)?;
        Ok(Input { word, descriptor })
    }

    fn generate(&self, length: usize) -> Result<Input, Failure> {
        check_length(length)?;
        let s = &self.selector;
        if let Some(text) = &s.slope {
            let slope: Surd = text.parse()?;
            let word = CuttingLine::new(slope)?.generate(length);
            Ok(Input {
                word,
                descriptor: format!("slope:{text}"),
            })
        } else if let Some(text) = &s.line {
            let line: Line3 = text.parse()?;
            let ties = match self.ties {
                Ties::Ascending => TieOrder::Ascending,
                Ties::Descending => TieOrder::Descending,
            };
            Ok(Input {
                word: line.generate_with(length, ties),
                descriptor: format!("line:{line}"),
            })
        } else if let Some(quotients) = &s.cf {
            let cf = CfExpansion::new(quotients.clone(), true);
            Ok(Input {
                word: generate_from_cf(&cf, length)?,
                descriptor: format!("cf:{cf}"),
            })
        } else {
            let (word, name) = match s.named.expect("generator selected") {
                Named::Fibonacci => (fibonacci_word(length), "fibonacci"),
                Named::Sm => (s_m_word(length), "sm"),
                Named::Tribonacci => (tribonacci_word(length), "tribonacci"),
            };
            Ok(Input {
                word,
                descriptor: format!("named:{name}"),
            })
        }
    }
}

fn check_length(length: usize) -> Result<(), Failure> {
    if length > MAX_LENGTH {
        return Err(Failure::Usage(format!(
            "length {length} exceeds the limit of {MAX_LENGTH} letters"
        )));
    }
    Ok(())
}

pub fn parse_text(text: &str) -> Result<Word, Failure> {
    let text = text.trim();
    let word = if text.contains('^') {
        text.parse::<CompactForm>()?.expand()?
    } else {
        let digits: String = text.split_whitespace().collect();
        if digits.len() > MAX_LENGTH {
            check_length(digits.len())?;
        }
        digits.parse::<Word>()?
    };
    check_length(word.len())?;
    if word.is_empty() {
        return Err(Failure::Usage("the input word is empty".into()));
    }
    Ok(word)
}
