//! `lineword`: generate and analyze cutting sequences and ternary
//! intersection sequences.
//!
//! Exit status: 0 success, 1 `classify` found the word inconsistent, 2 usage
//! error or input too short, 3 arithmetic error, 4 prefix too short for the
//! requested factor lengths.

mod failure;
mod input;
mod report;

use clap::{Parser, Subcommand};
use lineword::{
    check_block_form, classify_linearity, derive, is_sturmian_prefix, line_from_min_complexity,
    recover_cf, IntersectError, Line3, RauzyGraph, Verdict, Word,
};
use serde_json::{json, Value};

use failure::Failure;
use input::Source;
use report::{direction, emit, exact, expansion, output, sig12};

#[derive(Parser, Debug)]
#[command(name = "lineword", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a generated word
    Generate {
        #[command(flatten)]
        source: Source,
        /// Print in compact form instead of bare digits
        #[arg(long)]
        compact: bool,
    },
    /// Complexity, balance, palindromes, block form and CF recovery
    Analyze {
        #[command(flatten)]
        source: Source,
        /// Largest factor length to tabulate
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Continued-fraction depth for recovery
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Decide whether a ternary word can be the intersection sequence of a line
    Classify {
        #[command(flatten)]
        source: Source,
        /// Derivation depth; the word needs 100 letters per level
        #[arg(long, default_value_t = 5)]
        depth: usize,
        /// Reconstruct from a word of complexity n + 2 instead
        #[arg(long)]
        min_complexity: bool,
    },
    /// Apply derivation steps to a binary word
    Derive {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        /// Letter to remove first when the word is ternary
        #[arg(long)]
        remove: Option<u8>,
    },
    /// Recover the continued fraction of the slope of a cutting sequence
    Recover {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        /// Letter to remove first when the word is ternary
        #[arg(long)]
        remove: Option<u8>,
    },
    /// Rauzy graph as DOT, or its degree profile as JSON
    Rauzy {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        profile: bool,
    },
    /// Spherical angles and projection slopes of a line
    Angles {
        /// Direction `dx,dy,dz`
        #[arg(long)]
        line: String,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(failure) => {
            eprintln!("lineword: {failure}");
            std::process::exit(failure.exit_code());
        }
    }
}

fn run(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Generate { source, compact } => {
            let input = source.load_generated()?;
            let text = if compact {
                input.word.compact().to_string()
            } else {
                input.word.to_string()
            };
            output(&text);
            output("\n");
            Ok(0)
        }
        Command::Analyze {
            source,
            max_n,
            depth,
        } => analyze(&source.load()?, max_n, depth),
        Command::Classify {
            source,
            depth,
            min_complexity,
        } => {
            let input = source.load()?;
            let word = Word::ternary(input.word.symbols().to_vec())?;
            if min_complexity {
                reconstruct(&word, &input.descriptor)
            } else {
                classify(&word, depth, &input.descriptor)
            }
        }
        Command::Derive {
            source,
            steps,
            remove,
        } => {
            let input = source.load()?;
            let mut word = binary_view(input.word, remove)?;
            let mut out = Vec::new();
            for _ in 0..steps {
                let d = derive(&word)?;
                out.push(json!({
                    "derived": d.derived.to_string(),
                    "length": d.derived.len(),
                    "value": d.value,
                    "swapped": d.swapped,
                    "trimmed_leading": d.trimmed_leading,
                    "trimmed_trailing": d.trimmed_trailing,
                }));
                word = d.derived;
            }
            emit("derive", json!({ "input": input.descriptor, "steps": out }));
            Ok(0)
        }
        Command::Recover {
            source,
            depth,
            remove,
        } => {
            let input = source.load()?;
            let word = binary_view(input.word, remove)?;
            let cf = recover_cf(&word, depth)?;
            emit(
                "recover",
                json!({ "input": input.descriptor, "depth": depth, "expansion": expansion(&cf) }),
            );
            Ok(0)
        }
        Command::Rauzy {
            source,
            order,
            profile,
        } => {
            let input = source.load()?;
            if order == 0 {
                return Err(Failure::Usage("--order must be at least 1".into()));
            }
            if input.word.len() < lineword::cutting2d::MARGIN_FACTOR * order {
                return Err(Failure::margin(input.word.len(), order));
            }
            let graph = RauzyGraph::build(&input.word, order)?;
            for v in graph.dangling() {
                eprintln!("lineword: warning: vertex {v} has no observed extension");
            }
            if profile {
                let p = graph.degree_profile();
                emit(
                    "rauzy",
                    json!({
                        "input": input.descriptor,
                        "order": order,
                        "vertices": graph.vertices().len(),
                        "edges": graph.edges().len(),
                        "out_degrees": p.out_degrees,
                        "in_degrees": p.in_degrees,
                        "dangling": graph.dangling().map(|v| v.to_string()).collect::<Vec<_>>(),
                    }),
                );
            } else {
                output(&graph.to_dot());
            }
            Ok(0)
        }
        Command::Angles { line } => {
            let line: Line3 = line.parse()?;
            let a = line.angles();
            let s = line.projection_slopes();
            emit(
                "angles",
                json!({
                    "line": direction(&line),
                    "theta": sig12(a.theta),
                    "phi": sig12(a.phi),
                    "phi_from_slopes": sig12(s.polar_angle()),
                    "slopes": { "xy": exact(&s.xy), "yz": exact(&s.yz), "xz": exact(&s.xz) },
                }),
            );
            Ok(0)
        }
    }
}

/// Binary words pass through; ternary ones need `--remove`.
fn binary_view(word: Word, remove: Option<u8>) -> Result<Word, Failure> {
    match (word.alphabet(), remove) {
        (3, Some(letter)) if letter < 3 => Ok(word.removal_projection(letter)?.0),
        (3, _) => Err(Failure::Usage(
            "ternary input needs --remove <0|1|2>".into(),
        )),
        (_, None) => Ok(word),
        (_, Some(_)) => Err(Failure::Usage(
            "--remove only applies to ternary words".into(),
        )),
    }
}

fn analyze(input: &input::Input, max_n: usize, depth: usize) -> Result<i32, Failure> {
    let w = &input.word;
    if max_n == 0 {
        return Err(Failure::Usage("--max-n must be at least 1".into()));
    }
    if w.len() < lineword::cutting2d::MARGIN_FACTOR * max_n {
        return Err(Failure::margin(w.len(), max_n));
    }
    let mut complexity = Vec::new();
    let mut balance = Vec::new();
    let mut palindromes = Vec::new();
    for n in 1..=max_n {
        complexity.push(w.complexity(n)?);
        balance.push(w.balance_deficit_at(n)?);
        palindromes.push(w.palindrome_count(n)?);
    }

    let projections: Vec<(Option<u8>, Word)> = if w.alphabet() == 3 {
        (0..3)
            .map(|l| Ok((Some(l), w.removal_projection(l)?.0)))
            .collect::<Result<_, Failure>>()?
    } else {
        vec![(None, w.clone())]
    };
    let mut block_form = Vec::new();
    let mut recovery = Vec::new();
    for (removed, p) in &projections {
        block_form.push(json!({
            "removed": removed,
            "report": serde_json::to_value(check_block_form(p)?).expect("serializable"),
        }));
        recovery.push(match recover_cf(p, depth) {
            Ok(cf) => json!({ "removed": removed, "expansion": expansion(&cf) }),
            Err(e) => json!({ "removed": removed, "error": e.to_string() }),
        });
    }

    let mut body = json!({
        "input": { "source": input.descriptor, "length": w.len(), "alphabet": w.alphabet() },
        "max_n": max_n,
        "complexity": complexity,
        "balance_deficit": balance,
        "palindromes": palindromes,
        "block_form": block_form,
        "cf_recovery": recovery,
    });
    if w.alphabet() == 2 {
        let report = is_sturmian_prefix(w, max_n)?;
        body["sturmian"] = serde_json::to_value(report).expect("serializable");
    }
    emit("analyze", body);
    Ok(0)
}

fn classify(word: &Word, depth: usize, descriptor: &str) -> Result<i32, Failure> {
    let verdict = classify_linearity(word, depth)?;
    let body = match &verdict {
        Verdict::ConsistentWithLine {
            direction: line,
            depth_checked,
            estimates,
        } => json!({
            "input": descriptor,
            "verdict": "consistent_with_line",
            "direction": direction(line),
            "depth_checked": depth_checked,
            "estimates": estimates.iter().map(|e| json!({
                "removed": e.removed,
                "slope": exact(&e.estimate),
                "uncertainty": e.uncertainty,
                "frequency": e.frequency,
                "expansion": expansion(&e.expansion),
            })).collect::<Vec<Value>>(),
        }),
        Verdict::Inconsistent { witnesses } => json!({
            "input": descriptor,
            "verdict": "inconsistent",
            "witnesses": serde_json::to_value(witnesses).expect("serializable"),
        }),
    };
    emit("classify", body);
    Ok(if verdict.is_consistent() { 0 } else { 1 })
}

fn reconstruct(word: &Word, descriptor: &str) -> Result<i32, Failure> {
    match line_from_min_complexity(word) {
        Ok(r) => {
            emit(
                "classify",
                json!({
                    "input": descriptor,
                    "verdict": "reconstructed",
                    "direction": direction(&r.direction),
                    "case": serde_json::to_value(&r.case).expect("serializable"),
                }),
            );
            Ok(0)
        }
        Err(e @ (IntersectError::NotMinComplexity { .. } | IntersectError::NoCaseApplies(_))) => {
            emit(
                "classify",
                json!({ "input": descriptor, "verdict": "no_reconstruction", "reason": e.to_string() }),
            );
            Ok(1)
        }
        Err(e) => Err(e.into()),
    }
}
