//! Browser bindings. Each export takes plain strings and numbers and returns
//! a JSON document for `www/index.html` to draw; errors come back as the
//! rejected message.

use lineword::{
    classify_linearity, recover_cf, s_m_word, tribonacci_word, CuttingLine, Line3, RauzyGraph,
    Surd, Verdict, Word,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Longest word the page will ask for.
pub const MAX_LENGTH: usize = 200_000;

fn check_length(length: usize) -> Result<(), String> {
    if length == 0 || length > MAX_LENGTH {
        return Err(format!("length must be between 1 and {MAX_LENGTH}"));
    }
    Ok(())
}

fn exact(x: &Surd) -> Value {
    json!({ "exact": x.to_string(), "float": x.to_f64() })
}

/// Cutting sequence of `y = λx` together with the crossing points, in
/// order, for plotting.
#[wasm_bindgen]
pub fn cutting_sequence(slope: &str, length: usize) -> Result<String, String> {
    check_length(length)?;
    let slope: Surd = slope.parse().map_err(|e| format!("{e}"))?;
    let line = CuttingLine::new(slope.clone()).map_err(|e| e.to_string())?;
    let word = line.generate(length);
    let lambda = slope.to_f64();
    let (mut k, mut m) = (0u64, 0u64);
    let crossings: Vec<Value> = word
        .symbols()
        .iter()
        .map(|&letter| {
            if letter == 1 {
                k += 1;
                json!({ "letter": 1, "x": k as f64, "y": k as f64 * lambda })
            } else {
                m += 1;
                json!({ "letter": 0, "x": m as f64 / lambda, "y": m as f64 })
            }
        })
        .collect();
    let cf = recover_cf(&word, 8).ok().map(|cf| cf.quotients);
    Ok(json!({
        "slope": exact(&slope),
        "word": word.to_string(),
        "compact": word.compact().to_string(),
        "crossings": crossings,
        "recovered_cf": cf,
    })
    .to_string())
}

/// Intersection sequence of a line in space, its three removal projections
/// and the projection slopes.
#[wasm_bindgen]
pub fn intersection(line: &str, length: usize) -> Result<String, String> {
    check_length(length)?;
    let line: Line3 = line.parse().map_err(|e| format!("{e}"))?;
    let word = line.generate(length);
    let slopes = line.projection_slopes();
    let angles = line.angles();
    let projections = (0..3u8)
        .map(|removed| {
            let (p, _) = word
                .removal_projection(removed)
                .map_err(|e| e.to_string())?;
            Ok(json!({
                "removed": removed,
                "word": p.to_string(),
                "slope": exact(slopes.after_removing(removed)),
            }))
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(json!({
        "direction": [exact(line.dx()), exact(line.dy()), exact(line.dz())],
        "word": word.to_string(),
        "projections": projections,
        "theta": angles.theta,
        "phi": angles.phi,
    })
    .to_string())
}

/// Complexity and palindrome tables, the Rauzy graph of the given order,
/// and the linearity verdict for ternary input.
///
/// `source` is `fibonacci`, `sm`, `tribonacci`, or a digit string.
#[wasm_bindgen]
pub fn factor_analysis(source: &str, length: usize, order: usize) -> Result<String, String> {
    check_length(length)?;
    let word = match source.trim() {
        "sm" => s_m_word(length),
        "tribonacci" => tribonacci_word(length),
        "fibonacci" => lineword::fibonacci_word(length),
        digits => digits.parse::<Word>().map_err(|e| e.to_string())?,
    };
    let max_n = (word.len() / lineword::cutting2d::MARGIN_FACTOR).min(12);
    if max_n == 0 || order > max_n {
        return Err(format!(
            "{} letters support factor lengths up to {max_n}",
            word.len()
        ));
    }
    let complexity = (1..=max_n)
        .map(|n| word.complexity(n))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let palindromes = (1..=max_n)
        .map(|n| word.palindrome_count(n))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let graph = RauzyGraph::build(&word, order.max(1)).map_err(|e| e.to_string())?;
    let verdict = if word.alphabet() == 3 && word.len() >= 500 {
        classify_linearity(&word, 5).ok().map(|v| match v {
            Verdict::ConsistentWithLine { direction, .. } => json!({
                "consistent": true,
                "direction": direction.to_f64(),
            }),
            Verdict::Inconsistent { .. } => json!({ "consistent": false }),
        })
    } else {
        None
    };
    Ok(json!({
        "length": word.len(),
        "complexity": complexity,
        "palindromes": palindromes,
        "rauzy": {
            "order": graph.order(),
            "vertices": graph.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "edges": graph.edges().iter().map(|e| json!([e.from, e.to, e.letter])).collect::<Vec<_>>(),
        },
        "verdict": verdict,
    })
    .to_string())
}
