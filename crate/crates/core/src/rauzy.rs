//! Rauzy graphs: vertices are the length-`n` factors, and every factor `bva`
//! of length `n + 1` gives an edge `bv -> va` labeled `a`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::words::{Letter, Word, WordError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub letter: Letter,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RauzyGraph {
    order: usize,
    /// Lexicographically sorted; edges refer to vertices by index.
    vertices: Vec<Word>,
    edges: Vec<Edge>,
    /// Vertices seen only at the very end of the word, with no extension.
    dangling: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    /// Out-degrees of all vertices, ascending.
    pub out_degrees: Vec<usize>,
    /// In-degrees of all vertices, ascending.
    pub in_degrees: Vec<usize>,
}

impl DegreeProfile {
    /// Degree to number of vertices with that out-degree.
    pub fn out_histogram(&self) -> BTreeMap<usize, usize> {
        histogram(&self.out_degrees)
    }

    pub fn in_histogram(&self) -> BTreeMap<usize, usize> {
        histogram(&self.in_degrees)
    }
}

fn histogram(values: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &v in values {
        *h.entry(v).or_insert(0) += 1;
    }
    h
}

impl RauzyGraph {
    /// Builds `G_n(w)` from the factors fully contained in `w`.
    pub fn build(word: &Word, order: usize) -> Result<Self, WordError> {
        if order == 0 || order + 1 > word.len() {
            return Err(WordError::LengthOutOfRange {
                n: order + 1,
                len: word.len(),
            });
        }
        let vertices: Vec<Word> = word.factors(order)?.into_iter().collect();
        let index: HashMap<&[Letter], usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.symbols(), i))
            .collect();
        let mut edges: Vec<Edge> = word
            .factor_slices(order + 1)?
            .into_iter()
            .map(|f| Edge {
                from: index[&f[..order]],
                to: index[&f[1..]],
                letter: f[order],
            })
            .collect();
        edges.sort_unstable();
        let mut has_out = vec![false; vertices.len()];
        for e in &edges {
            has_out[e.from] = true;
        }
        let dangling = (0..vertices.len()).filter(|&i| !has_out[i]).collect();
        Ok(RauzyGraph {
            order,
            vertices,
            edges,
            dangling,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn dangling(&self) -> impl Iterator<Item = &Word> {
        self.dangling.iter().map(|&i| &self.vertices[i])
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut out_degrees = vec![0; self.vertices.len()];
        let mut in_degrees = vec![0; self.vertices.len()];
        for e in &self.edges {
            out_degrees[e.from] += 1;
            in_degrees[e.to] += 1;
        }
        out_degrees.sort_unstable();
        in_degrees.sort_unstable();
        DegreeProfile {
            out_degrees,
            in_degrees,
        }
    }

    /// Graphviz DOT text. Node and edge order is lexicographic, so the
    /// output is byte-stable.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph rauzy_{} {{", self.order).unwrap();
        for v in &self.vertices {
            writeln!(out, "  \"{v}\";").unwrap();
        }
        for e in &self.edges {
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.vertices[e.from], self.vertices[e.to], e.letter
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}
