//! Graph streams: graph6 (one graph per line) and edge lists (one graph per
//! file), plus the bundled corpus of all graphs on at most seven vertices.

use edgereg::{parse_edge_list, parse_graph6, Graph, Result};

/// Every graph on 0..=7 vertices up to isomorphism, one graph6 per line,
/// ordered by vertex count then edge count.
pub const BUNDLED_CORPUS: &str = include_str!("../../../corpus/graphs_upto7.g6");

#[derive(Clone, Debug)]
pub struct InputGraph {
    pub id: String,
    /// Raw input for the record when parsing failed.
    pub raw: String,
    pub graph: Result<Graph>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum InputFormat {
    #[default]
    Graph6,
    Edges,
}

pub fn read(text: &str, format: InputFormat, source: &str) -> Vec<InputGraph> {
    match format {
        InputFormat::Graph6 => read_graph6(text, source),
        InputFormat::Edges => vec![InputGraph {
            id: source.to_string(),
            raw: String::new(),
            graph: parse_edge_list(text),
        }],
    }
}

/// Blank lines and the optional `>>graph6<<` header are skipped; ids are
/// `source:line`.
pub fn read_graph6(text: &str, source: &str) -> Vec<InputGraph> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let l = l.trim_end_matches('\r');
            InputGraph {
                id: format!("{source}:{}", i + 1),
                raw: l.to_string(),
                graph: parse_graph6(l.as_bytes()),
            }
        })
        .collect()
}

/// The bundled corpus restricted to `n <= nmax`.
pub fn bundled(nmax: usize) -> Vec<InputGraph> {
    read_graph6(BUNDLED_CORPUS, "corpus")
        .into_iter()
        .filter(|g| g.graph.as_ref().map_or(true, |g| g.n() <= nmax))
        .collect()
}
