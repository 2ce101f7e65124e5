//! Simple undirected graphs on vertices `0..n`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::ops::Range;

use crate::error::{domain, QmcError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Stored as `(i, j)` with `i < j`.
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(domain(format!("self-loop at vertex {i}")));
        }
        if i >= self.n || j >= self.n {
            return Err(domain(format!(
                "edge ({i}, {j}) has an endpoint outside 0..{}",
                self.n
            )));
        }
        if !self.edges.insert((i.min(j), i.max(j))) {
            return Err(domain(format!("duplicate edge ({i}, {j})")));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    /// Serializes in the edge-list format accepted by [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (i, j) in &self.edges {
            writeln!(out, "{i} {j}").unwrap();
        }
        out
    }
}

pub fn complete_graph(n: usize) -> Graph {
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Graph { n, edges }
}

/// Consecutive vertex blocks, one per part, in the order given.
pub fn part_blocks(parts: &[usize]) -> Vec<Range<usize>> {
    let mut start = 0;
    parts
        .iter()
        .map(|&len| {
            let block = start..start + len;
            start += len;
            block
        })
        .collect()
}

/// `K_{parts}`: vertices grouped into consecutive blocks, an edge between
/// every pair of vertices in different blocks.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.contains(&0) {
        return Err(domain("part sizes must be positive"));
    }
    let n = parts.iter().sum();
    let blocks = part_blocks(parts);
    let mut edges = BTreeSet::new();
    for (a, first) in blocks.iter().enumerate() {
        for second in &blocks[a + 1..] {
            for i in first.clone() {
                for j in second.clone() {
                    edges.insert((i, j));
                }
            }
        }
    }
    Ok(Graph { n, edges })
}

/// `K_n` together with the cliques on each part's block, embedded in `n`
/// vertices; the multipartite graph is `K_n` minus their edges.
pub fn complement_decomposition(parts: &[usize]) -> Result<(Graph, Vec<Graph>)> {
    if parts.contains(&0) {
        return Err(domain("part sizes must be positive"));
    }
    let n = parts.iter().sum();
    let cliques = part_blocks(parts)
        .into_iter()
        .map(|block| {
            let edges = block
                .clone()
                .flat_map(|i| (i + 1..block.end).map(move |j| (i, j)))
                .collect();
            Graph { n, edges }
        })
        .collect();
    Ok((complete_graph(n), cliques))
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let err = |message: String| QmcError::Parse {
        line: lineno,
        message,
    };
    let fields: Vec<&str> = line.split(' ').collect();
    if fields.len() != 2 {
        return Err(err(format!(
            "expected two space-separated integers, found {line:?}"
        )));
    }
    let num = |s: &str| {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(format!("{s:?} is not a decimal integer")));
        }
        s.parse::<usize>().map_err(|e| err(e.to_string()))
    };
    Ok((num(fields[0])?, num(fields[1])?))
}

/// Parses `"n m"` followed by `m` lines `"i j"`. Lines starting with `#` are
/// skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty());

    let Some((header_line, header)) = lines.next() else {
        return Err(QmcError::Parse {
            line: 1,
            message: "missing header \"n m\"".into(),
        });
    };
    let (n, m) = parse_pair(header, header_line)?;
    let mut graph = Graph::empty(n);
    let mut last_line = header_line;
    for (lineno, line) in lines {
        last_line = lineno;
        if graph.edge_count() == m {
            return Err(QmcError::Parse {
                line: lineno,
                message: format!("more than the declared {m} edges"),
            });
        }
        let (i, j) = parse_pair(line, lineno)?;
        graph.add_edge(i, j).map_err(|e| QmcError::Parse {
            line: lineno,
            message: match e {
                QmcError::Domain(msg) => msg,
                other => other.to_string(),
            },
        })?;
    }
    if graph.edge_count() != m {
        return Err(QmcError::Parse {
            line: last_line,
            message: format!("header declares {m} edges, found {}", graph.edge_count()),
        });
    }
    Ok(graph)
}
