//! Simple undirected graphs as canonical edge lists over dense integer
//! node ids (0-based internally, 1-based in the CSV surface).

use std::collections::HashSet;

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    /// Builds a simple graph on `n` nodes. Edges are canonicalized to
    /// `u < v` and sorted; self-loops and duplicates are rejected.
    pub fn new(n: usize, edges: Vec<(u32, u32)>) -> Result<Self> {
        let mut canon = Vec::with_capacity(edges.len());
        let mut seen = HashSet::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(Error::Domain(format!("self-loop at node {}", a + 1)));
            }
            if a as usize >= n || b as usize >= n {
                return Err(Error::Domain(format!(
                    "edge ({},{}) out of range for n={n}",
                    a + 1,
                    b + 1
                )));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::Domain(format!(
                    "duplicate edge ({},{})",
                    e.0 + 1,
                    e.1 + 1
                )));
            }
            canon.push(e);
        }
        canon.sort_unstable();
        Ok(Self { n, edges: canon })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list, `u < v`, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n];
        for &(u, v) in &self.edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        deg
    }

    pub fn degree_sequence(&self) -> Result<DegreeSequence> {
        DegreeSequence::new(self.degrees())
    }

    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u as usize] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Edge-list CSV: one `u,v` line per edge, 1-based ids, `u < v`,
    /// rows sorted.
    pub fn to_edge_csv(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            out.push_str(&format!("{},{}\n", u + 1, v + 1));
        }
        out
    }

    /// Parses an edge-list CSV with 1-based ids. Blank lines, `#` comments,
    /// and an optional `u,v` header are skipped. An edge-free file is a
    /// parse error.
    pub fn parse_edge_csv(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut max_id = 0u32;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if lineno == 0 && line.eq_ignore_ascii_case("u,v") {
                continue;
            }
            let mut parts = line.split(',');
            let (u, v) = match (parts.next(), parts.next(), parts.next()) {
                (Some(a), Some(b), None) => (a.trim(), b.trim()),
                _ => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("expected 'u,v', got {line:?}"),
                    })
                }
            };
            let parse_id = |s: &str| -> Result<u32> {
                let id: u32 = s.parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("invalid node id {s:?}"),
                })?;
                if id == 0 {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: "node ids are 1-based".into(),
                    });
                }
                Ok(id - 1)
            };
            let (u, v) = (parse_id(u)?, parse_id(v)?);
            max_id = max_id.max(u).max(v);
            edges.push((u, v));
        }
        if edges.is_empty() {
            return Err(Error::Parse {
                line: 1,
                msg: "no edges found".into(),
            });
        }
        Graph::new(max_id as usize + 1, edges).map_err(|e| Error::Parse {
            line: 1,
            msg: e.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_edges_and_degrees() {
        let g = Graph::new(4, vec![(3, 0), (0, 1), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(g.degrees(), vec![3, 1, 1, 1]);
        assert!(g.is_connected());
    }

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert!(Graph::new(3, vec![(1, 1)]).is_err());
        assert!(Graph::new(3, vec![(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let csv = g.to_edge_csv();
        assert_eq!(csv, "1,2\n3,4\n");
        let h = Graph::parse_edge_csv(&csv).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn empty_csv_is_parse_error() {
        assert!(matches!(
            Graph::parse_edge_csv(""),
            Err(Error::Parse { .. })
        ));
    }
}
