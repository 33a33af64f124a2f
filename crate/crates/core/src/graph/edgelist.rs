//! Plain-text edge lists: one `u v` pair per line, `#` comments, blank lines
//! ignored.

use std::collections::{HashMap, HashSet};
use std::io::{BufRead, Write};

use super::{Graph, NodeId};
use crate::error::{Error, Result};

/// A graph read from an edge list together with what the reader cleaned up.
#[derive(Debug, Clone)]
pub struct EdgeListLoad {
    pub graph: Graph,
    /// Original id of each compacted node, in first-appearance order.
    pub original_ids: Vec<u64>,
    pub self_loops_dropped: usize,
    pub duplicates_dropped: usize,
}

impl EdgeListLoad {
    pub fn dropped(&self) -> usize {
        self.self_loops_dropped + self.duplicates_dropped
    }
}

pub fn read_edge_list<R: BufRead>(source: R) -> Result<EdgeListLoad> {
    let mut ids: HashMap<u64, NodeId> = HashMap::new();
    let mut original_ids = Vec::new();
    let mut seen_edges = HashSet::new();
    let mut edges = Vec::new();
    let mut self_loops_dropped = 0;
    let mut duplicates_dropped = 0;

    let mut intern = |raw: u64| -> NodeId {
        *ids.entry(raw).or_insert_with(|| {
            original_ids.push(raw);
            original_ids.len() - 1
        })
    };

    for (idx, line) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected two node ids, got `{trimmed}`"),
            });
        };
        let parse = |tok: &str| {
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("`{tok}` is not a non-negative integer node id"),
            })
        };
        let (a, b) = (parse(a)?, parse(b)?);
        let (u, v) = (intern(a), intern(b));
        if u == v {
            self_loops_dropped += 1;
            continue;
        }
        if !seen_edges.insert((u.min(v), u.max(v))) {
            duplicates_dropped += 1;
            continue;
        }
        edges.push((u, v));
    }

    if self_loops_dropped + duplicates_dropped > 0 {
        log::warn!("edge list: dropped {self_loops_dropped} self-loop(s) and {duplicates_dropped} duplicate edge(s)");
    }
    Ok(EdgeListLoad {
        graph: Graph::from_edges(original_ids.len(), edges),
        original_ids,
        self_loops_dropped,
        duplicates_dropped,
    })
}

/// Writes every edge once as `u v` with `u < v`, ascending. Isolated nodes
/// are not representable and are omitted.
pub fn write_edge_list<W: Write>(g: &Graph, mut sink: W) -> Result<()> {
    for (u, v) in g.edges() {
        writeln!(sink, "{u} {v}")?;
    }
    sink.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn read(text: &str) -> Result<EdgeListLoad> {
        read_edge_list(text.as_bytes())
    }

    #[test]
    fn path_from_text() {
        let load = read("0 1\n1 2\n").unwrap();
        assert_eq!(load.graph, crate::graph::fixtures::path(3));
        assert_eq!(load.dropped(), 0);
    }

    #[test]
    fn self_loop_reported() {
        let load = read("0 0\n0 1\n").unwrap();
        assert_eq!(load.graph.edge_count(), 1);
        assert_eq!(load.self_loops_dropped, 1);
    }

    #[test]
    fn comments_and_compaction() {
        let load = read("# comment\n\n3 4\n").unwrap();
        assert_eq!(load.graph.node_count(), 2);
        assert_eq!(load.graph.edge_count(), 1);
        assert_eq!(load.original_ids, vec![3, 4]);
    }

    #[test]
    fn duplicates_in_either_orientation() {
        let load = read("1 2\n2 1\n1 2\n2 3\n").unwrap();
        assert_eq!(load.duplicates_dropped, 2);
        assert_eq!(load.graph.edge_count(), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match read("0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match read("0 1\n\n1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(read("0 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read("-1 2\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn writer_format() {
        let g = Graph::from_edges(4, [(2, 1), (0, 3), (1, 0)]);
        let mut out = Vec::new();
        write_edge_list(&g, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "0 1\n0 3\n1 2\n");
    }
}
