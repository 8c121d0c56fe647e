//! graph6 for simple graphs and a JSON edge list for multigraphs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Multigraph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn from_graph6(text: &str) -> Result<Multigraph> {
    let trimmed = text.trim_end_matches(['\n', '\r', ' ', '\t']);
    let (start, body) = match trimmed.strip_prefix(">>graph6<<") {
        Some(rest) => (10, rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(g6_err(start + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    let first = *body.first().ok_or_else(|| g6_err(start, "empty input"))?;
    let (n, mut pos) = if first < 126 {
        ((first - BIAS) as usize, 1)
    } else {
        if body.len() < 4 {
            return Err(g6_err(start + body.len(), "truncated vertex count"));
        }
        if body[1] == 126 {
            return Err(g6_err(start + 1, "36-bit vertex counts are not supported"));
        }
        let n = body[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        (n, 4)
    };
    let bits_needed = n * n.saturating_sub(1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if body.len() < pos + bytes_needed {
        return Err(g6_err(
            start + body.len(),
            format!("truncated adjacency: need {bytes_needed} bytes after header"),
        ));
    }
    if body.len() > pos + bytes_needed {
        return Err(g6_err(start + pos + bytes_needed, "trailing bytes"));
    }
    let mut g = Multigraph::new(n);
    let mut k = 0usize;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k.is_multiple_of(6) {
                current = body[pos] - BIAS;
                pos += 1;
            }
            if current & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a simple graph; live vertices are taken in ascending id order.
pub fn to_graph6(g: &Multigraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::Precondition(
            "graph6 only encodes simple graphs".into(),
        ));
    }
    let (c, _) = g.compact();
    let n = c.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        return Err(Error::Precondition("graph too large for graph6".into()));
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(c.multiplicity(i, j) > 0);
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - k);
            }
        }
        out.push(byte + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// `{"n": int, "edges": [[u,v], ...], "labels": {id: string}}`, 0-based ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<usize, String>,
}

impl GraphJson {
    /// Compacted view of `g`: vertices renumbered densely, edges in id order.
    pub fn from_graph(g: &Multigraph) -> Self {
        let (c, _) = g.compact();
        GraphJson {
            n: c.order(),
            edges: c.edges().map(|(_, ends)| ends).collect(),
            labels: c.labels().clone(),
        }
    }

    pub fn to_graph(&self) -> Result<Multigraph> {
        let mut g = Multigraph::new(self.n);
        for &[u, v] in &self.edges {
            g.add_edge(u, v).map_err(|e| Error::Json(e.to_string()))?;
        }
        for (&v, l) in &self.labels {
            if v >= self.n {
                return Err(Error::Json(format!("label for unknown vertex {v}")));
            }
            g.set_label(v, l.clone());
        }
        Ok(g)
    }
}

pub fn to_json(g: &Multigraph) -> String {
    serde_json::to_string(&GraphJson::from_graph(g)).expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<Multigraph> {
    let parsed: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    parsed.to_graph()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_decodes_from_c_tilde() {
        let g = from_graph6("C~").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 6);
        assert_eq!(to_graph6(&g).unwrap(), "C~");
    }

    #[test]
    fn petersen_round_trip() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let g = Multigraph::from_edges(10, &edges).unwrap();
        let s = to_graph6(&g).unwrap();
        let h = from_graph6(&s).unwrap();
        assert_eq!(h.order(), 10);
        assert_eq!(h.size(), 15);
        assert!(h.is_cubic());
        assert_eq!(to_graph6(&h).unwrap(), s);
    }

    #[test]
    fn header_and_newline_are_accepted() {
        assert_eq!(from_graph6(">>graph6<<C~\n").unwrap().size(), 6);
    }

    #[test]
    fn truncated_input_reports_offset() {
        match from_graph6("I??") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_header_byte_reports_offset() {
        match from_graph6("C~\u{7f}") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(from_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
    }

    #[test]
    fn long_form_vertex_count() {
        let g = Multigraph::new(70);
        let s = to_graph6(&g).unwrap();
        assert_eq!(&s.as_bytes()[..1], b"~");
        assert_eq!(from_graph6(&s).unwrap().order(), 70);
    }

    #[test]
    fn multigraph_json_round_trip() {
        let mut g = Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (2, 0)]).unwrap();
        g.set_label(2, "x");
        let text = to_json(&g);
        assert_eq!(text, r#"{"n":3,"edges":[[0,1],[0,1],[1,2],[2,0]],"labels":{"2":"x"}}"#);
        assert_eq!(from_json(&text).unwrap(), g);
        assert!(to_graph6(&g).is_err());
    }

    #[test]
    fn json_rejects_loops() {
        assert!(matches!(from_json(r#"{"n":2,"edges":[[1,1]]}"#), Err(Error::Json(_))));
    }
}
