//! Plain-text edge lists and graph6.
//!
//! Text format: the first non-comment line holds `n`, every following line an
//! edge `i j` with `1 <= i < j <= n`. Anything after `#` is ignored. A first
//! line that does not start with a digit is read as graph6 instead.

use std::fmt::Write as _;
use std::str::FromStr;

use super::Graph;
use crate::{Error, Result};

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(k) => &line[..k],
        None => line,
    }
    .trim()
}

impl Graph {
    /// Parses the edge-list text format, or graph6 when the first meaningful
    /// line does not start with a digit.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text.lines().map(strip_comment).filter(|l| !l.is_empty());
        let first = lines
            .next()
            .ok_or_else(|| Error::Parse("empty graph description".into()))?;
        if !first.starts_with(|c: char| c.is_ascii_digit()) {
            if let Some(extra) = lines.next() {
                return Err(Error::Parse(format!(
                    "unexpected line after graph6 data: {extra:?}"
                )));
            }
            return Graph::from_graph6(first);
        }
        let n: usize = first
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count {first:?}")))?;
        let mut g = Graph::new(n)?;
        for line in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse(format!("expected `i j`, got {line:?}")));
            }
            let i: usize = fields[0]
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex {:?}", fields[0])))?;
            let j: usize = fields[1]
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex {:?}", fields[1])))?;
            if i >= j {
                if i == j {
                    return Err(Error::SelfLoop(i));
                }
                return Err(Error::Parse(format!("edge `{i} {j}` must satisfy i < j")));
            }
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for (i, j) in self.edges() {
            let _ = writeln!(out, "{i} {j}");
        }
        out
    }

    pub fn from_graph6(s: &str) -> Result<Graph> {
        let s = s.trim();
        let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
        let bytes = s.as_bytes();
        if bytes.is_empty() {
            return Err(Error::Parse("empty graph6 string".into()));
        }
        for &b in bytes {
            if !(63..=126).contains(&b) {
                return Err(Error::Parse(format!("invalid graph6 byte {b}")));
            }
        }
        if bytes[0] == 126 {
            return Err(Error::Parse(
                "graph6 with more than 62 vertices is not supported".into(),
            ));
        }
        let n = (bytes[0] - 63) as usize;
        let mut g = Graph::new(n)?;
        let needed_bits = n * (n - 1) / 2;
        let body = &bytes[1..];
        if body.len() != needed_bits.div_ceil(6) {
            return Err(Error::Parse(format!(
                "graph6 body has {} bytes, expected {}",
                body.len(),
                needed_bits.div_ceil(6)
            )));
        }
        let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bit(k) {
                    g.add_edge(i + 1, j + 1)?;
                }
                k += 1;
            }
        }
        Ok(g)
    }

    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut bits = Vec::with_capacity(n * n / 2);
        for j in 1..n {
            for i in 0..j {
                bits.push(self.has_edge(i + 1, j + 1));
            }
        }
        let mut out = String::new();
        out.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let mut v = 0u8;
            for (k, &b) in chunk.iter().enumerate() {
                if b {
                    v |= 1 << (5 - k);
                }
            }
            out.push((v + 63) as char);
        }
        out
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Graph> {
        Graph::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_edge_list_with_comments() {
        let g = Graph::parse("# a path\n3\n1 2 # first\n\n2 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(Graph::parse("3\n2 1\n").is_err());
        assert!(Graph::parse("3\n1 1\n").is_err());
        assert!(Graph::parse("3\n1 4\n").is_err());
        assert!(Graph::parse("3\n1\n").is_err());
        assert!(Graph::parse("").is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // Standard encodings: the path 1-2-3 is "Bg", K4 is "C~".
        assert_eq!(Graph::parse("Bg").unwrap(), Graph::path(3).unwrap());
        assert_eq!(Graph::path(3).unwrap().to_graph6(), "Bg");
        assert_eq!(Graph::complete(4).unwrap().to_graph6(), "C~");
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(Graph::from_graph6(&c5.to_graph6()).unwrap(), c5);
    }
}
