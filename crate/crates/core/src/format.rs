//! Text formats: graph6 (undirected) and a plain edge list.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
/// Largest order accepted by the parser; adjacency is stored densely.
pub const MAX_ORDER: usize = 1 << 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty graph6 string")]
    EmptyInput,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range [63, 126]")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("malformed graph6 length prefix")]
    MalformedLength,
    #[error("{0} unexpected trailing bytes after graph6 edge data")]
    TrailingGarbage(usize),
    #[error("graph6 order {0} exceeds the supported maximum")]
    TooLarge(usize),
    #[error("nonzero padding bits in final graph6 byte")]
    NonzeroPadding,
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn data_bytes(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Serializes `g` as a graph6 line (without header or newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(8 + data_bytes(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + BIAS));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + BIAS));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses one graph6 line.
///
/// A leading `>>graph6<<` header and surrounding whitespace are ignored. Edge
/// data shorter than the declared order requires is zero-filled, so `"D?"`
/// reads as the edgeless graph on five vertices; data beyond it is rejected.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::EmptyInput);
    }
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(BIAS..=126).contains(&b))
    {
        return Err(FormatError::ByteOutOfRange { offset, byte });
    }
    let six = |b: &[u8]| b.iter().fold(0usize, |acc, &x| (acc << 6) | (x - BIAS) as usize);
    let (n, rest) = match bytes {
        [126, 126, tail @ ..] => {
            if tail.len() < 6 {
                return Err(FormatError::MalformedLength);
            }
            (six(&tail[..6]), &tail[6..])
        }
        [126, tail @ ..] => {
            if tail.len() < 3 {
                return Err(FormatError::MalformedLength);
            }
            (six(&tail[..3]), &tail[3..])
        }
        [first, tail @ ..] => ((first - BIAS) as usize, tail),
        [] => unreachable!(),
    };
    if n > MAX_ORDER {
        return Err(FormatError::TooLarge(n));
    }
    let expected = data_bytes(n);
    if rest.len() > expected {
        return Err(FormatError::TrailingGarbage(rest.len() - expected));
    }
    let total_bits = n * n.saturating_sub(1) / 2;
    let bit = |k: usize| -> bool {
        rest.get(k / 6)
            .is_some_and(|b| (b - BIAS) >> (5 - k % 6) & 1 == 1)
    };
    if (total_bits..expected * 6).any(bit) {
        return Err(FormatError::NonzeroPadding);
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.try_add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parses every nonblank line of a graph6 file.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, FormatError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && *l != HEADER)
        .map(parse_graph6)
        .collect()
}

/// Parses the edge-list format: a header line `n m`, then `m` lines `u v`
/// with 0-based ids. Everything after `#` on a line is ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, message: String| FormatError::EdgeList { line, message };
    let pair = |line: usize, l: &str| -> Result<(usize, usize), FormatError> {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(err(line, format!("expected two non-negative integers, got `{l}`"))),
        }
    };
    let (line, header) = lines.next().ok_or_else(|| err(0, "missing `n m` header".into()))?;
    let (n, m) = pair(line, header)?;
    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        g.try_add_edge(u, v).map_err(|e| err(line, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(err(line, format!("header declares {m} edges, found {seen}")));
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use proptest::prelude::*;

    #[test]
    fn documented_examples() {
        assert_eq!(parse_graph6("D?").unwrap(), gen_empty(5));
        assert_eq!(parse_graph6("A_").unwrap(), gen_complete(2).unwrap());
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), gen_complete(2).unwrap());
        assert_eq!(to_graph6(&gen_empty(5)), "D??");
        assert_eq!(to_graph6(&gen_complete(2).unwrap()), "A_");
    }

    #[test]
    fn known_encodings() {
        // petgraph's test graph: a-c, a-e, b-d, d-e on 5 vertices
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(to_graph6(&gen_empty(0)), "?");
        assert_eq!(to_graph6(&gen_complete(4).unwrap()), "C~");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn long_length_prefix() {
        let g = gen_path(70).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@E"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_graph6(""), Err(FormatError::EmptyInput));
        assert_eq!(parse_graph6("~?"), Err(FormatError::MalformedLength));
        assert_eq!(parse_graph6("~~~~~~~~"), Err(FormatError::TooLarge((1 << 36) - 1)));
        assert_eq!(parse_graph6("A_?"), Err(FormatError::TrailingGarbage(1)));
        assert_eq!(
            parse_graph6("A\x7f"),
            Err(FormatError::ByteOutOfRange { offset: 1, byte: 0x7f })
        );
        assert_eq!(parse_graph6("A!").unwrap_err(), FormatError::ByteOutOfRange { offset: 1, byte: b'!' });
        // n = 2 uses one bit; 'o' - 63 = 110000 sets a padding bit
        assert_eq!(parse_graph6("Ao"), Err(FormatError::NonzeroPadding));
    }

    #[test]
    fn multi_line_files() {
        let gs = parse_graph6_lines(">>graph6<<A_\n\nBw\n").unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[1], gen_complete(3).unwrap());
    }

    #[test]
    fn edge_list_parsing() {
        let g = parse_edge_list("# a path\n3 2\n0 1 # first\n1 2\n").unwrap();
        assert_eq!(g, gen_path(3).unwrap());
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(FormatError::EdgeList { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n1 0\n"),
            Err(FormatError::EdgeList { line: 3, .. })
        ));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(FormatError::EdgeList { line: 2, .. })));
        assert!(parse_edge_list("").is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=80).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n);
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.try_add_edge(i, j).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let s = to_graph6(&g);
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
            prop_assert_eq!(to_graph6(&parse_graph6(&s).unwrap()), s);
        }
    }
}
