//! Bit-exact graph6 reader and writer.
//!
//! graph6 encodes a simple undirected graph as one printable ASCII
//! line: a size field (one byte `n+63` for n ≤ 62, or `'~'` plus three
//! bytes of an 18-bit value for larger n), followed by the
//! upper-triangle adjacency bits read column by column
//! (x_{0,1}; x_{0,2}, x_{1,2}; x_{0,3}, …), packed big-endian into
//! 6-bit groups offset by 63. Nonzero padding bits and non-canonical
//! size fields are rejected rather than repaired, because silent repair
//! would hide corruption in large corpus files.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// Optional header some corpus files carry on the first line.
pub const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line (the `>>graph6<<` prefix is tolerated).
pub fn decode_graph6(line: &str) -> Result<Graph> {
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty line".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!("byte {b} outside printable range 63..=126")));
    }
    let (n, body) = decode_size(bytes)?;
    if n == 0 {
        return Err(Error::MalformedGraph6("graph of order 0".into()));
    }
    if n > MAX_VERTICES {
        return Err(Error::Unsupported(format!("order {n} exceeds the 64-vertex limit")));
    }
    let nbits = n * (n - 1) / 2;
    let expect_bytes = nbits.div_ceil(6);
    if body.len() != expect_bytes {
        return Err(Error::MalformedGraph6(format!(
            "body holds {} bytes, order {n} needs {expect_bytes}",
            body.len()
        )));
    }
    let mut adj = vec![0u64; n];
    let mut bit_index = 0usize;
    for &b in body {
        let group = b - 63;
        for k in 0..6 {
            let bit = (group >> (5 - k)) & 1;
            if bit_index < nbits {
                if bit == 1 {
                    let (i, j) = triangle_coords(bit_index);
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            } else if bit == 1 {
                return Err(Error::MalformedGraph6("nonzero padding bit".into()));
            }
            bit_index += 1;
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// Maps a position in the column-wise upper-triangle bit string back to
/// its matrix coordinates (i < j).
fn triangle_coords(mut index: usize) -> (usize, usize) {
    let mut j = 1usize;
    while index >= j {
        index -= j;
        j += 1;
    }
    (index, j)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    if bytes[0] != b'~' {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == b'~' {
        return Err(Error::Unsupported("8-byte size field (order ≥ 258048)".into()));
    }
    if bytes.len() < 4 {
        return Err(Error::MalformedGraph6("truncated 4-byte size field".into()));
    }
    let n = ((bytes[1] - 63) as usize) << 12 | ((bytes[2] - 63) as usize) << 6
        | (bytes[3] - 63) as usize;
    if n <= 62 {
        // the format defines the long form only for n ≥ 63
        return Err(Error::MalformedGraph6(format!("non-canonical long size field for order {n}")));
    }
    Ok((n, &bytes[4..]))
}

/// Encodes a graph as its canonical graph6 line: shortest size field,
/// zero padding bits, no trailing newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let nbits = n * (n - 1) / 2;
    let mut group = 0u8;
    let mut filled = 0u8;
    for index in 0..nbits {
        let (i, j) = triangle_coords(index);
        group = group << 1 | u8::from(g.has_edge(i, j));
        filled += 1;
        if filled == 6 {
            out.push(group + 63);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("all bytes printable ASCII")
}

/// Line-by-line graph6 reader with constant memory per line. Yields
/// each decoded graph with its 1-based line number; a leading
/// `>>graph6<<` header (alone or prefixed to the first graph) is
/// skipped; blank lines are ignored.
pub struct Graph6Reader<R: BufRead> {
    lines: std::io::Lines<R>,
    line_no: usize,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(reader: R) -> Self {
        Graph6Reader { lines: reader.lines(), line_no: 0 }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<(usize, Graph)>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let line = match self.lines.next()? {
                Ok(line) => line,
                Err(e) => return Some(Err(Error::Corpus(format!("read error: {e}")))),
            };
            self.line_no += 1;
            let mut content = line.as_str();
            if self.line_no == 1 {
                content = content.strip_prefix(GRAPH6_HEADER).unwrap_or(content);
            }
            if content.trim().is_empty() {
                continue;
            }
            let line_no = self.line_no;
            return Some(decode_graph6(content).map(|g| (line_no, g)).map_err(|e| match e {
                Error::MalformedGraph6(reason) => {
                    Error::MalformedGraph6(format!("line {line_no}: {reason}"))
                }
                other => other,
            }));
        }
    }
}
