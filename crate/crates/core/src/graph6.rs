//! Reader and writer for the graph6 ASCII format.
//!
//! The format packs the upper triangle of the adjacency matrix in the order
//! (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... into 6-bit groups, each
//! offset by 63 into the printable range `?`..`~`. The vertex count is a
//! one-byte header for `n <= 62`, a `~` followed by three bytes (18 bits)
//! for `n <= 258047`, and `~~` followed by six bytes (36 bits) beyond that.
//! Decoding is strict: every byte must be in range, the payload must have
//! exactly the expected length, and padding bits must be zero, so
//! encode/decode round-trips bit-exactly. An optional `>>graph6<<` prefix
//! is tolerated on input.

use crate::graph::Graph;

const OFFSET: u8 = 63;
const HIGH: u8 = 126; // '~'
const HEADER: &str = ">>graph6<<";

/// Why a graph6 string failed to parse. `offset` is the byte position in the
/// input after any `>>graph6<<` prefix has been stripped.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte 0x{byte:02x} at offset {offset} outside the graph6 range '?'..'~'")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("input ends inside the vertex-count header")]
    TruncatedHeader,
    #[error("adjacency payload has {got} bytes, expected {expected} for n={n}")]
    PayloadLength { n: usize, expected: usize, got: usize },
    #[error("nonzero padding bits in the final payload byte")]
    NonzeroPadding,
    #[error("vertex count {n} exceeds the supported maximum {max}")]
    TooLarge { n: u64, max: u64 },
}

/// Largest vertex count the decoder will materialize. Adjacency storage is
/// Θ(n²) bits, so unboundedly large headers are refused rather than allowed
/// to exhaust memory.
pub const MAX_VERTICES: u64 = 100_000;

fn six_bits(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    let byte = bytes[offset];
    if !(OFFSET..=HIGH).contains(&byte) {
        return Err(Graph6Error::ByteOutOfRange { offset, byte });
    }
    Ok((byte - OFFSET) as u64)
}

/// Parses one graph6 token (no trailing newline) into a [`Graph`].
pub fn parse_graph6(input: &str) -> Result<Graph, Graph6Error> {
    let stripped = input.strip_prefix(HEADER).unwrap_or(input);
    let bytes = stripped.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    // Vertex count.
    let (n, header_len) = if bytes[0] != HIGH {
        (six_bits(bytes, 0)?, 1)
    } else if bytes.len() >= 2 && bytes[1] != HIGH {
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedHeader);
        }
        let mut n = 0u64;
        for i in 1..4 {
            n = n << 6 | six_bits(bytes, i)?;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Graph6Error::TruncatedHeader);
        }
        let mut n = 0u64;
        for i in 2..8 {
            n = n << 6 | six_bits(bytes, i)?;
        }
        (n, 8)
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge { n, max: MAX_VERTICES });
    }
    let n = n as usize;

    // Payload length check before any allocation.
    let nbits = n.saturating_sub(1) * n / 2;
    let expected = nbits.div_ceil(6);
    let payload = &bytes[header_len..];
    if payload.len() != expected {
        return Err(Graph6Error::PayloadLength {
            n,
            expected,
            got: payload.len(),
        });
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    let mut iter = UpperTriangle::new(n);
    for (k, _) in payload.iter().enumerate() {
        let group = six_bits(bytes, header_len + k)?;
        for shift in (0..6).rev() {
            let b = group >> shift & 1;
            if bit < nbits {
                let (i, j) = iter.next().expect("pair iterator covers nbits");
                if b == 1 {
                    g.add_edge(i, j);
                }
            } else if b != 0 {
                return Err(Graph6Error::NonzeroPadding);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph as a graph6 token (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();

    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(HIGH);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(HIGH);
        out.push(HIGH);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }

    let mut group = 0u8;
    let mut filled = 0u8;
    for (i, j) in UpperTriangle::new(n) {
        group = group << 1 | u8::from(g.has_edge(i, j));
        filled += 1;
        if filled == 6 {
            out.push(group + OFFSET);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Upper-triangle pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ...
struct UpperTriangle {
    n: usize,
    i: usize,
    j: usize,
}

impl UpperTriangle {
    fn new(n: usize) -> Self {
        UpperTriangle { n, i: 0, j: 1 }
    }
}

impl Iterator for UpperTriangle {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<(usize, usize)> {
        if self.j >= self.n {
            return None;
        }
        let pair = (self.i, self.j);
        self.i += 1;
        if self.i == self.j {
            self.i = 0;
            self.j += 1;
        }
        Some(pair)
    }
}
