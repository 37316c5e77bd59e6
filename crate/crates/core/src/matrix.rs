//! Compressed storage for general tridiagonal matrices.
//!
//! Only the three nonzero diagonals are kept: the main diagonal `d`
//! (length `n`), the superdiagonal `a` and the subdiagonal `b` (length
//! `n - 1` each), so an order-`n` matrix occupies `3n - 2` scalars.
//!
//! ```text
//! [ d1  a1                ]
//! [ b1  d2  a2            ]
//! [     b2  d3  ..        ]
//! [         ..  ..  a_n-1 ]
//! [            b_n-1  d_n ]
//! ```

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest order accepted by [`TridiagonalMatrix::to_dense`] by default.
pub const DENSE_LIMIT: usize = 2048;

/// A real tridiagonal matrix stored as three vectors.
///
/// Immutable after construction; every entry is finite.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalMatrix {
    d: Vec<f64>,
    a: Vec<f64>,
    b: Vec<f64>,
}

impl TridiagonalMatrix {
    /// Validates and wraps the main diagonal `d`, superdiagonal `a` and
    /// subdiagonal `b`.
    pub fn new(d: Vec<f64>, a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::Empty);
        }
        let off = d.len() - 1;
        for (name, v) in [("a", &a), ("b", &b)] {
            if v.len() != off {
                return Err(Error::DimensionMismatch {
                    vector: name,
                    expected: off,
                    found: v.len(),
                });
            }
        }
        for (name, v) in [("d", &d), ("a", &a), ("b", &b)] {
            if let Some(index) = v.iter().position(|x| !x.is_finite()) {
                return Err(Error::NonFinite {
                    vector: name,
                    index: index + 1,
                });
            }
        }
        Ok(Self { d, a, b })
    }

    /// Order of the matrix.
    pub fn n(&self) -> usize {
        self.d.len()
    }

    /// Main diagonal `d_1..d_n`.
    pub fn diag(&self) -> &[f64] {
        &self.d
    }

    /// Superdiagonal `a_1..a_{n-1}`.
    pub fn upper(&self) -> &[f64] {
        &self.a
    }

    /// Subdiagonal `b_1..b_{n-1}`.
    pub fn lower(&self) -> &[f64] {
        &self.b
    }

    /// Number of scalars actually stored (`3n - 2`).
    pub fn stored_len(&self) -> usize {
        self.d.len() + self.a.len() + self.b.len()
    }

    /// Entry `t_ij` with 0-based indices; zero outside the band.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        if i == j {
            self.d[i]
        } else if j == i + 1 {
            self.a[i]
        } else if i == j + 1 {
            self.b[j]
        } else {
            0.0
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    /// 1-based index of the first `i` with `a_i != b_i`.
    pub fn first_asymmetry(&self) -> Option<usize> {
        self.a
            .iter()
            .zip(&self.b)
            .position(|(x, y)| x != y)
            .map(|i| i + 1)
    }

    /// Expands into a full row-major grid, refusing orders above [`DENSE_LIMIT`].
    pub fn to_dense(&self) -> Result<Vec<Vec<f64>>> {
        self.to_dense_with_limit(DENSE_LIMIT)
    }

    pub fn to_dense_with_limit(&self, limit: usize) -> Result<Vec<Vec<f64>>> {
        let n = self.n();
        if n > limit {
            return Err(Error::DenseLimit { n, limit });
        }
        let mut g = vec![vec![0.0; n]; n];
        for i in 0..n {
            g[i][i] = self.d[i];
            if i + 1 < n {
                g[i][i + 1] = self.a[i];
                g[i + 1][i] = self.b[i];
            }
        }
        Ok(g)
    }

    /// Reads the three diagonals back out of a dense grid. Entries outside
    /// the band are ignored.
    pub fn from_dense(g: &[Vec<f64>]) -> Result<Self> {
        let n = g.len();
        for (row, r) in g.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare {
                    row,
                    len: r.len(),
                    expected: n,
                });
            }
        }
        let d = (0..n).map(|i| g[i][i]).collect();
        let a = (1..n).map(|i| g[i - 1][i]).collect();
        let b = (1..n).map(|i| g[i][i - 1]).collect();
        Self::new(d, a, b)
    }

    /// Parses the four-line text format: `n`, then `d`, `a` and `b` as
    /// whitespace-separated decimals. The `a` and `b` lines may be blank or
    /// absent when `n = 1`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let mut next = |line: usize| lines.next().map(str::trim).ok_or(line);

        let n_line = next(1).map_err(|_| parse_err(1, "missing order line"))?;
        let n: usize = n_line
            .parse()
            .map_err(|_| parse_err(1, format!("invalid order {n_line:?}")))?;
        if n == 0 {
            return Err(parse_err(1, "order must be at least 1"));
        }

        let d_line = next(2).map_err(|_| parse_err(2, "missing main diagonal"))?;
        let d = parse_row(d_line, n, 2)?;

        let (a, b) = if n == 1 {
            for line in 3..=4 {
                if let Ok(rest) = next(line) {
                    if !rest.is_empty() {
                        return Err(parse_err(line, "off-diagonal line must be empty for n = 1"));
                    }
                }
            }
            (Vec::new(), Vec::new())
        } else {
            let a_line = next(3).map_err(|_| parse_err(3, "missing superdiagonal"))?;
            let a = parse_row(a_line, n - 1, 3)?;
            let b_line = next(4).map_err(|_| parse_err(4, "missing subdiagonal"))?;
            let b = parse_row(b_line, n - 1, 4)?;
            (a, b)
        };

        for (line, rest) in (5..).zip(lines) {
            if !rest.trim().is_empty() {
                return Err(parse_err(line, "unexpected trailing content"));
            }
        }

        Self::new(d, a, b).map_err(|e| match e {
            Error::NonFinite { vector, index } => parse_err(
                match vector {
                    "d" => 2,
                    "a" => 3,
                    _ => 4,
                },
                format!("non-finite value at position {index}"),
            ),
            other => other,
        })
    }

    /// Writes the text format accepted by [`TridiagonalMatrix::parse`].
    /// Scalars use the shortest representation that round-trips.
    pub fn write_text<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "{}", self.n())?;
        writeln!(w, "{}", join(&self.d))?;
        writeln!(w, "{}", join(&self.a))?;
        writeln!(w, "{}", join(&self.b))
    }
}

impl FromStr for TridiagonalMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for TridiagonalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n())?;
        writeln!(f, "{}", join(&self.d))?;
        writeln!(f, "{}", join(&self.a))?;
        writeln!(f, "{}", join(&self.b))
    }
}

/// Space-separated shortest round-trip rendering of a vector.
pub fn join(v: &[f64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_row(line: &str, expected: usize, lineno: usize) -> Result<Vec<f64>> {
    let values = line
        .split_whitespace()
        .map(|tok| {
            tok.parse::<f64>()
                .map_err(|_| parse_err(lineno, format!("invalid number {tok:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if values.len() != expected {
        return Err(parse_err(
            lineno,
            format!("expected {expected} values, found {}", values.len()),
        ));
    }
    Ok(values)
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}
