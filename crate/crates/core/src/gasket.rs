//! The Sierpinski gasket as Pascal's triangle mod 2.
//!
//! Row `r`, position `p` of the gasket is present iff `C(r, p)` is odd, which
//! by Kummer's theorem happens iff adding `p` and `r - p` in binary produces
//! no carry, i.e. `p & (r - p) == 0`. The same rows also come out of the
//! local rule "present iff exactly one of the two cells above is present".

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GasketCoord {
    pub row: u64,
    pub pos: u64,
}

impl GasketCoord {
    pub fn new(row: u64, pos: u64) -> Result<GasketCoord> {
        if pos > row {
            return Err(Error::PositionOutOfRange {
                row,
                pos: pos as i64,
            });
        }
        Ok(GasketCoord { row, pos })
    }

    pub fn in_gasket(&self) -> bool {
        self.pos & (self.row - self.pos) == 0
    }
}

/// Exponent of the largest power of two dividing an integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TwoAdicOrder {
    Finite(u32),
    /// The order of zero.
    Infinite,
}

impl fmt::Display for TwoAdicOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoAdicOrder::Finite(v) => write!(f, "{v}"),
            TwoAdicOrder::Infinite => f.write_str("inf"),
        }
    }
}

pub fn nu2(n: i64) -> TwoAdicOrder {
    if n == 0 {
        TwoAdicOrder::Infinite
    } else {
        TwoAdicOrder::Finite(n.trailing_zeros())
    }
}

pub fn binomial_is_odd(row: u64, pos: i64) -> Result<bool> {
    if pos < 0 || pos as u64 > row {
        return Err(Error::PositionOutOfRange { row, pos });
    }
    let pos = pos as u64;
    Ok(pos & (row - pos) == 0)
}

/// One gasket row as a bit set over positions `0..=row`.
#[derive(Clone, PartialEq, Eq)]
pub struct GasketRow {
    row: u64,
    words: Vec<u64>,
}

impl GasketRow {
    fn empty(row: u64) -> GasketRow {
        GasketRow {
            row,
            words: vec![0; (row / 64 + 1) as usize],
        }
    }

    fn set(&mut self, pos: u64) {
        self.words[(pos / 64) as usize] |= 1 << (pos % 64);
    }

    pub fn row(&self) -> u64 {
        self.row
    }

    pub fn contains(&self, pos: u64) -> bool {
        pos <= self.row && self.words[(pos / 64) as usize] >> (pos % 64) & 1 == 1
    }

    /// Number of present positions.
    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Present positions in increasing order.
    pub fn positions(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let bit = w.trailing_zeros() as u64;
                    w &= w - 1;
                    i as u64 * 64 + bit
                })
            })
        })
    }

    /// The next row under the local rule: position `p` is present iff
    /// exactly one of `p - 1` and `p` is present here.
    fn next(&self) -> GasketRow {
        let row = self.row + 1;
        let mut words = vec![0u64; (row / 64 + 1) as usize];
        let mut carry = 0u64;
        for (i, &w) in self.words.iter().enumerate() {
            words[i] = w ^ ((w << 1) | carry);
            carry = w >> 63;
        }
        if let Some(last) = words.get_mut(self.words.len()) {
            *last = carry;
        }
        GasketRow { row, words }
    }
}

impl fmt::Debug for GasketRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GasketRow({}: ", self.row)?;
        f.debug_set().entries(self.positions()).finish()?;
        f.write_str(")")
    }
}

/// Row `row` of the gasket from the carry-free condition. Runs in time
/// proportional to the number of present positions (the submasks of `row`).
pub fn gasket_row(row: u64) -> GasketRow {
    let mut out = GasketRow::empty(row);
    let mut sub = row;
    loop {
        out.set(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & row;
    }
    out
}

/// Rows `0..=n` grown with the local rule from a single present cell.
pub fn gasket_generate(n: u64) -> Vec<GasketRow> {
    let mut first = GasketRow::empty(0);
    first.set(0);
    let mut rows = vec![first];
    for _ in 0..n {
        let next = rows.last().unwrap().next();
        rows.push(next);
    }
    rows
}

/// Whether the square cell `(x, y)` eventually becomes live: the patriarch
/// by definition, otherwise iff the 2-adic orders of `x` and `y` differ
/// (with the order of 0 infinite).
pub fn eventually_alive_square(x: i64, y: i64) -> bool {
    (x == 0 && y == 0) || nu2(x) != nu2(y)
}
