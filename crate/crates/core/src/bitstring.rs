//! Fixed-length binary words with the coordinatewise order.
//!
//! A [`BitString`] of length `n` packs its coordinates into one `u64`: the
//! leftmost character of the textual form `b_1 b_2 … b_n` is the most
//! significant of the `n` low bits, so `"0011"` has value 3 and ascending
//! value order is the usual lexicographic order of the strings.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_LEN: usize = 64;

/// Upper bound on the size of a materialized downward closure.
pub const CLOSURE_LIMIT: usize = 1 << 24;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString {
    len: u8,
    bits: u64,
}

fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl BitString {
    /// Packs `value` into a word of `len` coordinates.
    pub fn new(value: u64, len: usize) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::LengthTooLarge(len));
        }
        if value & !mask(len) != 0 {
            return Err(Error::Parameter(format!("value {value} does not fit in {len} bits")));
        }
        Ok(Self { len: len as u8, bits: value })
    }

    /// The length-0 word, label of the one-vertex graph.
    pub const fn empty() -> Self {
        Self { len: 0, bits: 0 }
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::new(0, len)
    }

    pub fn ones(len: usize) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::LengthTooLarge(len));
        }
        Ok(Self { len: len as u8, bits: mask(len) })
    }

    /// The word with a single 1 at coordinate `i` (0-based from the left).
    pub fn unit(i: usize, len: usize) -> Result<Self> {
        Self::zeros(len)?.with_bit(i, true)
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn value(self) -> u64 {
        self.bits
    }

    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    fn shift(self, i: usize) -> usize {
        self.len() - 1 - i
    }

    fn check_coordinate(self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::CoordinateOutOfRange { coordinate: i, width: self.len() })
        }
    }

    /// Coordinate `i`, counted from 0 at the left.
    pub fn bit(self, i: usize) -> bool {
        assert!(i < self.len(), "coordinate {i} out of range for length {}", self.len);
        self.bits >> self.shift(i) & 1 == 1
    }

    pub fn with_bit(self, i: usize, value: bool) -> Result<Self> {
        self.check_coordinate(i)?;
        let m = 1u64 << self.shift(i);
        let bits = if value { self.bits | m } else { self.bits & !m };
        Ok(Self { bits, ..self })
    }

    pub fn flipped(self, i: usize) -> Result<Self> {
        self.check_coordinate(i)?;
        Ok(Self { bits: self.bits ^ (1u64 << self.shift(i)), ..self })
    }

    /// Drops coordinate `i`, shortening the word by one.
    pub fn removed(self, i: usize) -> Result<Self> {
        self.check_coordinate(i)?;
        let s = self.shift(i);
        let low = self.bits & mask(s);
        let high = self.bits >> (s + 1) << s;
        Ok(Self { len: self.len - 1, bits: high | low })
    }

    /// Puts `value` in front as the new leftmost coordinate.
    pub fn prepended(self, value: bool) -> Result<Self> {
        if self.len() == MAX_LEN {
            return Err(Error::LengthTooLarge(MAX_LEN + 1));
        }
        Ok(Self { len: self.len + 1, bits: self.bits | (u64::from(value) << self.len) })
    }

    fn same_len(self, other: Self) -> Result<()> {
        if self.len == other.len {
            Ok(())
        } else {
            Err(Error::LengthMismatch(self.len(), other.len()))
        }
    }

    /// `self ≤ other` coordinatewise.
    pub fn leq(self, other: Self) -> Result<bool> {
        self.same_len(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    pub fn hamming_distance(self, other: Self) -> Result<u32> {
        self.same_len(other)?;
        Ok((self.bits ^ other.bits).count_ones())
    }

    /// Words obtained by clearing exactly one 1-coordinate.
    pub(crate) fn lower_covers(self) -> impl Iterator<Item = Self> {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let top = 63 - rest.leading_zeros();
            rest &= !(1u64 << top);
            Some(Self { bits: self.bits & !(1u64 << top), ..self })
        })
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > MAX_LEN {
            return Err(Error::LengthTooLarge(s.len()));
        }
        let mut bits = 0u64;
        for c in s.chars() {
            bits = bits << 1
                | match c {
                    '0' => 0,
                    '1' => 1,
                    _ => return Err(Error::InvalidBitString(s.to_string())),
                };
        }
        Ok(Self { len: s.len() as u8, bits })
    }
}

pub(crate) fn check_uniform(words: &[BitString], n: usize) -> Result<()> {
    match words.iter().find(|w| w.len() != n) {
        Some(w) => Err(Error::LengthMismatch(n, w.len())),
        None => Ok(()),
    }
}

/// `{u ∈ B^n | u ≤ x for some x ∈ generators}`, ascending.
///
/// Computed by breadth-first descent from the maximal generators, clearing
/// one 1-bit at a time, so the cost follows the size of the result.
pub fn downward_closure(generators: &[BitString], n: usize) -> Result<BTreeSet<BitString>> {
    check_uniform(generators, n)?;
    let mut seen: HashSet<BitString> = HashSet::new();
    let mut frontier: Vec<BitString> = reduce_generators(generators)?;
    // The closure holds the whole subcube below each generator.
    if let Some(heaviest) = frontier.iter().map(|w| w.weight()).max() {
        let size = 1usize.checked_shl(heaviest).unwrap_or(usize::MAX);
        if size > CLOSURE_LIMIT {
            return Err(Error::ScaleGuard { what: "downward closure", size, limit: CLOSURE_LIMIT });
        }
    }
    seen.extend(frontier.iter().copied());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in frontier {
            for lower in w.lower_covers() {
                if seen.insert(lower) {
                    if seen.len() > CLOSURE_LIMIT {
                        return Err(Error::ScaleGuard {
                            what: "downward closure",
                            size: seen.len(),
                            limit: CLOSURE_LIMIT,
                        });
                    }
                    next.push(lower);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.into_iter().collect())
}

/// Maximal elements of `generators`: an antichain with the same closure. Ascending.
pub fn reduce_generators(generators: &[BitString]) -> Result<Vec<BitString>> {
    let Some(first) = generators.first() else {
        return Ok(Vec::new());
    };
    check_uniform(generators, first.len())?;
    let mut sorted = generators.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let maximal =
        sorted.iter().filter(|&&x| !sorted.iter().any(|&y| y != x && x.bits & !y.bits == 0)).copied().collect();
    Ok(maximal)
}

pub fn is_downward_closed(labels: &[BitString], n: usize) -> Result<bool> {
    check_uniform(labels, n)?;
    Ok(closure_violation(labels).is_none())
}

/// First pair `(missing, present)` with `missing ≤ present`, `present` a
/// label and `missing` not.
///
/// Labels are scanned from the largest value down and the cleared coordinate
/// from the left, so the witness sits as high in the order as possible.
pub fn closure_violation(labels: &[BitString]) -> Option<(BitString, BitString)> {
    let set: HashSet<BitString> = labels.iter().copied().collect();
    let mut sorted: Vec<BitString> = set.iter().copied().collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.into_iter().find_map(|w| w.lower_covers().find(|lower| !set.contains(lower)).map(|lower| (lower, w)))
}
