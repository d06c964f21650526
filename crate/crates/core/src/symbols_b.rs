//! Type-B symbols: odd-length sequences whose odd- and even-position entries
//! form two strictly increasing rows, with 0 appearing at most once.
//!
//! The rank of `(a_1, ..., a_{2m+1})` is `Σ a_i − m²`. Two symbols of the
//! same rank lie in the same family exactly when they have the same entries
//! up to permutation.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::family::Family;
use crate::limits::Limits;
use crate::text::format_entries;

/// Which of the two interleaved rows of a symbol an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Row {
    /// Entries at positions 1, 3, 5, ...
    Odd,
    /// Entries at positions 2, 4, 6, ...
    Even,
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Row::Odd => f.write_str("odd"),
            Row::Even => f.write_str("even"),
        }
    }
}

/// Errors shared by the type-B and type-D symbol calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("a type-B symbol needs odd length, got {0}")]
    EvenLength(usize),
    #[error("a type-D symbol needs even length at least 2, got {0}")]
    OddLength(usize),
    /// `position` is the 1-based index of the earlier entry of the offending
    /// pair, i.e. `a_position >= a_{position+2}`.
    #[error("{row} row not strictly increasing at position {position}")]
    RowNotIncreasing { row: Row, position: usize },
    #[error("0 appears twice")]
    ZeroTwice,
    #[error("value {0} appears more than twice")]
    ValueMoreThanTwice(u32),
    #[error("entry sum {sum} is smaller than the offset {offset}")]
    NegativeRank { sum: u64, offset: u64 },
    #[error("largest single entry {value} sits at odd position {position}")]
    ConditionDViolated { value: u32, position: usize },
    #[error("symbol has no entry occurring once (double-primed)")]
    NotPrime,
    #[error("rank {requested} exceeds the guardrail {limit}")]
    ResourceLimit { requested: u32, limit: u32 },
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

/// A validated type-B symbol.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BSymbol {
    entries: Vec<u32>,
    rank: u32,
}

impl BSymbol {
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Half of `len − 1`.
    pub fn m(&self) -> usize {
        (self.entries.len() - 1) / 2
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Sorted multiset of entries; the family key.
    pub fn key(&self) -> Vec<u32> {
        let mut k = self.entries.clone();
        k.sort_unstable();
        k
    }

    pub fn descent_data(&self) -> DescentData {
        descent_data(self)
    }

    pub fn is_special(&self) -> bool {
        is_special(self)
    }
}

impl fmt::Display for BSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_entries(&self.entries))
    }
}

impl Serialize for BSymbol {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Once-occurring entries of a symbol and the positions where they descend.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentData {
    /// Entries occurring exactly once, in position order.
    pub singles: Vec<u32>,
    /// 1-based `j` with `singles[j] > singles[j+1]`.
    pub descent_set: Vec<usize>,
    /// `(len(singles) − 1) / 2`.
    pub p: usize,
}

pub(crate) fn check_rows(entries: &[u32]) -> Result<(), SymbolError> {
    for i in 0..entries.len().saturating_sub(2) {
        if entries[i] >= entries[i + 2] {
            let row = if i % 2 == 0 { Row::Odd } else { Row::Even };
            return Err(SymbolError::RowNotIncreasing {
                row,
                position: i + 1,
            });
        }
    }
    Ok(())
}

/// Rejects a doubled zero and any value with three or more occurrences.
pub(crate) fn check_multiplicities(entries: &[u32]) -> Result<(), SymbolError> {
    for (value, count) in multiplicities(entries) {
        if count > 2 {
            return Err(SymbolError::ValueMoreThanTwice(value));
        }
        if value == 0 && count == 2 {
            return Err(SymbolError::ZeroTwice);
        }
    }
    Ok(())
}

pub(crate) fn multiplicities(entries: &[u32]) -> BTreeMap<u32, usize> {
    let mut counts = BTreeMap::new();
    for &a in entries {
        *counts.entry(a).or_insert(0) += 1;
    }
    counts
}

pub(crate) fn entry_sum(entries: &[u32]) -> u64 {
    entries.iter().map(|&a| a as u64).sum()
}

/// The once-occurring entries of each row, interleaved odd row first, and
/// their 1-based descent positions.
///
/// This is the sequence left after deleting every doubled value from both
/// rows. Reading the singles in their original positions instead (see
/// [`positional_singles`]) agrees on families without doubled values but
/// can give several members of one family an empty descent set.
pub(crate) fn singles_and_descents(entries: &[u32]) -> (Vec<u32>, Vec<usize>) {
    let counts = multiplicities(entries);
    let row = |start: usize| -> Vec<u32> {
        entries
            .iter()
            .skip(start)
            .step_by(2)
            .copied()
            .filter(|a| counts[a] == 1)
            .collect()
    };
    let singles = interleave(&row(0), &row(1));
    let descents = descent_positions(&singles);
    (singles, descents)
}

fn descent_positions(seq: &[u32]) -> Vec<usize> {
    seq.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(j, _)| j + 1)
        .collect()
}

/// Once-occurring entries in their original position order, with descent
/// positions. Kept for comparison with [`descent_data`].
pub fn positional_singles(entries: &[u32]) -> (Vec<u32>, Vec<usize>) {
    let counts = multiplicities(entries);
    let singles: Vec<u32> = entries.iter().copied().filter(|a| counts[a] == 1).collect();
    let descents = descent_positions(&singles);
    (singles, descents)
}

pub fn validate_b(entries: &[u32]) -> Result<BSymbol, SymbolError> {
    if entries.len().is_multiple_of(2) {
        return Err(SymbolError::EvenLength(entries.len()));
    }
    check_rows(entries)?;
    check_multiplicities(entries)?;
    let m = ((entries.len() - 1) / 2) as u64;
    let sum = entry_sum(entries);
    let offset = m * m;
    if sum < offset {
        return Err(SymbolError::NegativeRank { sum, offset });
    }
    let rank = u32::try_from(sum - offset).map_err(|_| {
        SymbolError::DomainViolation(format!("rank {} does not fit in u32", sum - offset))
    })?;
    Ok(BSymbol {
        entries: entries.to_vec(),
        rank,
    })
}

pub fn descent_data(symbol: &BSymbol) -> DescentData {
    let (singles, descent_set) = singles_and_descents(&symbol.entries);
    let p = (singles.len() - 1) / 2;
    DescentData {
        singles,
        descent_set,
        p,
    }
}

pub fn is_special(symbol: &BSymbol) -> bool {
    descent_data(symbol).descent_set.is_empty()
}

/// All strictly increasing sequences of length `len` with entries `>= min`
/// summing to `sum`, in lexicographic order.
pub(crate) fn strict_rows(len: usize, sum: u64, min: u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut row = Vec::with_capacity(len);
    fill_strict_rows(len, sum, min, &mut row, &mut out);
    out
}

fn fill_strict_rows(len: usize, sum: u64, min: u64, row: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if len == 0 {
        if sum == 0 {
            out.push(row.clone());
        }
        return;
    }
    let k = len as u64;
    // smallest completion from `v`: v + (v+1) + ... + (v+k-1)
    let mut v = min;
    while k * v + k * (k - 1) / 2 <= sum {
        row.push(v as u32);
        fill_strict_rows(len - 1, sum - v, v + 1, row, out);
        row.pop();
        v += 1;
    }
}

pub(crate) fn interleave(first: &[u32], second: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(first.len() + second.len());
    for i in 0..first.len().max(second.len()) {
        if let Some(&a) = first.get(i) {
            out.push(a);
        }
        if let Some(&b) = second.get(i) {
            out.push(b);
        }
    }
    out
}

/// `Sym_n` in lexicographic order of entry sequences.
///
/// `n = 0` yields `{(0)}`.
pub fn enumerate_sym(n: u32, limits: &Limits) -> Result<Vec<BSymbol>, SymbolError> {
    if n > limits.max_n {
        return Err(SymbolError::ResourceLimit {
            requested: n,
            limit: limits.max_n,
        });
    }
    let mut out = Vec::new();
    // a symbol of length 2m+1 has rank at least m
    for m in 0..=n as u64 {
        let total = n as u64 + m * m;
        let even_min_sum = m * m.saturating_sub(1) / 2;
        for odd_sum in 0..=total.saturating_sub(even_min_sum) {
            let odd_rows = strict_rows(m as usize + 1, odd_sum, 0);
            if odd_rows.is_empty() {
                continue;
            }
            let even_rows = strict_rows(m as usize, total - odd_sum, 0);
            for odd in &odd_rows {
                for even in &even_rows {
                    if odd[0] == 0 && even.first() == Some(&0) {
                        continue;
                    }
                    out.push(BSymbol {
                        entries: interleave(odd, even),
                        rank: n,
                    });
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Every `BSymbol` whose sorted entries equal `key` (any rank), in
/// lexicographic order. Empty when no valid symbol has these entries.
///
/// The members are in bijection with the choices of which once-occurring
/// values go to the even row, so this avoids enumerating all of `Sym_n`.
pub fn family_members(key: &[u32], limits: &Limits) -> Result<Vec<BSymbol>, SymbolError> {
    let counts = multiplicities(key);
    let mut doubled = Vec::new();
    let mut singles = Vec::new();
    for (&v, &c) in &counts {
        match c {
            1 => singles.push(v),
            2 => doubled.push(v),
            _ => return Err(SymbolError::ValueMoreThanTwice(v)),
        }
    }
    if counts.get(&0) == Some(&2) || singles.len() % 2 == 0 {
        return Ok(Vec::new());
    }
    let max_singles = 2 * limits.max_p as usize + 1;
    if singles.len() > max_singles {
        return Err(SymbolError::ResourceLimit {
            requested: ((singles.len() - 1) / 2) as u32,
            limit: limits.max_p,
        });
    }
    let even_singles = (singles.len() - 1) / 2;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << singles.len()) {
        if mask.count_ones() as usize != even_singles {
            continue;
        }
        let mut odd = doubled.clone();
        let mut even = doubled.clone();
        for (i, &v) in singles.iter().enumerate() {
            if mask >> i & 1 == 1 {
                even.push(v);
            } else {
                odd.push(v);
            }
        }
        odd.sort_unstable();
        even.sort_unstable();
        match validate_b(&interleave(&odd, &even)) {
            Ok(s) => out.push(s),
            Err(SymbolError::NegativeRank { .. }) => return Ok(Vec::new()),
            Err(e) => return Err(SymbolError::InternalInvariant(e.to_string())),
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn antispecial_threshold_b(p: usize) -> usize {
    p
}

/// Builds the family of the given members, which must share one key.
pub fn family_from_members(members: Vec<BSymbol>) -> Result<Family<BSymbol>, SymbolError> {
    Family::from_members(
        members,
        |s| {
            let d = descent_data(s);
            (d.p, d.descent_set.len())
        },
        antispecial_threshold_b,
    )
}

/// `Sym_n` split into families, sorted by key.
pub fn partition_families(n: u32, limits: &Limits) -> Result<Vec<Family<BSymbol>>, SymbolError> {
    let mut groups: BTreeMap<Vec<u32>, Vec<BSymbol>> = BTreeMap::new();
    for s in enumerate_sym(n, limits)? {
        groups.entry(s.key()).or_default().push(s);
    }
    groups.into_values().map(family_from_members).collect()
}

/// The family with the given key, provided it is non-empty.
pub fn family_with_key(
    key: &[u32],
    limits: &Limits,
) -> Result<Option<Family<BSymbol>>, SymbolError> {
    let members = family_members(key, limits)?;
    if members.is_empty() {
        return Ok(None);
    }
    family_from_members(members).map(Some)
}

/// Number of members with `|S(Λ)| = p(c)`.
pub fn antispecial_count(family: &Family<BSymbol>) -> usize {
    family.antispecial.len()
}
