//! Type-D symbols: even-length sequences `(a_1, ..., a_{2m})` with two
//! strictly increasing rows, rank `Σ a_i − m² + m`, 0 at most once, and, when
//! some value occurs once, the largest such value at an even position.
//!
//! Symbols with a once-occurring value are *primed* (`Sym'_n`); the rest,
//! where every value is doubled, are *double-primed* (`Sym''_n`) and form
//! one-element families that are entirely antispecial.
//!
//! The antispecial threshold for primed families is `|S(Λ)| = p(c) − 1`. The
//! descent statistic of a primed symbol never reaches `p(c)`, and the
//! reduction [`iota`] from the type-B family of parameter `p − 1` carries
//! the type-B antispecial members (with `|S| = p − 1`) onto this subset.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::family::Family;
use crate::limits::Limits;
use crate::symbols_b::{
    check_multiplicities, check_rows, entry_sum, interleave, multiplicities, singles_and_descents,
    strict_rows, validate_b, BSymbol, SymbolError,
};
use crate::text::format_entries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DKind {
    Prime,
    DoublePrime,
}

impl DKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DKind::Prime => "prime",
            DKind::DoublePrime => "doubleprime",
        }
    }
}

impl fmt::Display for DKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DSymbol {
    entries: Vec<u32>,
    rank: u32,
    kind: DKind,
}

impl DSymbol {
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn m(&self) -> usize {
        self.entries.len() / 2
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn kind(&self) -> DKind {
        self.kind
    }

    pub fn key(&self) -> Vec<u32> {
        let mut k = self.entries.clone();
        k.sort_unstable();
        k
    }
}

impl fmt::Display for DSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_entries(&self.entries))
    }
}

impl Serialize for DSymbol {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DDescentData {
    /// Entries occurring exactly once, in position order; length `2p`.
    pub singles: Vec<u32>,
    /// 1-based `j ∈ [1, 2p − 1]` with `singles[j] > singles[j+1]`.
    pub descent_set: Vec<usize>,
    pub p: usize,
}

/// Classifies the kind, checking condition (d) on the largest single.
fn classify(entries: &[u32]) -> Result<DKind, SymbolError> {
    let counts = multiplicities(entries);
    let largest_single = counts.iter().rev().find(|(_, &c)| c == 1).map(|(&v, _)| v);
    match largest_single {
        None => Ok(DKind::DoublePrime),
        Some(v) => {
            let pos = entries.iter().position(|&a| a == v).unwrap() + 1;
            if pos % 2 == 0 {
                Ok(DKind::Prime)
            } else {
                Err(SymbolError::ConditionDViolated {
                    value: v,
                    position: pos,
                })
            }
        }
    }
}

pub fn validate_d(entries: &[u32]) -> Result<DSymbol, SymbolError> {
    if entries.is_empty() || entries.len() % 2 == 1 {
        return Err(SymbolError::OddLength(entries.len()));
    }
    check_rows(entries)?;
    check_multiplicities(entries)?;
    let kind = classify(entries)?;
    let m = (entries.len() / 2) as u64;
    let sum = entry_sum(entries);
    let offset = m * m - m;
    if sum < offset {
        return Err(SymbolError::NegativeRank { sum, offset });
    }
    let rank = u32::try_from(sum - offset).map_err(|_| {
        SymbolError::DomainViolation(format!("rank {} does not fit in u32", sum - offset))
    })?;
    Ok(DSymbol {
        entries: entries.to_vec(),
        rank,
        kind,
    })
}

/// `Sym'_n` or `Sym''_n` in lexicographic order.
pub fn enumerate_sym_d(n: u32, kind: DKind, limits: &Limits) -> Result<Vec<DSymbol>, SymbolError> {
    if n < 2 {
        return Err(SymbolError::DomainViolation(format!(
            "type-D symbols need n >= 2, got {n}"
        )));
    }
    if n > limits.max_n {
        return Err(SymbolError::ResourceLimit {
            requested: n,
            limit: limits.max_n,
        });
    }
    let mut out = Vec::new();
    // a symbol of length 2m has rank at least m
    for m in 1..=n as u64 {
        let total = n as u64 + m * m - m;
        let row_min_sum = m * (m - 1) / 2;
        for odd_sum in row_min_sum..=total.saturating_sub(row_min_sum) {
            let odd_rows = strict_rows(m as usize, odd_sum, 0);
            if odd_rows.is_empty() {
                continue;
            }
            let even_rows = strict_rows(m as usize, total - odd_sum, 0);
            for odd in &odd_rows {
                for even in &even_rows {
                    if odd[0] == 0 && even[0] == 0 {
                        continue;
                    }
                    let entries = interleave(odd, even);
                    match classify(&entries) {
                        Ok(k) if k == kind => out.push(DSymbol {
                            entries,
                            rank: n,
                            kind: k,
                        }),
                        _ => {}
                    }
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

pub fn descent_data_d(symbol: &DSymbol) -> Result<DDescentData, SymbolError> {
    if symbol.kind != DKind::Prime {
        return Err(SymbolError::NotPrime);
    }
    let (singles, descent_set) = singles_and_descents(&symbol.entries);
    let p = singles.len() / 2;
    Ok(DDescentData {
        singles,
        descent_set,
        p,
    })
}

/// Every primed `DSymbol` whose sorted entries equal `key`, in
/// lexicographic order. Empty when the key admits none.
pub fn family_members_d(key: &[u32], limits: &Limits) -> Result<Vec<DSymbol>, SymbolError> {
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
    if counts.get(&0) == Some(&2) || singles.is_empty() || singles.len() % 2 == 1 {
        return Ok(Vec::new());
    }
    if singles.len() > 2 * limits.max_p as usize {
        return Err(SymbolError::ResourceLimit {
            requested: (singles.len() / 2) as u32,
            limit: limits.max_p,
        });
    }
    let half = singles.len() / 2;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << singles.len()) {
        if mask.count_ones() as usize != half {
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
        match validate_d(&interleave(&odd, &even)) {
            Ok(s) => out.push(s),
            Err(SymbolError::ConditionDViolated { .. }) => {}
            Err(SymbolError::NegativeRank { .. }) => return Ok(Vec::new()),
            Err(e) => return Err(SymbolError::InternalInvariant(e.to_string())),
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The primed family with the given key, if non-empty.
pub fn family_with_key_d(
    key: &[u32],
    limits: &Limits,
) -> Result<Option<Family<DSymbol>>, SymbolError> {
    let members = family_members_d(key, limits)?;
    if members.is_empty() {
        return Ok(None);
    }
    family_from_members_d(members).map(Some)
}

fn antispecial_threshold_d(p: usize) -> usize {
    p - 1
}

/// Builds a primed family; every member must be primed and share one key.
pub fn family_from_members_d(members: Vec<DSymbol>) -> Result<Family<DSymbol>, SymbolError> {
    if members.iter().any(|s| s.kind != DKind::Prime) {
        return Err(SymbolError::NotPrime);
    }
    Family::from_members(
        members,
        |s| {
            let d = descent_data_d(s).expect("primed");
            (d.p, d.descent_set.len())
        },
        antispecial_threshold_d,
    )
}

/// Families of `Sym'_n`, sorted by key.
pub fn partition_families_d(n: u32, limits: &Limits) -> Result<Vec<Family<DSymbol>>, SymbolError> {
    let mut groups: BTreeMap<Vec<u32>, Vec<DSymbol>> = BTreeMap::new();
    for s in enumerate_sym_d(n, DKind::Prime, limits)? {
        groups.entry(s.key()).or_default().push(s);
    }
    groups.into_values().map(family_from_members_d).collect()
}

/// One-element families of `Sym''_n`: each symbol is its own special and
/// antispecial member. `p` is reported as 0 since there are no singles.
pub fn double_prime_families(n: u32, limits: &Limits) -> Result<Vec<Family<DSymbol>>, SymbolError> {
    Ok(enumerate_sym_d(n, DKind::DoublePrime, limits)?
        .into_iter()
        .map(|s| Family {
            key: s.key(),
            members: vec![s.clone()],
            p: 0,
            special: s.clone(),
            antispecial: vec![s],
        })
        .collect())
}

fn is_permutation_of_range(entries: &[u32], len: usize) -> bool {
    if entries.len() != len {
        return false;
    }
    let mut seen = vec![false; len];
    for &a in entries {
        match seen.get_mut(a as usize) {
            Some(slot) if !*slot => *slot = true,
            _ => return false,
        }
    }
    true
}

/// Appends `2p − 1` to a type-B symbol that permutes `0..=2p−2`, giving a
/// primed type-D symbol of rank `p²` that permutes `0..=2p−1`.
pub fn iota(source: &BSymbol, p: usize) -> Result<DSymbol, SymbolError> {
    if p == 0 {
        return Err(SymbolError::DomainViolation("iota needs p >= 1".into()));
    }
    if !is_permutation_of_range(source.entries(), 2 * p - 1) {
        return Err(SymbolError::DomainViolation(format!(
            "{source} is not a permutation of 0..={}",
            2 * p - 2
        )));
    }
    let mut entries = source.entries().to_vec();
    entries.push((2 * p - 1) as u32);
    let out = validate_d(&entries)?;
    if out.kind != DKind::Prime || out.rank as usize != p * p {
        return Err(SymbolError::InternalInvariant(format!(
            "iota image {out} is not a primed symbol of rank {}",
            p * p
        )));
    }
    Ok(out)
}

/// Strips the trailing `2p − 1`; inverse of [`iota`].
pub fn iota_inverse(symbol: &DSymbol, p: usize) -> Result<BSymbol, SymbolError> {
    if p == 0 || !is_permutation_of_range(symbol.entries(), 2 * p) {
        return Err(SymbolError::DomainViolation(format!(
            "{symbol} is not a permutation of 0..={}",
            (2 * p).saturating_sub(1)
        )));
    }
    let (last, head) = symbol.entries().split_last().unwrap();
    if *last as usize != 2 * p - 1 {
        return Err(SymbolError::DomainViolation(format!(
            "{symbol} does not end in {}",
            2 * p - 1
        )));
    }
    validate_b(head)
}
