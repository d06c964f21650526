//! The families `A_p` (permutations of `0..=2p`), the doubled-entry sets
//! `A_p(r)`, and the two lifts of a symbol of `A_p(r)` into `A_p`.

use std::fmt;

use thiserror::Error;

use crate::limits::Limits;
use crate::symbols_b::{descent_data, family_members, validate_b, BSymbol, SymbolError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("r = {r} is outside [0, {max}] for p = {p}")]
    BadR { p: u32, r: u32, max: u32 },
    #[error("{symbol} is not in A_{p}({r})")]
    NotInApR { symbol: String, p: u32, r: u32 },
    #[error("no labeling of the lifts of {symbol} has descent counts (s, s+1): got {first} and {second}")]
    AmbiguousLabeling {
        symbol: String,
        first: usize,
        second: usize,
    },
    #[error("p = {requested} exceeds the guardrail {limit}")]
    ResourceLimit { requested: u32, limit: u32 },
    #[error(transparent)]
    Symbol(#[from] SymbolError),
}

fn check_p(p: u32, limits: &Limits) -> Result<(), LiftError> {
    if p > limits.max_p {
        return Err(LiftError::ResourceLimit {
            requested: p,
            limit: limits.max_p,
        });
    }
    Ok(())
}

/// Members of `Sym_{p²+p}` permuting `0..=2p`.
pub fn enumerate_ap(p: u32, limits: &Limits) -> Result<Vec<BSymbol>, LiftError> {
    check_p(p, limits)?;
    let key: Vec<u32> = (0..=2 * p).collect();
    Ok(family_members(&key, limits)?)
}

/// Sorted entry multiset of `A_p(r)` for `r ≥ 1`: `0..=2p−1` with `r` doubled.
pub fn ap_r_key(p: u32, r: u32) -> Vec<u32> {
    let mut key: Vec<u32> = (0..2 * p).collect();
    key.insert(r as usize, r);
    key
}

/// `A_p(r)`; for `r = 0` this is `A_{p−1}`.
pub fn enumerate_ap_r(p: u32, r: u32, limits: &Limits) -> Result<Vec<BSymbol>, LiftError> {
    if p == 0 || r > 2 * p - 1 {
        return Err(LiftError::BadR {
            p,
            r,
            max: (2 * p).saturating_sub(1),
        });
    }
    check_p(p, limits)?;
    if r == 0 {
        return enumerate_ap(p - 1, limits);
    }
    Ok(family_members(&ap_r_key(p, r), limits)?)
}

/// A source symbol of `A_p(r)` with its two lifts into `A_p`, labeled so that
/// `primed` keeps the descent count and `double_primed` raises it by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftPair {
    pub source: BSymbol,
    pub primed: BSymbol,
    pub double_primed: BSymbol,
    pub r: u32,
    pub p: u32,
}

impl LiftPair {
    pub fn source_descents(&self) -> usize {
        descent_data(&self.source).descent_set.len()
    }
}

impl fmt::Display for LiftPair {
    /// `source → primed | double_primed (|S|: s → s, s+1)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.source_descents();
        write!(
            f,
            "{} → {} | {} (|S|: {} → {}, {})",
            self.source,
            self.primed,
            self.double_primed,
            s,
            descent_data(&self.primed).descent_set.len(),
            descent_data(&self.double_primed).descent_set.len()
        )
    }
}

fn in_ap_r(symbol: &BSymbol, p: u32, r: u32) -> bool {
    symbol.key() == ap_r_key(p, r)
}

/// Raises one copy of `r` to `r + 1` and shifts `r+1..=2p−1` up by one.
fn raise(entries: &[u32], r: u32, copy_position: usize) -> Vec<u32> {
    entries
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            if a > r || i == copy_position {
                a + 1
            } else {
                a
            }
        })
        .collect()
}

/// The two raised sequences of a member of `A_p(r)`, first copy of `r`
/// raised first. No labeling is attempted.
pub fn lift_candidates(source: &BSymbol, p: u32, r: u32) -> Result<[BSymbol; 2], LiftError> {
    if p == 0 || r == 0 || r > 2 * p - 1 {
        return Err(LiftError::BadR {
            p,
            r,
            max: (2 * p).saturating_sub(1),
        });
    }
    if !in_ap_r(source, p, r) {
        return Err(LiftError::NotInApR {
            symbol: source.to_string(),
            p,
            r,
        });
    }
    let copies: Vec<usize> = source
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a == r)
        .map(|(i, _)| i)
        .collect();
    let a = validate_b(&raise(source.entries(), r, copies[0]))?;
    let b = validate_b(&raise(source.entries(), r, copies[1]))?;
    Ok([a, b])
}

/// Labels the two candidates by their computed descent counts; fails with
/// `AmbiguousLabeling` when neither order gives `(s, s+1)`.
pub fn lift_pair(source: &BSymbol, p: u32, r: u32) -> Result<LiftPair, LiftError> {
    let [a, b] = lift_candidates(source, p, r)?;
    let s = descent_data(source).descent_set.len();
    let sa = descent_data(&a).descent_set.len();
    let sb = descent_data(&b).descent_set.len();
    let (primed, double_primed) = if sa == s && sb == s + 1 {
        (a, b)
    } else if sb == s && sa == s + 1 {
        (b, a)
    } else {
        return Err(LiftError::AmbiguousLabeling {
            symbol: source.to_string(),
            first: sa,
            second: sb,
        });
    };
    Ok(LiftPair {
        source: source.clone(),
        primed,
        double_primed,
        r,
        p,
    })
}

/// One candidate of the `r = 0` lift with its verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R0Candidate {
    pub entries: Vec<u32>,
    /// `Σ a_i − m²` of the candidate sequence, whether or not it is valid.
    pub computed_rank: i64,
    pub validity: Result<BSymbol, SymbolError>,
}

impl R0Candidate {
    fn new(entries: Vec<u32>) -> Self {
        let m = ((entries.len() - 1) / 2) as i64;
        let computed_rank = entries.iter().map(|&a| a as i64).sum::<i64>() - m * m;
        let validity = validate_b(&entries);
        R0Candidate {
            entries,
            computed_rank,
            validity,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validity.is_ok()
    }
}

/// The two sequences `(0, 1, a_1+1, ...)` and `(1, 0, a_1+1, ...)` built from
/// a member of `A_{p−1}`, each checked against the symbol rules. The
/// rank the construction is expected to land in is `p² − p`; compare with
/// each candidate's `computed_rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R0Lift {
    pub source: BSymbol,
    pub p: u32,
    pub expected_rank: i64,
    pub primed: R0Candidate,
    pub double_primed: R0Candidate,
}

pub fn lift_pair_r0(source: &BSymbol, p: u32) -> Result<R0Lift, LiftError> {
    let key: Vec<u32> = (0..(2 * p).saturating_sub(1)).collect();
    if p == 0 || source.key() != key {
        return Err(LiftError::NotInApR {
            symbol: source.to_string(),
            p,
            r: 0,
        });
    }
    let shifted = source.entries().iter().map(|&a| a + 1);
    let primed: Vec<u32> = [0, 1].into_iter().chain(shifted.clone()).collect();
    let double_primed: Vec<u32> = [1, 0].into_iter().chain(shifted).collect();
    let p64 = p as i64;
    Ok(R0Lift {
        source: source.clone(),
        p,
        expected_rank: p64 * p64 - p64,
        primed: R0Candidate::new(primed),
        double_primed: R0Candidate::new(double_primed),
    })
}
