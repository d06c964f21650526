//! Families: symbols with the same entries up to permutation, together with
//! their special member and antispecial subset.

use std::fmt::Display;

use serde::Serialize;

use crate::symbols_b::SymbolError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family<S> {
    /// Sorted multiset of entries shared by every member.
    pub key: Vec<u32>,
    /// Members in lexicographic order.
    pub members: Vec<S>,
    pub p: usize,
    /// The unique member with empty descent set.
    pub special: S,
    /// Members whose descent count reaches the family threshold.
    pub antispecial: Vec<S>,
}

impl<S: Clone> Family<S> {
    /// `stat` returns `(p(Λ), |S(Λ)|)` for a member and `threshold` maps
    /// `p(c)` to the descent count that makes a member antispecial.
    pub(crate) fn from_members(
        members: Vec<S>,
        stat: impl Fn(&S) -> (usize, usize),
        threshold: impl Fn(usize) -> usize,
    ) -> Result<Self, SymbolError>
    where
        S: HasKey,
    {
        let first = members
            .first()
            .ok_or_else(|| SymbolError::InternalInvariant("empty family".into()))?;
        let key = first.key();
        let stats: Vec<(usize, usize)> = members.iter().map(&stat).collect();
        let p = stats[0].0;
        for (s, &(ps, _)) in members.iter().zip(&stats) {
            if s.key() != key {
                return Err(SymbolError::InternalInvariant(format!(
                    "family member keys differ: {:?} vs {:?}",
                    s.key(),
                    key
                )));
            }
            if ps != p {
                return Err(SymbolError::InternalInvariant(format!(
                    "p not constant on family {key:?}: {ps} vs {p}"
                )));
            }
        }
        let specials: Vec<&S> = members
            .iter()
            .zip(&stats)
            .filter(|(_, st)| st.1 == 0)
            .map(|(s, _)| s)
            .collect();
        if specials.len() != 1 {
            return Err(SymbolError::InternalInvariant(format!(
                "family {key:?} has {} members with empty descent set",
                specials.len()
            )));
        }
        let special = specials[0].clone();
        let want = threshold(p);
        let antispecial: Vec<S> = members
            .iter()
            .zip(&stats)
            .filter(|(_, st)| st.1 == want)
            .map(|(s, _)| s.clone())
            .collect();
        if antispecial.is_empty() {
            return Err(SymbolError::InternalInvariant(format!(
                "family {key:?} has no antispecial member"
            )));
        }
        Ok(Family {
            key,
            members,
            p,
            special,
            antispecial,
        })
    }
}

pub(crate) trait HasKey {
    fn key(&self) -> Vec<u32>;
}

impl HasKey for crate::symbols_b::BSymbol {
    fn key(&self) -> Vec<u32> {
        crate::symbols_b::BSymbol::key(self)
    }
}

impl HasKey for crate::symbols_d::DSymbol {
    fn key(&self) -> Vec<u32> {
        crate::symbols_d::DSymbol::key(self)
    }
}

/// JSON family report. Type-B reports carry no `type` field and no per-family
/// `kind`; type-D reports set `"type": "D"` and a `kind` on every family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub group_type: Option<String>,
    pub n: u32,
    pub families: Vec<FamilyEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyEntry {
    pub key: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub p: usize,
    pub members: Vec<String>,
    pub special: String,
    pub antispecial: Vec<String>,
}

impl FamilyEntry {
    pub fn from_family<S: Display>(f: &Family<S>, kind: Option<&str>) -> Self {
        FamilyEntry {
            key: f.key.clone(),
            kind: kind.map(str::to_string),
            p: f.p,
            members: f.members.iter().map(|s| s.to_string()).collect(),
            special: f.special.to_string(),
            antispecial: f.antispecial.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl FamilyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("family report serializes")
    }
}
