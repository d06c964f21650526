//! Subspaces of the `F₂` vector space with basis `e_1, e_3, ..., e_{2p−1}`,
//! the printed subspace catalogs for the type-B families `A_p`, `p = 1..4`,
//! and the covering check on their arrows.
//!
//! Bit `i` of a vector is the coefficient of `e_{2i+1}`. A subspace is stored
//! as its reduced echelon basis, so equal subspaces have equal bases.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graphs::{CellGraph, Vertex};
use crate::tableaux::catalan_big;

/// Largest ambient dimension: digits in generator text are single odd
/// digits, so `2p − 1 ≤ 9`.
pub const MAX_P: u32 = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("bad generator character {0:?}")]
    BadDigit(char),
    #[error("e_{digit} is outside the space of dimension {p}")]
    OutOfRange { digit: u32, p: u32 },
    #[error("subspaces live in spaces of dimension {0} and {1}")]
    DimensionMismatch(u32, u32),
    #[error("no catalog entry {0:?}")]
    UnknownId(String),
    #[error("no printed catalog for p = {0}")]
    UnknownCatalog(u32),
    #[error("ambient dimension {0} exceeds {MAX_P}")]
    DimensionTooLarge(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct F2Subspace {
    p: u32,
    /// Reduced echelon basis, sorted by decreasing leading bit.
    basis: Vec<u64>,
}

fn leading_bit(v: u64) -> u32 {
    63 - v.leading_zeros()
}

impl F2Subspace {
    pub fn zero(p: u32) -> Self {
        F2Subspace {
            p,
            basis: Vec::new(),
        }
    }

    /// Span of `vectors` in dimension `p`.
    pub fn span(p: u32, vectors: &[u64]) -> Result<Self, LatticeError> {
        if p > MAX_P {
            return Err(LatticeError::DimensionTooLarge(p));
        }
        let mut basis: Vec<u64> = Vec::new();
        for &v in vectors {
            if v >> p != 0 {
                return Err(LatticeError::OutOfRange {
                    digit: 2 * leading_bit(v) + 1,
                    p,
                });
            }
            let r = reduce(&basis, v);
            if r == 0 {
                continue;
            }
            let lead = 1u64 << leading_bit(r);
            for b in basis.iter_mut() {
                if *b & lead != 0 {
                    *b ^= r;
                }
            }
            basis.push(r);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
        Ok(F2Subspace { p, basis })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    pub fn contains_vector(&self, v: u64) -> bool {
        reduce(&self.basis, v) == 0
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &F2Subspace) -> Result<bool, LatticeError> {
        if self.p != other.p {
            return Err(LatticeError::DimensionMismatch(self.p, other.p));
        }
        Ok(other.basis.iter().all(|&v| self.contains_vector(v)))
    }

    /// Basis vectors as bit-strings, character `i` the coefficient of
    /// `e_{2i+1}`, sorted.
    pub fn bit_strings(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .basis
            .iter()
            .map(|&v| {
                (0..self.p)
                    .map(|i| if v >> i & 1 == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect();
        out.sort();
        out
    }
}

/// Generator text of the canonical basis, e.g. `1,35` or `−`.
impl fmt::Display for F2Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return f.write_str("−");
        }
        let mut parts: Vec<String> = self
            .basis
            .iter()
            .map(|&v| {
                (0..self.p)
                    .filter(|i| v >> i & 1 == 1)
                    .map(|i| char::from_digit(2 * i + 1, 10).unwrap())
                    .collect()
            })
            .collect();
        parts.sort();
        f.write_str(&parts.join(","))
    }
}

fn reduce(basis: &[u64], mut v: u64) -> u64 {
    for &b in basis {
        if v & (1u64 << leading_bit(b)) != 0 {
            v ^= b;
        }
    }
    v
}

/// Parses generator text such as `1,35` (meaning `⟨e_1, e_3 + e_5⟩`) or `−`
/// for the zero subspace. Surrounding angle brackets and spaces are ignored.
pub fn parse_generators(text: &str, p: u32) -> Result<F2Subspace, LatticeError> {
    let t = text
        .trim()
        .trim_start_matches(['⟨', '<'])
        .trim_end_matches(['⟩', '>'])
        .trim();
    if t.is_empty() || t == "−" || t == "-" {
        return F2Subspace::span(p, &[]);
    }
    let mut vectors = Vec::new();
    for token in t.split(',') {
        let token = token.trim();
        if token.is_empty() {
            return Err(LatticeError::BadDigit(','));
        }
        let mut v = 0u64;
        for c in token.chars() {
            let d = c.to_digit(10).ok_or(LatticeError::BadDigit(c))?;
            if d % 2 == 0 {
                return Err(LatticeError::BadDigit(c));
            }
            if d > 2 * p - 1 || p == 0 {
                return Err(LatticeError::OutOfRange { digit: d, p });
            }
            v ^= 1u64 << ((d - 1) / 2);
        }
        vectors.push(v);
    }
    F2Subspace::span(p, &vectors)
}

/// Every subspace of the `p`-dimensional space, sorted.
pub fn all_subspaces(p: u32) -> Result<Vec<F2Subspace>, LatticeError> {
    let mut found: BTreeSet<F2Subspace> = BTreeSet::new();
    let mut frontier = vec![F2Subspace::zero(p)];
    found.insert(F2Subspace::zero(p));
    while let Some(s) = frontier.pop() {
        for v in 1..(1u64 << p) {
            if s.contains_vector(v) {
                continue;
            }
            let mut gens = s.basis.clone();
            gens.push(v);
            let bigger = F2Subspace::span(p, &gens)?;
            if found.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    Ok(found.into_iter().collect())
}

const CATALOG_P1: &[&str] = &["1", "−"];
const CATALOG_P2: &[&str] = &["1,3", "13", "1", "3", "−"];
const CATALOG_P3: &[&str] = &[
    "1,3,5", "1,35", "13,5", "1,3", "3,5", "1,5", "3,135", "13", "35", "1", "3", "5", "135", "−",
];
const CATALOG_P4: &[&str] = &[
    "1,3,5,7", "1,3,5", "1,3,7", "1,5,7", "3,5,7", "1,35,7", "1,3,57", "1,35,7", "13,5,7",
    "3,135,7", "1,357,5", "1,3", "1,5", "1,7", "3,5", "3,7", "5,7", "1,357", "135,7", "3,135",
    "5,357", "1,35", "1,57", "3,57", "13,5", "13,7", "35,7", "3,1357", "5,1357", "35,1357",
    "13,57", "1357", "135", "357", "13", "35", "57", "1", "3", "5", "7", "−",
];

const ARROWS_P2: &[(&str, &str)] = &[("1,3", "13"), ("−", "3")];
const ARROWS_P3: &[(&str, &str)] = &[
    ("1,3,5", "1,35"),
    ("1,3,5", "13,5"),
    ("1,35", "135"),
    ("13,5", "135"),
    ("135", "3,135"),
    ("−", "3"),
    ("−", "5"),
    ("3", "3,5"),
    ("5", "3,5"),
    ("3,5", "35"),
    ("1,3", "13"),
    ("1", "1,5"),
];

/// The printed entry list for `p` in printed order.
pub fn printed_catalog(p: u32) -> Result<&'static [&'static str], LatticeError> {
    match p {
        1 => Ok(CATALOG_P1),
        2 => Ok(CATALOG_P2),
        3 => Ok(CATALOG_P3),
        4 => Ok(CATALOG_P4),
        _ => Err(LatticeError::UnknownCatalog(p)),
    }
}

/// Printed arrows for `p`; none are printed for `p = 1` (no arrows) and
/// `p = 4` (omitted).
pub fn printed_arrows(p: u32) -> Result<&'static [(&'static str, &'static str)], LatticeError> {
    match p {
        1 | 4 => Ok(&[]),
        2 => Ok(ARROWS_P2),
        3 => Ok(ARROWS_P3),
        _ => Err(LatticeError::UnknownCatalog(p)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    /// Generator text exactly as printed.
    pub text: String,
    #[serde(serialize_with = "serialize_basis", rename = "basis")]
    pub subspace: F2Subspace,
}

fn serialize_basis<S: serde::Serializer>(s: &F2Subspace, ser: S) -> Result<S::Ok, S::Error> {
    s.bit_strings().serialize(ser)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "anomaly")]
pub enum CatalogAnomaly {
    /// Entries at 0-based positions `first` and `second` span the same subspace.
    Duplicate {
        first: usize,
        second: usize,
        text: String,
    },
    CountMismatch {
        distinct: usize,
        expected: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubspaceCatalog {
    pub p: u32,
    pub entries: Vec<CatalogEntry>,
    pub anomalies: Vec<CatalogAnomaly>,
}

impl SubspaceCatalog {
    /// Builds a catalog from generator texts, recording duplicates and the
    /// distinct count against `Cat_{p+1}` without altering the entries.
    pub fn from_texts(p: u32, texts: &[&str]) -> Result<Self, LatticeError> {
        let mut entries = Vec::with_capacity(texts.len());
        for t in texts {
            entries.push(CatalogEntry {
                text: t.to_string(),
                subspace: parse_generators(t, p)?,
            });
        }
        let mut anomalies = Vec::new();
        for j in 0..entries.len() {
            if let Some(i) = (0..j).find(|&i| entries[i].subspace == entries[j].subspace) {
                anomalies.push(CatalogAnomaly::Duplicate {
                    first: i,
                    second: j,
                    text: entries[j].text.clone(),
                });
            }
        }
        let distinct = entries
            .iter()
            .map(|e| &e.subspace)
            .collect::<BTreeSet<_>>()
            .len();
        let expected: u64 = catalan_big(p + 1)
            .try_into()
            .expect("Cat_{p+1} fits u64 for p <= 5");
        if distinct as u64 != expected {
            anomalies.push(CatalogAnomaly::CountMismatch { distinct, expected });
        }
        Ok(SubspaceCatalog {
            p,
            entries,
            anomalies,
        })
    }

    pub fn is_clean(&self) -> bool {
        self.anomalies.is_empty()
    }

    pub fn distinct_count(&self) -> usize {
        self.entries
            .iter()
            .map(|e| &e.subspace)
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// First entry with the given printed text.
    pub fn lookup(&self, id: &str) -> Result<&CatalogEntry, LatticeError> {
        self.entries
            .iter()
            .find(|e| e.text == id)
            .ok_or_else(|| LatticeError::UnknownId(id.to_string()))
    }

    /// The catalog as a cell graph: one vertex per distinct subspace, keyed
    /// by the printed text of its first occurrence.
    pub fn cell_graph(&self, arrows: &[(&str, &str)]) -> Result<CellGraph, LatticeError> {
        let mut seen = BTreeSet::new();
        let vertices = self
            .entries
            .iter()
            .filter(|e| seen.insert(e.subspace.clone()))
            .map(|e| Vertex::new(e.text.clone(), format!("⟨{}⟩", e.text), None))
            .collect();
        let mut out = Vec::with_capacity(arrows.len());
        for (a, b) in arrows {
            self.lookup(a)?;
            self.lookup(b)?;
            out.push((a.to_string(), b.to_string()));
        }
        Ok(CellGraph::new(vertices, out))
    }
}

/// Loads and checks the printed catalog for `p ∈ [1, 4]`.
pub fn validate_catalog(p: u32) -> Result<SubspaceCatalog, LatticeError> {
    SubspaceCatalog::from_texts(p, printed_catalog(p)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverVerdict {
    pub from: String,
    pub to: String,
    /// The smaller of the two, once oriented by containment.
    pub smaller: Option<String>,
    /// Catalog entries strictly between the two subspaces.
    pub between: Vec<String>,
    pub pass: bool,
}

/// For each arrow, orients the pair by containment and checks that no
/// catalog subspace lies strictly between them.
pub fn covering_check(
    catalog: &SubspaceCatalog,
    arrows: &[(&str, &str)],
) -> Result<Vec<CoverVerdict>, LatticeError> {
    let mut out = Vec::with_capacity(arrows.len());
    for (from, to) in arrows {
        let a = &catalog.lookup(from)?.subspace;
        let b = &catalog.lookup(to)?.subspace;
        let oriented = if a.contains(b)? {
            Some((a, b, to))
        } else if b.contains(a)? {
            Some((b, a, from))
        } else {
            None
        };
        let (smaller, between, pass) = match oriented {
            None => (None, Vec::new(), false),
            Some((big, small, small_id)) => {
                let mut between: Vec<String> = Vec::new();
                let mut seen = BTreeSet::new();
                for e in &catalog.entries {
                    let c = &e.subspace;
                    if c != big
                        && c != small
                        && big.contains(c)?
                        && c.contains(small)?
                        && seen.insert(c)
                    {
                        between.push(e.text.clone());
                    }
                }
                let pass = between.is_empty() && big != small;
                (Some(small_id.to_string()), between, pass)
            }
        };
        out.push(CoverVerdict {
            from: from.to_string(),
            to: to.to_string(),
            smaller,
            between,
            pass,
        });
    }
    Ok(out)
}
