//! Catalan numbers, two-row standard tableaux, and the construction of the
//! antispecial members of the family `A_p` from pairs of tableaux.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{CheckedDiv, CheckedMul, FromPrimitive, One};
use thiserror::Error;

use crate::limits::Limits;
use crate::symbols_b::{validate_b, BSymbol, SymbolError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("ground set has odd size {0}")]
    OddGround(usize),
    #[error("ground set repeats {0}")]
    RepeatedGround(u32),
    #[error("tableau ground {found:?} does not match the required {expected:?}")]
    GroundMismatch { expected: Vec<u32>, found: Vec<u32> },
    #[error("Catalan number {0} overflows the target scalar")]
    Overflow(u32),
    #[error("p = {requested} exceeds the guardrail {limit}")]
    ResourceLimit { requested: u32, limit: u32 },
    #[error(transparent)]
    Symbol(#[from] SymbolError),
}

/// `Cat_t = (2t)! / (t! (t+1)!)`, exact in any integer scalar that can hold
/// it; `Overflow` when an intermediate product does not fit.
pub fn catalan<T>(t: u32) -> Result<T, TableauError>
where
    T: CheckedMul + CheckedDiv + FromPrimitive + One,
{
    let mut c = T::one();
    // Cat_{k+1} = Cat_k * 2(2k+1) / (k+2), the product is always divisible
    for k in 0..t as u64 {
        let num = T::from_u64(2 * (2 * k + 1)).ok_or(TableauError::Overflow(t))?;
        let den = T::from_u64(k + 2).ok_or(TableauError::Overflow(t))?;
        c = c
            .checked_mul(&num)
            .and_then(|x| x.checked_div(&den))
            .ok_or(TableauError::Overflow(t))?;
    }
    Ok(c)
}

/// `Cat_t` as an arbitrary-precision integer.
pub fn catalan_big(t: u32) -> BigUint {
    catalan(t).expect("BigUint does not overflow")
}

/// `Σ_{t ∈ [0,p]} Cat_t · Cat_{p−t} = Cat_{p+1}`.
pub fn segner_check(p: u32) -> bool {
    let lhs: BigUint = (0..=p).map(|t| catalan_big(t) * catalan_big(p - t)).sum();
    lhs == catalan_big(p + 1)
}

/// A standard tableau of shape `(t, t)`: the rows are strictly increasing
/// and every column increases downward.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoRowTableau {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

impl TwoRowTableau {
    /// Checks the rows are increasing, disjoint, of equal length and satisfy
    /// the column condition `top[k] < bottom[k]`.
    pub fn new(top: Vec<u32>, bottom: Vec<u32>) -> Result<Self, TableauError> {
        let ground: Vec<u32> = top.iter().chain(&bottom).copied().collect();
        let ok = top.len() == bottom.len()
            && top.windows(2).all(|w| w[0] < w[1])
            && bottom.windows(2).all(|w| w[0] < w[1])
            && top.iter().zip(&bottom).all(|(i, j)| i < j)
            && ground.iter().collect::<BTreeSet<_>>().len() == ground.len();
        if !ok {
            let mut found = ground;
            found.sort_unstable();
            return Err(TableauError::GroundMismatch {
                expected: Vec::new(),
                found,
            });
        }
        Ok(TwoRowTableau { top, bottom })
    }

    pub fn empty() -> Self {
        TwoRowTableau {
            top: Vec::new(),
            bottom: Vec::new(),
        }
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    /// Number of columns.
    pub fn width(&self) -> usize {
        self.top.len()
    }

    /// The filled values in increasing order.
    pub fn ground(&self) -> Vec<u32> {
        let mut g: Vec<u32> = self.top.iter().chain(&self.bottom).copied().collect();
        g.sort_unstable();
        g
    }
}

/// Index subsets of `0..n` of size `k`, in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All two-row standard tableaux filled with `ground`.
pub fn enumerate_tableaux(ground: &[u32]) -> Result<Vec<TwoRowTableau>, TableauError> {
    if ground.len() % 2 == 1 {
        return Err(TableauError::OddGround(ground.len()));
    }
    let mut sorted = ground.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(TableauError::RepeatedGround(w[0]));
    }
    let t = sorted.len() / 2;
    let mut out = Vec::new();
    for chosen in combinations(sorted.len(), t) {
        let mut top = Vec::with_capacity(t);
        let mut bottom = Vec::with_capacity(t);
        let mut c = chosen.iter().peekable();
        for (i, &v) in sorted.iter().enumerate() {
            if c.peek() == Some(&&i) {
                top.push(v);
                c.next();
            } else {
                bottom.push(v);
            }
        }
        if top.iter().zip(&bottom).all(|(i, j)| i < j) {
            out.push(TwoRowTableau { top, bottom });
        }
    }
    Ok(out)
}

fn expect_ground(tab: &TwoRowTableau, expected: Vec<u32>) -> Result<(), TableauError> {
    let found = tab.ground();
    if found != expected {
        return Err(TableauError::GroundMismatch { expected, found });
    }
    Ok(())
}

/// `(j_1, i_1, ..., j_t, i_t, 2t, l_1, k_1, ..., l_{p−t}, k_{p−t})` where
/// `first` (rows `i`, `j`) fills `0..2t` and `second` (rows `k`, `l`) fills
/// `2t+1..=2p`. The result permutes `0..=2p` and has `p` descents.
pub fn build_antispecial(
    first: &TwoRowTableau,
    t: u32,
    second: &TwoRowTableau,
    p: u32,
) -> Result<BSymbol, TableauError> {
    if t > p {
        return Err(TableauError::GroundMismatch {
            expected: Vec::new(),
            found: first.ground(),
        });
    }
    expect_ground(first, (0..2 * t).collect())?;
    expect_ground(second, (2 * t + 1..=2 * p).collect())?;
    let mut entries = Vec::with_capacity(2 * p as usize + 1);
    for (i, j) in first.top.iter().zip(&first.bottom) {
        entries.push(*j);
        entries.push(*i);
    }
    entries.push(2 * t);
    for (k, l) in second.top.iter().zip(&second.bottom) {
        entries.push(*l);
        entries.push(*k);
    }
    Ok(validate_b(&entries)?)
}

/// The union over `t ∈ [0, p]` of every [`build_antispecial`] image, in
/// lexicographic order. Fails if two constructions collide.
pub fn enumerate_apas_via_tableaux(p: u32, limits: &Limits) -> Result<Vec<BSymbol>, TableauError> {
    if p > limits.max_p {
        return Err(TableauError::ResourceLimit {
            requested: p,
            limit: limits.max_p,
        });
    }
    let mut out = BTreeSet::new();
    let mut built = 0usize;
    for t in 0..=p {
        let lower: Vec<u32> = (0..2 * t).collect();
        let upper: Vec<u32> = (2 * t + 1..=2 * p).collect();
        let firsts = enumerate_tableaux(&lower)?;
        let seconds = enumerate_tableaux(&upper)?;
        for a in &firsts {
            for b in &seconds {
                out.insert(build_antispecial(a, t, b, p)?);
                built += 1;
            }
        }
    }
    if out.len() != built {
        return Err(SymbolError::InternalInvariant(format!(
            "{} tableau pairs produced only {} distinct symbols",
            built,
            out.len()
        ))
        .into());
    }
    Ok(out.into_iter().collect())
}
