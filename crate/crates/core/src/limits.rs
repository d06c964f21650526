//! Resource guardrails shared by the enumerators.

/// Upper bounds on the rank `n` and on the family parameter `p` accepted by
/// the exhaustive enumerators. Exceeding a bound is an error, never a
/// truncated result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_n: u32,
    pub max_p: u32,
}

impl Limits {
    pub const DEFAULT_MAX_N: u32 = 12;
    pub const DEFAULT_MAX_P: u32 = 6;

    pub fn new(max_n: u32, max_p: u32) -> Self {
        Limits { max_n, max_p }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: Self::DEFAULT_MAX_N,
            max_p: Self::DEFAULT_MAX_P,
        }
    }
}
