use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MStarBranch {
    /// p = 1: the complete digraph.
    Complete,
    /// 2(N-1) divisible by p.
    Divisible,
    Remainder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    Match,
    FormulaHigh,
    FormulaLow,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MStarResult {
    pub n: usize,
    pub p: usize,
    pub formula_value: usize,
    pub branch: MStarBranch,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<Agreement>,
}

impl MStarResult {
    /// Records an exact minimum for comparison with the formula.
    pub fn with_oracle(mut self, value: usize) -> Self {
        self.oracle_value = Some(value);
        self.agreement = Some(match self.formula_value.cmp(&value) {
            std::cmp::Ordering::Equal => Agreement::Match,
            std::cmp::Ordering::Greater => Agreement::FormulaHigh,
            std::cmp::Ordering::Less => Agreement::FormulaLow,
        });
        self
    }

    /// Oracle value when known, formula value otherwise.
    pub fn threshold(&self) -> usize {
        self.oracle_value.unwrap_or(self.formula_value)
    }
}

/// Claimed minimum edge count of a p-Clan digraph of order N:
/// N(N-1) for p = 1, (1 + 2/p)(N-1) when p divides 2(N-1), else 2N - p.
pub fn mstar(n: usize, p: usize) -> Result<MStarResult> {
    if n < 3 || p == 0 || p >= n {
        return Err(Error::Precondition(format!("need N >= 3 and 1 <= p <= N-1, got N = {n}, p = {p}")));
    }
    let (formula_value, branch) = if p == 1 {
        (n * (n - 1), MStarBranch::Complete)
    } else if (2 * (n - 1)) % p == 0 {
        ((n - 1) + 2 * (n - 1) / p, MStarBranch::Divisible)
    } else {
        (2 * n - p, MStarBranch::Remainder)
    };
    Ok(MStarResult { n, p, formula_value, branch, oracle_value: None, agreement: None })
}
