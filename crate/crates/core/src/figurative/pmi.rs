use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PmiVariant {
    /// `ln( p(y|x) / p(x) )`, x = right-hand NP, y = left-hand NP
    #[default]
    Paper,
    /// `ln( p(x,y) / (p(x) p(y)) )`
    Standard,
}

/// Token counts of harvested `NP of NP` pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PmiTable {
    pair_counts: HashMap<(String, String), u64>,
    lhs_counts: HashMap<String, u64>,
    rhs_counts: HashMap<String, u64>,
    total_pairs: u64,
}

impl PmiTable {
    pub fn record(&mut self, lhs: &str, rhs: &str) {
        *self
            .pair_counts
            .entry((lhs.to_string(), rhs.to_string()))
            .or_default() += 1;
        *self.lhs_counts.entry(lhs.to_string()).or_default() += 1;
        *self.rhs_counts.entry(rhs.to_string()).or_default() += 1;
        self.total_pairs += 1;
    }

    pub fn merge(&mut self, other: PmiTable) {
        for (k, v) in other.pair_counts {
            *self.pair_counts.entry(k).or_default() += v;
        }
        for (k, v) in other.lhs_counts {
            *self.lhs_counts.entry(k).or_default() += v;
        }
        for (k, v) in other.rhs_counts {
            *self.rhs_counts.entry(k).or_default() += v;
        }
        self.total_pairs += other.total_pairs;
    }

    pub fn pair_count(&self, lhs: &str, rhs: &str) -> u64 {
        self.pair_counts
            .get(&(lhs.to_string(), rhs.to_string()))
            .copied()
            .unwrap_or(0)
    }

    pub fn lhs_count(&self, lhs: &str) -> u64 {
        self.lhs_counts.get(lhs).copied().unwrap_or(0)
    }

    pub fn rhs_count(&self, rhs: &str) -> u64 {
        self.rhs_counts.get(rhs).copied().unwrap_or(0)
    }

    pub fn total_pairs(&self) -> u64 {
        self.total_pairs
    }

    pub fn distinct_pairs(&self) -> usize {
        self.pair_counts.len()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str, u64)> {
        self.pair_counts
            .iter()
            .map(|((l, r), &c)| (l.as_str(), r.as_str(), c))
    }

    /// Association score of left-hand NP `lhs` with right-hand NP `rhs`.
    /// Natural log. Fails with `ZeroCount` rather than returning minus infinity.
    pub fn score(&self, rhs: &str, lhs: &str, variant: PmiVariant) -> Result<f64> {
        let joint = self.pair_count(lhs, rhs);
        let rhs_n = self.rhs_count(rhs);
        let lhs_n = self.lhs_count(lhs);
        if joint == 0 || rhs_n == 0 || lhs_n == 0 || self.total_pairs == 0 {
            return Err(Error::ZeroCount {
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        let total = self.total_pairs as f64;
        let (joint, rhs_n, lhs_n) = (joint as f64, rhs_n as f64, lhs_n as f64);
        let value = match variant {
            PmiVariant::Paper => {
                let conditional = joint / rhs_n;
                let marginal = rhs_n / total;
                (conditional / marginal).ln()
            }
            PmiVariant::Standard => {
                let p_xy = joint / total;
                let p_x = rhs_n / total;
                let p_y = lhs_n / total;
                (p_xy / (p_x * p_y)).ln()
            }
        };
        Ok(value)
    }
}

pub fn pmi_score(rhs: &str, lhs: &str, table: &PmiTable, variant: PmiVariant) -> Result<f64> {
    table.score(rhs, lhs, variant)
}
