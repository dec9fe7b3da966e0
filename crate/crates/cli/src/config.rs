use clap::ValueEnum;
use combinatorics::Partition;
use fockspace::{FockContext, DEFAULT_DEGREE_BOUND};
use serde::Serialize;

use crate::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteName {
    Relations,
    Bases,
    Mz,
    Gz,
    Appendix,
    All,
}

impl SuiteName {
    pub fn label(self) -> &'static str {
        match self {
            SuiteName::Relations => "relations",
            SuiteName::Bases => "bases",
            SuiteName::Mz => "mz",
            SuiteName::Gz => "gz",
            SuiteName::Appendix => "appendix",
            SuiteName::All => "all",
        }
    }

    /// The concrete suites run for this name, in report order.
    pub fn expand(self) -> Vec<SuiteName> {
        match self {
            SuiteName::All => vec![
                SuiteName::Relations,
                SuiteName::Bases,
                SuiteName::Mz,
                SuiteName::Gz,
                SuiteName::Appendix,
            ],
            s => vec![s],
        }
    }
}

/// Rank n, order p, degree bound and output settings of one run.
#[derive(Debug, Clone, Serialize)]
pub struct JobConfig {
    pub n: usize,
    pub p: u32,
    pub deg: usize,
    pub format: Format,
    pub seed: u64,
}

impl JobConfig {
    pub fn new(n: usize, p: u32, deg: usize, format: Format, seed: u64) -> Result<Self> {
        if n == 0 || n > u8::MAX as usize {
            return Err(CliError::Usage(format!(
                "--n must be between 1 and 255, got {n}"
            )));
        }
        if p == 0 {
            return Err(CliError::Usage("--p must be at least 1".into()));
        }
        Ok(Self {
            n,
            p,
            deg,
            format,
            seed,
        })
    }

    /// A context whose weight-space bound leaves room for operators that
    /// raise the degree of the inputs by a few letters.
    pub fn context(&self, extra: usize) -> Result<FockContext> {
        let bound = (self.deg + extra).max(DEFAULT_DEGREE_BOUND);
        Ok(FockContext::new(self.n, self.p)?.with_degree_bound(bound))
    }
}

/// Parses "4,2,0" into a partition; trailing zeros are allowed.
pub fn parse_partition(s: &str) -> Result<Partition> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|x| x.trim())
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse::<usize>().map_err(|_| {
                CliError::Usage(format!("--lambda entry {x:?} is not a nonnegative integer"))
            })
        })
        .collect::<Result<_>>()?;
    Partition::new(parts).map_err(|e| CliError::Usage(format!("--lambda {s:?}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_parse_with_trailing_zeros() {
        assert_eq!(parse_partition("4,2,0").unwrap().parts(), &[4, 2]);
        assert_eq!(parse_partition("0").unwrap().size(), 0);
        assert!(parse_partition("1,2").is_err());
        assert!(parse_partition("a").is_err());
    }

    #[test]
    fn rejects_empty_rank() {
        assert!(JobConfig::new(0, 1, 2, Format::Text, 0).is_err());
        assert!(JobConfig::new(2, 0, 2, Format::Text, 0).is_err());
    }
}
