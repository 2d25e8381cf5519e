use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, LinearOrder};

/// A bijection on `1..=n`, written as its value sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; values.len()];
        for &v in &values {
            if v == 0 || v > values.len() || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::NotBijective(format!("{values:?} is not a permutation of 1..={}", values.len())));
            }
        }
        Ok(Permutation(values))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Comma- or space-separated values, e.g. `2,4,1,3`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| Error::Parse { line: 1, msg: format!("not a permutation entry: {t:?}") }))
            .collect::<Result<Vec<usize>>>()?;
        Permutation::new(values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Matching on `2n` vertices: left vertex `i` (rank `i`) joins right vertex `n + pi_i - 1`,
/// all on the identity order. Increasing pairs of `pi` become crossings, decreasing pairs nestings.
pub fn permutation_to_matching(pi: &Permutation) -> (Graph, LinearOrder) {
    let n = pi.len();
    let g = Graph::new(2 * n, pi.values().iter().enumerate().map(|(i, &v)| (i, n + v - 1))).expect("a matching");
    (g, LinearOrder::identity(2 * n))
}

/// A monotone subsequence, by positions (0-based) into the permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotoneRun {
    /// Singletons count as increasing.
    pub increasing: bool,
    pub positions: Vec<usize>,
    pub values: Vec<usize>,
}

struct Run {
    last: usize,
    rising: Option<bool>,
    positions: Vec<usize>,
}

fn cover(values: &[usize], at: usize, k: usize, runs: &mut Vec<Run>) -> bool {
    let Some(&x) = values.get(at) else { return true };
    for r in 0..runs.len() {
        let up = x > runs[r].last;
        if runs[r].rising.is_some_and(|d| d != up) {
            continue;
        }
        let saved = (runs[r].last, runs[r].rising);
        runs[r].last = x;
        runs[r].rising = Some(up);
        runs[r].positions.push(at);
        if cover(values, at + 1, k, runs) {
            return true;
        }
        runs[r].positions.pop();
        (runs[r].last, runs[r].rising) = saved;
    }
    if runs.len() < k {
        runs.push(Run { last: x, rising: None, positions: vec![at] });
        if cover(values, at + 1, k, runs) {
            return true;
        }
        runs.pop();
    }
    false
}

/// Partition into at most `k` monotone subsequences, if one exists.
pub fn permutation_min_monotone_cover(pi: &Permutation, k: usize) -> Option<Vec<MonotoneRun>> {
    let mut runs = Vec::new();
    if !cover(pi.values(), 0, k, &mut runs) {
        return None;
    }
    Some(
        runs.into_iter()
            .map(|r| MonotoneRun {
                increasing: r.rising.unwrap_or(true),
                values: r.positions.iter().map(|&p| pi.values()[p]).collect(),
                positions: r.positions,
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::EdgeRelation;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!(perm("2,4,1,3").values(), &[2, 4, 1, 3]);
        assert_eq!(perm("3 1 2").to_string(), "3,1,2");
        assert!("1,1".parse::<Permutation>().is_err());
        assert!("0,1".parse::<Permutation>().is_err());
        assert!("a".parse::<Permutation>().is_err());
    }

    #[test]
    fn matchings() {
        let (g, o) = permutation_to_matching(&perm("1"));
        assert_eq!((g.n(), g.m(), o.len()), (2, 1, 2));
        let (g, o) = permutation_to_matching(&perm("2,1"));
        assert_eq!(o.relation(g.edges()[0], g.edges()[1]), EdgeRelation::Nested);
        let (g, o) = permutation_to_matching(&perm("1,2"));
        assert_eq!(o.relation(g.edges()[0], g.edges()[1]), EdgeRelation::Crossing);
    }

    #[test]
    fn covers() {
        assert_eq!(permutation_min_monotone_cover(&perm("1,2,3,4,5"), 1).unwrap().len(), 1);
        assert!(permutation_min_monotone_cover(&perm("2,4,1,3"), 1).is_none());
        let runs = permutation_min_monotone_cover(&perm("2,4,1,3"), 2).unwrap();
        assert_eq!(runs.len(), 2);
        for r in &runs {
            let ok = r.values.windows(2).all(|w| (w[0] < w[1]) == r.increasing);
            assert!(ok, "{r:?}");
        }
    }
}
