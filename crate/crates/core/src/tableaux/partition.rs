use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A strict partition `λ_1 > λ_2 > … > λ_m > 0` (possibly empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not strictly decreasing")));
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Boxes of the shifted diagram: row `i` occupies columns `i..i+λ_i`.
    pub fn shifted_boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &l) in self.parts.iter().enumerate() {
            for j in i..i + l {
                out.push((i, j));
            }
        }
        out
    }

    /// All strict partitions contained in `self` (as shifted diagrams),
    /// including the empty one and `self`.
    pub fn sub_partitions(&self) -> Vec<StrictPartition> {
        fn rec(bound: &[usize], idx: usize, prev: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            out.push(StrictPartition { parts: cur.clone() });
            if idx == bound.len() {
                return;
            }
            let hi = bound[idx].min(prev.saturating_sub(1));
            for p in 1..=hi {
                cur.push(p);
                rec(bound, idx + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }

    /// Every strict partition with largest part ≤ `max_part` and length
    /// ≤ `max_len`, in lexicographic order of parts (empty first).
    pub fn all(max_part: usize, max_len: usize) -> Vec<StrictPartition> {
        let mut out: Vec<StrictPartition> = Vec::new();
        fn rec(max: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            out.push(StrictPartition { parts: cur.clone() });
            if left == 0 {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(p - 1, left - 1, cur, out);
                cur.pop();
            }
        }
        rec(max_part, max_len, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Whether `other` ⊆ `self` as diagrams.
    pub fn contains(&self, other: &StrictPartition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Parts as exponents, e.g. for the points `q^{λ_i}`.
    pub fn as_exponents(&self) -> Vec<i64> {
        self.parts.iter().map(|&p| p as i64).collect()
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    /// Parse a comma-separated list such as `3,1`; the empty string is `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// An ordinary partition `μ_1 ≥ … ≥ μ_m ≥ 0`; trailing zeros are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(0);
        let parts = (0..w).map(|j| self.parts.iter().filter(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    /// `(hook length, content)` of every box, row by row.
    pub fn hooks_and_contents(&self) -> Vec<(usize, i64)> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.part(j) - i - 1;
                out.push((arm + leg + 1, j as i64 - i as i64));
            }
        }
        out
    }

    /// All partitions with at most `rows` parts, each at most `max_part`.
    pub fn in_box(rows: usize, max_part: usize) -> Vec<Partition> {
        fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rows == 0 {
                out.push(Partition::new(cur.clone()).unwrap());
                return;
            }
            for p in 0..=max {
                cur.push(p);
                rec(rows - 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, max_part, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of total size ≤ `max_size` with at most `rows` parts.
    pub fn up_to_size(rows: usize, max_size: usize) -> Vec<Partition> {
        Self::in_box(rows, max_size).into_iter().filter(|p| p.size() <= max_size).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(StrictPartition::new(vec![3, 1]).is_ok());
        assert!(StrictPartition::new(vec![2, 2]).is_err());
        assert!(StrictPartition::new(vec![1, 2]).is_err());
        assert!("3,0".parse::<StrictPartition>().is_err());
        assert_eq!("".parse::<StrictPartition>().unwrap(), StrictPartition::empty());
        assert_eq!("3, 1".parse::<StrictPartition>().unwrap().parts(), &[3, 1]);
    }

    #[test]
    fn shifted_diagram() {
        let l = StrictPartition::new(vec![3, 1]).unwrap();
        assert_eq!(l.shifted_boxes(), vec![(0, 0), (0, 1), (0, 2), (1, 1)]);
    }

    #[test]
    fn sub_partition_count() {
        let l = StrictPartition::new(vec![2, 1]).unwrap();
        // ∅, (1), (2), (2,1)
        assert_eq!(l.sub_partitions().len(), 4);
        // strict partitions with parts ≤ 6 and length ≤ 3
        let all = StrictPartition::all(6, 3);
        assert_eq!(all.len(), 1 + 6 + 15 + 20);
    }

    #[test]
    fn hooks() {
        let mu = Partition::new(vec![2]).unwrap();
        assert_eq!(mu.hooks_and_contents(), vec![(2, 0), (1, 1)]);
        let mu = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(mu.hooks_and_contents(), vec![(3, 0), (1, 1), (1, -1)]);
    }
}
