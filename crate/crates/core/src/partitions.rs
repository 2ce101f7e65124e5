//! Integer partitions and the quantities attached to them: box contents,
//! irrep dimensions, Schur–Weyl multiplicities and the clique eigenvalue η.
//!
//! Everything here is exact integer arithmetic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, QmcError, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so two partitions compare
/// equal exactly when their nonzero parts agree. The derived ordering is
/// lexicographic on the parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(QmcError::Structural(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        if parts.contains(&0) {
            return Err(QmcError::Structural(
                "zero part in the middle of a partition".into(),
            ));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The one-row partition `(m)`; empty for `m = 0`.
    pub fn row(m: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Self { parts: vec![m] }
        }
    }

    /// Builds from parts that are known to be valid. Used by the enumerators.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part (0-indexed), zero beyond the height.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition::from_sorted(parts)
    }

    /// Contents `column - row` of every box, row by row.
    pub fn contents(&self) -> impl Iterator<Item = i64> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| c as i64 - r as i64))
    }

    /// Σ(σ): the sum of all box contents.
    pub fn content_sum(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                let len = len as i64;
                len * (len - 1) / 2 - len * r as i64
            })
            .sum()
    }

    /// η via contents: `m² − m − 2Σ(σ)` with `m = |σ|`.
    pub fn eta_contents(&self) -> i64 {
        let m = self.size() as i64;
        m * m - m - 2 * self.content_sum()
    }

    /// η via the row formula `n² + d(d−1)(2d−1)/6 − Σ_{k=1..d} (σ_k − (k−1))²`.
    pub fn eta_rows(&self, d: usize) -> Result<i64> {
        if d == 0 {
            return Err(domain("local dimension must be positive"));
        }
        if self.height() > d {
            return Err(domain(format!(
                "partition {self} has height {} > d = {d}",
                self.height()
            )));
        }
        let n = self.size() as i64;
        let di = d as i64;
        let sq: i64 = (0..d)
            .map(|k| {
                let t = self.part(k) as i64 - k as i64;
                t * t
            })
            .sum();
        Ok(n * n + di * (di - 1) * (2 * di - 1) / 6 - sq)
    }

    fn hook_lengths(&self) -> Vec<u64> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                hooks.push((len - c + conj.part(c) - r - 1) as u64);
            }
        }
        hooks
    }

    /// f^σ, the number of standard Young tableaux (hook-length formula).
    pub fn dim_irrep(&self) -> u128 {
        let numerator: Vec<u64> = (1..=self.size() as u64).collect();
        exact_ratio(&numerator, &self.hook_lengths())
    }

    /// Number of semistandard tableaux of shape σ with entries in `1..=d`
    /// (hook-content formula); zero when the height exceeds `d`.
    pub fn weyl_dim(&self, d: usize) -> u128 {
        if self.height() > d {
            return 0;
        }
        let numerator: Vec<u64> = self
            .contents()
            .map(|c| (d as i64 + c) as u64)
            .collect();
        exact_ratio(&numerator, &self.hook_lengths())
    }

    /// True iff `self_i ≤ other_i` for every row.
    pub fn is_subpartition_of(&self, other: &Partition) -> bool {
        self.height() <= other.height()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    pub fn to_compact_string(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_compact_string())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = QmcError;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl std::str::FromStr for Partition {
    type Err = QmcError;

    /// Parses comma-separated parts, e.g. `3,2,1`. The empty string and `0`
    /// both denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| domain(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` with at most `max_height` parts, in lexicographically
/// decreasing order.
pub fn enumerate_partitions(n: usize, max_height: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, max_height, &mut current, &mut out);
    out
}

fn fill(
    remaining: usize,
    max_part: usize,
    rows_left: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    if rows_left == 0 {
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        // the rows after this one cannot absorb more than part * (rows_left - 1)
        if part * rows_left < remaining {
            break;
        }
        current.push(part);
        fill(remaining - part, part, rows_left - 1, current, out);
        current.pop();
    }
}

/// The partition of `n` into exactly `h` parts that differ pairwise by at most one.
pub fn balanced_partition(n: usize, h: usize) -> Result<Partition> {
    if h == 0 || n < h {
        return Err(domain(format!(
            "cannot split {n} into {h} positive balanced parts"
        )));
    }
    let (base, extra) = (n / h, n % h);
    Ok(Partition::from_sorted(
        (0..h).map(|i| base + usize::from(i < extra)).collect(),
    ))
}

/// Computes `Π numerator / Π denominator` exactly, assuming the quotient is an integer.
fn exact_ratio(numerator: &[u64], denominator: &[u64]) -> u128 {
    use std::collections::BTreeMap;

    fn factor_into(mut x: u64, sign: i64, exps: &mut BTreeMap<u64, i64>) {
        let mut p = 2;
        while p * p <= x {
            while x.is_multiple_of(p) {
                *exps.entry(p).or_default() += sign;
                x /= p;
            }
            p += 1;
        }
        if x > 1 {
            *exps.entry(x).or_default() += sign;
        }
    }

    if numerator.contains(&0) {
        return 0;
    }
    let mut exps = BTreeMap::new();
    for &x in numerator {
        factor_into(x, 1, &mut exps);
    }
    for &x in denominator {
        factor_into(x, -1, &mut exps);
    }
    exps.into_iter().fold(1u128, |acc, (p, e)| {
        assert!(e >= 0, "ratio is not an integer");
        acc.checked_mul((p as u128).pow(e as u32))
            .expect("integer overflow in exact ratio")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction_rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(p(&[]).is_empty());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_partitions(0, 3), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(3, 2), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(
            enumerate_partitions(4, 3),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| enumerate_partitions(n, n.max(1)).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn content_sums() {
        assert_eq!(p(&[5]).content_sum(), 10);
        assert_eq!(p(&[1, 1, 1]).content_sum(), -3);
        assert_eq!(p(&[3, 2]).content_sum(), 2);
        assert_eq!(Partition::empty().content_sum(), 0);
        for lam in enumerate_partitions(9, 9) {
            assert_eq!(lam.content_sum(), lam.contents().sum::<i64>());
        }
    }

    #[test]
    fn eta_examples() {
        for n in 0..8 {
            assert_eq!(Partition::row(n).eta_contents(), 0);
        }
        assert_eq!(p(&[2, 1]).eta_contents(), 6);
        assert_eq!(p(&[1, 1, 1]).eta_contents(), 12);

        assert_eq!(p(&[3]).eta_rows(2).unwrap(), 0);
        assert_eq!(p(&[1, 1, 1]).eta_rows(3).unwrap(), 12);
        assert_eq!(p(&[3, 2]).eta_rows(2).unwrap(), 16);
        assert!(matches!(p(&[1, 1, 1]).eta_rows(2), Err(QmcError::Domain(_))));
    }

    #[test]
    fn irrep_dimensions() {
        assert_eq!(p(&[6]).dim_irrep(), 1);
        assert_eq!(p(&[2, 1]).dim_irrep(), 2);
        assert_eq!(p(&[2, 2]).dim_irrep(), 2);
        assert_eq!(p(&[3, 2, 1]).dim_irrep(), 16);
        // Σ (f^λ)² = n!
        for n in 1..=9usize {
            let total: u128 = enumerate_partitions(n, n)
                .iter()
                .map(|l| l.dim_irrep().pow(2))
                .sum();
            assert_eq!(total, (1..=n as u128).product());
        }
        // large enough that n! overflows u64
        assert_eq!(p(&[5, 5, 5, 5, 5]).dim_irrep(), 701_149_020);
    }

    /// Counts semistandard tableaux with entries ≤ d by direct enumeration.
    fn ssyt_count(shape: &Partition, d: usize) -> u128 {
        let cells: Vec<(usize, usize)> = shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .collect();
        let mut grid = vec![vec![0usize; shape.part(0)]; shape.height()];
        fn go(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, d: usize) -> u128 {
            if k == cells.len() {
                return 1;
            }
            let (r, c) = cells[k];
            let lo = if c > 0 { grid[r][c - 1] } else { 1 };
            let lo = if r > 0 { lo.max(grid[r - 1][c] + 1) } else { lo };
            let mut total = 0;
            for v in lo..=d {
                grid[r][c] = v;
                total += go(k + 1, cells, grid, d);
            }
            total
        }
        go(0, &cells, &mut grid, d)
    }

    #[test]
    fn weyl_dimensions_match_tableau_counts() {
        assert_eq!(p(&[1, 1, 1]).weyl_dim(2), 0);
        assert_eq!(p(&[1]).weyl_dim(5), 5);
        assert_eq!(p(&[2, 1]).weyl_dim(2), 2);
        assert_eq!(Partition::empty().weyl_dim(3), 1);
        for n in 0..=6 {
            for lam in enumerate_partitions(n, n.max(1)) {
                for d in 1..=4 {
                    assert_eq!(lam.weyl_dim(d), ssyt_count(&lam, d), "{lam} d={d}");
                }
            }
        }
    }

    #[test]
    fn subpartitions() {
        assert!(p(&[2, 1]).is_subpartition_of(&p(&[3, 3, 2])));
        assert!(!p(&[4]).is_subpartition_of(&p(&[3, 3])));
        assert!(!p(&[1, 1, 1]).is_subpartition_of(&p(&[3, 3])));
        assert!(Partition::empty().is_subpartition_of(&p(&[1])));
        assert!(Partition::empty().is_subpartition_of(&Partition::empty()));
    }

    #[test]
    fn balanced() {
        assert_eq!(balanced_partition(5, 2).unwrap(), p(&[3, 2]));
        assert_eq!(balanced_partition(4, 2).unwrap(), p(&[2, 2]));
        assert_eq!(balanced_partition(7, 3).unwrap(), p(&[3, 2, 2]));
        assert!(balanced_partition(2, 3).is_err());
    }

    #[test]
    fn conjugate_and_parsing() {
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!("3,2,1".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&p(&[3, 2])).unwrap(), "[3,2]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
