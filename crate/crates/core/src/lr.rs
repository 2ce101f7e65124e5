//! Littlewood–Richardson machinery.
//!
//! `c^λ_{μν}` counts LR fillings of the skew shape `λ/μ` with enumeration `ν`.
//! Iterated coefficients `c^λ_{μνζ…}` are built by composing two-factor
//! coefficients through intermediate partitions κ. [`iterated_lr_direct`]
//! counts the same number from two-coloured fillings of `λ/μ` with a separate
//! brute-force filling counter and serves as the cross-check.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, QmcError, Result};
use crate::partitions::{enumerate_partitions, Partition};

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_subpartition_of(&outer) {
            return Err(QmcError::Structural(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(Self { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.outer.height()
    }

    /// Column range `[start, end)` of row `r`.
    pub fn row_span(&self, r: usize) -> (usize, usize) {
        (self.inner.part(r), self.outer.part(r))
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.outer.part(r) - self.inner.part(r)
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        let (start, end) = self.row_span(r);
        start <= c && c < end
    }

    pub fn box_count(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

/// A skew shape together with one positive label per box, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LRTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl LRTableau {
    pub fn new(shape: SkewShape, mut rows: Vec<Vec<usize>>) -> Result<Self> {
        // rows below the outer shape must be empty; trailing empty rows may be omitted
        while rows.len() > shape.rows() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        rows.resize(shape.rows(), Vec::new());
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(r) {
                return Err(QmcError::Structural(format!(
                    "row {r} has {} labels but the shape has {} boxes there",
                    row.len(),
                    shape.row_len(r)
                )));
            }
        }
        if rows.iter().flatten().any(|&l| l == 0) {
            return Err(QmcError::Structural("labels must be positive".into()));
        }
        Ok(Self { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    fn label_at(&self, r: usize, c: usize) -> Option<usize> {
        let (start, end) = self.shape.row_span(r);
        (start <= c && c < end).then(|| self.rows[r][c - start])
    }

    /// Labels of the reversed rows concatenated top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = (1..self.shape.rows()).all(|r| {
            let (start, end) = self.shape.row_span(r);
            (start..end).all(|c| match self.label_at(r - 1, c) {
                Some(above) => above < self.rows[r][c - start],
                None => true,
            })
        });
        rows_ok && cols_ok
    }

    pub fn is_lr_filling(&self) -> bool {
        self.is_semistandard() && is_lattice_word(&self.reading_word())
    }

    /// The partition whose `i`-th part counts the label `i + 1`.
    ///
    /// Fails when the label counts are not weakly decreasing, which cannot
    /// happen for an LR filling.
    pub fn enumeration(&self) -> Result<Partition> {
        let mut counts = Vec::new();
        for &l in self.rows.iter().flatten() {
            if counts.len() < l {
                counts.resize(l, 0);
            }
            counts[l - 1] += 1;
        }
        Partition::new(counts)
    }

    /// Labels read left to right, top to bottom.
    fn row_major(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }
}

/// True iff every prefix holds at least as many `i`s as `i + 1`s.
pub fn is_lattice_word(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &l in word {
        if l == 0 {
            return false;
        }
        if counts.len() < l {
            counts.resize(l, 0);
        }
        counts[l - 1] += 1;
        if l > 1 && counts[l - 1] > counts[l - 2] {
            return false;
        }
    }
    true
}

/// Backtracking over the boxes of a skew shape in reading order (rows top to
/// bottom, each row right to left), keeping the partial word a lattice word.
struct ReadingOrderFiller<'a> {
    shape: &'a SkewShape,
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
    content: Option<&'a Partition>,
    max_label: usize,
}

impl<'a> ReadingOrderFiller<'a> {
    fn new(shape: &'a SkewShape, content: Option<&'a Partition>) -> Self {
        let cells = (0..shape.rows())
            .flat_map(|r| {
                let (start, end) = shape.row_span(r);
                (start..end).rev().map(move |c| (r, c))
            })
            .collect();
        let max_label = match content {
            Some(nu) => nu.height(),
            None => shape.rows(),
        };
        Self {
            shape,
            cells,
            grid: (0..shape.rows()).map(|r| vec![0; shape.outer.part(r)]).collect(),
            counts: vec![0; max_label + 1],
            content,
            max_label,
        }
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[Vec<usize>])) {
        self.step(0, visit);
    }

    fn step(&mut self, k: usize, visit: &mut dyn FnMut(&[Vec<usize>])) {
        if k == self.cells.len() {
            visit(&self.grid);
            return;
        }
        let (r, c) = self.cells[k];
        let lo = if r > 0 && self.shape.contains(r - 1, c) {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        let hi = if self.shape.contains(r, c + 1) {
            self.grid[r][c + 1]
        } else {
            self.max_label
        };
        for label in lo..=hi.min(self.max_label) {
            if label > 1 && self.counts[label - 1] <= self.counts[label] {
                continue;
            }
            if let Some(nu) = self.content {
                if self.counts[label] >= nu.part(label - 1) {
                    continue;
                }
            }
            self.counts[label] += 1;
            self.grid[r][c] = label;
            self.step(k + 1, visit);
            self.counts[label] -= 1;
        }
        self.grid[r][c] = 0;
    }
}

fn grid_to_tableau(shape: &SkewShape, grid: &[Vec<usize>]) -> LRTableau {
    let rows = (0..shape.rows())
        .map(|r| {
            let (start, end) = shape.row_span(r);
            grid[r][start..end].to_vec()
        })
        .collect();
    LRTableau {
        shape: shape.clone(),
        rows,
    }
}

/// Every LR filling of `shape`, optionally restricted to a given enumeration.
pub fn lr_fillings(shape: &SkewShape, content: Option<&Partition>) -> Vec<LRTableau> {
    if let Some(nu) = content {
        if nu.size() != shape.box_count() {
            return Vec::new();
        }
    }
    let mut out = Vec::new();
    ReadingOrderFiller::new(shape, content).run(&mut |grid| out.push(grid_to_tableau(shape, grid)));
    out
}

fn count_fillings(shape: &SkewShape, content: &Partition) -> u64 {
    if content.size() != shape.box_count() {
        return 0;
    }
    let mut count = 0u64;
    ReadingOrderFiller::new(shape, Some(content)).run(&mut |_| count += 1);
    count
}

/// `c^λ_{μν}`: the number of LR fillings of `λ/μ` with enumeration `ν`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size()
        || !mu.is_subpartition_of(lambda)
        || !nu.is_subpartition_of(lambda)
    {
        return 0;
    }
    let shape = SkewShape {
        outer: lambda.clone(),
        inner: mu.clone(),
    };
    count_fillings(&shape, nu)
}

/// Partitions κ of `size` with `inner ⊆ κ`, `κ_i ≤ caps[i]` and height at most `caps.len()`.
fn partitions_between(inner: &Partition, caps: &[usize], size: usize) -> Vec<Partition> {
    fn go(
        row: usize,
        remaining: usize,
        prev: usize,
        inner: &Partition,
        caps: &[usize],
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        // inner rows still to be covered need at least this many boxes
        let required: usize = (row..inner.height()).map(|i| inner.part(i)).sum();
        if remaining < required {
            return;
        }
        if remaining == 0 {
            out.push(Partition::from_sorted(current.clone()));
            return;
        }
        if row == caps.len() {
            return;
        }
        let hi = prev.min(caps[row]).min(remaining);
        let lo = inner.part(row).max(1);
        for part in (lo..=hi).rev() {
            current.push(part);
            go(row + 1, remaining - part, part, inner, caps, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(0, size, usize::MAX, inner, caps, &mut Vec::new(), &mut out);
    out
}

/// Iterated coefficient `c^λ_{f₁f₂…f_k}`, composed left to right through
/// intermediate partitions κ ⊆ λ.
pub fn iterated_lr(lambda: &Partition, factors: &[Partition]) -> u64 {
    let Some((first, rest)) = factors.split_first() else {
        return u64::from(lambda.is_empty());
    };
    let total: usize = factors.iter().map(Partition::size).sum();
    if total != lambda.size() || !first.is_subpartition_of(lambda) {
        return 0;
    }
    let mut layer: BTreeMap<Partition, u64> = BTreeMap::from([(first.clone(), 1)]);
    for (i, factor) in rest.iter().enumerate() {
        if i + 1 == rest.len() {
            return layer
                .iter()
                .map(|(kappa, &coef)| coef * lr_coefficient(lambda, kappa, factor))
                .sum();
        }
        let mut next = BTreeMap::new();
        for (kappa, &coef) in &layer {
            for grown in partitions_between(kappa, lambda.parts(), kappa.size() + factor.size()) {
                let c = lr_coefficient(&grown, kappa, factor);
                if c > 0 {
                    *next.entry(grown).or_insert(0) += coef * c;
                }
            }
        }
        layer = next;
    }
    // single factor
    u64::from(first == lambda)
}

/// Expands the product `s_{f₁} s_{f₂} ⋯ s_{f_k}` into Schur functions,
/// keeping only shapes with at most `max_height` rows.
pub fn lr_product(factors: &[Partition], max_height: usize) -> BTreeMap<Partition, u64> {
    let mut layer = BTreeMap::from([(Partition::empty(), 1u64)]);
    for factor in factors {
        let mut next = BTreeMap::new();
        for (kappa, &coef) in &layer {
            let rows = (kappa.height() + factor.height()).min(max_height);
            let caps: Vec<usize> = (0..rows).map(|i| kappa.part(i) + factor.size()).collect();
            for grown in partitions_between(kappa, &caps, kappa.size() + factor.size()) {
                let c = lr_coefficient(&grown, kappa, factor);
                if c > 0 {
                    *next.entry(grown).or_insert(0) += coef * c;
                }
            }
        }
        layer = next;
    }
    layer
}

/// Counts semistandard fillings of `shape` with exact enumeration `content`
/// that are LR fillings, by plain enumeration of semistandard fillings
/// followed by a full lattice-word check.
fn count_fillings_brute(shape: &SkewShape, content: &Partition) -> u64 {
    if content.size() != shape.box_count() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..shape.rows())
        .flat_map(|r| {
            let (start, end) = shape.row_span(r);
            (start..end).map(move |c| (r, c))
        })
        .collect();
    let mut remaining: Vec<usize> = content.parts().to_vec();
    let mut grid: Vec<Vec<usize>> = (0..shape.rows()).map(|r| vec![0; shape.outer.part(r)]).collect();
    let mut count = 0;

    fn go(
        k: usize,
        cells: &[(usize, usize)],
        shape: &SkewShape,
        remaining: &mut [usize],
        grid: &mut Vec<Vec<usize>>,
        count: &mut u64,
    ) {
        if k == cells.len() {
            if grid_to_tableau(shape, grid).is_lr_filling() {
                *count += 1;
            }
            return;
        }
        let (r, c) = cells[k];
        let mut lo = 1;
        if c > 0 && shape.contains(r, c - 1) {
            lo = grid[r][c - 1];
        }
        if r > 0 && shape.contains(r - 1, c) {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        for label in lo..=remaining.len() {
            if remaining[label - 1] == 0 {
                continue;
            }
            remaining[label - 1] -= 1;
            grid[r][c] = label;
            go(k + 1, cells, shape, remaining, grid, count);
            remaining[label - 1] += 1;
        }
        grid[r][c] = 0;
    }

    go(0, &cells, shape, &mut remaining, &mut grid, &mut count);
    count
}

/// `c^λ_{μνζ}` counted directly: split `λ/μ` into a region for ν followed by
/// a region for ζ, where `μ ∪ region(ν)` is a partition, and count LR fillings
/// of both regions.
pub fn iterated_lr_direct(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    zeta: &Partition,
) -> u64 {
    if lambda.size() != mu.size() + nu.size() + zeta.size() || !mu.is_subpartition_of(lambda) {
        return 0;
    }
    // choose, row by row, how many boxes of λ/μ go to ν's region
    #[allow(clippy::too_many_arguments)]
    fn go(
        row: usize,
        left: usize,
        kappa: &mut Vec<usize>,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        zeta: &Partition,
        total: &mut u64,
    ) {
        if row == lambda.height() {
            if left != 0 {
                return;
            }
            let Ok(k) = Partition::new(kappa.clone()) else {
                return;
            };
            let first = SkewShape::new(k.clone(), mu.clone()).expect("μ ⊆ κ by construction");
            let second = SkewShape::new(lambda.clone(), k).expect("κ ⊆ λ by construction");
            let a = count_fillings_brute(&first, nu);
            if a > 0 {
                *total += a * count_fillings_brute(&second, zeta);
            }
            return;
        }
        let room = lambda.part(row) - mu.part(row);
        for take in 0..=room.min(left) {
            let width = mu.part(row) + take;
            if row > 0 && width > kappa[row - 1] {
                break;
            }
            kappa.push(width);
            go(row + 1, left - take, kappa, lambda, mu, nu, zeta, total);
            kappa.pop();
        }
    }
    let mut total = 0;
    go(0, nu.size(), &mut Vec::new(), lambda, mu, nu, zeta, &mut total);
    total
}

/// A tuple `(λ, μ, ν, ζ)` with nonzero iterated coefficient.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ValidTuple {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub zeta: Partition,
    pub coefficient: u64,
}

/// The `k`-factor analogue of [`ValidTuple`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FactorTuple {
    pub lambda: Partition,
    pub factors: Vec<Partition>,
    pub coefficient: u64,
}

/// Every `(λ ⊢ p+q+r, μ ⊢ p, ν ⊢ q, ζ ⊢ r)` with `height(λ) ≤ d` and
/// `c^λ_{μνζ} > 0`, sorted by `(λ, μ, ν, ζ)`.
pub fn valid_tuples(p: usize, q: usize, r: usize, d: usize) -> Result<Vec<ValidTuple>> {
    if !(p >= q && q >= r && r >= 1) {
        return Err(domain(format!(
            "part sizes must satisfy p ≥ q ≥ r ≥ 1, got ({p}, {q}, {r})"
        )));
    }
    if d == 0 {
        return Err(domain("local dimension must be positive"));
    }
    let tuples = factor_tuples(&[p, q, r], d);
    Ok(tuples
        .into_iter()
        .map(|t| {
            let [mu, nu, zeta]: [Partition; 3] = t.factors.try_into().expect("three factors");
            ValidTuple {
                lambda: t.lambda,
                mu,
                nu,
                zeta,
                coefficient: t.coefficient,
            }
        })
        .collect())
}

/// Every `(λ, f₁, …, f_k)` with `f_i ⊢ sizes[i]`, `height(λ) ≤ d` and
/// nonzero iterated coefficient, sorted by `(λ, f₁, …, f_k)`.
pub fn factor_tuples(sizes: &[usize], d: usize) -> Vec<FactorTuple> {
    // factors must fit inside λ, so their heights are bounded by d as well
    let choices: Vec<Vec<Partition>> = sizes.iter().map(|&s| enumerate_partitions(s, d)).collect();
    let mut combos: Vec<Vec<Partition>> = vec![Vec::new()];
    for options in &choices {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.push(o.clone());
                    v
                })
            })
            .collect();
    }
    let mut out: Vec<FactorTuple> = combos
        .into_par_iter()
        .flat_map_iter(|factors| {
            lr_product(&factors, d)
                .into_iter()
                .map(move |(lambda, coefficient)| FactorTuple {
                    lambda,
                    factors: factors.clone(),
                    coefficient,
                })
        })
        .collect();
    out.sort();
    out
}

/// The LR filling of `shape` that is smallest when read left to right, top
/// to bottom, i.e. every box receives the smallest label that still admits a
/// valid completion. `None` when the shape has no LR filling.
pub fn minimal_lr_filling(shape: &SkewShape) -> Option<LRTableau> {
    let cells: Vec<(usize, usize)> = (0..shape.rows())
        .flat_map(|r| {
            let (start, end) = shape.row_span(r);
            (start..end).map(move |c| (r, c))
        })
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..shape.rows()).map(|r| vec![0; shape.outer.part(r)]).collect();
    let max_label = shape.rows().max(1);

    fn row_complete_ok(shape: &SkewShape, grid: &[Vec<usize>], upto_row: usize) -> bool {
        let word: Vec<usize> = (0..=upto_row)
            .flat_map(|r| {
                let (start, end) = shape.row_span(r);
                grid[r][start..end].iter().rev().copied().collect::<Vec<_>>()
            })
            .collect();
        is_lattice_word(&word)
    }

    fn go(
        k: usize,
        cells: &[(usize, usize)],
        shape: &SkewShape,
        grid: &mut Vec<Vec<usize>>,
        max_label: usize,
    ) -> bool {
        if k == cells.len() {
            return true;
        }
        let (r, c) = cells[k];
        let mut lo = 1;
        if c > 0 && shape.contains(r, c - 1) {
            lo = grid[r][c - 1];
        }
        if r > 0 && shape.contains(r - 1, c) {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        let row_ends = k + 1 == cells.len() || cells[k + 1].0 != r;
        for label in lo..=max_label {
            grid[r][c] = label;
            if row_ends && !row_complete_ok(shape, grid, r) {
                continue;
            }
            if go(k + 1, cells, shape, grid, max_label) {
                return true;
            }
        }
        grid[r][c] = 0;
        false
    }

    go(0, &cells, shape, &mut grid, max_label).then(|| grid_to_tableau(shape, &grid))
}

/// Compares two fillings of the same shape in left-to-right, top-to-bottom order.
pub fn row_major_cmp(a: &LRTableau, b: &LRTableau) -> std::cmp::Ordering {
    a.row_major().cmp(b.row_major())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(p(outer), p(inner)).unwrap()
    }

    /// The grey block of the (3,3,2) example: (3,2)/(2,1).
    fn grey_block() -> SkewShape {
        shape(&[3, 3], &[2, 1])
    }

    #[test]
    fn skew_shape_requires_containment() {
        assert!(SkewShape::new(p(&[2]), p(&[3])).is_err());
        assert_eq!(shape(&[3, 3, 2], &[2, 1]).box_count(), 5);
    }

    #[test]
    fn lr_filling_examples() {
        let t = LRTableau::new(grey_block(), vec![vec![1], vec![1, 2]]).unwrap();
        assert!(t.is_lr_filling());
        let t = LRTableau::new(shape(&[2, 1], &[1]), vec![vec![1], vec![1]]).unwrap();
        assert!(t.is_lr_filling());
        let t = LRTableau::new(shape(&[2], &[]), vec![vec![2, 1]]).unwrap();
        assert!(!t.is_lr_filling());
        // the ν = (3) colouring fails column strictness
        let t = LRTableau::new(grey_block(), vec![vec![1], vec![1, 1]]).unwrap();
        assert!(!t.is_semistandard());
        // reading word 2,1 is not a lattice word
        let t = LRTableau::new(shape(&[2, 1], &[1]), vec![vec![2], vec![1]]).unwrap();
        assert!(!t.is_lr_filling());
    }

    #[test]
    fn filling_shape_mismatch_is_structural() {
        let err = LRTableau::new(grey_block(), vec![vec![1, 1], vec![2]]).unwrap_err();
        assert!(matches!(err, QmcError::Structural(_)));
        assert!(LRTableau::new(shape(&[1], &[]), vec![vec![0]]).is_err());
    }

    #[test]
    fn enumerations() {
        let t = LRTableau::new(grey_block(), vec![vec![1], vec![1, 2]]).unwrap();
        assert_eq!(t.enumeration().unwrap(), p(&[2, 1]));
        let t = LRTableau::new(shape(&[2], &[2]), vec![]).unwrap();
        assert_eq!(t.enumeration().unwrap(), Partition::empty());
    }

    #[test]
    fn two_factor_examples() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[2])), 1);
        for n in 1..8 {
            for k in 0..=n {
                assert_eq!(lr_coefficient(&Partition::row(n), &Partition::row(k), &Partition::row(n - k)), 1);
            }
        }
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2, the smallest coefficient above one
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2]), &p(&[2])), 0);
    }

    #[test]
    fn iterated_examples() {
        let lam = p(&[3, 3, 2]);
        assert!(iterated_lr(&lam, &[p(&[2, 1]), p(&[2, 1]), p(&[2])]) >= 1);
        assert!(iterated_lr(&lam, &[p(&[2, 1]), p(&[2, 1]), p(&[1, 1])]) >= 1);
        // with the colouring of the example fixed (grey region (3,3)/(2,1)) the
        // enumeration (3) is impossible, but another colouring admits it
        assert_eq!(lr_coefficient(&p(&[3, 3]), &p(&[2, 1]), &p(&[3])), 0);
        assert_eq!(iterated_lr(&lam, &[p(&[2, 1]), p(&[3]), p(&[2])]), 1);
        assert_eq!(iterated_lr_direct(&lam, &p(&[2, 1]), &p(&[3]), &p(&[2])), 1);
        assert_eq!(iterated_lr(&p(&[3]), &[p(&[1]), p(&[1]), p(&[1])]), 1);
        assert_eq!(iterated_lr(&p(&[2, 1]), &[p(&[1]), p(&[1]), p(&[1])]), 2);
        assert_eq!(iterated_lr(&Partition::empty(), &[]), 1);
        assert_eq!(iterated_lr(&p(&[2]), &[p(&[2])]), 1);
        assert_eq!(iterated_lr(&p(&[2]), &[p(&[1, 1])]), 0);
    }

    #[test]
    fn direct_count_examples() {
        let lam = p(&[3, 3, 2]);
        let (mu, nu, zeta) = (p(&[2, 1]), p(&[2, 1]), p(&[2]));
        assert_eq!(
            iterated_lr_direct(&lam, &mu, &nu, &zeta),
            iterated_lr(&lam, &[mu, nu, zeta])
        );
        assert_eq!(iterated_lr_direct(&p(&[3]), &p(&[1]), &p(&[1]), &p(&[1])), 1);
        assert_eq!(iterated_lr_direct(&p(&[2, 1]), &p(&[1]), &p(&[1]), &p(&[1])), 2);
    }

    /// Brute-force two-colour oracle for single-row factors: colour the boxes of
    /// λ/(p) with q boxes of one colour and r of the other, every colouring checked
    /// for both regions being horizontal strips with μ ∪ region₁ a partition.
    fn single_row_oracle(lambda: &Partition, p_: usize, q: usize) -> u64 {
        let sh = SkewShape::new(lambda.clone(), Partition::row(p_)).unwrap();
        let cells: Vec<(usize, usize)> = (0..sh.rows())
            .flat_map(|r| {
                let (s, e) = sh.row_span(r);
                (s..e).map(move |c| (r, c))
            })
            .collect();
        let mut count = 0;
        for mask in 0u32..(1 << cells.len()) {
            if mask.count_ones() as usize != q {
                continue;
            }
            let first: Vec<_> = cells.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, c)| *c).collect();
            let second: Vec<_> = cells.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 0).map(|(_, c)| *c).collect();
            let mut kappa = vec![0; lambda.height()];
            kappa[0] = p_;
            for &(r, _) in &first {
                kappa[r] += 1;
            }
            let Ok(k) = Partition::new(kappa.clone()) else { continue };
            // region₁ must be exactly κ/(p), region₂ exactly λ/κ
            if !first.iter().all(|&(r, c)| c >= if r == 0 { p_ } else { 0 } && c < k.part(r)) {
                continue;
            }
            let strip = |cells: &[(usize, usize)]| {
                let mut cols: Vec<usize> = cells.iter().map(|c| c.1).collect();
                cols.sort();
                cols.windows(2).all(|w| w[0] != w[1])
            };
            if strip(&first) && strip(&second) && second.iter().all(|&(r, c)| c >= k.part(r)) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn single_row_factors_have_coefficient_one() {
        for (a, b, c) in [(1, 1, 1), (2, 1, 1), (2, 2, 1), (3, 2, 1), (3, 3, 2), (4, 2, 2)] {
            let lam = p(&[a, b, c]);
            let factors = [Partition::row(a), Partition::row(b), Partition::row(c)];
            assert_eq!(single_row_oracle(&lam, a, b), 1);
            assert_eq!(iterated_lr(&lam, &factors), 1, "{lam}");
        }
    }

    #[test]
    fn valid_tuples_examples() {
        let tuples = valid_tuples(1, 1, 1, 2).unwrap();
        let lambdas: std::collections::BTreeSet<_> = tuples.iter().map(|t| t.lambda.clone()).collect();
        assert_eq!(lambdas, [p(&[3]), p(&[2, 1])].into_iter().collect());

        let tuples = valid_tuples(1, 1, 1, 3).unwrap();
        assert!(tuples.contains(&ValidTuple {
            lambda: p(&[1, 1, 1]),
            mu: p(&[1]),
            nu: p(&[1]),
            zeta: p(&[1]),
            coefficient: 1,
        }));

        for t in valid_tuples(3, 3, 2, 3).unwrap() {
            assert!(t.mu.is_subpartition_of(&t.lambda));
            assert!(t.nu.is_subpartition_of(&t.lambda));
            assert!(t.zeta.is_subpartition_of(&t.lambda));
            assert_eq!(t.coefficient, iterated_lr(&t.lambda, &[t.mu.clone(), t.nu.clone(), t.zeta.clone()]));
        }
        assert!(valid_tuples(1, 2, 1, 2).is_err());
        assert!(valid_tuples(2, 1, 0, 2).is_err());
    }

    #[test]
    fn valid_tuple_json_shape() {
        let t = ValidTuple {
            lambda: p(&[2, 1]),
            mu: p(&[1]),
            nu: p(&[1]),
            zeta: p(&[1]),
            coefficient: 2,
        };
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"lambda":[2,1],"mu":[1],"nu":[1],"zeta":[1],"coefficient":2}"#
        );
    }

    #[test]
    fn minimal_filling_examples() {
        let t = minimal_lr_filling(&grey_block()).unwrap();
        assert_eq!(t.rows(), &[vec![1], vec![1, 2]]);
        let t = minimal_lr_filling(&shape(&[5], &[2])).unwrap();
        assert_eq!(t.rows(), &[vec![1, 1, 1]]);
        let t = minimal_lr_filling(&shape(&[1, 1], &[])).unwrap();
        assert_eq!(t.rows(), &[vec![1], vec![2]]);
        // the black block (3,3,2)/(3,3)
        let t = minimal_lr_filling(&shape(&[3, 3, 2], &[3, 3])).unwrap();
        assert_eq!(t.reading_word(), vec![1, 1]);
        assert!(minimal_lr_filling(&shape(&[2], &[2])).is_some());
    }
}
