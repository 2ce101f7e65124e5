//! Exact diagonalization of swap Hamiltonians on `(ℂ^d)^⊗n`.
//!
//! All operators involved are real symmetric in the computational basis, so
//! states are dense real vectors. Basis index `b` is read as a base-`d`
//! string with site 0 as the most significant digit.

pub mod dense;

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, QmcError, Result};
use crate::graphs::{complement_decomposition, complete_graph, complete_multipartite, Graph};
use crate::partitions::enumerate_partitions;

/// Default cap on `d^n` for iterative methods.
pub const MAX_ITERATIVE_DIM: u128 = 1 << 22;
/// Cap on `d^n` for dense diagonalization.
pub const MAX_DENSE_DIM: u128 = 4096;
/// Below this dimension the matrix-vector product runs on one thread.
const PARALLEL_THRESHOLD: usize = 1 << 14;

fn state_dim(d: usize, n: usize) -> u128 {
    (d as u128).checked_pow(n as u32).unwrap_or(u128::MAX)
}

fn guard(d: usize, n: usize, limit: u128) -> Result<usize> {
    let dim = state_dim(d, n);
    if dim > limit {
        return Err(QmcError::SizeGuard { dim, limit });
    }
    Ok(dim as usize)
}

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    d: usize,
    n: usize,
    amplitudes: Vec<f64>,
}

impl StateVector {
    pub fn zeros(d: usize, n: usize) -> Result<Self> {
        let dim = guard(d, n, MAX_ITERATIVE_DIM)?;
        Ok(Self {
            d,
            n,
            amplitudes: vec![0.0; dim],
        })
    }

    pub fn from_amplitudes(d: usize, n: usize, amplitudes: Vec<f64>) -> Result<Self> {
        if d == 0 {
            return Err(domain("local dimension must be positive"));
        }
        if state_dim(d, n) != amplitudes.len() as u128 {
            return Err(domain(format!(
                "expected {} amplitudes for d = {d}, n = {n}, got {}",
                state_dim(d, n),
                amplitudes.len()
            )));
        }
        if amplitudes.iter().any(|x| !x.is_finite()) {
            return Err(domain("amplitudes must be finite"));
        }
        Ok(Self { d, n, amplitudes })
    }

    /// The product state `|digits[0] digits[1] …⟩`.
    pub fn basis(d: usize, digits: &[usize]) -> Result<Self> {
        if let Some(&bad) = digits.iter().find(|&&x| x >= d) {
            return Err(domain(format!("digit {bad} out of range for d = {d}")));
        }
        let mut v = Self::zeros(d, digits.len())?;
        let index = digits.iter().fold(0, |acc, &x| acc * d + x);
        v.amplitudes[index] = 1.0;
        Ok(v)
    }

    /// Entries drawn uniformly from `[-1, 1)` with a seeded generator.
    pub fn random(d: usize, n: usize, seed: u64) -> Result<Self> {
        let mut v = Self::zeros(d, n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        v.amplitudes
            .iter_mut()
            .for_each(|x| *x = rng.gen_range(-1.0..1.0));
        Ok(v)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub fn dot(&self, other: &StateVector) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    fn scale(&mut self, factor: f64) {
        self.amplitudes.iter_mut().for_each(|x| *x *= factor);
    }

    /// Place value of site `i`.
    fn stride(&self, i: usize) -> usize {
        self.d.pow((self.n - 1 - i) as u32)
    }
}

/// Index obtained from `b` by exchanging the digits with place values
/// `si` and `sj`.
#[inline]
fn swapped_index(b: usize, d: usize, si: usize, sj: usize) -> usize {
    let di = (b / si) % d;
    let dj = (b / sj) % d;
    b + dj * si + di * sj - di * si - dj * sj
}

/// `Swap_ij v`: amplitude at `b` is taken from `b` with digits `i`, `j` exchanged.
pub fn apply_swap(v: &StateVector, i: usize, j: usize) -> Result<StateVector> {
    if i >= v.n || j >= v.n {
        return Err(domain(format!("sites ({i}, {j}) out of range for n = {}", v.n)));
    }
    if i == j {
        return Err(domain("swap needs two distinct sites"));
    }
    let (si, sj) = (v.stride(i), v.stride(j));
    let amplitudes = (0..v.amplitudes.len())
        .map(|b| v.amplitudes[swapped_index(b, v.d, si, sj)])
        .collect();
    Ok(StateVector {
        d: v.d,
        n: v.n,
        amplitudes,
    })
}

/// `H_G^d = Σ_{(i,j) ∈ E} 2(I − Swap_ij)`, applied matrix-free.
#[derive(Clone, Debug)]
pub struct HamiltonianOperator {
    graph: Graph,
    d: usize,
    /// Place values of both endpoints of each edge.
    strides: Vec<(usize, usize)>,
}

impl HamiltonianOperator {
    pub fn new(graph: Graph, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(domain("local dimension must be positive"));
        }
        let n = graph.n();
        let stride = |i: usize| d.pow((n - 1 - i) as u32);
        let strides = graph.edges().map(|(i, j)| (stride(i), stride(j))).collect();
        Ok(Self { graph, d, strides })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> u128 {
        state_dim(self.d, self.graph.n())
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        if v.d != self.d || v.n != self.graph.n() {
            return Err(domain(format!(
                "operator acts on d = {}, n = {} but the vector has d = {}, n = {}",
                self.d,
                self.graph.n(),
                v.d,
                v.n
            )));
        }
        let mut out = vec![0.0; v.amplitudes.len()];
        self.apply_into(&v.amplitudes, &mut out);
        Ok(StateVector {
            d: v.d,
            n: v.n,
            amplitudes: out,
        })
    }

    fn apply_into(&self, input: &[f64], out: &mut [f64]) {
        let entry = |b: usize| -> f64 {
            let x = input[b];
            self.strides
                .iter()
                .map(|&(si, sj)| x - input[swapped_index(b, self.d, si, sj)])
                .sum::<f64>()
                * 2.0
        };
        if out.len() >= PARALLEL_THRESHOLD {
            out.par_iter_mut().enumerate().for_each(|(b, y)| *y = entry(b));
        } else {
            out.iter_mut().enumerate().for_each(|(b, y)| *y = entry(b));
        }
    }

    /// The dense matrix, row-major.
    pub fn to_dense(&self) -> Result<Vec<f64>> {
        let dim = guard(self.d, self.graph.n(), MAX_DENSE_DIM)?;
        let mut m = vec![0.0; dim * dim];
        for b in 0..dim {
            for &(si, sj) in &self.strides {
                let s = swapped_index(b, self.d, si, sj);
                m[b * dim + b] += 2.0;
                m[b * dim + s] -= 2.0;
            }
        }
        Ok(m)
    }
}

/// `apply_hamiltonian` under its operation name.
pub fn apply_hamiltonian(h: &HamiltonianOperator, v: &StateVector) -> Result<StateVector> {
    h.apply(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowerOptions {
    pub tol: f64,
    pub max_iters: usize,
    pub seed: u64,
    pub max_dim: u128,
}

impl Default for PowerOptions {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            max_iters: 200_000,
            seed: 42,
            max_dim: MAX_ITERATIVE_DIM,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenEstimate {
    pub value: f64,
    pub iterations: usize,
    /// `‖Hv − ρv‖` for the final unit vector `v`.
    pub residual: f64,
    /// Change of the Rayleigh quotient in the last iteration.
    pub last_delta: f64,
}

/// Largest eigenvalue by power iteration on `H`. `H` is positive
/// semidefinite, so its dominant eigenvalue is its largest one.
pub fn max_eigenvalue(h: &HamiltonianOperator, opts: &PowerOptions) -> Result<EigenEstimate> {
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(domain("tolerance must be positive"));
    }
    let n = h.graph.n();
    guard(h.d, n, opts.max_dim)?;
    let mut v = StateVector::random(h.d, n, opts.seed)?;
    let norm = v.norm();
    v.scale(1.0 / norm);
    let mut w = vec![0.0; v.amplitudes.len()];
    let mut previous = f64::NAN;
    let mut last_delta = f64::INFINITY;
    for iteration in 1..=opts.max_iters {
        h.apply_into(&v.amplitudes, &mut w);
        let rayleigh: f64 = v.amplitudes.iter().zip(&w).map(|(a, b)| a * b).sum();
        let residual = v
            .amplitudes
            .iter()
            .zip(&w)
            .map(|(a, b)| (b - rayleigh * a).powi(2))
            .sum::<f64>()
            .sqrt();
        let wnorm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if wnorm == 0.0 {
            // Hv = 0 for a generic v only when H vanishes
            return Ok(EigenEstimate {
                value: 0.0,
                iterations: iteration,
                residual: 0.0,
                last_delta: 0.0,
            });
        }
        last_delta = (rayleigh - previous).abs();
        if last_delta < opts.tol {
            return Ok(EigenEstimate {
                value: rayleigh,
                iterations: iteration,
                residual,
                last_delta,
            });
        }
        previous = rayleigh;
        for (a, b) in v.amplitudes.iter_mut().zip(&w) {
            *a = b / wnorm;
        }
        if iteration == opts.max_iters {
            return Err(QmcError::Convergence {
                iterations: iteration,
                rayleigh,
                residual,
            });
        }
    }
    Err(QmcError::Convergence {
        iterations: opts.max_iters,
        rayleigh: previous,
        residual: last_delta,
    })
}

/// All eigenvalues with multiplicity, ascending, from a dense solve.
pub fn full_spectrum(h: &HamiltonianOperator) -> Result<Vec<f64>> {
    let dense_matrix = h.to_dense()?;
    let dim = h.dim() as usize;
    Ok(dense::symmetric_eigenvalues(dense_matrix, dim))
}

/// One eigenvalue per line with 17 significant digits, ascending.
pub fn format_spectrum(eigenvalues: &[f64]) -> String {
    let mut sorted = eigenvalues.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted.iter().map(|x| format!("{x:.16e}\n")).collect()
}

/// Rounds every eigenvalue to the nearest integer, failing if any lies
/// farther than `tol` from it.
pub fn integer_multiset(eigenvalues: &[f64], tol: f64) -> Option<BTreeMap<i64, u128>> {
    let mut out = BTreeMap::new();
    for &x in eigenvalues {
        let nearest = x.round();
        // the gap to the next integer is then > 0.5 as required
        if (x - nearest).abs() > tol || tol >= 0.5 {
            return None;
        }
        *out.entry(nearest as i64).or_insert(0) += 1;
    }
    Some(out)
}

/// Spectrum of `H_{K_n}^d` predicted block by block: `η_λ` with multiplicity
/// `f^λ · weyl_dim(λ, d)` over `λ ⊢ n` with at most `d` rows.
pub fn predicted_clique_spectrum(n: usize, d: usize) -> Result<BTreeMap<i64, u128>> {
    let mut out = BTreeMap::new();
    for lambda in enumerate_partitions(n, d) {
        let mult = lambda.dim_irrep() * lambda.weyl_dim(d);
        *out.entry(lambda.eta_rows(d)?).or_insert(0) += mult;
    }
    Ok(out)
}

/// Checks the dense spectrum of `K_n` against [`predicted_clique_spectrum`].
pub fn verify_clique_spectrum(n: usize, d: usize) -> Result<bool> {
    if n == 0 {
        return Err(domain("need at least one vertex"));
    }
    let h = HamiltonianOperator::new(complete_graph(n), d)?;
    let spectrum = full_spectrum(&h)?;
    let Some(observed) = integer_multiset(&spectrum, 1e-8) else {
        return Ok(false);
    };
    Ok(observed == predicted_clique_spectrum(n, d)?)
}

/// Checks `H_{K_parts} v + Σ_blocks H_{clique(block)} v = H_{K_n} v` on
/// seeded random vectors, componentwise to `1e-10` relative to `‖H_{K_n} v‖_∞`.
pub fn verify_complement_identity(parts: &[usize], d: usize, trials: usize, seed: u64) -> Result<bool> {
    let multipartite = HamiltonianOperator::new(complete_multipartite(parts)?, d)?;
    let (kn, cliques) = complement_decomposition(parts)?;
    let kn = HamiltonianOperator::new(kn, d)?;
    let cliques = cliques
        .into_iter()
        .map(|g| HamiltonianOperator::new(g, d))
        .collect::<Result<Vec<_>>>()?;
    let n = kn.graph.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let v = StateVector::random(d, n, rng.gen())?;
        let mut lhs = multipartite.apply(&v)?;
        for h in &cliques {
            let part = h.apply(&v)?;
            lhs.amplitudes
                .iter_mut()
                .zip(&part.amplitudes)
                .for_each(|(a, b)| *a += b);
        }
        let rhs = kn.apply(&v)?;
        let scale = rhs.amplitudes.iter().fold(1.0f64, |m, x| m.max(x.abs()));
        let ok = lhs
            .amplitudes
            .iter()
            .zip(&rhs.amplitudes)
            .all(|(a, b)| (a - b).abs() <= 1e-10 * scale);
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}
