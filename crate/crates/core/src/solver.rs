//! d-QMC values for complete multipartite graphs.
//!
//! On the irrep block λ of `(ℂ^d)^⊗n` the Hamiltonian of `K_{p,q,r}` splits
//! as the clique scalar `η_λ` minus the clique scalars of the three parts, so
//! the largest eigenvalue is the maximum of `Ξ = η_λ − η_μ − η_ν − η_ζ` over
//! tuples with nonzero iterated LR coefficient and `height(λ) ≤ d`.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::lr::{factor_tuples, valid_tuples, FactorTuple, ValidTuple};
use crate::partitions::{balanced_partition, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QmcInstance {
    pub d: usize,
    pub parts: Vec<usize>,
}

impl QmcInstance {
    /// Sorts the parts nonincreasingly and checks that every part is positive.
    pub fn new(d: usize, mut parts: Vec<usize>) -> Result<Self> {
        if d == 0 {
            return Err(domain("local dimension must be positive"));
        }
        if parts.contains(&0) {
            return Err(domain("part sizes must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { d, parts })
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    fn tripartite(&self) -> Result<(usize, usize, usize)> {
        match self.parts[..] {
            [p, q, r] => Ok((p, q, r)),
            _ => Err(domain(format!(
                "expected three parts, got {}",
                self.parts.len()
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Search,
    ClosedForm,
    Oracle,
}

/// A maximizing tuple; three-part instances report [`ValidTuple`]s.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Maximizer {
    Tripartite(ValidTuple),
    Multipartite(FactorTuple),
}

impl Maximizer {
    pub fn lambda(&self) -> &Partition {
        match self {
            Maximizer::Tripartite(t) => &t.lambda,
            Maximizer::Multipartite(t) => &t.lambda,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QmcSolution {
    pub d: usize,
    pub parts: Vec<usize>,
    pub method: Method,
    pub value: i64,
    pub argmax: Vec<Maximizer>,
}

/// `Ξ(λ, μ, ν, ζ) = η_λ − η_μ − η_ν − η_ζ`.
pub fn xi(lambda: &Partition, mu: &Partition, nu: &Partition, zeta: &Partition) -> Result<i64> {
    xi_general(lambda, &[mu.clone(), nu.clone(), zeta.clone()])
}

/// `η_λ − Σ_i η_{f_i}` for any number of factors.
pub fn xi_general(lambda: &Partition, factors: &[Partition]) -> Result<i64> {
    let total: usize = factors.iter().map(Partition::size).sum();
    if total != lambda.size() {
        return Err(domain(format!(
            "|λ| = {} but the factors have total size {total}",
            lambda.size()
        )));
    }
    Ok(lambda.eta_contents() - factors.iter().map(Partition::eta_contents).sum::<i64>())
}

/// Maximizes Ξ over all valid tuples of a three-part instance.
pub fn solve_search(inst: &QmcInstance) -> Result<QmcSolution> {
    let (p, q, r) = inst.tripartite()?;
    let mut best: Option<i64> = None;
    let mut argmax = Vec::new();
    for t in valid_tuples(p, q, r, inst.d)? {
        let value = xi(&t.lambda, &t.mu, &t.nu, &t.zeta)?;
        match best {
            Some(b) if value < b => continue,
            Some(b) if value == b => {}
            _ => {
                best = Some(value);
                argmax.clear();
            }
        }
        argmax.push(Maximizer::Tripartite(t));
    }
    // valid_tuples is nonempty: λ = (n) with one-row factors always qualifies
    let value = best.expect("at least one valid tuple");
    Ok(QmcSolution {
        d: inst.d,
        parts: inst.parts.clone(),
        method: Method::Search,
        value,
        argmax,
    })
}

/// The k-part generalization of [`solve_search`]. Zero-size parts are
/// allowed here and contribute the empty partition as their factor.
pub fn solve_multipartite(parts: &[usize], d: usize) -> Result<QmcSolution> {
    if parts.len() < 2 {
        return Err(domain("need at least two parts"));
    }
    if d == 0 {
        return Err(domain("local dimension must be positive"));
    }
    let mut parts = parts.to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let mut best: Option<i64> = None;
    let mut argmax = Vec::new();
    for t in factor_tuples(&parts, d) {
        let value = xi_general(&t.lambda, &t.factors)?;
        match best {
            Some(b) if value < b => continue,
            Some(b) if value == b => {}
            _ => {
                best = Some(value);
                argmax.clear();
            }
        }
        argmax.push(t);
    }
    let value = best.expect("at least one valid tuple");
    let argmax = argmax
        .into_iter()
        .map(|t| match <[Partition; 3]>::try_from(t.factors.clone()) {
            Ok([mu, nu, zeta]) => Maximizer::Tripartite(ValidTuple {
                lambda: t.lambda,
                mu,
                nu,
                zeta,
                coefficient: t.coefficient,
            }),
            Err(_) => Maximizer::Multipartite(t),
        })
        .collect();
    Ok(QmcSolution {
        d,
        parts,
        method: Method::Search,
        value,
        argmax,
    })
}

fn check_sorted(p: usize, q: usize, r: usize) -> Result<()> {
    if p >= q && q >= r && r >= 1 {
        Ok(())
    } else {
        Err(domain(format!(
            "part sizes must satisfy p ≥ q ≥ r ≥ 1, got ({p}, {q}, {r})"
        )))
    }
}

/// With a single local state every swap acts trivially.
pub fn closed_form_d1(p: usize, q: usize, r: usize) -> Result<i64> {
    check_sorted(p, q, r)?;
    Ok(0)
}

/// `2(n−p)(p+1)` when `p ≥ q+r`, otherwise η of the balanced two-row partition
/// of `n`, i.e. `2k(k+1)` for `n = 2k` and `2k(k+2)` for `n = 2k+1`.
pub fn closed_form_d2(p: usize, q: usize, r: usize) -> Result<i64> {
    check_sorted(p, q, r)?;
    let n = (p + q + r) as i64;
    if p >= q + r {
        let p = p as i64;
        Ok(2 * (n - p) * (p + 1))
    } else {
        Ok(balanced_partition(p + q + r, 2)?.eta_contents())
    }
}

/// The published constants for the balanced `d = 2` case, `4k² − 1` for
/// `n = 2k` and `4k(k+1) − 3` for `n = 2k+1`. `None` when `p ≥ q + r`.
///
/// These are odd, while every Ξ is even, so they never match the true
/// value. Kept only so that reports can show the mismatch.
pub fn printed_d2_balanced(p: usize, q: usize, r: usize) -> Result<Option<i64>> {
    check_sorted(p, q, r)?;
    if p >= q + r {
        return Ok(None);
    }
    let n = (p + q + r) as i64;
    let k = n / 2;
    Ok(Some(if n % 2 == 0 {
        4 * k * k - 1
    } else {
        4 * k * (k + 1) - 3
    }))
}

/// `2n(2 + p + q) − 2(p² + q + q² + p(2 + q))`.
pub fn closed_form_d3(p: usize, q: usize, r: usize) -> Result<i64> {
    check_sorted(p, q, r)?;
    let (p, q, r) = (p as i64, q as i64, r as i64);
    let n = p + q + r;
    Ok(2 * n * (2 + p + q) - 2 * (p * p + q + q * q + p * (2 + q)))
}

/// The scalar by which `H_{K_n}^d` acts on the block λ.
pub fn clique_block_eigenvalue(lambda: &Partition, d: usize) -> Result<i64> {
    lambda.eta_rows(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn xi_examples() {
        let one = p(&[1]);
        assert_eq!(xi(&p(&[2, 1]), &one, &one, &one).unwrap(), 6);
        assert_eq!(xi(&p(&[1, 1, 1]), &one, &one, &one).unwrap(), 12);
        assert_eq!(xi(&p(&[6]), &p(&[3]), &p(&[2]), &p(&[1])).unwrap(), 0);
        assert!(xi(&p(&[3]), &one, &one, &p(&[2])).is_err());
    }

    /// Expanding Ξ with η = m² − m − 2Σ gives the constant
    /// 2(n(p+q) − p² − pq − q²) and content sums of μ, ν, ζ with coefficient 2.
    #[test]
    fn contents_expansion_uses_coefficient_two() {
        for t in valid_tuples(3, 2, 2, 3).unwrap().into_iter().chain(valid_tuples(4, 3, 1, 2).unwrap()) {
            let (pp, qq) = (t.mu.size() as i64, t.nu.size() as i64);
            let n = t.lambda.size() as i64;
            let expanded = 2 * (n * (pp + qq) - pp * pp - pp * qq - qq * qq)
                - 2 * t.lambda.content_sum()
                + 2 * (t.mu.content_sum() + t.nu.content_sum() + t.zeta.content_sum());
            assert_eq!(expanded, xi(&t.lambda, &t.mu, &t.nu, &t.zeta).unwrap());
        }
    }

    #[test]
    fn search_examples() {
        let sol = solve_search(&QmcInstance::new(3, vec![1, 1, 1]).unwrap()).unwrap();
        assert_eq!(sol.value, 12);
        assert!(sol.argmax.iter().any(|m| m.lambda() == &p(&[1, 1, 1])));
        assert_eq!(solve_search(&QmcInstance::new(2, vec![3, 1, 1]).unwrap()).unwrap().value, 16);
        assert_eq!(solve_search(&QmcInstance::new(2, vec![1, 1, 1]).unwrap()).unwrap().value, 6);
        assert_eq!(solve_search(&QmcInstance::new(1, vec![4, 2, 1]).unwrap()).unwrap().value, 0);
        assert!(solve_search(&QmcInstance::new(2, vec![1, 1]).unwrap()).is_err());
        assert!(QmcInstance::new(2, vec![1, 0, 1]).is_err());
    }

    #[test]
    fn argmax_is_sorted_and_consistent() {
        let sol = solve_search(&QmcInstance::new(2, vec![2, 2, 2]).unwrap()).unwrap();
        let tuples: Vec<&ValidTuple> = sol
            .argmax
            .iter()
            .map(|m| match m {
                Maximizer::Tripartite(t) => t,
                Maximizer::Multipartite(_) => panic!("expected tripartite"),
            })
            .collect();
        assert!(tuples.windows(2).all(|w| w[0] < w[1]));
        for t in tuples {
            assert_eq!(xi(&t.lambda, &t.mu, &t.nu, &t.zeta).unwrap(), sol.value);
        }
    }

    #[test]
    fn closed_forms() {
        for (a, b, c) in [(3, 2, 1), (1, 1, 1), (5, 5, 5)] {
            assert_eq!(closed_form_d1(a, b, c).unwrap(), 0);
        }
        assert_eq!(closed_form_d2(3, 1, 1).unwrap(), 16);
        assert_eq!(closed_form_d2(2, 2, 1).unwrap(), 16);
        assert_eq!(closed_form_d2(1, 1, 1).unwrap(), 6);
        assert_eq!(closed_form_d3(1, 1, 1).unwrap(), 12);
        assert_eq!(closed_form_d3(2, 1, 1).unwrap(), 16);
        assert_eq!(closed_form_d3(2, 2, 1).unwrap(), 24);
        assert!(closed_form_d3(1, 2, 1).is_err());
        assert!(closed_form_d2(1, 1, 0).is_err());
    }

    #[test]
    fn printed_constants_disagree_by_parity() {
        assert_eq!(printed_d2_balanced(2, 2, 1).unwrap(), Some(21));
        assert_eq!(printed_d2_balanced(1, 1, 1).unwrap(), Some(5));
        assert_eq!(printed_d2_balanced(3, 1, 1).unwrap(), None);
        for (a, b, c) in [(1, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 2), (3, 3, 2)] {
            let printed = printed_d2_balanced(a, b, c).unwrap().unwrap();
            assert_eq!(printed % 2, 1);
            assert_ne!(printed, closed_form_d2(a, b, c).unwrap());
        }
    }

    #[test]
    fn closed_form_d3_is_xi_of_rows() {
        for (a, b, c) in [(1, 1, 1), (3, 2, 1), (4, 4, 2), (6, 1, 1)] {
            let value = xi(&p(&[a, b, c]), &Partition::row(a), &Partition::row(b), &Partition::row(c)).unwrap();
            assert_eq!(closed_form_d3(a, b, c).unwrap(), value);
        }
    }

    #[test]
    fn clique_blocks() {
        assert_eq!(clique_block_eigenvalue(&p(&[4]), 1).unwrap(), 0);
        assert_eq!(clique_block_eigenvalue(&p(&[2, 1]), 2).unwrap(), 6);
        assert_eq!(clique_block_eigenvalue(&p(&[1, 1, 1]), 3).unwrap(), 12);
        assert!(clique_block_eigenvalue(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn multipartite() {
        for (a, b) in [(1, 1), (2, 1), (3, 2), (4, 1), (3, 3)] {
            let sol = solve_multipartite(&[a, b], 2).unwrap();
            assert_eq!(sol.value, 2 * b as i64 * (a as i64 + 1), "K_{{{a},{b}}}");
        }
        let multi = solve_multipartite(&[1, 2, 2], 3).unwrap();
        let tri = solve_search(&QmcInstance::new(3, vec![2, 2, 1]).unwrap()).unwrap();
        assert_eq!(multi, tri);
        // empty factors are allowed only here
        let degenerate = solve_multipartite(&[3, 0], 2).unwrap();
        assert_eq!(degenerate.value, 0);
        assert!(solve_multipartite(&[3], 2).is_err());
    }
}
