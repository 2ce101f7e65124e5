use std::fmt::Write as _;
use std::fs;

use qmc_core::graphs::complete_multipartite;
use qmc_core::lr::{iterated_lr, iterated_lr_direct};
use qmc_core::oracle::{format_spectrum, full_spectrum, max_eigenvalue, HamiltonianOperator, PowerOptions};
use qmc_core::solver::{
    closed_form_d1, closed_form_d2, closed_form_d3, printed_d2_balanced, solve_multipartite, solve_search,
};
use qmc_core::{graphs, Graph, Maximizer, QmcError, QmcInstance, QmcSolution};
use serde_json::{json, Value};
use thiserror::Error;

use crate::args::{BruteArgs, Command, EtaArgs, GraphArgs, InstanceArgs, LrArgs, OracleArgs, SweepArgs};
use crate::verify;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Computation(String),
    /// `verify` found a mismatch; the report is still printed.
    #[error("verification failed: {failed} check(s) did not pass")]
    VerificationFailed { report: Box<Report>, failed: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Computation(_) | CliError::VerificationFailed { .. } => 3,
        }
    }
}

impl From<QmcError> for CliError {
    fn from(e: QmcError) -> Self {
        match e {
            QmcError::Domain(_) | QmcError::Structural(_) | QmcError::Parse { .. } => CliError::Usage(e.to_string()),
            QmcError::SizeGuard { .. } | QmcError::Convergence { .. } => CliError::Computation(e.to_string()),
        }
    }
}

/// A command result in both output formats.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub text: String,
}

pub fn run(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Solve(a) => cmd_solve(a),
        Command::ClosedForm(a) => cmd_closed_form(a),
        Command::Brute(a) => cmd_brute(a),
        Command::Verify(a) => verify::cmd_verify(a),
        Command::Lr(a) => cmd_lr(a),
        Command::Eta(a) => cmd_eta(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Spectrum(a) => cmd_spectrum(a),
    }
}

pub(crate) fn power_options(o: &OracleArgs) -> PowerOptions {
    PowerOptions {
        tol: o.tol,
        max_iters: o.max_iters,
        seed: o.seed,
        ..PowerOptions::default()
    }
}

fn describe(m: &Maximizer) -> String {
    match m {
        Maximizer::Tripartite(t) => format!(
            "λ={} μ={} ν={} ζ={} c={}",
            t.lambda, t.mu, t.nu, t.zeta, t.coefficient
        ),
        Maximizer::Multipartite(t) => {
            let factors: Vec<String> = t.factors.iter().map(|f| f.to_string()).collect();
            format!("λ={} factors=[{}] c={}", t.lambda, factors.join(" "), t.coefficient)
        }
    }
}

pub fn solve(d: usize, parts: &[usize]) -> Result<QmcSolution, CliError> {
    match parts.len() {
        3 => Ok(solve_search(&QmcInstance::new(d, parts.to_vec())?)?),
        0 | 1 => Err(CliError::Usage("need at least two parts".into())),
        _ => Ok(solve_multipartite(parts, d)?),
    }
}

fn cmd_solve(a: &InstanceArgs) -> Result<Report, CliError> {
    let sol = solve(a.d, &a.parts.0)?;
    let mut text = format!("d = {}, parts = {:?}\nvalue: {}\nargmax:\n", sol.d, sol.parts, sol.value);
    for m in &sol.argmax {
        writeln!(text, "  {}", describe(m)).unwrap();
    }
    Ok(Report {
        json: serde_json::to_value(&sol).expect("solutions serialize"),
        text,
    })
}

fn sorted_triple(parts: &[usize]) -> Result<(usize, usize, usize), CliError> {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    match sorted[..] {
        [p, q, r] => Ok((p, q, r)),
        _ => Err(CliError::Usage(format!(
            "closed forms need exactly three parts, got {}",
            parts.len()
        ))),
    }
}

/// The closed-form value for `d ∈ {1, 2, 3}`, or `None` for other `d`.
pub fn closed_form(d: usize, p: usize, q: usize, r: usize) -> Result<Option<i64>, QmcError> {
    Ok(match d {
        1 => Some(closed_form_d1(p, q, r)?),
        2 => Some(closed_form_d2(p, q, r)?),
        3 => Some(closed_form_d3(p, q, r)?),
        _ => None,
    })
}

fn cmd_closed_form(a: &InstanceArgs) -> Result<Report, CliError> {
    let (p, q, r) = sorted_triple(&a.parts.0)?;
    let value = closed_form(a.d, p, q, r)?
        .ok_or_else(|| CliError::Usage(format!("no closed form for d = {}; use `solve`", a.d)))?;
    let printed = if a.d == 2 { printed_d2_balanced(p, q, r)? } else { None };
    let mut text = format!("d = {}, parts = [{p}, {q}, {r}]\nvalue: {value}\n", a.d);
    if let Some(printed) = printed {
        writeln!(
            text,
            "note: the published constant for this balanced case is {printed}, which differs from {value} \
             (Ξ is always even)"
        )
        .unwrap();
    }
    Ok(Report {
        json: json!({
            "d": a.d,
            "parts": [p, q, r],
            "method": "closed_form",
            "value": value,
            "printed": printed,
            "printed_matches": printed.map(|x| x == value),
        }),
        text,
    })
}

fn load_graph(g: &GraphArgs) -> Result<(Graph, Option<Vec<usize>>), CliError> {
    match (&g.parts, &g.graph) {
        (Some(parts), None) => Ok((complete_multipartite(&parts.0)?, Some(parts.0.clone()))),
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            Ok((graphs::parse_edge_list(&text)?, None))
        }
        _ => Err(CliError::Usage("give exactly one of --parts and --graph".into())),
    }
}

fn cmd_brute(a: &BruteArgs) -> Result<Report, CliError> {
    let (graph, parts) = load_graph(&a.graph)?;
    let (n, edges) = (graph.n(), graph.edge_count());
    let h = HamiltonianOperator::new(graph, a.graph.d)?;
    let opts = power_options(&a.oracle);
    let est = max_eigenvalue(&h, &opts)?;
    let text = format!(
        "d = {}, n = {n}, |E| = {edges}\nvalue: {:.9}\niterations: {}, residual: {:.3e}, last Δ: {:.3e}, seed: {}\n",
        a.graph.d, est.value, est.iterations, est.residual, est.last_delta, opts.seed
    );
    Ok(Report {
        json: json!({
            "d": a.graph.d,
            "n": n,
            "edges": edges,
            "parts": parts,
            "method": "oracle",
            "value": est.value,
            "iterations": est.iterations,
            "residual": est.residual,
            "last_delta": est.last_delta,
            "tol": opts.tol,
            "max_iters": opts.max_iters,
            "seed": opts.seed,
        }),
        text,
    })
}

fn cmd_lr(a: &LrArgs) -> Result<Report, CliError> {
    let factors = &a.factors.0;
    let coefficient = iterated_lr(&a.lambda, factors);
    let direct = if a.direct {
        match &factors[..] {
            [mu, nu, zeta] => Some(iterated_lr_direct(&a.lambda, mu, nu, zeta)),
            _ => return Err(CliError::Usage("--direct needs exactly three factors".into())),
        }
    } else {
        None
    };
    let names: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
    let mut text = format!("c^{}_{{{}}} = {coefficient}\n", a.lambda, names.join(" "));
    if let Some(direct) = direct {
        writeln!(text, "direct count: {direct}").unwrap();
    }
    Ok(Report {
        json: json!({
            "lambda": a.lambda,
            "factors": factors,
            "coefficient": coefficient,
            "direct": direct,
        }),
        text,
    })
}

fn as_u64(x: u128, what: &str) -> Result<u64, CliError> {
    u64::try_from(x).map_err(|_| CliError::Computation(format!("{what} = {x} does not fit in 64 bits")))
}

fn cmd_eta(a: &EtaArgs) -> Result<Report, CliError> {
    let lam = &a.partition;
    let dim = as_u64(lam.dim_irrep(), "dim")?;
    let (eta_rows, weyl) = match a.d {
        Some(d) => (Some(lam.eta_rows(d)?), Some(as_u64(lam.weyl_dim(d), "weyl_dim")?)),
        None => (None, None),
    };
    let mut text = format!(
        "partition: {lam}\nsize: {}, height: {}\ncontent sum: {}\neta: {}\ndim: {dim}\n",
        lam.size(),
        lam.height(),
        lam.content_sum(),
        lam.eta_contents()
    );
    if let (Some(d), Some(rows), Some(w)) = (a.d, eta_rows, weyl) {
        writeln!(text, "eta (rows, d = {d}): {rows}\nweyl dim (d = {d}): {w}").unwrap();
    }
    Ok(Report {
        json: json!({
            "partition": lam,
            "size": lam.size(),
            "height": lam.height(),
            "content_sum": lam.content_sum(),
            "eta": lam.eta_contents(),
            "dim_irrep": dim,
            "d": a.d,
            "eta_rows": eta_rows,
            "weyl_dim": weyl,
        }),
        text,
    })
}

/// Tripartite `(p, q, r)`, `p ≥ q ≥ r ≥ 1`, with `min_n ≤ p + q + r ≤ max_n`,
/// ordered by `n` and then lexicographically.
pub fn tripartite_grid(min_n: usize, max_n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in min_n.max(3)..=max_n {
        for r in 1..=n / 3 {
            for q in r..=(n - r) / 2 {
                out.push((n - q - r, q, r));
            }
        }
    }
    out.sort_by_key(|&(p, q, r)| (p + q + r, p, q, r));
    out
}

fn cmd_sweep(a: &SweepArgs) -> Result<Report, CliError> {
    if a.d == 0 {
        return Err(CliError::Usage("local dimension must be positive".into()));
    }
    let opts = power_options(&a.oracle);
    let mut rows = Vec::new();
    let mut text = String::from("p\tq\tr\td\tsearch_value\tclosed_form_value\toracle_value\n");
    for (p, q, r) in tripartite_grid(a.min_n, a.max_n) {
        let search = solve_search(&QmcInstance::new(a.d, vec![p, q, r])?)?.value;
        let closed = closed_form(a.d, p, q, r)?;
        let dim = (a.d as u128).checked_pow((p + q + r) as u32);
        let oracle = match dim {
            Some(dim) if dim <= a.oracle_max_dim as u128 => {
                let h = HamiltonianOperator::new(complete_multipartite(&[p, q, r])?, a.d)?;
                Some(max_eigenvalue(&h, &opts)?.value)
            }
            _ => None,
        };
        let fmt_opt = |x: Option<String>| x.unwrap_or_else(|| "NA".into());
        writeln!(
            text,
            "{p}\t{q}\t{r}\t{}\t{search}\t{}\t{}",
            a.d,
            fmt_opt(closed.map(|c| c.to_string())),
            fmt_opt(oracle.map(|o| format!("{o:.9}")))
        )
        .unwrap();
        rows.push(json!({
            "p": p, "q": q, "r": r, "d": a.d,
            "search_value": search,
            "closed_form_value": closed,
            "oracle_value": oracle,
        }));
    }
    Ok(Report {
        json: json!({
            "d": a.d,
            "min_n": a.min_n.max(3),
            "max_n": a.max_n.max(3),
            "oracle_max_dim": a.oracle_max_dim,
            "seed": opts.seed,
            "rows": rows,
        }),
        text,
    })
}

fn cmd_spectrum(a: &GraphArgs) -> Result<Report, CliError> {
    let (graph, _) = load_graph(a)?;
    let (n, edges) = (graph.n(), graph.edge_count());
    let h = HamiltonianOperator::new(graph, a.d)?;
    let eigenvalues = full_spectrum(&h)?;
    Ok(Report {
        text: format_spectrum(&eigenvalues),
        json: json!({
            "d": a.d,
            "n": n,
            "edges": edges,
            "eigenvalues": eigenvalues,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_sorted_and_complete() {
        let grid = tripartite_grid(3, 6);
        assert_eq!(grid.first(), Some(&(1, 1, 1)));
        assert!(grid.windows(2).all(|w| {
            let key = |t: &(usize, usize, usize)| (t.0 + t.1 + t.2, t.0, t.1, t.2);
            key(&w[0]) < key(&w[1])
        }));
        // partitions of n into exactly three parts: 1, 1, 2, 3 for n = 3..6
        assert_eq!(grid.len(), 7);
        assert!(grid.iter().all(|&(p, q, r)| p >= q && q >= r && r >= 1));
    }

    #[test]
    fn error_mapping() {
        let usage: CliError = QmcError::Domain("x".into()).into();
        assert_eq!(usage.exit_code(), 2);
        let comp: CliError = QmcError::SizeGuard { dim: 10, limit: 1 }.into();
        assert_eq!(comp.exit_code(), 3);
    }
}
