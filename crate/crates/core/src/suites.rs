//! Named verification suites over a desk-scale grid, with JSON reports.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::longform::divided::{
    check_eae, check_t_power, commutation_checks, divided_power, dp3_certificate, k_binomial,
};
use crate::longform::{
    long_element, long_mul_evaluated, long_mul_symbolic, weight_grid, zero_diagonal_matrices,
    LongGen,
};
use crate::qarith::LaurentPoly;
use crate::schur::formulas::generator_matrix;
use crate::schur::order::{linear_extension, strictly_less};
use crate::schur::triangular::{
    check_leading, leading_cases, middle_reductions, triangular_monomial,
};
use crate::schur::{basis_size, multi_mul, short_mul, Kind, SchurAlgebra, SchurElement, BASIS_CAP};
use crate::tensor::checks::{
    check_commuting_and_match, check_relations, hecke_relations, NamedCheck,
};
use crate::weyl::{Composition, ThetaMatrix};

/// Largest `n` and `r` a suite accepts.
pub const GRID_CAP: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Short,
    Multi,
    Long,
    Triangular,
    Leading,
    Relations,
    Commuting,
    Divided,
    Kbinom,
    Stability,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Short,
        Suite::Multi,
        Suite::Long,
        Suite::Triangular,
        Suite::Leading,
        Suite::Relations,
        Suite::Commuting,
        Suite::Divided,
        Suite::Kbinom,
        Suite::Stability,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Short => "short",
            Suite::Multi => "multi",
            Suite::Long => "long",
            Suite::Triangular => "triangular",
            Suite::Leading => "leading",
            Suite::Relations => "relations",
            Suite::Commuting => "commuting",
            Suite::Divided => "divided",
            Suite::Kbinom => "kbinom",
            Suite::Stability => "stability",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown suite {s:?}")))
    }
}

/// Grid and run options.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub n: usize,
    pub r: usize,
    /// Weights range over `[-jbox, jbox]^{2n}`.
    pub jbox: i64,
    /// Corrupt the first case on purpose; for testing the failure path.
    pub perturb: bool,
    /// Worker count; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl SuiteConfig {
    pub fn new(n: usize, r: usize) -> Self {
        Self {
            n,
            r,
            jbox: 1,
            perturb: false,
            threads: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > GRID_CAP {
            return Err(Error::Parameter(format!(
                "n = {} outside [1, {GRID_CAP}]",
                self.n
            )));
        }
        if self.r == 0 || self.r > GRID_CAP {
            return Err(Error::Parameter(format!(
                "r = {} outside [1, {GRID_CAP}]",
                self.r
            )));
        }
        if !(0..=2).contains(&self.jbox) {
            return Err(Error::Parameter(format!(
                "jbox = {} outside [0, 2]",
                self.jbox
            )));
        }
        let size = basis_size(self.n, self.r);
        if size > BASIS_CAP as u128 {
            return Err(Error::BasisTooLarge {
                size: size as usize,
                cap: BASIS_CAP,
            });
        }
        Ok(())
    }
}

/// A failing case with both sides.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub case: Value,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub grid: Value,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Kept out of the JSON so identical runs print identical bytes.
    #[serde(skip)]
    pub wall: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Outcome of one case before aggregation.
struct Outcome {
    case: Value,
    lhs: Value,
    rhs: Value,
    ok: bool,
}

fn elements(case: Value, lhs: &SchurElement, rhs: &SchurElement) -> Outcome {
    Outcome {
        case,
        lhs: serde_json::to_value(lhs).expect("elements serialise"),
        rhs: serde_json::to_value(rhs).expect("elements serialise"),
        ok: lhs == rhs,
    }
}

fn flag(case: Value, ok: bool) -> Outcome {
    Outcome {
        case,
        lhs: Value::Bool(ok),
        rhs: Value::Bool(true),
        ok,
    }
}

fn named(checks: Vec<NamedCheck>, grid: &Value) -> Vec<Outcome> {
    checks
        .into_iter()
        .map(|c| flag(json!({"check": c.name, "grid": grid}), c.holds))
        .collect()
}

fn rows(a: &ThetaMatrix) -> Value {
    json!(a.rows())
}

fn kinds(n: usize) -> Vec<(Kind, usize)> {
    let mut out: Vec<(Kind, usize)> = (1..n)
        .flat_map(|h| [(Kind::Raise, h), (Kind::Lower, h)])
        .collect();
    out.push((Kind::Theta, n));
    out
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Raise => "raise",
        Kind::Lower => "lower",
        Kind::Theta => "theta",
    }
}

fn gen_name(g: &LongGen) -> String {
    match g {
        LongGen::O(j) => format!("O{j:?}"),
        LongGen::Raise(h) => format!("raise_{h}"),
        LongGen::Lower(h) => format!("lower_{h}"),
        LongGen::Middle => "middle".into(),
    }
}

fn long_gens(n: usize, jbox: i64) -> Vec<LongGen> {
    let mut gens = vec![LongGen::Middle];
    for h in 1..n {
        gens.push(LongGen::Raise(h));
        gens.push(LongGen::Lower(h));
    }
    gens.extend(
        weight_grid(n, -2 * jbox, 2 * jbox)
            .into_iter()
            .map(LongGen::O),
    );
    gens
}

fn par_map<T: Sync, F>(items: &[T], f: F) -> Result<Vec<Outcome>>
where
    F: Fn(&T) -> Result<Vec<Outcome>> + Sync + Send,
{
    let nested: Vec<Vec<Outcome>> = items.par_iter().map(f).collect::<Result<_>>()?;
    Ok(nested.into_iter().flatten().collect())
}

fn short(cfg: &SuiteConfig) -> Result<Vec<Outcome>> {
    let alg = SchurAlgebra::get(cfg.n, cfg.r)?;
    let mut inputs = Vec::new();
    for (kind, h) in kinds(cfg.n) {
        for lambda in Composition::all(cfg.n, cfg.r - 1) {
            for a in alg.basis_matrices() {
                inputs.push((kind, h, lambda.clone(), a));
            }
        }
    }
    par_map(&inputs, |(kind, h, lambda, a)| {
        let lhs = short_mul(*kind, *h, lambda, a)?;
        let rhs = alg.structure_constant(&generator_matrix(*kind, *h, 1, lambda), a)?;
        let case = json!({"kind": kind_name(*kind), "h": h, "lambda": lambda.parts, "A": rows(a)});
        Ok(vec![elements(case, &lhs, &rhs)])
    })
}

fn multi(cfg: &SuiteConfig) -> Result<Vec<Outcome>> {
    let alg = SchurAlgebra::get(cfg.n, cfg.r)?;
    let mut inputs = Vec::new();
    for m in 1..=cfg.r.min(3) as u32 {
        for (kind, h) in kinds(cfg.n).into_iter().filter(|(k, _)| *k != Kind::Theta) {
            for lambda in Composition::all(cfg.n, cfg.r - m as usize) {
                for a in alg.basis_matrices() {
                    inputs.push((kind, h, m, lambda.clone(), a));
                }
            }
        }
    }
    par_map(&inputs, |(kind, h, m, lambda, a)| {
        let lhs = multi_mul(*kind, *h, *m, lambda, a)?;
        let rhs = alg.structure_constant(&generator_matrix(*kind, *h, *m, lambda), a)?;
        let case =
            json!({"kind": kind_name(*kind), "h": h, "m": m, "lambda": lambda.parts, "A": rows(a)});
        Ok(vec![elements(case, &lhs, &rhs)])
    })
}

fn long_inputs(cfg: &SuiteConfig) -> Vec<(LongGen, ThetaMatrix, Vec<i64>)> {
    let mut inputs = Vec::new();
    for a in zero_diagonal_matrices(cfg.n, cfg.r.min(2)) {
        for j in weight_grid(cfg.n, -2 * cfg.jbox, 2 * cfg.jbox) {
            for g in long_gens(cfg.n, cfg.jbox) {
                inputs.push((g, a.clone(), j.clone()));
            }
        }
    }
    inputs
}

fn long(cfg: &SuiteConfig) -> Result<Vec<Outcome>> {
    par_map(&long_inputs(cfg), |(g, a, j)| {
        let lhs = long_mul_evaluated(g, a, j, cfg.r)?;
        let rhs = long_mul_symbolic(g, a, j)?.evaluate(cfg.r)?;
        let case = json!({"gen": gen_name(g), "A": rows(a), "jstar": j, "r": cfg.r});
        Ok(vec![elements(case, &lhs, &rhs)])
    })
}

fn stability(cfg: &SuiteConfig) -> Result<Vec<Outcome>> {
    par_map(&long_inputs(cfg), |(g, a, j)| {
        let rhs = long_mul_symbolic(g, a, j)?;
        let low = (a.total() as usize / 2).max(1);
        let mut out = Vec::new();
        for r in low..=cfg.r {
            let lhs = long_mul_evaluated(g, a, j, r)?;
            let case = json!({"gen": gen_name(g), "A": rows(a), "jstar": j, "r": r});
            out.push(elements(case, &lhs, &rhs.evaluate(r)?));
        }
        Ok(out)
    })
}

fn triangular(cfg: &SuiteConfig) -> Result<Vec<Outcome>> {
    let alg = SchurAlgebra::get(cfg.n, cfg.r)?;
    let basis = alg.basis_matrices();
    let monomials: Vec<(ThetaMatrix, SchurElement)> = basis
        .par_iter()
        .map(|a| Ok((a.clone(), triangular_monomial(&alg, a)?)))
        .collect::<Result<_>>()?;
    let mut out: Vec<Outcome> = monomials
        .iter()
        .map(|(a, m)| {
            let ok =
                m.coeff(a).is_one() && m.support().iter().all(|b| b == a || strictly_less(b, a));
            let case = json!({"check": "m(A) - [A] strictly lower", "A": rows(a)});
            Outcome {
                case,
                lhs: serde_json::to_value(m).expect("serialise"),
                rhs: json!({"leading": rows(a)}),
                ok,
            }
        })
        .collect();
    let order = linear_extension(&basis);
    let pos = |b: &ThetaMatrix| order.iter().position(|x| x == b).expect("basis element");
    let unitri = monomials
        .iter()
        .all(|(a, m)| m.coeff(a).is_one() && m.support().iter().all(|b| b == a || pos(b) < pos(a)));
    out.push(flag(
        json!({"check": "transition matrix unitriangular"}),
        unitri,
    ));
    let reductions: Vec<(ThetaMatrix, Vec<ThetaMatrix>)> = basis
        .iter()
        .map(|a| Ok(middle_reductions(a)?.into_iter().map(|fs| (a.clone(), fs))))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    out.extend(par_map(&reductions, |(a, fs)| {
        let p = alg.product_all(&fs.iter().map(SchurElement::basis).collect::<Vec<_>>())?;
        let ok = p.support().iter().all(|b| strictly_less(b, a));
        let case = json!({"check": "reduced middle factors lower", "A": rows(a),
            "factors": fs.iter().map(rows).collect::<Vec<_>>()});
        Ok(vec![Outcome {
            case,
            lhs: serde_json::to_value(&p).expect("serialise"),
            rhs: json!({"strictly_below": rows(a)}),
            ok,
        }])
    })?);
    Ok(out)
}

fn leading(cfg: &SuiteConfig) -> Result<Vec<Outcome>> {
    let alg = SchurAlgebra::get(cfg.n, cfg.r)?;
    let mut cases = Vec::new();
    for a in alg.basis_matrices() {
        for m in 1..=cfg.r as u32 {
            cases.extend(leading_cases(&a, m));
        }
    }
    par_map(&cases, |c| {
        let chk = check_leading(&alg, c)?;
        let case = json!({"rule": format!("{:?}", c.rule), "h": c.h, "m": c.m, "k": c.k,
            "left": rows(&c.left), "right": rows(&c.right)});
        Ok(vec![Outcome {
            case,
            lhs: serde_json::to_value(&chk.product).expect("serialise"),
            rhs: json!({"leading": rows(&c.leading)}),
            ok: chk.holds(),
        }])
    })
}

fn divided(cfg: &SuiteConfig) -> Result<Vec<Outcome>> {
    let (n, r) = (cfg.n, cfg.r);
    let mut out = Vec::new();
    for m in 1..=r.min(3) as u32 {
        for h in 1..n {
            for g in [LongGen::Raise(h), LongGen::Lower(h)] {
                let d = divided_power(&g, n, m, r)?;
                let case = json!({"check": "divided power", "gen": gen_name(&g), "m": m, "r": r});
                out.push(elements(case, &d.power, &d.expected));
            }
        }
        out.push(flag(
            json!({"check": "middle power expansion", "m": m, "n": n, "r": r}),
            check_t_power(n, m, r)?,
        ));
    }
    for a in 0..r as u32 {
        out.push(flag(
            json!({"check": "EaE recursion", "a": a, "n": n, "r": r}),
            check_eae(n, a, r)?,
        ));
    }
    if r >= 2 {
        let mut inputs = Vec::new();
        for m in 1..=(r - 1).min(2) as u32 {
            for a in zero_diagonal_matrices(n, (r - 1).min(1)) {
                for j in weight_grid(n, -cfg.jbox, cfg.jbox) {
                    inputs.push((m, a.clone(), j));
                }
            }
        }
        out.extend(par_map(&inputs, |(m, a, j)| {
            let ok = dp3_certificate(*m, a, j, r - 1)?;
            let case = json!({"check": "divided middle times long element, two r", "m": m,
                "A": rows(a), "jstar": j, "r": [r - 1, r]});
            Ok(vec![flag(case, ok)])
        })?);
    }
    let mut inputs = Vec::new();
    for h in 1..n {
        for j in weight_grid(n, -cfg.jbox, cfg.jbox) {
            inputs.push((h, j));
        }
    }
    out.extend(par_map(&inputs, |(h, j)| {
        let c = commutation_checks(n, *h, j, r)?;
        let case = json!({"check": "commutation", "h": h, "jstar": j, "r": r});
        Ok(vec![Outcome {
            case,
            lhs: json!({"weight": c.weight, "raise": c.raise, "lower": c.lower}),
            rhs: Value::Bool(true),
            ok: c.holds(),
        }])
    })?);
    Ok(out)
}

fn kbinom(cfg: &SuiteConfig) -> Result<Vec<Outcome>> {
    let lambdas = Composition::all(cfg.n, cfg.r);
    par_map(&lambdas, |l| {
        let lhs = k_binomial(l, cfg.r)?;
        let rhs = SchurElement::basis(&ThetaMatrix::diag(&l.hat())?);
        Ok(vec![elements(
            json!({"lambda": l.parts, "r": cfg.r}),
            &lhs,
            &rhs,
        )])
    })
}

fn perturb(first: &mut Outcome, cfg: &SuiteConfig) -> Result<()> {
    // Shift the right-hand side by v times the first long element so the
    // comparison must fail.
    if let Ok(mut rhs) = serde_json::from_value::<SchurElement>(first.rhs.clone()) {
        let bump = long_element(&ThetaMatrix::zero(rhs.n()), &vec![0; rhs.n()], rhs.r())?
            .scale(&LaurentPoly::v_pow(1));
        rhs = rhs.add(&bump)?;
        let lhs: SchurElement =
            serde_json::from_value(first.lhs.clone()).expect("lhs is an element too");
        first.ok = lhs == rhs;
        first.rhs = serde_json::to_value(&rhs).expect("serialise");
    } else {
        first.ok = false;
        first.rhs = json!({"perturbed": true, "grid": [cfg.n, cfg.r]});
    }
    Ok(())
}

fn run_cases(suite: Suite, cfg: &SuiteConfig, grid: &Value) -> Result<Vec<Outcome>> {
    match suite {
        Suite::Short => short(cfg),
        Suite::Multi => multi(cfg),
        Suite::Long => long(cfg),
        Suite::Stability => stability(cfg),
        Suite::Triangular => triangular(cfg),
        Suite::Leading => leading(cfg),
        Suite::Relations => {
            let mut v = check_relations(cfg.n, cfg.r)?;
            v.extend(hecke_relations(cfg.n, cfg.r)?);
            Ok(named(v, grid))
        }
        Suite::Commuting => Ok(named(check_commuting_and_match(cfg.n, cfg.r)?, grid)),
        Suite::Divided => divided(cfg),
        Suite::Kbinom => kbinom(cfg),
    }
}

/// Runs a suite; case order is fixed by the grid, not by scheduling.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let grid = json!({"n": cfg.n, "r": cfg.r, "jbox": cfg.jbox});
    let start = Instant::now();
    let mut outcomes = match cfg.threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::Parameter(format!("thread pool: {e}")))?
            .install(|| run_cases(suite, cfg, &grid))?,
        None => run_cases(suite, cfg, &grid)?,
    };
    if cfg.perturb {
        if let Some(first) = outcomes.first_mut() {
            perturb(first, cfg)?;
        }
    }
    let failures = outcomes
        .iter()
        .filter(|o| !o.ok)
        .map(|o| Failure {
            case: o.case.clone(),
            lhs: o.lhs.clone(),
            rhs: o.rhs.clone(),
        })
        .collect();
    Ok(SuiteReport {
        suite: suite.name().into(),
        grid,
        cases: outcomes.len(),
        failures,
        wall: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn caps_are_enforced() {
        assert!(SuiteConfig::new(5, 1).validate().is_err());
        assert!(SuiteConfig::new(1, 0).validate().is_err());
        assert!(SuiteConfig::new(4, 4).validate().is_err());
        assert!(SuiteConfig::new(2, 2).validate().is_ok());
    }
}
