//! Named verification suites shared by the tests and the command line.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::characters::{
    hecke_character_table, mn_character, specialize_table, verify_orthogonality, wreath_character_table,
};
use crate::combinatorics::{
    centralizer_order_sym, enumerate_multipartitions, enumerate_partitions, standard_multitableaux_count,
    super_tableau_count, HookProfile, WreathElement,
};
use crate::error::{Error, Result};
use crate::exact::{Assignment, BigRational, Poly, Value};
use crate::exec::Execution;
use crate::symfun::{
    colored_power_sum_product, is_cancellation_free, q_tilde_sum, super_hall_littlewood_q,
    super_power_sum_product, super_schur, super_schur_tableau, BlockVariables, HeckeTraceForms, SuperSchurAlgorithm,
};
use crate::tensor::{check_relations, classical_trace, OperatorWord, TensorSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Frobenius,
    Orthogonality,
    Identities,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Frobenius => "frobenius",
            Suite::Orthogonality => "orthogonality",
            Suite::Identities => "identities",
            Suite::All => "all",
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
        [Suite::Relations, Suite::Frobenius, Suite::Orthogonality, Suite::Identities, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite `{s}`")))
    }
}

/// Sizes a suite runs at. `profile` is the tensor / identity profile; the
/// character table always uses its own solve profile.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub m: usize,
    pub n: usize,
    pub profile: HookProfile,
    pub exec: Execution,
}

impl VerifyConfig {
    /// `k_i = ℓ_i = 1` unless given.
    pub fn new(m: usize, n: usize, profile: Option<HookProfile>, exec: Execution) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Domain(format!("need m ≥ 1 and n ≥ 1, got m = {m}, n = {n}")));
        }
        let profile = match profile {
            Some(p) if p.m() != m => return Err(Error::Profile(format!("profile {p} has {} colors, m = {m}", p.m()))),
            Some(p) => p,
            None => HookProfile::uniform(m, 1, 1)?,
        };
        Ok(VerifyConfig { m, n, profile, exec })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub name: String,
    pub failures: Vec<String>,
    pub seconds: f64,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    fn run(&mut self, suite: Suite, name: impl Into<String>, f: impl FnOnce(&mut Vec<String>) -> Result<()>) -> Result<()> {
        let start = Instant::now();
        let mut failures = Vec::new();
        f(&mut failures)?;
        self.checks.push(CheckOutcome { suite, name: name.into(), failures, seconds: start.elapsed().as_secs_f64() });
        Ok(())
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    let suites = match suite {
        Suite::All => vec![Suite::Relations, Suite::Frobenius, Suite::Orthogonality, Suite::Identities],
        s => vec![s],
    };
    for s in suites {
        match s {
            Suite::Relations => relations(cfg, &mut report)?,
            Suite::Frobenius => frobenius(cfg, &mut report)?,
            Suite::Orthogonality => orthogonality(cfg, &mut report)?,
            Suite::Identities => identities(cfg, &mut report)?,
            Suite::All => unreachable!(),
        }
    }
    Ok(report)
}

fn relations(cfg: &VerifyConfig, report: &mut VerifyReport) -> Result<()> {
    let start = Instant::now();
    let space = TensorSpace::new(&cfg.profile, cfg.n)?.with_literal_check(true);
    let checks = check_relations(&space, cfg.exec)?;
    let seconds = start.elapsed().as_secs_f64() / checks.len().max(1) as f64;
    for c in checks {
        let failures = c.failures.iter().map(|bi| format!("{} at v{bi:?} on {}", c.name, cfg.profile)).collect();
        report.checks.push(CheckOutcome { suite: Suite::Relations, name: c.name, failures, seconds });
    }
    Ok(())
}

fn frobenius(cfg: &VerifyConfig, report: &mut VerifyReport) -> Result<()> {
    let space = TensorSpace::new(&cfg.profile, cfg.n)?;
    let block = space.block();
    let labels = enumerate_multipartitions(cfg.m, cfg.n);
    let traces: Vec<Poly> = labels
        .iter()
        .map(|mu| space.trace_d_word(&OperatorWord::standard(mu), cfg.exec))
        .collect::<Result<_>>()?;
    report.run(Suite::Frobenius, "trace of D T(bμ) equals q_bμ", |fail| {
        let mut forms = HeckeTraceForms::new(block);
        for (mu, tr) in labels.iter().zip(&traces) {
            if *tr != forms.q_bmu(mu)? {
                fail.push(format!("bμ = {mu} on {}", cfg.profile));
            }
        }
        Ok(())
    })?;
    report.run(Suite::Frobenius, "trace of D T(bμ) equals Σ χ S on the tensor profile", |fail| {
        let table = hecke_character_table(cfg.m, cfg.n, cfg.exec)?;
        let schur: Vec<Poly> = table
            .rows()
            .iter()
            .map(|l| super_schur(l, block, SuperSchurAlgorithm::Tableaux))
            .collect::<Result<_>>()?;
        for (c, tr) in traces.iter().enumerate() {
            let mut sum = block.zero();
            for (r, s) in schur.iter().enumerate() {
                if !s.is_zero() {
                    sum += &(&table.entry(r, c).rebase(block.registry())? * s);
                }
            }
            if sum != *tr {
                fail.push(format!("bμ = {} on {}", table.cols()[c], cfg.profile));
            }
        }
        Ok(())
    })?;
    report.run(Suite::Frobenius, "classical trace equals the conjugate colored power sum", |fail| {
        let conj = Assignment::new().set("z", Value::Root { order: cfg.m as u32, power: cfg.m as i64 - 1 });
        for mu in &labels {
            let tr = classical_trace(&space, &WreathElement::standard(mu), cfg.exec)?;
            if tr != colored_power_sum_product(mu, block)?.substitute(&conj)? {
                fail.push(format!("bμ = {mu} on {}", cfg.profile));
            }
        }
        Ok(())
    })?;
    report.run(Suite::Frobenius, "trace of D T(bμ) at q = 1, Q_i = ς^i equals the classical trace", |fail| {
        let mut spec = Assignment::new().set("q", Value::integer(block.registry(), 1));
        for i in 1..=cfg.m {
            spec = spec.set(format!("Q{i}"), Value::Root { order: cfg.m as u32, power: i as i64 });
        }
        for (mu, tr) in labels.iter().zip(&traces) {
            if tr.substitute(&spec)? != classical_trace(&space, &WreathElement::standard(mu), cfg.exec)? {
                fail.push(format!("bμ = {mu} on {}", cfg.profile));
            }
        }
        Ok(())
    })
}

fn orthogonality(cfg: &VerifyConfig, report: &mut VerifyReport) -> Result<()> {
    let table = specialize_table(&hecke_character_table(cfg.m, cfg.n, cfg.exec)?)?;
    report.run(Suite::Orthogonality, "first and second orthogonality", |fail| {
        for v in verify_orthogonality(&table)?.violations {
            let (a, b) = match v.relation {
                "row" => (&table.rows()[v.a], &table.rows()[v.b]),
                _ => (&table.cols()[v.a], &table.cols()[v.b]),
            };
            fail.push(format!("{} pair ({a}, {b}): expected {:?}, found {:?}", v.relation, v.expected, v.found));
        }
        Ok(())
    })?;
    report.run(Suite::Orthogonality, "identity column equals standard multitableaux counts", |fail| {
        let id = table.identity_column();
        for (r, l) in table.rows().iter().enumerate() {
            let d = Poly::from_int(table.registry(), standard_multitableaux_count(l) as i64);
            if *table.entry(r, id) != d {
                fail.push(format!("bλ = {l}: {} vs {d}", table.entry(r, id)));
            }
        }
        Ok(())
    })?;
    report.run(Suite::Orthogonality, "power-sum solve agrees with the specialized table", |fail| {
        let w = wreath_character_table(cfg.m, cfg.n, cfg.exec)?;
        for (r, l) in table.rows().iter().enumerate() {
            for (c, mu) in table.cols().iter().enumerate() {
                if table.entry(r, c) != w.entry(r, c) {
                    fail.push(format!("({l}, {mu}): {} vs {}", table.entry(r, c), w.entry(r, c)));
                }
            }
        }
        Ok(())
    })
}

fn identities(cfg: &VerifyConfig, report: &mut VerifyReport) -> Result<()> {
    let block = BlockVariables::new(&cfg.profile)?;
    let (xs, ys) = (block.all_x(), block.all_y());
    let n = cfg.n;
    report.run(Suite::Identities, "Σ q̃ (q − q^-1) = q^n q_n(x/y; q^-2)", |fail| {
        for a in 1..=n {
            let lhs = &q_tilde_sum(a, &block)? * &block.q_minus_q_inv();
            let rhs = &block.q_pow(a as i32) * &super_hall_littlewood_q(a, &xs, &ys, &block.q_pow(-2));
            if lhs != rhs {
                fail.push(format!("n = {a} on {}", cfg.profile));
            }
        }
        Ok(())
    })?;
    let labels = enumerate_multipartitions(cfg.m, n);
    report.run(Suite::Identities, "super Schur: alternating sum equals tableau sum", |fail| {
        for l in &labels {
            let a = super_schur(l, &block, SuperSchurAlgorithm::AlternatingSum)?;
            let t = super_schur(l, &block, SuperSchurAlgorithm::Tableaux)?;
            if a != t || (a.is_zero() != !l.is_hook(&cfg.profile)) {
                fail.push(format!("bλ = {l} on {}", cfg.profile));
            }
        }
        Ok(())
    })?;
    report.run(Suite::Identities, "Σ dim · f = (k + ℓ)^n", |fail| {
        let mut total: u128 = 0;
        for l in labels.iter().filter(|l| l.is_hook(&cfg.profile)) {
            total += super_tableau_count(l, &cfg.profile)? * standard_multitableaux_count(l);
        }
        let expect = (cfg.profile.dim() as u128).pow(n as u32);
        if total != expect {
            fail.push(format!("{total} ≠ {expect} on {}", cfg.profile));
        }
        Ok(())
    })?;
    report.run(Suite::Identities, "S_λ(x/y) = Σ Z_μ^-1 χ^λ(μ) p_μ(x/y) in each color", |fail| {
        for c in 1..=cfg.m {
            let (x, y) = (block.x(c), block.y(c));
            let parts = enumerate_partitions(n);
            let p: Vec<Poly> = parts.iter().map(|mu| super_power_sum_product(mu, x, y, block.registry())).collect();
            for lam in &parts {
                let mut sum = block.zero();
                for (mu, pm) in parts.iter().zip(&p) {
                    let coeff = BigRational::new(
                        mn_character(lam, mu)?.into(),
                        (centralizer_order_sym(mu) as i64).into(),
                    );
                    sum += &pm.scale(&coeff);
                }
                let direct = super_schur_tableau(lam, x, y, block.registry());
                if sum != direct {
                    fail.push(format!("λ = {lam}, color {c}"));
                }
            }
        }
        Ok(())
    })?;
    report.run(Suite::Identities, "x_k = y_ℓ = t leaves S_bλ and P_bμ free of t", |fail| {
        for l in &labels {
            let s = super_schur(l, &block, SuperSchurAlgorithm::Tableaux)?;
            let p = colored_power_sum_product(l, &block)?;
            for c in 1..=cfg.m {
                if is_cancellation_free(&s, c, &block)? == Some(false) {
                    fail.push(format!("S at {l}, color {c}"));
                }
                if is_cancellation_free(&p, c, &block)? == Some(false) {
                    fail.push(format!("P at {l}, color {c}"));
                }
            }
        }
        Ok(())
    })?;
    Ok(())
}
