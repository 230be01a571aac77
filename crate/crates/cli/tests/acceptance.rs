//! One pass/fail line per acceptance criterion; every comparison is exact.

use std::process::Command;
use std::time::{Duration, Instant};

use superfrob::characters::{
    hecke_character_table, mn_character, specialize_table, verify_orthogonality, wreath_character_table,
};
use superfrob::combinatorics::{
    centralizer_order_sym, enumerate_multipartitions, enumerate_partitions, standard_multitableaux_count,
    super_tableau_count, HookProfile, Multipartition,
};
use superfrob::exact::{Assignment, BigRational, Poly, Value};
use superfrob::symfun::{
    colored_power_sum_product, is_cancellation_free, q_tilde_sum, super_hall_littlewood_q, super_power_sum_product,
    super_schur, super_schur_tableau, BlockVariables, HeckeTraceForms, SuperSchurAlgorithm,
};
use superfrob::tensor::{check_relations, OperatorWord, TensorSpace};
use superfrob::Execution;

type Check = Result<String, String>;

const EXEC: Execution = Execution::Parallel;

fn err(e: superfrob::Error) -> String {
    e.to_string()
}

/// Every profile with `m` colors, entries in `0..=max` and `1 ≤ k + ℓ ≤ total`.
fn profiles(m: usize, max: usize, total: usize) -> Vec<HookProfile> {
    let mut out = Vec::new();
    let slots = 2 * m;
    let mut v = vec![0usize; slots];
    loop {
        let s: usize = v.iter().sum();
        if s >= 1 && s <= total {
            out.push(HookProfile::new(v[..m].to_vec(), v[m..].to_vec()).unwrap());
        }
        let Some(i) = (0..slots).find(|&i| v[i] < max) else { break };
        v[i] += 1;
        v[..i].iter_mut().for_each(|x| *x = 0);
    }
    out
}

fn criterion_1() -> Check {
    let mut count = 0;
    for (k, l) in [(1, 1), (2, 1), (2, 2)] {
        let b = BlockVariables::new(&HookProfile::new(vec![k], vec![l]).unwrap()).map_err(err)?;
        for n in 1..=5 {
            let lhs = &q_tilde_sum(n, &b).map_err(err)? * &b.q_minus_q_inv();
            let rhs = &b.q_pow(n as i32) * &super_hall_littlewood_q(n, b.x(1), b.y(1), &b.q_pow(-2));
            if lhs != rhs {
                return Err(format!("n = {n}, (k,l) = ({k},{l})"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} cases"))
}

fn criterion_2() -> Check {
    let mut count = 0;
    for m in 1..=2 {
        for p in profiles(m, 2, 4 * m) {
            let b = BlockVariables::new(&p).map_err(err)?;
            for n in 1..=5 {
                for l in enumerate_multipartitions(m, n) {
                    let alt = super_schur(&l, &b, SuperSchurAlgorithm::AlternatingSum).map_err(err)?;
                    let tab = super_schur(&l, &b, SuperSchurAlgorithm::Tableaux).map_err(err)?;
                    if alt != tab {
                        return Err(format!("{l} on {p}: algorithms differ"));
                    }
                    if alt.is_zero() == l.is_hook(&p) {
                        return Err(format!("{l} on {p}: vanishing does not match the hook condition"));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} shape/profile pairs"))
}

fn criterion_3() -> Check {
    let mut count = 0;
    for (m, n) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
        let s = TensorSpace::new(&HookProfile::uniform(m, 1, 1).unwrap(), n).map_err(err)?;
        let mut forms = HeckeTraceForms::new(s.block());
        for mu in enumerate_multipartitions(m, n) {
            let tr = s.trace_d_word(&OperatorWord::standard(&mu), EXEC).map_err(err)?;
            if tr != forms.q_bmu(&mu).map_err(err)? {
                return Err(format!("m = {m}, n = {n}, bμ = {mu}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} classes"))
}

fn criterion_4() -> Check {
    let mut count = 0;
    for (m, n) in [(1, 3), (2, 2)] {
        let table = hecke_character_table(m, n, EXEC).map_err(err)?;
        if table.solve_profile() != &HookProfile::uniform(m, n, 0).unwrap() {
            return Err("unexpected solve profile".into());
        }
        let s = TensorSpace::new(&HookProfile::uniform(m, 1, 1).unwrap(), n).map_err(err)?;
        let b = s.block();
        let schur: Vec<Poly> = table
            .rows()
            .iter()
            .map(|l| super_schur(l, b, SuperSchurAlgorithm::Tableaux))
            .collect::<superfrob::Result<_>>()
            .map_err(err)?;
        for (c, mu) in table.cols().iter().enumerate() {
            let tr = s.trace_d_word(&OperatorWord::standard(mu), EXEC).map_err(err)?;
            let mut sum = b.zero();
            for (r, sl) in schur.iter().enumerate() {
                sum += &(&table.entry(r, c).rebase(b.registry()).map_err(err)? * sl);
            }
            if sum != tr {
                return Err(format!("m = {m}, n = {n}, bμ = {mu}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} classes on (1|1) per color"))
}

fn criterion_5() -> Check {
    let mut count = 0;
    for m in 1..=3 {
        for p in profiles(m, 4, 4) {
            for n in 1..=3 {
                let s = TensorSpace::new(&p, n).map_err(err)?.with_literal_check(true);
                for c in check_relations(&s, EXEC).map_err(err)? {
                    if !c.passed() {
                        return Err(format!("{} on {p}, n = {n}, at {:?}", c.name, c.failures[0]));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} relation instances"))
}

fn criterion_6() -> Check {
    for n in 1..=5 {
        let t = specialize_table(&hecke_character_table(1, n, EXEC).map_err(err)?).map_err(err)?;
        for (r, l) in t.rows().iter().enumerate() {
            for (c, mu) in t.cols().iter().enumerate() {
                let v = mn_character(l.component(1), mu.component(1)).map_err(err)?;
                if *t.entry(r, c) != Poly::from_int(t.registry(), v) {
                    return Err(format!("n = {n}, χ^{l}({mu})"));
                }
            }
        }
    }
    let t = hecke_character_table(1, 2, EXEC).map_err(err)?;
    let reg = t.registry();
    let unit_q1 = Assignment::new().set("Q1", Value::integer(reg, 1));
    let q = Poly::named(reg, "q").map_err(err)?;
    let mp = |v: Vec<Vec<usize>>| Multipartition::from_nested(&v).unwrap();
    let at = |l: &Multipartition, mu: &Multipartition| {
        t.entry(t.row_index(l).unwrap(), t.col_index(mu).unwrap()).substitute(&unit_q1)
    };
    let (two, ones) = (mp(vec![vec![2]]), mp(vec![vec![1, 1]]));
    let expect = [
        (&two, &two, q.clone()),
        (&ones, &two, -q.pow_signed(-1).map_err(err)?),
        (&two, &ones, Poly::one(reg)),
        (&ones, &ones, Poly::one(reg)),
    ];
    for (l, mu, v) in expect {
        if at(l, mu).map_err(err)? != v {
            return Err(format!("n = 2 generic χ^{l}({mu})"));
        }
    }
    Ok("S_n tables for n ≤ 5, n = 2 generic columns {q, -q^-1} and {1, 1}".into())
}

fn criterion_7() -> Check {
    for n in 1..=3 {
        let t = specialize_table(&hecke_character_table(2, n, EXEC).map_err(err)?).map_err(err)?;
        let report = verify_orthogonality(&t).map_err(err)?;
        if let Some(v) = report.violations.first() {
            return Err(format!("n = {n}: {} relation at ({}, {})", v.relation, v.a, v.b));
        }
        let id = t.identity_column();
        for (r, l) in t.rows().iter().enumerate() {
            if *t.entry(r, id) != Poly::from_int(t.registry(), standard_multitableaux_count(l) as i64) {
                return Err(format!("n = {n}: degree of {l}"));
            }
        }
        let w = wreath_character_table(2, n, EXEC).map_err(err)?;
        if w.entries() != t.entries() {
            return Err(format!("n = {n}: power-sum solve differs"));
        }
    }
    Ok("m = 2, n ≤ 3".into())
}

fn criterion_8() -> Check {
    let mut count = 0;
    for (k, l) in [(vec![1, 1], vec![1, 1]), (vec![2, 1], vec![0, 1])] {
        let p = HookProfile::new(k, l).unwrap();
        for n in 1..=4 {
            let mut total: u128 = 0;
            for lam in enumerate_multipartitions(2, n).iter().filter(|lam| lam.is_hook(&p)) {
                total += super_tableau_count(lam, &p).map_err(err)? * standard_multitableaux_count(lam);
            }
            let expect = (p.dim() as u128).pow(n as u32);
            if total != expect {
                return Err(format!("{p}, n = {n}: {total} vs {expect}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} cases"))
}

fn criterion_9() -> Check {
    let b = BlockVariables::new(&HookProfile::new(vec![2], vec![2]).unwrap()).map_err(err)?;
    let reg = b.registry();
    for n in 1..=5 {
        let parts = enumerate_partitions(n);
        let p: Vec<Poly> = parts.iter().map(|mu| super_power_sum_product(mu, b.x(1), b.y(1), reg)).collect();
        for lam in &parts {
            let mut sum = b.zero();
            for (mu, pm) in parts.iter().zip(&p) {
                let c = BigRational::new(
                    mn_character(lam, mu).map_err(err)?.into(),
                    (centralizer_order_sym(mu) as i64).into(),
                );
                sum += &pm.scale(&c);
            }
            if sum != super_schur_tableau(lam, b.x(1), b.y(1), reg) {
                return Err(format!("King expansion at λ = {lam}"));
            }
        }
    }
    for (m, k, l) in [(1, 2, 2), (2, 1, 1), (2, 2, 1)] {
        let b = BlockVariables::new(&HookProfile::uniform(m, k, l).unwrap()).map_err(err)?;
        for n in 1..=4 {
            for lam in enumerate_multipartitions(m, n) {
                let s = super_schur(&lam, &b, SuperSchurAlgorithm::Tableaux).map_err(err)?;
                let p = colored_power_sum_product(&lam, &b).map_err(err)?;
                for c in 1..=m {
                    for (f, name) in [(&s, "S"), (&p, "P")] {
                        if is_cancellation_free(f, c, &b).map_err(err)? != Some(true) {
                            return Err(format!("{name} at {lam}, color {c}, profile {}", b.profile()));
                        }
                    }
                }
            }
        }
    }
    Ok("King expansion for n ≤ 5, cancellation for n ≤ 4".into())
}

fn criterion_10() -> Check {
    let bin = env!("CARGO_BIN_EXE_superfrob");
    let run = || {
        Command::new(bin).args(["chartable", "--m", "2", "--n", "3"]).output().map_err(|e| format!("spawn: {e}"))
    };
    let (a, b) = (run()?, run()?);
    if !a.status.success() || !b.status.success() {
        return Err(format!("exit status {:?} / {:?}", a.status.code(), b.status.code()));
    }
    if a.stdout != b.stdout || a.stdout.is_empty() {
        return Err("outputs differ".into());
    }
    Ok(format!("{} identical bytes", a.stdout.len()))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(u32, &str, fn() -> Check, Duration); 10] = [
        (1, "q-tilde sum identity", criterion_1, Duration::from_secs(10)),
        (2, "super Schur dual algorithms", criterion_2, Duration::from_secs(30)),
        (3, "trace oracle vs q_bmu", criterion_3, Duration::from_secs(120)),
        (4, "Frobenius formula on an independent profile", criterion_4, Duration::from_secs(120)),
        (5, "operator relations", criterion_5, Duration::from_secs(60)),
        (6, "degenerations to S_n", criterion_6, Duration::from_secs(10)),
        (7, "wreath product consistency", criterion_7, Duration::from_secs(60)),
        (8, "Schur-Weyl dimension identity", criterion_8, Duration::from_secs(30)),
        (9, "King expansion and cancellation", criterion_9, Duration::from_secs(30)),
        (10, "end-to-end determinism", criterion_10, Duration::from_secs(300)),
    ];
    let mut failed = Vec::new();
    for (id, name, check, budget) in criteria {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed();
        let verdict = match (&result, secs <= budget) {
            (Ok(detail), true) => format!("PASS {detail}"),
            (Ok(detail), false) => format!("FAIL over budget {budget:?}: {detail}"),
            (Err(why), _) => format!("FAIL {why}"),
        };
        println!("criterion {id:>2} [{name}] {verdict} ({:.2}s)", secs.as_secs_f64());
        if !verdict.starts_with("PASS") {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
