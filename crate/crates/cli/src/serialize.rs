//! JSON and CSV forms of polynomials, multipartitions and tables.

use std::str::FromStr;
use std::sync::Arc;

use serde_json::{json, Map, Value};
use superfrob::characters::CharacterTable;
use superfrob::combinatorics::{HookProfile, Multipartition};
use superfrob::exact::{BigRational, Monomial, Poly, VariableRegistry};
use superfrob::verify::VerifyReport;
use superfrob::{Error, Result};

/// `[[coefficient, {variable: exponent}], …]`, descending graded-lex.
pub fn poly_to_json(p: &Poly) -> Value {
    let reg = p.registry();
    let terms: Vec<Value> = p
        .terms()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(m, c)| {
            let mut exps = Map::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e != 0 {
                    exps.insert(reg.variable(i).name.clone(), json!(e));
                }
            }
            json!([c.to_string(), exps])
        })
        .collect();
    Value::Array(terms)
}

/// Inverse of [`poly_to_json`] over `reg`.
pub fn poly_from_json(v: &Value, reg: &Arc<VariableRegistry>) -> Result<Poly> {
    let bad = |what: &str| Error::Domain(format!("malformed polynomial JSON: {what}"));
    let mut out = Poly::zero(reg);
    for term in v.as_array().ok_or_else(|| bad("expected an array of terms"))? {
        let pair = term.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("term is not a pair"))?;
        let c = pair[0].as_str().ok_or_else(|| bad("coefficient is not a string"))?;
        let c = BigRational::from_str(c).map_err(|_| bad("coefficient is not a rational"))?;
        let mut exps = vec![0i32; reg.len()];
        for (name, e) in pair[1].as_object().ok_or_else(|| bad("exponents are not a map"))? {
            let e = e.as_i64().and_then(|e| i32::try_from(e).ok()).ok_or_else(|| bad("exponent is not an integer"))?;
            let idx = reg.require(name)?;
            if e < 0 && !reg.is_invertible(idx) {
                return Err(Error::NotInvertible(name.clone()));
            }
            exps[idx] = e;
        }
        let mut t = Poly::zero(reg);
        t.add_term(Monomial::new(exps), c);
        out = out.checked_add(&t)?;
    }
    Ok(out)
}

pub fn multipartition_to_json(mu: &Multipartition) -> Value {
    json!(mu.to_nested())
}

/// Parse `[[2,1],[]]`.
pub fn multipartition_from_str(s: &str) -> Result<Multipartition> {
    let nested: Vec<Vec<usize>> =
        serde_json::from_str(s).map_err(|e| Error::Shape(format!("`{s}` is not a nested list of parts: {e}")))?;
    Multipartition::from_nested(&nested)
}

pub fn profile_to_json(p: &HookProfile) -> Value {
    json!({ "k": p.ks(), "l": p.ls() })
}

pub fn table_to_json(t: &CharacterTable) -> Result<Value> {
    let labels = |v: &[Multipartition]| Value::Array(v.iter().map(multipartition_to_json).collect());
    let entries: Vec<Value> = t.entries().iter().map(|row| Value::Array(row.iter().map(poly_to_json).collect())).collect();
    let trivial = t.trivial_row()?.map(|r| multipartition_to_json(&t.rows()[r]));
    Ok(json!({
        "m": t.m(),
        "n": t.n(),
        "row_labels": labels(t.rows()),
        "col_labels": labels(t.cols()),
        "entries": entries,
        "solve_profile": profile_to_json(t.solve_profile()),
        "specialized": t.is_specialized(),
        "metadata": {
            "trivial_row": trivial,
            "identity_column": multipartition_to_json(&t.cols()[t.identity_column()]),
        },
    }))
}

/// Header row of column labels, then one row per character.
pub fn table_to_csv(t: &CharacterTable) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["character".to_string()];
    header.extend(t.cols().iter().map(|c| c.to_string()));
    w.write_record(&header).map_err(csv_err)?;
    for (label, row) in t.rows().iter().zip(t.entries()) {
        let mut rec = vec![label.to_string()];
        rec.extend(row.iter().map(|e| e.to_string()));
        w.write_record(&rec).map_err(csv_err)?;
    }
    finish(w)
}

pub fn poly_to_csv(p: &Poly) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["coefficient", "monomial"]).map_err(csv_err)?;
    for (m, c) in p.terms().collect::<Vec<_>>().into_iter().rev() {
        let mut mono = Poly::zero(p.registry());
        mono.add_term(m.clone(), BigRational::from_integer(1.into()));
        w.write_record([c.to_string(), mono.to_string()]).map_err(csv_err)?;
    }
    finish(w)
}

/// Pass/fail per check; timings sit in their own field.
pub fn report_to_json(report: &VerifyReport, header: Value) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| json!({ "suite": c.suite.name(), "name": c.name, "passed": c.passed(), "failures": c.failures }))
        .collect();
    let timing: Vec<Value> = report.checks.iter().map(|c| json!({ "name": c.name, "seconds": c.seconds })).collect();
    json!({ "config": header, "passed": report.passed(), "checks": checks, "timing": timing })
}

pub fn report_to_csv(report: &VerifyReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["suite", "check", "passed", "failures"]).map_err(csv_err)?;
    for c in &report.checks {
        w.write_record([c.suite.name(), &c.name, if c.passed() { "true" } else { "false" }, &c.failures.join("; ")])
            .map_err(csv_err)?;
    }
    finish(w)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Consistency(format!("csv: {e}"))
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Consistency(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Consistency(format!("csv: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use superfrob::combinatorics::HookProfile;
    use superfrob::symfun::{q_bmu, BlockVariables};

    #[test]
    fn polynomial_round_trip() {
        let b = BlockVariables::new(&HookProfile::new(vec![1, 1], vec![1, 0]).unwrap()).unwrap();
        let mu = multipartition_from_str("[[1],[1]]").unwrap();
        let p = q_bmu(&mu, &b).unwrap();
        let back = poly_from_json(&poly_to_json(&p), b.registry()).unwrap();
        assert_eq!(back, p);
        assert_eq!(poly_to_json(&Poly::zero(b.registry())), json!([]));
    }

    #[test]
    fn shapes() {
        assert_eq!(multipartition_from_str("[[2,1],[]]").unwrap().to_string(), "((2,1);∅)");
        assert!(multipartition_from_str("[[1,2]]").is_err());
        assert!(multipartition_from_str("oops").is_err());
    }

    #[test]
    fn bad_polynomials_are_rejected() {
        let b = BlockVariables::new(&HookProfile::new(vec![1], vec![0]).unwrap()).unwrap();
        let reg = b.registry();
        assert!(poly_from_json(&json!([["1", {"w": 1}]]), reg).is_err());
        assert!(poly_from_json(&json!([[1, {}]]), reg).is_err());
        assert!(poly_from_json(&json!([["1", {"q": 1.5}]]), reg).is_err());
        assert!(poly_from_json(&json!([["1", {"x1_1": -1}]]), reg).is_err());
        assert_eq!(poly_from_json(&json!([["-1/2", {"q": -1}]]), reg).unwrap().to_string(), "-1/2*q^-1");
    }
}
