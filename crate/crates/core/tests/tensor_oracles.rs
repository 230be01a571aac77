use proptest::prelude::*;
use superfrob::combinatorics::{
    enumerate_compositions, enumerate_multipartitions, HookProfile, Multipartition, Parity, WreathElement,
};
use superfrob::exact::{Assignment, Poly, Value};
use superfrob::symfun::{colored_power_sum_product, q_n_i, q_tilde, HeckeTraceForms};
use superfrob::tensor::{classical_trace, Op, OperatorWord, TensorSpace};
use superfrob::Execution;

fn space(k: Vec<usize>, l: Vec<usize>, n: usize) -> TensorSpace {
    TensorSpace::new(&HookProfile::new(k, l).unwrap(), n).unwrap()
}

/// `Σ_{(α;β)} Π_j Q_{color of the j-th entry of bi(α;β)}^{c_j} q̃_(α;β)`.
fn lemma_rhs(space: &TensorSpace, c: &[u32]) -> Poly {
    let profile = space.profile();
    let block = space.block();
    let mut out = block.zero();
    for comp in enumerate_compositions(space.n(), profile.dim()) {
        let (mut alpha, mut beta, mut tuple) = (Vec::new(), Vec::new(), Vec::new());
        for (b, &e) in comp.iter().enumerate() {
            match profile.slot(b + 1).parity {
                Parity::Even => alpha.push(e),
                Parity::Odd => beta.push(e),
            }
            tuple.extend(std::iter::repeat(b + 1).take(e));
        }
        let mut weight = block.one();
        for (j, &cj) in c.iter().enumerate() {
            weight = &weight * &block.param_poly(profile.color_of(tuple[j])).pow(cj);
        }
        out += &(&weight * &q_tilde(&alpha, &beta, block).unwrap());
    }
    out
}

fn cycle_word(n: usize, c: &[u32]) -> OperatorWord {
    let mut ops: Vec<Op> = c.iter().enumerate().map(|(j, &p)| Op::Omega { j: j + 1, power: p }).collect();
    ops.extend((2..=n).rev().map(Op::T));
    OperatorWord::new(n, ops).unwrap()
}

#[test]
fn coxeter_word_trace_matches_q_tilde_sum_for_one_color() {
    for (k, l) in [(1, 1), (2, 1), (1, 2)] {
        for n in 1..=3 {
            let s = space(vec![k], vec![l], n);
            let tr = s.trace_d_word(&cycle_word(n, &vec![0; n]), Execution::Sequential).unwrap();
            assert_eq!(tr, lemma_rhs(&s, &vec![0; n]), "k={k} l={l} n={n}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coxeter_word_trace_with_omega_powers(
        n in 1usize..=3,
        c in proptest::collection::vec(0u32..3, 3),
        profile in prop_oneof![
            Just((vec![1, 1], vec![1, 0])),
            Just((vec![1, 0], vec![0, 1])),
            Just((vec![1, 1, 0], vec![0, 0, 1])),
        ],
    ) {
        let s = space(profile.0, profile.1, n);
        let c = &c[..n];
        let tr = s.trace_d_word(&cycle_word(n, c), Execution::Sequential).unwrap();
        prop_assert_eq!(tr, lemma_rhs(&s, c));
    }
}

#[test]
fn one_block_trace_is_q_n_i() {
    for m in 1..=3 {
        for n in 1..=3 {
            let s = space(vec![1; m], vec![1; m], n);
            for i in 1..=m {
                let mut parts = vec![vec![]; m];
                parts[i - 1] = vec![n];
                let mu = Multipartition::from_nested(&parts).unwrap();
                let tr = s.trace_d_word(&OperatorWord::standard(&mu), Execution::Parallel).unwrap();
                assert_eq!(tr, q_n_i(n, i, s.block()).unwrap(), "m={m} n={n} i={i}");
            }
        }
    }
}

#[test]
fn standard_word_trace_is_q_bmu() {
    for (m, n) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
        let s = space(vec![1; m], vec![1; m], n);
        let mut forms = HeckeTraceForms::new(s.block());
        for mu in enumerate_multipartitions(m, n) {
            let tr = s.trace_d_word(&OperatorWord::standard(&mu), Execution::Parallel).unwrap();
            assert_eq!(tr, forms.q_bmu(&mu).unwrap(), "{mu}");
        }
    }
}

#[test]
fn classical_trace_is_conjugate_colored_power_sum() {
    for (m, n, k, l) in [(1, 3, 1, 1), (2, 2, 1, 1), (2, 3, 1, 1), (3, 2, 1, 1), (3, 3, 1, 0), (2, 2, 2, 1)] {
        let s = space(vec![k; m], vec![l; m], n);
        let conj = Assignment::new().set("z", Value::Root { order: m as u32, power: m as i64 - 1 });
        for mu in enumerate_multipartitions(m, n) {
            let tr = classical_trace(&s, &WreathElement::standard(&mu), Execution::Parallel).unwrap();
            let p = colored_power_sum_product(&mu, s.block()).unwrap();
            assert_eq!(tr, p.substitute(&conj).unwrap(), "m={m} n={n} {mu}");
        }
    }
}

#[test]
fn hecke_trace_specializes_to_classical_trace() {
    for (m, n) in [(2, 2), (3, 2), (2, 3)] {
        let s = space(vec![1; m], vec![1; m], n);
        let mut spec = Assignment::new().set("q", Value::integer(s.block().registry(), 1));
        for i in 1..=m {
            spec = spec.set(format!("Q{i}"), Value::Root { order: m as u32, power: i as i64 });
        }
        for mu in enumerate_multipartitions(m, n) {
            let hecke = s.trace_d_word(&OperatorWord::standard(&mu), Execution::Parallel).unwrap();
            let classical = classical_trace(&s, &WreathElement::standard(&mu), Execution::Parallel).unwrap();
            assert_eq!(hecke.substitute(&spec).unwrap(), classical, "m={m} n={n} {mu}");
        }
    }
}
