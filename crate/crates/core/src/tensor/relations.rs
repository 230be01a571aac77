//! Defining relations of the cyclotomic Hecke algebra, checked on every basis
//! vector of a tensor space.

use super::space::TensorSpace;
use super::vector::TensorVector;
use super::word::Op;
use crate::error::Result;
use crate::exec::{map_collect, Execution};

/// Outcome of one relation over all basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    /// Basis tuples where the relation failed.
    pub failures: Vec<Vec<usize>>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Side<'a> = Box<dyn Fn(&TensorSpace, &TensorVector) -> Result<TensorVector> + Sync + Send + 'a>;

fn word(ops: Vec<Op>) -> Side<'static> {
    Box::new(move |s, v| ops.iter().rev().try_fold(v.clone(), |acc, &op| s.apply(op, &acc)))
}

/// All relations applicable to `space`'s `n`.
fn relations(space: &TensorSpace) -> Vec<(String, Side<'static>, Side<'static>)> {
    let n = space.n();
    let mut out: Vec<(String, Side, Side)> = Vec::new();
    for a in 2..=n {
        out.push((
            format!("quadratic T{a}"),
            word(vec![Op::T(a), Op::T(a)]),
            Box::new(move |s, v| {
                let t = s.apply(Op::T(a), v)?;
                Ok(t.scale(&s.block().q_minus_q_inv()).add(v))
            }),
        ));
        out.push((format!("inverse T{a}"), word(vec![Op::T(a), Op::TInv(a)]), word(vec![])));
        out.push((format!("[D, T{a}]"), word(vec![Op::D, Op::T(a)]), word(vec![Op::T(a), Op::D])));
    }
    for a in 2..n {
        out.push((
            format!("braid T{a} T{}", a + 1),
            word(vec![Op::T(a), Op::T(a + 1), Op::T(a)]),
            word(vec![Op::T(a + 1), Op::T(a), Op::T(a + 1)]),
        ));
    }
    for a in 2..=n {
        for b in a + 2..=n {
            out.push((format!("commute T{a} T{b}"), word(vec![Op::T(a), Op::T(b)]), word(vec![Op::T(b), Op::T(a)])));
        }
    }
    if n >= 1 {
        out.push(("[D, T1]".into(), word(vec![Op::D, Op::T1]), word(vec![Op::T1, Op::D])));
        out.push((
            "cyclotomic".into(),
            Box::new(|s, v| {
                let mut acc = v.clone();
                for i in 1..=s.profile().m() {
                    let t = s.apply(Op::T1, &acc)?;
                    acc = t.sub(&acc.scale(&s.block().param_poly(i)));
                }
                Ok(acc)
            }),
            Box::new(|_, v| Ok(TensorVector::zero(v.registry()))),
        ));
    }
    if n >= 2 {
        out.push((
            "type-B braid".into(),
            word(vec![Op::T1, Op::T(2), Op::T1, Op::T(2)]),
            word(vec![Op::T(2), Op::T1, Op::T(2), Op::T1]),
        ));
    }
    for a in 3..=n {
        out.push((format!("commute T1 T{a}"), word(vec![Op::T1, Op::T(a)]), word(vec![Op::T(a), Op::T1])));
    }
    out
}

/// Evaluate every relation on every basis vector.
pub fn check_relations(space: &TensorSpace, exec: Execution) -> Result<Vec<RelationCheck>> {
    let rels = relations(space);
    let ranks: Vec<usize> = (0..space.dim()).collect();
    let per_basis: Vec<Result<Vec<bool>>> = map_collect(exec, &ranks, |&rank| {
        let v = space.basis_vector(space.basis_tuple(rank));
        rels.iter().map(|(_, lhs, rhs)| Ok(lhs(space, &v)? == rhs(space, &v)?)).collect()
    });
    let mut out: Vec<RelationCheck> =
        rels.iter().map(|(name, _, _)| RelationCheck { name: name.clone(), failures: Vec::new() }).collect();
    for (rank, res) in per_basis.into_iter().enumerate() {
        for (check, ok) in out.iter_mut().zip(res?) {
            if !ok {
                check.failures.push(space.basis_tuple(rank).entries());
            }
        }
    }
    Ok(out)
}
