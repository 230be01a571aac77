use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// What a registered indeterminate stands for. Colors and indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum VarKind {
    /// Even block variable `x^(color)_index`.
    X { color: usize, index: usize },
    /// Odd block variable `y^(color)_index`.
    Y { color: usize, index: usize },
    /// The Hecke parameter `q`.
    Q,
    /// Cyclotomic parameter `Q_i`.
    Param(usize),
    /// Hall-Littlewood parameter.
    T,
    /// Generating-function variable.
    U,
    /// Symbol for a primitive root of unity.
    Z,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
    pub invertible: bool,
}

impl Variable {
    /// Canonical name and invertibility for a kind: only `q` is invertible.
    pub fn of_kind(kind: VarKind) -> Self {
        let name = match &kind {
            VarKind::X { color, index } => format!("x{color}_{index}"),
            VarKind::Y { color, index } => format!("y{color}_{index}"),
            VarKind::Q => "q".to_string(),
            VarKind::Param(i) => format!("Q{i}"),
            VarKind::T => "t".to_string(),
            VarKind::U => "u".to_string(),
            VarKind::Z => "z".to_string(),
        };
        let invertible = kind == VarKind::Q;
        Variable { name, kind, invertible }
    }
}

/// Ordered set of indeterminates shared by all polynomials of one computation.
///
/// The order fixes exponent-vector positions and the graded-lex term order.
#[derive(Debug, Clone)]
pub struct VariableRegistry {
    vars: Vec<Variable>,
    m: Option<usize>,
    by_name: HashMap<String, usize>,
}

impl PartialEq for VariableRegistry {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars
    }
}

impl Eq for VariableRegistry {}

impl VariableRegistry {
    /// Build a registry; `m` bounds the block colors of x/y variables when given.
    pub fn new(vars: Vec<Variable>, m: Option<usize>) -> Result<Self> {
        let mut by_name = HashMap::with_capacity(vars.len());
        for (i, v) in vars.iter().enumerate() {
            if by_name.insert(v.name.clone(), i).is_some() {
                return Err(Error::InvalidRegistry(format!("duplicate variable `{}`", v.name)));
            }
            if v.invertible && v.kind != VarKind::Q {
                return Err(Error::InvalidRegistry(format!("`{}` may not be invertible", v.name)));
            }
            if let VarKind::X { color, .. } | VarKind::Y { color, .. } = v.kind {
                let bad = color == 0 || m.is_some_and(|m| color > m);
                if bad {
                    return Err(Error::InvalidRegistry(format!("`{}` has color {color} outside 1..m", v.name)));
                }
            }
        }
        Ok(VariableRegistry { vars, m, by_name })
    }

    /// The registry used throughout: block variables of profile `(k, l)`
    /// (color-major), then `q`, `Q_1..Q_m`, `t` and `z`.
    pub fn standard(k: &[usize], l: &[usize]) -> Result<Arc<Self>> {
        if k.len() != l.len() || k.is_empty() {
            return Err(Error::InvalidRegistry("k and l must be non-empty lists of equal length".into()));
        }
        let m = k.len();
        let mut vars = Vec::new();
        for (c, &kc) in k.iter().enumerate() {
            for a in 1..=kc {
                vars.push(Variable::of_kind(VarKind::X { color: c + 1, index: a }));
            }
        }
        for (c, &lc) in l.iter().enumerate() {
            for b in 1..=lc {
                vars.push(Variable::of_kind(VarKind::Y { color: c + 1, index: b }));
            }
        }
        vars.push(Variable::of_kind(VarKind::Q));
        for i in 1..=m {
            vars.push(Variable::of_kind(VarKind::Param(i)));
        }
        vars.push(Variable::of_kind(VarKind::T));
        vars.push(Variable::of_kind(VarKind::Z));
        Ok(Arc::new(Self::new(vars, Some(m))?))
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn colors(&self) -> Option<usize> {
        self.m
    }

    pub fn variable(&self, index: usize) -> &Variable {
        &self.vars[index]
    }

    pub fn variables(&self) -> &[Variable] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    /// Like [`index_of`](Self::index_of) but as an error.
    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn find(&self, kind: &VarKind) -> Option<usize> {
        self.vars.iter().position(|v| &v.kind == kind)
    }

    pub fn require_kind(&self, kind: VarKind) -> Result<usize> {
        self.find(&kind).ok_or_else(|| Error::UnknownVariable(Variable::of_kind(kind).name))
    }

    pub fn is_invertible(&self, index: usize) -> bool {
        self.vars[index].invertible
    }
}

impl fmt::Display for VariableRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.vars.iter().map(|v| v.name.as_str()).collect();
        write!(f, "[{}]", names.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_layout() {
        let reg = VariableRegistry::standard(&[1, 2], &[1, 0]).unwrap();
        let names: Vec<_> = reg.variables().iter().map(|v| v.name.clone()).collect();
        assert_eq!(names, ["x1_1", "x2_1", "x2_2", "y1_1", "q", "Q1", "Q2", "t", "z"]);
        assert!(reg.is_invertible(reg.require("q").unwrap()));
        assert!(!reg.is_invertible(reg.require("Q1").unwrap()));
    }

    #[test]
    fn rejects_duplicates_and_bad_colors() {
        let v = Variable::of_kind(VarKind::Q);
        assert!(VariableRegistry::new(vec![v.clone(), v], None).is_err());
        let x = Variable::of_kind(VarKind::X { color: 3, index: 1 });
        assert!(VariableRegistry::new(vec![x], Some(2)).is_err());
        let mut t = Variable::of_kind(VarKind::T);
        t.invertible = true;
        assert!(VariableRegistry::new(vec![t], None).is_err());
    }
}
