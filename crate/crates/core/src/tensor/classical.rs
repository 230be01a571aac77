//! The `q = 1` oracle: `W_{m,n}` acting on `V^{⊗n}` by signed place
//! permutations and powers of `ς`, independent of the Hecke operators.

use super::space::TensorSpace;
use crate::combinatorics::{IndexTuple, WreathElement};
use crate::error::{Error, Result};
use crate::exact::Poly;
use crate::exec::{map_reduce_range, Execution};

/// `w · v_bi = ± ς^e v_bj`; returns `(sign, e mod m, bj)`.
///
/// `σ` carries the factor at position `p` to `σ(p)` with the Koszul sign of
/// the odd factors it moves past; then `t_p` contributes `ς^{color}` of the
/// factor now at `p`.
pub fn act(space: &TensorSpace, w: &WreathElement, bi: &IndexTuple) -> (i64, usize, IndexTuple) {
    let profile = space.profile();
    let r = bi.raw();
    let n = r.len();
    let perm = w.perm();
    let mut out = vec![0u16; n];
    for p in 0..n {
        out[perm[p]] = r[p];
    }
    let odd = |e: u16| profile.parity_of(e as usize).is_odd();
    let mut sign = 1;
    for a in 0..n {
        for b in a + 1..n {
            if perm[a] > perm[b] && odd(r[a]) && odd(r[b]) {
                sign = -sign;
            }
        }
    }
    let m = w.m();
    let e = (0..n).map(|p| w.colors()[p] * profile.color_of(out[p] as usize)).sum::<usize>() % m;
    (sign, e, IndexTuple::new(out.iter().map(|&x| x as usize).collect(), profile).expect("permuted tuple"))
}

/// `Trace(D ∘ w, V^{⊗n})` as a polynomial in `z = ς_m`, reduced mod `Φ_m`.
pub fn classical_trace(space: &TensorSpace, w: &WreathElement, exec: Execution) -> Result<Poly> {
    if w.n() != space.n() || w.m() != space.profile().m() {
        return Err(Error::SizeMismatch(format!(
            "element of W_{{{},{}}} on a space with m = {}, n = {}",
            w.m(),
            w.n(),
            space.profile().m(),
            space.n()
        )));
    }
    let block = space.block();
    let zero = block.zero();
    let sum = map_reduce_range(
        exec,
        space.dim(),
        || zero.clone(),
        |rank| {
            let bi = space.basis_tuple(rank);
            let (sign, e, bj) = act(space, w, &bi);
            if bj != bi {
                return block.zero();
            }
            let root = Poly::var_pow(block.registry(), block.z(), e as i32).expect("z present");
            &root.scale_int(sign) * &space.d_factor(&bi)
        },
        |a, b| &a + &b,
    );
    sum.reduce_cyclotomic(w.m() as u32)
}
