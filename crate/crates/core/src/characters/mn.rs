//! Symmetric group characters by the Murnaghan–Nakayama rule.

use crate::combinatorics::{enumerate_partitions, Partition};
use crate::error::{Error, Result};

/// `χ^λ(μ)` by removing border strips of lengths `μ_1, μ_2, …`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{lambda}| = {} but |{mu}| = {}", lambda.size(), mu.size())));
    }
    // beta numbers λ_i + (L − i) as an abacus with one runner
    let len = lambda.len();
    let mut beads = vec![false; lambda.parts().first().map_or(0, |&p| p) + len];
    for (i, &p) in lambda.parts().iter().enumerate() {
        beads[p + len - 1 - i] = true;
    }
    Ok(strip(&mut beads, mu.parts()))
}

fn strip(beads: &mut [bool], parts: &[usize]) -> i64 {
    let Some((&r, rest)) = parts.split_first() else {
        return 1;
    };
    let mut total = 0;
    for b in r..beads.len() {
        if !beads[b] || beads[b - r] {
            continue;
        }
        let height = beads[b - r + 1..b].iter().filter(|&&x| x).count();
        beads[b] = false;
        beads[b - r] = true;
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * strip(beads, rest);
        beads[b - r] = false;
        beads[b] = true;
    }
    total
}

/// The `S_n` table; rows `λ` and columns `μ` both in [`enumerate_partitions`] order.
pub fn mn_table(n: usize) -> Vec<Vec<i64>> {
    let parts = enumerate_partitions(n);
    parts.iter().map(|l| parts.iter().map(|m| mn_character(l, m).expect("same size")).collect()).collect()
}
