//! Flag f- and h-vectors of the lattice of order ideals of Z_n. The
//! h-vector entry beta(S) counts permutations whose swap set is exactly S.

use std::collections::BTreeMap;

use zigzag_hstar::rank_selection::{alpha_table, beta_table};
use zigzag_hstar::{enumerate_alternating, IndexSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 5;
    let alphas = alpha_table(n)?;
    let betas = beta_table(n)?;

    let mut by_swap_set: BTreeMap<IndexSet, i128> = BTreeMap::new();
    for sigma in enumerate_alternating(n)? {
        *by_swap_set.entry(sigma.swap_set()).or_default() += 1;
    }

    println!("{:<10} {:>6} {:>6} {:>6}", "S", "alpha", "beta", "#swap");
    for (s, a) in &alphas.table {
        let b = betas.table[s];
        let c = by_swap_set.get(s).copied().unwrap_or(0);
        println!("{:<10} {a:>6} {b:>6} {c:>6}", s.to_string());
        assert_eq!(b, c);
    }
    Ok(())
}
