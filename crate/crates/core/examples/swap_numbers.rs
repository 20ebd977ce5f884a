//! The triangle s_n(k) of permutations with k swaps, and its shape.

use zigzag_hstar::checks::{is_unimodal, swap_numbers};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=11 {
        let t = swap_numbers(n)?;
        let core = &t.s[..n.saturating_sub(1).max(1)];
        println!(
            "{n:>2}: {:<60} unimodal={} problems={:?}",
            format!("{:?}", t.s),
            is_unimodal(core),
            t.violations()
        );
    }
    Ok(())
}
