//! Alternating permutations of [n] and their statistics.
//!
//! ```bash
//! cargo run --example enumerate -- 5
//! ```

use zigzag_hstar::{enumerate_alternating, euler_zigzag};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);

    println!("{:<8} {:<10} {:>4} {:>4}  descents", "perm", "swap set", "swap", "inv");
    for sigma in enumerate_alternating(n)? {
        println!(
            "{:<8} {:<10} {:>4} {:>4}  {}",
            sigma.to_string(),
            sigma.swap_set().to_string(),
            sigma.swap(),
            sigma.inversion_count(),
            sigma.descent_set()
        );
    }

    // the count is the Euler zigzag number, by recurrence
    let euler = euler_zigzag(n.max(12));
    println!("\n|A_{n}| = {}", enumerate_alternating(n)?.count());
    let seq: Vec<String> = euler.iter().map(|e| e.to_string()).collect();
    println!("E_0.. = {}", seq.join(", "));
    Ok(())
}
