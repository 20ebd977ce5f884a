//! Every structural check at one n, as JSON.
//!
//! ```bash
//! cargo run --release --example verify_report -- 6 full
//! ```

use zigzag_hstar::{verify_all, Depth};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);
    let depth = match args.next().as_deref() {
        Some("full") => Depth::Full,
        _ => Depth::Fast,
    };
    let report = verify_all(n, depth)?;
    println!("{}", report.to_json());
    if !report.all_passed() {
        std::process::exit(2);
    }
    Ok(())
}
