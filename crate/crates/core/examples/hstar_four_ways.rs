//! The same h*-polynomial from four unrelated computations.
//!
//! ```bash
//! cargo run --release --example hstar_four_ways -- 6
//! ```

use zigzag_hstar::{
    hstar_from_beta, hstar_from_ehrhart, hstar_from_shelling, hstar_from_swaps,
    inversion_shelling_order, TieBreak,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);

    let swaps = hstar_from_swaps(n)?;
    let ehrhart = hstar_from_ehrhart(n)?;
    let beta = hstar_from_beta(n)?;
    println!("swap statistic   {swaps}");
    println!("lattice points   {ehrhart}");
    println!("flag h-vector    {beta}");

    // quadratic in E_n, so only for small n
    if n <= 7 {
        let order = inversion_shelling_order(n, TieBreak::Lex)?;
        println!("shelling         {}", hstar_from_shelling(&order)?);
    }

    assert_eq!(swaps, ehrhart);
    assert_eq!(swaps, beta);
    println!("\ndegree {:?}, h*(1) = {}", swaps.degree(), swaps.sum());
    Ok(())
}
