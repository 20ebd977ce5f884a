//! The third dilate of O(Z_n) has exactly one interior lattice point, at
//! lattice distance one from every facet.

use zigzag_hstar::gorenstein_check;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=12 {
        match gorenstein_check(n)? {
            Ok(r) => println!("n = {n:>2}: point {:?}, distances all 1", r.interior_point),
            Err(why) => println!("n = {n:>2}: {why}"),
        }
    }
    Ok(())
}
