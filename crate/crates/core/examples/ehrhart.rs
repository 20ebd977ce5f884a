//! Lattice points in dilates of O(Z_n), the Ehrhart polynomial and the
//! link to the order polynomial.

use zigzag_hstar::ehrhart::{
    count_lattice_points_naive, ehrhart_polynomial, ehrhart_table, eval_rational,
    order_polynomial_value, rational_strings,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 4;
    let table = ehrhart_table(n, 6)?;
    print!("{}", table.to_csv());

    for m in 0..=6u64 {
        // brute force over the box {0..m}^n
        let naive = count_lattice_points_naive(n, m)?;
        assert_eq!(table.values[m as usize], naive.into());
        // i(m) = Ω(m + 1)
        assert_eq!(table.values[m as usize], order_polynomial_value(n, m + 1)?);
    }

    let poly = ehrhart_polynomial(n)?;
    println!("\ni(m) coefficients, constant first: {}", rational_strings(&poly).join(", "));
    println!("i(10) = {}", eval_rational(&poly, 10));
    println!("i_40(10^6) = {}", zigzag_hstar::count_lattice_points(40, 1_000_000)?);
    Ok(())
}
