//! phi sends a chain of ideals with sizes S to an alternating permutation
//! whose swap set lies in S, and psi undoes it.

use zigzag_hstar::poset::chains_with_sizes;
use zigzag_hstar::{phi, psi, AltPerm, IdealChain, IndexSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let chain = IdealChain::parse(7, "{1,3,7} < {1,3,4,5,6,7}")?;
    let sigma = phi(&chain)?;
    println!("phi({chain}) = {sigma}");
    println!("psi({}, {sigma}) = {}", chain.sizes(), psi(chain.sizes(), &sigma)?);

    let sizes: IndexSet = "{2,4}".parse()?;
    let chains = chains_with_sizes(6, sizes)?;
    println!("\n{} chains in J(Z_6) with sizes {sizes}:", chains.len());
    for c in &chains {
        let s: AltPerm = phi(c)?;
        assert_eq!(&psi(sizes, &s)?, c);
        println!("  {c:<28} -> {s}  swaps {}", s.swap_set());
    }
    Ok(())
}
