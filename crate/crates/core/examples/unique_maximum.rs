//! Among alternating permutations whose simplex contains a nested set of
//! 0/1 vertices, one has strictly the most inversions. The constructive
//! answer is checked against a search over all of A_n.

use zigzag_hstar::rank_selection::brute_force_max_altperm;
use zigzag_hstar::{exclusion_set, unique_max_altperm, Vertex01, VertexConstraintSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let vertices = ["0101110", "0100000"]
        .iter()
        .map(|s| Vertex01::parse(s))
        .collect::<Result<Vec<_>, _>>()?;
    let constraints = VertexConstraintSet::new(7, vertices)?;
    println!("group sizes {:?}", constraints.group_sizes());
    println!("constructed  {}", unique_max_altperm(&constraints)?);
    println!("brute force  {}", brute_force_max_altperm(&constraints)?);

    // the exclusion set of sigma pins sigma down
    let sigma = "2413".parse()?;
    let excl = exclusion_set(&sigma);
    let shown: Vec<String> = excl.vertices.iter().map(|v| v.to_string()).collect();
    println!("\nexclusion set of {sigma}: {}", shown.join(" "));
    let cs = VertexConstraintSet::new(4, excl.vertices)?;
    println!("maximiser: {}", unique_max_altperm(&cs)?);
    Ok(())
}
