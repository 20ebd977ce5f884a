//! Ordering the simplices of the canonical triangulation by inversions
//! gives a shelling; an arbitrary order need not.

use zigzag_hstar::{inversion_shelling_order, verify_shelling, AltPerm, ShellingOrder, TieBreak};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for tie in [TieBreak::ReverseLex, TieBreak::Lex, TieBreak::Seeded(42)] {
        let order = inversion_shelling_order(4, tie)?;
        let report = verify_shelling(&order)?;
        let perms: Vec<String> = order.perms().map(|s| s.to_string()).collect();
        println!("{tie:?}: {}", perms.join(" "));
        println!("  valid = {}, attachments = {:?}", report.valid, report.attachment_counts);
    }

    // each simplex attaches along as many facets as it has swaps
    let order = inversion_shelling_order(6, TieBreak::Seeded(7))?;
    let report = verify_shelling(&order)?;
    let agree = order
        .perms()
        .zip(&report.attachment_counts)
        .all(|(s, &a)| s.swap() == a);
    println!("\nn = 6, {} simplices, attachments = swaps: {agree}", order.len());

    // put 1324 second: it meets 3412 only in the two cone points
    let perms: Vec<AltPerm> = ["3412", "1324", "2413", "2314", "1423"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let bad = verify_shelling(&ShellingOrder::from_perms(perms)?)?;
    let w = bad.failure_witness.expect("not a shelling");
    println!(
        "\nbad order fails at position {} against {}: face {:?}",
        w.position,
        w.earlier,
        w.face.iter().map(|v| v.to_string()).collect::<Vec<_>>()
    );
    Ok(())
}
