//! Shelling orders of the canonical triangulation.
//!
//! Faces are vertex subsets of a simplex. Since every `Δ^σ` has exactly one
//! vertex of each weight, a face of `Δ_r` is recorded as the set of levels
//! `k` whose vertex `v_k` it keeps, and `Δ_i ∩ Δ_r` is the set of levels on
//! which the two simplices agree. A facet keeps `n` of the `n + 1` levels.

use std::collections::HashSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::alt_perm::{enumerate_alternating, swap_histogram, AltPerm};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::polytope::{simplex_of, Simplex, Vertex01};
use crate::sets::IndexSet;

/// How to order simplices with equal inversion count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    /// Ascending one-line notation.
    Lex,
    ReverseLex,
    /// A deterministic shuffle of each block, driven by the seed.
    Seeded(u64),
}

/// An ordering of all `E_n` maximal simplices.
#[derive(Clone, PartialEq, Eq)]
pub struct ShellingOrder {
    simplices: Vec<Simplex>,
}

impl ShellingOrder {
    /// Errors unless `perms` lists every element of `A_n` exactly once.
    pub fn from_perms(perms: Vec<AltPerm>) -> Result<Self> {
        let n = perms
            .first()
            .ok_or_else(|| Error::InvalidOrder("empty order".into()))?
            .n();
        if let Some(bad) = perms.iter().find(|p| p.n() != n) {
            return Err(Error::InvalidOrder(format!("{bad} has length {}, expected {n}", bad.n())));
        }
        let mut seen = HashSet::with_capacity(perms.len());
        if let Some(dup) = perms.iter().find(|p| !seen.insert(*p)) {
            return Err(Error::InvalidOrder(format!("{dup} appears twice")));
        }
        let total = enumerate_alternating(n)?.count();
        if perms.len() != total {
            return Err(Error::InvalidOrder(format!(
                "order has {} simplices, the triangulation has {total}",
                perms.len()
            )));
        }
        Ok(ShellingOrder {
            simplices: perms.iter().map(simplex_of).collect(),
        })
    }

    /// Reads the order-file format: one permutation per line in one-line
    /// notation; blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let perms = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::parse)
            .collect::<Result<Vec<AltPerm>>>()?;
        ShellingOrder::from_perms(perms)
    }

    pub fn to_order_file(&self) -> String {
        self.simplices
            .iter()
            .map(|s| format!("{}\n", s.source()))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.simplices[0].n()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn perms(&self) -> impl Iterator<Item = &AltPerm> {
        self.simplices.iter().map(Simplex::source)
    }
}

impl fmt::Debug for ShellingOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.perms()).finish()
    }
}

/// Orders `A_n` by nonincreasing inversion number, breaking ties as asked.
pub fn inversion_shelling_order(n: usize, tie_break: TieBreak) -> Result<ShellingOrder> {
    let mut keyed: Vec<(usize, AltPerm)> = enumerate_alternating(n)?
        .map(|s| (s.inversion_count(), s))
        .collect();
    // enumeration is already lex ascending; a stable sort keeps that per block
    keyed.sort_by_key(|k| std::cmp::Reverse(k.0));
    match tie_break {
        TieBreak::Lex => {}
        TieBreak::ReverseLex => {
            for block in keyed.chunk_by_mut(|a, b| a.0 == b.0) {
                block.reverse();
            }
        }
        TieBreak::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for block in keyed.chunk_by_mut(|a, b| a.0 == b.0) {
                block.shuffle(&mut rng);
            }
        }
    }
    ShellingOrder::from_perms(keyed.into_iter().map(|(_, s)| s).collect())
}

/// A face `Δ_k ∩ Δ_r` that lies in no facet of `Δ_r` shared with an
/// earlier simplex. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureWitness {
    pub position: usize,
    pub earlier: usize,
    pub simplex: AltPerm,
    pub earlier_simplex: AltPerm,
    pub face: Vec<Vertex01>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShellingReport {
    pub valid: bool,
    /// `a_r` = number of distinct facets of `Δ_r` shared with some earlier
    /// simplex.
    pub attachment_counts: Vec<usize>,
    pub failure_witness: Option<FailureWitness>,
}

struct StepResult {
    attachments: usize,
    // first k whose intersection is not covered by a shared facet
    uncovered: Option<(usize, IndexSet)>,
}

fn check_step(simplices: &[Simplex], r: usize) -> Result<StepResult> {
    let n = simplices[r].n();
    let target = &simplices[r];
    let masks: Vec<IndexSet> = simplices[..r]
        .iter()
        .map(|s| s.common_levels(target))
        .collect();

    let facets: HashSet<IndexSet> = masks.iter().copied().filter(|m| m.len() == n).collect();

    // Quantified form: every Δ_k ∩ Δ_r sits inside some facet Δ_i ∩ Δ_r.
    let uncovered = masks
        .iter()
        .enumerate()
        .find(|(_, m)| !facets.iter().any(|f| m.is_subset(*f)))
        .map(|(k, &m)| (k, m));

    // Union form: the maximal faces of ∪_k (Δ_k ∩ Δ_r) are all facets.
    let mut distinct: Vec<IndexSet> = masks.clone();
    distinct.sort_unstable_by_key(|m| (std::cmp::Reverse(m.len()), m.bits()));
    distinct.dedup();
    let mut maximal: Vec<IndexSet> = Vec::new();
    for m in distinct {
        if !maximal.iter().any(|big| m.is_subset(*big)) {
            maximal.push(m);
        }
    }
    let union_of_facets = maximal.iter().all(|m| m.len() == n);

    if union_of_facets != uncovered.is_none() {
        return Err(Error::Inconsistency(format!(
            "shelling forms disagree at position {}",
            r + 1
        )));
    }
    Ok(StepResult {
        attachments: facets.len(),
        uncovered,
    })
}

/// Checks the shelling condition for every prefix, and records how many
/// facets each simplex is attached along.
pub fn verify_shelling(order: &ShellingOrder) -> Result<ShellingReport> {
    let simplices = order.simplices();
    let steps: Vec<StepResult> = (0..simplices.len())
        .into_par_iter()
        .map(|r| check_step(simplices, r))
        .collect::<Result<_>>()?;
    let attachment_counts = steps.iter().map(|s| s.attachments).collect();
    let failure_witness = steps.iter().enumerate().find_map(|(r, step)| {
        step.uncovered.map(|(k, levels)| FailureWitness {
            position: r + 1,
            earlier: k + 1,
            simplex: simplices[r].source().clone(),
            earlier_simplex: simplices[k].source().clone(),
            face: levels.iter().map(|l| simplices[r].vertex(l)).collect(),
        })
    });
    Ok(ShellingReport {
        valid: failure_witness.is_none(),
        attachment_counts,
        failure_witness,
    })
}

/// `h*_j = #{ i : a_i = j }` read off a verified shelling.
pub fn hstar_from_shelling(order: &ShellingOrder) -> Result<IntPolynomial> {
    let report = verify_shelling(order)?;
    if let Some(w) = report.failure_witness {
        return Err(Error::NotAShelling {
            position: w.position,
        });
    }
    let mut counts = vec![0u64; order.n() + 1];
    for a in report.attachment_counts {
        counts[a] += 1;
    }
    Ok(IntPolynomial::from_counts(counts))
}

/// `Σ_{σ ∈ A_n} t^{swap(σ)}`.
pub fn hstar_from_swaps(n: usize) -> Result<IntPolynomial> {
    Ok(IntPolynomial::from_counts(swap_histogram(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(v: &[&str]) -> Vec<AltPerm> {
        v.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn canonical_order_n4() {
        // the textbook order breaks the 2-inversion tie in reverse lex
        let order = inversion_shelling_order(4, TieBreak::ReverseLex).unwrap();
        let shown: Vec<String> = order.perms().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["3412", "2413", "2314", "1423", "1324"]);
        let inv: Vec<usize> = order.perms().map(AltPerm::inversion_count).collect();
        assert_eq!(inv, [4, 3, 2, 2, 1]);
        let report = verify_shelling(&order).unwrap();
        assert!(report.valid);
        assert_eq!(report.attachment_counts, [0, 1, 1, 1, 2]);
        assert_eq!(hstar_from_shelling(&order).unwrap().to_string(), "1 + 3t + t^2");
    }

    #[test]
    fn lex_orders_tied_block_ascending() {
        let order = inversion_shelling_order(4, TieBreak::Lex).unwrap();
        let shown: Vec<String> = order.perms().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["3412", "2413", "1423", "2314", "1324"]);
        assert_eq!(verify_shelling(&order).unwrap().attachment_counts, [0, 1, 1, 1, 2]);
    }

    #[test]
    fn seeded_is_deterministic() {
        let a = inversion_shelling_order(6, TieBreak::Seeded(7)).unwrap();
        let b = inversion_shelling_order(6, TieBreak::Seeded(7)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bad_order_fails_at_second_simplex() {
        let order =
            ShellingOrder::from_perms(perms(&["3412", "1324", "2413", "2314", "1423"])).unwrap();
        let report = verify_shelling(&order).unwrap();
        assert!(!report.valid);
        let w = report.failure_witness.unwrap();
        assert_eq!((w.position, w.earlier), (2, 1));
        let face: Vec<String> = w.face.iter().map(|v| v.to_string()).collect();
        assert_eq!(face, ["1111", "0000"]);
        assert!(matches!(
            hstar_from_shelling(&order),
            Err(Error::NotAShelling { position: 2 })
        ));
    }

    #[test]
    fn single_simplex() {
        let order = inversion_shelling_order(1, TieBreak::Lex).unwrap();
        assert_eq!(order.len(), 1);
        let report = verify_shelling(&order).unwrap();
        assert!(report.valid);
        assert_eq!(report.attachment_counts, [0]);
        assert_eq!(hstar_from_shelling(&order).unwrap().to_string(), "1");
    }

    #[test]
    fn malformed_orders_rejected() {
        assert!(ShellingOrder::from_perms(vec![]).is_err());
        assert!(ShellingOrder::from_perms(perms(&["3412", "2413"])).is_err());
        assert!(ShellingOrder::from_perms(perms(&["3412", "3412", "2413", "2314", "1423"])).is_err());
        assert!(ShellingOrder::parse("3412\n132\n").is_err());
    }

    #[test]
    fn order_file_round_trip() {
        let order = inversion_shelling_order(5, TieBreak::Seeded(3)).unwrap();
        let text = order.to_order_file();
        assert_eq!(ShellingOrder::parse(&format!("# comment\n{text}\n")).unwrap(), order);
    }

    #[test]
    fn swap_route_small() {
        assert_eq!(hstar_from_swaps(4).unwrap().to_string(), "1 + 3t + t^2");
        assert_eq!(hstar_from_swaps(2).unwrap().to_string(), "1");
        assert_eq!(hstar_from_swaps(1).unwrap().to_string(), "1");
        let h6 = hstar_from_swaps(6).unwrap().to_i64s().unwrap();
        assert_eq!(h6.len(), 5);
        assert_eq!((h6[0], h6[4], h6[1]), (1, 1, h6[3]));
        assert_eq!(2 * h6[1] + h6[2], 59);
    }

    #[test]
    fn report_json_shape() {
        let order = inversion_shelling_order(3, TieBreak::Lex).unwrap();
        let json = serde_json::to_value(verify_shelling(&order).unwrap()).unwrap();
        assert_eq!(json["valid"], true);
        assert!(json["failure_witness"].is_null());
        assert_eq!(json["attachment_counts"], serde_json::json!([0, 1]));
    }
}
