//! Swap numbers `s_n(k)` and a single report that runs every structural
//! check in the crate against its brute-force counterpart.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::alt_perm::{descent_set, enumerate_alternating, euler_zigzag, swap_histogram, AltPerm};
use crate::ehrhart::hstar_from_ehrhart;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::polytope::{exclusion_set, gorenstein_check, share_facet};
use crate::poset::{chains_with_sizes, default_natural_labeling, jordan_holder_set, NaturalLabeling};
use crate::rank_selection::{
    beta_table, brute_force_max_altperm, hstar_from_beta, phi, psi, unique_max_altperm,
    VertexConstraintSet,
};
use crate::sets::IndexSet;
use crate::shelling::{hstar_from_shelling, hstar_from_swaps, inversion_shelling_order, verify_shelling, TieBreak};

/// `s[k] = s_n(k)` for `k = 0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwapNumberTable {
    pub n: usize,
    pub s: Vec<u64>,
}

pub fn swap_numbers(n: usize) -> Result<SwapNumberTable> {
    Ok(SwapNumberTable {
        n,
        s: swap_histogram(n)?,
    })
}

/// Some peak `p` with `s` nondecreasing up to `p` and nonincreasing after.
pub fn is_unimodal(s: &[u64]) -> bool {
    let mut i = 0;
    while i + 1 < s.len() && s[i] <= s[i + 1] {
        i += 1;
    }
    s[i..].windows(2).all(|w| w[0] >= w[1])
}

impl SwapNumberTable {
    /// Every violated structural property, as a message. Properties that
    /// only make sense for `n >= 2` are not checked at `n = 1`.
    pub fn violations(&self) -> Vec<String> {
        let n = self.n;
        let s = &self.s;
        let mut out = Vec::new();
        let total: BigInt = s.iter().map(|&x| BigInt::from(x)).sum();
        let euler = BigInt::from(euler_zigzag(n)[n].clone());
        if total != euler {
            out.push(format!("Σ s_n(k) = {total}, expected E_{n} = {euler}"));
        }
        if n < 2 {
            return out;
        }
        if s[n - 1] != 0 {
            out.push(format!("s_{n}({}) = {}, expected 0", n - 1, s[n - 1]));
        }
        if s[0] != 1 {
            out.push(format!("s_{n}(0) = {}, expected 1", s[0]));
        }
        if s[n - 2] != 1 {
            out.push(format!("s_{n}({}) = {}, expected 1", n - 2, s[n - 2]));
        }
        let core = &s[..=n - 2];
        if !core.iter().eq(core.iter().rev()) {
            out.push(format!("{core:?} is not symmetric"));
        }
        if !is_unimodal(core) {
            out.push(format!("{core:?} is not unimodal"));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Depth {
    Fast,
    Full,
}

/// Largest `n` each family of checks is run at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Anything that walks all of `A_n`.
    pub enumerate: usize,
    pub beta: usize,
    /// O(E_n²) shelling verification.
    pub shelling: usize,
    pub shelling_seeds: u64,
    /// O(E_n²) pairwise simplex comparisons.
    pub pairwise: usize,
    /// Checks that call the brute-force maximiser per constraint set.
    pub brute_force: usize,
    pub flag_vectors: usize,
    pub jordan_holder: usize,
}

impl Guards {
    pub fn for_depth(depth: Depth) -> Self {
        match depth {
            Depth::Fast => Guards {
                enumerate: 12,
                beta: 12,
                shelling: 6,
                shelling_seeds: 3,
                pairwise: 6,
                brute_force: 6,
                flag_vectors: 8,
                jordan_holder: 7,
            },
            Depth::Full => Guards {
                enumerate: 13,
                beta: 14,
                shelling: 7,
                shelling_seeds: 20,
                pairwise: 8,
                brute_force: 7,
                flag_vectors: 10,
                jordan_holder: 9,
            },
        }
    }

    /// Every guard raised (or lowered) to `limit`.
    pub fn with_limit(self, limit: usize) -> Self {
        Guards {
            enumerate: limit,
            beta: limit,
            shelling: limit,
            pairwise: limit,
            brute_force: limit.min(crate::rank_selection::BRUTE_FORCE_MAX_N),
            flag_vectors: limit,
            jordan_holder: limit,
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub n: usize,
    pub depth: Depth,
    pub checks: Vec<CheckResult>,
    pub versions: BTreeMap<String, String>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

// Ok(()) passes, Err(witness) fails.
type Outcome = std::result::Result<(), Value>;

fn lib_err(e: Error) -> Value {
    json!({ "error": e.to_string() })
}

fn check_hstar_routes(n: usize, g: &Guards) -> Outcome {
    let mut routes: Vec<(&str, IntPolynomial)> = Vec::new();
    routes.push(("ehrhart", hstar_from_ehrhart(n).map_err(lib_err)?));
    if n <= g.enumerate {
        routes.push(("swap", hstar_from_swaps(n).map_err(lib_err)?));
    }
    if n <= g.beta {
        routes.push(("beta", hstar_from_beta(n).map_err(lib_err)?));
    }
    if n <= g.shelling {
        let order = inversion_shelling_order(n, TieBreak::Lex).map_err(lib_err)?;
        routes.push(("shelling", hstar_from_shelling(&order).map_err(lib_err)?));
    }
    let reference = &routes[0].1;
    if routes.iter().all(|(_, p)| p == reference) {
        Ok(())
    } else {
        Err(Value::Object(
            routes
                .iter()
                .map(|(name, p)| (name.to_string(), json!(p.to_string())))
                .collect(),
        ))
    }
}

fn check_hstar_shape(n: usize) -> Outcome {
    let h = hstar_from_ehrhart(n).map_err(lib_err)?;
    let euler = BigInt::from(euler_zigzag(n)[n].clone());
    let degree_ok = n < 2 || h.degree() == Some(n - 2);
    if h.coeff(0) == BigInt::from(1) && h.sum() == euler && degree_ok && h.is_symmetric() {
        Ok(())
    } else {
        Err(json!({ "hstar": h.to_string(), "euler": euler.to_string() }))
    }
}

fn check_swap_numbers(n: usize) -> Outcome {
    let table = swap_numbers(n).map_err(lib_err)?;
    let v = table.violations();
    if v.is_empty() {
        Ok(())
    } else {
        Err(json!({ "s": table.s, "violations": v }))
    }
}

fn check_swap_moves(n: usize) -> Outcome {
    for sigma in enumerate_alternating(n).map_err(lib_err)? {
        let swaps = sigma.swap_set();
        let entries = sigma.entries();
        let inv = sigma.inversion_count();
        for i in 1..n {
            // exchange i and i+1 by hand and test alternation directly
            let exchanged: Vec<usize> = entries
                .iter()
                .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
                .collect();
            let left = sigma.position_of(i) < sigma.position_of(i + 1);
            let alternating = AltPerm::new(exchanged.clone()).is_ok();
            if swaps.contains(i) != (left && alternating) {
                return Err(json!({ "perm": sigma.to_string(), "index": i }));
            }
            if swaps.contains(i) && crate::alt_perm::inversion_count(&exchanged) != inv + 1 {
                return Err(json!({ "perm": sigma.to_string(), "index": i, "inversions": "not +1" }));
            }
        }
    }
    Ok(())
}

fn check_noninversion_swaps(n: usize) -> Outcome {
    for sigma in enumerate_alternating(n).map_err(lib_err)? {
        let swaps = sigma.swap_set();
        let inv = sigma.inverse();
        for a in 1..=n {
            for b in a + 1..=n {
                if inv[a - 1] + 1 < inv[b - 1] && !(a..b).any(|k| swaps.contains(k)) {
                    return Err(json!({ "perm": sigma.to_string(), "a": a, "b": b }));
                }
            }
        }
    }
    Ok(())
}

fn check_facet_adjacency(n: usize) -> Outcome {
    let perms: Vec<AltPerm> = enumerate_alternating(n).map_err(lib_err)?.collect();
    for (i, s) in perms.iter().enumerate() {
        for t in &perms[i + 1..] {
            let geometric = share_facet(s, t).map_err(lib_err)?;
            let by_swap = s.swap_set().iter().any(|k| s.swap_to(k).as_ref() == Ok(t))
                || t.swap_set().iter().any(|k| t.swap_to(k).as_ref() == Ok(s));
            if geometric != by_swap {
                return Err(json!({ "sigma": s.to_string(), "tau": t.to_string(), "share_facet": geometric }));
            }
        }
    }
    Ok(())
}

fn check_shellings(n: usize, seeds: u64) -> Outcome {
    let swaps: HashMap<AltPerm, usize> = enumerate_alternating(n)
        .map_err(lib_err)?
        .map(|s| {
            let k = s.swap();
            (s, k)
        })
        .collect();
    let ties = [TieBreak::Lex, TieBreak::ReverseLex]
        .into_iter()
        .chain((0..seeds).map(TieBreak::Seeded));
    for tie in ties {
        let order = inversion_shelling_order(n, tie).map_err(lib_err)?;
        let report = verify_shelling(&order).map_err(lib_err)?;
        if !report.valid {
            return Err(json!({ "tie_break": format!("{tie:?}"), "report": report }));
        }
        for (sigma, &a) in order.perms().zip(&report.attachment_counts) {
            if swaps[sigma] != a {
                return Err(json!({ "tie_break": format!("{tie:?}"), "perm": sigma.to_string(), "attachments": a }));
            }
        }
    }
    Ok(())
}

fn check_exclusion_maximality(n: usize) -> Outcome {
    for sigma in enumerate_alternating(n).map_err(lib_err)? {
        let cs = VertexConstraintSet::new(n, exclusion_set(&sigma).vertices).map_err(lib_err)?;
        let best = brute_force_max_altperm(&cs).map_err(lib_err)?;
        if best != sigma {
            return Err(json!({ "perm": sigma.to_string(), "argmax": best.to_string() }));
        }
    }
    for sizes in IndexSet::range(1, n - 1).subsets() {
        for chain in chains_with_sizes(n, sizes).map_err(lib_err)? {
            let cs = VertexConstraintSet::from_chain(&chain).map_err(lib_err)?;
            let built = unique_max_altperm(&cs).map_err(lib_err)?;
            let brute = brute_force_max_altperm(&cs).map_err(lib_err)?;
            if built != brute {
                return Err(json!({ "chain": chain.to_string(), "constructed": built.to_string(), "brute_force": brute.to_string() }));
            }
        }
    }
    Ok(())
}

fn check_flag_h_vector(n: usize) -> Outcome {
    let betas = beta_table(n).map_err(lib_err)?;
    let mut counts: HashMap<IndexSet, i128> = HashMap::new();
    for sigma in enumerate_alternating(n).map_err(lib_err)? {
        *counts.entry(sigma.swap_set()).or_default() += 1;
    }
    for (s, &b) in &betas.table {
        let c = counts.get(s).copied().unwrap_or(0);
        if b != c {
            return Err(json!({ "set": s.to_string(), "beta": b as i64, "swap_count": c as i64 }));
        }
    }
    Ok(())
}

fn check_chain_bijection(n: usize) -> Outcome {
    let perms: Vec<AltPerm> = enumerate_alternating(n).map_err(lib_err)?.collect();
    for sizes in IndexSet::range(1, n - 1).subsets() {
        let chains = chains_with_sizes(n, sizes).map_err(lib_err)?;
        for chain in &chains {
            let sigma = phi(chain).map_err(lib_err)?;
            if psi(sizes, &sigma).as_ref() != Ok(chain) {
                return Err(json!({ "sizes": sizes.to_string(), "chain": chain.to_string(), "phi": sigma.to_string() }));
            }
        }
        let domain: Vec<&AltPerm> = perms.iter().filter(|s| s.swap_set().is_subset(sizes)).collect();
        if domain.len() != chains.len() {
            return Err(json!({ "sizes": sizes.to_string(), "chains": chains.len(), "perms": domain.len() }));
        }
        for sigma in domain {
            let chain = psi(sizes, sigma).map_err(lib_err)?;
            if phi(&chain).as_ref() != Ok(sigma) {
                return Err(json!({ "sizes": sizes.to_string(), "perm": sigma.to_string() }));
            }
        }
    }
    Ok(())
}

/// The default labeling plus two others taken from `A_n` itself (every
/// alternating permutation, read as `z_i ↦ σ(i)`, is a natural labeling).
pub fn sample_labelings(n: usize) -> Result<Vec<NaturalLabeling>> {
    let mut out = vec![default_natural_labeling(n)?];
    for sigma in [crate::alt_perm::max_inversion_altperm(n)?, crate::alt_perm::max_swap_altperm(n)?] {
        let l = NaturalLabeling::new(sigma.entries())?;
        if !out.contains(&l) {
            out.push(l);
        }
    }
    if let Some(extra) = enumerate_alternating(n)?
        .map(|s| NaturalLabeling::new(s.entries()))
        .find(|l| l.as_ref().is_ok_and(|l| !out.contains(l)))
    {
        if out.len() < 3 {
            out.push(extra?);
        }
    }
    Ok(out)
}

/// `Σ_{w ∈ L(Z_n, ω)} t^{des(w)}`.
pub fn descent_polynomial(n: usize, omega: &NaturalLabeling) -> Result<IntPolynomial> {
    let mut counts = vec![0u64; n];
    for word in jordan_holder_set(n, omega)? {
        counts[descent_set(&word).len()] += 1;
    }
    Ok(IntPolynomial::from_counts(counts))
}

fn check_equidistribution(n: usize) -> Outcome {
    let swaps = hstar_from_swaps(n).map_err(lib_err)?;
    for omega in sample_labelings(n).map_err(lib_err)? {
        let des = descent_polynomial(n, &omega).map_err(lib_err)?;
        if des != swaps {
            return Err(json!({ "labeling": omega.labels(), "descents": des.to_string(), "swaps": swaps.to_string() }));
        }
    }
    Ok(())
}

fn check_gorenstein(n: usize) -> Outcome {
    match gorenstein_check(n).map_err(lib_err)? {
        Ok(_) => Ok(()),
        Err(failure) => Err(serde_json::to_value(failure).expect("serializable")),
    }
}

type CheckFn = Box<dyn Fn() -> Outcome + Send + Sync>;

/// Runs every check at `n`; those beyond their guard are `skipped`.
pub fn verify_all(n: usize, depth: Depth) -> Result<Report> {
    verify_all_with(n, depth, Guards::for_depth(depth))
}

pub fn verify_all_with(n: usize, depth: Depth, g: Guards) -> Result<Report> {
    if n == 0 || n > crate::MAX_N {
        return Err(Error::InvalidInput(format!("n = {n} outside 1..={}", crate::MAX_N)));
    }
    let mut plan: Vec<(&str, Option<String>, CheckFn)> = Vec::new();
    let mut add = |name, skip: Option<String>, f: CheckFn| plan.push((name, skip, f));
    let guard = |limit: usize, what: &str| -> Option<String> {
        (n > limit).then(|| format!("n > {limit} ({what} guard)"))
    };

    add("hstar_routes_agree", None, Box::new(move || check_hstar_routes(n, &g)));
    add("hstar_degree_constant_volume", None, Box::new(move || check_hstar_shape(n)));
    add(
        "swap_number_structure",
        guard(g.enumerate, "enumeration"),
        Box::new(move || check_swap_numbers(n)),
    );
    add(
        "swap_moves",
        guard(g.pairwise, "pairwise"),
        Box::new(move || check_swap_moves(n)),
    );
    add(
        "noninversion_has_swap_between",
        guard(g.pairwise, "pairwise"),
        Box::new(move || check_noninversion_swaps(n)),
    );
    add(
        "facet_adjacency_iff_swap",
        guard(g.pairwise, "pairwise"),
        Box::new(move || check_facet_adjacency(n)),
    );
    add(
        "inversion_orders_are_shellings",
        guard(g.shelling, "shelling"),
        Box::new(move || check_shellings(n, g.shelling_seeds)),
    );
    add(
        "exclusion_set_unique_maximum",
        guard(g.brute_force, "brute-force"),
        Box::new(move || check_exclusion_maximality(n)),
    );
    add(
        "flag_h_vector_counts_swap_sets",
        guard(g.flag_vectors, "flag-vector"),
        Box::new(move || check_flag_h_vector(n)),
    );
    add(
        "phi_psi_bijection",
        guard(g.brute_force, "brute-force"),
        Box::new(move || check_chain_bijection(n)),
    );
    add(
        "descent_swap_equidistribution",
        guard(g.jordan_holder, "Jordan-Hölder"),
        Box::new(move || check_equidistribution(n)),
    );
    add(
        "gorenstein_index_three",
        (n < 2).then(|| "index-3 property needs n >= 2".to_string()),
        Box::new(move || check_gorenstein(n)),
    );

    let checks = plan
        .into_par_iter()
        .map(|(name, skip, f)| {
            let (status, witness) = match skip {
                Some(reason) => (Status::Skipped, Some(json!(reason))),
                None => match f() {
                    Ok(()) => (Status::Pass, None),
                    Err(w) => (Status::Fail, Some(w)),
                },
            };
            CheckResult {
                name: name.to_string(),
                status,
                witness,
            }
        })
        .collect();

    let mut versions = BTreeMap::new();
    versions.insert(
        env!("CARGO_PKG_NAME").to_string(),
        env!("CARGO_PKG_VERSION").to_string(),
    );
    Ok(Report {
        n,
        depth,
        checks,
        versions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_number_examples() {
        assert_eq!(swap_numbers(4).unwrap().s, [1, 3, 1, 0]);
        assert_eq!(swap_numbers(2).unwrap().s, [1, 0]);
        let t7 = swap_numbers(7).unwrap();
        assert_eq!(t7.s.iter().sum::<u64>(), 272);
        assert!(t7.violations().is_empty());
        assert!(swap_numbers(1).unwrap().violations().is_empty());
    }

    #[test]
    fn unimodality() {
        assert!(is_unimodal(&[1, 3, 3, 1]));
        assert!(is_unimodal(&[1]));
        assert!(is_unimodal(&[5, 2, 1]));
        assert!(!is_unimodal(&[1, 3, 2, 3, 1]));
    }

    #[test]
    fn violations_are_reported() {
        let bad = SwapNumberTable { n: 4, s: vec![1, 2, 2, 0] };
        let v = bad.violations();
        assert!(v.iter().any(|m| m.contains("symmetric")));
        assert!(v.iter().any(|m| m.contains("s_4(2)")));
    }

    #[test]
    fn verify_n4_full_passes() {
        let report = verify_all(4, Depth::Full).unwrap();
        assert!(report.checks.iter().all(|c| c.status == Status::Pass), "{}", report.to_json());
    }

    #[test]
    fn verify_n1_skips_inapplicable() {
        let report = verify_all(1, Depth::Full).unwrap();
        assert!(report.all_passed(), "{}", report.to_json());
        let gor = report.checks.iter().find(|c| c.name == "gorenstein_index_three").unwrap();
        assert_eq!(gor.status, Status::Skipped);
    }

    #[test]
    fn verify_n7_fast_skips_shelling() {
        let report = verify_all(7, Depth::Fast).unwrap();
        assert!(report.all_passed(), "{}", report.to_json());
        let status = |name: &str| report.checks.iter().find(|c| c.name == name).unwrap().status;
        assert_eq!(status("inversion_orders_are_shellings"), Status::Skipped);
        assert_eq!(status("hstar_routes_agree"), Status::Pass);
    }

    #[test]
    fn report_is_deterministic() {
        let a = verify_all(5, Depth::Fast).unwrap().to_json();
        let b = verify_all(5, Depth::Fast).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn labelings_are_distinct() {
        // A_3 = {132, 231} has only two members
        assert_eq!(sample_labelings(3).unwrap().len(), 2);
        for n in 4..=7 {
            let ls = sample_labelings(n).unwrap();
            assert!(ls.len() >= 3, "n = {n}");
        }
    }
}
