//! Flag f- and h-vectors of `J(Z_n)`, the maps `φ_S` / `ψ_S` between
//! size-`S` ideal chains and alternating permutations whose swap set lies
//! in `S`, and the constructive inversion maximiser behind `φ_S`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::alt_perm::{enumerate_alternating, AltPerm};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::polytope::Vertex01;
use crate::poset::{count_chains_with_sizes, prefix_ideal, IdealChain, OrderIdeal};
use crate::sets::{IndexSet, SizeSet};
use crate::MAX_N;

/// `α_n(S)`: the number of ideal chains `I_1 ⊊ … ⊊ I_k` with `#I_j = s_j`.
pub fn alpha(n: usize, sizes: SizeSet) -> Result<u128> {
    count_chains_with_sizes(n, sizes)
}

fn check_interior(n: usize, s: SizeSet) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidInput(format!("n = {n} outside 1..={MAX_N}")));
    }
    if !s.is_subset(IndexSet::range(1, n - 1)) {
        return Err(Error::InvalidInput(format!("{s} is not a subset of [1, {}]", n - 1)));
    }
    Ok(())
}

/// `β_n(S) = Σ_{T ⊆ S} (−1)^{#(S−T)} α_n(T)` for `S ⊆ [n−1]`.
pub fn beta(n: usize, s: SizeSet) -> Result<i128> {
    check_interior(n, s)?;
    s.subsets().try_fold(0i128, |acc, t| {
        let a = i128::try_from(alpha(n, t)?).map_err(|_| Error::Overflow("beta"))?;
        let term = if (s.len() - t.len()).is_multiple_of(2) { a } else { -a };
        acc.checked_add(term).ok_or(Error::Overflow("beta"))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FlagKind {
    Alpha,
    Beta,
}

/// A flag vector indexed by subsets of `[n−1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagVector {
    pub n: usize,
    pub kind: FlagKind,
    pub table: BTreeMap<IndexSet, i128>,
}

impl FlagVector {
    pub fn get(&self, s: SizeSet) -> Option<i128> {
        self.table.get(&s).copied()
    }
}

/// JSON object from `"{1,3}"`-style keys to integers.
impl Serialize for FlagVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(self.table.iter().map(|(k, v)| (k.to_string(), *v as i64)))
    }
}

fn interior_subsets(n: usize) -> Vec<IndexSet> {
    IndexSet::range(1, n.saturating_sub(1)).subsets().collect()
}

fn alpha_lookup(n: usize) -> Result<Vec<i128>> {
    // index = bits >> 1, since subsets of [n−1] never use bit 0
    interior_subsets(n)
        .into_par_iter()
        .map(|s| {
            let a = alpha(n, s)?;
            i128::try_from(a).map_err(|_| Error::Overflow("alpha"))
        })
        .collect()
}

pub fn alpha_table(n: usize) -> Result<FlagVector> {
    check_interior(n, IndexSet::empty())?;
    let values = alpha_lookup(n)?;
    let table = interior_subsets(n)
        .into_iter()
        .map(|s| (s, values[(s.bits() >> 1) as usize]))
        .collect();
    Ok(FlagVector {
        n,
        kind: FlagKind::Alpha,
        table,
    })
}

/// `β_n(S)` for every `S ⊆ [n−1]`, each by inclusion–exclusion over a
/// memoised `α_n` table.
pub fn beta_table(n: usize) -> Result<FlagVector> {
    check_interior(n, IndexSet::empty())?;
    let alphas = alpha_lookup(n)?;
    let subsets = interior_subsets(n);
    let values: Vec<i128> = subsets
        .par_iter()
        .map(|&s| {
            s.subsets().try_fold(0i128, |acc, t| {
                let a = alphas[(t.bits() >> 1) as usize];
                let term = if (s.len() - t.len()) % 2 == 0 { a } else { -a };
                acc.checked_add(term).ok_or(Error::Overflow("beta_table"))
            })
        })
        .collect::<Result<_>>()?;
    Ok(FlagVector {
        n,
        kind: FlagKind::Beta,
        table: subsets.into_iter().zip(values).collect(),
    })
}

/// `h*(t) = Σ_{S ⊆ [n−1]} β_n(S) t^{#S}`.
pub fn hstar_from_beta(n: usize) -> Result<IntPolynomial> {
    let betas = beta_table(n)?;
    let mut coeffs = vec![0i128; n];
    for (s, &b) in &betas.table {
        if b < 0 {
            return Err(Error::TheoremViolation(format!("β_{n}({s}) = {b} is negative")));
        }
        coeffs[s.len()] += b;
    }
    Ok(IntPolynomial::from_counts(coeffs))
}

/// A set of polytope vertices whose zero sets form a chain; always holds
/// the all-ones and all-zeros points, sorted by decreasing weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexConstraintSet {
    n: usize,
    vertices: Vec<Vertex01>,
}

impl VertexConstraintSet {
    pub fn new(n: usize, vertices: impl IntoIterator<Item = Vertex01>) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidConstraints(format!("n = {n} outside 1..={MAX_N}")));
        }
        let mut vs: Vec<Vertex01> = vertices.into_iter().collect();
        if let Some(bad) = vs.iter().find(|v| v.n() != n) {
            return Err(Error::InvalidConstraints(format!("{bad} is not a point of O(Z_{n})")));
        }
        vs.push(Vertex01::all_ones(n));
        vs.push(Vertex01::all_zeros(n));
        vs.sort_by_key(|v| (std::cmp::Reverse(v.weight()), v.zeros().bits()));
        vs.dedup();
        for w in vs.windows(2) {
            if !w[0].zeros().is_subset(w[1].zeros()) {
                return Err(Error::InvalidConstraints(format!(
                    "zero sets of {} and {} are not nested",
                    w[0], w[1]
                )));
            }
        }
        Ok(VertexConstraintSet { n, vertices: vs })
    }

    /// `{w_1, …, w_k}` with `w_i` the vertex whose zero set is `I_i`.
    pub fn from_chain(chain: &IdealChain) -> Result<Self> {
        VertexConstraintSet::new(chain.n(), chain.ideals().iter().map(Vertex01::from_ideal))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Vertex01] {
        &self.vertices
    }

    /// Zero-count increments `n_k = m_k − m_{k−1}`.
    pub fn group_sizes(&self) -> Vec<usize> {
        self.vertices
            .windows(2)
            .map(|w| w[1].zeros().len() - w[0].zeros().len())
            .collect()
    }

    /// Whether `Δ^τ` has every constraint vertex.
    pub fn is_contained_in(&self, tau: &AltPerm) -> bool {
        self.vertices.iter().all(|v| {
            let k = v.zeros().len();
            v.zeros().iter().all(|pos| tau.value(pos) <= k)
        })
    }
}

/// The unique inversion-maximal alternating permutation whose simplex
/// contains every constraint vertex.
///
/// Positions that turn zero between consecutive constraint vertices form a
/// group and receive that group's value block in decreasing order; then,
/// inside each group, every odd position `j` with `j + 1` in the same group
/// is exchanged with `j + 1` to restore the forced ascent.
pub fn unique_max_altperm(constraints: &VertexConstraintSet) -> Result<AltPerm> {
    let n = constraints.n();
    let mut entries = vec![0usize; n];
    let mut group_of = vec![usize::MAX; n + 1];
    let mut assigned = 0;
    for (g, w) in constraints.vertices().windows(2).enumerate() {
        let fresh = IndexSet::from_bits(w[1].zeros().bits() & !w[0].zeros().bits());
        let top = assigned + fresh.len();
        for (l, pos) in fresh.iter().enumerate() {
            entries[pos - 1] = top - l;
            group_of[pos] = g;
        }
        assigned = top;
    }
    debug_assert_eq!(assigned, n);
    for j in (1..n).step_by(2) {
        if group_of[j] == group_of[j + 1] && entries[j - 1] > entries[j] {
            entries.swap(j - 1, j);
        }
    }
    let sigma = AltPerm::new(entries).map_err(|e| {
        Error::TheoremViolation(format!("maximiser construction is not alternating: {e}"))
    })?;
    if !constraints.is_contained_in(&sigma) {
        return Err(Error::TheoremViolation(format!(
            "constructed {sigma} misses a constraint vertex"
        )));
    }
    Ok(sigma)
}

/// Largest `n` the brute-force maximiser will enumerate.
pub const BRUTE_FORCE_MAX_N: usize = 9;

/// Argmax of the inversion number over all `τ ∈ A_n` whose simplex holds the
/// constraints, found by scanning `A_n`; fails if the argmax is not unique.
pub fn brute_force_max_altperm(constraints: &VertexConstraintSet) -> Result<AltPerm> {
    let n = constraints.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::GuardExceeded {
            what: "brute-force maximiser",
            n,
            limit: BRUTE_FORCE_MAX_N,
        });
    }
    let mut best: Option<(usize, AltPerm)> = None;
    let mut ties = 0;
    for tau in enumerate_alternating(n)?.filter(|t| constraints.is_contained_in(t)) {
        let inv = tau.inversion_count();
        match &best {
            Some((b, _)) if inv < *b => {}
            Some((b, _)) if inv == *b => ties += 1,
            _ => {
                best = Some((inv, tau));
                ties = 0;
            }
        }
    }
    match best {
        None => Err(Error::InfeasibleConstraints),
        Some((inv, tau)) if ties > 0 => Err(Error::TheoremViolation(format!(
            "{} permutations share the maximum inversion number {inv} (one is {tau})",
            ties + 1
        ))),
        Some((_, tau)) => Ok(tau),
    }
}

/// `φ_S`: an ideal chain to the inversion-maximal permutation whose simplex
/// holds the vertices with zero sets `I_1, …, I_k`.
pub fn phi(chain: &IdealChain) -> Result<AltPerm> {
    unique_max_altperm(&VertexConstraintSet::from_chain(chain)?)
}

/// `ψ_S`: `σ` to the chain of prefix ideals `{σ⁻¹(1), …, σ⁻¹(s_j)}`.
/// Defined only when `Swap(σ) ⊆ S`.
pub fn psi(sizes: SizeSet, sigma: &AltPerm) -> Result<IdealChain> {
    let n = sigma.n();
    if sizes.max().is_some_and(|m| m > n) {
        return Err(Error::InvalidInput(format!("sizes {sizes} exceed n = {n}")));
    }
    if !sigma.swap_set().is_subset(sizes) {
        return Err(Error::OutsideDomain {
            perm: sigma.to_string(),
            sizes: sizes.to_string(),
        });
    }
    let ideals: Vec<OrderIdeal> = sizes.iter().map(|s| prefix_ideal(sigma, s)).collect();
    IdealChain::new(n, ideals)
}
