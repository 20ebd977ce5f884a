//! The zig-zag poset `Z_n` (covers `z_1 < z_2 > z_3 < …`), its order
//! ideals, the distributive lattice `J(Z_n)`, chains with prescribed ideal
//! sizes, natural labelings and Jordan–Hölder sets.
//!
//! Element `z_i` is written `i`; the letters `a, b, c, …` of hand-drawn
//! examples correspond to `1, 2, 3, …`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::alt_perm::{enumerate_alternating, AltPerm};
use crate::error::{Error, Result};
use crate::sets::{IndexSet, SizeSet};
use crate::MAX_N;

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidInput(format!("n = {n} outside 1..={MAX_N}")));
    }
    Ok(())
}

/// The zig-zag poset on `z_1, …, z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZigZag {
    n: usize,
}

impl ZigZag {
    pub fn new(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(ZigZag { n })
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// Cover relations `(lower, upper)`, in order of the lower-left element.
    pub fn covers(self) -> Vec<(usize, usize)> {
        (1..self.n)
            .map(|i| if i % 2 == 1 { (i, i + 1) } else { (i + 1, i) })
            .collect()
    }

    /// `z_i < z_j`. The poset has height two, so this is the cover relation.
    pub fn less(self, i: usize, j: usize) -> bool {
        j.is_multiple_of(2) && (i + 1 == j || i == j + 1) && i <= self.n && j <= self.n
    }
}

/// An order ideal of `Z_n`: bit `i` set means `z_i` belongs to it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderIdeal {
    n: usize,
    members: IndexSet,
}

fn down_closed(n: usize, members: IndexSet) -> bool {
    members.iter().all(|i| {
        i % 2 == 1 || (members.contains(i - 1) && (i + 1 > n || members.contains(i + 1)))
    })
}

/// True iff `subset` (elements in `1..=n`) is down-closed in `Z_n`.
pub fn is_order_ideal(n: usize, subset: &[usize]) -> Result<bool> {
    check_n(n)?;
    let mut members = IndexSet::empty();
    for &i in subset {
        if i == 0 || i > n {
            return Err(Error::InvalidInput(format!("element {i} outside 1..={n}")));
        }
        members.insert(i);
    }
    Ok(down_closed(n, members))
}

impl OrderIdeal {
    pub fn new(n: usize, members: IndexSet) -> Result<Self> {
        check_n(n)?;
        if members.contains(0) || members.max().is_some_and(|m| m > n) {
            return Err(Error::InvalidInput(format!(
                "{members} is not a subset of 1..={n}"
            )));
        }
        if !down_closed(n, members) {
            return Err(Error::InvalidInput(format!(
                "{members} is not an order ideal of Z_{n}"
            )));
        }
        Ok(OrderIdeal { n, members })
    }

    pub(crate) fn new_unchecked(n: usize, members: IndexSet) -> Self {
        debug_assert!(down_closed(n, members));
        OrderIdeal { n, members }
    }

    pub fn empty(n: usize) -> Self {
        OrderIdeal {
            n,
            members: IndexSet::empty(),
        }
    }

    pub fn full(n: usize) -> Self {
        OrderIdeal {
            n,
            members: IndexSet::range(1, n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> IndexSet {
        self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn is_subset(&self, other: &OrderIdeal) -> bool {
        self.members.is_subset(other.members)
    }

    pub fn parse(n: usize, s: &str) -> Result<Self> {
        OrderIdeal::new(n, s.parse()?)
    }
}

impl fmt::Display for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.members, f)
    }
}

impl fmt::Debug for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderIdeal{}", self.members)
    }
}

impl Serialize for OrderIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// `J(Z_n)` split by ideal size: entry `s` lists the ideals of size `s`
/// in ascending bit-mask order.
pub fn ideals_by_size(n: usize) -> Result<Vec<Vec<OrderIdeal>>> {
    check_n(n)?;
    let mut all = Vec::new();
    collect_ideals(n, 1, IndexSet::empty(), &mut all);
    all.sort_unstable();
    let mut by_size = vec![Vec::new(); n + 1];
    for members in all {
        by_size[members.len()].push(OrderIdeal { n, members });
    }
    Ok(by_size)
}

fn collect_ideals(n: usize, i: usize, members: IndexSet, out: &mut Vec<IndexSet>) {
    if i > n {
        out.push(members);
        return;
    }
    if i % 2 == 1 {
        // a minimal element; forced in when its upper neighbour z_{i-1} is in
        let forced = i > 1 && members.contains(i - 1);
        if !forced {
            collect_ideals(n, i + 1, members, out);
        }
        let mut with = members;
        with.insert(i);
        collect_ideals(n, i + 1, with, out);
    } else {
        collect_ideals(n, i + 1, members, out);
        if members.contains(i - 1) {
            let mut with = members;
            with.insert(i);
            collect_ideals(n, i + 1, with, out);
        }
    }
}

/// A strictly increasing chain of order ideals `I_1 ⊊ … ⊊ I_k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealChain {
    n: usize,
    ideals: Vec<OrderIdeal>,
}

impl IdealChain {
    pub fn new(n: usize, ideals: Vec<OrderIdeal>) -> Result<Self> {
        check_n(n)?;
        if let Some(bad) = ideals.iter().find(|i| i.n != n) {
            return Err(Error::InvalidInput(format!("{bad} is not an ideal of Z_{n}")));
        }
        for w in ideals.windows(2) {
            if !(w[0].is_subset(&w[1]) && w[0].size() < w[1].size()) {
                return Err(Error::InvalidInput(format!(
                    "{} is not strictly contained in {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(IdealChain { n, ideals })
    }

    pub fn empty(n: usize) -> Self {
        IdealChain { n, ideals: vec![] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ideals(&self) -> &[OrderIdeal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn sizes(&self) -> SizeSet {
        self.ideals.iter().map(OrderIdeal::size).collect()
    }

    /// Parses `{1,3} < {1,2,3,4}`; the empty string is the empty chain.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(IdealChain::empty(n));
        }
        let ideals = s
            .split('<')
            .map(|t| OrderIdeal::parse(n, t))
            .collect::<Result<_>>()?;
        IdealChain::new(n, ideals)
    }
}

impl fmt::Display for IdealChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, ideal) in self.ideals.iter().enumerate() {
            if k > 0 {
                f.write_str(" < ")?;
            }
            write!(f, "{ideal}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IdealChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IdealChain[{self}]")
    }
}

impl Serialize for IdealChain {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.ideals.iter())
    }
}

fn check_sizes(n: usize, sizes: SizeSet) -> Result<()> {
    check_n(n)?;
    if sizes.max().is_some_and(|m| m > n) {
        return Err(Error::InvalidInput(format!("sizes {sizes} exceed n = {n}")));
    }
    Ok(())
}

type Layers = (Vec<Vec<OrderIdeal>>, Vec<Vec<Vec<usize>>>);

/// Ideals of the requested sizes, plus for each consecutive pair of levels
/// the inclusion edges `(i, j)` with `level[k][i] ⊆ level[k+1][j]`.
fn layered(n: usize, sizes: SizeSet) -> Result<Layers> {
    check_sizes(n, sizes)?;
    let by_size = ideals_by_size(n)?;
    let levels: Vec<Vec<OrderIdeal>> = sizes.iter().map(|s| by_size[s].clone()).collect();
    let edges = levels
        .windows(2)
        .map(|w| {
            w[0].iter()
                .map(|lo| {
                    w[1].iter()
                        .enumerate()
                        .filter(|(_, hi)| lo.is_subset(hi))
                        .map(|(j, _)| j)
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok((levels, edges))
}

/// Number of chains `I_1 ⊊ … ⊊ I_k` with `#I_j = s_j`, counted by dynamic
/// programming over the inclusion DAG between consecutive size levels.
pub fn count_chains_with_sizes(n: usize, sizes: SizeSet) -> Result<u128> {
    let (levels, edges) = layered(n, sizes)?;
    let Some(first) = levels.first() else {
        return Ok(1);
    };
    let mut counts: Vec<u128> = vec![1; first.len()];
    for (k, adj) in edges.iter().enumerate() {
        let mut next = vec![0u128; levels[k + 1].len()];
        for (i, targets) in adj.iter().enumerate() {
            for &j in targets {
                next[j] = next[j]
                    .checked_add(counts[i])
                    .ok_or(Error::Overflow("count_chains_with_sizes"))?;
            }
        }
        counts = next;
    }
    counts
        .into_iter()
        .try_fold(0u128, |acc, c| acc.checked_add(c))
        .ok_or(Error::Overflow("count_chains_with_sizes"))
}

/// Every chain of ideals with sizes exactly `sizes`, each once, ordered
/// lexicographically by the ideals' bit masks.
pub fn chains_with_sizes(n: usize, sizes: SizeSet) -> Result<Vec<IdealChain>> {
    let (levels, edges) = layered(n, sizes)?;
    let mut out = Vec::new();
    if levels.is_empty() {
        out.push(IdealChain::empty(n));
        return Ok(out);
    }
    let mut stack = Vec::with_capacity(levels.len());
    for i in 0..levels[0].len() {
        stack.push(i);
        extend_chains(n, &levels, &edges, &mut stack, &mut out);
        stack.pop();
    }
    Ok(out)
}

fn extend_chains(
    n: usize,
    levels: &[Vec<OrderIdeal>],
    edges: &[Vec<Vec<usize>>],
    stack: &mut Vec<usize>,
    out: &mut Vec<IdealChain>,
) {
    let depth = stack.len();
    if depth == levels.len() {
        let ideals = stack
            .iter()
            .enumerate()
            .map(|(k, &i)| levels[k][i])
            .collect();
        out.push(IdealChain { n, ideals });
        return;
    }
    let last = stack[depth - 1];
    for &j in &edges[depth - 1][last] {
        stack.push(j);
        extend_chains(n, levels, edges, stack, out);
        stack.pop();
    }
}

/// `{σ⁻¹(1), …, σ⁻¹(k)}`.
pub fn prefix_ideal(sigma: &AltPerm, k: usize) -> OrderIdeal {
    let n = sigma.n();
    let members = (1..=n).filter(|&p| sigma.value(p) <= k).collect();
    // a linear extension's prefixes are down-closed
    assert!(
        down_closed(n, members),
        "prefix {members} of {sigma} is not an order ideal"
    );
    OrderIdeal { n, members }
}

/// `∅ = I_0 ⊊ I_1 ⊊ … ⊊ I_n` with `I_j = {σ⁻¹(1), …, σ⁻¹(j)}`.
pub fn perm_to_saturated_chain(sigma: &AltPerm) -> IdealChain {
    let n = sigma.n();
    IdealChain {
        n,
        ideals: (0..=n).map(|k| prefix_ideal(sigma, k)).collect(),
    }
}

/// An order-preserving bijection `ω: Z_n → [n]`; `labels[i-1] = ω(z_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaturalLabeling {
    labels: Vec<usize>,
}

impl NaturalLabeling {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        crate::alt_perm::check_permutation(&labels)
            .map_err(|e| Error::InvalidLabeling(e.to_string()))?;
        let z = ZigZag { n: labels.len() };
        if let Some((lo, hi)) = z
            .covers()
            .into_iter()
            .find(|&(lo, hi)| labels[lo - 1] > labels[hi - 1])
        {
            return Err(Error::InvalidLabeling(format!(
                "z_{lo} < z_{hi} but ω(z_{lo}) = {} > ω(z_{hi}) = {}",
                labels[lo - 1],
                labels[hi - 1]
            )));
        }
        Ok(NaturalLabeling { labels })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// `ω(z_i)`.
    pub fn label(&self, i: usize) -> usize {
        self.labels[i - 1]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }
}

/// Minimal (odd) elements get `1..=⌈n/2⌉` left to right, maximal (even)
/// elements get the remaining labels left to right.
pub fn default_natural_labeling(n: usize) -> Result<NaturalLabeling> {
    check_n(n)?;
    let half = n.div_ceil(2);
    let labels = (1..=n)
        .map(|i| if i % 2 == 1 { i.div_ceil(2) } else { half + i / 2 })
        .collect();
    NaturalLabeling::new(labels)
}

/// The Jordan–Hölder set `L(Z_n, ω)`: for every linear extension `σ`
/// (an alternating permutation) the word `ω(σ⁻¹(1)) … ω(σ⁻¹(n))`.
/// Words come out in the enumeration order of `A_n`.
pub fn jordan_holder_set(
    n: usize,
    omega: &NaturalLabeling,
) -> Result<impl Iterator<Item = Vec<usize>> + '_> {
    if omega.n() != n {
        return Err(Error::InvalidLabeling(format!(
            "labeling has {} elements, expected {n}",
            omega.n()
        )));
    }
    Ok(enumerate_alternating(n)?.map(move |sigma| {
        sigma
            .inverse()
            .into_iter()
            .map(|pos| omega.label(pos))
            .collect()
    }))
}

impl FromStr for NaturalLabeling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NaturalLabeling::new(crate::alt_perm::parse_permutation(s)?)
    }
}
