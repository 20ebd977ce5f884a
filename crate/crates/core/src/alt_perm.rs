//! Alternating permutations `σ(1) < σ(2) > σ(3) < …`, their swap,
//! inversion and descent statistics, and the Euler zig-zag numbers.
//!
//! Positions and values are 1-indexed everywhere in the public API.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::sets::{IndexSet, SwapSet};
use crate::MAX_N;

/// An alternating permutation in one-line notation.
///
/// Ordering is lexicographic on the one-line notation, which is also the
/// order [`enumerate_alternating`] yields.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AltPerm {
    entries: Vec<u8>,
}

/// Checks that `entries` is a permutation of `1..=n` with `1 <= n <= MAX_N`.
pub fn check_permutation(entries: &[usize]) -> Result<()> {
    let n = entries.len();
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidInput(format!(
            "permutation length {n} outside 1..={MAX_N}"
        )));
    }
    let mut seen = 0u64;
    for &v in entries {
        if v == 0 || v > n {
            return Err(Error::InvalidInput(format!("value {v} outside 1..={n}")));
        }
        if seen >> (v - 1) & 1 == 1 {
            return Err(Error::InvalidInput(format!("value {v} repeated")));
        }
        seen |= 1 << (v - 1);
    }
    Ok(())
}

fn alternates(entries: &[usize]) -> bool {
    entries.windows(2).enumerate().all(|(i, w)| {
        // i is 0-based, so i even <=> 1-based position i+1 is odd
        if i % 2 == 0 {
            w[0] < w[1]
        } else {
            w[0] > w[1]
        }
    })
}

/// True iff `entries` (a permutation of `1..=n`) alternates up-down.
pub fn is_alternating(entries: &[usize]) -> Result<bool> {
    check_permutation(entries)?;
    Ok(alternates(entries))
}

impl AltPerm {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if !is_alternating(&entries)? {
            return Err(Error::InvalidInput(format!(
                "{} is not alternating",
                fmt_one_line(&entries)
            )));
        }
        Ok(AltPerm {
            entries: entries.into_iter().map(|v| v as u8).collect(),
        })
    }

    /// Caller guarantees the bytes form an alternating permutation.
    pub(crate) fn from_bytes_unchecked(entries: Vec<u8>) -> Self {
        debug_assert!(alternates(
            &entries.iter().map(|&v| v as usize).collect::<Vec<_>>()
        ));
        AltPerm { entries }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// `σ(pos)` for `pos` in `1..=n`.
    pub fn value(&self, pos: usize) -> usize {
        self.entries[pos - 1] as usize
    }

    pub fn entries(&self) -> Vec<usize> {
        self.entries.iter().map(|&v| v as usize).collect()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.entries
    }

    /// `σ⁻¹` as a vector indexed by `value - 1`, holding 1-based positions.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.n()];
        for (p, &v) in self.entries.iter().enumerate() {
            inv[v as usize - 1] = p + 1;
        }
        inv
    }

    /// `σ⁻¹(v)`.
    pub fn position_of(&self, v: usize) -> usize {
        self.entries.iter().position(|&x| x as usize == v).unwrap() + 1
    }

    /// `{ i < n : σ⁻¹(i) < σ⁻¹(i+1) − 1 }`.
    pub fn swap_set(&self) -> SwapSet {
        swap_set_of(&self.entries)
    }

    pub fn swap(&self) -> usize {
        self.swap_set().len()
    }

    /// Exchanges the values `i` and `i + 1`; `i` must be in the swap set.
    pub fn swap_to(&self, i: usize) -> Result<AltPerm> {
        if !self.swap_set().contains(i) {
            return Err(Error::InvalidSwap {
                perm: self.to_string(),
                value: i,
            });
        }
        let entries = self
            .entries
            .iter()
            .map(|&v| match v as usize {
                x if x == i => (i + 1) as u8,
                x if x == i + 1 => i as u8,
                _ => v,
            })
            .collect();
        Ok(AltPerm::from_bytes_unchecked(entries))
    }

    pub fn inversion_count(&self) -> usize {
        inversion_count(&self.entries())
    }

    pub fn descent_set(&self) -> IndexSet {
        descent_set(&self.entries())
    }
}

pub(crate) fn swap_set_of(entries: &[u8]) -> SwapSet {
    let n = entries.len();
    let mut pos = [0u8; MAX_N + 1];
    for (p, &v) in entries.iter().enumerate() {
        pos[v as usize] = p as u8;
    }
    let mut set = IndexSet::empty();
    for i in 1..n {
        if pos[i] as usize + 1 < pos[i + 1] as usize {
            set.insert(i);
        }
    }
    set
}

/// Number of pairs `i < j` with `π(i) > π(j)`.
pub fn inversion_count(perm: &[usize]) -> usize {
    let mut count = 0;
    for (i, &a) in perm.iter().enumerate() {
        count += perm[i + 1..].iter().filter(|&&b| b < a).count();
    }
    count
}

/// `{ i : π(i) > π(i+1) }` for any permutation.
pub fn descent_set(perm: &[usize]) -> IndexSet {
    perm.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

fn fmt_one_line(entries: &[usize]) -> String {
    if entries.len() <= 9 {
        entries.iter().map(|v| v.to_string()).collect()
    } else {
        entries
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses one-line notation: a bare digit string (only for `n <= 9`) or a
/// comma-separated list (any `n`). Returns a plain permutation.
pub fn parse_permutation(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let entries: Vec<usize> = if s.contains(',') {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad entry {t:?}")))
            })
            .collect::<Result<_>>()?
    } else {
        if s.is_empty() || s.len() > 9 {
            return Err(Error::InvalidInput(format!(
                "{s:?}: digit-string form needs 1..=9 digits"
            )));
        }
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::InvalidInput(format!("bad digit {c:?}")))
            })
            .collect::<Result<_>>()?
    };
    check_permutation(&entries)?;
    Ok(entries)
}

impl FromStr for AltPerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AltPerm::new(parse_permutation(s)?)
    }
}

impl fmt::Display for AltPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_one_line(&self.entries()))
    }
}

impl fmt::Debug for AltPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AltPerm({self})")
    }
}

impl Serialize for AltPerm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidInput(format!("n = {n} outside 1..={MAX_N}")));
    }
    Ok(())
}

// Candidate test for 0-based position `p` holding `v`, given the values
// still unused *after* placing `v`. Besides the alternation with the
// previous entry it requires a usable value for position p+1, which makes
// the search dead-end free.
#[inline]
fn admissible(n: usize, p: usize, prev: u8, v: u8, unused_after: u64) -> bool {
    let up_step = p.is_multiple_of(2); // 1-based odd position: σ(p) < σ(p+1)
    if p > 0 {
        let ok = if up_step { v < prev } else { v > prev };
        if !ok {
            return false;
        }
    }
    if p + 1 < n {
        let above = unused_after >> v;
        let below = unused_after & ((1u64 << (v - 1)) - 1);
        if up_step { above != 0 } else { below != 0 }
    } else {
        true
    }
}

/// Iterator over `A_n` in ascending lexicographic order.
///
/// Backtracking with alternation pruning; every partial prefix it builds
/// extends to at least one alternating permutation.
pub struct AltPerms {
    n: usize,
    entries: Vec<u8>,
    // bit v-1 set <=> value v unused
    unused: u64,
    started: bool,
    done: bool,
}

impl AltPerms {
    fn new(n: usize) -> Self {
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        AltPerms {
            n,
            entries: Vec::with_capacity(n),
            unused: full,
            started: false,
            done: false,
        }
    }

    fn smallest_from(&self, p: usize, lo: u8) -> Option<u8> {
        let prev = if p > 0 { self.entries[p - 1] } else { 0 };
        // values > lo are bits >= lo
        let mut cands = if lo >= 64 { 0 } else { self.unused & (u64::MAX << lo) };
        while cands != 0 {
            let v = cands.trailing_zeros() as u8 + 1;
            if admissible(self.n, p, prev, v, self.unused & !(1u64 << (v - 1))) {
                return Some(v);
            }
            cands &= cands - 1;
        }
        None
    }

    fn place(&mut self, v: u8) {
        self.entries.push(v);
        self.unused &= !(1u64 << (v - 1));
    }

    fn fill(&mut self) {
        while self.entries.len() < self.n {
            let p = self.entries.len();
            let v = self
                .smallest_from(p, 0)
                .expect("alternating prefix always extends");
            self.place(v);
        }
    }
}

impl Iterator for AltPerms {
    type Item = AltPerm;

    fn next(&mut self) -> Option<AltPerm> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
            return Some(AltPerm::from_bytes_unchecked(self.entries.clone()));
        }
        while let Some(v) = self.entries.pop() {
            self.unused |= 1u64 << (v - 1);
            let p = self.entries.len();
            if let Some(w) = self.smallest_from(p, v) {
                self.place(w);
                self.fill();
                return Some(AltPerm::from_bytes_unchecked(self.entries.clone()));
            }
        }
        self.done = true;
        None
    }
}

/// Every element of `A_n` exactly once, ascending lexicographically.
pub fn enumerate_alternating(n: usize) -> Result<AltPerms> {
    check_n(n)?;
    Ok(AltPerms::new(n))
}

/// Allocation-free visitor over `A_n` in the same order as
/// [`enumerate_alternating`]; the slice holds the one-line notation.
pub fn for_each_alternating<F: FnMut(&[u8])>(n: usize, mut f: F) -> Result<()> {
    check_n(n)?;
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut buf = vec![0u8; n];
    visit(n, 0, full, &mut buf, &mut f);
    Ok(())
}

fn visit<F: FnMut(&[u8])>(n: usize, p: usize, unused: u64, buf: &mut [u8], f: &mut F) {
    if p == n {
        f(buf);
        return;
    }
    let prev = if p > 0 { buf[p - 1] } else { 0 };
    let mut cands = unused;
    while cands != 0 {
        let v = cands.trailing_zeros() as u8 + 1;
        cands &= cands - 1;
        let rest = unused & !(1u64 << (v - 1));
        if admissible(n, p, prev, v, rest) {
            buf[p] = v;
            visit(n, p + 1, rest, buf, f);
        }
    }
}

/// `hist[k] = #{σ ∈ A_n : swap(σ) = k}` for `k` in `0..n`.
pub fn swap_histogram(n: usize) -> Result<Vec<u64>> {
    let mut hist = vec![0u64; n.max(1)];
    for_each_alternating(n, |e| hist[swap_set_of(e).len()] += 1)?;
    Ok(hist)
}

/// Euler zig-zag numbers `E_0..=E_{n_max}` via
/// `2 E_{m+1} = Σ_k C(m,k) E_k E_{m−k}` (m ≥ 1), in arbitrary precision.
pub fn euler_zigzag(n_max: usize) -> Vec<BigUint> {
    let mut e: Vec<BigUint> = vec![BigUint::one(); (n_max + 1).min(2)];
    let mut binom: Vec<BigUint> = vec![BigUint::one()]; // row m of Pascal's triangle
    for m in 1..n_max {
        let mut next_row = vec![BigUint::one(); m + 1];
        for k in 1..m {
            next_row[k] = &binom[k - 1] + &binom[k];
        }
        binom = next_row;
        let mut sum = BigUint::zero();
        for k in 0..=m {
            sum += &binom[k] * &e[k] * &e[m - k];
        }
        e.push(sum >> 1u32);
    }
    e
}

/// Same recurrence in checked 128-bit arithmetic; overflow is an error.
pub fn euler_zigzag_checked(n_max: usize) -> Result<Vec<u128>> {
    const WHAT: &str = "euler_zigzag_checked";
    let mut e: Vec<u128> = vec![1; (n_max + 1).min(2)];
    let mut binom: Vec<u128> = vec![1];
    for m in 1..n_max {
        let mut next_row = vec![1u128; m + 1];
        for k in 1..m {
            next_row[k] = binom[k - 1]
                .checked_add(binom[k])
                .ok_or(Error::Overflow(WHAT))?;
        }
        binom = next_row;
        let mut sum: u128 = 0;
        for k in 0..=m {
            let term = binom[k]
                .checked_mul(e[k])
                .and_then(|t| t.checked_mul(e[m - k]))
                .ok_or(Error::Overflow(WHAT))?;
            sum = sum.checked_add(term).ok_or(Error::Overflow(WHAT))?;
        }
        e.push(sum / 2);
    }
    Ok(e)
}

/// `(n−1, n, n−3, n−2, …)`, ending in `1` when `n` is odd.
///
/// This is simultaneously the unique element of `A_n` with no swaps and the
/// unique inversion-maximal element of `A_n`.
pub fn zero_swap_altperm(n: usize) -> Result<AltPerm> {
    check_n(n)?;
    let mut entries = Vec::with_capacity(n);
    for pair in 0..n / 2 {
        entries.push(n - 1 - 2 * pair);
        entries.push(n - 2 * pair);
    }
    if n % 2 == 1 {
        entries.push(1);
    }
    AltPerm::new(entries)
}

/// The unique inversion-maximal alternating permutation (the first simplex
/// of every inversion shelling).
pub fn max_inversion_altperm(n: usize) -> Result<AltPerm> {
    zero_swap_altperm(n)
}

/// `1, 2, …, ⌈n/2⌉` in the odd positions and `⌈n/2⌉+1, …, n` in the even
/// positions: the unique element with `n − 2` swaps (for `n >= 2`).
pub fn max_swap_altperm(n: usize) -> Result<AltPerm> {
    check_n(n)?;
    let half = n.div_ceil(2);
    let entries = (1..=n)
        .map(|p| if p % 2 == 1 { p.div_ceil(2) } else { half + p / 2 })
        .collect();
    AltPerm::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> AltPerm {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> IndexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn is_alternating_examples() {
        assert!(is_alternating(&[1, 3, 2, 4]).unwrap());
        assert!(is_alternating(&[1]).unwrap());
        assert!(!is_alternating(&[1, 2, 3, 4]).unwrap());
        assert!(is_alternating(&[1, 1, 2]).is_err());
        assert!(is_alternating(&[1, 5, 2]).is_err());
        assert!(is_alternating(&[]).is_err());
    }

    #[test]
    fn enumerate_small() {
        let a4: Vec<String> = enumerate_alternating(4)
            .unwrap()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(a4, ["1324", "1423", "2314", "2413", "3412"]);
        assert_eq!(enumerate_alternating(1).unwrap().count(), 1);
        assert_eq!(enumerate_alternating(7).unwrap().count(), 272);
        assert!(enumerate_alternating(0).is_err());
    }

    #[test]
    fn visitor_matches_iterator() {
        for n in 1..=8 {
            let mut seen = Vec::new();
            for_each_alternating(n, |e| seen.push(e.to_vec())).unwrap();
            let it: Vec<Vec<u8>> = enumerate_alternating(n)
                .unwrap()
                .map(|s| s.as_bytes().to_vec())
                .collect();
            assert_eq!(seen, it, "n = {n}");
        }
    }

    #[test]
    fn swap_set_examples() {
        assert_eq!(p("1324").swap_set(), set(&[1, 3]));
        assert_eq!(p("3412").swap_set(), set(&[]));
        assert_eq!(p("3726451").swap_set(), set(&[3]));
        assert_eq!(p("1").swap(), 0);
        assert_eq!(p("12").swap(), 0);
    }

    #[test]
    fn swap_to_examples() {
        assert_eq!(p("1324").swap_to(3).unwrap(), p("1423"));
        assert_eq!(p("1324").swap_to(1).unwrap(), p("2314"));
        assert_eq!(p("2413").swap_to(2).unwrap(), p("3412"));
        assert!(matches!(
            p("3412").swap_to(1),
            Err(Error::InvalidSwap { value: 1, .. })
        ));
    }

    #[test]
    fn inversion_and_descent_examples() {
        assert_eq!(p("3412").inversion_count(), 4);
        assert_eq!(p("1324").inversion_count(), 1);
        assert_eq!(p("1").inversion_count(), 0);
        assert_eq!(descent_set(&[3, 4, 1, 2]), set(&[2]));
        assert_eq!(descent_set(&[1, 2, 3, 4]), set(&[]));
        assert_eq!(descent_set(&[4, 3, 2, 1]), set(&[1, 2, 3]));
    }

    #[test]
    fn euler_numbers() {
        let e: Vec<u64> = euler_zigzag(7)
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        assert_eq!(e, [1, 1, 1, 2, 5, 16, 61, 272]);
        assert_eq!(euler_zigzag(0).len(), 1);
        assert_eq!(euler_zigzag(1).len(), 2);
        let checked = euler_zigzag_checked(25).unwrap();
        let big = euler_zigzag(25);
        for (a, b) in checked.iter().zip(&big) {
            assert_eq!(BigUint::from(*a), *b);
        }
    }

    #[test]
    fn checked_euler_overflows_loudly() {
        assert_eq!(
            euler_zigzag_checked(60),
            Err(Error::Overflow("euler_zigzag_checked"))
        );
        // arbitrary precision keeps going
        assert_eq!(euler_zigzag(60).len(), 61);
    }

    #[test]
    fn special_permutations() {
        assert_eq!(max_inversion_altperm(5).unwrap(), p("45231"));
        assert_eq!(max_inversion_altperm(4).unwrap(), p("3412"));
        assert_eq!(max_inversion_altperm(1).unwrap(), p("1"));
        assert_eq!(zero_swap_altperm(6).unwrap(), p("563412"));
        assert_eq!(zero_swap_altperm(4).unwrap(), p("3412"));
        assert_eq!(zero_swap_altperm(2).unwrap(), p("12"));
        assert_eq!(max_swap_altperm(4).unwrap(), p("1324"));
        assert_eq!(max_swap_altperm(5).unwrap(), p("14253"));
    }

    #[test]
    fn one_line_formats() {
        assert_eq!(p("3412"), p("3,4,1,2"));
        let big: AltPerm = "1,3,2,5,4,7,6,9,8,10".parse().unwrap();
        assert_eq!(big.to_string(), "1,3,2,5,4,7,6,9,8,10");
        assert_eq!(big.n(), 10);
        assert!("1324567890".parse::<AltPerm>().is_err());
        assert!("1234".parse::<AltPerm>().is_err());
    }
}
