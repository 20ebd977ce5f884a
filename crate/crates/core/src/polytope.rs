//! The order polytope `O(Z_n)`: its facet inequalities, 0/1 vertices, the
//! canonical triangulation into simplices `Δ^σ`, exclusion sets, facet
//! adjacency of simplices and the Gorenstein index check.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::alt_perm::AltPerm;
use crate::error::{Error, Result};
use crate::poset::{ideals_by_size, prefix_ideal, OrderIdeal};
use crate::sets::IndexSet;
use crate::MAX_N;

/// A 0/1 point of `O(Z_n)`, stored by its zero set. The zero set of a
/// feasible point is always an order ideal, and vice versa.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex01 {
    n: usize,
    zeros: IndexSet,
}

impl Vertex01 {
    /// The vertex whose zero coordinates are exactly `ideal`.
    pub fn from_ideal(ideal: &OrderIdeal) -> Self {
        Vertex01 {
            n: ideal.n(),
            zeros: ideal.members(),
        }
    }

    pub fn all_ones(n: usize) -> Self {
        Vertex01 {
            n,
            zeros: IndexSet::empty(),
        }
    }

    pub fn all_zeros(n: usize) -> Self {
        Vertex01 {
            n,
            zeros: IndexSet::range(1, n),
        }
    }

    /// From explicit coordinates; errors if the point is not a vertex.
    pub fn from_coords(coords: &[u8]) -> Result<Self> {
        let n = coords.len();
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidInput(format!("dimension {n} outside 1..={MAX_N}")));
        }
        let mut zeros = IndexSet::empty();
        for (i, &c) in coords.iter().enumerate() {
            match c {
                0 => zeros.insert(i + 1),
                1 => {}
                _ => return Err(Error::InvalidInput(format!("coordinate {c} is not 0/1"))),
            }
        }
        let ideal = OrderIdeal::new(n, zeros)
            .map_err(|_| Error::InvalidInput(format!("{coords:?} violates a facet inequality")))?;
        Ok(Vertex01::from_ideal(&ideal))
    }

    /// Parses the bit-string form, e.g. `0101`.
    pub fn parse(s: &str) -> Result<Self> {
        let coords = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidInput(format!("bad bit {c:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Vertex01::from_coords(&coords)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zeros(&self) -> IndexSet {
        self.zeros
    }

    pub fn ideal(&self) -> OrderIdeal {
        OrderIdeal::new_unchecked(self.n, self.zeros)
    }

    pub fn coord(&self, i: usize) -> u8 {
        u8::from(!self.zeros.contains(i))
    }

    pub fn coords(&self) -> Vec<u8> {
        (1..=self.n).map(|i| self.coord(i)).collect()
    }

    /// Sum of the coordinates.
    pub fn weight(&self) -> usize {
        self.n - self.zeros.len()
    }
}

impl fmt::Display for Vertex01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            f.write_str(if self.zeros.contains(i) { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vertex01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vertex01({self})")
    }
}

impl Serialize for Vertex01 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// `coeffs · v <= bound`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub coeffs: Vec<i64>,
    pub bound: i64,
}

impl Inequality {
    fn new(n: usize, terms: &[(usize, i64)], bound: i64) -> Self {
        let mut coeffs = vec![0; n];
        for &(i, c) in terms {
            coeffs[i - 1] = c;
        }
        Inequality { coeffs, bound }
    }

    pub fn eval(&self, x: &[i64]) -> i64 {
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// `m·bound − coeffs·x`: the lattice distance of `x` from this facet of
    /// the `m`-th dilate (the normals here are primitive).
    pub fn slack(&self, m: i64, x: &[i64]) -> i64 {
        m * self.bound - self.eval(x)
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            if first {
                let lead = if c < 0 { "-" } else { "" };
                write!(f, "{lead}{mag}v{}", i + 1)?;
                first = false;
            } else {
                write!(f, " {sign} {mag}v{}", i + 1)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " <= {}", self.bound)
    }
}

/// The irredundant facet inequalities of `O(Z_n)`:
/// `−v_i <= 0` (i odd), `v_i <= 1` (i even), `v_i − v_{i+1} <= 0` (i odd)
/// and `−v_i + v_{i+1} <= 0` (i even). For `n = 1` this is `0 <= v_1 <= 1`.
pub fn facet_inequalities(n: usize) -> Result<Vec<Inequality>> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidInput(format!("n = {n} outside 1..={MAX_N}")));
    }
    if n == 1 {
        return Ok(vec![
            Inequality::new(1, &[(1, -1)], 0),
            Inequality::new(1, &[(1, 1)], 1),
        ]);
    }
    let mut out = Vec::new();
    out.extend((1..=n).step_by(2).map(|i| Inequality::new(n, &[(i, -1)], 0)));
    out.extend((2..=n).step_by(2).map(|i| Inequality::new(n, &[(i, 1)], 1)));
    out.extend((1..n).step_by(2).map(|i| Inequality::new(n, &[(i, 1), (i + 1, -1)], 0)));
    out.extend((2..n).step_by(2).map(|i| Inequality::new(n, &[(i, -1), (i + 1, 1)], 0)));
    Ok(out)
}

/// All vertices of `O(Z_n)`, by increasing zero-set size then bit mask.
pub fn polytope_vertices(n: usize) -> Result<Vec<Vertex01>> {
    Ok(ideals_by_size(n)?
        .iter()
        .flatten()
        .map(Vertex01::from_ideal)
        .collect())
}

/// A maximal simplex `Δ^σ` of the canonical triangulation.
///
/// `vertices[k]` is `v_k^σ`, whose zero set is `{σ⁻¹(1), …, σ⁻¹(k)}`; so
/// `v_0` is all ones, `v_n` all zeros, and `v_k` has weight `n − k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Simplex {
    source: AltPerm,
    vertices: Vec<Vertex01>,
}

/// `Δ^σ`: `v_0 = (1,…,1)` and `v_k = v_{k−1} − e_{σ⁻¹(k)}`.
pub fn simplex_of(sigma: &AltPerm) -> Simplex {
    let n = sigma.n();
    let vertices = (0..=n)
        .map(|k| Vertex01::from_ideal(&prefix_ideal(sigma, k)))
        .collect();
    Simplex {
        source: sigma.clone(),
        vertices,
    }
}

impl Simplex {
    pub fn source(&self) -> &AltPerm {
        &self.source
    }

    pub fn n(&self) -> usize {
        self.source.n()
    }

    /// `v_0^σ, …, v_n^σ`.
    pub fn ordered_vertices(&self) -> &[Vertex01] {
        &self.vertices
    }

    pub fn vertex(&self, k: usize) -> Vertex01 {
        self.vertices[k]
    }

    /// The vertex set, sorted.
    pub fn vertex_set(&self) -> Vec<Vertex01> {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v
    }

    pub fn contains_vertex(&self, v: &Vertex01) -> bool {
        let k = v.n - v.weight();
        v.n == self.n() && self.vertices[k] == *v
    }

    /// Indices `k` with `v_k^σ = v_k^τ`. Every simplex has exactly one vertex
    /// of each weight, so this is the vertex-set intersection.
    pub fn common_levels(&self, other: &Simplex) -> IndexSet {
        self.vertices
            .iter()
            .zip(&other.vertices)
            .enumerate()
            .filter(|(_, (a, b))| a == b)
            .map(|(k, _)| k)
            .collect()
    }

    /// Integer determinant of the edge vectors `v_k − v_0`, `k = 1..=n`.
    pub fn edge_determinant(&self) -> i128 {
        let n = self.n();
        let origin = self.vertices[0].coords();
        let rows: Vec<Vec<i128>> = self.vertices[1..]
            .iter()
            .map(|v| {
                v.coords()
                    .iter()
                    .zip(&origin)
                    .map(|(&a, &b)| a as i128 - b as i128)
                    .collect()
            })
            .collect();
        bareiss_determinant(rows, n)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.vertices.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}[{self}]", self.source)
    }
}

// Fraction-free Gaussian elimination; exact for integer input.
fn bareiss_determinant(mut a: Vec<Vec<i128>>, n: usize) -> i128 {
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// `excl(σ) = { v_k^σ : k ∈ Swap(σ) }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExclusionSet {
    pub vertices: Vec<Vertex01>,
}

pub fn exclusion_set(sigma: &AltPerm) -> ExclusionSet {
    let simplex = simplex_of(sigma);
    ExclusionSet {
        vertices: sigma.swap_set().iter().map(|k| simplex.vertex(k)).collect(),
    }
}

/// Whether `Δ^σ` and `Δ^τ` meet in a common facet, i.e. their vertex sets
/// share exactly `n` of their `n + 1` points. Decided purely from the two
/// vertex sets (sorted-merge intersection).
pub fn share_facet(sigma: &AltPerm, tau: &AltPerm) -> Result<bool> {
    if sigma.n() != tau.n() {
        return Err(Error::InvalidInput("permutations of different lengths".into()));
    }
    if sigma == tau {
        return Err(Error::InvalidInput(format!(
            "share_facet needs two distinct simplices, got {sigma} twice"
        )));
    }
    let a = simplex_of(sigma).vertex_set();
    let b = simplex_of(tau).vertex_set();
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    Ok(common == sigma.n())
}

/// Result of a successful Gorenstein check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GorensteinReport {
    pub n: usize,
    pub index: i64,
    pub interior_point: Vec<i64>,
    /// Lattice distance of the interior point from each facet of the
    /// dilate, in the order of [`facet_inequalities`].
    pub distances: Vec<i64>,
}

/// Why the index-3 Gorenstein check failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GorensteinFailure {
    NoInteriorPoint,
    ExtraInteriorPoint { first: Vec<i64>, second: Vec<i64> },
    UnexpectedPoint { expected: Vec<i64>, found: Vec<i64> },
    FacetDistance { facet: String, distance: i64 },
}

impl fmt::Display for GorensteinFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GorensteinFailure::NoInteriorPoint => f.write_str("3rd dilate has no interior lattice point"),
            GorensteinFailure::ExtraInteriorPoint { first, second } => {
                write!(f, "3rd dilate has interior points {first:?} and {second:?}")
            }
            GorensteinFailure::UnexpectedPoint { expected, found } => {
                write!(f, "interior point {found:?}, expected {expected:?}")
            }
            GorensteinFailure::FacetDistance { facet, distance } => {
                write!(f, "distance {distance} from facet {facet}")
            }
        }
    }
}

const GORENSTEIN_INDEX: i64 = 3;
const BOX_SCAN_MAX_N: usize = 10;

/// Interior lattice points of `m·O(Z_n)` (strictly inside every facet),
/// stopping once `limit` have been found.
pub fn interior_points(n: usize, m: i64, limit: usize) -> Result<Vec<Vec<i64>>> {
    let facets = facet_inequalities(n)?;
    let mut found = Vec::new();
    if n <= BOX_SCAN_MAX_N {
        let side = (m + 1) as u64;
        let total = side.pow(n as u32);
        let mut x = vec![0i64; n];
        for code in 0..total {
            let mut c = code;
            for xi in x.iter_mut() {
                *xi = (c % side) as i64;
                c /= side;
            }
            if facets.iter().all(|f| f.slack(m, &x) > 0) {
                found.push(x.clone());
                if found.len() >= limit {
                    break;
                }
            }
        }
    } else {
        let mut x = Vec::with_capacity(n);
        interior_backtrack(n, m, &mut x, &mut found, limit);
    }
    Ok(found)
}

// Every facet involves at most two consecutive coordinates, so a prefix
// can be rejected as soon as its last coordinate breaks one.
fn interior_backtrack(n: usize, m: i64, x: &mut Vec<i64>, found: &mut Vec<Vec<i64>>, limit: usize) {
    if found.len() >= limit {
        return;
    }
    let p = x.len() + 1; // 1-based position being chosen
    if p > n {
        found.push(x.clone());
        return;
    }
    for v in 0..=m {
        let own = if n == 1 {
            v > 0 && v < m
        } else if p % 2 == 1 {
            v > 0
        } else {
            v < m
        };
        let link = match x.last() {
            None => true,
            Some(&prev) if p.is_multiple_of(2) => prev < v,
            Some(&prev) => v < prev,
        };
        if own && link {
            x.push(v);
            interior_backtrack(n, m, x, found, limit);
            x.pop();
        }
    }
}

/// Checks that `3·O(Z_n)` has exactly one interior lattice point, that it is
/// `(1, 2, 1, 2, …)`, and that it sits at lattice distance 1 from every
/// facet; on success the polytope is Gorenstein of index 3.
pub fn gorenstein_check(n: usize) -> Result<std::result::Result<GorensteinReport, GorensteinFailure>> {
    let facets = facet_inequalities(n)?;
    let m = GORENSTEIN_INDEX;
    let points = interior_points(n, m, 2)?;
    let point = match points.as_slice() {
        [] => return Ok(Err(GorensteinFailure::NoInteriorPoint)),
        [p] => p.clone(),
        [a, b, ..] => {
            return Ok(Err(GorensteinFailure::ExtraInteriorPoint {
                first: a.clone(),
                second: b.clone(),
            }))
        }
    };
    let expected: Vec<i64> = (1..=n).map(|i| if i % 2 == 1 { 1 } else { 2 }).collect();
    if point != expected {
        return Ok(Err(GorensteinFailure::UnexpectedPoint {
            expected,
            found: point,
        }));
    }
    let distances: Vec<i64> = facets.iter().map(|f| f.slack(m, &point)).collect();
    if let Some((f, &d)) = facets.iter().zip(&distances).find(|(_, &d)| d != 1) {
        return Ok(Err(GorensteinFailure::FacetDistance {
            facet: f.to_string(),
            distance: d,
        }));
    }
    Ok(Ok(GorensteinReport {
        n,
        index: m,
        interior_point: point,
        distances,
    }))
}
