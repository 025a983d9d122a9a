//! k-strict partitions, Young diagram cells, and the index data attached to a
//! partition: the pair sets `A(λ)`, `C(λ)`, the vectors `a`, `c`, and the rank
//! functions `p_j`, `p̄_j`.
//!
//! Partitions are stored trimmed (no zero parts) so that equality and hashing
//! are structural. The ordering on [`Partition`] is by weight, then
//! lexicographically descending; enumeration and all printed output use it.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers; `∅` is the empty sequence.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are trimmed.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!(
                "parts {parts:?} are not weakly decreasing positive integers"
            )));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts already known to be a partition.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single-row partition `(p)`, or `∅` when `p = 0`.
    pub fn row(p: u32) -> Self {
        if p == 0 {
            Partition::empty()
        } else {
            Partition(vec![p])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Length `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Weight `|λ|`.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `λ_i` with 1-based index; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// First part `λ_1` (zero for `∅`).
    pub fn first(&self) -> u32 {
        self.part(1)
    }

    /// `λ* = (λ_2, λ_3, …)`; `∅* = ∅`.
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// `(p, λ_1, λ_2, …)`, assuming `p ≥ λ_1`.
    pub fn with_first_row(&self, p: u32) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(p);
        parts.extend_from_slice(&self.0);
        Partition::from_sorted(parts)
    }

    /// Number of boxes in column `c` (1-based) of the diagram.
    pub fn column_height(&self, c: u32) -> u32 {
        self.0.iter().take_while(|&&x| x >= c).count() as u32
    }

    /// `ℓ_k(λ)`: the number of parts strictly greater than `k`.
    pub fn count_above(&self, k: u32) -> u32 {
        self.0.iter().filter(|&&x| x > k).count() as u32
    }

    pub fn is_k_strict(&self, k: u32) -> bool {
        self.0.windows(2).all(|w| w[0] <= k || w[0] > w[1])
    }

    pub fn check_k_strict(&self, k: u32) -> Result<()> {
        if self.is_k_strict(k) {
            Ok(())
        } else {
            Err(Error::NotKStrict {
                partition: self.clone(),
                k,
            })
        }
    }

    /// Diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn fits(&self, rows: u32, cols: u32) -> bool {
        self.len() as u32 <= rows && self.first() <= cols
    }

    /// Cells of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| {
            (1..=len).map(move |c| Cell::new(r as u32 + 1, c))
        })
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Comma-separated descending parts; `""` and `"0"` both denote `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Total k-strictness test on arbitrary integer sequences.
///
/// Zeros may only appear as trailing padding; any negative entry yields `false`.
pub fn is_k_strict(parts: &[i64], k: u32) -> bool {
    let trimmed_len = parts.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
    let parts = &parts[..trimmed_len];
    if parts.iter().any(|&x| x < 1) {
        return false;
    }
    parts
        .windows(2)
        .all(|w| w[0] >= w[1] && (w[0] <= k as i64 || w[0] > w[1]))
}

/// All k-strict partitions with at most `rows` parts, each at most `cols`,
/// and weight at most `max_weight`, in [`Partition`] order.
pub fn k_strict_partitions(k: u32, rows: u32, cols: u32, max_weight: u32) -> Vec<Partition> {
    fn extend(
        k: u32,
        rows: u32,
        max_part: u32,
        budget: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        out.push(Partition(current.clone()));
        if current.len() as u32 == rows {
            return;
        }
        for next in 1..=max_part.min(budget) {
            if let Some(&prev) = current.last() {
                if next == prev && next > k {
                    continue;
                }
            }
            current.push(next);
            extend(k, rows, next, budget - next, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(k, rows, cols, max_weight, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The Grassmannian family: symplectic `IG(n−k, 2n)` or odd orthogonal `OG(n−k, 2n+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    IG,
    OG,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::IG => f.write_str("IG"),
            Family::OG => f.write_str("OG"),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "IG" => Ok(Family::IG),
            "OG" => Ok(Family::OG),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// A concrete Grassmannian: family, `n`, and `k` with `n > k ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawContext")]
pub struct SpaceContext {
    pub family: Family,
    pub n: u32,
    pub k: u32,
}

#[derive(Deserialize)]
struct RawContext {
    family: Family,
    n: u32,
    k: u32,
}

impl TryFrom<RawContext> for SpaceContext {
    type Error = Error;

    fn try_from(raw: RawContext) -> Result<Self> {
        SpaceContext::new(raw.family, raw.n, raw.k)
    }
}

impl SpaceContext {
    pub fn new(family: Family, n: u32, k: u32) -> Result<Self> {
        if n <= k {
            return Err(Error::InvalidContext { n, k });
        }
        Ok(SpaceContext { family, n, k })
    }

    /// Largest special class degree, `n + k`.
    pub fn max_special(&self) -> u32 {
        self.n + self.k
    }

    /// Degree of `q`: `n+k+1` for IG, `n+k` for OG.
    pub fn q_degree(&self) -> u32 {
        match self.family {
            Family::IG => self.n + self.k + 1,
            Family::OG => self.n + self.k,
        }
    }

    /// Rows of the bounding rectangle, `n − k`.
    pub fn rows(&self) -> u32 {
        self.n - self.k
    }

    /// Columns of the bounding rectangle, `n + k`.
    pub fn cols(&self) -> u32 {
        self.n + self.k
    }

    /// Membership in `P(k, n)`.
    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.is_k_strict(self.k) && lambda.fits(self.rows(), self.cols())
    }

    pub fn check(&self, lambda: &Partition) -> Result<()> {
        lambda.check_k_strict(self.k)?;
        if !lambda.fits(self.rows(), self.cols()) {
            return Err(Error::OutsideRectangle {
                partition: lambda.clone(),
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        Ok(())
    }

    pub fn check_degree(&self, p: u32) -> Result<()> {
        if p == 0 || p > self.max_special() {
            return Err(Error::DegreeOutOfRange {
                p,
                max: self.max_special(),
            });
        }
        Ok(())
    }

    /// The same family with `n` replaced by `n + 1`.
    pub fn bumped(&self) -> SpaceContext {
        SpaceContext {
            n: self.n + 1,
            ..*self
        }
    }
}

/// `P(k, n)`: the k-strict partitions inside the `(n−k) × (n+k)` rectangle.
pub fn enumerate_p(k: u32, n: u32) -> Result<Vec<Partition>> {
    if n <= k {
        return Err(Error::InvalidContext { n, k });
    }
    let rows = n - k;
    let cols = n + k;
    Ok(k_strict_partitions(k, rows, cols, rows * cols))
}

/// A box `[row, col]` of a Young diagram, 1-based, matrix convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }

    /// `|c − k − 1| + r`; two cells are k-related iff these agree.
    pub fn k_diagonal(&self, k: u32) -> u32 {
        self.col.abs_diff(k + 1) + self.row
    }

    /// Cells sharing at least a vertex (8-neighbourhood).
    pub fn touches(&self, other: &Cell) -> bool {
        self.row.abs_diff(other.row) <= 1 && self.col.abs_diff(other.col) <= 1
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.row, self.col)
    }
}

pub fn k_related(a: Cell, b: Cell, k: u32) -> bool {
    a.k_diagonal(k) == b.k_diagonal(k)
}

/// The pair sets `A(λ)`, `C(λ)` and their row counts `a`, `c`.
///
/// Pairs are 1-based `(i, j)` with `i < j ≤ ℓ(λ)`; `(i, j) ∈ C` iff
/// `λ_i + λ_j > 2k + j − i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexData {
    pub pairs_a: Vec<(usize, usize)>,
    pub pairs_c: Vec<(usize, usize)>,
    pub a: Vec<u32>,
    pub c: Vec<u32>,
}

impl IndexData {
    pub fn is_c_pair(&self, i: usize, j: usize) -> bool {
        self.pairs_c.contains(&(i, j))
    }
}

/// Whether `λ_i + λ_j > 2k + j − i` (the `C(λ)` condition).
pub fn is_c_pair(lambda: &Partition, k: u32, i: usize, j: usize) -> bool {
    debug_assert!(i < j);
    (lambda.part(i) + lambda.part(j)) as usize > 2 * k as usize + j - i
}

pub fn index_data(lambda: &Partition, k: u32) -> Result<IndexData> {
    lambda.check_k_strict(k)?;
    let len = lambda.len();
    let mut data = IndexData {
        pairs_a: Vec::new(),
        pairs_c: Vec::new(),
        a: vec![0; len],
        c: vec![0; len],
    };
    for i in 1..=len {
        for j in i + 1..=len {
            if is_c_pair(lambda, k, i, j) {
                data.pairs_c.push((i, j));
                data.c[i - 1] += 1;
            } else {
                data.pairs_a.push((i, j));
                data.a[i - 1] += 1;
            }
        }
    }
    Ok(data)
}

/// `(p_1, …, p_ℓ)` for IG or `(p̄_1, …, p̄_ℓ)` for OG.
pub fn rank_function(lambda: &Partition, ctx: &SpaceContext) -> Result<Vec<u32>> {
    ctx.check(lambda)?;
    let base = match ctx.family {
        Family::IG => ctx.n + ctx.k,
        Family::OG => ctx.n + ctx.k + 1,
    } as i64;
    let k = ctx.k;
    let out = (1..=lambda.len())
        .map(|j| {
            let related = match ctx.family {
                Family::IG => (1..j).filter(|&i| is_c_pair(lambda, k, i, j)).count(),
                // i = j contributes exactly when λ_j > k
                Family::OG => {
                    (1..j).filter(|&i| is_c_pair(lambda, k, i, j)).count()
                        + usize::from(lambda.part(j) > k)
                }
            };
            let value = base + j as i64 - lambda.part(j) as i64 - related as i64;
            debug_assert!(value >= 1);
            value as u32
        })
        .collect();
    Ok(out)
}
