//! The `λ → μ` relation and the Pieri rules built on it.
//!
//! `μ` arises from `λ` by deleting a vertical strip from the first `k` columns
//! and then adding a horizontal strip, subject to the two k-relatedness
//! conditions on the first `k` columns. The witness for each target records
//! the set `A` of added boxes in columns `> k` that are not paired off by
//! those conditions; multiplicities are powers of two counted from the
//! vertex-connected components of `A`.
//!
//! The upper column limit `k + n` on `A` never binds: targets fit in `n + k`
//! columns for the classical rules and in `n + k + 1` columns (the `n + 1`
//! rectangle) for the quantum ones, so `A` is taken as all columns `> k`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::combination::{ClassicalCombination, QClass, QuantumCombination};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::partition::{Cell, Family, Partition, SpaceContext};

/// One target `μ` of `λ → μ` together with the box data it was judged on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrowWitness {
    pub target: Partition,
    pub removed: Vec<Cell>,
    pub added: Vec<Cell>,
    pub set_a: Vec<Cell>,
    /// Connected components of `A` (cells sharing a vertex are connected).
    pub components: u32,
    /// Components of `A` with no box in column `k + 1`; this is `N(λ, μ)`.
    pub components_avoiding_first: u32,
}

impl ArrowWitness {
    /// `N(λ, μ)`.
    pub fn n_exponent(&self) -> u32 {
        self.components_avoiding_first
    }

    /// `N′(λ, μ)`: the component count, less one when `p > k`.
    pub fn n_prime_exponent(&self, lambda: &Partition, p: u32, k: u32) -> Result<u32> {
        let drop = u32::from(p > k);
        self.components.checked_sub(drop).ok_or_else(|| {
            Error::Assertion(format!(
                "N' < 0 for {lambda} -> {} with p = {p}, k = {k} (A = {:?})",
                self.target, self.set_a
            ))
        })
    }

    /// `2^N` for IG and `2^{N′}` for OG.
    pub fn exponent(&self, family: Family, lambda: &Partition, p: u32, k: u32) -> Result<u32> {
        match family {
            Family::IG => Ok(self.n_exponent()),
            Family::OG => self.n_prime_exponent(lambda, p, k),
        }
    }
}

/// All k-strict `μ` with `λ → μ`, `|μ| = |λ| + p`, `ℓ(μ) ≤ rows`, `μ_1 ≤ cols`.
///
/// `None` bounds are unbounded. Targets are returned in [`Partition`] order.
pub fn arrow_targets(
    lambda: &Partition,
    p: u32,
    k: u32,
    rows: Option<u32>,
    cols: Option<u32>,
) -> Result<Vec<ArrowWitness>> {
    lambda.check_k_strict(k)?;
    if p == 0 {
        return Err(Error::DegreeOutOfRange { p, max: u32::MAX });
    }
    let parts = lambda.parts();
    let mut out = Vec::new();
    let mut removal = vec![false; parts.len()];
    for_each_removal(parts, k, 0, &mut removal, &mut |removal| {
        let reduced: Vec<u32> = parts
            .iter()
            .zip(removal)
            .map(|(&x, &e)| x - u32::from(e))
            .collect();
        let removed_count = removal.iter().filter(|&&e| e).count() as u32;
        let mut shape = reduced.clone();
        // one row past the last nonzero row may receive boxes
        let used = shape.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1);
        shape.truncate(used);
        shape.push(0);
        let blocked: Vec<bool> = (0..shape.len())
            .map(|r| removal.get(r).copied().unwrap_or(false))
            .collect();
        let mut grown = shape.clone();
        for_each_horizontal_strip(
            &shape,
            &blocked,
            0,
            p + removed_count,
            rows,
            cols,
            &mut grown,
            &mut |mu_parts| {
                let mu = Partition::from_sorted(mu_parts.to_vec());
                if !mu.is_k_strict(k) {
                    return;
                }
                if let Some(w) = judge(lambda, &shape, removal, &mu, k) {
                    out.push(w);
                }
            },
        );
    });
    out.sort_by(|a, b| a.target.cmp(&b.target));
    Ok(out)
}

/// Enumerates removals of last boxes in columns `≤ k`, at most one per row,
/// leaving a partition.
fn for_each_removal(parts: &[u32], k: u32, row: usize, removal: &mut Vec<bool>, f: &mut dyn FnMut(&[bool])) {
    if row == parts.len() {
        f(removal);
        return;
    }
    let prev = if row == 0 {
        u32::MAX
    } else {
        parts[row - 1] - u32::from(removal[row - 1])
    };
    removal[row] = false;
    if parts[row] <= prev {
        for_each_removal(parts, k, row + 1, removal, f);
    }
    if parts[row] <= k && parts[row] - 1 <= prev {
        removal[row] = true;
        for_each_removal(parts, k, row + 1, removal, f);
        removal[row] = false;
    }
}

#[allow(clippy::too_many_arguments)]
fn for_each_horizontal_strip(
    shape: &[u32],
    blocked: &[bool],
    row: usize,
    remaining: u32,
    rows: Option<u32>,
    cols: Option<u32>,
    grown: &mut Vec<u32>,
    f: &mut dyn FnMut(&[u32]),
) {
    if row == shape.len() {
        if remaining == 0 {
            f(grown);
        }
        return;
    }
    let base = shape[row];
    let ceiling = if row == 0 {
        cols.unwrap_or(u32::MAX).max(base)
    } else {
        shape[row - 1]
    };
    let row_allowed = !blocked[row] && rows.is_none_or(|r| (row as u32) < r);
    let max_add = if row_allowed {
        (ceiling - base).min(remaining)
    } else {
        0
    };
    for add in 0..=max_add {
        grown[row] = base + add;
        for_each_horizontal_strip(shape, blocked, row + 1, remaining - add, rows, cols, grown, f);
    }
    grown[row] = base;
}

/// Checks the k-relatedness conditions and builds the witness.
fn judge(
    lambda: &Partition,
    reduced: &[u32],
    removal: &[bool],
    mu: &Partition,
    k: u32,
) -> Option<ArrowWitness> {
    let removed: Vec<Cell> = removal
        .iter()
        .enumerate()
        .filter(|(_, &e)| e)
        .map(|(r, _)| Cell::new(r as u32 + 1, lambda.part(r + 1)))
        .collect();
    let added: Vec<Cell> = mu
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| {
            let start = reduced.get(r).copied().unwrap_or(0);
            (start + 1..=len).map(move |c| Cell::new(r as u32 + 1, c))
        })
        .collect();
    let related = |cell: Cell| -> Vec<Cell> {
        let d = cell.k_diagonal(k);
        added.iter().copied().filter(|b| b.k_diagonal(k) == d).collect()
    };

    let mut mentioned: Vec<Cell> = Vec::new();
    for c in 1..=k {
        let before = lambda.column_height(c);
        let after = mu.column_height(c);
        if after == before {
            if before == 0 {
                continue;
            }
            let rel = related(Cell::new(before, c));
            if rel.len() > 1 {
                return None;
            }
            mentioned.extend(rel);
        } else if after < before {
            let mut partners = Vec::new();
            let bottom = (after >= 1).then(|| Cell::new(after, c));
            let cells = (after + 1..=before).map(|r| Cell::new(r, c)).chain(bottom);
            for cell in cells {
                let rel = related(cell);
                if rel.len() != 1 {
                    return None;
                }
                partners.push(rel[0]);
            }
            if partners.windows(2).any(|w| w[0].row != w[1].row) {
                return None;
            }
            mentioned.extend(partners);
        }
    }

    let set_a: Vec<Cell> = added
        .iter()
        .copied()
        .filter(|b| b.col > k && !mentioned.contains(b))
        .collect();
    let groups = components(&set_a);
    let avoiding = groups
        .iter()
        .filter(|g| g.iter().all(|b| b.col != k + 1))
        .count() as u32;
    Some(ArrowWitness {
        target: mu.clone(),
        removed,
        added,
        set_a,
        components: groups.len() as u32,
        components_avoiding_first: avoiding,
    })
}

/// Vertex-connected components.
fn components(cells: &[Cell]) -> Vec<Vec<Cell>> {
    let mut seen = vec![false; cells.len()];
    let mut out = Vec::new();
    for start in 0..cells.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut group = Vec::new();
        while let Some(i) = stack.pop() {
            group.push(cells[i]);
            for j in 0..cells.len() {
                if !seen[j] && cells[i].touches(&cells[j]) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        out.push(group);
    }
    out
}

/// A Pieri term `2^log2 · q^q σ_λ`; every Pieri coefficient is a power of two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieriTerm {
    pub class: QClass,
    pub log2: u32,
}

/// `σ_p · σ_λ` (IG) or `τ_p · τ_λ` (OG) in `H*` of the bounded Grassmannian.
pub fn classical_pieri_terms(ctx: &SpaceContext, p: u32, lambda: &Partition) -> Result<Vec<PieriTerm>> {
    ctx.check_degree(p)?;
    ctx.check(lambda)?;
    arrow_targets(lambda, p, ctx.k, Some(ctx.rows()), Some(ctx.cols()))?
        .into_iter()
        .map(|w| {
            Ok(PieriTerm {
                log2: w.exponent(ctx.family, lambda, p, ctx.k)?,
                class: QClass::classical(w.target),
            })
        })
        .collect()
}

/// The Pieri rule in the stable ring: no rectangle bound.
pub fn stable_pieri_terms(family: Family, k: u32, p: u32, lambda: &Partition) -> Result<Vec<PieriTerm>> {
    arrow_targets(lambda, p, k, None, None)?
        .into_iter()
        .map(|w| {
            Ok(PieriTerm {
                log2: w.exponent(family, lambda, p, k)?,
                class: QClass::classical(w.target),
            })
        })
        .collect()
}

/// The quantum Pieri rule for either family.
pub fn quantum_pieri_terms(ctx: &SpaceContext, p: u32, lambda: &Partition) -> Result<Vec<PieriTerm>> {
    match ctx.family {
        Family::IG => quantum_pieri_terms_ig(ctx, p, lambda),
        Family::OG => quantum_pieri_terms_og(ctx, p, lambda),
    }
}

fn quantum_pieri_terms_ig(ctx: &SpaceContext, p: u32, lambda: &Partition) -> Result<Vec<PieriTerm>> {
    ctx.check_degree(p)?;
    ctx.check(lambda)?;
    let (n, k) = (ctx.n, ctx.k);
    let mut out = Vec::new();
    // targets in P(k, n+1); the q^0 part keeps those in P(k, n)
    for w in arrow_targets(lambda, p, k, Some(n + 1 - k), Some(n + k + 1))? {
        let nu = &w.target;
        if nu.fits(n - k, n + k) {
            out.push(PieriTerm {
                log2: w.n_exponent(),
                class: QClass::classical(w.target),
            });
        } else if nu.first() == n + k + 1 {
            let log2 = w.n_exponent().checked_sub(1).ok_or_else(|| {
                Error::NonIntegral(format!(
                    "quantum Pieri term 2^(N-1) with N = 0 for {lambda} -> {nu}, p = {p}, ctx = {ctx:?}"
                ))
            })?;
            out.push(PieriTerm {
                log2,
                class: QClass::new(nu.tail(), 1),
            });
        }
    }
    Ok(out)
}

fn quantum_pieri_terms_og(ctx: &SpaceContext, p: u32, lambda: &Partition) -> Result<Vec<PieriTerm>> {
    ctx.check_degree(p)?;
    ctx.check(lambda)?;
    let (n, k) = (ctx.n, ctx.k);
    let mut out = Vec::new();
    for w in arrow_targets(lambda, p, k, Some(n + 1 - k), Some(n + k))? {
        let nu = &w.target;
        if nu.len() as u32 <= n - k {
            out.push(PieriTerm {
                log2: w.n_prime_exponent(lambda, p, k)?,
                class: QClass::classical(w.target),
            });
        } else if in_p_prime(nu, k, n) {
            let r = (nu.first() - 2 * k + 1) as usize;
            let tilde = Partition::from_sorted(nu.parts()[1..r].to_vec());
            out.push(PieriTerm {
                log2: w.n_prime_exponent(lambda, p, k)?,
                class: QClass::new(tilde, 1),
            });
        }
    }
    if lambda.first() == n + k {
        let star = lambda.tail();
        for w in arrow_targets(&star, p, k, Some(n - k), Some(n + k))? {
            if w.target.first() == n + k {
                out.push(PieriTerm {
                    log2: w.n_prime_exponent(&star, p, k)?,
                    class: QClass::new(w.target.tail(), 2),
                });
            }
        }
    }
    Ok(out)
}

/// Membership of a partition of length `n+1−k` in `P′(k, n+1)`.
fn in_p_prime(nu: &Partition, k: u32, n: u32) -> bool {
    nu.len() as u32 == n + 1 - k
        && nu.first() >= 2 * k
        && nu.first() <= n + k
        && nu.column_height(2) + 2 * k <= nu.first() + 1
}

fn sum_terms(terms: &[PieriTerm]) -> QuantumCombination {
    let mut out = QuantumCombination::new();
    for t in terms {
        out.add_term(t.class.clone(), &Dyadic::pow2(t.log2 as i32));
    }
    out
}

fn sum_classical(terms: &[PieriTerm]) -> ClassicalCombination {
    terms
        .iter()
        .map(|t| (t.class.partition.clone(), BigInt::from(1) << t.log2 as usize))
        .collect()
}

pub fn classical_pieri(ctx: &SpaceContext, p: u32, lambda: &Partition) -> Result<ClassicalCombination> {
    Ok(sum_classical(&classical_pieri_terms(ctx, p, lambda)?))
}

pub fn stable_pieri(family: Family, k: u32, p: u32, lambda: &Partition) -> Result<ClassicalCombination> {
    Ok(sum_classical(&stable_pieri_terms(family, k, p, lambda)?))
}

pub fn quantum_pieri_ig(ctx: &SpaceContext, p: u32, lambda: &Partition) -> Result<QuantumCombination> {
    if ctx.family != Family::IG {
        return Err(Error::WrongFamily { expected: "IG" });
    }
    Ok(sum_terms(&quantum_pieri_terms_ig(ctx, p, lambda)?))
}

pub fn quantum_pieri_og(ctx: &SpaceContext, p: u32, lambda: &Partition) -> Result<QuantumCombination> {
    if ctx.family != Family::OG {
        return Err(Error::WrongFamily { expected: "OG" });
    }
    Ok(sum_terms(&quantum_pieri_terms_og(ctx, p, lambda)?))
}
