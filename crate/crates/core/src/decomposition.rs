//! Minimal primes, `Assh(I)`, localized lengths and multiplicities, the
//! invariant `E(I)`, and reduction testing.
//!
//! Every minimal prime of a monomial ideal is generated by a subset `S` of the
//! variables. Localizing at `P = (x_i : i in S)` inverts the other variables,
//! so `I_P` is computed by setting them to 1. `A/P` is again a polynomial ring,
//! hence `e(A/P) = 1` throughout.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::hilbert::{self, artinian_length};
use crate::monomial::{Monomial, MonomialIdeal, Ring};
use crate::{Error, Result};

/// The prime `(x_i : i in S)` for a nonempty variable subset `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VariablePrime {
    support: Vec<usize>,
}

impl VariablePrime {
    pub fn new(mut support: Vec<usize>) -> Result<Self> {
        support.sort_unstable();
        support.dedup();
        if support.is_empty() {
            return Err(Error::domain(
                "a variable prime needs at least one variable",
            ));
        }
        Ok(VariablePrime { support })
    }

    fn from_mask(mask: u64) -> Self {
        VariablePrime {
            support: (0..64).filter(|i| mask & (1 << i) != 0).collect(),
        }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn mask(&self) -> u64 {
        self.support.iter().fold(0, |m, &i| m | (1 << i))
    }

    pub fn height(&self) -> usize {
        self.support.len()
    }

    /// `e(A/P)`; always 1 because `A/P` is a polynomial ring.
    pub fn quotient_multiplicity(&self) -> u64 {
        1
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> impl fmt::Display + 'a {
        let names: Vec<&str> = self
            .support
            .iter()
            .map(|&i| ring.names()[i].as_str())
            .collect();
        format!("({})", names.join(", "))
    }
}

/// Inclusion-minimal variable sets meeting every generator's support.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<VariablePrime>> {
    ideal.require_proper_nonzero("minimal-primes")?;
    if ideal.n() > 64 {
        return Err(Error::domain("at most 64 variables are supported"));
    }
    let mut edges: Vec<u64> = ideal.gens().iter().map(Monomial::support).collect();
    edges.sort_unstable_by_key(|e| (e.count_ones(), *e));
    edges.dedup();

    fn search(edges: &[u64], chosen: u64, visited: &mut HashSet<u64>, found: &mut Vec<u64>) {
        if !visited.insert(chosen) || found.iter().any(|&f| f & !chosen == 0) {
            return;
        }
        match edges.iter().find(|&&e| e & chosen == 0) {
            None => found.push(chosen),
            Some(&e) => {
                for v in (0..64).filter(|v| e & (1 << v) != 0) {
                    search(edges, chosen | (1 << v), visited, found);
                }
            }
        }
    }
    let mut found = Vec::new();
    search(&edges, 0, &mut HashSet::new(), &mut found);
    let minimal: Vec<u64> = found
        .iter()
        .copied()
        .filter(|&c| !found.iter().any(|&o| o != c && o & !c == 0))
        .collect();
    let mut primes: Vec<VariablePrime> =
        minimal.into_iter().map(VariablePrime::from_mask).collect();
    primes.sort_unstable_by(|a, b| a.height().cmp(&b.height()).then(a.cmp(b)));
    primes.dedup();
    Ok(primes)
}

/// Minimal primes of height `c = height(I)`.
pub fn assh(ideal: &MonomialIdeal) -> Result<Vec<VariablePrime>> {
    let primes = minimal_primes(ideal)?;
    let c = primes.iter().map(VariablePrime::height).min().unwrap_or(0);
    Ok(primes.into_iter().filter(|p| p.height() == c).collect())
}

/// `I_P` as an ideal of `K[x_i : i in S]`.
pub fn localize(ideal: &MonomialIdeal, prime: &VariablePrime) -> Result<MonomialIdeal> {
    if !minimal_primes(ideal)?.contains(prime) {
        return Err(Error::domain(format!(
            "{} is not a minimal prime of {}",
            prime.display(ideal.ring()),
            ideal
        )));
    }
    Ok(localize_unchecked(ideal, prime))
}

fn localize_unchecked(ideal: &MonomialIdeal, prime: &VariablePrime) -> MonomialIdeal {
    let names = prime
        .support()
        .iter()
        .map(|&i| ideal.ring().names()[i].clone())
        .collect();
    let ring = Arc::new(Ring::new(names).expect("subset of distinct names"));
    let gens = ideal
        .gens()
        .iter()
        .map(|g| Monomial::new(prime.support().iter().map(|&i| g.exponents()[i]).collect()))
        .collect();
    MonomialIdeal::minimalize(ring, gens).expect("arity matches the sub-ring")
}

fn artinian_length_or_bug(local: &MonomialIdeal) -> Result<u64> {
    artinian_length(local)
        .ok_or_else(|| Error::internal(format!("localized ideal {local} is not zero-dimensional")))
}

/// `length(A_P / I_P)`.
pub fn local_length(ideal: &MonomialIdeal, prime: &VariablePrime) -> Result<u64> {
    artinian_length_or_bug(&localize(ideal, prime)?)
}

/// Stabilization settings for [`local_multiplicity_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stabilization {
    /// Consecutive equal finite differences required.
    pub window: usize,
    /// `k_max = c + extra_powers`.
    pub extra_powers: usize,
}

impl Default for Stabilization {
    fn default() -> Self {
        Stabilization {
            window: 3,
            extra_powers: 8,
        }
    }
}

/// `e(I_P, A_P)` with default stabilization settings.
pub fn local_multiplicity(ideal: &MonomialIdeal, prime: &VariablePrime) -> Result<u64> {
    local_multiplicity_with(ideal, prime, Stabilization::default())
}

/// `e(I_P, A_P)` as the eventually constant `c`-th finite difference of
/// `k -> length(A_P / I_P^k)`, with `c = dim A_P = |S|`.
pub fn local_multiplicity_with(
    ideal: &MonomialIdeal,
    prime: &VariablePrime,
    params: Stabilization,
) -> Result<u64> {
    let local = localize(ideal, prime)?;
    let c = prime.height();
    let k_max = c + params.extra_powers;
    let mut lengths: Vec<u64> = Vec::with_capacity(k_max);
    let mut power = local.clone();
    for k in 1..=k_max {
        if k > 1 {
            power = power.product(&local)?;
        }
        lengths.push(artinian_length_or_bug(&power)?);
        if lengths.len() < c + params.window {
            continue;
        }
        let diffs = finite_differences(&lengths, c);
        let tail = &diffs[diffs.len() - params.window..];
        if tail.iter().all(|&d| d == tail[0]) {
            return u64::try_from(tail[0])
                .ok()
                .filter(|&e| e > 0)
                .ok_or_else(|| Error::internal(format!("non-positive multiplicity {}", tail[0])));
        }
    }
    Err(Error::NonStabilization { k_max, lengths })
}

/// The `order`-th forward differences of `values`.
pub fn finite_differences(values: &[u64], order: usize) -> Vec<i64> {
    let mut d: Vec<i64> = values.iter().map(|&v| v as i64).collect();
    for _ in 0..order {
        d = d.windows(2).map(|w| w[1] - w[0]).collect();
    }
    d
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AsshEntry {
    pub prime: VariablePrime,
    /// `length(A_P / I_P)`
    pub local_length: u64,
    /// `e(I_P, A_P)`
    pub local_multiplicity: u64,
}

/// `Assh(I)` with the local data entering the associativity formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AsshData {
    pub height: usize,
    pub entries: Vec<AsshEntry>,
    /// `sum length(A_P/I_P) e(A/P)`, which is `e(A/I)`
    pub multiplicity: u64,
    /// `E(I) = sum e(I_P, A_P) e(A/P)`
    #[serde(rename = "E")]
    pub e_invariant: u64,
}

pub fn assh_data(ideal: &MonomialIdeal) -> Result<AsshData> {
    let primes = assh(ideal)?;
    let height = primes.first().map_or(0, VariablePrime::height);
    let entries = primes
        .into_iter()
        .map(|prime| {
            Ok(AsshEntry {
                local_length: local_length(ideal, &prime)?,
                local_multiplicity: local_multiplicity(ideal, &prime)?,
                prime,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let multiplicity = entries
        .iter()
        .map(|e| e.local_length * e.prime.quotient_multiplicity())
        .sum();
    let e_invariant = entries
        .iter()
        .map(|e| e.local_multiplicity * e.prime.quotient_multiplicity())
        .sum();
    Ok(AsshData {
        height,
        entries,
        multiplicity,
        e_invariant,
    })
}

/// `E(I)`, the normalized leading coefficient of `k -> e(A/I^k)`.
pub fn e_invariant(ideal: &MonomialIdeal) -> Result<u64> {
    let primes = assh(ideal)?;
    primes
        .iter()
        .map(|p| Ok(local_multiplicity(ideal, p)? * p.quotient_multiplicity()))
        .sum()
}

/// `e(A/I)` from the associativity formula.
pub fn multiplicity_via_assh(ideal: &MonomialIdeal) -> Result<u64> {
    let primes = assh(ideal)?;
    primes
        .iter()
        .map(|p| Ok(local_length(ideal, p)? * p.quotient_multiplicity()))
        .sum()
}

/// Height as the smallest minimal prime height; agrees with
/// [`hilbert::height`].
pub fn height_via_primes(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(minimal_primes(ideal)?
        .iter()
        .map(VariablePrime::height)
        .min()
        .unwrap_or(0))
}

/// Outcome of a bounded reduction test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReductionOutcome {
    /// `J I^m = I^{m+1}` was found for some `m <= m_max`. `false` only means
    /// no witness was found up to `m_max`.
    pub is_reduction: bool,
    /// The least such `m`.
    pub witness: Option<u32>,
    pub m_max: u32,
}

pub const DEFAULT_REDUCTION_SEARCH: u32 = 10;

/// Tests whether `J ⊆ I` is a reduction by searching for the least
/// `m <= m_max` with `J I^m = I^{m+1}`.
pub fn is_reduction(j: &MonomialIdeal, i: &MonomialIdeal, m_max: u32) -> Result<ReductionOutcome> {
    j.require_proper_nonzero("is-reduction")?;
    i.require_proper_nonzero("is-reduction")?;
    if !i.contains_ideal(j)? {
        return Err(Error::domain(format!("{j} is not contained in {i}")));
    }
    let mut i_pow: Option<MonomialIdeal> = None;
    for m in 0..=m_max {
        let (lhs, next) = match &i_pow {
            None => (j.clone(), i.clone()),
            Some(p) => (j.product(p)?, p.product(i)?),
        };
        if lhs.gens() == next.gens() {
            return Ok(ReductionOutcome {
                is_reduction: true,
                witness: Some(m),
                m_max,
            });
        }
        i_pow = Some(next);
    }
    Ok(ReductionOutcome {
        is_reduction: false,
        witness: None,
        m_max,
    })
}

/// Cross-check of the Hilbert-series height against minimal primes.
pub fn check_height(ideal: &MonomialIdeal) -> Result<usize> {
    let via_primes = height_via_primes(ideal)?;
    let via_series = hilbert::height(ideal)?;
    if via_primes != via_series {
        return Err(Error::internal(format!(
            "height mismatch: minimal primes give {via_primes}, Hilbert series gives {via_series}"
        )));
    }
    Ok(via_series)
}
