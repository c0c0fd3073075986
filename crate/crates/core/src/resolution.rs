//! Minimal graded Betti numbers of `A/I` for monomial `I`.
//!
//! Multigraded Betti numbers are supported on the lcm lattice of `G(I)`. For
//! each lattice element `b`, `beta_{i,b}(I)` is the dimension of the reduced
//! homology `H~_{i-1}` of the upper Koszul simplicial complex
//! `{ sigma : x^{b - sigma} in I }`, and `beta_{i+1,j}(A/I)` collects those with
//! `|b| = j`. The Taylor oracle recomputes the same table from the Taylor
//! complex by working in each multidegree separately.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::hilbert::HilbertNumerator;
use crate::linalg::{self, FieldChar, SparseMatrix};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::{Coeff, Error, Rational, Result};

/// Resource caps for resolution computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Caps {
    /// Maximum `|G(I)|` for the lcm lattice.
    pub max_gens: usize,
    /// Maximum number of lcm lattice elements.
    pub max_lattice: usize,
    /// Maximum number of faces of a single upper Koszul complex.
    pub max_faces: usize,
    /// Maximum `|G(I)|` for the Taylor oracle.
    pub max_taylor_gens: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_gens: 400,
            max_lattice: 200_000,
            max_faces: 1 << 16,
            max_taylor_gens: 12,
        }
    }
}

/// Join-closure of the minimal generators under componentwise max.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmLattice {
    pub atoms: Vec<Monomial>,
    /// All joins of nonempty atom subsets, canonically ordered.
    pub elements: Vec<Monomial>,
}

pub fn lcm_lattice(ideal: &MonomialIdeal, caps: &Caps) -> Result<LcmLattice> {
    ideal.require_proper_nonzero("lcm-lattice")?;
    let atoms = ideal.gens().to_vec();
    if atoms.len() > caps.max_gens {
        return Err(Error::Resource {
            what: "generator count",
            actual: atoms.len(),
            cap: caps.max_gens,
        });
    }
    let mut seen: HashSet<Monomial> = atoms.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in &atoms {
                let j = a.lcm(g);
                if !seen.contains(&j) {
                    seen.insert(j.clone());
                    next.push(j);
                }
            }
        }
        if seen.len() > caps.max_lattice {
            return Err(Error::Resource {
                what: "lcm lattice size",
                actual: seen.len(),
                cap: caps.max_lattice,
            });
        }
        frontier = next;
    }
    let mut elements: Vec<Monomial> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(LcmLattice { atoms, elements })
}

/// A simplicial complex on vertices `0..64`, faces stored as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    faces: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds the complex from the listed faces; they are assumed to be
    /// closed under taking subsets.
    pub fn from_faces(mut faces: Vec<u64>) -> Self {
        faces.sort_unstable_by_key(|f| (f.count_ones(), *f));
        faces.dedup();
        SimplicialComplex { faces }
    }

    /// The downward closure of `facets`.
    pub fn generated_by(facets: &[u64]) -> Self {
        let mut all = HashSet::new();
        for &f in facets {
            // enumerate all submasks of f
            let mut s = f;
            loop {
                all.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        Self::from_faces(all.into_iter().collect())
    }

    pub fn faces(&self) -> &[u64] {
        &self.faces
    }

    pub fn is_downward_closed(&self) -> bool {
        let set: HashSet<u64> = self.faces.iter().copied().collect();
        self.faces.iter().all(|&f| {
            (0..64)
                .filter(|i| f & (1 << i) != 0)
                .all(|i| set.contains(&(f & !(1 << i))))
        })
    }
}

/// Reduced homology dimensions `[H~_{-1}, H~_0, H~_1, ...]` over the field of
/// the given characteristic, up to the top face dimension. The void complex
/// (no faces at all) yields an empty vector.
pub fn reduced_homology_dims(complex: &SimplicialComplex, field: FieldChar) -> Vec<usize> {
    let Some(top) = complex.faces.iter().map(|f| f.count_ones() as usize).max() else {
        return Vec::new();
    };
    // faces grouped by cardinality; cardinality s is dimension s - 1
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 2];
    for &f in &complex.faces {
        by_size[f.count_ones() as usize].push(f);
    }
    let index: Vec<HashMap<u64, usize>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();

    // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let (lower, upper) = (&by_size[s - 1], &by_size[s]);
        if lower.is_empty() || upper.is_empty() {
            continue;
        }
        let mut m = SparseMatrix::new(upper.len(), lower.len());
        for (col_row, &face) in upper.iter().enumerate() {
            let mut pos = 0;
            for v in 0..64 {
                if face & (1 << v) == 0 {
                    continue;
                }
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                if let Some(&j) = index[s - 1].get(&(face & !(1 << v))) {
                    m.push(col_row, j, sign);
                }
                pos += 1;
            }
        }
        ranks[s] = linalg::rank(&m, field);
    }
    (0..=top)
        .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect()
}

/// The upper Koszul simplicial complex of `I` at multidegree `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperKoszulComplex {
    pub multidegree: Monomial,
    pub complex: SimplicialComplex,
}

pub fn upper_koszul_complex(
    ideal: &MonomialIdeal,
    multidegree: &Monomial,
    caps: &Caps,
) -> Result<UpperKoszulComplex> {
    let support = multidegree.support();
    let candidates = 1usize
        .checked_shl(support.count_ones())
        .unwrap_or(usize::MAX);
    if candidates > caps.max_faces {
        return Err(Error::Resource {
            what: "upper Koszul complex faces",
            actual: candidates,
            cap: caps.max_faces,
        });
    }
    let mut faces = Vec::new();
    let mut exps = multidegree.exponents().to_vec();
    let mut sigma = support;
    loop {
        for (i, e) in exps.iter_mut().enumerate() {
            *e = multidegree.exponents()[i] - u32::from(sigma & (1 << i) != 0);
        }
        let m = Monomial::new(exps.clone());
        if ideal.gens().iter().any(|g| g.divides(&m)) {
            faces.push(sigma);
        }
        if sigma == 0 {
            break;
        }
        sigma = (sigma - 1) & support;
    }
    Ok(UpperKoszulComplex {
        multidegree: multidegree.clone(),
        complex: SimplicialComplex::from_faces(faces),
    })
}

/// Graded Betti numbers `beta_{i,j}(A/I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    beta: BTreeMap<(usize, u64), u64>,
    p: usize,
    field: FieldChar,
}

impl BettiTable {
    fn from_entries(beta: BTreeMap<(usize, u64), u64>, field: FieldChar) -> Self {
        let beta: BTreeMap<_, _> = beta.into_iter().filter(|&(_, v)| v > 0).collect();
        let p = beta.keys().map(|&(i, _)| i).max().unwrap_or(0);
        BettiTable { beta, p, field }
    }

    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.beta.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `((i, j), beta_{i,j})`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, u64), u64)> + '_ {
        self.beta.iter().map(|(&k, &v)| (k, v))
    }

    pub fn projective_dimension(&self) -> usize {
        self.p
    }

    pub fn field_char(&self) -> FieldChar {
        self.field
    }

    pub fn total(&self, i: usize) -> u64 {
        self.beta
            .range((i, 0)..=(i, u64::MAX))
            .map(|(_, &v)| v)
            .sum()
    }

    /// `M_i(A/I)`, the largest shift at position `i`.
    pub fn max_shift(&self, i: usize) -> Option<u64> {
        self.beta
            .range((i, 0)..=(i, u64::MAX))
            .next_back()
            .map(|(&(_, j), _)| j)
    }

    /// `m_i(A/I)`, the smallest shift at position `i`.
    pub fn min_shift(&self, i: usize) -> Option<u64> {
        self.beta
            .range((i, 0)..=(i, u64::MAX))
            .next()
            .map(|(&(_, j), _)| j)
    }

    /// `[M_1, ..., M_p]`
    pub fn max_shifts(&self) -> Vec<u64> {
        (1..=self.p).filter_map(|i| self.max_shift(i)).collect()
    }

    /// `[m_1, ..., m_p]`
    pub fn min_shifts(&self) -> Vec<u64> {
        (1..=self.p).filter_map(|i| self.min_shift(i)).collect()
    }

    /// `sum_i (-1)^i sum_j beta_{i,j} t^j`, which must equal the Hilbert numerator.
    pub fn euler_numerator(&self) -> HilbertNumerator {
        let top = self.beta.keys().map(|&(_, j)| j).max().unwrap_or(0) as usize;
        let mut coeffs = vec![0 as Coeff; top + 1];
        for (&(i, j), &v) in &self.beta {
            let v = v as Coeff;
            coeffs[j as usize] += if i % 2 == 0 { v } else { -v };
        }
        HilbertNumerator::new(coeffs)
    }

    /// `reg_i(I) = M_{i+1}(A/I) - i` for `0 <= i <= p - 1`.
    pub fn reg_i(&self, i: usize) -> Result<i64> {
        if i >= self.p {
            return Err(Error::domain(format!(
                "reg_{i} needs 0 <= i < p = {}",
                self.p
            )));
        }
        let top = self
            .max_shift(i + 1)
            .ok_or_else(|| Error::internal(format!("empty Betti column {}", i + 1)))?;
        Ok(top as i64 - i as i64)
    }

    /// `reg(I) = max_i reg_i(I)`.
    pub fn regularity(&self) -> Result<i64> {
        (0..self.p)
            .map(|i| self.reg_i(i))
            .try_fold(i64::MIN, |acc, r| r.map(|r| acc.max(r)))
            .and_then(|r| {
                if self.p == 0 {
                    Err(Error::domain("regularity of the zero ideal"))
                } else {
                    Ok(r)
                }
            })
    }

    /// `(U(I), L(I))` with `U = prod_{i<=c} M_i / c!` and `L = prod_{i<=c} m_i / c!`.
    pub fn bounds(&self, c: usize) -> Result<(Rational, Rational)> {
        if c == 0 {
            return Err(Error::domain("bounds need height c >= 1"));
        }
        if c > self.p {
            return Err(Error::internal(format!(
                "height {c} exceeds projective dimension {}",
                self.p
            )));
        }
        let mut upper = Rational::from_integer(1.into());
        let mut lower = Rational::from_integer(1.into());
        for i in 1..=c {
            let big_m = self.max_shift(i).expect("columns up to p are nonempty");
            let small_m = self.min_shift(i).expect("columns up to p are nonempty");
            upper *= Rational::new(big_m.into(), (i as u64).into());
            lower *= Rational::new(small_m.into(), (i as u64).into());
        }
        Ok((upper, lower))
    }

    pub fn report(&self) -> BettiReport {
        BettiReport {
            field_char: self.field,
            p: self.p,
            beta: self.entries().map(|((i, j), v)| [i as u64, j, v]).collect(),
            max_shifts: self.max_shifts(),
            min_shifts: self.min_shifts(),
        }
    }
}

/// Serialized form of a [`BettiTable`].
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BettiReport {
    pub field_char: FieldChar,
    pub p: usize,
    /// `[i, j, beta_{i,j}]` triples
    pub beta: Vec<[u64; 3]>,
    #[serde(rename = "M")]
    pub max_shifts: Vec<u64>,
    #[serde(rename = "m")]
    pub min_shifts: Vec<u64>,
}

/// Macaulay2-style layout: column `i`, row `j - i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<u64> = {
            let mut r: Vec<u64> = self.beta.keys().map(|&(i, j)| j - i as u64).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let cell = |v: u64| {
            if v == 0 {
                ".".to_string()
            } else {
                v.to_string()
            }
        };
        let width = self
            .beta
            .values()
            .map(|v| v.to_string().len())
            .chain((0..=self.p).map(|i| self.total(i).to_string().len()))
            .max()
            .unwrap_or(1);
        let label = rows
            .iter()
            .map(|r| r.to_string().len() + 1)
            .max()
            .unwrap_or(1)
            .max(6);
        write!(f, "{:>label$}", "")?;
        for i in 0..=self.p {
            write!(f, " {:>width$}", i)?;
        }
        writeln!(f)?;
        write!(f, "{:>label$}", "total:")?;
        for i in 0..=self.p {
            write!(f, " {:>width$}", self.total(i))?;
        }
        writeln!(f)?;
        for r in rows {
            write!(f, "{:>label$}", format!("{r}:"))?;
            for i in 0..=self.p {
                write!(f, " {:>width$}", cell(self.get(i, r + i as u64)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Betti table of `A/I` via upper Koszul homology over the lcm lattice.
pub fn betti_table(ideal: &MonomialIdeal, field: FieldChar, caps: &Caps) -> Result<BettiTable> {
    let lattice = lcm_lattice(ideal, caps)?;
    let per_degree: Vec<(u64, Vec<usize>)> = lattice
        .elements
        .par_iter()
        .map(|b| {
            let k = upper_koszul_complex(ideal, b, caps)?;
            Ok((b.degree(), reduced_homology_dims(&k.complex, field)))
        })
        .collect::<Result<_>>()?;

    let mut beta = BTreeMap::new();
    beta.insert((0, 0), 1);
    for (deg, dims) in per_degree {
        // H~_{i-1} sits at index i and gives beta_{i,b}(I) = beta_{i+1,b}(A/I)
        for (idx, d) in dims.into_iter().enumerate() {
            if d > 0 {
                *beta.entry((idx + 1, deg)).or_insert(0) += d as u64;
            }
        }
    }
    Ok(BettiTable::from_entries(beta, field))
}

/// Independent Betti computation from the Taylor complex.
///
/// After tensoring with `K`, the Taylor differential only survives between
/// faces with equal lcm; cancelling those unit entries multidegree by
/// multidegree leaves the minimal resolution. The ranks are taken with plain
/// Gauss–Jordan elimination over the rationals (or mod `p`).
pub fn taylor_betti_table(
    ideal: &MonomialIdeal,
    field: FieldChar,
    caps: &Caps,
) -> Result<BettiTable> {
    ideal.require_proper_nonzero("taylor-oracle")?;
    let gens = ideal.gens();
    let r = gens.len();
    if r > caps.max_taylor_gens {
        return Err(Error::Resource {
            what: "Taylor oracle generator count",
            actual: r,
            cap: caps.max_taylor_gens,
        });
    }
    let mut lcms: Vec<Monomial> = Vec::with_capacity(1 << r);
    lcms.push(Monomial::one(ideal.n()));
    for mask in 1usize..(1 << r) {
        let low = mask.trailing_zeros() as usize;
        let rest = lcms[mask & (mask - 1)].clone();
        lcms.push(rest.lcm(&gens[low]));
    }
    let mut groups: HashMap<&Monomial, Vec<usize>> = HashMap::new();
    for (mask, b) in lcms.iter().enumerate() {
        groups.entry(b).or_default().push(mask);
    }

    let mut beta = BTreeMap::new();
    for (b, faces) in groups {
        let top = faces
            .iter()
            .map(|f| f.count_ones() as usize)
            .max()
            .unwrap_or(0);
        let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); top + 2];
        for &f in &faces {
            by_size[f.count_ones() as usize].push(f);
        }
        let mut ranks = vec![0usize; top + 2];
        for s in 1..=top {
            let (lower, upper) = (&by_size[s - 1], &by_size[s]);
            if lower.is_empty() || upper.is_empty() {
                continue;
            }
            let pos: HashMap<usize, usize> =
                lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
            let mut m = SparseMatrix::new(upper.len(), lower.len());
            for (row, &face) in upper.iter().enumerate() {
                let mut k = 0;
                for g in 0..r {
                    if face & (1 << g) == 0 {
                        continue;
                    }
                    if let Some(&col) = pos.get(&(face & !(1 << g))) {
                        m.push(row, col, if k % 2 == 0 { 1 } else { -1 });
                    }
                    k += 1;
                }
            }
            ranks[s] = match field {
                FieldChar::Zero => {
                    linalg::rank_over_field(m.to_dense(|v| Rational::from_integer(v.into())))
                }
                FieldChar::Prime(p) => linalg::rank_mod_p(&m, p),
            };
        }
        for s in 0..=top {
            let d = by_size[s].len() - ranks[s] - ranks[s + 1];
            if d > 0 {
                *beta.entry((s, b.degree())).or_insert(0) += d as u64;
            }
        }
    }
    Ok(BettiTable::from_entries(beta, field))
}
