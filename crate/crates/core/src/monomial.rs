//! Monomials and monomial ideals.
//!
//! A [`MonomialIdeal`] always stores its divisibility-minimal generating set
//! `G(I)` in canonical order: ascending degree, then descending lexicographic
//! order on exponent vectors. Two minimalized ideals over the same ring are
//! equal exactly when their generator lists are equal.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::{Error, Exponent, Result};

/// The polynomial ring `K[x_1, ..., x_n]`, described by its variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::domain("a ring needs at least one variable"));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::domain(format!("duplicate variable name {name:?}")));
            }
        }
        Ok(Ring { names })
    }

    /// `x, y, z, w` for up to four variables, `x1, ..., xn` beyond that.
    pub fn with_vars(n: usize) -> Self {
        assert!(n >= 1, "a ring needs at least one variable");
        let names = if n <= 4 {
            ["x", "y", "z", "w"][..n]
                .iter()
                .map(|s| s.to_string())
                .collect()
        } else {
            (1..=n).map(|i| format!("x{i}")).collect()
        };
        Ring { names }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// A monomial `x^a`, stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<Exponent>,
}

impl Monomial {
    pub fn new(exps: Vec<Exponent>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Self {
        Self::pure_power(n, i, 1)
    }

    pub fn pure_power(n: usize, i: usize, e: Exponent) -> Self {
        let mut exps = vec![0; n];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn into_exponents(self) -> Vec<Exponent> {
        self.exps
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// `self / gcd(self, other)`, the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    /// Bitmask of the variables occurring in the monomial.
    pub fn support(&self) -> u64 {
        debug_assert!(self.exps.len() <= 64);
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |mask, (i, _)| mask | (1 << i))
    }

    pub fn squarefree_part(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e.min(1)).collect(),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// `Some((i, e))` when the monomial is `x_i^e` with `e >= 1`.
    pub fn as_pure_power(&self) -> Option<(usize, Exponent)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> impl fmt::Display + 'a {
        DisplayMonomial { mono: self, ring }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct DisplayMonomial<'a> {
    mono: &'a Monomial,
    ring: &'a Ring,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, &e) in self.ring.names().iter().zip(self.mono.exponents()) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sorts canonically, drops duplicates and non-minimal elements.
///
/// Candidates are scanned in ascending degree, so each one only needs to be
/// tested against survivors of lower degree.
pub(crate) fn minimal_elements(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut survivors: Vec<Monomial> = Vec::with_capacity(gens.len());
    // survivors[..lower] all have degree strictly below the current candidate
    let mut lower = 0;
    for cand in gens {
        let deg = cand.degree();
        while lower < survivors.len() && survivors[lower].degree() < deg {
            lower += 1;
        }
        if !survivors[..lower].iter().any(|s| s.divides(&cand)) {
            survivors.push(cand);
        }
    }
    survivors
}

/// A monomial ideal, represented by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Arc<Ring>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, minimalized.
    pub fn minimalize(ring: Arc<Ring>, gens: Vec<Monomial>) -> Result<Self> {
        let n = ring.n();
        if let Some(bad) = gens.iter().find(|g| g.arity() != n) {
            return Err(Error::ArityMismatch {
                expected: n,
                found: bad.arity(),
            });
        }
        Ok(MonomialIdeal {
            ring,
            gens: minimal_elements(gens),
        })
    }

    /// Convenience constructor from raw exponent vectors.
    pub fn from_exponents(ring: Arc<Ring>, gens: Vec<Vec<Exponent>>) -> Result<Self> {
        Self::minimalize(ring, gens.into_iter().map(Monomial::new).collect())
    }

    /// `(x_1, ..., x_n)`.
    pub fn maximal(ring: Arc<Ring>) -> Self {
        let n = ring.n();
        let gens = (0..n).map(|i| Monomial::var(n, i)).collect();
        MonomialIdeal {
            ring,
            gens: minimal_elements(gens),
        }
    }

    pub fn zero(ring: Arc<Ring>) -> Self {
        MonomialIdeal { ring, gens: vec![] }
    }

    pub fn unit(ring: Arc<Ring>) -> Self {
        let n = ring.n();
        MonomialIdeal {
            ring,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    /// Rejects the zero and unit ideals, for which `A/I` degenerates.
    pub fn require_proper_nonzero(&self, what: &str) -> Result<()> {
        if self.is_zero() {
            Err(Error::domain(format!(
                "{what}: the zero ideal is not allowed"
            )))
        } else if self.is_unit() {
            Err(Error::domain(format!(
                "{what}: the unit ideal is not allowed"
            )))
        } else {
            Ok(())
        }
    }

    fn check_arity(&self, n: usize) -> Result<()> {
        if self.n() != n {
            Err(Error::ArityMismatch {
                expected: self.n(),
                found: n,
            })
        } else {
            Ok(())
        }
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_arity(m.arity())?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// Containment as ideals: every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_arity(other.n())?;
        Ok(other
            .gens
            .iter()
            .all(|m| self.gens.iter().any(|g| g.divides(m))))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other.n())?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(self.with_gens(gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other.n())?;
        let mut seen = HashSet::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                seen.insert(a.mul(b)?);
            }
        }
        Ok(self.with_gens(seen.into_iter().collect()))
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_arity(other.n())?;
        let mut seen = HashSet::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                seen.insert(a.lcm(b));
            }
        }
        Ok(self.with_gens(seen.into_iter().collect()))
    }

    /// `I : m`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_arity(m.arity())?;
        let gens = self.gens.iter().map(|g| g.colon(m)).collect();
        Ok(self.with_gens(gens))
    }

    /// `I^k` for `k >= 1`, built by repeated multiplication by `I`.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::domain("power: exponent must be at least 1"));
        }
        self.require_proper_nonzero("power")?;
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(Monomial::squarefree_part).collect();
        self.with_gens(gens)
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        self.require_proper_nonzero("is-squarefree")?;
        Ok(self.gens.iter().all(Monomial::is_squarefree))
    }

    /// Every variable has a pure power among the generators.
    pub fn is_zero_dimensional(&self) -> Result<bool> {
        self.require_proper_nonzero("is-zero-dimensional")?;
        let mut covered = vec![false; self.n()];
        for g in &self.gens {
            if let Some((i, _)) = g.as_pure_power() {
                covered[i] = true;
            }
        }
        Ok(covered.into_iter().all(|c| c))
    }

    /// Sorted generator degrees.
    pub fn degree_profile(&self) -> Result<Vec<u64>> {
        self.require_proper_nonzero("degree-profile")?;
        let mut degs: Vec<u64> = self.gens.iter().map(Monomial::degree).collect();
        degs.sort_unstable();
        Ok(degs)
    }

    pub fn is_equigenerated(&self) -> Result<bool> {
        let degs = self.degree_profile()?;
        Ok(degs.first() == degs.last())
    }

    pub fn has_pairwise_distinct_degrees(&self) -> Result<bool> {
        let degs = self.degree_profile()?;
        Ok(degs.windows(2).all(|w| w[0] != w[1]))
    }

    pub fn min_degree(&self) -> Option<u64> {
        self.gens.first().map(Monomial::degree)
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// Same ideal with variables permuted: new variable `i` is old `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<MonomialIdeal> {
        self.check_arity(perm.len())?;
        let names = perm.iter().map(|&p| self.ring.names()[p].clone()).collect();
        let ring = Arc::new(Ring::new(names)?);
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial::new(perm.iter().map(|&p| g.exponents()[p]).collect()))
            .collect();
        MonomialIdeal::minimalize(ring, gens)
    }

    fn with_gens(&self, gens: Vec<Monomial>) -> MonomialIdeal {
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimal_elements(gens),
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(&self.ring))?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ideal(n: usize, gens: &[&[Exponent]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(
            Arc::new(Ring::with_vars(n)),
            gens.iter().map(|g| g.to_vec()).collect(),
        )
        .unwrap()
    }

    fn exps(i: &MonomialIdeal) -> Vec<Vec<Exponent>> {
        i.gens().iter().map(|g| g.exponents().to_vec()).collect()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(exps(&ideal(1, &[&[1], &[2]])), vec![vec![1]]);
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1], &[1, 1, 1]]);
        assert_eq!(tri.num_gens(), 3);
        assert_eq!(tri.to_string(), "(x*y, x*z, y*z)");
        assert!(ideal(2, &[]).is_zero());
    }

    #[test]
    fn minimalize_rejects_mixed_arity() {
        let ring = Arc::new(Ring::with_vars(2));
        let err = MonomialIdeal::minimalize(ring, vec![Monomial::new(vec![1, 0, 0])]);
        assert!(matches!(
            err,
            Err(Error::ArityMismatch {
                expected: 2,
                found: 3
            })
        ));
    }

    #[test]
    fn ring_rejects_duplicates() {
        assert!(Ring::new(vec!["x".into(), "x".into()]).is_err());
        assert!(Ring::new(vec![]).is_err());
    }

    #[test]
    fn contains_examples() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert!(i.contains(&Monomial::new(vec![3, 0])).unwrap());
        assert!(!i.contains(&Monomial::new(vec![0, 5])).unwrap());
        let unit = MonomialIdeal::unit(Arc::new(Ring::with_vars(2)));
        assert!(unit.contains(&Monomial::one(2)).unwrap());
    }

    #[test]
    fn power_examples() {
        let m = MonomialIdeal::maximal(Arc::new(Ring::with_vars(2)));
        assert_eq!(
            exps(&m.power(2).unwrap()),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        let ci = ideal(2, &[&[2, 0], &[0, 3]]);
        assert_eq!(
            exps(&ci.power(2).unwrap()),
            vec![vec![4, 0], vec![2, 3], vec![0, 6]]
        );
    }

    #[test]
    fn triangle_square_has_six_generators() {
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let sq = tri.power(2).unwrap();
        // brute force: all pairwise products, then keep minimal ones by full scan
        let g = tri.gens();
        let mut prods = Vec::new();
        for a in g {
            for b in g {
                prods.push(a.mul(b).unwrap());
            }
        }
        prods.sort();
        prods.dedup();
        let minimal: Vec<_> = prods
            .iter()
            .filter(|p| !prods.iter().any(|q| q != *p && q.divides(p)))
            .cloned()
            .collect();
        assert_eq!(minimal.len(), 6);
        assert_eq!(sq.num_gens(), 6);
        for m in &minimal {
            assert!(sq.gens().contains(m));
        }
    }

    #[test]
    fn power_rejects_degenerate() {
        let ring = Arc::new(Ring::with_vars(2));
        assert!(MonomialIdeal::maximal(ring.clone()).power(0).is_err());
        assert!(MonomialIdeal::unit(ring.clone()).power(2).is_err());
        assert!(MonomialIdeal::zero(ring).power(2).is_err());
    }

    #[test]
    fn overflow_is_detected() {
        let i = ideal(1, &[&[u32::MAX / 2 + 1]]);
        assert_eq!(i.power(2), Err(Error::Overflow));
    }

    #[test]
    fn ideal_operations() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(exps(&x.intersection(&y).unwrap()), vec![vec![1, 1]]);
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(
            exps(&i.colon(&Monomial::new(vec![1, 0])).unwrap()),
            vec![vec![1, 0], vec![0, 1]]
        );
        let sq = ideal(2, &[&[2, 0], &[0, 2]]);
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(
            exps(&sq.product(&m).unwrap()),
            vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]
        );
        assert_eq!(exps(&x.sum(&y).unwrap()), exps(&m));
        assert!(x.sum(&ideal(3, &[&[1, 0, 0]])).is_err());
    }

    #[test]
    fn radical_examples() {
        let i = ideal(3, &[&[2, 1, 0], &[0, 0, 3]]);
        assert_eq!(exps(&i.radical()), vec![vec![0, 0, 1], vec![1, 1, 0]]);
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(tri.radical(), tri);
        // (x^2, xy): radical is (x); x^k in I for k >= 2, no pure power of y is
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let r = i.radical();
        assert_eq!(exps(&r), vec![vec![1, 0]]);
        assert!(i.contains(&Monomial::new(vec![2, 0])).unwrap());
        assert!((1..10).all(|k| !i.contains(&Monomial::new(vec![0, k])).unwrap()));
    }

    #[test]
    fn class_predicates() {
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert!(tri.is_squarefree().unwrap());
        assert!(!tri.is_zero_dimensional().unwrap());
        let ci = ideal(2, &[&[2, 0], &[0, 3]]);
        assert!(ci.is_zero_dimensional().unwrap());
        assert!(!ci.is_equigenerated().unwrap());
        assert!(ci.has_pairwise_distinct_degrees().unwrap());
        let m2 = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert!(m2.is_equigenerated().unwrap());
        assert!(!m2.has_pairwise_distinct_degrees().unwrap());
        assert_eq!(m2.degree_profile().unwrap(), vec![2, 2, 2]);
        assert!(ideal(2, &[]).is_squarefree().is_err());
    }

    fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
        (1usize..=3).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(0u32..=3, n), 1..=4).prop_map(
                move |gens| {
                    let gens: Vec<_> = gens
                        .into_iter()
                        .filter(|g| g.iter().any(|&e| e > 0))
                        .collect();
                    let gens = if gens.is_empty() {
                        vec![{
                            let mut v = vec![0; n];
                            v[0] = 1;
                            v
                        }]
                    } else {
                        gens
                    };
                    MonomialIdeal::from_exponents(Arc::new(Ring::with_vars(n)), gens).unwrap()
                },
            )
        })
    }

    fn same_ideal(a: &MonomialIdeal, b: &MonomialIdeal) -> bool {
        a.contains_ideal(b).unwrap() && b.contains_ideal(a).unwrap()
    }

    /// All k-fold products of generators, no pruning.
    fn brute_power_contains(i: &MonomialIdeal, k: u32, m: &Monomial) -> bool {
        fn rec(g: &[Monomial], k: u32, acc: Monomial, m: &Monomial) -> bool {
            if !acc.divides(m) {
                return false;
            }
            if k == 0 {
                return true;
            }
            g.iter().any(|h| rec(g, k - 1, acc.mul(h).unwrap(), m))
        }
        rec(i.gens(), k, Monomial::one(i.n()), m)
    }

    proptest! {
        #[test]
        fn minimalize_idempotent(i in arb_ideal()) {
            let again = MonomialIdeal::minimalize(i.ring().clone(), i.gens().to_vec()).unwrap();
            prop_assert_eq!(again, i);
        }

        #[test]
        fn power_laws(i in arb_ideal(), a in 1u32..=2, b in 1u32..=2) {
            prop_assert_eq!(i.power(1).unwrap(), i.clone());
            let lhs = i.power(a).unwrap().power(b).unwrap();
            let rhs = i.power(a * b).unwrap();
            prop_assert!(same_ideal(&lhs, &rhs));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn radical_laws(i in arb_ideal(), k in 1u32..=3) {
            let r = i.radical();
            prop_assert_eq!(r.radical(), r.clone());
            prop_assert_eq!(i.is_squarefree().unwrap(), r == i);
            prop_assert!(same_ideal(&i.power(k).unwrap().radical(), &r));
        }

        #[test]
        fn power_membership_matches_brute_force(
            i in arb_ideal(),
            k in 1u32..=3,
            m in proptest::collection::vec(0u32..=8, 3),
        ) {
            let m = Monomial::new(m[..i.n()].to_vec());
            let pk = i.power(k).unwrap();
            prop_assert_eq!(pk.contains(&m).unwrap(), brute_power_contains(&i, k, &m));
        }
    }
}
