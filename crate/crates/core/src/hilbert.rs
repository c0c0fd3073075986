//! Hilbert series of `A/I` for monomial `I`.
//!
//! The series is `h(t) / (1 - t)^n` with an integer numerator `h`. Writing
//! `h(t) = (1 - t)^c g(t)` with `g(1) != 0` gives the height `c` of `I` and the
//! multiplicity `e(A/I) = g(1)`.

use std::collections::HashMap;

use serde::Serialize;

use crate::monomial::{minimal_elements, Monomial, MonomialIdeal};
use crate::{Coeff, Error, Result};

/// Numerator `h(t)` of the Hilbert series, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HilbertNumerator {
    coeffs: Vec<Coeff>,
}

impl HilbertNumerator {
    pub fn new(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        HilbertNumerator { coeffs }
    }

    pub fn coefficients(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval_at_one(&self) -> Coeff {
        self.coeffs.iter().sum()
    }

    /// Splits `h = (1 - t)^c g` with `g(1) != 0`. Returns `None` for `h = 0`.
    pub fn factor_one_minus_t(&self) -> Option<(usize, Vec<Coeff>)> {
        if self.is_zero() {
            return None;
        }
        let mut g = self.coeffs.clone();
        let mut c = 0;
        while g.iter().sum::<Coeff>() == 0 {
            // g = (1 - t) q  =>  q_i = g_i + q_{i-1}
            let mut q = Vec::with_capacity(g.len() - 1);
            let mut acc = 0;
            for &gi in &g[..g.len() - 1] {
                acc += gi;
                q.push(acc);
            }
            g = q;
            c += 1;
        }
        Some((c, g))
    }

    /// First `count` coefficients of `h(t) / (1 - t)^n`, i.e. the Hilbert
    /// function of `A/I` in degrees `0..count`.
    pub fn series_coefficients(&self, n: usize, count: usize) -> Vec<Coeff> {
        // (1 - t)^{-n} = sum_j C(j + n - 1, n - 1) t^j
        let mut binom = vec![0 as Coeff; count];
        for (j, b) in binom.iter_mut().enumerate() {
            *b = binomial(j + n - 1, n - 1);
        }
        (0..count)
            .map(|j| {
                self.coeffs
                    .iter()
                    .enumerate()
                    .take(j + 1)
                    .map(|(i, &h)| h * binom[j - i])
                    .sum()
            })
            .collect()
    }

    pub fn display_poly(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let a = c.abs();
            match (i, a) {
                (0, _) => out.push_str(&a.to_string()),
                (_, 1) => {}
                _ => out.push_str(&a.to_string()),
            }
            match i {
                0 => {}
                1 => out.push('t'),
                _ => out.push_str(&format!("t^{i}")),
            }
        }
        out
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> Coeff {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc as Coeff
}

/// Dimension, height and multiplicity of `A/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub numerator: HilbertNumerator,
    /// `dim A/I`
    pub d: usize,
    /// `height I`
    pub c: usize,
    /// `e(A/I)`
    pub e: u64,
    /// `length(A/I)`, present only when `A/I` is artinian
    pub length: Option<u64>,
}

fn poly_add_shifted(acc: &mut Vec<Coeff>, p: &[Coeff], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, &c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

fn poly_mul(a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

struct NumeratorSolver {
    n: usize,
    memo: HashMap<Vec<Monomial>, Vec<Coeff>>,
}

impl NumeratorSolver {
    /// `gens` must be minimal and canonically ordered.
    fn solve(&mut self, gens: Vec<Monomial>) -> Vec<Coeff> {
        if gens.is_empty() {
            return vec![1];
        }
        if gens.iter().any(Monomial::is_one) {
            return vec![];
        }
        if let Some(h) = self.memo.get(&gens) {
            return h.clone();
        }

        let mut counts = vec![0usize; self.n];
        for g in &gens {
            for (i, &e) in g.exponents().iter().enumerate() {
                if e > 0 {
                    counts[i] += 1;
                }
            }
        }
        let (pivot_var, &max_count) = counts
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
            .expect("ring has at least one variable");

        let h = if max_count <= 1 {
            // pairwise coprime generators form a regular sequence
            gens.iter().fold(vec![1], |acc, g| {
                let mut factor = vec![0; g.degree() as usize + 1];
                factor[0] = 1;
                factor[g.degree() as usize] -= 1;
                poly_mul(&acc, &factor)
            })
        } else {
            // At least one generator involving the pivot variable is not a pure
            // power of it, and no pure power divides that generator, so
            // x^e lies outside I while dividing some generator.
            let e = gens
                .iter()
                .filter(|g| g.exponents()[pivot_var] > 0 && g.as_pure_power().is_none())
                .map(|g| g.exponents()[pivot_var])
                .min()
                .expect("pivot variable occurs in a mixed generator");
            let pivot = Monomial::pure_power(self.n, pivot_var, e);

            // h(A/I) = h(A/(I + p)) + t^e h(A/(I : p))
            let mut with_pivot = gens.clone();
            with_pivot.push(pivot.clone());
            let quotient = gens.iter().map(|g| g.colon(&pivot)).collect();

            let mut h = self.solve(minimal_elements(with_pivot));
            let colon = self.solve(minimal_elements(quotient));
            poly_add_shifted(&mut h, &colon, e as usize);
            h
        };
        self.memo.insert(gens, h.clone());
        h
    }
}

/// Numerator of the Hilbert series of `A/I`. Defined for every ideal,
/// including zero (`1`) and unit (`0`).
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> HilbertNumerator {
    let mut solver = NumeratorSolver {
        n: ideal.n(),
        memo: HashMap::new(),
    };
    HilbertNumerator::new(solver.solve(ideal.gens().to_vec()))
}

pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    hilbert_data_allow_zero(ideal).map(|d| d.c)
}

pub fn dimension(ideal: &MonomialIdeal) -> Result<usize> {
    hilbert_data_allow_zero(ideal).map(|d| d.d)
}

/// `e(A/I)` read off the Hilbert numerator.
pub fn multiplicity(ideal: &MonomialIdeal) -> Result<u64> {
    ideal.require_proper_nonzero("multiplicity")?;
    hilbert_data_allow_zero(ideal).map(|d| d.e)
}

pub fn hilbert_data(ideal: &MonomialIdeal) -> Result<HilbertData> {
    ideal.require_proper_nonzero("hilbert")?;
    hilbert_data_allow_zero(ideal)
}

fn hilbert_data_allow_zero(ideal: &MonomialIdeal) -> Result<HilbertData> {
    if ideal.is_unit() {
        return Err(Error::domain("the unit ideal has no Hilbert data"));
    }
    let numerator = hilbert_numerator(ideal);
    let (c, g) = numerator
        .factor_one_minus_t()
        .ok_or_else(|| Error::internal("zero Hilbert numerator for a proper ideal"))?;
    let e: Coeff = g.iter().sum();
    if e <= 0 {
        return Err(Error::internal(format!("non-positive multiplicity {e}")));
    }
    let d = ideal.n() - c;
    Ok(HilbertData {
        numerator,
        d,
        c,
        e: e as u64,
        length: (d == 0).then_some(e as u64),
    })
}

/// Number of degree-`t` monomials outside `I`, by direct enumeration.
pub fn standard_monomial_count(ideal: &MonomialIdeal, t: u32) -> u64 {
    fn rec(ideal: &MonomialIdeal, exps: &mut Vec<u32>, pos: usize, left: u32) -> u64 {
        let n = exps.len();
        if pos == n - 1 {
            exps[pos] = left;
            let m = Monomial::new(exps.clone());
            return u64::from(!ideal.gens().iter().any(|g| g.divides(&m)));
        }
        (0..=left)
            .map(|e| {
                exps[pos] = e;
                rec(ideal, exps, pos + 1, left - e)
            })
            .sum()
    }
    let mut exps = vec![0; ideal.n()];
    rec(ideal, &mut exps, 0, t)
}

/// Number of monomials outside an artinian ideal, `None` if `A/I` has
/// infinite length.
///
/// Coordinates are fixed left to right; once a partial monomial lies in `I`,
/// every extension with a larger current coordinate does too.
pub fn artinian_length(ideal: &MonomialIdeal) -> Option<u64> {
    let n = ideal.n();
    let mut bounds = vec![None; n];
    for g in ideal.gens() {
        if let Some((i, e)) = g.as_pure_power() {
            bounds[i] = Some(e);
        }
    }
    if ideal.is_zero() || bounds.iter().any(Option::is_none) {
        return None;
    }
    fn rec(gens: &[Monomial], exps: &mut Vec<u32>, pos: usize) -> u64 {
        if pos == exps.len() {
            return 1;
        }
        let mut total = 0;
        loop {
            let m = Monomial::new(exps.clone());
            if gens.iter().any(|g| g.divides(&m)) {
                break;
            }
            total += rec(gens, exps, pos + 1);
            exps[pos] += 1;
        }
        exps[pos] = 0;
        total
    }
    let mut exps = vec![0; n];
    Some(rec(ideal.gens(), &mut exps, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Ring;
    use proptest::prelude::*;
    use std::sync::Arc;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(
            Arc::new(Ring::with_vars(n)),
            gens.iter().map(|g| g.to_vec()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn numerator_examples() {
        assert_eq!(
            hilbert_numerator(&ideal(1, &[&[1]])).coefficients(),
            &[1, -1]
        );
        // (1 - t^2)(1 - t^3)
        assert_eq!(
            hilbert_numerator(&ideal(2, &[&[2, 0], &[0, 3]])).coefficients(),
            &[1, 0, -1, -1, 0, 1]
        );
        assert_eq!(
            hilbert_numerator(&ideal(2, &[&[2, 0], &[1, 1]])).coefficients(),
            &[1, 0, -2, 1]
        );
        let ring = Arc::new(Ring::with_vars(2));
        assert_eq!(
            hilbert_numerator(&MonomialIdeal::zero(ring.clone())).coefficients(),
            &[1]
        );
        assert!(hilbert_numerator(&MonomialIdeal::unit(ring)).is_zero());
    }

    #[test]
    fn x2_xy_matches_standard_monomial_counts() {
        // A/(x^2, xy) has basis 1, x, y^j (j >= 1): Hilbert function 1, 2, 1, 1, ...
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let num = hilbert_numerator(&i);
        let counts: Vec<Coeff> = (0..8)
            .map(|t| standard_monomial_count(&i, t) as Coeff)
            .collect();
        assert_eq!(counts, vec![1, 2, 1, 1, 1, 1, 1, 1]);
        assert_eq!(num.series_coefficients(2, 8), counts);
    }

    #[test]
    fn dimension_height_examples() {
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!((height(&tri).unwrap(), dimension(&tri).unwrap()), (2, 1));
        let ci = ideal(2, &[&[2, 0], &[0, 3]]);
        assert_eq!((height(&ci).unwrap(), dimension(&ci).unwrap()), (2, 0));
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!((height(&i).unwrap(), dimension(&i).unwrap()), (1, 1));
        assert!(height(&MonomialIdeal::unit(Arc::new(Ring::with_vars(2)))).is_err());
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap(), 6);
        assert_eq!(
            multiplicity(&ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])).unwrap(),
            3
        );
        assert_eq!(multiplicity(&ideal(2, &[&[2, 0], &[1, 1]])).unwrap(), 1);
        assert!(multiplicity(&ideal(2, &[])).is_err());
        let data = hilbert_data(&ideal(2, &[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(data.length, Some(6));
    }

    #[test]
    fn standard_monomial_count_examples() {
        let m2 = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(standard_monomial_count(&m2, 1), 2);
        assert_eq!(standard_monomial_count(&m2, 3), 0);
        let tri = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(standard_monomial_count(&tri, 4), 3);
    }

    #[test]
    fn display() {
        let num = hilbert_numerator(&ideal(2, &[&[2, 0], &[1, 1]]));
        assert_eq!(num.display_poly(), "1 - 2t^2 + t^3");
    }

    fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
        (1usize..=4).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(0u32..=3, n), 1..=5).prop_map(
                move |gens| {
                    let mut gens: Vec<_> = gens
                        .into_iter()
                        .filter(|g| g.iter().any(|&e| e > 0))
                        .collect();
                    if gens.is_empty() {
                        gens.push(Monomial::var(n, 0).into_exponents());
                    }
                    MonomialIdeal::from_exponents(Arc::new(Ring::with_vars(n)), gens).unwrap()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn series_matches_enumeration(i in arb_ideal()) {
            let series = hilbert_numerator(&i).series_coefficients(i.n(), 9);
            for t in 0..9u32 {
                prop_assert_eq!(series[t as usize], standard_monomial_count(&i, t) as Coeff);
            }
        }

        #[test]
        fn invariant_under_permutation(i in arb_ideal(), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<usize> = (0..i.n()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let p = i.permute_vars(&perm).unwrap();
            prop_assert_eq!(hilbert_data(&i).unwrap().e, hilbert_data(&p).unwrap().e);
            prop_assert_eq!(height(&i).unwrap(), height(&p).unwrap());
        }

        #[test]
        fn powers_keep_height(i in arb_ideal(), k in 2u32..=3) {
            let pk = i.power(k).unwrap();
            prop_assert_eq!(height(&pk).unwrap(), height(&i).unwrap());
            prop_assert_eq!(dimension(&pk).unwrap(), dimension(&i).unwrap());
        }

        #[test]
        fn artinian_multiplicity_is_length(i in arb_ideal()) {
            if let Some(len) = artinian_length(&i) {
                prop_assert_eq!(multiplicity(&i).unwrap(), len);
                // direct count over all degrees
                let direct: u64 = (0..40).map(|t| standard_monomial_count(&i, t)).sum();
                prop_assert_eq!(direct, len);
            }
        }
    }
}
