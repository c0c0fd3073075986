//! Seeded random monomial ideals for property checks and the corpus.

use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::monomial::{Monomial, MonomialIdeal, Ring};
use crate::Exponent;

/// Shape of a random ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealShape {
    pub n: usize,
    pub max_gens: usize,
    pub max_exp: Exponent,
}

/// Seeded generator of proper nonzero monomial ideals.
pub struct IdealSampler {
    rng: ChaCha8Rng,
}

impl IdealSampler {
    pub fn new(seed: u64) -> Self {
        IdealSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn monomial(&mut self, n: usize, max_exp: Exponent) -> Monomial {
        loop {
            let exps: Vec<Exponent> = (0..n).map(|_| self.rng.gen_range(0..=max_exp)).collect();
            if exps.iter().any(|&e| e > 0) {
                return Monomial::new(exps);
            }
        }
    }

    /// Between 1 and `max_gens` random nonconstant generators.
    pub fn ideal(&mut self, shape: IdealShape) -> MonomialIdeal {
        let count = self.rng.gen_range(1..=shape.max_gens);
        let gens = (0..count)
            .map(|_| self.monomial(shape.n, shape.max_exp))
            .collect();
        MonomialIdeal::minimalize(Arc::new(Ring::with_vars(shape.n)), gens)
            .expect("generated with matching arity")
    }

    pub fn squarefree_ideal(&mut self, n: usize, max_gens: usize) -> MonomialIdeal {
        self.ideal(IdealShape {
            n,
            max_gens,
            max_exp: 1,
        })
    }

    /// A random ideal containing a pure power of every variable.
    pub fn artinian_ideal(&mut self, shape: IdealShape) -> MonomialIdeal {
        let n = shape.n;
        let mut gens: Vec<Monomial> = (0..n)
            .map(|i| Monomial::pure_power(n, i, self.rng.gen_range(1..=shape.max_exp)))
            .collect();
        let extra = self.rng.gen_range(0..=shape.max_gens.saturating_sub(n));
        gens.extend((0..extra).map(|_| self.monomial(n, shape.max_exp)));
        MonomialIdeal::minimalize(Arc::new(Ring::with_vars(n)), gens)
            .expect("generated with matching arity")
    }

    /// `J ⊆ I`: a subset of `G(I)`, optionally multiplied up, keeping `J`
    /// artinian whenever `I` is by retaining a pure power of each variable.
    pub fn subideal(&mut self, ideal: &MonomialIdeal, max_exp: Exponent) -> MonomialIdeal {
        let n = ideal.n();
        let mut gens = Vec::new();
        for g in ideal.gens() {
            let keep = g.as_pure_power().is_some() || self.rng.gen_bool(0.5);
            if !keep {
                continue;
            }
            let bump = if self.rng.gen_bool(0.3) {
                g.mul(&self.monomial(n, max_exp.max(1)))
                    .expect("small exponents")
            } else {
                g.clone()
            };
            // keep pure powers pure so J stays artinian
            let bump = match g.as_pure_power() {
                Some((i, e)) if bump.as_pure_power().is_none() => {
                    Monomial::pure_power(n, i, e + self.rng.gen_range(0..=1))
                }
                _ => bump,
            };
            gens.push(bump);
        }
        if gens.is_empty() {
            gens.push(ideal.gens()[0].clone());
        }
        MonomialIdeal::minimalize(ideal.ring().clone(), gens).expect("same ring")
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let shape = IdealShape {
            n: 3,
            max_gens: 5,
            max_exp: 3,
        };
        let a: Vec<_> = {
            let mut s = IdealSampler::new(7);
            (0..5).map(|_| s.ideal(shape)).collect()
        };
        let b: Vec<_> = {
            let mut s = IdealSampler::new(7);
            (0..5).map(|_| s.ideal(shape)).collect()
        };
        assert_eq!(a, b);
        assert!(a.iter().all(|i| i.require_proper_nonzero("t").is_ok()));
    }

    #[test]
    fn subideals_are_contained_and_artinian() {
        let mut s = IdealSampler::new(11);
        let shape = IdealShape {
            n: 3,
            max_gens: 6,
            max_exp: 3,
        };
        for _ in 0..50 {
            let i = s.artinian_ideal(shape);
            assert!(i.is_zero_dimensional().unwrap());
            let j = s.subideal(&i, 2);
            assert!(i.contains_ideal(&j).unwrap());
            assert!(j.is_zero_dimensional().unwrap());
        }
    }
}
