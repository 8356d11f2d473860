//! Seeded random generators for the property suites. Everything is driven by
//! a ChaCha stream so a seed fixes the whole sample set on every platform.

use std::sync::Arc;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::{AbElem, AbGroup, Character};
use crate::algebra::{AlgElem, AlgebraBase, TensorElem};
use crate::cocycle::Cocycle;
use crate::lambda::OplusElem;
use crate::lattice::{AffineSL2, LatticePoint, Sl2};
use crate::scalars::{Cyclotomic, Phase};

/// Free coordinates are drawn from `-FREE_RANGE..=FREE_RANGE`.
const FREE_RANGE: i64 = 3;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn point(&mut self, radius: i64) -> LatticePoint {
        LatticePoint::new(self.int(-radius, radius), self.int(-radius, radius))
    }

    /// A word of `steps` letters in `S = (0 -1; 1 0)` and `T^{±1}`.
    pub fn sl2(&mut self, steps: usize) -> Sl2 {
        let s = Sl2::new(0, -1, 1, 0).unwrap();
        let t = Sl2::new(1, 1, 0, 1).unwrap();
        let ti = Sl2::new(1, -1, 0, 1).unwrap();
        (0..steps).fold(Sl2::identity(), |acc, _| {
            let g = match self.rng.gen_range(0..3) {
                0 => &s,
                1 => &t,
                _ => &ti,
            };
            acc.mul(g)
        })
    }

    pub fn affine(&mut self, radius: i64, steps: usize) -> AffineSL2 {
        AffineSL2::new(self.point(radius), self.sl2(steps))
    }

    pub fn elem(&mut self, g: &AbGroup) -> AbElem {
        let coords = (0..g.rank())
            .map(|i| match g.generator_order(i) {
                Some(n) => self.rng.gen_range(0..n as i64),
                None => self.int(-FREE_RANGE, FREE_RANGE),
            })
            .collect();
        g.elem(coords).expect("in range")
    }

    pub fn nonzero_elem(&mut self, g: &AbGroup) -> AbElem {
        assert!(!g.is_trivial(), "trivial group has no nonzero element");
        loop {
            let x = self.elem(g);
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// Torsion phases are multiples of `1/n`; free phases have a small
    /// random denominator.
    pub fn character(&mut self, g: &AbGroup) -> Character {
        let phases = (0..g.rank())
            .map(|i| match g.generator_order(i) {
                Some(n) => Phase::new(self.rng.gen_range(0..n as i64), n as i64),
                None => {
                    let d = self.int(1, 12);
                    Phase::new(self.int(0, d - 1), d)
                }
            })
            .collect();
        Character::new(g, phases).expect("well defined")
    }

    pub fn phase(&mut self, max_den: i64) -> Phase {
        let d = self.int(1, max_den);
        Phase::new(self.int(0, d - 1), d)
    }

    /// A random well-defined bicharacter cocycle: the entry for generators
    /// of orders `m` and `n` is a multiple of `1/gcd(m, n)`.
    pub fn bichar(&mut self, g: &AbGroup) -> Cocycle {
        let r = g.rank();
        let matrix = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| match (g.generator_order(i), g.generator_order(j)) {
                        (None, None) => self.phase(12),
                        (Some(n), None) | (None, Some(n)) => Phase::new(self.int(0, n as i64 - 1), n as i64),
                        (Some(m), Some(n)) => {
                            let d = m.gcd(&n) as i64;
                            Phase::new(self.int(0, d - 1), d)
                        }
                    })
                    .collect()
            })
            .collect();
        Cocycle::bichar(g, matrix).expect("well defined")
    }

    /// One random phase per element of a finite group, for coboundaries.
    pub fn cochain(&mut self, g: &AbGroup, max_den: i64) -> Vec<Phase> {
        let n = g.order().expect("finite") as usize;
        (0..n).map(|_| self.phase(max_den)).collect()
    }

    /// A sum of up to `terms` basis tensors `u_g ⊗ u_h` with random
    /// coefficients.
    pub fn tensor_elem(&mut self, base: &Arc<AlgebraBase>, terms: usize) -> TensorElem {
        let g = base.group().clone();
        let n = self.rng.gen_range(1..=terms.max(1));
        let items: Vec<_> = (0..n).map(|_| ((self.elem(&g), self.elem(&g)), self.coefficient())).collect();
        TensorElem::from_terms(base, items)
    }

    /// Up to `points` random values on `[-radius, radius]^2`.
    pub fn oplus(&mut self, g: &Arc<AbGroup>, radius: i64, points: usize) -> OplusElem {
        let n = self.rng.gen_range(0..=points);
        let pairs: Vec<_> = (0..n).map(|_| (self.point(radius), self.elem(g))).collect();
        OplusElem::from_pairs(g, pairs).expect("in range")
    }

    /// Like [`oplus`](Self::oplus) but corrected to total zero at one point.
    pub fn lambda(&mut self, g: &Arc<AbGroup>, radius: i64, points: usize) -> OplusElem {
        let x = self.oplus(g, radius, points.max(1));
        let k = self.point(radius);
        let fix = OplusElem::from_pairs(g, [(k, g.neg(&x.total()))]).expect("in range");
        x.add(&fix).expect("same group")
    }

    /// `±ζ_12^j`, `±2ζ_12^j` or `1 + ζ_12^j`.
    pub fn coefficient(&mut self) -> Cyclotomic {
        let z = Cyclotomic::from_phase(Phase::new(self.int(0, 11), 12));
        match self.rng.gen_range(0..5) {
            0 => z,
            1 => z.neg(),
            2 => z.scale(&num_rational::BigRational::from_integer(2.into())),
            3 => z.add(&Cyclotomic::one()),
            _ => Cyclotomic::one(),
        }
    }

    /// A sum of up to `terms` unitaries, each indexed by `Λ(H)` when
    /// `lambda_only`.
    pub fn alg_elem(&mut self, base: &Arc<AlgebraBase>, radius: i64, terms: usize, lambda_only: bool) -> AlgElem {
        let g = base.group().clone();
        let n = self.rng.gen_range(1..=terms.max(1));
        let items: Vec<_> = (0..n)
            .map(|_| {
                let key = if lambda_only { self.lambda(&g, radius, 3) } else { self.oplus(&g, radius, 3) };
                (key, self.coefficient())
            })
            .collect();
        AlgElem::from_terms(base, items)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_and_well_formed() {
        let g = Arc::new(AbGroup::cyclic_power(3, 2));
        let draw = |seed| {
            let mut s = Sampler::new(seed);
            (s.lambda(&g, 2, 4), s.sl2(6), s.character(&g))
        };
        assert_eq!(draw(7), draw(7));
        let mut s = Sampler::new(1);
        for _ in 0..50 {
            assert!(s.lambda(&g, 2, 4).is_lambda());
            let p = s.point(2).to_i64().unwrap();
            assert!(p.0.abs() <= 2 && p.1.abs() <= 2);
        }
    }
}
