//! Instances built from hidden certificates: the characteristic polynomial of
//! multiplication by `a + br + cr² (+ dr³)` is a rational polynomial with that
//! element as a root.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::rational::q;
use crate::error::{Error, Result};
use crate::radical::{RadicalDescriptor, RadicalElement};
use crate::solvers::Certificate;
use crate::{QPoly, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratedInstance {
    pub polynomial: QPoly,
    pub certificate: Certificate,
    /// The root's minimal polynomial has full degree.
    pub irreducible: bool,
}

fn instance(index: u32, t: Rational, coeffs: Vec<Rational>) -> Result<GeneratedInstance> {
    let desc = RadicalDescriptor::normalized(index, t)?;
    let root = RadicalElement::new(desc, coeffs)?;
    let polynomial = root.mul_matrix().char_poly()?;
    let degree = root.min_poly()?.degree().expect("nonzero");
    let certificate = Certificate::new(Rational::zero(), root)?;
    Ok(GeneratedInstance { polynomial, certificate, irreducible: degree == index as usize })
}

/// Monic cubic with root `a + br + cr²`, `r = ∛t`. Depressed iff `a = 0`.
pub fn generate_cubic_instance(a: &Rational, b: &Rational, c: &Rational, t: &Rational) -> Result<GeneratedInstance> {
    instance(3, t.clone(), vec![a.clone(), b.clone(), c.clone()])
}

/// Depressed monic quartic with root `br + cr² + dr³`, `r = t^(1/4)`.
pub fn generate_quartic_instance(b: &Rational, c: &Rational, d: &Rational, t: &Rational) -> Result<GeneratedInstance> {
    instance(4, t.clone(), vec![Rational::zero(), b.clone(), c.clone(), d.clone()])
}

/// Cube-free integers above 1 that are not cubes.
pub const CUBIC_RADICANDS: &[i64] = &[2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 22, 23];
/// Squarefree integers above 1.
pub const QUARTIC_RADICANDS: &[i64] = &[2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SamplerStats {
    pub accepted: u64,
    pub rejected: u64,
}

/// Seeded sampler of small rational certificates. All randomness flows
/// through this value; equal seeds give equal streams.
#[derive(Clone, Debug)]
pub struct InstanceSampler {
    rng: ChaCha8Rng,
    seed: u64,
    max_abs: i64,
    stats: SamplerStats,
}

impl InstanceSampler {
    pub fn new(seed: u64) -> Self {
        InstanceSampler { rng: ChaCha8Rng::seed_from_u64(seed), seed, max_abs: 20, stats: SamplerStats::default() }
    }

    /// Caps numerators and denominators (default 20).
    pub fn with_max_abs(mut self, max_abs: i64) -> Self {
        assert!(max_abs >= 1);
        self.max_abs = max_abs;
        self
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stats(&self) -> SamplerStats {
        self.stats
    }

    pub fn rational(&mut self) -> Rational {
        let m = self.max_abs;
        q(self.rng.gen_range(-m..=m), self.rng.gen_range(1..=m))
    }

    /// Biased toward zero so sparse certificates show up.
    fn coefficient(&mut self) -> Rational {
        if self.rng.gen_bool(0.2) {
            Rational::zero()
        } else {
            self.rational()
        }
    }

    fn pick(&mut self, pool: &[i64]) -> Rational {
        q(pool[self.rng.gen_range(0..pool.len())], 1)
    }

    /// Root `br + cr²` with `(b, c) ≠ (0, 0)`; degenerate draws are resampled.
    pub fn next_cubic(&mut self) -> Result<GeneratedInstance> {
        loop {
            let (b, c) = (self.coefficient(), self.coefficient());
            let t = self.pick(CUBIC_RADICANDS);
            let inst = generate_cubic_instance(&Rational::zero(), &b, &c, &t)?;
            if self.accept(&inst) {
                return Ok(inst);
            }
        }
    }

    /// Root `br + cr² + dr³` with `(b, d) ≠ (0, 0)`; degenerate draws are resampled.
    pub fn next_quartic(&mut self) -> Result<GeneratedInstance> {
        loop {
            let (b, c, d) = (self.coefficient(), self.coefficient(), self.coefficient());
            let t = self.pick(QUARTIC_RADICANDS);
            let inst = generate_quartic_instance(&b, &c, &d, &t)?;
            if self.accept(&inst) {
                return Ok(inst);
            }
        }
    }

    pub fn next_instance(&mut self, degree: u32) -> Result<GeneratedInstance> {
        match degree {
            3 => self.next_cubic(),
            4 => self.next_quartic(),
            d => Err(Error::UnsupportedDegree(d as usize)),
        }
    }

    fn accept(&mut self, inst: &GeneratedInstance) -> bool {
        if inst.irreducible {
            self.stats.accepted += 1;
        } else {
            self.stats.rejected += 1;
        }
        inst.irreducible
    }
}
