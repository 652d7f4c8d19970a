use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{EdgeList, VertexId};

/// Default quadrant probabilities (the Graph500 settings).
pub const DEFAULT_A: f64 = 0.57;
pub const DEFAULT_B: f64 = 0.19;
pub const DEFAULT_C: f64 = 0.19;
pub const DEFAULT_D: f64 = 0.05;

/// Configuration for the recursive-matrix (RMAT) random graph generator.
///
/// `generate` emits `edge_factor * 2^scale` directed pairs over `2^scale`
/// vertices by recursively choosing one of four quadrants per id bit with
/// probabilities `a`, `b`, `c`, `d`. The raw pairs may contain duplicates and
/// self-loops; canonicalization happens in [`crate::CsrGraph::from_edge_list`].
///
/// Determinism: the stream is drawn from ChaCha8 seeded with `seed`
/// (`ChaCha8Rng::seed_from_u64`), and each quadrant choice consumes exactly
/// one 64-bit word mapped to `[0, 1)` as `(word >> 11) * 2^-53`. The same
/// parameters therefore always produce byte-identical output.
#[derive(Debug, Clone, PartialEq)]
pub struct RmatParams {
    pub scale: u32,
    pub edge_factor: u32,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub seed: u64,
}

impl RmatParams {
    pub fn new(scale: u32, edge_factor: u32, seed: u64) -> RmatParams {
        RmatParams {
            scale,
            edge_factor,
            a: DEFAULT_A,
            b: DEFAULT_B,
            c: DEFAULT_C,
            d: DEFAULT_D,
            seed,
        }
    }

    pub fn with_probabilities(mut self, a: f64, b: f64, c: f64, d: f64) -> Result<RmatParams> {
        self.a = a;
        self.b = b;
        self.c = c;
        self.d = d;
        self.validate()?;
        Ok(self)
    }

    /// `scale >= 1`, `edge_factor >= 1`, probabilities nonnegative and
    /// summing to 1 within 1e-12.
    pub fn validate(&self) -> Result<()> {
        if self.scale < 1 {
            return Err(Error::Params("scale must be at least 1".into()));
        }
        if self.edge_factor < 1 {
            return Err(Error::Params("edge_factor must be at least 1".into()));
        }
        let probs = [self.a, self.b, self.c, self.d];
        if probs.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::Params("probabilities must be nonnegative".into()));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::Params(format!("probabilities sum to {sum}, expected 1")));
        }
        Ok(())
    }

    /// Generate the raw directed pairs. Fails with [`Error::Capacity`] when
    /// `2^scale` ids cannot be represented.
    pub fn generate(&self) -> Result<EdgeList> {
        self.validate()?;
        if self.scale > 32 {
            return Err(Error::Capacity { scale: self.scale });
        }
        let n = 1usize << self.scale;
        let count = (self.edge_factor as usize) << self.scale;
        let t_ab = self.a + self.b;
        let t_abc = t_ab + self.c;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut edges = Vec::with_capacity(count);
        for _ in 0..count {
            let mut u: u64 = 0;
            let mut v: u64 = 0;
            for level in 0..self.scale {
                let bit = 1u64 << (self.scale - 1 - level);
                let r = unit_f64(&mut rng);
                if r < self.a {
                    // upper-left quadrant: neither bit set
                } else if r < t_ab {
                    v |= bit;
                } else if r < t_abc {
                    u |= bit;
                } else {
                    u |= bit;
                    v |= bit;
                }
            }
            edges.push((u as VertexId, v as VertexId));
        }
        Ok(EdgeList { n_hint: n, edges })
    }
}

/// Uniform draw in `[0, 1)` from the top 53 bits of one generator word.
fn unit_f64(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}
