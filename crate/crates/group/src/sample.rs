//! Seeded sampling and the shared per-tuple check runner.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lie2::scalar::{int, q};
use lie2::{Check, Exec, Measured, Mode, Ring, Scalar};

/// Sampling and arithmetic options for the group suites.
#[derive(Clone, Copy, Debug)]
pub struct SampleConfig {
    /// Number of sampled tuples.
    pub samples: usize,
    pub seed: u64,
    pub mode: Mode,
    /// Floating-mode tolerance; ignored in exact mode.
    pub tolerance: f64,
    pub exec: Exec,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            samples: 64,
            seed: 0,
            mode: Mode::Exact,
            tolerance: 1e-10,
            exec: Exec::SEQUENTIAL,
        }
    }
}

impl SampleConfig {
    pub fn floating(mut self) -> Self {
        self.mode = Mode::Floating;
        self
    }

    pub(crate) fn tolerance_for(&self) -> Option<f64> {
        (self.mode == Mode::Floating).then_some(self.tolerance)
    }
}

/// Group elements are `exp(v/2)` with `v` a small integer vector; module
/// vectors have small integer entries.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn element(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| q(self.rng.gen_range(-2..=2), 2)).collect()
    }

    pub fn vector(&mut self, dim: usize) -> Vec<Scalar> {
        (0..dim).map(|_| int(self.rng.gen_range(-2..=2))).collect()
    }

    pub fn integer(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }
}

pub(crate) fn lift<R: Ring>(v: &[Scalar]) -> Vec<R> {
    v.iter().map(R::from_scalar).collect()
}

/// Evaluates `f` on every item and records the residuals under `name`.
pub(crate) fn run_check<R, T, F>(name: &str, tolerance: f64, items: Vec<(Vec<usize>, T)>, exec: Exec, f: F) -> Check
where
    R: Measured + Send,
    T: Send,
    F: Fn(&T) -> Vec<R> + Sync + Send,
{
    let results = exec.map(items, |(idx, t)| (idx, f(&t)));
    let mut check = Check::for_ring::<R>(name, tolerance);
    for (idx, r) in results {
        check.record(&idx, &r);
    }
    check
}

/// `samples` tuples of `arity` seeded elements, indexed by sample number.
pub(crate) fn seeded_elements(n: usize, arity: usize, samples: usize, seed: u64) -> Vec<(Vec<usize>, Vec<Vec<Scalar>>)> {
    let mut s = Sampler::new(seed);
    (0..samples).map(|t| (vec![t], (0..arity).map(|_| s.element(n)).collect())).collect()
}

/// Every `arity`-tuple drawn from `elements`, indexed by positions.
pub(crate) fn exhaustive(elements: &[Vec<Scalar>], arity: usize) -> Vec<(Vec<usize>, Vec<Vec<Scalar>>)> {
    let mut out = vec![(Vec::new(), Vec::new())];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|(idx, tuple)| {
                elements.iter().enumerate().map(move |(i, e)| {
                    let mut idx = idx.clone();
                    idx.push(i);
                    let mut tuple: Vec<Vec<Scalar>> = tuple.clone();
                    tuple.push(e.clone());
                    (idx, tuple)
                })
            })
            .collect();
    }
    out
}

