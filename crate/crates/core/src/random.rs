//! Seeded random states: induced-measure mixed states, separable mixtures,
//! and Haar-like unitaries.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::linalg::{partial_trace, BipartiteState, ComplexMatrix, Subsystem, C64};

/// Deterministic sampler; identical seeds give identical sequences.
#[derive(Debug, Clone)]
pub struct StateSampler {
    rng: ChaCha8Rng,
}

impl StateSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    fn complex_normal(&mut self) -> C64 {
        C64::new(self.normal(), self.normal())
    }

    /// Normalized vector with i.i.d. complex Gaussian amplitudes.
    pub fn pure_vector(&mut self, dim: usize) -> Vec<C64> {
        let v: Vec<C64> = (0..dim).map(|_| self.complex_normal()).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        v.into_iter().map(|z| z / norm).collect()
    }

    pub fn pure_state(&mut self, dim_a: usize, dim_b: usize) -> BipartiteState {
        BipartiteState::from_pure(&self.pure_vector(dim_a * dim_b), dim_a, dim_b).expect("normalized pure state")
    }

    /// tr_C |psi><psi| for |psi> on (A ⊗ B) ⊗ C with dim C = dim A · dim B.
    /// Full rank with probability one.
    pub fn mixed_state(&mut self, dim_a: usize, dim_b: usize) -> BipartiteState {
        let n = dim_a * dim_b;
        let psi = self.pure_vector(n * n);
        let rho = partial_trace(&ComplexMatrix::outer(&psi), n, n, Subsystem::A).expect("square");
        BipartiteState::new(rho.hermitian_part(), dim_a, dim_b).expect("induced state is valid")
    }

    /// Equal-weight mixture of between 1 and 2·dA·dB random product pure states.
    pub fn separable_state(&mut self, dim_a: usize, dim_b: usize) -> BipartiteState {
        let terms = self.rng.random_range(1..=2 * dim_a * dim_b);
        let n = dim_a * dim_b;
        let mut rho = ComplexMatrix::zeros(n, n);
        for _ in 0..terms {
            let a = ComplexMatrix::outer(&self.pure_vector(dim_a));
            let b = ComplexMatrix::outer(&self.pure_vector(dim_b));
            rho = &rho + &a.kron(&b);
        }
        let rho = rho.scale_real(1.0 / terms as f64).hermitian_part();
        BipartiteState::new(rho, dim_a, dim_b).expect("separable mixture is valid")
    }

    /// Unitary from Gram-Schmidt on a complex Gaussian matrix.
    pub fn unitary(&mut self, n: usize) -> ComplexMatrix {
        let mut cols: Vec<Vec<C64>> = Vec::with_capacity(n);
        while cols.len() < n {
            let mut v: Vec<C64> = (0..n).map(|_| self.complex_normal()).collect();
            for c in &cols {
                let overlap: C64 = c.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (vi, ci) in v.iter_mut().zip(c) {
                    *vi -= overlap * ci;
                }
            }
            let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > 1e-8 {
                cols.push(v.into_iter().map(|z| z / norm).collect());
            }
        }
        ComplexMatrix::from_fn(n, n, |i, j| cols[j][i])
    }

    /// Hermitian matrix (G + G^dagger)/2 with Gaussian G, scaled by `scale`.
    pub fn hermitian(&mut self, n: usize, scale: f64) -> ComplexMatrix {
        let g = ComplexMatrix::from_vec(n, n, (0..n * n).map(|_| self.complex_normal()).collect()).expect("n x n");
        g.hermitian_part().scale_real(scale)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }
}
