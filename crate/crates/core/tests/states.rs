mod common;

use sepcheck::criteria::{ppt_criterion, reduction_criterion};
use sepcheck::random::StateSampler;
use sepcheck::states::{
    isospectral_counterpart, me_basis_state, separable_projector, separable_projector_from_basis, werner,
    werner_counterpart, SpectrumBlocks, WernerParams,
};
use sepcheck::{ComplexMatrix, Subsystem};

fn p_grid() -> Vec<f64> {
    (0..=10).map(|i| i as f64 / 10.0).collect()
}

#[test]
fn werner_spectrum_d3() {
    for p in [0.0, 0.3, 0.5, 0.9, 1.0] {
        let spec = werner(3, p).unwrap().spectrum().unwrap();
        let mut expected = vec![(1.0 - p) / 6.0; 6];
        expected.extend(vec![p / 3.0; 3]);
        expected.sort_by(|a, b| a.total_cmp(b));
        for (a, b) in spec.values().iter().zip(&expected) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}

#[test]
fn werner_commutes_with_local_twirl() {
    let mut s = StateSampler::new(9);
    for d in [2, 3, 4] {
        let u = s.unitary(d);
        let uu = u.kron(&u);
        let w = werner(d, 0.37).unwrap();
        let lhs = uu.matmul(w.matrix());
        let rhs = w.matrix().matmul(&uu);
        assert!(lhs.max_abs_diff(&rhs) <= 1e-10);
    }
}

#[test]
fn werner_ppt_flips_past_one_half() {
    for d in 2..=5 {
        assert!(ppt_criterion(&werner(d, 0.45).unwrap()).unwrap() >= -1e-10);
        assert!(ppt_criterion(&werner(d, 0.5).unwrap()).unwrap() >= -1e-10);
        assert!(ppt_criterion(&werner(d, 0.55).unwrap()).unwrap() < -1e-6);
    }
}

#[test]
fn werner_marginals_are_maximally_mixed() {
    for d in [2, 3, 4] {
        let target = ComplexMatrix::identity(d).scale_real(1.0 / d as f64);
        for p in [0.0, 0.6, 1.0] {
            let w = werner(d, p).unwrap();
            assert!(w.reduced(Subsystem::A).max_abs_diff(&target) < 1e-12);
            assert!(w.reduced(Subsystem::B).max_abs_diff(&target) < 1e-12);
        }
    }
}

#[test]
fn projector_forms_agree() {
    for d in 2..=5 {
        for k in 1..=d {
            let direct = separable_projector(d, k).unwrap();
            let via_basis = separable_projector_from_basis(d, k).unwrap();
            assert!(direct.max_abs_diff(&via_basis) <= 1e-12, "d={d} k={k}");
        }
    }
}

#[test]
fn projector_marginals() {
    for d in [2, 3, 5] {
        let target = ComplexMatrix::identity(d).scale_real(1.0 / d as f64);
        for k in 1..=d {
            let s = sepcheck::BipartiteState::new(separable_projector(d, k).unwrap().scale_real(1.0 / d as f64), d, d)
                .unwrap();
            assert!(s.reduced(Subsystem::A).max_abs_diff(&target) < 1e-14);
            assert!(s.reduced(Subsystem::B).max_abs_diff(&target) < 1e-14);
        }
    }
}

#[test]
fn me_basis_gram_is_identity() {
    for d in [2, 3, 5] {
        let mut basis = ComplexMatrix::zeros(d * d, d * d);
        for j in 1..=d {
            for k in 1..=d {
                let col = (j - 1) * d + (k - 1);
                for (i, z) in me_basis_state(d, j, k).unwrap().into_iter().enumerate() {
                    basis[(i, col)] = z;
                }
            }
        }
        let gram = basis.adjoint().matmul(&basis);
        assert!(gram.max_abs_diff(&ComplexMatrix::identity(d * d)) <= 1e-10);
    }
}

#[test]
fn counterparts_match_werner_spectra_and_marginals() {
    for d in [3, 5, 7] {
        let target = ComplexMatrix::identity(d).scale_real(1.0 / d as f64);
        for p in p_grid() {
            let w = werner(d, p).unwrap();
            let c = werner_counterpart(d, p).unwrap();
            assert!(w.spectrum().unwrap().max_abs_diff(&c.spectrum().unwrap()) <= 1e-10);
            for s in [&w, &c] {
                assert!(s.reduced(Subsystem::A).max_abs_diff(&target) <= 1e-10);
                assert!(s.reduced(Subsystem::B).max_abs_diff(&target) <= 1e-10);
            }
            assert!(ppt_criterion(&c).unwrap() >= -1e-10);
            assert!(reduction_criterion(&c).unwrap() >= -1e-10);
        }
    }
}

#[test]
fn counterparts_are_diagonal_in_product_basis() {
    for d in [3, 5] {
        for p in [0.1, 0.7] {
            let c = werner_counterpart(d, p).unwrap();
            let m = c.matrix();
            for i in 0..d * d {
                for j in 0..d * d {
                    if i != j {
                        assert_eq!(m[(i, j)].norm(), 0.0);
                    }
                }
            }
        }
    }
}

#[test]
fn counterpart_for_generic_blocks() {
    // three blocks of multiplicity 3 on 3x3
    let blocks = SpectrumBlocks::new(vec![(0.05, 3), (0.1, 3), (1.0 / 3.0 - 0.15, 3)]).unwrap();
    let c = isospectral_counterpart(&blocks, 3).unwrap();
    let spec = c.spectrum().unwrap();
    for (a, b) in spec.values().iter().zip(blocks.sorted_values()) {
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn counterpart_ppt_on_coarse_grid() {
    let params = WernerParams::new(3, 0.0).unwrap();
    assert_eq!(params.r_plus() % 3, 0);
    for p in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let blocks = SpectrumBlocks::new(WernerParams::new(3, p).unwrap().eigen_blocks().to_vec()).unwrap();
        let c = isospectral_counterpart(&blocks, 3).unwrap();
        assert!(ppt_criterion(&c).unwrap() >= -1e-10);
    }
}

#[test]
fn d5_headline_pair() {
    let w = werner(5, 0.9).unwrap();
    let c = werner_counterpart(5, 0.9).unwrap();
    assert!(ppt_criterion(&w).unwrap() < -1e-6);
    assert!(ppt_criterion(&c).unwrap() >= -1e-10);
    assert!(w.spectrum().unwrap().max_abs_diff(&c.spectrum().unwrap()) <= 1e-10);
}
