//! Frozen expected values for the documented examples of each module.

use quadlie::constructions::{
    d4_skew_extension_decomposability, heisenberg, oscillator, su_model, OscillatorSpec,
};
use quadlie::derivations::{
    derivations, heisenberg_derivation_shape_check, inner_derivations, oscillator_class_check, skew_derivations,
    verify_oscillator_derivation_characterization, OscillatorClass,
};
use quadlie::forms::killing_form;
use quadlie::linalg::{congruence_diagonalize, int, signature, unit_vector, Matrix, Rational, Subspace};
use quadlie::{invariant_forms, metric_dimension, BilinearForm, LieAlgebra};

fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

fn d(lambda: &[i64]) -> quadlie::constructions::Oscillator {
    oscillator(&OscillatorSpec::new(ints(lambda), int(0), int(1)).unwrap()).unwrap()
}

fn span(n: usize, vs: &[Vec<Rational>]) -> Subspace {
    Subspace::span(n, vs)
}

// exact linear algebra

#[test]
fn rref_examples() {
    assert_eq!(Matrix::identity(3).rref(), Matrix::identity(3));
    assert_eq!(Matrix::zeros(2, 2).rref(), Matrix::zeros(2, 2));
    assert_eq!(Matrix::from_ints(&[&[0, 1], &[1, 0]]).rref(), Matrix::identity(2));
}

#[test]
fn null_space_examples() {
    assert!(Matrix::identity(3).null_space().is_zero());
    assert_eq!(Matrix::zeros(2, 3).null_space(), Subspace::full(3));
    assert_eq!(Matrix::from_ints(&[&[1, 1]]).null_space(), span(2, &[ints(&[1, -1])]));
}

#[test]
fn subspace_examples() {
    let e = |i| unit_vector(3, i);
    assert_eq!(span(3, &[e(0)]).sum(&span(3, &[e(1)])).unwrap(), span(3, &[e(0), e(1)]));
    assert_eq!(
        span(3, &[e(0), e(1)]).intersection(&span(3, &[e(1), e(2)])).unwrap(),
        span(3, &[e(1)])
    );
    assert!(!span(3, &[ints(&[1, 1, 0])]).contains(&e(0)).unwrap());
}

#[test]
fn congruence_examples() {
    let c = congruence_diagonalize(&Matrix::identity(2)).unwrap();
    assert_eq!(c.diagonal, ints(&[1, 1]));
    assert_eq!(c.signature(), (2, 0));
    assert_eq!(signature(&Matrix::from_ints(&[&[0, 1], &[1, 0]])).unwrap(), (1, 1));
    assert_eq!(signature(d(&[1]).form().gram()).unwrap(), (3, 1));
}

// lie-core

#[test]
fn jacobi_examples() {
    assert!(LieAlgebra::abelian(5).check_jacobi().is_empty());
    let h3 = heisenberg(1).unwrap();
    assert!(h3.check_jacobi().is_empty());
    let mut c = h3.structure_tensor().to_vec();
    c[0][2] = ints(&[1, 0, 0]);
    c[2][0] = ints(&[-1, 0, 0]);
    let mutated = LieAlgebra::new_unchecked_jacobi(h3.labels().to_vec(), c).unwrap();
    let bad = mutated.check_jacobi();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].triple, (0, 1, 2));
    assert!(LieAlgebra::new(mutated.labels().to_vec(), mutated.structure_tensor().to_vec()).is_err());
}

#[test]
fn derived_algebra_examples() {
    assert!(LieAlgebra::abelian(3).derived_algebra().is_zero());
    assert_eq!(heisenberg(1).unwrap().derived_algebra(), Subspace::coordinate(3, &[2]));
    assert_eq!(d(&[1]).algebra().derived_algebra(), Subspace::coordinate(4, &[1, 2, 3]));
}

#[test]
fn series_examples() {
    let dims = |s: Vec<Subspace>| s.iter().map(Subspace::dim).collect::<Vec<_>>();
    assert_eq!(dims(LieAlgebra::abelian(3).derived_series()), vec![3, 0]);
    let d4 = d(&[1]);
    assert_eq!(dims(d4.algebra().derived_series()), vec![4, 3, 1, 0]);
    assert_eq!(dims(d4.algebra().lower_central_series()), vec![4, 3]);
    assert_eq!(dims(d4.algebra().upper_central_series()), vec![0, 1]);
    assert_eq!(dims(heisenberg(2).unwrap().lower_central_series()), vec![5, 1, 0]);
}

#[test]
fn center_examples() {
    assert!(LieAlgebra::abelian(4).center().is_full());
    for m in 1..4 {
        assert_eq!(heisenberg(m).unwrap().center(), Subspace::coordinate(2 * m + 1, &[2 * m]));
    }
    for l in [&[1][..], &[1, 2], &[1, 1, 2]] {
        let o = d(l);
        assert_eq!(o.algebra().center(), Subspace::coordinate(o.algebra().dim(), &[o.dual_index()]));
    }
}

#[test]
fn solvable_nilpotent_examples() {
    let d4 = d(&[1]);
    assert!(d4.algebra().is_solvable() && !d4.algebra().is_nilpotent());
    let h3 = heisenberg(1).unwrap();
    assert!(h3.is_solvable() && h3.is_nilpotent());
    let su2 = su_model(2).unwrap().to_lie_algebra();
    assert!(!su2.is_solvable() && !su2.is_nilpotent());
}

#[test]
fn ideal_examples() {
    let g = d(&[1]).algebra().clone();
    assert!(g.is_ideal(&Subspace::coordinate(4, &[3])).unwrap().is_ideal);
    assert!(g.is_ideal(&Subspace::coordinate(4, &[1, 2, 3])).unwrap().is_ideal);
    let r = g.is_ideal(&Subspace::coordinate(4, &[0])).unwrap();
    assert!(!r.is_ideal);
    assert!(!r.witnesses.is_empty());
}

#[test]
fn quotient_examples() {
    let s = d(&[1]).algebra().quotient_dims_sanity();
    assert_eq!((s.dim_g2, s.dim_center, s.local), (3, 1, true));
    let s = LieAlgebra::abelian(2).quotient_dims_sanity();
    assert_eq!((s.dim_g2, s.dim_center, s.local), (0, 2, false));
    let s = d(&[1, 1]).algebra().quotient_dims_sanity();
    assert_eq!((s.dim_g2, s.dim_center, s.local), (5, 1, true));
}

// invariant forms

#[test]
fn invariance_examples() {
    let form = BilinearForm::new(Matrix::from_ints(&[&[1, 2], &[0, -3]])).unwrap();
    assert!(form.check_invariance(&LieAlgebra::abelian(2)).is_empty());
    let d4 = d(&[1]);
    assert!(d4.form().check_invariance(d4.algebra()).is_empty());
    let bad = BilinearForm::identity(4).check_invariance(d4.algebra());
    assert!(bad.iter().any(|v| v.triple == (1, 2, 3)));
}

#[test]
fn invariant_form_space_examples() {
    for n in 1..5 {
        let s = invariant_forms(&LieAlgebra::abelian(n));
        assert_eq!((s.dim(), s.sym_dim(), s.skew_dim()), (n * n, n * (n + 1) / 2, n * (n - 1) / 2));
    }
    for l in [&[1][..], &[1, 2], &[1, 1], &[1, 2, 3], &[1, 1, 2]] {
        let s = invariant_forms(d(l).algebra());
        assert_eq!((s.dim(), s.sym_dim(), s.skew_dim()), (2, 2, 0));
    }
    let h3 = invariant_forms(&heisenberg(1).unwrap());
    assert_eq!((h3.dim(), h3.sym_dim(), h3.skew_dim()), (4, 3, 1));
    // z lies in the radical of every invariant form on h3.
    let z = unit_vector(3, 2);
    for b in h3.basis() {
        for i in 0..3 {
            assert_eq!(b.eval(&z, &unit_vector(3, i)), int(0));
        }
    }
}

#[test]
fn metric_dimension_examples() {
    assert_eq!(metric_dimension(d(&[1]).algebra()), 2);
    assert_eq!(metric_dimension(&LieAlgebra::abelian(3)), 9);
    assert_eq!(metric_dimension(&su_model(2).unwrap().to_lie_algebra()), 1);
}

#[test]
fn nondegenerate_search_examples() {
    let f = invariant_forms(d(&[1]).algebra()).find_nondegenerate_symmetric().unwrap();
    let g = f.gram();
    assert_eq!(f, quadlie::constructions::oscillator_form(1, &g[(0, 0)], &g[(0, 3)]));
    assert_ne!(g[(0, 3)], int(0));
    assert!(invariant_forms(&heisenberg(1).unwrap()).find_nondegenerate_symmetric().is_none());
    let f = invariant_forms(&LieAlgebra::abelian(2)).find_nondegenerate_symmetric().unwrap();
    assert!(f.is_nondegenerate() && f.is_symmetric());
}

#[test]
fn orthogonal_complement_examples() {
    let d4 = d(&[1]);
    let g2 = d4.algebra().derived_algebra();
    assert_eq!(d4.form().orthogonal_complement(&g2).unwrap(), Subspace::coordinate(4, &[3]));
    assert!(d4.form().orthogonal_complement(&Subspace::full(4)).unwrap().is_zero());
    let d6 = d(&[1, 1]);
    let z = d6.algebra().center();
    assert_eq!(d6.form().orthogonal_complement(&z).unwrap(), d6.algebra().derived_algebra());
}

#[test]
fn delta_map_examples() {
    let d4 = d(&[1]);
    let psi = d4.form().delta_map(d4.algebra()).unwrap();
    assert!(psi.bijective && psi.is_module_map());
    let a = LieAlgebra::abelian(3);
    let b = BilinearForm::new(Matrix::from_ints(&[&[1, 5, 0], &[0, 0, 0], &[2, 0, 7]])).unwrap();
    assert!(b.delta_map(&a).unwrap().is_module_map());
    let h3 = heisenberg(1).unwrap();
    for b in invariant_forms(&h3).basis() {
        assert!(!b.delta_map(&h3).unwrap().bijective);
    }
}

// derivation engine

#[test]
fn derivation_examples() {
    assert_eq!(derivations(&LieAlgebra::abelian(3)).dim(), 9);
    assert_eq!(derivations(&heisenberg(1).unwrap()).dim(), 6);
    assert_eq!(derivations(d(&[1]).algebra()).dim(), 5);
    for (m, dim) in [(1, 6), (2, 15), (3, 28)] {
        let c = heisenberg_derivation_shape_check(m).unwrap();
        assert!(c.matches());
        assert_eq!(c.solver_dim, dim);
    }
}

#[test]
fn inner_derivation_examples() {
    assert_eq!(inner_derivations(&LieAlgebra::abelian(3)).dim(), 0);
    assert_eq!(inner_derivations(d(&[1]).algebra()).dim(), 3);
    for l in [&[1][..], &[1, 2], &[1, 1, 2]] {
        let o = d(l);
        let m = o.m();
        let inner = inner_derivations(o.algebra());
        assert_eq!(inner.dim(), 2 * m + 1);
        let sq = inner.derived();
        assert_eq!(sq.dim(), 2 * m);
        assert!(sq.is_abelian());
        let ads: Vec<Matrix> = o.v_indices().map(|i| o.algebra().ad(i)).collect();
        assert_eq!(sq, quadlie::derivations::MatrixLieAlgebra::span(2 * m + 2, &ads).unwrap());
    }
}

#[test]
fn skew_derivation_examples() {
    let d4 = d(&[1]);
    let s = skew_derivations(d4.algebra(), d4.form()).unwrap();
    assert_eq!(s.dim(), 3);
    assert_eq!(s, inner_derivations(d4.algebra()));
    let v2 = skew_derivations(&LieAlgebra::abelian(2), &BilinearForm::identity(2)).unwrap();
    assert_eq!(v2.dim(), 1);
    assert!(v2.contains(&Matrix::from_ints(&[&[0, -1], &[1, 0]])));
    let d6 = d(&[1, 1]);
    assert_eq!(skew_derivations(d6.algebra(), d6.form()).unwrap().dim(), 8);
}

#[test]
fn killing_examples() {
    let a = LieAlgebra::abelian(3);
    assert!(killing_form(&a).gram().is_zero());
    assert!(!a.is_semisimple() && a.is_reductive());
    let d4 = d(&[1]);
    let s = skew_derivations(d4.algebra(), d4.form()).unwrap();
    assert!(!s.is_abelian());
    assert!(!s.is_reductive());
    let (_, u) = quadlie::constructions::unitary_part(2).unwrap();
    let s2 = u.derived();
    assert_eq!(s2.dim(), 3);
    assert!(s2.is_semisimple());
}

#[test]
fn class_examples() {
    let c = oscillator_class_check(&ints(&[1, 2])).unwrap();
    assert_eq!(c.predicted, OscillatorClass::OI);
    assert!(c.stabilizer.abelian && c.consistent());
    let c = oscillator_class_check(&ints(&[1, 1])).unwrap();
    assert_eq!(c.predicted, OscillatorClass::OII);
    assert_eq!(c.stabilizer.derived_dim, 3);
    assert!(c.stabilizer.derived_semisimple && c.consistent());
    let c = oscillator_class_check(&ints(&[1, 1, 2])).unwrap();
    assert_eq!(c.predicted, OscillatorClass::OIII);
    assert!(!c.stabilizer.abelian && c.stabilizer.reductive && c.consistent());
    // The full skew-derivation algebra is neither abelian nor reductive.
    assert!(!c.full.abelian && !c.full.reductive);
}

#[test]
fn characterization_examples() {
    let d4 = d(&[1]);
    let ad_delta = d4.algebra().ad(0);
    assert!(verify_oscillator_derivation_characterization(&d4, &ad_delta).unwrap().holds());
    let d012 = Matrix::diagonal(&ints(&[0, 1, 1, 2]));
    assert!(verify_oscillator_derivation_characterization(&d4, &d012).unwrap().holds());
    assert!(derivations(d4.algebra()).contains(&d012));
    let e12 = Matrix::unit(4, 0, 1);
    assert!(!verify_oscillator_derivation_characterization(&d4, &e12).unwrap().holds());
    assert!(!derivations(d4.algebra()).contains(&e12));
}

// constructions

#[test]
fn heisenberg_examples() {
    assert!(heisenberg(0).is_err());
    let h5 = heisenberg(2).unwrap();
    assert_eq!(h5.dim(), 5);
    let nonzero: Vec<(usize, usize)> = h5.brackets().iter().map(|(i, j, _)| (*i, *j)).collect();
    assert_eq!(nonzero, vec![(0, 2), (1, 3)]);
    assert_eq!(h5.structure(0, 2), &ints(&[0, 0, 0, 0, 1])[..]);
}

#[test]
fn oscillator_signatures() {
    for m in 1..4 {
        let o = oscillator(&OscillatorSpec::uniform(m).unwrap()).unwrap();
        assert_eq!(o.form().signature().unwrap(), (2 * m + 1, 1));
        let g2 = o.algebra().derived_algebra();
        assert!(o.algebra().subalgebra(&g2).unwrap().is_heisenberg_type());
    }
}

#[test]
fn decomposability_examples() {
    let g = d(&[1]).algebra().clone();
    for hom in [g.ad(0), Matrix::zeros(4, 4), g.ad(1)] {
        let r = d4_skew_extension_decomposability(&hom).unwrap();
        assert!(r.decomposable());
        let w = r.witness.unwrap();
        let c = r.complement.unwrap();
        let ext = r.extension.metric.algebra();
        assert!(ext.is_ideal(&c).unwrap().is_ideal);
        assert_eq!(w.dim() + c.dim(), 6);
        assert!(w.intersection(&c).unwrap().is_zero());
    }
}
