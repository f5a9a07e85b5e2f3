//! Property tests for the algebraic invariants the library relies on.

use proptest::prelude::*;
use quadlie::constructions::{
    double_extension, oscillator, uniform_rescaling, ExtensionInput, Oscillator, OscillatorSpec,
};
use quadlie::derivations::{
    derivations, is_derivation, skew_derivations, verify_oscillator_derivation_characterization,
};
use quadlie::linalg::{format_rational, frac, parse_rational, signature, Matrix, Rational, Subspace};
use quadlie::{invariant_forms, BilinearForm, LieAlgebra};

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn small_int() -> impl Strategy<Value = Rational> {
    (-2i64..=2).prop_map(|p| frac(p, 1))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(small_int(), rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |r, c| v[r * cols + c].clone()))
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), n)
}

/// Ascending positive λ with 1 to 3 entries.
fn lambda() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((1i64..=4, 1i64..=2), 1..=3).prop_map(|v| {
        let mut l: Vec<Rational> = v.into_iter().map(|(p, q)| frac(p, q)).collect();
        l.sort();
        l
    })
}

fn oscillator_with(lambda: Vec<Rational>, t: Rational, s: Rational) -> Oscillator {
    oscillator(&OscillatorSpec::new(lambda, t, s).unwrap()).unwrap()
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != frac(0, 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_text_round_trip(r in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn rref_is_idempotent_and_keeps_the_kernel(a in matrix(3, 4)) {
        let r = a.rref();
        prop_assert_eq!(r.rref(), r.clone());
        prop_assert_eq!(r.null_space(), a.null_space());
        prop_assert_eq!(a.null_space().dim() + a.rank(), 4);
        for v in a.null_space().basis() {
            prop_assert!(a.mul_vec(v).iter().all(|x| *x == frac(0, 1)));
        }
    }

    #[test]
    fn subspace_dimension_formula(a in matrix(2, 4), b in matrix(2, 4)) {
        let sa = Subspace::span(4, a.to_rows());
        let sb = Subspace::span(4, b.to_rows());
        let sum = sa.sum(&sb).unwrap();
        let meet = sa.intersection(&sb).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), sa.dim() + sb.dim());
        prop_assert!(meet.is_subspace_of(&sa).unwrap() && meet.is_subspace_of(&sb).unwrap());
        prop_assert_eq!(sa.annihilator().annihilator(), sa);
    }

    #[test]
    fn signature_is_a_congruence_invariant(g in matrix(4, 4), s in matrix(4, 4)) {
        prop_assume!(s.is_invertible());
        let sym = &g + &g.transpose();
        let moved = &(&s.transpose() * &sym) * &s;
        prop_assert_eq!(signature(&moved).unwrap(), signature(&sym).unwrap());
    }

    #[test]
    fn delta_round_trip_on_oscillator_forms(l in lambda(), c in vector(2)) {
        let o = oscillator_with(l, frac(0, 1), frac(1, 1));
        let g = o.algebra();
        let space = invariant_forms(g);
        prop_assert_eq!(space.dim(), 2);
        let b = BilinearForm::new(Matrix::from_flat(g.dim(), &space.space().combine(&c))).unwrap();
        let psi = b.delta_map(g).unwrap();
        prop_assert!(psi.is_module_map());
        prop_assert_eq!(psi.reconstruct(), b.clone());
        prop_assert_eq!(psi.bijective, b.is_nondegenerate());
    }

    #[test]
    fn perp_lattice_on_oscillator_ideals(
        l in lambda(),
        t in rational(),
        s in nonzero_rational(),
        u in vector(8),
        v in vector(8),
    ) {
        let o = oscillator_with(l, t, s);
        let g = o.algebra();
        let n = g.dim();
        let form = o.form();
        prop_assert_eq!(form.orthogonal_complement(&g.derived_algebra()).unwrap(), g.center());
        // Ideals generated by vectors inside g² = V ⊕ Kδ*.
        let restrict = |w: &[Rational]| {
            let mut x = vec![frac(0, 1); n];
            x[1..n].clone_from_slice(&w[..n - 1]);
            x
        };
        let i = g.ideal_generated(&Subspace::span(n, [restrict(&u)])).unwrap();
        let j = g.ideal_generated(&Subspace::span(n, [restrict(&v)])).unwrap();
        let (pi, pj) = (form.orthogonal_complement(&i).unwrap(), form.orthogonal_complement(&j).unwrap());
        prop_assert!(g.is_ideal(&pi).unwrap().is_ideal);
        prop_assert_eq!(form.orthogonal_complement(&pi).unwrap(), i.clone());
        prop_assert_eq!(form.orthogonal_complement(&i.sum(&j).unwrap()).unwrap(), pi.intersection(&pj).unwrap());
        prop_assert_eq!(form.orthogonal_complement(&i.intersection(&j).unwrap()).unwrap(), pi.sum(&pj).unwrap());
    }

    #[test]
    fn derivation_criterion_matches_solver(l in lambda(), coeffs in vector(12), bump in (0usize..64, rational(), any::<bool>())) {
        let o = oscillator_with(l, frac(0, 1), frac(1, 1));
        let g = o.algebra();
        let n = g.dim();
        let der = derivations(g);
        let c: Vec<Rational> = (0..der.dim()).map(|k| coeffs[k % coeffs.len()].clone()).collect();
        let mut d = Matrix::from_flat(n, &der.subspace().combine(&c));
        if bump.2 {
            d[(bump.0 % n, (bump.0 / n) % n)] += bump.1;
        }
        let criterion = verify_oscillator_derivation_characterization(&o, &d).unwrap().holds();
        prop_assert_eq!(criterion, der.contains(&d));
        prop_assert_eq!(criterion, is_derivation(g, &d));
    }

    #[test]
    fn oscillator_bracket_formula(l in lambda(), x in vector(8), y in vector(8)) {
        let o = oscillator_with(l, frac(0, 1), frac(1, 1));
        let g = o.algebra();
        let n = g.dim();
        let (x, y) = (&x[..n], &y[..n]);
        let delta = o.skew_map();
        let du = delta.mul_vec(&x[1..n - 1]);
        let dv = delta.mul_vec(&y[1..n - 1]);
        let mut expected = vec![frac(0, 1); n];
        for i in 0..n - 2 {
            expected[i + 1] = &x[0] * &dv[i] - &y[0] * &du[i];
        }
        expected[n - 1] = du.iter().zip(&y[1..n - 1]).map(|(a, b)| a * b).sum();
        prop_assert_eq!(g.bracket(x, y), expected);
    }

    #[test]
    fn uniform_lambda_rescales_to_ones(m in 1usize..=3, mu in (1i64..=5, 1i64..=3)) {
        let mu = frac(mu.0, mu.1);
        let target = oscillator_with(vec![mu.clone(); m], frac(0, 1), frac(1, 1));
        let ones = oscillator(&OscillatorSpec::uniform(m).unwrap()).unwrap();
        let map = uniform_rescaling(&vec![mu; m]).unwrap();
        prop_assert!(map.is_invertible());
        prop_assert!(ones.algebra().is_homomorphism(target.algebra(), &map));
    }

    #[test]
    fn derivations_are_closed_under_commutators(l in lambda(), a in vector(12), b in vector(12)) {
        let o = oscillator_with(l, frac(0, 1), frac(1, 1));
        let g = o.algebra();
        let n = g.dim();
        let der = derivations(g);
        let pick = |v: &[Rational]| {
            let c: Vec<Rational> = (0..der.dim()).map(|k| v[k % v.len()].clone()).collect();
            Matrix::from_flat(n, &der.subspace().combine(&c))
        };
        prop_assert!(is_derivation(g, &pick(&a).commutator(&pick(&b))));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Valid inputs always give a metric Lie algebra: one random skew
    /// derivation, or two commuting ones from the abelian ideal spanned by
    /// `ad e_i`.
    #[test]
    fn double_extension_of_oscillators(l in lambda(), a in vector(16), b in vector(8), two in any::<bool>()) {
        let o = oscillator_with(l, frac(0, 1), frac(1, 1));
        let g = o.algebra();
        let n = g.dim();
        let hom = if two {
            let combo = |v: &[Rational]| {
                o.v_indices().fold(Matrix::zeros(n, n), |acc, i| &acc + &g.ad(i).scale(&v[i % v.len()]))
            };
            vec![combo(&a), combo(&b)]
        } else {
            let skew = skew_derivations(g, o.form()).unwrap();
            let c: Vec<Rational> = (0..skew.dim()).map(|k| a[k % a.len()].clone()).collect();
            vec![Matrix::from_flat(n, &skew.subspace().combine(&c))]
        };
        let input = ExtensionInput {
            base: o.metric().clone(),
            extender: LieAlgebra::abelian(hom.len()),
            hom,
        };
        let ext = double_extension(&input).unwrap();
        let h = ext.metric.algebra();
        prop_assert!(h.check_jacobi().is_empty());
        prop_assert!(ext.metric.form().check_invariance(h).is_empty());
        prop_assert!(ext.metric.form().is_nondegenerate());
        prop_assert_eq!(h.dim(), n + 2 * input.extender.dim());
    }
}
