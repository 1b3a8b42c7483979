use proptest::prelude::*;

use tannakin_core::fixtures::{self, Fixture};
use tannakin_core::group::Subgroup;
use tannakin_core::linalg::{canonical_span, Matrix, Rational};
use tannakin_core::oracle::{oracle_hom, restrict};
use tannakin_core::quotient::QuotientCtx;
use tannakin_core::rep::{hom_space, RepObject};
use tannakin_core::twist::KummerCocycle;

fn small_fixtures() -> Vec<Fixture> {
    vec![fixtures::s3(), fixtures::c4(), fixtures::q8()]
}

fn pick<T>(xs: &[T], i: usize) -> &T {
    &xs[i % xs.len()]
}

/// Integer matrix with ones on the diagonal and entries above it: always
/// invertible over ℚ.
fn unitriangular(n: usize, above: &[i64]) -> Matrix {
    let mut m = Matrix::identity(n);
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            m[(i, j)] = Rational::from(above[k % above.len()]);
            k += 1;
        }
    }
    m
}

/// `x` in a different basis: `ρ'(g) = S ρ(g) S⁻¹`.
fn conjugated(x: &RepObject, s: &Matrix) -> RepObject {
    let s_inv = s.inverse().expect("unitriangular");
    let mats = x.group().elements().map(|g| &(s * x.matrix(g)) * &s_inv).collect();
    RepObject::from_element_matrices(x.group(), x.dim(), mats).expect("conjugate of a representation")
}

fn combination(basis: &[Matrix], coeffs: &[i64]) -> Matrix {
    let (r, c) = basis[0].shape();
    basis.iter().zip(coeffs.iter().cycle()).fold(Matrix::zeros(r, c), |acc, (b, &k)| &acc + &b.scale(&Rational::from(k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // The main path and the restriction oracle agree after a change of basis.
    #[test]
    fn oracle_agrees_in_any_basis(f in 0usize..3, i in 0usize..8, j in 0usize..8, above in prop::collection::vec(-3i64..=3, 1..6)) {
        let fx = pick(&small_fixtures(), f).clone();
        let (_, x) = pick(&fx.objects, i);
        let (_, y) = pick(&fx.objects, j);
        prop_assume!(x.dim() <= 8 && y.dim() <= 8);
        let x = conjugated(x, &unitriangular(x.dim(), &above));
        let q = QuotientCtx::new(&fx.subgroup).unwrap();
        let main = q.pre_quotient_hom(&x, y).unwrap();
        let other = oracle_hom(&restrict(&x, &fx.subgroup).unwrap(), &restrict(y, &fx.subgroup).unwrap()).unwrap();
        let len = x.dim() * y.dim();
        prop_assert_eq!(
            canonical_span(len, main.iter().map(Matrix::as_slice)),
            canonical_span(len, other.iter().map(Matrix::as_slice))
        );
    }

    // q(f ∘ g) = q f ∘ q g and q(f ⊗ g) = q f ⊗ q g on random G-morphisms.
    #[test]
    fn q_is_a_tensor_functor(i in 0usize..5, j in 0usize..5, k in 0usize..5, cf in prop::collection::vec(-2i64..=2, 1..4), cg in prop::collection::vec(-2i64..=2, 1..4)) {
        let fx = fixtures::s3();
        let q = QuotientCtx::new(&fx.subgroup).unwrap();
        let (x, y, z) = (&pick(&fx.objects, i).1, &pick(&fx.objects, j).1, &pick(&fx.objects, k).1);
        let gs = hom_space(x, y).unwrap();
        let fs = hom_space(y, z).unwrap();
        prop_assume!(!gs.is_empty() && !fs.is_empty());
        let g = combination(&gs.iter().map(|m| m.matrix().clone()).collect::<Vec<_>>(), &cg);
        let f = combination(&fs.iter().map(|m| m.matrix().clone()).collect::<Vec<_>>(), &cf);
        let g = tannakin_core::rep::RepMorphism::new(x, y, g).unwrap();
        let f = tannakin_core::rep::RepMorphism::new(y, z, f).unwrap();
        let lhs = q.q_morphism(&f.compose(&g).unwrap()).unwrap();
        let rhs = q.q_morphism(&f).unwrap().compose(&q.q_morphism(&g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        if x.dim() * y.dim() <= 16 {
            let t = q.q_morphism(&f.tensor(&g).unwrap()).unwrap();
            let u = q.q_morphism(&f).unwrap().tensor(&q.q_morphism(&g).unwrap()).unwrap();
            prop_assert_eq!(t.matrix(), u.matrix());
        }
    }

    // Sums of the orthogonal idempotents e_G, e_H − e_G, 1 − e_H split.
    #[test]
    fn orthogonal_idempotents_split(f in 0usize..3, i in 0usize..8, mask in 0u8..8) {
        let fx = pick(&small_fixtures(), f).clone();
        let (_, x) = pick(&fx.objects, i);
        let q = QuotientCtx::new(&fx.subgroup).unwrap();
        let n = x.dim();
        let e_g = x.reynolds(&Subgroup::whole(&fx.group)).unwrap();
        let e_h = x.reynolds(&fx.subgroup).unwrap();
        let parts = [e_g.clone(), &e_h - &e_g, &Matrix::identity(n) - &e_h];
        let u = parts.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).fold(Matrix::zeros(n, n), |acc, (_, p)| &acc + p);
        let a = q.q_object(x).unwrap();
        let s = q.split_all_idempotents(&a, &u).unwrap();
        prop_assert_eq!(s.image.object.dim() + s.complement.object.dim(), n);
        let round = s.image.inclusion.compose(&s.image.projection).unwrap();
        prop_assert_eq!(round.matrix(), &u);
        prop_assert!(s.direct_sum_witness().is_ok());
        // e_H is central in End_H(X), so nothing maps across its splitting.
        if mask == 0b011 || mask == 0b100 {
            prop_assert!(q.q_hom(&s.image.object, &s.complement.object).unwrap().is_empty());
        }
    }

    // End_Q of a split summand has a nondegenerate trace form.
    #[test]
    fn summands_are_semisimple(f in 0usize..3, i in 0usize..8) {
        let fx = pick(&small_fixtures(), f).clone();
        let (_, x) = pick(&fx.objects, i);
        let q = QuotientCtx::new(&fx.subgroup).unwrap();
        let a = q.q_object(x).unwrap();
        let s = q.split_all_idempotents(&a, &x.reynolds(&fx.subgroup).unwrap()).unwrap();
        for part in [&s.image.object, &s.complement.object] {
            prop_assert!(q.trace_form(part).unwrap().nondegenerate());
        }
    }

    #[test]
    fn cocycle_identity_for_any_class(n in 1usize..16, p in -20i64..=20, d in 1i64..=9) {
        prop_assume!(p != 0);
        let c = KummerCocycle::new(n, Rational::new(p, d).unwrap()).unwrap();
        prop_assert!(c.satisfies_cocycle_identity());
    }
}

#[test]
fn end_of_unit_is_one_dimensional() {
    for fx in fixtures::all() {
        let q = QuotientCtx::new(&fx.subgroup).unwrap();
        assert_eq!(q.q_end(&q.q_unit()).unwrap().len(), 1, "{}", fx.id);
    }
}

#[test]
fn trivial_subgroup_gives_all_linear_maps() {
    let fx = fixtures::s3();
    let q = QuotientCtx::new(&Subgroup::trivial(&fx.group)).unwrap();
    for (_, x, _, y) in fx.pairs() {
        assert_eq!(q.pre_quotient_hom(x, y).unwrap().len(), x.dim() * y.dim());
    }
}

#[test]
fn whole_group_gives_g_intertwiners() {
    let fx = fixtures::c4();
    let q = QuotientCtx::new(&Subgroup::whole(&fx.group)).unwrap();
    for (_, x, _, y) in fx.pairs() {
        assert_eq!(q.pre_quotient_hom(x, y).unwrap().len(), hom_space(x, y).unwrap().len());
    }
}
