use homhopf::corpus::*;
use homhopf::exactlin::{Field, Identity, LinearMap, Scalar};
use homhopf::homcore::*;
use proptest::prelude::*;

fn q() -> Field {
    Field::Rational
}

fn h4() -> HomHopf {
    sweedler_h4_hom(q())
}

fn classical_corpus() -> Vec<HomHopf> {
    vec![sweedler_h4_classical(q()), cyclic_group_algebra(q(), 2), cyclic_group_algebra(q(), 4)]
}

#[test]
fn h4_passes_every_axiom() {
    let h = h4();
    assert!(check_hom_algebra(h.bialgebra().algebra()).passed);
    assert!(check_hom_coalgebra(h.bialgebra().coalgebra()).passed);
    assert!(check_hom_bialgebra(h.bialgebra()).passed);
    assert!(check_antipode(&h).passed);
    assert!(check_hom_hopf(&h).passed);
}

#[test]
fn h4_tables_as_printed() {
    let h = h4();
    let b = h.bialgebra();
    let s = b.space();
    let e = |n: &str| {
        let mut v = vec![q().zero(); 4];
        v[s.index_of(n).unwrap()] = q().one();
        v
    };
    let neg = |v: Vec<Scalar>| v.into_iter().map(|x| -x).collect::<Vec<_>>();
    assert_eq!(b.algebra().multiply(&e("1"), &e("x")), neg(e("x")));
    assert_eq!(b.algebra().multiply(&e("g"), &e("x")), e("gx"));
    assert_eq!(b.algebra().multiply(&e("x"), &e("g")), neg(e("gx")));
    // Δ(x) = −x⊗g − 1⊗x
    let dx = b.comult().column(s.index_of("x").unwrap());
    let mut want = vec![q().zero(); 16];
    want[2 * 4 + 1] = q().int(-1);
    want[2] = q().int(-1);
    assert_eq!(dx, want);
    assert_eq!(h.antipode().column(2), neg(e("gx")));
    assert!(b.alpha().power(2).unwrap().is_identity());
}

#[test]
fn classical_algebras_pass_with_identity_structure_map() {
    for h in classical_corpus() {
        assert!(check_hom_hopf(&h).passed);
    }
    assert!(check_hom_algebra(&dual_numbers_algebra(q())).passed);
    assert!(check_hom_coalgebra(&dual_numbers_coalgebra(q())).passed);
}

#[test]
fn twisted_table_with_identity_structure_map_fails_a_unit_law() {
    let b = h4().bialgebra().clone();
    let id = LinearMap::identity(q(), b.space());
    let broken = b.algebra().with_alpha(id).unwrap();
    let r = check_hom_algebra(&broken);
    assert!(!r.passed);
    let unit = r.parts.iter().find(|p| p.axiom_id.starts_with("unit-") && !p.passed).expect("a unit law fails");
    let w = unit.witness.as_ref().unwrap();
    assert_eq!(w.tuple, vec!["x".to_string()]);
    assert_eq!(w.lhs, vec![q().zero(), q().zero(), q().int(-1), q().zero()]);
    assert_eq!(w.rhs, vec![q().zero(), q().zero(), q().one(), q().zero()]);
}

#[test]
fn classical_comultiplication_with_twisting_structure_map_fails_counit() {
    let c = sweedler_h4_classical(q()).bialgebra().coalgebra().clone();
    let broken = c.with_gamma(h4_twist(q())).unwrap();
    let r = check_hom_coalgebra(&broken);
    assert!(!r.passed);
    let counit = r.parts.iter().find(|p| p.axiom_id.starts_with("counit-") && !p.passed).expect("a counit law fails");
    assert_eq!(counit.witness.as_ref().unwrap().tuple, vec!["x".to_string()]);
}

#[test]
fn ground_field_is_a_bialgebra() {
    let k = cyclic_group_algebra(q(), 1);
    assert_eq!(k.bialgebra().dim(), 1);
    assert!(check_hom_hopf(&k).passed);
}

#[test]
fn corrupted_comultiplication_of_g_fails_multiplicativity() {
    let b = h4().bialgebra().clone();
    let s = b.space();
    let g = s.index_of("g").unwrap();
    let mut cols: Vec<Vec<Scalar>> = (0..4).map(|c| b.comult().column(c)).collect();
    cols[g] = vec![q().zero(); 16];
    cols[g][g * 4] = q().one();
    let comult = LinearMap::from_columns(q(), s, &s.tensor(s), cols).unwrap();
    let broken = HomBialgebra::new(b.algebra().clone(), b.coalgebra().with_comult(comult).unwrap()).unwrap();
    let r = check_hom_bialgebra(&broken);
    assert!(!r.passed);
    let mult = r.find("comult-multiplicative").unwrap();
    assert!(!mult.passed);
}

#[test]
fn wrong_antipode_fails_at_x() {
    let h = h4();
    let s = h.antipode().with_entry(3, 2, q().one());
    let broken = h.with_antipode(s).unwrap();
    let r = check_antipode(&broken);
    assert!(!r.passed);
    assert_eq!(r.witness.as_ref().unwrap().tuple, vec!["x".to_string()]);
    let c2 = cyclic_group_algebra(q(), 2);
    assert!(c2.antipode().is_identity());
    assert!(check_antipode(&c2).passed);
}

#[test]
fn twist_of_classical_h4_is_the_hom_h4() {
    let t = yau_twist(&sweedler_h4_classical(q()), &h4_twist(q())).unwrap();
    assert_eq!(t, h4());
}

#[test]
fn twist_by_identity_changes_nothing() {
    for h in classical_corpus() {
        let id = LinearMap::identity(q(), h.bialgebra().space());
        assert_eq!(yau_twist(&h, &id).unwrap(), h);
    }
}

#[test]
fn twist_of_c4_by_inversion_passes() {
    let t = yau_twist(&cyclic_group_algebra(q(), 4), &c4_inversion(q())).unwrap();
    assert!(check_hom_hopf(&t).passed);
    assert_eq!(t.bialgebra().alpha(), &c4_inversion(q()));
}

#[test]
fn twist_rejects_bad_input() {
    assert!(matches!(yau_twist(&h4(), &h4_twist(q())), Err(TwistError::NotClassical)));
    let c = sweedler_h4_classical(q());
    let s = c.bialgebra().space();
    let not_auto = LinearMap::diagonal(q(), s, &[1, 1, 1, -1]);
    assert!(matches!(yau_twist(&c, &not_auto), Err(TwistError::NotAutomorphism(_))));
    let singular = LinearMap::diagonal(q(), s, &[1, 1, 0, 0]);
    assert!(matches!(yau_twist(&c, &singular), Err(TwistError::Singular)));
}

#[test]
fn structure_maps_must_be_invertible() {
    let a = dual_numbers_algebra(q());
    let singular = LinearMap::diagonal(q(), a.space(), &[1, 0]);
    assert!(matches!(a.with_alpha(singular), Err(StructureError::NotInvertible(_))));
}

/// Associativity and unit laws with no structure map, written as loops.
fn classical_algebra_ok(a: &HomAlgebra) -> bool {
    let n = a.dim();
    let e = |i: usize| {
        let mut v = vec![q().zero(); n];
        v[i] = q().one();
        v
    };
    let one = a.unit_vector();
    (0..n).all(|i| a.multiply(&one, &e(i)) == e(i) && a.multiply(&e(i), &one) == e(i))
        && (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| a.multiply(&a.multiply(&e(i), &e(j)), &e(k)) == a.multiply(&e(i), &a.multiply(&e(j), &e(k)))))
        })
}

fn every_identity(h: &HomHopf) -> Vec<Identity> {
    hom_hopf_identities(h)
}

fn small() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=3).prop_map(|(n, d)| Field::Rational.ratio(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classical_checker_agrees_with_loop_oracle(which in 0usize..3, i in 0usize..4, j in 0usize..4, k in 0usize..4, delta in -2i64..=2) {
        let h = &classical_corpus()[which];
        let a = h.bialgebra().algebra();
        let n = a.dim();
        let (i, j, k) = (i % n, j % n, k % n);
        let m = a.mult();
        let mutated = m.with_entry(k, i * n + j, m.entry(k, i * n + j) + &q().int(delta));
        let a = a.with_mult(mutated).unwrap();
        prop_assert_eq!(check_hom_algebra(&a).passed, classical_algebra_ok(&a));
    }

    #[test]
    fn basis_verdict_extends_to_arbitrary_vectors(which in 0usize..4, coords in prop::collection::vec(small(), 64)) {
        let mut corpus = classical_corpus();
        corpus.push(h4());
        let h = &corpus[which];
        for id in every_identity(h) {
            let (l, r) = (id.lhs_map(), id.rhs_map());
            let v: Vec<Scalar> = coords.iter().cycle().take(l.cols()).cloned().collect();
            prop_assert_eq!(l.apply(&v), r.apply(&v), "{}", id.id);
        }
    }

    #[test]
    fn witnesses_reevaluate_to_unequal_sides(row in 0usize..4, col in 0usize..16, delta in prop_oneof![Just(-1i64), Just(1), Just(2)]) {
        let h = h4();
        let b = h.bialgebra();
        let m = b.mult();
        let mutated = m.with_entry(row, col, m.entry(row, col) + &q().int(delta));
        let broken = HomHopf::new(HomBialgebra::new(b.algebra().with_mult(mutated).unwrap(), b.coalgebra().clone()).unwrap(), h.antipode().clone()).unwrap();
        let r = check_hom_hopf(&broken);
        prop_assert!(!r.passed);
        let ids = every_identity(&broken);
        for leaf in r.leaves().into_iter().filter(|l| !l.passed) {
            let w = leaf.witness.as_ref().unwrap();
            let (lhs, rhs) = reevaluate(&ids, w).unwrap();
            prop_assert_ne!(&lhs, &rhs);
            prop_assert_eq!((&lhs, &rhs), (&w.lhs, &w.rhs));
        }
    }
}

#[test]
fn twists_of_classical_corpus_pass() {
    for h in classical_corpus() {
        for phi in involutive_automorphisms(&h) {
            let t = yau_twist(&h, &phi).unwrap();
            assert!(check_hom_bialgebra(t.bialgebra()).passed);
            assert!(check_hom_hopf(&t).passed);
        }
    }
}

/// Permutations of the basis fixing the unit, together with the sign
/// changes of `H₄`'s nilpotent part, filtered down to those that twist.
fn involutive_automorphisms(h: &HomHopf) -> Vec<LinearMap> {
    let s = h.bialgebra().space().clone();
    let n = s.dim();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 1, &mut |p| {
        for signs in 0..(1u32 << n) {
            let phi = LinearMap::from_fn(q(), &s, &s, |r, c| {
                if r != p[c] {
                    q().zero()
                } else if signs >> c & 1 == 1 {
                    q().int(-1)
                } else {
                    q().one()
                }
            });
            if phi.compose(&phi).unwrap().is_identity() && yau_twist(h, &phi).is_ok() {
                out.push(phi);
            }
        }
    });
    out
}

fn permutations(v: &mut Vec<usize>, start: usize, f: &mut dyn FnMut(&[usize])) {
    if start >= v.len() {
        f(v);
        return;
    }
    for i in start..v.len() {
        v.swap(start, i);
        permutations(v, start + 1, f);
        v.swap(start, i);
    }
}

#[test]
fn involution_search_finds_the_known_twists() {
    let c = sweedler_h4_classical(q());
    let found = involutive_automorphisms(&c);
    assert!(found.contains(&h4_twist(q())));
    assert!(found.iter().any(LinearMap::is_identity));
    let c4 = cyclic_group_algebra(q(), 4);
    let found = involutive_automorphisms(&c4);
    assert_eq!(found.len(), 2);
    assert!(found.contains(&c4_inversion(q())));
    assert_eq!(involutive_automorphisms(&cyclic_group_algebra(q(), 2)).len(), 1);
}
