use homhopf::convact::*;
use homhopf::corpus::*;
use homhopf::exactlin::{Field, LinearMap, Scalar};
use homhopf::homcore::{HomAlgebra, HomCoalgebra, HomHopf};
use proptest::prelude::*;

fn q() -> Field {
    Field::Rational
}

fn hopf_corpus() -> Vec<HomHopf> {
    entries()
        .into_iter()
        .filter_map(|e| match e.payload {
            Payload::Hopf(h) => Some(h),
            _ => None,
        })
        .collect()
}

/// `Σ_{j,k} d[i][j][k] · m(f(e_j), g(e_k))`, expanded basis vector by basis
/// vector without going through the tensor kernel.
fn double_sum(f: &LinearMap, g: &LinearMap, c: &HomCoalgebra, a: &HomAlgebra) -> LinearMap {
    let d = c.comult_table();
    let (dc, da) = (c.dim(), a.dim());
    let cols = (0..dc)
        .map(|i| {
            let mut out = vec![q().zero(); da];
            for j in 0..dc {
                for k in 0..dc {
                    if d[i][j][k].is_zero() {
                        continue;
                    }
                    let prod = a.multiply(&f.column(j), &g.column(k));
                    for (o, p) in out.iter_mut().zip(prod) {
                        *o += &(&d[i][j][k] * &p);
                    }
                }
            }
            out
        })
        .collect();
    LinearMap::from_columns(q(), c.space(), a.space(), cols).unwrap()
}

#[test]
fn example24_action_is_a_weak_module_algebra() {
    let act = example24_action(q());
    assert!(check_weak_module_algebra(&act).passed);
    let t = act.table();
    assert_eq!(t[1][1], vec![q().zero(), q().one()]);
    assert!(t[2][1].iter().all(Scalar::is_zero) && t[3][1].iter().all(Scalar::is_zero));
}

#[test]
fn trivial_actions_pass() {
    let h = sweedler_h4_hom(q());
    for a in [dual_numbers_algebra(q()), ground_algebra(q()), h.bialgebra().algebra().clone()] {
        let act = ModuleAction::trivial(h.bialgebra(), &a);
        assert!(check_weak_module_algebra(&act).passed);
        assert!(check_hom_module(&act).passed);
    }
}

#[test]
fn x_acting_nontrivially_breaks_the_module_algebra_law() {
    let act = example24_action(q());
    let mut t = act.table();
    t[2][1][1] = q().one();
    let bad = ModuleAction::from_table(act.acting(), act.target(), &t).unwrap();
    let r = check_weak_module_algebra(&bad);
    assert!(!r.passed);
    let w = r.witness.unwrap();
    assert_eq!(w.axiom_id, "action-multiplicative");
    assert_eq!(w.tuple, vec!["x".to_string(), "1".to_string(), "y".to_string()]);
    assert_ne!(w.lhs, w.rhs);
}

#[test]
fn regular_action_is_a_hom_module() {
    for h in hopf_corpus() {
        assert!(check_hom_module(&ModuleAction::regular(h.bialgebra())).passed);
    }
}

/// The Ex 2.4 action with `β = id` is a Hom-module exactly when `α` acts
/// trivially on what survives, which it does: only `1` and `g` act.
#[test]
fn example24_action_hom_module_verdict() {
    assert!(check_hom_module(&example24_action(q())).passed);
}

#[test]
fn trivial_coaction_passes_and_needs_the_inverse_structure_map() {
    let h = sweedler_h4_hom(q());
    for c in [dual_numbers_coalgebra(q()), ground_coalgebra(q()), h.bialgebra().coalgebra().clone()] {
        assert!(check_comodule_coalgebra(&Coaction::trivial(h.bialgebra(), &c)).passed);
    }
    // y ↦ 2y twists the primitive coalgebra into one whose structure map is
    // not an involution, so using it in place of its inverse is visible.
    let dual = dual_numbers_coalgebra(q());
    let gamma = LinearMap::diagonal(q(), dual.space(), &[1, 2]);
    let inv = gamma.inverse().unwrap();
    let c = dual.with_comult(inv.tensor(&inv).compose(dual.comult()).unwrap()).unwrap().with_gamma(gamma.clone()).unwrap();
    assert!(homhopf::homcore::check_hom_coalgebra(&c).passed);
    assert!(check_comodule_coalgebra(&Coaction::trivial(h.bialgebra(), &c)).passed);
    let wrong = h.bialgebra().unit().tensor(&gamma);
    let co = Coaction::new(h.bialgebra(), &c, wrong).unwrap();
    let r = check_comodule_coalgebra(&co);
    assert!(!r.passed);
    let counit = r.find("comodule-counit").unwrap();
    assert!(!counit.passed);
    assert_eq!(counit.witness.as_ref().unwrap().tuple, vec!["y".to_string()]);
}

#[test]
fn regular_coaction_is_a_comodule_but_not_a_comodule_coalgebra() {
    for h in hopf_corpus() {
        let r = check_comodule_coalgebra(&Coaction::regular(h.bialgebra()));
        assert!(r.find("left-comodule").unwrap().passed);
        let compat = r.find("coalgebra-compatibility").unwrap();
        assert!(!compat.passed);
        assert!(!compat.find("coaction-counit").unwrap().passed);
    }
    let k = cyclic_group_algebra(q(), 1);
    assert!(check_comodule_coalgebra(&Coaction::regular(k.bialgebra())).passed);
}

#[test]
fn convolution_examples() {
    let h = sweedler_h4_hom(q());
    let b = h.bialgebra();
    let id = LinearMap::identity(q(), b.space());
    let ue = convolution_unit(b.coalgebra(), b.algebra());
    assert_eq!(convolve(h.antipode(), &id, b.coalgebra(), b.algebra()).unwrap(), ue);
    assert_eq!(convolve(&id, h.antipode(), b.coalgebra(), b.algebra()).unwrap(), ue);
    let c = sweedler_h4_classical(q());
    let cb = c.bialgebra();
    let cue = convolution_unit(cb.coalgebra(), cb.algebra());
    assert_eq!(convolve(&cue, &cue, cb.coalgebra(), cb.algebra()).unwrap(), cue);
    let small = LinearMap::identity(q(), dual_numbers_algebra(q()).space());
    assert_eq!(convolve(&small, &id, b.coalgebra(), b.algebra()), Err(ConvError::Shape));
}

#[test]
fn convolution_matches_double_sum() {
    for h in hopf_corpus() {
        let b = h.bialgebra();
        let id = LinearMap::identity(q(), b.space());
        for (f, g) in [(&id, &id), (h.antipode(), &id), (b.alpha(), h.antipode())] {
            assert_eq!(convolve(f, g, b.coalgebra(), b.algebra()).unwrap(), double_sum(f, g, b.coalgebra(), b.algebra()));
        }
    }
}

#[test]
fn inverse_of_identity_is_the_antipode_uniquely() {
    for h in hopf_corpus() {
        let b = h.bialgebra();
        let id = LinearMap::identity(q(), b.space());
        let inv = convolution_inverse_detailed(&id, b.coalgebra(), b.algebra()).unwrap();
        assert_eq!(&inv.map, h.antipode());
        assert_eq!(inv.nullity, 0);
    }
}

#[test]
fn inverse_of_the_unit_is_the_unit() {
    let h = sweedler_h4_hom(q());
    let b = h.bialgebra();
    let ue = convolution_unit(b.coalgebra(), b.algebra());
    assert_eq!(convolution_inverse(&ue, b.coalgebra(), b.algebra()).unwrap(), ue);
}

#[test]
fn zero_map_has_no_inverse() {
    let h = sweedler_h4_hom(q());
    let b = h.bialgebra();
    let zero = LinearMap::zero(q(), b.space(), b.space());
    assert!(matches!(convolution_inverse(&zero, b.coalgebra(), b.algebra()), Err(ConvError::NotInvertible { .. })));
}

#[test]
fn cocycle_inverses() {
    let h = sweedler_h4_hom(q());
    let trivial = Cocycle::trivial(h.bialgebra(), &dual_numbers_algebra(q()));
    let inv = cocycle_inverse(&trivial).unwrap();
    assert_eq!(inv.inverse().unwrap(), trivial.sigma());
    assert!(check_cocycle_inverse(&inv).passed);

    let s0 = example24_sigma(q(), &q().zero(), SigmaLayout::default(), SigmaReading::default()).unwrap();
    let inv0 = cocycle_inverse(&s0).unwrap();
    assert_eq!(inv0.inverse().unwrap(), s0.sigma());
    assert!(check_cocycle_inverse(&inv0).passed);

    for n in [1, 2, -3] {
        let s = example24_sigma(q(), &q().int(n), SigmaLayout::default(), SigmaReading::default()).unwrap();
        let inv = cocycle_inverse(&s).unwrap();
        assert!(check_cocycle_inverse(&inv).passed);
        let dc = s.domain_coalgebra();
        let ue = convolution_unit(&dc, s.target());
        assert_eq!(convolve(s.sigma(), inv.inverse().unwrap(), &dc, s.target()).unwrap(), ue);
        assert_eq!(convolve(inv.inverse().unwrap(), s.sigma(), &dc, s.target()).unwrap(), ue);
    }
}

#[test]
fn wrong_stored_inverse_is_reported() {
    let s = example24_sigma(q(), &q().int(2), SigmaLayout::default(), SigmaReading::default()).unwrap();
    let r = check_cocycle_inverse(&s.with_inverse(s.sigma().clone()).unwrap());
    assert!(!r.passed);
}

#[test]
fn characteristic_two_is_rejected() {
    let f2 = Field::prime(2).unwrap();
    assert_eq!(example24_sigma(f2, &f2.one(), SigmaLayout::default(), SigmaReading::default()).err(), Some(CorpusError::CharTwo));
}

fn small() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=2).prop_map(|(n, d)| Field::Rational.ratio(n, d).unwrap())
}

fn map_from(v: &[Scalar], like: &LinearMap) -> LinearMap {
    let mut it = v.iter().cycle();
    LinearMap::from_fn(q(), like.domain(), like.codomain(), |_, _| it.next().unwrap().clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn convolution_is_bilinear(f1 in prop::collection::vec(small(), 16), f2 in prop::collection::vec(small(), 16),
                               g in prop::collection::vec(small(), 16), s in small(), t in small()) {
        let h = sweedler_h4_hom(q());
        let b = h.bialgebra();
        let like = b.alpha();
        let (f1, f2, g) = (map_from(&f1, like), map_from(&f2, like), map_from(&g, like));
        let conv = |x: &LinearMap, y: &LinearMap| convolve(x, y, b.coalgebra(), b.algebra()).unwrap();
        let combo = f1.scale(&s).add(&f2.scale(&t)).unwrap();
        let lhs = conv(&combo, &g);
        let rhs = conv(&f1, &g).scale(&s).add(&conv(&f2, &g).scale(&t)).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = conv(&g, &combo);
        let rhs = conv(&g, &f1).scale(&s).add(&conv(&g, &f2).scale(&t)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn computed_inverses_are_two_sided(v in prop::collection::vec(small(), 16)) {
        let h = sweedler_h4_hom(q());
        let b = h.bialgebra();
        let f = map_from(&v, b.alpha());
        if let Ok(g) = convolution_inverse(&f, b.coalgebra(), b.algebra()) {
            let ue = convolution_unit(b.coalgebra(), b.algebra());
            prop_assert_eq!(convolve(&f, &g, b.coalgebra(), b.algebra()).unwrap(), ue.clone());
            prop_assert_eq!(convolve(&g, &f, b.coalgebra(), b.algebra()).unwrap(), ue);
        }
    }
}
