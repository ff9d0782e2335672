use homhopf::constructions::*;
use homhopf::convact::*;
use homhopf::corpus::*;
use homhopf::exactlin::{Field, LinearMap, Scalar};
use homhopf::homcore::*;

fn q() -> Field {
    Field::Rational
}

fn grid() -> impl Iterator<Item = (i64, i64)> {
    (-2..=2).flat_map(|m| (-2..=2).map(move |k| (m, k)))
}

fn basis(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![q().zero(); n];
    v[i] = q().one();
    v
}

fn kron(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().flat_map(|a| v.iter().map(move |b| a * b)).collect()
}

fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a += &(c * x);
    }
}

/// `(a♯h)(b♯g) = a(α^m(h₁)·β⁻¹(b)) ♯ α(h₂)g`, summed over the comultiplication
/// table basis pair by basis pair.
fn smash_product_column(spec: &CrossedProductSpec, i: usize, p: usize, j: usize, qq: usize) -> Vec<Scalar> {
    let (a, h) = (spec.algebra(), spec.bialgebra());
    let (da, dh) = (a.dim(), h.dim());
    let d = h.coalgebra().comult_table();
    let am = h.alpha().power(spec.m()).unwrap();
    let bi = a.alpha().inverse().unwrap();
    let mut out = vec![q().zero(); da * dh];
    for r in 0..dh {
        for s in 0..dh {
            if d[p][r][s].is_zero() {
                continue;
            }
            let acted = spec.action().act().apply(&kron(&am.column(r), &bi.column(j)));
            let left = a.multiply(&basis(da, i), &acted);
            let right = h.algebra().multiply(&h.alpha().column(s), &basis(dh, qq));
            axpy(&mut out, &d[p][r][s], &kron(&left, &right));
        }
    }
    out
}

fn trivial_sigma_specs(m: i64, k: i64) -> Vec<CrossedProductSpec> {
    let h = sweedler_h4_hom(q());
    let ex = example24_action(q());
    let regular = ModuleAction::regular(h.bialgebra());
    [ex, regular]
        .into_iter()
        .map(|act| {
            let sigma = Cocycle::trivial(act.acting(), act.target());
            CrossedProductSpec::new(act, sigma, m, k).unwrap()
        })
        .collect()
}

#[test]
fn trivial_cocycle_gives_the_smash_product() {
    for (m, k) in grid() {
        for spec in trivial_sigma_specs(m, k) {
            let prod = crossed_product(&spec);
            let (da, dh) = (spec.algebra().dim(), spec.bialgebra().dim());
            let n = da * dh;
            for i in 0..da {
                for p in 0..dh {
                    for j in 0..da {
                        for qq in 0..dh {
                            let col = (i * dh + p) * n + j * dh + qq;
                            assert_eq!(prod.mult().column(col), smash_product_column(&spec, i, p, j, qq), "m={m} k={k}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn example24_crossed_product_is_a_hom_algebra() {
    let spec = example24_spec(q(), &q().one(), 0, -1).unwrap();
    assert!(check_crossed_cocycle_conditions(&spec).passed);
    let prod = crossed_product(&spec);
    assert_eq!(prod.dim(), 8);
    assert!(check_hom_algebra(&prod).passed);
    assert_eq!(prod.unit_vector(), basis(8, 0));
}

#[test]
fn right_multiplying_by_the_unit_applies_the_structure_map() {
    for n in 0..3 {
        for (m, k) in grid() {
            let prod = crossed_product(&example24_spec(q(), &q().int(n), m, k).unwrap());
            let one = prod.unit_vector();
            for e in 0..prod.dim() {
                assert_eq!(prod.multiply(&basis(8, e), &one), prod.alpha().column(e));
                assert_eq!(prod.multiply(&one, &basis(8, e)), prod.alpha().column(e));
            }
        }
    }
}

#[test]
fn trivial_cocycle_and_trivial_action_pass() {
    let h = sweedler_h4_hom(q());
    let a = dual_numbers_algebra(q());
    let spec = CrossedProductSpec::new(ModuleAction::trivial(h.bialgebra(), &a), Cocycle::trivial(h.bialgebra(), &a), 0, -1).unwrap();
    assert!(check_crossed_cocycle_conditions(&spec).passed);
    assert!(check_hom_algebra(&crossed_product(&spec)).passed);
}

#[test]
fn doubled_sigma_at_x_x_breaks_the_cocycle_condition() {
    let n = q().int(2);
    let spec = example24_spec(q(), &n, 0, -1).unwrap();
    let mut t = spec.sigma().table();
    t[2][2][0] = n.clone();
    let spec = spec.with_sigma(Cocycle::from_table(spec.bialgebra(), spec.algebra(), &t).unwrap()).unwrap();
    let r = check_crossed_cocycle_conditions(&spec);
    assert!(!r.passed);
    let cond = r.find("cocycle-condition").unwrap();
    assert!(!cond.passed);
    let w = cond.witness.as_ref().unwrap();
    assert_eq!(w.tuple.len(), 3);
    assert_ne!(w.lhs, w.rhs);
    let ids: Vec<_> = crossed_cocycle_identities(&spec).concat();
    let (lhs, rhs) = reevaluate(&ids, w).unwrap();
    assert_eq!((lhs, rhs), (w.lhs.clone(), w.rhs.clone()));
    assert!(!check_hom_algebra(&crossed_product(&spec)).passed);
}

/// Every single-site change of `σ`, and every change of the action that
/// keeps it a weak module algebra on which `1` acts as `β`.
fn crossed_mutations(spec: &CrossedProductSpec) -> Vec<(String, CrossedProductSpec)> {
    let mut out = Vec::new();
    let (h, a) = (spec.bialgebra(), spec.algebra());
    let st = spec.sigma().table();
    let at = spec.action().table();
    for d in [-1i64, 1, 2] {
        let delta = q().int(d);
        for i in 0..4 {
            for j in 0..4 {
                for c in 0..2 {
                    let mut t = st.clone();
                    t[i][j][c] = &t[i][j][c] + &delta;
                    let s = Cocycle::from_table(h, a, &t).unwrap();
                    out.push((format!("sigma[{i},{j},{c}]{d:+}"), spec.with_sigma(s).unwrap()));
                }
            }
        }
        for i in 0..4 {
            for j in 0..2 {
                for c in 0..2 {
                    let mut t = at.clone();
                    t[i][j][c] = &t[i][j][c] + &delta;
                    let act = ModuleAction::from_table(h, a, &t).unwrap();
                    if check_weak_module_algebra(&act).passed && check_hom_module(&act).passed {
                        out.push((format!("action[{i},{j},{c}]{d:+}"), spec.with_action(act).unwrap()));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn cocycle_conditions_decide_the_hom_algebra_axioms() {
    let mut cases = 0;
    for (m, k) in [(0, -1), (1, 1)] {
        let spec = example24_spec(q(), &q().one(), m, k).unwrap();
        let muts = crossed_mutations(&spec);
        for (site, s) in std::iter::once(("none".to_string(), spec.clone())).chain(muts) {
            let cond = check_crossed_cocycle_conditions(&s).passed;
            let alg = check_hom_algebra(&crossed_product(&s)).passed;
            assert_eq!(cond, alg, "{site} at m={m} k={k}");
            cases += 1;
        }
    }
    assert!(cases >= 50);
}

/// Outside the theorem's working hypotheses the equivalence is not claimed:
/// `1·y = 2y` is still a weak action and the conditions hold, but the unit
/// law of the crossed product fails.
#[test]
fn unit_acting_wrongly_is_not_caught_by_the_cocycle_conditions() {
    let spec = example24_spec(q(), &q().one(), 0, -1).unwrap();
    let mut t = spec.action().table();
    t[0][1][1] = q().int(2);
    let act = ModuleAction::from_table(spec.bialgebra(), spec.algebra(), &t).unwrap();
    assert!(check_weak_module_algebra(&act).passed);
    assert!(!check_hom_module(&act).passed);
    let spec = spec.with_action(act).unwrap();
    assert!(check_crossed_cocycle_conditions(&spec).passed);
    let r = check_hom_algebra(&crossed_product(&spec));
    assert!(r.parts.iter().any(|p| p.axiom_id.starts_with("unit-") && !p.passed));
}

/// `(id ⊗ τ ⊗ id) ∘ (Δ_C ⊗ Δ_H)`.
fn tensor_coalgebra_comult(c: &HomCoalgebra, h: &HomBialgebra) -> LinearMap {
    let (cs, hs) = (c.space(), h.space());
    let swap = LinearMap::identity(q(), cs)
        .tensor(&LinearMap::flip(q(), cs, hs))
        .tensor(&LinearMap::identity(q(), hs));
    swap.compose(&c.comult().tensor(h.comult()).relabel(&cs.tensor(hs), &cs.tensor(cs).tensor(hs).tensor(hs))).unwrap()
}

#[test]
fn trivial_coaction_gives_the_tensor_coalgebra() {
    let h = sweedler_h4_hom(q());
    let b = h.bialgebra();
    for c in [dual_numbers_coalgebra(q()), b.coalgebra().clone()] {
        for m in -2..=2 {
            let s = smash_coproduct(&c, b, &Coaction::trivial(b, &c), m);
            assert_eq!(s.comult().entries(), tensor_coalgebra_comult(&c, b).entries());
        }
    }
}

#[test]
fn smash_counit_is_the_product_of_counits() {
    let spec = h4_sign_datum(q(), 1, 0);
    let (c, h) = (spec.coalgebra(), spec.crossed().bialgebra());
    for m in -2..=2 {
        let s = smash_coproduct(c, h, spec.coaction(), m);
        for i in 0..c.dim() {
            for p in 0..h.dim() {
                assert_eq!(s.counit().entry(0, i * h.dim() + p), &(c.counit().entry(0, i) * h.counit().entry(0, p)));
            }
        }
    }
}

#[test]
fn regular_coaction_smash_coproduct_is_not_a_hom_coalgebra() {
    for h in [sweedler_h4_hom(q()), cyclic_group_algebra(q(), 2)] {
        let b = h.bialgebra();
        for m in -2..=2 {
            assert!(!check_hom_coalgebra(&smash_coproduct(b.coalgebra(), b, &Coaction::regular(b), m)).passed);
        }
    }
}

fn corpus_coactions() -> Vec<Coaction> {
    let mut out: Vec<Coaction> = entries()
        .into_iter()
        .filter_map(|e| match e.payload {
            Payload::Biproduct { spec, .. } => Some(spec.coaction().clone()),
            _ => None,
        })
        .collect();
    let h = sweedler_h4_hom(q());
    for c in [dual_numbers_coalgebra(q()), ground_coalgebra(q()), h.bialgebra().coalgebra().clone()] {
        out.push(Coaction::trivial(h.bialgebra(), &c));
    }
    out
}

#[test]
fn comodule_coalgebras_give_hom_coalgebras() {
    let mut exercised = 0;
    for co in corpus_coactions() {
        if !check_comodule_coalgebra(&co).passed || !check_hom_coalgebra(co.target()).passed {
            continue;
        }
        for m in -2..=2 {
            let s = smash_coproduct(co.target(), co.coacting(), &co, m);
            assert!(check_hom_coalgebra(&s).passed, "m={m}");
            exercised += 1;
        }
    }
    assert!(exercised >= 25);
}

#[test]
fn twisted_comodule_cocycle_examples() {
    assert!(check_twisted_comodule_cocycle(&trivial_ground_datum(q(), 0, -1)).passed);
    assert!(check_twisted_comodule_cocycle(&classical_radford_datum(q())).passed);
    assert!(check_twisted_comodule_cocycle(&h4_sign_datum(q(), 0, -1)).passed);
    let ex = h4_trivial_coaction_datum(q(), &q().one(), 0, -1).unwrap();
    assert!(check_twisted_comodule_cocycle(&ex).passed);
}

#[test]
fn classical_radford_datum_passes_all_nine() {
    let spec = classical_radford_datum(q());
    let r = check_radford_conditions(&spec);
    assert!(r.passed);
    let names: Vec<&str> = r.parts.iter().map(|p| p.axiom_id.as_str()).collect();
    assert_eq!(names, RADFORD_CONDITIONS);
    let b = build_biproduct(&spec, Precondition::Enforce).unwrap();
    assert!(b.axioms.passed);
    assert!(check_hom_bialgebra(&b.bialgebra).passed);
    assert_eq!(b.bialgebra.dim(), 4);
}

#[test]
fn ground_datum_biproduct_is_h() {
    for (m, k) in [(0, -1), (2, 1), (-1, -2)] {
        let spec = trivial_ground_datum(q(), m, k);
        assert!(check_radford_conditions(&spec).passed);
        let b = build_biproduct(&spec, Precondition::Enforce).unwrap().bialgebra;
        let h = sweedler_h4_hom(q());
        let h = h.bialgebra();
        assert_eq!(b.mult().entries(), h.mult().entries());
        assert_eq!(b.comult().entries(), h.comult().entries());
        assert_eq!(b.alpha().entries(), h.alpha().entries());
    }
}

fn with_bad_unit_comult(spec: &BiproductSpec) -> BiproductSpec {
    let c = spec.coalgebra();
    let comult = c.comult().with_entry(3, 0, q().one());
    let c = c.with_comult(comult).unwrap();
    let co = Coaction::new(spec.crossed().bialgebra(), &c, spec.coaction().coact().clone()).unwrap();
    spec.with_coaction(co).unwrap()
}

#[test]
fn comultiplying_the_unit_wrongly_fails_a4_and_the_bialgebra() {
    let spec = with_bad_unit_comult(&classical_radford_datum(q()));
    let r = check_radford_conditions(&spec);
    assert!(!r.passed);
    assert!(!r.find("comult-unit").unwrap().passed);
    assert!(matches!(build_biproduct(&spec, Precondition::Enforce), Err(BiproductError::ConditionsFail(_))));
    let b = build_biproduct(&spec, Precondition::Bypass).unwrap();
    assert!(!b.axioms.passed);
    assert!(!b.conditions.passed);
}

fn in_hypotheses(spec: &BiproductSpec) -> bool {
    let c = spec.crossed();
    check_hom_algebra(c.algebra()).passed
        && check_hom_coalgebra(spec.coalgebra()).passed
        && check_weak_module_algebra(c.action()).passed
        && check_hom_module(c.action()).passed
        && check_comodule_coalgebra(spec.coaction()).passed
}

fn sites(e: &CorpusEntry) -> Vec<Site> {
    let mut out = Vec::new();
    for t in e.tensors() {
        let shape = e.shape(t).unwrap();
        let total: usize = shape.iter().product();
        for flat in 0..total {
            let mut idx = Vec::new();
            let mut r = flat;
            for d in shape.iter().rev() {
                idx.push(r % d);
                r /= d;
            }
            idx.reverse();
            out.push(Site::new(t, &idx));
        }
    }
    out
}

#[test]
fn biproduct_conditions_decide_the_bialgebra_axioms() {
    let (mut inside, mut outside) = (0, 0);
    for (e, site) in ["classical-radford", "h4-sign-m0-k-1"].into_iter().flat_map(|n| {
        let e = entry(n).unwrap();
        sites(&e).into_iter().map(move |s| (e.clone(), s))
    }) {
        for d in [-1i64, 1] {
            let Ok(mutant) = mutate(&e, &site, &q().int(d)) else { continue };
            let Payload::Biproduct { spec, .. } = &mutant.payload else { unreachable!() };
            if !in_hypotheses(spec) {
                outside += 1;
                continue;
            }
            let cond = check_radford_conditions(spec).passed;
            let bi = build_biproduct(spec, Precondition::Bypass).unwrap().axioms.passed;
            assert_eq!(cond, bi, "{site}{d:+}");
            inside += 1;
        }
    }
    assert!(inside >= 50, "{inside} inside, {outside} outside");
}

#[test]
fn sigma_antipode_examples() {
    for h in [cyclic_group_algebra(q(), 2), sweedler_h4_classical(q()), sweedler_h4_hom(q())] {
        let sigma = Cocycle::trivial(h.bialgebra(), &dual_numbers_algebra(q()));
        assert!(check_sigma_antipode(h.bialgebra(), &sigma, h.antipode()).passed);
    }
    let h = sweedler_h4_hom(q());
    let sigma = Cocycle::trivial(h.bialgebra(), &dual_numbers_algebra(q()));
    let s = h.antipode().with_entry(3, 2, q().one());
    let r = check_sigma_antipode(h.bialgebra(), &sigma, &s);
    assert!(!r.passed);
    assert_eq!(r.witness.as_ref().unwrap().tuple[0], "x");
}

fn antipode_case(spec: &BiproductSpec, s_h: &LinearMap, s_a: &LinearMap) {
    let b = build_biproduct(spec, Precondition::Enforce).unwrap().bialgebra;
    let s = biproduct_antipode(spec, s_h, s_a).unwrap();
    let id = LinearMap::identity(q(), b.space());
    let ue = convolution_unit(b.coalgebra(), b.algebra());
    assert_eq!(convolve(&s, &id, b.coalgebra(), b.algebra()).unwrap(), ue);
    assert_eq!(convolve(&id, &s, b.coalgebra(), b.algebra()).unwrap(), ue);
    assert_eq!(s.compose(b.alpha()).unwrap(), b.alpha().compose(&s).unwrap());
    let solved = convolution_inverse_detailed(&id, b.coalgebra(), b.algebra()).unwrap();
    assert_eq!(solved.map, s);
    assert_eq!(solved.nullity, 0);
}

#[test]
fn classical_biproduct_antipode() {
    let spec = classical_radford_datum(q());
    antipode_case(&spec, cyclic_group_algebra(q(), 2).antipode(), &dual_numbers_antipode(q()));
    // Sweedler's S(x) = -gx with x = y♯1 and g = 1♯g.
    let s = biproduct_antipode(&spec, cyclic_group_algebra(q(), 2).antipode(), &dual_numbers_antipode(q())).unwrap();
    let gx = crossed_product(spec.crossed()).multiply(&basis(4, 1), &basis(4, 2));
    assert_eq!(s.column(2), gx.iter().map(|v| -v).collect::<Vec<_>>());
    assert_eq!(s.column(1), basis(4, 1));
}

#[test]
fn hom_biproduct_antipode() {
    for (m, k) in [(0, -1), (2, -1), (-2, 1)] {
        antipode_case(&h4_sign_datum(q(), m, k), sweedler_h4_hom(q()).antipode(), &dual_numbers_antipode(q()));
    }
}

#[test]
fn ground_biproduct_antipode_is_the_antipode_of_h() {
    let h = sweedler_h4_hom(q());
    let spec = trivial_ground_datum(q(), 0, -1);
    let one = LinearMap::identity(q(), ground_algebra(q()).space());
    let s = biproduct_antipode(&spec, h.antipode(), &one).unwrap();
    assert_eq!(s.entries(), h.antipode().entries());
    antipode_case(&spec, h.antipode(), &one);
}

#[test]
fn antipode_preconditions_are_enforced() {
    let spec = classical_radford_datum(q());
    let c2 = cyclic_group_algebra(q(), 2);
    let id_a = LinearMap::identity(q(), dual_numbers_algebra(q()).space());
    match biproduct_antipode(&spec, c2.antipode(), &id_a) {
        Err(AntipodeError::PreconditionFail(r)) => assert!(!r.find("antipode-of-a").unwrap().passed),
        other => panic!("expected a precondition failure, got {other:?}"),
    }
}
