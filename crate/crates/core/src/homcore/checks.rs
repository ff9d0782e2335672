use crate::exactlin::{check_all, CheckReport, Identity, LinearMap, Scalar, Witness};

use super::{HomAlgebra, HomBialgebra, HomCoalgebra, HomHopf};

pub fn hom_algebra_identities(a: &HomAlgebra) -> Vec<Identity> {
    let f = a.field();
    let s = a.space();
    let (m, u, al) = (a.mult().clone(), a.unit().clone(), a.alpha().clone());
    vec![
        Identity::new(
            "hom-associativity",
            f,
            &[("a", s), ("b", s), ("c", s)],
            &["r"],
            side!(m, al => |w| {
                w.map("a", &al).join("b", "c", &m, "bc").join("a", "bc", &m, "r");
            }),
            side!(m, al => |w| {
                w.join("a", "b", &m, "ab").map("c", &al).join("ab", "c", &m, "r");
            }),
        ),
        Identity::new(
            "alpha-multiplicative",
            f,
            &[("a", s), ("b", s)],
            &["r"],
            side!(m, al => |w| {
                w.join("a", "b", &m, "r").map("r", &al);
            }),
            side!(m, al => |w| {
                w.map("a", &al).map("b", &al).join("a", "b", &m, "r");
            }),
        ),
        Identity::new(
            "unit-right",
            f,
            &[("a", s)],
            &["r"],
            side!(m, u => |w| {
                w.unit(&u, "one").join("a", "one", &m, "r");
            }),
            side!(al => |w| {
                w.map("a", &al).rename("a", "r");
            }),
        ),
        Identity::new(
            "unit-left",
            f,
            &[("a", s)],
            &["r"],
            side!(m, u => |w| {
                w.unit(&u, "one").join("one", "a", &m, "r");
            }),
            side!(al => |w| {
                w.map("a", &al).rename("a", "r");
            }),
        ),
        Identity::new(
            "alpha-unit",
            f,
            &[],
            &["r"],
            side!(u, al => |w| {
                w.unit(&u, "r").map("r", &al);
            }),
            side!(u => |w| {
                w.unit(&u, "r");
            }),
        ),
    ]
}

pub fn check_hom_algebra(a: &HomAlgebra) -> CheckReport {
    check_all("hom-algebra", &hom_algebra_identities(a))
}

pub fn hom_coalgebra_identities(c: &HomCoalgebra) -> Vec<Identity> {
    let f = c.field();
    let s = c.space();
    let (d, e, g) = (c.comult().clone(), c.counit().clone(), c.gamma().clone());
    let gi = g.inverse().expect("structure maps are invertible");
    vec![
        Identity::new(
            "hom-coassociativity",
            f,
            &[("c", s)],
            &["x", "y", "z"],
            side!(d, g => |w| {
                w.split("c", &d, "x", "c2").split("c2", &d, "y", "z").map("z", &g);
            }),
            side!(d, g => |w| {
                w.split("c", &d, "c1", "z").split("c1", &d, "x", "y").map("x", &g);
            }),
        ),
        Identity::new(
            "gamma-comultiplicative",
            f,
            &[("c", s)],
            &["x", "y"],
            side!(d, g => |w| {
                w.map("c", &g).split("c", &d, "x", "y");
            }),
            side!(d, g => |w| {
                w.split("c", &d, "x", "y").map("x", &g).map("y", &g);
            }),
        ),
        Identity::new(
            "counit-right",
            f,
            &[("c", s)],
            &["r"],
            side!(d, e => |w| {
                w.split("c", &d, "r", "c2").counit("c2", &e);
            }),
            side!(gi => |w| {
                w.map("c", &gi).rename("c", "r");
            }),
        ),
        Identity::new(
            "counit-left",
            f,
            &[("c", s)],
            &["r"],
            side!(d, e => |w| {
                w.split("c", &d, "c1", "r").counit("c1", &e);
            }),
            side!(gi => |w| {
                w.map("c", &gi).rename("c", "r");
            }),
        ),
        Identity::new(
            "counit-gamma",
            f,
            &[("c", s)],
            &[],
            side!(e, g => |w| {
                w.map("c", &g).counit("c", &e);
            }),
            side!(e => |w| {
                w.counit("c", &e);
            }),
        ),
    ]
}

pub fn check_hom_coalgebra(c: &HomCoalgebra) -> CheckReport {
    check_all("hom-coalgebra", &hom_coalgebra_identities(c))
}

/// The compatibility laws tying the algebra and coalgebra together.
pub fn bialgebra_compatibility_identities(b: &HomBialgebra) -> Vec<Identity> {
    let f = b.field();
    let s = b.space();
    let (m, u, d, e) = (b.mult().clone(), b.unit().clone(), b.comult().clone(), b.counit().clone());
    vec![
        Identity::new(
            "comult-multiplicative",
            f,
            &[("a", s), ("b", s)],
            &["x", "y"],
            side!(m, d => |w| {
                w.join("a", "b", &m, "ab").split("ab", &d, "x", "y");
            }),
            side!(m, d => |w| {
                w.split("a", &d, "a1", "a2")
                    .split("b", &d, "b1", "b2")
                    .join("a1", "b1", &m, "x")
                    .join("a2", "b2", &m, "y");
            }),
        ),
        Identity::new(
            "comult-unit",
            f,
            &[],
            &["x", "y"],
            side!(u, d => |w| {
                w.unit(&u, "one").split("one", &d, "x", "y");
            }),
            side!(u => |w| {
                w.unit(&u, "x").unit(&u, "y");
            }),
        ),
        Identity::new(
            "counit-multiplicative",
            f,
            &[("a", s), ("b", s)],
            &[],
            side!(m, e => |w| {
                w.join("a", "b", &m, "ab").counit("ab", &e);
            }),
            side!(e => |w| {
                w.counit("a", &e).counit("b", &e);
            }),
        ),
        Identity::new(
            "counit-unit",
            f,
            &[],
            &[],
            side!(u, e => |w| {
                w.unit(&u, "one").counit("one", &e);
            }),
            |_| {},
        ),
    ]
}

pub fn hom_bialgebra_identities(b: &HomBialgebra) -> Vec<Identity> {
    let mut v = hom_algebra_identities(b.algebra());
    v.extend(hom_coalgebra_identities(b.coalgebra()));
    v.extend(bialgebra_compatibility_identities(b));
    v
}

pub fn check_hom_bialgebra(b: &HomBialgebra) -> CheckReport {
    CheckReport::group(
        "hom-bialgebra",
        vec![
            check_hom_algebra(b.algebra()),
            check_hom_coalgebra(b.coalgebra()),
            check_all("bialgebra-compatibility", &bialgebra_compatibility_identities(b)),
        ],
    )
}

/// Convolution laws of a candidate antipode plus commutation with α.
pub fn antipode_identities(b: &HomBialgebra, s_map: &LinearMap) -> Vec<Identity> {
    let f = b.field();
    let s = b.space();
    let (m, u, d, e, al) = (b.mult().clone(), b.unit().clone(), b.comult().clone(), b.counit().clone(), b.alpha().clone());
    let sm = s_map.relabel(s, s);
    let unit_side = side!(u, e => |w| {
        w.counit("h", &e).unit(&u, "r");
    });
    vec![
        Identity::new(
            "antipode-left",
            f,
            &[("h", s)],
            &["r"],
            side!(m, d, sm => |w| {
                w.split("h", &d, "h1", "h2").map("h1", &sm).join("h1", "h2", &m, "r");
            }),
            unit_side.clone(),
        ),
        Identity::new(
            "antipode-right",
            f,
            &[("h", s)],
            &["r"],
            side!(m, d, sm => |w| {
                w.split("h", &d, "h1", "h2").map("h2", &sm).join("h1", "h2", &m, "r");
            }),
            unit_side,
        ),
        Identity::new(
            "antipode-alpha",
            f,
            &[("h", s)],
            &["h"],
            side!(sm, al => |w| {
                w.map("h", &al).map("h", &sm);
            }),
            side!(sm, al => |w| {
                w.map("h", &sm).map("h", &al);
            }),
        ),
    ]
}

pub fn check_antipode(h: &HomHopf) -> CheckReport {
    check_all("antipode", &antipode_identities(h.bialgebra(), h.antipode()))
}

/// Every identity of the full Hom-Hopf suite.
pub fn hom_hopf_identities(h: &HomHopf) -> Vec<Identity> {
    let mut v = hom_bialgebra_identities(h.bialgebra());
    v.extend(antipode_identities(h.bialgebra(), h.antipode()));
    v
}

pub fn check_hom_hopf(h: &HomHopf) -> CheckReport {
    CheckReport::group("hom-hopf", vec![check_hom_bialgebra(h.bialgebra()), check_antipode(h)])
}

/// Looks up the identity a witness belongs to and recomputes both sides at
/// the witness tuple. Returns `None` when no identity has that id.
pub fn reevaluate(identities: &[Identity], w: &Witness) -> Option<(Vec<Scalar>, Vec<Scalar>)> {
    identities.iter().find(|i| i.id == w.axiom_id).map(|i| i.evaluate(&w.indices))
}
