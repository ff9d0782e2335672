//! Admissible mapping systems: the maps that split a Hom-bialgebra into a
//! coalgebra part and a Hopf part, the module and comodule structures they
//! induce, and the isomorphism with the biproduct they determine.
//!
//! Maps are named by direction rather than by letter: `sect_c: C → A` and
//! `retr_c: A → C` with `retr_c ∘ sect_c = id`, and `incl_h: H → A`,
//! `proj_h: A → H` with `proj_h ∘ incl_h = id`.

use thiserror::Error;

use crate::constructions::{pow, Biproduct, BiproductSpec, CrossedProductSpec, Precondition};
use crate::convact::{cocycle_inverse, convolve, ConvError};
use crate::exactlin::{check_all, tabulate, CheckReport, Identity, LinearMap, Space};
use crate::homcore::{expect_shape, HomAlgebra, HomBialgebra, HomCoalgebra, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("the mapping system is not admissible:\n{0}")]
    NotAdmissible(CheckReport),
    #[error("the candidate isomorphism fails:\n{0}")]
    IsoCheckFail(CheckReport),
}

/// Left and right actions of `H` on a carrier `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleData {
    pub phi_l: LinearMap,
    pub phi_r: LinearMap,
}

impl BimoduleData {
    pub fn new(h: &Space, x: &Space, phi_l: LinearMap, phi_r: LinearMap) -> Result<BimoduleData, StructureError> {
        expect_shape("left action", &phi_l, x.dim(), h.dim() * x.dim())?;
        expect_shape("right action", &phi_r, x.dim(), x.dim() * h.dim())?;
        Ok(BimoduleData {
            phi_l: phi_l.relabel(&h.tensor(x), x),
            phi_r: phi_r.relabel(&x.tensor(h), x),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `C ⇄ A ⇄ H` together with the data the admissibility conditions refer
/// to: the algebra and coalgebra on `C`, a left coaction of `H` on `C`, the
/// twisting exponent `m`, a cocycle `σ̄: H ⊗ H → A`, and the Hom-bialgebra
/// on `C ⊗ H` that `A` is to be compared with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingSystem {
    c_algebra: HomAlgebra,
    c_coalgebra: HomCoalgebra,
    c_coaction: LinearMap,
    a: HomBialgebra,
    h: HomBialgebra,
    retr_c: LinearMap,
    sect_c: LinearMap,
    proj_h: LinearMap,
    incl_h: LinearMap,
    m: i64,
    sigma_bar: LinearMap,
    product: HomBialgebra,
}

pub struct MappingSystemParts {
    pub c_algebra: HomAlgebra,
    pub c_coalgebra: HomCoalgebra,
    pub c_coaction: LinearMap,
    pub a: HomBialgebra,
    pub h: HomBialgebra,
    pub retr_c: LinearMap,
    pub sect_c: LinearMap,
    pub proj_h: LinearMap,
    pub incl_h: LinearMap,
    pub m: i64,
    pub sigma_bar: LinearMap,
    pub product: HomBialgebra,
}

impl MappingSystem {
    pub fn new(p: MappingSystemParts) -> Result<MappingSystem, StructureError> {
        let (c, a, h) = (p.c_algebra.space().clone(), p.a.space().clone(), p.h.space().clone());
        if p.c_coalgebra.space() != &c {
            return Err(StructureError::SpaceMismatch("algebra and coalgebra on C".into()));
        }
        if p.c_algebra.alpha() != p.c_coalgebra.gamma() {
            return Err(StructureError::StructureMapMismatch("algebra and coalgebra on C".into()));
        }
        expect_shape("coaction on C", &p.c_coaction, h.dim() * c.dim(), c.dim())?;
        expect_shape("retraction A → C", &p.retr_c, c.dim(), a.dim())?;
        expect_shape("section C → A", &p.sect_c, a.dim(), c.dim())?;
        expect_shape("projection A → H", &p.proj_h, h.dim(), a.dim())?;
        expect_shape("inclusion H → A", &p.incl_h, a.dim(), h.dim())?;
        expect_shape("cocycle H ⊗ H → A", &p.sigma_bar, a.dim(), h.dim() * h.dim())?;
        if p.product.dim() != c.dim() * h.dim() {
            return Err(StructureError::Shape {
                what: "bialgebra on C ⊗ H".into(),
                expected_rows: c.dim() * h.dim(),
                expected_cols: c.dim() * h.dim(),
                rows: p.product.dim(),
                cols: p.product.dim(),
            });
        }
        Ok(MappingSystem {
            c_coaction: p.c_coaction.relabel(&c, &h.tensor(&c)),
            retr_c: p.retr_c.relabel(&a, &c),
            sect_c: p.sect_c.relabel(&c, &a),
            proj_h: p.proj_h.relabel(&a, &h),
            incl_h: p.incl_h.relabel(&h, &a),
            sigma_bar: p.sigma_bar.relabel(&h.tensor(&h), &a),
            c_algebra: p.c_algebra,
            c_coalgebra: p.c_coalgebra,
            a: p.a,
            h: p.h,
            m: p.m,
            product: p.product,
        })
    }

    pub fn into_parts(self) -> MappingSystemParts {
        MappingSystemParts {
            c_algebra: self.c_algebra,
            c_coalgebra: self.c_coalgebra,
            c_coaction: self.c_coaction,
            a: self.a,
            h: self.h,
            retr_c: self.retr_c,
            sect_c: self.sect_c,
            proj_h: self.proj_h,
            incl_h: self.incl_h,
            m: self.m,
            sigma_bar: self.sigma_bar,
            product: self.product,
        }
    }

    pub fn c_algebra(&self) -> &HomAlgebra {
        &self.c_algebra
    }

    pub fn c_coalgebra(&self) -> &HomCoalgebra {
        &self.c_coalgebra
    }

    pub fn c_coaction(&self) -> &LinearMap {
        &self.c_coaction
    }

    pub fn a(&self) -> &HomBialgebra {
        &self.a
    }

    pub fn h(&self) -> &HomBialgebra {
        &self.h
    }

    pub fn retr_c(&self) -> &LinearMap {
        &self.retr_c
    }

    pub fn sect_c(&self) -> &LinearMap {
        &self.sect_c
    }

    pub fn proj_h(&self) -> &LinearMap {
        &self.proj_h
    }

    pub fn incl_h(&self) -> &LinearMap {
        &self.incl_h
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn sigma_bar(&self) -> &LinearMap {
        &self.sigma_bar
    }

    pub fn product(&self) -> &HomBialgebra {
        &self.product
    }

    /// `h → a = i(α^{-m}(h)) a`.
    pub fn left_action(&self) -> LinearMap {
        let (a, h) = (&self.a, &self.h);
        let (i, mult, t) = (&self.incl_h, a.mult(), pow(h.alpha(), -self.m));
        tabulate(a.field(), &[("h", h.space()), ("a", a.space())], &["r"], |w| {
            w.map("h", &t).map("h", i).join("h", "a", mult, "r");
        })
    }

    /// `a ← h = a i(α^{-m}(h))`.
    pub fn right_action(&self) -> LinearMap {
        let (a, h) = (&self.a, &self.h);
        let (i, mult, t) = (&self.incl_h, a.mult(), pow(h.alpha(), -self.m));
        tabulate(a.field(), &[("a", a.space()), ("h", h.space())], &["r"], |w| {
            w.map("h", &t).map("h", i).join("a", "h", mult, "r");
        })
    }

    /// `a ↦ α^{-m}(π(a₁)) ⊗ a₂`.
    pub fn left_coaction(&self) -> LinearMap {
        let (a, h) = (&self.a, &self.h);
        let (pi, d, t) = (&self.proj_h, a.comult(), pow(h.alpha(), -self.m));
        tabulate(a.field(), &[("a", a.space())], &["h", "r"], |w| {
            w.split("a", d, "h", "r").map("h", pi).map("h", &t);
        })
    }

    /// `a ↦ a₁ ⊗ α^{-m}(π(a₂))`.
    pub fn right_coaction(&self) -> LinearMap {
        let (a, h) = (&self.a, &self.h);
        let (pi, d, t) = (&self.proj_h, a.comult(), pow(h.alpha(), -self.m));
        tabulate(a.field(), &[("a", a.space())], &["r", "h"], |w| {
            w.split("a", d, "r", "h").map("h", pi).map("h", &t);
        })
    }
}

/// The two identities relating `σ` and `σ⁻¹` to the action of a crossed
/// product. A missing inverse is computed first.
pub fn lemma41_identities(spec: &CrossedProductSpec) -> Result<Vec<Identity>, ConvError> {
    let sigma = match spec.sigma().inverse() {
        Some(_) => spec.sigma().clone(),
        None => cocycle_inverse(spec.sigma())?,
    };
    let inv = sigma.inverse().expect("just computed").clone();
    let (a, h) = (spec.algebra(), spec.bialgebra());
    let f = a.field();
    let (hs, as_) = (h.space(), a.space());
    let (m, k) = (spec.m(), spec.k());
    let (mh, dh, al) = (h.mult().clone(), h.comult().clone(), h.alpha().clone());
    let (ma, b2) = (a.mult().clone(), pow(a.alpha(), 2));
    let (act, sig) = (spec.action().act().clone(), sigma.sigma().clone());
    let (am, ak1, ak2) = (pow(&al, m), pow(&al, k + 1), pow(&al, k + 2));
    Ok(vec![
        Identity::new(
            "action-on-cocycle",
            f,
            &[("h", hs), ("l", hs), ("g", hs)],
            &["r"],
            side!(act, sig, al, ak1 => |w| {
                w.map("l", &ak1).map("g", &ak1).join("l", "g", &sig, "s").map("h", &al).join("h", "s", &act, "r");
            }),
            side!(mh, dh, ma, sig, inv, ak1, ak2 => |w| {
                w.split("h", &dh, "h1", "h2")
                    .split("h1", &dh, "h11", "h12")
                    .split("l", &dh, "l1", "l2")
                    .split("l1", &dh, "l11", "l12")
                    .split("g", &dh, "g1", "g2")
                    .map("h11", &ak2)
                    .map("l11", &ak2)
                    .join("h11", "l11", &sig, "s1")
                    .join("h12", "l12", &mh, "hl")
                    .map("hl", &ak1)
                    .map("g1", &ak1)
                    .join("hl", "g1", &sig, "s2")
                    .join("s1", "s2", &ma, "x")
                    .map("h2", &ak2)
                    .join("l2", "g2", &mh, "lg")
                    .map("lg", &ak1)
                    .join("h2", "lg", &inv, "t")
                    .join("x", "t", &ma, "r");
            }),
        ),
        Identity::new(
            "twisted-action",
            f,
            &[("h", hs), ("l", hs), ("a", as_)],
            &["r"],
            side!(mh, act, am, b2 => |w| {
                w.join("h", "l", &mh, "hl").map("hl", &am).map("a", &b2).join("hl", "a", &act, "r");
            }),
            side!(mh, dh, ma, act, sig, inv, am, ak2 => |w| {
                w.split("h", &dh, "h1", "h2")
                    .split("h1", &dh, "h11", "h12")
                    .split("l", &dh, "l1", "l2")
                    .split("l1", &dh, "l11", "l12")
                    .map("h11", &ak2)
                    .map("l11", &ak2)
                    .join("h11", "l11", &sig, "s")
                    .join("h12", "l12", &mh, "hl")
                    .map("hl", &am)
                    .join("hl", "a", &act, "u")
                    .join("s", "u", &ma, "x")
                    .map("h2", &ak2)
                    .map("l2", &ak2)
                    .join("h2", "l2", &inv, "t")
                    .join("x", "t", &ma, "r");
            }),
        ),
    ])
}

pub fn check_lemma41(spec: &CrossedProductSpec) -> Result<CheckReport, ConvError> {
    Ok(check_all("cocycle-action-identities", &lemma41_identities(spec)?))
}

/// Laws of a left or right `(H, α, σ̄)`-Hom-module structure on an algebra
/// `X`: the action absorbs products in `H` up to multiplication by `σ̄`,
/// and `1_H` acts as the structure map of `X`.
pub fn sigma_bar_module_identities(h: &HomBialgebra, x: &HomAlgebra, sigma_bar: &LinearMap, phi: &LinearMap, side: Side) -> Vec<Identity> {
    let f = x.field();
    let (hs, xs) = (h.space(), x.space());
    let (mh, uh, dh, al) = (h.mult().clone(), h.unit().clone(), h.comult().clone(), h.alpha().clone());
    let (mx, xi) = (x.mult().clone(), x.alpha().clone());
    let sb = sigma_bar.relabel(&hs.tensor(hs), xs);
    match side {
        Side::Left => {
            let phi = phi.relabel(&hs.tensor(xs), xs);
            vec![
                Identity::new(
                    "left-twisted-associativity",
                    f,
                    &[("h", hs), ("l", hs), ("x", xs)],
                    &["r"],
                    side!(phi, al => |w| {
                        w.join("l", "x", &phi, "y").map("h", &al).join("h", "y", &phi, "r");
                    }),
                    side!(phi, mh, dh, mx, xi, sb => |w| {
                        w.split("h", &dh, "h1", "h2")
                            .split("l", &dh, "l1", "l2")
                            .join("h1", "l1", &sb, "s")
                            .map("s", &xi)
                            .join("h2", "l2", &mh, "q")
                            .join("q", "x", &phi, "y")
                            .join("s", "y", &mx, "r");
                    }),
                ),
                Identity::new(
                    "left-unit",
                    f,
                    &[("x", xs)],
                    &["r"],
                    side!(phi, uh => |w| {
                        w.unit(&uh, "one").join("one", "x", &phi, "r");
                    }),
                    side!(xi => |w| {
                        w.map("x", &xi).rename("x", "r");
                    }),
                ),
            ]
        }
        Side::Right => {
            let phi = phi.relabel(&xs.tensor(hs), xs);
            vec![
                Identity::new(
                    "right-twisted-associativity",
                    f,
                    &[("x", xs), ("h", hs), ("l", hs)],
                    &["r"],
                    side!(phi, al => |w| {
                        w.join("x", "h", &phi, "y").map("l", &al).join("y", "l", &phi, "r");
                    }),
                    side!(phi, mh, dh, mx, xi, sb => |w| {
                        w.map("x", &xi)
                            .split("h", &dh, "h1", "h2")
                            .split("l", &dh, "l1", "l2")
                            .join("h1", "l1", &sb, "s")
                            .join("h2", "l2", &mh, "q")
                            .join("s", "q", &phi, "t")
                            .join("x", "t", &mx, "r");
                    }),
                ),
                Identity::new(
                    "right-unit",
                    f,
                    &[("x", xs)],
                    &["r"],
                    side!(phi, uh => |w| {
                        w.unit(&uh, "one").join("x", "one", &phi, "r");
                    }),
                    side!(xi => |w| {
                        w.map("x", &xi).rename("x", "r");
                    }),
                ),
            ]
        }
    }
}

pub fn check_sigma_bar_module(h: &HomBialgebra, x: &HomAlgebra, sigma_bar: &LinearMap, phi: &LinearMap, side: Side) -> CheckReport {
    let id = match side {
        Side::Left => "left-sigma-bar-module",
        Side::Right => "right-sigma-bar-module",
    };
    check_all(id, &sigma_bar_module_identities(h, x, sigma_bar, phi, side))
}

pub fn weak_bimodule_identities(h: &HomBialgebra, x: &Space, xi: &LinearMap, data: &BimoduleData) -> Vec<Identity> {
    let f = h.field();
    let hs = h.space();
    let (uh, al) = (h.unit().clone(), h.alpha().clone());
    let xi = xi.relabel(x, x);
    let (pl, pr) = (data.phi_l.clone(), data.phi_r.clone());
    vec![
        Identity::new(
            "left-unit",
            f,
            &[("x", x)],
            &["r"],
            side!(pl, uh => |w| {
                w.unit(&uh, "one").join("one", "x", &pl, "r");
            }),
            side!(xi => |w| {
                w.map("x", &xi).rename("x", "r");
            }),
        ),
        Identity::new(
            "right-unit",
            f,
            &[("x", x)],
            &["r"],
            side!(pr, uh => |w| {
                w.unit(&uh, "one").join("x", "one", &pr, "r");
            }),
            side!(xi => |w| {
                w.map("x", &xi).rename("x", "r");
            }),
        ),
        Identity::new(
            "actions-commute",
            f,
            &[("h", hs), ("x", x), ("l", hs)],
            &["r"],
            side!(pl, pr, al => |w| {
                w.join("x", "l", &pr, "y").map("h", &al).join("h", "y", &pl, "r");
            }),
            side!(pl, pr, al => |w| {
                w.join("h", "x", &pl, "y").map("l", &al).join("y", "l", &pr, "r");
            }),
        ),
    ]
}

pub fn check_weak_bimodule(h: &HomBialgebra, x: &Space, xi: &LinearMap, data: &BimoduleData) -> CheckReport {
    check_all("weak-bimodule", &weak_bimodule_identities(h, x, xi, data))
}

/// Identities saying `f: X → Y` intertwines the listed structure.
fn preserves(id: &str, f: &LinearMap, x: &Space, y: &Space) -> MapLaws {
    MapLaws {
        prefix: id.to_string(),
        f: f.relabel(x, y),
        x: x.clone(),
    }
}

struct MapLaws {
    prefix: String,
    f: LinearMap,
    x: Space,
}

impl MapLaws {
    fn multiplicative(&self, mx: &LinearMap, my: &LinearMap) -> Identity {
        let (f, mx, my) = (self.f.clone(), mx.clone(), my.clone());
        Identity::new(
            format!("{}-multiplicative", self.prefix),
            f.field(),
            &[("a", &self.x), ("b", &self.x)],
            &["r"],
            side!(f, mx => |w| {
                w.join("a", "b", &mx, "r").map("r", &f);
            }),
            side!(f, my => |w| {
                w.map("a", &f).map("b", &f).join("a", "b", &my, "r");
            }),
        )
    }

    fn unit(&self, ux: &LinearMap, uy: &LinearMap) -> Identity {
        let (f, ux, uy) = (self.f.clone(), ux.clone(), uy.clone());
        Identity::new(
            format!("{}-unit", self.prefix),
            f.field(),
            &[],
            &["r"],
            side!(f, ux => |w| {
                w.unit(&ux, "r").map("r", &f);
            }),
            side!(uy => |w| {
                w.unit(&uy, "r");
            }),
        )
    }

    fn structure_map(&self, sx: &LinearMap, sy: &LinearMap) -> Identity {
        let (f, sx, sy) = (self.f.clone(), sx.clone(), sy.clone());
        Identity::new(
            format!("{}-structure-map", self.prefix),
            f.field(),
            &[("a", &self.x)],
            &["r"],
            side!(f, sx => |w| {
                w.map("a", &sx).map("a", &f).rename("a", "r");
            }),
            side!(f, sy => |w| {
                w.map("a", &f).map("a", &sy).rename("a", "r");
            }),
        )
    }

    fn comultiplicative(&self, dx: &LinearMap, dy: &LinearMap) -> Identity {
        let (f, dx, dy) = (self.f.clone(), dx.clone(), dy.clone());
        Identity::new(
            format!("{}-comultiplicative", self.prefix),
            f.field(),
            &[("a", &self.x)],
            &["x", "y"],
            side!(f, dy => |w| {
                w.map("a", &f).split("a", &dy, "x", "y");
            }),
            side!(f, dx => |w| {
                w.split("a", &dx, "x", "y").map("x", &f).map("y", &f);
            }),
        )
    }

    fn counit(&self, ex: &LinearMap, ey: &LinearMap) -> Identity {
        let (f, ex, ey) = (self.f.clone(), ex.clone(), ey.clone());
        Identity::new(
            format!("{}-counit", self.prefix),
            f.field(),
            &[("a", &self.x)],
            &[],
            side!(f, ey => |w| {
                w.map("a", &f).counit("a", &ey);
            }),
            side!(ex => |w| {
                w.counit("a", &ex);
            }),
        )
    }

    fn algebra(&self, x: &HomAlgebra, y: &HomAlgebra) -> Vec<Identity> {
        vec![
            self.multiplicative(x.mult(), y.mult()),
            self.unit(x.unit(), y.unit()),
            self.structure_map(x.alpha(), y.alpha()),
        ]
    }

    fn coalgebra(&self, x: &HomCoalgebra, y: &HomCoalgebra) -> Vec<Identity> {
        vec![
            self.comultiplicative(x.comult(), y.comult()),
            self.counit(x.counit(), y.counit()),
            self.structure_map(x.gamma(), y.gamma()),
        ]
    }
}

fn inverse_pair(id: &str, first: &LinearMap, second: &LinearMap, space: &Space) -> Identity {
    let (f1, f2) = (first.clone(), second.clone());
    Identity::new(
        id,
        first.field(),
        &[("x", space)],
        &["x"],
        side!(f1, f2 => |w| {
            w.map("x", &f1).map("x", &f2);
        }),
        |_| {},
    )
}

/// Sub-verdict ids of [`check_admissible`], in order.
pub const ADMISSIBLE_CONDITIONS: [&str; 5] = [
    "splittings",
    "structure-maps",
    "bimodule-conditions",
    "bicomodule-conditions",
    "convolution-splitting",
];

/// The five admissibility conditions. Whether the inclusion of `H` is
/// fully multiplicative is reported as an advisory part of the second.
pub fn check_admissible(sys: &MappingSystem) -> CheckReport {
    let (a, h) = (&sys.a, &sys.h);
    let (cs, as_, hs) = (sys.c_algebra.space(), a.space(), h.space());
    let f = a.field();

    let splittings = check_all(
        ADMISSIBLE_CONDITIONS[0],
        &[
            inverse_pair("retraction-after-section", &sys.sect_c, &sys.retr_c, cs),
            inverse_pair("projection-after-inclusion", &sys.incl_h, &sys.proj_h, hs),
        ],
    );

    let pi = preserves("projection", &sys.proj_h, as_, hs);
    let mut pi_laws = pi.algebra(a.algebra(), h.algebra());
    pi_laws.extend(pi.coalgebra(a.coalgebra(), h.coalgebra()));
    pi_laws.dedup_by(|x, y| x.id == y.id);
    let i = preserves("inclusion", &sys.incl_h, hs, as_);
    let i_laws = vec![
        i.unit(h.unit(), a.unit()),
        i.structure_map(h.alpha(), a.alpha()),
        i.comultiplicative(h.comult(), a.comult()),
        i.counit(h.counit(), a.counit()),
    ];
    let p = preserves("retraction", &sys.retr_c, as_, cs);
    let j = preserves("section", &sys.sect_c, cs, as_);
    let structure = CheckReport::group(
        ADMISSIBLE_CONDITIONS[1],
        vec![
            check_all("projection-bialgebra-map", &pi_laws),
            check_all("inclusion-weak-algebra-coalgebra-map", &i_laws),
            check_all("inclusion-multiplicative", &[i.multiplicative(h.mult(), a.mult())]).into_advisory(),
            check_all("retraction-coalgebra-map", &p.coalgebra(a.coalgebra(), &sys.c_coalgebra)),
            check_all("section-algebra-map", &j.algebra(&sys.c_algebra, a.algebra())),
        ],
    );

    let (left, right) = (sys.left_action(), sys.right_action());
    let (retr, beta, eh) = (sys.retr_c.clone(), sys.c_algebra.alpha().clone(), h.counit().clone());
    let right_c = right.clone();
    let retraction_law = Identity::new(
        "retraction-right-linear",
        f,
        &[("a", as_), ("h", hs)],
        &["r"],
        side!(retr, right_c => |w| {
            w.join("a", "h", &right_c, "r").map("r", &retr);
        }),
        side!(retr, beta, eh => |w| {
            w.counit("h", &eh).map("a", &retr).map("a", &beta).rename("a", "r");
        }),
    );
    let data = BimoduleData::new(hs, as_, left.clone(), right.clone()).expect("shapes from tabulate");
    let bimodule = CheckReport::group(
        ADMISSIBLE_CONDITIONS[2],
        vec![
            check_all("retraction-bimodule-map", &[retraction_law]),
            check_sigma_bar_module(h, a.algebra(), &sys.sigma_bar, &left, Side::Left),
            check_sigma_bar_module(h, a.algebra(), &sys.sigma_bar, &right, Side::Right),
            check_weak_bimodule(h, as_, a.alpha(), &data),
        ],
    );

    let (rl, rr, jp) = (sys.left_coaction(), sys.right_coaction(), sys.sect_c.compose(&sys.retr_c).expect("A → C → A"));
    let (sect, retr, rho_c) = (sys.sect_c.clone(), sys.retr_c.clone(), sys.c_coaction.clone());
    let (beta_inv, uh) = (pow(sys.c_algebra.alpha(), -1), h.unit().clone());
    let bicomodule = check_all(
        ADMISSIBLE_CONDITIONS[3],
        &[
            Identity::new(
                "left-coaction-preserves-section",
                f,
                &[("c", cs)],
                &["h", "r"],
                side!(sect, rl, jp => |w| {
                    w.map("c", &sect).split("c", &rl, "h", "r").map("r", &jp);
                }),
                side!(sect, rl => |w| {
                    w.map("c", &sect).split("c", &rl, "h", "r");
                }),
            ),
            Identity::new(
                "right-coaction-preserves-section",
                f,
                &[("c", cs)],
                &["r", "h"],
                side!(sect, rr, jp => |w| {
                    w.map("c", &sect).split("c", &rr, "r", "h").map("r", &jp);
                }),
                side!(sect, rr => |w| {
                    w.map("c", &sect).split("c", &rr, "r", "h");
                }),
            ),
            Identity::new(
                "retraction-left-colinear",
                f,
                &[("c", cs)],
                &["h", "r"],
                side!(sect, retr, rl => |w| {
                    w.map("c", &sect).split("c", &rl, "h", "r").map("r", &retr);
                }),
                side!(rho_c => |w| {
                    w.split("c", &rho_c, "h", "r");
                }),
            ),
            Identity::new(
                "retraction-right-colinear",
                f,
                &[("c", cs)],
                &["r", "h"],
                side!(sect, retr, rr => |w| {
                    w.map("c", &sect).split("c", &rr, "r", "h").map("r", &retr);
                }),
                side!(beta_inv, uh => |w| {
                    w.map("c", &beta_inv).rename("c", "r").unit(&uh, "h");
                }),
            ),
        ],
    );

    let jp = sys.sect_c.compose(&sys.retr_c).expect("A → C → A");
    let ipi = sys.incl_h.compose(&sys.proj_h).expect("A → H → A");
    let conv = convolve(&jp, &ipi, a.coalgebra(), a.algebra()).expect("endomorphisms of A");
    let splitting = check_all(
        ADMISSIBLE_CONDITIONS[4],
        &[Identity::new(
            "section-retraction-times-inclusion-projection",
            f,
            &[("a", as_)],
            &["a"],
            move |w| {
                w.map("a", &conv);
            },
            |_| {},
        )],
    );

    CheckReport::group("admissible-mapping-system", vec![splittings, structure, bimodule, bicomodule, splitting])
}

/// A mapping system read off a biproduct, with the module and comodule
/// structures the biproduct carries by construction.
#[derive(Clone, Debug)]
pub struct CanonicalSystem {
    pub system: MappingSystem,
    pub bimodule: BimoduleData,
    pub rho_l: LinearMap,
    pub rho_r: LinearMap,
}

/// The maps `c⊗h ↦ ε(h)c`, `c ↦ c⊗1`, `c⊗h ↦ ε(c)h`, `h ↦ 1⊗h` on a
/// biproduct, with `σ̄(h, l) = σ(α^{k+1-m}(h), α^{k+1-m}(l)) ⊗ 1`, and the
/// actions
///
/// `l ▷ (a⊗h) = (α(l₁₁)·β⁻¹(a)) σ(α^{k+2-m}(l₁₂), α^{k+1}(h₁)) ⊗ α^{1-m}(l₂)α(h₂)`,
/// `(a⊗h) ◁ l = a σ(α^{k+1}(h₁), α^{k+1-m}(l₁)) ⊗ α(h₂)α^{1-m}(l₂)`
///
/// and coactions
///
/// `a⊗h ↦ α⁻¹(a₍₋₁₎)α^{-1-m}(h₁) ⊗ a₍₀₎ ⊗ h₂`, `a⊗h ↦ β⁻¹(a) ⊗ h₁ ⊗ α^{-m}(h₂)`.
///
/// The coaction of `H` on `C` recorded in the system is
/// `c ↦ α⁻¹(c₍₋₁₎) ⊗ c₍₀₎`, the restriction of the left coaction above.
pub fn canonical_system(spec: &BiproductSpec, b: &Biproduct) -> CanonicalSystem {
    let crossed = spec.crossed();
    let (c, h) = (crossed.algebra(), crossed.bialgebra());
    let f = c.field();
    let (cs, hs) = (c.space(), h.space());
    let bi = &b.bialgebra;
    let ps = bi.space();
    let (m, k) = (crossed.m(), crossed.k());
    let (ec, eh, uc, uh) = (spec.coalgebra().counit(), h.counit(), c.unit(), h.unit());
    let (mh, dh, mc) = (h.mult(), h.comult(), c.mult());
    let (act, sig, rho) = (crossed.action().act(), crossed.sigma().sigma(), spec.coaction().coact());
    let al = h.alpha();

    let retr_c = tabulate(f, &[("c", cs), ("h", hs)], &["c"], |w| {
        w.counit("h", eh);
    });
    let sect_c = tabulate(f, &[("c", cs)], &["c", "h"], |w| {
        w.unit(uh, "h");
    });
    let proj_h = tabulate(f, &[("c", cs), ("h", hs)], &["h"], |w| {
        w.counit("c", ec);
    });
    let incl_h = tabulate(f, &[("h", hs)], &["c", "h"], |w| {
        w.unit(uc, "c");
    });
    let t = pow(al, k + 1 - m);
    let sigma_bar = tabulate(f, &[("h", hs), ("l", hs)], &["c", "u"], |w| {
        w.map("h", &t).map("l", &t).join("h", "l", sig, "c").unit(uh, "u");
    });
    let ai = pow(al, -1);
    let c_coaction = tabulate(f, &[("c", cs)], &["h", "c"], |w| {
        w.split("c", rho, "h", "c").map("h", &ai);
    });

    let (bi_inv, ak2m, ak1, a1m, ak1m) = (pow(c.alpha(), -1), pow(al, k + 2 - m), pow(al, k + 1), pow(al, 1 - m), pow(al, k + 1 - m));
    let phi_l = tabulate(f, &[("l", hs), ("a", cs), ("h", hs)], &["ra", "rh"], |w| {
        w.split("l", dh, "l1", "l2")
            .split("l1", dh, "l11", "l12")
            .map("l11", al)
            .map("a", &bi_inv)
            .join("l11", "a", act, "x")
            .map("l12", &ak2m)
            .split("h", dh, "h1", "h2")
            .map("h1", &ak1)
            .join("l12", "h1", sig, "s")
            .join("x", "s", mc, "ra")
            .map("l2", &a1m)
            .map("h2", al)
            .join("l2", "h2", mh, "rh");
    });
    let phi_r = tabulate(f, &[("a", cs), ("h", hs), ("l", hs)], &["ra", "rh"], |w| {
        w.split("h", dh, "h1", "h2")
            .split("l", dh, "l1", "l2")
            .map("h1", &ak1)
            .map("l1", &ak1m)
            .join("h1", "l1", sig, "s")
            .join("a", "s", mc, "ra")
            .map("h2", al)
            .map("l2", &a1m)
            .join("h2", "l2", mh, "rh");
    });
    let a_1m = pow(al, -1 - m);
    let rho_l = tabulate(f, &[("a", cs), ("h", hs)], &["p", "a0", "h2"], |w| {
        w.split("a", rho, "p", "a0")
            .map("p", &ai)
            .split("h", dh, "h1", "h2")
            .map("h1", &a_1m)
            .join("p", "h1", mh, "q")
            .rename("q", "p");
    });
    let a_m = pow(al, -m);
    let rho_r = tabulate(f, &[("a", cs), ("h", hs)], &["a", "h1", "h2"], |w| {
        w.map("a", &bi_inv).split("h", dh, "h1", "h2").map("h2", &a_m);
    });
    let hps = hs.tensor(ps);
    let psh = ps.tensor(hs);

    let system = MappingSystem::new(MappingSystemParts {
        c_algebra: c.clone(),
        c_coalgebra: spec.coalgebra().clone(),
        c_coaction,
        a: bi.clone(),
        h: h.clone(),
        retr_c,
        sect_c,
        proj_h,
        incl_h,
        m,
        sigma_bar,
        product: bi.clone(),
    })
    .expect("shapes of a biproduct");
    CanonicalSystem {
        system,
        bimodule: BimoduleData::new(hs, ps, phi_l.relabel(&hps, ps), phi_r.relabel(&psh, ps)).expect("shapes of a biproduct"),
        rho_l: rho_l.relabel(ps, &hps),
        rho_r: rho_r.relabel(ps, &psh),
    }
}

/// The module and comodule laws of a canonical system, and the agreement of
/// its displayed actions and coactions with the ones every mapping system
/// induces.
pub fn check_canonical_structures(cs: &CanonicalSystem) -> CheckReport {
    let sys = &cs.system;
    let (a, h) = (&sys.a, &sys.h);
    let same = |id: &str, x: &LinearMap, y: &LinearMap| {
        let mut r = crate::exactlin::maps_equal(x, y).expect("same shapes");
        r.axiom_id = id.to_string();
        if let Some(w) = r.witness.as_mut() {
            w.axiom_id = id.to_string();
        }
        r
    };
    CheckReport::group(
        "canonical-structures",
        vec![
            check_sigma_bar_module(h, a.algebra(), &sys.sigma_bar, &cs.bimodule.phi_l, Side::Left),
            check_sigma_bar_module(h, a.algebra(), &sys.sigma_bar, &cs.bimodule.phi_r, Side::Right),
            check_weak_bimodule(h, a.space(), a.alpha(), &cs.bimodule),
            same("left-action-matches", &cs.bimodule.phi_l, &sys.left_action()),
            same("right-action-matches", &cs.bimodule.phi_r, &sys.right_action()),
            same("left-coaction-matches", &cs.rho_l, &sys.left_coaction()),
            same("right-coaction-matches", &cs.rho_r, &sys.right_coaction()),
        ],
    )
}

/// `f(c⊗h) = γ⁻¹(j(c) i(h))` and `g(a) = (β⊗α)(p(a₁) ⊗ π(a₂))` with the
/// report of every check made on them.
#[derive(Clone, Debug)]
pub struct Isomorphism {
    pub f: LinearMap,
    pub g: LinearMap,
    pub report: CheckReport,
}

pub fn isomorphism_maps(sys: &MappingSystem) -> (LinearMap, LinearMap) {
    let (a, h, c) = (&sys.a, &sys.h, &sys.c_algebra);
    let fld = a.field();
    let ps = sys.product.space();
    let (j, i, p, pi) = (&sys.sect_c, &sys.incl_h, &sys.retr_c, &sys.proj_h);
    let (ma, da, gi) = (a.mult(), a.comult(), pow(a.alpha(), -1));
    let (be, al) = (c.alpha(), h.alpha());
    let f = tabulate(fld, &[("c", c.space()), ("h", h.space())], &["r"], |w| {
        w.map("c", j).map("h", i).join("c", "h", ma, "r").map("r", &gi);
    });
    let g = tabulate(fld, &[("a", a.space())], &["c", "h"], |w| {
        w.split("a", da, "c", "h").map("c", p).map("h", pi).map("c", be).map("h", al);
    });
    (f.relabel(ps, a.space()), g.relabel(a.space(), ps))
}

/// Builds the comparison maps between `A` and the bialgebra on `C ⊗ H` and
/// checks that they are mutually inverse Hom-bialgebra maps, together with
/// the auxiliary identity
/// `α^{m+1}(p(a₁)₍₋₁₎)π(a₂) ⊗ β(p(a₁)₍₀₎) = α(π(a₁)) ⊗ p(a₂)`.
pub fn theorem411_iso(sys: &MappingSystem, pre: Precondition) -> Result<Isomorphism, IsoError> {
    if pre == Precondition::Enforce {
        let adm = check_admissible(sys);
        if !adm.passed {
            return Err(IsoError::NotAdmissible(adm));
        }
    }
    let (a, h, c) = (&sys.a, &sys.h, &sys.c_algebra);
    let fld = a.field();
    let ps = sys.product.space();
    let (f, g) = isomorphism_maps(sys);
    let fm = preserves("f", &f, ps, a.space());
    let gm = preserves("g", &g, a.space(), ps);
    let mut f_laws = fm.algebra(sys.product.algebra(), a.algebra());
    f_laws.extend(fm.coalgebra(sys.product.coalgebra(), a.coalgebra()));
    f_laws.dedup_by(|x, y| x.id == y.id);
    let mut g_laws = gm.algebra(a.algebra(), sys.product.algebra());
    g_laws.extend(gm.coalgebra(a.coalgebra(), sys.product.coalgebra()));
    g_laws.dedup_by(|x, y| x.id == y.id);

    let (p, pi, rho, mh, da) = (sys.retr_c.clone(), sys.proj_h.clone(), sys.c_coaction.clone(), h.mult().clone(), a.comult().clone());
    let (am1, al, be) = (pow(h.alpha(), sys.m + 1), h.alpha().clone(), c.alpha().clone());
    let auxiliary = Identity::new(
        "coaction-of-retraction",
        fld,
        &[("a", a.space())],
        &["h", "c"],
        side!(p, pi, rho, mh, da, am1, be => |w| {
            w.split("a", &da, "a1", "a2")
                .map("a1", &p)
                .split("a1", &rho, "q", "c")
                .map("q", &am1)
                .map("a2", &pi)
                .join("q", "a2", &mh, "h")
                .map("c", &be);
        }),
        side!(p, pi, da, al => |w| {
            w.split("a", &da, "h", "c").map("h", &pi).map("h", &al).map("c", &p);
        }),
    );

    let report = CheckReport::group(
        "isomorphism",
        vec![
            check_all(
                "mutually-inverse",
                &[inverse_pair("f-after-g", &g, &f, a.space()), inverse_pair("g-after-f", &f, &g, ps)],
            ),
            check_all("f-bialgebra-map", &f_laws),
            check_all("g-bialgebra-map", &g_laws),
            check_all("auxiliary-identity", &[auxiliary]),
        ],
    );
    if !report.passed {
        return Err(IsoError::IsoCheckFail(report));
    }
    Ok(Isomorphism { f, g, report })
}
