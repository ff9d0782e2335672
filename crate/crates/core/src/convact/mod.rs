//! Actions, coactions, cocycles and the convolution product.

use thiserror::Error;

use crate::exactlin::{check_all, solve_linear, CheckReport, Identity, LinearMap, Scalar, Solved};
use crate::homcore::{expect_shape, HomAlgebra, HomBialgebra, HomCoalgebra, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConvError {
    #[error("maps do not have the shape C → A required for convolution")]
    Shape,
    #[error("no convolution inverse exists")]
    NotInvertible {
        /// `y` with `yM = 0` and `yb ≠ 0` for the stacked linear system.
        certificate: Vec<Scalar>,
    },
}

/// A left action `H ⊗ A → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    acting: HomBialgebra,
    target: HomAlgebra,
    act: LinearMap,
}

impl ModuleAction {
    pub fn new(acting: &HomBialgebra, target: &HomAlgebra, act: LinearMap) -> Result<ModuleAction, StructureError> {
        expect_shape("action", &act, target.dim(), acting.dim() * target.dim())?;
        Ok(ModuleAction {
            act: act.relabel(&acting.space().tensor(target.space()), target.space()),
            acting: acting.clone(),
            target: target.clone(),
        })
    }

    /// From `t[i][j][k]`, the coefficient of `a_k` in `h_i · a_j`.
    pub fn from_table(acting: &HomBialgebra, target: &HomAlgebra, t: &[Vec<Vec<Scalar>>]) -> Result<ModuleAction, StructureError> {
        let act = LinearMap::from_binary_table(acting.field(), acting.space(), target.space(), target.space(), t)?;
        ModuleAction::new(acting, target, act)
    }

    /// `h · a = ε(h) β(a)`.
    pub fn trivial(acting: &HomBialgebra, target: &HomAlgebra) -> ModuleAction {
        let act = acting.counit().tensor(target.alpha());
        ModuleAction::new(acting, target, act).expect("shapes agree")
    }

    /// `H` acting on itself by its multiplication.
    pub fn regular(h: &HomBialgebra) -> ModuleAction {
        ModuleAction::new(h, h.algebra(), h.mult().clone()).expect("shapes agree")
    }

    pub fn acting(&self) -> &HomBialgebra {
        &self.acting
    }

    pub fn target(&self) -> &HomAlgebra {
        &self.target
    }

    pub fn act(&self) -> &LinearMap {
        &self.act
    }

    pub fn table(&self) -> Vec<Vec<Vec<Scalar>>> {
        self.act.binary_table(self.acting.dim(), self.target.dim())
    }

    pub fn with_act(&self, act: LinearMap) -> Result<ModuleAction, StructureError> {
        ModuleAction::new(&self.acting, &self.target, act)
    }
}

/// A left coaction `ρ: C → H ⊗ C`, written `c ↦ c₍₋₁₎ ⊗ c₍₀₎`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coaction {
    coacting: HomBialgebra,
    target: HomCoalgebra,
    coact: LinearMap,
}

impl Coaction {
    pub fn new(coacting: &HomBialgebra, target: &HomCoalgebra, coact: LinearMap) -> Result<Coaction, StructureError> {
        expect_shape("coaction", &coact, coacting.dim() * target.dim(), target.dim())?;
        Ok(Coaction {
            coact: coact.relabel(target.space(), &coacting.space().tensor(target.space())),
            coacting: coacting.clone(),
            target: target.clone(),
        })
    }

    /// From `t[i][j][k]`, the coefficient of `h_j ⊗ c_k` in `ρ(c_i)`.
    pub fn from_table(coacting: &HomBialgebra, target: &HomCoalgebra, t: &[Vec<Vec<Scalar>>]) -> Result<Coaction, StructureError> {
        let coact = LinearMap::from_split_table(coacting.field(), target.space(), coacting.space(), target.space(), t)?;
        Coaction::new(coacting, target, coact)
    }

    /// `ρ(c) = 1_H ⊗ β⁻¹(c)`.
    pub fn trivial(coacting: &HomBialgebra, target: &HomCoalgebra) -> Coaction {
        let inv = target.gamma().inverse().expect("structure maps are invertible");
        let coact = coacting.unit().tensor(&inv);
        Coaction::new(coacting, target, coact).expect("shapes agree")
    }

    /// `H` coacting on itself by its comultiplication.
    pub fn regular(h: &HomBialgebra) -> Coaction {
        Coaction::new(h, h.coalgebra(), h.comult().clone()).expect("shapes agree")
    }

    pub fn coacting(&self) -> &HomBialgebra {
        &self.coacting
    }

    pub fn target(&self) -> &HomCoalgebra {
        &self.target
    }

    pub fn coact(&self) -> &LinearMap {
        &self.coact
    }

    pub fn table(&self) -> Vec<Vec<Vec<Scalar>>> {
        self.coact.split_table(self.coacting.dim(), self.target.dim())
    }

    pub fn with_coact(&self, coact: LinearMap) -> Result<Coaction, StructureError> {
        Coaction::new(&self.coacting, &self.target, coact)
    }
}

/// A bilinear map `σ: H ⊗ H → A`, with its convolution inverse once known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    source: HomBialgebra,
    target: HomAlgebra,
    sigma: LinearMap,
    inverse: Option<LinearMap>,
}

impl Cocycle {
    pub fn new(source: &HomBialgebra, target: &HomAlgebra, sigma: LinearMap) -> Result<Cocycle, StructureError> {
        expect_shape("cocycle", &sigma, target.dim(), source.dim() * source.dim())?;
        Ok(Cocycle {
            sigma: sigma.relabel(&source.space().tensor(source.space()), target.space()),
            source: source.clone(),
            target: target.clone(),
            inverse: None,
        })
    }

    /// From `t[i][j][k]`, the coefficient of `a_k` in `σ(h_i, h_j)`.
    pub fn from_table(source: &HomBialgebra, target: &HomAlgebra, t: &[Vec<Vec<Scalar>>]) -> Result<Cocycle, StructureError> {
        let sigma = LinearMap::from_binary_table(source.field(), source.space(), source.space(), target.space(), t)?;
        Cocycle::new(source, target, sigma)
    }

    /// `σ(h, g) = ε(h) ε(g) 1_A`.
    pub fn trivial(source: &HomBialgebra, target: &HomAlgebra) -> Cocycle {
        let eps2 = source.counit().tensor(source.counit());
        let sigma = target.unit().compose(&eps2).expect("shapes agree");
        Cocycle::new(source, target, sigma).expect("shapes agree")
    }

    pub fn source(&self) -> &HomBialgebra {
        &self.source
    }

    pub fn target(&self) -> &HomAlgebra {
        &self.target
    }

    pub fn sigma(&self) -> &LinearMap {
        &self.sigma
    }

    pub fn inverse(&self) -> Option<&LinearMap> {
        self.inverse.as_ref()
    }

    pub fn table(&self) -> Vec<Vec<Vec<Scalar>>> {
        self.sigma.binary_table(self.source.dim(), self.source.dim())
    }

    pub fn with_sigma(&self, sigma: LinearMap) -> Result<Cocycle, StructureError> {
        Cocycle::new(&self.source, &self.target, sigma)
    }

    /// Replaces the stored inverse without checking it; see
    /// [`check_cocycle_inverse`].
    pub fn with_inverse(&self, inverse: LinearMap) -> Result<Cocycle, StructureError> {
        expect_shape("cocycle inverse", &inverse, self.sigma.rows(), self.sigma.cols())?;
        let mut c = self.clone();
        c.inverse = Some(inverse.relabel(self.sigma.domain(), self.sigma.codomain()));
        Ok(c)
    }

    /// The tensor-product coalgebra on `H ⊗ H` the cocycle is convolved over.
    pub fn domain_coalgebra(&self) -> HomCoalgebra {
        self.source.coalgebra().tensor(self.source.coalgebra())
    }
}

pub fn weak_module_algebra_identities(a: &ModuleAction) -> Vec<Identity> {
    let f = a.target.field();
    let (hs, as_) = (a.acting.space(), a.target.space());
    let (act, m, u, d, e) = (
        a.act.clone(),
        a.target.mult().clone(),
        a.target.unit().clone(),
        a.acting.comult().clone(),
        a.acting.counit().clone(),
    );
    vec![
        Identity::new(
            "action-multiplicative",
            f,
            &[("h", hs), ("a", as_), ("b", as_)],
            &["r"],
            side!(act, m => |w| {
                w.join("a", "b", &m, "ab").join("h", "ab", &act, "r");
            }),
            side!(act, m, d => |w| {
                w.split("h", &d, "h1", "h2")
                    .join("h1", "a", &act, "x")
                    .join("h2", "b", &act, "y")
                    .join("x", "y", &m, "r");
            }),
        ),
        Identity::new(
            "action-unit",
            f,
            &[("h", hs)],
            &["r"],
            side!(act, u => |w| {
                w.unit(&u, "one").join("h", "one", &act, "r");
            }),
            side!(u, e => |w| {
                w.counit("h", &e).unit(&u, "r");
            }),
        ),
    ]
}

pub fn check_weak_module_algebra(a: &ModuleAction) -> CheckReport {
    check_all("weak-module-algebra", &weak_module_algebra_identities(a))
}

pub fn hom_module_identities(a: &ModuleAction) -> Vec<Identity> {
    let f = a.target.field();
    let (hs, ms) = (a.acting.space(), a.target.space());
    let (act, mh, uh, al, mu) = (
        a.act.clone(),
        a.acting.mult().clone(),
        a.acting.unit().clone(),
        a.acting.alpha().clone(),
        a.target.alpha().clone(),
    );
    vec![
        Identity::new(
            "module-associativity",
            f,
            &[("a", hs), ("b", hs), ("m", ms)],
            &["r"],
            side!(act, al => |w| {
                w.join("b", "m", &act, "bm").map("a", &al).join("a", "bm", &act, "r");
            }),
            side!(act, mh, mu => |w| {
                w.join("a", "b", &mh, "ab").map("m", &mu).join("ab", "m", &act, "r");
            }),
        ),
        Identity::new(
            "module-twist",
            f,
            &[("a", hs), ("m", ms)],
            &["r"],
            side!(act, mu => |w| {
                w.join("a", "m", &act, "r").map("r", &mu);
            }),
            side!(act, al, mu => |w| {
                w.map("a", &al).map("m", &mu).join("a", "m", &act, "r");
            }),
        ),
        Identity::new(
            "module-unit",
            f,
            &[("m", ms)],
            &["r"],
            side!(act, uh => |w| {
                w.unit(&uh, "one").join("one", "m", &act, "r");
            }),
            side!(mu => |w| {
                w.map("m", &mu).rename("m", "r");
            }),
        ),
    ]
}

pub fn check_hom_module(a: &ModuleAction) -> CheckReport {
    check_all("hom-module", &hom_module_identities(a))
}

/// Left Hom-comodule laws: coassociativity `Δ(m₍₋₁₎) ⊗ μ⁻¹(m₍₀₎) =
/// α⁻¹(m₍₋₁₎) ⊗ m₍₀₎₍₋₁₎ ⊗ m₍₀₎₍₀₎`, counit `ε(m₍₋₁₎) m₍₀₎ = μ⁻¹(m)` and
/// `ρ∘μ = (α⊗μ)∘ρ`.
pub fn left_comodule_identities(c: &Coaction) -> Vec<Identity> {
    let f = c.target.field();
    let ms = c.target.space();
    let (rho, dh, eh, al, mu) = (
        c.coact.clone(),
        c.coacting.comult().clone(),
        c.coacting.counit().clone(),
        c.coacting.alpha().clone(),
        c.target.gamma().clone(),
    );
    let ali = al.inverse().expect("structure maps are invertible");
    let mui = mu.inverse().expect("structure maps are invertible");
    vec![
        Identity::new(
            "comodule-coassociativity",
            f,
            &[("m", ms)],
            &["x", "y", "z"],
            side!(rho, dh, mui => |w| {
                w.split("m", &rho, "h", "z").split("h", &dh, "x", "y").map("z", &mui);
            }),
            side!(rho, ali => |w| {
                w.split("m", &rho, "x", "n").map("x", &ali).split("n", &rho, "y", "z");
            }),
        ),
        Identity::new(
            "comodule-counit",
            f,
            &[("m", ms)],
            &["r"],
            side!(rho, eh => |w| {
                w.split("m", &rho, "h", "r").counit("h", &eh);
            }),
            side!(mui => |w| {
                w.map("m", &mui).rename("m", "r");
            }),
        ),
        Identity::new(
            "comodule-twist",
            f,
            &[("m", ms)],
            &["h", "r"],
            side!(rho, mu => |w| {
                w.map("m", &mu).split("m", &rho, "h", "r");
            }),
            side!(rho, al, mu => |w| {
                w.split("m", &rho, "h", "r").map("h", &al).map("r", &mu);
            }),
        ),
    ]
}

/// Compatibility of the coaction with the comultiplication and counit of
/// the target coalgebra.
pub fn comodule_coalgebra_identities(c: &Coaction) -> Vec<Identity> {
    let f = c.target.field();
    let bs = c.target.space();
    let (rho, mh, uh, db, eb) = (
        c.coact.clone(),
        c.coacting.mult().clone(),
        c.coacting.unit().clone(),
        c.target.comult().clone(),
        c.target.counit().clone(),
    );
    vec![
        Identity::new(
            "coaction-comultiplicative",
            f,
            &[("b", bs)],
            &["h", "x", "y"],
            side!(rho, db => |w| {
                w.split("b", &rho, "h", "b0").split("b0", &db, "x", "y");
            }),
            side!(rho, mh, db => |w| {
                w.split("b", &db, "b1", "b2")
                    .split("b1", &rho, "p", "x")
                    .split("b2", &rho, "q", "y")
                    .join("p", "q", &mh, "h");
            }),
        ),
        Identity::new(
            "coaction-counit",
            f,
            &[("b", bs)],
            &["h"],
            side!(rho, eb => |w| {
                w.split("b", &rho, "h", "b0").counit("b0", &eb);
            }),
            side!(uh, eb => |w| {
                w.counit("b", &eb).unit(&uh, "h");
            }),
        ),
    ]
}

/// Reports the comodule laws and the comodule-coalgebra laws as separate
/// parts, so a coaction that is a comodule but not a comodule coalgebra is
/// visible as such.
pub fn check_comodule_coalgebra(c: &Coaction) -> CheckReport {
    CheckReport::group(
        "comodule-coalgebra",
        vec![
            check_all("left-comodule", &left_comodule_identities(c)),
            check_all("coalgebra-compatibility", &comodule_coalgebra_identities(c)),
        ],
    )
}

fn convolution_shape(f: &LinearMap, c: &HomCoalgebra, a: &HomAlgebra) -> Result<(), ConvError> {
    if f.cols() != c.dim() || f.rows() != a.dim() {
        return Err(ConvError::Shape);
    }
    Ok(())
}

/// `f ∗ g = m_A ∘ (f ⊗ g) ∘ Δ_C`.
pub fn convolve(f: &LinearMap, g: &LinearMap, c: &HomCoalgebra, a: &HomAlgebra) -> Result<LinearMap, ConvError> {
    convolution_shape(f, c, a)?;
    convolution_shape(g, c, a)?;
    let fg = f.tensor(g);
    let r = a.mult().compose(&fg).and_then(|x| x.compose(c.comult())).map_err(|_| ConvError::Shape)?;
    Ok(r.relabel(c.space(), a.space()))
}

/// The convolution identity `u_A ∘ ε_C`.
pub fn convolution_unit(c: &HomCoalgebra, a: &HomAlgebra) -> LinearMap {
    a.unit().compose(c.counit()).expect("shapes agree").relabel(c.space(), a.space())
}

/// A two-sided convolution inverse together with the dimension of the
/// solution space of the linear system that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolutionInverse {
    pub map: LinearMap,
    pub nullity: usize,
}

/// Solves `f ∗ g = u ε = g ∗ f` for the entries of `g`.
pub fn convolution_inverse(f: &LinearMap, c: &HomCoalgebra, a: &HomAlgebra) -> Result<LinearMap, ConvError> {
    convolution_inverse_detailed(f, c, a).map(|r| r.map)
}

pub fn convolution_inverse_detailed(f: &LinearMap, c: &HomCoalgebra, a: &HomAlgebra) -> Result<ConvolutionInverse, ConvError> {
    convolution_shape(f, c, a)?;
    let field = a.field();
    let (dc, da) = (c.dim(), a.dim());
    let unknowns = da * dc;
    let mult = a.mult();
    // m(f(c1) ⊗ e_s) and m(e_s ⊗ f(c2)) as vectors, per basis element of C.
    let left_prod = |ci: usize, s: usize| -> Vec<Scalar> {
        let mut out = vec![field.zero(); da];
        for i in 0..da {
            let fi = f.entry(i, ci);
            if fi.is_zero() {
                continue;
            }
            for (r, v) in &mult.sparse_columns()[i * da + s] {
                out[*r] += &(fi * v);
            }
        }
        out
    };
    let right_prod = |ci: usize, s: usize| -> Vec<Scalar> {
        let mut out = vec![field.zero(); da];
        for i in 0..da {
            let fi = f.entry(i, ci);
            if fi.is_zero() {
                continue;
            }
            for (r, v) in &mult.sparse_columns()[s * da + i] {
                out[*r] += &(fi * v);
            }
        }
        out
    };

    let mut rows: Vec<Vec<Scalar>> = vec![vec![field.zero(); unknowns]; 2 * da * dc];
    for col in 0..dc {
        for (t, lambda) in &c.comult().sparse_columns()[col] {
            let (c1, c2) = (t / dc, t % dc);
            for s in 0..da {
                // f ∗ g: the unknown g(c2) sits on the right.
                for (r, v) in left_prod(c1, s).iter().enumerate() {
                    if !v.is_zero() {
                        rows[r * dc + col][s * dc + c2] += &(lambda * v);
                    }
                }
                // g ∗ f: the unknown g(c1) sits on the left.
                for (r, v) in right_prod(c2, s).iter().enumerate() {
                    if !v.is_zero() {
                        rows[da * dc + r * dc + col][s * dc + c1] += &(lambda * v);
                    }
                }
            }
        }
    }
    let unit = convolution_unit(c, a);
    let rhs: Vec<Scalar> = (0..2)
        .flat_map(|_| (0..da).flat_map(|r| (0..dc).map(move |col| (r, col))))
        .map(|(r, col)| unit.entry(r, col).clone())
        .collect();

    match solve_linear(&rows, &rhs).expect("system is well formed") {
        Solved::NoSolution { certificate } => Err(ConvError::NotInvertible { certificate }),
        Solved::Solution(sol) => {
            let map = LinearMap::from_fn(field, c.space(), a.space(), |s, t| sol.x[s * dc + t].clone());
            Ok(ConvolutionInverse {
                map,
                nullity: sol.nullity,
            })
        }
    }
}

/// Computes and stores `σ⁻¹`, the convolution inverse of `σ` over the
/// tensor-product coalgebra on `H ⊗ H`.
pub fn cocycle_inverse(sigma: &Cocycle) -> Result<Cocycle, ConvError> {
    let inv = convolution_inverse(&sigma.sigma, &sigma.domain_coalgebra(), &sigma.target)?;
    Ok(sigma.with_inverse(inv).expect("shape of a convolution inverse matches"))
}

pub fn cocycle_inverse_identities(sigma: &Cocycle) -> Vec<Identity> {
    let f = sigma.target.field();
    let hs = sigma.source.space();
    let inv = sigma.inverse.clone().unwrap_or_else(|| sigma.sigma.clone());
    let s = sigma.sigma.clone();
    let (d, e, m, u) = (
        sigma.source.comult().clone(),
        sigma.source.counit().clone(),
        sigma.target.mult().clone(),
        sigma.target.unit().clone(),
    );
    let product = |first: LinearMap, second: LinearMap| {
        side!(first, second, d, m => |w| {
            w.split("h", &d, "h1", "h2")
                .split("l", &d, "l1", "l2")
                .join("h1", "l1", &first, "x")
                .join("h2", "l2", &second, "y")
                .join("x", "y", &m, "r");
        })
    };
    let unit_side = side!(e, u => |w| {
        w.counit("h", &e).counit("l", &e).unit(&u, "r");
    });
    vec![
        Identity::new(
            "sigma-times-inverse",
            f,
            &[("h", hs), ("l", hs)],
            &["r"],
            product(s.clone(), inv.clone()),
            unit_side.clone(),
        ),
        Identity::new(
            "inverse-times-sigma",
            f,
            &[("h", hs), ("l", hs)],
            &["r"],
            product(inv, s),
            unit_side,
        ),
    ]
}

/// Both convolution identities for the stored inverse. A cocycle without a
/// stored inverse is checked against itself.
pub fn check_cocycle_inverse(sigma: &Cocycle) -> CheckReport {
    check_all("cocycle-inverse", &cocycle_inverse_identities(sigma))
}
