use thiserror::Error;

use crate::exactlin::{check_all, CheckReport, Identity, LinearMap};

use super::{check_hom_hopf, HomAlgebra, HomBialgebra, HomCoalgebra, HomHopf, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("the input must be a classical Hopf algebra (structure map = identity)")]
    NotClassical,
    #[error("twisting map is singular")]
    Singular,
    #[error("twisting map is not a bialgebra automorphism:\n{0}")]
    NotAutomorphism(CheckReport),
    #[error("twisted structure fails the Hom-Hopf axioms:\n{0}")]
    TwistFailsAxioms(CheckReport),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

fn automorphism_identities(b: &HomBialgebra, phi: &LinearMap) -> Vec<Identity> {
    let f = b.field();
    let s = b.space();
    let (m, u, d, e) = (b.mult().clone(), b.unit().clone(), b.comult().clone(), b.counit().clone());
    vec![
        Identity::new(
            "phi-multiplicative",
            f,
            &[("a", s), ("b", s)],
            &["r"],
            side!(m, phi => |w| {
                w.join("a", "b", &m, "r").map("r", &phi);
            }),
            side!(m, phi => |w| {
                w.map("a", &phi).map("b", &phi).join("a", "b", &m, "r");
            }),
        ),
        Identity::new(
            "phi-comultiplicative",
            f,
            &[("a", s)],
            &["x", "y"],
            side!(d, phi => |w| {
                w.map("a", &phi).split("a", &d, "x", "y");
            }),
            side!(d, phi => |w| {
                w.split("a", &d, "x", "y").map("x", &phi).map("y", &phi);
            }),
        ),
        Identity::new(
            "phi-unit",
            f,
            &[],
            &["r"],
            side!(u, phi => |w| {
                w.unit(&u, "r").map("r", &phi);
            }),
            side!(u => |w| {
                w.unit(&u, "r");
            }),
        ),
        Identity::new(
            "phi-counit",
            f,
            &[("a", s)],
            &[],
            side!(e, phi => |w| {
                w.map("a", &phi).counit("a", &e);
            }),
            side!(e => |w| {
                w.counit("a", &e);
            }),
        ),
    ]
}

/// Twists a classical Hopf algebra along a bialgebra automorphism `φ`:
/// multiplication `φ∘m`, comultiplication `(φ⁻¹⊗φ⁻¹)∘Δ`, same unit, counit
/// and antipode, structure map `φ`. The result is re-checked against the
/// full Hom-Hopf suite before it is returned.
pub fn yau_twist(h: &HomHopf, phi: &LinearMap) -> Result<HomHopf, TwistError> {
    let b = h.bialgebra();
    let s = b.space();
    if !b.alpha().is_identity() {
        return Err(TwistError::NotClassical);
    }
    if phi.rows() != b.dim() || phi.cols() != b.dim() {
        return Err(StructureError::Shape {
            what: "twisting map".into(),
            expected_rows: b.dim(),
            expected_cols: b.dim(),
            rows: phi.rows(),
            cols: phi.cols(),
        }
        .into());
    }
    let phi = phi.relabel(s, s);
    let inv = phi.inverse().map_err(|_| TwistError::Singular)?;
    let auto = check_all("bialgebra-automorphism", &automorphism_identities(b, &phi));
    if !auto.passed {
        return Err(TwistError::NotAutomorphism(auto));
    }
    let mult = phi.compose(b.mult()).expect("square");
    let comult = inv.tensor(&inv).compose(b.comult()).expect("square");
    let algebra = HomAlgebra::new(s, mult, b.unit().clone(), phi.clone())?;
    let coalgebra = HomCoalgebra::new(s, comult, b.counit().clone(), phi)?;
    let twisted = HomHopf::new(HomBialgebra::new(algebra, coalgebra)?, h.antipode().clone())?;
    let report = check_hom_hopf(&twisted);
    if !report.passed {
        return Err(TwistError::TwistFailsAxioms(report));
    }
    Ok(twisted)
}
