//! Hom-algebras, Hom-coalgebras, Hom-bialgebras and Hom-Hopf algebras as
//! structure-constant bundles, with exhaustive basis-level axiom checks.
//!
//! Construction validates shapes and the invertibility of the structure map
//! only. Axioms are checked on demand, so broken structures stay
//! representable and can be diagnosed.

mod checks;
mod twist;

pub use crate::exactlin::{CheckReport, Witness};
pub use checks::*;
pub use twist::{yau_twist, TwistError};

use thiserror::Error;

use crate::exactlin::{Field, LinError, LinearMap, Scalar, Space};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("{what} should be {expected_rows}x{expected_cols}, found {rows}x{cols}")]
    Shape {
        what: String,
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("structure map {0} is not invertible")]
    NotInvertible(String),
    #[error("{0}: the parts live on different spaces")]
    SpaceMismatch(String),
    #[error("{0}: the parts carry different structure maps")]
    StructureMapMismatch(String),
    #[error("{0}: the parts live over different fields")]
    FieldMismatch(String),
    #[error(transparent)]
    Lin(#[from] LinError),
}

pub(crate) fn expect_shape(what: &str, f: &LinearMap, rows: usize, cols: usize) -> Result<(), StructureError> {
    if f.rows() != rows || f.cols() != cols {
        return Err(StructureError::Shape {
            what: what.to_string(),
            expected_rows: rows,
            expected_cols: cols,
            rows: f.rows(),
            cols: f.cols(),
        });
    }
    Ok(())
}

fn expect_field(what: &str, field: Field, maps: &[&LinearMap]) -> Result<(), StructureError> {
    if maps.iter().any(|m| m.field() != field) {
        return Err(StructureError::FieldMismatch(what.to_string()));
    }
    Ok(())
}

fn expect_automorphism(what: &str, f: &LinearMap) -> Result<(), StructureError> {
    if f.inverse().is_err() {
        return Err(StructureError::NotInvertible(what.to_string()));
    }
    Ok(())
}

/// `(A, m, 1_A, α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    space: Space,
    mult: LinearMap,
    unit: LinearMap,
    alpha: LinearMap,
}

impl HomAlgebra {
    /// `mult: A ⊗ A → A`, `unit: k → A`, `alpha: A → A` invertible.
    pub fn new(space: &Space, mult: LinearMap, unit: LinearMap, alpha: LinearMap) -> Result<HomAlgebra, StructureError> {
        let d = space.dim();
        expect_shape("multiplication", &mult, d, d * d)?;
        expect_shape("unit", &unit, d, 1)?;
        expect_shape("structure map", &alpha, d, d)?;
        expect_field("algebra", alpha.field(), &[&mult, &unit])?;
        expect_automorphism("of the algebra", &alpha)?;
        Ok(HomAlgebra {
            mult: mult.relabel(&space.tensor(space), space),
            unit: unit.relabel(&Space::ground(), space),
            alpha: alpha.relabel(space, space),
            space: space.clone(),
        })
    }

    /// From `c[i][j][k]`, the coefficient of `e_k` in `e_i · e_j`.
    pub fn from_table(
        space: &Space,
        table: &[Vec<Vec<Scalar>>],
        unit: &[Scalar],
        alpha: LinearMap,
    ) -> Result<HomAlgebra, StructureError> {
        let field = alpha.field();
        if unit.len() != space.dim() {
            return Err(StructureError::Shape {
                what: "unit".into(),
                expected_rows: space.dim(),
                expected_cols: 1,
                rows: unit.len(),
                cols: 1,
            });
        }
        let mult = LinearMap::from_binary_table(field, space, space, space, table)?;
        HomAlgebra::new(space, mult, LinearMap::from_vector(field, space, unit), alpha)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> Field {
        self.alpha.field()
    }

    pub fn mult(&self) -> &LinearMap {
        &self.mult
    }

    pub fn unit(&self) -> &LinearMap {
        &self.unit
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn unit_vector(&self) -> Vec<Scalar> {
        self.unit.column(0)
    }

    pub fn mult_table(&self) -> Vec<Vec<Vec<Scalar>>> {
        self.mult.binary_table(self.dim(), self.dim())
    }

    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let uv: Vec<Scalar> = u.iter().flat_map(|a| v.iter().map(move |b| a * b)).collect();
        self.mult.apply(&uv)
    }

    pub fn with_mult(&self, mult: LinearMap) -> Result<HomAlgebra, StructureError> {
        HomAlgebra::new(&self.space, mult, self.unit.clone(), self.alpha.clone())
    }

    pub fn with_unit(&self, unit: LinearMap) -> Result<HomAlgebra, StructureError> {
        HomAlgebra::new(&self.space, self.mult.clone(), unit, self.alpha.clone())
    }

    pub fn with_alpha(&self, alpha: LinearMap) -> Result<HomAlgebra, StructureError> {
        HomAlgebra::new(&self.space, self.mult.clone(), self.unit.clone(), alpha)
    }

    /// `A ⊗ B` with `(a ⊗ b)(a' ⊗ b') = aa' ⊗ bb'` and structure map `α ⊗ β`.
    pub fn tensor(&self, other: &HomAlgebra) -> HomAlgebra {
        let f = self.field();
        let space = self.space.tensor(&other.space);
        let mid = LinearMap::permutation(f, &[self.space.clone(), other.space.clone(), self.space.clone(), other.space.clone()], &[0, 2, 1, 3]);
        let mult = self.mult.tensor(&other.mult).compose(&mid).expect("shapes agree");
        HomAlgebra::new(&space, mult, self.unit.tensor(&other.unit), self.alpha.tensor(&other.alpha))
            .expect("tensor of valid algebras is valid")
    }
}

/// `(C, Δ, ε, γ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebra {
    space: Space,
    comult: LinearMap,
    counit: LinearMap,
    gamma: LinearMap,
}

impl HomCoalgebra {
    /// `comult: C → C ⊗ C`, `counit: C → k`, `gamma: C → C` invertible.
    pub fn new(space: &Space, comult: LinearMap, counit: LinearMap, gamma: LinearMap) -> Result<HomCoalgebra, StructureError> {
        let d = space.dim();
        expect_shape("comultiplication", &comult, d * d, d)?;
        expect_shape("counit", &counit, 1, d)?;
        expect_shape("structure map", &gamma, d, d)?;
        expect_field("coalgebra", gamma.field(), &[&comult, &counit])?;
        expect_automorphism("of the coalgebra", &gamma)?;
        Ok(HomCoalgebra {
            comult: comult.relabel(space, &space.tensor(space)),
            counit: counit.relabel(space, &Space::ground()),
            gamma: gamma.relabel(space, space),
            space: space.clone(),
        })
    }

    /// From `d[i][j][k]`, the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
    pub fn from_table(
        space: &Space,
        table: &[Vec<Vec<Scalar>>],
        counit: &[Scalar],
        gamma: LinearMap,
    ) -> Result<HomCoalgebra, StructureError> {
        let field = gamma.field();
        if counit.len() != space.dim() {
            return Err(StructureError::Shape {
                what: "counit".into(),
                expected_rows: 1,
                expected_cols: space.dim(),
                rows: 1,
                cols: counit.len(),
            });
        }
        let comult = LinearMap::from_split_table(field, space, space, space, table)?;
        HomCoalgebra::new(space, comult, LinearMap::functional(field, space, counit), gamma)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> Field {
        self.gamma.field()
    }

    pub fn comult(&self) -> &LinearMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinearMap {
        &self.counit
    }

    pub fn gamma(&self) -> &LinearMap {
        &self.gamma
    }

    pub fn counit_vector(&self) -> Vec<Scalar> {
        self.counit.row(0).to_vec()
    }

    pub fn comult_table(&self) -> Vec<Vec<Vec<Scalar>>> {
        self.comult.split_table(self.dim(), self.dim())
    }

    pub fn with_comult(&self, comult: LinearMap) -> Result<HomCoalgebra, StructureError> {
        HomCoalgebra::new(&self.space, comult, self.counit.clone(), self.gamma.clone())
    }

    pub fn with_counit(&self, counit: LinearMap) -> Result<HomCoalgebra, StructureError> {
        HomCoalgebra::new(&self.space, self.comult.clone(), counit, self.gamma.clone())
    }

    pub fn with_gamma(&self, gamma: LinearMap) -> Result<HomCoalgebra, StructureError> {
        HomCoalgebra::new(&self.space, self.comult.clone(), self.counit.clone(), gamma)
    }

    /// `C ⊗ D` with `Δ(c ⊗ d) = (c₁ ⊗ d₁) ⊗ (c₂ ⊗ d₂)` and structure map `γ ⊗ δ`.
    pub fn tensor(&self, other: &HomCoalgebra) -> HomCoalgebra {
        let f = self.field();
        let space = self.space.tensor(&other.space);
        let mid = LinearMap::permutation(f, &[self.space.clone(), self.space.clone(), other.space.clone(), other.space.clone()], &[0, 2, 1, 3]);
        let comult = mid.compose(&self.comult.tensor(&other.comult)).expect("shapes agree");
        HomCoalgebra::new(&space, comult, self.counit.tensor(&other.counit), self.gamma.tensor(&other.gamma))
            .expect("tensor of valid coalgebras is valid")
    }
}

/// An algebra and a coalgebra on one space sharing one structure map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBialgebra {
    algebra: HomAlgebra,
    coalgebra: HomCoalgebra,
}

impl HomBialgebra {
    pub fn new(algebra: HomAlgebra, coalgebra: HomCoalgebra) -> Result<HomBialgebra, StructureError> {
        if algebra.space() != coalgebra.space() {
            return Err(StructureError::SpaceMismatch("bialgebra".into()));
        }
        if algebra.field() != coalgebra.field() {
            return Err(StructureError::FieldMismatch("bialgebra".into()));
        }
        if algebra.alpha() != coalgebra.gamma() {
            return Err(StructureError::StructureMapMismatch("bialgebra".into()));
        }
        Ok(HomBialgebra { algebra, coalgebra })
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &HomCoalgebra {
        &self.coalgebra
    }

    pub fn space(&self) -> &Space {
        self.algebra.space()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn alpha(&self) -> &LinearMap {
        self.algebra.alpha()
    }

    pub fn mult(&self) -> &LinearMap {
        self.algebra.mult()
    }

    pub fn unit(&self) -> &LinearMap {
        self.algebra.unit()
    }

    pub fn comult(&self) -> &LinearMap {
        self.coalgebra.comult()
    }

    pub fn counit(&self) -> &LinearMap {
        self.coalgebra.counit()
    }
}

/// A Hom-bialgebra with a candidate antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomHopf {
    bialgebra: HomBialgebra,
    antipode: LinearMap,
}

impl HomHopf {
    pub fn new(bialgebra: HomBialgebra, antipode: LinearMap) -> Result<HomHopf, StructureError> {
        let d = bialgebra.dim();
        expect_shape("antipode", &antipode, d, d)?;
        let antipode = antipode.relabel(bialgebra.space(), bialgebra.space());
        Ok(HomHopf { bialgebra, antipode })
    }

    pub fn bialgebra(&self) -> &HomBialgebra {
        &self.bialgebra
    }

    pub fn antipode(&self) -> &LinearMap {
        &self.antipode
    }

    pub fn with_antipode(&self, antipode: LinearMap) -> Result<HomHopf, StructureError> {
        HomHopf::new(self.bialgebra.clone(), antipode)
    }
}
