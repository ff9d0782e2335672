//! Built-in structures with known verdicts, and a one-site mutation
//! generator for negative tests.

use thiserror::Error;

use crate::constructions::{BiproductSpec, CrossedProductSpec};
use crate::convact::{Coaction, Cocycle, ModuleAction};
use crate::exactlin::{Field, LinearMap, Scalar, Space};
use crate::homcore::{HomAlgebra, HomBialgebra, HomCoalgebra, HomHopf};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("the example needs 1/2, which does not exist in characteristic 2")]
    CharTwo,
}

/// How the printed 4×4 cocycle table is indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SigmaLayout {
    /// `σ(h_i, h_j)` is the entry in column `i`, row `j`.
    #[default]
    ColumnFirst,
    /// `σ(h_i, h_j)` is the entry in row `i`, column `j`.
    RowFirst,
}

/// What the scalars in the `x`/`gx` block of the cocycle table multiply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SigmaReading {
    #[default]
    ScalarOne,
    TimesY,
}

type Table = Vec<Vec<Vec<Scalar>>>;

fn table(field: Field, dim_l: usize, dim_r: usize, dim_o: usize, entries: &[(usize, usize, usize, i64)]) -> Table {
    let mut t = vec![vec![vec![field.zero(); dim_o]; dim_r]; dim_l];
    for &(i, j, k, v) in entries {
        t[i][j][k] = field.int(v);
    }
    t
}

fn vector(field: Field, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| field.int(x)).collect()
}

fn h4_space() -> Space {
    Space::new(["1", "g", "x", "gx"]).expect("distinct names")
}

fn hopf(space: &Space, mult: Table, unit: &[i64], comult: Table, counit: &[i64], alpha: LinearMap, antipode: LinearMap) -> HomHopf {
    let f = alpha.field();
    let a = HomAlgebra::from_table(space, &mult, &vector(f, unit), alpha.clone()).expect("well-formed tables");
    let c = HomCoalgebra::from_table(space, &comult, &vector(f, counit), alpha).expect("well-formed tables");
    HomHopf::new(HomBialgebra::new(a, c).expect("shared structure map"), antipode).expect("well-formed antipode")
}

/// Sweedler's four-dimensional Hopf algebra on `{1, g, x, gx}`, where the
/// last basis vector is the classical product `xg`.
pub fn sweedler_h4_classical(field: Field) -> HomHopf {
    let s = h4_space();
    let mult = table(
        field,
        4,
        4,
        4,
        &[
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (0, 2, 2, 1),
            (0, 3, 3, 1),
            (1, 0, 1, 1),
            (1, 1, 0, 1),
            (1, 2, 3, -1),
            (1, 3, 2, -1),
            (2, 0, 2, 1),
            (2, 1, 3, 1),
            (3, 0, 3, 1),
            (3, 1, 2, 1),
        ],
    );
    let comult = table(field, 4, 4, 4, &[(0, 0, 0, 1), (1, 1, 1, 1), (2, 2, 1, 1), (2, 0, 2, 1), (3, 3, 0, 1), (3, 1, 3, 1)]);
    let antipode = LinearMap::from_columns(field, &s, &s, vec![vector(field, &[1, 0, 0, 0]), vector(field, &[0, 1, 0, 0]), vector(field, &[0, 0, 0, -1]), vector(field, &[0, 0, 1, 0])])
        .expect("4x4");
    hopf(&s, mult, &[1, 0, 0, 0], comult, &[1, 1, 0, 0], LinearMap::identity(field, &s), antipode)
}

/// The Hom-Hopf algebra `(H₄, α)` with `α = diag(1, 1, −1, −1)`,
/// `Δ(x) = −x⊗g − 1⊗x` and `S(x) = −gx`, written out directly.
pub fn sweedler_h4_hom(field: Field) -> HomHopf {
    let s = h4_space();
    let mult = table(
        field,
        4,
        4,
        4,
        &[
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (0, 2, 2, -1),
            (0, 3, 3, -1),
            (1, 0, 1, 1),
            (1, 1, 0, 1),
            (1, 2, 3, 1),
            (1, 3, 2, 1),
            (2, 0, 2, -1),
            (2, 1, 3, -1),
            (3, 0, 3, -1),
            (3, 1, 2, -1),
        ],
    );
    let comult = table(field, 4, 4, 4, &[(0, 0, 0, 1), (1, 1, 1, 1), (2, 2, 1, -1), (2, 0, 2, -1), (3, 3, 0, -1), (3, 1, 3, -1)]);
    let antipode = LinearMap::from_columns(field, &s, &s, vec![vector(field, &[1, 0, 0, 0]), vector(field, &[0, 1, 0, 0]), vector(field, &[0, 0, 0, -1]), vector(field, &[0, 0, 1, 0])])
        .expect("4x4");
    hopf(&s, mult, &[1, 0, 0, 0], comult, &[1, 1, 0, 0], h4_twist(field), antipode)
}

/// `diag(1, 1, −1, −1)` on `H₄`, the automorphism relating the two
/// versions of Sweedler's algebra.
pub fn h4_twist(field: Field) -> LinearMap {
    LinearMap::diagonal(field, &h4_space(), &[1, 1, -1, -1])
}

/// The group algebra of the cyclic group of order `n`, basis `g^0..g^{n-1}`.
pub fn cyclic_group_algebra(field: Field, n: usize) -> HomHopf {
    let names: Vec<String> = (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("g{i}") }).collect();
    let s = Space::new(names).expect("distinct names");
    let mut mult = vec![];
    let mut comult = vec![];
    for i in 0..n {
        comult.push((i, i, i, 1));
        for j in 0..n {
            mult.push((i, j, (i + j) % n, 1));
        }
    }
    let mut unit = vec![0; n];
    unit[0] = 1;
    let antipode = LinearMap::from_fn(field, &s, &s, |r, c| if r == (n - c) % n { field.one() } else { field.zero() });
    hopf(&s, table(field, n, n, n, &mult), &unit, table(field, n, n, n, &comult), &vec![1; n], LinearMap::identity(field, &s), antipode)
}

/// `g ↦ g³` on the group algebra of the cyclic group of order four.
pub fn c4_inversion(field: Field) -> LinearMap {
    let s = cyclic_group_algebra(field, 4).bialgebra().space().clone();
    LinearMap::from_fn(field, &s, &s, |r, c| if r == (3 * c) % 4 { field.one() } else { field.zero() })
}

/// `K[y]/(y²)` with `β = id`.
pub fn dual_numbers_algebra(field: Field) -> HomAlgebra {
    let s = Space::new(["1", "y"]).expect("distinct names");
    let mult = table(field, 2, 2, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]);
    HomAlgebra::from_table(&s, &mult, &vector(field, &[1, 0]), LinearMap::identity(field, &s)).expect("well-formed")
}

/// `K[y]/(y²)` as a coalgebra with `y` primitive: `Δ(y) = y⊗1 + 1⊗y`.
pub fn dual_numbers_coalgebra(field: Field) -> HomCoalgebra {
    let s = dual_numbers_algebra(field).space().clone();
    let comult = table(field, 2, 2, 2, &[(0, 0, 0, 1), (1, 1, 0, 1), (1, 0, 1, 1)]);
    HomCoalgebra::from_table(&s, &comult, &vector(field, &[1, 0]), LinearMap::identity(field, &s)).expect("well-formed")
}

/// The one-dimensional algebra and coalgebra `K`.
pub fn ground_algebra(field: Field) -> HomAlgebra {
    let s = Space::ground();
    HomAlgebra::from_table(&s, &table(field, 1, 1, 1, &[(0, 0, 0, 1)]), &vector(field, &[1]), LinearMap::identity(field, &s)).expect("1x1")
}

pub fn ground_coalgebra(field: Field) -> HomCoalgebra {
    let s = Space::ground();
    HomCoalgebra::from_table(&s, &table(field, 1, 1, 1, &[(0, 0, 0, 1)]), &vector(field, &[1]), LinearMap::identity(field, &s)).expect("1x1")
}

/// `h·1 = ε(h)1`, `1·y = g·y = y`, `x·y = gx·y = 0`.
pub fn example24_action(field: Field) -> ModuleAction {
    let h = sweedler_h4_hom(field);
    let a = dual_numbers_algebra(field);
    let act = table(field, 4, 2, 2, &[(0, 0, 0, 1), (1, 0, 0, 1), (0, 1, 1, 1), (1, 1, 1, 1)]);
    ModuleAction::from_table(h.bialgebra(), &a, &act).expect("4x2x2")
}

/// The cocycle with `σ = 1` on group-likes and `±n/2` on the `x`/`gx`
/// block.
pub fn example24_sigma(field: Field, n: &Scalar, layout: SigmaLayout, reading: SigmaReading) -> Result<Cocycle, CorpusError> {
    let half = field.int(2).inv().ok_or(CorpusError::CharTwo)?;
    let h = sweedler_h4_hom(field);
    let a = dual_numbers_algebra(field);
    let v = n * &half;
    let target = match reading {
        SigmaReading::ScalarOne => 0,
        SigmaReading::TimesY => 1,
    };
    let mut t = table(field, 4, 4, 2, &[(0, 0, 0, 1), (0, 1, 0, 1), (1, 0, 0, 1), (1, 1, 0, 1)]);
    // Printed table: rows x and gx both read (n/2, −n/2) in columns x, gx.
    let printed = [(2, 2, v.clone()), (2, 3, -&v), (3, 2, v.clone()), (3, 3, -&v)];
    for (row, col, value) in printed {
        let (i, j) = match layout {
            SigmaLayout::RowFirst => (row, col),
            SigmaLayout::ColumnFirst => (col, row),
        };
        t[i][j][target] = value;
    }
    Ok(Cocycle::from_table(h.bialgebra(), &a, &t).expect("4x4x2"))
}

pub fn example24_spec(field: Field, n: &Scalar, m: i64, k: i64) -> Result<CrossedProductSpec, CorpusError> {
    example24_spec_with(field, n, m, k, SigmaLayout::default(), SigmaReading::default())
}

pub fn example24_spec_with(
    field: Field,
    n: &Scalar,
    m: i64,
    k: i64,
    layout: SigmaLayout,
    reading: SigmaReading,
) -> Result<CrossedProductSpec, CorpusError> {
    let sigma = example24_sigma(field, n, layout, reading)?;
    Ok(CrossedProductSpec::new(example24_action(field), sigma, m, k).expect("same H and A"))
}

/// `K[y]/(y²)` over `K C₂` with `g·y = −y`, `ρ(y) = g⊗y`, `y` primitive,
/// trivial cocycle, `m = 0`, `k = −1`. Its biproduct is Sweedler's algebra.
pub fn classical_radford_datum(field: Field) -> BiproductSpec {
    let h = cyclic_group_algebra(field, 2);
    let a = dual_numbers_algebra(field);
    let act = table(field, 2, 2, 2, &[(0, 0, 0, 1), (1, 0, 0, 1), (0, 1, 1, 1), (1, 1, 1, -1)]);
    let action = ModuleAction::from_table(h.bialgebra(), &a, &act).expect("2x2x2");
    let sigma = Cocycle::trivial(h.bialgebra(), &a);
    let crossed = CrossedProductSpec::new(action, sigma, 0, -1).expect("same H and A");
    let coact = table(field, 2, 2, 2, &[(0, 0, 0, 1), (1, 1, 1, 1)]);
    let coaction = Coaction::from_table(h.bialgebra(), &dual_numbers_coalgebra(field), &coact).expect("2x2x2");
    BiproductSpec::new(crossed, coaction).expect("same H and A")
}

/// `y ↦ −y`, the antipode of the dual numbers as a braided Hopf algebra.
pub fn dual_numbers_antipode(field: Field) -> LinearMap {
    let s = dual_numbers_algebra(field).space().clone();
    LinearMap::diagonal(field, &s, &[1, -1])
}

/// `A = K` over the Hom-Hopf `H₄` with every structure trivial.
pub fn trivial_ground_datum(field: Field, m: i64, k: i64) -> BiproductSpec {
    let h = sweedler_h4_hom(field);
    let a = ground_algebra(field);
    let action = ModuleAction::trivial(h.bialgebra(), &a);
    let sigma = Cocycle::trivial(h.bialgebra(), &a);
    let crossed = CrossedProductSpec::new(action, sigma, m, k).expect("same H and A");
    let coaction = Coaction::trivial(h.bialgebra(), &ground_coalgebra(field));
    BiproductSpec::new(crossed, coaction).expect("same H and A")
}

/// The crossed-product datum of [`example24_spec`] with `y` primitive and
/// the trivial coaction `ρ(a) = 1 ⊗ a`.
pub fn h4_trivial_coaction_datum(field: Field, n: &Scalar, m: i64, k: i64) -> Result<BiproductSpec, CorpusError> {
    let crossed = example24_spec(field, n, m, k)?;
    let coaction = Coaction::trivial(crossed.bialgebra(), &dual_numbers_coalgebra(field));
    Ok(BiproductSpec::new(crossed, coaction).expect("same H and A"))
}

/// The dual numbers over the Hom-Hopf `H₄` with `g·y = −y`, `x` and `gx`
/// acting by zero, `ρ(y) = g ⊗ y` and trivial `σ`.
pub fn h4_sign_datum(field: Field, m: i64, k: i64) -> BiproductSpec {
    let h = sweedler_h4_hom(field);
    let a = dual_numbers_algebra(field);
    let act = table(field, 4, 2, 2, &[(0, 0, 0, 1), (1, 0, 0, 1), (0, 1, 1, 1), (1, 1, 1, -1)]);
    let action = ModuleAction::from_table(h.bialgebra(), &a, &act).expect("4x2x2");
    let sigma = Cocycle::trivial(h.bialgebra(), &a);
    let crossed = CrossedProductSpec::new(action, sigma, m, k).expect("same H and A");
    let coact = table(field, 2, 4, 2, &[(0, 0, 0, 1), (1, 1, 1, 1)]);
    let coaction = Coaction::from_table(h.bialgebra(), &dual_numbers_coalgebra(field), &coact).expect("2x4x2");
    BiproductSpec::new(crossed, coaction).expect("same H and A")
}

mod registry;
pub use registry::*;
