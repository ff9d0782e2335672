use std::fmt;

use thiserror::Error;

use super::*;
use crate::admissible::{canonical_system, check_admissible, check_canonical_structures, lemma41_identities, theorem411_iso, IsoError};
use crate::constructions::{
    biproduct_antipode, build_biproduct, crossed_cocycle_identities, crossed_product, radford_identities,
    twisted_comodule_cocycle_identity, Precondition,
};
use crate::exactlin::{check_all, CheckReport, Identity};
use crate::homcore::{
    antipode_identities, hom_algebra_identities, hom_bialgebra_identities, hom_coalgebra_identities, hom_hopf_identities,
    yau_twist,
};

/// What a corpus entry carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Hopf(HomHopf),
    Crossed(CrossedProductSpec),
    /// A biproduct datum, with antipodes of `H` and `A` when the biproduct
    /// antipode is to be built.
    Biproduct {
        spec: BiproductSpec,
        antipodes: Option<(LinearMap, LinearMap)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub payload: Payload,
    /// `(check name, verdict)` pairs recorded when the entry was frozen.
    pub expected: Vec<(String, bool)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("no check named {0:?} applies to this entry")]
    Unknown(String),
    #[error("{check}: {reason}")]
    Failed { check: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MutateError {
    #[error("a mutation needs a nonzero delta")]
    ZeroDelta,
    #[error("delta lives over a different field")]
    WrongField,
    #[error("entry has no tensor named {0:?}")]
    UnknownTensor(String),
    #[error("index {index:?} out of range for {tensor} with shape {shape:?}")]
    OutOfRange {
        tensor: String,
        index: Vec<usize>,
        shape: Vec<usize>,
    },
    #[error("the mutated structure cannot be assembled: {0}")]
    Rebuild(String),
}

/// A coordinate of a named structure tensor. Rank-3 tensors are indexed
/// `[i, j, k]` as in their tables; maps `X → X` as `[i, j]`, the
/// coefficient of `e_j` in the image of `e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Site {
    pub tensor: String,
    pub index: Vec<usize>,
}

impl Site {
    pub fn new(tensor: &str, index: &[usize]) -> Site {
        Site {
            tensor: tensor.to_string(),
            index: index.to_vec(),
        }
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.index.iter().map(ToString::to_string).collect();
        write!(f, "{}[{}]", self.tensor, idx.join(","))
    }
}

pub const HOPF_CHECKS: [&str; 5] = ["hom-algebra", "hom-coalgebra", "hom-bialgebra", "antipode", "hom-hopf"];
pub const CROSSED_CHECKS: [&str; 3] = ["crossed-product-conditions", "crossed-product-algebra", "cocycle-action-identities"];
pub const BIPRODUCT_CHECKS: [&str; 7] = [
    "biproduct-conditions",
    "twisted-comodule-cocycle-condition",
    "biproduct-bialgebra",
    "canonical-structures",
    "admissible-mapping-system",
    "isomorphism",
    "biproduct-antipode",
];

impl CorpusEntry {
    fn new(name: impl Into<String>, payload: Payload, expected: &[(&str, bool)]) -> CorpusEntry {
        CorpusEntry {
            name: name.into(),
            payload,
            expected: expected.iter().map(|(c, v)| (c.to_string(), *v)).collect(),
        }
    }

    /// Names of the checks [`run_check`] accepts for this entry.
    pub fn checks(&self) -> Vec<&'static str> {
        match &self.payload {
            Payload::Hopf(_) => HOPF_CHECKS.to_vec(),
            Payload::Crossed(_) => CROSSED_CHECKS.to_vec(),
            Payload::Biproduct { antipodes, .. } => {
                let n = if antipodes.is_some() { 7 } else { 6 };
                BIPRODUCT_CHECKS[..n].to_vec()
            }
        }
    }

    /// Names of the tensors [`mutate`] can perturb.
    pub fn tensors(&self) -> Vec<&'static str> {
        match &self.payload {
            Payload::Hopf(_) => vec!["mult", "comult", "antipode"],
            Payload::Crossed(_) => vec!["action", "sigma", "a.mult"],
            Payload::Biproduct { .. } => vec!["action", "sigma", "coaction", "a.mult", "a.comult"],
        }
    }

    /// Shape of a named tensor, as the ranges of its index.
    pub fn shape(&self, tensor: &str) -> Option<Vec<usize>> {
        let (h, a) = match &self.payload {
            Payload::Hopf(h) => (h.bialgebra().dim(), 0),
            Payload::Crossed(s) => (s.bialgebra().dim(), s.algebra().dim()),
            Payload::Biproduct { spec, .. } => (spec.crossed().bialgebra().dim(), spec.crossed().algebra().dim()),
        };
        if !self.tensors().contains(&tensor) {
            return None;
        }
        Some(match tensor {
            "mult" | "comult" => vec![h, h, h],
            "antipode" => vec![h, h],
            "action" => vec![h, a, a],
            "sigma" => vec![h, h, a],
            "coaction" => vec![a, h, a],
            _ => vec![a, a, a],
        })
    }
}

fn hopf(name: &str, h: HomHopf, verdict: bool) -> CorpusEntry {
    let expected: Vec<(&str, bool)> = HOPF_CHECKS.iter().map(|c| (*c, verdict)).collect();
    CorpusEntry::new(name, Payload::Hopf(h), &expected)
}

fn crossed(name: &str, spec: CrossedProductSpec, verdicts: [bool; 3]) -> CorpusEntry {
    let expected: Vec<(&str, bool)> = CROSSED_CHECKS.iter().copied().zip(verdicts).collect();
    CorpusEntry::new(name, Payload::Crossed(spec), &expected)
}

fn biproduct(name: &str, spec: BiproductSpec, antipodes: Option<(LinearMap, LinearMap)>, verdicts: &[bool]) -> CorpusEntry {
    let expected: Vec<(&str, bool)> = BIPRODUCT_CHECKS.iter().copied().zip(verdicts.iter().copied()).collect();
    CorpusEntry::new(name, Payload::Biproduct { spec, antipodes }, &expected)
}

/// Every built-in entry over `Q`, with its frozen verdicts.
pub fn entries() -> Vec<CorpusEntry> {
    let q = Field::Rational;
    let n = |v: i64| q.int(v);
    let c4 = cyclic_group_algebra(q, 4);
    let ex24 = |v: i64, m: i64, k: i64| example24_spec(q, &n(v), m, k).expect("characteristic 0");
    let variant = |layout, reading| example24_spec_with(q, &n(1), 0, -1, layout, reading).expect("characteristic 0");
    let radford_antipodes = (cyclic_group_algebra(q, 2).antipode().clone(), dual_numbers_antipode(q));
    let h4 = sweedler_h4_hom(q);
    let sign_antipodes = (h4.antipode().clone(), dual_numbers_antipode(q));
    let h4_trivial = h4_trivial_coaction_datum(q, &n(1), 0, -1).expect("characteristic 0");
    vec![
        hopf("sweedler-h4-hom", h4.clone(), true),
        hopf("sweedler-h4-classical", sweedler_h4_classical(q), true),
        hopf("cyclic-c2", cyclic_group_algebra(q, 2), true),
        hopf("cyclic-c4-inversion-twist", yau_twist(&c4, &c4_inversion(q)).expect("automorphism"), true),
        crossed("example24-n0-m0-k-1", ex24(0, 0, -1), [true; 3]),
        crossed("example24-n1-m0-k-1", ex24(1, 0, -1), [true; 3]),
        crossed("example24-n2-m0-k-1", ex24(2, 0, -1), [true; 3]),
        crossed("example24-n2-m1-k0", ex24(2, 1, 0), [true; 3]),
        crossed("example24-n1-m-2-k2", ex24(1, -2, 2), [true; 3]),
        crossed("example24-row-first-n1", variant(SigmaLayout::RowFirst, SigmaReading::ScalarOne), [false, false, false]),
        crossed("example24-times-y-n1", variant(SigmaLayout::ColumnFirst, SigmaReading::TimesY), [true; 3]),
        biproduct("classical-radford", classical_radford_datum(q), Some(radford_antipodes), &[true; 7]),
        biproduct("ground-trivial-m0-k-1", trivial_ground_datum(q, 0, -1), None, &[true; 6]),
        biproduct("ground-trivial-m1-k0", trivial_ground_datum(q, 1, 0), None, &[true; 6]),
        biproduct("h4-sign-m0-k-1", h4_sign_datum(q, 0, -1), Some(sign_antipodes.clone()), &[true; 7]),
        biproduct("h4-sign-m2-k-1", h4_sign_datum(q, 2, -1), Some(sign_antipodes), &[true; 7]),
        biproduct("h4-trivial-coaction-n1-m0-k-1", h4_trivial, None, &[false, true, false, true, false, true]),
    ]
}

pub fn entry(name: &str) -> Option<CorpusEntry> {
    entries().into_iter().find(|e| e.name == name)
}

fn failed(check: &str, reason: impl ToString) -> CheckError {
    CheckError::Failed {
        check: check.to_string(),
        reason: reason.to_string(),
    }
}

/// Runs one named check on an entry.
pub fn run_check(entry: &CorpusEntry, check: &str) -> Result<CheckReport, CheckError> {
    if !entry.checks().contains(&check) {
        return Err(CheckError::Unknown(check.to_string()));
    }
    let report = match (&entry.payload, check) {
        (Payload::Hopf(h), "hom-algebra") => check_all(check, &hom_algebra_identities(h.bialgebra().algebra())),
        (Payload::Hopf(h), "hom-coalgebra") => check_all(check, &hom_coalgebra_identities(h.bialgebra().coalgebra())),
        (Payload::Hopf(h), "hom-bialgebra") => crate::homcore::check_hom_bialgebra(h.bialgebra()),
        (Payload::Hopf(h), "antipode") => crate::homcore::check_antipode(h),
        (Payload::Hopf(h), _) => crate::homcore::check_hom_hopf(h),
        (Payload::Crossed(s), "crossed-product-conditions") => crate::constructions::check_crossed_cocycle_conditions(s),
        (Payload::Crossed(s), "crossed-product-algebra") => check_all(check, &hom_algebra_identities(&crossed_product(s))),
        (Payload::Crossed(s), _) => check_all(check, &lemma41_identities(s).map_err(|e| failed(check, e))?),
        (Payload::Biproduct { spec, .. }, "biproduct-conditions") => crate::constructions::check_radford_conditions(spec),
        (Payload::Biproduct { spec, .. }, "twisted-comodule-cocycle-condition") => {
            crate::constructions::check_twisted_comodule_cocycle(spec)
        }
        (Payload::Biproduct { spec, antipodes }, _) => {
            let b = build_biproduct(spec, Precondition::Bypass).map_err(|e| failed(check, e))?;
            match check {
                "biproduct-bialgebra" => b.axioms,
                "canonical-structures" => check_canonical_structures(&canonical_system(spec, &b)),
                "admissible-mapping-system" => check_admissible(&canonical_system(spec, &b).system),
                "isomorphism" => match theorem411_iso(&canonical_system(spec, &b).system, Precondition::Bypass) {
                    Ok(iso) => iso.report,
                    Err(IsoError::IsoCheckFail(r)) | Err(IsoError::NotAdmissible(r)) => r,
                },
                _ => {
                    let (s_h, s_a) = antipodes.as_ref().expect("listed only with antipodes");
                    match biproduct_antipode(spec, s_h, s_a) {
                        Ok(s) => check_all(check, &antipode_identities(&b.bialgebra, &s)),
                        Err(crate::constructions::AntipodeError::PreconditionFail(r)) => r,
                    }
                }
            }
        }
    };
    Ok(report)
}

/// The flat identity family behind a check, for re-evaluating its
/// witnesses. `None` for checks assembled from derived maps.
pub fn check_identities(entry: &CorpusEntry, check: &str) -> Option<Vec<Identity>> {
    match (&entry.payload, check) {
        (Payload::Hopf(h), "hom-algebra") => Some(hom_algebra_identities(h.bialgebra().algebra())),
        (Payload::Hopf(h), "hom-coalgebra") => Some(hom_coalgebra_identities(h.bialgebra().coalgebra())),
        (Payload::Hopf(h), "hom-bialgebra") => Some(hom_bialgebra_identities(h.bialgebra())),
        (Payload::Hopf(h), "antipode") => Some(antipode_identities(h.bialgebra(), h.antipode())),
        (Payload::Hopf(h), "hom-hopf") => Some(hom_hopf_identities(h)),
        (Payload::Crossed(s), "crossed-product-conditions") => Some(crossed_cocycle_identities(s).concat()),
        (Payload::Crossed(s), "crossed-product-algebra") => Some(hom_algebra_identities(&crossed_product(s))),
        (Payload::Crossed(s), "cocycle-action-identities") => lemma41_identities(s).ok(),
        (Payload::Biproduct { spec, .. }, "biproduct-conditions") => Some(radford_identities(spec).concat()),
        (Payload::Biproduct { spec, .. }, "twisted-comodule-cocycle-condition") => {
            Some(vec![twisted_comodule_cocycle_identity(spec)])
        }
        (Payload::Biproduct { spec, .. }, "biproduct-bialgebra") => build_biproduct(spec, Precondition::Bypass)
            .ok()
            .map(|b| hom_bialgebra_identities(&b.bialgebra)),
        _ => None,
    }
}

fn bump(f: &LinearMap, row: usize, col: usize, delta: &Scalar) -> LinearMap {
    f.with_entry(row, col, f.entry(row, col) + delta)
}

/// Perturbs one structure constant by `delta` and clears the goldens.
pub fn mutate(entry: &CorpusEntry, site: &Site, delta: &Scalar) -> Result<CorpusEntry, MutateError> {
    if delta.is_zero() {
        return Err(MutateError::ZeroDelta);
    }
    let shape = entry.shape(&site.tensor).ok_or_else(|| MutateError::UnknownTensor(site.tensor.clone()))?;
    if site.index.len() != shape.len() || site.index.iter().zip(&shape).any(|(i, n)| i >= n) {
        return Err(MutateError::OutOfRange {
            tensor: site.tensor.clone(),
            index: site.index.clone(),
            shape,
        });
    }
    let ix = &site.index;
    // Rank-3 tensors X ⊗ Y → Z store [i,j,k] at row k, column i·dim Y + j;
    // X → Y ⊗ Z at row j·dim Z + k, column i.
    let binary = |f: &LinearMap| bump(f, ix[2], ix[0] * shape[1] + ix[1], delta);
    let split = |f: &LinearMap| bump(f, ix[1] * shape[2] + ix[2], ix[0], delta);
    let rebuild = |e: crate::homcore::StructureError| MutateError::Rebuild(e.to_string());
    let respec = |e: crate::constructions::SpecError| MutateError::Rebuild(e.to_string());
    if delta.field() != field_of(entry) {
        return Err(MutateError::WrongField);
    }
    let payload = match &entry.payload {
        Payload::Hopf(h) => {
            let b = h.bialgebra();
            let (alg, coalg, s) = match site.tensor.as_str() {
                "mult" => (b.algebra().with_mult(binary(b.mult())).map_err(rebuild)?, b.coalgebra().clone(), h.antipode().clone()),
                "comult" => (b.algebra().clone(), b.coalgebra().with_comult(split(b.comult())).map_err(rebuild)?, h.antipode().clone()),
                _ => (b.algebra().clone(), b.coalgebra().clone(), bump(h.antipode(), ix[1], ix[0], delta)),
            };
            let b = HomBialgebra::new(alg, coalg).map_err(rebuild)?;
            Payload::Hopf(HomHopf::new(b, s).map_err(rebuild)?)
        }
        Payload::Crossed(spec) => Payload::Crossed(mutate_crossed(spec, &site.tensor, &binary).map_err(|e| match e {
            Either::Structure(e) => rebuild(e),
            Either::Spec(e) => respec(e),
        })?),
        Payload::Biproduct { spec, antipodes } => {
            let out = match site.tensor.as_str() {
                "coaction" => {
                    let co = spec.coaction();
                    spec.with_coaction(co.with_coact(split(co.coact())).map_err(rebuild)?).map_err(respec)?
                }
                "a.comult" => {
                    let co = spec.coaction();
                    let coalg = co.target().with_comult(split(co.target().comult())).map_err(rebuild)?;
                    let co = Coaction::new(co.coacting(), &coalg, co.coact().clone()).map_err(rebuild)?;
                    spec.with_coaction(co).map_err(respec)?
                }
                t => {
                    let crossed = mutate_crossed(spec.crossed(), t, &binary).map_err(|e| match e {
                        Either::Structure(e) => rebuild(e),
                        Either::Spec(e) => respec(e),
                    })?;
                    spec.with_crossed(crossed).map_err(respec)?
                }
            };
            Payload::Biproduct {
                spec: out,
                antipodes: antipodes.clone(),
            }
        }
    };
    Ok(CorpusEntry {
        name: format!("{}@{}", entry.name, site),
        payload,
        expected: Vec::new(),
    })
}

enum Either {
    Structure(crate::homcore::StructureError),
    Spec(crate::constructions::SpecError),
}

fn mutate_crossed(spec: &CrossedProductSpec, tensor: &str, binary: &dyn Fn(&LinearMap) -> LinearMap) -> Result<CrossedProductSpec, Either> {
    let (act, sig) = (spec.action(), spec.sigma());
    match tensor {
        "action" => spec.with_action(act.with_act(binary(act.act())).map_err(Either::Structure)?).map_err(Either::Spec),
        "sigma" => spec.with_sigma(sig.with_sigma(binary(sig.sigma())).map_err(Either::Structure)?).map_err(Either::Spec),
        _ => {
            let a = spec.algebra().with_mult(binary(spec.algebra().mult())).map_err(Either::Structure)?;
            let h = spec.bialgebra();
            let action = ModuleAction::new(h, &a, act.act().clone()).map_err(Either::Structure)?;
            let sigma = Cocycle::new(h, &a, sig.sigma().clone()).map_err(Either::Structure)?;
            CrossedProductSpec::new(action, sigma, spec.m(), spec.k()).map_err(Either::Spec)
        }
    }
}

fn field_of(entry: &CorpusEntry) -> Field {
    match &entry.payload {
        Payload::Hopf(h) => h.bialgebra().field(),
        Payload::Crossed(s) => s.algebra().field(),
        Payload::Biproduct { spec, .. } => spec.crossed().algebra().field(),
    }
}

/// Re-runs every golden of an entry; returns the pairs whose verdict
/// changed, with the verdict now observed.
pub fn verify_goldens(entry: &CorpusEntry) -> Vec<(String, Result<bool, CheckError>)> {
    entry
        .expected
        .iter()
        .filter_map(|(check, want)| {
            let got = run_check(entry, check).map(|r| r.passed);
            (got.as_ref() != Ok(want)).then(|| (check.clone(), got))
        })
        .collect()
}
