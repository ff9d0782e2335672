use std::fmt;

use serde::Serialize;

use super::{LinError, LinearMap, Scalar, Space};

/// A basis tuple at which the two sides of an identity differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// The identity that failed.
    pub axiom_id: String,
    /// Basis names of the inputs, one per input leg.
    pub tuple: Vec<String>,
    /// The same tuple as basis indices.
    pub indices: Vec<usize>,
    /// Basis names of the coordinates of `lhs` and `rhs`.
    pub coordinates: Vec<String>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

impl Witness {
    /// Renders a coordinate vector as a sum of basis names.
    pub fn render_vector(coords: &[String], v: &[Scalar]) -> String {
        let terms: Vec<String> = v
            .iter()
            .zip(coords)
            .filter(|(s, _)| !s.is_zero())
            .map(|(s, n)| if s.is_one() { n.clone() } else { format!("({s})·{n}") })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "witness for {} at ({})", self.axiom_id, self.tuple.join(", "))?;
        writeln!(f, "  lhs = {}", Witness::render_vector(&self.coordinates, &self.lhs))?;
        writeln!(f, "  rhs = {}", Witness::render_vector(&self.coordinates, &self.rhs))?;
        let lhs: Vec<String> = self.lhs.iter().map(ToString::to_string).collect();
        let rhs: Vec<String> = self.rhs.iter().map(ToString::to_string).collect();
        writeln!(f, "  lhs coordinates [{}]", lhs.join(", "))?;
        write!(f, "  rhs coordinates [{}]", rhs.join(", "))
    }
}

/// Verdict of a check, possibly composed of named sub-checks.
///
/// A failing report always carries the witness of its first failing
/// non-advisory leaf. Advisory parts are reported but never affect the
/// verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub axiom_id: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<CheckReport>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub advisory: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    pub fn pass(axiom_id: impl Into<String>) -> CheckReport {
        CheckReport {
            axiom_id: axiom_id.into(),
            passed: true,
            witness: None,
            parts: Vec::new(),
            advisory: false,
            note: None,
        }
    }

    pub fn fail(axiom_id: impl Into<String>, witness: Witness) -> CheckReport {
        CheckReport {
            axiom_id: axiom_id.into(),
            passed: false,
            witness: Some(witness),
            parts: Vec::new(),
            advisory: false,
            note: None,
        }
    }

    pub fn group(axiom_id: impl Into<String>, parts: Vec<CheckReport>) -> CheckReport {
        let witness = parts
            .iter()
            .find(|p| !p.advisory && !p.passed)
            .and_then(|p| p.witness.clone());
        CheckReport {
            axiom_id: axiom_id.into(),
            passed: witness.is_none() && parts.iter().all(|p| p.advisory || p.passed),
            witness,
            parts,
            advisory: false,
            note: None,
        }
    }

    pub fn into_advisory(mut self) -> CheckReport {
        self.advisory = true;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> CheckReport {
        self.note = Some(note.into());
        self
    }

    /// The first failing non-advisory leaf, depth first.
    pub fn first_failure(&self) -> Option<&CheckReport> {
        if self.passed {
            return None;
        }
        if self.parts.is_empty() {
            return Some(self);
        }
        self.parts
            .iter()
            .filter(|p| !p.advisory)
            .find_map(CheckReport::first_failure)
    }

    /// Looks up a sub-report by id anywhere in the tree.
    pub fn find(&self, axiom_id: &str) -> Option<&CheckReport> {
        if self.axiom_id == axiom_id {
            return Some(self);
        }
        self.parts.iter().find_map(|p| p.find(axiom_id))
    }

    pub fn leaves(&self) -> Vec<&CheckReport> {
        if self.parts.is_empty() {
            vec![self]
        } else {
            self.parts.iter().flat_map(CheckReport::leaves).collect()
        }
    }

    fn render_into(&self, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let tag = if self.advisory { " (advisory)" } else { "" };
        out.push_str(&format!("{pad}{verdict} {}{tag}\n", self.axiom_id));
        if let Some(note) = &self.note {
            out.push_str(&format!("{pad}  note: {note}\n"));
        }
        if self.parts.is_empty() {
            if let Some(w) = &self.witness {
                for line in w.to_string().lines() {
                    out.push_str(&format!("{pad}  {line}\n"));
                }
            }
        }
        for p in &self.parts {
            p.render_into(depth + 1, out);
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        self.render_into(0, &mut out);
        f.write_str(out.trim_end())
    }
}

/// Entrywise comparison; a failure names the first differing entry in
/// row-major order.
pub fn maps_equal(f: &LinearMap, g: &LinearMap) -> Result<CheckReport, LinError> {
    if f.rows() != g.rows() || f.cols() != g.cols() {
        return Err(LinError::ShapeMismatch {
            expected: (f.rows(), f.cols()),
            found: (g.rows(), g.cols()),
        });
    }
    let first = f.entries().iter().zip(g.entries()).position(|(a, b)| a != b);
    Ok(match first {
        None => CheckReport::pass("maps-equal"),
        Some(pos) => {
            let (r, c) = (pos / f.cols(), pos % f.cols());
            CheckReport::fail(
                "maps-equal",
                Witness {
                    axiom_id: "maps-equal".into(),
                    tuple: vec![name(f.codomain(), r), name(f.domain(), c)],
                    indices: vec![r, c],
                    coordinates: vec!["entry".into()],
                    lhs: vec![f.entry(r, c).clone()],
                    rhs: vec![g.entry(r, c).clone()],
                },
            )
        }
    })
}

fn name(s: &Space, i: usize) -> String {
    s.name(i).to_string()
}
