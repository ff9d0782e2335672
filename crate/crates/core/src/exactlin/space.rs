use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::LinError;

/// A based finite-dimensional vector space.
///
/// Tensor products remember their factors so that Sweedler-style wiring can
/// split a leg back into its components. Basis vectors of `V ⊗ W` are ordered
/// left-factor-major: `e_i ⊗ f_j` sits at index `i * dim(W) + j`.
#[derive(Clone)]
pub struct Space(Arc<Inner>);

struct Inner {
    names: Vec<String>,
    factors: Vec<Space>,
}

impl Space {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Space, LinError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(LinError::EmptySpace);
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(LinError::DuplicateBasisName(n.clone()));
            }
        }
        Ok(Space(Arc::new(Inner { names, factors: Vec::new() })))
    }

    /// The ground field as a one-dimensional space.
    pub fn ground() -> Space {
        Space::new(["1"]).expect("ground space")
    }

    /// Basis `e0, e1, ...` of the given dimension.
    pub fn numbered(dim: usize) -> Space {
        Space::new((0..dim).map(|i| format!("e{i}"))).expect("positive dimension")
    }

    pub fn dim(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    /// Tensor factors, empty for a space that was not built as a product.
    pub fn factors(&self) -> &[Space] {
        &self.0.factors
    }

    pub fn tensor(&self, other: &Space) -> Space {
        Space::tensor_all(&[self.clone(), other.clone()])
    }

    /// `V1 ⊗ ... ⊗ Vn`; a single factor is returned unchanged and an empty
    /// list gives the ground field.
    pub fn tensor_all(spaces: &[Space]) -> Space {
        match spaces {
            [] => Space::ground(),
            [s] => s.clone(),
            _ => {
                let mut names = vec![String::new()];
                for (pos, s) in spaces.iter().enumerate() {
                    let mut next = Vec::with_capacity(names.len() * s.dim());
                    for prefix in &names {
                        for n in s.names() {
                            if pos == 0 {
                                next.push(n.clone());
                            } else {
                                next.push(format!("{prefix}⊗{n}"));
                            }
                        }
                    }
                    names = next;
                }
                Space(Arc::new(Inner {
                    names,
                    factors: spaces.to_vec(),
                }))
            }
        }
    }

    /// Splits a flat index into per-factor indices, left factor first.
    pub fn unflatten(index: usize, dims: &[usize]) -> Vec<usize> {
        let mut out = vec![0; dims.len()];
        let mut rest = index;
        for (slot, d) in out.iter_mut().zip(dims).rev() {
            *slot = rest % d;
            rest /= d;
        }
        out
    }

    pub fn flatten(indices: &[usize], dims: &[usize]) -> usize {
        indices.iter().zip(dims).fold(0, |acc, (i, d)| acc * d + i)
    }
}

impl PartialEq for Space {
    fn eq(&self, other: &Space) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.names == other.0.names
    }
}

impl Eq for Space {}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim() <= 8 {
            write!(f, "Space{:?}", self.0.names)
        } else {
            write!(f, "Space(dim {})", self.dim())
        }
    }
}
