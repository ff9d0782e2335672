//! Evaluation of Sweedler-style formulas.
//!
//! A [`Wiring`] is a sparse tensor whose legs carry names. Formulas are
//! written as a sequence of linear maps applied to named legs: splitting a
//! leg with a comultiplication, merging two legs with a multiplication,
//! twisting one leg with a power of a structure map, and so on. Evaluating a
//! formula on every basis tuple of its inputs yields a [`LinearMap`]; an
//! [`Identity`] pairs two formulas and sweeps all tuples looking for the
//! first one where they disagree.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use smallvec::SmallVec;

use super::{CheckReport, Field, LinearMap, Scalar, Space, Witness};

type Key = SmallVec<[u32; 8]>;

#[derive(Clone, Debug)]
pub struct Wiring {
    field: Field,
    legs: Vec<(String, Space)>,
    terms: HashMap<Key, Scalar>,
}

impl Wiring {
    /// A single basis tensor `e_{idx[0]} ⊗ e_{idx[1]} ⊗ ...` on named legs.
    pub fn basis(field: Field, legs: &[(&str, &Space)], idx: &[usize]) -> Wiring {
        assert_eq!(legs.len(), idx.len(), "one index per leg");
        let mut w = Wiring {
            field,
            legs: Vec::with_capacity(legs.len()),
            terms: HashMap::new(),
        };
        for ((name, space), &i) in legs.iter().zip(idx) {
            assert!(i < space.dim(), "index {i} out of range for leg {name}");
            w.push_leg(name, space);
        }
        w.terms.insert(idx.iter().map(|&i| i as u32).collect(), field.one());
        w
    }

    fn push_leg(&mut self, name: &str, space: &Space) {
        assert!(self.position(name).is_none(), "leg {name} already present");
        self.legs.push((name.to_string(), space.clone()));
    }

    fn position(&self, name: &str) -> Option<usize> {
        self.legs.iter().position(|(n, _)| n == name)
    }

    fn expect(&self, name: &str) -> usize {
        self.position(name)
            .unwrap_or_else(|| panic!("no leg named {name}; legs are {:?}", self.leg_names()))
    }

    pub fn leg_names(&self) -> Vec<&str> {
        self.legs.iter().map(|(n, _)| n.as_str()).collect()
    }

    pub fn leg_space(&self, name: &str) -> &Space {
        &self.legs[self.expect(name)].1
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies `f` to the tensor product of the `ins` legs, in that order,
    /// and names the factors of the result `outs`.
    ///
    /// With one output the whole codomain becomes a single leg; with several,
    /// the codomain must have been built as a tensor of exactly that many
    /// factors. No outputs means `f` is a functional.
    pub fn apply(&mut self, ins: &[&str], f: &LinearMap, outs: &[&str]) -> &mut Self {
        let idx: Vec<usize> = ins.iter().map(|n| self.expect(n)).collect();
        for (a, i) in idx.iter().enumerate() {
            assert!(!idx[..a].contains(i), "leg {} used twice", ins[a]);
        }
        let in_dims: Vec<usize> = idx.iter().map(|&i| self.legs[i].1.dim()).collect();
        assert_eq!(
            in_dims.iter().product::<usize>(),
            f.cols(),
            "map domain does not match legs {ins:?}"
        );
        let out_spaces: Vec<Space> = match outs.len() {
            0 => {
                assert_eq!(f.rows(), 1, "map with no output legs must be a functional");
                Vec::new()
            }
            1 => vec![f.codomain().clone()],
            n => {
                let factors = f.codomain().factors();
                assert_eq!(factors.len(), n, "codomain does not split into {outs:?}");
                factors.to_vec()
            }
        };
        let out_dims: Vec<usize> = out_spaces.iter().map(Space::dim).collect();
        let rest: Vec<usize> = (0..self.legs.len()).filter(|i| !idx.contains(i)).collect();

        let cols = f.sparse_columns();
        let mut next: HashMap<Key, Scalar> = HashMap::with_capacity(self.terms.len());
        for (key, coef) in &self.terms {
            let flat = idx.iter().fold(0usize, |acc, &i| acc * self.legs[i].1.dim() + key[i] as usize);
            for (r, v) in &cols[flat] {
                let mut k: Key = rest.iter().map(|&i| key[i]).collect();
                k.extend(Space::unflatten(*r, &out_dims).into_iter().map(|x| x as u32));
                let add = coef * v;
                match next.get_mut(&k) {
                    Some(slot) => *slot += &add,
                    None => {
                        next.insert(k, add);
                    }
                }
            }
        }
        next.retain(|_, v| !v.is_zero());

        let mut legs: Vec<(String, Space)> = rest.iter().map(|&i| self.legs[i].clone()).collect();
        for (name, space) in outs.iter().zip(out_spaces) {
            assert!(
                legs.iter().all(|(n, _)| n != name),
                "output leg {name} clashes with an existing leg"
            );
            legs.push((name.to_string(), space));
        }
        self.legs = legs;
        self.terms = next;
        self
    }

    /// Applies an endomorphism (or any map) to one leg, keeping its name.
    pub fn map(&mut self, leg: &str, f: &LinearMap) -> &mut Self {
        self.apply(&[leg], f, &[leg])
    }

    pub fn split(&mut self, leg: &str, delta: &LinearMap, left: &str, right: &str) -> &mut Self {
        self.apply(&[leg], delta, &[left, right])
    }

    pub fn join(&mut self, left: &str, right: &str, mult: &LinearMap, out: &str) -> &mut Self {
        self.apply(&[left, right], mult, &[out])
    }

    /// Contracts a leg with a functional.
    pub fn counit(&mut self, leg: &str, eps: &LinearMap) -> &mut Self {
        self.apply(&[leg], eps, &[])
    }

    /// Inserts a new leg holding the image of `1 ∈ k` under `unit`.
    pub fn unit(&mut self, unit: &LinearMap, out: &str) -> &mut Self {
        self.apply(&[], unit, &[out])
    }

    pub fn rename(&mut self, from: &str, to: &str) -> &mut Self {
        let i = self.expect(from);
        assert!(from == to || self.position(to).is_none(), "leg {to} already present");
        self.legs[i].0 = to.to_string();
        self
    }

    /// The tensor product of the legs in `order`, which must list every leg.
    pub fn output_space(&self, order: &[&str]) -> Space {
        let spaces: Vec<Space> = order.iter().map(|n| self.leg_space(n).clone()).collect();
        Space::tensor_all(&spaces)
    }

    /// Dense coordinates in the tensor product of the legs in `order`.
    pub fn finish(&self, order: &[&str]) -> Vec<Scalar> {
        assert_eq!(order.len(), self.legs.len(), "finish must name every leg, have {:?}", self.leg_names());
        let idx: Vec<usize> = order.iter().map(|n| self.expect(n)).collect();
        let dims: Vec<usize> = idx.iter().map(|&i| self.legs[i].1.dim()).collect();
        let mut out = vec![self.field.zero(); dims.iter().product()];
        for (key, coef) in &self.terms {
            let flat = idx.iter().zip(&dims).fold(0usize, |acc, (&i, &d)| acc * d + key[i] as usize);
            out[flat] += coef;
        }
        out
    }
}

fn tuple_count(inputs: &[(String, Space)]) -> usize {
    inputs.iter().map(|(_, s)| s.dim()).product()
}

fn start(field: Field, inputs: &[(String, Space)], t: usize) -> Wiring {
    let dims: Vec<usize> = inputs.iter().map(|(_, s)| s.dim()).collect();
    let idx = Space::unflatten(t, &dims);
    let legs: Vec<(&str, &Space)> = inputs.iter().map(|(n, s)| (n.as_str(), s)).collect();
    Wiring::basis(field, &legs, &idx)
}

/// Evaluates a formula on every basis tuple of the inputs and collects the
/// results as the columns of a linear map from `⊗ inputs` to `⊗ outputs`.
pub fn tabulate(
    field: Field,
    inputs: &[(&str, &Space)],
    outputs: &[&str],
    body: impl Fn(&mut Wiring) + Sync,
) -> LinearMap {
    let inputs: Vec<(String, Space)> = inputs.iter().map(|(n, s)| (n.to_string(), (*s).clone())).collect();
    let domain = Space::tensor_all(&inputs.iter().map(|(_, s)| s.clone()).collect::<Vec<_>>());
    let columns: Vec<(Space, Vec<Scalar>)> = (0..tuple_count(&inputs))
        .into_par_iter()
        .map(|t| {
            let mut w = start(field, &inputs, t);
            body(&mut w);
            (w.output_space(outputs), w.finish(outputs))
        })
        .collect();
    let codomain = columns[0].0.clone();
    let cols: Vec<Vec<Scalar>> = columns.into_iter().map(|(_, c)| c).collect();
    LinearMap::from_columns(field, &domain, &codomain, cols).expect("tabulated columns have a common shape")
}

pub type Formula = Arc<dyn Fn(&mut Wiring) + Send + Sync>;

/// Two formulas claimed equal on every basis tuple of a common input.
#[derive(Clone)]
pub struct Identity {
    pub id: String,
    field: Field,
    inputs: Vec<(String, Space)>,
    outputs: Vec<String>,
    lhs: Formula,
    rhs: Formula,
}

impl Identity {
    pub fn new(
        id: impl Into<String>,
        field: Field,
        inputs: &[(&str, &Space)],
        outputs: &[&str],
        lhs: impl Fn(&mut Wiring) + Send + Sync + 'static,
        rhs: impl Fn(&mut Wiring) + Send + Sync + 'static,
    ) -> Identity {
        Identity {
            id: id.into(),
            field,
            inputs: inputs.iter().map(|(n, s)| (n.to_string(), (*s).clone())).collect(),
            outputs: outputs.iter().map(|s| s.to_string()).collect(),
            lhs: Arc::new(lhs),
            rhs: Arc::new(rhs),
        }
    }

    pub fn tuple_count(&self) -> usize {
        tuple_count(&self.inputs)
    }

    fn run(&self, f: &Formula, t: usize) -> (Space, Vec<Scalar>) {
        let mut w = start(self.field, &self.inputs, t);
        f(&mut w);
        let order: Vec<&str> = self.outputs.iter().map(String::as_str).collect();
        (w.output_space(&order), w.finish(&order))
    }

    fn flat(&self, indices: &[usize]) -> usize {
        let dims: Vec<usize> = self.inputs.iter().map(|(_, s)| s.dim()).collect();
        assert_eq!(indices.len(), dims.len(), "one index per input leg");
        Space::flatten(indices, &dims)
    }

    /// Both sides at one basis tuple, recomputed from scratch.
    pub fn evaluate(&self, indices: &[usize]) -> (Vec<Scalar>, Vec<Scalar>) {
        let t = self.flat(indices);
        (self.run(&self.lhs, t).1, self.run(&self.rhs, t).1)
    }

    pub fn witness_at(&self, indices: &[usize]) -> Witness {
        let t = self.flat(indices);
        let (space, lhs) = self.run(&self.lhs, t);
        let (_, rhs) = self.run(&self.rhs, t);
        Witness {
            axiom_id: self.id.clone(),
            tuple: self
                .inputs
                .iter()
                .zip(indices)
                .map(|((_, s), &i)| s.name(i).to_string())
                .collect(),
            indices: indices.to_vec(),
            coordinates: space.names().to_vec(),
            lhs,
            rhs,
        }
    }

    /// Sweeps all basis tuples; a failure names the first one in row-major
    /// order regardless of how the sweep was scheduled.
    pub fn check(&self) -> CheckReport {
        let bad = (0..self.tuple_count())
            .into_par_iter()
            .find_first(|&t| self.run(&self.lhs, t).1 != self.run(&self.rhs, t).1);
        match bad {
            None => CheckReport::pass(&self.id),
            Some(t) => {
                let dims: Vec<usize> = self.inputs.iter().map(|(_, s)| s.dim()).collect();
                CheckReport::fail(&self.id, self.witness_at(&Space::unflatten(t, &dims)))
            }
        }
    }

    pub fn lhs_map(&self) -> LinearMap {
        self.side_map(&self.lhs)
    }

    pub fn rhs_map(&self) -> LinearMap {
        self.side_map(&self.rhs)
    }

    fn side_map(&self, f: &Formula) -> LinearMap {
        let inputs: Vec<(&str, &Space)> = self.inputs.iter().map(|(n, s)| (n.as_str(), s)).collect();
        let outputs: Vec<&str> = self.outputs.iter().map(String::as_str).collect();
        tabulate(self.field, &inputs, &outputs, |w| f(w))
    }
}

/// Checks every identity and groups the results under `id`.
pub fn check_all(id: &str, identities: &[Identity]) -> CheckReport {
    CheckReport::group(id, identities.iter().map(Identity::check).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_and_join_round_trip() {
        let f = Field::Rational;
        let v = Space::new(["a", "b"]).unwrap();
        let vv = v.tensor(&v);
        // Δ(e_i) = e_i ⊗ e_i, m(e_i ⊗ e_j) = δ_ij e_i
        let delta = LinearMap::from_fn(f, &v, &vv, |r, c| if r == c * 3 { f.one() } else { f.zero() });
        let mult = LinearMap::from_fn(f, &vv, &v, |r, c| if c == r * 3 { f.one() } else { f.zero() });
        let m = tabulate(f, &[("x", &v)], &["y"], |w| {
            w.split("x", &delta, "x1", "x2").join("x1", "x2", &mult, "y");
        });
        assert!(m.is_identity());
    }

    #[test]
    fn finish_reorders_legs() {
        let f = Field::Rational;
        let a = Space::new(["p", "q"]).unwrap();
        let b = Space::new(["r", "s", "t"]).unwrap();
        let w = Wiring::basis(f, &[("a", &a), ("b", &b)], &[1, 2]);
        let v = w.finish(&["b", "a"]);
        assert!(v[2 * 2 + 1].is_one());
        assert_eq!(v.iter().filter(|s| !s.is_zero()).count(), 1);
    }

    #[test]
    fn identity_reports_first_tuple() {
        let f = Field::Rational;
        let v = Space::new(["u", "v", "w"]).unwrap();
        let id = LinearMap::identity(f, &v);
        let tweak = id.with_entry(2, 2, f.int(5));
        let ident = Identity::new(
            "demo",
            f,
            &[("x", &v)],
            &["x"],
            move |w| {
                w.map("x", &tweak);
            },
            |_| {},
        );
        let rep = ident.check();
        assert!(!rep.passed);
        let w = rep.witness.unwrap();
        assert_eq!(w.tuple, vec!["w"]);
        assert_eq!(w.lhs[2], f.int(5));
    }
}
