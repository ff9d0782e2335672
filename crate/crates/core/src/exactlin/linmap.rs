use std::fmt;
use std::sync::{Arc, OnceLock};

use super::solve::invert;
use super::{Field, LinError, Scalar, Space};

/// A linear map between based spaces, stored as a dense
/// `codomain.dim × domain.dim` matrix in row-major order.
///
/// Values are immutable; clones share storage together with the lazily
/// computed inverse and sparse column view.
#[derive(Clone)]
pub struct LinearMap(Arc<Inner>);

struct Inner {
    field: Field,
    domain: Space,
    codomain: Space,
    entries: Vec<Scalar>,
    inverse: OnceLock<Option<LinearMap>>,
    sparse: OnceLock<Vec<Vec<(usize, Scalar)>>>,
}

impl LinearMap {
    fn build(field: Field, domain: Space, codomain: Space, entries: Vec<Scalar>) -> LinearMap {
        debug_assert_eq!(entries.len(), domain.dim() * codomain.dim());
        LinearMap(Arc::new(Inner {
            field,
            domain,
            codomain,
            entries,
            inverse: OnceLock::new(),
            sparse: OnceLock::new(),
        }))
    }

    pub fn from_rows(
        field: Field,
        domain: &Space,
        codomain: &Space,
        rows: Vec<Vec<Scalar>>,
    ) -> Result<LinearMap, LinError> {
        if rows.len() != codomain.dim() || rows.iter().any(|r| r.len() != domain.dim()) {
            return Err(LinError::ShapeMismatch {
                expected: (codomain.dim(), domain.dim()),
                found: (rows.len(), rows.first().map_or(0, Vec::len)),
            });
        }
        let entries: Vec<Scalar> = rows.into_iter().flatten().collect();
        if let Some(bad) = entries.iter().find(|s| s.field() != field) {
            return Err(LinError::FieldMismatch(field, bad.field()));
        }
        Ok(LinearMap::build(field, domain.clone(), codomain.clone(), entries))
    }

    /// Builds the map whose column `c` is the image of the `c`-th basis vector.
    pub fn from_columns(
        field: Field,
        domain: &Space,
        codomain: &Space,
        columns: Vec<Vec<Scalar>>,
    ) -> Result<LinearMap, LinError> {
        if columns.len() != domain.dim() || columns.iter().any(|c| c.len() != codomain.dim()) {
            return Err(LinError::ShapeMismatch {
                expected: (codomain.dim(), domain.dim()),
                found: (columns.first().map_or(0, Vec::len), columns.len()),
            });
        }
        Ok(LinearMap::from_fn(field, domain, codomain, |r, c| columns[c][r].clone()))
    }

    pub fn from_fn(
        field: Field,
        domain: &Space,
        codomain: &Space,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> LinearMap {
        let mut entries = Vec::with_capacity(domain.dim() * codomain.dim());
        for r in 0..codomain.dim() {
            for c in 0..domain.dim() {
                entries.push(f(r, c));
            }
        }
        LinearMap::build(field, domain.clone(), codomain.clone(), entries)
    }

    pub fn zero(field: Field, domain: &Space, codomain: &Space) -> LinearMap {
        LinearMap::from_fn(field, domain, codomain, |_, _| field.zero())
    }

    pub fn identity(field: Field, space: &Space) -> LinearMap {
        LinearMap::from_fn(field, space, space, |r, c| if r == c { field.one() } else { field.zero() })
    }

    /// Diagonal map with integer entries.
    pub fn diagonal(field: Field, space: &Space, diag: &[i64]) -> LinearMap {
        assert_eq!(diag.len(), space.dim());
        LinearMap::from_fn(field, space, space, |r, c| if r == c { field.int(diag[r]) } else { field.zero() })
    }

    /// The linear map `k → V` sending 1 to `v`.
    pub fn from_vector(field: Field, space: &Space, v: &[Scalar]) -> LinearMap {
        assert_eq!(v.len(), space.dim());
        LinearMap::from_fn(field, &Space::ground(), space, |r, _| v[r].clone())
    }

    /// The linear functional `V → k` with the given values on the basis.
    pub fn functional(field: Field, space: &Space, v: &[Scalar]) -> LinearMap {
        assert_eq!(v.len(), space.dim());
        LinearMap::from_fn(field, space, &Space::ground(), |_, c| v[c].clone())
    }

    /// The swap `V ⊗ W → W ⊗ V`.
    pub fn flip(field: Field, v: &Space, w: &Space) -> LinearMap {
        LinearMap::permutation(field, &[v.clone(), w.clone()], &[1, 0])
    }

    /// Reorders tensor legs: output leg `t` is input leg `order[t]`.
    pub fn permutation(field: Field, spaces: &[Space], order: &[usize]) -> LinearMap {
        assert_eq!(spaces.len(), order.len());
        let in_dims: Vec<usize> = spaces.iter().map(Space::dim).collect();
        let out_spaces: Vec<Space> = order.iter().map(|&i| spaces[i].clone()).collect();
        let out_dims: Vec<usize> = out_spaces.iter().map(Space::dim).collect();
        let domain = Space::tensor_all(spaces);
        let codomain = Space::tensor_all(&out_spaces);
        let mut target = vec![0usize; domain.dim()];
        for (c, t) in target.iter_mut().enumerate() {
            let idx = Space::unflatten(c, &in_dims);
            let out: Vec<usize> = order.iter().map(|&i| idx[i]).collect();
            *t = Space::flatten(&out, &out_dims);
        }
        LinearMap::from_fn(field, &domain, &codomain, |r, c| {
            if target[c] == r {
                field.one()
            } else {
                field.zero()
            }
        })
    }

    /// Builds a map `L ⊗ R → O` from `t[i][j][k]`, the coefficient of `o_k`
    /// in the image of `l_i ⊗ r_j`.
    pub fn from_binary_table(
        field: Field,
        left: &Space,
        right: &Space,
        out: &Space,
        t: &[Vec<Vec<Scalar>>],
    ) -> Result<LinearMap, LinError> {
        check_table(t, left.dim(), right.dim(), out.dim())?;
        let dr = right.dim();
        Ok(LinearMap::from_fn(field, &left.tensor(right), out, |k, c| t[c / dr][c % dr][k].clone()))
    }

    /// Inverse of [`LinearMap::from_binary_table`].
    pub fn binary_table(&self, left_dim: usize, right_dim: usize) -> Vec<Vec<Vec<Scalar>>> {
        assert_eq!(left_dim * right_dim, self.cols());
        (0..left_dim)
            .map(|i| (0..right_dim).map(|j| self.column(i * right_dim + j)).collect())
            .collect()
    }

    /// Builds a map `S → L ⊗ R` from `t[i][j][k]`, the coefficient of
    /// `l_j ⊗ r_k` in the image of `s_i`.
    pub fn from_split_table(
        field: Field,
        source: &Space,
        left: &Space,
        right: &Space,
        t: &[Vec<Vec<Scalar>>],
    ) -> Result<LinearMap, LinError> {
        check_table(t, source.dim(), left.dim(), right.dim())?;
        let dr = right.dim();
        Ok(LinearMap::from_fn(field, source, &left.tensor(right), |r, i| t[i][r / dr][r % dr].clone()))
    }

    pub fn split_table(&self, left_dim: usize, right_dim: usize) -> Vec<Vec<Vec<Scalar>>> {
        assert_eq!(left_dim * right_dim, self.rows());
        (0..self.cols())
            .map(|i| {
                (0..left_dim)
                    .map(|j| (0..right_dim).map(|k| self.entry(j * right_dim + k, i).clone()).collect())
                    .collect()
            })
            .collect()
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn domain(&self) -> &Space {
        &self.0.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.0.codomain
    }

    pub fn rows(&self) -> usize {
        self.0.codomain.dim()
    }

    pub fn cols(&self) -> usize {
        self.0.domain.dim()
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.0.entries[row * self.cols() + col]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0.entries
    }

    pub fn column(&self, col: usize) -> Vec<Scalar> {
        (0..self.rows()).map(|r| self.entry(r, col).clone()).collect()
    }

    pub fn row(&self, row: usize) -> &[Scalar] {
        let c = self.cols();
        &self.0.entries[row * c..(row + 1) * c]
    }

    /// Nonzero entries of every column, computed once per map value.
    pub fn sparse_columns(&self) -> &[Vec<(usize, Scalar)>] {
        self.0.sparse.get_or_init(|| {
            (0..self.cols())
                .map(|c| {
                    (0..self.rows())
                        .filter_map(|r| {
                            let v = self.entry(r, c);
                            (!v.is_zero()).then(|| (r, v.clone()))
                        })
                        .collect()
                })
                .collect()
        })
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols(), "vector length does not match domain");
        let mut out = vec![self.field().zero(); self.rows()];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, a) in &self.sparse_columns()[c] {
                out[*r] += &(a * x);
            }
        }
        out
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinearMap) -> Result<LinearMap, LinError> {
        compose(self, g)
    }

    pub fn tensor(&self, g: &LinearMap) -> LinearMap {
        tensor(self, g)
    }

    pub fn power(&self, n: i64) -> Result<LinearMap, LinError> {
        power(self, n)
    }

    /// Cached inverse.
    pub fn inverse(&self) -> Result<LinearMap, LinError> {
        if self.rows() != self.cols() {
            return Err(LinError::NotSquare(self.rows(), self.cols()));
        }
        self.0
            .inverse
            .get_or_init(|| {
                invert(self).map(|inv| {
                    let inv = LinearMap::build(self.field(), self.codomain().clone(), self.domain().clone(), inv);
                    // the inverse of the inverse is this map
                    let _ = inv.0.inverse.set(Some(self.clone()));
                    inv
                })
            })
            .clone()
            .ok_or(LinError::NonInvertible)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_ok()
    }

    pub fn add(&self, g: &LinearMap) -> Result<LinearMap, LinError> {
        self.same_shape(g)?;
        let entries = self.entries().iter().zip(g.entries()).map(|(a, b)| a + b).collect();
        Ok(LinearMap::build(self.field(), self.domain().clone(), self.codomain().clone(), entries))
    }

    pub fn sub(&self, g: &LinearMap) -> Result<LinearMap, LinError> {
        self.same_shape(g)?;
        let entries = self.entries().iter().zip(g.entries()).map(|(a, b)| a - b).collect();
        Ok(LinearMap::build(self.field(), self.domain().clone(), self.codomain().clone(), entries))
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        let entries = self.entries().iter().map(|a| a * s).collect();
        LinearMap::build(self.field(), self.domain().clone(), self.codomain().clone(), entries)
    }

    /// Copy with one entry replaced.
    pub fn with_entry(&self, row: usize, col: usize, value: Scalar) -> LinearMap {
        let mut entries = self.entries().to_vec();
        entries[row * self.cols() + col] = value;
        LinearMap::build(self.field(), self.domain().clone(), self.codomain().clone(), entries)
    }

    /// Same matrix, relabelled spaces of equal dimensions.
    pub fn relabel(&self, domain: &Space, codomain: &Space) -> LinearMap {
        assert_eq!(domain.dim(), self.cols());
        assert_eq!(codomain.dim(), self.rows());
        LinearMap::build(self.field(), domain.clone(), codomain.clone(), self.entries().to_vec())
    }

    pub fn is_identity(&self) -> bool {
        self.rows() == self.cols()
            && (0..self.rows()).all(|r| {
                (0..self.cols()).all(|c| {
                    let v = self.entry(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    fn same_shape(&self, g: &LinearMap) -> Result<(), LinError> {
        if self.rows() != g.rows() || self.cols() != g.cols() {
            return Err(LinError::ShapeMismatch {
                expected: (self.rows(), self.cols()),
                found: (g.rows(), g.cols()),
            });
        }
        Ok(())
    }
}

impl PartialEq for LinearMap {
    fn eq(&self, other: &LinearMap) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.rows() == other.rows() && self.cols() == other.cols() && self.entries() == other.entries())
    }
}

impl Eq for LinearMap {}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap {}x{} over {}", self.rows(), self.cols(), self.field())?;
        if self.rows() * self.cols() <= 256 {
            for r in 0..self.rows() {
                let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
                writeln!(f, "  [{}]", row.join(", "))?;
            }
        }
        Ok(())
    }
}

fn check_table(t: &[Vec<Vec<Scalar>>], a: usize, b: usize, c: usize) -> Result<(), LinError> {
    let ok = t.len() == a && t.iter().all(|x| x.len() == b && x.iter().all(|y| y.len() == c));
    if ok {
        Ok(())
    } else {
        Err(LinError::ShapeMismatch {
            expected: (a, b * c),
            found: (t.len(), t.first().map_or(0, |x| x.len() * x.first().map_or(0, Vec::len))),
        })
    }
}

/// `f ∘ g`, exact matrix product. Spaces are matched by dimension; basis
/// names are labels only.
pub fn compose(f: &LinearMap, g: &LinearMap) -> Result<LinearMap, LinError> {
    if g.rows() != f.cols() {
        return Err(LinError::DimensionMismatch {
            op: "compose",
            expected: f.cols(),
            found: g.rows(),
        });
    }
    let field = f.field();
    let (n, k, m) = (f.rows(), f.cols(), g.cols());
    let mut entries = vec![field.zero(); n * m];
    for i in 0..n {
        let out = &mut entries[i * m..(i + 1) * m];
        for l in 0..k {
            let a = f.entry(i, l);
            if a.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let b = g.entry(l, j);
                if !b.is_zero() {
                    *slot += &(a * b);
                }
            }
        }
    }
    Ok(LinearMap::build(field, g.domain().clone(), f.codomain().clone(), entries))
}

/// Kronecker product; `e_i ⊗ e_j` maps to index `i * dim(N) + j`.
pub fn tensor(f: &LinearMap, g: &LinearMap) -> LinearMap {
    let field = f.field();
    let domain = f.domain().tensor(g.domain());
    let codomain = f.codomain().tensor(g.codomain());
    let (gr, gc) = (g.rows(), g.cols());
    LinearMap::from_fn(field, &domain, &codomain, |r, c| {
        let a = f.entry(r / gr, c / gc);
        if a.is_zero() {
            return field.zero();
        }
        a * g.entry(r % gr, c % gc)
    })
}

/// Exact `n`-th power; negative exponents go through the cached inverse.
pub fn power(f: &LinearMap, n: i64) -> Result<LinearMap, LinError> {
    if f.rows() != f.cols() {
        return Err(LinError::NotSquare(f.rows(), f.cols()));
    }
    let base = if n < 0 { f.inverse()? } else { f.clone() };
    let mut e = n.unsigned_abs();
    let mut acc = LinearMap::identity(f.field(), f.codomain()).relabel(f.domain(), f.codomain());
    let mut sq = base;
    while e > 0 {
        if e & 1 == 1 {
            acc = compose(&acc, &sq)?;
        }
        e >>= 1;
        if e > 0 {
            sq = compose(&sq, &sq)?;
        }
    }
    Ok(acc)
}
