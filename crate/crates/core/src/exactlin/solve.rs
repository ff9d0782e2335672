//! Fraction-free elimination.
//!
//! Rational systems are first scaled row by row to integer entries, after
//! which Bareiss updates keep every intermediate value an exact minor of the
//! augmented matrix, so no fractions appear until back substitution. Over
//! GF(p) the same update rule is used with field division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::{Field, LinError, LinearMap, Scalar};

/// A particular solution together with the dimension of the solution space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub x: Vec<Scalar>,
    pub nullity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solved {
    Solution(Solution),
    /// `y` satisfies `yA = 0` and `yb != 0`.
    NoSolution { certificate: Vec<Scalar> },
}

impl Solved {
    pub fn solution(&self) -> Option<&Solution> {
        match self {
            Solved::Solution(s) => Some(s),
            Solved::NoSolution { .. } => None,
        }
    }
}

/// Solves `A x = b` exactly; free variables are set to zero.
pub fn solve_linear(a: &[Vec<Scalar>], b: &[Scalar]) -> Result<Solved, LinError> {
    let rows = a.len();
    if rows != b.len() {
        return Err(LinError::DimensionMismatch {
            op: "solve_linear",
            expected: rows,
            found: b.len(),
        });
    }
    let Some(field) = b.first().map(Scalar::field) else {
        return Err(LinError::DimensionMismatch {
            op: "solve_linear",
            expected: 1,
            found: 0,
        });
    };
    let cols = a[0].len();
    if a.iter().any(|r| r.len() != cols) {
        return Err(LinError::ShapeMismatch {
            expected: (rows, cols),
            found: (rows, a.iter().map(Vec::len).max().unwrap_or(0)),
        });
    }

    // [A | b | I]: the identity block records which combination of the
    // original rows each reduced row is.
    let width = cols + 1 + rows;
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, bi))| {
            let mut r = Vec::with_capacity(width);
            r.extend(row.iter().cloned());
            r.push(bi.clone());
            r.extend((0..rows).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    for row in &mut m {
        clear_denominators(row);
    }

    let pivots = bareiss(&mut m, cols);
    let rank = pivots.len();

    if let Some(bad) = m[rank..].iter().find(|r| !r[cols].is_zero()) {
        return Ok(Solved::NoSolution {
            certificate: bad[cols + 1..].to_vec(),
        });
    }

    let mut x = vec![field.zero(); cols];
    for (r, &pc) in pivots.iter().enumerate().rev() {
        let mut acc = m[r][cols].clone();
        for (c, xc) in x.iter().enumerate().skip(pc + 1) {
            if !xc.is_zero() && !m[r][c].is_zero() {
                acc -= &(&m[r][c] * xc);
            }
        }
        x[pc] = &acc / &m[r][pc];
    }
    Ok(Solved::Solution(Solution {
        x,
        nullity: cols - rank,
    }))
}

/// Row-echelon form over the first `cols` columns; returns pivot columns.
fn bareiss(m: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let Some(field) = m.first().map(|r| r[0].field()) else {
        return Vec::new();
    };
    let width = m[0].len();
    let mut prev = field.one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..width {
                let (own, above) = (&row[j], &pivot_row[j]);
                let v = match (own.is_zero(), lead.is_zero() || above.is_zero()) {
                    (true, true) => continue,
                    (false, true) => &piv * own,
                    (true, false) => -&(&lead * above),
                    (false, false) => &(&piv * own) - &(&lead * above),
                };
                row[j] = &v / &prev;
            }
            row[c] = field.zero();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn clear_denominators(row: &mut [Scalar]) {
    let lcm = row.iter().fold(BigInt::one(), |acc, s| match s {
        Scalar::Q(q) => acc.lcm(q.denom()),
        Scalar::Fp { .. } => acc,
    });
    if lcm.is_one() {
        return;
    }
    let f = Scalar::Q(BigRational::from_integer(lcm));
    for s in row.iter_mut() {
        *s *= &f;
    }
}

/// Gauss-Jordan inverse of a square map, row-major entries of the result.
pub(super) fn invert(f: &LinearMap) -> Option<Vec<Scalar>> {
    let n = f.rows();
    let field: Field = f.field();
    let mut m: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut r = f.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(p, c);
        let inv = m[c][c].inv()?;
        for v in m[c].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == c || row[c].is_zero() {
                continue;
            }
            let lead = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &(&lead * p);
                }
            }
        }
    }
    Some(m.into_iter().flat_map(|r| r.into_iter().skip(n)).collect())
}
