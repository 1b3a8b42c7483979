//! Exact linear algebra over ℚ.

mod matrix;
mod rational;
mod reduce;

pub use matrix::{kernel_from_rref, Matrix};
pub use rational::Rational;
pub use reduce::RowReducer;

/// RREF basis of the span of `vectors` (each of length `len`). Two families
/// span the same subspace iff their canonical spans are equal.
pub fn canonical_span<'a, I>(len: usize, vectors: I) -> Vec<Vec<Rational>>
where
    I: IntoIterator<Item = &'a [Rational]>,
{
    let mut red = RowReducer::new(len);
    for v in vectors {
        red.push(v.to_vec());
    }
    red.into_rref().0
}

/// Whether every vector of `small` lies in the span of `big`.
pub fn span_contains<'a, 'b, I, J>(len: usize, big: I, small: J) -> bool
where
    I: IntoIterator<Item = &'a [Rational]>,
    J: IntoIterator<Item = &'b [Rational]>,
{
    let mut red = RowReducer::new(len);
    for v in big {
        red.push(v.to_vec());
    }
    small.into_iter().all(|v| red.contains(v))
}

/// Coordinates of each vector of `vectors` in terms of the independent
/// family `basis`, as the columns of a `basis.len() x vectors.len()` matrix.
/// `None` if some vector is outside the span.
pub fn coordinates(basis: &[&[Rational]], vectors: &[&[Rational]]) -> Option<Matrix> {
    let len = basis.first().or(vectors.first()).map_or(0, |v| v.len());
    let (k, m) = (basis.len(), vectors.len());
    let cols: Vec<Vec<Rational>> = basis.iter().chain(vectors).map(|v| v.to_vec()).collect();
    let (r, pivots) = Matrix::from_columns(&cols, len).ok()?.rref();
    // Every basis column must be a pivot and no vector column may be one.
    if pivots.len() != k || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    let mut out = Matrix::zeros(k, m);
    for i in 0..k {
        for j in 0..m {
            out[(i, j)] = r[(i, k + j)].clone();
        }
    }
    Some(out)
}
