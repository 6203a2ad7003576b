//! Based vector spaces and linear maps between them.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, SparseMatrix};

/// A finite-dimensional space with an ordered, labelled basis.
///
/// Two spaces are compatible exactly when their label lists are identical.
#[derive(Clone)]
pub struct BasedSpace {
    labels: Arc<[String]>,
}

impl PartialEq for BasedSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }
}

impl Eq for BasedSpace {}

impl fmt::Debug for BasedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BasedSpace{:?}", &self.labels[..self.labels.len().min(8)])?;
        if self.labels.len() > 8 {
            write!(f, "(+{} more)", self.labels.len() - 8)?;
        }
        Ok(())
    }
}

impl BasedSpace {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<BasedSpace> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("duplicate basis label {:?}", w[0])));
        }
        Ok(BasedSpace { labels: labels.into() })
    }

    /// Labels `prefix0, prefix1, …`.
    pub fn indexed(prefix: &str, dim: usize) -> BasedSpace {
        BasedSpace { labels: (0..dim).map(|i| format!("{prefix}{i}")).collect::<Vec<_>>().into() }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Tensor product with flat labels `a⊗b`, so that tensoring is strictly associative.
    pub fn tensor(&self, other: &BasedSpace) -> BasedSpace {
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        for a in self.labels.iter() {
            for b in other.labels.iter() {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        BasedSpace { labels: labels.into() }
    }

    /// Dual space with labels `a*`.
    pub fn dual(&self) -> BasedSpace {
        BasedSpace { labels: self.labels.iter().map(|l| format!("{l}*")).collect::<Vec<_>>().into() }
    }

    pub(crate) fn ensure_same(&self, other: &BasedSpace) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SpaceMismatch {
                expected: summary(self),
                found: summary(other),
            })
        }
    }
}

fn summary(s: &BasedSpace) -> String {
    let head: Vec<&str> = s.labels.iter().take(4).map(String::as_str).collect();
    if s.dim() > 4 {
        format!("{}, … ({} total)", head.join(", "), s.dim())
    } else {
        head.join(", ")
    }
}

/// A linear map between based spaces, stored densely (codomain × domain).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapMatrix {
    pub domain: BasedSpace,
    pub codomain: BasedSpace,
    pub matrix: Matrix,
}

impl MapMatrix {
    pub fn new(domain: BasedSpace, codomain: BasedSpace, matrix: Matrix) -> Result<MapMatrix> {
        if matrix.nrows() != codomain.dim() || matrix.ncols() != domain.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a map {} -> {}",
                matrix.nrows(),
                matrix.ncols(),
                domain.dim(),
                codomain.dim()
            )));
        }
        Ok(MapMatrix { domain, codomain, matrix })
    }

    pub fn identity(field: Field, space: &BasedSpace) -> MapMatrix {
        MapMatrix {
            domain: space.clone(),
            codomain: space.clone(),
            matrix: Matrix::identity(field, space.dim()),
        }
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    /// `self ∘ rhs`; the inner spaces must carry identical labels.
    pub fn compose(&self, rhs: &MapMatrix) -> Result<MapMatrix> {
        self.domain.ensure_same(&rhs.codomain)?;
        Ok(MapMatrix {
            domain: rhs.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.mul(&rhs.matrix)?,
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        self.matrix.kernel()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.apply(v)
    }

    pub fn inverse(&self) -> Result<MapMatrix> {
        Ok(MapMatrix {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            matrix: self.matrix.inverse()?,
        })
    }

    pub fn transpose(&self) -> MapMatrix {
        MapMatrix {
            domain: self.codomain.dual(),
            codomain: self.domain.dual(),
            matrix: self.matrix.transpose(),
        }
    }
}

/// A linear map between based spaces stored sparsely; used for module actions
/// and braidings, whose spaces can be large but whose matrices are thin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMap {
    pub domain: BasedSpace,
    pub codomain: BasedSpace,
    pub matrix: SparseMatrix,
}

impl SparseMap {
    pub fn new(domain: BasedSpace, codomain: BasedSpace, matrix: SparseMatrix) -> Result<SparseMap> {
        if matrix.nrows() != codomain.dim() || matrix.ncols() != domain.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a map {} -> {}",
                matrix.nrows(),
                matrix.ncols(),
                domain.dim(),
                codomain.dim()
            )));
        }
        Ok(SparseMap { domain, codomain, matrix })
    }

    pub fn identity(field: Field, space: &BasedSpace) -> SparseMap {
        SparseMap {
            domain: space.clone(),
            codomain: space.clone(),
            matrix: SparseMatrix::identity(field, space.dim()),
        }
    }

    pub fn compose(&self, rhs: &SparseMap) -> Result<SparseMap> {
        self.domain.ensure_same(&rhs.codomain)?;
        Ok(SparseMap {
            domain: rhs.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.compose(&rhs.matrix),
        })
    }

    /// `self ⊗ rhs` on the tensor-product spaces.
    pub fn tensor(&self, rhs: &SparseMap) -> SparseMap {
        SparseMap {
            domain: self.domain.tensor(&rhs.domain),
            codomain: self.codomain.tensor(&rhs.codomain),
            matrix: self.matrix.kron(&rhs.matrix),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain && self.matrix.is_identity()
    }

    pub fn to_dense(&self) -> MapMatrix {
        MapMatrix {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.to_dense(),
        }
    }

    pub fn inverse(&self) -> Result<SparseMap> {
        let inv = self.matrix.to_dense().inverse()?;
        Ok(SparseMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            matrix: SparseMatrix::from_dense(&inv),
        })
    }
}

/// The flip `X ⊗ Y → Y ⊗ X`.
pub fn flip(field: Field, x: &BasedSpace, y: &BasedSpace) -> SparseMap {
    let (m, n) = (x.dim(), y.dim());
    let perm: Vec<usize> = (0..m * n).map(|idx| (idx % n) * m + idx / n).collect();
    SparseMap {
        domain: x.tensor(y),
        codomain: y.tensor(x),
        matrix: SparseMatrix::permutation(field, &perm),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_are_unique_and_tensor_is_strict() {
        assert!(BasedSpace::new(["a", "a"]).is_err());
        let x = BasedSpace::new(["a", "b"]).unwrap();
        let y = BasedSpace::new(["c"]).unwrap();
        let z = BasedSpace::new(["d", "e"]).unwrap();
        assert_eq!(x.tensor(&y).tensor(&z), x.tensor(&y.tensor(&z)));
        assert_eq!(x.tensor(&z).label(1), "a⊗e");
    }

    #[test]
    fn composition_checks_labels() {
        let f = Field::Rational;
        let x = BasedSpace::new(["a", "b"]).unwrap();
        let y = BasedSpace::new(["c", "d"]).unwrap();
        let id = MapMatrix::identity(f, &x);
        let g = MapMatrix::new(x.clone(), y.clone(), Matrix::identity(f, 2)).unwrap();
        assert!(g.compose(&id).is_ok());
        assert!(id.compose(&g).is_err());
    }

    #[test]
    fn flip_squares_to_identity() {
        let f = Field::Rational;
        let x = BasedSpace::new(["a", "b"]).unwrap();
        let y = BasedSpace::new(["c", "d", "e"]).unwrap();
        let s = flip(f, &x, &y);
        let t = flip(f, &y, &x);
        assert!(t.compose(&s).unwrap().is_identity());
        // a⊗d (index 1) goes to d⊗a (index 2)
        assert_eq!(s.matrix.column(1)[0].0, 2);
    }
}
