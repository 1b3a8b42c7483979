//! Twists of `Rep(μₙ)` by torsors, in coordinates.
//!
//! `Rep(μₙ)` over ℚ is modelled by ℤ/n-graded spaces. A `μₙ`-torsor is a
//! Kummer class `a ∈ ℚ*/(ℚ*)ⁿ`; with representatives `0 … n−1` its twist
//! is the identity functor whose tensor structure on `X_i ⊗ Y_j` is
//! multiplication by `c(i, j) = 1` if `i + j < n`, else `a`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

/// A ℤ/n-graded space: the dimension of each degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicGradedObject {
    modulus: usize,
    dims: Vec<usize>,
}

impl CyclicGradedObject {
    /// `dims[i]` is the dimension in degree `i`; missing degrees are zero.
    pub fn new(modulus: usize, dims: &[usize]) -> Result<Self> {
        if modulus == 0 || dims.len() > modulus {
            return Err(Error::InvalidCocycle(format!("{} degrees for modulus {modulus}", dims.len())));
        }
        let mut d = dims.to_vec();
        d.resize(modulus, 0);
        Ok(CyclicGradedObject { modulus, dims: d })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn dim_in(&self, degree: usize) -> usize {
        self.dims[degree % self.modulus]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Degree of each basis vector, degrees ascending.
    pub fn basis_degrees(&self) -> Vec<usize> {
        self.dims.iter().enumerate().flat_map(|(i, &d)| std::iter::repeat(i).take(d)).collect()
    }

    pub fn tensor(&self, other: &CyclicGradedObject) -> Result<CyclicGradedObject> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        let n = self.modulus;
        let mut dims = vec![0; n];
        for (i, a) in self.dims.iter().enumerate() {
            for (j, b) in other.dims.iter().enumerate() {
                dims[(i + j) % n] += a * b;
            }
        }
        Ok(CyclicGradedObject { modulus: n, dims })
    }
}

/// Normalized 2-cocycle `ℤ/n × ℤ/n → ℚ*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KummerCocycle {
    modulus: usize,
    class: Rational,
    /// Row-major `n x n`.
    table: Vec<Rational>,
}

impl KummerCocycle {
    /// The cocycle of the class of `a`, checked on all `n³` triples.
    pub fn new(modulus: usize, a: Rational) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidCocycle("modulus must be positive".into()));
        }
        if a.is_zero() {
            return Err(Error::InvalidCocycle("Kummer class must be nonzero".into()));
        }
        let n = modulus;
        let table = (0..n * n)
            .map(|k| if k / n + k % n < n { Rational::one() } else { a.clone() })
            .collect();
        let c = KummerCocycle { modulus, class: a, table };
        if !c.satisfies_cocycle_identity() {
            return Err(Error::InvalidCocycle(format!("class {} mod {n}", c.class)));
        }
        Ok(c)
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// The chosen representative `a`.
    pub fn class(&self) -> &Rational {
        &self.class
    }

    pub fn value(&self, i: usize, j: usize) -> &Rational {
        let n = self.modulus;
        &self.table[(i % n) * n + j % n]
    }

    pub fn table(&self) -> &[Rational] {
        &self.table
    }

    /// `c(i,j) c(i+j,k) = c(j,k) c(i,j+k)` for all `i, j, k`.
    pub fn satisfies_cocycle_identity(&self) -> bool {
        let n = self.modulus;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    self.value(i, j) * self.value(i + j, k) == self.value(j, k) * self.value(i, j + k)
                })
            })
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().all(Rational::is_one)
    }
}

/// The twist auto-equivalence: identity on objects and morphisms, tensor
/// structure given by the cocycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistFunctor {
    cocycle: KummerCocycle,
}

pub fn twist_functor(t: &KummerCocycle) -> TwistFunctor {
    TwistFunctor { cocycle: t.clone() }
}

impl TwistFunctor {
    pub fn cocycle(&self) -> &KummerCocycle {
        &self.cocycle
    }

    pub fn map_object(&self, x: &CyclicGradedObject) -> CyclicGradedObject {
        x.clone()
    }

    pub fn map_morphism(&self, m: &Matrix) -> Matrix {
        m.clone()
    }

    /// `J_{X,Y}: F X ⊗ F Y → F(X ⊗ Y)`, diagonal on the Kronecker basis of
    /// the degree-ordered bases.
    pub fn tensor_structure(&self, x: &CyclicGradedObject, y: &CyclicGradedObject) -> Result<Matrix> {
        let n = self.cocycle.modulus;
        if x.modulus != n || y.modulus != n {
            return Err(Error::ModulusMismatch(n, if x.modulus != n { x.modulus } else { y.modulus }));
        }
        let (dx, dy) = (x.basis_degrees(), y.basis_degrees());
        let diag: Vec<Rational> =
            dx.iter().flat_map(|&i| dy.iter().map(move |&j| (i, j))).map(|(i, j)| self.cocycle.value(i, j).clone()).collect();
        Ok(Matrix::diag(&diag))
    }

    /// `J_{X⊗Y,Z} (J_{X,Y} ⊗ 1) = J_{X,Y⊗Z} (1 ⊗ J_{Y,Z})` as diagonal
    /// matrices on the Kronecker basis of `X ⊗ Y ⊗ Z`.
    pub fn is_coherent(&self, x: &CyclicGradedObject, y: &CyclicGradedObject, z: &CyclicGradedObject) -> Result<bool> {
        x.tensor(y)?.tensor(z)?;
        let v = |i, j| self.cocycle.value(i, j);
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for &i in &x.basis_degrees() {
            for &j in &y.basis_degrees() {
                for &k in &z.basis_degrees() {
                    left.push(v(i, j) * v(i + j, k));
                    right.push(v(j, k) * v(i, j + k));
                }
            }
        }
        Ok(Matrix::diag(&left) == Matrix::diag(&right))
    }

    pub fn is_identity(&self) -> bool {
        self.cocycle.is_trivial()
    }
}

/// Result of composing two twists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistComposition {
    pub product: KummerCocycle,
    /// `b: ℤ/n → ℚ*` with `s·t = product · δb`; identically 1 here.
    pub coboundary: Vec<Rational>,
}

impl TwistComposition {
    /// Checks `s(i,j) t(i,j) = product(i,j) b(i) b(j) / b(i+j)`.
    pub fn verify(&self, s: &KummerCocycle, t: &KummerCocycle) -> bool {
        let n = self.product.modulus;
        let b = &self.coboundary;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = s.value(i, j) * t.value(i, j);
                let rhs = &(self.product.value(i, j) * &(&b[i] * &b[j])) / &b[(i + j) % n];
                lhs == rhs
            })
        })
    }
}

/// The pointwise product, which is on the nose the cocycle of the class
/// `ab`.
pub fn compose_twists(s: &KummerCocycle, t: &KummerCocycle) -> Result<TwistComposition> {
    if s.modulus != t.modulus {
        return Err(Error::ModulusMismatch(s.modulus, t.modulus));
    }
    let product = KummerCocycle::new(s.modulus, &s.class * &t.class)?;
    let pointwise: Vec<Rational> = s.table.iter().zip(&t.table).map(|(a, b)| a * b).collect();
    if pointwise != product.table {
        return Err(Error::InvalidCocycle("pointwise product differs from the product class".into()));
    }
    let comp = TwistComposition { coboundary: vec![Rational::one(); s.modulus], product };
    debug_assert!(comp.verify(s, t));
    Ok(comp)
}

/// `ω(P ∧ X)`: the same graded space, with the tensor-structure constants
/// relevant to `X ⊗ X` recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractedFibre {
    pub object: CyclicGradedObject,
    /// `(i, j, c(i, j))` for degrees `i, j` in the support of `X`.
    pub constants: Vec<(usize, usize, Rational)>,
    /// Tensor structure on `X ⊗ X`.
    pub self_tensor: Matrix,
}

pub fn contracted_product_fibre(t: &KummerCocycle, x: &CyclicGradedObject) -> Result<ContractedFibre> {
    let f = twist_functor(t);
    let self_tensor = f.tensor_structure(x, x)?;
    let support: Vec<usize> = (0..x.modulus).filter(|&i| x.dims[i] > 0).collect();
    let constants = support
        .iter()
        .flat_map(|&i| support.iter().map(move |&j| (i, j)))
        .map(|(i, j)| (i, j, t.value(i, j).clone()))
        .collect();
    Ok(ContractedFibre { object: f.map_object(x), constants, self_tensor })
}

/// Classes used by the cocycle suite.
pub fn sample_classes() -> Vec<Rational> {
    vec![Rational::from(-1i64), Rational::from(2i64), Rational::from(3i64), Rational::new(1, 2).expect("nonzero denominator")]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn cocycle_tables() {
        let c = KummerCocycle::new(2, q(-1)).unwrap();
        assert_eq!(c.table(), &[q(1), q(1), q(1), q(-1)]);
        let c = KummerCocycle::new(3, q(2)).unwrap();
        let twos: Vec<(usize, usize)> =
            (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).filter(|&(i, j)| c.value(i, j) == &q(2)).collect();
        assert_eq!(twos, vec![(1, 2), (2, 1), (2, 2)]);
        assert!(KummerCocycle::new(5, q(1)).unwrap().is_trivial());
        assert!(twist_functor(&KummerCocycle::new(5, q(1)).unwrap()).is_identity());
        assert!(matches!(KummerCocycle::new(3, q(0)), Err(Error::InvalidCocycle(_))));
        assert!(matches!(KummerCocycle::new(0, q(2)), Err(Error::InvalidCocycle(_))));
    }

    #[test]
    fn cocycle_identity_exhaustive() {
        for n in 1..=12 {
            for a in sample_classes() {
                assert!(KummerCocycle::new(n, a).unwrap().satisfies_cocycle_identity());
            }
        }
    }

    #[test]
    fn composition_examples() {
        let a = KummerCocycle::new(4, q(3)).unwrap();
        let one = KummerCocycle::new(4, q(1)).unwrap();
        assert_eq!(compose_twists(&a, &one).unwrap().product, a);
        let m = KummerCocycle::new(2, q(-1)).unwrap();
        assert!(compose_twists(&m, &m).unwrap().product.is_trivial());
        let c = compose_twists(&KummerCocycle::new(3, q(2)).unwrap(), &KummerCocycle::new(3, q(3)).unwrap()).unwrap();
        assert_eq!(c.product, KummerCocycle::new(3, q(6)).unwrap());
        assert!(matches!(compose_twists(&m, &a), Err(Error::ModulusMismatch(2, 4))));
    }

    #[test]
    fn contracted_product_examples() {
        let x = CyclicGradedObject::new(2, &[1, 1]).unwrap();
        let f = contracted_product_fibre(&KummerCocycle::new(2, q(-1)).unwrap(), &x).unwrap();
        assert_eq!(f.object, x);
        assert_eq!(f.self_tensor, Matrix::diag(&[q(1), q(1), q(1), q(-1)]));
        let f = contracted_product_fibre(&KummerCocycle::new(2, q(1)).unwrap(), &x).unwrap();
        assert!(f.self_tensor.is_identity());
        let y = CyclicGradedObject::new(3, &[2]).unwrap();
        let f = contracted_product_fibre(&KummerCocycle::new(3, q(5)).unwrap(), &y).unwrap();
        assert_eq!(f.object, y);
        assert!(f.self_tensor.is_identity());
        assert!(f.constants.iter().all(|(_, _, c)| c.is_one()));
    }

    #[test]
    fn graded_tensor_dims() {
        let x = CyclicGradedObject::new(3, &[1, 2, 0]).unwrap();
        let y = CyclicGradedObject::new(3, &[0, 1, 1]).unwrap();
        assert_eq!(x.tensor(&y).unwrap().dims(), &[2, 1, 3]);
        assert!(CyclicGradedObject::new(2, &[1, 1, 1]).is_err());
    }

    fn classes() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4)
            .prop_filter("nonzero", |(p, _)| *p != 0)
            .prop_map(|(p, d)| Rational::new(p, d).unwrap())
    }

    proptest! {
        #[test]
        fn composition_is_commutative_and_associative(n in 1usize..8, a in classes(), b in classes(), c in classes()) {
            let (a, b, c) = (KummerCocycle::new(n, a).unwrap(), KummerCocycle::new(n, b).unwrap(), KummerCocycle::new(n, c).unwrap());
            let ab = compose_twists(&a, &b).unwrap();
            prop_assert!(ab.verify(&a, &b));
            prop_assert_eq!(&ab.product, &compose_twists(&b, &a).unwrap().product);
            let left = compose_twists(&ab.product, &c).unwrap().product;
            let right = compose_twists(&a, &compose_twists(&b, &c).unwrap().product).unwrap().product;
            prop_assert_eq!(left, right);
        }

        #[test]
        fn twists_are_coherent(n in 1usize..6, a in classes(), dx in proptest::collection::vec(0usize..3, 1..6)) {
            let dx: Vec<usize> = dx.into_iter().take(n).collect();
            let x = CyclicGradedObject::new(n, &dx).unwrap();
            let f = twist_functor(&KummerCocycle::new(n, a).unwrap());
            prop_assert!(f.is_coherent(&x, &x, &x).unwrap());
            let j = f.tensor_structure(&x, &x).unwrap();
            prop_assert_eq!(j.rows(), x.total_dim() * x.total_dim());
            let m = Matrix::identity(x.total_dim());
            prop_assert_eq!(f.map_morphism(&m), m);
        }
    }
}
