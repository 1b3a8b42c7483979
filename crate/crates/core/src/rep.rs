//! The category Rep(G) of finite-dimensional rational representations.
//!
//! Objects carry one matrix per group element. Every constructor checks
//! the Cayley-graph relations `ρ(x·s) = ρ(x)ρ(s)` for all elements `x` and
//! generators `s`, together with `ρ(e) = 1`; by induction on word length this
//! is equivalent to `ρ` being a homomorphism, so downstream code never
//! re-checks.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::linalg::{Matrix, Rational, RowReducer};

#[derive(Clone)]
pub struct RepObject {
    group: Arc<FiniteGroup>,
    dim: usize,
    matrices: Arc<Vec<Matrix>>,
}

impl fmt::Debug for RepObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepObject(dim {}, |G| = {})", self.dim, self.group.order())
    }
}

impl PartialEq for RepObject {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.matrices == other.matrices
    }
}

impl Eq for RepObject {}

fn check_same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Result<()> {
    if a.same_as(b) {
        Ok(())
    } else {
        Err(Error::GroupMismatch)
    }
}

impl RepObject {
    /// Expand generator images (aligned with `group.generators()`) over the
    /// whole group.
    pub fn from_generators(group: &Arc<FiniteGroup>, dim: usize, generators: Vec<Matrix>) -> Result<Self> {
        let gens = group.generators();
        if generators.len() != gens.len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} generator matrices for {} generators",
                generators.len(),
                gens.len()
            )));
        }
        if let Some(m) = generators.iter().find(|m| m.shape() != (dim, dim)) {
            return Err(Error::InvalidRepresentation(format!("{:?} matrix in dimension {dim}", m.shape())));
        }
        let n = group.order();
        let mut mats: Vec<Option<Matrix>> = vec![None; n];
        mats[group.identity()] = Some(Matrix::identity(dim));
        let mut queue = std::collections::VecDeque::from([group.identity()]);
        while let Some(x) = queue.pop_front() {
            let mx = mats[x].clone().expect("visited");
            for (&s, ms) in gens.iter().zip(&generators) {
                let y = group.mul(x, s);
                let candidate = &mx * ms;
                match &mats[y] {
                    None => {
                        mats[y] = Some(candidate);
                        queue.push_back(y);
                    }
                    Some(existing) if *existing == candidate => {}
                    Some(_) => {
                        return Err(Error::InvalidRepresentation(format!(
                            "relation violated at {} * {}",
                            group.label(x),
                            group.label(s)
                        )))
                    }
                }
            }
        }
        let matrices = mats
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| Error::InvalidRepresentation(format!("element {i} not reached from the generators"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(RepObject { group: group.clone(), dim, matrices: Arc::new(matrices) })
    }

    /// Object with the given matrix for every element, verified.
    pub fn from_element_matrices(group: &Arc<FiniteGroup>, dim: usize, matrices: Vec<Matrix>) -> Result<Self> {
        if matrices.len() != group.order() {
            return Err(Error::InvalidRepresentation(format!(
                "{} matrices for a group of order {}",
                matrices.len(),
                group.order()
            )));
        }
        if matrices.iter().any(|m| m.shape() != (dim, dim)) {
            return Err(Error::InvalidRepresentation(format!("matrix of the wrong shape for dimension {dim}")));
        }
        if !matrices[group.identity()].is_identity() {
            return Err(Error::InvalidRepresentation("identity element does not act trivially".into()));
        }
        for x in group.elements() {
            for &s in group.generators() {
                if matrices[group.mul(x, s)] != &matrices[x] * &matrices[s] {
                    return Err(Error::InvalidRepresentation(format!(
                        "relation violated at {} * {}",
                        group.label(x),
                        group.label(s)
                    )));
                }
            }
        }
        Ok(RepObject { group: group.clone(), dim, matrices: Arc::new(matrices) })
    }

    /// The unit object `1`: one-dimensional and trivial.
    pub fn unit(group: &Arc<FiniteGroup>) -> Self {
        Self::trivial(group, 1)
    }

    /// `1^{⊕dim}`.
    pub fn trivial(group: &Arc<FiniteGroup>, dim: usize) -> Self {
        let mats = vec![Matrix::identity(dim); group.order()];
        RepObject { group: group.clone(), dim, matrices: Arc::new(mats) }
    }

    /// Permutation representation of an action: `ρ(g) e_i = e_{action(g)[i]}`.
    pub fn from_action(group: &Arc<FiniteGroup>, degree: usize, action: impl Fn(usize) -> Vec<usize>) -> Result<Self> {
        let mats = group
            .elements()
            .map(|g| {
                let img = action(g);
                if img.len() != degree {
                    return Err(Error::InvalidRepresentation("action image of the wrong length".into()));
                }
                let mut m = Matrix::zeros(degree, degree);
                for (i, &j) in img.iter().enumerate() {
                    m[(j, i)] = Rational::one();
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_element_matrices(group, degree, mats)
    }

    /// Left regular representation `ρ(g) e_x = e_{gx}`.
    pub fn regular(group: &Arc<FiniteGroup>) -> Self {
        let n = group.order();
        Self::from_action(group, n, |g| (0..n).map(|x| group.mul(g, x)).collect())
            .expect("the regular action is a homomorphism")
    }

    /// The defining permutation representation of a permutation group.
    pub fn permutation(group: &Arc<FiniteGroup>) -> Result<Self> {
        let degree = group
            .permutation_degree()
            .ok_or_else(|| Error::InvalidRepresentation("group was not built from permutations".into()))?;
        Self::from_action(group, degree, |g| group.permutation(g).expect("permutation group").to_vec())
    }

    /// Sign character of a permutation group.
    pub fn sign(group: &Arc<FiniteGroup>) -> Result<Self> {
        let perm = Self::permutation(group)?;
        let mats = group
            .elements()
            .map(|g| {
                let d = perm.matrix(g).determinant().expect("square");
                Matrix::new(1, 1, vec![d]).expect("1x1")
            })
            .collect();
        Self::from_element_matrices(group, 1, mats)
    }

    /// Pull back a representation of `G/N` along `projection: G → G/N`.
    pub fn inflate(quotient_rep: &RepObject, group: &Arc<FiniteGroup>, projection: &[usize]) -> Result<Self> {
        if projection.len() != group.order() {
            return Err(Error::InvalidRepresentation("projection has the wrong length".into()));
        }
        let mats = projection
            .iter()
            .map(|&c| quotient_rep.matrices.get(c).cloned().ok_or(Error::ElementOutOfRange(c)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_element_matrices(group, quotient_rep.dim, mats)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.matrices[g]
    }

    pub fn generator_matrices(&self) -> Vec<Matrix> {
        self.group.generators().iter().map(|&s| self.matrices[s].clone()).collect()
    }

    /// `ρ(xy) = ρ(x)ρ(y)` over all pairs. Construction already guarantees
    /// this; the exhaustive form exists for tests.
    pub fn verify_homomorphism_exhaustive(&self) -> bool {
        let g = &self.group;
        self.matrices[g.identity()].is_identity()
            && g.elements().all(|x| {
                g.elements()
                    .all(|y| self.matrices[g.mul(x, y)] == &self.matrices[x] * &self.matrices[y])
            })
    }

    pub fn direct_sum(&self, other: &RepObject) -> Result<RepObject> {
        check_same_group(&self.group, &other.group)?;
        let mats = self
            .group
            .elements()
            .map(|g| Matrix::block_diag(&[self.matrix(g), other.matrix(g)]))
            .collect();
        Self::from_element_matrices(&self.group, self.dim + other.dim, mats)
    }

    /// `X ⊗ Y`, basis `e_i ⊗ f_j` at index `i * dim(Y) + j`.
    pub fn tensor(&self, other: &RepObject) -> Result<RepObject> {
        check_same_group(&self.group, &other.group)?;
        let mats = self.group.elements().map(|g| self.matrix(g).kron(other.matrix(g))).collect();
        Self::from_element_matrices(&self.group, self.dim * other.dim, mats)
    }

    /// Contragredient: `ρ^∨(g) = ρ(g⁻¹)ᵀ`.
    pub fn dual(&self) -> RepObject {
        let mats = self
            .group
            .elements()
            .map(|g| self.matrix(self.group.inv(g)).transpose())
            .collect();
        Self::from_element_matrices(&self.group, self.dim, mats).expect("dual of a representation")
    }

    /// Internal Hom: `dim(Y) x dim(X)` matrices flattened row-major (entry
    /// `(i, j)` at index `i * dim(X) + j`) with `g·f = ρ_Y(g) f ρ_X(g)⁻¹`.
    pub fn internal_hom(x: &RepObject, y: &RepObject) -> Result<RepObject> {
        check_same_group(&x.group, &y.group)?;
        let mats = x.group.elements().map(|g| Self::internal_hom_action(x, y, g)).collect();
        Self::from_element_matrices(&x.group, x.dim * y.dim, mats)
    }

    /// Matrix of `g` on the internal Hom, `ρ_Y(g) ⊗ ρ_X(g⁻¹)ᵀ`, without
    /// materializing the whole object.
    pub fn internal_hom_action(x: &RepObject, y: &RepObject, g: usize) -> Matrix {
        y.matrix(g).kron(&x.matrix(x.group.inv(g)).transpose())
    }

    /// Reynolds projector `(1/|H|) Σ_{s∈H} ρ(s)`.
    pub fn reynolds(&self, h: &Subgroup) -> Result<Matrix> {
        check_same_group(&self.group, h.group())?;
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for &s in h.elements() {
            acc = &acc + self.matrix(s);
        }
        Ok(acc.scale(&Rational::from(h.order()).recip().expect("nonempty")))
    }

    /// `X^H`: the image of the Reynolds projector for `H`, with its
    /// canonical (RREF) basis as the inclusion.
    pub fn invariants(&self, h: &Subgroup) -> Result<SubobjectWitness> {
        let e = self.reynolds(h)?;
        let basis = e.column_space();
        let inclusion = Matrix::from_columns(&basis, self.dim)?;
        Ok(SubobjectWitness { ambient: self.clone(), inclusion })
    }

    /// `X = 1^{dim}`, i.e. `X^G = X`.
    pub fn is_trivial_object(&self) -> bool {
        self.matrices.iter().all(Matrix::is_identity)
            && self.invariants(&Subgroup::whole(&self.group)).map_or(false, |w| w.dim() == self.dim)
    }

    /// Membership in `T^H`: `X^H = X`.
    pub fn in_th(&self, h: &Subgroup) -> Result<bool> {
        Ok(self.invariants(h)?.dim() == self.dim)
    }

    /// Kernel of `ρ`.
    pub fn kernel(&self) -> Subgroup {
        let k: Vec<usize> = self.group.elements().filter(|&g| self.matrix(g).is_identity()).collect();
        Subgroup::new(&self.group, &k).expect("kernel is a subgroup")
    }

    /// Total dimension of the direct sum of the listed objects.
    pub fn total_dim(objects: &[RepObject]) -> usize {
        objects.iter().map(RepObject::dim).sum()
    }
}

/// Largest subgroup acting trivially on every listed object. With no
/// objects this is all of `G`.
pub fn subgroup_for_objects(group: &Arc<FiniteGroup>, objects: &[RepObject]) -> Result<Subgroup> {
    for x in objects {
        check_same_group(group, &x.group)?;
    }
    let k: Vec<usize> = group
        .elements()
        .filter(|&g| objects.iter().all(|x| x.matrix(g).is_identity()))
        .collect();
    Subgroup::new(group, &k)
}

/// Basis of `Hom_G(X, Y)`: the solutions `M` (shape `dim Y x dim X`) of
/// `ρ_Y(s) M = M ρ_X(s)` over the generators `s`, in RREF free-variable
/// order of the row-major flattening.
pub fn hom_space(x: &RepObject, y: &RepObject) -> Result<Vec<RepMorphism>> {
    check_same_group(&x.group, &y.group)?;
    let (dx, dy) = (x.dim, y.dim);
    let mut red = RowReducer::new(dx * dy);
    'gens: for &s in x.group.generators() {
        let (a, b) = (y.matrix(s), x.matrix(s));
        for i in 0..dy {
            for j in 0..dx {
                let mut row = vec![Rational::zero(); dx * dy];
                for k in 0..dy {
                    let c = &a[(i, k)];
                    if !c.is_zero() {
                        row[k * dx + j] += c;
                    }
                }
                for l in 0..dx {
                    let c = &b[(l, j)];
                    if !c.is_zero() {
                        row[i * dx + l] -= c;
                    }
                }
                red.push(row);
                if red.is_full() {
                    break 'gens;
                }
            }
        }
    }
    red.kernel_basis()
        .into_iter()
        .map(|v| {
            let m = Matrix::new(dy, dx, v)?;
            Ok(RepMorphism { source: x.clone(), target: y.clone(), matrix: m })
        })
        .collect()
}

/// A G-equivariant linear map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMorphism {
    source: RepObject,
    target: RepObject,
    matrix: Matrix,
}

impl RepMorphism {
    /// Checks the intertwining relation for every group element.
    pub fn new(source: &RepObject, target: &RepObject, matrix: Matrix) -> Result<Self> {
        check_same_group(&source.group, &target.group)?;
        if matrix.shape() != (target.dim, source.dim) {
            return Err(Error::Shape(format!(
                "{:?} morphism matrix between dimensions {} and {}",
                matrix.shape(),
                source.dim,
                target.dim
            )));
        }
        for g in source.group.elements() {
            if &(target.matrix(g) * &matrix) != &(&matrix * source.matrix(g)) {
                return Err(Error::NotIntertwiner(format!("fails at {}", source.group.label(g))));
            }
        }
        Ok(RepMorphism { source: source.clone(), target: target.clone(), matrix })
    }

    pub fn identity(x: &RepObject) -> Self {
        RepMorphism { source: x.clone(), target: x.clone(), matrix: Matrix::identity(x.dim) }
    }

    pub fn source(&self) -> &RepObject {
        &self.source
    }

    pub fn target(&self) -> &RepObject {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &RepMorphism) -> Result<RepMorphism> {
        if other.target != self.source {
            return Err(Error::Shape("composing morphisms with mismatched ends".into()));
        }
        Ok(RepMorphism {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &other.matrix,
        })
    }

    pub fn tensor(&self, other: &RepMorphism) -> Result<RepMorphism> {
        Ok(RepMorphism {
            source: self.source.tensor(&other.source)?,
            target: self.target.tensor(&other.target)?,
            matrix: self.matrix.kron(&other.matrix),
        })
    }
}

/// A G-stable subspace, given by an inclusion matrix with independent
/// columns.
#[derive(Clone, Debug)]
pub struct SubobjectWitness {
    ambient: RepObject,
    inclusion: Matrix,
}

impl SubobjectWitness {
    pub fn new(ambient: &RepObject, inclusion: Matrix) -> Result<Self> {
        let k = inclusion.cols();
        if inclusion.rows() != ambient.dim || inclusion.rank() != k {
            return Err(Error::InvalidRepresentation("inclusion must have independent columns".into()));
        }
        for g in ambient.group.elements() {
            let moved = ambient.matrix(g) * &inclusion;
            if Matrix::hstack(&[&inclusion, &moved])?.rank() != k {
                return Err(Error::InvalidRepresentation(format!(
                    "subspace not stable under {}",
                    ambient.group.label(g)
                )));
            }
        }
        Ok(SubobjectWitness { ambient: ambient.clone(), inclusion })
    }

    pub fn ambient(&self) -> &RepObject {
        &self.ambient
    }

    pub fn inclusion(&self) -> &Matrix {
        &self.inclusion
    }

    pub fn dim(&self) -> usize {
        self.inclusion.cols()
    }

    /// The subobject as a representation in the basis of the inclusion
    /// columns.
    pub fn subrepresentation(&self) -> Result<RepObject> {
        let k = self.dim();
        let left = self
            .inclusion
            .left_inverse()
            .ok_or_else(|| Error::InvalidRepresentation("inclusion not injective".into()))?;
        let g = &self.ambient.group;
        let mats = g
            .elements()
            .map(|x| &(&left * self.ambient.matrix(x)) * &self.inclusion)
            .collect();
        RepObject::from_element_matrices(g, k, mats)
    }

    pub fn inclusion_morphism(&self) -> Result<RepMorphism> {
        RepMorphism::new(&self.subrepresentation()?, &self.ambient, self.inclusion.clone())
    }

    /// G-equivariant projection onto the subobject: the group average of
    /// any linear projection onto it.
    pub fn equivariant_projection(&self) -> Result<Matrix> {
        let left = self
            .inclusion
            .left_inverse()
            .ok_or_else(|| Error::InvalidRepresentation("inclusion not injective".into()))?;
        let p0 = &self.inclusion * &left;
        let g = &self.ambient.group;
        let mut acc = Matrix::zeros(self.ambient.dim, self.ambient.dim);
        for x in g.elements() {
            let conj = &(self.ambient.matrix(x) * &p0) * self.ambient.matrix(g.inv(x));
            acc = &acc + &conj;
        }
        Ok(acc.scale(&Rational::from(g.order()).recip().expect("nonempty")))
    }

    /// A G-stable complement (Maschke).
    pub fn complement(&self) -> Result<SubobjectWitness> {
        let p = self.equivariant_projection()?;
        let q = &Matrix::identity(self.ambient.dim) - &p;
        let basis = q.column_space();
        SubobjectWitness::new(&self.ambient, Matrix::from_columns(&basis, self.ambient.dim)?)
    }
}

/// Wire format: generator matrices as flattened row-major `[num, den]`
/// pairs, aligned with the group's generators. `group` names the group the
/// matrices refer to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepSpec {
    pub group: String,
    pub dim: usize,
    pub generator_matrices: Vec<Vec<Rational>>,
}

impl RepSpec {
    pub fn from_object(group_ref: &str, x: &RepObject) -> Self {
        RepSpec {
            group: group_ref.to_string(),
            dim: x.dim,
            generator_matrices: x.generator_matrices().into_iter().map(Matrix::into_data).collect(),
        }
    }

    pub fn build(&self, group: &Arc<FiniteGroup>) -> Result<RepObject> {
        let mats = self
            .generator_matrices
            .iter()
            .map(|entries| Matrix::new(self.dim, self.dim, entries.clone()))
            .collect::<Result<Vec<_>>>()?;
        RepObject::from_generators(group, self.dim, mats)
    }
}
