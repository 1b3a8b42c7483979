//! The quotient `T/ω₀` of `T = Rep(G)` by a normal subgroup `H`.
//!
//! The pre-quotient category has one object `X̄` per representation and
//! `Hom(X̄, Ȳ) = ω₀(Hom(X, Y)^H)`, which with `ω₀` the forgetful functor is
//! the space of H-intertwiners. The quotient is its pseudo-abelian hull:
//! objects are pairs `(X̄, e)` with `e` an idempotent H-intertwiner, and
//! `Hom((X̄, e), (Ȳ, f)) = f ∘ Hom(X̄, Ȳ) ∘ e`.
//!
//! Morphisms are stored as matrices of shape `dim Y x dim X`. Hom bases are
//! canonical: the RREF basis of the row-major flattenings.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{is_normal, FiniteGroup, Subgroup};
use crate::linalg::{canonical_span, coordinates, Matrix, Rational, RowReducer};
use crate::rep::{RepMorphism, RepObject};

struct CtxInner {
    group: Arc<FiniteGroup>,
    normal: Subgroup,
}

/// A group `G` with a normal subgroup `H`; `ω₀` is the forgetful functor on
/// `T^H`.
#[derive(Clone)]
pub struct QuotientCtx(Arc<CtxInner>);

impl fmt::Debug for QuotientCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuotientCtx(|G| = {}, H = {:?})", self.0.group.order(), self.0.normal)
    }
}

fn flatten(ms: &[Matrix]) -> Vec<&[Rational]> {
    ms.iter().map(Matrix::as_slice).collect()
}

fn canonical_matrices(rows: usize, cols: usize, ms: &[Matrix]) -> Vec<Matrix> {
    canonical_span(rows * cols, flatten(ms))
        .into_iter()
        .map(|v| Matrix::new(rows, cols, v).expect("flattened shape"))
        .collect()
}

impl QuotientCtx {
    pub fn new(normal: &Subgroup) -> Result<Self> {
        let group = normal.group().clone();
        if !is_normal(&group, normal) {
            return Err(Error::NotNormal);
        }
        Ok(QuotientCtx(Arc::new(CtxInner { group, normal: normal.clone() })))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.0.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.0.normal
    }

    pub fn same(&self, other: &QuotientCtx) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.normal == other.0.normal
    }

    fn check_object(&self, x: &RepObject) -> Result<()> {
        if x.group().same_as(&self.0.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    fn is_h_intertwiner(&self, x: &RepObject, y: &RepObject, m: &Matrix) -> bool {
        self.0
            .normal
            .elements()
            .iter()
            .all(|&h| &(y.matrix(h) * m) == &(m * x.matrix(h)))
    }

    /// `ω₀(Hom(X, Y)^H)`: the image of the H-Reynolds projector on the
    /// internal Hom, as `dim Y x dim X` matrices.
    pub fn pre_quotient_hom(&self, x: &RepObject, y: &RepObject) -> Result<Vec<Matrix>> {
        self.check_object(x)?;
        self.check_object(y)?;
        let n = x.dim() * y.dim();
        let h = &self.0.normal;
        let weight = Rational::from(h.order()).recip().expect("nonempty subgroup");
        let mut e = Matrix::zeros(n, n);
        for &s in h.elements() {
            let inv_t = x.matrix(self.0.group.inv(s)).transpose();
            y.matrix(s).kron_into(&inv_t, &weight, &mut e);
        }
        e.column_space()
            .into_iter()
            .map(|v| Matrix::new(y.dim(), x.dim(), v))
            .collect()
    }

    /// `(X̄, id)`.
    pub fn q_object(&self, x: &RepObject) -> Result<QObject> {
        self.check_object(x)?;
        Ok(QObject { ctx: self.clone(), object: x.clone(), idempotent: Matrix::identity(x.dim()) })
    }

    pub fn q_unit(&self) -> QObject {
        self.q_object(&RepObject::unit(&self.0.group)).expect("same group")
    }

    /// A G-morphism seen in the quotient; the matrix is unchanged.
    pub fn q_morphism(&self, f: &RepMorphism) -> Result<QMorphism> {
        Ok(QMorphism {
            source: self.q_object(f.source())?,
            target: self.q_object(f.target())?,
            matrix: f.matrix().clone(),
        })
    }

    /// Basis of `Hom_Q(a, b) = f ∘ Hom(X̄, Ȳ) ∘ e`, canonical order.
    pub fn q_hom(&self, a: &QObject, b: &QObject) -> Result<Vec<QMorphism>> {
        if !a.ctx.same(self) || !b.ctx.same(self) {
            return Err(Error::ContextMismatch);
        }
        let pre = self.pre_quotient_hom(&a.object, &b.object)?;
        let compressed: Vec<Matrix> = if a.idempotent.is_identity() && b.idempotent.is_identity() {
            pre
        } else {
            pre.iter().map(|m| &(&b.idempotent * m) * &a.idempotent).collect()
        };
        Ok(canonical_matrices(b.object.dim(), a.object.dim(), &compressed)
            .into_iter()
            .map(|m| QMorphism { source: a.clone(), target: b.clone(), matrix: m })
            .collect())
    }

    pub fn q_end(&self, a: &QObject) -> Result<Vec<QMorphism>> {
        self.q_hom(a, a)
    }

    /// Membership in `T^q`: `q(X)` is trivial, i.e. `dim Hom_Q(1, qX) = dim X`.
    pub fn trivial_in_q(&self, x: &RepObject) -> Result<bool> {
        let homs = self.q_hom(&self.q_unit(), &self.q_object(x)?)?;
        Ok(homs.len() == x.dim())
    }

    /// `ω^q(X) = γ^Q(qX) = Hom_Q(1, qX)` for `X` in `T^H`, with its
    /// identification with `ω₀(X)`.
    pub fn omega_q(&self, x: &RepObject) -> Result<OmegaQ> {
        if !x.in_th(&self.0.normal)? {
            return Err(Error::NotInSubcategory(format!(
                "a {}-dimensional object on which H acts nontrivially",
                x.dim()
            )));
        }
        let homs = self.q_hom(&self.q_unit(), &self.q_object(x)?)?;
        // Each 1 → X morphism is a column vector in ω₀(X).
        let cols: Vec<Vec<Rational>> = homs.iter().map(|m| m.matrix.as_slice().to_vec()).collect();
        let identification = Matrix::from_columns(&cols, x.dim())?;
        Ok(OmegaQ { dim: homs.len(), identification })
    }

    /// `Hom_Q(qX, qY) ≅ ω^q(Hom(X, Y)^H)` with the identity on intertwiner
    /// matrices as the comparison map. The right-hand side is computed as
    /// the common fixed space of the generators of `H` on the internal Hom.
    pub fn verify_q3a(&self, x: &RepObject, y: &RepObject) -> Result<Q3aReport> {
        let left = self.q_hom(&self.q_object(x)?, &self.q_object(y)?)?;
        let n = x.dim() * y.dim();
        let mut red = RowReducer::new(n);
        'gens: for &s in self.0.normal.generators() {
            let a = RepObject::internal_hom_action(x, y, s);
            let moved = &a - &Matrix::identity(n);
            for i in 0..n {
                red.push(moved.row(i).to_vec());
                if red.is_full() {
                    break 'gens;
                }
            }
        }
        let right = red.kernel_basis();
        let left_flat: Vec<&[Rational]> = left.iter().map(|m| m.matrix.as_slice()).collect();
        let span_equal = canonical_span(n, left_flat.iter().copied())
            == canonical_span(n, right.iter().map(Vec::as_slice));
        Ok(Q3aReport { left_dim: left.len(), right_dim: right.len(), span_equal })
    }

    /// Split an idempotent `u ∈ End_Q(a)`: `a ≅ (X̄, u) ⊕ (X̄, e − u)`.
    pub fn split_all_idempotents(&self, a: &QObject, u: &Matrix) -> Result<Splitting> {
        let x = &a.object;
        let e = &a.idempotent;
        if u.shape() != e.shape() || !u.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        if &(&(e * u) * e) != u || !self.is_h_intertwiner(x, x, u) {
            return Err(Error::NotIntertwiner("idempotent is not an endomorphism in the quotient".into()));
        }
        let complement = e - u;
        let summand = |p: Matrix| -> Summand {
            let object = QObject { ctx: self.clone(), object: x.clone(), idempotent: p.clone() };
            Summand {
                inclusion: QMorphism { source: object.clone(), target: a.clone(), matrix: p.clone() },
                projection: QMorphism { source: a.clone(), target: object.clone(), matrix: p },
                object,
            }
        };
        let splitting = Splitting { whole: a.clone(), image: summand(u.clone()), complement: summand(complement) };
        for s in [&splitting.image, &splitting.complement] {
            if s.projection.compose(&s.inclusion)?.matrix != s.object.idempotent
                || s.inclusion.compose(&s.projection)?.matrix != s.object.idempotent
            {
                return Err(Error::NotIdempotent);
            }
        }
        Ok(splitting)
    }

    /// `dim Hom_G(X, Y)` recovered from the quotient: the subspace of
    /// `Hom_H(X, Y)` fixed by conjugation with coset representatives of
    /// `G/H`.
    pub fn recover_hom_dimension(&self, x: &RepObject, y: &RepObject) -> Result<usize> {
        let basis = self.pre_quotient_hom(x, y)?;
        let k = basis.len();
        let g = &self.0.group;
        let mut red = RowReducer::new(k);
        for coset in self.0.normal.left_cosets() {
            let t = coset[0];
            if self.0.normal.contains(t) {
                continue;
            }
            let moved: Vec<Matrix> = basis
                .iter()
                .map(|b| &(&(y.matrix(t) * b) * x.matrix(g.inv(t))) - b)
                .collect();
            let rows = x.dim() * y.dim();
            for r in 0..rows {
                red.push(moved.iter().map(|m| m.as_slice()[r].clone()).collect());
            }
        }
        Ok(k - red.rank())
    }

    /// Gram matrix of `(u, v) ↦ trace(uv)` on `End_Q(a)` and its
    /// determinant.
    pub fn trace_form(&self, a: &QObject) -> Result<TraceForm> {
        let basis = self.q_end(a)?;
        let k = basis.len();
        let mut gram = Matrix::zeros(k, k);
        for i in 0..k {
            for j in i..k {
                let t = basis[i].matrix.trace_of_product(&basis[j].matrix);
                gram[(j, i)] = t.clone();
                gram[(i, j)] = t;
            }
        }
        let determinant = gram.determinant()?;
        Ok(TraceForm { gram, determinant })
    }

    /// Split exact sequence `0 → X^G → X → C → 0` in `T`, checked split
    /// after applying `q`.
    pub fn check_exactness(&self, x: &RepObject) -> Result<bool> {
        let sub = x.invariants(&Subgroup::whole(&self.0.group))?;
        let comp = sub.complement()?;
        let (i, s) = (sub.inclusion().clone(), comp.inclusion().clone());
        let both = Matrix::hstack(&[&i, &s])?;
        let inv = both.inverse().ok_or_else(|| Error::InvalidRepresentation("complement does not span".into()))?;
        let (k, d) = (i.cols(), x.dim());
        let r = Matrix::new(k, d, inv.as_slice()[..k * d].to_vec())?;
        let p = Matrix::new(d - k, d, inv.as_slice()[k * d..].to_vec())?;
        let sub_rep = sub.subrepresentation()?;
        let comp_rep = comp.subrepresentation()?;
        let intertwining = self.is_h_intertwiner(&sub_rep, x, &i)
            && self.is_h_intertwiner(x, &sub_rep, &r)
            && self.is_h_intertwiner(&comp_rep, x, &s)
            && self.is_h_intertwiner(x, &comp_rep, &p);
        let identities = (&r * &i).is_identity()
            && (&p * &s).is_identity()
            && (&p * &i).is_zero()
            && (&(&i * &r) + &(&s * &p)).is_identity();
        Ok(intertwining && identities)
    }
}

/// `ω^q(X)` with the matrix identifying it with `ω₀(X)`.
#[derive(Debug, Clone)]
pub struct OmegaQ {
    pub dim: usize,
    /// Columns: the canonical basis of `Hom_Q(1, qX)` in `ω₀(X)`
    /// coordinates.
    pub identification: Matrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Q3aReport {
    pub left_dim: usize,
    pub right_dim: usize,
    pub span_equal: bool,
}

impl Q3aReport {
    pub fn passed(&self) -> bool {
        self.left_dim == self.right_dim && self.span_equal
    }
}

#[derive(Debug, Clone)]
pub struct TraceForm {
    pub gram: Matrix,
    pub determinant: Rational,
}

impl TraceForm {
    pub fn nondegenerate(&self) -> bool {
        !self.determinant.is_zero()
    }
}

/// Object `(X̄, e)` of the quotient.
#[derive(Clone)]
pub struct QObject {
    ctx: QuotientCtx,
    object: RepObject,
    idempotent: Matrix,
}

impl fmt::Debug for QObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QObject({:?}, rank {})", self.object, self.dim())
    }
}

impl PartialEq for QObject {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same(&other.ctx) && self.object == other.object && self.idempotent == other.idempotent
    }
}

impl QObject {
    /// Checks that `e` is an idempotent H-intertwiner of `X`.
    pub fn new(ctx: &QuotientCtx, object: &RepObject, idempotent: Matrix) -> Result<Self> {
        ctx.check_object(object)?;
        if idempotent.shape() != (object.dim(), object.dim()) || !idempotent.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        if !ctx.is_h_intertwiner(object, object, &idempotent) {
            return Err(Error::NotIntertwiner("idempotent does not commute with H".into()));
        }
        Ok(QObject { ctx: ctx.clone(), object: object.clone(), idempotent })
    }

    pub fn ctx(&self) -> &QuotientCtx {
        &self.ctx
    }

    pub fn object(&self) -> &RepObject {
        &self.object
    }

    pub fn idempotent(&self) -> &Matrix {
        &self.idempotent
    }

    /// Dimension under the fibre functor: `rank(e)`.
    pub fn dim(&self) -> usize {
        self.idempotent.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.idempotent.is_zero()
    }

    pub fn identity(&self) -> QMorphism {
        QMorphism { source: self.clone(), target: self.clone(), matrix: self.idempotent.clone() }
    }

    /// `(X ⊗ Y, e ⊗ f)`.
    pub fn tensor(&self, other: &QObject) -> Result<QObject> {
        if !self.ctx.same(&other.ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(QObject {
            ctx: self.ctx.clone(),
            object: self.object.tensor(&other.object)?,
            idempotent: self.idempotent.kron(&other.idempotent),
        })
    }

    /// `(X^∨, eᵀ)`.
    pub fn dual(&self) -> QObject {
        QObject { ctx: self.ctx.clone(), object: self.object.dual(), idempotent: self.idempotent.transpose() }
    }

    pub fn direct_sum(&self, other: &QObject) -> Result<QObject> {
        if !self.ctx.same(&other.ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(QObject {
            ctx: self.ctx.clone(),
            object: self.object.direct_sum(&other.object)?,
            idempotent: Matrix::block_diag(&[&self.idempotent, &other.idempotent]),
        })
    }

    /// `ω((X̄, e))`: the image of `e`, with `e = inclusion * projection` and
    /// `projection * inclusion = 1`.
    pub fn fibre(&self) -> Fibre {
        let (projection, inclusion) = self.idempotent.split_idempotent().expect("stored idempotent");
        Fibre { projection, inclusion }
    }
}

/// Underlying vector space of a quotient object.
#[derive(Debug, Clone)]
pub struct Fibre {
    pub projection: Matrix,
    pub inclusion: Matrix,
}

impl Fibre {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }
}

/// Morphism in the quotient: `m = f ∘ m ∘ e`, H-equivariant.
#[derive(Clone, PartialEq)]
pub struct QMorphism {
    source: QObject,
    target: QObject,
    matrix: Matrix,
}

impl fmt::Debug for QMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMorphism({:?})", self.matrix)
    }
}

impl QMorphism {
    pub fn new(source: &QObject, target: &QObject, matrix: Matrix) -> Result<Self> {
        if !source.ctx.same(&target.ctx) {
            return Err(Error::ContextMismatch);
        }
        if matrix.shape() != (target.object.dim(), source.object.dim()) {
            return Err(Error::Shape(format!("{:?} morphism matrix", matrix.shape())));
        }
        if &(&target.idempotent * &matrix) * &source.idempotent != matrix {
            return Err(Error::NotIntertwiner("matrix is not compressed by the idempotents".into()));
        }
        if !source.ctx.is_h_intertwiner(&source.object, &target.object, &matrix) {
            return Err(Error::NotIntertwiner("matrix does not commute with H".into()));
        }
        Ok(QMorphism { source: source.clone(), target: target.clone(), matrix })
    }

    pub fn source(&self) -> &QObject {
        &self.source
    }

    pub fn target(&self) -> &QObject {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &QMorphism) -> Result<QMorphism> {
        if other.target != self.source {
            return Err(Error::Shape("composing quotient morphisms with mismatched ends".into()));
        }
        Ok(QMorphism { source: other.source.clone(), target: self.target.clone(), matrix: &self.matrix * &other.matrix })
    }

    pub fn tensor(&self, other: &QMorphism) -> Result<QMorphism> {
        Ok(QMorphism {
            source: self.source.tensor(&other.source)?,
            target: self.target.tensor(&other.target)?,
            matrix: self.matrix.kron(&other.matrix),
        })
    }

    /// Transpose, `Hom(a, b) → Hom(b^∨, a^∨)`.
    pub fn dual(&self) -> QMorphism {
        QMorphism { source: self.target.dual(), target: self.source.dual(), matrix: self.matrix.transpose() }
    }

    /// Image under the fibre functor: `p_target · M · i_source`.
    pub fn fibre(&self) -> Matrix {
        &(&self.target.fibre().projection * &self.matrix) * &self.source.fibre().inclusion
    }
}

/// A summand with its structure maps: `projection ∘ inclusion = id`,
/// `inclusion ∘ projection` the splitting idempotent.
#[derive(Debug, Clone)]
pub struct Summand {
    pub object: QObject,
    pub inclusion: QMorphism,
    pub projection: QMorphism,
}

/// `a ≅ (X̄, u) ⊕ (X̄, e − u)`.
#[derive(Debug, Clone)]
pub struct Splitting {
    pub whole: QObject,
    pub image: Summand,
    pub complement: Summand,
}

/// Mutually inverse maps between `a` and the direct sum of its summands.
#[derive(Debug, Clone)]
pub struct SumWitness {
    pub sum: QObject,
    pub to_sum: QMorphism,
    pub from_sum: QMorphism,
}

impl Splitting {
    /// Summands that are not the zero object.
    pub fn nonzero_summands(&self) -> Vec<&Summand> {
        [&self.image, &self.complement].into_iter().filter(|s| !s.object.is_zero()).collect()
    }

    /// Explicit isomorphism `a ≅ (X̄, u) ⊕ (X̄, e − u)`, checked both ways.
    pub fn direct_sum_witness(&self) -> Result<SumWitness> {
        let sum = self.image.object.direct_sum(&self.complement.object)?;
        let u = &self.image.projection.matrix;
        let v = &self.complement.projection.matrix;
        let to_sum = QMorphism::new(&self.whole, &sum, Matrix::vstack(&[u, v])?)?;
        let from_sum = QMorphism::new(&sum, &self.whole, Matrix::hstack(&[u, v])?)?;
        if from_sum.compose(&to_sum)?.matrix != self.whole.idempotent
            || to_sum.compose(&from_sum)?.matrix != sum.idempotent
        {
            return Err(Error::NotIdempotent);
        }
        Ok(SumWitness { sum, to_sum, from_sum })
    }
}

/// The functor `T/ω_{H₀} → T/ω_{H₁}` for `H₁ ⊆ H₀`, with `α` the identity
/// on underlying spaces: identity on objects, inclusion on Hom spaces.
#[derive(Debug, Clone)]
pub struct NestedFunctor {
    outer: QuotientCtx,
    inner: QuotientCtx,
}

/// A Hom-space map in coordinates of the canonical bases.
#[derive(Debug, Clone)]
pub struct HomMap {
    pub source_dim: usize,
    pub target_dim: usize,
    /// `target_dim x source_dim`; `None` when some source morphism is not
    /// in the target space.
    pub coordinates: Option<Matrix>,
}

impl HomMap {
    pub fn is_inclusion(&self) -> bool {
        self.coordinates.as_ref().map_or(false, |c| c.rank() == self.source_dim)
    }

    pub fn is_bijective(&self) -> bool {
        self.is_inclusion() && self.source_dim == self.target_dim
    }
}

pub fn nested_functor(outer: &QuotientCtx, inner: &QuotientCtx) -> Result<NestedFunctor> {
    if !inner.subgroup().is_subgroup_of(outer.subgroup()) {
        return Err(Error::NotContained(inner.subgroup().label(), outer.subgroup().label()));
    }
    Ok(NestedFunctor { outer: outer.clone(), inner: inner.clone() })
}

impl NestedFunctor {
    pub fn outer(&self) -> &QuotientCtx {
        &self.outer
    }

    pub fn inner(&self) -> &QuotientCtx {
        &self.inner
    }

    pub fn map_object(&self, a: &QObject) -> Result<QObject> {
        if !a.ctx.same(&self.outer) {
            return Err(Error::ContextMismatch);
        }
        QObject::new(&self.inner, &a.object, a.idempotent.clone())
    }

    pub fn map_morphism(&self, f: &QMorphism) -> Result<QMorphism> {
        QMorphism::new(&self.map_object(&f.source)?, &self.map_object(&f.target)?, f.matrix.clone())
    }

    /// The map `Hom_{H₀}(a, b) → Hom_{H₁}(F a, F b)` in canonical bases.
    pub fn hom_map(&self, a: &QObject, b: &QObject) -> Result<HomMap> {
        let src = self.outer.q_hom(a, b)?;
        let tgt = self.inner.q_hom(&self.map_object(a)?, &self.map_object(b)?)?;
        let coords = coordinates(
            &tgt.iter().map(|m| m.matrix.as_slice()).collect::<Vec<_>>(),
            &src.iter().map(|m| m.matrix.as_slice()).collect::<Vec<_>>(),
        );
        Ok(HomMap { source_dim: src.len(), target_dim: tgt.len(), coordinates: coords })
    }

    /// `F(f ⊗ g) = F f ⊗ F g` for all basis morphisms `f: a → b`, `g: c → d`,
    /// and the result lies in the target Hom space.
    pub fn preserves_tensor(&self, a: &QObject, b: &QObject, c: &QObject, d: &QObject) -> Result<bool> {
        let fs = self.outer.q_hom(a, b)?;
        let gs = self.outer.q_hom(c, d)?;
        let target = self.inner.q_hom(&self.map_object(&a.tensor(c)?)?, &self.map_object(&b.tensor(d)?)?)?;
        let len = a.object.dim() * c.object.dim() * b.object.dim() * d.object.dim();
        let mut red = RowReducer::new(len);
        for t in &target {
            red.push(t.matrix.as_slice().to_vec());
        }
        for f in &fs {
            for g in &gs {
                let image = self.map_morphism(&f.tensor(g)?)?;
                let separately = self.map_morphism(f)?.tensor(&self.map_morphism(g)?)?;
                if image.matrix != separately.matrix || !red.contains(image.matrix.as_slice()) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `T/ω_{H₀} → T/ω_{H₁} → T/ω_{H₂}`.
    pub fn then(&self, next: &NestedFunctor) -> Result<NestedFunctor> {
        if !self.inner.same(&next.outer) {
            return Err(Error::ContextMismatch);
        }
        nested_functor(&self.outer, &next.inner)
    }
}

/// Factoring criterion for `q' : T → T/ω_{H'}` through `q : T → T/ω_H`:
/// `T^{q'} ⊇ T^q` and `ω^q ≅ ω^{q'}` on `T^q`, evaluated on `objects`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactoringReport {
    pub subcategory_contained: bool,
    pub fibre_functors_agree: bool,
    /// Whether the nested functor `T/ω_H → T/ω_{H'}` exists.
    pub functor_exists: bool,
}

impl FactoringReport {
    pub fn criterion(&self) -> bool {
        self.subcategory_contained && self.fibre_functors_agree
    }

    pub fn consistent(&self) -> bool {
        self.criterion() == self.functor_exists
    }
}

pub fn factoring_criterion(q: &QuotientCtx, q_prime: &QuotientCtx, objects: &[RepObject]) -> Result<FactoringReport> {
    let mut contained = true;
    let mut agree = true;
    for x in objects {
        if q.trivial_in_q(x)? {
            if !q_prime.trivial_in_q(x)? {
                contained = false;
                continue;
            }
            let (a, b) = (q.omega_q(x)?, q_prime.omega_q(x)?);
            agree &= a.dim == b.dim && a.identification == b.identification;
        }
    }
    Ok(FactoringReport {
        subcategory_contained: contained,
        fibre_functors_agree: agree,
        functor_exists: nested_functor(q, q_prime).is_ok(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::group::subgroup_generated;
    use crate::rep::hom_space;

    fn ctx(fx: &fixtures::Fixture) -> QuotientCtx {
        QuotientCtx::new(&fx.subgroup).unwrap()
    }

    #[test]
    fn rejects_non_normal() {
        let fx = fixtures::s3();
        let t = subgroup_generated(&fx.group, &[fx.group.generators()[0]]).unwrap();
        assert_eq!(t.order(), 2);
        assert!(matches!(QuotientCtx::new(&t), Err(Error::NotNormal)));
    }

    #[test]
    fn pre_quotient_examples() {
        let fx = fixtures::s3();
        let q = ctx(&fx);
        let std2 = fx.object("std2").unwrap();
        assert_eq!(q.pre_quotient_hom(std2, std2).unwrap().len(), 2);
        let unit = RepObject::unit(&fx.group);
        assert_eq!(q.pre_quotient_hom(&unit, &unit).unwrap().len(), 1);
        let reg = fx.object("regular").unwrap();
        let pre = q.pre_quotient_hom(reg, reg).unwrap();
        assert_eq!(pre.len(), 12);
        for m in &pre {
            assert!(q.is_h_intertwiner(reg, reg, m));
        }
    }

    #[test]
    fn q_is_a_functor() {
        let fx = fixtures::s3();
        let q = ctx(&fx);
        let reg = fx.object("regular").unwrap();
        let unit = RepObject::unit(&fx.group);
        let id = q.q_morphism(&RepMorphism::identity(reg)).unwrap();
        assert_eq!(id, q.q_object(reg).unwrap().identity());
        let aug = RepMorphism::new(reg, &unit, Matrix::new(1, 6, vec![Rational::one(); 6]).unwrap()).unwrap();
        assert_eq!(q.q_morphism(&aug).unwrap().matrix(), aug.matrix());

        let std2 = fx.object("std2").unwrap();
        let f = &hom_space(reg, std2).unwrap()[1];
        let g = &hom_space(reg, reg).unwrap()[2];
        let fg = f.compose(g).unwrap();
        let lhs = q.q_morphism(&fg).unwrap();
        let rhs = q.q_morphism(f).unwrap().compose(&q.q_morphism(g).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let ft = f.tensor(g).unwrap();
        assert_eq!(
            q.q_morphism(&ft).unwrap().matrix(),
            q.q_morphism(f).unwrap().tensor(&q.q_morphism(g).unwrap()).unwrap().matrix()
        );
    }

    #[test]
    fn tensor_and_dual_objects() {
        let fx = fixtures::s3();
        let q = ctx(&fx);
        let reg = fx.object("regular").unwrap();
        let a = q.q_object(fx.object("std2").unwrap()).unwrap();
        assert_eq!(q.q_unit().tensor(&a).unwrap(), a);

        let e = reg.reynolds(&fx.subgroup).unwrap();
        let b = QObject::new(&q, reg, e.clone()).unwrap();
        let t = b.tensor(&a).unwrap();
        assert_eq!(t.idempotent(), &e.kron(a.idempotent()));
        assert!(t.idempotent().is_idempotent());

        let split = q.split_all_idempotents(&q.q_object(reg).unwrap(), &e).unwrap();
        let summand = &split.complement.object;
        let d = summand.dual();
        assert!(d.idempotent().is_idempotent());
        QObject::new(&q, d.object(), d.idempotent().clone()).unwrap();
        assert_eq!(q.q_end(summand).unwrap().len(), q.q_end(&d).unwrap().len());
        for f in q.q_end(summand).unwrap() {
            let fd = f.dual();
            QMorphism::new(fd.source(), fd.target(), fd.matrix().clone()).unwrap();
        }
    }

    #[test]
    fn q_hom_examples() {
        let fx = fixtures::s3();
        let q = ctx(&fx);
        assert_eq!(q.q_end(&q.q_unit()).unwrap().len(), 1);
        let a = q.q_object(fx.object("std2").unwrap()).unwrap();
        assert_eq!(q.q_end(&a).unwrap().len(), 2);
        let reg = fx.object("regular").unwrap();
        let e = reg.reynolds(&fx.subgroup).unwrap();
        let b = QObject::new(&q, reg, e).unwrap();
        assert_eq!(b.dim(), 2);
        assert_eq!(q.q_end(&b).unwrap().len(), 4);
        for m in q.q_end(&b).unwrap() {
            QMorphism::new(m.source(), m.target(), m.matrix().clone()).unwrap();
        }
    }

    #[test]
    fn rejects_bad_objects() {
        let fx = fixtures::s4_a4();
        let q = ctx(&fx);
        let std3 = fx.object("std3").unwrap();
        // A projection onto a coordinate axis is idempotent but not A4-equivariant.
        let mut p = Matrix::zeros(3, 3);
        p[(0, 0)] = Rational::one();
        assert!(matches!(QObject::new(&q, std3, p), Err(Error::NotIntertwiner(_))));
        assert!(matches!(QObject::new(&q, std3, Matrix::from_ints(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, 0]])), Err(Error::NotIdempotent)));
        let other = ctx(&fixtures::s3());
        assert!(matches!(other.q_object(std3), Err(Error::GroupMismatch)));
        let a = q.q_object(std3).unwrap();
        let b = other.q_unit();
        assert!(matches!(q.q_hom(&a, &b), Err(Error::ContextMismatch)));
    }

    #[test]
    fn splitting_examples() {
        let fx = fixtures::s3();
        let q = ctx(&fx);
        let reg = fx.object("regular").unwrap();
        let a = q.q_object(reg).unwrap();

        let s = q.split_all_idempotents(&a, &Matrix::identity(6)).unwrap();
        assert_eq!(s.image.object, a);
        assert!(s.complement.object.is_zero());
        assert_eq!(s.nonzero_summands().len(), 1);

        let s = q.split_all_idempotents(&a, &Matrix::zeros(6, 6)).unwrap();
        assert!(s.image.object.is_zero());
        assert_eq!(s.complement.object, a);

        let e = reg.reynolds(&fx.subgroup).unwrap();
        let s = q.split_all_idempotents(&a, &e).unwrap();
        let (x, y) = (&s.image.object, &s.complement.object);
        assert_eq!((x.dim(), y.dim()), (2, 4));
        let blocks = [
            q.q_hom(x, x).unwrap().len(),
            q.q_hom(x, y).unwrap().len(),
            q.q_hom(y, x).unwrap().len(),
            q.q_hom(y, y).unwrap().len(),
        ];
        assert_eq!(blocks, [4, 0, 0, 8]);
        assert_eq!(blocks.iter().sum::<usize>(), 12);
        let w = s.direct_sum_witness().unwrap();
        assert_eq!(w.sum.dim(), 6);

        let not_h = Matrix::from_ints(&[
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0],
        ]);
        assert!(q.split_all_idempotents(&a, &not_h).is_err());
        assert!(matches!(q.split_all_idempotents(&a, &Matrix::identity(6).scale(&Rational::from(2))), Err(Error::NotIdempotent)));
    }

    #[test]
    fn triviality_in_quotient() {
        let fx = fixtures::s3();
        let q = ctx(&fx);
        assert!(q.trivial_in_q(fx.object("sign").unwrap()).unwrap());
        assert!(!q.trivial_in_q(fx.object("std2").unwrap()).unwrap());
        assert!(q.trivial_in_q(&RepObject::unit(&fx.group)).unwrap());
    }

    #[test]
    fn omega_q_examples() {
        let fx = fixtures::s3();
        let q = ctx(&fx);
        let unit = RepObject::unit(&fx.group);
        assert_eq!(q.omega_q(&unit).unwrap().dim, 1);
        let x = fx.object("sign").unwrap().direct_sum(&unit).unwrap();
        let w = q.omega_q(&x).unwrap();
        assert_eq!(w.dim, 2);
        assert!(w.identification.is_identity());
        let quo = crate::group::quotient_group(&fx.group, &fx.subgroup).unwrap();
        let infl = RepObject::inflate(&RepObject::regular(&quo.group), &fx.group, &quo.projection).unwrap();
        assert_eq!(q.omega_q(&infl).unwrap().dim, 2);
        assert!(matches!(q.omega_q(fx.object("std2").unwrap()), Err(Error::NotInSubcategory(_))));
    }

    #[test]
    fn q3a_examples() {
        let fx = fixtures::s3();
        let q = ctx(&fx);
        let std2 = fx.object("std2").unwrap();
        let r = q.verify_q3a(std2, std2).unwrap();
        assert_eq!((r.left_dim, r.right_dim), (2, 2));
        assert!(r.passed());
        let unit = RepObject::unit(&fx.group);
        assert_eq!(q.verify_q3a(&unit, &unit).unwrap().left_dim, 1);
        let reg = fx.object("regular").unwrap();
        let r = q.verify_q3a(reg, reg).unwrap();
        assert_eq!((r.left_dim, r.right_dim), (12, 12));
        assert!(r.passed());
    }

    #[test]
    fn fibre_functor_on_quotient() {
        let fx = fixtures::s3();
        let q = ctx(&fx);
        let reg = fx.object("regular").unwrap();
        let a = q.q_object(reg).unwrap();
        let s = q.split_all_idempotents(&a, &reg.reynolds(&fx.subgroup).unwrap()).unwrap();
        let x = &s.image.object;
        let y = q.q_object(fx.object("std2").unwrap()).unwrap();
        assert_eq!(x.fibre().dim(), 2);
        assert_eq!(x.tensor(&y).unwrap().fibre().dim(), 4);
        // Faithful and functorial on End(x) ∘ Hom(y, x).
        let homs = q.q_hom(&y, x).unwrap();
        let images: Vec<Matrix> = homs.iter().map(QMorphism::fibre).collect();
        assert_eq!(canonical_span(4, flatten(&images)).len(), homs.len());
        for u in q.q_end(x).unwrap() {
            for f in &homs {
                assert_eq!(u.compose(f).unwrap().fibre(), &u.fibre() * &f.fibre());
            }
        }
    }

    #[test]
    fn exactness_is_witnessed() {
        for fx in [fixtures::s3(), fixtures::c4(), fixtures::q8()] {
            let q = ctx(&fx);
            for (_, x) in &fx.objects {
                if x.dim() > 1 {
                    assert!(q.check_exactness(x).unwrap(), "{} object of dim {}", fx.id, x.dim());
                }
            }
        }
    }

    #[test]
    fn recoverability_small() {
        let fx = fixtures::s3();
        let q = ctx(&fx);
        for (_, x, _, y) in fx.pairs() {
            assert_eq!(q.recover_hom_dimension(x, y).unwrap(), hom_space(x, y).unwrap().len());
        }
    }

    #[test]
    fn trace_form_nondegenerate() {
        let fx = fixtures::c4();
        let q = ctx(&fx);
        for (_, x) in &fx.objects {
            assert!(q.trace_form(&q.q_object(x).unwrap()).unwrap().nondegenerate());
        }
        assert_eq!(q.trace_form(&q.q_unit()).unwrap().gram.shape(), (1, 1));
    }

    #[test]
    fn nested_functors() {
        let v4 = fixtures::s4_v4();
        let a4 = fixtures::s4_a4();
        let g = v4.group.clone();
        let q_a4 = ctx(&a4);
        // Rebuild on the same group Arc so objects are shared.
        let q_a4 = QuotientCtx::new(&Subgroup::new(&g, q_a4.subgroup().elements()).unwrap()).unwrap();
        let q_v4 = ctx(&v4);
        let q_triv = QuotientCtx::new(&Subgroup::trivial(&g)).unwrap();

        assert!(matches!(nested_functor(&q_v4, &q_a4), Err(Error::NotContained(..))));
        let f = nested_functor(&q_v4, &q_triv).unwrap();
        let std3 = v4.object("std3").unwrap();
        let a = q_v4.q_object(std3).unwrap();
        let m = f.hom_map(&a, &a).unwrap();
        assert!(m.is_inclusion());
        assert_eq!(m.target_dim, 9);
        assert!(m.source_dim < 9);

        let same = nested_functor(&q_v4, &q_v4).unwrap();
        assert!(same.hom_map(&a, &a).unwrap().is_bijective());

        let two = nested_functor(&q_a4, &q_v4).unwrap();
        let composite = two.then(&f).unwrap();
        let direct = nested_functor(&q_a4, &q_triv).unwrap();
        let b = q_a4.q_object(std3).unwrap();
        let c1 = two.hom_map(&b, &b).unwrap().coordinates.unwrap();
        let c2 = f.hom_map(&two.map_object(&b).unwrap(), &two.map_object(&b).unwrap()).unwrap().coordinates.unwrap();
        let cd = direct.hom_map(&b, &b).unwrap().coordinates.unwrap();
        assert_eq!(&c2 * &c1, cd);
        assert_eq!(composite.hom_map(&b, &b).unwrap().coordinates.unwrap(), cd);

        let u = q_v4.q_object(v4.object("std2").unwrap()).unwrap();
        assert!(f.preserves_tensor(&a, &a, &u, &u).unwrap());
    }

    #[test]
    fn factoring_criterion_matches_functor_existence() {
        let v4 = fixtures::s4_v4();
        let g = v4.group.clone();
        let a4 = Subgroup::new(&g, fixtures::s4_a4().subgroup.elements()).unwrap();
        let q_v4 = ctx(&v4);
        let q_a4 = QuotientCtx::new(&a4).unwrap();
        let objs: Vec<RepObject> = v4.objects.iter().map(|(_, x)| x.clone()).collect();
        let r = factoring_criterion(&q_a4, &q_v4, &objs).unwrap();
        assert!(r.criterion() && r.functor_exists);
        let r = factoring_criterion(&q_v4, &q_a4, &objs).unwrap();
        assert!(!r.subcategory_contained);
        assert!(!r.functor_exists);
        assert!(r.consistent());
    }
}
