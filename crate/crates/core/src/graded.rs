//! ℤ-graded representations as a model of a Tate triple.
//!
//! The weight grading stands for the character lattice of `𝔾ₘ`. The Tate
//! object `𝕋` is the unit representation in weight −2, so `1(r) = 𝕋^{⊗r}`
//! sits in weight `−2r`. The quotient by the subgroup acting trivially on
//! the Tate subcategory forgets the grading.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::linalg::{canonical_span, Matrix, Rational};
use crate::oracle::{oracle_hom, restrict};
use crate::rep::{hom_space, RepObject, RepSpec};

/// Weight of the Tate object.
pub const TATE_WEIGHT: i64 = -2;

/// A finitely supported family of representations indexed by weight. Zero
/// pieces are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedRepObject {
    group: Arc<FiniteGroup>,
    pieces: BTreeMap<i64, RepObject>,
}

impl GradedRepObject {
    pub fn new(group: &Arc<FiniteGroup>, pieces: impl IntoIterator<Item = (i64, RepObject)>) -> Result<Self> {
        let mut out = GradedRepObject::zero(group);
        for (w, x) in pieces {
            if !x.group().same_as(group) {
                return Err(Error::GroupMismatch);
            }
            out.add_piece(w, x)?;
        }
        Ok(out)
    }

    fn add_piece(&mut self, w: i64, x: RepObject) -> Result<()> {
        if x.dim() == 0 {
            return Ok(());
        }
        let merged = match self.pieces.remove(&w) {
            Some(old) => old.direct_sum(&x)?,
            None => x,
        };
        self.pieces.insert(w, merged);
        Ok(())
    }

    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        GradedRepObject { group: group.clone(), pieces: BTreeMap::new() }
    }

    /// `x` placed in a single weight.
    pub fn pure(weight: i64, x: &RepObject) -> Self {
        GradedRepObject::new(x.group(), [(weight, x.clone())]).expect("one group")
    }

    /// The Tate object `𝕋`.
    pub fn tate(group: &Arc<FiniteGroup>) -> Self {
        Self::pure(TATE_WEIGHT, &RepObject::unit(group))
    }

    /// `1(r) = 𝕋^{⊗r}`, the unit in weight `−2r`.
    pub fn tate_power(group: &Arc<FiniteGroup>, r: i64) -> Self {
        Self::pure(TATE_WEIGHT * r, &RepObject::unit(group))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn pieces(&self) -> &BTreeMap<i64, RepObject> {
        &self.pieces
    }

    pub fn piece(&self, weight: i64) -> Option<&RepObject> {
        self.pieces.get(&weight)
    }

    pub fn weights(&self) -> impl Iterator<Item = i64> + '_ {
        self.pieces.keys().copied()
    }

    pub fn total_dim(&self) -> usize {
        self.pieces.values().map(RepObject::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn direct_sum(&self, other: &GradedRepObject) -> Result<GradedRepObject> {
        if !self.group.same_as(&other.group) {
            return Err(Error::GroupMismatch);
        }
        let mut out = self.clone();
        for (&w, x) in &other.pieces {
            out.add_piece(w, x.clone())?;
        }
        Ok(out)
    }

    /// Weights add; pieces of equal total weight are summed in ascending
    /// order of the left weight.
    pub fn tensor(&self, other: &GradedRepObject) -> Result<GradedRepObject> {
        if !self.group.same_as(&other.group) {
            return Err(Error::GroupMismatch);
        }
        let mut out = GradedRepObject::zero(&self.group);
        for (&a, x) in &self.pieces {
            for (&b, y) in &other.pieces {
                out.add_piece(a + b, x.tensor(y)?)?;
            }
        }
        Ok(out)
    }

    /// The total space as a representation of `G`, weights ascending.
    pub fn forget_grading(&self) -> RepObject {
        let mut it = self.pieces.values();
        let Some(first) = it.next() else {
            return RepObject::trivial(&self.group, 0);
        };
        it.fold(first.clone(), |acc, x| acc.direct_sum(x).expect("one group"))
    }

    /// Offset of each weight's block in the total space.
    fn offsets(&self) -> BTreeMap<i64, usize> {
        let mut at = 0;
        self.pieces
            .iter()
            .map(|(&w, x)| {
                let o = at;
                at += x.dim();
                (w, o)
            })
            .collect()
    }
}

/// `x(n) = x ⊗ 𝕋^{⊗n}`: every weight shifts by `−2n`.
pub fn tate_twist(x: &GradedRepObject, n: i64) -> GradedRepObject {
    GradedRepObject {
        group: x.group.clone(),
        pieces: x.pieces.iter().map(|(&w, p)| (w + TATE_WEIGHT * n, p.clone())).collect(),
    }
}

/// Whether every piece carries the trivial action of `G`.
pub fn in_tate_subcategory(x: &GradedRepObject) -> bool {
    x.pieces.values().all(RepObject::is_trivial_object)
}

/// `ω₀` on the Tate subcategory with the colimit evaluated on explicit
/// windows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaTate {
    pub dim: usize,
    /// Largest `|weight|` in the support; the colimit is constant from here.
    pub bound: usize,
    /// `dim Hom(⊕_{|w| ≤ n} 1_w, x)` for `n = 0 ..= bound + 1`.
    pub window_dims: Vec<usize>,
}

/// `x ↦ lim_n Hom(⊕_{|w| ≤ n} 1_w, x)`, where `1_w` is the unit in weight
/// `w`. On even weights `1_w = 1(−w/2)`.
pub fn omega0_tate(x: &GradedRepObject) -> Result<OmegaTate> {
    if !in_tate_subcategory(x) {
        return Err(Error::NotInSubcategory("graded object with a nontrivial piece".into()));
    }
    let bound = x.weights().map(|w| w.unsigned_abs() as usize).max().unwrap_or(0);
    let unit = RepObject::unit(&x.group);
    let per_weight: Vec<(usize, usize)> = x
        .pieces
        .iter()
        .map(|(&w, p)| Ok((w.unsigned_abs() as usize, hom_space(&unit, p)?.len())))
        .collect::<Result<_>>()?;
    let window_dims: Vec<usize> = (0..=bound + 1)
        .map(|n| per_weight.iter().filter(|(w, _)| *w <= n).map(|(_, d)| d).sum())
        .collect();
    Ok(OmegaTate { dim: window_dims[bound], bound, window_dims })
}

/// Basis of `Hom_Q(x, y)`: graded blocks `Hom_G(x_a, y_b)` for all pairs of
/// weights, placed in the total spaces. Matrices are `total y x total x`,
/// canonical order.
pub fn tate_quotient_hom(x: &GradedRepObject, y: &GradedRepObject) -> Result<Vec<Matrix>> {
    if !x.group.same_as(&y.group) {
        return Err(Error::GroupMismatch);
    }
    let (dx, dy) = (x.total_dim(), y.total_dim());
    let (ox, oy) = (x.offsets(), y.offsets());
    let mut all = Vec::new();
    for (a, px) in &x.pieces {
        for (b, py) in &y.pieces {
            for f in hom_space(px, py)? {
                let mut v = vec![Rational::zero(); dx * dy];
                let m = f.matrix();
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        v[(oy[b] + i) * dx + ox[a] + j] = m[(i, j)].clone();
                    }
                }
                all.push(v);
            }
        }
    }
    canonical_span(dx * dy, all.iter().map(Vec::as_slice))
        .into_iter()
        .map(|v| Matrix::new(dy, dx, v))
        .collect()
}

/// Oracle: intertwiners of the grading-forgotten representations, solved
/// directly over all of `G`.
pub fn forget_grading_hom(x: &GradedRepObject, y: &GradedRepObject) -> Result<Vec<Matrix>> {
    let whole = Subgroup::whole(&x.group);
    let (fx, fy) = (x.forget_grading(), y.forget_grading());
    let (dx, dy) = (fx.dim(), fy.dim());
    let basis = oracle_hom(&restrict(&fx, &whole)?, &restrict(&fy, &whole)?)?;
    canonical_span(dx * dy, basis.iter().map(Matrix::as_slice))
        .into_iter()
        .map(|v| Matrix::new(dy, dx, v))
        .collect()
}

/// Wire format: `{"pieces": {"<weight>": <rep>}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradedSpec {
    pub pieces: BTreeMap<String, RepSpec>,
}

impl GradedSpec {
    pub fn from_object(group_ref: &str, x: &GradedRepObject) -> Self {
        GradedSpec {
            pieces: x.pieces.iter().map(|(w, p)| (w.to_string(), RepSpec::from_object(group_ref, p))).collect(),
        }
    }

    pub fn build(&self, group: &Arc<FiniteGroup>) -> Result<GradedRepObject> {
        let pieces = self
            .pieces
            .iter()
            .map(|(w, spec)| {
                let w: i64 = w.trim().parse().map_err(|_| Error::Parse(format!("weight {w:?}")))?;
                Ok((w, spec.build(group)?))
            })
            .collect::<Result<Vec<_>>>()?;
        GradedRepObject::new(group, pieces)
    }
}

/// Named graded objects over one group.
#[derive(Debug, Clone)]
pub struct GradedFixture {
    pub id: String,
    pub group: Arc<FiniteGroup>,
    pub objects: Vec<(String, GradedRepObject)>,
}

pub const GRADED_FIXTURE_IDS: [&str; 2] = ["graded-trivial", "graded-s3"];

pub fn graded_fixtures() -> Vec<GradedFixture> {
    let g = crate::fixtures::trivial_group();
    let mut objects: Vec<(String, GradedRepObject)> =
        (-3..=3).map(|r| (format!("1({r})"), GradedRepObject::tate_power(&g, r))).collect();
    objects.push((
        "1(3)+1(-1)".into(),
        GradedRepObject::tate_power(&g, 3).direct_sum(&GradedRepObject::tate_power(&g, -1)).expect("one group"),
    ));
    objects.push(("odd".into(), GradedRepObject::pure(1, &RepObject::trivial(&g, 2))));
    let trivial = GradedFixture { id: GRADED_FIXTURE_IDS[0].into(), group: g, objects };

    let fx = crate::fixtures::s3();
    let g = fx.group.clone();
    let std2 = fx.object("std2").expect("fixture object");
    let sign = fx.object("sign").expect("fixture object");
    let mixed = GradedRepObject::new(&g, [(2, sign.clone()), (-1, std2.clone()), (0, RepObject::unit(&g))]).expect("one group");
    let objects = vec![
        ("1(0)".into(), GradedRepObject::tate_power(&g, 0)),
        ("1(3)+1(-1)".into(), GradedRepObject::tate_power(&g, 3).direct_sum(&GradedRepObject::tate_power(&g, -1)).expect("one group")),
        ("std2@0".into(), GradedRepObject::pure(0, std2)),
        ("std2@5".into(), GradedRepObject::pure(5, std2)),
        ("sign@2".into(), GradedRepObject::pure(2, sign)),
        ("mixed".into(), mixed),
        ("regular@1".into(), GradedRepObject::pure(1, fx.object("regular").expect("fixture object"))),
    ];
    vec![trivial, GradedFixture { id: GRADED_FIXTURE_IDS[1].into(), group: g, objects }]
}
