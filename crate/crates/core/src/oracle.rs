//! Independent model of the quotient as `Rep(H)` by literal restriction.
//!
//! Nothing here calls into the quotient construction; Hom spaces are solved
//! directly over every element of `H` from the Kronecker form of the
//! intertwining equations.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{is_normal, FiniteGroup, Subgroup};
use crate::linalg::{Matrix, Rational, RowReducer};
use crate::rep::RepObject;

/// A representation of `G` seen only through the elements of `H`.
#[derive(Debug, Clone, PartialEq)]
pub struct RestrictedRep {
    subgroup: Subgroup,
    dim: usize,
    /// Aligned with `subgroup.elements()`.
    matrices: Vec<Matrix>,
}

/// `Res^G_H x`, verified to be a homomorphism on all pairs of `H`.
pub fn restrict(x: &RepObject, h: &Subgroup) -> Result<RestrictedRep> {
    if !x.group().same_as(h.group()) {
        return Err(Error::GroupMismatch);
    }
    let r = RestrictedRep {
        subgroup: h.clone(),
        dim: x.dim(),
        matrices: h.elements().iter().map(|&s| x.matrix(s).clone()).collect(),
    };
    if !r.is_homomorphism() {
        return Err(Error::InvalidRepresentation("restriction is not a homomorphism".into()));
    }
    Ok(r)
}

impl RestrictedRep {
    /// The unit object of `Rep(H)`.
    pub fn unit(h: &Subgroup) -> Self {
        RestrictedRep { subgroup: h.clone(), dim: 1, matrices: vec![Matrix::identity(1); h.order()] }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix of the group element `g` (an element of `G` lying in `H`).
    pub fn matrix(&self, g: usize) -> Option<&Matrix> {
        self.subgroup.elements().binary_search(&g).ok().map(|i| &self.matrices[i])
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    fn is_homomorphism(&self) -> bool {
        let g = self.subgroup.group();
        let els = self.subgroup.elements();
        els.iter().zip(&self.matrices).all(|(&a, ma)| {
            els.iter().zip(&self.matrices).all(|(&b, mb)| {
                self.matrix(g.mul(a, b)).map_or(false, |mab| &(ma * mb) == mab)
            })
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.matrices.iter().all(Matrix::is_identity)
    }

    pub fn tensor(&self, other: &RestrictedRep) -> Result<RestrictedRep> {
        if self.subgroup != other.subgroup {
            return Err(Error::GroupMismatch);
        }
        Ok(RestrictedRep {
            subgroup: self.subgroup.clone(),
            dim: self.dim * other.dim,
            matrices: self.matrices.iter().zip(&other.matrices).map(|(a, b)| a.kron(b)).collect(),
        })
    }
}

/// Basis of `Hom_H(x', y')` as `dim y' x dim x'` matrices, from
/// `(ρ_y(h) ⊗ 1 − 1 ⊗ ρ_x(h)ᵀ) vec(M) = 0` for every `h ∈ H`.
pub fn oracle_hom(x: &RestrictedRep, y: &RestrictedRep) -> Result<Vec<Matrix>> {
    if x.subgroup != y.subgroup {
        return Err(Error::GroupMismatch);
    }
    let (dx, dy) = (x.dim, y.dim);
    let (ix, iy) = (Matrix::identity(dx), Matrix::identity(dy));
    let mut red = RowReducer::new(dx * dy);
    'elements: for (mx, my) in x.matrices.iter().zip(&y.matrices) {
        let system = &my.kron(&ix) - &iy.kron(&mx.transpose());
        for r in 0..system.rows() {
            let row = system.row(r);
            if row.iter().all(Rational::is_zero) {
                continue;
            }
            red.push(row.to_vec());
            if red.is_full() {
                break 'elements;
            }
        }
    }
    red.kernel_basis().into_iter().map(|v| Matrix::new(dy, dx, v)).collect()
}

/// Outcome of the closed-immersion check for `H ⊆ G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedImmersionReport {
    pub end_dim: usize,
    /// `|G|² / |H|`.
    pub expected_end_dim: usize,
    /// `[G:H]`.
    pub copies: usize,
    /// Whether `P ρ(h) P⁻¹` is block diagonal with `[G:H]` copies of the
    /// regular representation of `H`, for every `h`.
    pub regrouping_verified: bool,
}

impl ClosedImmersionReport {
    pub fn passed(&self) -> bool {
        self.end_dim == self.expected_end_dim && self.regrouping_verified
    }
}

/// Permutation matrix sending the basis vector `e_x` of `ℚ[G]` to the
/// position of `x = h' t_j` in the ordering by right coset `H t_j`, then by
/// `h'` in `H`.
pub fn coset_regrouping(h: &Subgroup) -> Matrix {
    let g = h.group();
    let n = g.order();
    let mut p = Matrix::zeros(n, n);
    let pos: HashMap<usize, usize> = h.elements().iter().enumerate().map(|(i, &s)| (s, i)).collect();
    for (j, coset) in h.right_cosets().iter().enumerate() {
        let t = coset[0];
        for &s in h.elements() {
            let x = g.mul(s, t);
            p[(j * h.order() + pos[&s], x)] = Rational::one();
        }
    }
    p
}

fn regular_of_subgroup(h: &Subgroup, s: usize) -> Matrix {
    let g = h.group();
    let els = h.elements();
    let mut m = Matrix::zeros(els.len(), els.len());
    for (c, &t) in els.iter().enumerate() {
        let r = els.binary_search(&g.mul(s, t)).expect("closed under multiplication");
        m[(r, c)] = Rational::one();
    }
    m
}

pub fn check_closed_immersion(h: &Subgroup) -> Result<ClosedImmersionReport> {
    let g = h.group();
    let reg = RepObject::regular(g);
    let r = restrict(&reg, h)?;
    let end_dim = oracle_hom(&r, &r)?.len();
    let copies = g.order() / h.order();
    let p = coset_regrouping(h);
    let p_inv = p.transpose();
    let regrouping_verified = (&p * &p_inv).is_identity()
        && h.elements().iter().all(|&s| {
            let block = regular_of_subgroup(h, s);
            let blocks = vec![&block; copies];
            &(&p * reg.matrix(s)) * &p_inv == Matrix::block_diag(&blocks)
        });
    Ok(ClosedImmersionReport {
        end_dim,
        expected_end_dim: g.order() * g.order() / h.order(),
        copies,
        regrouping_verified,
    })
}

/// Matrix-level form of `π(Q) ≅ q(H)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalQuotientReport {
    pub pairs_checked: usize,
    /// Every `ρ(h)`, `h ∈ H`, commutes with every morphism of `Rep(H)`
    /// between the given objects.
    pub subgroup_centralizes: bool,
    /// Elements of `G` whose action commutes with all those morphisms.
    pub natural_subgroup: Vec<usize>,
    pub natural_subgroup_is_h: bool,
}

impl NormalQuotientReport {
    pub fn passed(&self) -> bool {
        self.subgroup_centralizes && self.natural_subgroup_is_h
    }
}

/// Rejects non-normal `H`. The regular representation is always added to
/// `objects` so that the natural subgroup is detected faithfully.
pub fn check_normal_quotient(h: &Subgroup, objects: &[RepObject]) -> Result<NormalQuotientReport> {
    let g: &Arc<FiniteGroup> = h.group();
    if !is_normal(g, h) {
        return Err(Error::NotNormal);
    }
    let mut objs = objects.to_vec();
    objs.push(RepObject::regular(g));
    let restricted: Vec<RestrictedRep> = objs.iter().map(|x| restrict(x, h)).collect::<Result<_>>()?;
    let mut centralizes = true;
    let mut natural: Vec<bool> = vec![true; g.order()];
    let mut pairs = 0;
    for (x, rx) in objs.iter().zip(&restricted) {
        for (y, ry) in objs.iter().zip(&restricted) {
            pairs += 1;
            let homs = oracle_hom(rx, ry)?;
            for s in g.elements() {
                if !natural[s] {
                    continue;
                }
                let commutes = homs.iter().all(|m| &(y.matrix(s) * m) == &(m * x.matrix(s)));
                natural[s] = commutes;
                if !commutes && h.contains(s) {
                    centralizes = false;
                }
            }
        }
    }
    let natural_subgroup: Vec<usize> = g.elements().filter(|&s| natural[s]).collect();
    Ok(NormalQuotientReport {
        pairs_checked: pairs,
        subgroup_centralizes: centralizes,
        natural_subgroup_is_h: natural_subgroup == h.elements(),
        natural_subgroup,
    })
}
