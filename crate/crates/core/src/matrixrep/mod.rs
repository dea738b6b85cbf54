//! Explicit representations over the rationals.
//!
//! A [`MatrixRep`] keeps its basis grouped by ideal: one block of images per
//! simple ideal (ordered by type, stable) followed by the center. The abstract
//! basis of a simple ideal is the basis of its natural matrix model, so
//! every representation of, say, `A1` uses the labels `e_1_2, e_2_1, h_1`.

mod construct;
mod io;
mod structure;

pub use construct::{
    adjoint_rep, dual_rep, module_sum, natural_basis, natural_rep, schur_abelian_rep,
    sl2_irrep, trivial_module,
};
pub use io::{read_rep_file, rep_from_json, rep_to_json, write_rep_file, RepFile};
pub use structure::{
    centralizer_basis, centralizer_dim_numeric, kernel_dim, structure_constants_of,
    verify_rep, StructureConstants, VerifyReport,
};

use crate::algebra::{ReductiveAlgebra, SimpleType};
use crate::error::{Error, Result};
use crate::invariants;
use crate::linalg::QMatrix;

/// Images of the basis of one simple ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealBlock {
    pub simple_type: SimpleType,
    pub labels: Vec<String>,
    pub images: Vec<QMatrix>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep {
    degree: usize,
    simples: Vec<IdealBlock>,
    center: Vec<QMatrix>,
}

impl MatrixRep {
    pub(crate) fn from_parts(
        degree: usize,
        mut simples: Vec<IdealBlock>,
        center: Vec<QMatrix>,
    ) -> MatrixRep {
        simples.sort_by_key(|b| b.simple_type);
        debug_assert!(simples
            .iter()
            .flat_map(|b| &b.images)
            .chain(&center)
            .all(|m| m.rows() == degree && m.cols() == degree));
        MatrixRep {
            degree,
            simples,
            center,
        }
    }

    /// Representation of the zero algebra on `C^degree`.
    pub fn zero_rep(degree: usize) -> MatrixRep {
        MatrixRep::from_parts(degree, Vec::new(), Vec::new())
    }

    /// Representation of `C^k` from pairwise commuting matrices.
    pub fn abelian(degree: usize, images: Vec<QMatrix>) -> Result<MatrixRep> {
        for (i, m) in images.iter().enumerate() {
            if m.rows() != degree || m.cols() != degree {
                return Err(Error::DimensionMismatch {
                    expected: degree,
                    found: m.rows(),
                });
            }
            for (j, other) in images.iter().enumerate().skip(i + 1) {
                if !m.commutator(other).is_zero() {
                    return Err(Error::NonCommuting {
                        left: center_label(i),
                        right: center_label(j),
                    });
                }
            }
        }
        Ok(MatrixRep::from_parts(degree, Vec::new(), images))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn algebra(&self) -> ReductiveAlgebra {
        ReductiveAlgebra::new(
            self.simples.iter().map(|b| b.simple_type).collect(),
            self.center.len() as u32,
        )
    }

    pub fn simple_blocks(&self) -> &[IdealBlock] {
        &self.simples
    }

    pub fn center_images(&self) -> &[QMatrix] {
        &self.center
    }

    pub fn dim(&self) -> usize {
        self.simples.iter().map(|b| b.images.len()).sum::<usize>() + self.center.len()
    }

    /// Basis images in canonical order: simple ideals, then center.
    pub fn basis_images(&self) -> impl Iterator<Item = &QMatrix> + '_ {
        self.simples
            .iter()
            .flat_map(|b| b.images.iter())
            .chain(self.center.iter())
    }

    /// `"<type>[<ideal index>].<local label>"` for simple ideals,
    /// `"z[<i>]"` for the center.
    pub fn basis_labels(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.dim());
        for (i, b) in self.simples.iter().enumerate() {
            for l in &b.labels {
                out.push(format!("{}[{}].{}", b.simple_type, i, l));
            }
        }
        out.extend((0..self.center.len()).map(center_label));
        out
    }

    /// Replace the basis image at canonical position `index` by zero.
    pub fn with_zeroed_image(&self, index: usize) -> MatrixRep {
        let mut out = self.clone();
        let zero = QMatrix::zeros(self.degree, self.degree);
        let mut k = index;
        for b in out.simples.iter_mut() {
            if k < b.images.len() {
                b.images[k] = zero;
                return out;
            }
            k -= b.images.len();
        }
        out.center[k] = zero;
        out
    }
}

fn center_label(i: usize) -> String {
    format!("z[{i}]")
}

/// Block-diagonal sum representing the direct sum of the algebras.
pub fn direct_sum(reps: &[MatrixRep]) -> Result<MatrixRep> {
    if reps.is_empty() {
        return Err(Error::InvalidArgument("direct sum of an empty list".into()));
    }
    let degree: usize = reps.iter().map(|r| r.degree).sum();
    let mut simples = Vec::new();
    let mut center = Vec::new();
    let mut offset = 0;
    let embed = |m: &QMatrix, offset: usize| {
        let mut big = QMatrix::zeros(degree, degree);
        big.set_block(offset, offset, m);
        big
    };
    for r in reps {
        for b in &r.simples {
            simples.push(IdealBlock {
                simple_type: b.simple_type,
                labels: b.labels.clone(),
                images: b.images.iter().map(|m| embed(m, offset)).collect(),
            });
        }
        center.extend(r.center.iter().map(|m| embed(m, offset)));
        offset += r.degree;
    }
    Ok(MatrixRep::from_parts(degree, simples, center))
}

/// Add the identity as a new center element. Needs a centerless algebra,
/// whose image then cannot contain the identity.
pub fn add_scalar_line(r: &MatrixRep) -> Result<MatrixRep> {
    if !r.center.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "add_scalar_line needs a centerless algebra, got {}",
            r.algebra()
        )));
    }
    let mut out = r.clone();
    out.center.push(QMatrix::identity(r.degree));
    Ok(out)
}

/// `m` trivial summands followed by the natural module of each ideal,
/// where `m = n - mu(s)`.
pub fn standard_block_rep(s: &ReductiveAlgebra, n: usize) -> Result<MatrixRep> {
    if !s.is_semisimple() {
        return Err(Error::InvalidArgument(format!("{s} is not semisimple")));
    }
    let mu = invariants::mu(s) as usize;
    if n < mu {
        return Err(Error::InvalidArgument(format!(
            "degree {n} is below mu({s}) = {mu}"
        )));
    }
    let mut parts = vec![MatrixRep::zero_rep(n - mu)];
    for &t in s.simples() {
        parts.push(natural_rep(t)?);
    }
    direct_sum(&parts)
}

/// Faithful representation of degree exactly `mu(g)`.
///
/// `g = (s_1 + C) + ... + (s_q + C) + s_{q+1} + ... + s_l + C^{k-l}` with
/// `q = min(k, l)`: the first `q` natural blocks carry a scalar line and the
/// remaining center goes into one commutative Schur block.
pub fn reductive_min_rep(g: &ReductiveAlgebra) -> Result<MatrixRep> {
    if let Some(t) = g.simples().iter().find(|t| !t.is_classical()) {
        return Err(Error::Unsupported(format!("no explicit model for {t}")));
    }
    let k = g.center_dim() as usize;
    let l = g.length();
    let mut parts = Vec::with_capacity(l + 1);
    for (i, &t) in g.simples().iter().enumerate() {
        let nat = natural_rep(t)?;
        parts.push(if i < k { add_scalar_line(&nat)? } else { nat });
    }
    if k > l {
        parts.push(schur_abelian_rep(k - l)?);
    }
    if parts.is_empty() {
        return Ok(MatrixRep::zero_rep(0));
    }
    direct_sum(&parts)
}

/// Tensor product module of `a1 + a2`: `x -> r1(x) (x) I`, `y -> I (x) r2(y)`.
pub fn kron_sum(r1: &MatrixRep, r2: &MatrixRep) -> MatrixRep {
    let i1 = QMatrix::identity(r1.degree);
    let i2 = QMatrix::identity(r2.degree);
    let left = |m: &QMatrix| m.kron(&i2);
    let right = |m: &QMatrix| i1.kron(m);
    let mut simples: Vec<IdealBlock> = r1
        .simples
        .iter()
        .map(|b| IdealBlock {
            simple_type: b.simple_type,
            labels: b.labels.clone(),
            images: b.images.iter().map(left).collect(),
        })
        .collect();
    simples.extend(r2.simples.iter().map(|b| IdealBlock {
        simple_type: b.simple_type,
        labels: b.labels.clone(),
        images: b.images.iter().map(right).collect(),
    }));
    let center = r1
        .center
        .iter()
        .map(left)
        .chain(r2.center.iter().map(right))
        .collect();
    MatrixRep::from_parts(r1.degree * r2.degree, simples, center)
}

/// `phi = phi_1 o pi_1 + phi_2 o pi_2` for commuting representations on the
/// same space; `r1`'s algebra must have trivial center.
pub fn assemble_commuting(r1: &MatrixRep, r2: &MatrixRep) -> Result<MatrixRep> {
    if r1.degree != r2.degree {
        return Err(Error::DimensionMismatch {
            expected: r1.degree,
            found: r2.degree,
        });
    }
    if !r1.center.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "first factor {} must have trivial center",
            r1.algebra()
        )));
    }
    let l1 = r1.basis_labels();
    let l2 = r2.basis_labels();
    for (a, x) in r1.basis_images().enumerate() {
        for (b, y) in r2.basis_images().enumerate() {
            if !x.commutator(y).is_zero() {
                return Err(Error::NonCommuting {
                    left: l1[a].clone(),
                    right: l2[b].clone(),
                });
            }
        }
    }
    let mut simples = r1.simples.clone();
    simples.extend(r2.simples.iter().cloned());
    Ok(MatrixRep::from_parts(r1.degree, simples, r2.center.clone()))
}
