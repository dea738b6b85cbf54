use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::{natural_rep, MatrixRep};
use crate::algebra::ReductiveAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, QMatrix, Q};

/// Sparse bracket table: `bracket(a, b)` lists `(e, c)` with
/// `[x_a, x_b] = sum c x_e`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    dim: usize,
    table: Vec<Vec<(usize, Q)>>,
}

type Sparse = BTreeMap<usize, Q>;

fn add_scaled(acc: &mut Sparse, c: &Q, v: &[(usize, Q)]) {
    for (e, x) in v {
        let slot = acc.entry(*e).or_insert_with(Q::zero);
        *slot += c * x;
        if slot.is_zero() {
            acc.remove(e);
        }
    }
}

impl StructureConstants {
    /// Build from a dense-index table, checking antisymmetry and Jacobi.
    pub fn new(dim: usize, table: Vec<Vec<(usize, Q)>>) -> Result<StructureConstants> {
        if table.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: table.len(),
            });
        }
        let sc = StructureConstants { dim, table };
        for a in 0..dim {
            for b in 0..dim {
                let mut sum = Sparse::new();
                add_scaled(&mut sum, &Q::from_integer(1.into()), sc.bracket(a, b));
                add_scaled(&mut sum, &Q::from_integer(1.into()), sc.bracket(b, a));
                if !sum.is_empty() {
                    return Err(Error::InvalidArgument(format!(
                        "bracket table is not antisymmetric at ({a}, {b})"
                    )));
                }
            }
        }
        if let Some((a, b, c)) = sc.jacobi_violation() {
            return Err(Error::InvalidArgument(format!(
                "Jacobi identity fails for ({a}, {b}, {c})"
            )));
        }
        Ok(sc)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket(&self, a: usize, b: usize) -> &[(usize, Q)] {
        &self.table[a * self.dim + b]
    }

    fn double(&self, a: usize, b: usize, c: usize) -> Sparse {
        // [[x_a, x_b], x_c]
        let mut acc = Sparse::new();
        for (e, x) in self.bracket(a, b) {
            add_scaled(&mut acc, x, self.bracket(*e, c));
        }
        acc
    }

    fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim;
        (0..d).into_par_iter().find_map_first(|a| {
            for b in a + 1..d {
                for c in b + 1..d {
                    let mut acc = self.double(a, b, c);
                    for (k, v) in self.double(b, c, a).into_iter().chain(self.double(c, a, b)) {
                        let slot = acc.entry(k).or_insert_with(Q::zero);
                        *slot += v;
                        if slot.is_zero() {
                            acc.remove(&k);
                        }
                    }
                    if !acc.is_empty() {
                        return Some((a, b, c));
                    }
                }
            }
            None
        })
    }

    /// Direct sum: blocks commute with each other.
    pub fn direct_sum(parts: &[StructureConstants]) -> StructureConstants {
        let dim: usize = parts.iter().map(|p| p.dim).sum();
        let mut table = vec![Vec::new(); dim * dim];
        let mut off = 0;
        for p in parts {
            for a in 0..p.dim {
                for b in 0..p.dim {
                    table[(off + a) * dim + off + b] = p
                        .bracket(a, b)
                        .iter()
                        .map(|(e, c)| (off + e, c.clone()))
                        .collect();
                }
            }
            off += p.dim;
        }
        StructureConstants { dim, table }
    }

    /// Abstract structure constants of `g` in its canonical basis: those of
    /// the natural model of each simple ideal, then a zero center.
    pub fn for_algebra(g: &ReductiveAlgebra) -> Result<StructureConstants> {
        let mut parts = Vec::with_capacity(g.length() + 1);
        for &t in g.simples() {
            parts.push(structure_constants_of(&natural_rep(t)?)?);
        }
        parts.push(StructureConstants {
            dim: g.center_dim() as usize,
            table: vec![Vec::new(); (g.center_dim() as usize).pow(2)],
        });
        Ok(StructureConstants::direct_sum(&parts))
    }
}

fn flatten(m: &QMatrix) -> Vec<Q> {
    m.entries().to_vec()
}

/// Bracket table of the span of `r`'s basis images, by exact solves.
pub fn structure_constants_of(r: &MatrixRep) -> Result<StructureConstants> {
    let d = r.dim();
    let n2 = r.degree() * r.degree();
    let images: Vec<&QMatrix> = r.basis_images().collect();
    // rows [v_a | e_a]: reducing [t | 0] leaves [0 | -coords(t)]
    let mut ech = Echelon::new(n2 + d);
    for (a, m) in images.iter().enumerate() {
        let mut v = flatten(m);
        v.resize(n2 + d, Q::zero());
        v[n2 + a] = Q::from_integer(1.into());
        ech.insert(v);
    }
    let kernel = kernel_dim(r);
    if kernel > 0 {
        return Err(Error::DependentBasis(kernel));
    }
    let labels = r.basis_labels();
    let mut table = vec![Vec::new(); d * d];
    for a in 0..d {
        for b in a + 1..d {
            let mut v = flatten(&images[a].commutator(images[b]));
            v.resize(n2 + d, Q::zero());
            ech.reduce(&mut v);
            if v[..n2].iter().any(|x| !x.is_zero()) {
                return Err(Error::InvalidArgument(format!(
                    "[{}, {}] leaves the span of the basis images",
                    labels[a], labels[b]
                )));
            }
            let coords: Vec<(usize, Q)> = v[n2..]
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(e, x)| (e, -x.clone()))
                .collect();
            table[b * d + a] = coords.iter().map(|(e, x)| (*e, -x.clone())).collect();
            table[a * d + b] = coords;
        }
    }
    StructureConstants::new(d, table)
}

/// Dimension of the kernel of `g -> gl_n`.
pub fn kernel_dim(r: &MatrixRep) -> usize {
    let n2 = r.degree() * r.degree();
    let mut ech = Echelon::new(n2);
    for m in r.basis_images() {
        ech.insert(flatten(m));
    }
    r.dim() - ech.rank()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub algebra: String,
    pub degree: usize,
    pub dim: usize,
    /// Label pairs whose bracket is not preserved.
    pub violations: Vec<(String, String)>,
    pub kernel_dim: usize,
}

impl VerifyReport {
    pub fn is_homomorphism(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn is_faithful(&self) -> bool {
        self.is_homomorphism() && self.kernel_dim == 0
    }
}

/// Check `[r(x_a), r(x_b)] = r([x_a, x_b])` for every pair and compute the
/// kernel of `r`.
pub fn verify_rep(r: &MatrixRep, sc: &StructureConstants) -> Result<VerifyReport> {
    let d = r.dim();
    if sc.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: sc.dim(),
        });
    }
    let images: Vec<&QMatrix> = r.basis_images().collect();
    let labels = r.basis_labels();
    let n = r.degree();
    let violations: Vec<(String, String)> = (0..d)
        .into_par_iter()
        .flat_map_iter(|a| {
            let images = &images;
            let labels = &labels;
            (a + 1..d).filter_map(move |b| {
                let lhs = images[a].commutator(images[b]);
                let mut rhs = QMatrix::zeros(n, n);
                for (e, c) in sc.bracket(a, b) {
                    rhs = &rhs + &images[*e].scale(c);
                }
                (lhs != rhs).then(|| (labels[a].clone(), labels[b].clone()))
            })
        })
        .collect();
    Ok(VerifyReport {
        algebra: r.algebra().to_string(),
        degree: n,
        dim: d,
        violations,
        kernel_dim: kernel_dim(r),
    })
}

fn centralizer_echelon(r: &MatrixRep) -> Echelon {
    let n = r.degree();
    let mut ech = Echelon::new(n * n);
    // unknown A_pq sits at index p * n + q; equation (AX - XA)_ij = 0
    'outer: for x in r.basis_images() {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![Q::zero(); n * n];
                for k in 0..n {
                    let xkj = &x[(k, j)];
                    if !xkj.is_zero() {
                        row[i * n + k] += xkj;
                    }
                    let xik = &x[(i, k)];
                    if !xik.is_zero() {
                        row[k * n + j] -= xik;
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    ech.insert(row);
                    if ech.is_full() {
                        break 'outer;
                    }
                }
            }
        }
    }
    ech
}

/// Dimension of `{A : [A, r(x)] = 0 for all x}`.
pub fn centralizer_dim_numeric(r: &MatrixRep) -> usize {
    let n = r.degree();
    n * n - centralizer_echelon(r).rank()
}

/// A basis of the centralizer as matrices.
pub fn centralizer_basis(r: &MatrixRep) -> Vec<QMatrix> {
    let n = r.degree();
    centralizer_echelon(r)
        .nullspace()
        .into_iter()
        .map(|v| QMatrix::from_rows(v.chunks(n).map(<[Q]>::to_vec).collect()))
        .collect()
}
