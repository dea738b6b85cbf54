use num_traits::One;

use super::{IdealBlock, MatrixRep};
use crate::algebra::{Family, ReductiveAlgebra, SimpleType};
use crate::error::{Error, Result};
use crate::invariants;
use crate::linalg::{q, QMatrix, Q};

use super::structure::StructureConstants;

/// Natural matrix model of a classical type: labels and basis matrices.
///
/// - `A_n`: `sl_{n+1}`, basis `e_i_j` (i != j) and `h_i = E_ii - E_{i+1,i+1}`.
/// - `B_n` (n >= 3), `D_n`: `so_N` for the split form `S` (ones on the
///   antidiagonal), basis `S (E_ij - E_ji)`.
/// - `B2`, `C_n`: `sp_{2n}` for `W` with `W[i][N-1-i] = 1` (i < n) and `-1`
///   otherwise, basis `W^T M` for `M` symmetric.
///
/// All matrices are integral.
pub fn natural_basis(t: SimpleType) -> Result<(usize, Vec<String>, Vec<QMatrix>)> {
    let n = t.rank() as usize;
    let mut labels = Vec::new();
    let mut images = Vec::new();
    let degree = match t.family() {
        Family::A => {
            let big = n + 1;
            for i in 0..big {
                for j in 0..big {
                    if i != j {
                        labels.push(format!("e_{}_{}", i + 1, j + 1));
                        images.push(QMatrix::unit(big, i, j));
                    }
                }
            }
            for i in 0..n {
                labels.push(format!("h_{}", i + 1));
                let mut h = QMatrix::unit(big, i, i);
                h[(i + 1, i + 1)] = -Q::one();
                images.push(h);
            }
            big
        }
        Family::B | Family::D if !(t.family() == Family::B && n == 2) => {
            let big = if t.family() == Family::B { 2 * n + 1 } else { 2 * n };
            let flip = |i: usize| big - 1 - i;
            for i in 0..big {
                for j in i + 1..big {
                    // S (E_ij - E_ji) = E_{i',j} - E_{j',i}
                    let mut m = QMatrix::unit(big, flip(i), j);
                    m[(flip(j), i)] = -Q::one();
                    labels.push(format!("k_{}_{}", i + 1, j + 1));
                    images.push(m);
                }
            }
            big
        }
        Family::B | Family::C => {
            let big = 2 * n;
            let mut w = QMatrix::zeros(big, big);
            for i in 0..big {
                w[(i, big - 1 - i)] = if i < n { Q::one() } else { -Q::one() };
            }
            let wt = w.transpose();
            for i in 0..big {
                for j in i..big {
                    let mut m = QMatrix::unit(big, i, j);
                    m[(j, i)] = Q::one();
                    labels.push(format!("s_{}_{}", i + 1, j + 1));
                    images.push(&wt * &m);
                }
            }
            big
        }
        _ => return Err(Error::Unsupported(format!("no explicit model for {t}"))),
    };
    debug_assert_eq!(images.len() as u64, t.dim());
    debug_assert_eq!(degree as u64, t.mu());
    Ok((degree, labels, images))
}

/// Natural module of a classical simple type; its degree is `mu(t)`.
pub fn natural_rep(t: SimpleType) -> Result<MatrixRep> {
    let (degree, labels, images) = natural_basis(t)?;
    Ok(MatrixRep::from_parts(
        degree,
        vec![IdealBlock {
            simple_type: t,
            labels,
            images,
        }],
        Vec::new(),
    ))
}

/// Faithful representation of `C^m` of degree `mu_abelian(m)`: the identity
/// plus `m - 1` matrix units from the top-right `floor(d/2) x ceil(d/2)`
/// block, whose products all vanish.
pub fn schur_abelian_rep(m: usize) -> Result<MatrixRep> {
    if m == 0 {
        return Err(Error::InvalidArgument("schur_abelian_rep needs m >= 1".into()));
    }
    let d = invariants::mu_abelian(m as i64) as usize;
    let top = d / 2;
    let mut images = vec![QMatrix::identity(d)];
    images.extend(
        (0..top)
            .flat_map(|i| (top..d).map(move |j| (i, j)))
            .take(m - 1)
            .map(|(i, j)| QMatrix::unit(d, i, j)),
    );
    debug_assert_eq!(images.len(), m);
    Ok(MatrixRep::from_parts(d, Vec::new(), images))
}

/// Irreducible `A1`-module of degree `d`, in the basis `e, f, h` of the
/// natural model: `h v_i = (d-1-2i) v_i`, `f v_i = v_{i+1}`,
/// `e v_i = i (d-i) v_{i-1}`.
pub fn sl2_irrep(d: usize) -> Result<MatrixRep> {
    if d == 0 {
        return Err(Error::InvalidArgument("module degree must be >= 1".into()));
    }
    let mut e = QMatrix::zeros(d, d);
    let mut f = QMatrix::zeros(d, d);
    let mut h = QMatrix::zeros(d, d);
    for i in 0..d {
        h[(i, i)] = q(d as i64 - 1 - 2 * i as i64);
        if i + 1 < d {
            f[(i + 1, i)] = Q::one();
        }
        if i > 0 {
            e[(i - 1, i)] = q((i * (d - i)) as i64);
        }
    }
    let a1 = SimpleType::new(Family::A, 1)?;
    let (_, labels, _) = natural_basis(a1)?;
    Ok(MatrixRep::from_parts(
        d,
        vec![IdealBlock {
            simple_type: a1,
            labels,
            images: vec![e, f, h],
        }],
        Vec::new(),
    ))
}

/// Dual module `x -> -x^T`.
pub fn dual_rep(r: &MatrixRep) -> MatrixRep {
    let neg_t = |m: &QMatrix| -&m.transpose();
    let simples = r
        .simples
        .iter()
        .map(|b| IdealBlock {
            simple_type: b.simple_type,
            labels: b.labels.clone(),
            images: b.images.iter().map(neg_t).collect(),
        })
        .collect();
    MatrixRep::from_parts(r.degree, simples, r.center.iter().map(neg_t).collect())
}

/// Adjoint module of the algebra of `r`, built from its structure constants:
/// `ad(x_a)[e][b] = c^e_{ab}`.
pub fn adjoint_rep(r: &MatrixRep) -> Result<MatrixRep> {
    let sc = StructureConstants::for_algebra(&r.algebra())?;
    let d = sc.dim();
    let mut ads = Vec::with_capacity(d);
    for a in 0..d {
        let mut m = QMatrix::zeros(d, d);
        for b in 0..d {
            for (e, c) in sc.bracket(a, b) {
                m[(*e, b)] = c.clone();
            }
        }
        ads.push(m);
    }
    let mut it = ads.into_iter();
    let simples = r
        .simples
        .iter()
        .map(|b| IdealBlock {
            simple_type: b.simple_type,
            labels: b.labels.clone(),
            images: it.by_ref().take(b.images.len()).collect(),
        })
        .collect();
    Ok(MatrixRep::from_parts(d, simples, it.collect()))
}

/// Direct sum of modules of one algebra: each basis element acts block
/// diagonally.
pub fn module_sum(reps: &[MatrixRep]) -> Result<MatrixRep> {
    let first = reps
        .first()
        .ok_or_else(|| Error::InvalidArgument("module sum of an empty list".into()))?;
    let labels = first.basis_labels();
    if let Some(bad) = reps.iter().find(|r| r.basis_labels() != labels) {
        return Err(Error::InvalidArgument(format!(
            "module sum needs one algebra, got {} and {}",
            first.algebra(),
            bad.algebra()
        )));
    }
    let degree = reps.iter().map(|r| r.degree).sum();
    let sum_at = |pick: &dyn Fn(&MatrixRep) -> &QMatrix| {
        let blocks: Vec<&QMatrix> = reps.iter().map(pick).collect();
        QMatrix::block_diag(&blocks)
    };
    let simples = first
        .simples
        .iter()
        .enumerate()
        .map(|(bi, b)| IdealBlock {
            simple_type: b.simple_type,
            labels: b.labels.clone(),
            images: (0..b.images.len())
                .map(|k| sum_at(&|r: &MatrixRep| &r.simples[bi].images[k]))
                .collect(),
        })
        .collect();
    let center = (0..first.center.len())
        .map(|k| sum_at(&|r: &MatrixRep| &r.center[k]))
        .collect();
    Ok(MatrixRep::from_parts(degree, simples, center))
}

/// `m` copies of the trivial module of `g`.
pub fn trivial_module(g: &ReductiveAlgebra, m: usize) -> Result<MatrixRep> {
    let zero = QMatrix::zeros(m, m);
    let simples = g
        .simples()
        .iter()
        .map(|&t| {
            let (_, labels, images) = natural_basis(t)?;
            Ok(IdealBlock {
                simple_type: t,
                labels,
                images: vec![zero.clone(); images.len()],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let center = vec![zero; g.center_dim() as usize];
    Ok(MatrixRep::from_parts(m, simples, center))
}
