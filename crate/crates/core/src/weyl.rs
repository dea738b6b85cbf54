//! Root data from Cartan matrices and the Weyl dimension formula.
//!
//! This is an oracle: it derives minimal irreducible degrees from root
//! systems and never consults the closed-form `mu` table.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Family, SimpleType};
use crate::error::{Error, Result};
use crate::linalg::Q;

/// Positive roots of a simple type together with the data needed to
/// evaluate `<lambda + rho, alpha^vee>`.
///
/// Roots are in simple-root coordinates. The invariant form is normalized
/// so the shortest simple roots have `(a, a) = 2`; `symmetrizer[i]` is
/// `(a_i, a_i) / 2`.
#[derive(Clone, Debug, Serialize)]
pub struct RootData {
    #[serde(rename = "type")]
    pub simple_type: SimpleType,
    /// `cartan[i][j] = <a_i^vee, a_j>`.
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizer: Vec<i64>,
    pub positive_roots: Vec<Vec<i64>>,
    /// `(rho, alpha)` for each positive root, in the normalized form.
    pub rho_pairings: Vec<i64>,
}

/// Highest weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DominantWeight(pub Vec<u32>);

impl DominantWeight {
    pub fn zero(rank: usize) -> DominantWeight {
        DominantWeight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> DominantWeight {
        let mut c = vec![0; rank];
        c[i] = 1;
        DominantWeight(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

pub fn cartan_matrix(t: SimpleType) -> Vec<Vec<i64>> {
    let n = t.rank() as usize;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family() {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            // Bourbaki labels: 1-3-4-5-..., node 2 hangs off node 4.
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
    }
    match t.family() {
        // last simple root short
        Family::B => a[n - 1][n - 2] = -2,
        // last simple root long
        Family::C => a[n - 2][n - 1] = -2,
        Family::F => a[2][1] = -2,
        Family::G => a[0][1] = -3,
        _ => {}
    }
    a
}

fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    // d_j = d_i a_ij / a_ji along edges of the (connected) diagram
    let mut d: Vec<Option<Q>> = vec![None; n];
    d[0] = Some(Q::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i != j && a[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().expect("visited");
                d[j] = Some(di * Q::new(BigInt::from(a[i][j]), BigInt::from(a[j][i])));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Q> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let lcm = d
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = d.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = scaled
        .iter()
        .fold(BigInt::from(0), |acc, x| acc.gcd(x));
    scaled
        .iter()
        .map(|x| (x / &g).to_i64().expect("small symmetrizer"))
        .collect()
}

fn positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut roots = simple.clone();
    let mut idx = 0;
    // roots are appended in nondecreasing height, so every beta - r a_i
    // (lower height) has already been discovered when beta is processed
    while idx < roots.len() {
        let beta = roots[idx].clone();
        idx += 1;
        for i in 0..n {
            if beta == simple[i] {
                continue;
            }
            let pairing: i64 = (0..n).map(|j| a[i][j] * beta[j]).sum();
            let mut p = 0;
            let mut down = beta.clone();
            loop {
                down[i] -= 1;
                if down[i] < 0 || !known.contains(&down) {
                    break;
                }
                p += 1;
            }
            let q = p - pairing;
            if q > 0 {
                let mut up = beta.clone();
                up[i] += 1;
                if known.insert(up.clone()) {
                    roots.push(up);
                }
            }
        }
    }
    roots
}

impl RootData {
    pub fn new(t: SimpleType) -> RootData {
        let cartan = cartan_matrix(t);
        let symmetrizer = symmetrizer(&cartan);
        let positive_roots = positive_roots(&cartan);
        let rho_pairings = positive_roots
            .iter()
            .map(|r| r.iter().zip(&symmetrizer).map(|(c, d)| c * d).sum())
            .collect();
        RootData {
            simple_type: t,
            cartan,
            symmetrizer,
            positive_roots,
            rho_pairings,
        }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Weyl dimension formula `prod (lambda + rho, a) / (rho, a)`.
    ///
    /// Panics if the product is not an integer, which would mean the root
    /// data are wrong.
    pub fn weyl_dim(&self, weight: &DominantWeight) -> Result<BigInt> {
        if weight.0.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: weight.0.len(),
            });
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (root, &rho) in self.positive_roots.iter().zip(&self.rho_pairings) {
            let shifted: i64 = root
                .iter()
                .zip(&self.symmetrizer)
                .zip(&weight.0)
                .map(|((c, d), l)| c * d * (*l as i64 + 1))
                .sum();
            num *= shifted;
            den *= rho;
        }
        let ratio = Q::new(num, den);
        assert!(
            ratio.is_integer(),
            "non-integral Weyl dimension for {} at {:?}",
            self.simple_type,
            weight.0
        );
        Ok(ratio.to_integer())
    }

    fn dim_u64(&self, weight: &DominantWeight) -> u64 {
        self.weyl_dim(weight)
            .expect("weight of matching rank")
            .to_u64()
            .unwrap_or(u64::MAX)
    }

    /// Smallest degree of a nontrivial irreducible module, searching every
    /// weight with coordinates in `0..=2`.
    pub fn min_nontrivial_dim(&self) -> u64 {
        let r = self.rank() as u32;
        let total = 3u64.pow(r);
        (1..total)
            .into_par_iter()
            .map(|mut code| {
                let mut c = vec![0u32; r as usize];
                for x in c.iter_mut() {
                    *x = (code % 3) as u32;
                    code /= 3;
                }
                self.dim_u64(&DominantWeight(c))
            })
            .min()
            .expect("rank >= 1")
    }

    /// All nontrivial irreducible degrees `<= bound`.
    ///
    /// Starts from the zero weight and raises one coordinate at a time,
    /// stopping a branch once the degree exceeds `bound`; the degree is
    /// strictly increasing in each coordinate so nothing is missed.
    pub fn irrep_dims_upto(&self, bound: u64) -> BTreeSet<u64> {
        let r = self.rank();
        let mut dims = BTreeSet::new();
        let mut seen: HashSet<DominantWeight> = HashSet::new();
        let mut stack = vec![DominantWeight::zero(r)];
        while let Some(w) = stack.pop() {
            for i in 0..r {
                let mut next = w.clone();
                next.0[i] += 1;
                if seen.contains(&next) {
                    continue;
                }
                let d = self.dim_u64(&next);
                if d <= bound {
                    dims.insert(d);
                    seen.insert(next.clone());
                    stack.push(next);
                }
            }
        }
        dims
    }
}
