//! Closed-form invariants of reductive algebras.
//!
//! `mu(s_1 + ... + s_l + C^k) = mu(s_1) + ... + mu(s_l) + mu_abelian(k - l)`,
//! where `mu_abelian(m)` is the least `d` whose `d x d` matrices contain an
//! `m`-dimensional commutative subalgebra, i.e. the least `d` with
//! `floor(d^2 / 4) + 1 >= m`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{Family, ReductiveAlgebra, SimpleType};
use crate::error::{Error, Result};

pub fn dim_of(g: &ReductiveAlgebra) -> u64 {
    g.simples().iter().map(|t| t.dim()).sum::<u64>() + g.center_dim() as u64
}

/// Least degree of a faithful representation of `C^m` (0 for `m <= 0`).
pub fn mu_abelian(m: i64) -> u64 {
    match m {
        i64::MIN..=0 => 0,
        1 => 1,
        _ => ceil_sqrt(4 * (m as u64 - 1)),
    }
}

fn ceil_sqrt(x: u64) -> u64 {
    let s = x.sqrt();
    if s * s < x {
        s + 1
    } else {
        s
    }
}

/// Sum of the simple ideals' minimal degrees.
pub fn mu_semisimple(g: &ReductiveAlgebra) -> u64 {
    g.simples().iter().map(|t| t.mu()).sum()
}

pub fn mu(g: &ReductiveAlgebra) -> u64 {
    mu_semisimple(g) + mu_abelian(g.center_dim() as i64 - g.length() as i64)
}

/// `mu(A1 + C^k) = 2 + ceil(2 sqrt(k - 2))` for `k >= 3`.
pub fn mu_a1_plus_center(k: u32) -> Result<u64> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!(
            "mu(A1+C^k) closed form needs k >= 3, got {k}"
        )));
    }
    let value = 2 + ceil_sqrt(4 * (k as u64 - 2));
    let a1 = SimpleType::new(Family::A, 1)?;
    debug_assert_eq!(value, mu(&ReductiveAlgebra::new(vec![a1], k)));
    Ok(value)
}

/// Maximal dimension of a commutative subalgebra of `gl_m`.
pub fn alpha_gl(m: u64) -> u64 {
    if m == 0 {
        0
    } else {
        m * m / 4 + 1
    }
}

/// Maximal abelian subalgebra dimensions for simple types.
///
/// Type `A_n` is always available (`floor((n+1)^2/4)`). Other types come
/// from the table; the default table holds only `B2 = 3`, `C3 = 6`,
/// `B5 = 11`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTable {
    entries: BTreeMap<SimpleType, u64>,
}

impl Default for AlphaTable {
    fn default() -> AlphaTable {
        let mut entries = BTreeMap::new();
        for (f, r, a) in [(Family::B, 2, 3), (Family::C, 3, 6), (Family::B, 5, 11)] {
            entries.insert(SimpleType::new(f, r).expect("valid type"), a);
        }
        AlphaTable { entries }
    }
}

impl AlphaTable {
    pub fn empty() -> AlphaTable {
        AlphaTable {
            entries: BTreeMap::new(),
        }
    }

    /// Add or replace an entry. Entries for type `A` must agree with the
    /// closed form.
    pub fn insert(&mut self, t: SimpleType, alpha: u64) -> Result<()> {
        if t.family() == Family::A && alpha != alpha_type_a(t.rank()) {
            return Err(Error::InvalidArgument(format!(
                "alpha({t}) is {}, not {alpha}",
                alpha_type_a(t.rank())
            )));
        }
        self.entries.insert(t, alpha);
        Ok(())
    }

    pub fn simple(&self, t: SimpleType) -> Option<u64> {
        if t.family() == Family::A {
            return Some(alpha_type_a(t.rank()));
        }
        self.entries.get(&t).copied()
    }

    /// Additive over ideals; `alpha(C^k) = k`. `None` when any ideal is
    /// missing from the table.
    pub fn alpha(&self, g: &ReductiveAlgebra) -> Option<u64> {
        g.simples()
            .iter()
            .map(|t| self.simple(*t))
            .sum::<Option<u64>>()
            .map(|s| s + g.center_dim() as u64)
    }

    pub fn entries(&self) -> impl Iterator<Item = (SimpleType, u64)> + '_ {
        self.entries.iter().map(|(t, a)| (*t, *a))
    }
}

fn alpha_type_a(n: u32) -> u64 {
    let m = n as u64 + 1;
    m * m / 4
}

/// `alpha` against the default table.
pub fn alpha(g: &ReductiveAlgebra) -> Option<u64> {
    AlphaTable::default().alpha(g)
}

/// Commutative-subalgebra certificate: `false` proves `g` has no faithful
/// representation of degree `n`.
///
/// With `m = n - mu(semisimple part)`, a faithful embedding forces
/// `C^k` into `gl_m + C^l`, so `k <= alpha(gl_m) + l`.
pub fn alpha_embedding_bound(g: &ReductiveAlgebra, n: u64) -> bool {
    let s = mu_semisimple(g);
    if n < s {
        return false;
    }
    g.center_dim() as u64 <= alpha_gl(n - s) + g.length() as u64
}

/// Number of partitions of `j`, via Euler's pentagonal recurrence.
pub fn partition_count(j: usize) -> BigUint {
    partition_table(j).pop().expect("table has j + 1 entries")
}

/// `p(0), ..., p(j)`.
pub fn partition_table(j: usize) -> Vec<BigUint> {
    let mut p: Vec<BigUint> = Vec::with_capacity(j + 1);
    p.push(BigUint::one());
    for n in 1..=j {
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        for i in 1.. {
            let g1 = i * (3 * i - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = i * (3 * i + 1) / 2;
            let mut term = p[n - g1].clone();
            if g2 <= n {
                term += &p[n - g2];
            }
            if i % 2 == 1 {
                plus += term;
            } else {
                minus += term;
            }
        }
        p.push(plus - minus);
    }
    p
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `p(n, k) = sum_{j=0}^{k} binom(n - j, k - j) p(j)`, an upper bound on
/// `mu` for nilpotent algebras of dimension `n` and class `k`.
pub fn p_bound(n: usize, k: usize) -> Result<BigUint> {
    if n < 1 || k > n {
        return Err(Error::InvalidArgument(format!(
            "p(n, k) needs 0 <= k <= n and n >= 1, got n = {n}, k = {k}"
        )));
    }
    let parts = partition_table(k);
    Ok((0..=k)
        .map(|j| binomial(n - j, k - j) * &parts[j])
        .sum())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsymptoticRow {
    pub n: usize,
    pub argmax_k: usize,
    pub max_p: BigUint,
    /// `max_k p(n, k) < (113/40) 2^n / sqrt(n)`.
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsymptoticReport {
    pub rows: Vec<AsymptoticRow>,
    pub violations: Vec<usize>,
}

/// Compare `max_k p(n, k)` with `(113/40) 2^n / sqrt(n)` for `1 <= n <= n_max`.
///
/// The comparison is squared into integers: `(40 p)^2 n < (113 2^n)^2`.
pub fn asymptotic_check(n_max: usize) -> AsymptoticReport {
    let parts = partition_table(n_max);
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let (argmax_k, max_p) = (0..=n)
            .map(|k| {
                let v: BigUint = (0..=k)
                    .map(|j| binomial(n - j, k - j) * &parts[j])
                    .sum();
                (k, v)
            })
            .fold((0, BigUint::zero()), |best, cur| {
                if cur.1 > best.1 {
                    cur
                } else {
                    best
                }
            });
        let lhs = {
            let t = BigUint::from(40u32) * &max_p;
            &t * &t * BigUint::from(n)
        };
        let rhs = {
            let t = BigUint::from(113u32) << n;
            &t * &t
        };
        rows.push(AsymptoticRow {
            n,
            argmax_k,
            max_p,
            holds: lhs < rhs,
        });
    }
    let violations = rows.iter().filter(|r| !r.holds).map(|r| r.n).collect();
    AsymptoticReport { rows, violations }
}
