//! Shape-level model of representations of semisimple algebras.
//!
//! An irreducible representation of `s_1 + ... + s_l` is a tensor product
//! of irreducibles of the ideals, so a completely reducible representation
//! with `n` summands is described by the `n x l` matrix of factor degrees.
//! Its degree is `f = sum_i prod_j d_ij`, and it is faithful iff no column
//! consists only of ones.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `n x l` matrix of positive factor degrees, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u64>>", into = "Vec<Vec<u64>>")]
pub struct DimensionMatrix {
    rows: Vec<Vec<u64>>,
}

impl TryFrom<Vec<Vec<u64>>> for DimensionMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u64>>) -> Result<Self> {
        DimensionMatrix::new(rows)
    }
}

impl From<DimensionMatrix> for Vec<Vec<u64>> {
    fn from(m: DimensionMatrix) -> Self {
        m.rows
    }
}

impl DimensionMatrix {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<DimensionMatrix> {
        let width = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || width == 0 {
            return Err(Error::InvalidArgument(
                "dimension matrix needs at least one row and one column".into(),
            ));
        }
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::InvalidArgument("dimension matrix rows differ in length".into()));
        }
        if rows.iter().flatten().any(|&d| d == 0) {
            return Err(Error::InvalidArgument("dimension matrix entries must be >= 1".into()));
        }
        Ok(DimensionMatrix { rows })
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.rows[0].len()
    }

    /// Check every entry `> 1` is the degree of an irreducible of its column's
    /// ideal.
    pub fn check_realizable(&self, dim_sets: &[BTreeSet<u64>]) -> Result<()> {
        if dim_sets.len() != self.col_count() {
            return Err(Error::DimensionMismatch {
                expected: self.col_count(),
                found: dim_sets.len(),
            });
        }
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &d) in row.iter().enumerate() {
                if d > 1 && !dim_sets[j].contains(&d) {
                    return Err(Error::InvalidArgument(format!(
                        "entry ({i}, {j}) = {d} is not an irreducible degree of column {j}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Degree of the representation: `sum_i prod_j d_ij`.
pub fn f_value(m: &DimensionMatrix) -> u64 {
    m.rows.iter().map(|r| r.iter().product::<u64>()).sum()
}

pub fn is_faithful_dm(m: &DimensionMatrix) -> bool {
    (0..m.col_count()).all(|j| m.rows.iter().any(|r| r[j] > 1))
}

/// Replace row `row` by two copies, one with column `k` set to 1 and one with
/// column `j` set to 1. Since `a + b <= ab` for `a, b >= 2` the degree does not
/// grow, and every column keeps an entry `> 1`.
pub fn row_split(m: &DimensionMatrix, row: usize, j: usize, k: usize) -> Result<DimensionMatrix> {
    let r = m
        .rows
        .get(row)
        .ok_or_else(|| Error::InvalidArgument(format!("row {row} out of range")))?;
    if j == k || j >= r.len() || k >= r.len() {
        return Err(Error::InvalidArgument(format!("bad column pair ({j}, {k})")));
    }
    if r[j] <= 1 || r[k] <= 1 {
        return Err(Error::InvalidArgument(format!(
            "row {row} entries at columns {j} and {k} must both exceed 1"
        )));
    }
    let mut first = r.clone();
    first[k] = 1;
    let mut second = r.clone();
    second[j] = 1;
    let mut rows = m.rows.clone();
    rows[row] = first;
    rows.insert(row + 1, second);
    Ok(DimensionMatrix { rows })
}

/// Split rows until each has at most one entry `> 1`, then drop all-ones
/// rows. Always splits the leftmost pair of the topmost eligible row.
pub fn normalize(m: &DimensionMatrix) -> Result<DimensionMatrix> {
    if !is_faithful_dm(m) {
        return Err(Error::InvalidArgument("normalize needs a faithful matrix".into()));
    }
    let mut cur = m.clone();
    loop {
        let target = cur.rows.iter().enumerate().find_map(|(i, r)| {
            let mut big = r.iter().enumerate().filter(|(_, &d)| d > 1).map(|(j, _)| j);
            match (big.next(), big.next()) {
                (Some(j), Some(k)) => Some((i, j, k)),
                _ => None,
            }
        });
        match target {
            Some((i, j, k)) => cur = row_split(&cur, i, j, k)?,
            None => break,
        }
    }
    cur.rows.retain(|r| r.iter().any(|&d| d > 1));
    Ok(cur)
}

/// Rows forming a faithful submatrix: for each column the first row with an
/// entry `> 1`, in column order, without repeats. At most `l` rows.
pub fn select_faithful_subset(m: &DimensionMatrix) -> Result<Vec<usize>> {
    let mut picked = Vec::new();
    for j in 0..m.col_count() {
        let i = m
            .rows
            .iter()
            .position(|r| r[j] > 1)
            .ok_or_else(|| Error::InvalidArgument(format!("column {j} is all ones")))?;
        if !picked.contains(&i) {
            picked.push(i);
        }
    }
    Ok(picked)
}

/// Result of the exhaustive minimizer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinFaithful {
    pub value: u64,
    pub witness: DimensionMatrix,
    /// Number of search nodes visited.
    pub nodes: u64,
}

/// Exhaustive minimum of `f` over faithful matrices with at most
/// `row_bound` rows whose column-`j` entries lie in `{1} + dim_sets[j]`,
/// restricted to `f <= value_bound`.
///
/// Rows are chosen as a multiset (nondecreasing index into the list of
/// admissible rows, sorted by product) and a branch is cut once its
/// partial sum reaches the best value found.
pub fn min_faithful_value(
    dim_sets: &[BTreeSet<u64>],
    row_bound: usize,
    value_bound: u64,
) -> Result<MinFaithful> {
    if dim_sets.is_empty() || dim_sets.iter().any(|s| s.is_empty()) {
        return Err(Error::InvalidArgument("every column needs a nonempty degree set".into()));
    }
    if dim_sets.iter().flatten().any(|&d| d < 2) {
        return Err(Error::InvalidArgument("degree sets hold nontrivial degrees >= 2".into()));
    }
    let cols = dim_sets.len();
    let full: u64 = (1u64 << cols) - 1;

    let mut candidates: Vec<(u64, u64, Vec<u64>)> = vec![(1, 0, vec![1; cols])];
    for (j, set) in dim_sets.iter().enumerate() {
        let mut next = Vec::new();
        for (prod, mask, row) in &candidates {
            for &d in set.iter().filter(|&&d| d <= value_bound) {
                let p = prod * d;
                if p > value_bound {
                    break;
                }
                let mut r = row.clone();
                r[j] = d;
                next.push((p, mask | (1 << j), r));
            }
        }
        candidates.extend(next);
    }
    candidates.sort();

    struct Search<'a> {
        rows: &'a [(u64, u64, Vec<u64>)],
        full: u64,
        row_bound: usize,
        best: u64,
        best_rows: Option<Vec<usize>>,
        chosen: Vec<usize>,
        nodes: u64,
    }

    impl Search<'_> {
        fn go(&mut self, start: usize, f: u64, mask: u64) {
            self.nodes += 1;
            if mask == self.full {
                if f < self.best {
                    self.best = f;
                    self.best_rows = Some(self.chosen.clone());
                }
                return;
            }
            if self.chosen.len() == self.row_bound {
                return;
            }
            for idx in start..self.rows.len() {
                let (p, m, _) = &self.rows[idx];
                let nf = f + p;
                if nf >= self.best {
                    break;
                }
                self.chosen.push(idx);
                self.go(idx, nf, mask | m);
                self.chosen.pop();
            }
        }
    }

    let mut s = Search {
        rows: &candidates,
        full,
        row_bound,
        best: value_bound.saturating_add(1),
        best_rows: None,
        chosen: Vec::new(),
        nodes: 0,
    };
    s.go(0, 0, 0);
    let rows = s.best_rows.ok_or(Error::UnboundedSearch)?;
    let witness = DimensionMatrix::new(rows.iter().map(|&i| candidates[i].2.clone()).collect())?;
    Ok(MinFaithful {
        value: s.best,
        witness,
        nodes: s.nodes,
    })
}

/// One isotypic component `m * phi` of a completely reducible representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub label: String,
    pub multiplicity: u64,
    pub degree: u64,
    pub trivial: bool,
}

impl Summand {
    pub fn trivial(multiplicity: u64) -> Summand {
        Summand {
            label: "phi0".into(),
            multiplicity,
            degree: 1,
            trivial: true,
        }
    }

    pub fn irreducible(label: impl Into<String>, multiplicity: u64, degree: u64) -> Summand {
        Summand {
            label: label.into(),
            multiplicity,
            degree,
            trivial: false,
        }
    }
}

/// `phi = m_0 phi_0 + m_1 phi_1 + ... + m_k phi_k` with pairwise inequivalent
/// `phi_j`; the trivial summand, when present, comes first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDecomposition {
    summands: Vec<Summand>,
}

impl RepDecomposition {
    pub fn new(mut summands: Vec<Summand>) -> Result<RepDecomposition> {
        if summands.iter().any(|s| s.multiplicity == 0 || s.degree == 0) {
            return Err(Error::InvalidArgument("multiplicities and degrees must be >= 1".into()));
        }
        if summands.iter().filter(|s| s.trivial).count() > 1 {
            return Err(Error::InvalidArgument("at most one trivial summand".into()));
        }
        if summands.iter().any(|s| s.trivial && s.degree != 1) {
            return Err(Error::InvalidArgument("the trivial summand has degree 1".into()));
        }
        let labels: BTreeSet<&str> = summands.iter().map(|s| s.label.as_str()).collect();
        if labels.len() != summands.len() {
            return Err(Error::InvalidArgument("summand labels must be distinct".into()));
        }
        summands.sort_by_key(|s| !s.trivial);
        Ok(RepDecomposition { summands })
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn trivial_multiplicity(&self) -> u64 {
        self.summands
            .iter()
            .find(|s| s.trivial)
            .map_or(0, |s| s.multiplicity)
    }

    pub fn total_degree(&self) -> u64 {
        self.summands.iter().map(|s| s.multiplicity * s.degree).sum()
    }
}

/// `gl_{m_1} + ... + gl_{m_r} + C^e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerShape {
    /// Sizes `>= 2`, descending.
    pub gl_blocks: Vec<u64>,
    pub abelian_extra: u64,
}

impl CentralizerShape {
    pub fn dimension(&self) -> u64 {
        self.gl_blocks.iter().map(|m| m * m).sum::<u64>() + self.abelian_extra
    }
}

/// Centralizer of `sum m_j phi_j` is `sum gl_{m_j}`; `gl_1` blocks are
/// reported as abelian dimensions.
pub fn centralizer_shape(d: &RepDecomposition) -> CentralizerShape {
    let mut gl_blocks: Vec<u64> = d
        .summands
        .iter()
        .map(|s| s.multiplicity)
        .filter(|&m| m >= 2)
        .collect();
    gl_blocks.sort_unstable_by(|a, b| b.cmp(a));
    let abelian_extra = d.summands.iter().filter(|s| s.multiplicity == 1).count() as u64;
    CentralizerShape {
        gl_blocks,
        abelian_extra,
    }
}

/// `m phi_0 + phi_1 + ... + phi_k` with `m = m_0 + sum_j (m_j - 1) d_j`.
pub fn tilde_transform(d: &RepDecomposition) -> RepDecomposition {
    let m = tilde_counts(d).1;
    let mut summands: Vec<Summand> = Vec::with_capacity(d.summands.len() + 1);
    if m > 0 {
        let label = d
            .summands
            .iter()
            .find(|s| s.trivial)
            .map_or_else(|| "phi0".to_string(), |s| s.label.clone());
        summands.push(Summand {
            label,
            multiplicity: m,
            degree: 1,
            trivial: true,
        });
    }
    summands.extend(d.summands.iter().filter(|s| !s.trivial).map(|s| Summand {
        multiplicity: 1,
        ..s.clone()
    }));
    RepDecomposition { summands }
}

/// `(p, m)` where `p = m_0 + sum_{m_j >= 2} m_j` is the size needed to embed
/// the centralizer's `gl` blocks and `m` is the trivial multiplicity after
/// [`tilde_transform`].
pub fn tilde_counts(d: &RepDecomposition) -> (u64, u64) {
    let m0 = d.trivial_multiplicity();
    let nontrivial = d.summands.iter().filter(|s| !s.trivial);
    let p = m0
        + nontrivial
            .clone()
            .filter(|s| s.multiplicity >= 2)
            .map(|s| s.multiplicity)
            .sum::<u64>();
    let m = m0
        + nontrivial
            .map(|s| (s.multiplicity - 1) * s.degree)
            .sum::<u64>();
    (p, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dm(rows: &[&[u64]]) -> DimensionMatrix {
        DimensionMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn set(xs: &[u64]) -> BTreeSet<u64> {
        xs.iter().copied().collect()
    }

    #[test]
    fn validation() {
        assert!(DimensionMatrix::new(vec![]).is_err());
        assert!(DimensionMatrix::new(vec![vec![]]).is_err());
        assert!(DimensionMatrix::new(vec![vec![1, 0]]).is_err());
        assert!(DimensionMatrix::new(vec![vec![1, 2], vec![1]]).is_err());
        let m: DimensionMatrix = serde_json::from_str("[[2,1],[1,2]]").unwrap();
        assert_eq!(serde_json::to_string(&m).unwrap(), "[[2,1],[1,2]]");
        assert!(serde_json::from_str::<DimensionMatrix>("[[0]]").is_err());
    }

    #[test]
    fn f_values() {
        assert_eq!(f_value(&dm(&[&[2, 1], &[1, 2]])), 4);
        assert_eq!(f_value(&dm(&[&[1]])), 1);
        assert_eq!(f_value(&dm(&[&[2, 3]])), 6);
    }

    #[test]
    fn faithfulness() {
        assert!(is_faithful_dm(&dm(&[&[2, 1], &[1, 2]])));
        assert!(!is_faithful_dm(&dm(&[&[1], &[1]])));
        assert!(!is_faithful_dm(&dm(&[&[2, 1], &[3, 1]])));
    }

    #[test]
    fn splits() {
        let s = row_split(&dm(&[&[2, 2]]), 0, 0, 1).unwrap();
        assert_eq!(s, dm(&[&[2, 1], &[1, 2]]));
        assert_eq!(f_value(&s), 4);
        let s = row_split(&dm(&[&[2, 3]]), 0, 0, 1).unwrap();
        assert_eq!(s, dm(&[&[2, 1], &[1, 3]]));
        assert_eq!(f_value(&s), 5);
        let s = row_split(&dm(&[&[3, 3, 1]]), 0, 0, 1).unwrap();
        assert_eq!(s, dm(&[&[3, 1, 1], &[1, 3, 1]]));
        assert_eq!(f_value(&s), 6);
        assert!(row_split(&dm(&[&[3, 1]]), 0, 0, 1).is_err());
        assert!(row_split(&dm(&[&[3, 3]]), 0, 0, 0).is_err());
    }

    #[test]
    fn split_never_increases_f() {
        for a in 2..=9 {
            for b in 2..=9 {
                let m = dm(&[&[a, b]]);
                assert!(f_value(&row_split(&m, 0, 0, 1).unwrap()) <= f_value(&m));
            }
        }
    }

    #[test]
    fn normalizes() {
        assert_eq!(normalize(&dm(&[&[2, 2]])).unwrap(), dm(&[&[2, 1], &[1, 2]]));
        assert_eq!(normalize(&dm(&[&[2, 1], &[1, 2]])).unwrap(), dm(&[&[2, 1], &[1, 2]]));
        assert_eq!(normalize(&dm(&[&[2, 3], &[1, 1]])).unwrap(), dm(&[&[2, 1], &[1, 3]]));
        assert!(normalize(&dm(&[&[2, 1]])).is_err());
    }

    #[test]
    fn faithful_subsets() {
        assert_eq!(select_faithful_subset(&dm(&[&[2, 1], &[1, 2], &[3, 3]])).unwrap(), vec![0, 1]);
        assert_eq!(select_faithful_subset(&dm(&[&[3, 3]])).unwrap(), vec![0]);
        assert_eq!(select_faithful_subset(&dm(&[&[1, 2], &[2, 1]])).unwrap(), vec![1, 0]);
        assert!(select_faithful_subset(&dm(&[&[1, 2]])).is_err());
    }

    /// Independent check: enumerate every matrix with at most `rows` rows and
    /// entries in `{1} + sets`, no pruning.
    fn brute_min(sets: &[BTreeSet<u64>], rows: usize, cap: u64) -> Option<u64> {
        let choices: Vec<Vec<u64>> = sets
            .iter()
            .map(|s| std::iter::once(1).chain(s.iter().copied().filter(|&d| d <= cap)).collect())
            .collect();
        let mut all_rows: Vec<Vec<u64>> = vec![vec![]];
        for c in &choices {
            all_rows = all_rows
                .into_iter()
                .flat_map(|r| {
                    c.iter().map(move |&d| {
                        let mut r = r.clone();
                        r.push(d);
                        r
                    })
                })
                .collect();
        }
        let mut best = None;
        let mut stack: Vec<Vec<usize>> = (0..all_rows.len()).map(|i| vec![i]).collect();
        while let Some(pick) = stack.pop() {
            let m = DimensionMatrix::new(pick.iter().map(|&i| all_rows[i].clone()).collect()).unwrap();
            if is_faithful_dm(&m) {
                let f = f_value(&m);
                best = Some(best.map_or(f, |b: u64| b.min(f)));
            }
            if pick.len() < rows {
                for i in *pick.last().unwrap()..all_rows.len() {
                    let mut p = pick.clone();
                    p.push(i);
                    stack.push(p);
                }
            }
        }
        best
    }

    #[test]
    fn minimizer_examples() {
        let a1 = set(&[2, 3, 4]);
        assert_eq!(min_faithful_value(std::slice::from_ref(&a1), 2, 4).unwrap().value, 2);
        let two = min_faithful_value(&[a1.clone(), a1.clone()], 3, 4).unwrap();
        assert_eq!(two.value, 4);
        assert_eq!(brute_min(&[a1.clone(), a1.clone()], 3, 4), Some(4));
        let a2 = set(&[3, 6, 8, 10]);
        let b2 = set(&[4, 5, 10]);
        let r = min_faithful_value(&[a2.clone(), b2.clone()], 3, 10).unwrap();
        assert_eq!(r.value, 7);
        assert_eq!(brute_min(&[a2, b2], 3, 10), Some(7));
        assert!(matches!(
            min_faithful_value(&[a1.clone(), a1], 3, 3),
            Err(Error::UnboundedSearch)
        ));
    }

    #[test]
    fn minimizer_matches_brute_force() {
        let sets = [set(&[2, 3]), set(&[3, 6]), set(&[2, 5])];
        let r = min_faithful_value(&sets, 4, 12).unwrap();
        assert_eq!(Some(r.value), brute_min(&sets, 4, 12));
        assert!(is_faithful_dm(&r.witness));
        assert_eq!(f_value(&r.witness), r.value);
    }

    fn decomp(s: Vec<Summand>) -> RepDecomposition {
        RepDecomposition::new(s).unwrap()
    }

    #[test]
    fn decomposition_validation() {
        assert!(RepDecomposition::new(vec![Summand::irreducible("a", 0, 2)]).is_err());
        assert!(RepDecomposition::new(vec![Summand::trivial(1), Summand::trivial(2)]).is_err());
        assert!(RepDecomposition::new(vec![
            Summand::irreducible("a", 1, 2),
            Summand::irreducible("a", 1, 3)
        ])
        .is_err());
        let d = decomp(vec![Summand::irreducible("a", 2, 3), Summand::trivial(4)]);
        assert!(d.summands()[0].trivial);
        assert_eq!(d.total_degree(), 10);
    }

    #[test]
    fn centralizer_shapes() {
        let std_block = decomp(vec![
            Summand::trivial(3),
            Summand::irreducible("s1", 1, 2),
            Summand::irreducible("s2", 1, 3),
        ]);
        let c = centralizer_shape(&std_block);
        assert_eq!(c.gl_blocks, vec![3]);
        assert_eq!(c.abelian_extra, 2);
        assert_eq!(c.dimension(), 11);

        let single = centralizer_shape(&decomp(vec![Summand::irreducible("s", 1, 3)]));
        assert_eq!((single.gl_blocks.len(), single.abelian_extra), (0, 1));

        let two = centralizer_shape(&decomp(vec![Summand::irreducible("s", 2, 2)]));
        assert_eq!(two.gl_blocks, vec![2]);
        assert_eq!(two.dimension(), 4);
    }

    #[test]
    fn tilde() {
        let d = decomp(vec![Summand::irreducible("p1", 2, 2)]);
        let t = tilde_transform(&d);
        assert_eq!(t.trivial_multiplicity(), 2);
        assert_eq!(t.summands()[1].multiplicity, 1);
        assert_eq!(t.total_degree(), 4);

        let free = decomp(vec![Summand::trivial(1), Summand::irreducible("p1", 1, 3)]);
        assert_eq!(tilde_transform(&free), free);

        let d = decomp(vec![Summand::trivial(1), Summand::irreducible("p1", 3, 3)]);
        let t = tilde_transform(&d);
        assert_eq!(t.trivial_multiplicity(), 7);
        assert_eq!(t.total_degree(), 10);
        let (p, m) = tilde_counts(&d);
        assert!(p <= m);
    }
}
