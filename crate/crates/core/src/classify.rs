//! Reductive subalgebras of `gl_n` up to isomorphism, and alpha-pruning of
//! candidate embeddings against tables of maximal reductive subalgebras.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Family, ReductiveAlgebra, SimpleType};
use crate::error::{Error, Result};
use crate::invariants::{self, AlphaTable};

/// Every nonzero reductive algebra with `mu(g) <= n`, in canonical order.
pub fn enumerate_gln(n: u64) -> Vec<ReductiveAlgebra> {
    let types = simple_types_up_to(n);
    let mut multisets = Vec::new();
    let mut stack: Vec<(usize, Vec<SimpleType>, u64)> = vec![(0, Vec::new(), 0)];
    while let Some((start, simples, used)) = stack.pop() {
        for (i, t) in types.iter().enumerate().skip(start) {
            if used + t.mu() <= n {
                let mut next = simples.clone();
                next.push(*t);
                stack.push((i, next, used + t.mu()));
            }
        }
        multisets.push(simples);
    }
    let mut out: Vec<ReductiveAlgebra> = multisets
        .into_par_iter()
        .flat_map_iter(|simples| {
            let base = ReductiveAlgebra::new(simples, 0);
            (0u32..)
                .map(move |k| base.with_center(k))
                .take_while(|g| invariants::mu(g) <= n)
                .filter(|g| !g.is_zero())
        })
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

/// Simple types whose minimal degree is at most `n`.
fn simple_types_up_to(n: u64) -> Vec<SimpleType> {
    let mut out = Vec::new();
    let mut push_while = |family: Family, first: u32, limit: Option<u32>| {
        let mut r = first;
        while limit.is_none_or(|l| r <= l) {
            match SimpleType::new(family, r) {
                Ok(t) if t.mu() <= n => {
                    if t.family() == family {
                        out.push(t);
                    }
                }
                _ => break,
            }
            r += 1;
        }
    };
    push_while(Family::A, 1, None);
    push_while(Family::B, 2, None);
    push_while(Family::C, 3, None);
    push_while(Family::D, 4, None);
    push_while(Family::E, 6, Some(8));
    push_while(Family::F, 4, Some(4));
    push_while(Family::G, 2, Some(2));
    out.sort();
    out
}

/// Images of `g` in `gl_n / center`: `g` itself, or `g` with one center
/// dimension absorbed by the scalars.
pub fn mod_center_candidates(g: &ReductiveAlgebra) -> Vec<ReductiveAlgebra> {
    let mut out = vec![g.clone()];
    if g.center_dim() >= 1 {
        out.push(g.with_center(g.center_dim() - 1));
    }
    out
}

/// Maximal reductive subalgebras of one host algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostTable {
    pub host: ReductiveAlgebra,
    pub maximals: Vec<ReductiveAlgebra>,
    /// Extra alpha values for simple types, merged into the alpha table.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub alpha: BTreeMap<SimpleType, u64>,
}

impl HostTable {
    pub fn new(host: ReductiveAlgebra, maximals: Vec<ReductiveAlgebra>) -> HostTable {
        HostTable {
            host,
            maximals,
            alpha: BTreeMap::new(),
        }
    }

    /// Every maximal with a known alpha must not exceed the host's alpha.
    pub fn validate(&self, alpha: &AlphaTable) -> Result<()> {
        if let Some(host_alpha) = alpha.alpha(&self.host) {
            for m in &self.maximals {
                if let Some(a) = alpha.alpha(m) {
                    if a > host_alpha {
                        return Err(Error::InvalidArgument(format!(
                            "maximal {m} of {} has alpha {a} > {host_alpha}",
                            self.host
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `sl_n` (`A_{n-1}`), the host for `gl_n` modulo its center; the zero
/// algebra for `n = 1`.
pub fn host_for_degree(n: u64) -> Result<ReductiveAlgebra> {
    match n {
        0 => Err(Error::InvalidArgument("degree must be >= 1".into())),
        1 => Ok(ReductiveAlgebra::zero()),
        _ => Ok(ReductiveAlgebra::simple(SimpleType::new(Family::A, (n - 1) as u32)?)),
    }
}

/// Host tables by host, plus the alpha table they extend.
#[derive(Clone, Debug)]
pub struct TableSet {
    tables: BTreeMap<String, HostTable>,
    alpha: AlphaTable,
}

fn parse_list(items: &[&str]) -> Vec<ReductiveAlgebra> {
    items
        .iter()
        .map(|s| s.parse().expect("embedded table entry"))
        .collect()
}

impl Default for TableSet {
    /// The two shipped tables: maximal reductive subalgebras of `A3` and
    /// of `A10`.
    fn default() -> TableSet {
        let mut set = TableSet::empty();
        let a3 = HostTable::new(
            "A3".parse().expect("A3"),
            parse_list(&["C2", "A2+C^1", "A1+A1", "A1+A1+C^1"]),
        );
        let a10 = HostTable::new(
            "A10".parse().expect("A10"),
            parse_list(&[
                "A9+C^1",
                "A1+A8+C^1",
                "A2+A7+C^1",
                "A3+A6+C^1",
                "A4+A5+C^1",
                "B5",
            ]),
        );
        set.insert(a3).expect("embedded table is valid");
        set.insert(a10).expect("embedded table is valid");
        set
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TableFile {
    One(HostTable),
    Many(Vec<HostTable>),
}

impl TableSet {
    pub fn empty() -> TableSet {
        TableSet {
            tables: BTreeMap::new(),
            alpha: AlphaTable::default(),
        }
    }

    pub fn alpha_table(&self) -> &AlphaTable {
        &self.alpha
    }

    /// Add a table (replacing any table for the same host) and merge its
    /// alpha values.
    pub fn insert(&mut self, table: HostTable) -> Result<()> {
        for (t, a) in &table.alpha {
            self.alpha.insert(*t, *a)?;
        }
        table.validate(&self.alpha)?;
        self.tables.insert(table.host.to_string(), table);
        Ok(())
    }

    pub fn get(&self, host: &ReductiveAlgebra) -> Option<&HostTable> {
        self.tables.get(&host.to_string())
    }

    pub fn hosts(&self) -> impl Iterator<Item = &ReductiveAlgebra> {
        self.tables.values().map(|t| &t.host)
    }

    /// Load one JSON file holding a table object or a list of them.
    pub fn load_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)?;
        match serde_json::from_str::<TableFile>(&text)? {
            TableFile::One(t) => self.insert(t),
            TableFile::Many(ts) => ts.into_iter().try_for_each(|t| self.insert(t)),
        }
    }

    /// Load every `*.json` file in `dir`, in file-name order.
    pub fn load_dir(&mut self, dir: &Path) -> Result<()> {
        let mut files: Vec<_> = std::fs::read_dir(dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        files.sort();
        files.iter().try_for_each(|p| self.load_file(p))
    }
}

/// Why a host was kept or dropped for a candidate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Reason {
    /// `alpha(candidate) > alpha(host)`.
    AlphaExceeds { candidate: u64, host: u64 },
    /// `dim(candidate) > dim(host)`.
    DimExceeds { candidate: u64, host: u64 },
    AlphaUnknown,
    /// Neither invariant rules the host out.
    Fits { candidate: u64, host: u64 },
    /// The candidate is the whole host algebra.
    EqualsHost,
}

impl Reason {
    pub fn excludes(&self) -> bool {
        matches!(self, Reason::AlphaExceeds { .. } | Reason::DimExceeds { .. })
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::AlphaExceeds { candidate, host } => {
                write!(f, "alpha {candidate} > {host}")
            }
            Reason::DimExceeds { candidate, host } => write!(f, "dim {candidate} > {host}"),
            Reason::AlphaUnknown => f.write_str("alpha-unknown"),
            Reason::Fits { candidate, host } => write!(f, "alpha {candidate} <= {host}"),
            Reason::EqualsHost => f.write_str("equals-host"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub candidate: ReductiveAlgebra,
    pub host: ReductiveAlgebra,
    pub reason: Reason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PruneOutcome {
    pub survivors: Vec<ReductiveAlgebra>,
    pub trace: Vec<TraceEntry>,
}

/// Drop every host whose alpha is below the candidate's (a subalgebra
/// cannot have larger alpha) or whose dimension is smaller.
pub fn alpha_prune(
    candidate: &ReductiveAlgebra,
    hosts: &[ReductiveAlgebra],
    alpha: &AlphaTable,
) -> Result<PruneOutcome> {
    let ca = alpha
        .alpha(candidate)
        .ok_or_else(|| Error::AlphaUnavailable(candidate.to_string()))?;
    let cd = invariants::dim_of(candidate);
    let mut survivors = Vec::new();
    let mut trace = Vec::with_capacity(hosts.len());
    for h in hosts {
        let hd = invariants::dim_of(h);
        let reason = match alpha.alpha(h) {
            Some(ha) if ha < ca => Reason::AlphaExceeds {
                candidate: ca,
                host: ha,
            },
            _ if hd < cd => Reason::DimExceeds {
                candidate: cd,
                host: hd,
            },
            Some(ha) => Reason::Fits {
                candidate: ca,
                host: ha,
            },
            None => Reason::AlphaUnknown,
        };
        if !reason.excludes() {
            survivors.push(h.clone());
        }
        trace.push(TraceEntry {
            candidate: candidate.clone(),
            host: h.clone(),
            reason,
        });
    }
    Ok(PruneOutcome { survivors, trace })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    ProvenImpossible,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PruneVerdict {
    pub outcome: Outcome,
    pub algebra: ReductiveAlgebra,
    pub degree: u64,
    pub host: ReductiveAlgebra,
    pub trace: Vec<TraceEntry>,
    /// Hosts excluded for every candidate.
    pub excluded: Vec<ReductiveAlgebra>,
    /// `alpha_embedding_bound(g, n)`; `false` proves non-embeddability on its own.
    pub alpha_bound_allows: bool,
    /// Every (candidate, host) branch closed by an alpha or dim violation.
    pub all_branches_closed: bool,
}

/// One level of the maximal-subalgebra argument for `g` in `gl_n`.
///
/// Each image of `g` modulo scalars must sit inside the host `A_{n-1}` or in
/// one of its maximal reductive subalgebras. The verdict is
/// `ProvenImpossible` only when every branch is closed and the closed-form
/// alpha bound agrees: the host tables list subalgebras reductive in the
/// host, so a nilpotent (non-toral) center, as in the Schur construction,
/// escapes the tables.
pub fn embeddability_check(g: &ReductiveAlgebra, n: u64, tables: &TableSet) -> Result<PruneVerdict> {
    let host = host_for_degree(n)?;
    let table = tables
        .get(&host)
        .ok_or_else(|| Error::MissingTable(host.to_string()))?;
    let alpha = tables.alpha_table();
    let candidates = mod_center_candidates(g);
    let mut trace = Vec::new();
    let mut closed = true;
    let mut excluded_for_all: Option<Vec<ReductiveAlgebra>> = None;
    for c in &candidates {
        if *c == host {
            closed = false;
            trace.push(TraceEntry {
                candidate: c.clone(),
                host: host.clone(),
                reason: Reason::EqualsHost,
            });
            excluded_for_all = Some(Vec::new());
            continue;
        }
        let out = alpha_prune(c, &table.maximals, alpha)?;
        if !out.survivors.is_empty() {
            closed = false;
        }
        let excluded: Vec<ReductiveAlgebra> = out
            .trace
            .iter()
            .filter(|t| t.reason.excludes())
            .map(|t| t.host.clone())
            .collect();
        excluded_for_all = Some(match excluded_for_all {
            None => excluded,
            Some(prev) => prev.into_iter().filter(|h| excluded.contains(h)).collect(),
        });
        trace.extend(out.trace);
    }
    let alpha_bound_allows = invariants::alpha_embedding_bound(g, n);
    let outcome = if closed && !alpha_bound_allows {
        Outcome::ProvenImpossible
    } else {
        Outcome::Inconclusive
    };
    Ok(PruneVerdict {
        outcome,
        algebra: g.clone(),
        degree: n,
        host,
        trace,
        excluded: excluded_for_all.unwrap_or_default(),
        alpha_bound_allows,
        all_branches_closed: closed,
    })
}
