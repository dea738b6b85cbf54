//! Simple types and reductive algebras, plus the textual expression form
//! (`A1+C3+C^6`).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError};

/// Cartan family letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Classical families admit an explicit natural matrix model.
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// A simple complex Lie algebra, identified by family and rank.
///
/// `C2` is accepted by [`SimpleType::new`] and stored as `B2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    rank: u32,
}

impl SimpleType {
    pub fn new(family: Family, rank: u32) -> Result<SimpleType, Error> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidType(format!(
                "{}{} is not a simple type ({})",
                family.letter(),
                rank,
                rank_rule(family)
            )));
        }
        let family = if family == Family::C && rank == 2 {
            Family::B
        } else {
            family
        };
        Ok(SimpleType { family, rank })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> u32 {
        self.rank
    }

    pub fn is_classical(self) -> bool {
        self.family.is_classical()
    }

    /// Dimension of the algebra.
    pub fn dim(self) -> u64 {
        let n = self.rank as u64;
        match self.family {
            Family::A => (n + 1) * (n + 1) - 1,
            Family::B | Family::C => 2 * n * n + n,
            Family::D => 2 * n * n - n,
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// Degree of the smallest nontrivial irreducible module.
    pub fn mu(self) -> u64 {
        let n = self.rank as u64;
        match self.family {
            Family::A => n + 1,
            Family::B if n == 2 => 4,
            Family::B => 2 * n + 1,
            Family::C | Family::D => 2 * n,
            Family::E => match n {
                6 => 27,
                7 => 56,
                _ => 248,
            },
            Family::F => 26,
            Family::G => 7,
        }
    }
}

fn rank_rule(family: Family) -> &'static str {
    match family {
        Family::A => "rank >= 1 required",
        Family::B | Family::C => "rank >= 2 required",
        Family::D => "rank >= 4 required",
        Family::E => "rank must be 6, 7 or 8",
        Family::F => "rank must be 4",
        Family::G => "rank must be 2",
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let g: ReductiveAlgebra = s.parse()?;
        match (g.simples(), g.center_dim()) {
            ([t], 0) => Ok(*t),
            _ => Err(Error::InvalidType(format!("`{s}` is not a single simple type"))),
        }
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A complex reductive Lie algebra `s_1 + ... + s_l + C^k`.
///
/// Simple ideals are kept sorted so structurally equal algebras compare
/// equal. The zero algebra (no ideals, `k = 0`) is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ReductiveAlgebra {
    simples: Vec<SimpleType>,
    center_dim: u32,
}

impl ReductiveAlgebra {
    pub fn new(mut simples: Vec<SimpleType>, center_dim: u32) -> ReductiveAlgebra {
        simples.sort();
        ReductiveAlgebra {
            simples,
            center_dim,
        }
    }

    pub fn zero() -> ReductiveAlgebra {
        ReductiveAlgebra::default()
    }

    pub fn abelian(k: u32) -> ReductiveAlgebra {
        ReductiveAlgebra::new(Vec::new(), k)
    }

    pub fn simple(t: SimpleType) -> ReductiveAlgebra {
        ReductiveAlgebra::new(vec![t], 0)
    }

    pub fn simples(&self) -> &[SimpleType] {
        &self.simples
    }

    pub fn center_dim(&self) -> u32 {
        self.center_dim
    }

    /// Number of simple ideals.
    pub fn length(&self) -> usize {
        self.simples.len()
    }

    pub fn is_zero(&self) -> bool {
        self.simples.is_empty() && self.center_dim == 0
    }

    pub fn is_semisimple(&self) -> bool {
        self.center_dim == 0
    }

    pub fn all_classical(&self) -> bool {
        self.simples.iter().all(|t| t.is_classical())
    }

    pub fn semisimple_part(&self) -> ReductiveAlgebra {
        ReductiveAlgebra::new(self.simples.clone(), 0)
    }

    pub fn with_center(&self, k: u32) -> ReductiveAlgebra {
        ReductiveAlgebra::new(self.simples.clone(), k)
    }

    /// Direct sum: simple multisets merge, centers add.
    pub fn oplus(&self, other: &ReductiveAlgebra) -> ReductiveAlgebra {
        let mut simples = self.simples.clone();
        simples.extend_from_slice(&other.simples);
        ReductiveAlgebra::new(simples, self.center_dim + other.center_dim)
    }

    /// Algebras obtained by removing one simple ideal or one center dimension.
    pub fn one_step_subalgebras(&self) -> Vec<ReductiveAlgebra> {
        let mut out = Vec::new();
        for i in 0..self.simples.len() {
            if i > 0 && self.simples[i] == self.simples[i - 1] {
                continue;
            }
            let mut rest = self.simples.clone();
            rest.remove(i);
            out.push(ReductiveAlgebra::new(rest, self.center_dim));
        }
        if self.center_dim > 0 {
            out.push(self.with_center(self.center_dim - 1));
        }
        out
    }

    /// Sort key used for enumeration output: total dimension, length,
    /// type list, center.
    pub fn canonical_cmp(&self, other: &ReductiveAlgebra) -> Ordering {
        crate::invariants::dim_of(self)
            .cmp(&crate::invariants::dim_of(other))
            .then(self.simples.len().cmp(&other.simples.len()))
            .then_with(|| self.simples.cmp(&other.simples))
            .then(self.center_dim.cmp(&other.center_dim))
    }
}

impl fmt::Display for ReductiveAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for t in &self.simples {
            if !first {
                f.write_str("+")?;
            }
            write!(f, "{t}")?;
            first = false;
        }
        if self.center_dim > 0 {
            if !first {
                f.write_str("+")?;
            }
            write!(f, "C^{}", self.center_dim)?;
        }
        Ok(())
    }
}

impl FromStr for ReductiveAlgebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_expr(s).map_err(Error::Parse)
    }
}

impl Serialize for ReductiveAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ReductiveAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parse an algebra expression.
///
/// ```text
/// EXPR   := TERM ("+" TERM)*
/// TERM   := SIMPLE | CENTER | "0"
/// SIMPLE := [A-G] digits        e.g. A1, C3, E8
/// CENTER := "C^" digits         k >= 1
/// ```
///
/// Whitespace is ignored and repeated terms accumulate. `C2` is the simple
/// algebra (stored as `B2`); a center always needs the caret. A lone `0`
/// term denotes the zero algebra.
pub fn parse_expr(text: &str) -> Result<ReductiveAlgebra, ParseError> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    if chars.is_empty() {
        return Err(ParseError::new(0, "empty expression"));
    }
    let end = text.len();
    let mut simples = Vec::new();
    let mut center: u32 = 0;
    let mut i = 0;
    loop {
        let pos = chars.get(i).map_or(end, |c| c.0);
        let Some(&(_, c)) = chars.get(i) else {
            return Err(ParseError::new(pos, "empty term"));
        };
        if c == '+' {
            return Err(ParseError::new(pos, "empty term"));
        }
        if c == '0' {
            i += 1;
        } else {
            let Some(family) = Family::from_letter(c) else {
                return Err(ParseError::new(
                    pos,
                    format!("unexpected `{c}`, expected a family letter A-G or `C^`"),
                ));
            };
            i += 1;
            let is_center = family == Family::C && chars.get(i).map(|c| c.1) == Some('^');
            if is_center {
                i += 1;
            }
            let digits_pos = chars.get(i).map_or(end, |c| c.0);
            let (value, next) = read_number(&chars, i)
                .ok_or_else(|| ParseError::new(digits_pos, "expected digits"))?;
            i = next;
            if is_center {
                if value == 0 {
                    return Err(ParseError::new(digits_pos, "center dimension must be >= 1"));
                }
                center = center
                    .checked_add(value)
                    .ok_or_else(|| ParseError::new(digits_pos, "center dimension overflows"))?;
            } else {
                let t = SimpleType::new(family, value)
                    .map_err(|e| ParseError::new(pos, e.to_string()))?;
                simples.push(t);
            }
        }
        match chars.get(i) {
            None => break,
            Some(&(_, '+')) => i += 1,
            Some(&(p, c)) => {
                return Err(ParseError::new(p, format!("unexpected `{c}`, expected `+`")));
            }
        }
    }
    Ok(ReductiveAlgebra::new(simples, center))
}

fn read_number(chars: &[(usize, char)], start: usize) -> Option<(u32, usize)> {
    let mut i = start;
    let mut value: u32 = 0;
    while let Some(&(_, c)) = chars.get(i) {
        let Some(d) = c.to_digit(10) else { break };
        value = value.checked_mul(10)?.checked_add(d)?;
        i += 1;
    }
    (i > start).then_some((value, i))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(f: Family, r: u32) -> SimpleType {
        SimpleType::new(f, r).unwrap()
    }

    #[test]
    fn parses_worked_example() {
        let g = parse_expr("A1+C3+C^6").unwrap();
        assert_eq!(g.simples(), &[st(Family::A, 1), st(Family::C, 3)]);
        assert_eq!(g.center_dim(), 6);
    }

    #[test]
    fn c2_is_b2_and_caret_is_center() {
        let g = parse_expr("C2").unwrap();
        assert_eq!(g.simples(), &[st(Family::B, 2)]);
        assert_eq!(g.center_dim(), 0);
        assert_eq!(g.to_string(), "B2");
        let c = parse_expr("C^2").unwrap();
        assert!(c.simples().is_empty());
        assert_eq!(c.center_dim(), 2);
    }

    #[test]
    fn whitespace_and_accumulation() {
        let g = parse_expr(" C^1 + A2 +A1+ C^2 ").unwrap();
        assert_eq!(g.to_string(), "A1+A2+C^3");
        assert_eq!(parse_expr("C^1").unwrap(), ReductiveAlgebra::abelian(1));
        assert_eq!(parse_expr("0").unwrap(), ReductiveAlgebra::zero());
    }

    #[test]
    fn rejects_bad_input() {
        let e = parse_expr("D3").unwrap_err();
        assert_eq!(e.position, 0);
        assert!(e.message.contains("rank >= 4"), "{e}");
        let e = parse_expr("A1+").unwrap_err();
        assert_eq!(e.position, 3);
        assert!(parse_expr("").is_err());
        assert!(parse_expr("A1++A2").is_err());
        assert_eq!(parse_expr("A1 x").unwrap_err().position, 3);
        assert!(parse_expr("C^0").is_err());
        assert!(parse_expr("E9").is_err());
        assert!(parse_expr("H2").is_err());
        assert!(parse_expr("A").is_err());
        assert!(parse_expr("B1").is_err());
    }

    #[test]
    fn canonical_sort() {
        let a = parse_expr("C3+A1").unwrap();
        let b = parse_expr("A1+C3").unwrap();
        assert_eq!(a, b);
    }
}
