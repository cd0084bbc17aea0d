//! Nilpotent orbits of the classical complex simple Lie algebras.
//!
//! Orbits are labelled by partitions of the natural representation's
//! dimension: `n+1` for `A_n`, `2n+1` for `B_n`, `2n` for `C_n` and `D_n`.
//! A very even `D_n` partition labels two orbits, tagged `I` and `II`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::realforms::{self, iota_apply, matches, RealForm, WeightedDynkinDiagram};
use crate::rootcore::{Family, LieType};
use crate::{q, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VeryEvenTag {
    I,
    II,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionLabel {
    pub parts: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<VeryEvenTag>,
}

impl PartitionLabel {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        PartitionLabel { parts, tag: None }
    }

    pub fn tagged(parts: Vec<usize>, tag: VeryEvenTag) -> Self {
        PartitionLabel {
            tag: Some(tag),
            ..PartitionLabel::new(parts)
        }
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn is_very_even(&self) -> bool {
        !self.parts.is_empty()
            && self
                .multiplicities()
                .iter()
                .all(|(&p, &m)| p % 2 == 0 && m % 2 == 0)
    }

    /// Exponent notation, e.g. `[3,2^2,1]` or `[4^2]^II`.
    pub fn notation(&self) -> String {
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match groups.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => groups.push((p, 1)),
            }
        }
        let body = groups
            .iter()
            .map(|&(v, m)| if m == 1 { v.to_string() } else { format!("{v}^{m}") })
            .collect::<Vec<_>>()
            .join(",");
        match self.tag {
            None => format!("[{body}]"),
            Some(VeryEvenTag::I) => format!("[{body}]^I"),
            Some(VeryEvenTag::II) => format!("[{body}]^II"),
        }
    }
}

impl fmt::Display for PartitionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}

impl FromStr for PartitionLabel {
    type Err = Error;

    /// Accepts `[3,2^2,1]`, `[4^2]^I`, and plain `3,2,2,1`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("bad partition {s:?}"));
        let s = s.trim();
        let (body, tag) = if let Some(b) = s.strip_suffix("^II") {
            (b, Some(VeryEvenTag::II))
        } else if let Some(b) = s.strip_suffix("^I") {
            (b, Some(VeryEvenTag::I))
        } else {
            (s, None)
        };
        let body = body.trim_start_matches('[').trim_end_matches(']');
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            let (v, m) = match tok.split_once('^') {
                Some((v, m)) => (v, m.parse::<usize>().map_err(|_| err())?),
                None => (tok, 1),
            };
            let v: usize = v.parse().map_err(|_| err())?;
            if v == 0 {
                return Err(err());
            }
            parts.extend(std::iter::repeat_n(v, m));
        }
        let mut p = PartitionLabel::new(parts);
        p.tag = tag;
        Ok(p)
    }
}

/// `h`-eigenvalues of a nilpotent orbit, arranged as in the tables: type
/// `A` sorted descending, `C`/`D` as `(h_1..h_n, −h_1..−h_n)` and `B` as
/// `(0, h_1..h_n, −h_1..−h_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagonalProfile {
    pub entries: Vec<i64>,
}

/// Natural-representation dimension for a classical type.
pub fn ambient_dimension(t: LieType) -> Result<usize> {
    let n = t.rank();
    match t.family() {
        Family::A => Ok(n + 1),
        Family::B => Ok(2 * n + 1),
        Family::C | Family::D => Ok(2 * n),
        _ => Err(Error::UnsupportedType(t.to_string())),
    }
}

/// The string `D(d) = (d−1, d−3, …, 1−d)`.
pub fn string_of(d: usize) -> Vec<i64> {
    let d = d as i64;
    (0..d).map(|k| d - 1 - 2 * k).collect()
}

/// Concatenation of the strings `D(d_i)` in part order.
pub fn raw_profile(p: &PartitionLabel) -> Vec<i64> {
    p.parts.iter().flat_map(|&d| string_of(d)).collect()
}

fn violation(p: &PartitionLabel, t: LieType, reason: &str) -> Error {
    Error::ConstraintViolation {
        partition: p.notation(),
        family: t.to_string(),
        reason: reason.to_string(),
    }
}

/// Checks the type constraint on a partition, including the tag rule.
pub fn validate(p: &PartitionLabel, t: LieType) -> Result<()> {
    let n = ambient_dimension(t)?;
    if p.total() != n {
        return Err(violation(p, t, &format!("parts sum to {}, expected {n}", p.total())));
    }
    if p.parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(violation(p, t, "parts must be weakly decreasing"));
    }
    let mult = p.multiplicities();
    let bad_parity = |parity: usize| mult.iter().any(|(&v, &m)| v % 2 == parity && m % 2 == 1);
    match t.family() {
        Family::A => {}
        Family::B | Family::D if bad_parity(0) => {
            return Err(violation(p, t, "even parts need even multiplicity"))
        }
        Family::C if bad_parity(1) => {
            return Err(violation(p, t, "odd parts need even multiplicity"))
        }
        _ => {}
    }
    let needs_tag = t.family() == Family::D && p.is_very_even();
    match (needs_tag, p.tag.is_some()) {
        (true, false) => Err(violation(p, t, "very even partition needs tag I or II")),
        (false, true) => Err(violation(p, t, "only very even D partitions carry a tag")),
        _ => Ok(()),
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Orbit labels for a classical type, tags `I` before `II`.
pub fn enumerate_orbits(t: LieType, n_ambient: usize) -> Result<Vec<PartitionLabel>> {
    let expected = ambient_dimension(t)?;
    if n_ambient != expected {
        return Err(Error::DimensionMismatch {
            expected,
            got: n_ambient,
        });
    }
    let mut out = Vec::new();
    for parts in partitions(n_ambient) {
        let p = PartitionLabel::new(parts);
        if t.family() == Family::D && p.is_very_even() {
            for tag in [VeryEvenTag::I, VeryEvenTag::II] {
                out.push(PartitionLabel {
                    tag: Some(tag),
                    ..p.clone()
                });
            }
        } else if validate(&p, t).is_ok() {
            out.push(p);
        }
    }
    Ok(out)
}

/// Fork weights `(a, b)` of a very even orbit tagged `I` in `D_n`.
fn very_even_fork(n: usize) -> (i64, i64) {
    let a = if n.is_multiple_of(4) { 0 } else { 2 };
    (a, 2 - a)
}

pub fn diagonal_profile(p: &PartitionLabel, t: LieType) -> Result<DiagonalProfile> {
    validate(p, t)?;
    let mut all = raw_profile(p);
    all.sort_unstable_by(|a, b| b.cmp(a));
    let n = t.rank();
    let entries = match t.family() {
        Family::A => all,
        Family::B | Family::C | Family::D => {
            if t.family() == Family::B {
                let z = all.iter().position(|&x| x == 0).expect("B profiles contain a zero");
                all.remove(z);
            }
            let mut h: Vec<i64> = all[..n].to_vec();
            if t.family() == Family::D && p.is_very_even() {
                let (a, _) = very_even_fork(n);
                // Tag I has fork (a, b); (0, 2) needs h_n > 0, (2, 0) needs h_n < 0.
                let positive = (a == 0) == (p.tag == Some(VeryEvenTag::I));
                if !positive {
                    h[n - 1] = -h[n - 1];
                }
            }
            let mut e = Vec::with_capacity(2 * n + 1);
            if t.family() == Family::B {
                e.push(0);
            }
            e.extend(h.iter().copied());
            e.extend(h.iter().map(|x| -x));
            e
        }
        _ => return Err(Error::UnsupportedType(t.to_string())),
    };
    Ok(DiagonalProfile { entries })
}

pub fn weighted_dynkin(p: &PartitionLabel, t: LieType) -> Result<WeightedDynkinDiagram> {
    let prof = diagonal_profile(p, t)?;
    let n = t.rank();
    let h: &[i64] = match t.family() {
        Family::B => &prof.entries[1..=n],
        Family::A => &prof.entries,
        _ => &prof.entries[..n],
    };
    let mut w: Vec<i64> = match t.family() {
        Family::A => h.windows(2).map(|x| x[0] - x[1]).collect(),
        Family::D => h[..n - 1].windows(2).map(|x| x[0] - x[1]).collect(),
        _ => h.windows(2).map(|x| x[0] - x[1]).collect(),
    };
    match t.family() {
        Family::B => w.push(h[n - 1]),
        Family::C => w.push(2 * h[n - 1]),
        Family::D => {
            w.truncate(n - 2);
            w.push(h[n - 2] - h[n - 1]);
            w.push(h[n - 2] + h[n - 1]);
        }
        _ => {}
    }
    Ok(WeightedDynkinDiagram::from_ints(&w))
}

/// A spanning family for the cone of a real form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpanningFamily {
    Partitions {
        lie_type: LieType,
        labels: Vec<PartitionLabel>,
    },
    Diagrams(Vec<WeightedDynkinDiagram>),
}

impl SpanningFamily {
    pub fn diagrams(&self) -> Vec<WeightedDynkinDiagram> {
        match self {
            SpanningFamily::Partitions { lie_type, labels } => labels
                .iter()
                .map(|p| weighted_dynkin(p, *lie_type).expect("family members are valid"))
                .collect(),
            SpanningFamily::Diagrams(d) => d.clone(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            SpanningFamily::Partitions { labels, .. } => labels.len(),
            SpanningFamily::Diagrams(d) => d.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Partitions made of 2s and 1s (type A), 3s, 2s and 1s (types B, D) or
/// 2s and 1s (type C) that label the special families.
fn candidates(t: LieType) -> Vec<PartitionLabel> {
    let n = ambient_dimension(t).expect("classical");
    let mut out = Vec::new();
    let build = |three: usize, twos: usize, ones: usize| {
        let mut v = vec![3; three];
        v.extend(std::iter::repeat_n(2, twos));
        v.extend(std::iter::repeat_n(1, ones));
        PartitionLabel::new(v)
    };
    match t.family() {
        Family::A | Family::C => {
            for k in 1..=n / 2 {
                out.push(build(0, k, n - 2 * k));
            }
        }
        Family::B | Family::D => {
            for k in 0.. {
                if 3 + 4 * k > n {
                    break;
                }
                out.push(build(1, 2 * k, n - 3 - 4 * k));
            }
            for k in 1.. {
                if 4 * k > n {
                    break;
                }
                let p = build(0, 2 * k, n - 4 * k);
                if t.family() == Family::D && p.is_very_even() {
                    out.push(PartitionLabel {
                        tag: Some(VeryEvenTag::I),
                        ..p.clone()
                    });
                    out.push(PartitionLabel {
                        tag: Some(VeryEvenTag::II),
                        ..p
                    });
                } else {
                    out.push(p);
                }
            }
        }
        _ => {}
    }
    out
}

/// The four generator diagrams for split `E6`, in node order `a,b,c,d,e,f`.
pub fn e6_split_diagrams() -> Vec<WeightedDynkinDiagram> {
    [
        [0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 1, 0],
        [0, 1, 0, 1, 0, 0],
        [0, 0, 2, 0, 0, 0],
    ]
    .iter()
    .map(|w| WeightedDynkinDiagram::from_ints(w))
    .collect()
}

/// Special family of nilpotent orbits whose diagrams match the Satake
/// diagram, are ι-fixed and are nonzero.
pub fn spanning_family(f: &RealForm) -> Result<SpanningFamily> {
    let t = f.lie_type();
    match t.family() {
        Family::A | Family::B | Family::C | Family::D => {
            let s = &f.satake;
            let labels: Vec<PartitionLabel> = candidates(t)
                .into_iter()
                .filter(|p| {
                    let w = weighted_dynkin(p, t).expect("candidates are valid");
                    w.weights.iter().any(|x| *x != q(0))
                        && matches(&w, s).unwrap_or(false)
                        && iota_apply(&w, t).map(|i| i == w).unwrap_or(false)
                })
                .collect();
            Ok(SpanningFamily::Partitions {
                lie_type: t,
                labels,
            })
        }
        Family::E if f.name() == "E6^I" => Ok(SpanningFamily::Diagrams(e6_split_diagrams())),
        _ => Err(Error::NotCovered(f.name().to_string())),
    }
}

/// Convenience wrapper resolving a form name.
pub fn spanning_family_by_name(name: &str) -> Result<SpanningFamily> {
    spanning_family(&realforms::lookup(name)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> LieType {
        s.parse().unwrap()
    }

    fn labels(v: &[PartitionLabel]) -> Vec<String> {
        v.iter().map(PartitionLabel::notation).collect()
    }

    #[test]
    fn sl4_orbits() {
        let o = enumerate_orbits(t("A3"), 4).unwrap();
        assert_eq!(labels(&o), ["[4]", "[3,1]", "[2^2]", "[2,1^2]", "[1^4]"]);
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_orbits(t("C3"), 6).unwrap().len(), 8);
        assert_eq!(enumerate_orbits(t("B3"), 7).unwrap().len(), 7);
        let d4 = enumerate_orbits(t("D4"), 8).unwrap();
        assert_eq!(d4.len(), 12);
        assert_eq!(d4.iter().filter(|p| p.tag.is_some()).count(), 4);
        assert!(matches!(
            enumerate_orbits(t("E6"), 27),
            Err(Error::UnsupportedType(_))
        ));
    }

    #[test]
    fn table_rows() {
        let p: PartitionLabel = "[3,1]".parse().unwrap();
        assert_eq!(diagonal_profile(&p, t("A3")).unwrap().entries, [2, 0, 0, -2]);
        let p: PartitionLabel = "[4,2]".parse().unwrap();
        assert_eq!(diagonal_profile(&p, t("C3")).unwrap().entries, [3, 1, 1, -3, -1, -1]);
        let p: PartitionLabel = "[2^2]".parse().unwrap();
        assert_eq!(weighted_dynkin(&p, t("A3")).unwrap(), WeightedDynkinDiagram::from_ints(&[0, 2, 0]));
        let p: PartitionLabel = "[2^3]".parse().unwrap();
        assert_eq!(weighted_dynkin(&p, t("C3")).unwrap(), WeightedDynkinDiagram::from_ints(&[0, 0, 2]));
        let p: PartitionLabel = "[4,1^2]".parse().unwrap();
        assert_eq!(weighted_dynkin(&p, t("C3")).unwrap(), WeightedDynkinDiagram::from_ints(&[2, 1, 0]));
    }

    #[test]
    fn very_even_forks() {
        let i: PartitionLabel = "[2^4]^I".parse().unwrap();
        let ii: PartitionLabel = "[2^4]^II".parse().unwrap();
        assert_eq!(weighted_dynkin(&i, t("D4")).unwrap(), WeightedDynkinDiagram::from_ints(&[0, 0, 0, 2]));
        assert_eq!(weighted_dynkin(&ii, t("D4")).unwrap(), WeightedDynkinDiagram::from_ints(&[0, 0, 2, 0]));
        let i6: PartitionLabel = "[2^6]^I".parse().unwrap();
        assert_eq!(
            weighted_dynkin(&i6, t("D6")).unwrap(),
            WeightedDynkinDiagram::from_ints(&[0, 0, 0, 0, 2, 0])
        );
    }

    #[test]
    fn constraint_errors() {
        let p: PartitionLabel = "[2,1]".parse().unwrap();
        assert!(matches!(validate(&p, t("B2")), Err(Error::ConstraintViolation { .. })));
        let p: PartitionLabel = "[2,1^3]".parse().unwrap();
        assert!(matches!(validate(&p, t("B2")), Err(Error::ConstraintViolation { .. })));
        let p: PartitionLabel = "[3,1]".parse().unwrap();
        assert!(matches!(validate(&p, t("C2")), Err(Error::ConstraintViolation { .. })));
        let p: PartitionLabel = "[2^4]".parse().unwrap();
        assert!(matches!(validate(&p, t("D4")), Err(Error::ConstraintViolation { .. })));
    }

    #[test]
    fn sl5_family() {
        let fam = spanning_family_by_name("sl(5,R)").unwrap();
        let SpanningFamily::Partitions { labels: l, .. } = &fam else {
            panic!("partition family expected")
        };
        assert_eq!(labels(l), ["[2,1^3]", "[2^2,1]"]);
    }

    #[test]
    fn notation_roundtrip() {
        for s in ["[3,2^2,1]", "[4^2]^II", "[1^6]", "[5]"] {
            assert_eq!(s.parse::<PartitionLabel>().unwrap().notation(), s);
        }
        assert!("[0,1]".parse::<PartitionLabel>().is_err());
        assert!("x".parse::<PartitionLabel>().is_err());
    }
}
