//! Real simple Lie algebras as Satake diagrams.
//!
//! Exceptional forms come from the embedded table in `data/catalog.txt`.
//! Classical forms are generated from their parameters, so any size is
//! available; [`catalog`] lists the noncompact ones up to complex rank 8.
//!
//! Canonical names: `sl(n,R)`, `su*(2m)`, `su(p,q)`, `so(p,q)`, `so*(2n)`,
//! `sp(2n,R)`, `sp(p,q)` (always `p ≤ q`) and `E6^I` … `E8^IX`, `F4^I`,
//! `F4^II`, `G2^*`. Low-rank coincidences are resolved to one name, e.g.
//! `so(3,3)` is returned as `sl(4,R)`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::linalg;
use crate::rootcore::{cartan_isomorphisms, Family, LieType, RootSystemData};
use crate::{q, Error, Result, Q};

pub const CATALOG_DATA: &str = include_str!("../data/catalog.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeColor {
    White,
    Black,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SatakeDiagram {
    pub lie_type: LieType,
    pub colors: Vec<NodeColor>,
    /// `arrows[i] = Some(j)` when white nodes `i` and `j` are joined by an arrow.
    pub arrows: Vec<Option<usize>>,
}

impl SatakeDiagram {
    pub fn new(
        lie_type: LieType,
        colors: Vec<NodeColor>,
        pairs: &[(usize, usize)],
    ) -> Result<Self> {
        let n = lie_type.rank();
        if colors.len() != n {
            return Err(Error::NodeCountMismatch {
                expected: n,
                got: colors.len(),
            });
        }
        let mut arrows = vec![None; n];
        for &(i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::IndexOutOfRange {
                    index: i.max(j),
                    rank: n,
                });
            }
            if i == j || arrows[i].is_some() || arrows[j].is_some() {
                return Err(Error::Parse(format!("bad arrow pair {i}-{j}")));
            }
            if colors[i] == NodeColor::Black {
                return Err(Error::NotWhite(i));
            }
            if colors[j] == NodeColor::Black {
                return Err(Error::NotWhite(j));
            }
            arrows[i] = Some(j);
            arrows[j] = Some(i);
        }
        let d = SatakeDiagram {
            lie_type,
            colors,
            arrows,
        };
        if !d.arrows_are_automorphism() {
            return Err(Error::NotArrowInvariant);
        }
        Ok(d)
    }

    pub fn rank(&self) -> usize {
        self.colors.len()
    }

    pub fn is_white(&self, i: usize) -> bool {
        self.colors[i] == NodeColor::White
    }

    pub fn white_nodes(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.is_white(i)).collect()
    }

    pub fn black_nodes(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| !self.is_white(i)).collect()
    }

    /// Node involution given by the arrows (identity on unpaired nodes).
    pub fn sigma(&self, i: usize) -> usize {
        self.arrows[i].unwrap_or(i)
    }

    pub fn arrow_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.rank())
            .filter_map(|i| self.arrows[i].filter(|&j| i < j).map(|j| (i, j)))
            .collect()
    }

    /// Orbits of white nodes under the arrow involution.
    pub fn white_orbits(&self) -> Vec<Vec<usize>> {
        self.white_nodes()
            .into_iter()
            .filter(|&i| self.sigma(i) >= i)
            .map(|i| {
                let j = self.sigma(i);
                if i == j {
                    vec![i]
                } else {
                    vec![i, j]
                }
            })
            .collect()
    }

    /// Whether every node is white and there are no arrows.
    pub fn is_split(&self) -> bool {
        self.colors.iter().all(|c| *c == NodeColor::White) && self.arrows.iter().all(Option::is_none)
    }

    pub fn is_compact(&self) -> bool {
        self.colors.iter().all(|c| *c == NodeColor::Black)
    }

    fn arrows_are_automorphism(&self) -> bool {
        if self.arrows.iter().all(Option::is_none) {
            return true;
        }
        let c = self.lie_type.cartan();
        let n = self.rank();
        // The pairing must extend to a color-preserving diagram automorphism.
        cartan_isomorphisms(&c, &c, false).into_iter().any(|p| {
            (0..n).all(|i| {
                self.colors[p[i]] == self.colors[i] && self.arrows[i].is_none_or(|j| p[i] == j)
            })
        })
    }

    /// Catalog-style bitstring, `1` for white.
    pub fn color_string(&self) -> String {
        self.colors
            .iter()
            .map(|c| if *c == NodeColor::White { '1' } else { '0' })
            .collect()
    }
}

/// Type of the restricted root system and where each white node lands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RestrictedRootDatum {
    pub restricted_type: LieType,
    /// `restriction_map[i] = Some(k)` when node `i` restricts to `λ_{k+1}`.
    pub restriction_map: Vec<Option<usize>>,
}

impl RestrictedRootDatum {
    pub fn real_rank(&self) -> usize {
        self.restricted_type.rank()
    }

    pub fn is_non_reduced(&self) -> bool {
        self.restricted_type.family() == Family::BC
    }

    /// Nodes of the Satake diagram restricting to `λ_{k+1}`.
    pub fn preimage(&self, k: usize) -> Vec<usize> {
        (0..self.restriction_map.len())
            .filter(|&i| self.restriction_map[i] == Some(k))
            .collect()
    }
}

/// Canonical name of a real form plus its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RealFormId {
    pub name: String,
    pub params: Vec<usize>,
}

impl fmt::Display for RealFormId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl RealFormId {
    pub fn parse(s: &str) -> Result<Self> {
        lookup(s).map(|f| f.id)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealForm {
    pub id: RealFormId,
    pub satake: SatakeDiagram,
    pub restricted: RestrictedRootDatum,
}

impl RealForm {
    pub fn name(&self) -> &str {
        &self.id.name
    }

    pub fn lie_type(&self) -> LieType {
        self.satake.lie_type
    }

    pub fn real_rank(&self) -> usize {
        self.restricted.real_rank()
    }

    pub fn is_split(&self) -> bool {
        self.satake.is_split()
    }

    pub fn restricted_system(&self) -> RootSystemData {
        RootSystemData::build(self.restricted.restricted_type)
    }

    /// Values `λ_k(X)` of a matching diagram on the simple restricted roots.
    pub fn restricted_values(&self, w: &WeightedDynkinDiagram) -> Result<Vec<Q>> {
        if !matches(w, &self.satake)? {
            return Err(Error::Parse(format!(
                "diagram {} does not match {}",
                w,
                self.name()
            )));
        }
        Ok((0..self.real_rank())
            .map(|k| w.weights[self.restricted.preimage(k)[0]])
            .collect())
    }

    /// The vector of the restricted Cartan space (restricted simple-root
    /// coordinates) whose weighted diagram is `w`.
    pub fn restricted_vector(&self, w: &WeightedDynkinDiagram) -> Result<Vec<Q>> {
        let vals = self.restricted_values(w)?;
        Ok(self.restricted_system().vector_from_simple_values(&vals))
    }

    /// Inverse of [`RealForm::restricted_vector`] on the dominant chamber.
    pub fn diagram_of_restricted(&self, h: &[Q]) -> WeightedDynkinDiagram {
        let sys = self.restricted_system();
        let vals = sys.simple_values(h);
        WeightedDynkinDiagram {
            weights: self
                .restricted
                .restriction_map
                .iter()
                .map(|m| m.map_or(Q::zero(), |k| vals[k]))
                .collect(),
        }
    }

    /// One catalog record line for this form.
    pub fn to_record(&self) -> String {
        let arrows = {
            let p = self.satake.arrow_pairs();
            if p.is_empty() {
                "-".to_string()
            } else {
                p.iter()
                    .map(|(i, j)| format!("{i}-{j}"))
                    .collect::<Vec<_>>()
                    .join(",")
            }
        };
        let map = self
            .restricted
            .restriction_map
            .iter()
            .map(|m| m.map_or("-".to_string(), |k| (k + 1).to_string()))
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "{} | {} | {} | {} | {} | {}",
            self.name(),
            self.lie_type(),
            self.satake.color_string(),
            arrows,
            self.restricted.restricted_type,
            map
        )
    }
}

/// Node weights of a weighted Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightedDynkinDiagram {
    #[serde(with = "crate::qser::vec")]
    pub weights: Vec<Q>,
}

impl WeightedDynkinDiagram {
    pub fn from_ints(w: &[i64]) -> Self {
        WeightedDynkinDiagram {
            weights: w.iter().map(|&x| q(x)).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        WeightedDynkinDiagram {
            weights: vec![Q::zero(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

impl fmt::Display for WeightedDynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(crate::qser::format_q).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BPlusCone {
    pub generators: Vec<WeightedDynkinDiagram>,
    pub dimension: usize,
}

/// Black nodes carry weight 0 and arrow-joined nodes carry equal weights.
pub fn matches(w: &WeightedDynkinDiagram, s: &SatakeDiagram) -> Result<bool> {
    if w.len() != s.rank() {
        return Err(Error::NodeCountMismatch {
            expected: s.rank(),
            got: w.len(),
        });
    }
    Ok((0..s.rank()).all(|i| {
        (s.is_white(i) || w.weights[i].is_zero()) && w.weights[i] == w.weights[s.sigma(i)]
    }))
}

/// Permutes weights by `−w₀` of the ambient type.
pub fn iota_apply(w: &WeightedDynkinDiagram, t: LieType) -> Result<WeightedDynkinDiagram> {
    if w.len() != t.rank() {
        return Err(Error::NodeCountMismatch {
            expected: t.rank(),
            got: w.len(),
        });
    }
    let pi = minus_w0_cached(t);
    let mut out = vec![Q::zero(); w.len()];
    for (i, &p) in pi.iter().enumerate() {
        out[p] = w.weights[i];
    }
    Ok(WeightedDynkinDiagram { weights: out })
}

fn minus_w0_cached(t: LieType) -> Vec<usize> {
    let n = t.rank();
    match t.family() {
        Family::A => (0..n).rev().collect(),
        Family::D if n % 2 == 1 => {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(n - 2, n - 1);
            p
        }
        Family::E if n == 6 => vec![4, 3, 2, 1, 0, 5],
        _ => (0..n).collect(),
    }
}

/// Basis of `{w : w matches s and ι(w) = w}` as 0/1 indicator diagrams.
pub fn b_plus_basis(s: &SatakeDiagram) -> BPlusCone {
    let n = s.rank();
    let pi = minus_w0_cached(s.lie_type);
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for i in 0..n {
        if !s.is_white(i) {
            rows.push(linalg::unit(n, i));
        }
        for j in [s.sigma(i), pi[i]] {
            if j != i {
                let mut r = vec![Q::zero(); n];
                r[i] = q(1);
                r[j] = q(-1);
                rows.push(r);
            }
        }
    }
    let basis = linalg::nullspace(&rows, n);
    let generators: Vec<WeightedDynkinDiagram> = basis
        .into_iter()
        .map(|weights| WeightedDynkinDiagram { weights })
        .collect();
    BPlusCone {
        dimension: generators.len(),
        generators,
    }
}

/// Dimension of the space of diagrams matching `s` (no ι condition).
pub fn matching_space_dim(s: &SatakeDiagram) -> usize {
    s.white_orbits().len()
}

pub fn catalog_lookup(id: &RealFormId) -> Result<RealForm> {
    lookup(&id.name)
}

pub fn a_hyperbolic_rank(id: &RealFormId) -> Result<usize> {
    Ok(b_plus_basis(&catalog_lookup(id)?.satake).dimension)
}

pub fn real_rank(id: &RealFormId) -> Result<usize> {
    Ok(catalog_lookup(id)?.real_rank())
}

// ---------------------------------------------------------------------------
// Catalog data file

/// Parses catalog records. Blank lines and `#` comments are skipped.
pub fn parse_catalog(text: &str) -> Result<Vec<RealForm>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_record(line).map_err(|msg| Error::CatalogParse {
            line: lineno + 1,
            msg,
        })?);
    }
    Ok(out)
}

pub fn parse_record(line: &str) -> std::result::Result<RealForm, String> {
    let fields: Vec<&str> = line.split('|').map(str::trim).collect();
    let [name, ty, colors, arrows, rty, map] = fields[..] else {
        return Err(format!("expected 6 fields, got {}", fields.len()));
    };
    let lie_type: LieType = ty.parse().map_err(|e: Error| e.to_string())?;
    let colors: Vec<NodeColor> = colors
        .chars()
        .map(|c| match c {
            '1' => Ok(NodeColor::White),
            '0' => Ok(NodeColor::Black),
            _ => Err(format!("bad color {c:?}")),
        })
        .collect::<std::result::Result<_, _>>()?;
    let mut pairs = Vec::new();
    if arrows != "-" {
        for p in arrows.split(',') {
            let (a, b) = p
                .split_once('-')
                .ok_or_else(|| format!("bad arrow {p:?}"))?;
            let a: usize = a.trim().parse().map_err(|_| format!("bad arrow {p:?}"))?;
            let b: usize = b.trim().parse().map_err(|_| format!("bad arrow {p:?}"))?;
            pairs.push((a, b));
        }
    }
    let satake = SatakeDiagram::new(lie_type, colors, &pairs).map_err(|e| e.to_string())?;
    let restricted_type: LieType = rty.parse().map_err(|e: Error| e.to_string())?;
    let restriction_map: Vec<Option<usize>> = map
        .split(',')
        .map(str::trim)
        .map(|m| {
            if m == "-" {
                Ok(None)
            } else {
                m.parse::<usize>()
                    .ok()
                    .filter(|&k| k >= 1)
                    .map(|k| Some(k - 1))
                    .ok_or_else(|| format!("bad map entry {m:?}"))
            }
        })
        .collect::<std::result::Result<_, _>>()?;
    let restricted = RestrictedRootDatum {
        restricted_type,
        restriction_map,
    };
    validate_datum(&satake, &restricted)?;
    // classical names carry their parameters, e.g. so(3,5) -> [3, 5]
    let params = if name.starts_with(|c: char| c.is_ascii_lowercase()) {
        name.split(|c: char| !c.is_ascii_digit())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().map_err(|_| format!("bad parameter in {name:?}")))
            .collect::<std::result::Result<_, _>>()?
    } else {
        vec![]
    };
    Ok(RealForm {
        id: RealFormId {
            name: name.to_string(),
            params,
        },
        satake,
        restricted,
    })
}

fn validate_datum(s: &SatakeDiagram, r: &RestrictedRootDatum) -> std::result::Result<(), String> {
    if r.restriction_map.len() != s.rank() {
        return Err("restriction map length differs from node count".into());
    }
    let k = r.real_rank();
    for i in 0..s.rank() {
        match (s.is_white(i), r.restriction_map[i]) {
            (true, None) => return Err(format!("white node {i} has no image")),
            (false, Some(_)) => return Err(format!("black node {i} has an image")),
            (true, Some(m)) if m >= k => return Err(format!("image of node {i} out of range")),
            (true, Some(m)) if r.restriction_map[s.sigma(i)] != Some(m) => {
                return Err(format!("arrow pair at node {i} maps to different roots"))
            }
            _ => {}
        }
    }
    let hit: BTreeSet<usize> = r.restriction_map.iter().flatten().copied().collect();
    if hit.len() != k {
        return Err("restriction map is not onto".into());
    }
    if s.white_orbits().len() != k {
        return Err("white orbit count differs from real rank".into());
    }
    Ok(())
}

fn exceptional_forms() -> &'static [RealForm] {
    static CELL: OnceLock<Vec<RealForm>> = OnceLock::new();
    CELL.get_or_init(|| parse_catalog(CATALOG_DATA).expect("embedded catalog is well formed"))
}

// ---------------------------------------------------------------------------
// Classical families

fn colors_from(n: usize, white: impl Fn(usize) -> bool) -> Vec<NodeColor> {
    (0..n)
        .map(|i| {
            if white(i) {
                NodeColor::White
            } else {
                NodeColor::Black
            }
        })
        .collect()
}

fn ty(f: Family, r: usize) -> LieType {
    LieType::new(f, r).expect("classical constructors only build valid types")
}

/// Rank-1 restricted systems are written `A1`, except the non-reduced `BC1`.
fn restricted_b(p: usize, non_reduced: bool) -> LieType {
    match (p, non_reduced) {
        (_, true) => ty(Family::BC, p),
        (1, false) => ty(Family::A, 1),
        _ => ty(Family::B, p),
    }
}

fn restricted_c(p: usize) -> LieType {
    if p == 1 {
        ty(Family::A, 1)
    } else {
        ty(Family::C, p)
    }
}

fn form(name: String, params: Vec<usize>, s: SatakeDiagram, r: RestrictedRootDatum) -> RealForm {
    debug_assert!(validate_datum(&s, &r).is_ok(), "{name}");
    RealForm {
        id: RealFormId { name, params },
        satake: s,
        restricted: r,
    }
}

fn bad(name: &str, hint: &str) -> Error {
    Error::BadParameters {
        name: name.to_string(),
        hint: hint.to_string(),
    }
}

/// `sl(n,R)`, split form of `A_{n−1}`.
pub fn sl_r(n: usize) -> Result<RealForm> {
    if n < 2 {
        return Err(bad(&format!("sl({n},R)"), "need n >= 2"));
    }
    let t = ty(Family::A, n - 1);
    Ok(form(
        format!("sl({n},R)"),
        vec![n],
        SatakeDiagram::new(t, vec![NodeColor::White; n - 1], &[])?,
        RestrictedRootDatum {
            restricted_type: t,
            restriction_map: (0..n - 1).map(Some).collect(),
        },
    ))
}

/// `su*(n)` for even `n = 2m ≥ 4` (also written `sl(m,H)`).
pub fn su_star(n: usize) -> Result<RealForm> {
    let name = format!("su*({n})");
    if n % 2 == 1 || n < 4 {
        return Err(bad(&name, "need even n >= 4"));
    }
    let m = n / 2;
    let t = ty(Family::A, n - 1);
    Ok(form(
        name,
        vec![n],
        SatakeDiagram::new(t, colors_from(n - 1, |i| i % 2 == 1), &[])?,
        RestrictedRootDatum {
            restricted_type: ty(Family::A, m - 1),
            restriction_map: (0..n - 1)
                .map(|i| (i % 2 == 1).then_some(i / 2))
                .collect(),
        },
    ))
}

/// `su(p,q)` with `1 ≤ p ≤ q`.
pub fn su(p: usize, q_: usize) -> Result<RealForm> {
    let name = format!("su({p},{q_})");
    if p > q_ {
        return Err(bad(&name, &format!("write su({q_},{p})")));
    }
    if p == 0 {
        return Err(bad(&name, "compact form"));
    }
    if (p, q_) == (1, 1) {
        return sl_r(2);
    }
    let n_nodes = p + q_ - 1;
    let t = ty(Family::A, n_nodes);
    let mirror = |i: usize| n_nodes - 1 - i;
    let white = |i: usize| i < p || mirror(i) < p;
    let pairs: Vec<(usize, usize)> = (0..p).filter(|&i| i < mirror(i)).map(|i| (i, mirror(i))).collect();
    let restricted_type = if p == q_ {
        restricted_c(p)
    } else {
        restricted_b(p, true)
    };
    Ok(form(
        name,
        vec![p, q_],
        SatakeDiagram::new(t, colors_from(n_nodes, white), &pairs)?,
        RestrictedRootDatum {
            restricted_type,
            restriction_map: (0..n_nodes)
                .map(|i| white(i).then(|| i.min(mirror(i))))
                .collect(),
        },
    ))
}

/// `so(p,q)` with `1 ≤ p ≤ q`, `p + q ≥ 3`, `p + q ≠ 4`.
pub fn so(p: usize, q_: usize) -> Result<RealForm> {
    let name = format!("so({p},{q_})");
    if p > q_ {
        return Err(bad(&name, &format!("write so({q_},{p})")));
    }
    if p == 0 {
        return Err(bad(&name, "compact form"));
    }
    match p + q_ {
        3 => return sl_r(2),
        4 => return Err(bad(&name, "so(p,q) with p+q = 4 is not simple or not absolutely simple")),
        6 => {
            return match p {
                1 => su_star(4),
                2 => su(2, 2),
                _ => sl_r(4),
            }
        }
        _ => {}
    }
    let big = p + q_;
    if big % 2 == 1 {
        let n = (big - 1) / 2;
        let t = ty(Family::B, n);
        let restricted_type = if p == n { t } else { restricted_b(p, false) };
        Ok(form(
            name,
            vec![p, q_],
            SatakeDiagram::new(t, colors_from(n, |i| i < p), &[])?,
            RestrictedRootDatum {
                restricted_type,
                restriction_map: (0..n).map(|i| (i < p).then_some(i)).collect(),
            },
        ))
    } else {
        let n = big / 2;
        let t = ty(Family::D, n);
        if p == n {
            return Ok(form(
                name,
                vec![p, q_],
                SatakeDiagram::new(t, vec![NodeColor::White; n], &[])?,
                RestrictedRootDatum {
                    restricted_type: t,
                    restriction_map: (0..n).map(Some).collect(),
                },
            ));
        }
        if p == n - 1 {
            return Ok(form(
                name,
                vec![p, q_],
                SatakeDiagram::new(t, vec![NodeColor::White; n], &[(n - 2, n - 1)])?,
                RestrictedRootDatum {
                    restricted_type: ty(Family::B, n - 1),
                    restriction_map: (0..n).map(|i| Some(i.min(n - 2))).collect(),
                },
            ));
        }
        Ok(form(
            name,
            vec![p, q_],
            SatakeDiagram::new(t, colors_from(n, |i| i < p), &[])?,
            RestrictedRootDatum {
                restricted_type: restricted_b(p, false),
                restriction_map: (0..n).map(|i| (i < p).then_some(i)).collect(),
            },
        ))
    }
}

/// `so*(2n)` with `n ≥ 3`.
pub fn so_star(two_n: usize) -> Result<RealForm> {
    let name = format!("so*({two_n})");
    if two_n % 2 == 1 || two_n < 6 {
        return Err(bad(&name, "need even 2n >= 6"));
    }
    let n = two_n / 2;
    if n == 3 {
        return su(1, 3);
    }
    let t = ty(Family::D, n);
    let m = n / 2;
    if n.is_multiple_of(2) {
        let white = |i: usize| i % 2 == 1;
        Ok(form(
            name,
            vec![two_n],
            SatakeDiagram::new(t, colors_from(n, white), &[])?,
            RestrictedRootDatum {
                restricted_type: restricted_c(m),
                restriction_map: (0..n).map(|i| white(i).then_some(i / 2)).collect(),
            },
        ))
    } else {
        let white = |i: usize| (i % 2 == 1 && i < n - 2) || i >= n - 2;
        Ok(form(
            name,
            vec![two_n],
            SatakeDiagram::new(t, colors_from(n, white), &[(n - 2, n - 1)])?,
            RestrictedRootDatum {
                restricted_type: restricted_b(m, true),
                restriction_map: (0..n)
                    .map(|i| white(i).then(|| if i >= n - 2 { m - 1 } else { i / 2 }))
                    .collect(),
            },
        ))
    }
}

/// `sp(2n,R)`, split form of `C_n`; the argument is the matrix size `2n`.
pub fn sp_r(two_n: usize) -> Result<RealForm> {
    let name = format!("sp({two_n},R)");
    if two_n % 2 == 1 || two_n < 2 {
        return Err(bad(&name, "need even size >= 2"));
    }
    let n = two_n / 2;
    if n == 1 {
        return sl_r(2);
    }
    let t = ty(Family::C, n);
    Ok(form(
        name,
        vec![two_n],
        SatakeDiagram::new(t, vec![NodeColor::White; n], &[])?,
        RestrictedRootDatum {
            restricted_type: t,
            restriction_map: (0..n).map(Some).collect(),
        },
    ))
}

/// `sp(p,q)` with `1 ≤ p ≤ q`, `p + q ≥ 2`.
pub fn sp(p: usize, q_: usize) -> Result<RealForm> {
    let name = format!("sp({p},{q_})");
    if p > q_ {
        return Err(bad(&name, &format!("write sp({q_},{p})")));
    }
    if p == 0 {
        return Err(bad(&name, "compact form"));
    }
    let n = p + q_;
    let t = ty(Family::C, n);
    let white = |i: usize| i % 2 == 1 && i < 2 * p;
    let restricted_type = if p == q_ {
        restricted_c(p)
    } else {
        restricted_b(p, true)
    };
    Ok(form(
        name,
        vec![p, q_],
        SatakeDiagram::new(t, colors_from(n, white), &[])?,
        RestrictedRootDatum {
            restricted_type,
            restriction_map: (0..n).map(|i| white(i).then_some(i / 2)).collect(),
        },
    ))
}

pub fn exceptional(name: &str) -> Result<RealForm> {
    exceptional_forms()
        .iter()
        .find(|f| f.name().eq_ignore_ascii_case(name))
        .cloned()
        .ok_or_else(|| Error::UnknownForm(name.to_string()))
}

/// Noncompact real forms of a given complex type, one per isomorphism class
/// whose standard diagram has that type.
pub fn forms_of_type(t: LieType) -> Vec<RealForm> {
    let n = t.rank();
    let mut out: Vec<RealForm> = Vec::new();
    let mut push = |r: Result<RealForm>| {
        if let Ok(f) = r {
            if f.lie_type() == t && !out.iter().any(|g| g.id == f.id) {
                out.push(f);
            }
        }
    };
    match t.family() {
        Family::A => {
            push(sl_r(n + 1));
            push(su_star(n + 1));
            for p in 1..=n.div_ceil(2) {
                push(su(p, n + 1 - p));
            }
        }
        Family::B => {
            for p in 1..=n {
                push(so(p, 2 * n + 1 - p));
            }
        }
        Family::C => {
            push(sp_r(2 * n));
            for p in 1..=n / 2 {
                push(sp(p, n - p));
            }
        }
        Family::D => {
            for p in 1..=n {
                push(so(p, 2 * n - p));
            }
            push(so_star(2 * n));
        }
        Family::E | Family::F | Family::G => {
            for f in exceptional_forms() {
                if f.lie_type() == t {
                    out.push(f.clone());
                }
            }
        }
        Family::BC => {}
    }
    out
}

/// All noncompact simple real forms of complex rank ≤ 8 (C2 and the D3
/// coincidences are listed under B2 and A3), plus the exceptional forms.
pub fn catalog() -> &'static [RealForm] {
    static CELL: OnceLock<Vec<RealForm>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for r in 1..=8 {
            out.extend(forms_of_type(ty(Family::A, r)));
        }
        for r in 2..=8 {
            out.extend(forms_of_type(ty(Family::B, r)));
        }
        for r in 3..=8 {
            out.extend(forms_of_type(ty(Family::C, r)));
        }
        for r in 4..=8 {
            out.extend(forms_of_type(ty(Family::D, r)));
        }
        out.extend(exceptional_forms().iter().cloned());
        out
    })
}

/// Name of the compact real form of a complex type.
pub fn compact_name(t: LieType) -> String {
    let n = t.rank();
    match t.family() {
        Family::A => format!("su({})", n + 1),
        Family::B => format!("so({})", 2 * n + 1),
        Family::C | Family::BC => format!("sp({n})"),
        Family::D => format!("so({})", 2 * n),
        _ => format!("{t}(compact)"),
    }
}

/// Name of the complex simple algebra of a type, viewed as a real form.
pub fn complex_name(t: LieType) -> String {
    let n = t.rank();
    match t.family() {
        Family::A => format!("sl({},C)", n + 1),
        Family::B => format!("so({},C)", 2 * n + 1),
        Family::C | Family::BC => format!("sp({},C)", 2 * n),
        Family::D => format!("so({},C)", 2 * n),
        _ => format!("{t}(C)"),
    }
}

// ---------------------------------------------------------------------------
// Names

fn normalize(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
        .collect::<String>()
        .to_ascii_lowercase()
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    if let Some((a, b)) = s.split_once(',') {
        return Some((a.parse().ok()?, b.parse().ok()?));
    }
    let bytes = s.as_bytes();
    if bytes.len() == 2 && bytes.iter().all(u8::is_ascii_digit) {
        return Some(((bytes[0] - b'0') as usize, (bytes[1] - b'0') as usize));
    }
    None
}

fn parse_num(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Resolves a real-form name in the CLI grammar or the canonical notation.
pub fn lookup(raw: &str) -> Result<RealForm> {
    let s = normalize(raw);
    let unknown = || Error::UnknownForm(raw.to_string());
    for prefix in ["e6", "e7", "e8", "f4", "g2"] {
        if let Some(rest) = s.strip_prefix(prefix) {
            let rest = rest.trim_start_matches('^');
            let suffix = if prefix == "g2" && (rest.is_empty() || rest == "*") {
                "*".to_string()
            } else {
                rest.to_ascii_uppercase()
            };
            return exceptional(&format!("{}^{}", prefix.to_ascii_uppercase(), suffix))
                .map_err(|_| unknown());
        }
    }
    if let Some(rest) = s.strip_prefix("su*") {
        return su_star(parse_num(rest).ok_or_else(unknown)?);
    }
    if let Some(rest) = s.strip_prefix("so*") {
        return so_star(parse_num(rest).ok_or_else(unknown)?);
    }
    if let Some(rest) = s.strip_prefix("sl") {
        let rest = rest.trim_end_matches(',');
        if let Some(n) = rest.strip_suffix(",r").or_else(|| rest.strip_suffix('r')) {
            return sl_r(parse_num(n).ok_or_else(unknown)?);
        }
        if let Some(n) = rest.strip_suffix(",h").or_else(|| rest.strip_suffix('h')) {
            return su_star(2 * parse_num(n).ok_or_else(unknown)?);
        }
        return Err(unknown());
    }
    if let Some(rest) = s.strip_prefix("sp") {
        if let Some(n) = rest.strip_suffix(",r").or_else(|| rest.strip_suffix('r')) {
            return sp_r(parse_num(n).ok_or_else(unknown)?);
        }
        let (p, q_) = parse_pair(rest).ok_or_else(unknown)?;
        return sp(p, q_);
    }
    if let Some(rest) = s.strip_prefix("su") {
        let (p, q_) = parse_pair(rest).ok_or_else(unknown)?;
        return su(p, q_);
    }
    if let Some(rest) = s.strip_prefix("so") {
        let (p, q_) = parse_pair(rest).ok_or_else(unknown)?;
        return so(p, q_);
    }
    Err(unknown())
}

/// Identifies a connected Satake diagram given on a subset of the nodes of
/// `parent`: the name of the real form it is the diagram of.
pub fn identify_component(parent: &SatakeDiagram, nodes: &[usize]) -> Option<String> {
    let c = parent.lie_type.cartan();
    let sub = crate::rootcore::CartanMatrix(
        nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| c.entry(i, j)).collect())
            .collect(),
    );
    let (t, _) = crate::rootcore::classify_cartan(&sub)?;
    if nodes.iter().all(|&i| !parent.is_white(i)) {
        return Some(compact_name(t));
    }
    let mut candidates = forms_of_type(t);
    if t.family() == Family::C && t.rank() == 2 {
        candidates.push(sp_r(4).ok()?);
        candidates.push(sp(1, 1).ok()?);
    }
    let local = |i: usize| nodes.iter().position(|&x| x == i);
    for f in candidates {
        for p in cartan_isomorphisms(&sub, &f.lie_type().cartan(), false) {
            let ok = nodes.iter().enumerate().all(|(k, &i)| {
                f.satake.colors[p[k]] == parent.colors[i]
                    && match parent.arrows[i].and_then(local) {
                        Some(j) => f.satake.arrows[p[k]] == Some(p[j]),
                        None => f.satake.arrows[p[k]].is_none(),
                    }
            });
            if ok {
                return Some(f.id.name.clone());
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su_star_ten() {
        let f = lookup("su*10").unwrap();
        assert_eq!(f.name(), "su*(10)");
        assert_eq!(f.satake.color_string(), "010101010");
        assert_eq!(f.restricted.restricted_type.to_string(), "A4");
        assert_eq!(f.restricted.restriction_map[1], Some(0));
        assert_eq!(f.restricted.restriction_map[7], Some(3));
        assert_eq!(f.real_rank(), 4);
    }

    #[test]
    fn e6_iv_matching() {
        let f = lookup("E6^IV").unwrap();
        let s = &f.satake;
        assert!(matches(&WeightedDynkinDiagram::from_ints(&[1, 0, 0, 0, 1, 0]), s).unwrap());
        assert!(matches(&WeightedDynkinDiagram::zero(6), s).unwrap());
        assert!(!matches(&WeightedDynkinDiagram::from_ints(&[1, 1, 0, 0, 1, 0]), s).unwrap());
        assert!(matches!(
            matches(&WeightedDynkinDiagram::zero(5), s),
            Err(Error::NodeCountMismatch { .. })
        ));
        let cone = b_plus_basis(s);
        assert_eq!(cone.dimension, 1);
        assert_eq!(cone.generators[0], WeightedDynkinDiagram::from_ints(&[1, 0, 0, 0, 1, 0]));
    }

    #[test]
    fn iota_examples() {
        let a4 = "A4".parse().unwrap();
        let w = WeightedDynkinDiagram::from_ints(&[2, 1, 0, 0]);
        assert_eq!(iota_apply(&w, a4).unwrap(), WeightedDynkinDiagram::from_ints(&[0, 0, 1, 2]));
        let e6 = "E6".parse().unwrap();
        let w = WeightedDynkinDiagram::from_ints(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(iota_apply(&w, e6).unwrap(), WeightedDynkinDiagram::from_ints(&[5, 4, 3, 2, 1, 6]));
    }

    #[test]
    fn name_grammar() {
        for (input, canon) in [
            ("sl4R", "sl(4,R)"),
            ("sl(4,R)", "sl(4,R)"),
            ("su*6", "su*(6)"),
            ("sl(3,H)", "su*(6)"),
            ("su33", "su(3,3)"),
            ("su(2,5)", "su(2,5)"),
            ("so5,5", "so(5,5)"),
            ("so(3,3)", "sl(4,R)"),
            ("so(2,4)", "su(2,2)"),
            ("so(1,5)", "su*(4)"),
            ("so*6", "su(1,3)"),
            ("so*8", "so*(8)"),
            ("sp6R", "sp(6,R)"),
            ("sp(1,2)", "sp(1,2)"),
            ("e6^iv", "E6^IV"),
            ("E7VI", "E7^VI"),
            ("g2*", "G2^*"),
            ("su(1,1)", "sl(2,R)"),
        ] {
            assert_eq!(lookup(input).unwrap().name(), canon, "{input}");
        }
        assert!(matches!(lookup("bogus"), Err(Error::UnknownForm(_))));
        assert!(matches!(lookup("su(3,2)"), Err(Error::BadParameters { .. })));
        assert!(matches!(lookup("so(2,2)"), Err(Error::BadParameters { .. })));
        assert!(matches!(lookup("E6^V"), Err(Error::UnknownForm(_))));
    }

    #[test]
    fn small_ranks() {
        assert_eq!(b_plus_basis(&sl_r(4).unwrap().satake).dimension, 2);
        assert_eq!(b_plus_basis(&su_star(8).unwrap().satake).dimension, 2);
        assert_eq!(b_plus_basis(&sp_r(6).unwrap().satake).dimension, 3);
        assert_eq!(b_plus_basis(&so(5, 5).unwrap().satake).dimension, 4);
    }

    #[test]
    fn component_names() {
        let f = su_star(10).unwrap();
        assert_eq!(identify_component(&f.satake, &[0]).as_deref(), Some("su(2)"));
        assert_eq!(identify_component(&f.satake, &[2, 3, 4, 5, 6]).as_deref(), Some("su*(6)"));
        let g = sl_r(4).unwrap();
        assert_eq!(identify_component(&g.satake, &[0]).as_deref(), Some("sl(2,R)"));
    }
}
