//! Finite crystallographic root systems in simple-root coordinates.
//!
//! Node numbering follows Bourbaki for the classical types, `F4` and `G2`
//! (so `B_n` has its short root last, `C_n` its long root last and `G2` has
//! the short root first). The simply-laced types with a branch node are laid
//! out as "chain first, branch last":
//!
//! * `D_n`: chain `0..n-1`, with nodes `n-2` and `n-1` both attached to `n-3`.
//! * `E_n`: chain `0..n-2`, with the branch node `n-1` attached to chain node 2.
//!
//! `BC_n` is supported as a non-reduced system for restricted roots: it is
//! `B_n` together with the doubles of its short roots.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg;
use crate::{q, Error, Result, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    /// Non-reduced; only valid as a restricted root system.
    BC,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
            Family::BC => "BC",
        };
        f.write_str(s)
    }
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// Cartan type of a simple root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
            Family::BC => rank >= 1,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{family}{rank}")))
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Number of positive roots, from the classical count formulas.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
            Family::BC => n * n + n,
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C | Family::BC => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Cartan matrix with `a[i][j] = 2(α_i, α_j) / (α_j, α_j)`.
    pub fn cartan(self) -> CartanMatrix {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match self.family {
            Family::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
            Family::B | Family::BC => {
                if n >= 2 {
                    (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                    link(n - 2, n - 1, -2, -1);
                }
            }
            Family::C => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -1, -2);
            }
            Family::D => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 3, n - 1, -1, -1);
            }
            Family::E => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(2, n - 1, -1, -1);
            }
            Family::F => {
                link(0, 1, -1, -1);
                link(1, 2, -2, -1);
                link(2, 3, -1, -1);
            }
            Family::G => link(0, 1, -1, -3),
        }
        CartanMatrix(a)
    }

    /// Squared lengths `(α_i, α_i)` of the simple roots; long roots have length² 2.
    fn lengths(self) -> Vec<Q> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![q(2); n],
            Family::B | Family::BC => {
                let mut d = vec![q(2); n];
                d[n - 1] = q(1);
                d
            }
            Family::C => {
                let mut d = vec![q(1); n];
                d[n - 1] = q(2);
                d
            }
            Family::F => vec![q(2), q(2), q(1), q(1)],
            Family::G => vec![Q::new(2, 3), q(2)],
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let upper = s.to_ascii_uppercase();
        let (fam, rest) = if let Some(rest) = upper.strip_prefix("BC") {
            (Family::BC, rest)
        } else {
            let fam = match upper.chars().next() {
                Some('A') => Family::A,
                Some('B') => Family::B,
                Some('C') => Family::C,
                Some('D') => Family::D,
                Some('E') => Family::E,
                Some('F') => Family::F,
                Some('G') => Family::G,
                _ => return Err(Error::InvalidType(s.to_string())),
            };
            (fam, &upper[1..])
        };
        let rank: usize = rest
            .parse()
            .map_err(|_| Error::InvalidType(s.to_string()))?;
        LieType::new(fam, rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanMatrix(pub Vec<Vec<i64>>);

impl CartanMatrix {
    /// Checks the generalized Cartan matrix axioms used in this crate.
    pub fn validate(&self) -> bool {
        let a = &self.0;
        let n = a.len();
        a.iter().all(|r| r.len() == n)
            && (0..n).all(|i| {
                a[i][i] == 2
                    && (0..n).all(|j| {
                        i == j || ((-3..=0).contains(&a[i][j]) && ((a[i][j] == 0) == (a[j][i] == 0)))
                    })
            })
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }
}

/// Integer coordinates of a root in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn to_q(&self) -> Vec<Q> {
        self.0.iter().map(|&c| q(c)).collect()
    }

    pub fn neg(&self) -> RootVector {
        RootVector(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn from_q(v: &[Q]) -> Option<RootVector> {
        v.iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(RootVector)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A Weyl group element stored as a word in simple reflections, applied
/// left to right (`word[0]` acts first).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { word: Vec::new() }
    }

    pub fn apply(&self, sys: &RootSystemData, v: &[Q]) -> Result<Vec<Q>> {
        let mut out = v.to_vec();
        for &i in &self.word {
            out = sys.apply_reflection(i, &out)?;
        }
        Ok(out)
    }

    /// Equality of group elements, tested on a regular point.
    pub fn same_as(&self, other: &WeylElement, sys: &RootSystemData) -> bool {
        let rho = sys.regular_dominant();
        self.apply(sys, &rho).ok() == other.apply(sys, &rho).ok()
    }
}

/// A finite root system with its positive roots and bilinear form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemData {
    lie_type: LieType,
    cartan: CartanMatrix,
    positive_roots: Vec<RootVector>,
    highest_root: RootVector,
    form: Vec<Vec<Q>>,
    // the form scaled to integers by `form_scale`
    form_int: Vec<Vec<i64>>,
    form_scale: i64,
}

/// Builds the root system of `t` by upward root-chain closure.
pub fn build_root_system(t: LieType) -> RootSystemData {
    RootSystemData::build(t)
}

impl RootSystemData {
    pub fn build(t: LieType) -> Self {
        let cartan = t.cartan();
        let d = t.lengths();
        let n = t.rank();
        let form: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| q(cartan.0[i][j]) * d[j] / q(2))
                    .collect()
            })
            .collect();
        let mut positive_roots = chain_closure(&cartan);
        if t.family() == Family::BC {
            let doubles: Vec<RootVector> = positive_roots
                .iter()
                .filter(|r| quad(&form, &r.to_q()) == q(1))
                .map(|r| RootVector(r.0.iter().map(|c| 2 * c).collect()))
                .collect();
            positive_roots.extend(doubles);
        }
        positive_roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
        let highest_root = positive_roots
            .last()
            .cloned()
            .expect("root systems are nonempty");
        let form_scale = form
            .iter()
            .flatten()
            .fold(1i64, |l, x| num_integer::Integer::lcm(&l, x.denom()));
        let form_int = form
            .iter()
            .map(|row| row.iter().map(|x| (x * q(form_scale)).to_integer()).collect())
            .collect();
        RootSystemData {
            lie_type: t,
            cartan,
            positive_roots,
            highest_root,
            form,
            form_int,
            form_scale,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &RootVector {
        &self.highest_root
    }

    pub fn bilinear_form(&self) -> &[Vec<Q>] {
        &self.form
    }

    /// All roots, positive ones first.
    pub fn roots(&self) -> Vec<RootVector> {
        let mut out = self.positive_roots.clone();
        out.extend(self.positive_roots.iter().map(RootVector::neg));
        out
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        RootVector(v)
    }

    pub fn is_root(&self, r: &RootVector) -> bool {
        if r.0.len() != self.rank() {
            return false;
        }
        if r.is_positive() {
            self.positive_roots.binary_search_by(|p| cmp_roots(p, r)).is_ok()
        } else {
            let n = r.neg();
            n.is_positive() && self.positive_roots.binary_search_by(|p| cmp_roots(p, &n)).is_ok()
        }
    }

    /// `(u, v)` under the symmetrized form.
    pub fn pairing(&self, u: &[Q], v: &[Q]) -> Q {
        let mut s = Q::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                s += ui * self.form[i][j] * vj;
            }
        }
        s
    }

    pub fn root_pairing(&self, a: &RootVector, b: &RootVector) -> Q {
        Q::new(self.scaled_pairing(a, b), self.form_scale)
    }

    /// `c·(a, b)` for a fixed positive integer `c` that makes the form
    /// integral. Ratios of these values are ratios of true pairings.
    pub fn scaled_pairing(&self, a: &RootVector, b: &RootVector) -> i64 {
        let mut s = 0;
        for (i, &ai) in a.0.iter().enumerate() {
            if ai != 0 {
                for (j, &bj) in b.0.iter().enumerate() {
                    s += ai * self.form_int[i][j] * bj;
                }
            }
        }
        s
    }

    /// `⟨v, α_i^∨⟩ = 2(v, α_i)/(α_i, α_i)`.
    pub fn coroot_pairing(&self, v: &[Q], i: usize) -> Q {
        v.iter()
            .enumerate()
            .map(|(j, vj)| vj * q(self.cartan.0[j][i]))
            .sum()
    }

    /// `s_i(v) = v − ⟨v, α_i^∨⟩ α_i`.
    pub fn apply_reflection(&self, i: usize, v: &[Q]) -> Result<Vec<Q>> {
        let n = self.rank();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.len(),
            });
        }
        let c = self.coroot_pairing(v, i);
        let mut out = v.to_vec();
        out[i] -= c;
        Ok(out)
    }

    /// Reflection in an arbitrary root `r`.
    pub fn reflect_in(&self, r: &[Q], v: &[Q]) -> Vec<Q> {
        let c = q(2) * self.pairing(v, r) / self.pairing(r, r);
        v.iter().zip(r).map(|(x, y)| x - c * y).collect()
    }

    /// The orbit `W·v`, enumerated by closure under simple reflections.
    pub fn weyl_orbit(&self, v: &[Q], cap: usize) -> Result<Vec<Vec<Q>>> {
        let n = self.rank();
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.len(),
            });
        }
        let mut seen: HashSet<Vec<Q>> = HashSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(v.to_vec());
        order.push(v.to_vec());
        queue.push_back(v.to_vec());
        while let Some(x) = queue.pop_front() {
            for i in 0..n {
                let c = self.coroot_pairing(&x, i);
                if c.is_zero() {
                    continue;
                }
                let mut y = x.clone();
                y[i] -= c;
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::OrbitTooLarge { cap });
                    }
                    seen.insert(y.clone());
                    order.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        order.sort();
        Ok(order)
    }

    pub fn is_dominant(&self, v: &[Q]) -> bool {
        (0..self.rank()).all(|i| !self.coroot_pairing(v, i).is_negative())
    }

    /// The unique point of `W·v` in the closed dominant chamber.
    pub fn dominant_representative(&self, v: &[Q]) -> Vec<Q> {
        let mut x = v.to_vec();
        loop {
            let Some(i) = (0..self.rank()).find(|&i| self.coroot_pairing(&x, i).is_negative())
            else {
                return x;
            };
            let c = self.coroot_pairing(&x, i);
            x[i] -= c;
        }
    }

    /// The point with `⟨x, α_i^∨⟩ = 1` for every simple root.
    pub fn regular_dominant(&self) -> Vec<Q> {
        let n = self.rank();
        let at: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| q(self.cartan.0[j][i])).collect())
            .collect();
        linalg::solve(&at, &vec![q(1); n]).expect("Cartan matrices are invertible")
    }

    /// Vector `x` with `(x, α_i) = w_i` for every simple root.
    pub fn vector_from_simple_values(&self, w: &[Q]) -> Vec<Q> {
        linalg::solve(&self.form, w).expect("the bilinear form is nondegenerate")
    }

    /// Values `(x, α_i)` on the simple roots.
    pub fn simple_values(&self, x: &[Q]) -> Vec<Q> {
        (0..self.rank())
            .map(|i| self.pairing(x, &linalg::unit(self.rank(), i)))
            .collect()
    }

    /// A reduced word for the longest element, found by walking a regular
    /// dominant point to the antidominant chamber.
    pub fn longest_element(&self) -> WeylElement {
        let mut x = self.regular_dominant();
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| self.coroot_pairing(&x, i).is_positive()) {
            let c = self.coroot_pairing(&x, i);
            x[i] -= c;
            word.push(i);
        }
        WeylElement { word }
    }

    /// The permutation `π` with `−w₀(α_i) = α_{π(i)}`.
    pub fn minus_w0_node_map(&self) -> Vec<usize> {
        let w0 = self.longest_element();
        let n = self.rank();
        (0..n)
            .map(|i| {
                let img = w0
                    .apply(self, &linalg::unit(n, i))
                    .expect("indices in range");
                let neg: Vec<Q> = img.iter().map(|x| -x).collect();
                (0..n)
                    .find(|&j| neg == linalg::unit(n, j))
                    .expect("-w0 permutes the simple roots")
            })
            .collect()
    }

    /// Dynkin diagram plus the affine node `λ₀ = −θ`.
    pub fn extended_diagram(&self) -> ExtendedDiagram {
        let n = self.rank();
        let mut nodes = vec![self.highest_root.neg()];
        nodes.extend((0..n).map(|i| self.simple_root(i)));
        let mut edges = Vec::new();
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                let ij = self.root_pairing(&nodes[i], &nodes[j]);
                if !ij.is_zero() {
                    let ii = self.root_pairing(&nodes[i], &nodes[i]);
                    let jj = self.root_pairing(&nodes[j], &nodes[j]);
                    edges.push(DiagramEdge {
                        from: i,
                        to: j,
                        a_ij: (q(2) * ij / jj).to_integer(),
                        a_ji: (q(2) * ij / ii).to_integer(),
                    });
                }
            }
        }
        ExtendedDiagram { nodes, edges }
    }

    /// Roots orthogonal to every member of `sub`.
    pub fn orthogonal_complement(&self, sub: &Subsystem) -> Result<Subsystem> {
        for r in &sub.roots {
            self.check_root(r)?;
        }
        let roots = self
            .roots()
            .into_iter()
            .filter(|a| sub.roots.iter().all(|b| self.scaled_pairing(a, b) == 0))
            .collect();
        Ok(Subsystem { roots })
    }

    pub fn is_closed_symmetric(&self, roots: &BTreeSet<RootVector>) -> bool {
        roots.iter().all(|a| roots.contains(&a.neg()))
            && roots.iter().all(|a| {
                roots.iter().all(|b| {
                    let s = a.add(b);
                    !self.is_root(&s) || roots.contains(&s)
                })
            })
    }

    pub fn check_root(&self, r: &RootVector) -> Result<()> {
        if self.is_root(r) {
            Ok(())
        } else {
            Err(Error::NotARoot {
                system: self.lie_type.to_string(),
                root: r.to_string(),
            })
        }
    }
}

fn cmp_roots(a: &RootVector, b: &RootVector) -> std::cmp::Ordering {
    a.height().cmp(&b.height()).then_with(|| b.cmp(a))
}

fn quad(form: &[Vec<Q>], v: &[Q]) -> Q {
    let mut s = Q::zero();
    for i in 0..v.len() {
        for j in 0..v.len() {
            s += v[i] * form[i][j] * v[j];
        }
    }
    s
}

/// Positive roots of the reduced system with Cartan matrix `a`, built level
/// by level: `β + α_i` is a root iff `p − ⟨β, α_i^∨⟩ > 0`, where `p` is the
/// length of the `α_i`-string below `β`.
fn chain_closure(a: &CartanMatrix) -> Vec<RootVector> {
    let n = a.rank();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut all = Vec::new();
    while !level.is_empty() {
        for r in &level {
            known.insert(r.clone());
        }
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for beta in &level {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * a.0[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        all.extend(level.drain(..).map(RootVector));
        level = next.into_iter().collect();
    }
    all
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramEdge {
    pub from: usize,
    pub to: usize,
    pub a_ij: i64,
    pub a_ji: i64,
}

/// Extended Dynkin diagram. Node 0 is the affine node `λ₀ = −θ`; node `i`
/// for `i ≥ 1` is the simple root `λ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedDiagram {
    pub nodes: Vec<RootVector>,
    pub edges: Vec<DiagramEdge>,
}

impl ExtendedDiagram {
    pub fn neighbors(&self, node: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| {
                if e.from == node {
                    Some(e.to)
                } else if e.to == node {
                    Some(e.from)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.neighbors(a).contains(&b)
    }
}

/// A symmetric, closed set of roots inside an ambient root system.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subsystem {
    pub roots: BTreeSet<RootVector>,
}

impl Subsystem {
    pub fn empty() -> Self {
        Subsystem::default()
    }

    /// Validates that `roots` are roots of `sys` and form a closed symmetric set.
    pub fn new(sys: &RootSystemData, roots: BTreeSet<RootVector>) -> Result<Self> {
        for r in &roots {
            sys.check_root(r)?;
        }
        if !sys.is_closed_symmetric(&roots) {
            return Err(Error::NotClosedSymmetric);
        }
        Ok(Subsystem { roots })
    }

    /// Smallest closed symmetric subsystem containing `gens`.
    pub fn generated(sys: &RootSystemData, gens: &[RootVector]) -> Result<Self> {
        for g in gens {
            sys.check_root(g)?;
        }
        let mut roots: BTreeSet<RootVector> = BTreeSet::new();
        let mut frontier: Vec<RootVector> = Vec::new();
        for g in gens {
            for r in [g.clone(), g.neg()] {
                if roots.insert(r.clone()) {
                    frontier.push(r);
                }
            }
        }
        while let Some(a) = frontier.pop() {
            let current: Vec<RootVector> = roots.iter().cloned().collect();
            for b in current {
                let aq = a.to_q();
                let bq = b.to_q();
                let mut candidates = vec![a.add(&b)];
                if let Some(r) = RootVector::from_q(&sys.reflect_in(&aq, &bq)) {
                    candidates.push(r);
                }
                for c in candidates {
                    if sys.is_root(&c) && roots.insert(c.clone()) {
                        frontier.push(c);
                    }
                }
            }
        }
        Ok(Subsystem { roots })
    }

    /// Roots supported on the simple roots with the given indices.
    pub fn parabolic(sys: &RootSystemData, simple: &[usize]) -> Result<Self> {
        for &i in simple {
            if i >= sys.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    rank: sys.rank(),
                });
            }
        }
        let roots = sys
            .roots()
            .into_iter()
            .filter(|r| {
                r.0.iter()
                    .enumerate()
                    .all(|(k, &c)| c == 0 || simple.contains(&k))
            })
            .collect();
        Ok(Subsystem { roots })
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: &RootVector) -> bool {
        self.roots.contains(r)
    }

    /// Simple roots of the subsystem relative to the ambient positivity.
    pub fn base(&self) -> Vec<RootVector> {
        let pos: Vec<&RootVector> = self.roots.iter().filter(|r| r.is_positive()).collect();
        let posset: BTreeSet<&RootVector> = pos.iter().copied().collect();
        pos.iter()
            .filter(|r| {
                !pos.iter().any(|a| {
                    let rest = RootVector(r.0.iter().zip(&a.0).map(|(x, y)| x - y).collect());
                    rest.is_positive() && posset.contains(&rest)
                })
            })
            .map(|r| (*r).clone())
            .collect()
    }

    /// Irreducible components as `(type, simple roots)` pairs, ordered by
    /// descending rank then type.
    pub fn components(&self, sys: &RootSystemData) -> Vec<(LieType, Vec<RootVector>)> {
        let base = self.base();
        let n = base.len();
        let bq: Vec<Vec<Q>> = base.iter().map(RootVector::to_q).collect();
        let mut comp = vec![usize::MAX; n];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = groups.len();
            let mut stack = vec![s];
            comp[s] = id;
            let mut members = vec![];
            while let Some(x) = stack.pop() {
                members.push(x);
                for y in 0..n {
                    if comp[y] == usize::MAX && !sys.pairing(&bq[x], &bq[y]).is_zero() {
                        comp[y] = id;
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            groups.push(members);
        }
        let mut out: Vec<(LieType, Vec<RootVector>)> = groups
            .into_iter()
            .map(|members| {
                let cartan: Vec<Vec<i64>> = members
                    .iter()
                    .map(|&i| {
                        members
                            .iter()
                            .map(|&j| {
                                (q(2) * sys.pairing(&bq[i], &bq[j]) / sys.pairing(&bq[j], &bq[j]))
                                    .to_integer()
                            })
                            .collect()
                    })
                    .collect();
                let roots: Vec<RootVector> = members.iter().map(|&i| base[i].clone()).collect();
                let doubled = roots.iter().any(|r| {
                    let d = RootVector(r.0.iter().map(|c| 2 * c).collect());
                    self.roots.contains(&d)
                });
                let (t, perm) = classify_cartan(&CartanMatrix(cartan))
                    .expect("components of a root subsystem are finite type");
                let mut ordered = vec![RootVector(vec![]); roots.len()];
                for (k, &p) in perm.iter().enumerate() {
                    ordered[p] = roots[k].clone();
                }
                let t = if doubled {
                    LieType::new(Family::BC, t.rank()).unwrap_or(t)
                } else {
                    t
                };
                (t, ordered)
            })
            .collect();
        out.sort_by(|a, b| b.0.rank().cmp(&a.0.rank()).then(a.0.cmp(&b.0)).then(a.1.cmp(&b.1)));
        out
    }

    /// Type label such as `A2+A1`, or `0` for the empty subsystem.
    pub fn type_label(&self, sys: &RootSystemData) -> String {
        let comps = self.components(sys);
        if comps.is_empty() {
            return "0".to_string();
        }
        comps
            .iter()
            .map(|(t, _)| t.to_string())
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Identifies a connected Cartan matrix. Returns the type and a map from the
/// input nodes to standard node indices.
pub fn classify_cartan(c: &CartanMatrix) -> Option<(LieType, Vec<usize>)> {
    let n = c.rank();
    let candidates: &[Family] = &[
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];
    for &fam in candidates {
        let Ok(t) = LieType::new(fam, n) else {
            continue;
        };
        if let Some(p) = cartan_isomorphisms(c, &t.cartan(), true).into_iter().next() {
            return Some((t, p));
        }
    }
    None
}

/// All node bijections `p` with `target[p(i)][p(j)] = source[i][j]`.
pub fn cartan_isomorphisms(
    source: &CartanMatrix,
    target: &CartanMatrix,
    first_only: bool,
) -> Vec<Vec<usize>> {
    let n = source.rank();
    if target.rank() != n {
        return vec![];
    }
    let degree = |m: &CartanMatrix, i: usize| (0..n).filter(|&j| j != i && m.0[i][j] != 0).count();
    let mut out = Vec::new();
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        n: usize,
        s: &CartanMatrix,
        t: &CartanMatrix,
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
        deg: &dyn Fn(&CartanMatrix, usize) -> usize,
        out: &mut Vec<Vec<usize>>,
        first_only: bool,
    ) {
        if first_only && !out.is_empty() {
            return;
        }
        if k == n {
            out.push(assign.clone());
            return;
        }
        for cand in 0..n {
            if used[cand] || deg(s, k) != deg(t, cand) {
                continue;
            }
            let ok = (0..k).all(|j| {
                s.0[k][j] == t.0[cand][assign[j]] && s.0[j][k] == t.0[assign[j]][cand]
            });
            if !ok {
                continue;
            }
            assign[k] = cand;
            used[cand] = true;
            go(k + 1, n, s, t, assign, used, deg, out, first_only);
            used[cand] = false;
            assign[k] = usize::MAX;
        }
    }
    go(
        0,
        n,
        source,
        target,
        &mut assign,
        &mut used,
        &degree,
        &mut out,
        first_only,
    );
    out
}

/// `−w₀` as a node permutation of the standard diagram of `t`.
pub fn minus_w0_node_map(t: LieType) -> Vec<usize> {
    RootSystemData::build(t).minus_w0_node_map()
}

/// Orthogonal complement as a free function mirroring the method.
pub fn orthogonal_complement(sys: &RootSystemData, sub: &Subsystem) -> Result<Subsystem> {
    sys.orthogonal_complement(sub)
}

pub fn is_closed_symmetric(sys: &RootSystemData, roots: &BTreeSet<RootVector>) -> bool {
    sys.is_closed_symmetric(roots)
}

pub fn weyl_orbit(sys: &RootSystemData, v: &[Q], cap: usize) -> Result<Vec<Vec<Q>>> {
    sys.weyl_orbit(v, cap)
}

pub fn apply_reflection(sys: &RootSystemData, i: usize, v: &[Q]) -> Result<Vec<Q>> {
    sys.apply_reflection(i, v)
}

/// Weyl group elements enumerated as images of a regular point, each with a word.
pub fn weyl_elements(sys: &RootSystemData, cap: usize) -> Result<Vec<WeylElement>> {
    let rho = sys.regular_dominant();
    let n = sys.rank();
    let mut seen: BTreeMap<Vec<Q>, WeylElement> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(rho.clone(), WeylElement::identity());
    queue.push_back((rho, WeylElement::identity()));
    while let Some((x, w)) = queue.pop_front() {
        for i in 0..n {
            let y = sys.apply_reflection(i, &x)?;
            if !seen.contains_key(&y) {
                if seen.len() >= cap {
                    return Err(Error::OrbitTooLarge { cap });
                }
                let mut word = w.word.clone();
                word.push(i);
                let e = WeylElement { word };
                seen.insert(y.clone(), e.clone());
                queue.push_back((y, e));
            }
        }
    }
    Ok(seen.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> LieType {
        s.parse().unwrap()
    }

    fn qv(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn type_validation() {
        assert!(LieType::new(Family::D, 3).is_err());
        assert!(LieType::new(Family::D, 2).is_err());
        assert!(LieType::new(Family::B, 1).is_err());
        assert!(LieType::new(Family::E, 9).is_err());
        assert!(LieType::new(Family::F, 3).is_err());
        assert!(LieType::new(Family::A, 0).is_err());
        assert!("G2".parse::<LieType>().is_ok());
        assert!("BC2".parse::<LieType>().is_ok());
        assert!("X4".parse::<LieType>().is_err());
    }

    #[test]
    fn small_root_systems() {
        let a3 = build_root_system(t("A3"));
        assert_eq!(a3.positive_roots().len(), 6);
        let a1 = build_root_system(t("A1"));
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(a1.highest_root(), &RootVector(vec![1]));
        let g2 = build_root_system(t("G2"));
        assert_eq!(g2.positive_roots().len(), 6);
        assert_eq!(g2.highest_root(), &RootVector(vec![3, 2]));
        let c2 = build_root_system(t("C2"));
        assert_eq!(c2.highest_root(), &RootVector(vec![2, 1]));
    }

    #[test]
    fn bc_system() {
        let bc2 = build_root_system(t("BC2"));
        assert_eq!(bc2.positive_roots().len(), 6);
        assert_eq!(bc2.highest_root(), &RootVector(vec![2, 2]));
        let bc1 = build_root_system(t("BC1"));
        assert_eq!(bc1.positive_roots().len(), 2);
    }

    #[test]
    fn reflections() {
        let a2 = build_root_system(t("A2"));
        assert_eq!(a2.apply_reflection(0, &qv(&[1, 0])).unwrap(), qv(&[-1, 0]));
        assert_eq!(a2.apply_reflection(0, &qv(&[0, 1])).unwrap(), qv(&[1, 1]));
        assert_eq!(a2.apply_reflection(1, &qv(&[0, 0])).unwrap(), qv(&[0, 0]));
        let a1 = build_root_system(t("A1"));
        assert_eq!(a1.apply_reflection(0, &qv(&[1])).unwrap(), qv(&[-1]));
        assert!(matches!(
            a2.apply_reflection(2, &qv(&[1, 0])),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn orbits() {
        let a2 = build_root_system(t("A2"));
        let rho = a2.vector_from_simple_values(&qv(&[1, 1]));
        assert_eq!(a2.weyl_orbit(&rho, 100).unwrap().len(), 6);
        assert_eq!(a2.weyl_orbit(&qv(&[0, 0]), 100).unwrap(), vec![qv(&[0, 0])]);
        let a1 = build_root_system(t("A1"));
        assert_eq!(
            a1.weyl_orbit(&qv(&[1]), 10).unwrap(),
            vec![qv(&[-1]), qv(&[1])]
        );
        assert_eq!(
            a2.weyl_orbit(&rho, 3),
            Err(Error::OrbitTooLarge { cap: 3 })
        );
    }

    #[test]
    fn minus_w0() {
        assert_eq!(minus_w0_node_map(t("A4")), vec![3, 2, 1, 0]);
        assert_eq!(minus_w0_node_map(t("E6")), vec![4, 3, 2, 1, 0, 5]);
        assert_eq!(minus_w0_node_map(t("B3")), vec![0, 1, 2]);
        assert_eq!(minus_w0_node_map(t("D5")), vec![0, 1, 2, 4, 3]);
        assert_eq!(minus_w0_node_map(t("D4")), vec![0, 1, 2, 3]);
        assert_eq!(minus_w0_node_map(t("E7")), (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn extended_diagrams() {
        let a4 = build_root_system(t("A4"));
        let ed = a4.extended_diagram();
        assert_eq!(ed.neighbors(0), vec![1, 4]);
        assert_eq!(ed.edges.len(), 5);
        let a1 = build_root_system(t("A1")).extended_diagram();
        assert_eq!(a1.edges.len(), 1);
        assert_eq!((a1.edges[0].a_ij, a1.edges[0].a_ji), (-2, -2));
        let c2 = build_root_system(t("C2")).extended_diagram();
        assert_eq!(c2.neighbors(0), vec![1]);
        assert_eq!(c2.neighbors(1), vec![0, 2]);
        let e = &c2.edges[0];
        assert_eq!((e.from, e.to, e.a_ij, e.a_ji), (0, 1, -2, -1));
    }

    #[test]
    fn complements_and_closure() {
        let a4 = build_root_system(t("A4"));
        let sub = Subsystem::parabolic(&a4, &[1, 2]).unwrap();
        let perp = a4.orthogonal_complement(&sub).unwrap();
        assert!(perp.contains(a4.highest_root()));
        let all = a4.orthogonal_complement(&Subsystem::empty()).unwrap();
        assert_eq!(all.len(), 20);
        let a2 = build_root_system(t("A2"));
        let whole = Subsystem::parabolic(&a2, &[0, 1]).unwrap();
        assert!(a2.orthogonal_complement(&whole).unwrap().is_empty());
        let bad = Subsystem {
            roots: [RootVector(vec![2, 0])].into_iter().collect(),
        };
        assert!(matches!(
            a2.orthogonal_complement(&bad),
            Err(Error::NotARoot { .. })
        ));

        let pm_a1: BTreeSet<_> = [RootVector(vec![1, 0]), RootVector(vec![-1, 0])].into();
        assert!(a2.is_closed_symmetric(&pm_a1));
        let simple_only: BTreeSet<_> = [
            RootVector(vec![1, 0]),
            RootVector(vec![0, 1]),
            RootVector(vec![-1, 0]),
            RootVector(vec![0, -1]),
        ]
        .into();
        assert!(!a2.is_closed_symmetric(&simple_only));
        assert!(a2.is_closed_symmetric(&BTreeSet::new()));
    }

    #[test]
    fn generated_subsystem_closes() {
        let b2 = build_root_system(t("B2"));
        // two orthogonal short roots generate all of B2 once sums are closed
        let short = [RootVector(vec![0, 1]), RootVector(vec![1, 1])];
        let g = Subsystem::generated(&b2, &short).unwrap();
        assert_eq!(g.len(), 8);
        assert_eq!(g.type_label(&b2), "B2");
    }

    #[test]
    fn component_labels() {
        let a5 = build_root_system(t("A5"));
        let s = Subsystem::parabolic(&a5, &[0, 1, 3]).unwrap();
        assert_eq!(s.type_label(&a5), "A2+A1");
        assert_eq!(Subsystem::empty().type_label(&a5), "0");
        let e6 = build_root_system(t("E6"));
        let d4 = Subsystem::parabolic(&e6, &[1, 2, 3, 5]).unwrap();
        assert_eq!(d4.type_label(&e6), "D4");
    }

    #[test]
    fn classify_recognizes_reversed_chain() {
        // C3 with nodes listed in reverse order
        let rev = CartanMatrix(vec![vec![2, -2, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        let (ty, perm) = classify_cartan(&rev).unwrap();
        assert_eq!(ty, t("C3"));
        assert_eq!(perm, vec![2, 1, 0]);
    }

    #[test]
    fn weyl_elements_count() {
        let b2 = build_root_system(t("B2"));
        let els = weyl_elements(&b2, 1000).unwrap();
        assert_eq!(els.len(), 8);
        let w0 = b2.longest_element();
        assert_eq!(w0.word.len(), 4);
        assert!(!w0.same_as(&WeylElement::identity(), &b2));
        assert!(WeylElement { word: vec![0, 0] }.same_as(&WeylElement::identity(), &b2));
    }
}
