//! Decision procedures for proper `SL(2,R)`-actions on `G/H`.
//!
//! Everything works in the restricted Cartan space `a` of `g`, written in
//! restricted simple-root coordinates: a vector `x` stands for the element
//! `H` with `λ(H) = (x, λ)`. With this identification `a_h` for a restricted
//! subsystem is the span of its roots.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::linalg::{self, Subspace};
use crate::realforms::{b_plus_basis, identify_component, complex_name, NodeColor, RealForm, SatakeDiagram, WeightedDynkinDiagram};
use crate::rootcore::{RootSystemData, RootVector, Subsystem};
use crate::{nilorbits, q, Error, Result, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Admits {
    Yes,
    No,
    Undetermined,
}

/// Which test produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// `rank_R(h) = 1`: proper iff the a-hyperbolic rank of `g` is at least 2.
    RankOne,
    /// Some restricted root is orthogonal to `a_h`.
    Orthogonality,
    /// The Weyl orbit of `H_φ` avoids `a_h`.
    Okuda,
    /// `a_h ∩ W·a_l = {0}`.
    Kobayashi,
    /// Inherited from a larger subgroup.
    SubgroupClosure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A restricted root orthogonal to `a_h`; `label` is `l0` for `−θ`,
    /// `lk` for the simple root `λ_k`, otherwise the coordinates.
    OrthogonalRoot { root: RootVector, label: String },
    /// A diagram whose restricted vector has an orbit missing `a_h`.
    AvoidedOrbit {
        diagram: WeightedDynkinDiagram,
        #[serde(with = "crate::qser::vec")]
        vector: Vec<Q>,
    },
    /// Two independent ι-fixed matching diagrams.
    ConeGenerators {
        first: WeightedDynkinDiagram,
        second: WeightedDynkinDiagram,
    },
    /// Witness carried over from the verdict for a larger subgroup.
    Inherited { from: String, witness: Box<Witness> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProperVerdict {
    pub admits: Admits,
    pub criterion: Criterion,
    pub witness: Option<Witness>,
    pub note: String,
}

impl ProperVerdict {
    fn new(admits: Admits, criterion: Criterion, witness: Option<Witness>, note: impl Into<String>) -> Self {
        ProperVerdict {
            admits,
            criterion,
            witness,
            note: note.into(),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.admits == Admits::Yes
    }
}

/// How the subgroup `H` is described.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum SubalgebraSpec {
    RankOne,
    RestrictedSubsystem { sub: Subsystem },
    /// White Satake nodes `Σ` of `g` (0-based) defining a parabolic-type `H`.
    SatakeSub { white_nodes: Vec<usize> },
    Subspace {
        #[serde(with = "crate::qser::vec_vec")]
        a_h: Vec<Vec<Q>>,
    },
}

/// Routes a subgroup description to its criterion.
pub fn decide(g: &RealForm, spec: &SubalgebraSpec, cap: usize) -> Result<ProperVerdict> {
    match spec {
        SubalgebraSpec::RankOne => Ok(decide_rank_one(g)),
        SubalgebraSpec::RestrictedSubsystem { sub } => orthogonality_criterion(g, sub),
        SubalgebraSpec::SatakeSub { white_nodes } => white_nodes_criterion(g, white_nodes),
        SubalgebraSpec::Subspace { a_h } => {
            if linalg::rank(a_h) != a_h.len() {
                return Err(Error::LinearlyDependent);
            }
            let space = Subspace::span(g.real_rank(), a_h);
            let v = subspace_orthogonality(g, &space);
            if v.is_yes() {
                return Ok(v);
            }
            okuda_check(g, &space, &principal_restricted_vector(g), cap)
        }
    }
}

// ---------------------------------------------------------------------------
// Rank-one subgroups

fn independent_pair(ds: &[WeightedDynkinDiagram]) -> Option<(WeightedDynkinDiagram, WeightedDynkinDiagram)> {
    for i in 0..ds.len() {
        for j in i + 1..ds.len() {
            if linalg::rank(&[ds[i].weights.clone(), ds[j].weights.clone()]) == 2 {
                return Some((ds[i].clone(), ds[j].clone()));
            }
        }
    }
    None
}

/// Verdict for an `H` of real rank one: proper iff the a-hyperbolic rank of
/// `g` is at least 2. The witness prefers two nilpotent-orbit diagrams from
/// the spanning family and otherwise uses the cone basis.
pub fn decide_rank_one(g: &RealForm) -> ProperVerdict {
    let cone = b_plus_basis(&g.satake);
    if cone.dimension < 2 {
        return ProperVerdict::new(
            Admits::No,
            Criterion::RankOne,
            None,
            format!("a-hyperbolic rank of {} is {}", g.name(), cone.dimension),
        );
    }
    let from_family = nilorbits::spanning_family(g)
        .ok()
        .and_then(|f| independent_pair(&f.diagrams()));
    let (pair, source) = match from_family {
        Some(p) => (p, "nilpotent orbits of the spanning family"),
        None => (
            independent_pair(&cone.generators).expect("cone basis is independent"),
            "cone basis generators",
        ),
    };
    ProperVerdict::new(
        Admits::Yes,
        Criterion::RankOne,
        Some(Witness::ConeGenerators {
            first: pair.0,
            second: pair.1,
        }),
        format!(
            "a-hyperbolic rank of {} is {}; witness from {}",
            g.name(),
            cone.dimension,
            source
        ),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "name", rename_all = "snake_case")]
pub enum ExceptionPredicate {
    RealRankOne,
    Named(String),
}

impl ExceptionPredicate {
    pub fn holds(&self, g: &RealForm) -> bool {
        match self {
            ExceptionPredicate::RealRankOne => g.real_rank() == 1,
            ExceptionPredicate::Named(n) => g.name() == n,
        }
    }
}

/// Forms for which no rank-one `H` gives a proper quotient.
pub fn rank_one_exceptions() -> Vec<ExceptionPredicate> {
    vec![
        ExceptionPredicate::RealRankOne,
        ExceptionPredicate::Named("sl(3,R)".into()),
        ExceptionPredicate::Named("su*(6)".into()),
        ExceptionPredicate::Named("E6^IV".into()),
    ]
}

pub fn is_rank_one_exception(g: &RealForm) -> bool {
    rank_one_exceptions().iter().any(|p| p.holds(g))
}

// ---------------------------------------------------------------------------
// Orthogonality

fn root_label(sys: &RootSystemData, r: &RootVector) -> String {
    if r == sys.highest_root() || *r == sys.highest_root().neg() {
        return "l0".into();
    }
    if let Some(k) = (0..sys.rank()).find(|&k| *r == sys.simple_root(k)) {
        return format!("l{}", k + 1);
    }
    r.to_string()
}

/// Preferred witness among roots: `−θ`, then simple roots, then the
/// highest positive root.
pub(crate) fn pick_witness(sys: &RootSystemData, roots: &BTreeSet<RootVector>) -> Option<(RootVector, String)> {
    let theta = sys.highest_root();
    let neg = theta.neg();
    if roots.contains(&neg) {
        return Some((neg, "l0".into()));
    }
    for k in 0..sys.rank() {
        let s = sys.simple_root(k);
        if roots.contains(&s) {
            return Some((s, format!("l{}", k + 1)));
        }
    }
    roots
        .iter()
        .filter(|r| r.is_positive())
        .max_by_key(|r| r.height())
        .map(|r| (r.clone(), root_label(sys, r)))
}

/// Proper if some restricted root is orthogonal to `R_h`.
pub fn orthogonality_criterion(g: &RealForm, h_sub: &Subsystem) -> Result<ProperVerdict> {
    let sys = g.restricted_system();
    for r in &h_sub.roots {
        sys.check_root(r)?;
    }
    if !sys.is_closed_symmetric(&h_sub.roots) {
        return Err(Error::NotClosedSymmetric);
    }
    let perp = sys.orthogonal_complement(h_sub)?;
    Ok(match pick_witness(&sys, &perp.roots) {
        Some((root, label)) => ProperVerdict::new(
            Admits::Yes,
            Criterion::Orthogonality,
            Some(Witness::OrthogonalRoot { root, label }),
            format!(
                "{} roots of R_g are orthogonal to R_h of type {}",
                perp.len(),
                h_sub.type_label(&sys)
            ),
        ),
        None => ProperVerdict::new(
            Admits::Undetermined,
            Criterion::Orthogonality,
            None,
            format!("no root of R_g is orthogonal to R_h of type {}", h_sub.type_label(&sys)),
        ),
    })
}

/// Same test phrased for an arbitrary `a_h`: proper if `a_h` lies in the
/// wall of some restricted root.
pub fn subspace_orthogonality(g: &RealForm, a_h: &Subspace) -> ProperVerdict {
    let sys = g.restricted_system();
    let perp: BTreeSet<RootVector> = sys
        .roots()
        .into_iter()
        .filter(|r| {
            let rq = r.to_q();
            a_h.basis().iter().all(|b| sys.pairing(&rq, b).is_zero())
        })
        .collect();
    match pick_witness(&sys, &perp) {
        Some((root, label)) => ProperVerdict::new(
            Admits::Yes,
            Criterion::Orthogonality,
            Some(Witness::OrthogonalRoot { root, label }),
            format!("a_h of dimension {} lies in a root wall", a_h.dim()),
        ),
        None => ProperVerdict::new(
            Admits::Undetermined,
            Criterion::Orthogonality,
            None,
            "a_h lies in no root wall",
        ),
    }
}

/// Orthogonality for a parabolic-type `H` given by restricted simple roots
/// (0-based indices into `Π₁^g`).
pub fn white_subset_criterion(g: &RealForm, restricted: &[usize]) -> Result<ProperVerdict> {
    let sys = g.restricted_system();
    let sub = Subsystem::parabolic(&sys, restricted)?;
    orthogonality_criterion(g, &sub)
}

/// Checks that `nodes` is a σ̃-invariant set of white nodes.
pub fn check_white_subset(s: &SatakeDiagram, nodes: &[usize]) -> Result<()> {
    for &i in nodes {
        if i >= s.rank() {
            return Err(Error::IndexOutOfRange { index: i, rank: s.rank() });
        }
        if !s.is_white(i) {
            return Err(Error::NotWhite(i));
        }
        if !nodes.contains(&s.sigma(i)) {
            return Err(Error::NotArrowInvariant);
        }
    }
    Ok(())
}

/// [`white_subset_criterion`] with `Σ` given as Satake nodes.
pub fn white_nodes_criterion(g: &RealForm, nodes: &[usize]) -> Result<ProperVerdict> {
    check_white_subset(&g.satake, nodes)?;
    let restricted: BTreeSet<usize> = nodes
        .iter()
        .filter_map(|&i| g.restricted.restriction_map[i])
        .collect();
    let restricted: Vec<usize> = restricted.into_iter().collect();
    white_subset_criterion(g, &restricted)
}

// ---------------------------------------------------------------------------
// Orbit tests

/// Weight 2 on white nodes, 0 on black nodes.
pub fn principal_orbit_diagram(s: &SatakeDiagram) -> WeightedDynkinDiagram {
    WeightedDynkinDiagram {
        weights: s
            .colors
            .iter()
            .map(|c| if *c == NodeColor::White { q(2) } else { q(0) })
            .collect(),
    }
}

/// The restricted vector with `λ(H) = 2` on every simple restricted root.
pub fn principal_restricted_vector(g: &RealForm) -> Vec<Q> {
    let sys = g.restricted_system();
    sys.vector_from_simple_values(&vec![q(2); sys.rank()])
}

/// Whether the Weyl orbit of `h` contains `−h`.
pub fn is_antipodal(sys: &RootSystemData, h: &[Q]) -> bool {
    let neg: Vec<Q> = h.iter().map(|x| -x).collect();
    sys.dominant_representative(h) == sys.dominant_representative(&neg)
}

/// Proper for the `SL(2,R)` with hyperbolic element `h_phi` iff the Weyl
/// orbit of `h_phi` avoids `a_h`.
pub fn okuda_check(g: &RealForm, a_h: &Subspace, h_phi: &[Q], cap: usize) -> Result<ProperVerdict> {
    let sys = g.restricted_system();
    if h_phi.len() != sys.rank() || a_h.ambient_dim() != sys.rank() {
        return Err(Error::DimensionMismatch {
            expected: sys.rank(),
            got: h_phi.len(),
        });
    }
    if !is_antipodal(&sys, h_phi) {
        return Err(Error::NotAntipodal);
    }
    let dominant = sys.dominant_representative(h_phi);
    let diagram = g.diagram_of_restricted(&dominant);
    let orbit = match sys.weyl_orbit(&dominant, cap) {
        Ok(o) => o,
        Err(Error::OrbitTooLarge { cap }) => {
            return Ok(ProperVerdict::new(
                Admits::Undetermined,
                Criterion::Okuda,
                None,
                format!("orbit of {diagram} exceeds the cap of {cap} points"),
            ))
        }
        Err(e) => return Err(e),
    };
    match orbit.iter().find(|x| a_h.contains(x)) {
        Some(hit) => Ok(ProperVerdict::new(
            Admits::No,
            Criterion::Okuda,
            None,
            format!(
                "orbit of {diagram} meets a_h at ({})",
                hit.iter().map(crate::qser::format_q).collect::<Vec<_>>().join(",")
            ),
        )),
        None => Ok(ProperVerdict::new(
            Admits::Yes,
            Criterion::Okuda,
            Some(Witness::AvoidedOrbit {
                diagram,
                vector: dominant,
            }),
            format!("all {} orbit points avoid a_h", orbit.len()),
        )),
    }
}

/// `a_h ∩ w·a_l = {0}` for every Weyl group element `w`. The images of
/// `a_l` are enumerated as an orbit of subspaces.
pub fn kobayashi_check(g: &RealForm, a_h: &Subspace, a_l: &Subspace, cap: usize) -> Result<bool> {
    let sys = g.restricted_system();
    let n = sys.rank();
    if a_h.ambient_dim() != n || a_l.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: a_l.ambient_dim(),
        });
    }
    if a_l.dim() == 0 || a_h.dim() == 0 {
        return Ok(true);
    }
    let start = a_l.basis().to_vec();
    let mut seen: HashSet<Vec<Vec<Q>>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(basis) = queue.pop_front() {
        if !a_h.meets_trivially(&basis) {
            return Ok(false);
        }
        for i in 0..n {
            let imgs: Vec<Vec<Q>> = basis
                .iter()
                .map(|v| sys.apply_reflection(i, v))
                .collect::<Result<_>>()?;
            let (key, _) = linalg::rref(&imgs);
            if !seen.contains(&key) {
                if seen.len() >= cap {
                    return Err(Error::OrbitTooLarge { cap });
                }
                seen.insert(key.clone());
                queue.push_back(key);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Parabolic surgery

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubComponent {
    /// Nodes of the parent diagram, ascending.
    pub nodes: Vec<usize>,
    pub name: String,
}

/// Satake diagram induced on `Π₀ ∪ Σ`, with its simple components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubDiagram {
    pub parent: SatakeDiagram,
    pub nodes: Vec<usize>,
    pub components: Vec<SubComponent>,
}

impl SubDiagram {
    /// Components joined as a Lie algebra sum, e.g. `su(2)⊕su*(6)`.
    pub fn algebra_name(&self) -> String {
        if self.components.is_empty() {
            return "0".into();
        }
        self.component_names().join("⊕")
    }

    /// Component names, smallest component first.
    pub fn component_names(&self) -> Vec<String> {
        let mut comps: Vec<&SubComponent> = self.components.iter().collect();
        comps.sort_by(|a, b| a.nodes.len().cmp(&b.nodes.len()).then(a.name.cmp(&b.name)));
        comps.into_iter().map(|c| c.name.clone()).collect()
    }
}

/// Deletes the white nodes outside `sigma` together with their edges and arrows.
pub fn parabolic_semisimple_satake(s: &SatakeDiagram, sigma: &[usize]) -> Result<SubDiagram> {
    check_white_subset(s, sigma)?;
    let keep: Vec<usize> = (0..s.rank())
        .filter(|&i| !s.is_white(i) || sigma.contains(&i))
        .collect();
    let c = s.lie_type.cartan();
    let mut seen = vec![false; s.rank()];
    let mut components = Vec::new();
    for &start in &keep {
        if seen[start] {
            continue;
        }
        // connected pieces, then merge pieces joined by arrows
        let mut group = vec![];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            group.push(x);
            let mut next: Vec<usize> = keep
                .iter()
                .copied()
                .filter(|&y| y != x && c.entry(x, y) != 0)
                .collect();
            if let Some(y) = s.arrows[x] {
                next.push(y);
            }
            for y in next {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        group.sort_unstable();
        let name = name_group(s, &group);
        components.push(SubComponent { nodes: group, name });
    }
    Ok(SubDiagram {
        parent: s.clone(),
        nodes: keep,
        components,
    })
}

fn name_group(s: &SatakeDiagram, group: &[usize]) -> String {
    let c = s.lie_type.cartan();
    // split the group into Dynkin-connected pieces
    let mut pieces: Vec<Vec<usize>> = Vec::new();
    let mut seen = BTreeSet::new();
    for &a in group {
        if seen.contains(&a) {
            continue;
        }
        let mut piece = vec![];
        let mut stack = vec![a];
        seen.insert(a);
        while let Some(x) = stack.pop() {
            piece.push(x);
            for &y in group {
                if y != x && c.entry(x, y) != 0 && seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        piece.sort_unstable();
        pieces.push(piece);
    }
    if pieces.len() == 1 {
        return identify_component(s, &pieces[0]).unwrap_or_else(|| "?".into());
    }
    // two isomorphic pieces swapped by arrows: a complex algebra viewed as real
    let sub = crate::rootcore::CartanMatrix(
        pieces[0]
            .iter()
            .map(|&i| pieces[0].iter().map(|&j| c.entry(i, j)).collect())
            .collect(),
    );
    crate::rootcore::classify_cartan(&sub)
        .map(|(t, _)| complex_name(t))
        .unwrap_or_else(|| "?".into())
}

/// A positive verdict for `G/H` passes to `G/Ĥ` for reductive `Ĥ ⊂ H`.
pub fn subgroup_closure(v: &ProperVerdict, from: &str) -> Result<ProperVerdict> {
    if !v.is_yes() {
        return Err(Error::VerdictNotYes);
    }
    let witness = v.witness.clone().map(|w| Witness::Inherited {
        from: from.to_string(),
        witness: Box::new(w),
    });
    Ok(ProperVerdict::new(
        Admits::Yes,
        Criterion::SubgroupClosure,
        witness,
        format!("inherited from {from}"),
    ))
}
