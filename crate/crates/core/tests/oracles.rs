//! Independent recomputations of derived values.
//!
//! Each oracle takes a different route from the library code: restricted
//! root systems by projecting roots onto `a*`, a-hyperbolic ranks from the
//! longest Weyl element, orbit dimensions from partition formulas.

use std::collections::{BTreeMap, BTreeSet};

use lieprop_core::linalg;
use lieprop_core::nilorbits::{enumerate_orbits, weighted_dynkin, PartitionLabel};
use lieprop_core::realforms::{a_hyperbolic_rank, catalog, RealForm};
use lieprop_core::rootcore::{Family, LieType, RootSystemData, RootVector};
use lieprop_core::{q, Q};
use sha2::{Digest, Sha256};

fn ty(s: &str) -> LieType {
    s.parse().unwrap()
}

/// Coordinates of the orthogonal projection of `v` onto span(`basis`).
fn project(sys: &RootSystemData, basis: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    let gram: Vec<Vec<Q>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| sys.pairing(a, b)).collect())
        .collect();
    let rhs: Vec<Q> = basis.iter().map(|b| sys.pairing(v, b)).collect();
    linalg::solve(&gram, &rhs).expect("gram matrix is invertible")
}

fn inner(sys: &RootSystemData, basis: &[Vec<Q>], a: &[Q], b: &[Q]) -> Q {
    let mut s = q(0);
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            s += a[i] * b[j] * sys.pairing(&basis[i], &basis[j]);
        }
    }
    s
}

/// Restricted roots as projections of roots onto the span of
/// `Σ_{i ∈ orbit} ω_i` over white arrow orbits. Returns the positive
/// projections keyed by coordinates, and the projection of each white node.
fn projected(f: &RealForm) -> (BTreeSet<Vec<Q>>, BTreeMap<usize, Vec<Q>>, Vec<Vec<Q>>, RootSystemData) {
    let sys = RootSystemData::build(f.lie_type());
    let n = sys.rank();
    let basis: Vec<Vec<Q>> = f
        .satake
        .white_orbits()
        .iter()
        .map(|orbit| {
            // Σ ω_i over the orbit; arrows join roots of equal length
            let mut w = vec![q(0); n];
            for &i in orbit {
                let mut e = vec![q(0); n];
                e[i] = q(1);
                let omega = sys.vector_from_simple_values(&e);
                let d = sys.pairing(&sys.simple_root(i).to_q(), &sys.simple_root(i).to_q()) / q(2);
                for k in 0..n {
                    w[k] += omega[k] * d;
                }
            }
            w
        })
        .collect();
    let mut pos = BTreeSet::new();
    for r in sys.positive_roots() {
        let c = project(&sys, &basis, &r.to_q());
        if !linalg::is_zero(&c) {
            pos.insert(c);
        }
    }
    let whites = f
        .satake
        .white_nodes()
        .into_iter()
        .map(|i| (i, project(&sys, &basis, &sys.simple_root(i).to_q())))
        .collect();
    (pos, whites, basis, sys)
}

#[test]
fn restricted_types_match_projection() {
    for f in catalog() {
        let (pos, whites, basis, sys) = projected(f);
        let t = f.restricted.restricted_type;
        let expected_count = match t.family() {
            Family::BC => t.rank() * t.rank() + t.rank(),
            _ => t.positive_root_count(),
        };
        assert_eq!(pos.len(), expected_count, "{}: positive restricted roots", f.name());

        // simple restricted roots in catalog order
        let r = t.rank();
        let mut simple: Vec<Option<Vec<Q>>> = vec![None; r];
        for (i, c) in &whites {
            let k = f.restricted.restriction_map[*i].expect("white nodes restrict");
            match &simple[k] {
                Some(prev) => assert_eq!(prev, c, "{}: nodes over λ{}", f.name(), k + 1),
                None => simple[k] = Some(c.clone()),
            }
        }
        let simple: Vec<Vec<Q>> = simple.into_iter().map(|s| s.expect("every λ has a preimage")).collect();
        for s in &simple {
            let indecomposable = !pos.iter().any(|a| {
                let rest: Vec<Q> = s.iter().zip(a).map(|(x, y)| x - y).collect();
                pos.contains(&rest)
            });
            assert!(indecomposable, "{}: image of a white node is not simple", f.name());
        }
        let cartan: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let v = q(2) * inner(&sys, &basis, &simple[i], &simple[j])
                            / inner(&sys, &basis, &simple[j], &simple[j]);
                        assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();
        let reduced = match t.family() {
            Family::BC => LieType::new(Family::B, r).unwrap_or(ty("A1")),
            _ => t,
        };
        let want = if t.family() == Family::BC && r == 1 { vec![vec![2]] } else { reduced.cartan().0 };
        assert_eq!(cartan, want, "{}: restricted Cartan matrix", f.name());
    }
}

#[test]
fn a_hyperbolic_rank_from_longest_element() {
    for f in catalog() {
        let sys = f.restricted_system();
        let n = sys.rank();
        let w0 = sys.longest_element();
        let cols: Vec<Vec<Q>> = (0..n).map(|k| w0.apply(&sys, &linalg::unit(n, k)).unwrap()).collect();
        // rows of M + I where M has the images as columns
        let m_plus_i: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| cols[j][i] + if i == j { q(1) } else { q(0) }).collect())
            .collect();
        let fixed = linalg::nullspace(&m_plus_i, n).len();
        assert_eq!(a_hyperbolic_rank(&f.id).unwrap(), fixed, "{}", f.name());
    }
}

fn dual(parts: &[usize]) -> Vec<usize> {
    let max = parts.first().copied().unwrap_or(0);
    (1..=max).map(|i| parts.iter().filter(|&&p| p >= i).count()).collect()
}

/// Orbit dimension from the partition.
fn dim_from_partition(p: &PartitionLabel, t: LieType) -> i64 {
    let n = t.rank() as i64;
    let sq: i64 = dual(&p.parts).iter().map(|&x| (x * x) as i64).sum();
    let odd = p.parts.iter().filter(|&&x| x % 2 == 1).count() as i64;
    match t.family() {
        Family::A => (n + 1) * (n + 1) - sq,
        Family::B => 2 * n * n + n - (sq - odd) / 2,
        Family::C => 2 * n * n + n - (sq + odd) / 2,
        Family::D => 2 * n * n - n - (sq - odd) / 2,
        _ => unreachable!(),
    }
}

/// Orbit dimension from the weighted diagram: `|R| − #{α(h) ∈ {0, 1}}`.
fn dim_from_diagram(p: &PartitionLabel, t: LieType) -> i64 {
    let w = weighted_dynkin(p, t).unwrap();
    let sys = RootSystemData::build(t);
    let mut count = 0;
    for r in sys.roots() {
        let v: Q = r.0.iter().zip(&w.weights).map(|(c, x)| q(*c) * x).sum();
        if v != q(0) && v != q(1) {
            count += 1;
        }
    }
    count
}

#[test]
fn orbit_dimensions_agree() {
    for name in ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C2", "C3", "C4", "C5", "D4", "D5", "D6"] {
        let t = ty(name);
        let n = lieprop_core::nilorbits::ambient_dimension(t).unwrap();
        let orbits = enumerate_orbits(t, n).unwrap();
        for p in &orbits {
            assert_eq!(dim_from_partition(p, t), dim_from_diagram(p, t), "{name} {p}");
        }
        // distinct orbits have distinct diagrams
        let diagrams: BTreeSet<_> = orbits.iter().map(|p| weighted_dynkin(p, t).unwrap().weights).collect();
        assert_eq!(diagrams.len(), orbits.len(), "{name}");
    }
}

#[test]
fn g2_long_roots_have_orthogonal_partners() {
    let sys = RootSystemData::build(ty("G2"));
    let roots = sys.roots();
    assert_eq!(roots.len(), 12);
    let norm = |r: &RootVector| sys.root_pairing(r, r);
    let long = roots.iter().map(norm).max().unwrap();
    for a in roots.iter().filter(|r| norm(r) == long) {
        let partners = roots.iter().filter(|b| sys.root_pairing(a, b) == q(0)).count();
        assert_eq!(partners, 2, "{a}");
    }
}

#[test]
fn root_counts_and_weyl_orders() {
    let known = [
        ("E6", 36, 51_840u64),
        ("E7", 63, 2_903_040),
        ("E8", 120, 696_729_600),
        ("F4", 24, 1152),
        ("G2", 6, 12),
        ("B4", 16, 384),
        ("C4", 16, 384),
        ("D5", 20, 1920),
        ("A6", 21, 5040),
    ];
    for (name, pos, order) in known {
        let t = ty(name);
        assert_eq!(RootSystemData::build(t).positive_roots().len(), pos, "{name}");
        assert_eq!(t.weyl_order(), order, "{name}");
    }
}

#[test]
fn catalog_data_is_pinned() {
    let text = include_str!("../data/catalog.txt");
    let digest = Sha256::digest(text.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    assert_eq!(hex, "e9056a0fe7a47d6f808fcffc5f3d3b5dcdc10543927ee2efc48ad6fffba4c5a6");
}
