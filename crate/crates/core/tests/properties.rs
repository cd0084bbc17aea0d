use std::collections::BTreeSet;

use lieprop_core::examples_gen::{parabolic_procedure, split_case_generate, ExampleRecord};
use lieprop_core::proper::{decide_rank_one, ProperVerdict};
use lieprop_core::realforms::{catalog, iota_apply, matches, parse_record, WeightedDynkinDiagram};
use lieprop_core::rootcore::{minus_w0_node_map, LieType, RootSystemData, RootVector, Subsystem};
use lieprop_core::{q, Q};
use proptest::prelude::*;

const TYPES: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "F4", "BC2", "BC3",
];
const SMALL: &[&str] = &["A1", "A2", "A3", "B2", "B3", "C3", "G2", "BC2"];

fn ty(s: &str) -> LieType {
    s.parse().unwrap()
}

fn qs(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

fn type_and_vector(types: &'static [&'static str]) -> impl Strategy<Value = (LieType, Vec<Q>)> {
    prop::sample::select(types).prop_flat_map(|name| {
        let t = ty(name);
        prop::collection::vec(-3i64..=3, t.rank()).prop_map(move |v| (t, qs(&v)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_are_involutions((t, v) in type_and_vector(TYPES), i in 0usize..8) {
        let sys = RootSystemData::build(t);
        let i = i % t.rank();
        let once = sys.apply_reflection(i, &v).unwrap();
        prop_assert_eq!(sys.apply_reflection(i, &once).unwrap(), v.clone());
        // reflections preserve the form
        prop_assert_eq!(sys.pairing(&once, &once), sys.pairing(&v, &v));
    }

    #[test]
    fn orbit_sizes_divide_weyl_order((t, v) in type_and_vector(SMALL)) {
        let sys = RootSystemData::build(t);
        let orbit = sys.weyl_orbit(&v, 100_000).unwrap();
        prop_assert_eq!(t.weyl_order() % orbit.len() as u64, 0);
        prop_assert_eq!(orbit.iter().filter(|x| sys.is_dominant(x)).count(), 1);
        prop_assert!(orbit.contains(&sys.dominant_representative(&v)));
    }

    #[test]
    fn complements_are_closed(name in prop::sample::select(TYPES), picks in prop::collection::vec(0usize..1000, 1..3)) {
        let sys = RootSystemData::build(ty(name));
        let roots = sys.roots();
        let gens: Vec<RootVector> = picks.iter().map(|&k| roots[k % roots.len()].clone()).collect();
        let sub = Subsystem::generated(&sys, &gens).unwrap();
        prop_assert!(sys.is_closed_symmetric(&sub.roots));
        let perp = sys.orthogonal_complement(&sub).unwrap();
        prop_assert!(sys.is_closed_symmetric(&perp.roots));
        for a in &perp.roots {
            for b in &sub.roots {
                prop_assert_eq!(sys.root_pairing(a, b), q(0));
            }
        }
    }

    #[test]
    fn iota_is_an_involution_preserving_matching(idx in 0usize..1000, weights in prop::collection::vec(0i64..=2, 8)) {
        let forms = catalog();
        let f = &forms[idx % forms.len()];
        let t = f.lie_type();
        let w = WeightedDynkinDiagram::from_ints(&weights[..t.rank()]);
        let iw = iota_apply(&w, t).unwrap();
        prop_assert_eq!(iota_apply(&iw, t).unwrap(), w.clone());
        prop_assert_eq!(matches(&w, &f.satake).unwrap(), matches(&iw, &f.satake).unwrap());
    }
}

#[test]
fn minus_w0_is_a_diagram_automorphism() {
    for name in ["A1", "A4", "A7", "B3", "C4", "D4", "D5", "D7", "E6", "E7", "E8", "F4", "G2", "BC3"] {
        let t = ty(name);
        let c = t.cartan();
        let p = minus_w0_node_map(t);
        let mut sorted = p.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..t.rank()).collect::<Vec<_>>(), "{name}");
        for i in 0..t.rank() {
            assert_eq!(p[p[i]], i, "{name}");
            for j in 0..t.rank() {
                assert_eq!(c.entry(p[i], p[j]), c.entry(i, j), "{name}");
            }
        }
    }
}

#[test]
fn catalog_records_round_trip() {
    for f in catalog() {
        let line = f.to_record();
        let back = parse_record(&line).unwrap_or_else(|e| panic!("{}: {e}", f.name()));
        assert_eq!(&back, f, "{line}");
    }
}

#[test]
fn verdicts_and_records_round_trip_through_json() {
    for name in ["sl(5,R)", "E6^I", "su*(8)", "so(3,5)"] {
        let f = lieprop_core::realforms::lookup(name).unwrap();
        let v = decide_rank_one(&f);
        let text = serde_json::to_string(&v).unwrap();
        let back: ProperVerdict = serde_json::from_str(&text).unwrap();
        assert_eq!(back, v);
        for r in parabolic_procedure(&f) {
            let text = serde_json::to_string(&r).unwrap();
            let back: ExampleRecord = serde_json::from_str(&text).unwrap();
            assert_eq!(back, r);
        }
    }
}

#[test]
fn witnesses_are_orthogonal_to_their_subsystems() {
    for name in ["sl(5,R)", "so(4,5)", "sp(6,R)", "G2^*", "F4^I", "su*(10)", "su(2,4)", "E6^II"] {
        let f = lieprop_core::realforms::lookup(name).unwrap();
        let sys = f.restricted_system();
        let mut recs = parabolic_procedure(&f);
        if f.is_split() {
            recs.extend(split_case_generate(&f, 1).unwrap());
        }
        assert!(!recs.is_empty(), "{name}");
        for r in &recs {
            let gamma = r.witness_root().expect("records carry a root witness");
            let sub = Subsystem::generated(&sys, &r.generators).unwrap();
            for a in &sub.roots {
                assert_eq!(sys.root_pairing(gamma, a), q(0), "{name}: {}", r.h);
            }
            assert!(r.reverify().unwrap().is_yes(), "{name}: {}", r.h);
        }
    }
}

/// Parabolic split records are closed under taking sub-diagrams: a subset
/// of the simple roots of a certified subsystem is certified as well.
#[test]
fn split_records_closed_under_subgroups() {
    for name in ["sl(6,R)", "so(4,5)", "sp(8,R)", "F4^I"] {
        let f = lieprop_core::realforms::lookup(name).unwrap();
        let sys = f.restricted_system();
        let recs = split_case_generate(&f, 1).unwrap();
        let have: BTreeSet<BTreeSet<RootVector>> = recs
            .iter()
            .map(|r| Subsystem::generated(&sys, &r.generators).unwrap().roots)
            .collect();
        for r in &recs {
            let simple: Vec<usize> = (0..sys.rank()).filter(|&k| r.generators.contains(&sys.simple_root(k))).collect();
            if simple.len() != r.generators.len() {
                continue;
            }
            for drop in 0..simple.len() {
                let smaller: Vec<usize> = simple.iter().copied().filter(|&k| k != simple[drop]).collect();
                let sub = Subsystem::parabolic(&sys, &smaller).unwrap();
                assert!(have.contains(&sub.roots), "{name}: {} minus one node", r.h);
            }
        }
    }
}
