use lieprop_wasm::{ahyp, diagram_svg, forms, proper_white};
use serde_json::Value;

#[test]
fn form_list_is_the_catalog() {
    let names: Vec<String> = serde_json::from_str(&forms()).unwrap();
    assert!(names.len() > 20);
    assert!(names.iter().any(|n| n == "E6^IV"));
}

#[test]
fn svg_has_one_circle_per_node() {
    let svg = diagram_svg("E6^II").unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<circle").count(), 6);
    // two arrows
    assert_eq!(svg.matches("<path").count(), 2);
    assert_eq!(diagram_svg("su*10").unwrap().matches("fill=\"#111\" stroke").count(), 5);
    assert!(diagram_svg("nope").is_err());
}

#[test]
fn ahyp_reports_the_cone() {
    let v: Value = serde_json::from_str(&ahyp("E6^IV").unwrap()).unwrap();
    assert_eq!(v["a_hyperbolic_rank"], 1);
    assert_eq!(v["generators"][0], "(1,0,0,0,1,0)");
}

#[test]
fn proper_white_matches_the_walkthrough() {
    let v: Value = serde_json::from_str(&proper_white("su*10", "l2,l3").unwrap()).unwrap();
    assert_eq!(v["admits"], "yes");
    assert!(v["witness"].as_str().unwrap().starts_with("l0"));
    assert!(proper_white("su*10", "l9").is_err());
}
