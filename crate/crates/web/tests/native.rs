use misbound_web::{analyze_json, curves_json, pipeline_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn analyze_k4() {
    let v = parse(analyze_json("C~").unwrap());
    assert_eq!(v["mis"], 4);
    assert_eq!(v["mibs"], 6);
    assert_eq!(v["mibs_ordered_pairs"], 12);
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
    assert_eq!(v["by_size"][1]["eppstein"], 4.0);
}

#[test]
fn analyze_edge_list() {
    let v = parse(analyze_json("5 5\n0 1\n1 2\n2 3\n3 4\n4 0").unwrap());
    assert_eq!(v["mis"], 5);
    assert_eq!(v["mis_sets"].as_array().unwrap().len(), 5);
    assert_eq!(v["truncated"], false);
}

#[test]
fn analyze_rejects_bad_input() {
    assert!(analyze_json("C~!").is_err());
    assert!(analyze_json("").is_err());
    assert!(analyze_json("C~\nBw").is_err());
}

#[test]
fn curve_rows() {
    let v = parse(curves_json(0.4, 11).unwrap());
    let rows = v.as_array().unwrap();
    let quarter = rows.iter().find(|r| r["x"] == 0.25).unwrap();
    assert!((quarter["eppstein"].as_f64().unwrap() - 0.34657359028).abs() < 1e-10);
    assert!(curves_json(2.0, 11).is_err());
}

#[test]
fn pipeline_diamond() {
    let v = parse(pipeline_json("4 5\n0 1\n0 2\n0 3\n1 3\n2 3", "0", "").unwrap());
    assert_eq!(v["census"]["total"], 4);
    assert_eq!(v["census"]["good_count"], 2);
    assert!(pipeline_json("C~", "", "").unwrap_err().contains("K4"));
}
