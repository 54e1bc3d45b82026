use cyclocode_web::{mask_json, parameters_json, partition_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn partition_labels_every_residue() {
    let v = parse(&partition_json(3, 5).unwrap());
    assert_eq!(v["n"], 15);
    assert_eq!(v["classes"]["C0"], serde_json::json!([1, 2, 4, 8]));
    assert_eq!(v["labels"][0], "R");
    assert_eq!(v["labels"][10], "Q");
    assert_eq!(v["labels"].as_array().unwrap().len(), 15);
    assert!(partition_json(5, 13).unwrap_err().contains("gcd"));
}

#[test]
fn mask_view_reports_criterion() {
    let v = parse(&mask_json(3, 5, 4, "bordered", "0", "0,0,1,u+1,u").unwrap());
    assert_eq!(v["descriptor"], "GB_16(0; 0,0,1,u+1,u)");
    assert_eq!(v["d"], "(0,1,1,1,1)");
    assert_eq!(v["verdict"], true);
    assert_eq!(v["self_dual"], true);
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 225);
    // row 0, column 1: difference 1 lies in C0, which carries u+1
    assert_eq!(cells[1], 3);

    let v = parse(&mask_json(5, 7, 3, "pure", "", "1,0,0,0,0").unwrap());
    assert_eq!(v["verdict"], false);
    assert_eq!(v["self_dual"], false);
    assert!(mask_json(3, 5, 2, "pure", "", "1,0").is_err());
    assert!(mask_json(3, 5, 2, "sideways", "", "1,0,0,0,0").is_err());
}

#[test]
fn parameters_match_reference_codes() {
    let v = parse(&parameters_json(5, 7, 2, "pure", "", "1,0,1,0,1", 1_000_000_000).unwrap());
    assert_eq!(v["parameters"], "[70, 35, 10]");
    assert_eq!(v["bound"], 14);
    let v = parse(&parameters_json(3, 5, 4, "bordered", "0", "0,0,1,u+1,u", 1_000_000_000).unwrap());
    assert_eq!(v["parameters"], "[32, 16, 8]");
    assert_eq!(v["complete"], true);
    let v = parse(&parameters_json(5, 7, 2, "bordered", "0", "0,1,0,1,0", 5).unwrap());
    assert_eq!(v["complete"], false);
}
