use mfal::alia::{alia_table, golden, scalar_oracle, TABLE_ORBITS};
use mfal::qseries::DEFAULT_ORDER;

#[test]
fn cocycles_are_symmetric_binary_cocycles() {
    for orbit in TABLE_ORBITS {
        let t = alia_table(orbit).unwrap();
        assert!(t.cocycles.is_symmetric(), "{orbit}");
        assert!(t.cocycles.is_binary(), "{orbit}");
        assert!(t.cocycles.cocycle_condition_holds(), "{orbit}");
    }
}

#[test]
fn tables_satisfy_jacobi_over_qj() {
    for orbit in TABLE_ORBITS {
        let t = alia_table(orbit).unwrap();
        assert!(t.is_antisymmetric(), "{orbit}");
        assert!(t.jacobi_holds(), "{orbit}");
    }
}

#[test]
fn scalar_oracle_agrees_with_cocycles() {
    for orbit in TABLE_ORBITS {
        let t = alia_table(orbit).unwrap();
        let report = scalar_oracle(&t, DEFAULT_ORDER).unwrap();
        assert!(report.holds(), "{orbit}: {:?}", report.grade_pairs);
    }
}

#[test]
fn transcribed_graphs_are_reproduced() {
    for g in golden::GRAPHS {
        let t = alia_table(g.orbit).unwrap();
        let (d4, d6) = golden::compare(g, &t.cocycles);
        let show = |d: &[(Vec<i64>, Vec<i64>)]| -> Vec<String> {
            d.iter().map(|(a, b)| format!("{}-{}", g.name_of(a), g.name_of(b))).collect()
        };
        assert!(d4.is_empty() && d6.is_empty(), "{}: w4 {:?} w6 {:?}", g.orbit, show(&d4), show(&d6));
    }
}

#[test]
fn sl2_json_has_the_ef_bracket() {
    let t = alia_table("A1:principal").unwrap();
    let v = t.to_json();
    let ef = v["brackets"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["x"] == "e" && b["y"] == "f")
        .unwrap();
    assert_eq!(ef["coeff"], serde_json::json!({"eps": 1, "w4": 1, "w6": 1}));
    assert_eq!(ef["target"], "h");
    assert_eq!(v["basis"], serde_json::json!(["h", "e", "f"]));
}

#[test]
fn specialization_keeps_dimension_at_generic_j() {
    for orbit in TABLE_ORBITS {
        let t = alia_table(orbit).unwrap();
        let five = mfal::ring::q(5);
        assert!(t.killing_nondegenerate_at(&five), "{orbit}");
    }
}
