//! The shipped fixtures must regenerate cleanly, and the verification
//! report must be deterministic.

use std::path::PathBuf;

use triquot_core::tables;

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn all_fixture_tables_regenerate() {
    let report = tables::verify_fixtures(&fixture_dir(), 50).unwrap();
    assert!(report.ok, "\n{}", report.render());
    for t in &report.tables {
        assert!(t.missing.is_empty(), "table {}: {:?}", t.which, t.missing);
        assert!(t.extra.is_empty(), "table {}: {:?}", t.which, t.extra);
    }
    // Tables 2 and 4 also agree line for line.
    assert_eq!(report.tables[1].row_identical, Some(true));
    assert_eq!(report.tables[3].row_identical, Some(true));
}

#[test]
fn verify_report_is_deterministic() {
    let a = tables::verify_fixtures(&fixture_dir(), 43)
        .unwrap()
        .render();
    let b = tables::verify_fixtures(&fixture_dir(), 43)
        .unwrap()
        .render();
    assert_eq!(a, b);
    assert!(a.contains("r ={4,7}"), "quirk note missing:\n{a}");
}

#[test]
fn corrupted_fixture_is_detected() {
    // Copy fixtures to a temp dir, flip one row of table 2, expect a diff.
    let tmp = std::env::temp_dir().join(format!("triquot-fixture-test-{}", std::process::id()));
    let tables_dir = tmp.join("tables");
    std::fs::create_dir_all(&tables_dir).unwrap();
    for which in 1..=4u8 {
        let name = format!("table{which}.csv");
        std::fs::copy(
            fixture_dir().join("tables").join(&name),
            tables_dir.join(&name),
        )
        .unwrap();
    }
    let path = tables_dir.join("table2.csv");
    let text = std::fs::read_to_string(&path).unwrap();
    let text = text.replace("G,2,2,5,5,exrep", "G,2,2,5,6,exrep");
    std::fs::write(&path, text).unwrap();

    let report = tables::verify_fixtures(&tmp, 50).unwrap();
    assert!(!report.ok);
    let t2 = &report.tables[1];
    assert!(!t2.ok);
    assert!(t2.missing.iter().any(|l| l.contains("(2,5,6)")));
    assert!(t2.extra.iter().any(|l| l.contains("(2,5,5)")));
    std::fs::remove_dir_all(&tmp).unwrap();
}
