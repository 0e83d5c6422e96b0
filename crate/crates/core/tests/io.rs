use std::fs;

use pseudofn::io::*;
use pseudofn::{Complex64, Error, FiniteGroup};

#[test]
fn files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = dir.path().join("a.json");
    fs::write(&matrix, r#"{"rows": 2, "cols": 2, "entries": [[[0.5,0.5],[0.5,-0.5]],[[0.5,-0.5],[0.5,0.5]]]}"#).unwrap();
    let a = read_matrix(&matrix).unwrap();
    assert_eq!(a[(1, 0)], Complex64::new(0.5, -0.5));

    let group = dir.path().join("g.json");
    fs::write(&group, group_to_json(&FiniteGroup::klein_four())).unwrap();
    assert!(read_group(&group).unwrap().is_abelian());

    let element = dir.path().join("f.json");
    fs::write(&element, "[[1, 0], [0, 1]]").unwrap();
    assert_eq!(read_element(&element).unwrap()[1], Complex64::new(0.0, 1.0));

    let laurent = dir.path().join("l.json");
    fs::write(&laurent, "[[0, 1, 0], [-1, 0, 1]]").unwrap();
    assert_eq!(read_laurent(&laurent).unwrap().radius(), 1);
}

#[test]
fn missing_file_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(read_matrix(dir.path().join("nope.json")), Err(Error::Io(_))));
}

#[test]
fn bad_entries_are_located() {
    let err = parse_element(r#"[[1, 0], ["x", 0]]"#).unwrap_err();
    assert!(err.to_string().contains("[1][0]"), "{err}");
    let err = parse_element("[[1, 0], [1e999, 0]]").unwrap_err();
    assert!(err.to_string().contains("line 1"), "{err}");
}
