use quotbwb_cli::cache::{load, parse, render, store, HEADER};
use quotbwb_core::schur::{lr, lr_cache_clear, lr_cache_snapshot};
use quotbwb_core::Partition;

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn header_only_is_empty() {
    assert!(parse(&format!("{HEADER}\n")).unwrap().is_empty());
}

#[test]
fn known_line_parses() {
    let entries = parse(&format!("{HEADER}\n2,1|2,1|3,2,1|2\n")).unwrap();
    assert_eq!(entries, vec![(part("2,1"), part("2,1"), part("3,2,1"), 2)]);
}

#[test]
fn bad_files_are_refused() {
    assert!(parse("quotbwb-lrcache v9\n").unwrap_err().to_string().contains("version"));
    assert!(parse("").is_err());
    let err = parse(&format!("{HEADER}\n1|1|2|1\n1|1|oops|1\n")).unwrap_err();
    assert!(format!("{err:#}").contains("line 3"), "{err:#}");
    let err = parse(&format!("{HEADER}\n1|1|2\n")).unwrap_err();
    assert!(err.to_string().contains("line 2"));
}

#[test]
fn render_sorts_and_parse_inverts() {
    let entries = vec![(part("2"), part("1"), part("3"), 1), (part("1"), part("1"), part("1,1"), 1)];
    let text = render(&entries);
    let mut sorted = entries.clone();
    sorted.sort();
    assert_eq!(parse(&text).unwrap(), sorted);
}

#[test]
fn store_then_load_reproduces_the_memo() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c");
    lr_cache_clear();
    for (a, b, g) in [("2,1", "2,1", "3,2,1"), ("3,1", "2,2", "4,3,1"), ("1", "1", "2")] {
        lr(&part(a), &part(b), &part(g));
    }
    let before = lr_cache_snapshot();
    assert!(!before.is_empty());
    store(&path).unwrap();
    lr_cache_clear();
    assert!(lr_cache_snapshot().is_empty());
    assert_eq!(load(&path).unwrap(), before.len());
    assert_eq!(lr_cache_snapshot(), before);
}
