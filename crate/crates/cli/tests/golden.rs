//! Golden-report regression tests. Fixtures are stored under
//! tests/golden/ and regenerated only with O3SYM_BLESS=1.

use o3sym_cli::report::{Format, RunConfig};
use o3sym_cli::suites;

fn golden_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn check_golden(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var("O3SYM_BLESS").as_deref() == Ok("1") {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing fixture {name}; regenerate with O3SYM_BLESS=1"));
    assert_eq!(actual, expected, "golden report {name} drifted; bless only if intended");
}

fn cfg(max_n: usize) -> RunConfig {
    RunConfig { max_n: Some(max_n), ..RunConfig::default() }
}

#[test]
fn golden_cyclic_to_twelve() {
    let report = suites::run_cyclic(&cfg(12)).unwrap();
    check_golden("cyclic_12.jsonl", &report.render(Format::Json));
}

#[test]
fn golden_dihedral_to_five() {
    let report = suites::run_dihedral(&cfg(5)).unwrap();
    check_golden("dihedral_5.jsonl", &report.render(Format::Json));
}

#[test]
fn golden_aut_dihedral_to_six() {
    let report = suites::run_aut_dihedral(&cfg(6)).unwrap();
    check_golden("aut_dihedral_6.jsonl", &report.render(Format::Json));
}

#[test]
fn golden_kernels_to_sixty() {
    let report = suites::run_kernels(&cfg(60)).unwrap();
    check_golden("kernels_60.jsonl", &report.render(Format::Json));
}

#[test]
fn golden_cyclic_tsv() {
    let report = suites::run_cyclic(&cfg(8)).unwrap();
    check_golden("cyclic_8.tsv", &report.render(Format::Tsv));
}
