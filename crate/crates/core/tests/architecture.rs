//! Architecture check: the algorithms layer composes pattern and simulator
//! operations, never raw gate construction or amplitude surgery. Enforced
//! here as a source scan so regressions fail loudly.

use std::fs;
use std::path::Path;

#[test]
fn algorithms_are_assembled_from_patterns_only() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("src/algorithms");
    let forbidden = [
        "Gate::",
        "apply_basis_permutation",
        "amplitudes_mut",
        "from_amplitudes",
        "from_unnormalized",
    ];
    let mut scanned = 0;
    for entry in fs::read_dir(&dir).expect("algorithms directory exists") {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("rs") {
            continue;
        }
        scanned += 1;
        let source = fs::read_to_string(&path).unwrap();
        for token in forbidden {
            assert!(
                !source.contains(token),
                "{} reaches below the pattern layer (found {token:?})",
                path.display()
            );
        }
    }
    assert!(scanned >= 5, "expected the algorithm sources, found {scanned}");
}
