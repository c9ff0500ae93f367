//! The built-in phase corpus: the small algebras and the flagship family
//! that the validation, kernel, dichotomy and round-trip suites run over.

use crate::heisenberg::{heisenberg_phase, HeisenbergSpec};
use crate::phase::{dual_numbers, square_zero_extend, unit_phase, Phase};

/// Named corpus phases, in a fixed order: the unit algebra, the dual
/// numbers, both flagships with their square-zero extensions (b_dim 1 and
/// 2), and the polarized-cocycle variants.
pub fn builtin() -> Vec<(String, Phase)> {
    let flag1 = heisenberg_phase(&HeisenbergSpec::new(1, 1));
    let flag2 = heisenberg_phase(&HeisenbergSpec::new(1, 2));
    let mut out = vec![
        ("unit".to_string(), unit_phase()),
        ("dual_numbers".to_string(), dual_numbers()),
        ("flagship_k1".to_string(), flag1.clone()),
        ("flagship_k2".to_string(), flag2.clone()),
    ];
    for (name, base) in [("flagship_k1", &flag1), ("flagship_k2", &flag2)] {
        for b in [1usize, 2] {
            out.push((
                format!("{name}_ext{b}"),
                square_zero_extend(base, b, None)
                    .expect("flagship phases carry the group augmentation"),
            ));
        }
    }
    out.push((
        "polarized_k1".to_string(),
        heisenberg_phase(&HeisenbergSpec::polarized(1, 1)),
    ));
    out.push((
        "polarized_k2".to_string(),
        heisenberg_phase(&HeisenbergSpec::polarized(1, 2)),
    ));
    out
}

/// The weak phases of the corpus (nonzero boundary), for cascade tests.
pub fn builtin_weak() -> Vec<(String, Phase)> {
    builtin().into_iter().filter(|(_, p)| !p.is_strong()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::validate_phase;

    #[test]
    fn corpus_has_expected_members() {
        let names: Vec<String> = builtin().into_iter().map(|(n, _)| n).collect();
        assert_eq!(
            names,
            vec![
                "unit",
                "dual_numbers",
                "flagship_k1",
                "flagship_k2",
                "flagship_k1_ext1",
                "flagship_k1_ext2",
                "flagship_k2_ext1",
                "flagship_k2_ext2",
                "polarized_k1",
                "polarized_k2",
            ]
        );
    }

    #[test]
    fn whole_corpus_validates() {
        for (name, p) in builtin() {
            let report = validate_phase(&p);
            assert!(report.is_valid(), "{name}: {}", report.summary());
        }
    }
}
