//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Every expected value here was fixed ahead of the implementation by an
//! independent brute-force oracle; nothing is derived from the code under
//! test.

use pcl_core::arith::{self, SieveTable};
use pcl_core::congruence::{self, FAMILIES};
use pcl_core::partitions;
use pcl_core::rect::{self, GluedPair, MultiplicityRecord, MultisetCounts, Rectangle};
use pcl_core::scan::{self, PairScanConfig};
use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::sync::LazyLock;

static TABLE: LazyLock<SieveTable> = LazyLock::new(|| SieveTable::build(1_000_000).unwrap());

fn criterion(id: u32, desc: &str, f: impl FnOnce() + UnwindSafe) {
    let result = catch_unwind(f);
    let verdict = if result.is_ok() { "PASS" } else { "FAIL" };
    println!("criterion {id:>2} [{verdict}] {desc}");
    if let Err(payload) = result {
        resume_unwind(payload);
    }
}

fn r(rows: u64, cols: u64) -> Rectangle {
    Rectangle::new(rows, cols).unwrap()
}

#[test]
fn c01_thm_main_families_to_1e6() {
    criterion(1, "S(N) = 0 (mod 4) on all five families, N <= 10^6", || {
        for (a, b) in FAMILIES {
            let n_max = (1_000_000 - b) / a;
            let result = scan::scan_family(a, b, n_max, &TABLE).unwrap();
            assert!(
                result.all_pass,
                "family ({a},{b}) failed at {:?}",
                result.failures.first()
            );
            assert_eq!(result.checked, n_max + 1);
        }
    });
}

#[test]
fn c02_doublecount_to_1e5() {
    criterion(2, "nu2 + S + sigma1/2 = 0 (mod 4), N = 2 (mod 4) <= 10^5", || {
        let mut checked = 0u64;
        let mut failures = Vec::new();
        let mut n = 2u64;
        while n <= 100_000 {
            let report = congruence::verify_doublecount(n, &TABLE).unwrap();
            if report.hypotheses_met {
                checked += 1;
                if report.holds != Some(true) {
                    failures.push(n);
                }
            }
            n += 4;
        }
        assert_eq!(checked, 19_023, "in-hypothesis member count");
        assert!(failures.is_empty(), "counterexamples: {failures:?}");
    });
}

#[test]
fn c03_lemma_oracle_equivalence_to_2000() {
    criterion(3, "enumerated multiset counts = closed forms, N <= 2000", || {
        let mut checked = 0u64;
        for n in 2..=2000u64 {
            if arith::is_sum_of_two_squares(n).unwrap() {
                continue;
            }
            checked += 1;
            let (enumerated, _) = rect::enumerate_multiset_a(n).unwrap();
            let formulaic = rect::counts_by_formula(n, &TABLE).unwrap();
            assert_eq!(enumerated, formulaic, "N={n}");
            assert_eq!(
                enumerated.a,
                enumerated.b + enumerated.c + enumerated.d + enumerated.e,
                "N={n}"
            );
            let pairs = rect::canonical_pairs(n).unwrap();
            assert_eq!(enumerated.a, 4 * pairs.len() as u64, "N={n}");
            assert_eq!(enumerated.a % 4, 0, "N={n}");

            // for twice-odd N the multiset size is exactly nu2 + S + sigma1/2
            if n % 4 == 2 {
                let direct = partitions::nu2_formula(n, &TABLE).unwrap()
                    + congruence::hooley_sum(n, &TABLE).unwrap()
                    + TABLE.sigma1(n) / 2;
                assert_eq!(enumerated.a, direct, "N={n}");
            }
        }
        assert!(checked > 1000, "hypothesis filter ate the range: {checked}");

        // |B| counts two-part-size partitions with or without the hypothesis
        for n in 2..=500u64 {
            let (counts, _) = rect::enumerate_multiset_a_unchecked(n, 5000).unwrap();
            assert_eq!(counts.b, partitions::nu2_formula(n, &TABLE).unwrap(), "N={n}");
        }
    });
}

#[test]
fn c04_pinned_paper_values() {
    criterion(4, "pinned values: nu2(4), nu3(4), N=6 decomposition, figure rows", || {
        assert_eq!(partitions::nu_k_bruteforce(4, 2).unwrap(), 2);
        assert_eq!(partitions::nu_k_bruteforce(4, 3).unwrap(), 0);

        let (counts, _) = rect::enumerate_multiset_a(6).unwrap();
        assert_eq!(counts, MultisetCounts { a: 16, b: 6, c: 4, d: 5, e: 1 });

        // the four gluing rows for N = 6
        let count_of = |g: &[GluedPair; 4], p: GluedPair| g.iter().filter(|&&q| q == p).count();

        let g = rect::glue(r(1, 5), r(1, 1));
        assert_eq!(count_of(&g, GluedPair::new(r(1, 5), r(1, 1))), 2);
        assert_eq!(count_of(&g, GluedPair::new(r(5, 1), r(1, 1))), 2);

        let g = rect::glue(r(1, 4), r(1, 2));
        for p in [
            GluedPair::new(r(1, 4), r(1, 2)),
            GluedPair::new(r(1, 4), r(2, 1)),
            GluedPair::new(r(4, 1), r(1, 2)),
            GluedPair::new(r(4, 1), r(2, 1)),
        ] {
            assert_eq!(count_of(&g, p), 1);
        }

        let g = rect::glue(r(2, 2), r(1, 2));
        assert_eq!(count_of(&g, GluedPair::new(r(2, 2), r(1, 2))), 2);
        assert_eq!(count_of(&g, GluedPair::new(r(2, 2), r(2, 1))), 2);

        let g = rect::glue(r(1, 3), r(1, 3));
        assert_eq!(count_of(&g, GluedPair::new(r(1, 3), r(1, 3))), 1);
        assert_eq!(count_of(&g, GluedPair::new(r(1, 3), r(3, 1))), 2);
        assert_eq!(count_of(&g, GluedPair::new(r(3, 1), r(3, 1))), 1);

        // the five classification rows
        let row = |p: GluedPair, n: u64| {
            let m = rect::classify(&p, n).unwrap();
            (m.m_a, m.m_b, m.m_c, m.m_d, m.m_e)
        };
        assert_eq!(row(GluedPair::new(r(1, 4), r(1, 2)), 6), (1, 1, 0, 0, 0));
        assert_eq!(row(GluedPair::new(r(2, 2), r(2, 1)), 6), (2, 1, 1, 0, 0));
        assert_eq!(row(GluedPair::new(r(1, 3), r(3, 1)), 6), (2, 1, 0, 0, 1));
        assert_eq!(row(GluedPair::new(r(4, 1), r(2, 1)), 6), (1, 0, 0, 1, 0));
        assert_eq!(row(GluedPair::new(r(2, 2), r(1, 2)), 6), (2, 0, 1, 1, 0));

        // figure-row diagram labels agree with the enumerated classification
        let (_, map) = rect::enumerate_multiset_a(6).unwrap();
        assert_eq!(
            map[&GluedPair::new(r(1, 5), r(1, 1))],
            MultiplicityRecord { m_a: 2, m_b: 1, m_c: 1, m_d: 0, m_e: 0 }
        );
        assert_eq!(
            map[&GluedPair::new(r(5, 1), r(1, 1))],
            MultiplicityRecord { m_a: 2, m_b: 0, m_c: 1, m_d: 1, m_e: 0 }
        );
        assert_eq!(
            rect::render_young_diagram(&GluedPair::new(r(1, 3), r(3, 1))),
            "###\n#\n#\n#",
            "the (3,1,1,1) diagram"
        );
    });
}

#[test]
fn c05_nu2_dual_route_and_family_congruence() {
    criterion(5, "nu2 formula = brute force (N <= 500); nu2 = 0 (mod 4) on families", || {
        for n in 2..=500u64 {
            assert_eq!(
                partitions::nu2_formula(n, &TABLE).unwrap(),
                partitions::nu_k_bruteforce(n, 2).unwrap(),
                "N={n}"
            );
        }
        for (a, b) in FAMILIES {
            let mut n = b;
            while n <= 10_000 {
                if n >= 2 {
                    assert_eq!(
                        partitions::nu2_formula(n, &TABLE).unwrap() % 4,
                        0,
                        "nu2({n}) for family ({a},{b})"
                    );
                }
                n += a;
            }
        }
    });
}

#[test]
fn c06_sigma1_divisible_by_8_to_1e6() {
    criterion(6, "sigma1(N) = 0 (mod 8) on all five families, N <= 10^6", || {
        let mut members = 0u64;
        for (a, b) in FAMILIES {
            let mut n = b;
            while n <= 1_000_000 {
                members += 1;
                assert_eq!(
                    congruence::sigma1_mod8(n).unwrap(),
                    0,
                    "sigma1({n}) for family ({a},{b})"
                );
                n += a;
            }
        }
        let expected: u64 = FAMILIES
            .iter()
            .map(|&(a, b)| (1_000_000 - b) / a + 1)
            .sum();
        assert_eq!(members, expected);

        // the report wrapper agrees
        let report = congruence::verify_sigma1_mod8(70).unwrap();
        assert_eq!(report.holds, Some(true));
    });
}

#[test]
fn c07_corollaries_to_1e5() {
    criterion(7, "corollary verdicts hold on their families, N <= 10^5", || {
        let mut n = 14u64;
        while n <= 100_000 {
            let report = congruence::verify_cor_odd(n, &TABLE).unwrap();
            assert!(report.hypotheses_met);
            assert_eq!(report.holds, Some(true), "cor_odd N={n}");
            assert_eq!(report.value("even_div4_violations"), Some(0), "N={n}");
            n += 16;
        }
        let mut n = 70u64;
        while n <= 100_000 {
            let report = congruence::verify_cor_odd(n, &TABLE).unwrap();
            assert_eq!(report.holds, Some(true), "cor_odd N={n}");
            assert_eq!(report.value("even_div4_violations"), Some(0), "N={n}");
            n += 196;
        }
        for (a, b) in [(36u64, 30u64), (72, 42), (252, 114)] {
            let mut n = b;
            while n <= 100_000 {
                let report = congruence::verify_cor_mod3(n, &TABLE).unwrap();
                assert!(report.hypotheses_met);
                assert_eq!(report.holds, Some(true), "cor_mod3 N={n}");
                assert_eq!(report.value("mult3_div4_violations"), Some(0), "N={n}");
                n += a;
            }
        }
    });
}

#[test]
fn c08_conjecture_16n6_to_1e5() {
    criterion(8, "S(16n+6) = 0 (mod 4) up to 10^5; failures are reportable", || {
        let n_max = (100_000 - 6) / 16;
        let result = scan::scan_family(16, 6, n_max, &TABLE).unwrap();
        assert!(
            result.all_pass,
            "conjecture counterexample: {:?}",
            result.failures.first()
        );
        assert_eq!(result.checked, n_max + 1);

        // counterexample reporting works: a known-failing family yields them
        let failing = scan::scan_family(2, 0, 100, &TABLE).unwrap();
        assert!(!failing.all_pass);
        assert_eq!(failing.failures.first(), Some(&(2, 1)));
    });
}

#[test]
fn c09_pair_scan_structure() {
    criterion(9, "passing pairs have A = 0, B = 2 (mod 4); a_max=20 list pinned", || {
        let small = scan::scan_all_pairs(&PairScanConfig::new(20, 100_000), &TABLE).unwrap();
        assert_eq!(
            small.summary.passing_pairs,
            vec![(8, 6), (16, 6), (16, 14)],
            "regression fixture from the pre-build oracle"
        );
        assert!(small.summary.structural_check);

        let full = scan::scan_all_pairs(&PairScanConfig::new(100, 100_000), &TABLE).unwrap();
        assert!(full.summary.structural_check, "Conjecture 5.2 counterexample");
        assert_eq!(full.summary.passing_pairs.len(), 82);
        for fam in [(16, 14), (36, 30), (72, 42), (16, 6), (8, 6)] {
            assert!(full.summary.passing_pairs.contains(&fam), "{fam:?} missing");
        }
        for &(a, b) in &full.summary.passing_pairs {
            assert!(a % 4 == 0 && b % 4 == 2, "({a},{b}) breaks the structure");
        }
    });
}

#[test]
fn c10_property_suites() {
    criterion(10, "sieve = factorization; two-squares dual route; resume determinism", || {
        // sieve values against the factorization route, n <= 10^4
        for n in 1..=10_000u64 {
            let f = arith::factorize(n).unwrap();
            assert_eq!(u64::from(TABLE.sigma0(n)), f.divisor_count(), "sigma0({n})");
            assert_eq!(TABLE.sigma1(n), f.divisor_sum().unwrap(), "sigma1({n})");
        }

        // two-squares criterion against exhaustive search, n <= 10^5
        for n in 1..=100_000u64 {
            assert_eq!(
                arith::is_sum_of_two_squares(n).unwrap(),
                arith::is_sum_of_two_squares_search(n).unwrap(),
                "n={n}"
            );
        }
        // every 14 (mod 16) member is out of reach of two squares
        let mut n = 14u64;
        while n <= 100_000 {
            assert!(!arith::is_sum_of_two_squares(n).unwrap(), "n={n}");
            n += 16;
        }

        // interrupted-and-resumed scan equals the straight run
        let straight = scan::scan_all_pairs(&PairScanConfig::new(10, 2000), &TABLE).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = PairScanConfig::new(10, 2000);
        cfg.checkpoint_path = Some(dir.path().join("scan.ckpt"));
        cfg.checkpoint_every = 3;
        cfg.pair_budget = Some(7);
        let resumed = loop {
            match scan::scan_all_pairs(&cfg, &TABLE) {
                Ok(report) => break report,
                Err(pcl_core::Error::Resource(_)) => continue,
                Err(e) => panic!("unexpected error: {e}"),
            }
        };
        assert_eq!(resumed.pairs, straight.pairs);
        assert_eq!(resumed.summary, straight.summary);
    });
}
