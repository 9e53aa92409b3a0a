//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! All checks are exact; there are no tolerances anywhere.

mod common;

use std::process::Command;
use std::time::Instant;

use poset_metrics::enumerate::{enumerate_posets, enumerate_up_to, PosetFilter};
use poset_metrics::families::{generate, FamilySpec};
use poset_metrics::metrics::{
    chebyshev_distance, is_chain_compatible, triangle_violations, up_down_distance,
    zigzag_distance, DistanceKind,
};
use poset_metrics::poset::Poset;
use poset_metrics::verify::{falsify_chain_compatibility, verify, PropositionId, WitnessDetail};

fn pass(line: &str) {
    println!("criterion {line}: PASS");
}

#[test]
fn c1_enumeration_counts_match_oracle() {
    let started = Instant::now();
    let expected = [1usize, 2, 5, 16, 63, 318];
    for (i, &want) in expected.iter().enumerate() {
        let n = i + 1;
        let got = enumerate_posets(n, &PosetFilter::empty(), 0).unwrap().len();
        assert_eq!(got, want, "class count at n={n}");
    }
    // class-for-class against the ternary-assignment oracle at n <= 5
    for n in 1..=5 {
        let oracle = common::oracle_classes_ternary(n);
        let perms = common::permutations(n);
        let mut ours: Vec<u64> = enumerate_posets(n, &PosetFilter::empty(), 0)
            .unwrap()
            .iter()
            .map(|p| common::key_of_poset(p, &perms))
            .collect();
        ours.sort_unstable();
        assert_eq!(ours, oracle, "class-for-class at n={n}");
    }
    // count-only against the independent upper-triangular oracle at n = 6
    assert_eq!(common::oracle_class_count_upper_triangular(6), 318);
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}, budget is one minute");
    pass("1 (enumeration counts 1,2,5,16,63,318; oracle class-for-class at n<=5; oracle count at n=6)");
}

#[test]
fn c2_proposition_2_at_desk_scale() {
    for level in enumerate_up_to(6, 0).unwrap() {
        for p in &level {
            if !p.has_upper_filtering() && !p.has_lower_filtering() {
                continue;
            }
            let jd = p.is_jordan_dedekind();
            let cc = is_chain_compatible(p, DistanceKind::Zigzag).unwrap();
            assert_eq!(jd, cc, "JD must match zigzag chain-compatibility");
            if !jd {
                let f = falsify_chain_compatibility(p)
                    .expect("every JD failure must yield a two-chain falsifier");
                assert_ne!(f.chain_short.len(), f.chain_long.len());
                assert_eq!(f.chain_short.first(), f.chain_long.first());
                assert_eq!(f.chain_short.last(), f.chain_long.last());
            }
        }
    }
    assert!(verify(PropositionId::P2, 6, 0).unwrap().holds);
    pass("2 (JD <=> zigzag chain-compatible over filtering posets n<=6, falsifiers on every JD failure)");
}

#[test]
fn c3_proposition_3_at_desk_scale() {
    let report = verify(PropositionId::P3, 7, 0).unwrap();
    assert!(report.holds, "witnesses: {:?}", report.witnesses);
    assert!(report.relevant > 0);
    pass("3 (no semimodular join semilattice violates JD, n<=7)");
}

#[test]
fn c4_proposition_4_three_way_equivalence() {
    let report = verify(PropositionId::P4, 6, 0).unwrap();
    assert!(report.holds, "witnesses: {:?}", report.witnesses);

    let w = generate(&FamilySpec::Prop4Witness).unwrap();
    let x = w.element("x").unwrap();
    let y = w.element("y").unwrap();
    let z = w.element("z").unwrap();
    assert_eq!(up_down_distance(&w, x, z).unwrap(), 3);
    assert_eq!(
        up_down_distance(&w, x, y).unwrap() + up_down_distance(&w, y, z).unwrap(),
        2
    );
    let violations = triangle_violations(&w, DistanceKind::UpDown).unwrap();
    assert!(violations.iter().any(|v| v.lhs == 3 && v.rhs == 2));
    pass("4 (semimodular <=> up-down metric <=> up-down = zigzag, n<=6; witness shows 3 > 2)");
}

#[test]
fn c5_propositions_5_and_1() {
    let p5 = verify(PropositionId::P5, 6, 0).unwrap();
    assert!(p5.holds, "witnesses: {:?}", p5.witnesses);
    // P1 at n<=7 also cross-checks that every tree order flags semimodular
    let p1 = verify(PropositionId::P1, 7, 0).unwrap();
    assert!(p1.holds, "witnesses: {:?}", p1.witnesses);
    for level in enumerate_up_to(7, 0).unwrap() {
        for p in level.iter().filter(|p| p.is_tree_order()) {
            assert!(p.is_semimodular_cover().unwrap());
            assert!(triangle_violations(p, DistanceKind::Chebyshev).unwrap().is_empty());
        }
    }
    pass("5 (Chebyshev metric on semimodular semilattices n<=6 and tree orders n<=7; trees are semimodular)");
}

#[test]
fn c6_chebyshev_non_metric_witness() {
    let report = verify(PropositionId::ChebSearch, 6, 0).unwrap();
    assert!(report.holds, "search must find a witness by n=6");
    let witness = &report.witnesses[0];
    match &witness.detail {
        WitnessDetail::TriangleViolation { lhs, rhs, .. } => {
            assert_eq!((*lhs, *rhs), (3, 2));
        }
        other => panic!("unexpected witness detail {other:?}"),
    }

    let w = generate(&FamilySpec::ChebyshevWitness).unwrap();
    assert_eq!(w.len(), 6);
    let violations = triangle_violations(&w, DistanceKind::Chebyshev).unwrap();
    assert!(violations.iter().any(|v| v.lhs == 3 && v.rhs == 2));
    pass("6 (cheb-search finds a witness at n<=6; the named 6-element witness shows 3 > 2)");
}

fn boolean_members(p: &Poset) -> Vec<(poset_metrics::ElementId, u32)> {
    p.elements()
        .map(|e| {
            let mask = p
                .name(e)
                .bytes()
                .enumerate()
                .fold(0u32, |m, (i, b)| if b == b'1' { m | 1 << i } else { m });
            (e, mask)
        })
        .collect()
}

#[test]
fn c7a_boolean_closed_forms() {
    for k in 1..=5usize {
        let p = generate(&FamilySpec::Boolean(k)).unwrap();
        let members = boolean_members(&p);
        for &(x, a) in &members {
            for &(y, b) in &members {
                if x >= y {
                    continue;
                }
                let sym_diff = (a ^ b).count_ones();
                assert_eq!(up_down_distance(&p, x, y).unwrap(), sym_diff);
                assert_eq!(zigzag_distance(&p, x, y).unwrap(), sym_diff);
                let cheb = chebyshev_distance(&p, x, y).unwrap();
                assert_eq!(cheb, (a & !b).count_ones().max((b & !a).count_ones()));
            }
        }
    }
    pass("7a (boolean(k<=5): up-down = zigzag = |symmetric difference|, chebyshev = max one-sided difference)");
}

fn grid_pairs(dims: &[usize]) -> (Poset, Vec<(poset_metrics::ElementId, Vec<i64>)>) {
    let p = generate(&FamilySpec::Grid(dims.to_vec())).unwrap();
    let coords = p
        .elements()
        .map(|e| {
            let c: Vec<i64> = p.name(e).split('_').map(|t| t.parse().unwrap()).collect();
            (e, c)
        })
        .collect();
    (p, coords)
}

const GRIDS: [&[usize]; 4] = [&[2, 2], &[3, 3], &[3, 4], &[4, 4, 4]];

/// Criterion 7's grid clause exactly as stated: Chebyshev distance equals the
/// maximum per-axis coordinate difference for all pairs. This is expected to
/// fail: for comparable pairs the height to the join is the sum of the
/// coordinate differences, not their maximum (already on the 2x2 grid,
/// d((0,0),(1,1)) = 2 while the max axis difference is 1).
#[test]
fn c7b_grid_chebyshev_max_axis_difference_as_stated() {
    for dims in GRIDS {
        let (p, coords) = grid_pairs(dims);
        for (x, cx) in &coords {
            for (y, cy) in &coords {
                if x >= y {
                    continue;
                }
                let linf = cx.iter().zip(cy).map(|(a, b)| (a - b).abs() as u32).max().unwrap();
                let cheb = chebyshev_distance(&p, *x, *y).unwrap();
                assert_eq!(
                    cheb, linf,
                    "grid {dims:?}: chebyshev({cx:?},{cy:?}) = {cheb}, max axis difference = {linf}"
                );
            }
        }
    }
    pass("7b-verbatim (grid chebyshev = max axis difference)");
}

/// The closed form the definition actually yields on grids, the exact
/// analogue of the boolean clause: the two heights to the join are the
/// one-sided sums of coordinate differences.
#[test]
fn c7b_grid_chebyshev_one_sided_sums() {
    for dims in GRIDS {
        let (p, coords) = grid_pairs(dims);
        for (x, cx) in &coords {
            for (y, cy) in &coords {
                if x >= y {
                    continue;
                }
                let up: u32 = cx.iter().zip(cy).map(|(a, b)| (b - a).max(0) as u32).sum();
                let down: u32 = cx.iter().zip(cy).map(|(a, b)| (a - b).max(0) as u32).sum();
                assert_eq!(chebyshev_distance(&p, *x, *y).unwrap(), up.max(down));
            }
        }
    }
    pass("7b-corrected (grid chebyshev = max of one-sided coordinate-difference sums, grids up to 4x4x4)");
}

#[test]
fn c8_pointwise_bound_fuzz() {
    let ps = [0.2, 0.4, 0.6];
    let mut with_filtering = 0usize;
    for seed in 0..1000u64 {
        let spec = FamilySpec::Random {
            n: 8,
            p: ps[(seed % 3) as usize],
            seed,
        };
        let poset = generate(&spec).unwrap();
        if !poset.has_upper_filtering() {
            continue;
        }
        with_filtering += 1;
        for x in poset.elements() {
            for y in poset.elements() {
                if x >= y {
                    continue;
                }
                let zz = zigzag_distance(&poset, x, y).unwrap();
                let ud = up_down_distance(&poset, x, y).unwrap();
                assert!(zz <= ud, "{spec}: zigzag {zz} > up-down {ud}");
            }
        }
    }
    assert!(with_filtering > 0);
    pass(&format!(
        "8 (zigzag <= up-down on all pairs of 1000 random posets, {with_filtering} with upper filtering)"
    ));
}

const FAMILY_TREE: &str = "\
ego < p1
sib < p1
cousin1 < p2
cousin2 < p2
p1 < g
p2 < g
";

#[test]
fn c9_kinship_table() {
    let bin = env!("CARGO_BIN_EXE_posets");
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("family.txt");
    std::fs::write(&file, FAMILY_TREE).unwrap();
    let degree = |method: &str, ego: &str, alter: &str| -> u32 {
        let out = Command::new(bin)
            .args(["kinship", file.to_str().unwrap(), "--method", method, ego, alter])
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        String::from_utf8(out.stdout).unwrap().trim().parse().unwrap()
    };
    // parent/child, siblings, uncle-nephew, first cousins
    assert_eq!((degree("civil", "ego", "p1"), degree("canon", "ego", "p1")), (1, 1));
    assert_eq!((degree("civil", "ego", "sib"), degree("canon", "ego", "sib")), (2, 1));
    assert_eq!((degree("civil", "ego", "p2"), degree("canon", "ego", "p2")), (3, 2));
    assert_eq!(
        (degree("civil", "ego", "cousin1"), degree("canon", "ego", "cousin1")),
        (4, 2)
    );
    pass("9 (kinship degrees 1/1, 2/1, 3/2, 4/2 from the fixed 7-person tree file)");
}

#[test]
fn c10_determinism_across_job_counts() {
    let bin = env!("CARGO_BIN_EXE_posets");
    let run = |args: &[&str]| -> Vec<u8> {
        let out = Command::new(bin).args(args).output().unwrap();
        assert!(out.status.code().is_some());
        out.stdout
    };
    for args in [
        vec!["enumerate", "--n", "6"],
        vec!["enumerate", "--n", "6", "--count-only"],
        vec!["--json", "verify", "--prop", "P4", "--max-n", "5"],
        vec!["--json", "verify", "--prop", "cheb-search", "--max-n", "6"],
    ] {
        let mut one = args.clone();
        one.extend(["--jobs", "1"]);
        let mut eight = args.clone();
        eight.extend(["--jobs", "8"]);
        assert_eq!(
            run(&one),
            run(&eight),
            "output of {args:?} differs between --jobs 1 and --jobs 8"
        );
    }
    pass("10 (enumerate and verify outputs byte-identical across --jobs 1 and --jobs 8)");
}
