//! Acceptance suite: one test per claim the artifact is expected to
//! reproduce, each ending in a single PASS line (visible with
//! `cargo test --test acceptance -- --nocapture`).
//!
//! The `p = 541` spectral check is large and runs only on request:
//! `cargo test --test acceptance -- --ignored`.

use lee_cayley::cayley::{
    analyze, analyze_unit_norm_graph, distance_map, lee_sphere_size, table1_rows,
};
use lee_cayley::code::{build_code, lee_weight, Word};
use lee_cayley::normsets::{
    code_dimension, curve_affine_lower_bound, curve_point_count, unit_norm_set,
    unit_norm_set_param,
};
use lee_cayley::spectral::{scan_primes, spectrum, ResidueFilter, RAMANUJAN_TOLERANCE};
use lee_cayley::zmod::{primes_between, GaussRes, Residue};

fn in_family(p: u64) -> bool {
    p >= 7 && (p % 12 == 5 || p % 12 == 7)
}

#[test]
fn criterion_01_family_codes_are_2_quasi_perfect() {
    let primes: Vec<u64> = primes_between(7, 199)
        .into_iter()
        .filter(|&p| in_family(p))
        .collect();
    assert!(!primes.is_empty());
    for &p in &primes {
        let code = build_code(p).unwrap();
        assert_eq!(
            code.classify(),
            (2, 3),
            "p = {p}: expected correction 2 and covering radius 3"
        );
        // The ball of radius 2 is exactly full: every weight-<=2 coset
        // leader is unique.
        let n = code.dimension() as u64;
        assert_eq!(
            code.analysis().vertices_within(2),
            lee_sphere_size(n, 2).unwrap(),
            "p = {p}"
        );
    }
    println!(
        "criterion 01 PASS: all {} primes p = +-5 (mod 12) in [7, 199] give (2, 3)",
        primes.len()
    );
}

#[test]
fn criterion_02_p7_example_matrix_and_size() {
    let code = build_code(7).unwrap();

    // Column-equivalence (permutation + per-column sign) with the
    // reference matrix [[1, 0, 2, -2], [0, 1, 2, 2]].
    let reference: [(i64, i64); 4] = [(1, 0), (0, 1), (2, 2), (-2, 2)];
    let normalize = |col: GaussRes| col.min(-col);
    let mut expected: Vec<GaussRes> = reference
        .iter()
        .map(|&(re, im)| normalize(GaussRes::from_parts(re, im, 7)))
        .collect();
    expected.sort();
    let mut actual: Vec<GaussRes> = code
        .representatives()
        .iter()
        .map(|&c| normalize(c))
        .collect();
    actual.sort();
    assert_eq!(actual, expected, "matrix is not column-equivalent");

    // Exactly p^(n-2) = 49 codewords.
    let codewords = code.enumerate_codewords().unwrap();
    assert_eq!(codewords.len(), 49);
    assert_eq!(code.codeword_count().to_string(), "49");

    // Sphere bound: 2 * 41 > 49 >= 41, i.e. not perfect but 2-quasi-perfect.
    let b2 = lee_sphere_size(4, 2).unwrap();
    assert_eq!(b2, 41);
    assert!(2 * b2 > 49 && 49 >= b2);

    println!("criterion 02 PASS: p = 7 matrix column-equivalent to the reference, 49 codewords");
}

#[test]
fn criterion_03_unit_norm_cardinality_to_1000() {
    for &p in primes_between(3, 1000).iter() {
        let h = unit_norm_set_param(p).unwrap();
        assert_eq!(h.len() as u64, 2 * code_dimension(p), "p = {p}");
    }
    // Cross-check the O(p) parametrization against O(p^2) brute force.
    for &p in primes_between(3, 199).iter() {
        assert_eq!(
            unit_norm_set_param(p).unwrap(),
            unit_norm_set(p).unwrap(),
            "p = {p}"
        );
    }
    println!("criterion 03 PASS: |H| = 2n for all odd primes to 1000 (brute-force checked to 199)");
}

#[test]
fn criterion_04_neighbor_norm_sizes() {
    for &p in primes_between(3, 101).iter() {
        let n = code_dimension(p);
        for c in 1..p {
            let c = Residue::new(c, p);
            let expected = if c.legendre().unwrap() == 1 { n + 1 } else { n };
            let got = lee_cayley::normsets::neighbor_norms(c).unwrap().len() as u64;
            assert_eq!(got, expected, "p = {p}, c = {}", c.value());
        }
    }
    println!("criterion 04 PASS: |N_p(c)| = n or n+1 by quadratic character, all p <= 101");
}

#[test]
fn criterion_05_pm1_primes_distance_two_counts() {
    let mut checked = 0;
    for &p in primes_between(7, 100).iter() {
        if p % 12 != 1 && p % 12 != 11 {
            continue;
        }
        let analysis = analyze_unit_norm_graph(p).unwrap();
        let n = analysis.half_degree as u64;
        assert_eq!(
            analysis.vertices_within(2),
            2 * n * n + 1,
            "p = {p}: the radius-2 ball must hold exactly 2n^2 + 1 vertices"
        );
        checked += 1;
    }
    assert!(checked > 0);
    println!("criterion 05 PASS: {checked} primes p = +-1 (mod 12) have 2n^2 + 1 vertices within 2");
}

#[test]
fn criterion_06_g5_diameter_four() {
    let h = unit_norm_set(5).unwrap();
    let dm = distance_map(&h).unwrap();
    assert_eq!(dm.diameter(), 4);
    assert_eq!(dm.distance(GaussRes::from_parts(2, 2, 5)), 4);
    println!("criterion 06 PASS: G_5 has diameter 4 and d(2+2i, 0) = 4");
}

#[test]
fn criterion_07_table1_rows() {
    let expected = [(13u64, 169u64, 129u64), (26, 676, 377), (41, 1681, 833)];
    let rows = table1_rows();
    assert_eq!(rows.len(), 3);
    for (row, (q, order, sphere3)) in rows.iter().zip(expected) {
        assert_eq!(row.modulus, q);
        assert_eq!(row.generators.len() as u64, 2 * row.dimension, "q = {q}");
        let analysis = analyze(&row.generators).unwrap();
        assert_eq!(analysis.order, order, "q = {q}");
        assert_eq!(
            (analysis.correction_capacity, analysis.diameter),
            (3, 4),
            "q = {q} must be 3-quasi-perfect"
        );
        assert_eq!(lee_sphere_size(row.dimension, 3).unwrap(), sphere3, "q = {q}");
    }
    println!("criterion 07 PASS: rows q = 13, 26, 41 all verify (correction 3, diameter 4)");
}

#[test]
fn criterion_08_curve_point_lower_bounds() {
    for &p in primes_between(13, 101).iter() {
        if p % 4 != 1 {
            continue;
        }
        let bound = curve_affine_lower_bound(p);
        let min = (2..p)
            .map(|t| curve_point_count(Residue::new(t, p)).unwrap().affine)
            .min()
            .unwrap();
        assert!(
            min as f64 >= bound,
            "p = {p}: min |V_t| = {min} below {bound}"
        );
        if p == 13 {
            assert!(min >= 9, "p = 13 special case: min |V_t| = {min}");
        }
    }
    println!("criterion 08 PASS: min |V_t| >= p - 2 - 2*sqrt(p) for p = 1 (mod 4) in [13, 101]");
}

#[test]
fn criterion_09_spectral_classification() {
    let scan = scan_primes(199, ResidueFilter::All, false);
    for row in &scan.rows {
        if row.p % 4 == 3 {
            assert!(
                row.is_ramanujan,
                "p = {p} = 3 (mod 4) must be Ramanujan (margin {m})",
                p = row.p,
                m = row.margin
            );
        }
    }
    for p in [17u64, 53] {
        let row = scan.rows.iter().find(|r| r.p == p).unwrap();
        assert!(
            !row.is_ramanujan,
            "p = {p} must exceed the bound (margin {})",
            row.margin
        );
        assert!(row.margin > RAMANUJAN_TOLERANCE);
    }
    println!(
        "criterion 09 PASS: all p = 3 (mod 4) up to 199 Ramanujan; 17 and 53 are not \
         ({} primes scanned)",
        scan.rows.len()
    );
}

/// Large known exception; ~1.6e8 cosine-table lookups, so opt-in:
/// `cargo test --test acceptance -- --ignored`.
#[test]
#[ignore]
fn criterion_09_extended_p541_not_ramanujan() {
    let report = spectrum(541).unwrap();
    assert!(
        !report.is_ramanujan,
        "p = 541 must exceed the bound (margin {})",
        report.margin
    );
    println!(
        "criterion 09 (extended) PASS: p = 541 non-Ramanujan, margin {:.6}",
        report.margin
    );
}

#[test]
fn criterion_10_property_suite() {
    // (a) Distance identity d_G(phi(x), 0) = d(x, C) on 102 words at
    // p = 7, with the code side computed here from scratch: enumerate the
    // 49 kernel words of the reference syndrome map and take the brute
    // force minimum Lee distance.
    let code = build_code(7).unwrap();
    let h = unit_norm_set(7).unwrap();
    let dm = distance_map(&h).unwrap();
    let reps: Vec<(u64, u64)> = code
        .representatives()
        .iter()
        .map(|b| (b.re().value(), b.im().value()))
        .collect();
    let syndrome_of = |w: &[u64]| -> (u64, u64) {
        let mut re = 0;
        let mut im = 0;
        for (c, (br, bi)) in w.iter().zip(&reps) {
            re = (re + c * br) % 7;
            im = (im + c * bi) % 7;
        }
        (re, im)
    };
    let all_words: Vec<Vec<u64>> = (0..7u64.pow(4))
        .map(|mut idx| {
            (0..4)
                .map(|_| {
                    let c = idx % 7;
                    idx /= 7;
                    c
                })
                .collect()
        })
        .collect();
    let kernel: Vec<&Vec<u64>> = all_words
        .iter()
        .filter(|w| syndrome_of(w) == (0, 0))
        .collect();
    assert_eq!(kernel.len(), 49);
    let lee = |a: &[u64], b: &[u64]| -> u64 {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| {
                let d = (7 + x - y) % 7;
                d.min(7 - d)
            })
            .sum()
    };
    // Deterministic word sample: a small linear-congruential sweep plus
    // the two named cases.
    let mut words: Vec<Vec<u64>> = vec![vec![0, 0, 0, 0], vec![1, 1, 1, 1]];
    let mut state = 1u64;
    while words.len() < 102 {
        let w: Vec<u64> = (0..4)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) % 7
            })
            .collect();
        words.push(w);
    }
    for w in &words {
        let (re, im) = syndrome_of(w);
        let graph_side = dm.distance(GaussRes::from_parts(re as i64, im as i64, 7)) as u64;
        let code_side = kernel.iter().map(|c| lee(w, c)).min().unwrap();
        assert_eq!(graph_side, code_side, "word {w:?}");
    }

    // (b) Norm-sum identity, exhaustive for q <= 13.
    for q in 2..=13u64 {
        for i in 0..q * q {
            for j in 0..q * q {
                let b = GaussRes::from_parts((i / q) as i64, (i % q) as i64, q);
                let c = GaussRes::from_parts((j / q) as i64, (j % q) as i64, q);
                let two = Residue::new(2, q);
                assert_eq!(
                    (b + c).norm(),
                    b.norm() + c.norm() + two * (b * c.conj()).re()
                );
            }
        }
    }

    // (c) The decoder corrects every error pattern of Lee weight <= 2 at
    // p = 7: the zero pattern plus all 2n^2 + 2n = 40 nonzero ones.
    let codewords = code.enumerate_codewords().unwrap();
    let patterns: Vec<Word> = all_words
        .iter()
        .map(|w| Word::new(w.clone(), 7))
        .filter(|e| lee_weight(e) <= 2)
        .collect();
    assert_eq!(patterns.len(), 41);
    for c in &codewords {
        for e in &patterns {
            let decoded = code.decode(&c.add(e).unwrap()).unwrap();
            assert_eq!(&decoded.codeword, c);
            assert_eq!(&decoded.error, e);
        }
    }

    // (d) Character-sum spectrum equals the dense eigensolver's, p <= 13.
    for p in [3u64, 5, 7, 11, 13] {
        let h = unit_norm_set(p).unwrap();
        let order = (p * p) as usize;
        let mut adj = nalgebra::DMatrix::<f64>::zeros(order, order);
        for idx in 0..order {
            let v = GaussRes::from_parts((idx as u64 / p) as i64, (idx as u64 % p) as i64, p);
            for b in h.iter() {
                adj[(idx, (v + b).index())] = 1.0;
            }
        }
        let mut dense: Vec<f64> = adj.symmetric_eigen().eigenvalues.iter().copied().collect();
        dense.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut character = spectrum(p).unwrap().eigenvalues;
        character.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (d, c) in dense.iter().zip(&character) {
            assert!((d - c).abs() < 1e-6, "p = {p}: {d} vs {c}");
        }
    }

    println!(
        "criterion 10 PASS: distance identity (102 words), norm-sum identity (q <= 13), \
         all 41 weight-<=2 patterns decoded, spectra match dense oracle (p <= 13)"
    );
}
