//! Acceptance suite: one test per criterion, each printing a pass line.
//! All comparisons are exact; no tolerances anywhere.

use bottsam::num::{int_to_rat_matrix, invert, Int, Rat};
use bottsam::{
    bruhat_leq, dense_orbit_criterion, effective_cone_2cycles, effective_cone_divisors,
    enumerate_elements, enumerate_positive_roots, intersection_matrix, log_fano_certificate,
    nef2_cone, sigma_class, sigma_classes, BSWord, CartanMatrix, CycleClass, RootDatum, Weight,
    WeylElement,
};
use std::process::Command;

fn run_cli(args: &[&str]) -> serde_json::Value {
    let output = Command::new(env!("CARGO_BIN_EXE_bottsam"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(
        output.status.success(),
        "CLI failed: {:?}\nstderr: {}",
        args,
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("valid JSON on stdout")
}

fn word(name: &str, letters: &[usize]) -> BSWord {
    BSWord::analyze(&CartanMatrix::from_type(name).unwrap(), letters).unwrap()
}

fn ints(class: &bottsam::DivisorClass) -> Vec<i64> {
    class
        .integer_coeffs()
        .unwrap()
        .iter()
        .map(|c| i64::try_from(c).unwrap())
        .collect()
}

fn generator_set(value: &serde_json::Value) -> Vec<Vec<i64>> {
    let mut gens: Vec<Vec<i64>> = value["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| {
            g.as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_i64().unwrap())
                .collect()
        })
        .collect();
    gens.sort();
    gens
}

/// All words over 1..=rank of length 1..=max_len.
fn all_words(rank: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for j in 1..=rank {
                let mut w2 = w.clone();
                w2.push(j);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.retain(|w| !w.is_empty());
    out
}

#[test]
fn acceptance_criterion_1_example_a2_alternating() {
    let report = run_cli(&["eff-div", "--type", "A2", "--word", "1,2,1,2"]);
    let mut expected = vec![
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        vec![0, 0, 0, 1],
        vec![-1, 0, 1, 1],
    ];
    expected.sort();
    assert_eq!(generator_set(&report), expected);
    let extremal: Vec<bool> = report["extremal"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b.as_bool().unwrap())
        .collect();
    assert_eq!(extremal.len(), 5);
    assert!(extremal.iter().all(|&f| f), "all five rays extremal (2d-3)");
    println!("acceptance criterion 1: PASS");
}

#[test]
fn acceptance_criterion_2_example_a2_with_subtraction() {
    let sigma = sigma_class(&word("A2", &[1, 2, 1, 1]), 4).unwrap();
    assert_eq!(ints(&sigma.class), vec![1, -1, -1, 1]);
    assert_eq!(sigma.components, vec![(2, 1)], "component set J = {{2}}");
    println!("acceptance criterion 2: PASS");
}

#[test]
fn acceptance_criterion_3_example_c2_six_letters() {
    let report = run_cli(&["eff-div", "--type", "C2", "--word", "1,2,1,2,1,2"]);
    let mut expected: Vec<Vec<i64>> = (0..6)
        .map(|i| (0..6).map(|j| i64::from(i == j)).collect())
        .collect();
    expected.push(vec![-1, 0, 1, 1, 1, 0]);
    expected.push(vec![-2, -1, 0, 1, 2, 1]);
    expected.sort();
    assert_eq!(generator_set(&report), expected);
    println!("acceptance criterion 3: PASS");
}

#[test]
fn acceptance_criterion_4_c2_pipeline() {
    let bsw = word("C2", &[1, 2, 1, 2]);
    // v basis in lex subset coordinates {12, 13, 14, 23, 24, 34}.
    let v_basis: Vec<Vec<i64>> = vec![
        vec![1, 0, 0, 0, 0, 0],
        vec![0, 1, 0, 0, 0, 0],
        vec![0, 0, 1, 0, 0, 0],
        vec![-1, 0, 0, 1, 0, 0],
        vec![0, 0, 0, 0, 1, 0],
        vec![0, -2, 0, -1, 0, 1],
    ];
    let eff2 = effective_cone_2cycles(&bsw).unwrap();
    let mut expected: Vec<Vec<Int>> = v_basis
        .iter()
        .map(|v| v.iter().map(|&x| Int::from(x)).collect())
        .collect();
    expected.sort();
    assert_eq!(eff2.rays(), &expected[..], "Eff_2 rays are v_1..v_6");

    let cycles: Vec<CycleClass> = v_basis
        .iter()
        .map(|v| {
            let iv: Vec<Int> = v.iter().map(|&x| Int::from(x)).collect();
            CycleClass::from_vector(4, 2, &iv)
        })
        .collect();
    let a = intersection_matrix(&bsw, &cycles).unwrap();
    let expected_a: Vec<Vec<i64>> = vec![
        vec![0, 0, 0, 0, 0, 1],
        vec![0, 0, 0, 0, 1, -1],
        vec![0, 0, 0, 1, -2, 1],
        vec![0, 0, 1, 0, -2, 1],
        vec![0, 1, -2, -2, 4, -2],
        vec![1, -1, 1, 1, -2, 2],
    ];
    let got_a: Vec<Vec<i64>> = a
        .iter()
        .map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect())
        .collect();
    assert_eq!(got_a, expected_a, "intersection matrix equals A");

    let inv = invert(&int_to_rat_matrix(&a)).unwrap();
    let expected_inv: Vec<Vec<i64>> = vec![
        vec![0, 2, 1, 1, 1, 1],
        vec![2, 4, 2, 2, 1, 0],
        vec![1, 2, 0, 1, 0, 0],
        vec![1, 2, 1, 0, 0, 0],
        vec![1, 1, 0, 0, 0, 0],
        vec![1, 0, 0, 0, 0, 0],
    ];
    for (row, exp) in inv.iter().zip(&expected_inv) {
        let got: Vec<Rat> = row.clone();
        let want: Vec<Rat> = exp.iter().map(|&x| Rat::from_integer(Int::from(x))).collect();
        assert_eq!(got, want, "inverse matches the reference matrix");
    }

    let nef = nef2_cone(&bsw).unwrap();
    let mut expected_nef: Vec<Vec<Int>> = vec![
        vec![-1, 0, 1, 0, 1, 1],
        vec![0, 4, 2, 2, 1, 0],
        vec![0, 2, 0, 1, 0, 0],
        vec![1, 2, 1, 0, 0, 0],
        vec![1, 1, 0, 0, 0, 0],
        vec![1, 0, 0, 0, 0, 0],
    ]
    .into_iter()
    .map(|v| v.into_iter().map(Int::from).collect())
    .collect();
    expected_nef.sort();
    assert_eq!(nef.rays(), &expected_nef[..], "Nef^2 rays match the reference list");
    for ray in nef.rays() {
        assert!(eff2.contains_int(ray).unwrap(), "nef ray inside Eff_2");
    }

    // The CLI pipeline agrees.
    let cli_nef = run_cli(&["nef2", "--type", "C2", "--word", "1,2,1,2"]);
    let cli_rays: Vec<Vec<i64>> = cli_nef["rays"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect())
        .collect();
    assert_eq!(cli_rays.len(), 6);
    println!("acceptance criterion 4: PASS");
}

#[test]
fn acceptance_criterion_5_intro_example() {
    let report = effective_cone_divisors(&word("A1", &[1, 1])).unwrap();
    assert_eq!(
        report.generators.iter().map(ints).collect::<Vec<_>>(),
        vec![vec![1, 0], vec![0, 1], vec![-1, 1]]
    );
    assert_eq!(
        report.extremal,
        vec![true, false, true],
        "X_2 detected as redundant"
    );
    let reduced = report.cone.extremal_reduced().unwrap();
    assert_eq!(reduced.rays().len(), 2, "Eff generated by X_1 and X_2 - X_1");
    println!("acceptance criterion 5: PASS");
}

#[test]
fn acceptance_criterion_6_extremal_ray_scaling() {
    for (d, expected) in [(5usize, 7usize), (6, 9)] {
        let letters: Vec<usize> = (0..d).map(|i| 1 + i % 2).collect();
        let report = effective_cone_divisors(&word("A2", &letters)).unwrap();
        let count = report.extremal.iter().filter(|&&f| f).count();
        assert_eq!(count, expected, "alternating A2 word of length {d}");
        assert_eq!(report.cone.extremal_reduced().unwrap().rays().len(), expected);
    }
    println!("acceptance criterion 6: PASS");
}

/// Brute-force subword oracle for the Bruhat order: v ≤ w iff some subword of
/// a reduced word of w multiplies to v.
fn bruhat_subword_oracle(cartan: &CartanMatrix, v: &WeylElement, w: &WeylElement) -> bool {
    let reduced = w.reduced_word();
    let n = reduced.len();
    for mask in 0u32..(1 << n) {
        let mut prod = WeylElement::identity(cartan);
        for (pos, &letter) in reduced.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                prod = prod.multiply_simple(letter).unwrap();
            }
        }
        if &prod == v {
            return true;
        }
    }
    false
}

fn datum(name: &str) -> RootDatum {
    enumerate_positive_roots(&CartanMatrix::from_type(name).unwrap())
}

#[test]
fn acceptance_criterion_7a_bruhat_oracle() {
    for name in ["A2", "C2", "G2", "A3"] {
        let datum = datum(name);
        let elements = enumerate_elements(&datum).unwrap();
        for v in &elements {
            for w in &elements {
                let fast = bruhat_leq(v, w).unwrap();
                let slow = bruhat_subword_oracle(&datum.cartan, v, w);
                assert_eq!(fast, slow, "{name}: disagreement");
            }
        }
    }
    println!("acceptance criterion 7a: PASS");
}

#[test]
fn acceptance_criterion_7b_double_dual_and_unimodularity() {
    for name in ["A2", "C2"] {
        for letters in all_words(2, 5) {
            let bsw = word(name, &letters);
            let report = effective_cone_divisors(&bsw).unwrap();
            let cone = &report.cone;
            let dd = cone.dual(None).unwrap().dual(None).unwrap();
            assert!(
                dd.same_rays(&cone.extremal_reduced().unwrap()),
                "{name} {letters:?}: double dual"
            );
            let ring = bottsam::ChowRing::new(&bsw);
            for k in 0..=bsw.len() {
                let m = ring.pairing_matrix(k).unwrap();
                let det = bottsam::num::det(&int_to_rat_matrix(&m));
                let one = Rat::from_integer(Int::from(1));
                assert!(
                    det == one || det == -one.clone(),
                    "{name} {letters:?} grade {k}: det {det}"
                );
            }
        }
    }
    println!("acceptance criterion 7b: PASS");
}

#[test]
fn acceptance_criterion_7c_sigma_validations() {
    let mut checked = 0usize;
    for name in ["A2", "C2", "G2"] {
        for letters in all_words(2, 6) {
            let bsw = word(name, &letters);
            if bsw.sigma_positions().is_empty() {
                continue;
            }
            let sigmas = sigma_classes(&bsw)
                .unwrap_or_else(|e| panic!("{name} {letters:?}: {e}"));
            assert_eq!(sigmas.len(), bsw.sigma_positions().len());
            for s in &sigmas {
                assert!(s.coefficient_check && s.fiber_check);
                checked += 1;
            }
        }
    }
    assert!(checked > 100, "corpus covered {checked} sigma classes");
    println!("acceptance criterion 7c: PASS ({checked} sigma classes validated)");
}

#[test]
fn acceptance_criterion_7d_dense_orbit() {
    for name in ["A2", "C2", "G2"] {
        for letters in all_words(2, 6) {
            let bsw = word(name, &letters);
            if !bsw.is_reduced() {
                continue;
            }
            let report = dense_orbit_criterion(&bsw, None).unwrap();
            assert!(report.satisfied, "{name} {letters:?}: reduced word");
        }
    }
    // C2 six-letter word with the subword {3,4,5,6}: characters {α, β}.
    let bsw = word("C2", &[1, 2, 1, 2, 1, 2]);
    let report = dense_orbit_criterion(&bsw, Some(&[3, 4, 5, 6])).unwrap();
    assert!(report.satisfied);
    let cartan = CartanMatrix::from_type("C2").unwrap();
    assert_eq!(
        report.characters,
        vec![cartan.simple_root(1), cartan.simple_root(2)]
    );
    // The default greedy subword also certifies the dense orbit.
    assert!(dense_orbit_criterion(&bsw, None).unwrap().satisfied);
    println!("acceptance criterion 7d: PASS");
}

#[test]
fn acceptance_criterion_7e_log_fano_corpus() {
    for name in ["A2", "C2"] {
        for letters in all_words(2, 6) {
            let bsw = word(name, &letters);
            let cert = log_fano_certificate(&bsw, None)
                .unwrap_or_else(|e| panic!("{name} {letters:?}: {e}"));
            assert!(cert.checks.floor_zero && cert.checks.ample && cert.checks.decomposition);
        }
    }
    println!("acceptance criterion 7e: PASS");
}

#[test]
fn acceptance_criterion_8_appendix_identity() {
    // Independent oracle: gamma_i via suffix products against the Demazure
    // expansion of O_d(−ρ), on 200 seeded random words.
    let mut state = 0x243f6a8885a308d3u64;
    let mut next = move |m: u64| {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (state >> 33) % m
    };
    let types = ["A2", "B3", "C3", "G2"];
    for _ in 0..200 {
        let name = types[next(4) as usize];
        let cartan = CartanMatrix::from_type(name).unwrap();
        let len = 1 + next(8) as usize;
        let letters: Vec<usize> = (0..len)
            .map(|_| 1 + next(cartan.rank() as u64) as usize)
            .collect();
        let bsw = BSWord::analyze(&cartan, &letters).unwrap();
        let rho = Weight::rho(cartan.rank());
        let expansion = bsw.expand_line_bundle(len, &rho.neg()).unwrap();
        let anticanonical = bsw.canonical_class();
        for i in 0..len {
            let lhs = &expansion.coeffs[i] + Rat::from_integer(Int::from(1));
            assert_eq!(
                lhs, anticanonical.coeffs[i],
                "{name} {letters:?} coefficient {i}"
            );
        }
    }
    println!("acceptance criterion 8: PASS");
}
