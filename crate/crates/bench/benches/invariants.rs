use bottsam::{
    bruhat_leq, demazure_product, effective_cone_2cycles, effective_cone_divisors,
    enumerate_elements, enumerate_positive_roots, nef2_cone, sigma_classes, BSWord, CartanMatrix,
    ChowRing,
};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn bench_demazure(c: &mut Criterion) {
    let g2 = CartanMatrix::from_type("G2").unwrap();
    let word: Vec<usize> = (0..64).map(|i| 1 + (i * i + i / 3) % 2).collect();
    c.bench_function("demazure_product_g2_len64", |b| {
        b.iter(|| demazure_product(&g2, black_box(&word)).unwrap())
    });
}

fn bench_bruhat(c: &mut Criterion) {
    let datum = enumerate_positive_roots(&CartanMatrix::from_type("A3").unwrap());
    let elements = enumerate_elements(&datum).unwrap();
    c.bench_function("bruhat_all_pairs_a3", |b| {
        b.iter(|| {
            let mut count = 0usize;
            for v in &elements {
                for w in &elements {
                    if bruhat_leq(v, w).unwrap() {
                        count += 1;
                    }
                }
            }
            black_box(count)
        })
    });
}

fn bench_sigma(c: &mut Criterion) {
    let cartan = CartanMatrix::from_type("C2").unwrap();
    let word = BSWord::analyze(&cartan, &[1, 2, 1, 2, 1, 2]).unwrap();
    c.bench_function("sigma_classes_c2_len6", |b| {
        b.iter(|| sigma_classes(black_box(&word)).unwrap())
    });
    let g2 = CartanMatrix::from_type("G2").unwrap();
    let word = BSWord::analyze(&g2, &[1, 2, 1, 2, 2, 1]).unwrap();
    c.bench_function("sigma_classes_g2_len6", |b| {
        b.iter(|| sigma_classes(black_box(&word)).unwrap())
    });
}

fn bench_cones(c: &mut Criterion) {
    let cartan = CartanMatrix::from_type("C2").unwrap();
    let word = BSWord::analyze(&cartan, &[1, 2, 1, 2]).unwrap();
    c.bench_function("nef2_pipeline_c2", |b| {
        b.iter(|| {
            let eff = effective_cone_2cycles(black_box(&word)).unwrap();
            let nef = nef2_cone(black_box(&word)).unwrap();
            black_box((eff, nef))
        })
    });
    let g2 = CartanMatrix::from_type("G2").unwrap();
    let word = BSWord::analyze(&g2, &[1, 2, 1, 2, 1, 1]).unwrap();
    c.bench_function("eff_divisors_g2_len6", |b| {
        b.iter(|| effective_cone_divisors(black_box(&word)).unwrap())
    });
}

fn bench_chow(c: &mut Criterion) {
    let cartan = CartanMatrix::from_type("G2").unwrap();
    let word = BSWord::analyze(&cartan, &[1, 2, 1, 2, 1, 2]).unwrap();
    let ring = ChowRing::new(&word);
    c.bench_function("pairing_matrix_grade3_g2_len6", |b| {
        b.iter(|| ring.pairing_matrix(black_box(3)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_demazure,
    bench_bruhat,
    bench_sigma,
    bench_cones,
    bench_chow
);
criterion_main!(benches);
