use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use minw_core::cuspidal::{check_sl_relations, LatticeModule};
use minw_core::glrep::{build_irreducible, HighestWeight};
use minw_core::par;
use minw_core::rational::frac;
use minw_core::wstructure::{composition_structure, Flavor, WOperatorSet};

fn modes() -> [(&'static str, bool); 2] {
    [("parallel", false), ("sequential", true)]
}

fn build_and_compose(c: &mut Criterion) {
    let lambda = HighestWeight::from_ints(&[3, 1, 0, -2]).unwrap();
    let mut group = c.benchmark_group("composition");
    group.sample_size(10);
    for (name, seq) in modes() {
        group.bench_function(BenchmarkId::new(name, "(3,1,0,-2)"), |b| {
            par::set_sequential(seq);
            b.iter(|| {
                let rep = build_irreducible(&lambda).unwrap();
                let ops = WOperatorSet::build(&rep, Flavor::SigmaTau).unwrap();
                composition_structure(&ops).unwrap().length
            })
        });
    }
    par::set_sequential(false);
    group.finish();
}

fn cuspidal_relations(c: &mut Criterion) {
    let lambda = HighestWeight::from_ints(&[1, 0, 0]).unwrap();
    let fiber = build_irreducible(&lambda).unwrap();
    let mu = [frac(1, 3), frac(1, 5), frac(1, 7)];
    let mut group = c.benchmark_group("cuspidal-relations");
    group.sample_size(10);
    for (name, seq) in modes() {
        group.bench_function(BenchmarkId::new(name, "n=3 radius=3"), |b| {
            par::set_sequential(seq);
            b.iter(|| {
                let m = LatticeModule::induced(&mu, &fiber, 3).unwrap();
                check_sl_relations(&m, 2).violations.len()
            })
        });
    }
    par::set_sequential(false);
    group.finish();
}

criterion_group!(benches, build_and_compose, cuspidal_relations);
criterion_main!(benches);
