use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use walkop_core::harness::{run_qwalk_observables, QwalkRunSpec};
use walkop_core::opinion::{run, ModelParams};
use walkop_core::qwalk::{build_case, evolve, symmetric_initial_state, CaseKind, WalkCase};

fn qwalk(c: &mut Criterion) {
    let mut group = c.benchmark_group("qwalk_evolve");
    for steps in [100usize, 400, 1600] {
        let profile = build_case(WalkCase::new(CaseKind::IIIB, 7)).unwrap();
        let init = symmetric_initial_state();
        group.bench_with_input(BenchmarkId::from_parameter(steps), &steps, |b, &steps| {
            b.iter(|| evolve(black_box(&init), &profile, steps))
        });
    }
    group.finish();

    c.bench_function("qwalk_observables_400", |b| {
        let spec = QwalkRunSpec {
            case: WalkCase::new(CaseKind::IA, 14),
            steps: 400,
            record_distribution_at: vec![400],
        };
        b.iter(|| run_qwalk_observables(black_box(&spec)).unwrap())
    });
}

fn opinion(c: &mut Criterion) {
    let mut group = c.benchmark_group("opinion_run");
    for n in [25usize, 50, 100] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            let mut seed = 0u64;
            b.iter(|| {
                seed += 1;
                run(&ModelParams {
                    alpha: 0.5,
                    mu: 0.5,
                    n_agents: n,
                    seed,
                    max_steps: 10_000_000,
                })
                .unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, qwalk, opinion);
criterion_main!(benches);
