use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use liepair::corpus::{random_connection, sl2_borel, split_solvable};
use liepair::kapranov::{hvf_coefficients, ThetaTables};
use liepair::linfty::jacobi_check;
use liepair::pbw::check_coalgebra_morphism;
use liepair::{Execution, PbwContext};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn pbw_structure(c: &mut Criterion) {
    let p = split_solvable().pair;
    let conn = random_connection(&p, 11);
    let mut g = c.benchmark_group("coalgebra_morphism_w6");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                // fresh context so the memo is rebuilt each time
                let ctx = PbwContext::new(p.clone(), conn.clone()).with_execution(exec);
                check_coalgebra_morphism(&ctx, 6)
            })
        });
    }
    g.finish();
}

fn theta_tables(c: &mut Criterion) {
    let p = split_solvable().pair;
    let conn = random_connection(&p, 29);
    let mut g = c.benchmark_group("theta_tables_w6");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| ThetaTables::build(&p, &conn, 6, exec)));
    }
    g.finish();
}

fn jacobi(c: &mut Criterion) {
    let p = sl2_borel().pair;
    let hvf = hvf_coefficients(&PbwContext::new(p.clone(), random_connection(&p, 11)), 5);
    let mut g = c.benchmark_group("jacobi_n4");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| jacobi_check(&p, &hvf, 4, exec).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, pbw_structure, theta_tables, jacobi);
criterion_main!(benches);
