use qglmn::uqglmn::{suites, AlgebraHandle};
use std::time::Instant;

fn main() {
    for (m, n) in [(1usize, 1usize), (2, 1), (1, 2), (2, 2)] {
        let bound = qglmn::default_degree_bound(m, n);
        let t0 = Instant::now();
        let h = AlgebraHandle::build(m, n, bound).unwrap();
        let build = t0.elapsed();
        let t1 = Instant::now();
        let overlaps = h.presentation().certify().expect("confluent");
        let cert = t1.elapsed();
        let t2 = Instant::now();
        let suite = suites::verify_commutation_suite(&h);
        let bad: Vec<_> = suite.iter().filter(|(_, v)| !v.is_verified()).collect();
        println!(
            "({m},{n}) bound={bound} rules={} build={:?} certify={:?} ({} overlaps) suite={} items in {:?}, failures={:?}",
            h.presentation().rules().len(), build, cert, overlaps, suite.len(), t2.elapsed(), bad
        );
    }
}
