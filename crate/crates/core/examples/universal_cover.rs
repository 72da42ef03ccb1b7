use kronbrist::cover::{build_ball_rep, build_tau_bristle_rep, cover_max_bristled, verify_cover_equalities};
use kronbrist::field::PrimeField;

fn main() {
    let f = PrimeField::new(5).unwrap();
    let n = 3;
    for cover in [build_ball_rep(&f, n).unwrap(), build_tau_bristle_rep(&f, n).unwrap()] {
        let rep = cover.rep();
        println!("{} vertices, push-down {}", rep.support().len(), rep.push_down().module.dims());
        let report = verify_cover_equalities(&cover).unwrap();
        for check in &report.checks {
            println!("  {:<5} {}  {}", if check.pass { "ok" } else { "FAIL" }, check.name, check.detail);
        }
        for (label, count) in report.counts_by_type() {
            println!("  {count} x {label}");
        }
        println!(
            "  maximal bristled subrepresentation has dimension {}",
            cover_max_bristled(&rep).unwrap().total_dim()
        );
    }
}
