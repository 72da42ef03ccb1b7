use kronbrist::bristle::BristlePoint;
use kronbrist::field::PrimeField;
use kronbrist::kron::{coxeter_power, find_isomorphism, tau, tau_inverse, tau_power, IsoSearch, KroneckerModule};

fn main() {
    let f = PrimeField::new(5).unwrap();
    let n = 3;
    let b1 = BristlePoint::single(&f, n, 1).unwrap().module();
    for t in 0..4 {
        let m = tau_power(&b1, t);
        println!("tau^{t} B(1): {}  Coxeter prediction {:?}", m.dims(), coxeter_power(n, (1, 1), t));
    }
    let back = tau_inverse(&tau(&b1));
    let iso = find_isomorphism(&back, &b1, IsoSearch::default()).unwrap();
    println!("tau^- tau B(1) vs B(1): {}", iso.label());
    println!("tau of the projective P(1) has dims {}", tau(&KroneckerModule::projective_source(&f, n)).dims());
}
