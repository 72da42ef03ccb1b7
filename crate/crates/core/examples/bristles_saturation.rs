use kronbrist::bristle::{
    canonical_set, enumerate_bristles, is_bristled, is_saturated, unsaturated_witnesses, CanonicalSet,
};
use kronbrist::families::preinjective;
use kronbrist::field::PrimeField;
use kronbrist::kron::{tau, KroneckerModule};

fn main() {
    let f = PrimeField::new(2).unwrap();
    let n = 3;
    let all = enumerate_bristles(&f, n).unwrap();
    println!("{} bristles over GF(2): {}", all.len(), all.iter().map(|b| b.label()).collect::<Vec<_>>().join(" "));
    let b0 = canonical_set(&f, CanonicalSet::B0, n).unwrap();
    println!("B0 = {}", b0.iter().map(|b| b.label()).collect::<Vec<_>>().join(" "));

    let s2 = KroneckerModule::simple_sink(&f, n);
    let tb1 = tau(&all[0].module());
    for (name, m) in [("S(2)", s2), ("I2", preinjective(&f, n, 2)), ("tau B(1)", tb1)] {
        let witnesses: Vec<String> = unsaturated_witnesses(&m).unwrap().iter().map(|b| b.label()).collect();
        println!(
            "{name}: bristled {}, saturated {}, Ext^1(B, -) != 0 for {} bristles",
            is_bristled(&m).unwrap(),
            is_saturated(&m).unwrap(),
            witnesses.len()
        );
    }
}
