use kronbrist::bristle::{bristle_variety, fan_unbristled, maximal_bristled_submodule, zigzag_bristled};
use kronbrist::field::{Field, PrimeField};

fn main() {
    let f = PrimeField::new(5).unwrap();
    for (name, m) in [("zigzag", zigzag_bristled(&f)), ("fan", fan_unbristled(&f))] {
        let variety = bristle_variety(&m).unwrap();
        println!("{name} {}:", m.dims());
        for pt in &variety.points {
            let v: Vec<String> = pt.vector.iter().map(|x| f.format(x)).collect();
            println!("  line <{}> of type {}", v.join(","), pt.bristle.label());
        }
        println!("  maximal bristled submodule {}", maximal_bristled_submodule(&m).unwrap().dims());
    }
}
