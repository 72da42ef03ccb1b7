use kronbrist::bristle::is_bristled;
use kronbrist::harness::{canonicalize, parse_module_file, AnyModule};

const TEXT: &str = "\
# a (2,1)-module over GF(7)
kron field=gf(7) n=2 dims=2,1
alpha 1
  1   3
alpha 2
  0   5   # second arrow
";

fn main() {
    let m = parse_module_file(TEXT).unwrap();
    print!("{}", canonicalize(TEXT).unwrap());
    if let AnyModule::Prime(m) = &m {
        println!("bristled: {}", is_bristled(m).unwrap());
    }
    match parse_module_file("kron n=2 field=gf(7) dims=1,1\nalpha 1\n9\nalpha 2\n0\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
}
