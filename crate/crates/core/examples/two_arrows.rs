use kronbrist::bristle::is_bristled;
use kronbrist::families::{n2_bristle_generator, n2_preinjective, projective_line};
use kronbrist::field::{Field, PrimeField};

fn main() {
    let f = PrimeField::new(3).unwrap();
    let points = projective_line(&f).unwrap();
    println!("{} points on the projective line over GF(3)", points.len());
    for t in 0..6 {
        let it = n2_preinjective(&f, t);
        println!("I{t} {}: bristled {}", it.dims(), is_bristled(&it).unwrap());
    }
    let t = 2;
    for c in &points {
        let m: Vec<String> = n2_bristle_generator(&f, t, c).iter().map(|x| f.format(x)).collect();
        println!("m_c in I{t} for {c:?}: ({})", m.join(", "));
    }
}
