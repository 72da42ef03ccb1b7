use kronbrist::bristle::BristlePoint;
use kronbrist::families::preinjective;
use kronbrist::field::PrimeField;
use kronbrist::kron::{euler_form, ext1_dim, ext1_dim_via_resolution, hom_basis, hom_dim};

fn main() {
    let f = PrimeField::new(3).unwrap();
    let n = 3;
    let b1 = BristlePoint::single(&f, n, 1).unwrap().module();
    for t in 0..4 {
        let it = preinjective(&f, n, t);
        let (hom, ext) = (hom_dim(&b1, &it).unwrap(), ext1_dim(&b1, &it).unwrap());
        let euler = euler_form(n, b1.dims().as_i64(), it.dims().as_i64());
        println!("I{t} {}: Hom(B(1), I{t}) = {hom}, Ext = {ext}, Euler form = {euler}", it.dims());
    }

    let b = BristlePoint::pair(&f, n, 1, 2).unwrap().module();
    println!(
        "Ext^1(B(1,2), B(1,2)) = {} by the Euler form, {} by the presentation",
        ext1_dim(&b, &b).unwrap(),
        ext1_dim_via_resolution(&b, &b).unwrap()
    );
    let i2 = preinjective(&f, n, 2);
    for h in hom_basis(&b, &i2).unwrap() {
        println!("map B(1,2) -> I2 with image of dimension {}", h.image().dims());
    }
}
