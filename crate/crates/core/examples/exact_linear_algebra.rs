use kronbrist::field::{Field, PrimeField, Rationals};
use kronbrist::linalg::{Matrix, Subspace};

fn main() {
    let f = PrimeField::new(5).unwrap();
    let a = Matrix::from_i64(&f, &[&[1, 2, 3, 4], &[2, 0, 1, 3], &[3, 2, 4, 2]]);
    let r = a.rref();
    println!("A over GF(5):\n{a:?}");
    println!("rref:\n{:?}\npivots {:?}, rank {}", r.reduced, r.pivots, r.rank());
    println!("kernel basis: {:?}", a.kernel().basis_vectors());

    let u = Subspace::span(&Matrix::from_i64(&f, &[&[1, 0, 0, 1], &[0, 1, 0, 0]]));
    let v = Subspace::span(&Matrix::from_i64(&f, &[&[0, 1, 1, 0], &[1, 0, 0, 1]]));
    let (sum, meet) = (u.sum(&v).unwrap(), u.intersection(&v).unwrap());
    println!("dim U + V = {}, dim U ∩ V = {}", sum.dim(), meet.dim());

    let q = Rationals;
    let m = Matrix::from_i64(&q, &[&[2, 1], &[7, 4]]);
    let inv = m.inverse().unwrap();
    println!(
        "inverse over Q: [{}, {}; {}, {}]",
        q.format(inv.get(0, 0)),
        q.format(inv.get(0, 1)),
        q.format(inv.get(1, 0)),
        q.format(inv.get(1, 1))
    );
}
