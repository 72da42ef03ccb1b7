use itertools::Itertools;
use kronbrist::bristle::{canonical_set, enumerate_bristles, modules_of, CanonicalSet};
use kronbrist::families::preinjective;
use kronbrist::field::PrimeField;
use kronbrist::kron::{is_generated_by, trace_submodule, SubmodulePair};

fn main() {
    let f = PrimeField::new(2).unwrap();
    let n = 3;
    let b0 = modules_of(&canonical_set(&f, CanonicalSet::B0, n).unwrap());
    for t in 0..5 {
        let it = preinjective(&f, n, t);
        println!("I{t} {}: generated by B0 = {}", it.dims(), is_generated_by(&b0, &it).unwrap());
    }

    // No n + 1 bristles generate I3: sum the per-bristle traces over every subset.
    let i3 = preinjective(&f, n, 3);
    let bristles = enumerate_bristles(&f, n).unwrap();
    let traces: Vec<_> = bristles.iter().map(|b| trace_submodule(&[b.module()], &i3).unwrap()).collect();
    let generating = (0..bristles.len())
        .combinations(n + 1)
        .filter(|s| s.iter().fold(SubmodulePair::zero(&i3), |acc, &k| acc.sum(&traces[k]).unwrap()).is_full())
        .count();
    println!("{}-subsets of the {} bristles generating I3: {generating}", n + 1, bristles.len());
}
