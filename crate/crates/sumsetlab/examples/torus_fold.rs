//! Fold a set onto the torus R/D and inspect the covering multiplicity
//! layers. Their measures always sum back to λ(S).

use sumsetlab::format::{parse_set, print_set};
use sumsetlab::rational::{int, Rational};
use sumsetlab::torus::fold;

fn main() {
    let a = parse_set("[0,11/20] U [9/10,27/20] U [9/5,43/20]").unwrap();
    let layers = fold(&a, &int(1)).unwrap();
    let mut total = Rational::from_integer(0.into());
    for k in 1..=layers.max_multiplicity() {
        let layer = layers.layer(k);
        println!("layer {k}: {} (measure {})", print_set(&layer), layer.measure());
        total += layer.measure();
    }
    println!("sum of layer measures = {} = lambda(A) = {}", total, a.measure());
}
