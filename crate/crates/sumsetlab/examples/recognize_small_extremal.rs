//! Round-trip the small-ratio extremal family: generate the template,
//! then recover its parameters from the bare sets.

use sumsetlab::format::print_set;
use sumsetlab::generators::gen_small_extremal;
use sumsetlab::rational::{int, rat};
use sumsetlab::structure::small_extremal_recognize;

fn main() {
    let (a, b) = gen_small_extremal(3, &rat(1, 2), &rat(1, 5), &rat(1, 10), &int(1)).unwrap();
    println!("A = {}", print_set(&a));
    println!("B = {}", print_set(&b));
    let shape = small_extremal_recognize(&a, &b).unwrap();
    println!(
        "recognized: K = {}, delta = {}, b1 = {}, b2 = {}, D_B = {}",
        shape.k, shape.delta, shape.b1, shape.b2, shape.d_b
    );
}
