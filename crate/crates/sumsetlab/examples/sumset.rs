//! Compute a Minkowski sum exactly and print it in both formats.

use sumsetlab::format::{parse_set, print_set, set_to_json};

fn main() {
    let a = parse_set("{0} U [1/10,9/10] U {1}").unwrap();
    let s = a.minkowski_sum(&a).unwrap();
    println!("A     = {}", print_set(&a));
    println!("A + A = {}", print_set(&s));
    println!("measure(A + A) = {}", s.measure());
    println!("json: {}", set_to_json(&s));
}
