//! Decompose a pair attaining λ(A+B) = diam(A) + λ(A) into prefix,
//! free interior, and reflected suffix.

use sumsetlab::format::{parse_set, print_set};
use sumsetlab::structure::extremal_large_decompose;

fn main() {
    let a = parse_set("{0} U [1/10,9/10] U {1}").unwrap();
    let d = extremal_large_decompose(&a, &a).unwrap();
    println!("variant: {:?}", d.variant);
    println!("b = {}, c = {}", d.b, d.c);
    println!("A1 = {}", print_set(&d.a1));
    println!("interior = {}", d.interior);
    println!("A2 (reflected) = {}", print_set(&d.a2));
    println!("companion pieces: B1 = {}, B2 = {}", print_set(&d.b1), print_set(&d.b2));
    println!("density-cap scales: c1 = {}, c2 = {}", d.c1, d.c2);
}
