//! Generate each named family and confirm its defining exact identity.

use sumsetlab::format::print_set;
use sumsetlab::generators::{gen_asymmetric, gen_freiman_large, gen_random, gen_small_extremal};
use sumsetlab::rational::{int, rat};

fn main() {
    let a = gen_freiman_large(2, 2, &rat(1, 5), &rat(1, 5)).unwrap();
    println!("large family:      A = {}", print_set(&a));
    println!("  lambda(A+A) = {} = 1 + lambda(A)", a.minkowski_sum(&a).unwrap().measure());

    let (a, b, strict) = gen_asymmetric(&rat(1, 5), &rat(2, 25), &rat(1, 100), 2).unwrap();
    println!("asymmetric family: A = {}", print_set(&a));
    println!("                   B = {}", print_set(&b));
    println!("  lambda(A+B) = {}, strict side holds: {strict}",
        a.minkowski_sum(&b).unwrap().measure());

    let (a, b) = gen_small_extremal(3, &rat(1, 2), &rat(1, 5), &rat(1, 10), &int(1)).unwrap();
    println!("small family:      A = {}", print_set(&a));
    println!("                   B = {}", print_set(&b));

    let r = gen_random(42, 4, &int(1), &rat(1, 2)).unwrap();
    println!("random (seed 42):  {}", print_set(&r));
}
