//! Evaluate all lower bounds on λ(A+B) and show which one binds.

use sumsetlab::bounds::lower_bounds;
use sumsetlab::format::parse_set;

fn main() {
    let a = parse_set("[0,11/20] U [9/10,27/20] U [9/5,43/20]").unwrap();
    let b = parse_set("[0,1/5] U [9/10,1]").unwrap();
    let r = lower_bounds(&a, &b).unwrap();
    println!("lambda(A) = {}, lambda(B) = {}", r.lam_a, r.lam_b);
    println!("lambda(A+B) = {}", r.lambda_sum);
    println!("(K, delta) = ({}, {}), K_A = {}", r.params.k, r.params.delta, r.k_a);
    for bound in &r.bounds {
        println!("  {:<14} {}", bound.name, bound.value);
    }
    println!("binding: {} (slack {})", r.binding, r.slack);
}
