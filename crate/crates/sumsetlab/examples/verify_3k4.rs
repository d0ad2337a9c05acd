//! Verify the continuous 3k−4 theorem: A+B contains a long interval
//! whose endpoints are certified exactly.

use sumsetlab::format::parse_set;
use sumsetlab::structure::freiman_verify;

fn main() {
    let a = parse_set("{0} U [1/10,9/10] U {1}").unwrap();
    let r = freiman_verify(&a, &a).unwrap();
    println!("hypothesis (i):  {}", r.hyp_i);
    println!("hypothesis (ii): {}", r.hyp_ii);
    println!("diam(A) <= lambda(A+B) - lambda(B): {} (slack {})", r.diam_a_ok, r.diam_a_slack);
    println!("diam(B) <= lambda(A+B) - lambda(A): {} (slack {})", r.diam_b_ok, r.diam_b_slack);
    println!("interval I = ({}, {}) of length {}", r.e, r.c, r.i_length);
    println!("verified: {}", r.verified);
}
