//! The multi-crossing relaxation: with one down-crossing, A+A still
//! contains three long intervals.

use sumsetlab::format::parse_set;
use sumsetlab::structure::relaxed_verify;

fn main() {
    let a = parse_set("[0,2/5] U [4/5,1]").unwrap();
    let intervals = relaxed_verify(&a, &a, 1).unwrap();
    println!("certified intervals inside A + A:");
    for iv in &intervals {
        println!("  {iv} (length {})", iv.len());
    }
}
