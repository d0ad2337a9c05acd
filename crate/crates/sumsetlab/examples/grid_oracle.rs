//! Cross-check an exact sumset against the discretized grid oracle.

use sumsetlab::format::parse_set;
use sumsetlab::oracle::{gap_points, grid_measure, grid_sumset, GridSet};
use sumsetlab::sets::Interval;
use sumsetlab::rational::int;

fn main() {
    let a = parse_set("{0} U [1/10,9/10] U {1}").unwrap();
    let exact = a.minkowski_sum(&a).unwrap();
    for q in [10u64, 100, 1000] {
        let est = grid_measure(&GridSet::from_set(&exact, q).unwrap());
        println!("q = {q:>4}: grid measure {est} (exact {})", exact.measure());
    }
    let grid = grid_sumset(&a, &a, 20).unwrap();
    let sound = grid.marked_points().iter().all(|p| exact.contains_point(p));
    println!("every grid sum point lies in the exact sumset: {sound}");
    let window = Interval::new(int(0), int(1)).unwrap();
    println!("gap points in [0,1] at q = 20: {:?}",
        gap_points(&exact, &window, 20).unwrap().iter().map(|x| x.to_string()).collect::<Vec<_>>());
}
