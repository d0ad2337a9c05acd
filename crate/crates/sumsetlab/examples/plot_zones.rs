//! Render the density profiles g_A, g_B, g, h and the three zones to SVG.

use sumsetlab::format::parse_set;
use sumsetlab::plot::plot_svg;

fn main() {
    let a = parse_set("{0} U [1/10,9/10] U {1}").unwrap();
    let svg = plot_svg(&a, &a).unwrap();
    let path = std::env::temp_dir().join("sumsetlab_zones.svg");
    std::fs::write(&path, &svg).unwrap();
    println!("wrote {} ({} bytes)", path.display(), svg.len());
}
