//! Acceptance gate: nine exact criteria, each printing a single pass line.
//! Every comparison is exact rational arithmetic; there are no tolerances.

use num_traits::{Signed, Zero};
use sumsetlab::bounds::{f_of_k, lower_bounds, ruzsa_params};
use sumsetlab::density::{cumulative_profile, zone_partition};
use sumsetlab::format::{parse_set, print_set};
use sumsetlab::generators::{
    gen_asymmetric, gen_freiman_large, gen_random, gen_small_extremal,
};
use sumsetlab::oracle::{gap_points, grid_measure, grid_sumset, GridSet};
use sumsetlab::plot::plot_svg;
use sumsetlab::rational::{ceil_rational, int, rat, Rational};
use sumsetlab::sets::{Interval, IntervalSet};
use sumsetlab::structure::{
    extremal_large_decompose, freiman_verify, lemma_mes_check, relaxed_verify,
    small_extremal_recognize,
};
use sumsetlab::torus;
use std::sync::OnceLock;

const SWEEP_SIZE: u64 = 10_000;

struct Pair {
    a: IntervalSet,
    b: IntervalSet,
    sum: IntervalSet,
}

/// 10,000 seeded pairs, endpoint denominators <= 720, <= 6 intervals each,
/// ordered so diam(A) >= diam(B). Built once and shared by the criteria.
fn sweep() -> &'static [Pair] {
    static SWEEP: OnceLock<Vec<Pair>> = OnceLock::new();
    SWEEP.get_or_init(|| {
        let scale = int(1);
        (0..SWEEP_SIZE)
            .map(|i| {
                let count = 1 + (i % 6) as u32;
                let density = rat(1 + (i % 3) as i64, 4);
                let mut a = gen_random(2 * i, count, &scale, &density).unwrap();
                let mut b = gen_random(2 * i + 1, count, &scale, &density).unwrap();
                if a.diameter().unwrap() < b.diameter().unwrap() {
                    std::mem::swap(&mut a, &mut b);
                }
                let sum = a.minkowski_sum(&b).unwrap();
                Pair { a, b, sum }
            })
            .collect()
    })
}

#[test]
fn criterion_1_family_identity_and_3k4() {
    let a = gen_freiman_large(2, 2, &rat(1, 5), &rat(1, 5)).unwrap();
    let s = a.minkowski_sum(&a).unwrap();
    assert_eq!(a.diameter().unwrap(), int(1));
    assert_eq!(s.measure(), a.diameter().unwrap() + a.measure());
    assert_eq!(s.measure(), rat(9, 5));
    let r = freiman_verify(&a, &a).unwrap();
    assert!(r.verified);
    assert_eq!(r.interval, Interval::new(rat(1, 10), rat(19, 10)).unwrap());
    println!("acceptance 1: family identity lambda(A+A) = D_A + lambda(A) = 9/5 with I = (1/10, 19/10): pass");
}

#[test]
fn criterion_2_small_extremal_equality_round_trip() {
    let (a, b) = gen_small_extremal(3, &rat(1, 2), &rat(1, 5), &rat(1, 10), &int(1)).unwrap();
    let s = a.minkowski_sum(&b).unwrap();
    assert_eq!(s.measure(), rat(12, 5));
    assert_eq!(
        s.measure(),
        a.measure() + rat(7, 2) * b.measure()
    );
    let shape = small_extremal_recognize(&a, &b).unwrap();
    assert_eq!(
        (shape.k, shape.delta, shape.b1, shape.b2, shape.d_b),
        (3, rat(1, 2), rat(1, 5), rat(1, 10), int(1))
    );
    println!("acceptance 2: small-extremal equality 12/5 exact and parameter round trip: pass");
}

#[test]
fn criterion_3_bound_suite_over_sweep() {
    for (i, p) in sweep().iter().enumerate() {
        let lam_sum = p.sum.measure();
        let lam_a = p.a.measure();
        let lam_b = p.b.measure();
        let d_a = p.a.diameter().unwrap();
        let d_b = p.b.diameter().unwrap();

        // superadditivity
        assert!(lam_sum >= &lam_a + &lam_b, "superadditive fails at pair {i}");
        if lam_a.is_zero() || lam_b.is_zero() {
            // purely singleton draws: the remaining bounds need positive measure
            continue;
        }
        // Ruzsa's bound
        let params = ruzsa_params(&lam_a, &lam_b).unwrap();
        let kd = int(params.k.into()) + &params.delta;
        let ruzsa = &lam_a + (&kd * &lam_b).min(d_b.clone());
        assert!(lam_sum >= ruzsa, "ruzsa bound fails at pair {i}");
        // improved bound whenever D_A / D_B <= K
        if d_b.is_positive() && &d_a / &d_b <= int(params.k.into()) {
            let ceil: i64 = num_traits::ToPrimitive::to_i64(
                &ceil_rational(&(&d_a / &d_b)).to_integer(),
            )
            .unwrap();
            let improved = f_of_k(ceil as u32, &lam_a, &lam_b)
                .unwrap()
                .min(&lam_a + &d_b);
            assert!(lam_sum >= improved, "improved bound fails at pair {i}");
        }
        // crossing bound whenever delta > 0
        let delta = &lam_a + &lam_b - &d_a;
        if delta.is_positive() {
            let zp = zone_partition(&p.a, &p.b).unwrap();
            let m = int(zp.down_count as i64);
            let crossing = &lam_b + &d_a + m * (&delta + &d_a - &d_b);
            assert!(lam_sum >= crossing, "crossing bound fails at pair {i}");
        }
        // report-level invariant: no listed bound exceeds the exact measure
        let report = lower_bounds(&p.a, &p.b).unwrap();
        assert!(report.slack >= int(0), "negative slack at pair {i}");
    }
    println!("acceptance 3: bound suite over {SWEEP_SIZE} pairs, zero violations: pass");
}

#[test]
fn criterion_4_structure_suite_over_sweep() {
    let mut applied_3k4 = 0u32;
    let mut applied_relaxed = 0u32;
    for (i, p) in sweep().iter().enumerate() {
        if p.a.measure().is_zero() || p.b.measure().is_zero() {
            continue;
        }
        let r = freiman_verify(&p.a, &p.b).unwrap();
        if r.applicable() {
            applied_3k4 += 1;
            assert!(r.verified, "3k-4 conclusions fail at pair {i}");
        }
        let lam_b = p.b.measure();
        let d_a = p.a.diameter().unwrap();
        let d_b = p.b.diameter().unwrap();
        let delta = p.a.measure() + &lam_b - &d_a;
        if !delta.is_positive() {
            continue;
        }
        let gap = &d_a - &d_b + &delta;
        for m in 0usize..=2 {
            let hyp = p.sum.measure() < &d_a + &lam_b + int(m as i64 + 1) * &gap;
            if !hyp {
                continue;
            }
            let ivs = relaxed_verify(&p.a, &p.b, m).unwrap();
            applied_relaxed += 1;
            assert!(ivs.len() <= 2 * m + 1, "too many intervals at pair {i}");
            let min_len = int(2) * &delta + &d_a - &d_b;
            let mut total = Rational::zero();
            for iv in &ivs {
                assert!(
                    IntervalSet::from_interval(iv.clone()).subset_of(&p.sum),
                    "interval outside A+B at pair {i}"
                );
                assert!(iv.len() >= min_len, "interval too short at pair {i}");
                total += iv.len();
            }
            assert!(total >= &d_a + &delta, "total measure too small at pair {i}");
        }
    }
    assert!(applied_3k4 > 0 && applied_relaxed > 0);
    println!(
        "acceptance 4: structure suite over {SWEEP_SIZE} pairs \
         ({applied_3k4} 3k-4 applications, {applied_relaxed} relaxed applications): pass"
    );
}

#[test]
fn criterion_5_gap_point_inequalities() {
    let mut checked = 0u64;
    for (i, p) in sweep().iter().enumerate() {
        let window = Interval::new(
            Rational::zero(),
            p.a.diameter().unwrap() + p.b.diameter().unwrap(),
        )
        .unwrap();
        for x in gap_points(&p.sum, &window, 360).unwrap() {
            let o = lemma_mes_check(&p.a, &p.b, &x).unwrap();
            assert!(o.applicable && o.ok, "gap inequality fails at pair {i}");
            checked += 1;
        }
    }
    assert!(checked > 0);
    println!("acceptance 5: gap-point inequalities at q=360, {checked} points, zero failures: pass");
}

#[test]
fn criterion_6_torus_accounting() {
    for (i, p) in sweep().iter().enumerate() {
        let d_a = p.a.diameter().unwrap();
        if !d_a.is_positive() {
            continue;
        }
        let layers = torus::fold(&p.a, &d_a).unwrap();
        let total: Rational = (1..=layers.max_multiplicity())
            .map(|k| layers.layer(k).measure())
            .sum();
        assert_eq!(total, p.a.measure(), "fold accounting fails at pair {i}");

        let (l1, l2) = torus::modular_split(&p.a, &p.b).unwrap();
        assert_eq!(l1 + l2, p.sum.measure(), "modular split fails at pair {i}");
    }
    println!("acceptance 6: torus fold and modular split accounting exact over {SWEEP_SIZE} pairs: pass");
}

#[test]
fn criterion_7_oracle_concordance() {
    for (i, p) in sweep().iter().enumerate() {
        for q in [10u64, 100] {
            let g = grid_sumset(&p.a, &p.b, q).unwrap();
            for pt in g.marked_points() {
                assert!(
                    p.sum.contains_point(&pt),
                    "grid point outside exact sumset at pair {i}, q={q}"
                );
            }
            let est = grid_measure(&GridSet::from_set(&p.sum, q).unwrap());
            let bound = int(2 * p.sum.parts().len() as i64) / int(q as i64);
            assert!(
                (est - p.sum.measure()).abs() <= bound,
                "grid measure error bound fails at pair {i}, q={q}"
            );
        }
    }
    println!("acceptance 7: oracle soundness and measure convergence at q in {{10,100}}: pass");
}

#[test]
fn criterion_8_extremal_decompositions() {
    let mut instances = 0u32;
    // first family: A + A = D_A + lambda(A)
    for (n, m, a1, a2) in [
        (2u32, 2u32, rat(1, 5), rat(1, 5)),
        (3, 2, rat(1, 10), rat(1, 4)),
        (2, 4, rat(1, 8), rat(1, 10)),
        (1, 1, rat(1, 3), rat(1, 3)),
    ] {
        let a = gen_freiman_large(n, m, &a1, &a2).unwrap();
        check_decomposition(&a, &a);
        instances += 1;
    }
    // second family: A + B = D_B + lambda(A), asymmetric
    for (a_p, b_p, eps, n) in [
        (rat(1, 5), rat(2, 25), rat(1, 100), 2u32),
        (rat(1, 6), rat(1, 15), rat(1, 100), 2),
        (rat(1, 8), rat(1, 20), rat(1, 200), 3),
    ] {
        let (a, b, strict) = gen_asymmetric(&a_p, &b_p, &eps, n).unwrap();
        assert!(strict);
        check_decomposition(&a, &b);
        instances += 1;
    }
    println!("acceptance 8: extremal decompositions reconstruct exactly on {instances} instances: pass");
}

fn check_decomposition(a: &IntervalSet, b: &IntervalSet) {
    let an = a.normalize_to_zero().unwrap();
    let bn = b.normalize_to_zero().unwrap();
    let s = an.minkowski_sum(&bn).unwrap();
    let d = extremal_large_decompose(&an, &bn).unwrap();

    let (dec, d_dec) = match d.variant {
        sumsetlab::structure::ExtremalVariant::SumEqDiamBPlusLamA => {
            (an.clone(), an.diameter().unwrap())
        }
        sumsetlab::structure::ExtremalVariant::SumEqDiamAPlusLamB => {
            (bn.clone(), bn.diameter().unwrap())
        }
    };
    // independent reconstruction of the decomposed set and of the sumset
    let interior = IntervalSet::from_interval(d.interior.clone());
    let suffix = d.a2.reflect(&d_dec).unwrap();
    let rebuilt = d.a1.union(&interior).union(&suffix);
    assert_eq!(dec.measure_sym_diff(&rebuilt), int(0));

    let d_sum = an.diameter().unwrap() + bn.diameter().unwrap();
    let middle =
        IntervalSet::from_interval(Interval::new(d.b.clone(), &d_sum - &d.c).unwrap());
    let tail = d.a2.reflect(&d.c).unwrap().translate(&(&d_sum - &d.c));
    let rebuilt_sum = d.a1.union(&middle).union(&tail);
    assert_eq!(s.measure_sym_diff(&rebuilt_sum), int(0));

    // density caps at all profile breakpoints up to c1
    if d.c1.is_positive() {
        let clipped = d
            .b1
            .restrict(&Interval::new(Rational::zero(), d.c1.clone()).unwrap());
        let profile = cumulative_profile(&clipped, &d.c1).unwrap();
        for (x, y) in profile.breakpoints() {
            assert!(y * &d.c1 <= x * x, "density cap fails at breakpoint {x}");
        }
    }
}

#[test]
fn criterion_9_golden_outputs_and_round_trip() {
    // byte stability across runs
    let a = parse_set("{0} U [1/10,9/10] U {1}").unwrap();
    let svg1 = plot_svg(&a, &a).unwrap();
    let svg2 = plot_svg(&a, &a).unwrap();
    assert_eq!(svg1, svg2);
    let golden_svg = include_str!("golden/freiman_family.svg");
    assert_eq!(svg1, golden_svg, "plot output drifted from the golden file");

    // parse/print round trip on 1000 random sets
    for seed in 0..1000u64 {
        let s = gen_random(seed, 1 + (seed % 6) as u32, &int(1), &rat(1, 2)).unwrap();
        let text = print_set(&s);
        assert_eq!(parse_set(&text).unwrap(), s, "round trip fails for {text}");
    }
    println!("acceptance 9: golden byte-identity and 1000-set parse/print round trip: pass");
}
