//! Cumulative density profiles and the zone machinery.
//!
//! For normalized sets `A`, `B` (infimum 0, `D_B <= D_A`) the profiles are
//! `g_A(x) = λ(A ∩ [0,x])`, `g = g_A + g_B` on `[0, D_A]`, and
//! `h(x) = g_A(x + D_A - D_B) + g_B(x)`. Writing `Δ = λ(A)+λ(B)-D_A`, the
//! interval `[0, D_A]` splits into three zones:
//!
//! * `Z1 = {x : g(x) <= x}` — every such `x` has `x + D_A ∈ A+B`;
//! * `Z3 = {x : h(x) >= x + D_A - D_B + Δ}` — every such `x` is in `A+B`;
//! * `Z2` — the closure of the rest, contained in both.
//!
//! Scanning the zones left to right yields up (`Z1 → Z3`) and down
//! (`Z3 → Z1`) crossings; the down count `m` drives the relaxed structure
//! theorem, and the crossing boundaries cut `[0, D_A]` into the `4m+3`
//! labeled runs used to assemble guaranteed intervals inside `A+B`.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sets::{Interval, IntervalSet};
use num_traits::{Signed, Zero};

/// Continuous piecewise-linear function given by its breakpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseLinear {
    points: Vec<(Rational, Rational)>,
}

impl PiecewiseLinear {
    pub fn new(points: Vec<(Rational, Rational)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Invalid(
                "a piecewise-linear function needs at least two breakpoints".into(),
            ));
        }
        for w in points.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::Invalid(
                    "breakpoint abscissae must be strictly increasing".into(),
                ));
            }
        }
        Ok(PiecewiseLinear { points })
    }

    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn domain(&self) -> (&Rational, &Rational) {
        (&self.points[0].0, &self.points[self.points.len() - 1].0)
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let (lo, hi) = self.domain();
        if x < lo || x > hi {
            return Err(Error::Invalid(format!(
                "evaluation point {} outside the domain",
                crate::rational::format_rational(x)
            )));
        }
        Ok(self.eval_clamped(x))
    }

    /// Evaluates with `x` clamped into the domain.
    pub fn eval_clamped(&self, x: &Rational) -> Rational {
        let (lo, hi) = self.domain();
        let x = if x < lo {
            lo
        } else if x > hi {
            hi
        } else {
            x
        };
        let idx = self.points.partition_point(|(px, _)| px <= x);
        if idx == 0 {
            return self.points[0].1.clone();
        }
        if idx == self.points.len() {
            return self.points[idx - 1].1.clone();
        }
        let (x0, y0) = &self.points[idx - 1];
        let (x1, y1) = &self.points[idx];
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }

    /// Pointwise sum; both functions must share a domain.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.domain() != other.domain() {
            return Err(Error::Invalid("profile domains differ".into()));
        }
        let mut xs: Vec<Rational> = self
            .points
            .iter()
            .chain(other.points.iter())
            .map(|(x, _)| x.clone())
            .collect();
        xs.sort();
        xs.dedup();
        let points = xs
            .into_iter()
            .map(|x| {
                let y = self.eval_clamped(&x) + other.eval_clamped(&x);
                (x, y)
            })
            .collect();
        PiecewiseLinear::new(points)
    }

    /// `{x in domain : f(x) <= a·x + b}` (or `>=` with `below = false`),
    /// exact: each linear segment contributes at most one root.
    fn level_set(&self, a: &Rational, b: &Rational, below: bool) -> IntervalSet {
        // signed comparison d(x) = f(x) - (a x + b), flipped for superlevel
        let d = |x: &Rational, y: &Rational| -> Rational {
            let diff = y - (a * x + b);
            if below {
                diff
            } else {
                -diff
            }
        };
        let mut raw = Vec::new();
        for w in self.points.windows(2) {
            let (x0, y0) = &w[0];
            let (x1, y1) = &w[1];
            let d0 = d(x0, y0);
            let d1 = d(x1, y1);
            match (d0.is_positive(), d1.is_positive()) {
                (false, false) => raw.push(Interval::new(x0.clone(), x1.clone()).unwrap()),
                (true, true) => {}
                _ => {
                    // exactly one sign change on the segment
                    let root = x0 + (x1 - x0) * (-&d0) / (&d1 - &d0);
                    if d0.is_positive() {
                        raw.push(Interval::new(root, x1.clone()).unwrap());
                    } else {
                        raw.push(Interval::new(x0.clone(), root).unwrap());
                    }
                }
            }
        }
        IntervalSet::canonicalize(raw)
    }

    pub fn sublevel(&self, a: &Rational, b: &Rational) -> IntervalSet {
        self.level_set(a, b, true)
    }

    pub fn superlevel(&self, a: &Rational, b: &Rational) -> IntervalSet {
        self.level_set(a, b, false)
    }
}

/// `x ↦ λ(S ∩ [0, x])` on `[0, upto]`.
pub fn cumulative_profile(s: &IntervalSet, upto: &Rational) -> Result<PiecewiseLinear> {
    if let Some(inf) = s.inf() {
        if inf.is_negative() {
            return Err(Error::Invalid("profile requires S ⊆ [0, ∞)".into()));
        }
    }
    if !upto.is_positive() {
        return Err(Error::Invalid("profile domain must be nontrivial".into()));
    }
    let mut points = vec![(Rational::zero(), Rational::zero())];
    let mut acc = Rational::zero();
    for iv in s.parts() {
        if iv.lo() >= upto {
            break;
        }
        if iv.is_point() {
            continue;
        }
        let lo = iv.lo().clone();
        let hi = if iv.hi() < upto { iv.hi().clone() } else { upto.clone() };
        if points.last().unwrap().0 != lo {
            points.push((lo.clone(), acc.clone()));
        }
        acc += &hi - &lo;
        points.push((hi, acc.clone()));
    }
    if points.last().unwrap().0 != *upto {
        points.push((upto.clone(), acc));
    }
    PiecewiseLinear::new(points)
}

/// Builds `g` and `h` on `[0, D_A]`; `h` uses `g_A` and `g_B` clamped at the
/// ends of their domains.
pub fn build_g_h(a: &IntervalSet, b: &IntervalSet) -> Result<(PiecewiseLinear, PiecewiseLinear)> {
    let (g_a, g_b, d_a, d_b) = component_profiles(a, b)?;
    let g = profile_sum(&g_a, &g_b, &Rational::zero(), &d_a);
    let shift = &d_a - &d_b;
    let h = profile_sum(&g_a, &g_b, &shift, &d_a);
    Ok((g, h))
}

fn component_profiles(
    a: &IntervalSet,
    b: &IntervalSet,
) -> Result<(PiecewiseLinear, PiecewiseLinear, Rational, Rational)> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    if !a.inf().unwrap().is_zero() || !b.inf().unwrap().is_zero() {
        return Err(Error::NotAnchoredAtZero);
    }
    let d_a = a.diameter()?;
    let d_b = b.diameter()?;
    if d_b > d_a {
        return Err(Error::Precondition("diam(B) must be <= diam(A)".into()));
    }
    if !d_a.is_positive() {
        return Err(Error::ZeroMeasure);
    }
    let g_a = cumulative_profile(a, &d_a)?;
    let g_b = if d_b.is_positive() {
        cumulative_profile(b, &d_b)?
    } else {
        // B a single point: g_B ≡ 0
        PiecewiseLinear::new(vec![
            (Rational::zero(), Rational::zero()),
            (d_a.clone(), Rational::zero()),
        ])?
    };
    Ok((g_a, g_b, d_a, d_b))
}

/// `x ↦ g_A(x + shift) + g_B(x)` on `[0, upto]`, both clamped.
fn profile_sum(
    g_a: &PiecewiseLinear,
    g_b: &PiecewiseLinear,
    shift: &Rational,
    upto: &Rational,
) -> PiecewiseLinear {
    let mut xs: Vec<Rational> = vec![Rational::zero(), upto.clone()];
    for (x, _) in g_b.breakpoints() {
        if x > &Rational::zero() && x < upto {
            xs.push(x.clone());
        }
    }
    for (x, _) in g_a.breakpoints() {
        let t = x - shift;
        if t > Rational::zero() && &t < upto {
            xs.push(t);
        }
    }
    xs.sort();
    xs.dedup();
    let points = xs
        .into_iter()
        .map(|x| {
            let y = g_a.eval_clamped(&(&x + shift)) + g_b.eval_clamped(&x);
            (x, y)
        })
        .collect();
    PiecewiseLinear::new(points).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossingKind {
    Up,
    Down,
}

/// Zones of `[0, D_A]` plus the crossing scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZonePartition {
    pub z1: IntervalSet,
    pub z2: IntervalSet,
    pub z3: IntervalSet,
    pub delta: Rational,
    pub d_a: Rational,
    pub d_b: Rational,
    /// Entry point of each new zone, in scan order.
    pub crossings: Vec<(Rational, CrossingKind)>,
    pub down_count: usize,
}

pub fn zone_partition(a: &IntervalSet, b: &IntervalSet) -> Result<ZonePartition> {
    let (g_a, g_b, d_a, d_b) = component_profiles(a, b)?;
    let g = profile_sum(&g_a, &g_b, &Rational::zero(), &d_a);
    let shift = &d_a - &d_b;
    let h = profile_sum(&g_a, &g_b, &shift, &d_a);
    let delta = a.measure() + b.measure() - &d_a;

    let one = Rational::from_integer(1.into());
    let z1 = g.sublevel(&one, &Rational::zero());
    // on [0, D_B]: h(x) >= x + (D_A - D_B) + Δ; beyond D_B the membership
    // follows from g(x) >= x + Δ, which holds identically there, so the tail
    // [D_B, D_A] is adjoined to keep D_A in Z3
    let h_high = h.superlevel(&one, &(&shift + &delta));
    let window_b = Interval::new(Rational::zero(), d_b.clone()).unwrap();
    let tail = IntervalSet::from_interval(Interval::new(d_b.clone(), d_a.clone()).unwrap());
    let z3 = h_high.restrict(&window_b).union(&tail);
    let full = Interval::new(Rational::zero(), d_a.clone()).unwrap();
    let z2 = z1.union(&z3).gaps_within(&full);

    let (crossings, down_count) = scan_crossings(&z1, &z3);
    Ok(ZonePartition {
        z1,
        z2,
        z3,
        delta,
        d_a,
        d_b,
        crossings,
        down_count,
    })
}

/// Collapses the Z1/Z3 parts into an alternating phase sequence and tags the
/// transitions. A Z3 part that is a single point of Z1 counts as Z1.
fn scan_crossings(z1: &IntervalSet, z3: &IntervalSet) -> (Vec<(Rational, CrossingKind)>, usize) {
    let mut tagged: Vec<(&Interval, u8)> = Vec::new();
    for iv in z1.parts() {
        tagged.push((iv, 1));
    }
    for iv in z3.parts() {
        if iv.is_point() && z1.contains_point(iv.lo()) {
            continue;
        }
        tagged.push((iv, 3));
    }
    tagged.sort_by(|a, b| (a.0.lo(), a.0.hi()).cmp(&(b.0.lo(), b.0.hi())));
    let mut crossings = Vec::new();
    let mut down = 0usize;
    let mut prev: Option<u8> = None;
    for (iv, tag) in tagged {
        if let Some(p) = prev {
            if p != tag {
                let kind = if tag == 3 {
                    CrossingKind::Up
                } else {
                    down += 1;
                    CrossingKind::Down
                };
                crossings.push((iv.lo().clone(), kind));
            }
        }
        prev = Some(tag);
    }
    (crossings, down)
}

/// The `4m+3` consecutive runs cut out by the crossings:
/// `[0,D_A] = I_0^(1) ∪ I_0^(2) ∪ I_0^(3) ∪ ⋃_{k=1..m} (J_k ∪ I_k^(1) ∪ I_k^(2) ∪ I_k^(3))`.
///
/// Runs are closed intervals sharing endpoints; crossing runs may degenerate
/// only at the outer ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunDecomposition {
    /// `I_k^(1)` for k = 0..=m: runs absorbed into Z1 ∪ Z2.
    pub i1: Vec<Interval>,
    /// `I_k^(2)`: the up-crossing runs, inside Z2, length >= Δ.
    pub i2: Vec<Interval>,
    /// `I_k^(3)`: runs absorbed into Z3 ∪ Z2.
    pub i3: Vec<Interval>,
    /// `J_k` for k = 1..=m: the down-crossing runs, length >= Δ + D_A − D_B.
    pub j: Vec<Interval>,
    pub m: usize,
}

impl RunDecomposition {
    /// All runs in left-to-right order.
    pub fn ordered(&self) -> Vec<(String, Interval)> {
        let mut out = Vec::with_capacity(4 * self.m + 3);
        for k in 0..=self.m {
            if k > 0 {
                out.push((format!("J_{k}"), self.j[k - 1].clone()));
            }
            out.push((format!("I_{k}^(1)"), self.i1[k].clone()));
            out.push((format!("I_{k}^(2)"), self.i2[k].clone()));
            out.push((format!("I_{k}^(3)"), self.i3[k].clone()));
        }
        out
    }
}

pub fn run_decomposition(zp: &ZonePartition) -> Result<RunDecomposition> {
    if !zp.delta.is_positive() {
        return Err(Error::Precondition("run decomposition requires Δ > 0".into()));
    }
    // maximal phase runs; for Δ > 0 they alternate Z1, Z3, ..., Z1, Z3
    // starting with Z1 (0 ∈ Z1) and ending with Z3 (D_A ∈ Z3)
    let phases = phase_runs(zp);
    let m = zp.down_count;
    let ok = phases.len() == 2 * (m + 1)
        && phases
            .iter()
            .enumerate()
            .all(|(i, p)| p.0 == if i % 2 == 0 { 1 } else { 3 });
    if !ok {
        return Err(Error::Invalid("zone scan does not alternate as expected".into()));
    }
    let mut i1 = Vec::with_capacity(m + 1);
    let mut i2 = Vec::with_capacity(m + 1);
    let mut i3 = Vec::with_capacity(m + 1);
    let mut j = Vec::with_capacity(m);
    for k in 0..=m {
        let z1_run = &phases[2 * k];
        let z3_run = &phases[2 * k + 1];
        let start = if k == 0 {
            Rational::zero()
        } else {
            // J_k bridges the previous Z3 run to this Z1 run
            j.push(Interval::new(phases[2 * k - 1].2.clone(), z1_run.1.clone())?);
            z1_run.1.clone()
        };
        i1.push(Interval::new(start, z1_run.2.clone())?);
        i2.push(Interval::new(z1_run.2.clone(), z3_run.1.clone())?);
        let end = if k == m { zp.d_a.clone() } else { z3_run.2.clone() };
        i3.push(Interval::new(z3_run.1.clone(), end)?);
    }
    Ok(RunDecomposition { i1, i2, i3, j, m })
}

/// Maximal runs of same-zone parts, in scan order, as (tag, lo, hi) with
/// tag 1 for Z1 and 3 for Z3. Z3 points lying in Z1 count as Z1.
fn phase_runs(zp: &ZonePartition) -> Vec<(u8, Rational, Rational)> {
    let mut tagged: Vec<(&Interval, u8)> = Vec::new();
    for iv in zp.z1.parts() {
        tagged.push((iv, 1));
    }
    for iv in zp.z3.parts() {
        if iv.is_point() && zp.z1.contains_point(iv.lo()) {
            continue;
        }
        tagged.push((iv, 3));
    }
    tagged.sort_by(|a, b| (a.0.lo(), a.0.hi()).cmp(&(b.0.lo(), b.0.hi())));
    let mut phases: Vec<(u8, Rational, Rational)> = Vec::new();
    for (iv, tag) in tagged {
        match phases.last_mut() {
            Some((t, _, hi)) if *t == tag => {
                if iv.hi() > hi {
                    *hi = iv.hi().clone();
                }
            }
            _ => phases.push((tag, iv.lo().clone(), iv.hi().clone())),
        }
    }
    phases
}
