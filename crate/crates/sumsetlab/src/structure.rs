//! Verifiers for the structural theorems: the continuous 3k−4 theorem, the
//! relaxed multi-crossing variant, the decomposition of large-density
//! extremal pairs, and the recognizer for small-ratio extremal pairs.
//!
//! All "up to a set of measure 0" claims are checked as exact zero
//! symmetric-difference measures; interval containments are checked against
//! the exact Minkowski sum.

use crate::bounds::ruzsa_params;
use crate::density::{cumulative_profile, run_decomposition, zone_partition};
use crate::error::{Error, Result};
use crate::generators::gen_small_extremal;
use crate::rational::{format_rational, int, Rational};
use crate::sets::{Interval, IntervalSet};
use num_traits::{Signed, Zero};

/// Report of the continuous 3k−4 verification.
///
/// Quantities refer to the internally normalized pair ordered so that
/// `diam(A) >= diam(B)`; `swapped` records whether the inputs were
/// exchanged to achieve that.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreimanReport {
    /// λ(A+B) < λ(A)+λ(B)+min(λ(A),λ(B))
    pub hyp_i: bool,
    /// D_B ≤ D_A and λ(A+B) < λ(A)+2λ(B)
    pub hyp_ii: bool,
    pub swapped: bool,
    pub lam_a: Rational,
    pub lam_b: Rational,
    pub d_a: Rational,
    pub d_b: Rational,
    pub lambda_sum: Rational,
    pub delta: Rational,
    /// sup of the gap points of A+B inside [0, D_A]; 0 when there are none.
    pub e: Rational,
    /// inf of the gap points inside [D_A, D_A+D_B]; D_A+D_B when none.
    pub c: Rational,
    pub interval: Interval,
    pub i_length: Rational,
    pub diam_a_ok: bool,
    pub diam_a_slack: Rational,
    pub diam_b_ok: bool,
    pub diam_b_slack: Rational,
    /// (e, c) ⊆ A+B with length ≥ λ(A)+λ(B).
    pub interval_ok: bool,
    /// A hypothesis holds and every conclusion was verified.
    pub verified: bool,
}

impl FreimanReport {
    pub fn applicable(&self) -> bool {
        self.hyp_i || self.hyp_ii
    }
}

pub fn freiman_verify(a: &IntervalSet, b: &IntervalSet) -> Result<FreimanReport> {
    if !a.measure().is_positive() || !b.measure().is_positive() {
        return Err(Error::ZeroMeasure);
    }
    let mut a = a.normalize_to_zero()?;
    let mut b = b.normalize_to_zero()?;
    let mut swapped = false;
    if a.diameter()? < b.diameter()? {
        std::mem::swap(&mut a, &mut b);
        swapped = true;
    }
    let (lam_a, lam_b) = (a.measure(), b.measure());
    let (d_a, d_b) = (a.diameter()?, b.diameter()?);
    let s = a.minkowski_sum(&b)?;
    let lambda_sum = s.measure();
    let delta = &lam_a + &lam_b - &d_a;

    let min_lam = if lam_a <= lam_b { &lam_a } else { &lam_b };
    let hyp_i = lambda_sum < &lam_a + &lam_b + min_lam;
    let hyp_ii = lambda_sum < &lam_a + int(2) * &lam_b;

    let window_lo = Interval::new(Rational::zero(), d_a.clone())?;
    let e = s
        .gaps_within(&window_lo)
        .sup()
        .cloned()
        .unwrap_or_else(Rational::zero);
    let window_hi = Interval::new(d_a.clone(), &d_a + &d_b)?;
    let c = s
        .gaps_within(&window_hi)
        .inf()
        .cloned()
        .unwrap_or_else(|| &d_a + &d_b);
    let interval = Interval::new(e.clone(), c.clone())?;
    let i_length = &c - &e;

    let diam_a_slack = &lambda_sum - &lam_b - &d_a;
    let diam_b_slack = &lambda_sum - &lam_a - &d_b;
    let diam_a_ok = !diam_a_slack.is_negative();
    let diam_b_ok = !diam_b_slack.is_negative();
    // (e, c) misses A+B only on a measure-0 set iff it misses it nowhere:
    // the complement of the closed set A+B is open
    let in_sum = IntervalSet::from_interval(interval.clone()).measure_diff(&s) == int(0);
    let interval_ok = in_sum && i_length >= &lam_a + &lam_b;
    let verified = (hyp_i || hyp_ii) && diam_a_ok && diam_b_ok && interval_ok;

    Ok(FreimanReport {
        hyp_i,
        hyp_ii,
        swapped,
        lam_a,
        lam_b,
        d_a,
        d_b,
        lambda_sum,
        delta,
        e,
        c,
        interval,
        i_length,
        diam_a_ok,
        diam_a_slack,
        diam_b_ok,
        diam_b_slack,
        interval_ok,
        verified,
    })
}

/// Outcome of the gap-point inequality check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaMesOutcome {
    /// `x ∉ A+B` and at least one inequality's range condition held.
    pub applicable: bool,
    /// Every applicable inequality held.
    pub ok: bool,
}

/// For `x ∉ A+B`: checks `λ([0,x]∩A) + λ([0,x]∩B) ≤ x` (when `x ≥ 0`) and
/// `λ([x−D_B,D_A]∩A) + λ([x−D_A,D_B]∩B) ≤ D_A+D_B−x` (when `x ≤ D_A+D_B`).
pub fn lemma_mes_check(a: &IntervalSet, b: &IntervalSet, x: &Rational) -> Result<LemmaMesOutcome> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    if !a.inf().unwrap().is_zero() || !b.inf().unwrap().is_zero() {
        return Err(Error::NotAnchoredAtZero);
    }
    let s = a.minkowski_sum(b)?;
    if s.contains_point(x) {
        return Ok(LemmaMesOutcome {
            applicable: false,
            ok: true,
        });
    }
    let d_a = a.diameter()?;
    let d_b = b.diameter()?;
    let mut applicable = false;
    let mut ok = true;
    if !x.is_negative() {
        applicable = true;
        let za = clipped_measure(a, &Rational::zero(), x);
        let zb = clipped_measure(b, &Rational::zero(), x);
        ok &= za + zb <= *x;
    }
    if x <= &(&d_a + &d_b) {
        applicable = true;
        let ta = clipped_measure(a, &(x - &d_b), &d_a);
        let tb = clipped_measure(b, &(x - &d_a), &d_b);
        ok &= ta + tb <= &d_a + &d_b - x;
    }
    Ok(LemmaMesOutcome { applicable, ok })
}

fn clipped_measure(s: &IntervalSet, lo: &Rational, hi: &Rational) -> Rational {
    if lo > hi {
        return Rational::zero();
    }
    s.restrict(&Interval::new(lo.clone(), hi.clone()).unwrap())
        .measure()
}

/// Relaxed structure theorem: under
/// `λ(A+B) < D_A + λ(B) + (m+1)(D_A − D_B + Δ)` with `Δ > 0`, returns
/// disjoint intervals inside `A+B`, each of length ≥ `2Δ + D_A − D_B`, of
/// total measure ≥ `D_A + (2m'+1)Δ` where `m' ≤ m` is the down-crossing
/// count. The assembled pieces are widened to the maximal interval of the
/// exact sumset containing them (coinciding pieces merge).
pub fn relaxed_verify(a: &IntervalSet, b: &IntervalSet, m: usize) -> Result<Vec<Interval>> {
    let a = a.normalize_to_zero()?;
    let b = b.normalize_to_zero()?;
    let zp = zone_partition(&a, &b)?;
    if !zp.delta.is_positive() {
        return Err(Error::Precondition("need Δ > 0".into()));
    }
    let s = a.minkowski_sum(&b)?;
    let gap = &zp.d_a - &zp.d_b + &zp.delta;
    let hyp_rhs = &zp.d_a + b.measure() + int((m + 1) as i64) * &gap;
    if s.measure() >= hyp_rhs {
        return Err(Error::Precondition(format!(
            "hypothesis fails: λ(A+B) = {} is not below {}",
            format_rational(&s.measure()),
            format_rational(&hyp_rhs)
        )));
    }
    let rd = run_decomposition(&zp)?;
    if rd.m > m {
        return Err(Error::Invalid(format!(
            "down-crossing count {} exceeds the bound {} despite the hypothesis",
            rd.m, m
        )));
    }

    // the 2m'+1 bracketed unions of consecutive runs, each a single interval
    // inside A+B
    let mut pieces = Vec::with_capacity(2 * rd.m + 1);
    for k in 1..=rd.m {
        pieces.push(Interval::new(
            rd.i2[k - 1].lo().clone(),
            rd.j[k - 1].hi().clone(),
        )?);
    }
    pieces.push(Interval::new(
        rd.i2[rd.m].lo().clone(),
        &zp.d_a + rd.i2[0].hi(),
    )?);
    for k in 1..=rd.m {
        pieces.push(Interval::new(
            &zp.d_a + rd.j[k - 1].lo(),
            &zp.d_a + rd.i2[k].hi(),
        )?);
    }

    let mut expanded: Vec<Interval> = Vec::new();
    for piece in pieces {
        let host = s
            .parts()
            .iter()
            .find(|p| p.lo() <= piece.lo() && p.hi() >= piece.hi())
            .ok_or_else(|| {
                Error::Invalid(format!("assembled piece {piece} escapes the exact sumset"))
            })?;
        if expanded.last() != Some(host) {
            expanded.push(host.clone());
        }
    }
    expanded.dedup();

    let min_len = int(2) * &zp.delta + &zp.d_a - &zp.d_b;
    for iv in &expanded {
        if iv.len() < min_len {
            return Err(Error::Invalid(format!("piece {iv} shorter than guaranteed")));
        }
    }
    let total: Rational = expanded.iter().map(Interval::len).sum();
    if total < &zp.d_a + int((2 * rd.m + 1) as i64) * &zp.delta {
        return Err(Error::Invalid("total guaranteed measure not met".into()));
    }
    Ok(expanded)
}

/// Which equality selected the decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalVariant {
    /// λ(A+B) = D_B + λ(A): A is the decomposed set.
    SumEqDiamBPlusLamA,
    /// λ(A+B) = D_A + λ(B): B is the decomposed set.
    SumEqDiamAPlusLamB,
}

/// Three-part decomposition of an extremal pair.
///
/// `a1`, `interior`, `a2` describe the decomposed set (`A` for
/// [`ExtremalVariant::SumEqDiamBPlusLamA`], `B` otherwise, both after
/// normalization and the diameter-ordering swap recorded in `swapped`);
/// `b1`, `b_i`, `b2` describe the companion. `a2`, `b2` are reflected to
/// live near 0 in `[0, c]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalDecomposition {
    pub variant: ExtremalVariant,
    pub swapped: bool,
    pub b: Rational,
    pub c: Rational,
    pub a1: IntervalSet,
    pub a2: IntervalSet,
    pub interior: Interval,
    pub b1: IntervalSet,
    pub b2: IntervalSet,
    pub b_i: IntervalSet,
    pub c1: Rational,
    pub c2: Rational,
}

pub fn extremal_large_decompose(a: &IntervalSet, b: &IntervalSet) -> Result<ExtremalDecomposition> {
    if !a.measure().is_positive() || !b.measure().is_positive() {
        return Err(Error::ZeroMeasure);
    }
    let mut a = a.normalize_to_zero()?;
    let mut b = b.normalize_to_zero()?;
    let mut swapped = false;
    if a.diameter()? < b.diameter()? {
        std::mem::swap(&mut a, &mut b);
        swapped = true;
    }
    let (lam_a, lam_b) = (a.measure(), b.measure());
    let (d_a, d_b) = (a.diameter()?, b.diameter()?);
    let s = a.minkowski_sum(&b)?;
    let lam_s = s.measure();

    let strict_rhs = &lam_a + int(2) * &lam_b;
    if lam_s >= strict_rhs {
        return Err(Error::Precondition(format!(
            "strict side fails: λ(A+B) = {} is not below λ(A)+2λ(B) = {}",
            format_rational(&lam_s),
            format_rational(&strict_rhs)
        )));
    }
    let variant = if lam_s == &d_b + &lam_a {
        ExtremalVariant::SumEqDiamBPlusLamA
    } else if lam_s == &d_a + &lam_b {
        ExtremalVariant::SumEqDiamAPlusLamB
    } else {
        let slack1 = &lam_s - &d_b - &lam_a;
        let slack2 = &lam_s - &d_a - &lam_b;
        return Err(Error::Precondition(format!(
            "no extremal equality holds (slacks {} and {})",
            format_rational(&slack1),
            format_rational(&slack2)
        )));
    };

    let zp = zone_partition(&a, &b)?;
    if !zp.delta.is_positive() {
        return Err(Error::Precondition("need Δ > 0".into()));
    }
    let rd = run_decomposition(&zp)?;
    if rd.m != 0 {
        return Err(Error::Invalid(
            "extremal pair shows a down crossing; equality cannot hold".into(),
        ));
    }
    let b_pt = rd.i1[0].hi().clone();
    let x3 = rd.i2[0].hi().clone();
    let c_pt = &d_b - &x3;
    if c_pt.is_negative() {
        return Err(Error::Invalid("zone boundary escapes [0, D_B]".into()));
    }

    let (dec, comp, d_dec, d_comp) = match variant {
        ExtremalVariant::SumEqDiamBPlusLamA => (&a, &b, &d_a, &d_b),
        ExtremalVariant::SumEqDiamAPlusLamB => (&b, &a, &d_b, &d_a),
    };

    let a1 = dec.restrict(&Interval::new(Rational::zero(), b_pt.clone())?);
    let dec_suffix = dec.restrict(&Interval::new(d_dec - &c_pt, d_dec.clone())?);
    let a2 = dec_suffix.reflect(d_dec)?.restrict(&Interval::new(
        Rational::zero(),
        c_pt.clone(),
    )?);
    let interior = Interval::new(b_pt.clone(), d_dec - &c_pt)?;

    let b1 = comp.restrict(&Interval::new(Rational::zero(), b_pt.clone())?);
    let comp_suffix = comp.restrict(&Interval::new(d_comp - &c_pt, d_comp.clone())?);
    let b2 = comp_suffix.reflect(d_comp)?.restrict(&Interval::new(
        Rational::zero(),
        c_pt.clone(),
    )?);
    let b_i = comp.restrict(&Interval::new(b_pt.clone(), d_comp - &c_pt)?);

    let check = |name: &str, ok: bool| -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::Constraint(format!("decomposition invariant failed: {name}")))
        }
    };

    // interior ⊆ dec and the three-part reconstructions, up to measure 0
    let interior_set = IntervalSet::from_interval(interior.clone());
    check("interior inside the decomposed set", interior_set.measure_diff(dec) == int(0))?;
    let rebuilt = a1.union(&interior_set).union(&dec_suffix);
    check("decomposed set reconstruction", dec.measure_sym_diff(&rebuilt) == int(0))?;

    let d_sum = &d_a + &d_b;
    let middle = IntervalSet::from_interval(Interval::new(b_pt.clone(), &d_sum - &c_pt)?);
    let sum_tail = dec_suffix.translate(d_comp);
    let rebuilt_sum = a1.union(&middle).union(&sum_tail);
    check("sumset reconstruction", s.measure_sym_diff(&rebuilt_sum) == int(0))?;

    // stability of the prefix and of the reflected suffix
    let s_prefix = s.restrict(&Interval::new(Rational::zero(), b_pt.clone())?);
    check("prefix stability", s_prefix.measure_sym_diff(&a1) == int(0))?;
    let s_suffix = s.restrict(&Interval::new(&d_sum - &c_pt, d_sum.clone())?);
    check("suffix stability", s_suffix.measure_sym_diff(&sum_tail) == int(0))?;

    // companion pieces sit inside the decomposed pieces
    check("companion prefix inside", b1.measure_diff(&a1) == int(0))?;
    check("companion suffix inside", b2.measure_diff(&a2) == int(0))?;

    // density caps near the borders
    let c1 = half_density_sup(dec, d_dec)?;
    let c2 = half_density_sup(&dec.reflect(d_dec)?, d_dec)?;
    check("prefix density cap", quadratic_cap_holds(&b1, &c1)?)?;
    check("suffix density cap", quadratic_cap_holds(&b2, &c2)?)?;

    Ok(ExtremalDecomposition {
        variant,
        swapped,
        b: b_pt,
        c: c_pt,
        a1,
        a2,
        interior,
        b1,
        b2,
        b_i,
        c1,
        c2,
    })
}

/// `sup{x : λ(S ∩ [0,x]) ≤ x/2}` for a normalized set of diameter `d`.
fn half_density_sup(s: &IntervalSet, d: &Rational) -> Result<Rational> {
    let profile = cumulative_profile(s, d)?;
    let half = Rational::new(1.into(), 2.into());
    Ok(profile
        .sublevel(&half, &Rational::zero())
        .sup()
        .cloned()
        .unwrap_or_else(Rational::zero))
}

/// Checks `λ(S ∩ [0,x]) ≤ x²/c` for all `x ≤ c` exactly. On each linear
/// segment of the profile `q(x) = x² − c·p(x)` is convex, so it suffices to
/// test the endpoints and the interior critical point `x = c·slope/2`.
fn quadratic_cap_holds(s: &IntervalSet, c: &Rational) -> Result<bool> {
    if !c.is_positive() {
        return Ok(true);
    }
    let clipped = s.restrict(&Interval::new(Rational::zero(), c.clone())?);
    let profile = cumulative_profile(&clipped, c)?;
    let q = |x: &Rational, px: &Rational| x * x - c * px;
    for w in profile.breakpoints().windows(2) {
        let (x0, y0) = &w[0];
        let (x1, y1) = &w[1];
        if q(x0, y0).is_negative() || q(x1, y1).is_negative() {
            return Ok(false);
        }
        let slope = (y1 - y0) / (x1 - x0);
        let crit = c * &slope / int(2);
        if &crit > x0 && &crit < x1 {
            let p_crit = y0 + &slope * (&crit - x0);
            if q(&crit, &p_crit).is_negative() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Fitted parameters of a recognized small-ratio extremal pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallExtremalShape {
    pub k: u32,
    pub delta: Rational,
    pub b1: Rational,
    pub b2: Rational,
    pub d_b: Rational,
    /// Translations removed from the inputs: A = A' + shift_a, B = B' + shift_b.
    pub shift_a: Rational,
    pub shift_b: Rational,
}

/// Recognizes pairs satisfying the exact equality
/// `λ(A+B) = λ(A) + (K+δ)λ(B)` that match the two-block/K-interval
/// template, and returns its parameters. Failures of the equality are
/// precondition errors; template mismatches are constraint errors.
pub fn small_extremal_recognize(a: &IntervalSet, b: &IntervalSet) -> Result<SmallExtremalShape> {
    let lam_a = a.measure();
    let lam_b = b.measure();
    if !lam_a.is_positive() || !lam_b.is_positive() {
        return Err(Error::ZeroMeasure);
    }
    let shift_a = a.inf().unwrap().clone();
    let shift_b = b.inf().unwrap().clone();
    let a = a.normalize_to_zero()?;
    let b = b.normalize_to_zero()?;
    let d_b = b.diameter()?;
    let params = ruzsaparams_checked(&lam_a, &lam_b)?;
    let kd = int(params.0.into()) + &params.1;
    let expect = &lam_a + &kd * &lam_b;
    let lam_s = a.minkowski_sum(&b)?.measure();
    if lam_s != expect {
        return Err(Error::Precondition(format!(
            "λ(A+B) = {} but λ(A)+(K+δ)λ(B) = {}",
            format_rational(&lam_s),
            format_rational(&expect)
        )));
    }
    // fit b1 from the leading part of B (inf B = 0, so the first part starts
    // at 0; a leading singleton means b1 = 0)
    let b1 = b.parts()[0].len();
    let b2 = &lam_b - &b1;
    if b2.is_negative() {
        return Err(Error::Constraint("B is not a two-block set".into()));
    }
    let (ta, tb) = gen_small_extremal(params.0, &params.1, &b1, &b2, &d_b)
        .map_err(|e| Error::Constraint(format!("template cannot be built: {e}")))?;
    if b.measure_sym_diff(&tb) != int(0) {
        return Err(Error::Constraint(
            "B differs from [0,b1] ∪ [D_B−b2,D_B] by positive measure".into(),
        ));
    }
    if a.measure_sym_diff(&ta) != int(0) {
        return Err(Error::Constraint(
            "A differs from the K-interval template by positive measure".into(),
        ));
    }
    Ok(SmallExtremalShape {
        k: params.0,
        delta: params.1,
        b1,
        b2,
        d_b,
        shift_a,
        shift_b,
    })
}

fn ruzsaparams_checked(lam_a: &Rational, lam_b: &Rational) -> Result<(u32, Rational)> {
    let p = ruzsa_params(lam_a, lam_b)?;
    Ok((p.k, p.delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_set;
    use crate::rational::rat;

    fn set(s: &str) -> IntervalSet {
        parse_set(s).unwrap()
    }

    fn family_a() -> IntervalSet {
        set("{0} U [1/10,9/10] U {1}")
    }

    #[test]
    fn freiman_verifies_the_large_family() {
        let a = family_a();
        let r = freiman_verify(&a, &a).unwrap();
        assert!(r.hyp_i);
        assert_eq!(r.e, rat(1, 10));
        assert_eq!(r.c, rat(19, 10));
        assert_eq!(r.i_length, rat(9, 5));
        assert!(r.i_length >= &r.lam_a + &r.lam_b);
        assert!(r.diam_a_ok && r.diam_b_ok && r.interval_ok && r.verified);
        assert_eq!(r.diam_b_slack, int(0));
    }

    #[test]
    fn freiman_unit_interval() {
        let u = set("[0,1]");
        let r = freiman_verify(&u, &u).unwrap();
        assert!(r.hyp_i);
        assert_eq!(r.e, int(0));
        assert_eq!(r.c, int(2));
        assert!(r.verified);
    }

    #[test]
    fn freiman_no_hypothesis_no_claim() {
        let a = set("[0,2]");
        let b = set("[0,1/5] U [9/10,1]");
        let r = freiman_verify(&a, &b).unwrap();
        assert!(!r.hyp_ii);
        assert!(!r.applicable());
    }

    #[test]
    fn lemma_mes_examples() {
        let a = family_a();
        let o = lemma_mes_check(&a, &a, &rat(1, 20)).unwrap();
        assert!(o.applicable && o.ok);
        let o = lemma_mes_check(&a, &a, &int(1)).unwrap();
        assert!(!o.applicable);
        let o = lemma_mes_check(&a, &a, &rat(39, 20)).unwrap();
        assert!(o.applicable && o.ok);
    }

    #[test]
    fn relaxed_m0_instances() {
        let u = set("[0,1]");
        let ivs = relaxed_verify(&u, &u, 0).unwrap();
        assert_eq!(ivs, vec![Interval::new(int(0), int(2)).unwrap()]);

        let a = family_a();
        let ivs = relaxed_verify(&a, &a, 0).unwrap();
        assert_eq!(ivs, vec![Interval::new(rat(1, 10), rat(19, 10)).unwrap()]);
        let total: Rational = ivs.iter().map(Interval::len).sum();
        assert!(total >= rat(8, 5));
    }

    #[test]
    fn relaxed_m1_instance() {
        // one down crossing; hypothesis with m = 1 holds
        let a = set("[0,2/5] U [4/5,1]");
        let s = a.minkowski_sum(&a).unwrap();
        let ivs = relaxed_verify(&a, &a, 1).unwrap();
        assert!(!ivs.is_empty() && ivs.len() <= 3);
        for iv in &ivs {
            assert!(IntervalSet::from_interval(iv.clone()).subset_of(&s));
            assert!(iv.len() >= rat(2, 5));
        }
        let total: Rational = ivs.iter().map(Interval::len).sum();
        assert!(total >= int(1) + int(3) * rat(1, 5));
    }

    #[test]
    fn relaxed_hypothesis_failure_is_a_precondition_error() {
        let c = set("[0,1/4] U [3/4,1]");
        match relaxed_verify(&c, &c, 0) {
            Err(Error::Precondition(_)) => {}
            other => panic!("expected precondition error, got {other:?}"),
        }
    }

    #[test]
    fn extremal_decompose_large_family() {
        let a = family_a();
        let d = extremal_large_decompose(&a, &a).unwrap();
        assert_eq!(d.b, rat(1, 5));
        assert_eq!(d.c, rat(1, 5));
        assert_eq!(d.interior, Interval::new(rat(1, 5), rat(4, 5)).unwrap());
        assert_eq!(d.a1, set("{0} U [1/10,1/5]"));
        assert_eq!(d.c1, rat(1, 5));
        assert_eq!(d.c2, rat(1, 5));
    }

    #[test]
    fn extremal_decompose_unit_interval() {
        let u = set("[0,1]");
        let d = extremal_large_decompose(&u, &u).unwrap();
        assert_eq!(d.b, int(0));
        assert_eq!(d.c, int(0));
        assert_eq!(d.interior, Interval::new(int(0), int(1)).unwrap());
    }

    #[test]
    fn extremal_decompose_asymmetric_family() {
        let (a, b, _) =
            crate::generators::gen_asymmetric(&rat(1, 5), &rat(2, 25), &rat(1, 100), 2).unwrap();
        let d = extremal_large_decompose(&a, &b).unwrap();
        assert_eq!(d.variant, ExtremalVariant::SumEqDiamBPlusLamA);
        // reconstruction invariants were asserted internally; spot-check one
        let rebuilt = d
            .a1
            .union(&IntervalSet::from_interval(d.interior.clone()))
            .union(&d.a2.reflect(&int(1)).unwrap());
        assert_eq!(a.measure_sym_diff(&rebuilt), int(0));
    }

    #[test]
    fn extremal_decompose_rejects_non_extremal() {
        let a = set("[0,1/5] U [9/10,1]");
        match extremal_large_decompose(&a, &a) {
            Err(Error::Precondition(_)) => {}
            other => panic!("expected precondition error, got {other:?}"),
        }
    }

    #[test]
    fn small_extremal_round_trip() {
        let (a, b) =
            crate::generators::gen_small_extremal(3, &rat(1, 2), &rat(1, 5), &rat(1, 10), &int(1))
                .unwrap();
        let shape = small_extremal_recognize(&a, &b).unwrap();
        assert_eq!(shape.k, 3);
        assert_eq!(shape.delta, rat(1, 2));
        assert_eq!(shape.b1, rat(1, 5));
        assert_eq!(shape.b2, rat(1, 10));
        assert_eq!(shape.d_b, int(1));
    }

    #[test]
    fn small_extremal_degenerate_round_trip() {
        let (a, b) =
            crate::generators::gen_small_extremal(1, &rat(1, 2), &rat(3, 10), &int(0), &int(1))
                .unwrap();
        let shape = small_extremal_recognize(&a, &b).unwrap();
        assert_eq!((shape.k, shape.b1, shape.b2), (1, rat(3, 10), int(0)));
    }

    #[test]
    fn small_extremal_rejects_the_large_family() {
        let a = family_a();
        match small_extremal_recognize(&a, &a) {
            Err(Error::Precondition(_)) => {}
            other => panic!("expected precondition error, got {other:?}"),
        }
    }
}
