//! Constructors for the explicit extremal families and for random test
//! instances. Every family generator re-verifies its defining exact equality
//! on the constructed sets before returning them.

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::sets::{Interval, IntervalSet};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Default cap on random endpoint denominators; 720 is highly composite,
/// which maximizes endpoint collisions across instances.
pub const DEFAULT_DENOM_LIMIT: u64 = 720;

/// Large-density extremal set in `[0, 1]`: interval blocks of increasing
/// length accumulating at 0 and at 1 around a central interval, with
/// `λ(A+A) = 1 + λ(A)` exactly.
///
/// `A = ⋃_{k=0}^{n-1} [k·a1(1-1/n), k·a1] ∪ [(n-1)a1, 1-(m-1)a2]
///      ∪ ⋃_{k=0}^{m-1} [1-k·a2, 1-k·a2(1-1/m)]`
/// (the k = 0 terms are the endpoints 0 and 1).
pub fn gen_freiman_large(n: u32, m: u32, a1: &Rational, a2: &Rational) -> Result<IntervalSet> {
    if n == 0 || m == 0 || !a1.is_positive() || !a2.is_positive() {
        return Err(Error::Constraint(
            "need n, m >= 1 and a1, a2 > 0".into(),
        ));
    }
    let one = Rational::one();
    let nq = int(n.into());
    let mq = int(m.into());
    let used = (&nq - &one) * a1 + (&mq - &one) * a2;
    if used >= one {
        return Err(Error::Constraint(
            "(n-1)a1 + (m-1)a2 must be < 1".into(),
        ));
    }
    let mut raw = Vec::new();
    for k in 0..n {
        let kq = int(k.into());
        let lo = &kq * a1 * (&one - &one / &nq);
        let hi = &kq * a1;
        raw.push(Interval::new(lo, hi)?);
    }
    for k in 0..m {
        let kq = int(k.into());
        let lo = &one - &kq * a2;
        let hi = &one - &kq * a2 * (&one - &one / &mq);
        raw.push(Interval::new(lo, hi)?);
    }
    raw.push(Interval::new((&nq - &one) * a1, &one - (&mq - &one) * a2)?);
    let a = IntervalSet::canonicalize(raw);

    let delta = (&one - used) / int(2);
    let lam = a.measure();
    if lam != Rational::new(1.into(), 2.into()) + &delta {
        return Err(Error::Constraint("family measure identity failed".into()));
    }
    let sum = a.minkowski_sum(&a)?;
    if sum.measure() != &one + &lam {
        return Err(Error::Constraint(
            "family sumset identity λ(A+A) = 1 + λ(A) failed".into(),
        ));
    }
    Ok(a)
}

/// Asymmetric pair in `[0, 1]` with `λ(A+B) = 1 + λ(A) = D_B + λ(A)`:
///
/// `A = {0} ∪ ⋃_{k=1}^n [ak - b - (k-1)ε, ak] ∪ [na, 1]`,
/// `B = ⋃_{k=0}^n [(a-ε)k, ak] ∪ [na, 1]`.
///
/// The returned flag says whether `n(2a - (n+1)ε) < 1`; expanding
/// `λ(B) = 1 - na + n(n+1)ε/2`, this is exactly `λ(B) > 1/2`, the condition
/// under which the strict inequality `λ(A+B) < λ(A) + 2λ(B)` also holds.
pub fn gen_asymmetric(
    a: &Rational,
    b: &Rational,
    eps: &Rational,
    n: u32,
) -> Result<(IntervalSet, IntervalSet, bool)> {
    let one = Rational::one();
    if n == 0 {
        return Err(Error::Constraint("need n >= 1".into()));
    }
    if !(&(a / int(2)) > b && b > eps && eps.is_positive()) {
        return Err(Error::Constraint("need a/2 > b > ε > 0".into()));
    }
    let nq = int(n.into());
    if &one - &nq * a < *b {
        return Err(Error::Constraint("need 1 - na >= b".into()));
    }
    if &nq * eps > a - b {
        return Err(Error::Constraint("need nε <= a - b".into()));
    }

    let mut raw_a = vec![Interval::singleton(Rational::zero())];
    for k in 1..=n {
        let kq = int(k.into());
        let lo = a * &kq - b - (&kq - &one) * eps;
        let hi = a * &kq;
        raw_a.push(Interval::new(lo, hi)?);
    }
    raw_a.push(Interval::new(&nq * a, one.clone())?);
    let set_a = IntervalSet::canonicalize(raw_a);

    let mut raw_b = Vec::new();
    for k in 0..=n {
        let kq = int(k.into());
        raw_b.push(Interval::new((a - eps) * &kq, a * &kq)?);
    }
    raw_b.push(Interval::new(&nq * a, one.clone())?);
    let set_b = IntervalSet::canonicalize(raw_b);

    let sum = set_a.minkowski_sum(&set_b)?;
    if sum.measure() != &one + set_a.measure() {
        return Err(Error::Constraint(
            "family sumset identity λ(A+B) = 1 + λ(A) failed".into(),
        ));
    }
    let strict = &nq * (int(2) * a - (&nq + &one) * eps) < one;
    Ok((set_a, set_b, strict))
}

/// Small-ratio extremal pair of Ruzsa's bound:
///
/// `B = [0, b1] ∪ [D_B - b2, D_B]`,
/// `A = ⋃_{k=1}^K [(k-1)(D_B - b2), (k-1)D_B + (K-k)b1 + δb]`
/// with `b = b1 + b2 = λ(B)`, satisfying `λ(A+B) = λ(A) + (K+δ)λ(B)`
/// exactly (verified at construction). The stronger small-regime inequality
/// `λ(A+B) < λ(A) + D_B` holds iff `(K+δ)(b1+b2) < D_B`; it is left to the
/// caller since the equality itself does not depend on it.
pub fn gen_small_extremal(
    k: u32,
    delta: &Rational,
    b1: &Rational,
    b2: &Rational,
    d_b: &Rational,
) -> Result<(IntervalSet, IntervalSet)> {
    if k == 0 {
        return Err(Error::Constraint("need K >= 1".into()));
    }
    if b1.is_negative() || b2.is_negative() {
        return Err(Error::Constraint("need b1, b2 >= 0".into()));
    }
    let b = b1 + b2;
    if !b.is_positive() {
        return Err(Error::Constraint("need b1 + b2 > 0".into()));
    }
    if delta.is_negative() || delta >= &Rational::one() {
        return Err(Error::Constraint("need 0 <= δ < 1".into()));
    }
    if !d_b.is_positive() || &b > d_b {
        return Err(Error::Constraint("need 0 < b1 + b2 <= D_B".into()));
    }

    let set_b = IntervalSet::canonicalize(vec![
        Interval::new(Rational::zero(), b1.clone())?,
        Interval::new(d_b - b2, d_b.clone())?,
    ]);

    let mut raw_a = Vec::new();
    let mut prev_hi: Option<Rational> = None;
    for j in 1..=k {
        let jq = int(j.into());
        let kq = int(k.into());
        let lo = (&jq - Rational::one()) * (d_b - b2);
        let hi = (&jq - Rational::one()) * d_b + (&kq - &jq) * b1 + delta * &b;
        if let Some(p) = &prev_hi {
            if &lo <= p {
                return Err(Error::Constraint(
                    "template intervals overlap; shrink b1, b2 or δ".into(),
                ));
            }
        }
        prev_hi = Some(hi.clone());
        raw_a.push(Interval::new(lo, hi)?);
    }
    let set_a = IntervalSet::canonicalize(raw_a);

    let lam_a = set_a.measure();
    let lam_b = set_b.measure();
    let sum = set_a.minkowski_sum(&set_b)?;
    let kd = int(k.into()) + delta;
    if sum.measure() != &lam_a + &kd * &lam_b {
        return Err(Error::Constraint(
            "family sumset identity λ(A+B) = λ(A) + (K+δ)λ(B) failed".into(),
        ));
    }
    Ok((set_a, set_b))
}

/// Deterministic pseudo-random canonical set within `[0, scale]` containing
/// 0 and `scale`, with at most `count` generating intervals and endpoint
/// denominators bounded by [`DEFAULT_DENOM_LIMIT`].
pub fn gen_random(
    seed: u64,
    count: u32,
    scale: &Rational,
    density_hint: &Rational,
) -> Result<IntervalSet> {
    gen_random_with_limit(seed, count, scale, density_hint, DEFAULT_DENOM_LIMIT)
}

/// [`gen_random`] with an explicit denominator cap.
pub fn gen_random_with_limit(
    seed: u64,
    count: u32,
    scale: &Rational,
    density_hint: &Rational,
    denom_limit: u64,
) -> Result<IntervalSet> {
    if count == 0 || !scale.is_positive() {
        return Err(Error::Constraint("need count >= 1 and scale > 0".into()));
    }
    if !density_hint.is_positive() || density_hint > &Rational::one() {
        return Err(Error::Constraint("density hint must be in (0, 1]".into()));
    }
    let full = IntervalSet::from_interval(Interval::new(Rational::zero(), scale.clone())?);
    if density_hint == &Rational::one() {
        return Ok(full);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = rng.gen_range(1..=denom_limit.max(1));
    let qi = i64::try_from(q).unwrap();
    // expected per-interval width (in grid cells) follows the density hint
    let cells_target = (int(qi) * density_hint).floor().to_integer();
    let cells_target = i64::try_from(&cells_target).unwrap_or(qi).max(0);
    let per_part = (cells_target / i64::from(count.max(1))).max(0);

    let mut raw = vec![
        Interval::singleton(Rational::zero()),
        Interval::singleton(scale.clone()),
    ];
    for _ in 0..count {
        let lo_num = rng.gen_range(0..=qi);
        let max_w = (qi - lo_num).min(per_part.max(1));
        let w = rng.gen_range(0..=max_w);
        let lo = Rational::new(lo_num.into(), q.into()) * scale;
        let hi = Rational::new((lo_num + w).into(), q.into()) * scale;
        raw.push(Interval::new(lo, hi)?);
    }
    Ok(IntervalSet::canonicalize(raw))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_set;
    use crate::rational::rat;
    use crate::rational::int;

    fn set(s: &str) -> IntervalSet {
        parse_set(s).unwrap()
    }

    #[test]
    fn freiman_large_reference_instance() {
        let a = gen_freiman_large(2, 2, &rat(1, 5), &rat(1, 5)).unwrap();
        assert_eq!(a, set("{0} U [1/10,9/10] U {1}"));
        assert_eq!(a.measure(), rat(4, 5));
        assert_eq!(a.minkowski_sum(&a).unwrap().measure(), rat(9, 5));
    }

    #[test]
    fn freiman_large_degenerate_and_larger() {
        let a = gen_freiman_large(1, 1, &rat(1, 3), &rat(1, 3)).unwrap();
        assert_eq!(a, set("[0,1]"));

        let a = gen_freiman_large(4, 3, &rat(1, 10), &rat(1, 10)).unwrap();
        assert_eq!(a.measure(), rat(3, 4));
        assert_eq!(a.minkowski_sum(&a).unwrap().measure(), rat(7, 4));
    }

    #[test]
    fn freiman_large_rejects_bad_params() {
        assert!(gen_freiman_large(3, 3, &rat(1, 2), &rat(1, 2)).is_err());
        assert!(gen_freiman_large(0, 1, &rat(1, 5), &rat(1, 5)).is_err());
    }

    #[test]
    fn asymmetric_reference_instance() {
        let (a, b, _) = gen_asymmetric(&rat(1, 5), &rat(2, 25), &rat(1, 100), 2).unwrap();
        assert_eq!(a.diameter().unwrap(), int(1));
        assert_eq!(b.diameter().unwrap(), int(1));
        let sum = a.minkowski_sum(&b).unwrap();
        assert_eq!(sum.measure(), int(1) + a.measure());
    }

    #[test]
    fn asymmetric_strict_flag() {
        // 2(2/5 - 3/100) = 37/50 < 1, so λ(B) = 63/100 > 1/2
        let (_, b, strict) = gen_asymmetric(&rat(1, 5), &rat(2, 25), &rat(1, 100), 2).unwrap();
        assert!(strict);
        assert!(b.measure() > rat(1, 2));
        // 3(1/2 - 4/100) = 69/50 > 1: equality still holds but not the strict side
        let (_, b, strict) = gen_asymmetric(&rat(1, 4), &rat(1, 10), &rat(1, 100), 3).unwrap();
        assert!(!strict);
        assert!(b.measure() < rat(1, 2));
    }

    #[test]
    fn asymmetric_rejects_bad_params() {
        assert!(gen_asymmetric(&rat(1, 5), &rat(1, 8), &rat(1, 100), 2).is_err());
    }

    #[test]
    fn small_extremal_reference_instance() {
        let (a, b) = gen_small_extremal(3, &rat(1, 2), &rat(1, 5), &rat(1, 10), &int(1)).unwrap();
        assert_eq!(a, set("[0,11/20] U [9/10,27/20] U [9/5,43/20]"));
        assert_eq!(b, set("[0,1/5] U [9/10,1]"));
        assert_eq!(a.minkowski_sum(&b).unwrap().measure(), rat(12, 5));
    }

    #[test]
    fn small_extremal_degenerate_b2_zero() {
        let (a, b) = gen_small_extremal(1, &rat(1, 2), &rat(3, 10), &int(0), &int(1)).unwrap();
        assert_eq!(a, set("[0,3/20]"));
        assert_eq!(b, set("[0,3/10] U {1}"));
        let sum = a.minkowski_sum(&b).unwrap();
        assert_eq!(sum.measure(), a.measure() + rat(3, 2) * b.measure());
    }

    #[test]
    fn small_extremal_rejects_overlap() {
        assert!(gen_small_extremal(2, &rat(9, 10), &rat(2, 5), &rat(2, 5), &int(1)).is_err());
    }

    #[test]
    fn random_is_deterministic_and_anchored() {
        let s1 = gen_random(1, 3, &int(1), &rat(1, 2)).unwrap();
        let s2 = gen_random(1, 3, &int(1), &rat(1, 2)).unwrap();
        assert_eq!(s1, s2);
        assert!(s1.contains_point(&int(0)));
        assert!(s1.contains_point(&int(1)));
        assert_ne!(s1, gen_random(2, 3, &int(1), &rat(1, 2)).unwrap());
    }

    #[test]
    fn random_full_density_is_the_interval() {
        let s = gen_random(2, 1, &int(1), &int(1)).unwrap();
        assert_eq!(s, set("[0,1]"));
    }
}
