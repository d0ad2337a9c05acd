//! Lower bounds on λ(A+B): superadditivity, Ruzsa's (K, δ) bound, the
//! ⌈D_A/D_B⌉ improvement, and the fold-multiplicity bound f(K_A).
//!
//! The dichotomy bounds ("either λ(A+B) ≥ λ(A)+D_B or λ(A+B) ≥ f(·)") are
//! reported as the min of the two disjuncts, so every listed bound is a true
//! lower bound; the holding disjunct is recorded alongside.

use crate::error::{Error, Result};
use crate::rational::{ceil_rational, Rational};
use crate::sets::IntervalSet;
use crate::torus;
use num_traits::{One, Signed};

/// Exact solution of `λ(A)/λ(B) = K(K−1)/2 + Kδ` with `K ≥ 1`, `0 ≤ δ < 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuzsaParams {
    pub k: u32,
    pub delta: Rational,
    pub ratio: Rational,
}

pub fn ruzsa_params(lam_a: &Rational, lam_b: &Rational) -> Result<RuzsaParams> {
    if !lam_a.is_positive() || !lam_b.is_positive() {
        return Err(Error::ZeroMeasure);
    }
    let ratio = lam_a / lam_b;
    // K is the unique integer with K(K-1)/2 <= ratio < K(K+1)/2
    let mut k = 1u32;
    loop {
        let upper = Rational::new((u64::from(k) * (u64::from(k) + 1) / 2).into(), 1.into());
        if ratio < upper {
            break;
        }
        k += 1;
    }
    let lower = Rational::new((u64::from(k) * (u64::from(k) - 1) / 2).into(), 1.into());
    let delta = (&ratio - lower) / Rational::from_integer(k.into());
    debug_assert!(!delta.is_negative() && delta < Rational::one());
    Ok(RuzsaParams { k, delta, ratio })
}

/// `f(k) = (k+1)/k · λ(A) + (k+1)/2 · λ(B)`, minimal at k = K.
pub fn f_of_k(k: u32, lam_a: &Rational, lam_b: &Rational) -> Result<Rational> {
    if k == 0 {
        return Err(Error::Invalid("f(k) requires k >= 1".into()));
    }
    let k = Rational::from_integer(k.into());
    let one = Rational::one();
    let two = Rational::from_integer(2.into());
    Ok((&k + &one) / &k * lam_a + (&k + &one) / two * lam_b)
}

/// Which disjunct of a dichotomy bound holds (both may).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Disjunct {
    DiamSide,
    FSide,
    Both,
}

/// One named lower bound with its exact value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedBound {
    pub name: &'static str,
    pub value: Rational,
    pub disjunct: Option<Disjunct>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub lambda_sum: Rational,
    pub lam_a: Rational,
    pub lam_b: Rational,
    pub d_a: Rational,
    pub d_b: Rational,
    pub params: RuzsaParams,
    /// Pointwise fold multiplicity of A modulo D_B.
    pub k_a: usize,
    pub bounds: Vec<NamedBound>,
    pub binding: &'static str,
    pub slack: Rational,
}

/// Computes λ(A+B) and every applicable lower bound; errors if any listed
/// bound exceeds the exact sum, which would falsify a theorem.
pub fn lower_bounds(a: &IntervalSet, b: &IntervalSet) -> Result<BoundReport> {
    let lam_a = a.measure();
    let lam_b = b.measure();
    if !lam_a.is_positive() || !lam_b.is_positive() {
        return Err(Error::ZeroMeasure);
    }
    let a = a.normalize_to_zero()?;
    let b = b.normalize_to_zero()?;
    let d_a = a.diameter()?;
    let d_b = b.diameter()?;
    let lambda_sum = a.minkowski_sum(&b)?.measure();
    let params = ruzsa_params(&lam_a, &lam_b)?;
    let k_a = torus::max_multiplicity(&a, &d_b)?;

    let diam_side = &lam_a + &d_b;
    let mut bounds = Vec::new();
    bounds.push(NamedBound {
        name: "superadditive",
        value: &lam_a + &lam_b,
        disjunct: None,
    });

    let kd = Rational::from_integer(params.k.into()) + &params.delta;
    let ruzsa_f = &lam_a + kd * &lam_b;
    bounds.push(NamedBound {
        name: "ruzsa_min",
        value: min2(&diam_side, &ruzsa_f),
        disjunct: Some(which(&lambda_sum, &diam_side, &ruzsa_f)),
    });

    let ratio_d = &d_a / &d_b;
    if ratio_d <= Rational::from_integer(params.k.into()) {
        let ceil = ceil_rational(&ratio_d)
            .to_integer()
            .try_into()
            .map_err(|_| Error::Invalid("diameter ratio out of range".into()))?;
        let ceil: u32 = if ceil == 0 { 1 } else { ceil };
        let improved_f = f_of_k(ceil, &lam_a, &lam_b)?;
        bounds.push(NamedBound {
            name: "improved",
            value: min2(&diam_side, &improved_f),
            disjunct: Some(which(&lambda_sum, &diam_side, &improved_f)),
        });
    }

    let ka32: u32 = k_a
        .try_into()
        .map_err(|_| Error::Invalid("fold multiplicity out of range".into()))?;
    if ka32 >= 1 {
        let fka = f_of_k(ka32, &lam_a, &lam_b)?;
        bounds.push(NamedBound {
            name: "fk_at_KA",
            value: min2(&diam_side, &fka),
            disjunct: Some(which(&lambda_sum, &diam_side, &fka)),
        });
    }

    let mut binding = bounds[0].name;
    let mut best = bounds[0].value.clone();
    for nb in &bounds {
        if nb.value > lambda_sum {
            return Err(Error::Invalid(format!(
                "lower bound {} = {} exceeds λ(A+B) = {}",
                nb.name,
                crate::rational::format_rational(&nb.value),
                crate::rational::format_rational(&lambda_sum)
            )));
        }
        if nb.value > best {
            best = nb.value.clone();
            binding = nb.name;
        }
    }
    let slack = &lambda_sum - best;
    Ok(BoundReport {
        lambda_sum,
        lam_a,
        lam_b,
        d_a,
        d_b,
        params,
        k_a,
        bounds,
        binding,
        slack,
    })
}

fn min2(x: &Rational, y: &Rational) -> Rational {
    if x <= y {
        x.clone()
    } else {
        y.clone()
    }
}

fn which(sum: &Rational, diam_side: &Rational, f_side: &Rational) -> Disjunct {
    match (sum >= diam_side, sum >= f_side) {
        (true, true) => Disjunct::Both,
        (true, false) => Disjunct::DiamSide,
        _ => Disjunct::FSide,
    }
}

/// Outcome of the diameter-bound implications (the two hypotheses under
/// which diam(B) ≤ λ(A+B) − λ(A) is forced).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamImplications {
    /// λ(A+B) < λ(A) + (K+δ)λ(B)
    pub hyp_kd: bool,
    /// D_A/D_B ≤ K and λ(A+B) < f(⌈D_A/D_B⌉)
    pub hyp_improved: bool,
    pub diam_b: Rational,
    pub margin: Rational,
    /// `Some(true)` when a hypothesis holds and the conclusion was verified;
    /// `None` when neither hypothesis applies.
    pub conclusion: Option<bool>,
}

pub fn diam_bound_implications(a: &IntervalSet, b: &IntervalSet) -> Result<DiamImplications> {
    let report = lower_bounds(a, b)?;
    let kd = Rational::from_integer(report.params.k.into()) + &report.params.delta;
    let hyp_kd = report.lambda_sum < &report.lam_a + kd * &report.lam_b;
    let ratio_d = &report.d_a / &report.d_b;
    let hyp_improved = if ratio_d <= Rational::from_integer(report.params.k.into()) {
        let ceil: u32 = ceil_rational(&ratio_d)
            .to_integer()
            .try_into()
            .unwrap_or(u32::MAX);
        let ceil = if ceil == 0 { 1 } else { ceil };
        report.lambda_sum < f_of_k(ceil, &report.lam_a, &report.lam_b)?
    } else {
        false
    };
    let margin = &report.lambda_sum - &report.lam_a - &report.d_b;
    let conclusion = if hyp_kd || hyp_improved {
        Some(!margin.is_negative())
    } else {
        None
    };
    Ok(DiamImplications {
        hyp_kd,
        hyp_improved,
        diam_b: report.d_b,
        margin,
        conclusion,
    })
}
