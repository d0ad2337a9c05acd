//! Folding line sets modulo a period into multiplicity layers, wrap-around
//! sums on the circle, and the modular splitting of λ(A+B).
//!
//! Folding a set `S` (with `inf S = 0`) modulo `D` cuts it at every multiple
//! of `D` and overlays the translated pieces. Layer `k` is the set of
//! residues `x ∈ [0, D)` covered at least `k` times, i.e.
//! `{x : #{n ∈ ℕ : x + nD ∈ S} ≥ k}`. The layer measures always account for
//! the full measure: `Σ_k μ(layer_k) = λ(S)`.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sets::{Interval, IntervalSet};
use num_traits::{Signed, Zero};

/// A subset of the circle of circumference `period`, kept as a line set
/// inside `[0, period]` with the endpoints identified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusSet {
    period: Rational,
    parts: IntervalSet,
}

impl TorusSet {
    /// Reduces an arbitrary line set modulo `period`.
    pub fn from_line(s: &IntervalSet, period: &Rational) -> Result<Self> {
        if !period.is_positive() {
            return Err(Error::NonpositivePeriod);
        }
        if s.is_empty() {
            return Ok(TorusSet {
                period: period.clone(),
                parts: IntervalSet::empty(),
            });
        }
        let mut raw = Vec::new();
        for iv in s.parts() {
            if iv.len() >= *period {
                raw = vec![Interval::new(Rational::zero(), period.clone()).unwrap()];
                break;
            }
            let shift = (iv.lo() / period).floor() * period;
            let lo = iv.lo() - &shift;
            let hi = iv.hi() - &shift;
            if hi <= *period {
                raw.push(Interval::new(lo, hi).unwrap());
            } else {
                raw.push(Interval::new(lo, period.clone()).unwrap());
                raw.push(Interval::new(Rational::zero(), hi - period).unwrap());
            }
        }
        let mut parts = IntervalSet::canonicalize(raw);
        // the residue of `period` is 0
        if parts.sup() == Some(period) && parts.parts().last().map(|p| p.is_point()) == Some(true) {
            let trimmed: Vec<Interval> = parts.parts()[..parts.parts().len() - 1].to_vec();
            parts = IntervalSet::canonicalize(trimmed).union(&IntervalSet::point(Rational::zero()));
        }
        Ok(TorusSet {
            period: period.clone(),
            parts,
        })
    }

    pub fn period(&self) -> &Rational {
        &self.period
    }

    pub fn parts(&self) -> &IntervalSet {
        &self.parts
    }

    pub fn measure(&self) -> Rational {
        self.parts.measure()
    }

    pub fn is_full(&self) -> bool {
        self.measure() == self.period
    }

    /// Wrap-around Minkowski sum on the circle.
    pub fn torus_sum(&self, other: &Self) -> Result<Self> {
        if self.period != other.period {
            return Err(Error::PeriodMismatch);
        }
        if self.parts.is_empty() || other.parts.is_empty() {
            return Err(Error::EmptySet);
        }
        let line_sum = self.parts.minkowski_sum(&other.parts)?;
        Self::from_line(&line_sum, &self.period)
    }
}

/// Multiplicity layers of a fold: `layers[k-1]` is the residue set covered at
/// least `k` times (nonincreasing in `k`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusLayers {
    period: Rational,
    layers: Vec<IntervalSet>,
}

impl TorusLayers {
    pub fn period(&self) -> &Rational {
        &self.period
    }

    /// Layer for multiplicity `k >= 1`; empty beyond the deepest layer.
    pub fn layer(&self, k: usize) -> IntervalSet {
        if k == 0 || k > self.layers.len() {
            IntervalSet::empty()
        } else {
            self.layers[k - 1].clone()
        }
    }

    pub fn layers(&self) -> &[IntervalSet] {
        &self.layers
    }

    /// Largest `k` with a nonempty layer (singleton witnesses count).
    pub fn max_multiplicity(&self) -> usize {
        self.layers.len()
    }

    /// Largest `k` whose layer has positive measure; 0 if none.
    pub fn max_multiplicity_positive(&self) -> usize {
        self.layers
            .iter()
            .rposition(|l| l.measure().is_positive())
            .map(|i| i + 1)
            .unwrap_or(0)
    }
}

/// Folds `S` modulo `D` into multiplicity layers by an exact sweep over the
/// residue breakpoints. Requires `inf(S) = 0`.
pub fn fold(s: &IntervalSet, d: &Rational) -> Result<TorusLayers> {
    if !d.is_positive() {
        return Err(Error::NonpositivePeriod);
    }
    let inf = s.inf().ok_or(Error::EmptySet)?;
    if !inf.is_zero() {
        return Err(Error::NotAnchoredAtZero);
    }
    let sup = s.sup().unwrap().clone();
    let n_pieces = (&sup / d).floor().to_integer();
    let n_pieces: i64 = i64::try_from(&n_pieces).map_err(|_| {
        Error::Invalid("set spans too many periods to fold".into())
    })?;

    // piece_n = (S - nD) ∩ [0, D); residue 0 of the cut point nD is counted
    // by piece n itself, so the point D is dropped from each piece
    let mut pieces: Vec<IntervalSet> = Vec::new();
    for n in 0..=n_pieces {
        let shift = Rational::from_integer(n.into()) * d;
        let window = Interval::new(shift.clone(), &shift + d).unwrap();
        let piece = s.restrict(&window).translate(&-shift);
        if !piece.is_empty() {
            pieces.push(piece);
        }
    }

    // residue breakpoints in [0, D]
    let mut breaks: Vec<Rational> = vec![Rational::zero(), d.clone()];
    for p in &pieces {
        for iv in p.parts() {
            breaks.push(iv.lo().clone());
            if iv.hi() < d {
                breaks.push(iv.hi().clone());
            }
        }
    }
    breaks.sort();
    breaks.dedup();

    // open-segment multiplicities: a piece covers (u, v) iff one of its
    // closed parts contains [u, v]
    let seg_mult: Vec<usize> = breaks
        .windows(2)
        .map(|w| {
            pieces
                .iter()
                .filter(|p| {
                    p.parts()
                        .iter()
                        .any(|iv| iv.lo() <= &w[0] && iv.hi() >= &w[1])
                })
                .count()
        })
        .collect();

    // pointwise multiplicities at breakpoints < D, straight from the
    // definition #{n : u + nD ∈ S}
    let point_mult: Vec<usize> = breaks[..breaks.len() - 1]
        .iter()
        .map(|u| {
            let mut count = 0usize;
            let mut x = u.clone();
            while x <= sup {
                if s.contains_point(&x) {
                    count += 1;
                }
                x += d;
            }
            count
        })
        .collect();

    let max_k = seg_mult
        .iter()
        .copied()
        .chain(point_mult.iter().copied())
        .max()
        .unwrap_or(0);

    let mut layers = Vec::with_capacity(max_k);
    for k in 1..=max_k {
        let mut raw = Vec::new();
        for (i, m) in seg_mult.iter().enumerate() {
            if *m >= k {
                raw.push(Interval::new(breaks[i].clone(), breaks[i + 1].clone()).unwrap());
            }
        }
        for (i, m) in point_mult.iter().enumerate() {
            if *m >= k {
                raw.push(Interval::singleton(breaks[i].clone()));
            }
        }
        layers.push(IntervalSet::canonicalize(raw));
    }
    Ok(TorusLayers {
        period: d.clone(),
        layers,
    })
}

/// `K_S`: the largest multiplicity attained by any residue of `S` mod `D`
/// (pointwise; singleton witnesses count, matching the ∃x definition).
pub fn max_multiplicity(s: &IntervalSet, d: &Rational) -> Result<usize> {
    Ok(fold(s, d)?.max_multiplicity())
}

/// Measure-positive variant of [`max_multiplicity`], used where a bound only
/// holds for residues witnessed by positive measure.
pub fn max_multiplicity_positive(s: &IntervalSet, d: &Rational) -> Result<usize> {
    Ok(fold(s, d)?.max_multiplicity_positive())
}

/// Splits `λ(A+B)` modulo `D_A` into the measure of the reduced image and the
/// measure of the doubly covered residues:
/// `λ(A+B) = μ_A(A+B) + μ_A({x ∈ [0,D_A] : x, x+D_A ∈ A+B})`.
///
/// Requires `inf A = inf B = 0` and `diam B ≤ diam A`.
pub fn modular_split(a: &IntervalSet, b: &IntervalSet) -> Result<(Rational, Rational)> {
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
    let sum = a.minkowski_sum(b)?;
    let layers = fold(&sum, &d_a)?;
    // diam(A+B) <= 2 diam(A), so layer 3 can only hold isolated points
    debug_assert!(layers.layer(3).measure().is_zero());
    Ok((layers.layer(1).measure(), layers.layer(2).measure()))
}
