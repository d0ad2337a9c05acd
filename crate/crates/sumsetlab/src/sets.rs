//! Canonical finite unions of closed rational intervals on the real line.
//!
//! [`IntervalSet`] is the representation of every set handled by this crate:
//! parts are sorted, pairwise disjoint, and non-adjacent (touching closed
//! intervals merge). Degenerate intervals (`lo == hi`) are first-class and
//! encode isolated points; closed sets here always contain their infimum and
//! supremum, which several of the structural results rely on.

use crate::error::{Error, Result};
use crate::rational::Rational;
use std::fmt;

/// A closed interval `[lo, hi]` with rational endpoints, `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval {
                lo: crate::rational::format_rational(&lo),
                hi: crate::rational::format_rational(&hi),
            });
        }
        Ok(Interval { lo, hi })
    }

    pub fn singleton(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn len(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn translate(&self, t: &Rational) -> Self {
        Interval {
            lo: &self.lo + t,
            hi: &self.hi + t,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::rational::format_rational as fr;
        if self.is_point() {
            write!(f, "{{{}}}", fr(&self.lo))
        } else {
            write!(f, "[{},{}]", fr(&self.lo), fr(&self.hi))
        }
    }
}

/// Canonical finite union of closed intervals. The empty list encodes ∅.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalSet {
    parts: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { parts: Vec::new() }
    }

    /// Canonicalizes an arbitrary list of intervals: sort, merge everything
    /// whose closures touch or overlap. The union of points is preserved
    /// exactly; `canonicalize` is idempotent.
    pub fn canonicalize(mut raw: Vec<Interval>) -> Self {
        raw.sort();
        let mut parts: Vec<Interval> = Vec::with_capacity(raw.len());
        for iv in raw {
            match parts.last_mut() {
                Some(last) if iv.lo <= last.hi => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => parts.push(iv),
            }
        }
        IntervalSet { parts }
    }

    pub fn from_interval(iv: Interval) -> Self {
        IntervalSet { parts: vec![iv] }
    }

    pub fn point(x: Rational) -> Self {
        Self::from_interval(Interval::singleton(x))
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn inf(&self) -> Option<&Rational> {
        self.parts.first().map(|iv| &iv.lo)
    }

    pub fn sup(&self) -> Option<&Rational> {
        self.parts.last().map(|iv| &iv.hi)
    }

    /// Lebesgue measure: sum of part lengths (singletons contribute 0).
    pub fn measure(&self) -> Rational {
        self.parts.iter().map(|iv| iv.len()).sum()
    }

    /// `sup(S) - inf(S)`.
    pub fn diameter(&self) -> Result<Rational> {
        match (self.inf(), self.sup()) {
            (Some(lo), Some(hi)) => Ok(hi - lo),
            _ => Err(Error::EmptySet),
        }
    }

    pub fn contains_point(&self, x: &Rational) -> bool {
        // parts are sorted; binary search on lo
        let idx = self.parts.partition_point(|iv| &iv.lo <= x);
        idx > 0 && self.parts[idx - 1].contains(x)
    }

    pub fn translate(&self, t: &Rational) -> Self {
        IntervalSet {
            parts: self.parts.iter().map(|iv| iv.translate(t)).collect(),
        }
    }

    /// `S - inf(S)`.
    pub fn normalize_to_zero(&self) -> Result<Self> {
        let lo = self.inf().ok_or(Error::EmptySet)?.clone();
        Ok(self.translate(&-lo))
    }

    /// `D - S`, endpoint-wise, re-canonicalized.
    pub fn reflect(&self, d: &Rational) -> Result<Self> {
        if self.is_empty() {
            return Err(Error::EmptySet);
        }
        let raw = self
            .parts
            .iter()
            .map(|iv| Interval {
                lo: d - &iv.hi,
                hi: d - &iv.lo,
            })
            .collect();
        Ok(Self::canonicalize(raw))
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut raw = self.parts.clone();
        raw.extend(other.parts.iter().cloned());
        Self::canonicalize(raw)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            let a = &self.parts[i];
            let b = &other.parts[j];
            let lo = if a.lo >= b.lo { a.lo.clone() } else { b.lo.clone() };
            let hi = if a.hi <= b.hi { a.hi.clone() } else { b.hi.clone() };
            if lo <= hi {
                out.push(Interval { lo, hi });
            }
            if a.hi <= b.hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        // pieces of intersections are already sorted and disjoint, but two
        // adjacent outputs may touch at a point
        Self::canonicalize(out)
    }

    /// `S ∩ [window.lo, window.hi]`.
    pub fn restrict(&self, window: &Interval) -> Self {
        self.intersect(&Self::from_interval(window.clone()))
    }

    /// `self ⊆ other`, exactly (as closed point sets).
    pub fn subset_of(&self, other: &Self) -> bool {
        self.intersect(other) == *self
    }

    /// Closures of the connected components of `window \ S`.
    ///
    /// The complement of a closed set is open, so every component has
    /// positive length unless it is empty; returning closures keeps the
    /// result in the closed-interval representation and preserves measure.
    pub fn gaps_within(&self, window: &Interval) -> Self {
        let clipped = self.restrict(window);
        if clipped.is_empty() {
            return Self::from_interval(window.clone());
        }
        let mut raw = Vec::new();
        let mut cursor = window.lo.clone();
        for iv in &clipped.parts {
            if iv.lo > cursor {
                raw.push(Interval {
                    lo: cursor,
                    hi: iv.lo.clone(),
                });
            }
            cursor = iv.hi.clone();
        }
        if cursor < window.hi {
            raw.push(Interval {
                lo: cursor,
                hi: window.hi.clone(),
            });
        }
        // drop point-gaps produced by singleton parts touching the window edge
        Self::canonicalize(raw.into_iter().filter(|iv| !iv.is_point()).collect())
    }

    /// Measure of the symmetric difference. The "up to a set of measure 0"
    /// equalities of the structure theorems are tested through this.
    pub fn measure_sym_diff(&self, other: &Self) -> Rational {
        let inter = self.intersect(other).measure();
        self.measure() + other.measure() - Rational::from_integer(2.into()) * inter
    }

    /// `measure(self \ other)`.
    pub fn measure_diff(&self, other: &Self) -> Rational {
        self.measure() - self.intersect(other).measure()
    }

    /// Minkowski sum `{a + b : a ∈ A, b ∈ B}`, exact.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut raw = Vec::with_capacity(self.parts.len() * other.parts.len());
        for a in &self.parts {
            for b in &other.parts {
                raw.push(Interval {
                    lo: &a.lo + &b.lo,
                    hi: &a.hi + &b.hi,
                });
            }
        }
        Ok(Self::canonicalize(raw))
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "{{}}");
        }
        let mut first = true;
        for iv in &self.parts {
            if !first {
                write!(f, " U ")?;
            }
            write!(f, "{iv}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_set;
    use crate::rational::{int, rat};

    fn set(s: &str) -> IntervalSet {
        parse_set(s).unwrap()
    }

    #[test]
    fn rejects_reversed_endpoints() {
        assert!(Interval::new(int(1), int(0)).is_err());
    }

    #[test]
    fn canonicalize_merges_adjacent_closed_intervals() {
        assert_eq!(set("[0,1] U [1,2]"), set("[0,2]"));
        assert_eq!(set("[1/2,1] U [0,1/4]").to_string(), "[0,1/4] U [1/2,1]");
        assert_eq!(set("[0,1] U [1/4,1/2]"), set("[0,1]"));
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let s = set("[0,1] U [1,3/2] U {2} U [5/2,3]");
        let again = IntervalSet::canonicalize(s.parts().to_vec());
        assert_eq!(s, again);
    }

    #[test]
    fn measure_examples() {
        assert_eq!(set("[0,1/5] U [9/10,1]").measure(), rat(3, 10));
        assert_eq!(IntervalSet::empty().measure(), int(0));
        assert_eq!(set("{0} U [1/10,9/10] U {1}").measure(), rat(4, 5));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(set("{0} U {1}").diameter().unwrap(), int(1));
        assert_eq!(set("[0,1/5] U [9/10,1]").diameter().unwrap(), int(1));
        assert_eq!(set("[2,3]").diameter().unwrap(), int(1));
        assert!(IntervalSet::empty().diameter().is_err());
    }

    #[test]
    fn affine_examples() {
        assert_eq!(set("[0,1]").translate(&rat(1, 2)), set("[1/2,3/2]"));
        assert_eq!(
            set("[2,3] U [4,5]").normalize_to_zero().unwrap(),
            set("[0,1] U [2,3]")
        );
        assert_eq!(
            set("[0,1/5] U [9/10,1]").reflect(&int(1)).unwrap(),
            set("[0,1/10] U [4/5,1]")
        );
    }

    #[test]
    fn boolean_examples() {
        assert_eq!(set("[0,1]").intersect(&set("[1/2,2]")), set("[1/2,1]"));
        assert_eq!(
            set("{0} U [1/10,9/10] U {1}").restrict(&Interval::new(int(0), rat(1, 2)).unwrap()),
            set("{0} U [1/10,1/2]")
        );
        assert_eq!(set("[0,1]").union(&set("[2,3]")), set("[0,1] U [2,3]"));
    }

    #[test]
    fn minkowski_examples() {
        assert_eq!(
            set("[0,1]").minkowski_sum(&set("[0,1]")).unwrap(),
            set("[0,2]")
        );
        let b = set("[0,1/5] U [9/10,1]");
        let bb = b.minkowski_sum(&b).unwrap();
        assert_eq!(bb, set("[0,2/5] U [9/10,6/5] U [9/5,2]"));
        assert_eq!(bb.measure(), rat(9, 10));
        let a = set("{0} U [1/10,9/10] U {1}");
        assert_eq!(
            a.minkowski_sum(&a).unwrap(),
            set("{0} U [1/10,19/10] U {2}")
        );
        assert!(IntervalSet::empty().minkowski_sum(&b).is_err());
    }

    #[test]
    fn contains_point_examples() {
        assert!(set("[0,1]").contains_point(&int(1)));
        assert!(!set("[0,1/5] U [9/10,1]").contains_point(&rat(1, 2)));
        assert!(set("{0}").contains_point(&int(0)));
    }

    #[test]
    fn gaps_within_closes_components() {
        let s = set("{0} U [1/10,9/10] U {1}");
        let gaps = s.gaps_within(&Interval::new(int(0), int(1)).unwrap());
        assert_eq!(gaps, set("[0,1/10] U [9/10,1]"));
        let full = set("[0,2]");
        assert!(full
            .gaps_within(&Interval::new(int(0), int(2)).unwrap())
            .is_empty());
    }

    #[test]
    fn measure_inclusion_exclusion() {
        let s = set("[0,1] U [2,3]");
        let t = set("[1/2,5/2]");
        let lhs = s.union(&t).measure() + s.intersect(&t).measure();
        assert_eq!(lhs, s.measure() + t.measure());
    }
}
