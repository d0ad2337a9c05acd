//! Discretized cross-checking oracle. Grid points are tested for membership
//! with exact rational comparisons, so the oracle is one-sided: everything it
//! marks is a true member and every gap point a true non-member. Only the
//! measure estimate carries discretization error, and that error is bounded.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::sets::{Interval, IntervalSet};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Bitmap over the grid {base/q, (base+1)/q, ...}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSet {
    q: u64,
    base: i64,
    bits: Vec<u64>,
    len: usize,
}

impl GridSet {
    /// Marks every grid point of resolution `1/q` that lies in `s` exactly.
    pub fn from_set(s: &IntervalSet, q: u64) -> Result<Self> {
        let q = check_resolution(q)?;
        if s.is_empty() {
            return Ok(GridSet {
                q,
                base: 0,
                bits: Vec::new(),
                len: 0,
            });
        }
        let base = grid_index(s.inf().unwrap(), q, true)?;
        let top = grid_index(s.sup().unwrap(), q, false)?;
        let len = (top - base + 1).max(0) as usize;
        let mut g = GridSet {
            q,
            base,
            bits: vec![0; len.div_ceil(64)],
            len,
        };
        let qr = Rational::from(BigInt::from(q));
        for i in 0..len {
            let x = Rational::from(BigInt::from(base + i as i64)) / &qr;
            if s.contains_point(&x) {
                g.set(i);
            }
        }
        Ok(g)
    }

    pub fn resolution(&self) -> u64 {
        self.q
    }

    fn set(&mut self, i: usize) {
        self.bits[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    /// Grid indices (numerators over q) of all marked points.
    pub fn marked_indices(&self) -> Vec<i64> {
        (0..self.len)
            .filter(|&i| self.get(i))
            .map(|i| self.base + i as i64)
            .collect()
    }

    pub fn marked_points(&self) -> Vec<Rational> {
        let qr = BigInt::from(self.q);
        self.marked_indices()
            .into_iter()
            .map(|n| Rational::new(BigInt::from(n), qr.clone()))
            .collect()
    }

    pub fn contains_index(&self, n: i64) -> bool {
        match usize::try_from(n - self.base) {
            Ok(i) if i < self.len => self.get(i),
            _ => false,
        }
    }
}

fn check_resolution(q: u64) -> Result<u64> {
    if q == 0 {
        Err(Error::Invalid("grid resolution must be positive".into()))
    } else {
        Ok(q)
    }
}

/// Smallest (round up) or largest (round down) integer n with n/q inside
/// the half-line cut at `x`.
fn grid_index(x: &Rational, q: u64, round_up: bool) -> Result<i64> {
    let scaled = x * Rational::from(BigInt::from(q));
    let n = if round_up {
        scaled.ceil()
    } else {
        scaled.floor()
    };
    n.to_integer()
        .to_i64()
        .ok_or_else(|| Error::Invalid("grid index overflows i64".into()))
}

/// Sum of the grids of A and B at resolution `1/q`. Every marked point is a
/// sum of true members, hence a true member of the exact sumset.
pub fn grid_sumset(a: &IntervalSet, b: &IntervalSet, q: u64) -> Result<GridSet> {
    let ga = GridSet::from_set(a, q)?;
    let gb = GridSet::from_set(b, q)?;
    let ia = ga.marked_indices();
    let ib = gb.marked_indices();
    if ia.is_empty() || ib.is_empty() {
        return Ok(GridSet {
            q,
            base: 0,
            bits: Vec::new(),
            len: 0,
        });
    }
    let base = ia[0] + ib[0];
    let top = ia[ia.len() - 1] + ib[ib.len() - 1];
    let len = (top - base + 1) as usize;
    let mut g = GridSet {
        q,
        base,
        bits: vec![0; len.div_ceil(64)],
        len,
    };
    for x in &ia {
        for y in &ib {
            g.set((x + y - base) as usize);
        }
    }
    Ok(g)
}

/// Lower estimate of the measure: cells whose both endpoints are marked,
/// each counted as `1/q`. For a set with `p` canonical parts the estimate
/// is within `2p/q` of the exact measure.
pub fn grid_measure(g: &GridSet) -> Rational {
    let mut cells: u64 = 0;
    for i in 1..g.len {
        if g.get(i - 1) && g.get(i) {
            cells += 1;
        }
    }
    if cells == 0 {
        return Rational::zero();
    }
    Rational::new(BigInt::from(cells), BigInt::from(g.q))
}

/// All grid points of resolution `1/q` in `window` that are exactly outside
/// `s`. Suitable as certified gap points for the gap-point lemma.
pub fn gap_points(s: &IntervalSet, window: &Interval, q: u64) -> Result<Vec<Rational>> {
    let q = check_resolution(q)?;
    let lo = grid_index(window.lo(), q, true)?;
    let hi = grid_index(window.hi(), q, false)?;
    let qr = BigInt::from(q);
    let mut out = Vec::new();
    for n in lo..=hi {
        let x = Rational::new(BigInt::from(n), qr.clone());
        if !s.contains_point(&x) {
            out.push(x);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_set;
    use crate::rational::{int, rat};
    use num_traits::Signed;

    fn set(s: &str) -> IntervalSet {
        parse_set(s).unwrap()
    }

    #[test]
    fn sumset_of_unit_intervals_at_q2() {
        let u = set("[0,1]");
        let g = grid_sumset(&u, &u, 2).unwrap();
        assert_eq!(
            g.marked_points(),
            vec![int(0), rat(1, 2), int(1), rat(3, 2), int(2)]
        );
    }

    #[test]
    fn sumset_grid_is_inside_the_exact_sumset() {
        let a = set("{0} U [1/10,9/10] U {1}");
        let s = a.minkowski_sum(&a).unwrap();
        let g = grid_sumset(&a, &a, 10).unwrap();
        let pts = g.marked_points();
        assert!(!pts.is_empty());
        for p in &pts {
            assert!(s.contains_point(p));
        }
        // the gap (0, 1/10) shows up as unmarked points at finer grids
        let g = grid_sumset(&a, &a, 20).unwrap();
        assert!(!g.contains_index(1));
    }

    #[test]
    fn measure_error_bounds() {
        let u = set("[0,1]");
        let m = grid_measure(&GridSet::from_set(&u, 10).unwrap());
        assert!((m - int(1)).abs() <= rat(1, 5));

        let b = set("[0,1/5] U [9/10,1]");
        let m = grid_measure(&GridSet::from_set(&b, 20).unwrap());
        assert!((m - rat(3, 10)).abs() <= rat(4, 20));

        assert_eq!(grid_measure(&GridSet::from_set(&IntervalSet::empty(), 10).unwrap()), int(0));
    }

    #[test]
    fn measure_converges_on_the_exact_sumset() {
        let a = set("[0,1/5] U [9/10,1]");
        let s = a.minkowski_sum(&a).unwrap();
        let exact = s.measure();
        let parts = int(s.parts().len() as i64);
        for q in [10u64, 100, 1000] {
            let est = grid_measure(&GridSet::from_set(&s, q).unwrap());
            let bound = int(2) * &parts / int(q as i64);
            assert!((est - &exact).abs() <= bound, "q = {q}");
        }
    }

    #[test]
    fn gap_points_examples() {
        let a = set("{0} U [1/10,9/10] U {1}");
        let s = a.minkowski_sum(&a).unwrap();
        let w = Interval::new(int(0), int(1)).unwrap();
        let gaps = gap_points(&s, &w, 20).unwrap();
        assert_eq!(gaps, vec![rat(1, 20)]);

        let full = set("[0,2]");
        let w = Interval::new(int(0), int(2)).unwrap();
        assert!(gap_points(&full, &w, 7).unwrap().is_empty());

        let u = set("[0,1]");
        assert_eq!(gap_points(&u, &w, 2).unwrap(), vec![rat(3, 2), int(2)]);
    }

    #[test]
    fn negative_grid_points_are_handled() {
        let s = set("[-1,-1/2]");
        let g = GridSet::from_set(&s, 2).unwrap();
        assert_eq!(g.marked_points(), vec![int(-1), rat(-1, 2)]);
        assert_eq!(grid_measure(&g), rat(1, 2));
    }

    #[test]
    fn zero_resolution_is_rejected() {
        assert!(GridSet::from_set(&set("[0,1]"), 0).is_err());
    }
}
