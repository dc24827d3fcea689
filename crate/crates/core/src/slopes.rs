//! The Slopes algorithm for `a·x = b·y + c·z` and the enumeration wrapper
//! that reduces a general equation to that form.
//!
//! Projected onto the `(y, z)` plane, the minimal solutions of the
//! three-unknown equation form a staircase ordered by increasing `z` and
//! decreasing `y`. The first step and the differences between consecutive
//! steps follow from gcds and a modular multiplier, so the staircase is
//! generated without search.

use crate::arith::{ext_gcd, gcd};
use crate::basis::{Basis, Solution};
use crate::bounds::BoundKind;
use crate::equation::{Equation, WeightVector};
use crate::error::{Error, Result};
use crate::lex::{lex_solve_weights, LexVariant, TailKind};
use crate::limits::{Limits, Watch};
use crate::solver::with_normalized;

/// `(x, y, z)`.
pub type Triple = [u64; 3];

/// Everything the staircase generator produced, before filtering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slopes3Trace {
    /// `(b/gb, ymax, 0)`, `(c/gc, 0, zmax)` and the first descent point.
    pub seeds: [Triple; 3],
    /// Points from the descent loop, in emission order.
    pub descent: Vec<Triple>,
}

/// Runs the staircase generator for `a·x = b·y + c·z`, `a, b, c ≥ 1`.
pub fn slopes3_trace(a: u64, b: u64, c: u64) -> Slopes3Trace {
    assert!(a >= 1 && b >= 1 && c >= 1, "coefficients must be positive");
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let gb = gcd(a, b);
    let gc = gcd(a, c);
    let g = gcd(gb, c);
    let ymax = a / gb;
    let zmax = a / gc;
    let mut dz = gb / g;
    // Bézout coefficient of b in m·b + m'·a = gcd(b, a)
    let multiplier = ext_gcd(b, a).1;
    let mut dy = (c * multiplier / g).rem_euclid(ymax);
    let mut y = ymax - dy;
    let mut z = dz;

    let point = |y: i64, z: i64| -> Triple {
        let num = b * y + c * z;
        assert_eq!(num % a, 0, "b·y + c·z must be divisible by a");
        [(num / a) as u64, y as u64, z as u64]
    };

    let seeds = [
        [(b / gb) as u64, ymax as u64, 0],
        [(c / gc) as u64, 0, zmax as u64],
        point(y, z),
    ];
    let mut descent = Vec::new();
    while dy > 0 {
        while y > dy {
            y -= dy;
            z += dz;
            descent.push(point(y, z));
        }
        let f = dy / y;
        dy %= y;
        dz += f * z;
    }
    Slopes3Trace { seeds, descent }
}

/// Minimal nonzero natural solutions of `a·x = b·y + c·z`, sorted.
pub fn slopes3(a: u64, b: u64, c: u64) -> Vec<Triple> {
    let trace = slopes3_trace(a, b, c);
    let basis: Basis = trace
        .seeds
        .iter()
        .chain(&trace.descent)
        .map(|t| Solution::new(t.to_vec()))
        .collect();
    basis.iter().map(|s| [s[0], s[1], s[2]]).collect()
}

/// Optional upper limits on the returned points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    /// Limit on `y + z`.
    pub yz: u64,
}

impl Caps {
    pub const NONE: Caps = Caps {
        x: u64::MAX,
        y: u64::MAX,
        z: u64::MAX,
        yz: u64::MAX,
    };

    fn admits(&self, t: &Triple) -> bool {
        t[0] <= self.x && t[1] <= self.y && t[2] <= self.z && t[1].saturating_add(t[2]) <= self.yz
    }
}

/// Minimal natural solutions of `a·x = b·y + c·z + v`.
///
/// Every solution satisfies `b·y + c·z ≡ -v (mod a)`. For each `z` the
/// smallest admissible `y` in that congruence class is computed directly; the
/// `(y, z)` staircase is then read off in increasing `z`. Past the first `z`
/// with `c·z ≥ -v` the classes repeat with period `a`, which bounds the scan.
/// For `v = 0` the zero vector is excluded and the result equals
/// [`slopes3`].
pub fn solve3_general(a: u64, b: u64, c: u64, v: i64) -> Vec<Triple> {
    solve3_capped(a, b, c, v, Caps::NONE)
}

/// [`solve3_general`] restricted to points within `caps`. Points outside the
/// caps still take part in the minimality filter.
pub fn solve3_capped(a: u64, b: u64, c: u64, v: i64, caps: Caps) -> Vec<Triple> {
    assert!(a >= 1 && b >= 1 && c >= 1, "coefficients must be positive");
    let (a, b, c) = (a as i128, b as i128, c as i128);
    let v = v as i128;
    let g = gcd(a as i64, b as i64) as i128;
    let modulus = a / g;
    let inverse = if modulus == 1 {
        0
    } else {
        (ext_gcd((b / g) as i64, modulus as i64).1 as i128).rem_euclid(modulus)
    };
    let z_first = if v < 0 { (-v + c - 1) / c } else { 0 };
    let z_end = z_first + a;

    let mut out = Vec::new();
    let mut best_y: Option<i128> = None;
    let mut z = 0i128;
    while z <= z_end && z <= caps.z as i128 {
        let target = -v - c * z;
        if target % g == 0 {
            let residue = ((target / g) % modulus * inverse).rem_euclid(modulus);
            // x ≥ 0 needs b·y ≥ target
            let mut y_lo = if target > 0 { (target + b - 1) / b } else { 0 };
            if v == 0 && z == 0 {
                y_lo = y_lo.max(1);
            }
            let y = y_lo + (residue - y_lo).rem_euclid(modulus);
            if best_y.map_or(true, |best| y < best) {
                best_y = Some(y);
                let num = b * y + c * z + v;
                assert_eq!(num % a, 0, "congruence solution must divide exactly");
                let t = [(num / a) as u64, y as u64, z as u64];
                if caps.admits(&t) {
                    out.push(t);
                }
                if y == 0 {
                    break;
                }
            }
        }
        z += 1;
    }
    out.sort_unstable();
    out
}

pub fn slopes_solve(eq: &Equation) -> Result<Basis> {
    slopes_solve_weights(&eq.weights(), &Limits::default())
}

pub fn slopes_solve_weights(w: &WeightVector, limits: &Limits) -> Result<Basis> {
    with_normalized(w, |w| {
        if !w.is_mixed() {
            return Ok(Basis::new());
        }
        if w.len() < 3 {
            let variant = LexVariant::new(BoundKind::Lambert, TailKind::LastTwo);
            return lex_solve_weights(w, variant, limits).map(|(b, _)| b);
        }
        let negatives = w.as_slice().iter().filter(|&&x| x < 0).count();
        if negatives >= 2 {
            solve_arranged(w, limits)
        } else {
            // one negative weight: mirror the equation so it has two
            solve_arranged(&w.negated(), limits)
        }
    })
}

/// Picks the unknowns playing `x`, `y`, `z`: the largest positive weight and
/// the last two negative weights.
fn arrange(w: &WeightVector) -> (usize, usize, usize) {
    let ws = w.as_slice();
    let x = (0..ws.len())
        .filter(|&i| ws[i] > 0)
        .max_by_key(|&i| (ws[i], std::cmp::Reverse(i)))
        .expect("a positive weight");
    let mut negatives = (0..ws.len()).rev().filter(|&i| ws[i] < 0);
    let z = negatives.next().expect("two negative weights");
    let y = negatives.next().expect("two negative weights");
    (x, y, z)
}

struct Wrapper<'a> {
    w: &'a WeightVector,
    xyz: (usize, usize, usize),
    others: Vec<usize>,
    full: Vec<u64>,
    basis: Basis,
    watch: Watch,
}

fn solve_arranged(w: &WeightVector, limits: &Limits) -> Result<Basis> {
    let xyz = arrange(w);
    let others = (0..w.len())
        .filter(|&i| i != xyz.0 && i != xyz.1 && i != xyz.2)
        .collect();
    let mut wrapper = Wrapper {
        w,
        xyz,
        others,
        full: vec![0; w.len()],
        basis: Basis::new(),
        watch: limits.start(),
    };
    wrapper.enumerate(0, 0, 0, 0)?;
    Ok(wrapper.basis)
}

impl Wrapper<'_> {
    /// Assigns `others[k..]` under the Lambert side budgets.
    fn enumerate(&mut self, k: usize, pos_sum: u64, neg_sum: u64, defect: i64) -> Result<()> {
        self.watch.tick()?;
        let max_a = self.w.max_a() as u64;
        let max_b = self.w.max_b() as u64;
        if k == self.others.len() {
            return self.finish(pos_sum, neg_sum, defect);
        }
        let p = self.others[k];
        let wp = self.w[p];
        let budget = if wp > 0 {
            max_b - pos_sum
        } else {
            max_a - neg_sum
        };
        for value in 0..=budget {
            self.full[p] = value;
            let d = defect
                .checked_add(wp * value as i64)
                .ok_or(Error::Overflow("slopes prefix defect"))?;
            let (ps, ns) = if wp > 0 {
                (pos_sum + value, neg_sum)
            } else {
                (pos_sum, neg_sum + value)
            };
            let r = self.enumerate(k + 1, ps, ns, d);
            if r.is_err() {
                self.full[p] = 0;
                return r;
            }
        }
        self.full[p] = 0;
        Ok(())
    }

    fn finish(&mut self, pos_sum: u64, neg_sum: u64, defect: i64) -> Result<()> {
        let (xi, yi, zi) = self.xyz;
        let a = self.w[xi] as u64;
        let b = (-self.w[yi]) as u64;
        let c = (-self.w[zi]) as u64;
        let caps = Caps {
            x: self.w.max_b() as u64 - pos_sum,
            y: u64::MAX,
            z: u64::MAX,
            yz: self.w.max_a() as u64 - neg_sum,
        };
        let prefix_zero = pos_sum == 0 && neg_sum == 0;
        let triples = if defect == 0 {
            if prefix_zero {
                slopes3(a, b, c)
                    .into_iter()
                    .filter(|t| caps.admits(t))
                    .collect()
            } else {
                vec![[0, 0, 0]]
            }
        } else {
            solve3_capped(a, b, c, -defect, caps)
        };
        for [x, y, z] in triples {
            self.full[xi] = x;
            self.full[yi] = y;
            self.full[zi] = z;
            self.basis.insert_minimal(Solution::new(self.full.clone()));
        }
        self.full[xi] = 0;
        self.full[yi] = 0;
        self.full[zi] = 0;
        Ok(())
    }
}
