//! Extended gcd and the linear two-unknown equation `a·x + b·y = c`.

/// Returns `(g, m_a, m_b)` with `g = gcd(a, b) = m_a·a + m_b·b`.
///
/// Signs of the inputs are allowed; `g` is always nonnegative.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (old_r, old_s, old_t) = (-old_r, -old_s, -old_t);
    }
    (old_r as i64, old_s as i64, old_t as i64)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    ext_gcd(a, b).0
}

fn div_floor(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -div_floor(-a, b)
}

/// All natural `(x, y)` with `a·x + b·y = c`, `x ≤ max_x`, `y ≤ max_y`, in
/// increasing `x` order.
///
/// Uses the gcd parametrization `x = x0 + t·(b/g)`, `y = y0 - t·(a/g)` and
/// walks only the admissible range of `t`. `a` and `b` must be nonzero.
pub fn solve_linear_pair(a: i64, b: i64, c: i64, max_x: u64, max_y: u64) -> Vec<(u64, u64)> {
    assert!(a != 0 && b != 0, "coefficients must be nonzero");
    let (g, ma, mb) = ext_gcd(a, b);
    if c % g != 0 {
        return Vec::new();
    }
    let (a, b, c, g) = (a as i128, b as i128, c as i128, g as i128);
    let k = c / g;
    let x0 = ma as i128 * k;
    let y0 = mb as i128 * k;
    // x(t) = x0 + sx·t, y(t) = y0 - sy·t
    let sx = b / g;
    let sy = a / g;

    // Interval of t where lo ≤ base + step·t ≤ hi.
    let range = |base: i128, step: i128, lo: i128, hi: i128| -> (i128, i128) {
        if step > 0 {
            (div_ceil(lo - base, step), div_floor(hi - base, step))
        } else {
            (div_ceil(hi - base, step), div_floor(lo - base, step))
        }
    };
    let (tx_lo, tx_hi) = range(x0, sx, 0, max_x as i128);
    let (ty_lo, ty_hi) = range(y0, -sy, 0, max_y as i128);
    let lo = tx_lo.max(ty_lo);
    let hi = tx_hi.min(ty_hi);
    if lo > hi {
        return Vec::new();
    }
    let mut out: Vec<(u64, u64)> = (lo..=hi)
        .map(|t| ((x0 + sx * t) as u64, (y0 - sy * t) as u64))
        .collect();
    if sx < 0 {
        out.reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bezout_identity() {
        for (a, b, g) in [
            (3, 5, 1),
            (4, 6, 2),
            (7, 7, 7),
            (1021, 503, 1),
            (240, 46, 2),
        ] {
            let (gg, ma, mb) = ext_gcd(a, b);
            assert_eq!(gg, g);
            assert_eq!(ma * a + mb * b, g, "({a}, {b})");
        }
        let (g, ma, mb) = ext_gcd(3, 5);
        assert_eq!((g, ma, mb), (1, 2, -1));
    }

    #[test]
    fn signed_inputs() {
        let (g, ma, mb) = ext_gcd(-4, 6);
        assert_eq!(g, 2);
        assert_eq!(ma * -4 + mb * 6, 2);
    }

    fn scan(a: i64, b: i64, c: i64, mx: u64, my: u64) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for x in 0..=mx {
            for y in 0..=my {
                if a * x as i64 + b * y as i64 == c {
                    out.push((x, y));
                }
            }
        }
        out
    }

    #[test]
    fn pair_examples() {
        assert_eq!(solve_linear_pair(3, 5, 15, 5, 3), vec![(0, 3), (5, 0)]);
        assert_eq!(solve_linear_pair(2, 3, 0, 10, 10), vec![(0, 0)]);
        // y - 2z = -3 with y ≤ 2, z ≤ 1: (1, 2) needs z = 2
        assert!(solve_linear_pair(1, -2, -3, 2, 1).is_empty());
        assert_eq!(solve_linear_pair(1, -2, -3, 2, 2), vec![(1, 2)]);
    }

    #[test]
    fn pair_matches_scan() {
        for a in [-7i64, -3, -1, 1, 2, 5, 6] {
            for b in [-6i64, -4, -1, 1, 3, 7] {
                for c in -20..=20 {
                    for (mx, my) in [(0, 0), (3, 9), (9, 4), (12, 12)] {
                        assert_eq!(
                            solve_linear_pair(a, b, c, mx, my),
                            scan(a, b, c, mx, my),
                            "{a}x + {b}y = {c}, x ≤ {mx}, y ≤ {my}"
                        );
                    }
                }
            }
        }
    }
}
