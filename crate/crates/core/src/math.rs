//! Numerical building blocks: binomials, phase arithmetic, finite
//! differences, adaptive Simpson quadrature and golden-section search.

use core::f64::consts::PI;

use crate::error::{Error, Result};

/// Largest `n` for which binomials are computed in exact integer arithmetic.
pub const EXACT_BINOMIAL_MAX: usize = 50;

const TWO_PI: f64 = 2.0 * PI;

/// Exact `C(n, k)`, or `None` if the value overflows `u128`.
pub fn binomial_exact(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // (i+1)/g divides n-i because gcd(acc/g, (i+1)/g) = 1
        let num = (n - i) as u128;
        let den = (i + 1) as u128;
        let g = gcd(acc, den);
        acc = (acc / g).checked_mul(num / (den / g))?;
    }
    Some(acc)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Natural log of `C(n, k)`.
pub fn ln_binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    if n <= EXACT_BINOMIAL_MAX {
        return libm::log(binomial(n, k));
    }
    libm::lgamma(n as f64 + 1.0) - libm::lgamma(k as f64 + 1.0) - libm::lgamma((n - k) as f64 + 1.0)
}

/// `C(n, k)` as a float: exact for `n <= 50`, log-gamma above.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    if n <= EXACT_BINOMIAL_MAX {
        // C(50, 25) ~ 1.26e14 fits u128 and is exact in f64 (< 2^53)
        let k = k.min(n - k);
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc * (n - i) as u128 / (i + 1) as u128;
        }
        return acc as f64;
    }
    libm::exp(ln_binomial(n, k))
}

/// Binomial occupation `C(N,p) cos^{2(N-p)}(θ/2) sin^{2p}(θ/2)` of the
/// Dicke level with `p` down-spins in the product state at polar angle θ.
pub fn dicke_weight(n: usize, p: usize, theta: f64) -> f64 {
    let c = libm::cos(theta / 2.0);
    let s = libm::sin(theta / 2.0);
    let up = (n - p) as i32;
    let down = p as i32;
    if n <= EXACT_BINOMIAL_MAX {
        return binomial(n, p) * powi(c * c, up) * powi(s * s, down);
    }
    let mut ln = ln_binomial(n, p);
    if up > 0 {
        ln += up as f64 * libm::log(c * c);
    }
    if down > 0 {
        ln += down as f64 * libm::log(s * s);
    }
    libm::exp(ln)
}

/// Integer power (`f64::powi` lives in std).
pub fn powi(x: f64, n: i32) -> f64 {
    let mut base = if n < 0 { 1.0 / x } else { x };
    let mut e = n.unsigned_abs();
    let mut acc = 1.0;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// Principal value in (-π, π].
pub fn wrap_phase(x: f64) -> f64 {
    let mut r = libm::fmod(x, TWO_PI);
    if r > PI {
        r -= TWO_PI;
    } else if r <= -PI {
        r += TWO_PI;
    }
    r
}

/// Cyclic distance `min_k |a - b + 2πk|`.
pub fn phase_distance(a: f64, b: f64) -> f64 {
    libm::fabs(wrap_phase(a - b))
}

/// Cyclic distance modulo π, for quantities defined only up to a π branch.
pub fn phase_distance_mod_pi(a: f64, b: f64) -> f64 {
    let r = libm::fmod(a - b, PI);
    let r = if r < 0.0 { r + PI } else { r };
    r.min(PI - r)
}

/// Central difference with one Richardson refinement, O(h^4).
pub fn richardson_derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    let d1 = (f(x + h) - f(x - h)) / (2.0 * h);
    let h2 = h / 2.0;
    let d2 = (f(x + h2) - f(x - h2)) / (2.0 * h2);
    (4.0 * d2 - d1) / 3.0
}

const SIMPSON_MAX_DEPTH: u32 = 48;

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<f64> {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let mut ok = true;
    let v = simpson_step(f, a, b, fa, fm, fb, whole, tol, SIMPSON_MAX_DEPTH, &mut ok);
    if ok {
        Ok(v)
    } else {
        Err(Error::Convergence { tol, estimate: v })
    }
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    ok: &mut bool,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if libm::fabs(delta) <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    if depth == 0 || !delta.is_finite() {
        *ok = false;
        return left + right;
    }
    simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, ok)
        + simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, ok)
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for the maximiser of a unimodal `f` on `[a, b]`.
pub fn golden_section_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while libm::fabs(b - a) > tol {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// Golden-section search for the minimiser of a unimodal `f` on `[a, b]`.
pub fn golden_section_min<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    golden_section_max(|x| -f(x), a, b, tol)
}
