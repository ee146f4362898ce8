//! Special functions: error function family (including the scaled
//! complementary error function), ζ(3/2), log-factorials, and
//! Gauss–Legendre quadrature rules.
//!
//! The error functions are built from two cancellation-free pieces:
//! a positive-term confluent series for small arguments and a
//! continued fraction for the scaled tail. Both are accurate to a few
//! ulp, which the truncated-Gaussian machinery relies on.

use std::f64::consts::PI;
use std::sync::OnceLock;

const FRAC_2_SQRT_PI: f64 = 1.128_379_167_095_512_6;

/// erf(x) for |x| < 1.5 via the positive-term series
/// erf(x) = (2x/√π) e^{-x²} Σ_n (2x²)^n / (1·3···(2n+1)).
fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut n = 0u32;
    loop {
        n += 1;
        term *= 2.0 * x2 / (2.0 * n as f64 + 1.0);
        sum += term;
        if term < 1e-18 * sum || n > 200 {
            break;
        }
    }
    FRAC_2_SQRT_PI * x * (-x2).exp() * sum
}

/// erfcx(x) = e^{x²} erfc(x) for x ≥ 1.5 via the Laplace continued
/// fraction, evaluated by backward recurrence.
fn erfcx_cf(x: f64) -> f64 {
    let mut f = 0.0;
    let mut k = 160u32;
    while k > 0 {
        f = (k as f64 / 2.0) / (x + f);
        k -= 1;
    }
    1.0 / (PI.sqrt() * (x + f))
}

/// Error function.
pub fn erf(x: f64) -> f64 {
    if x < 0.0 {
        return -erf(-x);
    }
    if x < 1.5 {
        erf_series(x)
    } else if x > 27.0 {
        1.0
    } else {
        1.0 - erfcx_cf(x) * (-x * x).exp()
    }
}

/// Complementary error function.
pub fn erfc(x: f64) -> f64 {
    if x < 0.0 {
        return 2.0 - erfc(-x);
    }
    if x < 1.5 {
        1.0 - erf_series(x)
    } else {
        erfcx_cf(x) * (-x * x).exp()
    }
}

/// Scaled complementary error function erfcx(x) = e^{x²} erfc(x).
///
/// Overflows for x ≲ -26.6 like the defining expression; callers that
/// need the far negative side should use [`ln_erfcx_neg`].
pub fn erfcx(x: f64) -> f64 {
    if x >= 1.5 {
        erfcx_cf(x)
    } else if x >= 0.0 {
        (x * x).exp() * (1.0 - erf_series(x))
    } else {
        // erfcx(-y) = 2 e^{y²} - erfcx(y)
        2.0 * (x * x).exp() - erfcx(-x)
    }
}

/// ln erfcx(-s), stable for all s (in particular large positive s where
/// erfcx(-s) = 2e^{s²} - erfcx(s) overflows).
pub fn ln_erfcx_neg(s: f64) -> f64 {
    if s <= 6.0 {
        erfcx(-s).ln()
    } else {
        // erfcx(-s) = e^{s²} (2 - e^{-s²} erfcx(s))
        s * s + (2.0 - (-s * s).exp() * erfcx_cf(s)).ln()
    }
}

/// Inverse of erfc on (0, 2): returns y with erfc(y) = p.
///
/// Central region by plain Newton, tails by Newton on
/// ln erfc(y) = ln erfcx(y) - y², which stays well scaled down to
/// p ~ 1e-300.
pub fn erfc_inv(p: f64) -> f64 {
    assert!(p > 0.0 && p < 2.0, "erfc_inv domain");
    if p > 1.0 {
        return -erfc_inv(2.0 - p);
    }
    if p > 0.1 {
        // Newton on erfc itself; derivative -2/√π e^{-y²}.
        let mut y = 0.8 * (1.0 - p); // crude but inside the basin
        for _ in 0..60 {
            let r = erfc(y) - p;
            let dy = r / (FRAC_2_SQRT_PI * (-y * y).exp());
            y += dy;
            if dy.abs() < 1e-16 * (1.0 + y.abs()) {
                break;
            }
        }
        y
    } else {
        // Solve g(y) = ln erfcx(y) - y² - ln p = 0; g'(y) = -2/(√π erfcx(y)).
        let lt = p.ln();
        let mut y = (-lt).sqrt();
        for _ in 0..80 {
            let g = erfcx(y).ln() - y * y - lt;
            let dy = g * erfcx(y) * PI.sqrt() / 2.0;
            y += dy;
            if dy.abs() < 1e-16 * (1.0 + y.abs()) {
                break;
            }
        }
        y
    }
}

/// Standard normal quantile: Φ⁻¹(u) = -√2 · erfc_inv(2u).
pub fn normal_quantile(u: f64) -> f64 {
    -std::f64::consts::SQRT_2 * erfc_inv(2.0 * u)
}

/// ζ(3/2), computed once by direct series with an Euler–Maclaurin tail.
pub fn zeta_three_halves() -> f64 {
    static Z: OnceLock<f64> = OnceLock::new();
    *Z.get_or_init(|| {
        let s = 1.5;
        let k = 100_000u64;
        let mut sum = 0.0;
        // Backward summation keeps the rounding of the small terms.
        for n in (1..=k).rev() {
            sum += (n as f64).powf(-s);
        }
        let kf = k as f64;
        sum += kf.powf(1.0 - s) / (s - 1.0);
        sum -= 0.5 * kf.powf(-s);
        sum += s / 12.0 * kf.powf(-s - 1.0);
        sum -= s * (s + 1.0) * (s + 2.0) / 720.0 * kf.powf(-s - 3.0);
        sum
    })
}

/// ln n! with a cached table for small n and a Stirling series beyond.
pub fn ln_factorial(n: u64) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(1025);
        t.push(0.0);
        let mut acc = 0.0f64;
        for k in 1..=1024u64 {
            acc += (k as f64).ln();
            t.push(acc);
        }
        t
    });
    if (n as usize) < table.len() {
        return table[n as usize];
    }
    let x = n as f64 + 1.0;
    // Stirling series for ln Γ(x).
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln()
        + inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 / 1260.0))
}

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        // Chebyshev-like initial guess, then Newton on P_n.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0f64, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}
