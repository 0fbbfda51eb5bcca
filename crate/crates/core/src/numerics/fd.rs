//! Central finite-difference stencils on functions of real variables.

/// `f'(x)` by the two-point central difference.
pub fn central_first<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// `f''(x)` by the three-point central difference.
pub fn central_second<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
}

/// Five-point Laplacian `u_xx + u_yy` in the plane.
pub fn laplacian_5pt<F: Fn(f64, f64) -> f64>(u: F, x: f64, y: f64, h: f64) -> f64 {
    (u(x + h, y) + u(x - h, y) + u(x, y + h) + u(x, y - h) - 4.0 * u(x, y)) / (h * h)
}

/// Dense Hessian of `u: ℝᵈ → ℝ` at `x`, row-major `d × d`.
///
/// Diagonal entries use the three-point stencil, off-diagonal entries the
/// four-point cross stencil. `1 + 2d + 4·d(d-1)/2` evaluations.
pub fn hessian<F: Fn(&[f64]) -> f64>(u: F, x: &[f64], h: f64) -> Vec<f64> {
    let d = x.len();
    let mut out = vec![0.0; d * d];
    let mut p = x.to_vec();
    let center = u(&p);
    for i in 0..d {
        p[i] = x[i] + h;
        let fp = u(&p);
        p[i] = x[i] - h;
        let fm = u(&p);
        p[i] = x[i];
        out[i * d + i] = (fp - 2.0 * center + fm) / (h * h);
    }
    for i in 0..d {
        for j in (i + 1)..d {
            let mut eval = |si: f64, sj: f64| {
                p[i] = x[i] + si * h;
                p[j] = x[j] + sj * h;
                let v = u(&p);
                p[i] = x[i];
                p[j] = x[j];
                v
            };
            let v = (eval(1.0, 1.0) - eval(1.0, -1.0) - eval(-1.0, 1.0) + eval(-1.0, -1.0)) / (4.0 * h * h);
            out[i * d + j] = v;
            out[j * d + i] = v;
        }
    }
    out
}

/// Richardson extrapolation for a second-order scheme evaluated at `h` and `h/2`.
pub fn richardson(at_h: f64, at_half_h: f64) -> f64 {
    (4.0 * at_half_h - at_h) / 3.0
}
