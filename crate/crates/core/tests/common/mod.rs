//! Test-only oracles that do not share code paths with the library.
#![allow(dead_code)]

/// Adaptive Dormand-Prince 5(4) integration of `y' = f(y)` from 0 to `t_end`.
pub fn dopri45<F>(f: F, y0: &[f64], t_end: f64, rtol: f64, atol: f64) -> Vec<f64>
where
    F: Fn(&[f64]) -> Vec<f64>,
{
    const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
    const A: [[f64; 6]; 7] = [
        [0.0; 6],
        [0.2, 0.0, 0.0, 0.0, 0.0, 0.0],
        [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
        [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
        [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
        [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
        [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
    ];
    const B5: [f64; 7] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
    const B4: [f64; 7] = [
        5179.0 / 57600.0,
        0.0,
        7571.0 / 16695.0,
        393.0 / 640.0,
        -92097.0 / 339200.0,
        187.0 / 2100.0,
        1.0 / 40.0,
    ];
    let _ = C;
    let n = y0.len();
    let mut y = y0.to_vec();
    let mut t = 0.0;
    let mut h = (t_end / 100.0).max(1e-6);
    if t_end == 0.0 {
        return y;
    }
    while t < t_end {
        if t + h > t_end {
            h = t_end - t;
        }
        let mut k: Vec<Vec<f64>> = Vec::with_capacity(7);
        for s in 0..7 {
            let mut ys = y.clone();
            for (j, kj) in k.iter().enumerate() {
                for i in 0..n {
                    ys[i] += h * A[s][j] * kj[i];
                }
            }
            k.push(f(&ys));
        }
        let mut y5 = y.clone();
        let mut err: f64 = 0.0;
        for i in 0..n {
            let mut d5 = 0.0;
            let mut d4 = 0.0;
            for s in 0..7 {
                d5 += B5[s] * k[s][i];
                d4 += B4[s] * k[s][i];
            }
            y5[i] += h * d5;
            let sc = atol + rtol * y[i].abs().max(y5[i].abs());
            err = err.max((h * (d5 - d4)).abs() / sc);
        }
        if err <= 1.0 {
            t += h;
            y = y5;
        }
        let fac = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
        h *= fac;
    }
    y
}

/// Integrates `i psi' = H psi` for a real symmetric 3x3 `h` (row-major),
/// returning `(re, im)` pairs.
pub fn schrodinger3(h: [[f64; 3]; 3], start: usize, t: f64) -> [(f64, f64); 3] {
    let mut y0 = vec![0.0; 6];
    y0[2 * start] = 1.0;
    let f = |y: &[f64]| {
        let mut d = vec![0.0; 6];
        for i in 0..3 {
            let (mut hr, mut hi) = (0.0, 0.0);
            for j in 0..3 {
                hr += h[i][j] * y[2 * j];
                hi += h[i][j] * y[2 * j + 1];
            }
            // psi' = -i H psi
            d[2 * i] = hi;
            d[2 * i + 1] = -hr;
        }
        d
    };
    let y = dopri45(f, &y0, t, 1e-13, 1e-15);
    [(y[0], y[1]), (y[2], y[3]), (y[4], y[5])]
}
