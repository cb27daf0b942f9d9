//! Residuals of the third-order determining equations on a sampling grid.
//!
//! The coefficient polynomials f₁…f₄ below were derived once from the
//! leading-order cancellation of [H, B] with
//! B = Σ_{i+j+k=3} A_{ijk} {L³, p₁ʲ p₂ᵏ} and are frozen here; any slip would
//! show up as a nonzero residual for the isotropic-oscillator case.

use alloc::vec::Vec;

/// The ten constants A_{ijk} of the third-order integral ansatz.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct A3Coeffs {
    pub a300: f64,
    pub a210: f64,
    pub a201: f64,
    pub a120: f64,
    pub a111: f64,
    pub a102: f64,
    pub a030: f64,
    pub a021: f64,
    pub a012: f64,
    pub a003: f64,
}

impl A3Coeffs {
    pub fn f1(&self, _x: f64, y: f64) -> f64 {
        -self.a300 * y * y * y + self.a210 * y * y - self.a120 * y + self.a030
    }

    pub fn f2(&self, x: f64, y: f64) -> f64 {
        3.0 * self.a300 * x * y * y - 2.0 * self.a210 * x * y + self.a201 * y * y + self.a120 * x
            - self.a111 * y
            + self.a021
    }

    pub fn f3(&self, x: f64, y: f64) -> f64 {
        -3.0 * self.a300 * x * x * y + self.a210 * x * x - 2.0 * self.a201 * x * y + self.a111 * x
            - self.a102 * y
            + self.a012
    }

    pub fn f4(&self, x: f64, _y: f64) -> f64 {
        self.a300 * x * x * x + self.a201 * x * x + self.a102 * x + self.a003
    }
}

/// Rectangle of sample points plus the finite-difference step.
#[derive(Debug, Clone, Copy)]
pub struct RectGrid {
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub nx: usize,
    pub ny: usize,
    pub h: f64,
}

impl Default for RectGrid {
    fn default() -> Self {
        RectGrid {
            x_range: (-1.0, 1.0),
            y_range: (-1.0, 1.0),
            nx: 9,
            ny: 9,
            h: 1.0 / 32.0,
        }
    }
}

fn linspace(range: (f64, f64), n: usize) -> Vec<f64> {
    if n <= 1 {
        return alloc::vec![0.5 * (range.0 + range.1)];
    }
    let step = (range.1 - range.0) / (n - 1) as f64;
    (0..n).map(|i| range.0 + step * i as f64).collect()
}

// Five-point stencils, exact on polynomials of degree ≤ 4.
fn d1(f: impl Fn(f64) -> f64, t: f64, h: f64) -> f64 {
    (-f(t + 2.0 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2.0 * h)) / (12.0 * h)
}

fn d2(f: impl Fn(f64) -> f64, t: f64, h: f64) -> f64 {
    (-f(t + 2.0 * h) + 16.0 * f(t + h) - 30.0 * f(t) + 16.0 * f(t - h) - f(t - 2.0 * h))
        / (12.0 * h * h)
}

fn d3(f: impl Fn(f64) -> f64, t: f64, h: f64) -> f64 {
    (f(t + 2.0 * h) - 2.0 * f(t + h) + 2.0 * f(t - h) - f(t - 2.0 * h)) / (2.0 * h * h * h)
}

/// Max-norm residuals of the four determining equations over the grid, in
/// the order (a) g₁,x; (b) g₂,y; (c) g₁,y + g₂,x; (d) the closure equation
/// with its ħ²/4 quantum correction.
pub fn n3_determining_residuals(
    v: &dyn Fn(f64, f64) -> f64,
    g1: &dyn Fn(f64, f64) -> f64,
    g2: &dyn Fn(f64, f64) -> f64,
    a: &A3Coeffs,
    hbar: f64,
    grid: &RectGrid,
) -> [f64; 4] {
    let h = grid.h;
    let mut max = [0.0f64; 4];
    for &x in &linspace(grid.x_range, grid.nx) {
        for &y in &linspace(grid.y_range, grid.ny) {
            let vx = d1(|t| v(t, y), x, h);
            let vy = d1(|t| v(x, t), y, h);
            let vxxx = d3(|t| v(t, y), x, h);
            let vyyy = d3(|t| v(x, t), y, h);
            let vxxy = d1(|t| d2(|s| v(s, t), x, h), y, h);
            let vxyy = d1(|t| d2(|s| v(t, s), y, h), x, h);

            let (f1, f2) = (a.f1(x, y), a.f2(x, y));
            let (f3, f4) = (a.f3(x, y), a.f4(x, y));

            let ra = d1(|t| g1(t, y), x, h) - (3.0 * f1 * vx + f2 * vy);
            let rb = d1(|t| g2(x, t), y, h) - (f3 * vx + 3.0 * f4 * vy);
            let rc = d1(|t| g1(x, t), y, h) + d1(|t| g2(t, y), x, h) - 2.0 * (f2 * vx + f3 * vy);
            let rd = g1(x, y) * vx + g2(x, y) * vy
                - 0.25
                    * hbar
                    * hbar
                    * (f1 * vxxx
                        + f2 * vxxy
                        + f3 * vxyy
                        + f4 * vyyy
                        + 8.0 * a.a300 * (x * vy - y * vx)
                        + 2.0 * (a.a210 * vx + a.a201 * vy));

            for (slot, r) in max.iter_mut().zip([ra, rb, rc, rd]) {
                let mag = libm::fabs(r);
                if mag > *slot {
                    *slot = mag;
                }
            }
        }
    }
    max
}
