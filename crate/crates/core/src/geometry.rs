//! Plane geometry helpers: complex-window rectangles, convex hulls and
//! farthest point pairs.

use num_complex::Complex64;

/// Axis-aligned rectangle in the complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Window {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Self {
        assert!(re_min < re_max && im_min < im_max, "degenerate window");
        Self { re_min, re_max, im_min, im_max }
    }

    /// Square window centered at the origin with the given half-side.
    pub fn centered(half: f64) -> Self {
        Self::new(-half, half, -half, half)
    }

    pub fn width(&self) -> f64 {
        self.re_max - self.re_min
    }

    pub fn height(&self) -> f64 {
        self.im_max - self.im_min
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.re >= self.re_min && z.re <= self.re_max && z.im >= self.im_min && z.im <= self.im_max
    }
}

/// Andrew monotone-chain convex hull. Returns hull vertices in
/// counter-clockwise order; collinear interior points are dropped.
pub fn convex_hull(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut pts: Vec<(f64, f64)> = points.to_vec();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Farthest pair of a point set, via its convex hull. Hull vertex counts in
/// this crate stay small, so the quadratic scan over hull vertices is cheap
/// and free of the caliper edge cases.
pub fn farthest_pair(points: &[(f64, f64)]) -> Option<((f64, f64), (f64, f64), f64)> {
    if points.is_empty() {
        return None;
    }
    let hull = convex_hull(points);
    let mut best = (hull[0], hull[0], 0.0_f64);
    for i in 0..hull.len() {
        for j in (i + 1)..hull.len() {
            let d = (hull[i].0 - hull[j].0).hypot(hull[i].1 - hull[j].1);
            if d > best.2 {
                best = (hull[i], hull[j], d);
            }
        }
    }
    Some(best)
}
