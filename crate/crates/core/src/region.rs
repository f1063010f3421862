//! Admissible multiplier regions of the linear difference control: the
//! unit-disc image `Phi(D)`, rasters of the stable multiplier set `M_a`
//! with connected components, diameters, and the 16/4 diameter-bound checks.

use num_complex::Complex64;
use rayon::prelude::*;
use std::collections::VecDeque;

use crate::error::{CoreError, Result};
use crate::geometry::{farthest_pair, Window};
use crate::poly::{char_poly_linear, ComplexPolynomial};
use crate::BOUNDARY_TOL;

/// The rational map `Phi(z) = z / (1 + q(z))` with
/// `q(z) = (a_1 - mu0) z + a_2 z^2 + ... + a_N z^N`.
///
/// `Phi` is analytic on the closed unit disc exactly when `1 + q` has no
/// zero there, which in turn happens exactly when the coefficient vector
/// is admissible at the anchor multiplier `mu0`. The constructor records
/// that check instead of failing, so inadmissible maps can still be
/// plotted for diagnostics.
#[derive(Debug, Clone)]
pub struct PhiMap {
    q: ComplexPolynomial,
    mu0: Complex64,
    a: Vec<f64>,
    pole_free: bool,
    min_pole_modulus: f64,
}

impl PhiMap {
    /// Build the map for a coefficient vector and anchor multiplier.
    pub fn new(a: &[f64], mu0: Complex64) -> Result<Self> {
        if a.is_empty() {
            return Err(CoreError::EmptyCoeffs);
        }
        let mut q_coeffs = Vec::with_capacity(a.len() + 1);
        q_coeffs.push(Complex64::new(0.0, 0.0));
        q_coeffs.push(Complex64::new(a[0], 0.0) - mu0);
        for &ak in &a[1..] {
            q_coeffs.push(Complex64::new(ak, 0.0));
        }
        let q = ComplexPolynomial::new(q_coeffs);

        let mut one_plus_q: Vec<Complex64> = q.coeffs().to_vec();
        one_plus_q[0] += 1.0;
        let denom = ComplexPolynomial::new(one_plus_q);
        let min_pole_modulus = if denom.degree() == 0 {
            f64::INFINITY
        } else {
            denom
                .roots()?
                .iter()
                .map(|r| r.norm())
                .fold(f64::INFINITY, f64::min)
        };
        Ok(Self {
            q,
            mu0,
            a: a.to_vec(),
            pole_free: min_pole_modulus > 1.0 + BOUNDARY_TOL,
            min_pole_modulus,
        })
    }

    pub fn q(&self) -> &ComplexPolynomial {
        &self.q
    }

    pub fn mu0(&self) -> Complex64 {
        self.mu0
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.a
    }

    /// True when `1 + q` has no zero on the closed unit disc, i.e. the
    /// coefficient vector belongs to `A_N(mu0)`.
    pub fn pole_free(&self) -> bool {
        self.pole_free
    }

    pub fn min_pole_modulus(&self) -> f64 {
        self.min_pole_modulus
    }

    pub fn pole_check(&self) -> Result<()> {
        if self.pole_free {
            Ok(())
        } else {
            Err(CoreError::PoleInsideDisc { modulus: self.min_pole_modulus })
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        z / (Complex64::new(1.0, 0.0) + self.q.eval(z))
    }

    /// Images of `n_samples` equispaced points of the unit circle,
    /// starting at `Phi(1) = 1 / (1 + q(1))`.
    pub fn boundary(&self, n_samples: usize) -> Result<Vec<Complex64>> {
        assert!(n_samples >= 16, "boundary sampling needs at least 16 points");
        let mut out = Vec::with_capacity(n_samples);
        for k in 0..n_samples {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n_samples as f64;
            let z = Complex64::from_polar(1.0, theta);
            let denom = Complex64::new(1.0, 0.0) + self.q.eval(z);
            if denom.norm() <= BOUNDARY_TOL {
                return Err(CoreError::PoleInsideDisc { modulus: denom.norm() });
            }
            out.push(z / denom);
        }
        Ok(out)
    }

    /// Exact membership of `w` in the image of the closed unit disc,
    /// decided from the roots of `w (1 + q(z)) - z`. Valid whether or not
    /// the image is simply connected.
    pub fn in_image(&self, w: Complex64) -> bool {
        let q = self.q.coeffs();
        let mut coeffs: Vec<Complex64> = q.iter().map(|&c| w * c).collect();
        coeffs[0] += w;
        if coeffs.len() < 2 {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        coeffs[1] -= 1.0;
        let p = ComplexPolynomial::new(coeffs);
        if p.degree() == 0 {
            // w (1 + q) - z degenerated to a constant: Phi(z) = w has no
            // solution unless that constant vanishes identically.
            return p.coeffs()[0].norm() == 0.0;
        }
        match p.roots() {
            Ok(roots) => roots.iter().any(|r| r.norm() <= 1.0 + BOUNDARY_TOL),
            Err(_) => false,
        }
    }

    /// Window just enclosing the image, from boundary samples and the
    /// maximum-modulus principle.
    pub fn image_window(&self) -> Result<Window> {
        let samples = self.boundary(4096)?;
        let max = samples.iter().map(|w| w.norm()).fold(0.0_f64, f64::max);
        let half = (max * 1.05).max(0.35);
        Ok(Window::centered(half))
    }
}

/// Inversion with respect to the unit circle, `z -> 1 / conj(z)`.
pub fn invert_point(z: Complex64) -> Result<Complex64> {
    if z.norm() == 0.0 {
        return Err(CoreError::OriginInversion);
    }
    Ok(1.0 / z.conj())
}

/// Boolean raster of a plane region over a window, with 4-connected
/// component labels. `resolution` counts pixels per axis, so pixels are
/// anisotropic over non-square windows.
#[derive(Debug, Clone)]
pub struct RegionRaster {
    pub window: Window,
    pub resolution: usize,
    /// Row-major; row `iy` sits at increasing imaginary part.
    pub mask: Vec<bool>,
    /// Component ids, dense `1..=n_components`; `0` exactly off the mask.
    pub labels: Vec<u32>,
    pub n_components: u32,
    pub contains_infinity: bool,
}

impl RegionRaster {
    /// Rasterize a membership predicate. Pixel evaluation is parallel and
    /// order-independent; the same predicate probed far outside the window
    /// decides `contains_infinity`.
    pub fn from_membership<F>(window: Window, resolution: usize, member: F) -> Self
    where
        F: Fn(Complex64) -> bool + Sync,
    {
        assert!(resolution >= 2, "raster needs at least 2 pixels per axis");
        let dx = window.width() / resolution as f64;
        let dy = window.height() / resolution as f64;
        let member_ref = &member;
        let mask: Vec<bool> = (0..resolution)
            .into_par_iter()
            .flat_map_iter(|iy| {
                let im = window.im_min + (iy as f64 + 0.5) * dy;
                (0..resolution).map(move |ix| {
                    let re = window.re_min + (ix as f64 + 0.5) * dx;
                    member_ref(Complex64::new(re, im))
                })
            })
            .collect();
        let far = Complex64::new(
            window.re_max + 1e3 * window.width(),
            window.im_max + 1e3 * window.height(),
        );
        let contains_infinity = member(far);
        let (labels, n_components) = label_components(&mask, resolution);
        Self { window, resolution, mask, labels, n_components, contains_infinity }
    }

    pub fn from_mask(window: Window, resolution: usize, mask: Vec<bool>) -> Self {
        assert_eq!(mask.len(), resolution * resolution);
        let (labels, n_components) = label_components(&mask, resolution);
        Self { window, resolution, mask, labels, n_components, contains_infinity: false }
    }

    pub fn dx(&self) -> f64 {
        self.window.width() / self.resolution as f64
    }

    pub fn dy(&self) -> f64 {
        self.window.height() / self.resolution as f64
    }

    pub fn pixel_diag(&self) -> f64 {
        self.dx().hypot(self.dy())
    }

    pub fn pixel_center(&self, ix: usize, iy: usize) -> Complex64 {
        Complex64::new(
            self.window.re_min + (ix as f64 + 0.5) * self.dx(),
            self.window.im_min + (iy as f64 + 0.5) * self.dy(),
        )
    }

    /// Pixel indices of the pixel containing `z`, or `None` off-window.
    pub fn pixel_of(&self, z: Complex64) -> Option<(usize, usize)> {
        if !self.window.contains(z) {
            return None;
        }
        let clamp = |v: f64| (v.max(0.0) as usize).min(self.resolution - 1);
        let ix = clamp((z.re - self.window.re_min) / self.dx());
        let iy = clamp((z.im - self.window.im_min) / self.dy());
        Some((ix, iy))
    }

    pub fn is_inside(&self, z: Complex64) -> bool {
        self.pixel_of(z)
            .map_or(false, |(ix, iy)| self.mask[iy * self.resolution + ix])
    }

    pub fn label_at(&self, z: Complex64) -> Option<u32> {
        self.pixel_of(z).map(|(ix, iy)| self.labels[iy * self.resolution + ix])
    }

    pub fn count_true(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    /// Centers of all mask pixels, as plain points.
    pub fn mask_points(&self) -> Vec<(f64, f64)> {
        self.points_where(|idx| self.mask[idx])
    }

    pub fn component_points(&self, id: u32) -> Vec<(f64, f64)> {
        self.points_where(|idx| self.labels[idx] == id)
    }

    fn points_where<F: Fn(usize) -> bool>(&self, keep: F) -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        for iy in 0..self.resolution {
            for ix in 0..self.resolution {
                if keep(iy * self.resolution + ix) {
                    let c = self.pixel_center(ix, iy);
                    out.push((c.re, c.im));
                }
            }
        }
        out
    }

    /// Fill of the bounded holes: the mask united with every complement
    /// component that does not reach the window border. This realizes the
    /// minimal simply-connected hull of the rastered set, up to the window.
    pub fn simply_connected_hull(&self) -> RegionRaster {
        let res = self.resolution;
        let mut outside = vec![false; res * res];
        let mut queue = VecDeque::new();
        let mut seed = |ix: usize, iy: usize, outside: &mut Vec<bool>, queue: &mut VecDeque<(usize, usize)>| {
            let idx = iy * res + ix;
            if !self.mask[idx] && !outside[idx] {
                outside[idx] = true;
                queue.push_back((ix, iy));
            }
        };
        for ix in 0..res {
            seed(ix, 0, &mut outside, &mut queue);
            seed(ix, res - 1, &mut outside, &mut queue);
        }
        for iy in 0..res {
            seed(0, iy, &mut outside, &mut queue);
            seed(res - 1, iy, &mut outside, &mut queue);
        }
        while let Some((ix, iy)) = queue.pop_front() {
            for (nx, ny) in neighbors4(ix, iy, res) {
                let nidx = ny * res + nx;
                if !self.mask[nidx] && !outside[nidx] {
                    outside[nidx] = true;
                    queue.push_back((nx, ny));
                }
            }
        }
        let mask: Vec<bool> = (0..res * res).map(|i| self.mask[i] || !outside[i]).collect();
        let (labels, n_components) = label_components(&mask, res);
        RegionRaster {
            window: self.window,
            resolution: res,
            mask,
            labels,
            n_components,
            contains_infinity: self.contains_infinity,
        }
    }
}

fn neighbors4(ix: usize, iy: usize, res: usize) -> impl Iterator<Item = (usize, usize)> {
    let mut out = [(0usize, 0usize); 4];
    let mut n = 0;
    if ix > 0 {
        out[n] = (ix - 1, iy);
        n += 1;
    }
    if ix + 1 < res {
        out[n] = (ix + 1, iy);
        n += 1;
    }
    if iy > 0 {
        out[n] = (ix, iy - 1);
        n += 1;
    }
    if iy + 1 < res {
        out[n] = (ix, iy + 1);
        n += 1;
    }
    out.into_iter().take(n)
}

fn label_components(mask: &[bool], res: usize) -> (Vec<u32>, u32) {
    let mut labels = vec![0u32; mask.len()];
    let mut next = 0u32;
    let mut queue = VecDeque::new();
    for iy in 0..res {
        for ix in 0..res {
            let idx = iy * res + ix;
            if mask[idx] && labels[idx] == 0 {
                next += 1;
                labels[idx] = next;
                queue.push_back((ix, iy));
                while let Some((cx, cy)) = queue.pop_front() {
                    for (nx, ny) in neighbors4(cx, cy, res) {
                        let nidx = ny * res + nx;
                        if mask[nidx] && labels[nidx] == 0 {
                            labels[nidx] = next;
                            queue.push_back((nx, ny));
                        }
                    }
                }
            }
        }
    }
    (labels, next)
}

/// Raster of `M_a = { mu : lambda^N + (-mu + a_1) lambda^{N-1} + ... + a_N
/// is Schur stable }`, decided pixelwise by the direct root test. Under
/// this convention `mu0` belongs to `M_a` exactly when `a` lies in
/// `A_N(mu0)`.
pub fn raster_ma(a: &[f64], window: Window, resolution: usize) -> RegionRaster {
    assert!(!a.is_empty());
    RegionRaster::from_membership(window, resolution, |mu| {
        char_poly_linear(mu, a)
            .and_then(|p| p.is_schur_stable())
            .map_or(false, |v| v.stable)
    })
}

/// The same set through the inversion criterion: `mu` is admissible iff
/// `1 / (mu - mu0)` stays outside the disc image (the anchor pixel itself
/// is admissible whenever the map is pole-free). Kept as the independent
/// cross-check of [`raster_ma`].
pub fn raster_ma_lemma1(phi: &PhiMap, window: Window, resolution: usize) -> RegionRaster {
    let mu0 = phi.mu0();
    RegionRaster::from_membership(window, resolution, |mu| {
        let dmu = mu - mu0;
        if dmu.norm() < 1e-300 {
            return phi.pole_free();
        }
        !phi.in_image(1.0 / dmu)
    })
}

/// Raster of the disc image `Phi(closed D)` by pixelwise membership.
pub fn raster_phi_image(phi: &PhiMap, window: Window, resolution: usize) -> RegionRaster {
    RegionRaster::from_membership(window, resolution, |w| phi.in_image(w))
}

/// Whether two equally shaped rasters agree outside a band of `band`
/// pixels around the first mask's transitions. Differing pixels are
/// tolerated only when a mask transition of `a` occurs within their
/// `band`-pixel Chebyshev neighborhood.
pub fn masks_agree_within_band(a: &RegionRaster, b: &RegionRaster, band: usize) -> bool {
    assert_eq!(a.resolution, b.resolution);
    let res = a.resolution;
    let near_boundary = |ix: usize, iy: usize| -> bool {
        let x0 = ix.saturating_sub(band);
        let y0 = iy.saturating_sub(band);
        let x1 = (ix + band).min(res - 1);
        let y1 = (iy + band).min(res - 1);
        let v = a.mask[iy * res + ix];
        for ny in y0..=y1 {
            for nx in x0..=x1 {
                if a.mask[ny * res + nx] != v {
                    return true;
                }
            }
        }
        false
    };
    for iy in 0..res {
        for ix in 0..res {
            let idx = iy * res + ix;
            if a.mask[idx] != b.mask[idx] && !near_boundary(ix, iy) {
                return false;
            }
        }
    }
    true
}

/// Farthest-pair diameter of one labeled component.
#[derive(Debug, Clone)]
pub struct ComponentDiameter {
    pub id: u32,
    pub diameter: f64,
    pub witness: (Complex64, Complex64),
}

/// Total and per-component diameters of a rastered set, each attained by
/// the recorded witness pair of pixel centers.
#[derive(Debug, Clone)]
pub struct DiameterReport {
    pub total_diameter: f64,
    pub total_witness: (Complex64, Complex64),
    pub components: Vec<ComponentDiameter>,
}

impl DiameterReport {
    pub fn component(&self, id: u32) -> Option<&ComponentDiameter> {
        self.components.iter().find(|c| c.id == id)
    }
}

pub fn diameters(raster: &RegionRaster) -> Result<DiameterReport> {
    let all = raster.mask_points();
    if all.is_empty() {
        return Err(CoreError::EmptyRegion);
    }
    let (p, q, total) = farthest_pair(&all).expect("nonempty");
    let mut components = Vec::new();
    for id in 1..=raster.n_components {
        let pts = raster.component_points(id);
        let (cp, cq, d) = farthest_pair(&pts).expect("labeled component is nonempty");
        components.push(ComponentDiameter {
            id,
            diameter: d,
            witness: (Complex64::new(cp.0, cp.1), Complex64::new(cq.0, cq.1)),
        });
    }
    Ok(DiameterReport {
        total_diameter: total,
        total_witness: (Complex64::new(p.0, p.1), Complex64::new(q.0, q.1)),
        components,
    })
}

/// Outcome of the 16/4 diameter-bound verification on one raster.
#[derive(Debug, Clone)]
pub struct DiameterBoundsReport {
    pub d_total: f64,
    /// Diameter of the component containing the anchor multiplier.
    pub d_component: f64,
    pub pass_16: bool,
    pub pass_4: bool,
    pub pixel_diag: f64,
    pub n_components: u32,
}

/// Raster `M_a`, locate the anchor's component, and test the universal
/// diameter bounds: total at most 16 and the anchor component below 4,
/// both up to two pixel diagonals of raster slack.
pub fn verify_diameter_bounds(
    a: &[f64],
    mu0: Complex64,
    window: Window,
    resolution: usize,
) -> Result<DiameterBoundsReport> {
    let raster = raster_ma(a, window, resolution);
    let label = match raster.label_at(mu0) {
        Some(l) if l > 0 => l,
        _ => return Err(CoreError::Mu0NotInRegion { mu0 }),
    };
    let report = diameters(&raster)?;
    let d_component = report.component(label).expect("anchor component").diameter;
    let slack = 2.0 * raster.pixel_diag();
    Ok(DiameterBoundsReport {
        d_total: report.total_diameter,
        d_component,
        pass_16: report.total_diameter <= 16.0 + slack,
        pass_4: d_component < 4.0 + slack,
        pixel_diag: raster.pixel_diag(),
        n_components: raster.n_components,
    })
}

/// Analytic membership in the Schur-stability triangle of monic real
/// quadratics: `A_2(0) = { (a1, a2) : a2 + 1 > |a1|, a2 < 1 }`.
pub fn check_a2_membership(a1: f64, a2: f64) -> bool {
    a2 + 1.0 > a1.abs() && a2 < 1.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_map_basics() {
        let phi = PhiMap::new(&[0.0, 0.0], c(0.0, 0.0)).unwrap();
        assert!(phi.pole_free());
        let b = phi.boundary(16).unwrap();
        assert_relative_eq!(b[0].re, 1.0, epsilon = 1e-14);
        assert_relative_eq!(b[4].im, 1.0, epsilon = 1e-14);
        assert_relative_eq!(b[8].re, -1.0, epsilon = 1e-14);
        assert!(phi.in_image(c(0.0, 0.0)));
        assert!(phi.in_image(c(0.7, 0.3)));
        assert!(!phi.in_image(c(2.0, 0.0)));
    }

    #[test]
    fn boundary_first_sample_is_one_over_one_plus_q1() {
        let phi = PhiMap::new(&[0.7, -0.2, 0.1], c(0.3, 0.0)).unwrap();
        let b = phi.boundary(64).unwrap();
        let expect = c(1.0, 0.0) / (c(1.0, 0.0) + phi.q().eval(c(1.0, 0.0)));
        assert_relative_eq!(b[0].re, expect.re, epsilon = 1e-14);
        assert_relative_eq!(b[0].im, expect.im, epsilon = 1e-14);
    }

    #[test]
    fn fig1_map_pole_free_and_contains_small_disc() {
        let eps = 0.1;
        let phi = PhiMap::new(&[2.0 * (1.0 - eps), 1.0 - eps], c(0.0, 0.0)).unwrap();
        assert!(phi.pole_free());
        for k in 0..8 {
            let th = 2.0 * std::f64::consts::PI * k as f64 / 8.0;
            assert!(phi.in_image(Complex64::from_polar(1.0 / 16.0, th)));
        }
    }

    #[test]
    fn example_b_pole_flag_depends_on_anchor_sign() {
        let a = [-7.0 / 6.0, 1.5, 0.0, -1.0 / 3.0];
        let plus = PhiMap::new(&a, c(23.0 / 24.0, 0.0)).unwrap();
        assert!(plus.pole_free());
        let minus = PhiMap::new(&a, c(-23.0 / 24.0, 0.0)).unwrap();
        assert!(!minus.pole_free());
        assert!(minus.pole_check().is_err());
    }

    #[test]
    fn inversion_examples() {
        assert_relative_eq!(invert_point(c(2.0, 0.0)).unwrap().re, 0.5);
        let i = invert_point(c(0.0, 1.0)).unwrap();
        assert_relative_eq!(i.im, 1.0, epsilon = 1e-15);
        let z = invert_point(c(1.0, 1.0)).unwrap();
        assert_relative_eq!(z.re, 0.5, epsilon = 1e-15);
        assert_relative_eq!(z.im, 0.5, epsilon = 1e-15);
        assert_eq!(invert_point(c(0.0, 0.0)).unwrap_err(), CoreError::OriginInversion);
    }

    #[test]
    fn inversion_is_involution() {
        let z = c(0.3, -1.7);
        let back = invert_point(invert_point(z).unwrap()).unwrap();
        assert!((back - z).norm() < 1e-12 * z.norm());
    }

    #[test]
    fn unit_disc_raster_from_zero_coeffs() {
        // a = (0,0): chi = lambda^2 - mu lambda, stable iff |mu| < 1
        let r = raster_ma(&[0.0, 0.0], Window::centered(2.0), 128);
        assert_eq!(r.n_components, 1);
        assert!(r.is_inside(c(0.0, 0.0)));
        assert!(r.is_inside(c(0.9, 0.0)));
        assert!(!r.is_inside(c(1.1, 0.0)));
        let d = diameters(&r).unwrap();
        assert!((d.total_diameter - 2.0).abs() <= 2.0 * r.pixel_diag());
        assert!(!r.contains_infinity);
    }

    #[test]
    fn extremal_raster_contains_zero_and_mu1() {
        let eps = 0.1;
        let a = [2.0 * (1.0 - eps), 1.0 - eps];
        let r = raster_ma(&a, Window::centered(5.0), 1024);
        assert!(r.is_inside(c(0.0, 0.0)));
        assert!(r.is_inside(c(4.0 - 3.0 * eps, 0.0)));
    }

    #[test]
    fn lemma1_cross_check_band_agreement() {
        let eps = 0.1;
        let a = [2.0 * (1.0 - eps), 1.0 - eps];
        let phi = PhiMap::new(&a, c(0.0, 0.0)).unwrap();
        let win = Window::centered(5.0);
        let direct = raster_ma(&a, win, 256);
        let inv = raster_ma_lemma1(&phi, win, 256);
        assert!(masks_agree_within_band(&direct, &inv, 2));
    }

    #[test]
    fn diameters_of_two_point_raster() {
        let win = Window::new(-1.0, 4.0, -1.0, 5.0);
        let res = 64;
        let mut mask = vec![false; res * res];
        let tmp = RegionRaster::from_mask(win, res, mask.clone());
        let (ix0, iy0) = tmp.pixel_of(c(0.0, 0.0)).unwrap();
        let (ix1, iy1) = tmp.pixel_of(c(3.0, 4.0)).unwrap();
        mask[iy0 * res + ix0] = true;
        mask[iy1 * res + ix1] = true;
        let r = RegionRaster::from_mask(win, res, mask);
        assert_eq!(r.n_components, 2);
        let d = diameters(&r).unwrap();
        assert!((d.total_diameter - 5.0).abs() <= r.pixel_diag());
    }

    #[test]
    fn empty_region_errors() {
        let r = RegionRaster::from_mask(Window::centered(1.0), 8, vec![false; 64]);
        assert_eq!(diameters(&r).unwrap_err(), CoreError::EmptyRegion);
    }

    #[test]
    fn a2_membership_matches_examples() {
        assert!(check_a2_membership(0.0, 0.0));
        assert!(check_a2_membership(2.0 * 0.9, 0.9));
        assert!(!check_a2_membership(2.0, 1.0));
    }

    #[test]
    fn verify_bounds_on_unit_disc_case() {
        let rep = verify_diameter_bounds(&[0.0, 0.0], c(0.0, 0.0), Window::centered(2.0), 256)
            .unwrap();
        assert!(rep.pass_16);
        assert!(rep.pass_4);
        assert!((rep.d_total - 2.0).abs() <= 2.0 * rep.pixel_diag);
    }

    #[test]
    fn mu0_outside_region_is_flagged() {
        let err = verify_diameter_bounds(&[0.0, 0.0], c(1.5, 0.0), Window::centered(2.0), 128)
            .unwrap_err();
        assert!(matches!(err, CoreError::Mu0NotInRegion { .. }));
    }

    #[test]
    fn hull_fills_a_ring() {
        // annulus 0.5 < |z| < 1: the hull fills the center hole
        let win = Window::centered(1.5);
        let r = RegionRaster::from_membership(win, 128, |z| {
            let m = z.norm();
            m > 0.5 && m < 1.0
        });
        assert!(!r.is_inside(c(0.0, 0.0)));
        let hull = r.simply_connected_hull();
        assert!(hull.is_inside(c(0.0, 0.0)));
        assert_eq!(hull.n_components, 1);
    }
}
