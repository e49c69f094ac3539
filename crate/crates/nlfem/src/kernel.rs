//! Compactly supported radial kernels `R` on `[0, 1]` and their iterated tails.
//!
//! Everything is expressed in the scaled variable `s = |x - y|^2 / (4 δ^2)`;
//! the kernel and both tails vanish for `s >= 1`.

use std::f64::consts::PI;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::Point;

/// Dense polynomial in the monomial basis, `p(s) = Σ c_k s^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    /// An empty coefficient list is read as the zero polynomial.
    pub fn new(coeffs: Vec<f64>) -> Self {
        if coeffs.is_empty() {
            Self { coeffs: vec![0.0] }
        } else {
            Self { coeffs }
        }
    }

    pub fn zero() -> Self {
        Self::new(vec![0.0])
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Index of the last nonzero coefficient, 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|&c| c != 0.0).unwrap_or(0)
    }

    pub fn eval(&self, s: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * s + c)
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() == 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    /// Exact `∫_0^1 p(s) ds`.
    pub fn integral_unit(&self) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| c / (k + 1) as f64)
            .sum()
    }
}

/// Returns `q` with `q(r) = ∫_r^1 p(s) ds`.
pub fn antiderivative_tail(p: &Polynomial) -> Polynomial {
    let mut q = Vec::with_capacity(p.coeffs.len() + 1);
    q.push(p.integral_unit());
    q.extend(
        p.coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| -c / (k + 1) as f64),
    );
    Polynomial::new(q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    R,
    Rbar,
    Rbarbar,
}

#[derive(Clone, Debug)]
pub struct KernelFamily {
    delta: f64,
    r_poly: Polynomial,
    rbar_poly: Polynomial,
    rbarbar_poly: Polynomial,
    alpha2: f64,
    c_delta: f64,
}

impl KernelFamily {
    pub fn new(r_coeffs: &[f64], delta: f64) -> Result<Self> {
        if !(delta > 0.0) || !delta.is_finite() {
            return Err(Error::InvalidDelta(delta));
        }
        let r_poly = Polynomial::new(r_coeffs.to_vec());
        let rbar_poly = antiderivative_tail(&r_poly);
        let rbarbar_poly = antiderivative_tail(&rbar_poly);
        if rbarbar_poly.coeffs().len() > crate::exact_integrate::MAX_MOMENT {
            return Err(Error::UnsupportedOrder(r_poly.degree()));
        }
        // ∫_0^1 rbar(r^2) r dr = ½ ∫_0^1 rbar(u) du
        let moment = 0.5 * rbar_poly.integral_unit();
        if !(moment > 0.0) {
            return Err(Error::NonNormalizable(moment));
        }
        let alpha2 = 1.0 / (2.0 * PI * moment);
        Ok(Self {
            delta,
            r_poly,
            rbar_poly,
            rbarbar_poly,
            alpha2,
            c_delta: alpha2 / (delta * delta),
        })
    }

    /// Same profile, different horizon.
    pub fn with_delta(&self, delta: f64) -> Result<Self> {
        Self::new(self.r_poly.coeffs(), delta)
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// Interaction radius `2δ`.
    pub fn support_radius(&self) -> f64 {
        2.0 * self.delta
    }

    pub fn alpha2(&self) -> f64 {
        self.alpha2
    }

    pub fn c_delta(&self) -> f64 {
        self.c_delta
    }

    pub fn poly(&self, tier: Tier) -> &Polynomial {
        match tier {
            Tier::R => &self.r_poly,
            Tier::Rbar => &self.rbar_poly,
            Tier::Rbarbar => &self.rbarbar_poly,
        }
    }

    /// Unscaled profile value at `s`, zero on `s >= 1`.
    pub fn profile(&self, tier: Tier, s: f64) -> f64 {
        if s >= 1.0 {
            0.0
        } else {
            self.poly(tier).eval(s)
        }
    }

    /// `C_δ · poly(|x - y|^2 / 4δ^2)`.
    pub fn eval_scaled(&self, tier: Tier, x: Point, y: Point) -> f64 {
        let s = (x - y).norm2() / (4.0 * self.delta * self.delta);
        if s >= 1.0 {
            return 0.0;
        }
        self.c_delta * self.poly(tier).eval(s)
    }

    /// `2π α₂ ∫_0^1 rbar(r^2) r dr`, exactly 1 up to rounding.
    pub fn normalization(&self) -> f64 {
        2.0 * PI * self.alpha2 * 0.5 * self.rbar_poly.integral_unit()
    }
}

/// Kernel profiles accepted on the command line.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelPreset(pub Vec<f64>);

impl FromStr for KernelPreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "const" => Ok(Self(vec![1.0])),
            "quadratic" => Ok(Self(vec![1.0, -1.0])),
            _ => {
                let list = s
                    .strip_prefix("poly:")
                    .ok_or_else(|| Error::UnknownKernel(s.to_string()))?;
                list.split(',')
                    .map(|c| c.trim().parse::<f64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map(Self)
                    .map_err(|_| Error::UnknownKernel(s.to_string()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tail_of_constant() {
        let q = antiderivative_tail(&Polynomial::new(vec![1.0]));
        assert_eq!(q.coeffs(), &[1.0, -1.0]);
    }

    #[test]
    fn tail_of_linear() {
        let q = antiderivative_tail(&Polynomial::new(vec![0.0, 1.0]));
        assert_eq!(q.coeffs(), &[0.5, 0.0, -0.5]);
        assert_eq!(q.derivative().coeffs(), &[0.0, -1.0]);
    }

    #[test]
    fn tail_of_zero() {
        let q = antiderivative_tail(&Polynomial::zero());
        assert!(q.coeffs().iter().all(|&c| c == 0.0));
        assert_eq!(q.degree(), 0);
    }

    #[test]
    fn degree_ignores_trailing_zeros() {
        assert_eq!(Polynomial::new(vec![1.0, 2.0, 0.0, 0.0]).degree(), 1);
    }

    #[test]
    fn constant_kernel_family() {
        let kf = KernelFamily::new(&[1.0], 0.1).unwrap();
        assert_eq!(kf.poly(Tier::Rbar).coeffs(), &[1.0, -1.0]);
        // (1 - r)^2 / 2
        assert_eq!(kf.poly(Tier::Rbarbar).coeffs(), &[0.5, -1.0, 0.5]);
        assert_relative_eq!(kf.alpha2(), 2.0 / PI, max_relative = 1e-15);
        assert_relative_eq!(kf.c_delta(), 200.0 / PI, max_relative = 1e-14);
    }

    #[test]
    fn quadratic_kernel_family() {
        let kf = KernelFamily::new(&[1.0, -1.0], 0.5).unwrap();
        let rbar = kf.poly(Tier::Rbar);
        for r in [0.0, 0.3, 0.9] {
            assert_relative_eq!(rbar.eval(r), (1.0 - r) * (1.0 - r) / 2.0, epsilon = 1e-15);
        }
        assert_relative_eq!(kf.alpha2(), 6.0 / PI, max_relative = 1e-15);
        assert_relative_eq!(kf.c_delta(), 24.0 / PI, max_relative = 1e-14);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(KernelFamily::new(&[0.0], 0.1), Err(Error::NonNormalizable(_))));
        assert!(matches!(KernelFamily::new(&[1.0], 0.0), Err(Error::InvalidDelta(_))));
        assert!(matches!(KernelFamily::new(&[1.0], -1.0), Err(Error::InvalidDelta(_))));
        assert!(matches!(KernelFamily::new(&[-1.0], 1.0), Err(Error::NonNormalizable(_))));
    }

    #[test]
    fn scaled_evaluation() {
        let kf = KernelFamily::new(&[1.0], 0.1).unwrap();
        let o = Point::new(0.0, 0.0);
        assert_eq!(kf.eval_scaled(Tier::R, o, Point::new(0.3, 0.0)), 0.0);
        assert_relative_eq!(kf.eval_scaled(Tier::R, o, o), 200.0 / PI, max_relative = 1e-14);
        let y = Point::new(0.2 / 2f64.sqrt(), 0.0);
        assert_relative_eq!(kf.eval_scaled(Tier::Rbar, o, y), 100.0 / PI, max_relative = 1e-12);
        // exactly on the support circle
        assert_eq!(kf.eval_scaled(Tier::Rbarbar, o, Point::new(0.0, 0.2)), 0.0);
    }

    #[test]
    fn presets_parse() {
        assert_eq!("const".parse::<KernelPreset>().unwrap().0, vec![1.0]);
        assert_eq!("quadratic".parse::<KernelPreset>().unwrap().0, vec![1.0, -1.0]);
        assert_eq!(
            "poly:1,0,-0.5".parse::<KernelPreset>().unwrap().0,
            vec![1.0, 0.0, -0.5]
        );
        assert!("gauss".parse::<KernelPreset>().is_err());
        assert!("poly:1,x".parse::<KernelPreset>().is_err());
    }

    #[test]
    fn tiers_differentiate_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let kf = KernelFamily::new(&[1.0, 0.5, -2.0, 0.75], 0.3).unwrap();
        let d1 = kf.poly(Tier::Rbar).derivative();
        let d2 = kf.poly(Tier::Rbarbar).derivative();
        for _ in 0..200 {
            let r: f64 = rng.gen_range(0.0..1.0);
            let rv = kf.poly(Tier::R).eval(r);
            assert!((d1.eval(r) + rv).abs() <= 1e-12 * (1.0 + rv.abs()));
            let rb = kf.poly(Tier::Rbar).eval(r);
            assert!((d2.eval(r) + rb).abs() <= 1e-12 * (1.0 + rb.abs()));
        }
        assert!(kf.poly(Tier::Rbar).eval(1.0).abs() < 1e-15);
        assert!(kf.poly(Tier::Rbarbar).eval(1.0).abs() < 1e-15);
    }

    #[test]
    fn gradient_of_rbar_is_scaled_r() {
        let kf = KernelFamily::new(&[1.0, -1.0], 0.2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let h = 1e-6 * kf.delta();
        for _ in 0..100 {
            let x = Point::new(rng.gen_range(-0.1..0.1), rng.gen_range(-0.1..0.1));
            let y = Point::new(rng.gen_range(-0.1..0.1), rng.gen_range(-0.1..0.1));
            if (x - y).norm() < 1e-3 {
                continue;
            }
            let ex = Point::new(h, 0.0);
            let ey = Point::new(0.0, h);
            let gx = (kf.eval_scaled(Tier::Rbar, x + ex, y) - kf.eval_scaled(Tier::Rbar, x - ex, y)) / (2.0 * h);
            let gy = (kf.eval_scaled(Tier::Rbar, x + ey, y) - kf.eval_scaled(Tier::Rbar, x - ey, y)) / (2.0 * h);
            let scale = -kf.eval_scaled(Tier::R, x, y) / (2.0 * kf.delta() * kf.delta());
            let want = scale * (x - y);
            let err = ((gx - want.x).powi(2) + (gy - want.y).powi(2)).sqrt();
            assert!(err <= 1e-4 * want.norm(), "{err} vs {}", want.norm());
        }
    }

    proptest! {
        #[test]
        fn normalization_holds(c0 in 0.5f64..2.0, c1 in -0.5f64..0.5, c2 in -0.5f64..0.5, delta in 0.01f64..3.0) {
            let kf = KernelFamily::new(&[c0, c1, c2], delta).unwrap();
            prop_assert!((kf.normalization() - 1.0).abs() <= 1e-12);
        }

        #[test]
        fn support_is_exact(r in 1.0f64..10.0, theta in 0.0f64..6.3) {
            let kf = KernelFamily::new(&[1.0, 2.0], 0.25).unwrap();
            let y = Point::new(r * 0.5 * theta.cos(), r * 0.5 * theta.sin());
            let x = Point::new(0.0, 0.0);
            if (x - y).norm() >= 0.5 {
                for tier in [Tier::R, Tier::Rbar, Tier::Rbarbar] {
                    prop_assert_eq!(kf.eval_scaled(tier, x, y), 0.0);
                }
            }
        }
    }
}
