//! Closed polygon value types, validation, projections, reflections, and the
//! edgewise metric used by the isometry audit.
//!
//! Polygons are stored as edge vectors, never vertices; vertex lists are
//! derived on export. Zero-length edges are legal data and validation never
//! rejects them.

use std::fmt;

use thiserror::Error;

/// Default closure tolerance, sized for ~100x accumulated rounding in
/// double-precision pipelines at n = 7.
pub const DEFAULT_TOL_CLOSURE: f64 = 1e-9;
/// Default total-length tolerance.
pub const DEFAULT_TOL_LENGTH: f64 = 1e-9;

/// A violated polygon invariant together with its magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolygonViolation {
    /// The edge vectors do not sum to zero; `defect` is the norm of the sum.
    Closure { defect: f64 },
    /// The total edge length misses the budget; `defect` is the gap.
    TotalLength { defect: f64 },
}

impl fmt::Display for PolygonViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolygonViolation::Closure { defect } => write!(f, "closure defect {defect:.3e}"),
            PolygonViolation::TotalLength { defect } => {
                write!(f, "total-length defect {defect:.3e}")
            }
        }
    }
}

/// Two edge lists of different arity were combined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("shape mismatch: {left} edges vs {right}")]
pub struct ShapeMismatch {
    pub left: usize,
    pub right: usize,
}

/// Reflection axes for planar polygons.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis2 {
    NegateX,
    NegateY,
}

/// Reflection planes (and one rotation) for space polygons. `NegateYz`
/// flips both transverse coordinates and has determinant +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Plane3 {
    NegateY,
    NegateZ,
    NegateYz,
}

/// Closed n-gon in the plane with total length budget `2 * lambda`,
/// stored as edge displacement vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon2 {
    pub edges: Vec<[f64; 2]>,
    pub lambda: f64,
}

/// Closed n-gon in 3-space with total length fixed to 2.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon3 {
    pub edges: Vec<[f64; 3]>,
}

/// The projection of a space polygon onto the x-axis: cumulative
/// x-coordinates of the vertices walked from the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct AxisTrack {
    pub partial_sums: Vec<f64>,
}

impl Polygon2 {
    pub fn new(edges: Vec<[f64; 2]>, lambda: f64) -> Self {
        Polygon2 { edges, lambda }
    }

    pub fn n(&self) -> usize {
        self.edges.len()
    }

    pub fn total_length(&self) -> f64 {
        self.edges.iter().map(|e| e[0].hypot(e[1])).sum()
    }

    pub fn closure_defect(&self) -> f64 {
        let (sx, sy) = self
            .edges
            .iter()
            .fold((0.0, 0.0), |(sx, sy), e| (sx + e[0], sy + e[1]));
        sx.hypot(sy)
    }

    /// Checks closure and total length against the given tolerances and
    /// returns each violated invariant with its magnitude.
    pub fn violations_with(&self, tol_closure: f64, tol_length: f64) -> Vec<PolygonViolation> {
        let mut out = Vec::new();
        let closure = self.closure_defect();
        if closure >= tol_closure {
            out.push(PolygonViolation::Closure { defect: closure });
        }
        let length = (self.total_length() - 2.0 * self.lambda).abs();
        if length >= tol_length {
            out.push(PolygonViolation::TotalLength { defect: length });
        }
        out
    }

    pub fn violations(&self) -> Vec<PolygonViolation> {
        self.violations_with(DEFAULT_TOL_CLOSURE, DEFAULT_TOL_LENGTH)
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn reflect(&self, axis: Axis2) -> Polygon2 {
        let edges = self
            .edges
            .iter()
            .map(|e| match axis {
                Axis2::NegateX => [-e[0], e[1]],
                Axis2::NegateY => [e[0], -e[1]],
            })
            .collect();
        Polygon2::new(edges, self.lambda)
    }

    /// Vertex positions walked from the origin; `n + 1` points, the last of
    /// which returns to the origin up to the closure defect.
    pub fn vertices(&self) -> Vec<[f64; 2]> {
        let mut out = Vec::with_capacity(self.n() + 1);
        let (mut x, mut y) = (0.0, 0.0);
        out.push([x, y]);
        for e in &self.edges {
            x += e[0];
            y += e[1];
            out.push([x, y]);
        }
        out
    }
}

impl Polygon3 {
    pub fn new(edges: Vec<[f64; 3]>) -> Self {
        Polygon3 { edges }
    }

    pub fn n(&self) -> usize {
        self.edges.len()
    }

    pub fn total_length(&self) -> f64 {
        self.edges
            .iter()
            .map(|e| (e[0] * e[0] + e[1] * e[1] + e[2] * e[2]).sqrt())
            .sum()
    }

    pub fn closure_defect(&self) -> f64 {
        let (sx, sy, sz) = self.edges.iter().fold((0.0, 0.0, 0.0), |(sx, sy, sz), e| {
            (sx + e[0], sy + e[1], sz + e[2])
        });
        (sx * sx + sy * sy + sz * sz).sqrt()
    }

    pub fn violations_with(&self, tol_closure: f64, tol_length: f64) -> Vec<PolygonViolation> {
        let mut out = Vec::new();
        let closure = self.closure_defect();
        if closure >= tol_closure {
            out.push(PolygonViolation::Closure { defect: closure });
        }
        let length = (self.total_length() - 2.0).abs();
        if length >= tol_length {
            out.push(PolygonViolation::TotalLength { defect: length });
        }
        out
    }

    pub fn violations(&self) -> Vec<PolygonViolation> {
        self.violations_with(DEFAULT_TOL_CLOSURE, DEFAULT_TOL_LENGTH)
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    /// Euclidean projection onto the xy-plane as a raw edge list. The result
    /// is closed but its total length is whatever the projection gives; it is
    /// not renormalized.
    pub fn project_xy(&self) -> Vec<[f64; 2]> {
        self.edges.iter().map(|e| [e[0], e[1]]).collect()
    }

    /// Euclidean projection onto the xz-plane as a raw edge list.
    pub fn project_xz(&self) -> Vec<[f64; 2]> {
        self.edges.iter().map(|e| [e[0], e[2]]).collect()
    }

    /// Projection onto the x-axis: the cumulative x-coordinates of the
    /// vertices, starting from the origin.
    pub fn project_x(&self) -> AxisTrack {
        let mut partial_sums = Vec::with_capacity(self.n());
        let mut acc = 0.0;
        for e in &self.edges {
            acc += e[0];
            partial_sums.push(acc);
        }
        AxisTrack { partial_sums }
    }

    pub fn reflect(&self, plane: Plane3) -> Polygon3 {
        let edges = self
            .edges
            .iter()
            .map(|e| match plane {
                Plane3::NegateY => [e[0], -e[1], e[2]],
                Plane3::NegateZ => [e[0], e[1], -e[2]],
                Plane3::NegateYz => [e[0], -e[1], -e[2]],
            })
            .collect();
        Polygon3::new(edges)
    }

    pub fn vertices(&self) -> Vec<[f64; 3]> {
        let mut out = Vec::with_capacity(self.n() + 1);
        let (mut x, mut y, mut z) = (0.0, 0.0, 0.0);
        out.push([x, y, z]);
        for e in &self.edges {
            x += e[0];
            y += e[1];
            z += e[2];
            out.push([x, y, z]);
        }
        out
    }
}

impl AxisTrack {
    /// Sup distance over vertices between two tracks.
    pub fn sup_distance(&self, other: &AxisTrack) -> Result<f64, ShapeMismatch> {
        if self.partial_sums.len() != other.partial_sums.len() {
            return Err(ShapeMismatch {
                left: self.partial_sums.len(),
                right: other.partial_sums.len(),
            });
        }
        Ok(self
            .partial_sums
            .iter()
            .zip(other.partial_sums.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }
}

/// Root-sum-square distance over edge-vector differences.
pub fn distance2(p: &Polygon2, q: &Polygon2) -> Result<f64, ShapeMismatch> {
    if p.n() != q.n() {
        return Err(ShapeMismatch { left: p.n(), right: q.n() });
    }
    let sum: f64 = p
        .edges
        .iter()
        .zip(q.edges.iter())
        .map(|(a, b)| {
            let (dx, dy) = (a[0] - b[0], a[1] - b[1]);
            dx * dx + dy * dy
        })
        .sum();
    Ok(sum.sqrt())
}

/// Root-sum-square distance over edge-vector differences.
pub fn distance3(p: &Polygon3, q: &Polygon3) -> Result<f64, ShapeMismatch> {
    if p.n() != q.n() {
        return Err(ShapeMismatch { left: p.n(), right: q.n() });
    }
    let sum: f64 = p
        .edges
        .iter()
        .zip(q.edges.iter())
        .map(|(a, b)| {
            let (dx, dy, dz) = (a[0] - b[0], a[1] - b[1], a[2] - b[2]);
            dx * dx + dy * dy + dz * dz
        })
        .sum();
    Ok(sum.sqrt())
}

/// Total length of a raw planar edge list.
pub fn polyline_length2(edges: &[[f64; 2]]) -> f64 {
    edges.iter().map(|e| e[0].hypot(e[1])).sum()
}
