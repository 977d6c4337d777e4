//! Oriented straight segments and polyline beam paths.

use serde::Serialize;

use crate::constants::ENDPOINT_TOLERANCE;
use crate::error::{Error, Result};
use crate::vector::Vec3;

/// An oriented straight piece of waveguide. Its direction is the direction
/// of propagation of the wave along it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Segment {
    start: Vec3,
    end: Vec3,
}

impl Segment {
    pub fn new(start: Vec3, end: Vec3) -> Result<Self> {
        if (end - start).norm() > 0.0 {
            Ok(Self { start, end })
        } else {
            Err(Error::ZeroLengthSegment)
        }
    }

    pub fn start(&self) -> Vec3 {
        self.start
    }

    pub fn end(&self) -> Vec3 {
        self.end
    }

    /// Displacement vector ΔL from start to end.
    pub fn delta(&self) -> Vec3 {
        self.end - self.start
    }

    pub fn length(&self) -> f64 {
        self.delta().norm()
    }

    pub fn direction(&self) -> Vec3 {
        self.delta() / self.length()
    }

    pub fn midpoint(&self) -> Vec3 {
        self.start.lerp(self.end, 0.5)
    }

    pub fn point_at(&self, t: f64) -> Vec3 {
        self.start.lerp(self.end, t)
    }

    pub fn reversed(&self) -> Segment {
        Segment {
            start: self.end,
            end: self.start,
        }
    }
}

/// An oriented polyline through at least two vertices.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BeamPath {
    vertices: Vec<Vec3>,
}

impl BeamPath {
    /// Builds a path, rejecting fewer than two vertices and consecutive
    /// duplicates.
    pub fn new(vertices: Vec<Vec3>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::TooFewVertices(vertices.len()));
        }
        if let Some(i) = vertices.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex(i + 1));
        }
        Ok(Self { vertices })
    }

    /// Closed polygon through `corners`; the first corner is appended again
    /// at the end.
    pub fn polygon(corners: &[Vec3]) -> Result<Self> {
        let mut vertices = corners.to_vec();
        if let Some(&first) = corners.first() {
            vertices.push(first);
        }
        Self::new(vertices)
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn start(&self) -> Vec3 {
        self.vertices[0]
    }

    pub fn end(&self) -> Vec3 {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn segment_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn segments(&self) -> impl ExactSizeIterator<Item = Segment> + '_ {
        self.vertices.windows(2).map(|w| Segment {
            start: w[0],
            end: w[1],
        })
    }

    pub fn length(&self) -> f64 {
        self.segments().map(|s| s.length()).sum()
    }

    /// True when the first and last vertex coincide within 1e-12 m.
    pub fn is_closed(&self) -> bool {
        self.start().distance(self.end()) <= ENDPOINT_TOLERANCE
    }

    /// End minus start.
    pub fn chord(&self) -> Vec3 {
        self.end() - self.start()
    }

    /// The same vertices traversed in the opposite direction.
    pub fn reversed(&self) -> BeamPath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        BeamPath { vertices }
    }

    /// This path followed by `next`. The end of `self` and the start of
    /// `next` must coincide within tolerance; the shared vertex is kept once.
    pub fn concat(&self, next: &BeamPath) -> Result<BeamPath> {
        if self.end().distance(next.start()) > ENDPOINT_TOLERANCE {
            return Err(Error::InvalidConfig(format!(
                "cannot join path ending at {} to path starting at {}",
                self.end(),
                next.start()
            )));
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&next.vertices[1..]);
        BeamPath::new(vertices)
    }

    /// Inserts a vertex at parameter `t` of segment `index`.
    pub fn split_segment(&self, index: usize, t: f64) -> Result<BeamPath> {
        let len = self.segment_count();
        if index >= len {
            return Err(Error::SegmentIndex { index, len });
        }
        if !(t > 0.0 && t < 1.0) {
            return Err(Error::SplitParameter(t));
        }
        let point = self.vertices[index].lerp(self.vertices[index + 1], t);
        let mut vertices = self.vertices.clone();
        vertices.insert(index + 1, point);
        BeamPath::new(vertices)
    }

    /// Every vertex displaced by `offset`.
    pub fn translated(&self, offset: Vec3) -> BeamPath {
        BeamPath {
            vertices: self.vertices.iter().map(|&v| v + offset).collect(),
        }
    }
}
