//! Planar array geometry, sub-array partition, and steering vectors.
//!
//! Angles are degrees at every public interface and are converted to
//! radians only inside the trigonometric evaluation. The coordinate origin
//! is the phase reference point; scenario builders center the full array
//! on it.

use alloc::{format, vec::Vec};
use core::ops::Range;

use ndarray::Array1;
// Inherent f64 methods shadow these under std; the trait is required for no_std.
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result, C64};

/// Per-element gain pattern as a function of the arrival angle (degrees).
#[derive(Debug, Clone, Copy)]
pub enum ElementPattern {
    /// Unit gain in every direction.
    Omni,
    /// User-supplied gain function of the angle in degrees.
    Custom(fn(f64) -> f64),
}

impl PartialEq for ElementPattern {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ElementPattern::Omni, ElementPattern::Omni) => true,
            (ElementPattern::Custom(a), ElementPattern::Custom(b)) => core::ptr::fn_addr_eq(*a, *b),
            _ => false,
        }
    }
}

impl ElementPattern {
    pub fn gain(&self, theta_deg: f64) -> f64 {
        match self {
            ElementPattern::Omni => 1.0,
            ElementPattern::Custom(f) => f(theta_deg),
        }
    }
}

/// One antenna element: planar position in meters plus its gain pattern.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Element {
    pub x: f64,
    pub y: f64,
    pub pattern: ElementPattern,
}

impl Element {
    pub fn omni(x: f64, y: f64) -> Self {
        Element {
            x,
            y,
            pattern: ElementPattern::Omni,
        }
    }
}

/// Full array description: wavelength, element list, and the contiguous
/// partition of the elements into sub-arrays.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrayGeometry {
    wavelength: f64,
    elements: Vec<Element>,
    partition: Vec<usize>,
}

impl ArrayGeometry {
    /// Builds a geometry from explicit elements and sub-array sizes.
    ///
    /// The sizes must all be at least 1 and sum to the element count; the
    /// sub-arrays are the contiguous index ranges in element order.
    pub fn new(wavelength: f64, elements: Vec<Element>, partition: Vec<usize>) -> Result<Self> {
        if !(wavelength.is_finite() && wavelength > 0.0) {
            return Err(Error::invalid("wavelength must be positive and finite"));
        }
        if elements.is_empty() {
            return Err(Error::invalid("geometry needs at least one element"));
        }
        if partition.is_empty() {
            return Err(Error::invalid("partition needs at least one sub-array"));
        }
        if partition.iter().any(|&m| m == 0) {
            return Err(Error::invalid("every sub-array must have at least one element"));
        }
        let total: usize = partition.iter().sum();
        if total != elements.len() {
            return Err(Error::invalid(format!(
                "partition covers {total} elements but the array has {}",
                elements.len()
            )));
        }
        if elements.iter().any(|e| !(e.x.is_finite() && e.y.is_finite())) {
            return Err(Error::invalid("element positions must be finite"));
        }
        Ok(ArrayGeometry {
            wavelength,
            elements,
            partition,
        })
    }

    /// Uniform linear array on the x-axis, centered on the origin, with
    /// omnidirectional elements and the given inter-element spacing in
    /// wavelengths.
    pub fn centered_ula(
        wavelength: f64,
        count: usize,
        spacing_wavelengths: f64,
        partition: Vec<usize>,
    ) -> Result<Self> {
        if count == 0 {
            return Err(Error::invalid("ULA needs at least one element"));
        }
        let d = spacing_wavelengths * wavelength;
        let mid = 0.5 * (count as f64 - 1.0);
        let elements = (0..count)
            .map(|i| Element::omni((i as f64 - mid) * d, 0.0))
            .collect();
        ArrayGeometry::new(wavelength, elements, partition)
    }

    pub fn wavelength(&self) -> f64 {
        self.wavelength
    }

    pub fn num_elements(&self) -> usize {
        self.elements.len()
    }

    pub fn num_subarrays(&self) -> usize {
        self.partition.len()
    }

    pub fn subarray_sizes(&self) -> &[usize] {
        &self.partition
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// Element index range of sub-array `l`.
    pub fn subarray_range(&self, l: usize) -> Result<Range<usize>> {
        if l >= self.partition.len() {
            return Err(Error::invalid(format!(
                "sub-array index {l} out of range (L = {})",
                self.partition.len()
            )));
        }
        let start: usize = self.partition[..l].iter().sum();
        Ok(start..start + self.partition[l])
    }

    /// Steering vector of sub-array `l` toward `theta_deg`.
    ///
    /// Entry `i` is `eta_i(theta) * exp(j * 2pi/lambda * (x_i sin(theta) + y_i cos(theta)))`.
    pub fn steering_vector(&self, l: usize, theta_deg: f64) -> Result<Array1<C64>> {
        if !theta_deg.is_finite() {
            return Err(Error::invalid("steering angle must be finite"));
        }
        let range = self.subarray_range(l)?;
        Ok(self.steering_for(range, theta_deg))
    }

    /// Steering vector of the whole array (all `M` elements in order).
    pub fn full_steering_vector(&self, theta_deg: f64) -> Result<Array1<C64>> {
        if !theta_deg.is_finite() {
            return Err(Error::invalid("steering angle must be finite"));
        }
        Ok(self.steering_for(0..self.elements.len(), theta_deg))
    }

    fn steering_for(&self, range: Range<usize>, theta_deg: f64) -> Array1<C64> {
        let theta = theta_deg.to_radians();
        let (sin_t, cos_t) = (theta.sin(), theta.cos());
        let k = 2.0 * core::f64::consts::PI / self.wavelength;
        Array1::from_iter(self.elements[range].iter().map(|e| {
            let phase = k * (e.x * sin_t + e.y * cos_t);
            C64::from_polar(e.pattern.gain(theta_deg), phase)
        }))
    }

    /// True when all sub-arrays share one element configuration: equal
    /// sizes, equal internal offsets (up to a rigid translation), and equal
    /// patterns. Required by pooled non-coherent processing.
    pub fn subarrays_homogeneous(&self) -> bool {
        let tol = 1e-9 * self.wavelength;
        let first = match self.subarray_range(0) {
            Ok(r) => r,
            Err(_) => return false,
        };
        let reference: Vec<&Element> = self.elements[first].iter().collect();
        for l in 1..self.partition.len() {
            if self.partition[l] != self.partition[0] {
                return false;
            }
            let range = self.subarray_range(l).expect("index checked");
            let sub = &self.elements[range];
            let dx = sub[0].x - reference[0].x;
            let dy = sub[0].y - reference[0].y;
            for (e, r) in sub.iter().zip(reference.iter()) {
                if (e.x - r.x - dx).abs() > tol
                    || (e.y - r.y - dy).abs() > tol
                    || e.pattern != r.pattern
                {
                    return false;
                }
            }
        }
        true
    }
}
