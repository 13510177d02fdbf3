//! Domain types: points, landmark sets, image records, and the
//! two-annotator ground-truth merge.
//!
//! Coordinate convention used everywhere in the crate: origin at the
//! top-left, `x` grows rightward (columns), `y` grows downward (rows),
//! pixel centers at integer coordinates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sub-pixel 2-D image coordinate in pixels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Euclidean distance in pixels.
    pub fn distance(&self, other: &Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn midpoint(&self, other: &Point2) -> Point2 {
        Point2::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }
}

/// A fixed-size set of landmarks with optional per-point confidence.
///
/// `points`, `visible` and (when present) `confidence` all have the same
/// length. Invisible points keep a placeholder coordinate of `(0, 0)`;
/// their coordinate and confidence carry no meaning.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LandmarkSet {
    pub points: Vec<Point2>,
    pub visible: Vec<bool>,
    pub confidence: Option<Vec<f64>>,
}

impl LandmarkSet {
    /// All points visible, no confidences.
    pub fn from_points(points: Vec<Point2>) -> Self {
        let visible = vec![true; points.len()];
        LandmarkSet {
            points,
            visible,
            confidence: None,
        }
    }

    /// An all-invisible set of `k` placeholder points.
    pub fn invisible(k: usize) -> Self {
        LandmarkSet {
            points: vec![Point2::new(0.0, 0.0); k],
            visible: vec![false; k],
            confidence: None,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        if self.visible.len() != self.points.len() {
            return Err(Error::Inconsistent(format!(
                "landmark set has {} points but {} visibility flags",
                self.points.len(),
                self.visible.len()
            )));
        }
        if let Some(conf) = &self.confidence {
            if conf.len() != self.points.len() {
                return Err(Error::Inconsistent(format!(
                    "landmark set has {} points but {} confidences",
                    self.points.len(),
                    conf.len()
                )));
            }
        }
        for (i, p) in self.points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "landmark {i} has non-finite coordinates"
                )));
            }
        }
        Ok(())
    }
}

/// Imaging site. Sites differ in detector pixel spacing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Institution {
    A,
    B,
    C,
    Other,
}

impl Institution {
    /// Classify by the site's characteristic pixel spacing.
    pub fn from_spacing(spacing_mm_per_px: f64) -> Institution {
        const EPS: f64 = 1e-9;
        if (spacing_mm_per_px - 0.1).abs() < EPS {
            Institution::A
        } else if (spacing_mm_per_px - 0.125).abs() < EPS {
            Institution::B
        } else if (spacing_mm_per_px - 0.096).abs() < EPS {
            Institution::C
        } else {
            Institution::Other
        }
    }
}

/// Per-image metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImageMeta {
    pub image_id: String,
    pub institution: Institution,
    /// Physical size of one pixel in millimetres. Always refers to the
    /// native resolution; transforms do not rescale it.
    pub spacing_mm_per_px: f64,
    pub width: u32,
    pub height: u32,
}

impl ImageMeta {
    pub fn validate(&self) -> Result<()> {
        if !(self.spacing_mm_per_px > 0.0) || !self.spacing_mm_per_px.is_finite() {
            return Err(Error::InvalidInput(format!(
                "{}: spacing must be positive, got {}",
                self.image_id, self.spacing_mm_per_px
            )));
        }
        if self.width == 0 || self.height == 0 {
            return Err(Error::InvalidInput(format!(
                "{}: zero image extent {}x{}",
                self.image_id, self.width, self.height
            )));
        }
        Ok(())
    }
}

/// Grayscale raster plus metadata. Pixels are row-major reals in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageRecord {
    pub meta: ImageMeta,
    pub pixels: Vec<f32>,
}

impl ImageRecord {
    pub fn new(meta: ImageMeta, pixels: Vec<f32>) -> Result<Self> {
        meta.validate()?;
        if pixels.len() != (meta.width as usize) * (meta.height as usize) {
            return Err(Error::SizeMismatch(format!(
                "{}: {}x{} image needs {} pixels, got {}",
                meta.image_id,
                meta.width,
                meta.height,
                (meta.width as usize) * (meta.height as usize),
                pixels.len()
            )));
        }
        Ok(ImageRecord { meta, pixels })
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32) -> f32 {
        self.pixels[y as usize * self.meta.width as usize + x as usize]
    }
}

/// Average two annotators' landmark sets pointwise.
///
/// Both sets must have the same length with every point visible; the
/// result has no confidences and all points visible.
pub fn merge_annotations(a: &LandmarkSet, b: &LandmarkSet) -> Result<LandmarkSet> {
    if a.len() != b.len() {
        return Err(Error::Inconsistent(format!(
            "annotator sets differ in length: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    if !a.visible.iter().all(|v| *v) || !b.visible.iter().all(|v| *v) {
        return Err(Error::InvalidInput(
            "merge_annotations requires fully visible sets".into(),
        ));
    }
    let points = a
        .points
        .iter()
        .zip(&b.points)
        .map(|(pa, pb)| pa.midpoint(pb))
        .collect();
    Ok(LandmarkSet::from_points(points))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(points: &[(f64, f64)]) -> LandmarkSet {
        LandmarkSet::from_points(points.iter().map(|&(x, y)| Point2::new(x, y)).collect())
    }

    #[test]
    fn merge_takes_midpoints() {
        let a = set(&[(10.0, 10.0), (0.0, 0.0)]);
        let b = set(&[(12.0, 14.0), (1.0, 0.0)]);
        let m = merge_annotations(&a, &b).unwrap();
        assert_eq!(m.points[0], Point2::new(11.0, 12.0));
        assert_eq!(m.points[1], Point2::new(0.5, 0.0));
        assert!(m.confidence.is_none());
        assert!(m.visible.iter().all(|v| *v));
    }

    #[test]
    fn merge_is_symmetric_and_idempotent_on_equal_inputs() {
        let a = set(&[(3.25, -1.5), (100.0, 42.0)]);
        let b = set(&[(7.75, 2.5), (90.0, 40.0)]);
        assert_eq!(
            merge_annotations(&a, &b).unwrap(),
            merge_annotations(&b, &a).unwrap()
        );
        assert_eq!(merge_annotations(&a, &a).unwrap(), a);
    }

    #[test]
    fn merge_rejects_length_mismatch() {
        let a = set(&[(0.0, 0.0)]);
        let b = set(&[(0.0, 0.0), (1.0, 1.0)]);
        assert!(merge_annotations(&a, &b).is_err());
    }

    #[test]
    fn institution_from_spacing() {
        assert_eq!(Institution::from_spacing(0.1), Institution::A);
        assert_eq!(Institution::from_spacing(0.125), Institution::B);
        assert_eq!(Institution::from_spacing(0.096), Institution::C);
        assert_eq!(Institution::from_spacing(0.2), Institution::Other);
    }

    #[test]
    fn image_record_checks_buffer_length() {
        let meta = ImageMeta {
            image_id: "x".into(),
            institution: Institution::Other,
            spacing_mm_per_px: 0.1,
            width: 4,
            height: 4,
        };
        assert!(ImageRecord::new(meta.clone(), vec![0.0; 16]).is_ok());
        assert!(ImageRecord::new(meta, vec![0.0; 15]).is_err());
    }
}
