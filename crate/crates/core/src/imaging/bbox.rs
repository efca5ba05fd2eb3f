use serde::{Deserialize, Serialize};

/// Axis-aligned bounding box over pixels, half-open: a pixel (x, y) is inside
/// iff `x_min <= x < x_max` and `y_min <= y < y_max`. Always non-degenerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[u32; 4]", into = "[u32; 4]")]
pub struct BBox {
    pub x_min: u32,
    pub y_min: u32,
    pub x_max: u32,
    pub y_max: u32,
}

impl BBox {
    /// Returns `None` unless `x_min < x_max` and `y_min < y_max`.
    pub fn new(x_min: u32, y_min: u32, x_max: u32, y_max: u32) -> Option<Self> {
        if x_min < x_max && y_min < y_max {
            Some(Self {
                x_min,
                y_min,
                x_max,
                y_max,
            })
        } else {
            None
        }
    }

    pub fn width(&self) -> u32 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> u32 {
        self.y_max - self.y_min
    }

    pub fn area(&self) -> u64 {
        u64::from(self.width()) * u64::from(self.height())
    }

    pub fn center(&self) -> (f64, f64) {
        (
            (f64::from(self.x_min) + f64::from(self.x_max)) / 2.0,
            (f64::from(self.y_min) + f64::from(self.y_max)) / 2.0,
        )
    }

    pub fn contains_point(&self, x: f64, y: f64) -> bool {
        x >= f64::from(self.x_min)
            && x < f64::from(self.x_max)
            && y >= f64::from(self.y_min)
            && y < f64::from(self.y_max)
    }

    /// Overlap region, if any.
    pub fn intersect(&self, other: &BBox) -> Option<BBox> {
        BBox::new(
            self.x_min.max(other.x_min),
            self.y_min.max(other.y_min),
            self.x_max.min(other.x_max),
            self.y_max.min(other.y_max),
        )
    }

    pub fn intersection_area(&self, other: &BBox) -> u64 {
        self.intersect(other).map_or(0, |b| b.area())
    }

    /// Clip to a `width`x`height` canvas; `None` if nothing remains.
    pub fn clip_to(&self, width: u32, height: u32) -> Option<BBox> {
        BBox::new(
            self.x_min.min(width),
            self.y_min.min(height),
            self.x_max.min(width),
            self.y_max.min(height),
        )
    }

    /// Whether this box lies fully inside a `width`x`height` canvas.
    pub fn within(&self, width: u32, height: u32) -> bool {
        self.x_max <= width && self.y_max <= height
    }

    /// Mirror across the vertical axis of a canvas `width` pixels wide.
    pub fn mirror_horizontal(&self, width: u32) -> BBox {
        BBox {
            x_min: width - self.x_max,
            x_max: width - self.x_min,
            y_min: self.y_min,
            y_max: self.y_max,
        }
    }

    /// Mirror across the horizontal axis of a canvas `height` pixels tall.
    pub fn mirror_vertical(&self, height: u32) -> BBox {
        BBox {
            x_min: self.x_min,
            x_max: self.x_max,
            y_min: height - self.y_max,
            y_max: height - self.y_min,
        }
    }

    /// Map between two canvas resolutions, rounding each edge to the nearest
    /// pixel. Degenerate results are widened to one pixel.
    pub fn rescale(&self, from: (u32, u32), to: (u32, u32)) -> BBox {
        let sx = f64::from(to.0) / f64::from(from.0);
        let sy = f64::from(to.1) / f64::from(from.1);
        let x_min = (f64::from(self.x_min) * sx).round() as u32;
        let y_min = (f64::from(self.y_min) * sy).round() as u32;
        let mut x_max = (f64::from(self.x_max) * sx).round() as u32;
        let mut y_max = (f64::from(self.y_max) * sy).round() as u32;
        if x_max <= x_min {
            x_max = x_min + 1;
        }
        if y_max <= y_min {
            y_max = y_min + 1;
        }
        BBox {
            x_min,
            y_min,
            x_max: x_max.min(to.0).max(x_min + 1),
            y_max: y_max.min(to.1).max(y_min + 1),
        }
    }
}

impl From<BBox> for [u32; 4] {
    fn from(b: BBox) -> Self {
        [b.x_min, b.y_min, b.x_max, b.y_max]
    }
}

impl TryFrom<[u32; 4]> for BBox {
    type Error = String;

    fn try_from(v: [u32; 4]) -> Result<Self, Self::Error> {
        BBox::new(v[0], v[1], v[2], v[3])
            .ok_or_else(|| format!("degenerate bbox [{}, {}, {}, {}]", v[0], v[1], v[2], v[3]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate() {
        assert!(BBox::new(3, 3, 3, 5).is_none());
        assert!(BBox::new(3, 3, 5, 3).is_none());
        assert!(BBox::new(0, 0, 1, 1).is_some());
    }

    #[test]
    fn area_and_intersection() {
        let a = BBox::new(0, 0, 2, 2).unwrap();
        let b = BBox::new(1, 1, 3, 3).unwrap();
        assert_eq!(a.area(), 4);
        assert_eq!(a.intersection_area(&b), 1);
        let c = BBox::new(5, 5, 6, 6).unwrap();
        assert_eq!(a.intersection_area(&c), 0);
    }

    #[test]
    fn mirror_is_involution() {
        let b = BBox::new(2, 3, 7, 9).unwrap();
        assert_eq!(b.mirror_horizontal(10).mirror_horizontal(10), b);
        assert_eq!(b.mirror_vertical(12).mirror_vertical(12), b);
    }

    #[test]
    fn clip_drops_offscreen() {
        let b = BBox::new(8, 2, 12, 6).unwrap();
        assert_eq!(b.clip_to(10, 10), BBox::new(8, 2, 10, 6));
        assert_eq!(b.clip_to(8, 10), None);
    }
}
