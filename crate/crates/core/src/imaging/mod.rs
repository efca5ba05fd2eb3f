//! Pixel-level primitives everything else builds on.
//!
//! Images are 8-bit-per-channel, row-major, origin at the top-left with x
//! rightward and y downward. RGB frames and RGBA crops are kept as separate
//! types ([`RgbImage`], [`RgbaImage`], re-exported from the `image` crate).
//! Bounding boxes use half-open pixel intervals `[x_min, x_max) × [y_min,
//! y_max)` so that widths, heights and areas are plain differences.
//!
//! Angles are degrees, measured counterclockwise from the +x axis as seen on
//! the displayed image. This one convention is shared by the affine
//! transforms here, the compositor's ground truth, and the pipeline's
//! orientation estimates.

mod bbox;
mod composite;
pub mod io;
mod mask;
mod resize;
mod transform;

pub use bbox::BBox;
pub use composite::{alpha_composite, paste_footprint};
pub use mask::BinaryMask;
pub use resize::{area_downsample, pad_to_square, resize_rgb, resize_rgba};
pub use transform::transform_rgba;

/// RGB frame buffer, 3 bytes per pixel.
pub type RgbImage = image::RgbImage;
/// RGBA crop buffer, 4 bytes per pixel. The alpha channel is the object mask.
pub type RgbaImage = image::RgbaImage;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ImagingError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("mask has no set pixels")]
    EmptyMask,
    #[error("dimension mismatch: expected {expected_w}x{expected_h}, got {got_w}x{got_h}")]
    DimensionMismatch {
        expected_w: u32,
        expected_h: u32,
        got_w: u32,
        got_h: u32,
    },
    #[error("image i/o failed for {path}: {source}")]
    Io {
        path: String,
        source: image::ImageError,
    },
    #[error("{path}: expected an image with an alpha channel")]
    MissingAlpha { path: String },
}

/// Tight half-open bounding box of the set pixels of a mask.
pub fn tight_bbox(mask: &BinaryMask) -> Result<BBox, ImagingError> {
    mask.tight_bbox().ok_or(ImagingError::EmptyMask)
}

/// Tight half-open bounding box of the pixels with alpha > 0.
pub fn alpha_tight_bbox(img: &RgbaImage) -> Result<BBox, ImagingError> {
    let mut min_x = u32::MAX;
    let mut min_y = u32::MAX;
    let mut max_x = 0u32;
    let mut max_y = 0u32;
    let mut any = false;
    for (x, y, px) in img.enumerate_pixels() {
        if px.0[3] > 0 {
            any = true;
            min_x = min_x.min(x);
            min_y = min_y.min(y);
            max_x = max_x.max(x);
            max_y = max_y.max(y);
        }
    }
    if !any {
        return Err(ImagingError::EmptyMask);
    }
    Ok(BBox::new(min_x, min_y, max_x + 1, max_y + 1).expect("min <= max"))
}

/// Crop `img` to `bbox` (must lie within bounds).
pub fn crop_rgba(img: &RgbaImage, bbox: BBox) -> RgbaImage {
    image::imageops::crop_imm(img, bbox.x_min, bbox.y_min, bbox.width(), bbox.height()).to_image()
}

/// Crop `img` to `bbox` (must lie within bounds).
pub fn crop_rgb(img: &RgbImage, bbox: BBox) -> RgbImage {
    image::imageops::crop_imm(img, bbox.x_min, bbox.y_min, bbox.width(), bbox.height()).to_image()
}
