use serde::{Deserialize, Serialize};

use super::{largest_component, CropError};
use crate::imaging::{self, BinaryMask, RgbImage, RgbaImage};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtractionMethod {
    Manual,
    Automatic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CropProvenance {
    pub frame_id: String,
    pub method: ExtractionMethod,
}

/// Alpha-masked robot image in canonical orientation.
///
/// The crop is tight: its alpha plane has at least one opaque pixel and no
/// fully transparent border row or column.
#[derive(Debug, Clone)]
pub struct RobotCrop {
    pub image: RgbaImage,
    pub robot_type: String,
    pub instance_id: String,
    /// Degrees the depicted robot is rotated from the canonical direction;
    /// 0 once aligned.
    pub canonical_orientation: f64,
    pub provenance: CropProvenance,
}

/// Tightens an RGBA image to the bounding box of its alpha > 0 pixels.
pub fn retighten(image: &RgbaImage) -> Result<RgbaImage, crate::imaging::ImagingError> {
    let bbox = imaging::alpha_tight_bbox(image)?;
    if (bbox.width(), bbox.height()) == image.dimensions() {
        Ok(image.clone())
    } else {
        Ok(imaging::crop_rgba(image, bbox))
    }
}

/// Cuts a [`RobotCrop`] out of a frame: keeps the largest 8-connected mask
/// component, crops the frame to its tight bounding box, and turns the mask
/// into the alpha channel (set -> 255, unset -> 0).
pub fn extract_crop(
    frame: &RgbImage,
    mask: &BinaryMask,
    robot_type: &str,
    instance_id: &str,
    frame_id: &str,
    method: ExtractionMethod,
) -> Result<RobotCrop, CropError> {
    if frame.dimensions() != mask.dimensions() {
        return Err(crate::imaging::ImagingError::DimensionMismatch {
            expected_w: mask.width(),
            expected_h: mask.height(),
            got_w: frame.width(),
            got_h: frame.height(),
        }
        .into());
    }
    let component = largest_component(mask).ok_or_else(|| CropError::ExtractionFailed {
        frame_id: frame_id.to_string(),
        reason: "mask has no set pixels".into(),
    })?;
    let bbox = component.tight_bbox().expect("component is non-empty");
    let image = RgbaImage::from_fn(bbox.width(), bbox.height(), |x, y| {
        let (fx, fy) = (bbox.x_min + x, bbox.y_min + y);
        let rgb = frame.get_pixel(fx, fy).0;
        let a = if component.get(fx, fy) { 255 } else { 0 };
        image::Rgba([rgb[0], rgb[1], rgb[2], a])
    });
    Ok(RobotCrop {
        image,
        robot_type: robot_type.to_string(),
        instance_id: instance_id.to_string(),
        canonical_orientation: 0.0,
        provenance: CropProvenance {
            frame_id: frame_id.to_string(),
            method,
        },
    })
}

/// Applies one hand-made instance mask to every frame of a static sequence.
/// All crops share the bounding box the mask dictates.
pub fn manual_crop_sequence(
    frames: &[(String, RgbImage)],
    single_mask: &BinaryMask,
    robot_type: &str,
    instance_id: &str,
) -> Result<Vec<RobotCrop>, CropError> {
    frames
        .iter()
        .map(|(frame_id, frame)| {
            extract_crop(
                frame,
                single_mask,
                robot_type,
                instance_id,
                frame_id,
                ExtractionMethod::Manual,
            )
        })
        .collect()
}

/// Rotates a crop so the robot points in the canonical direction, given the
/// orientation it was recorded at, and re-tightens the canvas.
pub fn align_crop(crop: &RobotCrop, measured_orientation: f64) -> Result<RobotCrop, CropError> {
    let rotated = imaging::transform_rgba(&crop.image, 1.0, -measured_orientation)?;
    let image = retighten(&rotated)?;
    Ok(RobotCrop {
        image,
        robot_type: crop.robot_type.clone(),
        instance_id: crop.instance_id.clone(),
        canonical_orientation: 0.0,
        provenance: crop.provenance.clone(),
    })
}
