//! Robot crop extraction from recorded frame sequences.
//!
//! Two routes produce alpha-masked [`RobotCrop`]s: a manual one where a
//! single hand-made instance mask is applied to every frame of a static
//! sequence, and an automatic one based on background subtraction followed
//! by thresholding and morphological cleanup. In both, the instance mask
//! becomes the alpha channel and the crop is the bounding box of the
//! largest connected mask component.

mod components;
mod extract;
mod morphology;
mod subtract;

pub use components::{connected_components, largest_component};
pub use extract::{
    align_crop, extract_crop, manual_crop_sequence, CropProvenance, ExtractionMethod, RobotCrop,
};
pub use morphology::{dilate, erode, refine_mask};
pub use subtract::background_subtract_mask;

use thiserror::Error;

/// Default subtraction threshold; robust against per-channel lighting shifts
/// while keeping low-contrast robot parts.
pub const DEFAULT_THRESHOLD: u8 = 25;
/// Default opening radius (removes sensor speckle).
pub const DEFAULT_OPEN_RADIUS: u32 = 1;
/// Default closing radius (fills small holes such as LED glare).
pub const DEFAULT_CLOSE_RADIUS: u32 = 2;

#[derive(Debug, Error)]
pub enum CropError {
    #[error(transparent)]
    Imaging(#[from] crate::imaging::ImagingError),
    #[error("extraction failed for frame {frame_id}: {reason}")]
    ExtractionFailed { frame_id: String, reason: String },
}
