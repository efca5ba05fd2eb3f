//! Image file loading and saving. RGBA crops are PNG with a mandatory alpha
//! channel; frames and backgrounds are PNG or JPEG.

use std::path::Path;

use super::{BinaryMask, ImagingError, RgbImage, RgbaImage};

fn io_err(path: &Path, source: image::ImageError) -> ImagingError {
    ImagingError::Io {
        path: path.display().to_string(),
        source,
    }
}

/// Loads an RGB frame or background (PNG or JPEG; other color layouts are
/// converted).
pub fn load_rgb(path: &Path) -> Result<RgbImage, ImagingError> {
    let img = image::open(path).map_err(|e| io_err(path, e))?;
    Ok(img.to_rgb8())
}

/// Loads an RGBA crop. The file itself must carry an alpha channel.
pub fn load_rgba(path: &Path) -> Result<RgbaImage, ImagingError> {
    let img = image::open(path).map_err(|e| io_err(path, e))?;
    if !img.color().has_alpha() {
        return Err(ImagingError::MissingAlpha {
            path: path.display().to_string(),
        });
    }
    Ok(img.to_rgba8())
}

/// Loads a 1-channel 0/255 mask; pixels >= 128 are set.
pub fn load_mask(path: &Path) -> Result<BinaryMask, ImagingError> {
    let img = image::open(path).map_err(|e| io_err(path, e))?.to_luma8();
    Ok(BinaryMask::from_fn(img.width(), img.height(), |x, y| {
        img.get_pixel(x, y).0[0] >= 128
    }))
}

pub fn save_rgb(img: &RgbImage, path: &Path) -> Result<(), ImagingError> {
    img.save(path).map_err(|e| io_err(path, e))
}

pub fn save_rgba(img: &RgbaImage, path: &Path) -> Result<(), ImagingError> {
    img.save(path).map_err(|e| io_err(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use image::Rgba;

    #[test]
    fn rgba_round_trip_and_alpha_enforcement() {
        let dir = tempfile::tempdir().unwrap();
        let rgba_path = dir.path().join("crop.png");
        let rgb_path = dir.path().join("frame.png");

        let crop = RgbaImage::from_fn(5, 4, |x, y| {
            Rgba([x as u8, y as u8, 9, if x == 0 { 0 } else { 255 }])
        });
        save_rgba(&crop, &rgba_path).unwrap();
        assert_eq!(load_rgba(&rgba_path).unwrap(), crop);

        let frame = RgbImage::from_pixel(5, 4, image::Rgb([1, 2, 3]));
        save_rgb(&frame, &rgb_path).unwrap();
        let err = load_rgba(&rgb_path).unwrap_err();
        assert!(matches!(err, ImagingError::MissingAlpha { .. }));
        assert!(err.to_string().contains("frame.png"));
    }
}
