use crate::imaging::{BinaryMask, ImagingError, RgbImage};

/// Foreground mask by background subtraction: a pixel is set iff the maximum
/// absolute channel difference between frame and background exceeds
/// `threshold`.
pub fn background_subtract_mask(
    frame: &RgbImage,
    background: &RgbImage,
    threshold: u8,
) -> Result<BinaryMask, ImagingError> {
    if frame.dimensions() != background.dimensions() {
        return Err(ImagingError::DimensionMismatch {
            expected_w: background.width(),
            expected_h: background.height(),
            got_w: frame.width(),
            got_h: frame.height(),
        });
    }
    Ok(BinaryMask::from_fn(
        frame.width(),
        frame.height(),
        |x, y| {
            let f = frame.get_pixel(x, y).0;
            let b = background.get_pixel(x, y).0;
            (0..3)
                .map(|c| (i16::from(f[c]) - i16::from(b[c])).unsigned_abs())
                .max()
                .unwrap()
                > u16::from(threshold)
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use image::Rgb;

    #[test]
    fn identical_frames_give_empty_mask() {
        let bg = RgbImage::from_fn(8, 8, |x, y| Rgb([x as u8 * 3, y as u8 * 5, 40]));
        let mask = background_subtract_mask(&bg.clone(), &bg, 0).unwrap();
        assert!(mask.is_empty());
    }

    #[test]
    fn bright_patch_on_black_is_recovered_exactly() {
        let bg = RgbImage::new(32, 32);
        let mut frame = bg.clone();
        for y in 10..20 {
            for x in 5..15 {
                frame.put_pixel(x, y, Rgb([255, 255, 255]));
            }
        }
        let mask = background_subtract_mask(&frame, &bg, 30).unwrap();
        assert_eq!(mask.count(), 100);
        assert!(mask.get(5, 10) && mask.get(14, 19));
        assert!(!mask.get(4, 10) && !mask.get(15, 19));
    }

    #[test]
    fn threshold_is_strict() {
        let bg = RgbImage::from_pixel(2, 1, Rgb([100, 100, 100]));
        let mut frame = bg.clone();
        frame.put_pixel(0, 0, Rgb([125, 100, 100])); // diff exactly 25
        frame.put_pixel(1, 0, Rgb([126, 100, 100])); // diff 26
        let mask = background_subtract_mask(&frame, &bg, 25).unwrap();
        assert!(!mask.get(0, 0));
        assert!(mask.get(1, 0));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let a = RgbImage::new(4, 4);
        let b = RgbImage::new(4, 5);
        assert!(background_subtract_mask(&a, &b, 10).is_err());
    }
}
