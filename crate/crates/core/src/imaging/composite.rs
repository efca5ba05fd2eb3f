use super::{BinaryMask, RgbImage, RgbaImage};

/// Superimposes an RGBA crop on an RGB canvas at `top_left` (may be negative
/// or extend past the borders; off-canvas source pixels are discarded).
///
/// Per pixel: `out = src_rgb * a + dst_rgb * (1 - a)` with `a = alpha / 255`,
/// rounded to the nearest integer. Pixels outside the source extent are left
/// untouched.
pub fn alpha_composite(dst: &mut RgbImage, src: &RgbaImage, top_left: (i64, i64)) {
    let (tx, ty) = top_left;
    let (dw, dh) = (i64::from(dst.width()), i64::from(dst.height()));
    for (sx, sy, px) in src.enumerate_pixels() {
        let a = u32::from(px.0[3]);
        if a == 0 {
            continue;
        }
        let x = tx + i64::from(sx);
        let y = ty + i64::from(sy);
        if x < 0 || y < 0 || x >= dw || y >= dh {
            continue;
        }
        let d = dst.get_pixel_mut(x as u32, y as u32);
        for c in 0..3 {
            let s = u32::from(px.0[c]);
            let b = u32::from(d.0[c]);
            d.0[c] = ((s * a + b * (255 - a) + 127) / 255) as u8;
        }
    }
}

/// Canvas-sized mask of where a paste's alpha > 0 pixels actually landed.
///
/// This is the paste's alpha footprint: the source alpha plane translated by
/// `top_left` and clipped to the canvas.
pub fn paste_footprint(
    canvas_w: u32,
    canvas_h: u32,
    src: &RgbaImage,
    top_left: (i64, i64),
) -> BinaryMask {
    let mut mask = BinaryMask::new(canvas_w, canvas_h);
    let (tx, ty) = top_left;
    for (sx, sy, px) in src.enumerate_pixels() {
        if px.0[3] == 0 {
            continue;
        }
        let x = tx + i64::from(sx);
        let y = ty + i64::from(sy);
        if x >= 0 && y >= 0 && x < i64::from(canvas_w) && y < i64::from(canvas_h) {
            mask.set(x as u32, y as u32, true);
        }
    }
    mask
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::imaging::BBox;
    use image::{Rgb, Rgba};

    fn solid_rgb(w: u32, h: u32, c: [u8; 3]) -> RgbImage {
        RgbImage::from_pixel(w, h, Rgb(c))
    }

    fn solid_rgba(w: u32, h: u32, c: [u8; 4]) -> RgbaImage {
        RgbaImage::from_pixel(w, h, Rgba(c))
    }

    #[test]
    fn zero_alpha_is_identity() {
        let mut dst = solid_rgb(6, 6, [10, 20, 30]);
        let before = dst.clone();
        alpha_composite(&mut dst, &solid_rgba(4, 4, [200, 0, 0, 0]), (1, 1));
        assert_eq!(dst, before);
    }

    #[test]
    fn opaque_overwrites() {
        let mut dst = solid_rgb(6, 6, [10, 20, 30]);
        alpha_composite(&mut dst, &solid_rgba(2, 2, [200, 100, 50, 255]), (0, 0));
        assert_eq!(dst.get_pixel(0, 0).0, [200, 100, 50]);
        assert_eq!(dst.get_pixel(1, 1).0, [200, 100, 50]);
        assert_eq!(dst.get_pixel(2, 2).0, [10, 20, 30]);
    }

    #[test]
    fn half_alpha_blends() {
        let mut dst = solid_rgb(1, 1, [100, 100, 100]);
        alpha_composite(&mut dst, &solid_rgba(1, 1, [200, 200, 200, 128]), (0, 0));
        for c in dst.get_pixel(0, 0).0 {
            assert!((i32::from(c) - 150).abs() <= 1, "got {c}");
        }
    }

    #[test]
    fn off_canvas_pixels_are_discarded() {
        let mut dst = solid_rgb(4, 4, [0, 0, 0]);
        alpha_composite(&mut dst, &solid_rgba(3, 3, [255, 255, 255, 255]), (-2, -2));
        // Only the overlapping 1x1 corner changes.
        assert_eq!(dst.get_pixel(0, 0).0, [255, 255, 255]);
        assert_eq!(dst.get_pixel(1, 0).0, [0, 0, 0]);
        assert_eq!(dst.get_pixel(0, 1).0, [0, 0, 0]);
    }

    #[test]
    fn footprint_matches_translated_alpha() {
        let mut src = RgbaImage::new(4, 3);
        src.put_pixel(0, 0, Rgba([1, 1, 1, 255]));
        src.put_pixel(3, 2, Rgba([1, 1, 1, 9]));
        let fp = paste_footprint(10, 10, &src, (2, 5));
        assert_eq!(fp.count(), 2);
        assert!(fp.get(2, 5));
        assert!(fp.get(5, 7));
        assert_eq!(fp.tight_bbox(), BBox::new(2, 5, 6, 8));
    }

    #[test]
    fn footprint_clips_at_borders() {
        let src = solid_rgba(4, 4, [1, 1, 1, 255]);
        let fp = paste_footprint(5, 5, &src, (3, 3));
        assert_eq!(fp.count(), 4);
        assert_eq!(fp.tight_bbox(), BBox::new(3, 3, 5, 5));
    }
}
