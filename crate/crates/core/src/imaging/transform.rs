use super::{ImagingError, RgbaImage};

/// (sin, cos) of an angle in degrees, exact at quarter turns so that
/// axis-aligned rotations produce exact canvas sizes.
fn sin_cos_deg(deg: f64) -> (f64, f64) {
    let norm = deg.rem_euclid(360.0);
    if norm == 0.0 {
        (0.0, 1.0)
    } else if norm == 90.0 {
        (1.0, 0.0)
    } else if norm == 180.0 {
        (0.0, -1.0)
    } else if norm == 270.0 {
        (-1.0, 0.0)
    } else {
        norm.to_radians().sin_cos()
    }
}

/// Uniformly scales and rotates an RGBA image. `rotation` is degrees
/// counterclockwise on the displayed image.
///
/// The output canvas is the tight axis-aligned extent of the transformed
/// image; pixels that map outside the source become fully transparent. Color
/// and alpha are sampled with the same bilinear kernel.
pub fn transform_rgba(
    src: &RgbaImage,
    scale: f64,
    rotation: f64,
) -> Result<RgbaImage, ImagingError> {
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(ImagingError::InvalidArgument(format!(
            "scale must be positive and finite, got {scale}"
        )));
    }
    if !rotation.is_finite() {
        return Err(ImagingError::InvalidArgument(format!(
            "rotation must be finite, got {rotation}"
        )));
    }
    let rot = rotation.rem_euclid(360.0);
    if scale == 1.0 && rot == 0.0 {
        return Ok(src.clone());
    }

    let (sw, sh) = (f64::from(src.width()), f64::from(src.height()));
    let (sin, cos) = sin_cos_deg(rot);

    // Counterclockwise on a y-down pixel grid: (x, y) -> (xc + ys, yc - xs).
    let fwd = |x: f64, y: f64| (scale * (x * cos + y * sin), scale * (y * cos - x * sin));

    let corners = [fwd(0.0, 0.0), fwd(sw, 0.0), fwd(0.0, sh), fwd(sw, sh)];
    let min_x = corners.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
    let min_y = corners.iter().map(|c| c.1).fold(f64::INFINITY, f64::min);
    let max_x = corners.iter().map(|c| c.0).fold(f64::NEG_INFINITY, f64::max);
    let max_y = corners.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);

    let out_w = ((max_x - min_x) - 1e-6).ceil().max(1.0) as u32;
    let out_h = ((max_y - min_y) - 1e-6).ceil().max(1.0) as u32;

    // Inverse of `fwd`.
    let inv = |x: f64, y: f64| {
        let (xs, ys) = (x / scale, y / scale);
        (xs * cos - ys * sin, ys * cos + xs * sin)
    };

    let mut out = RgbaImage::new(out_w, out_h);
    for y in 0..out_h {
        for x in 0..out_w {
            let qx = f64::from(x) + 0.5 + min_x;
            let qy = f64::from(y) + 0.5 + min_y;
            let (px, py) = inv(qx, qy);
            if px < -0.5 || py < -0.5 || px > sw + 0.5 || py > sh + 0.5 {
                continue;
            }
            out.put_pixel(x, y, bilinear(src, px, py));
        }
    }
    Ok(out)
}

/// Bilinear sample at continuous source coordinates where pixel (i, j)
/// occupies the unit square with center (i + 0.5, j + 0.5). Samples outside
/// the source contribute transparent black.
fn bilinear(src: &RgbaImage, x: f64, y: f64) -> image::Rgba<u8> {
    let u = x - 0.5;
    let v = y - 0.5;
    let x0 = u.floor();
    let y0 = v.floor();
    let fx = u - x0;
    let fy = v - y0;
    let (x0, y0) = (x0 as i64, y0 as i64);

    let fetch = |ix: i64, iy: i64| -> [f64; 4] {
        if ix < 0 || iy < 0 || ix >= i64::from(src.width()) || iy >= i64::from(src.height()) {
            [0.0; 4]
        } else {
            let p = src.get_pixel(ix as u32, iy as u32).0;
            [
                f64::from(p[0]),
                f64::from(p[1]),
                f64::from(p[2]),
                f64::from(p[3]),
            ]
        }
    };

    let p00 = fetch(x0, y0);
    let p10 = fetch(x0 + 1, y0);
    let p01 = fetch(x0, y0 + 1);
    let p11 = fetch(x0 + 1, y0 + 1);

    let mut px = [0u8; 4];
    for c in 0..4 {
        let top = p00[c] * (1.0 - fx) + p10[c] * fx;
        let bottom = p01[c] * (1.0 - fx) + p11[c] * fx;
        px[c] = (top * (1.0 - fy) + bottom * fy).round().clamp(0.0, 255.0) as u8;
    }
    image::Rgba(px)
}
