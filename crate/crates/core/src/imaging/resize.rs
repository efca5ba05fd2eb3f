use super::{ImagingError, RgbImage, RgbaImage};

/// Coverage weights of source cells `[lo, hi)` overlapping one output cell.
fn cell_weights(out_index: u32, ratio: f64) -> (usize, Vec<f64>) {
    let lo = f64::from(out_index) * ratio;
    let hi = f64::from(out_index + 1) * ratio;
    let first = lo.floor() as usize;
    let last = (hi - 1e-9).floor() as usize;
    let mut weights = Vec::with_capacity(last - first + 1);
    for i in first..=last {
        let cell_lo = (i as f64).max(lo);
        let cell_hi = ((i + 1) as f64).min(hi);
        weights.push((cell_hi - cell_lo).max(0.0));
    }
    (first, weights)
}

fn area_resample<const C: usize>(
    data: &[u8],
    sw: u32,
    sh: u32,
    tw: u32,
    th: u32,
) -> Vec<u8> {
    let rx = f64::from(sw) / f64::from(tw);
    let ry = f64::from(sh) / f64::from(th);
    let col_weights: Vec<(usize, Vec<f64>)> = (0..tw).map(|x| cell_weights(x, rx)).collect();
    let row_weights: Vec<(usize, Vec<f64>)> = (0..th).map(|y| cell_weights(y, ry)).collect();

    let mut out = vec![0u8; tw as usize * th as usize * C];
    let src_row = sw as usize * C;
    for (oy, (y0, wys)) in row_weights.iter().enumerate() {
        for (ox, (x0, wxs)) in col_weights.iter().enumerate() {
            let mut acc = [0.0f64; C];
            let mut total = 0.0;
            for (dy, wy) in wys.iter().enumerate() {
                let base = (y0 + dy).min(sh as usize - 1) * src_row;
                for (dx, wx) in wxs.iter().enumerate() {
                    let w = wx * wy;
                    let off = base + (x0 + dx).min(sw as usize - 1) * C;
                    for c in 0..C {
                        acc[c] += w * f64::from(data[off + c]);
                    }
                    total += w;
                }
            }
            let off = (oy * tw as usize + ox) * C;
            for c in 0..C {
                out[off + c] = (acc[c] / total).round().clamp(0.0, 255.0) as u8;
            }
        }
    }
    out
}

fn bilinear_resample<const C: usize>(
    data: &[u8],
    sw: u32,
    sh: u32,
    tw: u32,
    th: u32,
) -> Vec<u8> {
    let rx = f64::from(sw) / f64::from(tw);
    let ry = f64::from(sh) / f64::from(th);
    let mut out = vec![0u8; tw as usize * th as usize * C];
    let src_row = sw as usize * C;
    for oy in 0..th {
        let v = (f64::from(oy) + 0.5) * ry - 0.5;
        let y0 = v.floor().max(0.0) as usize;
        let y1 = (y0 + 1).min(sh as usize - 1);
        let fy = (v - y0 as f64).clamp(0.0, 1.0);
        for ox in 0..tw {
            let u = (f64::from(ox) + 0.5) * rx - 0.5;
            let x0 = u.floor().max(0.0) as usize;
            let x1 = (x0 + 1).min(sw as usize - 1);
            let fx = (u - x0 as f64).clamp(0.0, 1.0);
            let off = (oy as usize * tw as usize + ox as usize) * C;
            for c in 0..C {
                let p00 = f64::from(data[y0 * src_row + x0 * C + c]);
                let p10 = f64::from(data[y0 * src_row + x1 * C + c]);
                let p01 = f64::from(data[y1 * src_row + x0 * C + c]);
                let p11 = f64::from(data[y1 * src_row + x1 * C + c]);
                let top = p00 * (1.0 - fx) + p10 * fx;
                let bot = p01 * (1.0 - fx) + p11 * fx;
                out[off + c] = (top * (1.0 - fy) + bot * fy).round().clamp(0.0, 255.0) as u8;
            }
        }
    }
    out
}

/// Area-averaging resample of an RGB frame: each output pixel is the
/// coverage-weighted mean of the source region it spans.
pub fn area_downsample(frame: &RgbImage, width: u32, height: u32) -> Result<RgbImage, ImagingError> {
    if width == 0 || height == 0 {
        return Err(ImagingError::InvalidArgument(
            "target dimensions must be at least 1x1".into(),
        ));
    }
    if (width, height) == frame.dimensions() {
        return Ok(frame.clone());
    }
    let data = area_resample::<3>(frame.as_raw(), frame.width(), frame.height(), width, height);
    Ok(RgbImage::from_raw(width, height, data).expect("sized buffer"))
}

/// Resample an RGB image: area averaging when shrinking, bilinear when
/// enlarging (decided per call on the dominant direction).
pub fn resize_rgb(img: &RgbImage, width: u32, height: u32) -> Result<RgbImage, ImagingError> {
    if width == 0 || height == 0 {
        return Err(ImagingError::InvalidArgument(
            "target dimensions must be at least 1x1".into(),
        ));
    }
    if (width, height) == img.dimensions() {
        return Ok(img.clone());
    }
    let data = if width <= img.width() && height <= img.height() {
        area_resample::<3>(img.as_raw(), img.width(), img.height(), width, height)
    } else {
        bilinear_resample::<3>(img.as_raw(), img.width(), img.height(), width, height)
    };
    Ok(RgbImage::from_raw(width, height, data).expect("sized buffer"))
}

/// Same as [`resize_rgb`] for RGBA; alpha is resampled like the colors.
pub fn resize_rgba(img: &RgbaImage, width: u32, height: u32) -> Result<RgbaImage, ImagingError> {
    if width == 0 || height == 0 {
        return Err(ImagingError::InvalidArgument(
            "target dimensions must be at least 1x1".into(),
        ));
    }
    if (width, height) == img.dimensions() {
        return Ok(img.clone());
    }
    let data = if width <= img.width() && height <= img.height() {
        area_resample::<4>(img.as_raw(), img.width(), img.height(), width, height)
    } else {
        bilinear_resample::<4>(img.as_raw(), img.width(), img.height(), width, height)
    };
    Ok(RgbaImage::from_raw(width, height, data).expect("sized buffer"))
}

/// Pads the shorter dimension with replicated edge pixels until the image is
/// square. Padding is split evenly, the odd pixel goes to the bottom/right.
pub fn pad_to_square(img: &RgbImage) -> RgbImage {
    let (w, h) = img.dimensions();
    if w == h {
        return img.clone();
    }
    let side = w.max(h);
    let off_x = (side - w) / 2;
    let off_y = (side - h) / 2;
    RgbImage::from_fn(side, side, |x, y| {
        let sx = x.saturating_sub(off_x).min(w - 1);
        let sy = y.saturating_sub(off_y).min(h - 1);
        *img.get_pixel(sx, sy)
    })
}
