use crate::imaging::BinaryMask;

/// Integer disc: all offsets with dx^2 + dy^2 <= r^2. Radius 0 is the single
/// center pixel, radius 1 the 5-pixel cross.
fn disc_offsets(radius: u32) -> Vec<(i32, i32)> {
    let r = radius as i32;
    let mut offsets = Vec::new();
    for dy in -r..=r {
        for dx in -r..=r {
            if dx * dx + dy * dy <= r * r {
                offsets.push((dx, dy));
            }
        }
    }
    offsets
}

/// Morphological erosion with a disc. Pixels outside the canvas count as
/// unset, so the canvas content behaves as a finite set on the infinite grid.
pub fn erode(mask: &BinaryMask, radius: u32) -> BinaryMask {
    if radius == 0 {
        return mask.clone();
    }
    let offsets = disc_offsets(radius);
    let (w, h) = mask.dimensions();
    BinaryMask::from_fn(w, h, |x, y| {
        offsets.iter().all(|&(dx, dy)| {
            let nx = x as i64 + i64::from(dx);
            let ny = y as i64 + i64::from(dy);
            nx >= 0
                && ny >= 0
                && nx < i64::from(w)
                && ny < i64::from(h)
                && mask.get(nx as u32, ny as u32)
        })
    })
}

/// Morphological dilation with a disc.
pub fn dilate(mask: &BinaryMask, radius: u32) -> BinaryMask {
    if radius == 0 {
        return mask.clone();
    }
    let offsets = disc_offsets(radius);
    let (w, h) = mask.dimensions();
    BinaryMask::from_fn(w, h, |x, y| {
        offsets.iter().any(|&(dx, dy)| {
            let nx = x as i64 + i64::from(dx);
            let ny = y as i64 + i64::from(dy);
            nx >= 0
                && ny >= 0
                && nx < i64::from(w)
                && ny < i64::from(h)
                && mask.get(nx as u32, ny as u32)
        })
    })
}

fn embed(mask: &BinaryMask, margin: u32) -> BinaryMask {
    let (w, h) = mask.dimensions();
    let mut out = BinaryMask::new(w + 2 * margin, h + 2 * margin);
    for (x, y) in mask.iter_set() {
        out.set(x + margin, y + margin, true);
    }
    out
}

fn crop_center(mask: &BinaryMask, margin: u32, w: u32, h: u32) -> BinaryMask {
    BinaryMask::from_fn(w, h, |x, y| mask.get(x + margin, y + margin))
}

/// Mask cleanup: opening (erode, dilate) with `open_radius`, then closing
/// (dilate, erode) with `close_radius`. The closing runs on a canvas padded
/// by the radius so border content dilates and contracts exactly as it would
/// on an unbounded grid.
pub fn refine_mask(mask: &BinaryMask, open_radius: u32, close_radius: u32) -> BinaryMask {
    let opened = if open_radius == 0 {
        mask.clone()
    } else {
        dilate(&erode(mask, open_radius), open_radius)
    };
    if close_radius == 0 {
        return opened;
    }
    let (w, h) = opened.dimensions();
    let padded = embed(&opened, close_radius);
    let closed = erode(&dilate(&padded, close_radius), close_radius);
    crop_center(&closed, close_radius, w, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_radii_are_identity() {
        let mask = BinaryMask::from_fn(9, 9, |x, y| (x + 2 * y) % 3 == 0);
        assert_eq!(refine_mask(&mask, 0, 0), mask);
    }

    #[test]
    fn opening_removes_speckle() {
        let mut mask = BinaryMask::new(10, 10);
        mask.set(4, 4, true);
        assert!(refine_mask(&mask, 1, 0).is_empty());
        // A border speckle dies too.
        let mut mask = BinaryMask::new(10, 10);
        mask.set(0, 0, true);
        assert!(refine_mask(&mask, 1, 0).is_empty());
    }

    #[test]
    fn closing_fills_interior_hole() {
        let mut square = BinaryMask::from_fn(20, 20, |x, y| {
            (0..20).contains(&x) && (0..20).contains(&y)
        });
        // Brute-force oracle: closing a solid square with one hole yields the
        // solid square again.
        let solid = square.clone();
        square.set(10, 10, false);
        let refined = refine_mask(&square, 0, 1);
        assert_eq!(refined, solid);
    }

    #[test]
    fn closing_keeps_border_content() {
        // A blob flush against the border must not be eaten by the closing's
        // erosion step.
        let blob = BinaryMask::from_fn(12, 12, |x, y| x < 5 && y < 5);
        assert_eq!(refine_mask(&blob, 0, 2), blob);
    }

    #[test]
    fn open_close_same_disc_is_idempotent() {
        // Pseudo-random masks; idempotence of the open-close filter.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for radius in [1u32, 2] {
            for _ in 0..20 {
                let mask = BinaryMask::from_fn(24, 18, |_, _| next() % 100 < 45);
                let once = refine_mask(&mask, radius, radius);
                let twice = refine_mask(&once, radius, radius);
                assert_eq!(once, twice, "radius {radius}");
            }
        }
    }
}
