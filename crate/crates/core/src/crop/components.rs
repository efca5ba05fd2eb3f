use crate::imaging::BinaryMask;

/// Connected components of the set pixels under 8-connectivity, in row-major
/// order of each component's first pixel (which is also its lexicographically
/// smallest (y, x) pixel).
pub fn connected_components(mask: &BinaryMask) -> Vec<Vec<(u32, u32)>> {
    let (w, h) = mask.dimensions();
    let mut visited = vec![false; w as usize * h as usize];
    let idx = |x: u32, y: u32| y as usize * w as usize + x as usize;
    let mut components = Vec::new();
    let mut stack = Vec::new();

    for y in 0..h {
        for x in 0..w {
            if !mask.get(x, y) || visited[idx(x, y)] {
                continue;
            }
            let mut pixels = Vec::new();
            visited[idx(x, y)] = true;
            stack.push((x, y));
            while let Some((cx, cy)) = stack.pop() {
                pixels.push((cx, cy));
                for dy in -1i64..=1 {
                    for dx in -1i64..=1 {
                        if dx == 0 && dy == 0 {
                            continue;
                        }
                        let nx = cx as i64 + dx;
                        let ny = cy as i64 + dy;
                        if nx < 0 || ny < 0 || nx >= i64::from(w) || ny >= i64::from(h) {
                            continue;
                        }
                        let (nx, ny) = (nx as u32, ny as u32);
                        if mask.get(nx, ny) && !visited[idx(nx, ny)] {
                            visited[idx(nx, ny)] = true;
                            stack.push((nx, ny));
                        }
                    }
                }
            }
            components.push(pixels);
        }
    }
    components
}

/// The largest component as a canvas-sized mask; size ties go to the
/// component containing the lexicographically smallest (y, x) pixel.
/// Returns `None` for an empty mask.
pub fn largest_component(mask: &BinaryMask) -> Option<BinaryMask> {
    let components = connected_components(mask);
    // First maximal wins: components are already ordered by first pixel.
    let best = components.iter().enumerate().fold(None, |acc, (i, c)| {
        match acc {
            Some((_, best_len)) if c.len() <= best_len => acc,
            _ => Some((i, c.len())),
        }
    })?;
    let mut out = BinaryMask::new(mask.width(), mask.height());
    for &(x, y) in &components[best.0] {
        out.set(x, y, true);
    }
    Some(out)
}
