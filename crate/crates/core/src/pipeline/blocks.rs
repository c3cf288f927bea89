//! 8x8 tiling. Partial edge blocks are padded by replicating the last
//! column/row of the plane.

use super::ImagePlane;

pub const BLOCK_SIDE: usize = 8;
pub const BLOCK_LEN: usize = BLOCK_SIDE * BLOCK_SIDE;

/// 64 values in row-major order.
pub type Block = [f64; BLOCK_LEN];

/// Blocks across and down for a `width` x `height` plane.
pub fn block_grid(width: usize, height: usize) -> (usize, usize) {
    (width.div_ceil(BLOCK_SIDE), height.div_ceil(BLOCK_SIDE))
}

pub fn split_blocks(plane: &ImagePlane) -> Vec<Block> {
    let (w, h) = (plane.width(), plane.height());
    let (bx, by) = block_grid(w, h);
    let mut out = Vec::with_capacity(bx * by);
    for j in 0..by {
        for i in 0..bx {
            let mut block = [0.0; BLOCK_LEN];
            for r in 0..BLOCK_SIDE {
                let y = (j * BLOCK_SIDE + r).min(h - 1);
                for c in 0..BLOCK_SIDE {
                    let x = (i * BLOCK_SIDE + c).min(w - 1);
                    block[r * BLOCK_SIDE + c] = plane.get(x, y) as f64;
                }
            }
            out.push(block);
        }
    }
    out
}

/// Reassembles a `width` x `height` plane, rounding and clamping samples to
/// `0..=255` and dropping padding.
pub fn merge_blocks(blocks: &[Block], width: usize, height: usize) -> ImagePlane {
    let (bx, _) = block_grid(width, height);
    ImagePlane::from_fn(width, height, |x, y| {
        let b = &blocks[(y / BLOCK_SIDE) * bx + x / BLOCK_SIDE];
        b[(y % BLOCK_SIDE) * BLOCK_SIDE + x % BLOCK_SIDE]
            .round()
            .clamp(0.0, 255.0) as u8
    })
}
