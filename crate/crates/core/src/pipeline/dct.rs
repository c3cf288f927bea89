//! Orthonormal 8x8 DCT-II and its inverse.
//!
//! `F(u,v) = 1/4 C(u) C(v) sum_x sum_y f(x,y) cos((2x+1)u pi/16) cos((2y+1)v pi/16)`
//! with `C(0) = 1/sqrt(2)`, otherwise 1. `u` indexes rows and `v` columns.

use std::sync::OnceLock;

use super::blocks::{Block, BLOCK_LEN, BLOCK_SIDE};

/// `basis[u][x] = C(u)/2 * cos((2x+1)u pi/16)`; the 1/4 factor is split
/// evenly between the two passes.
fn basis() -> &'static [[f64; BLOCK_SIDE]; BLOCK_SIDE] {
    static BASIS: OnceLock<[[f64; BLOCK_SIDE]; BLOCK_SIDE]> = OnceLock::new();
    BASIS.get_or_init(|| {
        let mut t = [[0.0; BLOCK_SIDE]; BLOCK_SIDE];
        for (u, row) in t.iter_mut().enumerate() {
            let c = if u == 0 { std::f64::consts::FRAC_1_SQRT_2 } else { 1.0 };
            for (x, v) in row.iter_mut().enumerate() {
                *v = 0.5 * c * (((2 * x + 1) * u) as f64 * std::f64::consts::PI / 16.0).cos();
            }
        }
        t
    })
}

pub fn fdct(block: &Block) -> Block {
    let t = basis();
    let mut tmp = [0.0; BLOCK_LEN];
    // rows: tmp[x][v] = sum_y f[x][y] t[v][y]
    for x in 0..BLOCK_SIDE {
        for v in 0..BLOCK_SIDE {
            tmp[x * BLOCK_SIDE + v] = (0..BLOCK_SIDE)
                .map(|y| block[x * BLOCK_SIDE + y] * t[v][y])
                .sum();
        }
    }
    let mut out = [0.0; BLOCK_LEN];
    for u in 0..BLOCK_SIDE {
        for v in 0..BLOCK_SIDE {
            out[u * BLOCK_SIDE + v] = (0..BLOCK_SIDE)
                .map(|x| t[u][x] * tmp[x * BLOCK_SIDE + v])
                .sum();
        }
    }
    out
}

pub fn idct(coeffs: &Block) -> Block {
    let t = basis();
    let mut tmp = [0.0; BLOCK_LEN];
    // tmp[x][v] = sum_u t[u][x] F[u][v]
    for x in 0..BLOCK_SIDE {
        for v in 0..BLOCK_SIDE {
            tmp[x * BLOCK_SIDE + v] = (0..BLOCK_SIDE)
                .map(|u| t[u][x] * coeffs[u * BLOCK_SIDE + v])
                .sum();
        }
    }
    let mut out = [0.0; BLOCK_LEN];
    for x in 0..BLOCK_SIDE {
        for y in 0..BLOCK_SIDE {
            out[x * BLOCK_SIDE + y] = (0..BLOCK_SIDE)
                .map(|v| tmp[x * BLOCK_SIDE + v] * t[v][y])
                .sum();
        }
    }
    out
}
