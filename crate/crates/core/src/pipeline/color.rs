//! BT.601 full-range RGB <-> YCbCr.

use super::ImagePlane;
use crate::{Error, Result};

#[inline]
fn clamp_round(v: f64) -> u8 {
    v.round().clamp(0.0, 255.0) as u8
}

pub fn rgb_pixel_to_ycbcr(r: u8, g: u8, b: u8) -> (u8, u8, u8) {
    let (r, g, b) = (r as f64, g as f64, b as f64);
    (
        clamp_round(0.299 * r + 0.587 * g + 0.114 * b),
        clamp_round(128.0 - 0.168736 * r - 0.331264 * g + 0.5 * b),
        clamp_round(128.0 + 0.5 * r - 0.418688 * g - 0.081312 * b),
    )
}

pub fn ycbcr_pixel_to_rgb(y: u8, cb: u8, cr: u8) -> (u8, u8, u8) {
    let (y, cb, cr) = (y as f64, cb as f64 - 128.0, cr as f64 - 128.0);
    (
        clamp_round(y + 1.402 * cr),
        clamp_round(y - 0.344136 * cb - 0.714136 * cr),
        clamp_round(y + 1.772 * cb),
    )
}

fn convert(
    planes: [&ImagePlane; 3],
    f: fn(u8, u8, u8) -> (u8, u8, u8),
) -> Result<[ImagePlane; 3]> {
    let [a, b, c] = planes;
    if !a.same_shape(b) || !a.same_shape(c) {
        return Err(Error::ShapeError("channels differ in size".into()));
    }
    let n = a.samples().len();
    let (mut x, mut y, mut z) = (Vec::with_capacity(n), Vec::with_capacity(n), Vec::with_capacity(n));
    for i in 0..n {
        let (p, q, r) = f(a.samples()[i], b.samples()[i], c.samples()[i]);
        x.push(p);
        y.push(q);
        z.push(r);
    }
    let (w, h) = (a.width(), a.height());
    Ok([
        ImagePlane::new(w, h, x)?,
        ImagePlane::new(w, h, y)?,
        ImagePlane::new(w, h, z)?,
    ])
}

/// Returns `[Y, Cb, Cr]`.
pub fn rgb_to_ycbcr(r: &ImagePlane, g: &ImagePlane, b: &ImagePlane) -> Result<[ImagePlane; 3]> {
    convert([r, g, b], rgb_pixel_to_ycbcr)
}

/// Returns `[R, G, B]`.
pub fn ycbcr_to_rgb(y: &ImagePlane, cb: &ImagePlane, cr: &ImagePlane) -> Result<[ImagePlane; 3]> {
    convert([y, cb, cr], ycbcr_pixel_to_rgb)
}
