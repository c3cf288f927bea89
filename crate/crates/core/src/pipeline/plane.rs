use crate::{Error, Result};

/// One 8-bit image channel, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImagePlane {
    width: usize,
    height: usize,
    samples: Vec<u8>,
}

impl ImagePlane {
    pub fn new(width: usize, height: usize, samples: Vec<u8>) -> Result<Self> {
        if width.checked_mul(height) != Some(samples.len()) {
            return Err(Error::ShapeError(format!(
                "{width}x{height} plane needs {} samples, got {}",
                width.saturating_mul(height),
                samples.len()
            )));
        }
        Ok(Self {
            width,
            height,
            samples,
        })
    }

    pub fn filled(width: usize, height: usize, value: u8) -> Self {
        Self {
            width,
            height,
            samples: vec![value; width * height],
        }
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> u8) -> Self {
        let mut samples = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                samples.push(f(x, y));
            }
        }
        Self {
            width,
            height,
            samples,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn samples(&self) -> &[u8] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<u8> {
        self.samples
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.samples[y * self.width + x]
    }

    pub fn same_shape(&self, other: &ImagePlane) -> bool {
        self.width == other.width && self.height == other.height
    }
}

/// Peak signal-to-noise ratio in dB; infinite for identical planes.
pub fn psnr(a: &ImagePlane, b: &ImagePlane) -> Result<f64> {
    if !a.same_shape(b) {
        return Err(Error::ShapeError("PSNR needs equal-size planes".into()));
    }
    let sse: f64 = a
        .samples
        .iter()
        .zip(&b.samples)
        .map(|(&x, &y)| {
            let d = x as f64 - y as f64;
            d * d
        })
        .sum();
    if sse == 0.0 {
        return Ok(f64::INFINITY);
    }
    let mse = sse / a.samples.len() as f64;
    Ok(10.0 * (255.0 * 255.0 / mse).log10())
}
