//! Binary Netpbm (P5 graymap, P6 pixmap) with maxval 255.

use crate::pipeline::ImagePlane;
use crate::{Error, Result};

struct Header {
    width: usize,
    height: usize,
    raster_start: usize,
}

fn parse_header(bytes: &[u8], magic: &[u8; 2]) -> Result<Header> {
    if bytes.len() < 2 || &bytes[..2] != magic {
        return Err(Error::UnsupportedFormat);
    }
    let mut pos = 2;
    let mut fields = [0u64; 3];
    for (i, field) in fields.iter_mut().enumerate() {
        // whitespace and comments
        loop {
            match bytes.get(pos) {
                Some(b) if b.is_ascii_whitespace() => pos += 1,
                Some(b'#') => {
                    while !matches!(bytes.get(pos), None | Some(b'\n') | Some(b'\r')) {
                        pos += 1;
                    }
                }
                _ => break,
            }
        }
        let start = pos;
        while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
            pos += 1;
        }
        if start == pos {
            return Err(if pos >= bytes.len() {
                Error::TruncatedFile
            } else {
                Error::MalformedHeader(format!("expected a number for header field {i}"))
            });
        }
        let text = std::str::from_utf8(&bytes[start..pos]).unwrap();
        *field = text
            .parse()
            .map_err(|_| Error::MalformedHeader(format!("number {text} out of range")))?;
    }
    match bytes.get(pos) {
        Some(b) if b.is_ascii_whitespace() => pos += 1,
        None => return Err(Error::TruncatedFile),
        Some(_) => return Err(Error::MalformedHeader("no whitespace after maxval".into())),
    }
    let [width, height, maxval] = fields;
    if maxval != 255 {
        return Err(Error::UnsupportedDepth(maxval.min(u32::MAX as u64) as u32));
    }
    if width == 0 || height == 0 || width > u32::MAX as u64 || height > u32::MAX as u64 {
        return Err(Error::MalformedHeader(format!("bad dimensions {width}x{height}")));
    }
    Ok(Header {
        width: width as usize,
        height: height as usize,
        raster_start: pos,
    })
}

fn raster<'a>(bytes: &'a [u8], h: &Header, channels: usize) -> Result<&'a [u8]> {
    let len = h
        .width
        .checked_mul(h.height)
        .and_then(|n| n.checked_mul(channels))
        .ok_or(Error::TruncatedFile)?;
    bytes
        .get(h.raster_start..)
        .and_then(|r| r.get(..len))
        .ok_or(Error::TruncatedFile)
}

pub fn parse_pgm(bytes: &[u8]) -> Result<ImagePlane> {
    let h = parse_header(bytes, b"P5")?;
    let data = raster(bytes, &h, 1)?;
    ImagePlane::new(h.width, h.height, data.to_vec())
}

/// Returns `[R, G, B]` planes.
pub fn parse_ppm(bytes: &[u8]) -> Result<[ImagePlane; 3]> {
    let h = parse_header(bytes, b"P6")?;
    let data = raster(bytes, &h, 3)?;
    let channel = |c: usize| {
        ImagePlane::new(h.width, h.height, data.iter().skip(c).step_by(3).copied().collect())
    };
    Ok([channel(0)?, channel(1)?, channel(2)?])
}

pub fn write_pgm(plane: &ImagePlane) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", plane.width(), plane.height()).into_bytes();
    out.extend_from_slice(plane.samples());
    out
}

pub fn write_ppm(planes: &[ImagePlane; 3]) -> Result<Vec<u8>> {
    let [r, g, b] = planes;
    if !r.same_shape(g) || !r.same_shape(b) {
        return Err(Error::ShapeError("channels differ in size".into()));
    }
    let mut out = format!("P6\n{} {}\n255\n", r.width(), r.height()).into_bytes();
    out.reserve(3 * r.samples().len());
    for i in 0..r.samples().len() {
        out.extend([r.samples()[i], g.samples()[i], b.samples()[i]]);
    }
    Ok(out)
}
