//! Point files: CSV text and the `TPOT` little-endian binary layout.
//!
//! CSV: header `z_re,z_im,lambda,word_id,flavor`, LF line endings, floats
//! with 17 significant digits.
//!
//! TPOT: the bytes `TPOT`, a `u16` version, then 33-byte records
//! `(f64 z_re, f64 z_im, f64 lambda, u64 word_id, u8 flavor)`.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;
use std::str::FromStr;

use super::{DatasetError, Flavor, TeapotPoint};
use crate::TPOT_VERSION;

pub const CSV_HEADER: &str = "z_re,z_im,lambda,word_id,flavor";
pub const MAGIC: &[u8; 4] = b"TPOT";
pub const RECORD_BYTES: usize = 33;
/// Records are buffered and flushed this many at a time.
pub const CHUNK_RECORDS: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointFormat {
    Csv,
    Tpot,
}

impl FromStr for PointFormat {
    type Err = DatasetError;

    fn from_str(s: &str) -> Result<PointFormat, DatasetError> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(PointFormat::Csv),
            "tpot" | "binary" | "bin" => Ok(PointFormat::Tpot),
            other => Err(DatasetError::Domain(format!("unknown format {other:?}"))),
        }
    }
}

impl std::fmt::Display for PointFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PointFormat::Csv => "csv",
            PointFormat::Tpot => "tpot",
        })
    }
}

/// Incremental writer for either format.
pub struct PointWriter<W: Write> {
    out: W,
    format: PointFormat,
    pending: Vec<u8>,
    pending_records: usize,
}

impl<W: Write> PointWriter<W> {
    pub fn new(mut out: W, format: PointFormat) -> Result<PointWriter<W>, DatasetError> {
        match format {
            PointFormat::Csv => writeln!(out, "{CSV_HEADER}")?,
            PointFormat::Tpot => {
                out.write_all(MAGIC)?;
                out.write_all(&TPOT_VERSION.to_le_bytes())?;
            }
        }
        Ok(PointWriter {
            out,
            format,
            pending: Vec::new(),
            pending_records: 0,
        })
    }

    pub fn write(&mut self, points: &[TeapotPoint]) -> Result<(), DatasetError> {
        for p in points {
            match self.format {
                PointFormat::Csv => writeln!(
                    self.pending,
                    "{:.16e},{:.16e},{:.16e},{},{}",
                    p.z_re,
                    p.z_im,
                    p.lambda,
                    p.word_id,
                    p.flavor.as_str()
                )?,
                PointFormat::Tpot => {
                    self.pending.extend_from_slice(&p.z_re.to_le_bytes());
                    self.pending.extend_from_slice(&p.z_im.to_le_bytes());
                    self.pending.extend_from_slice(&p.lambda.to_le_bytes());
                    self.pending.extend_from_slice(&p.word_id.to_le_bytes());
                    self.pending.push(p.flavor.code());
                }
            }
            self.pending_records += 1;
            if self.pending_records == CHUNK_RECORDS {
                self.flush_chunk()?;
            }
        }
        Ok(())
    }

    fn flush_chunk(&mut self) -> Result<(), DatasetError> {
        self.out.write_all(&self.pending)?;
        self.pending.clear();
        self.pending_records = 0;
        Ok(())
    }

    pub fn finish(mut self) -> Result<W, DatasetError> {
        self.flush_chunk()?;
        self.out.flush()?;
        Ok(self.out)
    }
}

/// Writes a whole point set to `path`.
pub fn write_points(path: &Path, points: &[TeapotPoint], format: PointFormat) -> Result<(), DatasetError> {
    let mut w = PointWriter::new(BufWriter::new(File::create(path)?), format)?;
    w.write(points)?;
    w.finish()?;
    Ok(())
}

fn bad(offset: u64, message: impl Into<String>) -> DatasetError {
    DatasetError::Format {
        offset,
        message: message.into(),
    }
}

/// Reads either format, telling them apart by the magic bytes.
pub fn read_points(path: &Path) -> Result<Vec<TeapotPoint>, DatasetError> {
    let mut bytes = Vec::new();
    File::open(path)?.read_to_end(&mut bytes)?;
    parse_points(&bytes)
}

pub fn parse_points(bytes: &[u8]) -> Result<Vec<TeapotPoint>, DatasetError> {
    if bytes.starts_with(MAGIC) {
        parse_tpot(bytes)
    } else {
        parse_csv(bytes)
    }
}

fn parse_tpot(bytes: &[u8]) -> Result<Vec<TeapotPoint>, DatasetError> {
    if bytes.len() < 6 {
        return Err(bad(4, "truncated header"));
    }
    let version = u16::from_le_bytes([bytes[4], bytes[5]]);
    if version != TPOT_VERSION {
        return Err(bad(4, format!("unsupported version {version}")));
    }
    let body = &bytes[6..];
    if !body.len().is_multiple_of(RECORD_BYTES) {
        let off = 6 + (body.len() / RECORD_BYTES * RECORD_BYTES) as u64;
        return Err(bad(off, "truncated record"));
    }
    body.chunks_exact(RECORD_BYTES)
        .enumerate()
        .map(|(i, r)| {
            let f = |k: usize| f64::from_le_bytes(r[k..k + 8].try_into().expect("8 bytes"));
            let flavor = Flavor::from_code(r[32])
                .ok_or_else(|| bad((6 + i * RECORD_BYTES + 32) as u64, format!("bad flavor byte {}", r[32])))?;
            Ok(TeapotPoint {
                z_re: f(0),
                z_im: f(8),
                lambda: f(16),
                word_id: u64::from_le_bytes(r[24..32].try_into().expect("8 bytes")),
                flavor,
            })
        })
        .collect()
}

fn parse_csv(bytes: &[u8]) -> Result<Vec<TeapotPoint>, DatasetError> {
    let mut reader = BufReader::new(bytes);
    let mut line = String::new();
    let mut offset = 0u64;
    let n = reader.read_line(&mut line).map_err(|_| bad(0, "not UTF-8"))?;
    if line.trim_end_matches('\n') != CSV_HEADER {
        return Err(bad(0, "missing CSV header"));
    }
    offset += n as u64;
    let mut out = Vec::new();
    loop {
        line.clear();
        let n = reader.read_line(&mut line).map_err(|_| bad(offset, "not UTF-8"))?;
        if n == 0 {
            break;
        }
        let text = line.trim_end_matches('\n');
        if !text.is_empty() {
            out.push(parse_row(text).map_err(|m| bad(offset, m))?);
        }
        offset += n as u64;
    }
    Ok(out)
}

fn parse_row(text: &str) -> Result<TeapotPoint, String> {
    let fields: Vec<&str> = text.split(',').collect();
    if fields.len() != 5 {
        return Err(format!("expected 5 fields, found {}", fields.len()));
    }
    let num = |s: &str| s.parse::<f64>().map_err(|_| format!("bad number {s:?}"));
    let flavor = match fields[4] {
        "periodic" => Flavor::Periodic,
        "preperiodic" => Flavor::Preperiodic,
        other => return Err(format!("bad flavor {other:?}")),
    };
    Ok(TeapotPoint {
        z_re: num(fields[0])?,
        z_im: num(fields[1])?,
        lambda: num(fields[2])?,
        word_id: fields[3].parse().map_err(|_| format!("bad word id {:?}", fields[3]))?,
        flavor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<TeapotPoint> {
        vec![
            TeapotPoint {
                z_re: (1.0 + 5f64.sqrt()) / 2.0,
                z_im: 0.0,
                lambda: (1.0 + 5f64.sqrt()) / 2.0,
                word_id: 12,
                flavor: Flavor::Periodic,
            },
            TeapotPoint {
                z_re: -0.1,
                z_im: 1.0 / 3.0,
                lambda: 1.9,
                word_id: (3 << 56) | 77,
                flavor: Flavor::Preperiodic,
            },
        ]
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let mut w = PointWriter::new(Vec::new(), PointFormat::Csv).unwrap();
        w.write(&sample()).unwrap();
        let bytes = w.finish().unwrap();
        let text = String::from_utf8(bytes.clone()).unwrap();
        assert!(text.starts_with("z_re,z_im,lambda,word_id,flavor\n"));
        assert!(!text.contains('\r'));
        assert_eq!(parse_points(&bytes).unwrap(), sample());
    }

    #[test]
    fn tpot_round_trip_and_layout() {
        let mut w = PointWriter::new(Vec::new(), PointFormat::Tpot).unwrap();
        w.write(&sample()).unwrap();
        let bytes = w.finish().unwrap();
        assert_eq!(&bytes[..4], b"TPOT");
        assert_eq!(&bytes[4..6], &[1, 0]);
        assert_eq!(bytes.len(), 6 + 2 * RECORD_BYTES);
        assert_eq!(parse_points(&bytes).unwrap(), sample());
    }

    #[test]
    fn errors_name_offsets() {
        let e = parse_points(b"z_re,z_im,lambda,word_id,flavor\n1,2,3,4,periodic\n1,2\n").unwrap_err();
        assert!(matches!(e, DatasetError::Format { offset: 49, .. }), "{e}");
        let e = parse_points(b"TPOT\x01\x00abc").unwrap_err();
        assert!(matches!(e, DatasetError::Format { offset: 6, .. }));
    }
}
