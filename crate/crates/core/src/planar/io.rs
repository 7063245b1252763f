//! Graph streams: plantri-compatible `planar_code` and JSON lines.

use std::io::{BufRead, Read, Write};

use super::graph::{GraphJson, PlanarGraph};
use crate::error::{Error, Result};

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

/// Decodes a complete `planar_code` byte stream.
pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<PlanarGraph>> {
    if !bytes.starts_with(PLANAR_CODE_HEADER) {
        return Err(Error::Format {
            offset: 0,
            reason: "missing >>planar_code<< header".into(),
        });
    }
    let mut pos = PLANAR_CODE_HEADER.len();
    let mut graphs = Vec::new();
    while pos < bytes.len() {
        let record_start = pos;
        let n = bytes[pos] as usize;
        if n == 0 {
            return Err(Error::Format {
                offset: pos,
                reason: "zero vertex count (two-byte records are not supported)".into(),
            });
        }
        pos += 1;
        let mut rotation = Vec::with_capacity(n);
        for v in 0..n {
            let mut list = Vec::with_capacity(4);
            loop {
                let Some(&b) = bytes.get(pos) else {
                    return Err(Error::Format {
                        offset: pos,
                        reason: format!("truncated record: vertex {} of {n} unterminated", v + 1),
                    });
                };
                if b == 0 {
                    pos += 1;
                    break;
                }
                if b as usize > n {
                    return Err(Error::Format {
                        offset: pos,
                        reason: format!("neighbour index {b} exceeds vertex count {n}"),
                    });
                }
                list.push(b as usize - 1);
                pos += 1;
            }
            rotation.push(list);
        }
        let g = PlanarGraph::new(rotation).map_err(|e| Error::Format {
            offset: record_start,
            reason: e.to_string(),
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}

pub fn read_planar_code<R: Read>(mut reader: R) -> Result<Vec<PlanarGraph>> {
    let mut bytes = Vec::new();
    reader.read_to_end(&mut bytes)?;
    parse_planar_code(&bytes)
}

/// Encodes one graph record (without header).
pub fn encode_planar_code(g: &PlanarGraph) -> Result<Vec<u8>> {
    let n = g.vertex_count();
    if n > 255 {
        return Err(Error::Domain(format!(
            "planar_code supports at most 255 vertices, graph has {n}"
        )));
    }
    let mut out = Vec::with_capacity(1 + 2 * g.edge_count() + n);
    out.push(n as u8);
    for r in g.rotation() {
        out.extend(r.iter().map(|&w| (w + 1) as u8));
        out.push(0);
    }
    Ok(out)
}

pub fn write_planar_code<'a, W, I>(graphs: I, mut writer: W) -> Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a PlanarGraph>,
{
    writer.write_all(PLANAR_CODE_HEADER)?;
    for g in graphs {
        writer.write_all(&encode_planar_code(g)?)?;
    }
    Ok(())
}

/// Reads one JSON graph object per non-empty line.
pub fn read_json_lines<R: BufRead>(reader: R) -> Result<Vec<PlanarGraph>> {
    let mut graphs = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let json: GraphJson = serde_json::from_str(&line)?;
        graphs.push(PlanarGraph::from_json(&json)?);
    }
    Ok(graphs)
}

pub fn write_json_lines<'a, W, I>(graphs: I, mut writer: W) -> Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a PlanarGraph>,
{
    for g in graphs {
        serde_json::to_writer(&mut writer, &g.to_json())?;
        writer.write_all(b"\n")?;
    }
    Ok(())
}
