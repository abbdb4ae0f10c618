//! JSON serialization of pillar diagrams.
//!
//! Schema (version 1):
//!
//! ```json
//! {
//!   "version": 1,
//!   "rank": 6,
//!   "matching": [1, 0, 9, ...],
//!   "faces": [{"label": 0}, ...],
//!   "loops": [{"parent": null, "face": 2, "label": 1}, ...]
//! }
//! ```
//!
//! `matching` is the boundary involution on the `2n` zero-based marked
//! points.  `faces` lists the arc-face labels in gap-discovery order (the
//! face of gap 0 first, and so on).  Each loop names its nesting `parent`
//! loop, or the `face` hosting it when it is outermost, plus the label of
//! its immediate interior.  Loops are listed parents-first.

use serde::{Deserialize, Serialize};

use super::{faces_from_matching, LoopNode, PillarDiagram, Region};
use crate::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
struct DiagramJson {
    version: u32,
    rank: usize,
    matching: Vec<usize>,
    faces: Vec<FaceJson>,
    loops: Vec<LoopJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct FaceJson {
    label: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct LoopJson {
    parent: Option<usize>,
    face: Option<usize>,
    label: u64,
}

pub fn diagram_to_json(d: &PillarDiagram) -> String {
    let d = d.canonical();
    let num_faces = d.num_faces();
    let faces = (0..num_faces)
        .map(|f| FaceJson {
            label: d.regions[f].label,
        })
        .collect();
    let loops = d
        .loops
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let parent = d.loop_parent(i);
            LoopJson {
                parent,
                face: if parent.is_none() {
                    Some(l.container)
                } else {
                    None
                },
                label: d.regions[l.interior].label,
            }
        })
        .collect();
    let doc = DiagramJson {
        version: 1,
        rank: d.n,
        matching: d.matching.clone(),
        faces,
        loops,
    };
    serde_json::to_string_pretty(&doc).expect("diagram serialization cannot fail")
}

pub fn diagram_from_json(text: &str) -> Result<PillarDiagram> {
    let doc: DiagramJson =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
    if doc.version != 1 {
        return Err(Error::InvalidDiagram(format!(
            "unsupported schema version {}",
            doc.version
        )));
    }
    super::validate_matching(doc.rank, &doc.matching)?;
    let (gap_region, mut regions) = faces_from_matching(doc.rank, &doc.matching);
    let num_faces = regions.len();
    if doc.faces.len() != num_faces {
        return Err(Error::InvalidDiagram(format!(
            "expected {num_faces} faces, got {}",
            doc.faces.len()
        )));
    }
    for (r, f) in regions.iter_mut().zip(&doc.faces) {
        r.label = f.label;
    }
    let mut loops = Vec::with_capacity(doc.loops.len());
    for (i, l) in doc.loops.iter().enumerate() {
        let container = match (l.parent, l.face) {
            (Some(p), None) if p < i => num_faces + p,
            (None, Some(f)) if f < num_faces => f,
            _ => {
                return Err(Error::InvalidDiagram(format!(
                    "loop {i} must name an earlier parent or a valid face"
                )))
            }
        };
        let anticlockwise = !regions[container].anticlockwise;
        regions.push(Region {
            label: l.label,
            anticlockwise,
        });
        loops.push(LoopNode {
            container,
            interior: num_faces + i,
        });
    }
    let d = PillarDiagram {
        n: doc.rank,
        matching: doc.matching,
        gap_region,
        regions,
        loops,
    };
    d.validate()?;
    Ok(d.canonical())
}
