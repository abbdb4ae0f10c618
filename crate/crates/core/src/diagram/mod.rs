//! The pillar-diagram calculus.
//!
//! A diagram lives in the standard `n`-box with `2n` marked points: top
//! points `1..n` left to right, bottom points `n+1..2n` right to left (the
//! code uses the same order, zero-based).  It is stored combinatorially: a
//! non-crossing perfect matching of the boundary points, the faces of the
//! arc arrangement (derived as cycles of boundary gaps), a forest of closed
//! loops each knowing the regions immediately outside and inside it, and a
//! nonnegative integer label per region.  Anticlockwise regions are
//! labelled zero; orientation is the checkerboard colouring seeded by the
//! rule that the face touching the left wall is anticlockwise, which also
//! makes every curve exit the box at odd marked points.
//!
//! Geometric coordinates are never stored: composition, reduction and trace
//! closure are region-merging operations.

mod ascii;
mod closure;
mod compose;
mod generators;
mod json;
mod reduce;

pub use ascii::render_ascii;
pub use closure::{close, content, tau_bullet, TraceDiagram};
pub use compose::compose;
pub use generators::{gen_b, gen_e, identity_diagram, iota, mu_tilde_diagrammatic, rho};
pub use json::{diagram_from_json, diagram_to_json};
pub use reduce::simplify;

use crate::{Error, Result};

/// A region of the diagram complement: a face of the arc arrangement or the
/// area immediately inside a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Region {
    pub label: u64,
    pub anticlockwise: bool,
}

/// A closed loop, referencing the regions immediately outside and inside.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoopNode {
    pub container: usize,
    pub interior: usize,
}

/// A pillar diagram in the standard `n`-box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PillarDiagram {
    n: usize,
    /// Involution on `0..2n` pairing the marked points.
    matching: Vec<usize>,
    /// Region id of the face touching each boundary gap; gap `g` lies
    /// between points `g` and `g + 1 (mod 2n)`.
    gap_region: Vec<usize>,
    regions: Vec<Region>,
    loops: Vec<LoopNode>,
}

/// `delta^delta_exp` times a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledDiagram {
    pub delta_exp: u64,
    pub diagram: PillarDiagram,
}

impl ScaledDiagram {
    pub fn of(diagram: PillarDiagram) -> Self {
        ScaledDiagram {
            delta_exp: 0,
            diagram,
        }
    }
}

impl PillarDiagram {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn matching(&self) -> &[usize] {
        &self.matching
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn loops(&self) -> &[LoopNode] {
        &self.loops
    }

    pub fn gap_region(&self) -> &[usize] {
        &self.gap_region
    }

    /// Number of arc faces (regions that touch the boundary).
    pub fn num_faces(&self) -> usize {
        self.regions.len() - self.loops.len()
    }

    /// Innermost enclosing loop of loop `l`, if any: the loop whose
    /// interior region contains `l`.
    pub fn loop_parent(&self, l: usize) -> Option<usize> {
        let container = self.loops[l].container;
        self.loops.iter().position(|m| m.interior == container)
    }

    /// Builds a loop-free diagram from a matching and face labels given in
    /// gap-cycle discovery order.
    pub fn from_matching(n: usize, matching: Vec<usize>, labels: &[u64]) -> Result<PillarDiagram> {
        validate_matching(n, &matching)?;
        let (gap_region, mut regions) = faces_from_matching(n, &matching);
        if labels.len() != regions.len() {
            return Err(Error::InvalidDiagram(format!(
                "expected {} face labels, got {}",
                regions.len(),
                labels.len()
            )));
        }
        for (r, &label) in regions.iter_mut().zip(labels) {
            if label > 0 && r.anticlockwise {
                return Err(Error::InvalidDiagram(
                    "anticlockwise face carries a nonzero label".into(),
                ));
            }
            r.label = label;
        }
        Ok(PillarDiagram {
            n,
            matching,
            gap_region,
            regions,
            loops: Vec::new(),
        })
    }

    /// Renumbers regions into canonical order: arc faces in gap-discovery
    /// order, then loop interiors sorted by nesting depth, container and
    /// label.  All constructors return canonical diagrams, so structural
    /// equality compares diagrams directly.
    pub(crate) fn canonical(&self) -> PillarDiagram {
        let (canon_gaps, faces) = faces_from_matching(self.n, &self.matching);
        let num_faces = faces.len();
        debug_assert_eq!(num_faces, self.num_faces());

        // Old face region id -> canonical face id.
        let mut region_map = vec![usize::MAX; self.regions.len()];
        for g in 0..2 * self.n {
            region_map[self.gap_region[g]] = canon_gaps[g];
        }

        // Loops sorted by depth, then resolved container, then label.
        let depth_of: Vec<usize> = (0..self.loops.len())
            .map(|mut l| {
                let mut d = 0;
                while let Some(p) = self.loop_parent(l) {
                    d += 1;
                    l = p;
                }
                d
            })
            .collect();
        let mut order: Vec<usize> = (0..self.loops.len()).collect();
        // Assign interior ids depth stratum by depth stratum so containers
        // are resolved before their nested loops are compared.
        let max_depth = depth_of.iter().copied().max().unwrap_or(0);
        let mut sorted: Vec<usize> = Vec::new();
        for depth in 0..=max_depth {
            let mut stratum: Vec<usize> = order
                .iter()
                .copied()
                .filter(|&l| depth_of[l] == depth)
                .collect();
            stratum.sort_by_key(|&l| {
                (
                    region_map[self.loops[l].container],
                    self.regions[self.loops[l].interior].label,
                    l,
                )
            });
            for &l in &stratum {
                region_map[self.loops[l].interior] = num_faces + sorted.len();
                sorted.push(l);
            }
        }
        order = sorted;

        let mut regions = vec![
            Region {
                label: 0,
                anticlockwise: false
            };
            self.regions.len()
        ];
        for (old, &new) in region_map.iter().enumerate() {
            regions[new] = self.regions[old];
        }
        let loops = order
            .iter()
            .map(|&l| LoopNode {
                container: region_map[self.loops[l].container],
                interior: region_map[self.loops[l].interior],
            })
            .collect();
        PillarDiagram {
            n: self.n,
            matching: self.matching.clone(),
            gap_region: canon_gaps,
            regions,
            loops,
        }
    }

    /// Structural invariants; used by tests and when deserializing.
    pub fn validate(&self) -> Result<()> {
        validate_matching(self.n, &self.matching)?;
        let (gap_region, faces) = faces_from_matching(self.n, &self.matching);
        if self.num_faces() != faces.len() {
            return Err(Error::InvalidDiagram("face count mismatch".into()));
        }
        for g in 0..2 * self.n {
            let r = self.gap_region[g];
            if r >= self.regions.len() {
                return Err(Error::InvalidDiagram("gap region out of range".into()));
            }
            if self.regions[r].anticlockwise != faces[gap_region[g]].anticlockwise {
                return Err(Error::InvalidDiagram("face orientation mismatch".into()));
            }
        }
        for (i, r) in self.regions.iter().enumerate() {
            if r.label > 0 && r.anticlockwise {
                return Err(Error::InvalidDiagram(format!(
                    "anticlockwise region {i} carries label {}",
                    r.label
                )));
            }
        }
        for l in self.loops.iter() {
            if l.container >= self.regions.len() || l.interior >= self.regions.len() {
                return Err(Error::InvalidDiagram("loop region out of range".into()));
            }
            if l.container == l.interior {
                return Err(Error::InvalidDiagram("loop has equal sides".into()));
            }
            if self.regions[l.container].anticlockwise == self.regions[l.interior].anticlockwise {
                return Err(Error::InvalidDiagram(
                    "loop sides have equal orientation".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Checks that `matching` is a fixed-point-free involution whose chords are
/// non-crossing in the boundary cycle.
fn validate_matching(n: usize, matching: &[usize]) -> Result<()> {
    let m = 2 * n;
    if matching.len() != m {
        return Err(Error::InvalidDiagram(format!(
            "matching has {} entries, expected {m}",
            matching.len()
        )));
    }
    for p in 0..m {
        let q = matching[p];
        if q >= m || q == p || matching[q] != p {
            return Err(Error::InvalidDiagram(
                "matching is not an involution".into(),
            ));
        }
    }
    let mut stack = Vec::new();
    for p in 0..m {
        if matching[p] > p {
            stack.push(p);
        } else if stack.pop() != Some(matching[p]) {
            return Err(Error::InvalidDiagram("matching has crossing chords".into()));
        }
    }
    Ok(())
}

/// Derives the faces of the arc arrangement.
///
/// Gap `g` and gap `matching[g + 1]` border the same face, so faces are the
/// cycles of that map.  A face is anticlockwise exactly when its gaps have
/// odd index; the left-wall gap `2n - 1` is odd, seeding the checkerboard.
fn faces_from_matching(n: usize, matching: &[usize]) -> (Vec<usize>, Vec<Region>) {
    let m = 2 * n;
    let mut gap_region = vec![usize::MAX; m];
    let mut regions = Vec::new();
    for start in 0..m {
        if gap_region[start] != usize::MAX {
            continue;
        }
        let id = regions.len();
        let anticlockwise = start % 2 == 1;
        let mut g = start;
        loop {
            debug_assert_eq!(g % 2, start % 2, "chords join opposite parities");
            gap_region[g] = id;
            g = matching[(g + 1) % m];
            if g == start {
                break;
            }
        }
        regions.push(Region {
            label: 0,
            anticlockwise,
        });
    }
    (gap_region, regions)
}

/// Small union-find used by composition and closure.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(size: usize) -> Self {
        UnionFind {
            parent: (0..size).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Relabels union-find classes over `regions` with compact indices, summing
/// labels and checking orientation agreement.  Returns the class map and
/// the merged regions.
pub(crate) fn merge_regions(uf: &mut UnionFind, regions: &[Region]) -> (Vec<usize>, Vec<Region>) {
    let mut class_of = vec![usize::MAX; regions.len()];
    let mut merged: Vec<Region> = Vec::new();
    for i in 0..regions.len() {
        let root = uf.find(i);
        if class_of[root] == usize::MAX {
            class_of[root] = merged.len();
            merged.push(Region {
                label: 0,
                anticlockwise: regions[root].anticlockwise,
            });
        }
        let c = class_of[root];
        class_of[i] = c;
        merged[c].label += regions[i].label;
        assert_eq!(
            merged[c].anticlockwise, regions[i].anticlockwise,
            "orientations agree across merged regions"
        );
    }
    (class_of, merged)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_diagram_faces() {
        let d = identity_diagram(6);
        assert_eq!(d.num_faces(), 7);
        assert_eq!(d.loops().len(), 0);
        d.validate().unwrap();
        let left = d.gap_region()[11];
        assert!(d.regions()[left].anticlockwise);
    }

    #[test]
    fn crossing_matchings_are_rejected() {
        // 0-2, 1-3 cross.
        let m = vec![2, 3, 0, 1, 9, 8, 7, 6, 5, 4, 11, 10];
        assert!(validate_matching(6, &m).is_err());
    }

    #[test]
    fn merge_regions_sums_labels() {
        let regions = vec![
            Region {
                label: 1,
                anticlockwise: false,
            },
            Region {
                label: 2,
                anticlockwise: false,
            },
            Region {
                label: 0,
                anticlockwise: true,
            },
        ];
        let mut uf = UnionFind::new(3);
        uf.union(0, 1);
        let (class_of, merged) = merge_regions(&mut uf, &regions);
        assert_eq!(class_of[0], class_of[1]);
        assert_ne!(class_of[0], class_of[2]);
        assert_eq!(merged[class_of[0]].label, 3);
    }
}
