//! Trace closure on the standard cone and the diagrammatic trace.

use super::{merge_regions, PillarDiagram, Region, ScaledDiagram, UnionFind};

/// The closure of a box diagram on the standard cone: every curve becomes a
/// loop on a disc, the boundary is gone, and the outer region (the image of
/// the left wall face) is anticlockwise with label 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceDiagram {
    n: usize,
    regions: Vec<Region>,
    outer: usize,
    num_loops: usize,
}

impl TraceDiagram {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn outer(&self) -> usize {
        self.outer
    }

    pub fn num_loops(&self) -> usize {
        self.num_loops
    }
}

/// Identifies top point `i` with the bottom point directly beneath it.
pub fn close(d: &PillarDiagram) -> TraceDiagram {
    let n = d.rank();
    let m = 2 * n;

    let mut uf = UnionFind::new(d.regions().len());
    for i in 1..n {
        // The gluing interval at x in (i, i+1) merges the faces at the top
        // gap i-1 and the bottom gap 2n-1-i; the wall intervals are self
        // merges.
        uf.union(d.gap_region()[i - 1], d.gap_region()[m - 1 - i]);
    }
    let (class_of, regions) = merge_regions(&mut uf, d.regions());

    // Arcs concatenate into cycles under the gluing p <-> 2n-1-p.
    let mut seen = vec![false; m];
    let mut cycles = 0;
    for start in 0..m {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut p = start;
        loop {
            seen[p] = true;
            let q = d.matching()[p];
            seen[q] = true;
            p = m - 1 - q;
            if p == start {
                break;
            }
        }
    }

    let outer = class_of[d.gap_region()[m - 1]];
    let out = TraceDiagram {
        n,
        regions,
        outer,
        num_loops: d.loops().len() + cycles,
    };
    assert!(
        out.regions[outer].anticlockwise && out.regions[outer].label == 0,
        "outer region is anticlockwise and unlabelled"
    );
    assert_eq!(
        out.regions.len(),
        out.num_loops + 1,
        "disc Euler count: regions = loops + 1"
    );
    out
}

/// The content of a trace diagram: the sum of `g(label)` over the regions
/// enclosed by at least one loop (every region except the outer one), with
/// `g(0) = 1` and `g(c) = c - 1` for `c >= 1`.
pub fn content(t: &TraceDiagram) -> u64 {
    t.regions
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != t.outer)
        .map(|(_, r)| if r.label == 0 { 1 } else { r.label - 1 })
        .sum()
}

/// The diagrammatic trace exponent: `tau(D) = delta^(delta_exp + content)`.
pub fn tau_bullet(sd: &ScaledDiagram) -> u64 {
    sd.delta_exp + content(&close(&sd.diagram))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{compose, gen_b, gen_e, identity_diagram, iota, rho, simplify};

    #[test]
    fn closed_identity_is_n_nested_loops() {
        let t = close(&identity_diagram(6));
        assert_eq!(t.num_loops(), 6);
        assert_eq!(t.regions().len(), 7);
        assert_eq!(content(&t), 6);
    }

    #[test]
    fn tau_of_generators() {
        assert_eq!(tau_bullet(&ScaledDiagram::of(identity_diagram(6))), 6);
        for k in 1..6 {
            let e = ScaledDiagram::of(gen_e(k, 6).unwrap());
            assert_eq!(tau_bullet(&e), 5);
        }
        let b = ScaledDiagram::of(gen_b(3, 6).unwrap());
        assert_eq!(tau_bullet(&b), 5);
    }

    #[test]
    fn tau_is_blind_to_reduction() {
        let words: [&[usize]; 5] = [
            &[2, 2],
            &[2, 3, 2],
            &[0, 3, 0],
            &[1, 0, 3, 0, 1, 2],
            &[3, 0, 2, 4, 3, 0, 2],
        ];
        for word in words {
            let mut raw = ScaledDiagram::of(identity_diagram(6));
            for &s in word {
                let gen = if s == 0 {
                    gen_b(3, 6).unwrap()
                } else {
                    gen_e(s, 6).unwrap()
                };
                raw = compose(&raw, &ScaledDiagram::of(gen)).unwrap();
            }
            assert_eq!(tau_bullet(&raw), tau_bullet(&simplify(&raw)), "{word:?}");
        }
    }

    #[test]
    fn tau_respects_the_braid_image_of_the_branch_generator() {
        // B3 E3 B3 and B3 represent the same element; their traces agree.
        let b = ScaledDiagram::of(gen_b(3, 6).unwrap());
        let e3 = ScaledDiagram::of(gen_e(3, 6).unwrap());
        let lhs = compose(&compose(&b, &e3).unwrap(), &b).unwrap();
        assert_eq!(tau_bullet(&lhs), tau_bullet(&b));
    }

    #[test]
    fn iota_multiplies_tau_by_delta() {
        let d = rho(&[1, 2, 4, 0, 5], 6).unwrap();
        let lifted = ScaledDiagram {
            delta_exp: d.delta_exp,
            diagram: iota(&d.diagram),
        };
        assert_eq!(tau_bullet(&lifted), tau_bullet(&d) + 1);
    }
}
