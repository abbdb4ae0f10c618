//! Stacking composition of pillar diagrams.
//!
//! The product places the first diagram on top of the second.  Curves
//! concatenate across the interface; faces merge across the `n + 1` open
//! interface intervals, adding their labels; chains that close up through
//! the interface become new loops.  The two regions beside a new loop are
//! read off at its leftmost interface crossing: walking the interface from
//! the left wall, the interval before that crossing is outside the loop and
//! the interval after it is inside.

use super::{merge_regions, LoopNode, PillarDiagram, ScaledDiagram, UnionFind};
use crate::{Error, Result};

pub fn compose(top: &ScaledDiagram, bottom: &ScaledDiagram) -> Result<ScaledDiagram> {
    Ok(ScaledDiagram {
        delta_exp: top.delta_exp + bottom.delta_exp,
        diagram: compose_diagrams(&top.diagram, &bottom.diagram)?,
    })
}

/// Gap of the face bordering interface interval `j` (an x-range `(j, j+1)`)
/// from the top box side.
fn top_gap(n: usize, j: usize) -> usize {
    match j {
        0 => 2 * n - 1,
        _ if j == n => n - 1,
        _ => 2 * n - 1 - j,
    }
}

/// Same from the bottom box side.
fn bottom_gap(n: usize, j: usize) -> usize {
    match j {
        0 => 2 * n - 1,
        _ if j == n => n - 1,
        _ => j - 1,
    }
}

pub fn compose_diagrams(top: &PillarDiagram, bottom: &PillarDiagram) -> Result<PillarDiagram> {
    let n = top.rank();
    if bottom.rank() != n {
        return Err(Error::RankMismatch(n, bottom.rank()));
    }
    let m = 2 * n;

    // Region id space: top regions, then bottom regions.
    let r_top = top.regions.len();
    let mut uf = UnionFind::new(r_top + bottom.regions.len());
    for j in 0..=n {
        uf.union(
            top.gap_region[top_gap(n, j)],
            r_top + bottom.gap_region[bottom_gap(n, j)],
        );
    }

    // Boundary-to-boundary curves.  New point ids: the top box keeps its
    // top points 0..n-1, the bottom box keeps its bottom points n..2n-1.
    // Interface position x (1..=n) is the top box bottom point 2n - x glued
    // to the bottom box top point x - 1.
    let mut matching = vec![usize::MAX; m];
    let mut seen_x = vec![false; n + 1];
    for start in 0..m {
        if matching[start] != usize::MAX {
            continue;
        }
        let mut in_top = start < n;
        let mut pt = start;
        let end = loop {
            let q = if in_top {
                top.matching[pt]
            } else {
                bottom.matching[pt]
            };
            if in_top && q < n {
                break q;
            }
            if !in_top && q >= n {
                break q;
            }
            if in_top {
                let x = m - q;
                seen_x[x] = true;
                in_top = false;
                pt = x - 1;
            } else {
                let x = q + 1;
                seen_x[x] = true;
                in_top = true;
                pt = m - x;
            }
        };
        matching[start] = end;
        matching[end] = start;
    }

    // Chains that never reach the outer boundary close into new loops.
    // Record the leftmost interface crossing of each.
    let mut new_loop_leftmost: Vec<usize> = Vec::new();
    for x0 in 1..=n {
        if seen_x[x0] {
            continue;
        }
        let mut leftmost = x0;
        let mut x = x0;
        loop {
            seen_x[x] = true;
            let up = bottom.matching[x - 1];
            debug_assert!(up < n, "interface cycles stay on the gluing line");
            let x_up = up + 1;
            seen_x[x_up] = true;
            leftmost = leftmost.min(x_up);
            let down = top.matching[m - x_up];
            debug_assert!(down >= n);
            let x_next = m - down;
            leftmost = leftmost.min(x_next);
            if x_next == x0 {
                break;
            }
            x = x_next;
        }
        new_loop_leftmost.push(leftmost);
    }

    let mut all_regions = top.regions.clone();
    all_regions.extend(bottom.regions.iter().copied());
    let (class_of, regions) = merge_regions(&mut uf, &all_regions);

    // Carried-over loops keep their sides through the class map.
    let mut loops: Vec<LoopNode> = top
        .loops
        .iter()
        .map(|l| LoopNode {
            container: class_of[l.container],
            interior: class_of[l.interior],
        })
        .chain(bottom.loops.iter().map(|l| LoopNode {
            container: class_of[r_top + l.container],
            interior: class_of[r_top + l.interior],
        }))
        .collect();
    for &x in &new_loop_leftmost {
        let interior = class_of[top.gap_region[top_gap(n, x)]];
        let container = class_of[top.gap_region[top_gap(n, x - 1)]];
        assert_ne!(interior, container, "loop sides are distinct regions");
        loops.push(LoopNode {
            container,
            interior,
        });
    }

    // Rebuild the face structure of the new matching and identify each new
    // face with its merged class.
    let (new_gaps, new_faces) = super::faces_from_matching(n, &matching);
    let old_region_of_gap = |g: usize| -> usize {
        if g < n - 1 {
            class_of[top.gap_region[g]]
        } else if g == n - 1 || g == m - 1 {
            class_of[top.gap_region[g]]
        } else {
            class_of[r_top + bottom.gap_region[g]]
        }
    };
    let mut gap_region = vec![usize::MAX; m];
    for g in 0..m {
        let class = old_region_of_gap(g);
        gap_region[g] = class;
        assert_eq!(
            regions[class].anticlockwise, new_faces[new_gaps[g]].anticlockwise,
            "gap orientation is stable under composition"
        );
    }
    // All gaps of one new face agree on the class.
    for g in 0..m {
        for h in 0..m {
            if new_gaps[g] == new_gaps[h] {
                assert_eq!(gap_region[g], gap_region[h], "face classes are well defined");
            }
        }
    }
    // Euler count: faces + loops = regions.
    assert_eq!(
        regions.len(),
        new_faces.len() + loops.len(),
        "region count matches Euler formula"
    );

    let out = PillarDiagram {
        n,
        matching,
        gap_region,
        regions,
        loops,
    }
    .canonical();
    debug_assert!(out.validate().is_ok());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{gen_b, gen_e, identity_diagram};

    #[test]
    fn identity_is_neutral() {
        let id = ScaledDiagram::of(identity_diagram(6));
        let e2 = ScaledDiagram::of(gen_e(2, 6).unwrap());
        assert_eq!(compose(&id, &e2).unwrap(), e2);
        assert_eq!(compose(&e2, &id).unwrap(), e2);
    }

    #[test]
    fn cup_cap_squared_makes_a_loop() {
        let e2 = ScaledDiagram::of(gen_e(2, 6).unwrap());
        let sq = compose(&e2, &e2).unwrap();
        assert_eq!(sq.delta_exp, 0);
        assert_eq!(sq.diagram.loops().len(), 1);
        assert_eq!(sq.diagram.matching(), e2.diagram.matching());
        let l = sq.diagram.loops()[0];
        assert_ne!(l.container, l.interior);
        assert_eq!(sq.diagram.regions()[l.interior].label, 0);
    }

    #[test]
    fn pillar_squared_adds_labels() {
        let b = ScaledDiagram::of(gen_b(3, 6).unwrap());
        let sq = compose(&b, &b).unwrap();
        assert_eq!(sq.diagram.loops().len(), 0);
        assert_eq!(sq.diagram.matching(), identity_diagram(6).matching());
        let labelled: Vec<u64> = sq
            .diagram
            .regions()
            .iter()
            .filter(|r| r.label > 0)
            .map(|r| r.label)
            .collect();
        assert_eq!(labelled, vec![2]);
    }

    #[test]
    fn rank_mismatch_rejected() {
        let a = ScaledDiagram::of(identity_diagram(6));
        let b = ScaledDiagram::of(identity_diagram(7));
        assert!(compose(&a, &b).is_err());
    }

    fn raw_word(word: &[usize], n: usize) -> ScaledDiagram {
        let mut acc = ScaledDiagram::of(identity_diagram(n));
        for &s in word {
            let gen = if s == 0 {
                gen_b(3, n).unwrap()
            } else {
                gen_e(s, n).unwrap()
            };
            acc = compose(&acc, &ScaledDiagram::of(gen)).unwrap();
            acc.diagram.validate().unwrap();
        }
        acc
    }

    #[test]
    fn unreduced_chains_stay_valid() {
        for word in [
            &[2usize, 3, 2][..],
            &[2, 2, 2],
            &[1, 3, 2, 4, 3],
            &[3, 2, 3, 4, 3, 0],
            &[0, 3, 0, 0],
        ] {
            let d = raw_word(word, 6);
            d.diagram.validate().unwrap();
            assert_eq!(d.delta_exp, 0, "raw composition mints no delta");
        }
        // Three stacked cup-caps produce two side-by-side loops.
        let d = raw_word(&[2, 2, 2], 6);
        assert_eq!(d.diagram.loops().len(), 2);
        let parents: Vec<_> = (0..2).map(|l| d.diagram.loop_parent(l)).collect();
        assert_eq!(parents, vec![None, None]);
    }

    #[test]
    fn nested_loops_from_nested_arcs() {
        // The word 2 1 3 2 has nested arcs; against its reverse it closes
        // into two nested loops.
        let top = raw_word(&[2, 1, 3, 2], 6);
        let bottom = raw_word(&[2, 3, 1, 2], 6);
        let prod = compose(&top, &bottom).unwrap();
        prod.diagram.validate().unwrap();
        assert_eq!(prod.diagram.loops().len(), 2);
        let nested = (0..2)
            .filter(|&l| prod.diagram.loop_parent(l).is_some())
            .count();
        assert_eq!(nested, 1, "exactly one loop sits inside the other");
    }
}
