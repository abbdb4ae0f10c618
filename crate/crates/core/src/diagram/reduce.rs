//! Reduction of pillar diagrams to loop-free form with labels at most 1.
//!
//! Three relations, each preserving the trace: a face labelled `k >= 2`
//! drops to `k - 1` and mints a `delta`; a loop with interior label 0 is
//! erased and mints a `delta`, its label becoming the exterior's; a loop
//! with interior label 1 (so exterior 0) is erased for free.

use super::ScaledDiagram;

pub fn simplify(sd: &ScaledDiagram) -> ScaledDiagram {
    let mut d = sd.diagram.clone();
    let mut exp = sd.delta_exp;

    for r in &mut d.regions {
        if r.label >= 2 {
            exp += r.label - 1;
            r.label = 1;
        }
    }

    let mut alive: Vec<bool> = vec![true; d.regions.len()];
    while let Some(l) = d.loops.pop() {
        let interior = l.interior;
        let container = l.container;
        let inner_label = d.regions[interior].label;
        if inner_label == 0 {
            exp += 1;
        } else {
            debug_assert_eq!(inner_label, 1);
            debug_assert_eq!(d.regions[container].label, 0);
            debug_assert!(d.regions[container].anticlockwise);
        }
        // The interior dissolves into the container; its label is spent.
        alive[interior] = false;
        for other in &mut d.loops {
            if other.container == interior {
                other.container = container;
            }
            if other.interior == interior {
                other.interior = container;
            }
        }
    }

    // Compact the surviving regions.
    let mut remap = vec![usize::MAX; d.regions.len()];
    let mut regions = Vec::new();
    for (i, r) in d.regions.iter().enumerate() {
        if alive[i] {
            remap[i] = regions.len();
            regions.push(*r);
        }
    }
    for g in &mut d.gap_region {
        *g = remap[*g];
        debug_assert_ne!(*g, usize::MAX, "boundary faces never dissolve");
    }
    d.regions = regions;
    let d = d.canonical();

    debug_assert!(d.loops.is_empty());
    debug_assert!(d.regions.iter().all(|r| r.label <= 1));
    debug_assert!(d.validate().is_ok());
    ScaledDiagram {
        delta_exp: exp,
        diagram: d,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{compose, gen_b, gen_e, identity_diagram};

    #[test]
    fn cup_cap_squared_reduces_with_one_delta() {
        let e2 = ScaledDiagram::of(gen_e(2, 6).unwrap());
        let sq = simplify(&compose(&e2, &e2).unwrap());
        assert_eq!(sq.delta_exp, 1);
        assert_eq!(sq.diagram, e2.diagram);
    }

    #[test]
    fn pillar_squared_reduces_with_one_delta() {
        let b = ScaledDiagram::of(gen_b(3, 6).unwrap());
        let sq = simplify(&compose(&b, &b).unwrap());
        assert_eq!(sq.delta_exp, 1);
        assert_eq!(sq.diagram, b.diagram);
    }

    #[test]
    fn high_labels_decrement_fully() {
        let mut d = gen_b(3, 6).unwrap();
        let face = d.gap_region()[2];
        d.regions[face].label = 3;
        let r = simplify(&ScaledDiagram::of(d));
        assert_eq!(r.delta_exp, 2);
        assert_eq!(r.diagram, gen_b(3, 6).unwrap());
    }

    #[test]
    fn braid_relation_diagrammatically() {
        // E2 E3 E2 reduces to E2 on the nose.
        let e2 = ScaledDiagram::of(gen_e(2, 6).unwrap());
        let e3 = ScaledDiagram::of(gen_e(3, 6).unwrap());
        let prod = compose(&compose(&e2, &e3).unwrap(), &e2).unwrap();
        let r = simplify(&prod);
        assert_eq!(r.delta_exp, 0);
        assert_eq!(r.diagram, e2.diagram);
        // E3 B3 E3 reduces to E3: the pillar is swallowed by a loop with
        // interior label 1.
        let b = ScaledDiagram::of(gen_b(3, 6).unwrap());
        let prod = compose(&compose(&e3, &b).unwrap(), &e3).unwrap();
        let r = simplify(&prod);
        assert_eq!(r.delta_exp, 0);
        assert_eq!(r.diagram, e3.diagram);
        // B3 E3 B3 represents b_0; the reduced picture keeps the cup-cap
        // matching with both enclosed faces labelled 1 (equivalent to the
        // pillar B3 under the topological move, which the calculus does not
        // rewrite; all trace computations are blind to the difference).
        let prod = compose(&compose(&b, &e3).unwrap(), &b).unwrap();
        let r = simplify(&prod);
        assert_eq!(r.delta_exp, 0);
        assert_eq!(r.diagram.matching(), e3.diagram.matching());
        let ones = r.diagram.regions().iter().filter(|r| r.label == 1).count();
        assert_eq!(ones, 2);
    }

    #[test]
    fn identity_is_already_reduced() {
        let id = ScaledDiagram::of(identity_diagram(6));
        assert_eq!(simplify(&id), id);
    }
}
