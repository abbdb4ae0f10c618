//! Generator diagrams, the rank-raising embedding, and the representation
//! of monomial words by diagrams.

use super::{compose, simplify, tau_bullet, PillarDiagram, ScaledDiagram};
use crate::coxeter::{CoxeterGraph, FcElement};
use crate::{Error, Result};

/// The identity diagram: every strand propagates straight down.
pub fn identity_diagram(n: usize) -> PillarDiagram {
    let m = 2 * n;
    let matching: Vec<usize> = (0..m).map(|p| m - 1 - p).collect();
    PillarDiagram::from_matching(n, matching, &vec![0; n + 1]).expect("identity is well formed")
}

/// The cup-cap diagram `E_k` (`1 <= k < n`): top points `k, k+1` joined,
/// bottom points `2n-k, 2n+1-k` joined, all other strands propagating and
/// every label zero.
pub fn gen_e(k: usize, n: usize) -> Result<PillarDiagram> {
    if k == 0 || k >= n {
        return Err(Error::InvalidGenerator { gen: k, rank: n });
    }
    let m = 2 * n;
    let mut matching: Vec<usize> = (0..m).map(|p| m - 1 - p).collect();
    matching[k - 1] = k;
    matching[k] = k - 1;
    matching[m - k - 1] = m - k;
    matching[m - k] = m - k - 1;
    Ok(PillarDiagram::from_matching(n, matching, &vec![0; n + 1])
        .expect("cup-cap diagram is well formed"))
}

/// The pillar diagram `B_k`: identity matching with the rectangular face
/// between strands `k` and `k+1` labelled 1.  That face must be clockwise,
/// which forces `k` odd.
pub fn gen_b(k: usize, n: usize) -> Result<PillarDiagram> {
    if k == 0 || k >= n {
        return Err(Error::InvalidGenerator { gen: k, rank: n });
    }
    if k % 2 == 0 {
        return Err(Error::InvalidDiagram(format!(
            "pillar face between strands {k} and {} is anticlockwise",
            k + 1
        )));
    }
    let mut d = identity_diagram(n);
    let face = d.gap_region[k - 1];
    debug_assert!(!d.regions[face].anticlockwise);
    d.regions[face].label = 1;
    Ok(d)
}

/// Rank-raising embedding: append a propagating strand on the right.  A new
/// anticlockwise right-wall face appears; the old right-wall face keeps its
/// label as the face left of the new strand.
pub fn iota(d: &PillarDiagram) -> PillarDiagram {
    let n = d.n;
    let m = 2 * n;
    let relabel = |p: usize| if p < n { p } else { p + 2 };
    let mut matching = vec![usize::MAX; m + 2];
    for p in 0..m {
        matching[relabel(p)] = relabel(d.matching[p]);
    }
    matching[n] = n + 1;
    matching[n + 1] = n;

    // The new right wall is gap n of the larger box.
    let new_face = d.regions.len();
    let mut regions = d.regions.clone();
    regions.push(super::Region {
        label: 0,
        anticlockwise: n % 2 == 1,
    });

    let mut gap_region = vec![usize::MAX; m + 2];
    for g in 0..m {
        // Top gaps keep their index; bottom gaps shift by two.
        let new_gap = if g < n { g } else { g + 2 };
        gap_region[new_gap] = d.gap_region[g];
    }
    // The old right-wall face flanks the new strand on the left, showing as
    // the top gap n-1 (already mapped) and the bottom gap n+1; the new
    // right wall is gap n.
    gap_region[n] = new_face;
    gap_region[n + 1] = d.gap_region[n - 1];

    let out = PillarDiagram {
        n: n + 1,
        matching,
        gap_region,
        regions,
        loops: d.loops.clone(),
    }
    .canonical();
    debug_assert!(out.validate().is_ok());
    out
}

/// Maps a generator letter to its diagram: letter 0 to the pillar `B_3`,
/// letter `i >= 1` to the cup-cap `E_i`.
pub fn generator_diagram(letter: usize, n: usize) -> Result<PillarDiagram> {
    if letter == 0 {
        gen_b(3, n)
    } else {
        gen_e(letter, n)
    }
}

/// The diagram of a word in the monomial generators: left-to-right
/// composition of generator diagrams, reduced after every step so the
/// intermediate diagrams stay linear in the word length.
pub fn rho(word: &[usize], n: usize) -> Result<ScaledDiagram> {
    let mut acc = ScaledDiagram::of(identity_diagram(n));
    for &letter in word {
        let gen = ScaledDiagram::of(generator_diagram(letter, n)?);
        acc = simplify(&compose(&acc, &gen)?);
    }
    Ok(acc)
}

/// The diagrammatic route to `mu~(x, y)`: 1 exactly when the closed trace
/// of `rho(x) rho(y^-1)` has exponent `n - 1`.
pub fn mu_tilde_diagrammatic(g: &CoxeterGraph, x: &FcElement, y: &FcElement) -> Result<u8> {
    let n = g.rank();
    let dx = rho(&x.word(), n)?;
    let dy = rho(&y.inverse(g).word(), n)?;
    let prod = simplify(&compose(&dx, &dy)?);
    Ok(u8::from(tau_bullet(&prod) == n as u64 - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{close, content};

    #[test]
    fn gen_e1_matching() {
        let d = gen_e(1, 6).unwrap();
        // Points 1,2 joined and 11,12 joined (1-based).
        assert_eq!(d.matching()[0], 1);
        assert_eq!(d.matching()[10], 11);
        // Strands 3..6 propagate.
        assert_eq!(d.matching()[2], 9);
        assert_eq!(d.matching()[5], 6);
        assert!(d.regions().iter().all(|r| r.label == 0));
        d.validate().unwrap();
    }

    #[test]
    fn gen_b3_pillar() {
        let d = gen_b(3, 6).unwrap();
        assert_eq!(d.matching(), identity_diagram(6).matching());
        let labelled: Vec<_> = d.regions().iter().filter(|r| r.label == 1).collect();
        assert_eq!(labelled.len(), 1);
        assert!(!labelled[0].anticlockwise);
        d.validate().unwrap();
        // Even strand positions would put the pillar in an anticlockwise face.
        assert!(gen_b(2, 6).is_err());
    }

    #[test]
    fn range_checks() {
        assert!(gen_e(0, 6).is_err());
        assert!(gen_e(6, 6).is_err());
        assert!(gen_e(5, 6).is_ok());
    }

    #[test]
    fn iota_of_identity() {
        let d = identity_diagram(6);
        let e = iota(&d);
        assert_eq!(e, identity_diagram(7));
    }

    #[test]
    fn rho_of_empty_word() {
        let d = rho(&[], 6).unwrap();
        assert_eq!(d.delta_exp, 0);
        assert_eq!(d.diagram, identity_diagram(6));
    }

    #[test]
    fn closed_generator_has_content_n_minus_1() {
        for k in 1..6 {
            let d = gen_e(k, 6).unwrap();
            let t = close(&d);
            assert_eq!(t.num_loops(), 5);
            assert_eq!(content(&t), 5);
        }
        let b = gen_b(3, 6).unwrap();
        assert_eq!(content(&close(&b)), 5);
    }
}
