//! Commuting vertex subsets: the family `P`, its neighbour equivalence, and
//! the canonical representatives `P'`.

use std::collections::HashMap;

use crate::coxeter::{CoxeterGraph, FcElement};
use crate::{Error, Result};

/// The product `i(A)` of the commuting generators in `A`; `i(empty) = 1`.
pub fn i_of(g: &CoxeterGraph, a: &[usize]) -> Result<FcElement> {
    g.check_word(a)?;
    let mut sorted = a.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != a.len() {
        return Err(Error::InvalidInput("repeated vertex in commuting set".into()));
    }
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            if g.adjacent(sorted[i], sorted[j]) {
                return Err(Error::AdjacentPair(sorted[i], sorted[j]));
            }
        }
    }
    Ok(crate::coxeter::normalize(g, &sorted).expect("commuting set is a reduced FC word"))
}

/// All independent sets of the Coxeter graph, including the empty set,
/// ordered by size then lexicographically.
pub fn commuting_sets(g: &CoxeterGraph) -> Vec<Vec<usize>> {
    let n = g.rank();
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    while let Some((start, current)) = stack.pop() {
        out.push(current.clone());
        for v in start..n {
            if current.iter().all(|&u| !g.adjacent(u, v)) {
                let mut next = current.clone();
                next.push(v);
                stack.push((v + 1, next));
            }
        }
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// The partition of `P` into classes of the neighbour equivalence: `A` and
/// `B` are neighbours when they have equal size and exchange one vertex for
/// an adjacent one.
#[derive(Debug, Clone)]
pub struct PClassPartition {
    sets: Vec<Vec<usize>>,
    class_of_set: HashMap<Vec<usize>, usize>,
    classes: Vec<Vec<usize>>,
}

pub fn p_classes(g: &CoxeterGraph) -> PClassPartition {
    let sets = commuting_sets(g);
    let m = sets.len();
    let mut uf: Vec<usize> = (0..m).collect();
    fn find(uf: &mut Vec<usize>, x: usize) -> usize {
        if uf[x] != x {
            let root = find(uf, uf[x]);
            uf[x] = root;
        }
        uf[x]
    }
    for i in 0..m {
        for j in i + 1..m {
            if neighbours(g, &sets[i], &sets[j]) {
                let (a, b) = (find(&mut uf, i), find(&mut uf, j));
                if a != b {
                    uf[a] = b;
                }
            }
        }
    }
    let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..m {
        let r = find(&mut uf, i);
        by_root.entry(r).or_default().push(i);
    }
    let mut classes: Vec<Vec<usize>> = by_root.into_values().collect();
    for c in &mut classes {
        c.sort();
    }
    // Deterministic class order: by the smallest member.
    classes.sort_by_key(|c| sets[c[0]].clone());
    classes.sort_by_key(|c| sets[c[0]].len());
    let mut class_of_set = HashMap::new();
    for (ci, members) in classes.iter().enumerate() {
        for &i in members {
            class_of_set.insert(sets[i].clone(), ci);
        }
    }
    PClassPartition {
        sets,
        class_of_set,
        classes,
    }
}

fn neighbours(g: &CoxeterGraph, a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() || a.is_empty() {
        return false;
    }
    let only_a: Vec<usize> = a.iter().copied().filter(|x| !b.contains(x)).collect();
    let only_b: Vec<usize> = b.iter().copied().filter(|x| !a.contains(x)).collect();
    only_a.len() == 1 && only_b.len() == 1 && g.adjacent(only_a[0], only_b[0])
}

impl PClassPartition {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// All of `P` in canonical order.
    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn class_of(&self, set: &[usize]) -> Option<usize> {
        let mut key = set.to_vec();
        key.sort();
        self.class_of_set.get(&key).copied()
    }

    /// Members of a class, as sorted vertex sets.
    pub fn members(&self, class: usize) -> Vec<Vec<usize>> {
        self.classes[class]
            .iter()
            .map(|&i| self.sets[i].clone())
            .collect()
    }

    /// Common size `#A` of the members of a class.
    pub fn class_size(&self, class: usize) -> usize {
        self.sets[self.classes[class][0]].len()
    }

    /// Lexicographically smallest member, used as the structural
    /// representative.
    pub fn representative(&self, class: usize) -> Vec<usize> {
        self.members(class)
            .into_iter()
            .min()
            .expect("classes are nonempty")
    }
}

/// The explicit family `P'` of canonical class representatives.
///
/// For odd `n` these are the descending odd chains from `n-1`, the set
/// `{n-1, n-3, ..., 4, 0}` and the empty set; for even `n` the descending
/// chains alone plus the empty set.
pub fn p_prime(g: &CoxeterGraph) -> Vec<Vec<usize>> {
    let n = g.rank();
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    let chain_max = if n % 2 == 1 { (n - 1) / 2 } else { (n - 2) / 2 };
    for cap in 0..=chain_max {
        let mut set: Vec<usize> = (0..=cap).map(|j| (n - 1) - 2 * j).collect();
        set.sort();
        out.push(set);
    }
    if n % 2 == 1 {
        let mut set: Vec<usize> = (4..n).step_by(2).collect();
        set.push(0);
        set.sort();
        out.push(set);
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}
