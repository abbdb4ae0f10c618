//! Plain-text rendering of a pillar diagram: the boundary cycle drawn as a
//! line of points with the matching as nested arcs, plus a face/label
//! legend.

use std::fmt::Write;

use super::PillarDiagram;

pub fn render_ascii(d: &PillarDiagram) -> String {
    let n = d.rank();
    let m = 2 * n;
    let col = |p: usize| 4 * p + 1;

    // Arc depth = number of enclosing chords; outer arcs draw higher.
    let mut rows = 2;
    let mut depth = vec![0usize; m];
    for p in 0..m {
        let q = d.matching()[p];
        if q < p {
            continue;
        }
        let dep = (0..p)
            .filter(|&a| {
                let b = d.matching()[a];
                b > a && q < b
            })
            .count();
        depth[p] = dep;
        rows = rows.max(dep + 2);
    }

    let width = 4 * m;
    let mut canvas = vec![vec![' '; width]; rows];
    for p in 0..m {
        let q = d.matching()[p];
        if q < p {
            continue;
        }
        let row = depth[p];
        for c in col(p) + 1..col(q) {
            canvas[row][c] = '_';
        }
        for r in row + 1..rows {
            canvas[r][col(p)] = '|';
            canvas[r][col(q)] = '|';
        }
    }

    let mut out = String::new();
    let _ = writeln!(out, "rank {n} (boundary: T1..T{n} then B{n}..B1)");
    for row in canvas {
        let line: String = row.into_iter().collect();
        let _ = writeln!(out, "{}", line.trim_end());
    }
    // Point labels.
    let mut labels = String::new();
    for p in 0..m {
        let name = if p < n {
            format!("T{}", p + 1)
        } else {
            format!("B{}", m - p)
        };
        while labels.len() < col(p) - 1 {
            labels.push(' ');
        }
        labels.push_str(&name);
    }
    let _ = writeln!(out, "{labels}");

    let _ = writeln!(out);
    for (i, r) in d.regions().iter().enumerate() {
        let gaps: Vec<String> = (0..m)
            .filter(|&g| d.gap_region()[g] == i)
            .map(|g| g.to_string())
            .collect();
        let orient = if r.anticlockwise { "acw" } else { "cw" };
        if gaps.is_empty() {
            let _ = writeln!(out, "region {i}: loop interior, label {} ({orient})", r.label);
        } else {
            let _ = writeln!(
                out,
                "region {i}: gaps [{}], label {} ({orient})",
                gaps.join(" "),
                r.label
            );
        }
    }
    if d.loops().is_empty() {
        let _ = writeln!(out, "no closed loops");
    } else {
        for (i, l) in d.loops().iter().enumerate() {
            let _ = writeln!(
                out,
                "loop {i}: outside region {}, inside region {}",
                l.container, l.interior
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::gen_e;

    #[test]
    fn renders_without_panicking() {
        let d = gen_e(2, 6).unwrap();
        let text = render_ascii(&d);
        assert!(text.contains("rank 6"));
        assert!(text.contains("T2"));
        assert!(text.contains("no closed loops"));
    }
}
