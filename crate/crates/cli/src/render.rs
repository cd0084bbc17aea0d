//! Text, DOT and LaTeX renderings of diagrams and tables.

use lieprop_core::nilorbits::{diagonal_profile, raw_profile, weighted_dynkin, PartitionLabel};
use lieprop_core::realforms::{NodeColor, RealForm, SatakeDiagram, WeightedDynkinDiagram};
use lieprop_core::rootcore::{CartanMatrix, Family, LieType};
use lieprop_core::Result;
use serde::{Deserialize, Serialize};

/// Chain order and the optional branch node `(node, attached_to)`.
///
/// The last node forks off the chain for D and E types, otherwise every
/// node lies on one line.
fn layout(c: &CartanMatrix) -> (Vec<usize>, Option<(usize, usize)>) {
    let n = c.rank();
    if n >= 3 && c.entry(n - 1, n - 2) == 0 {
        let attach = (0..n - 1).find(|&j| c.entry(n - 1, j) != 0).expect("diagram is connected");
        ((0..n - 1).collect(), Some((n - 1, attach)))
    } else {
        ((0..n).collect(), None)
    }
}

/// Bond between chain neighbours `i` and `i + 1`, three columns wide.
/// The arrow points at the shorter root.
fn bond(c: &CartanMatrix, i: usize, j: usize) -> &'static str {
    let (a, b) = (c.entry(i, j).abs(), c.entry(j, i).abs());
    match (a, b) {
        (1, 1) => "───",
        (2, 1) => "═>═",
        (1, 2) => "═<═",
        (3, 1) => "≡>≡",
        (1, 3) => "≡<≡",
        _ => "   ",
    }
}

fn glyph(s: &SatakeDiagram, i: usize) -> char {
    match s.colors[i] {
        NodeColor::White => '○',
        NodeColor::Black => '●',
    }
}

/// Diagram art: ○ white, ● black, one chain line, 1-based labels, a fork
/// for D/E types and arrows listed as `i<->j`.
pub fn satake_text(f: &RealForm) -> String {
    let s = &f.satake;
    let c = s.lie_type.cartan();
    let (chain, fork) = layout(&c);
    let mut line = String::new();
    let mut labels = String::new();
    for (pos, &i) in chain.iter().enumerate() {
        if pos > 0 {
            line.push_str(bond(&c, chain[pos - 1], i));
        }
        line.push(glyph(s, i));
        let lab = (i + 1).to_string();
        labels.push_str(&format!("{lab:<4}"));
    }
    let mut out = format!("{} ({})\n{}\n{}\n", f.name(), f.lie_type(), line, labels.trim_end());
    if let Some((node, attach)) = fork {
        let col = 4 * chain.iter().position(|&k| k == attach).unwrap();
        out.push_str(&format!("{}│\n{}{} {}\n", " ".repeat(col), " ".repeat(col), glyph(s, node), node + 1));
    }
    let arrows = s.arrow_pairs();
    if !arrows.is_empty() {
        let a: Vec<String> = arrows.iter().map(|(i, j)| format!("{}<->{}", i + 1, j + 1)).collect();
        out.push_str(&format!("arrows: {}\n", a.join(", ")));
    }
    out.push_str(&format!(
        "real rank {}, restricted type {}\n",
        f.real_rank(),
        f.restricted.restricted_type
    ));
    out
}

pub fn satake_dot(f: &RealForm) -> String {
    let s = &f.satake;
    let c = s.lie_type.cartan();
    let n = s.rank();
    let mut out = format!("graph \"{}\" {{\n  rankdir=LR;\n", f.name());
    out.push_str("  node [shape=circle, label=\"\", width=0.25];\n");
    for i in 0..n {
        let fill = if s.is_white(i) { "white" } else { "black" };
        out.push_str(&format!("  n{} [style=filled, fillcolor={fill}, xlabel=\"{}\"];\n", i + 1, i + 1));
    }
    for i in 0..n {
        for j in i + 1..n {
            let m = c.entry(i, j) * c.entry(j, i);
            if m > 0 {
                let attr = if m > 1 { format!(" [label=\"{m}\", penwidth={m}]") } else { String::new() };
                out.push_str(&format!("  n{} -- n{}{attr};\n", i + 1, j + 1));
            }
        }
    }
    for (i, j) in s.arrow_pairs() {
        out.push_str(&format!("  n{} -- n{} [style=dashed, dir=both, constraint=false];\n", i + 1, j + 1));
    }
    out.push_str("}\n");
    out
}

pub fn satake_latex(f: &RealForm) -> String {
    let s = &f.satake;
    let c = s.lie_type.cartan();
    let (chain, fork) = layout(&c);
    let mut pos = vec![(0i64, 0i64); s.rank()];
    for (k, &i) in chain.iter().enumerate() {
        pos[i] = (k as i64, 0);
    }
    if let Some((node, attach)) = fork {
        pos[node] = (pos[attach].0, -1);
    }
    let mut out = String::from("\\begin{tikzpicture}\n");
    for (i, (x, y)) in pos.iter().enumerate() {
        let fill = if s.is_white(i) { "white" } else { "black" };
        out.push_str(&format!(
            "  \\node[circle, draw, fill={fill}, inner sep=2pt, label=above:{{\\scriptsize {}}}] (n{i}) at ({x},{y}) {{}};\n",
            i + 1
        ));
    }
    for i in 0..s.rank() {
        for j in i + 1..s.rank() {
            let m = c.entry(i, j) * c.entry(j, i);
            if m > 0 {
                let style = ["", "", "double", "very thick"][m.min(3) as usize];
                out.push_str(&format!("  \\draw[{style}] (n{i}) -- (n{j});\n"));
            }
        }
    }
    for (i, j) in s.arrow_pairs() {
        out.push_str(&format!("  \\draw[<->, dashed] (n{i}) to[bend left] (n{j});\n"));
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

/// One row of a nilpotent-orbit table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRow {
    pub partition: PartitionLabel,
    pub notation: String,
    /// Unsorted diagonal `H` (type A only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw: Option<Vec<i64>>,
    pub profile: Vec<i64>,
    pub diagram: WeightedDynkinDiagram,
}

pub fn orbit_rows(t: LieType, labels: &[PartitionLabel]) -> Result<Vec<OrbitRow>> {
    labels
        .iter()
        .map(|p| {
            Ok(OrbitRow {
                partition: p.clone(),
                notation: p.notation(),
                raw: (t.family() == Family::A).then(|| raw_profile(p)),
                profile: diagonal_profile(p, t)?.entries,
                diagram: weighted_dynkin(p, t)?,
            })
        })
        .collect()
}

fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn compact(w: &WeightedDynkinDiagram) -> String {
    w.weights.iter().map(|x| x.to_string()).collect()
}

pub fn orbit_text(t: LieType, rows: &[OrbitRow]) -> String {
    let mut header: Vec<&str> = vec!["partition"];
    if t.family() == Family::A {
        header.push("H");
        header.push("sorted H");
    } else {
        header.push("H");
    }
    header.push("diagram");
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut cells = vec![r.notation.clone()];
            if let Some(raw) = &r.raw {
                cells.push(tuple(raw));
            }
            cells.push(tuple(&r.profile));
            cells.push(compact(&r.diagram));
            cells
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|k| {
            body.iter()
                .map(|r| r[k].chars().count())
                .chain([header[k].len()])
                .max()
                .unwrap()
        })
        .collect();
    let fmt_row = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}", w = *w))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = fmt_row(header.iter().map(|s| s.to_string()).collect());
    for r in body {
        out.push_str(&fmt_row(r));
    }
    out
}

fn latex_partition(p: &PartitionLabel) -> String {
    let mut s = p.notation().replace('^', "^{");
    // close every exponent opened above
    let mut out = String::new();
    let mut open = false;
    for ch in s.drain(..) {
        if open && (ch == ',' || ch == ']' || ch == '^') {
            out.push('}');
            open = false;
        }
        out.push(ch);
        if ch == '{' {
            open = true;
        }
    }
    if open {
        out.push('}');
    }
    out
}

pub fn orbit_latex(t: LieType, rows: &[OrbitRow]) -> String {
    let a = t.family() == Family::A;
    let cols = if a { "llll" } else { "lll" };
    let mut out = format!("\\begin{{tabular}}{{{cols}}}\n\\hline\n");
    out.push_str(if a {
        "Partition & $H$ & $\\tilde H$ & Weighted diagram \\\\\n\\hline\n"
    } else {
        "Partition & $H$ & Weighted diagram \\\\\n\\hline\n"
    });
    for r in rows {
        let mut cells = vec![format!("${}$", latex_partition(&r.partition))];
        if let Some(raw) = &r.raw {
            cells.push(format!("${}$", tuple(raw)));
        }
        cells.push(format!("${}$", tuple(&r.profile)));
        cells.push(format!("${}$", compact(&r.diagram)));
        out.push_str(&cells.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use lieprop_core::realforms::lookup;

    #[test]
    fn fork_hangs_under_the_branch_node() {
        let text = satake_text(&lookup("E6^I").unwrap());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[1], "○───○───○───○───○");
        assert_eq!(lines[3], "        │");
        assert_eq!(lines[4], "        ○ 6");
    }

    #[test]
    fn bonds_point_at_short_roots() {
        assert!(satake_text(&lookup("so(3,4)").unwrap()).contains("○───○═>═○"));
        assert!(satake_text(&lookup("sp(6,R)").unwrap()).contains("○───○═<═○"));
    }

    #[test]
    fn latex_exponents_are_braced() {
        let p: PartitionLabel = "[3,2^2,1]".parse().unwrap();
        assert_eq!(latex_partition(&p), "[3,2^{2},1]");
        let p: PartitionLabel = "[4^2]^II".parse().unwrap();
        assert_eq!(latex_partition(&p), "[4^{2}]^{II}");
    }
}
