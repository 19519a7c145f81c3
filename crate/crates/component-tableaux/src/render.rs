//! Text and LaTeX renderings of tableaux and labelled matrices.
//!
//! Text output is meant for golden files: fixed-width cells, no trailing
//! whitespace, one tableau per block.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::builder::{component_tableaux, ComponentTableau, ComponentTableauJson, ExtendedTableau, Generator, Label, Origin};
use crate::diagram::{Diagram, DiagramJson, Pos};
use crate::report::{Format, SCHEMA_VERSION};
use crate::roots::{excluded_roots, shifted_tableau, ExcludedJson, ExcludedRootSet, RootKind, ShiftedTableau};
use crate::Error;

fn grid(ncols: usize, depth: usize, cell: impl Fn(usize, usize) -> Option<String>) -> String {
    let cells: Vec<Vec<String>> =
        (1..=depth).map(|r| (0..ncols).map(|c| cell(c, r).unwrap_or_default()).collect()).collect();
    let head: Vec<String> = (1..=ncols).map(|c| format!("C{c}")).collect();
    let w = cells.iter().flatten().chain(&head).map(|s| s.chars().count()).max().unwrap_or(1) + 1;
    let mut out = String::new();
    let pad = |s: &str| format!("{s:>w$}");
    let line = |label: String, row: &[String]| {
        let body: String = row.iter().map(|s| pad(s)).collect();
        format!("{label:<4}{body}").trim_end().to_string()
    };
    out.push_str(&line(String::new(), &head));
    out.push('\n');
    for (r, row) in cells.iter().enumerate() {
        out.push_str(&line(format!("R{}", r + 1), row));
        out.push('\n');
    }
    out
}

/// The grid of `T(∞)`: lowered entries carry `v`, translated ones `>`.
pub fn extended_grid(ext: &ExtendedTableau) -> String {
    let cols = ext.columns();
    grid(cols.len(), ext.depth(), |c, r| {
        cols[c].get(r - 1).map(|cell| match cell.origin {
            Origin::Original => cell.entry.to_string(),
            Origin::Lowered(_) => format!("{}v", cell.entry),
            Origin::Shifted => format!("{}>", cell.entry),
        })
    })
}

/// The grid of a shifted tableau; placed entries carry `'`.
pub fn shifted_grid(sh: &ShiftedTableau) -> String {
    let depth = sh.columns.iter().map(Vec::len).max().unwrap_or(0);
    grid(sh.columns.len(), depth, |c, r| {
        sh.columns[c].get(r - 1).map(|&e| if sh.placed.contains(&e) { format!("{e}'") } else { e.to_string() })
    })
}

pub fn diagram_grid(d: &Diagram) -> String {
    grid(d.k(), d.max_height(), |c, r| d.entry(c, r).map(|e| e.to_string()))
}

fn label_name(l: Label) -> &'static str {
    match l {
        Label::One => "1",
        Label::Star => "*",
        Label::Neutral => "-",
    }
}

/// Every decorated line of `T(∞)`, one per row.
pub fn line_list(ct: &ComponentTableau) -> String {
    let mut out = String::new();
    for l in &ct.decorated {
        let _ = writeln!(
            out,
            "{} {}-{}  C{}R{} -> C{}R{}",
            label_name(l.label),
            l.i,
            l.j,
            l.from.0 + 1,
            l.from.1,
            l.to.0 + 1,
            l.to.1
        );
    }
    out
}

/// Cell of the labelled matrix at `(i, j)`, 1-based, as drawn in the text matrix.
pub fn matrix_cell(d: &Diagram, ct: &ComponentTableau, excluded: &BTreeSet<Pos>, i: usize, j: usize) -> String {
    if i == j {
        return "1".into();
    }
    if d.in_levi((i, j)) {
        return "0".into();
    }
    if i > j {
        return String::new();
    }
    let label = if ct.ones.contains(&(i, j)) {
        "1"
    } else if ct.stars.contains(&(i, j)) {
        "*"
    } else {
        ""
    };
    if excluded.contains(&(i, j)) {
        format!("({label:^1})")
    } else if label.is_empty() {
        ".".into()
    } else {
        label.into()
    }
}

/// The matrix `M`: Levi blocks of `1`/`0`, labels `1` and `*`, and excluded
/// positions encircled as `( )`.
pub fn labelled_matrix(ct: &ComponentTableau, excluded: &BTreeSet<Pos>) -> String {
    let d = &ct.diagram;
    let n = d.n();
    let mut out = String::new();
    for i in 1..=n {
        let row: String = (1..=n).map(|j| format!("{:>4}", matrix_cell(d, ct, excluded, i, j))).collect();
        out.push_str(row.trim_end());
        out.push('\n');
    }
    out
}

/// Full text block for one tableau: `T(∞)`, its lines, `M`, and each
/// generator's shifted tableau with its excluded roots.
/// Space-separated `(i,j)` list, or `none`.
fn position_list<'a>(ps: impl Iterator<Item = &'a Pos>) -> String {
    let v: Vec<String> = ps.map(|(i, j)| format!("({i},{j})")).collect();
    if v.is_empty() {
        "none".into()
    } else {
        v.join(" ")
    }
}

pub fn tableau_text(index: usize, ct: &ComponentTableau, roots: &ExcludedRootSet, shifted: &[ShiftedTableau]) -> String {
    let mut out = String::new();
    let choices: Vec<String> = ct.choice_sequence().iter().map(|c| c.entry.to_string()).collect();
    let _ = writeln!(out, "tableau {index}: choices [{}]", choices.join(","));
    out.push_str(&extended_grid(&ct.ext));
    out.push_str("lines:\n");
    out.push_str(&line_list(ct));
    let fmt_set = |s: &BTreeSet<Pos>| position_list(s.iter());
    let _ = writeln!(out, "ones: {}", fmt_set(&ct.ones));
    let _ = writeln!(out, "stars: {}", fmt_set(&ct.stars));
    let _ = writeln!(out, "excluded: {}", fmt_set(&roots.union));
    out.push_str("matrix:\n");
    out.push_str(&labelled_matrix(ct, &roots.union));
    for (g, sh) in roots.per_generator.iter().zip(shifted) {
        let js: Vec<String> = g.generator.j.iter().map(|j| j.to_string()).collect();
        let _ = writeln!(out, "shifted T_{{{},({})}}:", g.generator.i, js.join(","));
        out.push_str(&shifted_grid(sh));
        let kind = |k: RootKind| position_list(g.roots.iter().filter(|(_, &v)| v == k).map(|(p, _)| p));
        let _ = writeln!(out, "  primary: {}", kind(RootKind::Primary));
        let _ = writeln!(out, "  secondary: {}", kind(RootKind::Secondary));
    }
    out
}

fn tex_label(l: Label) -> &'static str {
    match l {
        Label::One => "1",
        Label::Star => "*",
        Label::Neutral => "",
    }
}

/// One `tikzcd` environment for `T(∞)` with its labelled lines.
pub fn tableau_latex(ct: &ComponentTableau) -> String {
    let ext = &ct.ext;
    let cols = ext.columns();
    let mut out = String::from("\\begin{tikzcd}[row sep=0.5em, column sep=1em]\n");
    for r in 1..=ext.depth() {
        let mut cells = Vec::new();
        for (c, col) in cols.iter().enumerate() {
            let mut s = match col.get(r - 1) {
                Some(cell) if matches!(cell.origin, Origin::Lowered(_)) => format!("\\red{{{}}}", cell.entry),
                Some(cell) => cell.entry.to_string(),
                None => String::new(),
            };
            for l in ct.decorated.iter().filter(|l| l.from == (c, r)) {
                let (dc, dr) = (l.to.0 as isize - c as isize, l.to.1 as isize - r as isize);
                let mut dir = String::new();
                dir.push_str(&if dr < 0 { "u".repeat((-dr) as usize) } else { "d".repeat(dr as usize) });
                dir.push_str(&"r".repeat(dc.max(0) as usize));
                if dir.is_empty() {
                    continue;
                }
                let style = match l.label {
                    Label::Neutral => "-, dashed",
                    Label::One => "-",
                    Label::Star => "-, red, bend right",
                };
                let _ = write!(s, " \\arrow[{style}, {dir}, \"{}\"]", tex_label(l.label));
            }
            cells.push(s);
        }
        out.push_str(&cells.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{tikzcd}\n");
    out
}

/// One `pmatrix` environment for `M`, excluded positions circled.
pub fn matrix_latex(ct: &ComponentTableau, excluded: &BTreeSet<Pos>) -> String {
    let d = &ct.diagram;
    let n = d.n();
    let mut out = String::from("\\begin{pmatrix}\n");
    for i in 1..=n {
        let row: Vec<String> = (1..=n)
            .map(|j| {
                let c = matrix_cell(d, ct, excluded, i, j);
                match c.as_str() {
                    "(*)" => "\\circled{\\ast}".into(),
                    "( )" => "\\circled{}".into(),
                    "(1)" => "\\circled{1}".into(),
                    "*" => "\\ast".into(),
                    "." => String::new(),
                    _ => c,
                }
            })
            .collect();
        out.push_str(&row.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\end{pmatrix}\n");
    out
}

/// JSON form of one enumerated tableau.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EnumeratedJson {
    pub index: usize,
    #[serde(flatten)]
    pub tableau: ComponentTableauJson,
    pub generators: Vec<Generator>,
    pub excluded: Vec<ExcludedJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EnumerationJson {
    pub schema_version: u32,
    pub diagram: DiagramJson,
    pub pairs: Vec<[usize; 3]>,
    pub tableaux: Vec<EnumeratedJson>,
}

/// Every component tableau of `d`, rendered in `format`.
pub fn enumerate_document(d: &Diagram, format: Format) -> Result<String, Error> {
    let tableaux = component_tableaux(d);
    let mut blocks = Vec::with_capacity(tableaux.len());
    for ct in &tableaux {
        let roots = excluded_roots(ct)?;
        let shifted =
            ct.generators().iter().map(|g| shifted_tableau(d, g)).collect::<Result<Vec<_>, _>>()?;
        blocks.push((roots, shifted));
    }
    let pairs: Vec<String> = d.pairs().iter().map(|p| p.to_string()).collect();
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "composition {}: {} component tableaux", d.composition(), tableaux.len());
            let _ = writeln!(out, "pairs: {}", pairs.join(" "));
            out.push_str(&diagram_grid(d));
            for (idx, (ct, (roots, shifted))) in tableaux.iter().zip(&blocks).enumerate() {
                out.push('\n');
                out.push_str(&tableau_text(idx, ct, roots, shifted));
            }
            out
        }
        Format::Json => {
            let doc = EnumerationJson {
                schema_version: SCHEMA_VERSION,
                diagram: DiagramJson::from(d),
                pairs: d.pairs().iter().map(|p| [p.left + 1, p.right + 1, p.height]).collect(),
                tableaux: tableaux
                    .iter()
                    .zip(&blocks)
                    .enumerate()
                    .map(|(index, (ct, (roots, _)))| EnumeratedJson {
                        index,
                        tableau: ct.to_json(),
                        generators: ct.generators(),
                        excluded: roots.to_json(),
                    })
                    .collect(),
            };
            let mut s = serde_json::to_string_pretty(&doc).map_err(|e| Error::Io(e.into()))?;
            s.push('\n');
            s
        }
        Format::Latex => {
            let mut out = String::new();
            let _ = writeln!(out, "% composition {}: {} component tableaux", d.composition(), tableaux.len());
            for (idx, (ct, (roots, _))) in tableaux.iter().zip(&blocks).enumerate() {
                let _ = writeln!(out, "% tableau {idx}");
                out.push_str(&tableau_latex(ct));
                out.push_str(&matrix_latex(ct, &roots.union));
            }
            out
        }
    })
}
