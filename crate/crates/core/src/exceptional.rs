//! Static data for the families of exceptional Weyl groups: the antispecial
//! members for each family size, their subgroup catalogs and arrows, the
//! `|c| = 17` dimensions and left-cell counts, and the `E_8` Springer labels.
//!
//! Labels are kept exactly as printed; vertex ids are the subgroup names when
//! a subgroup catalog is printed, the labels otherwise. Labels and subgroups
//! are paired in printed order.

use serde::Serialize;
use thiserror::Error;

use crate::graphs::{check_solution, solve_left_cell_counts, validate_graph, CellGraph, Vertex};
use crate::verify::{check, CheckResult};

/// Family sizes that occur for `G_2`, `F_4`, `E_6`, `E_7`, `E_8`.
pub const SIZES: [usize; 7] = [1, 2, 3, 4, 5, 11, 17];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no exceptional family of size {0}")]
pub struct UnknownSize(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AntispecialLabel {
    /// Name of the representation as printed.
    pub label: String,
    /// Its `(g, ε)` index, when printed.
    pub index: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionalFamily {
    pub size: usize,
    pub as_labels: Vec<AntispecialLabel>,
    /// Subgroup catalog, paired with `as_labels` in order; empty if unprinted.
    pub cal_c: Vec<String>,
    pub graph: CellGraph,
    /// `(label, dimension)` in `as_labels` order.
    pub dims: Option<Vec<(String, u64)>>,
    /// `(label, N)`; `derived` marks values computed here rather than printed.
    pub expected_n: Option<ExpectedCounts>,
    /// `(label, unipotent class)`.
    pub gamma: Option<Vec<(String, String)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpectedCounts {
    pub values: Vec<(String, i64)>,
    pub derived: bool,
}

impl ExceptionalFamily {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }

    /// Vertex id of the `i`-th antispecial label.
    fn vertex_id(&self, i: usize) -> &str {
        self.graph.vertices[i].id.as_str()
    }
}

struct Raw {
    size: usize,
    labels: &'static [(&'static str, Option<&'static str>)],
    cal_c: &'static [&'static str],
    /// Arrows between subgroup names (or labels when `cal_c` is empty).
    arrows: &'static [(&'static str, &'static str)],
    dims: Option<&'static [u64]>,
    expected_n: Option<(&'static [i64], bool)>,
    gamma: Option<&'static [(&'static str, &'static str)]>,
}

const RAW: [Raw; 7] = [
    Raw {
        size: 1,
        labels: &[("E_c", None)],
        cal_c: &[],
        arrows: &[],
        dims: None,
        expected_n: None,
        gamma: None,
    },
    Raw {
        size: 2,
        labels: &[("nonspecial", None)],
        cal_c: &[],
        arrows: &[],
        dims: None,
        expected_n: None,
        gamma: None,
    },
    Raw {
        size: 3,
        labels: &[("nonspecial_1", None), ("nonspecial_2", None)],
        cal_c: &[],
        arrows: &[],
        dims: None,
        expected_n: None,
        gamma: None,
    },
    Raw {
        size: 4,
        // which of the two one-dimensional members is not named
        labels: &[
            ("nonspecial two-dimensional", None),
            ("one-dimensional (unresolved)", None),
        ],
        cal_c: &["S_2", "S_3"],
        arrows: &[("S_3", "S_2")],
        dims: None,
        expected_n: None,
        gamma: None,
    },
    Raw {
        size: 5,
        labels: &[
            ("(1,ε)", Some("(1,ε)")),
            ("(g_2,1)", Some("(g_2,1)")),
            ("(g_3,1)", Some("(g_3,1)")),
        ],
        cal_c: &["S_1", "S_2", "S_3"],
        arrows: &[("S_3", "S_2")],
        dims: None,
        expected_n: None,
        gamma: None,
    },
    Raw {
        size: 11,
        labels: &[
            ("4_4", Some("(g_2,ε'')")),
            ("6_1", Some("(g_3,1)")),
            ("4_3", Some("(g_4,1)")),
            ("4_1", Some("(g'_2,ε'')")),
            ("1_2", Some("(g'_2,ε')")),
        ],
        cal_c: &["S_2", "S_3", "S_4", "S_2×S_2", "Δ_8"],
        arrows: &[("Δ_8", "S_4"), ("S_4", "S_3"), ("S_3", "S_2")],
        // the subscripted labels name the dimension first
        dims: Some(&[4, 6, 4, 4, 1]),
        expected_n: Some((&[1, 3, 3, 4, 1], true)),
        gamma: None,
    },
    Raw {
        size: 17,
        labels: &[
            ("2688", Some("(g'_2,ε'')")),
            ("2016", Some("(g_6,1)")),
            ("448", Some("(g_2,ε)")),
            ("1134", Some("(g_3,ε)")),
            ("1344", Some("(g_4,1)")),
            ("420", Some("(g_5,1)")),
            ("168", Some("(g'_2,ε')")),
        ],
        cal_c: &["S_2×S_2", "S_2×S_3", "S_2", "S_3", "S_4", "S_5", "Δ_8"],
        arrows: &[
            ("S_3", "S_2"),
            ("S_4", "S_3"),
            ("S_5", "S_4"),
            ("S_5", "S_2×S_3"),
            ("S_2×S_3", "S_2×S_2"),
            ("Δ_8", "S_4"),
        ],
        dims: Some(&[2688, 2016, 448, 1134, 1344, 420, 168]),
        expected_n: Some((&[1092, 1596, 70, 378, 756, 420, 168], false)),
        gamma: Some(&[
            ("448", "A_5+A_2"),
            ("2688", "D_6(a_2)"),
            ("1134", "A_5+2A_1"),
            ("2016", "(A_5+A_1)'"),
            ("1344", "D_5(a_1)+A_2"),
            ("420", "A_4+A_3"),
            ("168", "D_4+A_2"),
        ]),
    },
];

fn build(raw: &Raw) -> ExceptionalFamily {
    let as_labels: Vec<AntispecialLabel> = raw
        .labels
        .iter()
        .map(|(l, i)| AntispecialLabel {
            label: l.to_string(),
            index: i.map(str::to_string),
        })
        .collect();
    let vertices = as_labels
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let id = raw.cal_c.get(i).copied().unwrap_or(l.label.as_str());
            Vertex::new(id, l.label.clone(), raw.dims.map(|d| d[i]))
        })
        .collect();
    let arrows = raw
        .arrows
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let pair = |vals: &[u64]| -> Vec<(String, u64)> {
        as_labels
            .iter()
            .zip(vals)
            .map(|(l, &v)| (l.label.clone(), v))
            .collect()
    };
    ExceptionalFamily {
        size: raw.size,
        cal_c: raw.cal_c.iter().map(|s| s.to_string()).collect(),
        graph: CellGraph::new(vertices, arrows),
        dims: raw.dims.map(pair),
        expected_n: raw.expected_n.map(|(vals, derived)| ExpectedCounts {
            values: as_labels
                .iter()
                .zip(vals)
                .map(|(l, &v)| (l.label.clone(), v))
                .collect(),
            derived,
        }),
        gamma: raw.gamma.map(|g| {
            g.iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect()
        }),
        as_labels,
    }
}

pub fn lookup(size: usize) -> Result<ExceptionalFamily, UnknownSize> {
    RAW.iter()
        .find(|r| r.size == size)
        .map(build)
        .ok_or(UnknownSize(size))
}

pub fn all_families() -> Vec<ExceptionalFamily> {
    RAW.iter().map(build).collect()
}

/// `|c^{as}|` for each family size.
pub fn size_table() -> Vec<(usize, usize)> {
    all_families()
        .iter()
        .map(|f| (f.size, f.as_labels.len()))
        .collect()
}

/// Consistency checks over every record.
pub fn validate_all() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let table = size_table();
    let want = [(1, 1), (2, 1), (3, 2), (4, 2), (5, 3), (11, 5), (17, 7)];
    out.push(check(
        "size table".into(),
        table == want,
        format!("{table:?}"),
    ));
    for f in all_families() {
        let report = validate_graph(&f.graph);
        out.push(check(
            format!("|c|={} graph", f.size),
            report.is_ok(),
            format!("{:?}", report.violations),
        ));
        if !f.cal_c.is_empty() {
            out.push(check(
                format!("|c|={} catalog size", f.size),
                f.cal_c.len() == f.as_labels.len(),
                format!("{} subgroups, {} labels", f.cal_c.len(), f.as_labels.len()),
            ));
        }
        if let Some(expected) = &f.expected_n {
            let (pass, detail) = match solve_left_cell_counts::<i64>(&f.graph) {
                Ok(sol) => {
                    let got: Vec<i64> = (0..f.as_labels.len())
                        .map(|i| sol.counts[f.vertex_id(i)])
                        .collect();
                    let want: Vec<i64> = expected.values.iter().map(|(_, v)| *v).collect();
                    (
                        got == want && check_solution(&f.graph, &sol) && !sol.nonpositive_warning,
                        format!("N = {got:?}"),
                    )
                }
                Err(e) => (false, e.to_string()),
            };
            out.push(check(
                format!("|c|={} left-cell counts", f.size),
                pass,
                detail,
            ));
        }
        if let Some(gamma) = &f.gamma {
            let mut targets: Vec<&str> = gamma.iter().map(|(_, u)| u.as_str()).collect();
            targets.sort_unstable();
            targets.dedup();
            let mut sources: Vec<&str> = gamma.iter().map(|(l, _)| l.as_str()).collect();
            sources.sort_unstable();
            let mut labels: Vec<&str> = f.as_labels.iter().map(|l| l.label.as_str()).collect();
            labels.sort_unstable();
            out.push(check(
                format!("|c|={} Springer labels injective", f.size),
                targets.len() == f.as_labels.len() && sources == labels,
                format!("{} distinct classes", targets.len()),
            ));
        }
    }
    out
}
