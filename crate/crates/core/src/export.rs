//! Figure-style exports: Graphviz DOT and the JSON interchange format.
//!
//! The DOT output is meant for `neato -n` (positions are pinned): cycle
//! vertices sit on a circle, and each hyperedge is a cluster whose hub node is
//! joined to its members by colored dashed lines.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
    "#bcbd22", "#7f7f7f",
];

/// Radius of the vertex circle in points.
const RADIUS: f64 = 200.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::Precondition(format!(
                "unknown export format '{other}' (expected dot or json)"
            ))),
        }
    }
}

pub fn export(h: &Hypergraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => to_dot(h),
        ExportFormat::Json => h.to_json(),
    }
}

fn position(i: usize, n: usize, radius: f64) -> (f64, f64) {
    // vertex 1 at the top, numbering clockwise
    let angle = std::f64::consts::FRAC_PI_2 - 2.0 * std::f64::consts::PI * i as f64 / n as f64;
    (radius * angle.cos(), radius * angle.sin())
}

/// Renders `h` with its vertices on the cycle `C_n`.
pub fn to_dot(h: &Hypergraph) -> String {
    let n = h.n();
    let mut out = String::new();
    out.push_str("graph H {\n");
    out.push_str("  layout=neato;\n  outputorder=edgesfirst;\n");
    out.push_str("  node [shape=circle, width=0.35, fixedsize=true, fontsize=11];\n");
    for i in 0..n {
        let (x, y) = position(i, n, RADIUS);
        writeln!(
            out,
            "  v{} [label=\"{}\", pos=\"{:.2},{:.2}!\"];",
            i + 1,
            i + 1,
            x,
            y
        )
        .unwrap();
    }
    for i in 0..n {
        writeln!(out, "  v{} -- v{} [penwidth=2];", i + 1, (i + 1) % n + 1).unwrap();
    }
    for (j, e) in h.edges().iter().enumerate() {
        let color = PALETTE[j % PALETTE.len()];
        // hub at the mean of the member positions, pulled inward
        let (sx, sy) = e
            .iter()
            .map(|v| position(v.index(), n, RADIUS))
            .fold((0.0, 0.0), |(ax, ay), (x, y)| (ax + x, ay + y));
        let len = e.len() as f64;
        let (hx, hy) = (0.8 * sx / len, 0.8 * sy / len);
        writeln!(out, "  subgraph \"cluster_hyperedge_{}\" {{", j + 1).unwrap();
        writeln!(out, "    label=\"{e}\";\n    color=\"{color}\";").unwrap();
        writeln!(
            out,
            "    h{} [label=\"\", shape=point, width=0.08, color=\"{color}\", pos=\"{hx:.2},{hy:.2}!\"];",
            j + 1
        )
        .unwrap();
        for v in e.iter() {
            writeln!(
                out,
                "    h{} -- v{} [color=\"{color}\", style=dashed];",
                j + 1,
                v
            )
            .unwrap();
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}
