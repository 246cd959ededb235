//! Flat-file emission: CSV tables with `#` comment lines, and a bare SVG
//! polyline for quick looks.
//!
//! Numbers are written in the shortest form that parses back to the same
//! `f64`, so every file round-trips bit for bit.

use std::fmt::Write as _;

/// Shortest round-trip decimal; `nan`, `inf`, `-inf` for non-finite values.
pub fn format_f64(v: f64) -> String {
    if v.is_nan() {
        "nan".to_owned()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.to_owned()
    } else {
        format!("{v:?}")
    }
}

/// A numeric table with a header row plus optional leading and trailing
/// comment lines.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub leading_comments: Vec<String>,
    pub trailing_comments: Vec<String>,
}

impl CsvTable {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        CsvTable {
            header: header.into_iter().map(Into::into).collect(),
            ..Default::default()
        }
    }

    pub fn push_row(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.leading_comments {
            let _ = writeln!(out, "# {c}");
        }
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| format_f64(v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        for c in &self.trailing_comments {
            let _ = writeln!(out, "# {c}");
        }
        out
    }

    /// Parses text produced by [`CsvTable::render`]. Comment lines before the
    /// header are leading, all others trailing.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut table = CsvTable::default();
        let mut have_header = false;
        for (lineno, line) in text.lines().enumerate() {
            if let Some(c) = line.strip_prefix('#') {
                let c = c.strip_prefix(' ').unwrap_or(c).to_owned();
                if have_header {
                    table.trailing_comments.push(c);
                } else {
                    table.leading_comments.push(c);
                }
            } else if !have_header {
                table.header = line.split(',').map(str::to_owned).collect();
                have_header = true;
            } else if !line.is_empty() {
                let row = line
                    .split(',')
                    .map(|cell| {
                        cell.parse::<f64>()
                            .map_err(|e| format!("line {}: {cell:?}: {e}", lineno + 1))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if row.len() != table.header.len() {
                    return Err(format!(
                        "line {}: {} cells, header has {}",
                        lineno + 1,
                        row.len(),
                        table.header.len()
                    ));
                }
                table.rows.push(row);
            }
        }
        if !have_header {
            return Err("missing header".into());
        }
        Ok(table)
    }
}

pub const SVG_WIDTH: f64 = 800.0;
pub const SVG_HEIGHT: f64 = 600.0;

/// One polyline on a fixed 800×600 canvas, axes scaled to the data range.
pub fn svg_polyline(xs: &[f64], ys: &[f64]) -> String {
    let range = |v: &[f64]| {
        let (lo, hi) = v
            .iter()
            .filter(|x| x.is_finite())
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
                (lo.min(x), hi.max(x))
            });
        if hi > lo {
            (lo, hi)
        } else {
            (lo - 0.5, lo + 0.5)
        }
    };
    let (x0, x1) = range(xs);
    let (y0, y1) = range(ys);
    let margin = 20.0;
    let sx = (SVG_WIDTH - 2.0 * margin) / (x1 - x0);
    let sy = (SVG_HEIGHT - 2.0 * margin) / (y1 - y0);
    let mut points = String::new();
    for (&x, &y) in xs.iter().zip(ys) {
        if !(x.is_finite() && y.is_finite()) {
            continue;
        }
        let px = margin + (x - x0) * sx;
        let py = SVG_HEIGHT - margin - (y - y0) * sy;
        let _ = write!(points, "{px:.2},{py:.2} ");
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n\
         <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"{}\"/>\n\
         </svg>\n",
        points.trim_end()
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn special_values() {
        assert_eq!(format_f64(f64::NAN), "nan");
        assert_eq!(format_f64(f64::NEG_INFINITY), "-inf");
        assert_eq!(format_f64(-2.5), "-2.5");
        assert_eq!(format_f64(1e-300), "1e-300");
        assert!("nan".parse::<f64>().unwrap().is_nan());
    }

    #[test]
    fn comments_and_header() {
        let mut t = CsvTable::new(["t", "P_left"]);
        t.leading_comments.push("warning: test".into());
        t.push_row(vec![0.0, 0.25]);
        t.trailing_comments.push("analytic_period=12.5".into());
        let text = t.render();
        assert_eq!(
            text,
            "# warning: test\nt,P_left\n0.0,0.25\n# analytic_period=12.5\n"
        );
        assert_eq!(CsvTable::parse(&text).unwrap(), t);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(CsvTable::parse("a,b\n1,2,3\n").is_err());
        assert!(CsvTable::parse("# only\n").is_err());
    }

    #[test]
    fn svg_has_fixed_viewport() {
        let svg = svg_polyline(&[0.0, 1.0, 2.0], &[1.0, -1.0, 1.0]);
        assert!(svg.contains("viewBox=\"0 0 800 600\""));
        assert!(svg.contains("20.00,20.00 400.00,580.00 780.00,20.00"));
    }

    proptest! {
        #[test]
        fn rendered_tables_round_trip(rows in prop::collection::vec(prop::array::uniform3(prop::num::f64::ANY), 0..20)) {
            let mut t = CsvTable::new(["a", "b", "c"]);
            for r in &rows {
                t.push_row(r.to_vec());
            }
            let back = CsvTable::parse(&t.render()).unwrap();
            prop_assert_eq!(back.rows.len(), rows.len());
            for (x, y) in back.rows.iter().flatten().zip(rows.iter().flatten()) {
                prop_assert!(x.to_bits() == y.to_bits() || (x.is_nan() && y.is_nan()));
            }
        }
    }
}
