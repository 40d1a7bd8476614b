//! Numeric tables and their fixed-format CSV rendering.

use std::io;
use std::path::Path;

/// Header plus rows of optional cells; `None` renders as an empty cell.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Option<f64>>>,
}

/// 17 significant digits, so every value round-trips exactly. Negative
/// zero prints as zero.
pub fn format_cell(v: Option<f64>) -> String {
    match v {
        Some(x) if x.is_finite() => format!("{:.16e}", x + 0.0),
        _ => String::new(),
    }
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Option<f64>>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<Option<f64>>> {
        let idx = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }

    pub fn write_csv<W: io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .quote_style(csv::QuoteStyle::Never)
            .from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|&v| format_cell(v)))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory cannot fail");
        String::from_utf8(buf).expect("cells are ASCII")
    }

    pub fn save(&self, path: &Path) -> io::Result<()> {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir)?;
        }
        std::fs::write(path, self.to_csv())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let mut t = Table::new(["theta", "N=2"]);
        t.push(vec![Some(-0.0), None]);
        t.push(vec![Some(0.1), Some(f64::NAN)]);
        t.push(vec![Some(1.0 / 3.0), Some(-2.5)]);
        let csv = t.to_csv();
        let lines: Vec<&str> = csv.split('\n').collect();
        assert_eq!(lines[0], "theta,N=2");
        assert_eq!(lines[1], "0.0000000000000000e0,");
        assert_eq!(lines[2], "1.0000000000000001e-1,");
        assert_eq!(lines[3], "3.3333333333333331e-1,-2.5000000000000000e0");
        assert_eq!(lines[4], "");
        assert!(!csv.contains('\r'));
        let back: f64 = lines[3].split(',').next().unwrap().parse().unwrap();
        assert_eq!(back, 1.0 / 3.0);
        assert_eq!(t.column("N=2").unwrap()[2], Some(-2.5));
    }
}
