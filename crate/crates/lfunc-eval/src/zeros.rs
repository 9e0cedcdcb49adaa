//! Zero-table ingestion and grouping heights.
//!
//! Ordinates are ingested data, never computed here. File format: one
//! decimal ordinate per line, ascending, '#' comments and blank lines
//! permitted.

use std::path::Path;

use crate::error::LfuncError;

/// Ascending positive ordinates of nontrivial zeros of one L-function.
#[derive(Clone, Debug)]
pub struct ZeroTable {
    label: String,
    ordinates: Vec<f64>,
}

impl ZeroTable {
    pub fn new(label: impl Into<String>, ordinates: Vec<f64>) -> Result<Self, LfuncError> {
        let label = label.into();
        if ordinates.is_empty() {
            return Err(LfuncError::Validation("zero table is empty".into()));
        }
        for (i, w) in ordinates.windows(2).enumerate() {
            if w[1] <= w[0] {
                return Err(LfuncError::Validation(format!(
                    "ordinates not strictly increasing at index {}",
                    i + 1
                )));
            }
            if w[1] - w[0] < 1e-6 {
                return Err(LfuncError::NearMultipleZero { index: i + 1, spacing: w[1] - w[0] });
            }
        }
        if ordinates[0] <= 0.0 {
            return Err(LfuncError::Validation("ordinates must be positive".into()));
        }
        // sanity gate pinning the file to the intended L-function
        if label == "zeta" && !(14.1347..=14.1348).contains(&ordinates[0]) {
            return Err(LfuncError::Validation(format!(
                "first zeta ordinate {} outside [14.1347, 14.1348]",
                ordinates[0]
            )));
        }
        Ok(ZeroTable { label, ordinates })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn count(&self) -> usize {
        self.ordinates.len()
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    /// Ordinates strictly below the height t.
    pub fn below(&self, t: f64) -> &[f64] {
        let idx = self.ordinates.partition_point(|&g| g < t);
        &self.ordinates[..idx]
    }

    /// Merge two tables into one ascending list (for product L-functions).
    pub fn merge(&self, other: &ZeroTable, label: impl Into<String>) -> Result<ZeroTable, LfuncError> {
        let mut all: Vec<f64> = self
            .ordinates
            .iter()
            .chain(other.ordinates.iter())
            .copied()
            .collect();
        all.sort_by(|a, b| a.partial_cmp(b).unwrap());
        ZeroTable::new(label, all)
    }
}

/// Load a zero table from a plaintext file.
pub fn load_zeros(path: &Path, label: &str) -> Result<ZeroTable, LfuncError> {
    let text = std::fs::read_to_string(path).map_err(|e| LfuncError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    let mut ordinates = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: f64 = line.parse().map_err(|_| LfuncError::Parse {
            line: i + 1,
            msg: format!("not a decimal ordinate: {line:?}"),
        })?;
        ordinates.push(v);
    }
    ZeroTable::new(label, ordinates)
}

/// Grouping heights up to t_max: midpoints between consecutive ordinates
/// <= t_max, plus a final height above the last used zero. The final step
/// is min(1, half the gap to the next tabulated zero) so the height cannot
/// collide with a known ordinate.
pub fn grouping_heights(table: &ZeroTable, t_max: f64) -> Vec<f64> {
    let used = table
        .ordinates()
        .iter()
        .take_while(|&&g| g <= t_max)
        .count();
    let ords = &table.ordinates()[..used];
    if ords.is_empty() {
        return Vec::new();
    }
    let mut heights: Vec<f64> = ords.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    let last = ords[used - 1];
    let step = if used < table.count() {
        (0.5 * (table.ordinates()[used] - last)).min(1.0)
    } else {
        1.0
    };
    heights.push(last + step);
    heights
}

/// Whether t is a height that grouping_heights can produce for some cut:
/// a midpoint of consecutive ordinates, or a final step gamma_j + min(1,
/// half gap), or one past the last tabulated zero.
pub fn is_admissible_height(table: &ZeroTable, t: f64) -> bool {
    let ords = table.ordinates();
    for (j, &g) in ords.iter().enumerate() {
        let step = if j + 1 < ords.len() {
            (0.5 * (ords[j + 1] - g)).min(1.0)
        } else {
            1.0
        };
        if (t - (g + step)).abs() < 1e-9 {
            return true;
        }
    }
    ords.windows(2)
        .any(|w| (t - 0.5 * (w[0] + w[1])).abs() < 1e-9)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_temp(content: &str) -> std::path::PathBuf {
        let mut p = std::env::temp_dir();
        let stamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .unwrap()
            .as_nanos();
        p.push(format!("zeros_test_{stamp}.txt"));
        let mut f = std::fs::File::create(&p).unwrap();
        f.write_all(content.as_bytes()).unwrap();
        p
    }

    #[test]
    fn parse_two_lines() {
        let p = write_temp("14.134725\n21.022040\n");
        let t = load_zeros(&p, "zeta").unwrap();
        assert_eq!(t.count(), 2);
        std::fs::remove_file(p).ok();
    }

    #[test]
    fn parse_error_with_line_number() {
        let p = write_temp("14.134725\n21.022040\nabc\n");
        let e = load_zeros(&p, "zeta").unwrap_err();
        match e {
            LfuncError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        std::fs::remove_file(p).ok();
    }

    #[test]
    fn non_monotone_rejected() {
        let p = write_temp("14.134725\n13.0\n");
        assert!(matches!(
            load_zeros(&p, "zeta"),
            Err(LfuncError::Validation(_))
        ));
        std::fs::remove_file(p).ok();
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let p = write_temp("# header\n\n14.134725\n# mid\n21.022040\n");
        let t = load_zeros(&p, "zeta").unwrap();
        assert_eq!(t.count(), 2);
        std::fs::remove_file(p).ok();
    }

    #[test]
    fn zeta_gate() {
        let p = write_temp("6.0209489\n10.2437703\n");
        assert!(load_zeros(&p, "zeta").is_err());
        assert!(load_zeros(&p, "chi4").is_ok());
        std::fs::remove_file(p).ok();
    }

    #[test]
    fn grouping_midpoints() {
        let t = ZeroTable::new(
            "zeta",
            vec![14.134725, 21.022040, 25.010857],
        )
        .unwrap();
        let h = grouping_heights(&t, 25.0);
        assert_eq!(h.len(), 2);
        assert!((h[0] - 0.5 * (14.134725 + 21.022040)).abs() < 1e-12);
        // gap to next zero is 3.99, so the documented step 1 applies
        assert!((h[1] - (21.022040 + 1.0)).abs() < 1e-12);
        assert!(is_admissible_height(&t, h[1]));
        assert!(!is_admissible_height(&t, 21.022040));
    }

    #[test]
    fn grouping_step_shrinks_in_tight_gaps() {
        let t = ZeroTable::new("x", vec![5.0, 6.0, 6.8]).unwrap();
        let h = grouping_heights(&t, 6.5);
        // last used zero 6.0, next tabulated 6.8: step min(1, 0.4) = 0.4
        assert!((h[1] - 6.4).abs() < 1e-12);
    }
}
