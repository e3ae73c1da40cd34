//! Group and orientation specifications given on the command line.

use std::path::Path;
use std::sync::Arc;

use cayley_core::{FiniteGroup, Orientation};

use crate::error::CliError;

/// `C<n>`, `D4`, `Q8`, `S3`, or `file:<path>` for a multiplication table in
/// the plain-text table format.
pub fn parse_group(spec: &str) -> Result<Arc<FiniteGroup>, CliError> {
    let group = match spec.strip_prefix("file:") {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Invalid(format!("cannot read {path}: {e}")))?;
            let label = Path::new(path)
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or("table");
            FiniteGroup::parse_table(label, &text)?
        }
        None => FiniteGroup::catalog(spec)?,
    };
    Ok(Arc::new(group))
}

/// `classical`, or comma-separated `generator:sign` pairs such as
/// `x:-1,y:+1`. Every generator of the group must be assigned.
pub fn parse_orientation(group: &Arc<FiniteGroup>, spec: &str) -> Result<Orientation, CliError> {
    let spec = spec.trim();
    if spec.eq_ignore_ascii_case("classical") {
        return Ok(Orientation::classical(group.clone()));
    }
    let mut assignment: Vec<(&str, i8)> = Vec::new();
    for pair in spec.split(',') {
        let (name, sign) = pair
            .split_once(':')
            .ok_or_else(|| CliError::Invalid(format!("expected generator:sign, got {pair:?}")))?;
        let sign = match sign.trim() {
            "+1" | "1" | "+" => 1,
            "-1" | "-" => -1,
            other => {
                return Err(CliError::Invalid(format!(
                    "sign for {} must be +1 or -1, got {other:?}",
                    name.trim()
                )))
            }
        };
        assignment.push((name.trim(), sign));
    }
    Ok(Orientation::from_generators(group.clone(), &assignment)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_specs() {
        let d4 = parse_group("D4").unwrap();
        let o = parse_orientation(&d4, "x:-1, y:+1").unwrap();
        assert_eq!(o.describe(), "x:-1,y:+1");
        assert!(parse_orientation(&d4, "classical").unwrap().is_trivial());
        assert!(parse_orientation(&d4, "x:-1,y:2").is_err());
        assert!(parse_orientation(&d4, "x-1").is_err());
        assert!(parse_orientation(&d4, "x:+1,y:+1").is_err());
    }

    #[test]
    fn group_specs() {
        assert_eq!(parse_group("C12").unwrap().order(), 12);
        assert!(parse_group("C").is_err());
        assert!(parse_group("A5").is_err());
        assert!(parse_group("file:/definitely/not/here").is_err());
    }
}
