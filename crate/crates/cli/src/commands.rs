//! The `table`, `unit`, `skew-basis` and `inverse` commands.

use std::sync::Arc;

use cayley_core::algebra::CanonicalElement;
use cayley_core::cayley::{cayley_closed, cayley_generic};
use cayley_core::linalg::oracle_inverse;
use cayley_core::rational::format_rational;
use cayley_core::skew::skew_basis;
use cayley_core::{AlgebraElement, CayleyResult, FiniteGroup, Orientation, Rational, SkewGenerator, SkewKind};
use clap::ValueEnum;
use num_traits::One;
use serde::Serialize;

use crate::error::{CliError, Status};
use crate::expr::parse_element;
use crate::render::{self, Format};
use crate::spec::{parse_group, parse_orientation};
use crate::Output;

pub const DEFAULT_TABLE_ORDERS: [usize; 5] = [4, 8, 10, 14, 16];

/// One row of the `z + z^-1` table: the unit in `C_n` with `σ(z) = -1`, or
/// `None` when `1 + z + z^-1` is a zero divisor.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub order: usize,
    pub unit: Option<AlgebraElement>,
}

impl TableRow {
    /// `b_0, ..., b_{n-1}`, the coefficients on the powers of `z`.
    pub fn coefficients(&self) -> Option<Vec<Rational>> {
        self.unit.as_ref().map(|u| (0..self.order).map(|k| u.coeff(k)).collect())
    }
}

pub fn table_rows(orders: &[usize]) -> Result<Vec<TableRow>, CliError> {
    orders
        .iter()
        .map(|&n| {
            if n < 4 || n % 2 == 1 {
                return Err(CliError::Invalid(format!(
                    "table orders must be even and at least 4, got {n}"
                )));
            }
            let group = Arc::new(FiniteGroup::cyclic_with_generator(n, "z")?);
            let orientation = Orientation::from_generators(group, &[("z", -1)])?;
            let unit = cayley_core::cayley::cayley_l3(1, &orientation)?.map(|r| r.unit);
            Ok(TableRow { order: n, unit })
        })
        .collect()
}

#[derive(Serialize)]
struct TableRecord {
    order: usize,
    invertible: bool,
    coefficients: Option<Vec<String>>,
    unit: Option<CanonicalElement>,
}

pub fn render_table(rows: &[TableRow], format: Format) -> String {
    match format {
        Format::Json => render::json(
            &rows
                .iter()
                .map(|r| TableRecord {
                    order: r.order,
                    invertible: r.unit.is_some(),
                    coefficients: r
                        .coefficients()
                        .map(|c| c.iter().map(format_rational).collect()),
                    unit: r.unit.as_ref().map(AlgebraElement::to_canonical),
                })
                .collect::<Vec<_>>(),
        ),
        Format::Md => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let unit = r.unit.as_ref().map_or("not invertible".into(), |u| u.to_string());
                    vec![r.order.to_string(), unit]
                })
                .collect();
            render::markdown(&["o(z)", "u = (1 - (z + z^-1))(1 + z + z^-1)^-1"], &cells)
        }
        Format::Csv => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| match r.coefficients() {
                    Some(c) => vec![
                        r.order.to_string(),
                        "invertible".into(),
                        c.iter().map(format_rational).collect::<Vec<_>>().join(" "),
                    ],
                    None => vec![r.order.to_string(), "not invertible".into(), String::new()],
                })
                .collect();
            render::csv(&["order", "status", "coefficients"], &cells)
        }
    }
}

pub fn cmd_table(orders: &[usize], format: Format) -> Result<Output, CliError> {
    let rows = table_rows(orders)?;
    Ok(Output::success(render_table(&rows, format)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    #[value(name = "L1")]
    L1,
    #[value(name = "L2")]
    L2,
    #[value(name = "L3")]
    L3,
    #[value(name = "generic")]
    Generic,
}

/// The group element a closed-form generator is built on; the expression
/// must denote a single group element with coefficient 1.
fn single_element(text: &str, group: &Arc<FiniteGroup>) -> Result<usize, CliError> {
    let e = parse_element(text, group)?;
    let mut terms = e.terms();
    match (terms.next(), terms.next()) {
        (Some((g, c)), None) if c.is_one() => Ok(g),
        _ => Err(CliError::Invalid(format!(
            "{text:?} is not a single group element; use --kind generic for combinations"
        ))),
    }
}

#[derive(Serialize)]
struct UnitRecord {
    group: String,
    orientation: String,
    kind: String,
    q: String,
    method: String,
    beta: CanonicalElement,
    inverse_of_one_plus_beta: CanonicalElement,
    unit: CanonicalElement,
}

pub struct UnitRequest<'a> {
    pub group: &'a str,
    pub orientation: &'a str,
    pub kind: Kind,
    pub element: &'a str,
    pub q: Rational,
    pub format: Format,
}

pub fn cmd_unit(req: &UnitRequest<'_>) -> Result<Output, CliError> {
    let group = parse_group(req.group)?;
    let orientation = parse_orientation(&group, req.orientation)?;
    let result: Option<CayleyResult> = match req.kind {
        Kind::Generic => {
            let beta = parse_element(req.element, &group)?.scalar_mul(&req.q);
            cayley_generic(&beta, &orientation)?
        }
        kind => {
            let kind = match kind {
                Kind::L1 => SkewKind::L1,
                Kind::L2 => SkewKind::L2,
                _ => SkewKind::L3,
            };
            let base = single_element(req.element, &group)?;
            let generator = SkewGenerator::new(kind, base, req.q.clone(), &orientation)?;
            cayley_closed(&generator, &orientation)?
        }
    };
    let Some(r) = result else {
        return Ok(Output::failure(
            Status::NotInvertible,
            format!("1 + beta is not invertible (kind {:?}, element {})\n", req.kind, req.element),
        ));
    };
    let kind = Kind::to_possible_value(&req.kind).expect("no skipped variants");
    let stdout = match req.format {
        Format::Json => render::json(&UnitRecord {
            group: group.label().into(),
            orientation: orientation.describe(),
            kind: kind.get_name().into(),
            q: format_rational(&req.q),
            method: r.method.to_string(),
            beta: r.beta.to_canonical(),
            inverse_of_one_plus_beta: r.inverse_of_one_plus_beta.to_canonical(),
            unit: r.unit.to_canonical(),
        }),
        format => render::fields(
            format,
            &[
                ("group", group.label().to_string()),
                ("orientation", orientation.describe()),
                ("beta", r.beta.to_string()),
                ("method", r.method.to_string()),
                ("(1 + beta)^-1", r.inverse_of_one_plus_beta.to_string()),
                ("unit", r.unit.to_string()),
            ],
        ),
    };
    Ok(Output::success(stdout))
}

#[derive(Serialize)]
struct BasisRecord {
    kind: String,
    base: String,
    element: CanonicalElement,
}

pub fn cmd_skew_basis(group: &str, orientation: &str, format: Format) -> Result<Output, CliError> {
    let group = parse_group(group)?;
    let orientation = parse_orientation(&group, orientation)?;
    let basis = skew_basis(&orientation);
    let stdout = match format {
        Format::Json => render::json(
            &basis
                .iter()
                .map(|s| BasisRecord {
                    kind: s.kind().to_string(),
                    base: group.name(s.base()).into(),
                    element: s.materialize(&group).to_canonical(),
                })
                .collect::<Vec<_>>(),
        ),
        format => {
            let rows: Vec<Vec<String>> = basis
                .iter()
                .map(|s| {
                    vec![
                        s.kind().to_string(),
                        group.name(s.base()).into(),
                        s.materialize(&group).to_string(),
                    ]
                })
                .collect();
            let header = ["family", "base", "element"];
            match format {
                Format::Csv => render::csv(&header, &rows),
                _ => render::markdown(&header, &rows),
            }
        }
    };
    Ok(Output::success(stdout))
}

#[derive(Serialize)]
struct InverseRecord {
    element: CanonicalElement,
    inverse: CanonicalElement,
}

pub fn cmd_inverse(group: &str, element: &str, format: Format) -> Result<Output, CliError> {
    let group = parse_group(group)?;
    let a = parse_element(element, &group)?;
    let Some(inverse) = oracle_inverse(&a) else {
        return Ok(Output::failure(
            Status::NotInvertible,
            format!("{a} is not invertible in Q{}\n", group.label()),
        ));
    };
    let stdout = match format {
        Format::Json => render::json(&InverseRecord {
            element: a.to_canonical(),
            inverse: inverse.to_canonical(),
        }),
        format => render::fields(
            format,
            &[
                ("group", group.label().to_string()),
                ("element", a.to_string()),
                ("inverse", inverse.to_string()),
            ],
        ),
    };
    Ok(Output::success(stdout))
}
