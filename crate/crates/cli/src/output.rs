//! Fixed 12-significant-digit number formatting and CSV / JSON table rendering.

use serde_json::{Map, Number, Value};

pub const SIGNIFICANT_DIGITS: usize = 12;

/// `printf("%.12g")`: 12 significant digits, trailing zeros removed, exponent
/// notation outside `1e-4 <= |x| < 1e12`.
pub fn fmt_g12(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= SIGNIFICANT_DIGITS as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_zeros(mantissa), sign, exp.abs())
    } else {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `x` rounded to 12 significant digits, as a JSON number (`null` if not finite).
pub fn json_g12(x: f64) -> Value {
    fmt_g12(x)
        .parse::<f64>()
        .ok()
        .and_then(Number::from_f64)
        .map_or(Value::Null, Value::Number)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
    Missing,
}

impl Cell {
    pub fn opt(x: Option<f64>) -> Self {
        x.map_or(Self::Missing, Self::Num)
    }

    fn csv(&self) -> String {
        match self {
            Self::Num(x) => fmt_g12(*x),
            Self::Int(n) => n.to_string(),
            Self::Text(s) if s.contains([',', '"', '\n']) => {
                format!("\"{}\"", s.replace('"', "\"\""))
            }
            Self::Text(s) => s.clone(),
            Self::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Self::Num(x) => json_g12(*x),
            Self::Int(n) => Value::from(*n),
            Self::Text(s) => Value::from(s.as_str()),
            Self::Missing => Value::Null,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// One JSON object per row, keys in column order.
    pub fn to_json(&self) -> Value {
        Value::Array(self.rows.iter().map(|row| self.record(row)).collect())
    }

    pub fn record(&self, row: &[Cell]) -> Value {
        let map: Map<String, Value> = self
            .columns
            .iter()
            .zip(row)
            .map(|(k, v)| (k.to_string(), v.json()))
            .collect();
        Value::Object(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g12_matches_printf() {
        let cases = [
            (0.5, "0.5"),
            (1.0, "1"),
            (-0.125, "-0.125"),
            (1.0 / 3.0, "0.333333333333"),
            (2.0 / 3.0, "0.666666666667"),
            (123456789012.0, "123456789012"),
            (1234567890123.0, "1.23456789012e+12"),
            (0.0001, "0.0001"),
            (0.00001234, "1.234e-05"),
            (0.539185, "0.539185"),
            (100.0, "100"),
            (-0.0, "0"),
            (1e300, "1e+300"),
        ];
        for (x, want) in cases {
            assert_eq!(fmt_g12(x), want, "{x}");
        }
        assert_eq!(fmt_g12(f64::NAN), "nan");
        assert_eq!(fmt_g12(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn json_rounds_to_twelve_digits() {
        assert_eq!(json_g12(0.1 + 0.2).to_string(), "0.3");
        assert_eq!(json_g12(f64::NAN), Value::Null);
    }

    #[test]
    fn table_renders_missing_as_empty_or_null() {
        let mut t = Table::new(vec!["a", "b", "c"]);
        t.push(vec![
            Cell::Num(0.25),
            Cell::Missing,
            Cell::Text("engine".into()),
        ]);
        assert_eq!(t.to_csv(), "a,b,c\n0.25,,engine\n");
        assert_eq!(
            t.to_json().to_string(),
            r#"[{"a":0.25,"b":null,"c":"engine"}]"#
        );
    }

    #[test]
    fn text_with_separators_is_quoted() {
        let mut t = Table::new(vec!["x"]);
        t.push(vec![Cell::Text(r#"a, "b""#.into())]);
        assert_eq!(t.to_csv(), "x\n\"a, \"\"b\"\"\"\n");
    }
}
