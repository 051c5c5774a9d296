use logsine_core::{
    bernoulli_table, logsine_numeric, logsine_symbolic, zeta_even_exact, zeta_numeric, Result,
};
use serde_json::{json, Value};

use crate::args::RunConfig;
use crate::table::Table;

pub fn bernoulli(config: &RunConfig) -> Table {
    let table = bernoulli_table(config.n_max as usize);
    let mut out = Table::new(vec!["k", "B"]);
    for (k, b) in table.values().iter().enumerate() {
        out.push(vec![json!(k), json!(b.to_string())]);
    }
    out
}

pub fn zeta(config: &RunConfig) -> Result<Table> {
    let s_max = config.n_max.max(2);
    let table = bernoulli_table(s_max as usize);
    let mut out = Table::new(vec!["s", "exact", "value", "abs_error"]);
    for s in 2..=s_max {
        let exact = if s % 2 == 0 {
            let even = zeta_even_exact(s / 2, &table)?;
            json!(format!("{} · pi^{}", even.coefficient, even.pi_power))
        } else {
            Value::Null
        };
        let value = zeta_numeric(s, config.tolerance)?;
        out.push(vec![
            json!(s),
            exact,
            json!(value.value),
            json!(value.abs_error),
        ]);
    }
    Ok(out)
}

pub fn logsine(config: &RunConfig) -> Result<Table> {
    let mut out = Table::new(vec!["n", "value", "abs_error", "symbolic"]);
    for n in 0..=config.n_max {
        let value = logsine_numeric(n, config.tolerance)?;
        out.push(vec![
            json!(n),
            json!(value.value),
            json!(value.abs_error),
            logsine_symbolic(n).to_json(),
        ]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::args::Format;

    fn config(n_max: u32) -> RunConfig {
        RunConfig {
            n_max,
            tolerance: 1e-10,
            format: Format::Plain,
        }
    }

    #[test]
    fn bernoulli_rows() {
        let text = bernoulli(&config(4)).render(Format::Plain).unwrap();
        assert_eq!(text, "0 1\n1 -1/2\n2 1/6\n3 0\n4 -1/30\n");
        let json = bernoulli(&config(0)).render(Format::Json).unwrap();
        let parsed: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, json!([{"k": 0, "B": "1"}]));
    }

    #[test]
    fn zeta_rows() {
        let text = zeta(&config(4)).unwrap().render(Format::Csv).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "s,exact,value,abs_error");
        assert!(lines[1].starts_with("2,1/6 · pi^2,1.64493406684822"));
        assert!(lines[2].starts_with("3,,1.20205690315959"));
        assert!(lines[3].starts_with("4,1/90 · pi^4,"));
    }

    #[test]
    fn logsine_rows() {
        let text = logsine(&config(2)).unwrap().render(Format::Json).unwrap();
        let parsed: Value = serde_json::from_str(&text).unwrap();
        let pi = std::f64::consts::PI;
        let ln2 = std::f64::consts::LN_2;
        assert!((parsed[0]["value"].as_f64().unwrap() + pi * ln2).abs() < 1e-10);
        assert!((parsed[1]["value"].as_f64().unwrap() + pi * pi / 2.0 * ln2).abs() < 1e-10);
        assert_eq!(parsed[2]["symbolic"]["zeta_terms"][0]["arg"], 3);
    }

    #[test]
    fn logsine_certification_failure() {
        let mut c = config(1);
        c.tolerance = 1e-30;
        assert!(logsine(&c).unwrap_err().is_certification());
    }
}
