//! Byte-stable number rendering shared by text, CSV and markdown output.

/// Fixed six decimals, switching to `{:.6e}` for magnitudes at or beyond
/// 1e9 and for nonzero magnitudes below 1e-9.
pub fn num(x: f64) -> String {
    let a = x.abs();
    if a >= 1e9 || (a > 0.0 && a < 1e-9) {
        format!("{x:.6e}")
    } else {
        // avoid printing "-0.000000"
        let s = format!("{x:.6}");
        if s.trim_start_matches('-')
            .bytes()
            .all(|b| b == b'0' || b == b'.')
        {
            s.trim_start_matches('-').to_string()
        } else {
            s
        }
    }
}

pub fn csv_line(fields: &[String]) -> String {
    fields.join(",")
}

pub fn markdown_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("| {} |\n", header.join(" | "));
    out.push_str(&format!("|{}\n", "---:|".repeat(header.len())));
    for row in rows {
        out.push_str(&format!("| {} |\n", row.join(" | ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_and_scientific() {
        assert_eq!(num(2.414213562), "2.414214");
        assert_eq!(num(0.0), "0.000000");
        assert_eq!(num(-1e-12), "-1.000000e-12");
        assert_eq!(num(1e-9), "0.000000");
        assert_eq!(num(2.5e9), "2.500000e9");
        assert_eq!(num(-3e-7), "0.000000");
        assert_eq!(num(-0.5), "-0.500000");
    }

    #[test]
    fn markdown_shape() {
        let t = markdown_table(&["a", "b"], &[vec!["1".into(), "2".into()]]);
        assert_eq!(t, "| a | b |\n|---:|---:|\n| 1 | 2 |\n");
    }
}
