use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::lie::{GroupId, Weight};
use crate::poly::parse_poly;
use crate::report::Report;
use crate::IntPoly;

use super::qpoly::q_poly;
use super::subst::p_poly;

const TABLE1: &str = include_str!("../../fixtures/table1.txt");
const TABLE2: &str = include_str!("../../fixtures/table2.txt");
const CHECKSUMS: &str = include_str!("../../fixtures/tables.sha256");

fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

fn expected_digest(file: &str) -> Option<&'static str> {
    CHECKSUMS.lines().find_map(|l| {
        let (hash, name) = l.split_once(char::is_whitespace)?;
        name.trim().ends_with(file).then_some(hash)
    })
}

fn parse_table(text: &str, names: &[&str]) -> Result<Vec<(Weight, IntPoly)>> {
    let mut rows = Vec::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let (w, p) = line
            .split_once('\t')
            .ok_or_else(|| Error::Parse(format!("table row without tab: '{line}'")))?;
        rows.push((w.parse::<Weight>()?, parse_poly(p, names)?));
    }
    Ok(rows)
}

/// Transcribed SU(3) polynomials: `Q_lambda(x,y)` for table 1 and
/// `P_lambda(s,t)` for table 2.
pub fn golden_table(n: usize) -> Result<Vec<(Weight, IntPoly)>> {
    match n {
        1 => parse_table(TABLE1, &["x", "y"]),
        2 => parse_table(TABLE2, &["s", "t"]),
        _ => Err(Error::Unsupported(format!("there is no table {n}"))),
    }
}

/// Recomputes every tabulated polynomial and compares it with the fixture,
/// after checking the fixtures against their stored digests.
pub fn verify_tables() -> Report {
    let mut r = Report::new("tables", "SU(3) polynomials Q_lambda and P_lambda for |lambda| <= 6");
    for (file, text) in [("table1.txt", TABLE1), ("table2.txt", TABLE2)] {
        let got = sha256_hex(text);
        let ok = expected_digest(file) == Some(got.as_str());
        r.check_with(format!("{file} checksum"), ok, got);
    }
    for (n, f) in [(1, q_poly as fn(GroupId, &Weight) -> Result<IntPoly>), (2, p_poly)] {
        let rows = match golden_table(n) {
            Ok(rows) => rows,
            Err(e) => {
                r.fail(format!("table {n} parse"), e);
                continue;
            }
        };
        r.check(format!("table {n} has 16 rows"), rows.len() == 16);
        let names: &[&str] = if n == 1 { &["x", "y"] } else { &["s", "t"] };
        for (w, want) in rows {
            match f(GroupId::A2, &w) {
                Ok(got) => {
                    let detail = format!("computed {}", got.render(names));
                    r.check_with(format!("table {n} {w}"), got == want, detail);
                }
                Err(e) => r.fail(format!("table {n} {w}"), e),
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_match() {
        let r = verify_tables();
        assert!(r.passed, "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(r.checks.len(), 2 + 2 * 17);
    }
}
