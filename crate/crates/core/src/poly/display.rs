use std::fmt::{self, Write};

use serde_json::{json, Value};

use super::{Coeff, MonomialOrder, Poly};

fn write_monomial(out: &mut String, e: &[i32; 2], names: &[&str]) {
    for (i, name) in names.iter().enumerate() {
        match e[i] {
            0 => {}
            1 => out.push_str(name),
            n => {
                let _ = write!(out, "{name}^{n}");
            }
        }
    }
}

impl<C: Coeff> Poly<C> {
    /// Renders in descending grevlex, e.g. `x^2 - y`.
    pub fn render(&self, names: &[&str]) -> String {
        self.render_ordered(names, MonomialOrder::Grevlex)
    }

    pub fn render_ordered(&self, names: &[&str], order: MonomialOrder) -> String {
        assert!(names.len() >= self.nvars());
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let is_const = e[0] == 0 && e[1] == 0;
            if is_const || !a.is_one() {
                let s = a.to_string();
                if s.contains('/') && !is_const {
                    let _ = write!(out, "({s})");
                } else {
                    out.push_str(&s);
                }
            }
            write_monomial(&mut out, e, &names[..self.nvars()]);
        }
        out
    }

    /// `[[e1, (e2,)? "coeff"], ...]` in descending grevlex.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms(MonomialOrder::Grevlex)
            .into_iter()
            .map(|(e, c)| {
                let mut row: Vec<Value> = e[..self.nvars()].iter().map(|&x| json!(x)).collect();
                row.push(json!(c.to_string()));
                Value::Array(row)
            })
            .collect();
        Value::Array(terms)
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: &[&str] = if self.nvars() == 1 { &["x"] } else { &["x", "y"] };
        f.write_str(&self.render(names))
    }
}

#[cfg(test)]
mod tests {
    use crate::poly::parse_poly;
    use crate::IntPoly;

    #[test]
    fn table_style_rendering() {
        let p: IntPoly = parse_poly("x^3y^3-2x^4y-2xy^4+3x^2y^2+2x^3+2y^3-5xy+1", &["x", "y"]).unwrap();
        assert_eq!(p.render(&["x", "y"]), "x^3y^3 - 2x^4y - 2xy^4 + 3x^2y^2 + 2x^3 + 2y^3 - 5xy + 1");
        let q: IntPoly = parse_poly("-y + x^2", &["x", "y"]).unwrap();
        assert_eq!(q.to_string(), "x^2 - y");
        assert_eq!(IntPoly::zero(1).render(&["t"]), "0");
    }

    #[test]
    fn json_terms() {
        let q: IntPoly = parse_poly("x^2-y", &["x", "y"]).unwrap();
        assert_eq!(q.to_json().to_string(), r#"[[2,0,"1"],[0,1,"-1"]]"#);
    }
}
