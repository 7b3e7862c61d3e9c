//! The instance file format.
//!
//! An explicit ideal is a header followed by one generator per line:
//!
//! ```text
//! # the triangle
//! vars: 3
//! x1*x2
//! 1 0 1
//! x2*x3
//! ```
//!
//! A line of integers is an exponent vector; anything else is a product of
//! variables `x<i>` (one-based) or declared `names:`, each optionally raised
//! to a power with `^`. A constructor stanza names a family instead:
//!
//! ```text
//! family: graphic
//! vertices: 3
//! edges: 1-2 1-3 2-3
//! ```
//!
//! Other families: `uniform` (`vars`, `degree`), `veronese` (`degree`,
//! `caps`), `transversal` (`vars`, `sets: {1,2} {3,4,5}`).

use std::collections::HashMap;

use monostab::{Exponent, Graph, MatroidSpec, Monomial, MonomialIdeal, PrimeSupport};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub spec: MatroidSpec,
    /// Display names from a `names:` header, one per variable.
    pub names: Option<Vec<String>>,
}

impl Instance {
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        Ok(self.spec.build()?)
    }
}

const KEYS: &[&str] = &[
    "vars", "names", "family", "vertices", "edges", "degree", "caps", "sets",
];

struct Field<'a> {
    line: usize,
    column: usize,
    value: &'a str,
}

struct Parser<'a> {
    origin: &'a str,
}

impl Parser<'_> {
    fn err(&self, line: usize, column: usize, message: impl Into<String>) -> CliError {
        CliError::Parse {
            origin: self.origin.to_string(),
            line,
            column,
            message: message.into(),
        }
    }
}

/// Parse instance text. `origin` labels error messages (usually the path).
pub fn parse_instance(text: &str, origin: &str) -> Result<Instance> {
    let p = Parser { origin };
    let mut fields: HashMap<&str, Field> = HashMap::new();
    let mut body: Vec<(usize, usize, &str)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let column = indent + 1;
        if let Some((key, value)) = trimmed.split_once(':') {
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(p.err(line, column, format!("unknown header `{key}`")));
            }
            if !body.is_empty() {
                return Err(p.err(line, column, "headers must precede generator lines"));
            }
            if fields.contains_key(key) {
                return Err(p.err(line, column, format!("duplicate header `{key}`")));
            }
            let value_col = column + trimmed.find(':').unwrap() + 1;
            let lead = value.len() - value.trim_start().len();
            fields.insert(
                key,
                Field {
                    line,
                    column: value_col + lead,
                    value: value.trim(),
                },
            );
        } else {
            body.push((line, column, trimmed));
        }
    }

    let family = fields.get("family").map(|f| f.value).unwrap_or("explicit");
    let allowed: &[&str] = match family {
        "explicit" => &["vars", "names", "family"],
        "uniform" => &["vars", "degree", "family"],
        "veronese" => &["degree", "caps", "family"],
        "graphic" => &["vertices", "edges", "family"],
        "transversal" => &["vars", "sets", "family"],
        other => {
            let f = &fields["family"];
            return Err(p.err(f.line, f.column, format!("unknown family `{other}`")));
        }
    };
    // Report stray headers in file order so the message is deterministic.
    let mut stray: Vec<(&&str, &Field)> = fields
        .iter()
        .filter(|(k, _)| !allowed.contains(k))
        .collect();
    stray.sort_by_key(|(_, f)| f.line);
    if let Some((k, f)) = stray.first() {
        return Err(p.err(
            f.line,
            f.column,
            format!("header `{k}` does not apply to family `{family}`"),
        ));
    }
    if family != "explicit" {
        if let Some(&(line, column, _)) = body.first() {
            return Err(p.err(line, column, "constructor stanzas take no generator lines"));
        }
    }
    let need = |key: &str| -> Result<&Field> {
        fields
            .get(key)
            .ok_or_else(|| p.err(last_line.max(1), 1, format!("missing header `{key}`")))
    };

    let spec = match family {
        "explicit" => {
            let n = parse_count(&p, need("vars")?)?;
            let names = match fields.get("names") {
                Some(f) => Some(parse_names(&p, f, n)?),
                None => None,
            };
            if body.is_empty() {
                return Err(p.err(last_line.max(1), 1, "no generators given"));
            }
            let mut gens = Vec::with_capacity(body.len());
            for &(line, column, text) in &body {
                gens.push(parse_monomial(&p, line, column, text, n, names.as_deref())?);
            }
            let ideal = MonomialIdeal::minimalize(gens, n)?;
            return Ok(Instance {
                spec: MatroidSpec::Explicit(ideal),
                names,
            });
        }
        "uniform" => MatroidSpec::Uniform {
            n: parse_count(&p, need("vars")?)?,
            degree: parse_number(&p, need("degree")?)?,
        },
        "veronese" => {
            let caps_field = need("caps")?;
            let caps = parse_list(&p, caps_field)?;
            if caps.is_empty() {
                return Err(p.err(caps_field.line, caps_field.column, "no caps given"));
            }
            MatroidSpec::Veronese {
                degree: parse_number(&p, need("degree")?)?,
                caps,
            }
        }
        "graphic" => {
            let vertices = parse_count(&p, need("vertices")?)?;
            let edges = parse_edges(&p, need("edges")?, vertices)?;
            let f = &fields["edges"];
            let graph =
                Graph::new(vertices, edges).map_err(|e| p.err(f.line, f.column, e.to_string()))?;
            MatroidSpec::Graphic(graph)
        }
        "transversal" => {
            let n = parse_count(&p, need("vars")?)?;
            MatroidSpec::Transversal {
                n,
                sets: parse_sets(&p, need("sets")?, n)?,
            }
        }
        _ => unreachable!("family checked above"),
    };
    Ok(Instance { spec, names: None })
}

fn parse_number<T: std::str::FromStr>(p: &Parser, f: &Field) -> Result<T> {
    f.value.parse().map_err(|_| {
        p.err(
            f.line,
            f.column,
            format!("expected a number, found `{}`", f.value),
        )
    })
}

fn parse_count(p: &Parser, f: &Field) -> Result<usize> {
    let n: usize = parse_number(p, f)?;
    if n == 0 {
        return Err(p.err(f.line, f.column, "need at least one variable"));
    }
    Ok(n)
}

/// Whitespace-separated tokens with their byte offsets inside `s`.
fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.split_whitespace()
        .map(move |t| (t.as_ptr() as usize - s.as_ptr() as usize, t))
}

fn parse_list(p: &Parser, f: &Field) -> Result<Vec<Exponent>> {
    tokens(f.value)
        .map(|(off, t)| {
            t.parse().map_err(|_| {
                p.err(
                    f.line,
                    f.column + off,
                    format!("expected a number, found `{t}`"),
                )
            })
        })
        .collect()
}

fn parse_names(p: &Parser, f: &Field, n: usize) -> Result<Vec<String>> {
    let names: Vec<(usize, &str)> = tokens(f.value).collect();
    if names.len() != n {
        return Err(p.err(
            f.line,
            f.column,
            format!("expected {n} names, found {}", names.len()),
        ));
    }
    let mut seen = HashMap::new();
    for &(off, name) in &names {
        let ok = name
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(p.err(
                f.line,
                f.column + off,
                format!("invalid variable name `{name}`"),
            ));
        }
        if seen.insert(name, ()).is_some() {
            return Err(p.err(f.line, f.column + off, format!("duplicate name `{name}`")));
        }
    }
    Ok(names.into_iter().map(|(_, s)| s.to_string()).collect())
}

fn parse_monomial(
    p: &Parser,
    line: usize,
    column: usize,
    text: &str,
    n: usize,
    names: Option<&[String]>,
) -> Result<Monomial> {
    if text
        .split_whitespace()
        .all(|t| t.bytes().all(|b| b.is_ascii_digit()))
    {
        let mut exps = Vec::with_capacity(n);
        for (off, t) in tokens(text) {
            exps.push(
                t.parse::<Exponent>().map_err(|_| {
                    p.err(line, column + off, format!("exponent `{t}` out of range"))
                })?,
            );
        }
        if exps.len() != n {
            return Err(p.err(
                line,
                column,
                format!("expected {n} exponents, found {}", exps.len()),
            ));
        }
        return Ok(Monomial::new(&exps));
    }

    let mut exps: Vec<Exponent> = vec![0; n];
    let mut off = 0;
    for factor in text.split('*') {
        let col = column + off + (factor.len() - factor.trim_start().len());
        off += factor.len() + 1;
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(p.err(line, col, "empty factor"));
        }
        let (base, power) = match factor.split_once('^') {
            Some((b, e)) => {
                let e: Exponent = e.trim().parse().map_err(|_| {
                    p.err(
                        line,
                        col + b.len() + 1,
                        format!("bad exponent `{}`", e.trim()),
                    )
                })?;
                (b.trim(), e)
            }
            None => (factor, 1),
        };
        let var = resolve_var(base, n, names)
            .ok_or_else(|| p.err(line, col, format!("unknown variable `{base}`")))?;
        exps[var] = exps[var]
            .checked_add(power)
            .ok_or_else(|| p.err(line, col, "exponent overflow"))?;
    }
    Ok(Monomial::new(&exps))
}

fn resolve_var(base: &str, n: usize, names: Option<&[String]>) -> Option<usize> {
    if let Some(k) = names.and_then(|ns| ns.iter().position(|s| s == base)) {
        return Some(k);
    }
    let idx: usize = base.strip_prefix('x')?.parse().ok()?;
    (1..=n).contains(&idx).then(|| idx - 1)
}

fn parse_edges(p: &Parser, f: &Field, vertices: usize) -> Result<Vec<(usize, usize)>> {
    let mut edges = Vec::new();
    for (off, t) in tokens(f.value) {
        let bad = || {
            p.err(
                f.line,
                f.column + off,
                format!("expected an edge `a-b`, found `{t}`"),
            )
        };
        let (a, b) = t.split_once('-').ok_or_else(bad)?;
        let a: usize = a.parse().map_err(|_| bad())?;
        let b: usize = b.parse().map_err(|_| bad())?;
        if a == 0 || b == 0 || a > vertices || b > vertices {
            return Err(p.err(
                f.line,
                f.column + off,
                format!("edge `{t}` leaves the vertex range 1..={vertices}"),
            ));
        }
        edges.push((a - 1, b - 1));
    }
    Ok(edges)
}

fn parse_sets(p: &Parser, f: &Field, n: usize) -> Result<Vec<PrimeSupport>> {
    let mut sets = Vec::new();
    let mut rest = f.value;
    let mut base = 0;
    loop {
        let skip = rest.len() - rest.trim_start().len();
        rest = rest.trim_start();
        base += skip;
        if rest.is_empty() {
            break;
        }
        let col = f.column + base;
        if !rest.starts_with('{') {
            return Err(p.err(f.line, col, "expected `{` to open a set"));
        }
        let close = rest
            .find('}')
            .ok_or_else(|| p.err(f.line, col, "unclosed set"))?;
        let mut vars = Vec::new();
        for item in rest[1..close].split(',') {
            let item = item.trim();
            let v: usize = item
                .parse()
                .ok()
                .filter(|v| (1..=n).contains(v))
                .ok_or_else(|| p.err(f.line, col, format!("bad variable `{item}` in set")))?;
            vars.push(v - 1);
        }
        sets.push(PrimeSupport::new(n, vars)?);
        rest = &rest[close + 1..];
        base += close + 1;
    }
    if sets.is_empty() {
        return Err(p.err(f.line, f.column, "no sets given"));
    }
    Ok(sets)
}

/// Render an ideal in the explicit instance format, symbolic form.
pub fn render_instance(ideal: &MonomialIdeal) -> String {
    let mut out = format!("vars: {}\n", ideal.num_vars());
    for g in ideal.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> MonomialIdeal {
        MonomialIdeal::minimalize(
            [[1, 1, 0], [1, 0, 1], [0, 1, 1]]
                .iter()
                .map(|e| Monomial::new(e)),
            3,
        )
        .unwrap()
    }

    fn parse(text: &str) -> Result<Instance> {
        parse_instance(text, "test")
    }

    fn location(e: CliError) -> (usize, usize) {
        match e {
            CliError::Parse { line, column, .. } => (line, column),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn symbolic_triangle() {
        let inst = parse("vars: 3\nx1*x2\nx1*x3\nx2*x3").unwrap();
        assert_eq!(inst.ideal().unwrap(), k3());
    }

    #[test]
    fn mixed_forms_and_duplicates() {
        let inst = parse("# comment\nvars: 3\n1 1 0\nx1*x3   # trailing\n0 1 1\nx2*x1\n").unwrap();
        assert_eq!(inst.ideal().unwrap(), k3());
    }

    #[test]
    fn powers_and_names() {
        let inst = parse("vars: 2\nnames: a b\na^2*b\nx2^3").unwrap();
        let i = inst.ideal().unwrap();
        assert_eq!(i.generators()[0], Monomial::new(&[2, 1]));
        assert_eq!(i.generators()[1], Monomial::new(&[0, 3]));
    }

    #[test]
    fn graphic_stanza_builds_triangle() {
        let inst = parse("family: graphic\nvertices: 3\nedges: 1-2 1-3 2-3").unwrap();
        assert_eq!(inst.spec.family(), "graphic");
        assert_eq!(inst.ideal().unwrap(), k3());
    }

    #[test]
    fn other_stanzas() {
        let u = parse("family: uniform\nvars: 3\ndegree: 2").unwrap();
        assert_eq!(u.ideal().unwrap(), k3());
        let v = parse("family: veronese\ndegree: 2\ncaps: 1 1 1").unwrap();
        assert_eq!(v.ideal().unwrap(), k3());
        let t = parse("family: transversal\nvars: 5\nsets: {1,2} {3,4,5}").unwrap();
        assert_eq!(t.ideal().unwrap().len(), 6);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(location(parse("vars: 3\nx1*x4").unwrap_err()), (2, 4));
        assert_eq!(location(parse("vars: 3\n1 0").unwrap_err()), (2, 1));
        assert_eq!(location(parse("vars: 3\n  x1**x2").unwrap_err()), (2, 6));
        assert_eq!(location(parse("vars: x").unwrap_err()), (1, 7));
        assert_eq!(location(parse("family: matroid\n").unwrap_err()), (1, 9));
        assert_eq!(location(parse("colour: red").unwrap_err()), (1, 1));
        assert_eq!(
            location(parse("family: graphic\nvertices: 3\nedges: 1-2 1-4").unwrap_err()),
            (3, 12)
        );
        assert_eq!(location(parse("vars: 2\nx1\nvars: 2").unwrap_err()), (3, 1));
    }

    #[test]
    fn missing_pieces_are_errors() {
        assert!(parse("x1*x2").is_err());
        assert!(parse("vars: 2\n").is_err());
        assert!(parse("family: uniform\nvars: 3").is_err());
        assert!(parse("family: graphic\nvertices: 2\nedges: 1-2\nx1").is_err());
        assert!(parse("family: transversal\nvars: 3\nsets: {1,2").is_err());
        assert!(parse("vars: 2\nnames: a\na").is_err());
    }

    #[test]
    fn render_round_trips() {
        let inst = parse("vars: 4\nx1^2*x4\n0 1 1 0\nx3^5").unwrap();
        let i = inst.ideal().unwrap();
        let again = parse(&render_instance(&i)).unwrap().ideal().unwrap();
        assert_eq!(again, i);
    }
}
