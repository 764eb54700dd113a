//! Certificate files.
//!
//! ```text
//! {"clique_size":3,"terminals":[0,1,2],"connections":[
//! {"pair":[0,1],"vertices":[0,1]},
//! {"pair":[0,2],"vertices":[0,4,3,2]},
//! {"pair":[1,2],"vertices":[1,2]}
//! ]}
//! ```
//!
//! Serialization is canonical: one connection per line in pair order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;

use super::{Certificate, Route};
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCertificate {
    clique_size: i64,
    terminals: Vec<i64>,
    connections: Vec<RawConnection>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConnection {
    pair: Vec<i64>,
    vertices: Vec<i64>,
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.into(),
        message: message.into(),
    }
}

fn id(value: i64, path: impl FnOnce() -> String) -> Result<usize> {
    usize::try_from(value).map_err(|_| schema(path(), format!("{value} is not a valid id")))
}

pub fn serialize_certificate(cert: &Certificate) -> String {
    let join = |xs: &[usize]| {
        xs.iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{{\"clique_size\":{},\"terminals\":[{}],\"connections\":[",
        cert.clique_size(),
        join(cert.terminals())
    );
    let total = cert.connections().len();
    for (k, (&(a, b), route)) in cert.connections().iter().enumerate() {
        let sep = if k + 1 < total { "," } else { "" };
        let _ = writeln!(
            out,
            "{{\"pair\":[{a},{b}],\"vertices\":[{}]}}{sep}",
            join(route.vertices())
        );
    }
    out.push_str("]}\n");
    out
}

pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let raw: RawCertificate = serde_json::from_str(text).map_err(|e| {
        schema(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;

    if raw.clique_size < 1 {
        return Err(schema("clique_size", "must be at least 1"));
    }
    let r = raw.clique_size as usize;
    if raw.terminals.len() != r {
        return Err(schema(
            "terminals",
            format!(
                "{} terminals listed for clique_size {r}",
                raw.terminals.len()
            ),
        ));
    }
    let terminals = raw
        .terminals
        .iter()
        .enumerate()
        .map(|(i, &t)| id(t, || format!("terminals[{i}]")))
        .collect::<Result<Vec<_>>>()?;

    let mut connections = BTreeMap::new();
    for (k, c) in raw.connections.iter().enumerate() {
        let &[a, b] = c.pair.as_slice() else {
            return Err(schema(
                format!("connections[{k}].pair"),
                "expected exactly two terminal indices",
            ));
        };
        let a = id(a, || format!("connections[{k}].pair[0]"))?;
        let b = id(b, || format!("connections[{k}].pair[1]"))?;
        if !(a < b && b < r) {
            return Err(schema(
                format!("connections[{k}].pair"),
                format!("[{a},{b}] is not a terminal-index pair a < b < {r}"),
            ));
        }
        if c.vertices.is_empty() {
            return Err(schema(
                format!("connections[{k}].vertices"),
                "route is empty",
            ));
        }
        let vertices = c
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| id(v, || format!("connections[{k}].vertices[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        if connections.insert((a, b), Route::new(vertices)).is_some() {
            return Err(schema(
                format!("connections[{k}].pair"),
                format!("pair [{a},{b}] appears twice"),
            ));
        }
    }
    for a in 0..r {
        for b in a + 1..r {
            if !connections.contains_key(&(a, b)) {
                return Err(schema("connections", format!("missing pair [{a},{b}]")));
            }
        }
    }
    Certificate::new(terminals, connections)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Certificate {
        let mut c = Certificate::identity(3).unwrap();
        c.set_route(0, 2, Route::new(vec![0, 4, 3, 2])).unwrap();
        c
    }

    #[test]
    fn identity_k3_has_three_records() {
        let text = serialize_certificate(&Certificate::identity(3).unwrap());
        assert_eq!(text.matches("\"pair\"").count(), 3);
        assert_eq!(
            text,
            "{\"clique_size\":3,\"terminals\":[0,1,2],\"connections\":[\n\
             {\"pair\":[0,1],\"vertices\":[0,1]},\n\
             {\"pair\":[0,2],\"vertices\":[0,2]},\n\
             {\"pair\":[1,2],\"vertices\":[1,2]}\n\
             ]}\n"
        );
    }

    #[test]
    fn round_trip() {
        let c = c5();
        assert_eq!(parse_certificate(&serialize_certificate(&c)).unwrap(), c);
        let one = Certificate::identity(1).unwrap();
        assert_eq!(
            parse_certificate(&serialize_certificate(&one)).unwrap(),
            one
        );
    }

    #[test]
    fn missing_pair_is_named() {
        let text = r#"{"clique_size":3,"terminals":[0,1,2],"connections":[
            {"pair":[0,1],"vertices":[0,1]},{"pair":[1,2],"vertices":[1,2]}]}"#;
        match parse_certificate(text) {
            Err(Error::Schema { message, .. }) => assert!(message.contains("[0,2]")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn schema_errors_carry_paths() {
        let cases = [
            (
                r#"{"clique_size":2,"terminals":[0,1],"connections":[{"pair":[0,1],"vertices":[0,-1]}]}"#,
                "connections[0].vertices[1]",
            ),
            (
                r#"{"clique_size":2,"terminals":[0,1],"connections":[{"pair":[0,1],"vertices":[0,1]},{"pair":[0,1],"vertices":[0,1]}]}"#,
                "connections[1].pair",
            ),
            (
                r#"{"clique_size":2,"terminals":[0,1],"connections":[{"pair":[1,0],"vertices":[0,1]}]}"#,
                "connections[0].pair",
            ),
            (
                r#"{"clique_size":2,"terminals":[0],"connections":[]}"#,
                "terminals",
            ),
            (
                r#"{"clique_size":0,"terminals":[],"connections":[]}"#,
                "clique_size",
            ),
            (
                r#"{"clique_size":2,"terminals":[0,1],"connections":[{"pair":[0,1],"vertices":[]}]}"#,
                "connections[0].vertices",
            ),
        ];
        for (text, want) in cases {
            match parse_certificate(text) {
                Err(Error::Schema { path, .. }) => assert_eq!(path, want, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn rejects_truncated_and_unknown_fields() {
        let text = serialize_certificate(&c5());
        assert!(parse_certificate(&text[..text.len() / 2]).is_err());
        assert!(
            parse_certificate(r#"{"clique_size":1,"terminals":[0],"connections":[],"x":1}"#)
                .is_err()
        );
    }
}
