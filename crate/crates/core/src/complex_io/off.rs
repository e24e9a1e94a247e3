//! ASCII OFF meshes. Only the face lists matter; coordinates are validated
//! as numbers and then discarded. Polygonal faces stay whole.

use std::fmt::Write;

use super::ToplexList;
use crate::error::{Error, Result};

pub fn parse_off(text: &str) -> Result<ToplexList> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, first) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing OFF header"))?;
    let mut tokens = first.split_whitespace();
    if tokens.next() != Some("OFF") {
        return Err(Error::parse(ln, "expected `OFF` header"));
    }
    let mut counts: Vec<&str> = tokens.collect();
    let mut count_line = ln;
    if counts.is_empty() {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(ln, "missing vertex/face counts"))?;
        counts = line.split_whitespace().collect();
        count_line = ln;
    }
    if counts.len() < 2 {
        return Err(Error::parse(
            count_line,
            "expected `<vertices> <faces> [edges]`",
        ));
    }
    let n_vertices = parse_usize(count_line, counts[0])?;
    let n_faces = parse_usize(count_line, counts[1])?;

    let mut last = count_line;
    for v in 0..n_vertices {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(last, format!("truncated: missing vertex {v}")))?;
        last = ln;
        let coords: Vec<&str> = line.split_whitespace().collect();
        if coords.len() < 3 || coords[..3].iter().any(|c| c.parse::<f64>().is_err()) {
            return Err(Error::parse(ln, "vertex line needs three coordinates"));
        }
    }

    let mut faces = Vec::with_capacity(n_faces);
    for f in 0..n_faces {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::parse(last, format!("truncated: missing face {f}")))?;
        last = ln;
        let mut toks = line.split_whitespace();
        let k = parse_usize(ln, toks.next().unwrap_or_default())?;
        if k == 0 {
            return Err(Error::parse(ln, "face with no vertices"));
        }
        let mut face = Vec::with_capacity(k);
        for _ in 0..k {
            let tok = toks
                .next()
                .ok_or_else(|| Error::parse(ln, format!("face declares {k} vertices")))?;
            let v = parse_usize(ln, tok)?;
            if v >= n_vertices {
                return Err(Error::parse(ln, format!("vertex index {v} out of range")));
            }
            if face.contains(&v) {
                return Err(Error::parse(ln, format!("vertex {v} repeated in face")));
            }
            face.push(v);
        }
        faces.push(face);
    }
    let names = (0..n_vertices).map(|v| format!("v{v}")).collect();
    ToplexList::from_indexed(names, faces)
}

/// Writes the toplexes as OFF faces with every vertex at the origin.
pub fn write_off(tl: &ToplexList) -> String {
    let mut out = String::from("OFF\n");
    writeln!(out, "{} {} 0", tl.n_vertices(), tl.len()).unwrap();
    for _ in 0..tl.n_vertices() {
        out.push_str("0 0 0\n");
    }
    for t in tl.toplexes() {
        write!(out, "{}", t.len()).unwrap();
        for v in t {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn parse_usize(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| {
        Error::parse(
            line,
            format!("expected a non-negative integer, got `{tok}`"),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex_io::gen_sphere_cube;

    const TETRA: &str = "OFF\n# tetrahedron\n4 4 6\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n\
                         3 0 1 2\n3 0 1 3\n3 0 2 3\n3 1 2 3\n";

    #[test]
    fn tetrahedron() {
        let tl = parse_off(TETRA).unwrap();
        assert_eq!(tl.len(), 4);
        assert!(tl.toplexes().iter().all(|t| t.len() == 3));
    }

    #[test]
    fn cube_round_trip() {
        let cube = gen_sphere_cube();
        let tl = parse_off(&write_off(&cube)).unwrap();
        assert_eq!(tl.len(), 12);
        assert!(tl.toplexes().iter().all(|t| t.len() == 3));
        assert_eq!(tl.toplexes(), cube.toplexes());
    }

    #[test]
    fn quad_face() {
        let tl = parse_off("OFF 4 1 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3\n").unwrap();
        assert_eq!(tl.toplexes(), &[vec![0, 1, 2, 3]]);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_off("PLY\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_off("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 7\n"),
            Err(Error::Parse { line: 6, .. })
        ));
        assert!(matches!(
            parse_off("OFF\n3 1 0\n0 0 0\n1 0 0\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_off("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n"),
            Err(Error::Parse { .. })
        ));
    }
}
