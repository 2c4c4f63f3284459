//! On-disk description of a finite grid algebra, plus the line-oriented
//! point-map format used by the `extend` and `functor` subcommands.
//!
//! Algebra files are TOML:
//!
//! ```toml
//! points = ["x1", "x2"]
//! den = 2
//! generators = [["1/2", "1/2"]]
//! ```
//!
//! Map files carry one `target_point=source_point` line each; blank lines
//! and `#` comments are ignored. The source point names the class it
//! belongs to.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::mvcore::{GridAlgebra, PointMapHom, PointSet};
use crate::rat::{parse_rat, QVector};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub points: Vec<String>,
    pub den: u64,
    pub generators: Vec<Vec<String>>,
}

impl AlgebraSpec {
    pub fn parse(text: &str) -> Result<AlgebraSpec> {
        toml::from_str(text).map_err(|e| Error::Parse(format!("algebra spec: {e}")))
    }

    pub fn to_algebra(&self) -> Result<GridAlgebra> {
        let points = PointSet::new(self.points.clone())?;
        let mut gens = Vec::new();
        for g in &self.generators {
            if g.len() != self.points.len() {
                return Err(Error::Parse(format!(
                    "generator has {} entries for {} points",
                    g.len(),
                    self.points.len()
                )));
            }
            let entries = g.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?;
            gens.push(QVector::new(entries));
        }
        GridAlgebra::generate(points, self.den, gens)
    }
}

pub fn load_algebra(path: &str) -> Result<GridAlgebra> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
    AlgebraSpec::parse(&text)?.to_algebra()
}

/// Parses a point-map file into a hom candidate from `source` to `target`.
pub fn parse_point_map(
    text: &str,
    source: &GridAlgebra,
    target: &GridAlgebra,
) -> Result<PointMapHom> {
    let classes = source.point_classes();
    let class_of_point = |idx: usize| {
        classes
            .iter()
            .position(|c| c.contains(&idx))
            .expect("classes partition the points")
    };
    let mut map = vec![None; target.dim()];
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((lhs, rhs)) = line.split_once('=') else {
            return Err(Error::Parse(format!(
                "line {}: expected target_point=source_point",
                lineno + 1
            )));
        };
        let t = target.points().index_of(lhs.trim()).ok_or_else(|| {
            Error::Parse(format!("line {}: unknown target point {}", lineno + 1, lhs.trim()))
        })?;
        let s = source.points().index_of(rhs.trim()).ok_or_else(|| {
            Error::Parse(format!("line {}: unknown source point {}", lineno + 1, rhs.trim()))
        })?;
        if map[t].is_some() {
            return Err(Error::Parse(format!(
                "line {}: target point {} mapped twice",
                lineno + 1,
                lhs.trim()
            )));
        }
        map[t] = Some(class_of_point(s));
    }
    let map = map
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            m.ok_or_else(|| {
                Error::Parse(format!(
                    "target point {} has no image",
                    target.points().labels()[i]
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PointMapHom { map })
}

pub fn load_point_map(
    path: &str,
    source: &GridAlgebra,
    target: &GridAlgebra,
) -> Result<PointMapHom> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
    parse_point_map(&text, source, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    const DIAGONAL: &str = r#"
points = ["x1", "x2"]
den = 2
generators = [["1/2", "1/2"]]
"#;

    #[test]
    fn parses_algebra_spec() {
        let a = AlgebraSpec::parse(DIAGONAL).unwrap().to_algebra().unwrap();
        assert_eq!(a.size(), 3);
        assert_eq!(a.den(), 2);
        assert_eq!(a.points().labels(), ["x1", "x2"]);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(AlgebraSpec::parse("points = 3").is_err());
        let bad = r#"
points = ["x1"]
den = 2
generators = [["1/2", "1/2"]]
"#;
        assert!(AlgebraSpec::parse(bad).unwrap().to_algebra().is_err());
        let out_of_grid = r#"
points = ["x1"]
den = 2
generators = [["1/3"]]
"#;
        assert!(AlgebraSpec::parse(out_of_grid).unwrap().to_algebra().is_err());
    }

    #[test]
    fn parses_point_map() {
        let source = AlgebraSpec::parse(DIAGONAL).unwrap().to_algebra().unwrap();
        let target_spec = r#"
points = ["y1"]
den = 2
generators = [["1/2"]]
"#;
        let target = AlgebraSpec::parse(target_spec).unwrap().to_algebra().unwrap();
        let h = parse_point_map("y1=x2\n", &source, &target).unwrap();
        // x1 and x2 are identified on the diagonal: single class 0.
        assert_eq!(h.map, vec![0]);
        let classes = source.point_classes();
        assert_eq!(
            h.apply(&classes, &crate::rat::QVector::new(vec![rat(1, 2), rat(1, 2)])),
            crate::rat::QVector::new(vec![rat(1, 2)])
        );
        assert!(parse_point_map("y1=zz\n", &source, &target).is_err());
        assert!(parse_point_map("", &source, &target).is_err());
    }
}
