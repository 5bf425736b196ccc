//! Named built-in algebras and the JSON algebra format.
//!
//! Names: `auslander:n=N`, `hereditary:<type>`, `preprojective:<type>` and
//! `preprojective:<type>:d=d1,d2,...`. For a non-symmetric type the
//! symmetrizer `D` must make `C·D` symmetric; `preprojective:B2:d=2,1` uses
//! `C = [[2,-2],[-1,2]]`.

use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::algebra::Algebra;
use crate::linalg::Rat;
use crate::module::{injective_module, tau, tau_inverse, Module};
use crate::preprojective::{default_orientation, preprojective_checked, PreprojectiveError};
use crate::quiver::{auslander_nilpotent, bound_quiver_algebra, hereditary, Quiver, QuiverError, Relation, DEFAULT_LENGTH_CAP};
use crate::weyl::{CartanGcm, WeylError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown algebra name {0}")]
    Unknown(String),
    #[error("bad parameter in {0}")]
    Parameter(String),
    #[error("malformed algebra file: {0}")]
    Json(String),
    #[error("bad module: {0}")]
    Module(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Preprojective(#[from] PreprojectiveError),
}

/// An algebra together with its Cartan data when it comes from a root system.
#[derive(Clone, Debug)]
pub struct Named {
    pub algebra: Arc<Algebra>,
    pub gcm: Option<CartanGcm>,
}

/// Cartan matrix for a type name, transposed when needed so that `C·D` is
/// symmetric for the given symmetrizer.
fn gcm_for(ty: &str, d: Option<&[i64]>) -> Result<CartanGcm, CatalogError> {
    let c = CartanGcm::of_type(ty)?;
    let Some(d) = d else { return Ok(c) };
    if d.len() != c.rank() {
        return Err(CatalogError::Parameter(format!("symmetrizer length for {ty}")));
    }
    let fits = |c: &CartanGcm| (0..d.len()).all(|i| (0..d.len()).all(|j| c.entry(i, j) * d[j] == c.entry(j, i) * d[i]));
    if fits(&c) {
        return Ok(c);
    }
    let t = c.transpose();
    if fits(&t) {
        return Ok(t);
    }
    Err(CatalogError::Parameter(format!("{d:?} does not symmetrize {ty}")))
}

/// Path algebra of a Dynkin quiver with arrows `i -> j` for `i < j`.
pub fn dynkin_hereditary(ty: &str) -> Result<Algebra, CatalogError> {
    let c = CartanGcm::of_type(ty)?;
    let mut q = Quiver::new(c.rank());
    for (k, (i, j)) in default_orientation(&c).into_iter().enumerate() {
        q.arrow(format!("x{}", k + 1), i, j);
    }
    Ok(hereditary(format!("hereditary:{ty}"), &q)?)
}

pub fn build(name: &str) -> Result<Named, CatalogError> {
    let unknown = || CatalogError::Unknown(name.to_string());
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["auslander", param] => {
            let n = param
                .strip_prefix("n=")
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|n| (1..=6).contains(n))
                .ok_or_else(|| CatalogError::Parameter(name.to_string()))?;
            Ok(Named {
                algebra: Arc::new(auslander_nilpotent(n)?),
                gcm: Some(CartanGcm::of_type(&format!("A{n}"))?),
            })
        }
        ["hereditary", ty] => Ok(Named {
            algebra: Arc::new(dynkin_hereditary(ty)?),
            gcm: Some(CartanGcm::of_type(ty)?),
        }),
        ["preprojective", ty] => {
            let c = gcm_for(ty, None)?;
            let d = c.find_symmetrizer()?;
            let c = gcm_for(ty, Some(&d))?;
            Ok(Named {
                algebra: Arc::new(preprojective_checked(name, &c, &d)?),
                gcm: Some(c),
            })
        }
        ["preprojective", ty, param] => {
            let d: Vec<i64> = param
                .strip_prefix("d=")
                .ok_or_else(|| CatalogError::Parameter(name.to_string()))?
                .split(',')
                .map(|s| s.trim().parse::<i64>())
                .collect::<Result<_, _>>()
                .map_err(|_| CatalogError::Parameter(name.to_string()))?;
            if d.iter().any(|&x| x <= 0) {
                return Err(CatalogError::Parameter(name.to_string()));
            }
            let c = gcm_for(ty, Some(&d))?;
            Ok(Named {
                algebra: Arc::new(preprojective_checked(name, &c, &d)?),
                gcm: Some(c),
            })
        }
        _ => Err(unknown()),
    }
}

/// Parses a module description over `alg`: summands joined by `+`, each one
/// of `P<i>`, `I<i>`, `S<i>`, `radP<i>`, `radI<i>`, `topP<i>`, or
/// `tau(<summand>)` / `taui(<summand>)`. Vertices are one-based.
pub fn parse_module(alg: &Arc<Algebra>, spec: &str) -> Result<Module, CatalogError> {
    let parts: Vec<Module> = spec
        .split('+')
        .map(|p| parse_summand(alg, p.trim()))
        .collect::<Result<_, _>>()?;
    if parts.len() == 1 {
        return Ok(parts.into_iter().next().expect("one part"));
    }
    Module::direct_sum(&parts).map_err(|e| CatalogError::Module(format!("{spec}: {e}")))
}

fn parse_summand(alg: &Arc<Algebra>, s: &str) -> Result<Module, CatalogError> {
    let bad = || CatalogError::Module(format!("cannot parse module {s:?}"));
    for (prefix, inverse) in [("taui(", true), ("tau(", false)] {
        if let Some(inner) = s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) {
            let m = parse_summand(alg, inner)?;
            return Ok(if inverse { tau_inverse(&m) } else { tau(&m) });
        }
    }
    let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
    let (kind, num) = s.split_at(split);
    let v: usize = num.parse().map_err(|_| bad())?;
    if v == 0 || v > alg.vertices() {
        return Err(CatalogError::Module(format!("vertex {v} outside 1..={}", alg.vertices())));
    }
    let v = v - 1;
    let p = || Module::projective(alg.clone(), v);
    Ok(match kind {
        "P" => p(),
        "I" => injective_module(alg, v),
        "S" => Module::simple(alg.clone(), v),
        "radP" => p().radical_submodule().module,
        "radI" => injective_module(alg, v).radical_submodule().module,
        "topP" => p().top().module,
        _ => return Err(bad()),
    })
}

/// Comma-separated one-based integers, e.g. a word `1,2,1`.
pub fn parse_indices(s: &str) -> Result<Vec<usize>, CatalogError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| match x.trim().parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(CatalogError::Parameter(format!("{s:?} is not a list of positive integers"))),
        })
        .collect()
}

/// Names used by `verify all` and the acceptance suite.
pub const DESK_ALGEBRAS: &[&str] = &[
    "hereditary:A2",
    "hereditary:A3",
    "hereditary:D4",
    "auslander:n=2",
    "auslander:n=3",
    "preprojective:A2",
    "preprojective:A3",
    "preprojective:B2:d=2,1",
];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub label: String,
    /// One-based.
    pub src: usize,
    /// One-based.
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermSpec {
    pub coeff: Value,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub vertices: usize,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<TermSpec>>,
    /// Path length cap for the basis search.
    #[serde(default)]
    pub caps: Option<usize>,
}

fn coefficient(v: &Value) -> Result<Rat, CatalogError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Rat::from)
            .ok_or_else(|| CatalogError::Json(format!("coefficient {n} is not an integer"))),
        Value::String(s) => Rat::from_str(s).map_err(|_| CatalogError::Json(format!("coefficient {s:?}"))),
        other => Err(CatalogError::Json(format!("coefficient {other}"))),
    }
}

impl AlgebraSpec {
    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        serde_json::from_str(text).map_err(|e| CatalogError::Json(e.to_string()))
    }

    pub fn build(&self) -> Result<Algebra, CatalogError> {
        let mut q = Quiver::new(self.vertices);
        for a in &self.arrows {
            if a.src == 0 || a.tgt == 0 || a.src > self.vertices || a.tgt > self.vertices {
                return Err(QuiverError::BadArrow {
                    label: a.label.clone(),
                    vertices: self.vertices,
                }
                .into());
            }
            q.arrow(a.label.clone(), a.src - 1, a.tgt - 1);
        }
        q.validate()?;
        let mut rels = Vec::new();
        for r in &self.relations {
            let mut terms = Vec::new();
            for t in r {
                let path = t
                    .path
                    .iter()
                    .map(|l| q.arrow_index(l).ok_or_else(|| QuiverError::UnknownLabel(l.clone())))
                    .collect::<Result<Vec<_>, _>>()?;
                terms.push((coefficient(&t.coeff)?, path));
            }
            rels.push(Relation { terms });
        }
        let name = self.name.clone().unwrap_or_else(|| "input".to_string());
        Ok(bound_quiver_algebra(name, &q, &rels, self.caps.unwrap_or(DEFAULT_LENGTH_CAP))?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theory::cartan_matrix;

    #[test]
    fn named_dimensions() {
        let dims = [
            ("hereditary:A2", 3),
            ("hereditary:A3", 6),
            ("hereditary:D4", 9),
            ("auslander:n=2", 5),
            ("preprojective:A1", 1),
            ("preprojective:A2", 4),
            ("preprojective:A3", 10),
            ("preprojective:B2:d=2,1", 10),
        ];
        for (name, dim) in dims {
            assert_eq!(build(name).unwrap().algebra.dim(), dim, "{name}");
        }
        assert!(matches!(build("nonsense"), Err(CatalogError::Unknown(_))));
        assert!(matches!(build("auslander:n=x"), Err(CatalogError::Parameter(_))));
    }

    #[test]
    fn module_specs() {
        let a = build("hereditary:A2").unwrap().algebra;
        assert_eq!(parse_module(&a, "P1").unwrap().dim_vector(), vec![1, 1]);
        assert_eq!(parse_module(&a, "P1+S1").unwrap().dim_vector(), vec![2, 1]);
        assert_eq!(parse_module(&a, "tau(S1)").unwrap().dim_vector(), vec![0, 1]);
        assert_eq!(parse_module(&a, "taui(S2)").unwrap().dim_vector(), vec![1, 0]);
        assert_eq!(parse_module(&a, "radP1").unwrap().dim_vector(), vec![0, 1]);
        assert!(parse_module(&a, "P3").is_err());
        assert!(parse_module(&a, "Q1").is_err());
        assert_eq!(parse_indices("1,2, 1").unwrap(), vec![0, 1, 0]);
        assert!(parse_indices("0").is_err());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"vertices": 2, "arrows": [{"label": "a", "src": 1, "tgt": 2}], "relations": []}"#;
        let spec = AlgebraSpec::parse(text).unwrap();
        let a = spec.build().unwrap();
        assert_eq!(cartan_matrix(&a).to_i64_rows(), vec![vec![1, 0], vec![1, 1]]);
        let again: AlgebraSpec = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(again, spec);
    }

    #[test]
    fn json_relations_and_errors() {
        let text = r#"{"vertices": 1, "arrows": [{"label": "x", "src": 1, "tgt": 1}],
                       "relations": [[{"coeff": 1, "path": ["x", "x", "x"]}]], "caps": 8}"#;
        assert_eq!(AlgebraSpec::parse(text).unwrap().build().unwrap().dim(), 3);
        let bad = r#"{"vertices": 1, "arrows": [{"label": "x", "src": 1, "tgt": 3}]}"#;
        assert!(AlgebraSpec::parse(bad).unwrap().build().is_err());
        assert!(AlgebraSpec::parse("{").is_err());
    }
}
