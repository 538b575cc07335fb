//! Group specs: the catalog driver for families and file-backed groups.

use super::{families, perm, ElementId, FiniteGroup, GroupError, DEFAULT_MAX_ORDER};
use serde::Serialize;
use std::fmt;
use std::path::PathBuf;

/// A recipe for constructing a [`FiniteGroup`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic { n: usize },
    ElementaryAbelian { p: usize, r: u32 },
    Dihedral { n: usize },
    Symmetric { degree: usize },
    GeneralizedQuaternion { order: usize },
    Heisenberg { p: usize },
    DirectProduct { left: Box<GroupSpec>, right: Box<GroupSpec> },
    CayleyFile { path: PathBuf },
    PermFile { path: PathBuf },
}

impl GroupSpec {
    /// Parses one manifest line, e.g. `elementary_abelian 3 2` or
    /// `direct_product cyclic:2 cyclic:4`.
    pub fn parse(line: &str) -> Result<GroupSpec, GroupError> {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let bad = |msg: &str| GroupError::InvalidSpec(format!("{msg}: {line:?}"));
        let int = |tok: &str, what: &str| -> Result<usize, GroupError> {
            tok.parse()
                .map_err(|_| bad(&format!("bad {what} argument")))
        };
        match tokens.as_slice() {
            ["cyclic", n] => Ok(GroupSpec::Cyclic { n: int(n, "cyclic")? }),
            ["elementary_abelian", p, r] => Ok(GroupSpec::ElementaryAbelian {
                p: int(p, "p")?,
                r: int(r, "r")? as u32,
            }),
            ["dihedral", n] => Ok(GroupSpec::Dihedral { n: int(n, "dihedral")? }),
            ["symmetric", n] => Ok(GroupSpec::Symmetric { degree: int(n, "symmetric")? }),
            ["generalized_quaternion", n] | ["quaternion", n] => {
                Ok(GroupSpec::GeneralizedQuaternion { order: int(n, "order")? })
            }
            ["heisenberg", p] => Ok(GroupSpec::Heisenberg { p: int(p, "p")? }),
            ["direct_product", a, b] => Ok(GroupSpec::DirectProduct {
                left: Box::new(Self::parse(&a.replace(':', " "))?),
                right: Box::new(Self::parse(&b.replace(':', " "))?),
            }),
            ["cayley_file", path] => Ok(GroupSpec::CayleyFile { path: PathBuf::from(path) }),
            ["perm_file", path] => Ok(GroupSpec::PermFile { path: PathBuf::from(path) }),
            _ => Err(bad("unrecognized group spec")),
        }
    }

    /// Order known without construction; `None` for file-backed specs.
    fn predicted_order(&self) -> Option<usize> {
        match self {
            GroupSpec::Cyclic { n } => Some(*n),
            GroupSpec::ElementaryAbelian { p, r } => p.checked_pow(*r),
            GroupSpec::Dihedral { n } => n.checked_mul(2),
            GroupSpec::Symmetric { degree } => {
                (1..=*degree).try_fold(1usize, |acc, k| acc.checked_mul(k))
            }
            GroupSpec::GeneralizedQuaternion { order } => Some(*order),
            GroupSpec::Heisenberg { p } => p.checked_mul(*p).and_then(|q| q.checked_mul(*p)),
            GroupSpec::DirectProduct { left, right } => left
                .predicted_order()
                .zip(right.predicted_order())
                .and_then(|(a, b)| a.checked_mul(b)),
            GroupSpec::CayleyFile { .. } | GroupSpec::PermFile { .. } => None,
        }
    }

    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        self.build_capped(DEFAULT_MAX_ORDER)
    }

    pub fn build_capped(&self, max_order: usize) -> Result<FiniteGroup, GroupError> {
        if let Some(order) = self.predicted_order() {
            if order > max_order {
                return Err(GroupError::OrderCapExceeded { order, cap: max_order });
            }
        }
        match self {
            GroupSpec::Cyclic { n } => {
                if *n < 1 {
                    return Err(GroupError::InvalidSpec("cyclic requires n >= 1".into()));
                }
                Ok(families::cyclic(*n))
            }
            GroupSpec::ElementaryAbelian { p, r } => families::elementary_abelian(*p, *r),
            GroupSpec::Dihedral { n } => families::dihedral(*n),
            GroupSpec::Symmetric { degree } => families::symmetric(*degree),
            GroupSpec::GeneralizedQuaternion { order } => families::generalized_quaternion(*order),
            GroupSpec::Heisenberg { p } => families::heisenberg(*p),
            GroupSpec::DirectProduct { left, right } => Ok(families::direct_product(
                &left.build_capped(max_order)?,
                &right.build_capped(max_order)?,
            )),
            GroupSpec::CayleyFile { path } => {
                let text = std::fs::read_to_string(path)?;
                load_cayley_table(&text, max_order)
            }
            GroupSpec::PermFile { path } => {
                let text = std::fs::read_to_string(path)?;
                load_permutation_generators(&text, max_order)
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic { n } => write!(f, "cyclic {n}"),
            GroupSpec::ElementaryAbelian { p, r } => write!(f, "elementary_abelian {p} {r}"),
            GroupSpec::Dihedral { n } => write!(f, "dihedral {n}"),
            GroupSpec::Symmetric { degree } => write!(f, "symmetric {degree}"),
            GroupSpec::GeneralizedQuaternion { order } => {
                write!(f, "generalized_quaternion {order}")
            }
            GroupSpec::Heisenberg { p } => write!(f, "heisenberg {p}"),
            GroupSpec::DirectProduct { left, right } => write!(
                f,
                "direct_product {} {}",
                left.to_string().replace(' ', ":"),
                right.to_string().replace(' ', ":")
            ),
            GroupSpec::CayleyFile { path } => write!(f, "cayley_file {}", path.display()),
            GroupSpec::PermFile { path } => write!(f, "perm_file {}", path.display()),
        }
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Cayley table text format: line 1 is `n`, then `n` lines of `n` indices.
pub fn load_cayley_table(text: &str, max_order: usize) -> Result<FiniteGroup, GroupError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| GroupError::Parse("empty cayley table file".into()))?
        .trim()
        .parse()
        .map_err(|_| GroupError::Parse("first line must be the order".into()))?;
    if n > max_order {
        return Err(GroupError::OrderCapExceeded { order: n, cap: max_order });
    }
    let mut table = Vec::with_capacity(n);
    for _ in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| GroupError::Parse("truncated cayley table".into()))?;
        let row: Result<Vec<ElementId>, _> =
            line.split_whitespace().map(|t| t.parse()).collect();
        let row = row.map_err(|_| GroupError::Parse(format!("bad table row {line:?}")))?;
        if row.len() != n {
            return Err(GroupError::Parse(format!(
                "expected {n} entries per row, got {}",
                row.len()
            )));
        }
        table.push(row);
    }
    FiniteGroup::from_cayley_table(&table)
}

/// Permutation generator file: one generator per line in cycle notation.
pub fn load_permutation_generators(
    text: &str,
    max_order: usize,
) -> Result<FiniteGroup, GroupError> {
    let gens: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if gens.is_empty() {
        return Err(GroupError::Parse("no generators in file".into()));
    }
    perm::from_permutation_generators(&gens, max_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for line in [
            "cyclic 6",
            "elementary_abelian 3 2",
            "dihedral 4",
            "symmetric 4",
            "generalized_quaternion 16",
            "heisenberg 3",
            "direct_product cyclic:2 cyclic:4",
        ] {
            let spec = GroupSpec::parse(line).unwrap();
            assert_eq!(spec.to_string(), line);
            assert_eq!(GroupSpec::parse(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn quaternion_alias() {
        assert_eq!(
            GroupSpec::parse("quaternion 8").unwrap(),
            GroupSpec::GeneralizedQuaternion { order: 8 }
        );
    }

    #[test]
    fn order_cap_enforced() {
        let spec = GroupSpec::parse("symmetric 7").unwrap();
        assert!(matches!(
            spec.build_capped(2048),
            Err(GroupError::OrderCapExceeded { order: 5040, .. })
        ));
    }

    #[test]
    fn invalid_specs() {
        assert!(GroupSpec::parse("frobnicate 3").is_err());
        assert!(GroupSpec::parse("cyclic x").is_err());
        assert!(GroupSpec::Cyclic { n: 0 }.build().is_err());
    }

    #[test]
    fn cayley_file_text() {
        let g = load_cayley_table("4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n", 2048).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.classify().elementary_abelian, Some((2, 2)));
    }

    #[test]
    fn perm_file_text() {
        let g = load_permutation_generators("(1 2)\n(1 2 3)\n", 2048).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn direct_product_order() {
        let g = GroupSpec::parse("direct_product cyclic:2 cyclic:4")
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.exponent(), 4);
    }
}
