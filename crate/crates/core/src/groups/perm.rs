//! Cycle-notation parsing and permutation-group closure.

use super::{ElementId, FiniteGroup, GroupError};
use std::collections::HashMap;

/// A permutation of points `0..k` as a mapping vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `self` after `other`: applies `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation((0..self.degree()).map(|i| self.0[other.0[i]]).collect())
    }
}

/// Parses cycle notation like `(1 2 3)(4 5)`; points are 1-based, fixed
/// points omitted. Returns the permutation and the largest point seen.
pub fn parse_permutation(text: &str) -> Result<(Vec<Vec<usize>>, usize), GroupError> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut max_point = 0usize;
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(GroupError::Parse("empty permutation".into()));
    }
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(GroupError::Parse(format!("expected '(' in {text:?}")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| GroupError::Parse(format!("unclosed cycle in {text:?}")))?;
        let inner = &rest[1..close];
        let mut cycle = Vec::new();
        for tok in inner.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let p: usize = tok
                .parse()
                .map_err(|_| GroupError::Parse(format!("bad point {tok:?} in {text:?}")))?;
            if p == 0 {
                return Err(GroupError::Parse("points are 1-based".into()));
            }
            if cycle.contains(&(p - 1)) {
                return Err(GroupError::Parse(format!("repeated point {p} in {text:?}")));
            }
            max_point = max_point.max(p);
            cycle.push(p - 1);
        }
        if cycle.len() >= 2 {
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok((cycles, max_point))
}

fn cycles_to_permutation(cycles: &[Vec<usize>], degree: usize) -> Permutation {
    let mut map: Vec<usize> = (0..degree).collect();
    for cycle in cycles {
        for w in 0..cycle.len() {
            map[cycle[w]] = cycle[(w + 1) % cycle.len()];
        }
    }
    Permutation(map)
}

/// Closure of the generators under composition, as a Cayley table.
/// Element 0 is the identity permutation; the rest follow in BFS order.
pub fn from_permutation_generators(
    gens: &[&str],
    max_order: usize,
) -> Result<FiniteGroup, GroupError> {
    if max_order < 1 {
        return Err(GroupError::InvalidSpec("max_order must be >= 1".into()));
    }
    let mut parsed = Vec::new();
    let mut degree = 1;
    for g in gens {
        let (cycles, max_point) = parse_permutation(g)?;
        degree = degree.max(max_point);
        parsed.push(cycles);
    }
    let generators: Vec<Permutation> = parsed
        .iter()
        .map(|cycles| cycles_to_permutation(cycles, degree))
        .collect();

    let identity = Permutation::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(identity, 0);
    let mut frontier = 0;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        frontier += 1;
        for gen in &generators {
            let next = current.compose(gen);
            if !index.contains_key(&next) {
                if elements.len() >= max_order {
                    return Err(GroupError::OrderCapExceeded {
                        order: elements.len() + 1,
                        cap: max_order,
                    });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
    }

    let n = elements.len();
    let mut table = vec![0 as ElementId; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = index[&elements[i].compose(&elements[j])];
        }
    }
    Ok(FiniteGroup::from_valid_table(table, n))
}
