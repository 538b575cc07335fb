//! Finite groups as validated multiplication tables.
//!
//! A [`FiniteGroup`] stores an `n × n` Cayley table with the identity fixed
//! at index 0. Constructors relabel if the identity of the input sits
//! elsewhere, so every downstream predicate may assume vertex 0 is `e`.

mod families;
mod perm;
mod spec;

pub use families::{
    cyclic, dihedral, direct_product, elementary_abelian, generalized_quaternion, heisenberg,
    symmetric,
};
pub use perm::{from_permutation_generators, parse_permutation, Permutation};
pub use spec::{load_cayley_table, load_permutation_generators, GroupSpec};

use serde::Serialize;
use thiserror::Error;

/// Index of an element inside its owning group.
pub type ElementId = usize;

/// Default cap on group order; associativity validation is cubic.
pub const DEFAULT_MAX_ORDER: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NotAGroupReason {
    NoIdentity,
    NotLatin,
    NotAssociative,
}

impl std::fmt::Display for NotAGroupReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotAGroupReason::NoIdentity => write!(f, "no-identity"),
            NotAGroupReason::NotLatin => write!(f, "not-latin"),
            NotAGroupReason::NotAssociative => write!(f, "not-associative"),
        }
    }
}

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("not a group: {reason}")]
    NotAGroup { reason: NotAGroupReason },
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("closure/order {order} exceeds cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// A finite group given by its multiplication table, identity at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<ElementId>, // row-major n*n
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates `table` as a group and relabels so the identity is index 0.
    pub fn from_cayley_table(table: &[Vec<ElementId>]) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n) {
            return Err(GroupError::NotAGroup {
                reason: NotAGroupReason::NotLatin,
            });
        }
        if table.iter().flatten().any(|&v| v >= n) {
            return Err(GroupError::NotAGroup {
                reason: NotAGroupReason::NotLatin,
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in table {
            flat.extend_from_slice(row);
        }
        // Latin square check before looking for an identity.
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                if std::mem::replace(&mut seen[flat[i * n + j]], true) {
                    return Err(GroupError::NotAGroup {
                        reason: NotAGroupReason::NotLatin,
                    });
                }
            }
        }
        for j in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..n {
                if std::mem::replace(&mut seen[flat[i * n + j]], true) {
                    return Err(GroupError::NotAGroup {
                        reason: NotAGroupReason::NotLatin,
                    });
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|j| flat[e * n + j] == j) && (0..n).all(|i| flat[i * n + e] == i))
            .ok_or(GroupError::NotAGroup {
                reason: NotAGroupReason::NoIdentity,
            })?;
        if identity != 0 {
            // Swap labels 0 <-> identity.
            let relabel = |v: ElementId| {
                if v == identity {
                    0
                } else if v == 0 {
                    identity
                } else {
                    v
                }
            };
            let mut swapped = vec![0; n * n];
            for i in 0..n {
                for j in 0..n {
                    swapped[relabel(i) * n + relabel(j)] = relabel(flat[i * n + j]);
                }
            }
            flat = swapped;
        }
        for i in 0..n {
            for j in 0..n {
                let ij = flat[i * n + j];
                for k in 0..n {
                    if flat[ij * n + k] != flat[i * n + flat[j * n + k]] {
                        return Err(GroupError::NotAGroup {
                            reason: NotAGroupReason::NotAssociative,
                        });
                    }
                }
            }
        }
        // Two-sided inverses follow from latin + identity + associativity;
        // asserted directly anyway.
        for i in 0..n {
            let inv = (0..n).find(|&j| flat[i * n + j] == 0);
            match inv {
                Some(j) if flat[j * n + i] == 0 => {}
                _ => {
                    return Err(GroupError::NotAGroup {
                        reason: NotAGroupReason::NotAssociative,
                    })
                }
            }
        }
        Ok(FiniteGroup {
            order: n,
            table: flat,
            labels: None,
        })
    }

    /// Builds the group without re-validating; callers guarantee the axioms.
    pub(crate) fn from_valid_table(table: Vec<ElementId>, order: usize) -> Self {
        debug_assert_eq!(table.len(), order * order);
        FiniteGroup {
            order,
            table,
            labels: None,
        }
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: ElementId) -> ElementId {
        (0..self.order).find(|&b| self.mul(a, b) == 0).unwrap()
    }

    pub fn label(&self, x: ElementId) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.order).map(|x| self.label(x)).collect()
    }

    pub fn table_rows(&self) -> Vec<Vec<ElementId>> {
        (0..self.order)
            .map(|i| self.table[i * self.order..(i + 1) * self.order].to_vec())
            .collect()
    }

    /// Least `m >= 1` with `x^m = e`.
    pub fn element_order(&self, x: ElementId) -> usize {
        let mut acc = x;
        let mut m = 1;
        while acc != 0 {
            acc = self.mul(acc, x);
            m += 1;
        }
        m
    }

    /// The cyclic subgroup `<x>`, as a sorted list of element indices.
    pub fn cyclic_subgroup(&self, x: ElementId) -> Vec<ElementId> {
        let mut members = vec![0];
        let mut acc = x;
        while acc != 0 {
            members.push(acc);
            acc = self.mul(acc, x);
        }
        members.sort_unstable();
        members
    }

    /// The generator class `[x]`: elements generating the same `<x>`.
    pub fn generator_class(&self, x: ElementId) -> Vec<ElementId> {
        let sub = self.cyclic_subgroup(x);
        let size = sub.len();
        let mut class: Vec<ElementId> = sub
            .iter()
            .copied()
            .filter(|&y| self.element_order(y) == size)
            .collect();
        class.sort_unstable();
        class
    }

    /// All cyclic subgroups maximal under inclusion, sorted canonically.
    pub fn maximal_cyclic_subgroups(&self) -> Vec<Vec<ElementId>> {
        let mut subs: Vec<Vec<ElementId>> = Vec::new();
        for x in 0..self.order {
            let s = self.cyclic_subgroup(x);
            if !subs.contains(&s) {
                subs.push(s);
            }
        }
        let mut maximal: Vec<Vec<ElementId>> = subs
            .iter()
            .filter(|s| {
                !subs
                    .iter()
                    .any(|t| t.len() > s.len() && s.iter().all(|v| t.binary_search(v).is_ok()))
            })
            .cloned()
            .collect();
        maximal.sort();
        maximal
    }

    /// Number of maximal cyclic subgroups containing `x`; at least 1.
    pub fn count_maximal_containing(&self, x: ElementId) -> usize {
        self.maximal_cyclic_subgroups()
            .iter()
            .filter(|s| s.binary_search(&x).is_ok())
            .count()
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1usize, |acc, x| lcm(acc, self.element_order(x)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|x| self.element_order(x) == self.order)
    }

    pub fn classify(&self) -> Classification {
        let n = self.order;
        let exponent = self.exponent();
        let is_cyclic = self.is_cyclic();
        let prime_exponent = if is_prime(exponent) {
            Some(exponent)
        } else {
            None
        };
        let is_p_group = prime_power(n).map(|(p, _)| p);
        let elementary_abelian = match (prime_exponent, self.is_abelian()) {
            (Some(p), true) => {
                let (q, r) = prime_power(n).expect("abelian exponent-p group has order p^r");
                debug_assert_eq!(p, q);
                Some((p, r))
            }
            _ => None,
        };
        Classification {
            order: n,
            exponent,
            is_cyclic,
            is_cyclic_prime_power: is_cyclic && (n == 1 || prime_power(n).is_some()),
            prime_exponent,
            is_p_group,
            elementary_abelian,
        }
    }
}

/// Structural flags referenced by the theorem checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Classification {
    pub order: usize,
    pub exponent: usize,
    pub is_cyclic: bool,
    /// Cyclic of order one or a prime power.
    pub is_cyclic_prime_power: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime_exponent: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_p_group: Option<usize>,
    /// `(p, rank)` when abelian of prime exponent p.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elementary_abelian: Option<(usize, u32)>,
}

pub fn euler_totient(n: usize) -> usize {
    assert!(n >= 1);
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += 1;
    }
    true
}

/// `n = p^k` with `k >= 1` gives `Some((p, k))`.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut k = 0;
            while m.is_multiple_of(p) {
                m /= p;
                k += 1;
            }
            return if m == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((m, 1))
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
