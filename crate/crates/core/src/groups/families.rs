//! Constructors for the group families used by the catalog.

use super::{is_prime, ElementId, FiniteGroup, GroupError};

fn build_table<F: Fn(usize, usize) -> usize>(n: usize, mul: F) -> Vec<ElementId> {
    let mut table = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = mul(i, j);
        }
    }
    table
}

/// Z_n, element `i` is `x^i`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    FiniteGroup::from_valid_table(build_table(n, |i, j| (i + j) % n), n).with_labels(labels)
}

/// (Z_p)^r, elements indexed by base-p digit vectors.
pub fn elementary_abelian(p: usize, r: u32) -> Result<FiniteGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::InvalidSpec(format!(
            "elementary_abelian requires prime p, got {p}"
        )));
    }
    if r < 1 {
        return Err(GroupError::InvalidSpec("elementary_abelian requires r >= 1".into()));
    }
    let n = p.checked_pow(r).ok_or_else(|| {
        GroupError::InvalidSpec(format!("elementary_abelian({p},{r}) order overflows"))
    })?;
    let mul = |i: usize, j: usize| {
        let mut a = i;
        let mut b = j;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..r {
            out += ((a + b) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    };
    Ok(FiniteGroup::from_valid_table(build_table(n, mul), n))
}

/// D_n of order 2n; element `i + n*s` is `r^i s^a` with `s r = r^{-1} s`.
pub fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 1 {
        return Err(GroupError::InvalidSpec("dihedral requires n >= 1".into()));
    }
    let order = 2 * n;
    let mul = |x: usize, y: usize| {
        let (i, a) = (x % n, x / n);
        let (j, b) = (y % n, y / n);
        let rot = if a == 0 { (i + j) % n } else { (i + n - j % n) % n };
        rot + n * ((a + b) % 2)
    };
    let labels = (0..order)
        .map(|x| {
            let (i, a) = (x % n, x / n);
            match (i, a) {
                (0, 0) => "e".to_string(),
                (i, 0) => format!("r^{i}"),
                (0, 1) => "s".to_string(),
                (i, _) => format!("r^{i}s"),
            }
        })
        .collect();
    Ok(FiniteGroup::from_valid_table(build_table(order, mul), order).with_labels(labels))
}

/// S_degree as all permutations in lexicographic order (identity first).
pub fn symmetric(degree: usize) -> Result<FiniteGroup, GroupError> {
    if degree < 1 {
        return Err(GroupError::InvalidSpec("symmetric requires degree >= 1".into()));
    }
    if degree > 7 {
        return Err(GroupError::InvalidSpec(
            "symmetric degree capped at 7".into(),
        ));
    }
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (0..degree).collect();
    loop {
        perms.push(current.clone());
        if !next_permutation(&mut current) {
            break;
        }
    }
    let n = perms.len();
    let index: std::collections::HashMap<Vec<usize>, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    // table[i][j] = "apply j, then i" so composition is left-to-right on points.
    let mul = |i: usize, j: usize| {
        let composed: Vec<usize> = (0..degree).map(|k| perms[i][perms[j][k]]).collect();
        index[&composed]
    };
    Ok(FiniteGroup::from_valid_table(build_table(n, mul), n))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Q_{2^k} of the given order `2^k`, k >= 3; element `i + h*j` is `a^i b^j`
/// with `h = order/2`, `b^2 = a^{h/2}`, `b a b^{-1} = a^{-1}`.
pub fn generalized_quaternion(order: usize) -> Result<FiniteGroup, GroupError> {
    if order < 8 || !order.is_power_of_two() {
        return Err(GroupError::InvalidSpec(format!(
            "generalized_quaternion requires order 2^k with k >= 3, got {order}"
        )));
    }
    let h = order / 2;
    let q = order / 4;
    let mul = |x: usize, y: usize| {
        let (i, jx) = (x % h, x / h);
        let (k, l) = (y % h, y / h);
        if jx == 0 {
            (i + k) % h + h * l
        } else if l == 0 {
            (i + h - k) % h + h
        } else {
            (i + h - k + q) % h
        }
    };
    let labels = (0..order)
        .map(|x| {
            let (i, j) = (x % h, x / h);
            match (i, j) {
                (0, 0) => "e".to_string(),
                (i, 0) => format!("a^{i}"),
                (0, 1) => "b".to_string(),
                (i, _) => format!("a^{i}b"),
            }
        })
        .collect();
    Ok(FiniteGroup::from_valid_table(build_table(order, mul), order).with_labels(labels))
}

/// Upper unitriangular 3x3 matrices over F_p; order p^3, exponent p for odd p.
/// `heisenberg(2)` is permitted and is isomorphic to D_4 (exponent 4).
pub fn heisenberg(p: usize) -> Result<FiniteGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::InvalidSpec(format!(
            "heisenberg requires prime p, got {p}"
        )));
    }
    let n = p * p * p;
    // (a, b, c) encodes [[1, a, c], [0, 1, b], [0, 0, 1]].
    let mul = |x: usize, y: usize| {
        let (a1, b1, c1) = (x / (p * p), (x / p) % p, x % p);
        let (a2, b2, c2) = (y / (p * p), (y / p) % p, y % p);
        let a = (a1 + a2) % p;
        let b = (b1 + b2) % p;
        let c = (c1 + c2 + a1 * b2) % p;
        a * p * p + b * p + c
    };
    Ok(FiniteGroup::from_valid_table(build_table(n, mul), n))
}

/// A x B with index `a * |B| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mul = |x: usize, y: usize| {
        let (xa, xb) = (x / nb, x % nb);
        let (ya, yb) = (y / nb, y % nb);
        a.mul(xa, ya) * nb + b.mul(xb, yb)
    };
    FiniteGroup::from_valid_table(build_table(n, mul), n)
}
