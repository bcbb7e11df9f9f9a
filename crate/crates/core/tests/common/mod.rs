//! Independent brute-force oracles shared by the integration tests and the
//! acceptance suite. Nothing here calls into the search or checking code of
//! the library; tables are plain row-major `Vec<usize>` with `0` the zero
//! and `n - 1 = ¬0` the one.

#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;

/// A labelled algebra as `(¬, ⊕)` tables.
pub type Tables = (Vec<usize>, Vec<usize>);

pub fn is_nmv(n: usize, neg: &[usize], op: &[usize]) -> bool {
    let p = |x: usize, y: usize| op[x * n + y];
    let one = neg[0];
    let all = || (0..n).cartesian_product(0..n);
    all().all(|(x, y)| p(x, y) == p(y, x))
        && (0..n).all(|x| p(x, 0) == x && neg[neg[x]] == x && p(x, one) == one)
        && all().all(|(x, y)| p(neg[p(neg[x], y)], y) == p(neg[p(neg[y], x)], x))
        && all().all(|(x, y)| p(neg[x], p(x, y)) == one)
        && all().cartesian_product(0..n).all(|((x, y), z)| {
            let join = p(neg[p(neg[x], y)], y);
            p(neg[x], p(neg[p(neg[join], z)], z)) == one
        })
}

/// Section involutions `x^a = ¬x ⊕ a` reverse the induced order on `[a, 1]`.
pub fn is_sai(n: usize, neg: &[usize], op: &[usize]) -> bool {
    let one = neg[0];
    let leq = |x: usize, y: usize| op[neg[x] * n + y] == one;
    let sec = |x: usize, a: usize| op[neg[x] * n + a];
    (0..n)
        .cartesian_product(0..n)
        .cartesian_product(0..n)
        .all(|((a, x), y)| !(leq(a, x) && leq(x, y)) || leq(sec(y, a), sec(x, a)))
}

pub fn involutions(n: usize) -> Vec<Vec<usize>> {
    (1..n - 1)
        .permutations(n - 2)
        .map(|mid| {
            let mut neg = vec![n - 1];
            neg.extend(mid);
            neg.push(0);
            neg
        })
        .filter(|neg| (0..n).all(|x| neg[neg[x]] == x))
        .collect()
}

/// Every labelled NMV-algebra of size `n`, found by trying every symmetric
/// `⊕` table. With `fix_units` the rows of `0` and `1` are forced to
/// `x ⊕ 0 = x` and `x ⊕ 1 = 1` before trying the rest.
pub fn brute_force(n: usize, fix_units: bool) -> BTreeSet<Tables> {
    let one = n - 1;
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (x..n).map(move |y| (x, y)))
        .filter(|&(x, y)| !fix_units || (x != 0 && y != 0 && x != one && y != one))
        .collect();
    let mut base = vec![0; n * n];
    if fix_units {
        for x in 0..n {
            for (a, b, v) in [(x, 0, x), (0, x, x), (x, one, one), (one, x, one)] {
                base[a * n + b] = v;
            }
        }
    }
    let mut found = BTreeSet::new();
    for neg in involutions(n) {
        let mut digits = vec![0usize; cells.len()];
        loop {
            let mut op = base.clone();
            for (&(x, y), &v) in cells.iter().zip(&digits) {
                op[x * n + y] = v;
                op[y * n + x] = v;
            }
            if is_nmv(n, &neg, &op) {
                found.insert((neg.clone(), op));
            }
            let Some(i) = digits.iter().position(|&d| d + 1 < n) else { break };
            digits[i] += 1;
            digits[..i].fill(0);
        }
    }
    found
}

/// Least relabelling of the middle elements, serialized as `(¬, ⊕)`.
pub fn canonical(n: usize, (neg, op): &Tables) -> Tables {
    (1..n - 1)
        .permutations(n - 2)
        .map(|mid| {
            let mut p = vec![0];
            p.extend(mid);
            p.push(n - 1);
            let mut inv = vec![0; n];
            for (i, &v) in p.iter().enumerate() {
                inv[v] = i;
            }
            let neg2: Vec<usize> = (0..n).map(|y| p[neg[inv[y]]]).collect();
            let op2: Vec<usize> = (0..n * n).map(|c| p[op[inv[c / n] * n + inv[c % n]]]).collect();
            (neg2, op2)
        })
        .min()
        .expect("at least one relabelling")
}

pub fn iso_classes(n: usize, algebras: &BTreeSet<Tables>) -> BTreeSet<Tables> {
    algebras.iter().map(|t| canonical(n, t)).collect()
}

/// All triples `(x, y, z)` with `(x·y)·z ≠ x·(y·z)`.
pub fn non_associative_triples(n: usize, op: &[usize]) -> Vec<(usize, usize, usize)> {
    let p = |x: usize, y: usize| op[x * n + y];
    (0..n)
        .cartesian_product(0..n)
        .cartesian_product(0..n)
        .map(|((x, y), z)| (x, y, z))
        .filter(|&(x, y, z)| p(p(x, y), z) != p(x, p(y, z)))
        .collect()
}

pub const LABELS: [&str; 6] = ["0", "a", "b", "c", "d", "1"];

fn parse(rows: &[&str]) -> Vec<usize> {
    rows.iter()
        .flat_map(|r| r.split_whitespace())
        .map(|s| LABELS.iter().position(|&l| l == if s == "e" { "d" } else { s }).expect("label"))
        .collect()
}

/// The reference `⊗` table of the six-element example.
pub fn reference_otimes() -> Vec<usize> {
    parse(&["0 0 0 0 0 0", "0 0 0 a 0 a", "0 0 0 0 b b", "0 a 0 a b c", "0 0 b b a d", "0 a b c d 1"])
}

pub fn reference_imp() -> Vec<usize> {
    parse(&["1 1 1 1 1 1", "d 1 d 1 1 1", "c c 1 1 1 1", "b c d 1 d 1", "a d c c 1 1", "0 a b c d 1"])
}

/// Written with `e` for the element written `d` elsewhere.
pub fn reference_sqcup() -> Vec<usize> {
    parse(&["0 a b c e 1", "a a c c e 1", "b c b c e 1", "c c c c 1 1", "e e e 1 e 1", "1 1 1 1 1 1"])
}

/// Rows `x^0 … x^1`; `None` outside the section.
pub fn reference_sections() -> Vec<Vec<Option<usize>>> {
    ["1 d c b a 0", "- 1 - c d a", "- - 1 d c b", "- - - 1 - c", "- - - - 1 d", "- - - - - 1"]
        .iter()
        .map(|r| {
            r.split_whitespace()
                .map(|s| (s != "-").then(|| LABELS.iter().position(|&l| l == s).expect("label")))
                .collect()
        })
        .collect()
}

/// Covering pairs of the reference Hasse diagram.
pub const HASSE_COVERS: [(usize, usize); 8] = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)];

/// Reflexive-transitive closure of [`HASSE_COVERS`].
pub fn hasse_order() -> BTreeSet<(usize, usize)> {
    let mut leq: BTreeSet<(usize, usize)> = (0..6).map(|x| (x, x)).chain(HASSE_COVERS).collect();
    loop {
        let extra: Vec<_> = leq
            .iter()
            .cartesian_product(leq.iter())
            .filter(|(a, b)| a.1 == b.0)
            .map(|(a, b)| (a.0, b.1))
            .filter(|p| !leq.contains(p))
            .collect();
        if extra.is_empty() {
            return leq;
        }
        leq.extend(extra);
    }
}
