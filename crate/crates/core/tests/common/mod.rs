//! Independent oracles for the integration tests. Everything here works on
//! explicit element lists and brute-force enumeration, never on the
//! library's bit kernels.

#![allow(dead_code)]

use std::collections::BTreeSet;

/// Elements of the subset encoded by `bits`, increasing.
pub fn elements(bits: u32, n: u32) -> Vec<u32> {
    (1..=n).filter(|k| bits >> (k - 1) & 1 == 1).collect()
}

pub fn bits_of(elements: &[u32]) -> u32 {
    elements.iter().fold(0, |acc, k| acc | 1 << (k - 1))
}

fn minus(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().copied().filter(|x| !b.contains(x)).collect()
}

/// Every element of `a` is below every element of `b`.
pub fn left_of(a: &[u32], b: &[u32]) -> bool {
    a.iter().all(|x| b.iter().all(|y| x < y))
}

/// Tries every split of `a` into a low part and a high part.
pub fn surrounds(a: &[u32], b: &[u32]) -> bool {
    (0..=a.len()).any(|cut| {
        let (low, high) = a.split_at(cut);
        left_of(low, b) && left_of(b, high)
    })
}

pub fn strongly_separated(a: u32, b: u32, n: u32) -> bool {
    let (ea, eb) = (elements(a, n), elements(b, n));
    let (x, y) = (minus(&ea, &eb), minus(&eb, &ea));
    left_of(&x, &y) || left_of(&y, &x)
}

pub fn weakly_separated(a: u32, b: u32, n: u32) -> bool {
    let (ea, eb) = (elements(a, n), elements(b, n));
    let (x, y) = (minus(&ea, &eb), minus(&eb, &ea));
    (ea.len() <= eb.len() && surrounds(&x, &y)) || (eb.len() <= ea.len() && surrounds(&y, &x))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Weak,
    Strong,
}

pub fn separated(rel: Rel, a: u32, b: u32, n: u32) -> bool {
    match rel {
        Rel::Weak => weakly_separated(a, b, n),
        Rel::Strong => strongly_separated(a, b, n),
    }
}

pub fn frozen(rel: Rel, s: u32, n: u32) -> bool {
    (0..1u32 << n).all(|t| separated(rel, s, t, n))
}

pub fn complement(s: u32, n: u32) -> u32 {
    !s & ((1 << n) - 1)
}

/// `k -> n + 1 - k` on every element.
pub fn reverse(s: u32, n: u32) -> u32 {
    bits_of(&elements(s, n).iter().map(|k| n + 1 - k).collect::<Vec<_>>())
}

/// The four group elements by index, in the order e, alpha, w0, alpha*w0.
pub fn group_act(index: usize, s: u32, n: u32) -> u32 {
    match index {
        0 => s,
        1 => complement(s, n),
        2 => reverse(s, n),
        _ => complement(reverse(s, n), n),
    }
}

pub fn non_frozen(rel: Rel, n: u32) -> Vec<u32> {
    (0..1u32 << n).filter(|&s| !frozen(rel, s, n)).collect()
}

/// All cliques (as sorted mask lists) of the separation graph, the empty
/// clique excluded.
pub fn cliques(rel: Rel, n: u32) -> Vec<Vec<u32>> {
    let verts = non_frozen(rel, n);
    let mut out = Vec::new();
    fn grow(rel: Rel, n: u32, verts: &[u32], start: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        for i in start..verts.len() {
            let v = verts[i];
            if current.iter().all(|&u| separated(rel, u, v, n)) {
                current.push(v);
                out.push(current.clone());
                grow(rel, n, verts, i + 1, current, out);
                current.pop();
            }
        }
    }
    grow(rel, n, &verts, 0, &mut Vec::new(), &mut out);
    out
}

pub fn f_vector_of(faces: &[Vec<u32>]) -> Vec<usize> {
    let top = faces.iter().map(Vec::len).max().unwrap_or(0);
    let mut f = vec![0; top];
    for face in faces {
        f[face.len() - 1] += 1;
    }
    f
}

/// `pi'(sigma)` straight from its definition, over the singletons
/// `{2..n-1}` and their complements.
pub fn pi_prime(sigma: &[u32], n: u32) -> BTreeSet<u32> {
    let clique = |extra: u32| sigma.iter().all(|&s| strongly_separated(s, extra, n));
    let mut out = BTreeSet::new();
    for k in 2..n {
        for v in [1u32 << (k - 1), complement(1 << (k - 1), n)] {
            if clique(v) && !clique(complement(v, n)) {
                out.insert(v);
            }
        }
    }
    out
}

/// Binomial coefficient for small arguments.
pub fn choose(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
