//! Pairs of Young diagrams and the Bratteli diagram of the tower.

use std::collections::BTreeMap;
use std::fmt;

/// Weakly decreasing positive parts.
pub type Partition = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagramPair(pub Partition, pub Partition);

impl DiagramPair {
    pub fn empty() -> Self {
        DiagramPair(Vec::new(), Vec::new())
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum::<usize>() + self.1.iter().sum::<usize>()
    }
}

fn fmt_partition(p: &Partition) -> String {
    let parts: Vec<String> = p.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(","))
}

impl fmt::Display for DiagramPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", fmt_partition(&self.0), fmt_partition(&self.1))
    }
}

/// Partitions of `n` in lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Partition, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in 1..=max.min(n) {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All pairs of total size `n, n - 2, ...`.
pub fn gamma_hat(n: usize) -> Vec<DiagramPair> {
    let mut out = Vec::new();
    for size in (0..=n).rev().filter(|s| (n - s).is_multiple_of(2)) {
        for a in 0..=size {
            for p in partitions(a) {
                for q in partitions(size - a) {
                    out.push(DiagramPair(p.clone(), q));
                }
            }
        }
    }
    out.sort();
    out
}

/// Partitions obtained from `p` by adding one box.
fn add_box(p: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    for i in 0..=p.len() {
        let cur = p.get(i).copied().unwrap_or(0);
        if i == 0 || p[i - 1] > cur {
            let mut q = p.clone();
            if i == p.len() {
                q.push(1);
            } else {
                q[i] += 1;
            }
            out.push(q);
        }
    }
    out
}

/// Pairs obtained from `p` by adding one box to either component.
fn grow(p: &DiagramPair) -> Vec<DiagramPair> {
    let mut out: Vec<DiagramPair> = add_box(&p.0).into_iter().map(|a| DiagramPair(a, p.1.clone())).collect();
    out.extend(add_box(&p.1).into_iter().map(|b| DiagramPair(p.0.clone(), b)));
    out
}

/// True when `q` differs from `p` by exactly one box in one component.
pub fn bratteli_adjacent(p: &DiagramPair, q: &DiagramPair) -> bool {
    grow(p).contains(q) || grow(q).contains(p)
}

/// Neighbours of `p` at the next level: one box added or, if any, removed.
pub fn successors(p: &DiagramPair) -> Vec<DiagramPair> {
    let size = p.size();
    let mut out = grow(p);
    if size > 0 {
        out.extend(gamma_hat(size - 1).into_iter().filter(|q| q.size() == size - 1 && grow(q).contains(p)));
    }
    out.sort();
    out
}

/// Walk counts from the empty pair to every node at level `n`.
pub fn path_counts(n: usize) -> BTreeMap<DiagramPair, u128> {
    let mut level: BTreeMap<DiagramPair, u128> = BTreeMap::new();
    level.insert(DiagramPair::empty(), 1);
    for _ in 0..n {
        let mut next = BTreeMap::new();
        for (p, c) in &level {
            for q in successors(p) {
                *next.entry(q).or_insert(0) += c;
            }
        }
        level = next;
    }
    level
}

pub fn path_count(n: usize, p: &DiagramPair) -> u128 {
    path_counts(n).get(p).copied().unwrap_or(0)
}

/// `2^n (2n - 1)!!`.
pub fn dimension_formula(n: usize) -> u128 {
    (1..=n as u128).map(|k| 2 * (2 * k - 1)).product()
}

/// Checks that the squared walk counts at level `n` sum to `2^n (2n - 1)!!`.
pub fn dimension_check(n: usize) -> bool {
    path_counts(n).values().map(|c| c * c).sum::<u128>() == dimension_formula(n)
}

/// Adjacency list for levels `0..=n`, one `level node: neighbours` line per
/// node, neighbours taken at the next level.
pub fn bratteli_export(n: usize) -> String {
    let mut out = String::new();
    for k in 0..=n {
        for p in gamma_hat(k) {
            let next: Vec<String> = if k < n { successors(&p).iter().map(|q| q.to_string()).collect() } else { Vec::new() };
            out.push_str(&format!("{k} {p}: {}\n", next.join(" ")));
        }
    }
    out
}
