//! Canonical encodings of exchange matrices up to vertex relabeling.
//!
//! Colour refinement splits vertices by their weighted neighbourhoods, then an
//! individualization search explores the remaining ties and keeps the
//! lexicographically smallest encoding. Twin vertices (swapping them is an
//! automorphism) are explored only once.

use alloc::vec::Vec;

use super::ExchangeMatrix;

/// Permutation-invariant encoding of an exchange matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

fn push_varint(out: &mut Vec<u8>, mut v: u64) {
    loop {
        let byte = (v & 0x7f) as u8;
        v >>= 7;
        if v == 0 {
            out.push(byte);
            return;
        }
        out.push(byte | 0x80);
    }
}

fn zigzag(v: i64) -> u64 {
    ((v << 1) ^ (v >> 63)) as u64
}

/// Encodes `b` with vertices listed in `order`.
fn encode(b: &ExchangeMatrix, order: &[usize]) -> Vec<u8> {
    let mut out = Vec::with_capacity(order.len() * order.len() / 2 + 2);
    push_varint(&mut out, order.len() as u64);
    for (x, &i) in order.iter().enumerate() {
        for &j in &order[x + 1..] {
            push_varint(&mut out, zigzag(b.get(i, j)));
        }
    }
    out
}

/// Refines `colors` to the coarsest equitable partition, keeping the relative
/// order of existing colours. Colours are dense ranks.
fn refine(b: &ExchangeMatrix, colors: &mut [usize]) {
    let n = colors.len();
    loop {
        #[allow(clippy::type_complexity)]
        let mut sigs: Vec<(usize, Vec<(usize, i64)>, usize)> = (0..n)
            .map(|v| {
                let mut s: Vec<(usize, i64)> =
                    (0..n).filter(|&u| u != v && b.get(v, u) != 0).map(|u| (colors[u], b.get(v, u))).collect();
                s.sort_unstable();
                (colors[v], s, v)
            })
            .collect();
        sigs.sort();
        let mut next = alloc::vec![0; n];
        let mut rank = 0;
        for idx in 0..n {
            if idx > 0 && (sigs[idx].0 != sigs[idx - 1].0 || sigs[idx].1 != sigs[idx - 1].1) {
                rank += 1;
            }
            next[sigs[idx].2] = rank;
        }
        let before = colors.iter().max().map_or(0, |m| m + 1);
        colors.copy_from_slice(&next);
        if rank + 1 == before || n == 0 {
            return;
        }
    }
}

fn twins(b: &ExchangeMatrix, u: usize, v: usize) -> bool {
    b.get(u, v) == 0 && (0..b.size()).all(|w| w == u || w == v || b.get(u, w) == b.get(v, w))
}

struct Search<'a> {
    b: &'a ExchangeMatrix,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, colors: Vec<usize>) {
        let n = colors.len();
        let ncolors = colors.iter().max().map_or(0, |m| m + 1);
        if ncolors == n {
            let mut order = alloc::vec![0; n];
            for (v, &c) in colors.iter().enumerate() {
                order[c] = v;
            }
            let code = encode(self.b, &order);
            if self.best.as_ref().is_none_or(|(best, _)| code < *best) {
                self.best = Some((code, order));
            }
            return;
        }
        // first non-singleton cell
        let mut sizes = alloc::vec![0usize; ncolors];
        for &c in &colors {
            sizes[c] += 1;
        }
        let cell = (0..ncolors).find(|&c| sizes[c] > 1).expect("a non-singleton cell exists");
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == cell).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if tried.iter().any(|&t| twins(self.b, t, v)) {
                continue;
            }
            tried.push(v);
            // v gets the cell's colour, the rest of the cell moves just above it
            let mut next: Vec<usize> = colors.iter().map(|&c| if c > cell { c + 1 } else { c }).collect();
            for &u in &members {
                if u != v {
                    next[u] = cell + 1;
                }
            }
            refine(self.b, &mut next);
            self.run(next);
        }
    }
}

/// Canonical vertex order: `order[k]` is the original vertex placed at position `k`.
pub fn canonical_order(b: &ExchangeMatrix) -> Vec<usize> {
    let mut colors = alloc::vec![0; b.size()];
    refine(b, &mut colors);
    let mut s = Search { b, best: None };
    s.run(colors);
    s.best.map(|(_, o)| o).unwrap_or_default()
}

/// The canonical encoding. The empty matrix maps to `[0]`.
pub fn canonical_form(b: &ExchangeMatrix) -> CanonicalForm {
    if b.size() == 0 {
        return CanonicalForm(alloc::vec![0]);
    }
    let order = canonical_order(b);
    CanonicalForm(encode(b, &order))
}

/// The matrix relabeled into canonical order, with the relabeling used
/// (`perm[old] = new`).
pub fn canonical_matrix(b: &ExchangeMatrix) -> (ExchangeMatrix, Vec<usize>) {
    let order = canonical_order(b);
    let mut perm = alloc::vec![0; b.size()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    (b.permute(&perm), perm)
}
