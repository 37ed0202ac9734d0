//! Littlewood–Richardson counting engines and the shared memo.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use once_cell::sync::Lazy;

use crate::partition::Partition;

type Triple = (Partition, Partition, Partition);
type ProductKey = (Partition, Partition, usize);

static COEFFS: Lazy<RwLock<HashMap<Triple, u64>>> = Lazy::new(Default::default);
static PRODUCTS: Lazy<RwLock<HashMap<ProductKey, Arc<Vec<(Partition, u64)>>>>> =
    Lazy::new(Default::default);

/// Canonical representative of the orbit under swapping and conjugation.
pub fn canonical_key(a: &Partition, b: &Partition, c: &Partition) -> Triple {
    let (ac, bc, cc) = (a.conjugate(), b.conjugate(), c.conjugate());
    [
        (a.clone(), b.clone(), c.clone()),
        (b.clone(), a.clone(), c.clone()),
        (ac.clone(), bc.clone(), cc.clone()),
        (bc, ac, cc),
    ]
    .into_iter()
    .min()
    .unwrap()
}

/// Coefficient `c^γ_{α,β}` after the cheap necessary conditions have passed.
pub(crate) fn coefficient(a: &Partition, b: &Partition, c: &Partition) -> u64 {
    if a.is_empty() {
        return (b == c) as u64;
    }
    if b.is_empty() {
        return (a == c) as u64;
    }
    let key = canonical_key(a, b, c);
    if let Some(&v) = COEFFS.read().unwrap().get(&key) {
        return v;
    }
    let rows_cap = c.len();
    if let Some(v) = cached_product(a, b, rows_cap) {
        let found = v.iter().find(|(g, _)| g == c).map_or(0, |x| x.1);
        COEFFS.write().unwrap().insert(key, found);
        return found;
    }
    let (mut x, mut y, mut z) = (a.clone(), b.clone(), c.clone());
    if z.len() > z.first() {
        x = x.conjugate();
        y = y.conjugate();
        z = z.conjugate();
    }
    if x.size() < y.size() {
        std::mem::swap(&mut x, &mut y);
    }
    let v = Grow::bounded(&x, &y, &z).run();
    COEFFS.write().unwrap().insert(key, v);
    v
}

fn cached_product(a: &Partition, b: &Partition, rows_cap: usize) -> Option<Arc<Vec<(Partition, u64)>>> {
    let key = product_key(a, b, rows_cap);
    PRODUCTS.read().unwrap().get(&key).cloned()
}

fn product_key(a: &Partition, b: &Partition, rows_cap: usize) -> ProductKey {
    let rows = rows_cap.min(a.len() + b.len());
    if a <= b {
        (a.clone(), b.clone(), rows)
    } else {
        (b.clone(), a.clone(), rows)
    }
}

/// All `γ` with at most `rows_cap` rows and `c^γ_{α,β} > 0`, sorted descending.
pub(crate) fn product(a: &Partition, b: &Partition, rows_cap: usize) -> Arc<Vec<(Partition, u64)>> {
    let key = product_key(a, b, rows_cap);
    if let Some(v) = PRODUCTS.read().unwrap().get(&key) {
        return v.clone();
    }
    let rows = key.2;
    let mut out: Vec<(Partition, u64)> = if a.is_empty() || b.is_empty() {
        let g = if a.is_empty() { b.clone() } else { a.clone() };
        if g.len() <= rows {
            vec![(g, 1)]
        } else {
            Vec::new()
        }
    } else {
        let cols = a.first() + b.first();
        let conj = cols < rows;
        let (mut x, mut y) = if conj {
            (a.conjugate(), b.conjugate())
        } else {
            (a.clone(), b.clone())
        };
        if x.size() < y.size() || (x.size() == y.size() && x.len() < y.len()) {
            std::mem::swap(&mut x, &mut y);
        }
        let (r, cap) = if conj { (cols, rows) } else { (rows, cols) };
        let counts = Grow::free(&x, &y, r, cap).collect();
        counts
            .into_iter()
            .map(|(g, v)| {
                let p = Partition::trimmed(g);
                (if conj { p.conjugate() } else { p }, v)
            })
            .collect()
    };
    out.sort_by(|p, q| q.0.cmp(&p.0));
    let out = Arc::new(out);
    PRODUCTS.write().unwrap().insert(key, out.clone());
    out
}

/// Adds one horizontal strip per label of β on top of α, keeping the
/// reading word a lattice word.
struct Grow<'a> {
    beta: &'a [usize],
    rows: usize,
    caps: Vec<usize>,
    target: Option<&'a [usize]>,
    out: HashMap<Vec<usize>, u64>,
    hits: u64,
    start: Vec<usize>,
}

impl<'a> Grow<'a> {
    fn free(alpha: &Partition, beta: &'a Partition, rows: usize, col_cap: usize) -> Self {
        let rows = rows.min(alpha.len() + beta.len());
        let mut start = alpha.parts().to_vec();
        start.resize(rows.max(alpha.len()), 0);
        Grow {
            beta: beta.parts(),
            rows,
            caps: vec![col_cap; start.len()],
            target: None,
            out: HashMap::new(),
            hits: 0,
            start,
        }
    }

    fn bounded(alpha: &Partition, beta: &'a Partition, gamma: &'a Partition) -> Self {
        let mut start = alpha.parts().to_vec();
        start.resize(gamma.len(), 0);
        Grow {
            beta: beta.parts(),
            rows: gamma.len(),
            caps: gamma.parts().to_vec(),
            target: Some(gamma.parts()),
            out: HashMap::new(),
            hits: 0,
            start,
        }
    }

    fn collect(mut self) -> HashMap<Vec<usize>, u64> {
        if self.start.len() > self.rows {
            return HashMap::new();
        }
        let mut shape = self.start.clone();
        self.label(0, &mut shape, &[]);
        self.out
    }

    fn run(mut self) -> u64 {
        let mut shape = self.start.clone();
        self.label(0, &mut shape, &[]);
        self.hits
    }

    fn label(&mut self, i: usize, shape: &mut [usize], prev: &[usize]) {
        if i == self.beta.len() {
            match self.target {
                Some(t) => {
                    if shape == t {
                        self.hits += 1;
                    }
                }
                None => *self.out.entry(shape.to_vec()).or_insert(0) += 1,
            }
            return;
        }
        if let Some(t) = self.target {
            let left = self.beta.len() - i;
            if (0..self.rows).any(|r| r + left < self.rows && t[r + left] > shape[r]) {
                return;
            }
        }
        let old = shape.to_vec();
        let mut counts = vec![0; self.rows];
        self.place(i, 0, self.beta[i], &old, shape, &mut counts, prev, 0, 0);
    }

    #[allow(clippy::too_many_arguments)]
    fn place(
        &mut self,
        i: usize,
        r: usize,
        remaining: usize,
        old: &[usize],
        shape: &mut [usize],
        counts: &mut [usize],
        prev: &[usize],
        cum_cur: usize,
        cum_prev: usize,
    ) {
        if remaining == 0 {
            let snapshot = counts.to_vec();
            self.label(i + 1, shape, &snapshot);
            return;
        }
        if r == self.rows {
            return;
        }
        let mut hi = remaining;
        if r > 0 {
            hi = hi.min(old[r - 1] - old[r]);
        }
        hi = hi.min(self.caps[r].saturating_sub(old[r]));
        if i > 0 {
            hi = hi.min(cum_prev - cum_cur);
        }
        let below = if r + 1 < self.rows { old[r] - old[self.rows - 1] } else { 0 };
        let lo = remaining.saturating_sub(below);
        if lo > hi {
            return;
        }
        let pr = prev.get(r).copied().unwrap_or(0);
        for n in (lo..=hi).rev() {
            shape[r] = old[r] + n;
            counts[r] = n;
            self.place(i, r + 1, remaining - n, old, shape, counts, prev, cum_cur + n, cum_prev + pr);
        }
        shape[r] = old[r];
        counts[r] = 0;
    }
}

/// Lattice-word fillings of the skew shape `outer/inner`, counted by content.
pub(crate) fn skew_fillings(outer: &Partition, inner: &Partition) -> HashMap<Vec<usize>, u64> {
    let mut cells = Vec::new();
    for r in 0..outer.len() {
        for c in (inner.at(r)..outer.at(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut f = Filler {
        outer,
        inner,
        cells,
        grid: outer.parts().iter().map(|&p| vec![0u16; p]).collect(),
        counts: vec![0; outer.len() + 1],
        out: HashMap::new(),
    };
    f.fill(0);
    f.out
}

struct Filler<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<u16>>,
    counts: Vec<usize>,
    out: HashMap<Vec<usize>, u64>,
}

impl Filler<'_> {
    fn fill(&mut self, k: usize) {
        if k == self.cells.len() {
            let mut content = self.counts.clone();
            while content.last() == Some(&0) {
                content.pop();
            }
            *self.out.entry(content).or_insert(0) += 1;
            return;
        }
        let (r, c) = self.cells[k];
        let mut hi = r as u16 + 1;
        if c + 1 < self.outer.at(r) {
            hi = hi.min(self.grid[r][c + 1]);
        }
        let lo = if r > 0 && c >= self.inner.at(r - 1) { self.grid[r - 1][c] + 1 } else { 1 };
        for v in lo..=hi {
            let vi = v as usize - 1;
            if vi > 0 && self.counts[vi - 1] <= self.counts[vi] {
                continue;
            }
            self.grid[r][c] = v;
            self.counts[vi] += 1;
            self.fill(k + 1);
            self.counts[vi] -= 1;
        }
        self.grid[r][c] = 0;
    }
}

/// Every memoized coefficient, sorted.
pub fn snapshot() -> Vec<(Partition, Partition, Partition, u64)> {
    let mut v: Vec<_> = COEFFS
        .read()
        .unwrap()
        .iter()
        .map(|((a, b, c), &v)| (a.clone(), b.clone(), c.clone(), v))
        .collect();
    v.sort();
    v
}

/// Seeds the memo with a known coefficient.
pub fn seed(a: &Partition, b: &Partition, c: &Partition, value: u64) {
    COEFFS.write().unwrap().insert(canonical_key(a, b, c), value);
}

/// Drops all memoized data.
pub fn clear() {
    COEFFS.write().unwrap().clear();
    PRODUCTS.write().unwrap().clear();
}
