//! Canonical labeling of small graphs.
//!
//! The canonical form of a graph on `n` vertices is the
//! lexicographically smallest adjacency bit-string over all vertex
//! relabelings. The string lists, slot by slot, the adjacency of each
//! vertex to the vertices placed before it (colex slot order), so a
//! depth-first placement fixes a growing prefix of the string and can
//! be pruned exactly against the best complete string found so far.

/// Number of adjacency slots for `n` vertices.
pub(crate) fn slot_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Largest `n` the packed `u64` string supports.
pub(crate) const MAX_CANON_VERTICES: usize = 11;

struct Search<'a> {
    n: usize,
    slots: usize,
    adj: &'a [u16],
    best: u64,
}

impl Search<'_> {
    fn run(&mut self) {
        let mut chosen = Vec::with_capacity(self.n);
        self.place(&mut chosen, 0, 0);
    }

    fn place(&mut self, chosen: &mut Vec<usize>, used: u16, partial: u64) {
        let p = chosen.len();
        if p == self.n {
            if partial < self.best {
                self.best = partial;
            }
            return;
        }
        let base = slot_count(p);
        // New bits contributed by putting `u` at position p: adjacency
        // to the already placed vertices, packed most-significant-first.
        let mut candidates: Vec<(u64, usize)> = Vec::with_capacity(self.n - p);
        for u in 0..self.n {
            if used & (1 << u) != 0 {
                continue;
            }
            let mut bits = 0u64;
            for (q, &w) in chosen.iter().enumerate() {
                if self.adj[u] & (1 << w) != 0 {
                    bits |= 1 << (self.slots - 1 - (base + q));
                }
            }
            candidates.push((bits, u));
        }
        candidates.sort_unstable();
        let filled = base + p;
        let prefix = if filled == 0 {
            0
        } else {
            ((1u64 << filled) - 1) << (self.slots - filled)
        };
        for (bits, u) in candidates {
            let next = partial | bits;
            // Candidates come sorted, so the first prefix that already
            // loses to the incumbent ends the whole level.
            if next & prefix > self.best & prefix {
                break;
            }
            chosen.push(u);
            self.place(chosen, used | (1 << u), next);
            chosen.pop();
        }
    }
}

/// Minimum packed adjacency string over all relabelings. Slot `k`
/// occupies bit `slots - 1 - k`, so numeric order on the result equals
/// lexicographic order on the strings.
pub(crate) fn canonical_mask(n: usize, adj: &[u16]) -> u64 {
    debug_assert!(n <= MAX_CANON_VERTICES);
    if n < 2 {
        return 0;
    }
    let mut search = Search {
        n,
        slots: slot_count(n),
        adj,
        best: u64::MAX,
    };
    search.run();
    search.best
}

/// Decodes a packed adjacency string back into 1-based edges.
pub(crate) fn mask_to_edges(n: usize, mask: u64) -> Vec<(usize, usize)> {
    let slots = slot_count(n);
    let mut edges = Vec::new();
    let mut k = 0usize;
    for p in 1..n {
        for q in 0..p {
            if mask & (1 << (slots - 1 - k)) != 0 {
                edges.push((q + 1, p + 1));
            }
            k += 1;
        }
    }
    edges
}
