use super::Presentation;
use crate::error::{Error, Result};
use crate::freewords::Word;

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

const UNDEF: u32 = u32::MAX;

/// A complete coset table for the right action on the cosets of a subgroup.
///
/// Column `2j` holds the action of generator `j`, column `2j + 1` that of its
/// inverse. Coset 0 is the subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    rank: usize,
    index: usize,
    table: Vec<u32>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_complete(&self) -> bool {
        self.table.iter().all(|&x| x != UNDEF)
    }

    /// Image of coset `c` under generator `j` (`sign = 1`) or its inverse.
    pub fn act(&self, c: usize, j: usize, sign: i8) -> usize {
        let col = 2 * j + usize::from(sign < 0);
        self.table[c * 2 * self.rank + col] as usize
    }

    /// Coset reached from `c` by reading `w`.
    pub fn trace(&self, c: usize, w: &Word) -> usize {
        w.letters().fold(c, |e, (j, s)| self.act(e, j, s))
    }

    /// Row `c`: the images under `x_1, x_1⁻¹, x_2, …`.
    pub fn row(&self, c: usize) -> &[u32] {
        &self.table[c * 2 * self.rank..(c + 1) * 2 * self.rank]
    }

    /// Checks that every column is a permutation, each relator fixes every
    /// coset, and each subgroup word fixes coset 0.
    pub fn verify(&self, p: &Presentation, subgroup: &[Word]) -> Result<()> {
        let k = self.index;
        for col in 0..2 * self.rank {
            let mut seen = vec![false; k];
            for c in 0..k {
                let d = self.table[c * 2 * self.rank + col] as usize;
                if d >= k || seen[d] || self.table[d * 2 * self.rank + (col ^ 1)] as usize != c {
                    return Err(Error::consistency(format!(
                        "column {col} is not a permutation"
                    )));
                }
                seen[d] = true;
            }
        }
        for c in 0..k {
            for r in p.relators() {
                if self.trace(c, r) != c {
                    return Err(Error::consistency(format!("relator fails at coset {c}")));
                }
            }
        }
        for w in subgroup {
            if self.trace(0, w) != 0 {
                return Err(Error::consistency("subgroup word moves coset 0"));
            }
        }
        Ok(())
    }
}

struct Enumerator {
    cols: usize,
    cap: usize,
    table: Vec<u32>,
    // union-find parent; a coset is live while parent[c] == c
    parent: Vec<u32>,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(rank: usize, cap: usize) -> Self {
        let cols = 2 * rank;
        Enumerator {
            cols,
            cap,
            table: vec![UNDEF; cols],
            parent: vec![0],
            queue: Vec::new(),
        }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }

    fn get(&self, c: usize, x: usize) -> u32 {
        self.table[c * self.cols + x]
    }

    fn set(&mut self, c: usize, x: usize, d: u32) {
        self.table[c * self.cols + x] = d;
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] as usize == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        if self.len() >= self.cap {
            return Err(Error::CosetCap { cap: self.cap });
        }
        let d = self.len() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.cols));
        self.set(c, x, d);
        self.set(d as usize, x ^ 1, c as u32);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        self.parent[drop as usize] = keep;
        self.queue.push(drop);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i] as usize;
            i += 1;
            for x in 0..self.cols {
                let f = self.get(e, x);
                if f == UNDEF {
                    continue;
                }
                // drop the back edge into the dead coset
                if self.get(f as usize, x ^ 1) == e as u32 {
                    self.set(f as usize, x ^ 1, UNDEF);
                }
                let e1 = self.rep(e as u32) as usize;
                let f1 = self.rep(f);
                let ex = self.get(e1, x);
                if ex != UNDEF {
                    self.merge(f1, ex);
                } else {
                    let fx = self.get(f1 as usize, x ^ 1);
                    if fx != UNDEF {
                        self.merge(e1 as u32, fx);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1 as usize, x ^ 1, e1 as u32);
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<()> {
        let mut f = c;
        let mut b = c;
        // letters i..end are still unread
        let mut i = 0usize;
        let mut end = w.len();
        loop {
            while i < end && self.get(f, w[i]) != UNDEF {
                f = self.get(f, w[i]) as usize;
                i += 1;
            }
            if i == end {
                if f != b {
                    self.coincidence(f as u32, b as u32);
                }
                return Ok(());
            }
            while end > i && self.get(b, w[end - 1] ^ 1) != UNDEF {
                b = self.get(b, w[end - 1] ^ 1) as usize;
                end -= 1;
            }
            if end == i {
                self.coincidence(f as u32, b as u32);
                return Ok(());
            }
            if end == i + 1 {
                self.set(f, w[i], b as u32);
                self.set(b, w[i] ^ 1, f as u32);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

fn columns(w: &Word) -> Vec<usize> {
    w.letters()
        .map(|(j, s)| 2 * j + usize::from(s < 0))
        .collect()
}

/// HLT coset enumeration of the subgroup generated by `subgroup` in the group
/// presented by `p`: subgroup words are scanned at coset 0, then every
/// relator at every live coset in definition order, filling each row before
/// moving on.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], max_cosets: usize) -> Result<CosetTable> {
    let rank = p.rank();
    for w in subgroup {
        if w.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: w.rank(),
            });
        }
    }
    let rels: Vec<Vec<usize>> = p.relators().iter().map(columns).collect();
    let mut en = Enumerator::new(rank, max_cosets.max(1));
    for w in subgroup {
        en.scan_and_fill(0, &columns(w))?;
    }
    let mut c = 0;
    while c < en.len() {
        if en.live(c) {
            for r in &rels {
                en.scan_and_fill(c, r)?;
                if !en.live(c) {
                    break;
                }
            }
            if en.live(c) {
                for x in 0..en.cols {
                    if en.get(c, x) == UNDEF {
                        en.define(c, x)?;
                    }
                }
            }
        }
        c += 1;
    }
    // renumber the live cosets in definition order
    let mut number = vec![UNDEF; en.len()];
    let mut index = 0u32;
    for c in 0..en.len() {
        if en.live(c) {
            number[c] = index;
            index += 1;
        }
    }
    let mut table = Vec::with_capacity(index as usize * en.cols);
    for c in 0..en.len() {
        if en.live(c) {
            for x in 0..en.cols {
                let d = en.get(c, x);
                if d == UNDEF {
                    return Err(Error::IncompleteTable);
                }
                table.push(number[en.rep(d) as usize]);
            }
        }
    }
    Ok(CosetTable {
        rank,
        index: index as usize,
        table,
    })
}
