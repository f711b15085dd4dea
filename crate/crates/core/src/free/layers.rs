//! Layered construction of `Q_k = T_{≤k} / W_k`, where `W_k` is spanned by the
//! products `u·r·v` of total length at most `k`.
//!
//! Every element of `T_{≤k}` is a scalar plus a sum of `x ⊗ (element of T_{≤k-1})`,
//! so `Q_k` is the quotient of `P_k = K ⊕ ⨁_x x ⊗ Q_{k-1}` by the images of
//! `r·c` for relations `r` and basis classes `c` of `Q_{k - deg r}`.

use super::word::{NCPoly, Word};
use crate::exact::{Echelon, SparseVec};

struct Level {
    dim: usize,
    /// `Q_k` coordinate to `P_k` column.
    cols: Vec<usize>,
    unit: SparseVec,
    /// `left[x][c]`: image of `x · e_c` in `Q_{k+1}`. Filled when level `k+1` is built.
    left: Vec<Vec<SparseVec>>,
    /// `up[c]`: image of `e_c` in `Q_{k+1}`.
    up: Vec<SparseVec>,
}

pub(crate) struct Layers {
    ngens: usize,
    relations: Vec<Vec<(Word, crate::exact::Rational)>>,
    degrees: Vec<usize>,
    trivial: bool,
    levels: Vec<Level>,
}

impl Layers {
    pub(crate) fn new(ngens: usize, relations: &[NCPoly]) -> Self {
        let mut rels = Vec::new();
        let mut degrees = Vec::new();
        let mut trivial = false;
        for r in relations.iter().filter(|r| !r.is_zero()) {
            if r.degree() == 0 {
                trivial = true;
            }
            degrees.push(r.degree());
            rels.push(r.terms().map(|(w, c)| (w.clone(), c.clone())).collect());
        }
        Layers {
            ngens,
            relations: rels,
            degrees,
            trivial,
            levels: Vec::new(),
        }
    }

    pub(crate) fn dim(&mut self, k: usize) -> usize {
        self.ensure(k);
        self.levels[k].dim
    }

    pub(crate) fn ensure(&mut self, k: usize) {
        while self.levels.len() <= k {
            self.build_next();
        }
    }

    fn pre_dim(&self, k: usize) -> usize {
        if k == 0 {
            1
        } else {
            1 + self.ngens * self.levels[k - 1].dim
        }
    }

    fn build_next(&mut self) {
        let k = self.levels.len();
        let pre = self.pre_dim(k);
        let mut echelon = Echelon::new();
        if self.trivial {
            for i in 0..pre {
                echelon.insert(SparseVec::unit(i));
            }
        } else {
            for (r, &d) in self.relations.iter().zip(&self.degrees) {
                if d > k {
                    continue;
                }
                let j = k - d;
                for col in 0..self.pre_dim(j) {
                    let mut row = SparseVec::new();
                    for (u, coef) in r {
                        row.add_scaled_assign(coef, &self.embed(u, col, j, k));
                    }
                    echelon.insert(row);
                }
            }
        }
        let mut slot = vec![usize::MAX; pre];
        let mut cols = Vec::new();
        for (i, s) in slot.iter_mut().enumerate() {
            if !echelon.is_pivot(i) {
                *s = cols.len();
                cols.push(i);
            }
        }
        let project = |v: &SparseVec| echelon.reduce(v).map_indices(|i| slot[i]);
        let unit = project(&SparseVec::unit(0));
        let (left, up) = if k == 0 {
            (Vec::new(), Vec::new())
        } else {
            let prev = &self.levels[k - 1];
            let q = prev.dim;
            let left: Vec<Vec<SparseVec>> = (0..self.ngens)
                .map(|x| {
                    (0..q)
                        .map(|c| project(&SparseVec::unit(1 + x * q + c)))
                        .collect()
                })
                .collect();
            let up = prev
                .cols
                .iter()
                .map(|&col| {
                    if col == 0 {
                        project(&SparseVec::unit(0))
                    } else {
                        let qq = self.levels[k - 2].dim;
                        let (x, c) = ((col - 1) / qq, (col - 1) % qq);
                        project(&self.levels[k - 2].up[c].shifted(1 + x * q))
                    }
                })
                .collect();
            (left, up)
        };
        if k > 0 {
            let prev = &mut self.levels[k - 1];
            prev.left = left;
            prev.up = up;
        }
        self.levels.push(Level {
            dim: cols.len(),
            cols,
            unit,
            left: Vec::new(),
            up: Vec::new(),
        });
    }

    /// `u · v` as an element of `P_k`, where `v` is column `col` of `P_j` (`j + |u| ≤ k`, `j < k`).
    fn embed(&self, u: &Word, col: usize, j: usize, k: usize) -> SparseVec {
        let q = self.levels[k - 1].dim;
        // v as a class of Q_{j'} preceded by the letters in `head`
        let (head, base, at): (Vec<usize>, SparseVec, usize) = if col == 0 {
            (Vec::new(), self.levels[j].unit.clone(), j)
        } else {
            let qq = self.levels[j - 1].dim;
            (vec![(col - 1) / qq], SparseVec::unit((col - 1) % qq), j - 1)
        };
        let mut letters = u.letters().to_vec();
        letters.extend(head);
        match letters.split_first() {
            None => SparseVec::unit(0),
            Some((&x, rest)) => {
                let inner = self.apply(rest, &base, at);
                self.lift(&inner, at + rest.len(), k - 1).shifted(1 + x * q)
            }
        }
    }

    fn left_mul(&self, x: usize, v: &SparseVec, j: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (c, coef) in v.iter() {
            out.add_scaled_assign(coef, &self.levels[j].left[x][c]);
        }
        out
    }

    /// `u · v` for `v ∈ Q_j`, landing in `Q_{j+|u|}`.
    fn apply(&self, u: &[usize], v: &SparseVec, j: usize) -> SparseVec {
        let mut cur = v.clone();
        let mut level = j;
        for &x in u.iter().rev() {
            cur = self.left_mul(x, &cur, level);
            level += 1;
        }
        cur
    }

    fn lift(&self, v: &SparseVec, from: usize, to: usize) -> SparseVec {
        let mut cur = v.clone();
        for l in from..to {
            let mut next = SparseVec::new();
            for (c, coef) in cur.iter() {
                next.add_scaled_assign(coef, &self.levels[l].up[c]);
            }
            cur = next;
        }
        cur
    }

    /// Class of `w` in `Q_n` (`|w| ≤ n`).
    pub(crate) fn class(&mut self, w: &Word, n: usize) -> SparseVec {
        self.ensure(n);
        let j = n - w.len();
        self.apply(w.letters(), &self.levels[j].unit, j)
    }

    /// `u · v` where `v` is a class in `Q_j`; the result lives in `Q_{j+|u|}`.
    pub(crate) fn left_word(&mut self, u: &Word, v: &SparseVec, j: usize) -> SparseVec {
        self.ensure(j + u.len());
        self.apply(u.letters(), v, j)
    }

    /// Classes in `Q_n` of every word of length exactly `len`, in canonical order.
    pub(crate) fn classes_of_length(&mut self, len: usize, n: usize) -> Vec<(Word, SparseVec)> {
        self.ensure(n);
        let j = n - len;
        let mut layer: Vec<(Vec<usize>, SparseVec)> =
            vec![(Vec::new(), self.levels[j].unit.clone())];
        for t in 0..len {
            let mut next = Vec::with_capacity(layer.len() * self.ngens);
            for (w, v) in &layer {
                for x in 0..self.ngens {
                    let mut nw = Vec::with_capacity(w.len() + 1);
                    nw.push(x);
                    nw.extend_from_slice(w);
                    next.push((nw, self.left_mul(x, v, j + t)));
                }
            }
            layer = next;
        }
        let mut out: Vec<(Word, SparseVec)> =
            layer.into_iter().map(|(w, v)| (Word(w), v)).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
}
