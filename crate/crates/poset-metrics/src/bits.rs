//! Dense bit matrix used for the order and cover relations.

/// Square boolean matrix packed into 64-bit words, one row at a time.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitMatrix {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64).max(1);
        BitMatrix {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        let w = row * self.words_per_row + col / 64;
        self.bits[w] >> (col % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        let w = row * self.words_per_row + col / 64;
        let mask = 1u64 << (col % 64);
        if value {
            self.bits[w] |= mask;
        } else {
            self.bits[w] &= !mask;
        }
    }

    pub fn row(&self, row: usize) -> &[u64] {
        let start = row * self.words_per_row;
        &self.bits[start..start + self.words_per_row]
    }

    /// OR another row into `row` in place. Used by the Warshall closure loop.
    pub fn or_row_into(&mut self, row: usize, other: usize) {
        let (r, o) = (row * self.words_per_row, other * self.words_per_row);
        for k in 0..self.words_per_row {
            let v = self.bits[o + k];
            self.bits[r + k] |= v;
        }
    }

    pub fn row_count_ones(&self, row: usize) -> u32 {
        self.row(row).iter().map(|w| w.count_ones()).sum()
    }

    /// Indices of set columns in `row`, ascending.
    pub fn iter_row(&self, row: usize) -> impl Iterator<Item = usize> + '_ {
        let words = self.row(row);
        words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn rows_intersect(&self, a: usize, b: usize) -> bool {
        self.row(a).iter().zip(self.row(b)).any(|(x, y)| x & y != 0)
    }

    /// Column indices set in both rows, ascending.
    pub fn row_intersection(&self, a: usize, b: usize) -> Vec<usize> {
        self.iter_row(a).filter(|&c| self.get(b, c)).collect()
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.n);
        for r in 0..self.n {
            for c in self.iter_row(r) {
                t.set(c, r, true);
            }
        }
        t
    }
}
