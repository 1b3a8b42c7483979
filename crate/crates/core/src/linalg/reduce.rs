use super::rational::Rational;

/// Incremental Gauss–Jordan elimination.
///
/// Rows are pushed one at a time and kept fully reduced, so memory stays
/// bounded by the rank even when the input system has many more equations
/// than unknowns. Every stored row has a leading 1 at its pivot column and
/// zeros in every other stored pivot column.
#[derive(Debug, Clone)]
pub struct RowReducer {
    cols: usize,
    rows: Vec<Vec<Rational>>,
    support: Vec<Vec<usize>>,
    pivots: Vec<usize>,
}

fn support_of(row: &[Rational]) -> Vec<usize> {
    row.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, _)| j)
        .collect()
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer { cols, rows: Vec::new(), support: Vec::new(), pivots: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduce `row` against the stored basis in place; returns whether
    /// anything is left.
    fn reduce(&self, row: &mut [Rational]) -> bool {
        for ((p, prow), supp) in self.pivots.iter().zip(&self.rows).zip(&self.support) {
            if row[*p].is_zero() {
                continue;
            }
            let f = row[*p].clone();
            for &j in supp {
                let d = &f * &prow[j];
                row[j] -= d;
            }
        }
        row.iter().any(|x| !x.is_zero())
    }

    /// Whether `row` lies in the span of the rows pushed so far.
    pub fn contains(&self, row: &[Rational]) -> bool {
        assert_eq!(row.len(), self.cols);
        let mut r = row.to_vec();
        !self.reduce(&mut r)
    }

    /// Add a row; returns `true` if it increased the rank.
    pub fn push(&mut self, mut row: Vec<Rational>) -> bool {
        assert_eq!(row.len(), self.cols, "row length");
        if self.is_full() || !self.reduce(&mut row) {
            return false;
        }
        let c = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
        let inv = row[c].recip().expect("nonzero pivot");
        if !inv.is_one() {
            for x in row.iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let supp = support_of(&row);
        for (prow, psupp) in self.rows.iter_mut().zip(self.support.iter_mut()) {
            if prow[c].is_zero() {
                continue;
            }
            let f = prow[c].clone();
            for &j in &supp {
                let d = &f * &row[j];
                prow[j] -= d;
            }
            *psupp = support_of(prow);
        }
        self.rows.push(row);
        self.support.push(supp);
        self.pivots.push(c);
        true
    }

    /// Basis of the common null space of all pushed rows, in the same
    /// free-variable order as [`Matrix::kernel_basis`](super::Matrix::kernel_basis).
    pub fn kernel_basis(self) -> Vec<Vec<Rational>> {
        let cols = self.cols;
        let (rows, pivots) = self.into_rref();
        let mut is_pivot = vec![false; cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rational::zero(); cols];
                v[f] = Rational::one();
                for (row, &p) in rows.iter().zip(&pivots) {
                    if !row[f].is_zero() {
                        v[p] = -&row[f];
                    }
                }
                v
            })
            .collect()
    }

    /// Nonzero RREF rows ordered by pivot column, with the pivots.
    pub fn into_rref(self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let pivots = order.iter().map(|&i| self.pivots[i]).collect();
        let mut rows: Vec<Option<Vec<Rational>>> = self.rows.into_iter().map(Some).collect();
        let basis = order.iter().map(|&i| rows[i].take().expect("each row once")).collect();
        (basis, pivots)
    }
}
