use num_rational::BigRational;
use num_traits::Zero;

/// Reduced row echelon form over Q; returns the nonzero rows.
pub fn rational_row_reduce(rows: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let mut a: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(pivot.iter()) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    a
}

pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    rational_row_reduce(rows).len()
}
