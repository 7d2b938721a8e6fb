//! Abelianization through the Smith normal form of the exponent-sum matrix.

use crate::error::{Error, Result};
use crate::van_kampen::GroupPresentation;

/// Exponent sums: one row per relator, one column per generator.
pub fn relation_matrix(p: &GroupPresentation) -> Vec<Vec<i64>> {
    let col: std::collections::HashMap<u32, usize> =
        p.generators.iter().enumerate().map(|(i, g)| (g.position(), i)).collect();
    p.relators
        .iter()
        .map(|r| {
            let mut row = vec![0i64; p.generators.len()];
            for &x in r.letters() {
                row[col[&x.unsigned_abs()]] += x.signum() as i64;
            }
            row
        })
        .collect()
}

/// Diagonal of the Smith normal form, each entry dividing the next.
/// Entries beyond the rank are 0.
pub fn smith_diagonal(mut a: Vec<Vec<i64>>, cols: usize) -> Result<Vec<i64>> {
    let rows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    let (top, rest) = a.split_at_mut(i);
                    for (x, &y) in rest[0][t..].iter_mut().zip(&top[t][t..]) {
                        *x = x
                            .checked_sub(q.checked_mul(y).ok_or(Error::IntegerOverflow)?)
                            .ok_or(Error::IntegerOverflow)?;
                    }
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        let v = q.checked_mul(row[t]).ok_or(Error::IntegerOverflow)?;
                        row[j] = row[j].checked_sub(v).ok_or(Error::IntegerOverflow)?;
                    }
                }
                dirty |= a[t][j] != 0;
            }
            if !dirty {
                // the pivot must divide the rest of the block
                let bad =
                    (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| a[i][j] % p != 0);
                match bad {
                    Some((i, _)) => {
                        let (top, rest) = a.split_at_mut(i);
                        for (x, &y) in top[t][t..].iter_mut().zip(&rest[0][t..]) {
                            *x = x.checked_add(y).ok_or(Error::IntegerOverflow)?;
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // move the smallest remaining entry of row/column t into the pivot
            let mut best = (t, t);
            for i in t..rows {
                if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag.resize(cols, 0);
    Ok(diag)
}

/// Invariant factors of the abelianization: entries > 1, then a 0 for each
/// free Z summand.
pub fn abelianization(p: &GroupPresentation) -> Result<Vec<i64>> {
    let n = p.generators.len();
    let d = smith_diagonal(relation_matrix(p), n)?;
    let mut out: Vec<i64> = d.iter().copied().filter(|&x| x > 1).collect();
    out.extend(d.iter().filter(|&&x| x == 0));
    Ok(out)
}
