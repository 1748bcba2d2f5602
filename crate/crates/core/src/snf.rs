//! Smith normal form over the integers, diagonal only.

/// Nonzero invariant factors `d_1 | d_2 | … | d_r` of an integer matrix
/// given by rows. The transformation matrices are not tracked.
pub fn invariant_factors(rows: &[Vec<i64>]) -> Vec<u64> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut diagonal = Vec::new();
    for t in 0..nrows.min(ncols) {
        let Some((pr, pc)) = smallest_nonzero(&m, t) else { break };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..nrows {
                let q = m[i][t].div_euclid(m[t][t]);
                if q != 0 {
                    for j in t..ncols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                dirty |= m[i][t] != 0;
            }
            for j in t + 1..ncols {
                let q = m[t][j].div_euclid(m[t][t]);
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                dirty |= m[t][j] != 0;
            }
            if !dirty {
                // Pivot must divide the remaining block; otherwise fold an
                // offending row into row t and keep going.
                let pivot = m[t][t];
                let offending = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| m[i][j] % pivot != 0));
                match offending {
                    Some(i) => {
                        for j in t..ncols {
                            m[t][j] += m[i][j];
                        }
                    }
                    None => break,
                }
            }
            let (pr, pc) = smallest_nonzero(&m, t).expect("block still has the pivot");
            m.swap(t, pr);
            for row in m.iter_mut() {
                row.swap(t, pc);
            }
        }
        diagonal.push(m[t][t].unsigned_abs() as u64);
    }
    diagonal
}

fn smallest_nonzero(m: &[Vec<i128>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(i128, usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, &v) in row.iter().enumerate().skip(t) {
            if v != 0 && best.is_none_or(|(b, _, _)| v.abs() < b) {
                best = Some((v.abs(), i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(invariant_factors(&[vec![4, -5]]), vec![1]);
        assert_eq!(invariant_factors(&[vec![2, -2]]), vec![2]);
        assert_eq!(invariant_factors(&[vec![0, 0]]), Vec::<u64>::new());
        assert_eq!(invariant_factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(invariant_factors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(invariant_factors(&[]), Vec::<u64>::new());
    }

    #[test]
    fn divisibility_chain_holds() {
        let d = invariant_factors(&[vec![6, 0, 0], vec![0, 10, 0], vec![0, 0, 15]]);
        assert_eq!(d, vec![1, 30, 30]);
    }
}
