use super::{AlgebraError, Ring};

/// Determinant of a square matrix over any exact ring.
///
/// Small matrices use Laplace expansion, which never divides and so works
/// over every ring; larger ones use fraction-free Bareiss elimination.
pub fn det<R: Ring>(m: &[Vec<R>]) -> Result<R, AlgebraError> {
    let n = m.len();
    if n == 0 {
        return Err(AlgebraError::EmptyMatrix);
    }
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(AlgebraError::NonSquare {
            rows: n,
            cols: row.len(),
        });
    }
    if n <= 4 {
        let cols: Vec<usize> = (0..n).collect();
        return Ok(laplace(m, 0, &cols));
    }
    Ok(bareiss(m.to_vec()))
}

fn laplace<R: Ring>(m: &[Vec<R>], row: usize, cols: &[usize]) -> R {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc: Option<R> = None;
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero_elem() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.clone() * laplace(m, row + 1, &rest);
        acc = Some(match acc {
            None if k % 2 == 0 => term,
            None => -term,
            Some(a) if k % 2 == 0 => a + term,
            Some(a) => a - term,
        });
    }
    acc.unwrap_or_else(|| m[row][cols[0]].zero_like())
}

fn bareiss<R: Ring>(mut a: Vec<Vec<R>>) -> R {
    let n = a.len();
    let mut sign = false;
    let mut prev = a[0][0].one_like();
    for k in 0..n - 1 {
        if a[k][k].is_zero_elem() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero_elem()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = !sign;
                }
                None => return a[0][0].zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss quotients are exact over an integral domain");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{int, Rat};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(det(&m(&[&[7]])).unwrap(), int(7));
        assert_eq!(det(&m(&[&[1, 2], &[3, 4]])).unwrap(), int(-2));
        assert_eq!(det(&m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]])).unwrap(), int(0));
    }

    #[test]
    fn bareiss_agrees_with_laplace() {
        let a = m(&[
            &[0, 2, 1, 3, 1],
            &[1, 0, 2, 1, 4],
            &[2, 1, 0, 5, 1],
            &[3, 1, 1, 0, 2],
            &[1, 4, 2, 1, 0],
        ]);
        let cols: Vec<usize> = (0..5).collect();
        assert_eq!(det(&a).unwrap(), laplace(&a, 0, &cols));
    }

    #[test]
    fn shape_errors() {
        let empty: Vec<Vec<Rat>> = vec![];
        assert_eq!(det(&empty), Err(AlgebraError::EmptyMatrix));
        assert!(matches!(
            det(&m(&[&[1, 2, 3], &[4, 5, 6]])),
            Err(AlgebraError::NonSquare { .. })
        ));
    }
}
