//! Exact Gauss-Jordan elimination over a coefficient field.

use crate::coeff::Coefficient;

pub type Matrix = Vec<Vec<Coefficient>>;

/// Reduced row echelon form and pivot columns.
pub fn rref(mut m: Matrix) -> (Matrix, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m.clone()).1.len()
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let zero = m[0][0].zero_like();
    let one = m[0][0].one_like();
    let augmented: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { one.clone() } else { zero.clone() }));
            r
        })
        .collect();
    let (red, pivots) = rref(augmented);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(red.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Determinant by elimination.
pub fn determinant(m: &Matrix) -> Coefficient {
    let n = m.len();
    let mut a = m.clone();
    let mut det = a[0][0].one_like();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return det.zero_like();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = &det * &a[c][c];
        let inv = a[c][c].inv().unwrap();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            let pivot = a[c].clone();
            for (x, p) in a[i].iter_mut().zip(&pivot).skip(c) {
                *x = &*x - &(&f * p);
            }
        }
    }
    det
}

/// A nonzero vector `v` with `v · m = 0` (left kernel), if one exists.
pub fn left_kernel_vector(m: &Matrix) -> Option<Vec<Coefficient>> {
    let transposed = transpose(m);
    let (red, pivots) = rref(transposed);
    let cols = m.len();
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let zero = m[0][0].zero_like();
    let mut v = vec![zero; cols];
    v[free] = m[0][0].one_like();
    for (row, &p) in pivots.iter().enumerate() {
        v[p] = -&red[row][free];
    }
    Some(v)
}

/// Solves `y · m = b` for a row vector `y`, if solvable.
pub fn solve_left(m: &Matrix, b: &[Coefficient]) -> Option<Vec<Coefficient>> {
    let mut aug = transpose(m);
    for (row, bi) in aug.iter_mut().zip(b) {
        row.push(bi.clone());
    }
    let unknowns = m.len();
    let (red, pivots) = rref(aug);
    if pivots.contains(&unknowns) {
        return None;
    }
    let zero = m[0][0].zero_like();
    let mut y = vec![zero; unknowns];
    for (row, &p) in pivots.iter().enumerate() {
        y[p] = red[row][unknowns].clone();
    }
    Some(y)
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FieldDescriptor;

    fn mat(rows: &[&[i64]]) -> Matrix {
        let f = FieldDescriptor::Rationals;
        rows.iter()
            .map(|r| r.iter().map(|&x| f.from_int(x)).collect())
            .collect()
    }

    #[test]
    fn inverse_and_det() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, mat(&[&[1, -1], &[-1, 2]]));
        assert_eq!(determinant(&m), FieldDescriptor::Rationals.from_int(1));
        assert!(inverse(&mat(&[&[1, 2], &[2, 4]])).is_none());
        assert!(determinant(&mat(&[&[1, 2], &[2, 4]])).is_zero());
    }

    #[test]
    fn kernel_and_solve() {
        let m = mat(&[&[1, 0], &[1, 0]]);
        let v = left_kernel_vector(&m).unwrap();
        assert_eq!(v, mat(&[&[-1, 1]])[0]);
        assert!(left_kernel_vector(&mat(&[&[3]])).is_none());
        let y = solve_left(&mat(&[&[3]]), &mat(&[&[1]])[0]).unwrap();
        assert_eq!(
            y[0],
            FieldDescriptor::Rationals.from_rational(&crate::coeff::rational(1, 3))
        );
        assert!(solve_left(&m, &mat(&[&[0, 1]])[0]).is_none());
    }
}
