//! Semistandard Young tableaux and classical Kostka numbers.

use super::Partition;

/// Rows of entries; row `i` has `shape[i]` cells.
pub type Ssyt = Vec<Vec<usize>>;

/// All SSYT of shape `λ` with entries in `1..=max_entry`, filled row by row.
pub fn enumerate_ssyt(shape: &Partition, max_entry: usize) -> Vec<Ssyt> {
    let mut out = Vec::new();
    let mut rows: Ssyt = shape.0.iter().map(|&n| Vec::with_capacity(n)).collect();
    fill(shape, max_entry, 0, &mut rows, &mut out);
    out
}

fn fill(shape: &Partition, max_entry: usize, row: usize, rows: &mut Ssyt, out: &mut Vec<Ssyt>) {
    if row == shape.len() {
        out.push(rows.clone());
        return;
    }
    let col = rows[row].len();
    if col == shape.0[row] {
        fill(shape, max_entry, row + 1, rows, out);
        return;
    }
    let left = if col > 0 { rows[row][col - 1] } else { 1 };
    let above = if row > 0 { rows[row - 1][col] + 1 } else { 1 };
    for v in left.max(above)..=max_entry {
        rows[row].push(v);
        fill(shape, max_entry, row, rows, out);
        rows[row].pop();
    }
}

/// `K_{λ,μ}`: SSYT of shape `λ` and content `μ`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> u64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    enumerate_ssyt(lambda, mu.len())
        .into_iter()
        .filter(|t| {
            let mut content = vec![0usize; mu.len()];
            t.iter().flatten().for_each(|&v| content[v - 1] += 1);
            content == mu.0
        })
        .count() as u64
}

/// Classical Kostka matrix with rows and columns in reverse lexicographic order.
pub fn kostka_matrix(n: usize) -> (Vec<Partition>, Vec<Vec<i64>>) {
    let order = Partition::all(n);
    let rows = order.iter().map(|l| order.iter().map(|m| kostka(l, m) as i64).collect()).collect();
    (order, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangular::is_upper_unitriangular;

    #[test]
    fn counts() {
        assert_eq!(enumerate_ssyt(&Partition(vec![2, 1]), 3).len(), 8);
        assert_eq!(kostka(&Partition(vec![3, 2]), &Partition(vec![1; 5])), 5);
        assert_eq!(kostka(&Partition(vec![3, 2]), &Partition(vec![3, 1, 1])), 1);
        assert_eq!(kostka(&Partition(vec![3, 2]), &Partition(vec![2, 2, 1])), 2);
        assert_eq!(kostka(&Partition(vec![2, 1]), &Partition(vec![3])), 0);
    }

    #[test]
    fn matrix_is_unitriangular() {
        for n in 0..=6 {
            assert!(is_upper_unitriangular(&kostka_matrix(n).1));
        }
    }
}
