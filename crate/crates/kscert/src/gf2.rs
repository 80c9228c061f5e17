//! GF(2) linear algebra on bitmask rows (up to 64 columns).

/// Basis of the right kernel of a matrix given as bitmask rows.
///
/// `rows[i]` holds row i with column j in bit j; `cols` is the column
/// count. Returns one bitmask per kernel basis vector. Gaussian
/// elimination with deterministic pivot choice, so the basis is stable.
pub fn kernel_basis(rows: &[u64], cols: usize) -> Vec<u64> {
    assert!(cols <= 64);
    let mut mat: Vec<u64> = rows.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(p) = (rank..mat.len()).find(|&r| (mat[r] >> col) & 1 == 1) else {
            continue;
        };
        mat.swap(rank, p);
        let pivot_row = mat[rank];
        for (r, row) in mat.iter_mut().enumerate() {
            if r != rank && (*row >> col) & 1 == 1 {
                *row ^= pivot_row;
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = 1u64 << free;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            if (mat[r] >> free) & 1 == 1 {
                v |= 1 << pc;
            }
        }
        basis.push(v);
    }
    basis
}

/// Rank over GF(2) of the same row representation.
pub fn rank(rows: &[u64], cols: usize) -> usize {
    cols - kernel_basis(rows, cols).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn in_kernel(rows: &[u64], v: u64) -> bool {
        rows.iter().all(|r| (r & v).count_ones().is_multiple_of(2))
    }

    #[test]
    fn kernel_of_small_matrix() {
        // rows over 4 columns: x0+x2, x1+x2+x3
        let rows = vec![0b0101, 0b1110];
        let basis = kernel_basis(&rows, 4);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(in_kernel(&rows, *v));
        }
        assert_eq!(rank(&rows, 4), 2);
    }

    #[test]
    fn full_rank_matrix_has_trivial_kernel() {
        let rows = vec![0b001, 0b010, 0b100];
        assert!(kernel_basis(&rows, 3).is_empty());
    }

    #[test]
    fn every_basis_combination_lies_in_the_kernel() {
        let rows = vec![0b110110, 0b011011, 0b101101, 0b110110];
        let basis = kernel_basis(&rows, 6);
        for combo in 0u32..(1 << basis.len()) {
            let mut v = 0u64;
            for (i, b) in basis.iter().enumerate() {
                if (combo >> i) & 1 == 1 {
                    v ^= b;
                }
            }
            assert!(in_kernel(&rows, v));
        }
    }
}
