/// Size bounds for the enumerative algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest group stored with a full Cayley table.
    pub max_group_order: usize,
    /// Largest group whose character table will be computed.
    pub max_table_order: usize,
    /// Largest group carrying explicit matrix representations.
    pub max_matrix_group_order: usize,
    /// Largest matrix dimension for explicit representations.
    pub max_matrix_dim: usize,
    /// Largest group whose automorphisms are enumerated by brute force.
    pub max_automorphism_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group_order: 10_000,
            max_table_order: 2_000,
            max_matrix_group_order: 100,
            max_matrix_dim: 8,
            max_automorphism_order: 1_000,
        }
    }
}
