/// Search and size limits shared by every bounded operation.
///
/// Every bounded routine checks its limit up front (or counts nodes while it
/// runs) and fails with [`crate::Error::BoundExceeded`] or
/// [`crate::Error::NodeLimit`] rather than returning an approximate answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest group order for conjugacy-class-of-subgroups enumeration.
    pub subgroup_order: u64,
    /// Largest group order for normal-subgroup lattice work (radical, socle).
    pub normal_order: u64,
    /// Largest coset index materialized by coset actions.
    pub coset_index: u64,
    /// Node budget for transporter (conjugacy) backtracking.
    pub transporter_nodes: u64,
    /// Largest group order for which a full element table is built.
    pub element_table: u64,
    /// Largest number of elements enumerated for intersections and
    /// centralizers.
    pub enumeration: u64,
    /// Node budget for the regular-subgroup search.
    pub regular_nodes: u64,
    /// Explicit digraph size limits.
    pub digraph_vertices: u64,
    pub digraph_arcs: u64,
    /// Largest number of s-arcs enumerated explicitly.
    pub s_arcs: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            subgroup_order: 2000,
            normal_order: 2000,
            coset_index: 100_000,
            transporter_nodes: 10_000_000,
            element_table: 5000,
            enumeration: 2_000_000,
            regular_nodes: 10_000_000,
            digraph_vertices: 200_000,
            digraph_arcs: 5_000_000,
            s_arcs: 2_000_000,
        }
    }
}
