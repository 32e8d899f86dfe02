use super::category::{enumerate_simples, FusionCategory};
use crate::error::Result;
use crate::lie::{classical_tensor, GroupId, Weight};
use crate::linalg::SparseMatrix;

/// Graphviz multigraph with one edge `nu -> mu` per unit of `m[nu][mu]`.
pub fn matrix_dot(name: &str, labels: &[String], m: &SparseMatrix) -> String {
    let mut out = format!("digraph {name} {{\n");
    for (i, l) in labels.iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{l}\"];\n"));
    }
    for i in 0..m.rows() {
        for &(j, c) in m.row(i) {
            for _ in 0..c {
                out.push_str(&format!("  n{i} -> n{j};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Fusion graph of the simple at index `pi`.
pub fn fusion_graph_dot(cat: &FusionCategory, pi: usize) -> String {
    matrix_dot("fusion", cat.labels(), cat.matrix(pi))
}

/// Tensoring with `pi` in Rep(G), restricted to dominant weights of level at
/// most `max_level`.
pub fn classical_fusion_graph(g: GroupId, pi: &Weight, max_level: i64) -> Result<(Vec<Weight>, SparseMatrix)> {
    let verts = enumerate_simples(g, max_level);
    let mut trip = Vec::new();
    for (i, nu) in verts.iter().enumerate() {
        for (mu, m) in classical_tensor(g, nu, pi)? {
            if let Some(j) = verts.iter().position(|w| *w == mu) {
                trip.push((i, j, m as i64));
            }
        }
    }
    let n = verts.len();
    Ok((verts, SparseMatrix::from_triplets(n, n, trip)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su3_truncated_graph() {
        let (v, m) = classical_fusion_graph(GroupId::A2, &Weight::new(&[1, 0]), 2).unwrap();
        assert_eq!(v.len(), 6);
        // (0,0)->(1,0), (1,0)->(2,0),(0,1), (0,1)->(1,1),(0,0), (2,0)->(1,1), (1,1)->(0,2),(1,0), (0,2)->(0,1)
        assert_eq!(m.nnz(), 9);
        let dot = matrix_dot("rep", &v.iter().map(Weight::to_string).collect::<Vec<_>>(), &m);
        assert_eq!(dot.matches("->").count(), 9);
    }
}
