use serde::{Deserialize, Serialize};

/// One line of a catalog run. Field order is part of the output format.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub id: String,
    pub dim: usize,
    pub n_lattice_points: usize,
    pub f_vector: Vec<usize>,
    pub degree: u64,
    pub ml_degree: usize,
    pub drop: i64,
    pub reflexive: bool,
    pub seeds: usize,
    pub consistent: bool,
    pub runtime_ms: u64,
}

impl CatalogRecord {
    pub const CSV_HEADER: &'static str =
        "id,dim,n_lattice_points,f_vector,degree,ml_degree,drop,reflexive,seeds,consistent,runtime_ms";

    /// CSV row with the f-vector joined by `;`.
    pub fn to_csv(&self) -> String {
        let f: Vec<String> = self.f_vector.iter().map(ToString::to_string).collect();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.id,
            self.dim,
            self.n_lattice_points,
            f.join(";"),
            self.degree,
            self.ml_degree,
            self.drop,
            self.reflexive,
            self.seeds,
            self.consistent,
            self.runtime_ms
        )
    }
}
