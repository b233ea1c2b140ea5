//! Fixtures shared by the benchmarks.

use intertwine::reproduce::data_dir;
use intertwine::{BranchingDiagram, SimplicialComplex};

pub fn complex(name: &str) -> SimplicialComplex {
    SimplicialComplex::load(data_dir().join("complexes").join(format!("{name}.cx"))).expect("shipped complex")
}

pub fn diagram(name: &str) -> BranchingDiagram {
    BranchingDiagram::load(data_dir().join("diagrams").join(format!("{name}.bd"))).expect("shipped diagram")
}
