//! Arrangements of orthogonal circles: predicates, intersection graphs,
//! arc subdivisions, explicit constructions and claim audits.

pub mod analysis;
pub mod arrangement;
pub mod cells;
pub mod generators;
pub mod geom;
pub mod graph;

pub use analysis::{audit, select_red, AuditReport, Classification};
pub use arrangement::{
    depth_labeling, is_nonnested, validate, Arrangement, ArrangementError, DepthLabeling, ValidationMode,
    ValidationReport,
};
pub use cells::{build_subdivision, face_census, ArcSubdivision, CellsError, FaceCensus};
pub use geom::{Circle, CircleId, GeomError, PairRelation, Point, Tolerance};
pub use graph::{build_graph, GraphError, IntersectionGraph};
