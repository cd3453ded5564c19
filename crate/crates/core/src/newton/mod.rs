//! Newton polyhedra, filtration orders and non-degeneracy.

pub mod convenient;
pub mod dense;
pub mod groebner;
pub mod lattice;
pub mod nondegenerate;
pub mod order;
pub mod polyhedron;
pub mod swh;

pub use convenient::{convenientize, Convenientization};
pub use nondegenerate::{is_nondegenerate, Verdict};
pub use order::{gamma, order_of, FiltrationOrder};
pub use polyhedron::{hull_facets, minimal_points, support, Face, LinearForm, NewtonPolyhedron, Positivity};
pub use swh::{swh_structure, SwhStructure};
