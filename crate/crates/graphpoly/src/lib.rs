//! Exact computation of the edge elimination polynomial ξ(G,x,y,z) and the
//! family of graph polynomials equivalent to or specialized from it: the
//! subgraph counting polynomial H(G,v,x,y), the trivariate chromatic
//! polynomial P̃(G,x,y,z), the Potts model Z(G,x,y), the bad coloring
//! polynomial, the bivariate chromatic polynomial and the subgraph
//! component polynomial Q(G,v,x).
//!
//! Every polynomial is computable by at least two independent algorithms
//! (a deletion/contraction/extraction recurrence and a direct subset or
//! coloring enumeration), the equivalence substitutions between ξ, H and
//! P̃ are implemented in both directions, H is reconstructible from the
//! polynomial deck of a simple graph, and the degree sequence is read off
//! P̃. All arithmetic is exact over arbitrary-precision integers.

pub mod checks;
pub mod corpus;
pub mod encodings;
pub mod graph;
pub mod invariants;
pub mod poly;
pub mod transforms;

pub use graph::{EdgeRef, Graph, GraphError, GraphFormat};
pub use invariants::{InvariantError, Pivot, SizeGuard};
pub use poly::{Exponents, PolyError, Polynomial, Substitution, Var};
