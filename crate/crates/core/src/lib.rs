//! Exact evaluation of the determinant
//!
//! ```text
//! D(m, n, u, k) = det( C(m - max{u, (k-1) j}, 1 - i + j) ),  i, j = 1..n-1
//! ```
//!
//! which counts lattice paths from `(u+1, 1)` to `(m, n)` staying weakly below
//! `y = (x-1)/(k-1) + 1`, and specializes to ballot, Catalan and Fuss-Catalan
//! numbers. Four independent routes compute it: fraction-free elimination
//! ([`detkernel`]), an alternating binomial sum ([`closedform`]), a grid
//! recurrence and brute-force enumeration ([`latticepath`]). [`verify`]
//! cross-checks them.

// Inequalities are written in the shape of the boundary lines they encode.
#![allow(clippy::int_plus_one)]

pub mod closedform;
pub mod detkernel;
pub mod error;
pub mod exact;
pub mod families;
pub mod latticepath;
pub mod verify;

pub use closedform::{closed_form_d, count_above_line, count_below_line, AboveLineQuery, BelowLineQuery};
pub use detkernel::{
    build_matrix, build_row_reduced, check_bottom_row, check_column_decomposition, determinant, evaluate_d,
    BinomialMatrix, MatrixVariant, QueryParams,
};
pub use error::{Error, Result};
pub use exact::{binomial, pascal_check, BigInt, BigRational};
pub use families::{ballot, catalan, fuss_catalan, generalized_ballot, Family};
pub use latticepath::{
    count_paths_dp, enumerate_paths, path_satisfies, reflect_path, shift_path, BoundaryLine, DpTable, LatticePath,
    PathQuery, Point, Step,
};
pub use verify::{run_sweep, CountResult, Evaluators, Method, SweepConfig, SweepReport};
