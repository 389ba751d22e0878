//! Numerical ranges of weighted cyclic shift matrices.

pub mod boundary;
pub mod charpoly;
pub mod error;
pub mod extremal;
pub mod inclusion;
pub mod linalg;
pub mod permsearch;
pub mod spectra;
pub mod trials;
pub mod weights;

pub use charpoly::{build_family, imag_part_spectrum, CharPolyFamily, ImagSpectrum};
pub use boundary::{export_curve, sample_boundary, BoundaryCurve, ExportFormat};
pub use error::{Error, Result};
pub use extremal::{
    find_double_eigenvalue, min_frobenius_zero_product, min_path_weights, regular_ngon_check, DoubleEigenResult,
    ExtremalReport,
};
pub use inclusion::{
    includes, includes_closed_form, includes_general, includes_polynomial, InclusionOptions, InclusionVerdict, Method,
    VerdictKind,
};
pub use permsearch::{
    cyclic_sum, enumerate_classes, family_analysis_n6, find_extreme, verify_conjecture1, ClassTable,
    ConjectureReport, Direction, ExtremeOutcome, ExtremeReport, FamilyAnalysis, SearchMethod,
};
pub use spectra::{dense_oracle, largest_root, numerical_radius, support_max, SupportProfile};
pub use weights::{
    canonical_dihedral, from_r, normalize_complex, r_decomposition, DihedralClass, PhaseReduction,
    RDecomposition, WeightVector,
};
