//! Christoffel and Sturmian words under ordered partitions of their factors.
//!
//! * [`words`]: the word algebra over `{a < b}`.
//! * [`christoffel`]: Christoffel words, circular factors, the conjugate matrix.
//! * [`partitioned`]: compositions, height profiles, varieties and their
//!   multiplicities (brute force and closed form).
//! * [`sturmian`]: mechanical words, the rotation coding of factors and
//!   variety frequencies, over any [`Scalar`] backend.
//!
//! ```
//! use partfac::{lower_christoffel, make_params, multiplicities_formula, partitioned_frequencies, SlopeValue};
//!
//! # fn main() -> partfac::Result<()> {
//! assert_eq!(lower_christoffel(5, 2)?.as_str(), "aaabaab");
//! let table = multiplicities_formula(&make_params(5, 2)?, &"1,2,1".parse()?)?;
//! assert_eq!(table.multiplicities(), [1, 4, 1, 1]);
//!
//! let theta: SlopeValue = "log2_3_2".parse()?;
//! let freqs = partitioned_frequencies(&theta, &"1,3".parse()?)?;
//! let forms: Vec<String> = freqs.entries.iter().map(|e| e.frequency_form.to_string()).collect();
//! assert_eq!(forms, ["1 - θ", "2 - 3θ", "-2 + 4θ"]);
//! # Ok(())
//! # }
//! ```

pub mod christoffel;
pub mod error;
pub mod partitioned;
pub mod scalar;
pub mod slope;
pub mod sturmian;
pub mod words;

pub use christoffel::{
    bwt_matrix, circular_factors, is_christoffel_conjugate, lower_christoffel, make_params,
    upper_christoffel, verify_isc, BwtMatrix, ChristoffelParams, FactorMultiset,
};
pub use error::{Error, Result};
pub use partitioned::{
    classify_varieties, congruence_residues, find_variety_anomaly, height_profile,
    multiplicities_formula, variety_count, variety_rows, Composition, HeightProfile,
    PartitionedFactor, VarietyEntry, VarietyTable,
};
pub use scalar::{Ball, Scalar};
pub use slope::{NamedConstant, SlopeValue};
pub use sturmian::{
    empirical_frequencies, empirical_frequencies_with, factor_frequencies, factor_interval_table,
    factor_interval_table_in, factor_interval_table_with, mechanical_prefix,
    mechanical_prefix_with, partitioned_frequencies, partitioned_frequencies_in,
    partitioned_frequencies_with, EmpiricalEntry, EmpiricalFrequencies, FactorInterval,
    FactorIntervalTable, FrequencyTable, OrbitPoint, PrecisionCap, RotationEncoding, ThetaForm,
    VarietyFrequency,
};
pub use words::{
    conjugate, height, is_balanced1_circular, is_primitive, lex_compare, occurrences, Letter, Word,
};

/// Exact rationals, the arbitrary-precision backend.
pub type Rational = num_rational::BigRational;

/// Factor arcs reported in double precision.
pub type FactorTable = FactorIntervalTable<f64>;
/// Factor arcs in exact rational arithmetic.
pub type ExactFactorTable = FactorIntervalTable<Rational>;
/// Variety frequencies reported in double precision.
pub type Frequencies = FrequencyTable<f64>;
/// Variety frequencies in exact rational arithmetic.
pub type ExactFrequencies = FrequencyTable<Rational>;
/// A certified double.
pub type Ball64 = Ball<f64>;
/// A certified exact rational enclosure.
pub type RationalBall = Ball<Rational>;
