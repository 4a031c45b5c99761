//! Exact classification of horizontal SL(2)s and R-split polarized mixed Hodge
//! structures on Mumford-Tate domains of simple Lie groups.
//!
//! A domain is given by a Cartan type and a grading element `E = sum_{i in I} S^i`.
//! Everything is computed combinatorially from the root system in exact rationals.

pub mod config;
pub mod error;
pub mod nilpotent_orbits;
pub mod rational;
pub mod real_forms;
pub mod rep_weights;
pub mod root_system;
pub mod sl2_classifier;

pub use config::Limits;
pub use error::{Error, Result};
pub use nilpotent_orbits::{
    enumerate_char_vectors, even_jm_classes, is_even_jm, jm_filtration_dims, jm_parabolic_classes,
    partition_char_vector, CharVector, JMIndexSet, Partition,
};
pub use rational::Q;
pub use real_forms::{
    compact_characteristic_vector, compact_simple_system, component_real_form, identify_real_form,
    real_form_name, split_roots, CompactCharVector, CompactSimpleSystem, RealFormLabel, RootParity,
};
pub use rep_weights::{
    adjoint_weight_system, hodge_numbers, natural_weight, weight_system, weyl_dimension,
    HighestWeight, HodgeNumbers, Weight, WeightSystem,
};
pub use root_system::{
    enumerate_levis, enumerate_parabolic_subgroup, enumerate_weyl, fmt_root, identify_type,
    root_set_orbit, subsystem_base, CartanData, CartanType, Component, Family, GradingElement,
    LeviSubsystem, RootSet, RootSystem, WeylGroup,
};
pub use sl2_classifier::{
    admits_hodge_tate, central_split, class_for_levi, classify, classify_in, codim1_count,
    deligne_diamond, is_distinguished, levi_real_form_labels, orbit_codim, period_domain_ht_check,
    ClassifyOptions, DeligneDiamond, MTDomainSpec, SL2Class,
};
