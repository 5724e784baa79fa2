//! The encode, propagate, decode channel: configuration, `ρ_CB` assembly and sweeps.

pub mod assemble;
pub mod config;
pub mod sweep;

pub use assemble::{
    all_signs, assemble_rho, merged_vacuum_factor, assemble_rho_from_strings, assemble_rho_merged, build_exponent_string,
    channel_amplitudes, coherent_info_of, gram, result_from_gram, rho_cb, truncated_pair_grams,
    wick_factor, ChannelAmplitudes, ChannelResult, Fault, Gram, SlotKind, SlotSigns, SLOT_KINDS,
};
pub use config::{BobSpec, ChannelConfig, GramRoute, DEFAULT_DELTA_OVER_SIGMA, DEFAULT_EPS_OVER_SIGMA};
pub use sweep::{broadcast_sweep, capacity_sweep, default_r0_grid, linear_grid, log_grid, BroadcastRow, CapacityRow};
