use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside an operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Input inside the domain but beyond a configured enumeration bound.
    #[error("resource bound exceeded: {what} = {requested} exceeds the bound {bound}")]
    Resource { what: &'static str, requested: usize, bound: usize },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Enumeration bounds. Every exhaustive operation checks its input against
/// one of these before doing any work; nothing is silently truncated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Half-length of Dyck paths / rank of the Catalan matroid.
    pub max_n: usize,
    /// Number of subsets a `2^m` sweep may visit.
    pub max_subsets: u64,
    /// Largest `s_n` accepted when enumerating a shifted matroid.
    pub max_shift_top: usize,
    /// Ground size for the permutation search in isomorphism testing.
    pub max_iso_ground: usize,
    /// Ground size for uniform-minor search.
    pub max_minor_ground: usize,
    /// Number of cells in a Young diagram for tableau enumeration.
    pub max_cells: usize,
    /// Number of elements of a poset for linear-extension enumeration.
    pub max_poset: usize,
    /// Number of terms of the generic integer sequence.
    pub max_generic_terms: usize,
    /// Rows and columns for exact vector-matroid computation.
    pub max_matrix_rows: usize,
    pub max_matrix_cols: usize,
    /// Truncation order of power series in `x`.
    pub max_series_order: usize,
}

pub const MAX_N_ENV: &str = "MATROID_FORGE_MAX_N";

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 14,
            max_subsets: 1 << 16,
            max_shift_top: 16,
            max_iso_ground: 10,
            max_minor_ground: 12,
            max_cells: 10,
            max_poset: 9,
            max_generic_terms: 28,
            max_matrix_rows: 6,
            max_matrix_cols: 12,
            max_series_order: 20,
        }
    }
}

impl Limits {
    /// Defaults, with `max_n` overridden by `MATROID_FORGE_MAX_N` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_N_ENV) {
            limits.max_n = raw
                .trim()
                .parse()
                .map_err(|_| Error::domain(format!("{MAX_N_ENV}={raw:?} is not a non-negative integer")))?;
            // 2n bits must fit in an ElementSet.
            if limits.max_n > 32 {
                return Err(Error::domain(format!("{MAX_N_ENV} must be at most 32")));
            }
        }
        Ok(limits)
    }

    pub(crate) fn check(what: &'static str, requested: usize, bound: usize) -> Result<()> {
        if requested > bound {
            Err(Error::Resource { what, requested, bound })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_sweep(&self, ground: usize) -> Result<()> {
        let requested = if ground >= 63 { u64::MAX } else { 1u64 << ground };
        if ground >= 63 || requested > self.max_subsets {
            return Err(Error::Resource {
                what: "2^ground subsets",
                requested: usize::try_from(requested).unwrap_or(usize::MAX),
                bound: usize::try_from(self.max_subsets).unwrap_or(usize::MAX),
            });
        }
        Ok(())
    }
}
