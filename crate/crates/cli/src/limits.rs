//! Scale limits for the verification harness and the series commands.

use std::fmt;

pub const DEFAULT_MAX_VARS: usize = 12;
pub const DEFAULT_MAX_N: u64 = 8;

pub const MAX_VARS_ENV: &str = "VFILT_MAX_VARS";
pub const MAX_N_ENV: &str = "VFILT_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_vars: usize,
    pub max_n: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_vars: DEFAULT_MAX_VARS,
            max_n: DEFAULT_MAX_N,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LimitError {
    #[error("{what} needs {vars} variables, above the limit of {limit} (raise it with --max-vars or {MAX_VARS_ENV})")]
    Vars {
        what: String,
        vars: usize,
        limit: usize,
    },
    #[error("{what} asks for n = {n}, above the limit of {limit} (raise it with {MAX_N_ENV})")]
    N { what: String, n: u64, limit: u64 },
    #[error("{var} = {value:?} is not a positive integer")]
    Env { var: &'static str, value: String },
}

fn read_env<T: std::str::FromStr + PartialOrd + From<u8>>(
    var: &'static str,
) -> Result<Option<T>, LimitError> {
    match std::env::var(var) {
        Ok(value) => match value.trim().parse::<T>() {
            Ok(v) if v >= T::from(1) => Ok(Some(v)),
            _ => Err(LimitError::Env { var, value }),
        },
        Err(_) => Ok(None),
    }
}

impl Limits {
    /// Defaults overridden by `VFILT_MAX_VARS` and `VFILT_MAX_N`.
    pub fn from_env() -> Result<Self, LimitError> {
        let mut limits = Self::default();
        if let Some(v) = read_env::<u16>(MAX_VARS_ENV)? {
            limits.max_vars = usize::from(v);
        }
        if let Some(n) = read_env::<u64>(MAX_N_ENV)? {
            limits.max_n = n;
        }
        Ok(limits)
    }

    pub fn check_vars(&self, what: impl fmt::Display, vars: usize) -> Result<(), LimitError> {
        if vars > self.max_vars {
            return Err(LimitError::Vars {
                what: what.to_string(),
                vars,
                limit: self.max_vars,
            });
        }
        Ok(())
    }

    pub fn check_n(&self, what: impl fmt::Display, n: u64) -> Result<(), LimitError> {
        if n > self.max_n {
            return Err(LimitError::N {
                what: what.to_string(),
                n,
                limit: self.max_n,
            });
        }
        Ok(())
    }
}
