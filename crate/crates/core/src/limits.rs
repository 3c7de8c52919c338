use crate::error::{Error, Result};

/// Environment variable that overrides both enumeration caps.
pub const MAX_N_ENV: &str = "WIDTHK_MAX_N";

/// Upper bounds on `n` for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Cap for univariate brute-force distributions and class listings.
    pub univariate: usize,
    /// Cap for the multivariate descent polynomial.
    pub multivariate: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            univariate: 10,
            multivariate: 8,
        }
    }
}

impl Limits {
    /// Defaults, with both caps replaced by `WIDTHK_MAX_N` when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_N_ENV) {
            Ok(raw) => {
                let cap: usize = raw.trim().parse().map_err(|_| {
                    Error::InvalidInput(format!("{MAX_N_ENV} must be a nonnegative integer, got {raw:?}"))
                })?;
                Ok(Limits {
                    univariate: cap,
                    multivariate: cap,
                })
            }
            Err(_) => Ok(Limits::default()),
        }
    }

    pub fn check_univariate(&self, n: usize) -> Result<()> {
        if n > self.univariate {
            return Err(Error::CapExceeded {
                n,
                cap: self.univariate,
            });
        }
        Ok(())
    }

    pub fn check_multivariate(&self, n: usize) -> Result<()> {
        if n > self.multivariate {
            return Err(Error::CapExceeded {
                n,
                cap: self.multivariate,
            });
        }
        Ok(())
    }
}
