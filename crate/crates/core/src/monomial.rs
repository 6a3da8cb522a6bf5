//! Monomials over a fixed, named list of variables.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The ordered variable list of a polynomial ring `K[x_1, ..., x_m]`.
///
/// The coefficient field never matters for monomial data, so it is not
/// recorded. Contexts are shared behind an [`Arc`]; two contexts are equal
/// when their variable lists are equal.
#[derive(Debug, Clone)]
pub struct RingContext {
    variables: Vec<String>,
    index: HashMap<String, usize>,
}

impl RingContext {
    pub fn new<I, S>(variables: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(variables.len());
        for (i, name) in variables.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidRing(format!("duplicate variable {name:?}")));
            }
        }
        Ok(Arc::new(Self { variables, index }))
    }

    /// Variables `x1, ..., xm`.
    pub fn numbered(prefix: &str, m: usize) -> Arc<Self> {
        Self::new((1..=m).map(|i| format!("{prefix}{i}"))).expect("generated names are distinct")
    }

    pub fn dim(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn name(&self, i: usize) -> &str {
        &self.variables[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Renders a monomial as `x^2*y^4`, or `1` for the identity.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.variables[i].clone()),
                _ => parts.push(format!("{}^{}", self.variables[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.variables == other.variables
    }
}

impl Eq for RingContext {}

impl std::hash::Hash for RingContext {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.variables.hash(state);
    }
}

pub(crate) fn same_ring(a: &Arc<RingContext>, b: &Arc<RingContext>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A monomial `x^a`, stored as its exponent vector.
///
/// The derived ordering is lexicographic on the exponent vector;
/// [`crate::MonomialIdeal`] lists its generators in descending order of it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents.into_boxed_slice())
    }

    pub fn one(dim: usize) -> Self {
        Self(vec![0; dim].into_boxed_slice())
    }

    pub fn var(i: usize, dim: usize) -> Self {
        let mut e = vec![0; dim];
        e[i] = 1;
        Self(e.into_boxed_slice())
    }

    /// `x_i^a`.
    pub fn pure_power(i: usize, a: u32, dim: usize) -> Self {
        let mut e = vec![0; dim];
        e[i] = a;
        Self(e.into_boxed_slice())
    }

    /// Product of the variables indexed by `support`.
    pub fn squarefree(support: &[usize], dim: usize) -> Self {
        let mut e = vec![0; dim];
        for &i in support {
            e[i] = 1;
        }
        Self(e.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// # Panics
    /// On exponent overflow (an exponent above `u32::MAX`).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.dim(), other.dim());
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|a| a.checked_mul(n).expect("monomial exponent overflow"))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// `self / gcd(self, other)`, the generator of `((self) : other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Replaces every positive exponent by 1.
    pub fn radical(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }

    /// Sets the exponents of the listed variables to zero.
    pub fn erase(&self, vars: &[usize]) -> Monomial {
        let mut e = self.0.clone();
        for &i in vars {
            e[i] = 0;
        }
        Monomial(e)
    }

    /// Sorting key used when "smallest" means lowest degree first, then
    /// lexicographic.
    pub(crate) fn degree_lex_key(&self) -> (u64, &[u32]) {
        (self.degree(), &self.0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for Monomial {
    fn from(v: Vec<u32>) -> Self {
        Monomial::new(v)
    }
}
