use std::fmt;
use std::sync::Arc;

use super::monomial::{MonomialOrder, TermOrder, MAX_VARS};
use super::PolyError;
use crate::ff::PrimeField;

/// A polynomial ring `GF(p)[x_0..x_{n-1}]` with a monomial order and a
/// grading (weight per variable, normally all 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    names: Vec<String>,
    order: MonomialOrder,
    grading: Vec<u32>,
}

pub type Ring = Arc<PolyRing>;

impl PolyRing {
    /// Variables named `x0, x1, ...`.
    pub fn new(field: PrimeField, nvars: usize, order: MonomialOrder) -> Result<Ring, PolyError> {
        let names = (0..nvars).map(|i| format!("x{i}")).collect();
        Self::with_names(field, names, order)
    }

    pub fn with_names(field: PrimeField, names: Vec<String>, order: MonomialOrder) -> Result<Ring, PolyError> {
        let n = names.len();
        Self::build(field, names, order, vec![1; n])
    }

    /// A ring whose grading gives variable `i` degree `grading[i]`.
    pub fn build(
        field: PrimeField,
        names: Vec<String>,
        order: MonomialOrder,
        grading: Vec<u32>,
    ) -> Result<Ring, PolyError> {
        if names.len() > MAX_VARS {
            return Err(PolyError::TooManyVariables(names.len()));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(PolyError::DuplicateVariable(a.clone()));
            }
        }
        if grading.len() != names.len() {
            return Err(PolyError::DimensionMismatch(grading.len(), names.len()));
        }
        if let MonomialOrder::Weighted(w) = &order {
            if w.len() != names.len() {
                return Err(PolyError::DimensionMismatch(w.len(), names.len()));
            }
        }
        if let MonomialOrder::Elim { k, .. } = &order {
            if *k > names.len() {
                return Err(PolyError::DimensionMismatch(*k, names.len()));
            }
        }
        Ok(Arc::new(PolyRing { field, names, order, grading }))
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn term_order(&self) -> TermOrder {
        TermOrder::ring(self.order.clone())
    }

    pub fn grading(&self) -> &[u32] {
        &self.grading
    }

    pub fn is_standard_graded(&self) -> bool {
        self.grading.iter().all(|&w| w == 1)
    }

    /// The same variables with another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring, PolyError> {
        Self::build(self.field, self.names.clone(), order, self.grading.clone())
    }

    /// The same variables over another prime field.
    pub fn with_field(&self, field: PrimeField) -> Ring {
        Arc::new(PolyRing { field, ..self.clone() })
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring p={} vars={} order={}", self.field.p(), self.nvars(), self.order.name())
    }
}

/// Whether two ring handles denote the same ring.
pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
