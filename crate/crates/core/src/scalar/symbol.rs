use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::ScalarError;

/// A formal symbol. Symbols compare by name, which fixes the monomial order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Symbol {
    fn from(name: &str) -> Self {
        Symbol::new(name)
    }
}

/// What a symbol stands for. Used to pick sensible ranges for numeric sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymbolRole {
    /// The deformation scale `k`, mass units, positive.
    Deformation,
    /// A grouplike exponential `e^{-m/k}`, dimensionless, in `(0, 1]`.
    Exponential,
    /// A reference or physical mass, positive.
    Mass,
    /// Anything else.
    Generic,
}

impl SymbolRole {
    /// Closed sampling range used by randomized numeric checks.
    pub fn sample_range(self) -> (f64, f64) {
        match self {
            SymbolRole::Deformation => (0.5, 4.0),
            SymbolRole::Exponential => (0.05, 1.0),
            SymbolRole::Mass => (0.05, 2.0),
            SymbolRole::Generic => (-2.0, 2.0),
        }
    }
}

/// Named symbols with role tags; names are unique.
#[derive(Clone, Debug, Default)]
pub struct SymbolTable {
    entries: BTreeMap<Symbol, SymbolRole>,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The symbols every exact check in this crate uses.
    pub fn standard() -> Self {
        let mut table = Self::new();
        for (sym, role) in [
            (k(), SymbolRole::Deformation),
            (lambda(), SymbolRole::Exponential),
            (lambda_p(), SymbolRole::Exponential),
            (mu_ref(), SymbolRole::Mass),
            (lambda_mu(), SymbolRole::Exponential),
            (algebra_mass(), SymbolRole::Mass),
            (algebra_mass_p(), SymbolRole::Mass),
        ] {
            table.insert(sym, role).expect("standard symbols are distinct");
        }
        table
    }

    pub fn insert(&mut self, symbol: Symbol, role: SymbolRole) -> Result<(), ScalarError> {
        if self.entries.contains_key(&symbol) {
            return Err(ScalarError::DuplicateSymbol(symbol.name().to_owned()));
        }
        self.entries.insert(symbol, role);
        Ok(())
    }

    pub fn role(&self, symbol: &Symbol) -> Option<SymbolRole> {
        self.entries.get(symbol).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Symbol, SymbolRole)> {
        self.entries.iter().map(|(s, r)| (s, *r))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Deformation parameter `k` (mass units).
pub fn k() -> Symbol {
    Symbol::new("k")
}

/// `e^{-m/k}` for particle 1.
pub fn lambda() -> Symbol {
    Symbol::new("lambda")
}

/// `e^{-m'/k}` for particle 2.
pub fn lambda_p() -> Symbol {
    Symbol::new("lambdaP")
}

/// Reference mass unit used by the unnormalized central charge.
pub fn mu_ref() -> Symbol {
    Symbol::new("muRef")
}

/// `e^{-muRef/k}`.
pub fn lambda_mu() -> Symbol {
    Symbol::new("lambdaMu")
}

/// Algebra mass (eigenvalue of `M`) of particle 1.
pub fn algebra_mass() -> Symbol {
    Symbol::new("m")
}

/// Algebra mass of particle 2.
pub fn algebra_mass_p() -> Symbol {
    Symbol::new("mP")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_names_rejected() {
        let mut t = SymbolTable::standard();
        assert!(matches!(
            t.insert(k(), SymbolRole::Generic),
            Err(ScalarError::DuplicateSymbol(_))
        ));
        assert_eq!(t.role(&lambda()), Some(SymbolRole::Exponential));
    }

    #[test]
    fn exponential_range_inside_unit_interval() {
        let (lo, hi) = SymbolRole::Exponential.sample_range();
        assert!(lo > 0.0 && hi <= 1.0);
    }
}
