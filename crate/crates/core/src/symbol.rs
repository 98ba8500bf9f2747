//! Formal symbols with a fixed global order.
//!
//! Canonical forms everywhere in the crate rely on one total order of
//! symbols: `lambda < n < mu < alpha < t < x1 < x2 < …`. The derived `Ord`
//! on the enum realizes exactly this order.

use std::fmt;

/// A formal symbol of the engine.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Symbol {
    /// Spectral parameter λ.
    Lambda,
    /// Ambient dimension symbol n.
    Dim,
    /// Kernel exponent μ.
    Mu,
    /// Gegenbauer parameter α.
    Alpha,
    /// Auxiliary polynomial variable t (singular-vector polynomials).
    T,
    /// Coordinate variables x1, x2, … (1-based).
    X(u16),
}

impl Symbol {
    pub fn name(&self) -> String {
        match self {
            Symbol::Lambda => "lambda".into(),
            Symbol::Dim => "n".into(),
            Symbol::Mu => "mu".into(),
            Symbol::Alpha => "alpha".into(),
            Symbol::T => "t".into(),
            Symbol::X(i) => format!("x{i}"),
        }
    }

    pub fn latex(&self) -> String {
        match self {
            Symbol::Lambda => "\\lambda".into(),
            Symbol::Dim => "n".into(),
            Symbol::Mu => "\\mu".into(),
            Symbol::Alpha => "\\alpha".into(),
            Symbol::T => "t".into(),
            Symbol::X(i) => format!("x_{{{i}}}"),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn global_symbol_order() {
        assert!(Symbol::Lambda < Symbol::Dim);
        assert!(Symbol::Dim < Symbol::Mu);
        assert!(Symbol::Mu < Symbol::Alpha);
        assert!(Symbol::Alpha < Symbol::T);
        assert!(Symbol::T < Symbol::X(1));
        assert!(Symbol::X(1) < Symbol::X(2));
    }
}
