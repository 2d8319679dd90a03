use std::fmt;

use num_bigint::BigUint;

/// The structural claims the verifier can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    RatioMonotone,
    Spiral,
    Unimodal,
    LogConcave,
    Lemma2,
    Lemma1,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::RatioMonotone => "ratio",
            Property::Spiral => "spiral",
            Property::Unimodal => "unimodal",
            Property::LogConcave => "logconcave",
            Property::Lemma2 => "lemma2",
            Property::Lemma1 => "lemma1",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Less,
    LessEq,
    Equal,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::LessEq => "<=",
            Relation::Equal => "=",
        }
    }
}

/// One exact integer comparison `lhs <relation> rhs`.
///
/// Ratio inequalities `p/q < s/t` are stored cross-multiplied as
/// `p*t < s*q`, so a failing comparison can be reproduced bit for bit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Comparison {
    pub label: &'static str,
    pub index: usize,
    pub lhs: BigUint,
    pub relation: Relation,
    pub rhs: BigUint,
}

impl Comparison {
    pub fn less(label: &'static str, index: usize, lhs: BigUint, rhs: BigUint) -> Self {
        Comparison {
            label,
            index,
            lhs,
            relation: Relation::Less,
            rhs,
        }
    }

    pub fn less_eq(label: &'static str, index: usize, lhs: BigUint, rhs: BigUint) -> Self {
        Comparison {
            relation: Relation::LessEq,
            ..Comparison::less(label, index, lhs, rhs)
        }
    }

    pub fn equal(label: &'static str, index: usize, lhs: BigUint, rhs: BigUint) -> Self {
        Comparison {
            relation: Relation::Equal,
            ..Comparison::less(label, index, lhs, rhs)
        }
    }

    pub fn holds(&self) -> bool {
        match self.relation {
            Relation::Less => self.lhs < self.rhs,
            Relation::LessEq => self.lhs <= self.rhs,
            Relation::Equal => self.lhs == self.rhs,
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {}: {} {} {}",
            self.label,
            self.index,
            self.lhs,
            self.relation.symbol(),
            self.rhs
        )
    }
}

/// Outcome of one property check over a sequence.
///
/// `pass` is true exactly when `first_violation` is `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: Property,
    pub pass: bool,
    pub first_violation: Option<Comparison>,
    pub comparisons: Vec<Comparison>,
    pub notes: Vec<String>,
}

impl PropertyReport {
    pub fn from_comparisons(property: Property, comparisons: Vec<Comparison>) -> Self {
        let first_violation = comparisons.iter().find(|c| !c.holds()).cloned();
        PropertyReport {
            property,
            pass: first_violation.is_none(),
            first_violation,
            comparisons,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Comparisons carrying the given label, in check order.
    pub fn labelled<'a>(&'a self, label: &'a str) -> impl Iterator<Item = &'a Comparison> + 'a {
        self.comparisons.iter().filter(move |c| c.label == label)
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "pass" } else { "FAIL" };
        write!(
            f,
            "{}: {verdict} ({} comparisons)",
            self.property,
            self.comparisons.len()
        )?;
        if let Some(v) = &self.first_violation {
            write!(f, "; first violation {v}")?;
        }
        Ok(())
    }
}
