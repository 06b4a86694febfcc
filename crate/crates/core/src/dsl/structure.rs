use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::Rng;
use serde::{Serialize, Serializer};

use super::{IdentityStatement, Relation, Term};
use crate::error::{Error, Result};
use crate::subspace::{random_subspace, ScalarField, Subspace};

/// Where terms are interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Structure {
    /// Subspaces of ℚ(i)^n (or ℚ^n), with meet, span and orthocomplement.
    SubspaceLattice { space_dim: usize, field: ScalarField },
    /// Subsets of `{1, …, universe_size}` with the set operations.
    BooleanSetAlgebra { universe_size: usize },
}

impl Structure {
    pub fn subspace(space_dim: usize, field: ScalarField) -> Result<Self> {
        if space_dim == 0 {
            return Err(Error::InvalidStructure("space_dim must be at least 1".into()));
        }
        Ok(Structure::SubspaceLattice { space_dim, field })
    }

    pub fn boolean(universe_size: usize) -> Result<Self> {
        if universe_size == 0 {
            return Err(Error::InvalidStructure("universe_size must be at least 1".into()));
        }
        if universe_size > u32::MAX as usize {
            return Err(Error::InvalidStructure("universe too large".into()));
        }
        Ok(Structure::BooleanSetAlgebra { universe_size })
    }

    pub fn bottom(&self) -> Element {
        match *self {
            Structure::SubspaceLattice { space_dim, .. } => Element::Subspace(Subspace::zero(space_dim)),
            Structure::BooleanSetAlgebra { .. } => Element::Set(BTreeSet::new()),
        }
    }

    pub fn top(&self) -> Element {
        match *self {
            Structure::SubspaceLattice { space_dim, .. } => Element::Subspace(Subspace::full(space_dim)),
            Structure::BooleanSetAlgebra { universe_size } => Element::Set((1..=universe_size as u32).collect()),
        }
    }

    pub fn meet(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(match (self.own(a)?, self.own(b)?) {
            (Element::Subspace(s), Element::Subspace(t)) => Element::Subspace(s.meet(t)?),
            (Element::Set(s), Element::Set(t)) => Element::Set(s.intersection(t).copied().collect()),
            _ => unreachable!("own() checks the element kind"),
        })
    }

    pub fn join(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(match (self.own(a)?, self.own(b)?) {
            (Element::Subspace(s), Element::Subspace(t)) => Element::Subspace(s.join(t)?),
            (Element::Set(s), Element::Set(t)) => Element::Set(s.union(t).copied().collect()),
            _ => unreachable!("own() checks the element kind"),
        })
    }

    pub fn complement(&self, a: &Element) -> Result<Element> {
        Ok(match self.own(a)? {
            Element::Subspace(s) => Element::Subspace(s.ortho()),
            Element::Set(s) => match self.top() {
                Element::Set(all) => Element::Set(all.difference(s).copied().collect()),
                Element::Subspace(_) => unreachable!(),
            },
        })
    }

    pub fn leq(&self, a: &Element, b: &Element) -> Result<bool> {
        match (self.own(a)?, self.own(b)?) {
            (Element::Subspace(s), Element::Subspace(t)) => s.leq(t),
            (Element::Set(s), Element::Set(t)) => Ok(s.is_subset(t)),
            _ => unreachable!("own() checks the element kind"),
        }
    }

    /// Rejects elements of the wrong kind, dimension or universe.
    fn own<'a>(&self, e: &'a Element) -> Result<&'a Element> {
        match (*self, e) {
            (Structure::SubspaceLattice { space_dim, .. }, Element::Subspace(s)) if s.space_dim() == space_dim => Ok(e),
            (Structure::BooleanSetAlgebra { universe_size }, Element::Set(s))
                if s.iter().all(|&x| x >= 1 && x as usize <= universe_size) =>
            {
                Ok(e)
            }
            _ => Err(Error::ForeignElement(format!("{e} in {self}"))),
        }
    }

    /// Random element: a proper nonzero subspace (zero or full when the space
    /// is a line), or a subset including each point with probability 1/2.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Element {
        match *self {
            Structure::SubspaceLattice { space_dim: 1, .. } => {
                if rng.gen() {
                    self.top()
                } else {
                    self.bottom()
                }
            }
            Structure::SubspaceLattice { space_dim, field } => {
                Element::Subspace(random_subspace(rng, space_dim, field))
            }
            Structure::BooleanSetAlgebra { universe_size } => {
                Element::Set((1..=universe_size as u32).filter(|_| rng.gen()).collect())
            }
        }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Structure::SubspaceLattice { space_dim, field } => {
                write!(f, "subspace lattice of dim {space_dim} over {field}")
            }
            Structure::BooleanSetAlgebra { universe_size } => {
                write!(f, "boolean set algebra on {universe_size} points")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Subspace(Subspace),
    Set(BTreeSet<u32>),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Subspace(s) => write!(f, "{s}"),
            Element::Set(s) => {
                f.write_str("{")?;
                for (k, x) in s.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("}")
            }
        }
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Element::Subspace(sub) => sub.serialize(s),
            Element::Set(set) => set.serialize(s),
        }
    }
}

pub type Assignment = BTreeMap<String, Element>;

/// Interprets `t` in `s` under `assignment`.
pub fn eval_term(t: &Term, assignment: &Assignment, s: &Structure) -> Result<Element> {
    match t {
        Term::Var(v) => {
            let e = assignment.get(v).ok_or_else(|| Error::UnboundVariable(v.clone()))?;
            s.own(e).cloned()
        }
        Term::Bottom => Ok(s.bottom()),
        Term::Top => Ok(s.top()),
        Term::Not(a) => s.complement(&eval_term(a, assignment, s)?),
        Term::And(a, b) => s.meet(&eval_term(a, assignment, s)?, &eval_term(b, assignment, s)?),
        Term::Or(a, b) => s.join(&eval_term(a, assignment, s)?, &eval_term(b, assignment, s)?),
    }
}

/// Evaluates both sides; returns them with whether the relation holds.
pub fn holds(stmt: &IdentityStatement, assignment: &Assignment, s: &Structure) -> Result<(Element, Element, bool)> {
    let lhs = eval_term(&stmt.lhs, assignment, s)?;
    let rhs = eval_term(&stmt.rhs, assignment, s)?;
    let ok = match stmt.relation {
        Relation::Equal => lhs == rhs,
        Relation::Leq => s.leq(&lhs, &rhs)?,
    };
    Ok((lhs, rhs, ok))
}
