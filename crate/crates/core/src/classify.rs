//! Cohomogeneity-one SU(3) manifolds with one-dimensional principal
//! stabilizer, classified by their pair of tubes.
//!
//! A tube is the disk bundle `SU(3) ×_K V` over a singular orbit `SU(3)/K`.
//! Two tubes glue when their principal stabilizers agree; the number of
//! equivariant diffeomorphism classes is then governed by the component
//! group of `N(H)/H` and by whether either tube can absorb the Weyl element
//! `τ` swapping the first two diagonal entries.

pub mod deltas;
pub mod descriptor;
pub mod tables;

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::cartan::{normalizer_components, normalizer_components_nonconnected, CircleClass};
use crate::cartan::{CircleSubgroup, WeylElement};
use crate::error::{Error, Result};
use crate::reps::{principal_stabilizer, PrincipalStabilizer, SliceRep};

pub use descriptor::Descriptor;
pub use tables::{emit_tables, Cell, NamedExample, Table, TableSet};

/// A tube, identified by its singular orbit. The slice representation is
/// determined by the orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TubeDescriptor {
    /// `SU(3)/SU(2) = S⁵` with slice `[Σ²]`.
    S,
    /// `SU(3)/SO(3)` with slice `[Σ²]`.
    L,
    /// `SU(3)/U(2) = ℂP²` with slice `U2 m`, `m` odd and positive.
    P(i64),
    /// `SU(3)/T²` with slice `T2 p q`; the label is stored in Weyl-canonical
    /// form, see [`canonical_weight_label`].
    F(i64, i64),
    /// `S⁵/ℤ_h`, `h > 1`.
    SQuot(i64),
    /// `L/ℤ₃`.
    LQuot3,
}

impl TubeDescriptor {
    pub fn p(m: i64) -> Result<Self> {
        match SliceRep::u2(m)? {
            SliceRep::U2 { m } => Ok(TubeDescriptor::P(m)),
            _ => unreachable!("u2 constructor returns a U2 slice"),
        }
    }

    pub fn f(p: i64, q: i64) -> Result<Self> {
        let (p, q) = canonical_weight_label(p, q)?;
        Ok(TubeDescriptor::F(p, q))
    }

    pub fn s_quot(h: i64) -> Result<Self> {
        if h < 2 {
            return Err(Error::InvalidDescriptor(format!("Squot({h}) needs h > 1")));
        }
        Ok(TubeDescriptor::SQuot(h))
    }

    pub fn slice(&self) -> SliceRep {
        match *self {
            TubeDescriptor::S | TubeDescriptor::SQuot(_) => SliceRep::Su2Standard,
            TubeDescriptor::L | TubeDescriptor::LQuot3 => SliceRep::So3Standard,
            TubeDescriptor::P(m) => SliceRep::U2 { m },
            TubeDescriptor::F(p, q) => SliceRep::Torus { p, q },
        }
    }

    /// Quotient tubes only exist over a disconnected principal stabilizer.
    pub fn is_quotient(&self) -> bool {
        matches!(self, TubeDescriptor::SQuot(_) | TubeDescriptor::LQuot3)
    }

    /// Tubes whose principal stabilizer has a nontrivial finite part.
    pub fn has_disconnected_principal(&self) -> bool {
        match *self {
            TubeDescriptor::F(p, q) => p.gcd(&q) > 1,
            _ => self.is_quotient(),
        }
    }

    pub fn principal_stabilizer(&self) -> PrincipalStabilizer {
        let root = CircleSubgroup::canonicalize(1, -1).expect("nonzero");
        match *self {
            TubeDescriptor::SQuot(h) => PrincipalStabilizer {
                circle: root,
                finite_part: h.unsigned_abs(),
            },
            TubeDescriptor::LQuot3 => PrincipalStabilizer {
                circle: root,
                finite_part: 3,
            },
            _ => principal_stabilizer(&self.slice()),
        }
    }
}

impl fmt::Display for TubeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TubeDescriptor::S => write!(f, "S"),
            TubeDescriptor::L => write!(f, "L"),
            TubeDescriptor::P(m) => write!(f, "P({m})"),
            TubeDescriptor::F(p, q) => write!(f, "F({p},{q})"),
            TubeDescriptor::SQuot(h) => write!(f, "Squot({h})"),
            TubeDescriptor::LQuot3 => write!(f, "Lquot3"),
        }
    }
}

/// Weyl-canonical form of a T² weight `(p, q)`: among the twelve images of
/// the weight under permutations and sign, the dominant one (`p, q ≥ 0`)
/// with `p ≤ q`.
pub fn canonical_weight_label(p: i64, q: i64) -> Result<(i64, i64)> {
    if p == 0 && q == 0 {
        return Err(Error::ZeroPair);
    }
    let triple = [p + 2 * q, p - q, -2 * p - q];
    let label = WeylElement::with_signs()
        .map(|w| w.apply(&triple))
        .map(|t| ((t[0] + 2 * t[1]) / 3, (t[0] - t[1]) / 3))
        .filter(|&(a, b)| a >= 0 && b >= 0 && a <= b)
        .min()
        .expect("every weight has a dominant image");
    Ok(label)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GluingReason {
    NoMatch,
    UniqueByConnectedNormalizer,
    TauAbsorbed,
    TwoClasses,
}

impl fmt::Display for GluingReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GluingCount {
    pub count: u8,
    pub reason: GluingReason,
}

impl GluingCount {
    const NO_MATCH: GluingCount = GluingCount {
        count: 0,
        reason: GluingReason::NoMatch,
    };
}

/// Whether the gluing twisted by `τ` extends over the tube.
///
/// `τT²` meets `SU(2) ⊂ N(SU(2))`, `SO(3) ⊂ N(SO(3))` and lies in `N(T²)`, so
/// every tube except `P(1)` absorbs it. Only meaningful when the normalizer of
/// the principal stabilizer is disconnected.
pub fn tube_absorbs_tau(tube: &TubeDescriptor) -> Result<bool> {
    let h = tube.principal_stabilizer();
    if normalizer_components_nonconnected(&h.circle, h.finite_part) != 2 {
        return Err(Error::NotRootType(format!(
            "{tube} has principal stabilizer {h}, whose normalizer is connected"
        )));
    }
    Ok(!matches!(tube, TubeDescriptor::P(1)))
}

pub fn count_diffeo_classes(t1: &TubeDescriptor, t2: &TubeDescriptor) -> Result<GluingCount> {
    let (h1, h2) = (t1.principal_stabilizer(), t2.principal_stabilizer());
    if t1.has_disconnected_principal() != t2.has_disconnected_principal() {
        return Err(Error::IncompatibleRegime(format!(
            "{t1} has principal stabilizer {h1} but {t2} has {h2}"
        )));
    }
    // Two quotient tubes would force both singular stabilizers to be
    // disconnected with a connected principal part, which cannot occur.
    if t1.is_quotient() && t2.is_quotient() {
        return Ok(GluingCount::NO_MATCH);
    }
    if h1 != h2 {
        return Ok(GluingCount::NO_MATCH);
    }
    if normalizer_components_nonconnected(&h1.circle, h1.finite_part) == 1 {
        return Ok(GluingCount {
            count: 1,
            reason: GluingReason::UniqueByConnectedNormalizer,
        });
    }
    if tube_absorbs_tau(t1)? || tube_absorbs_tau(t2)? {
        return Ok(GluingCount {
            count: 1,
            reason: GluingReason::TauAbsorbed,
        });
    }
    Ok(GluingCount {
        count: 2,
        reason: GluingReason::TwoClasses,
    })
}

/// Every tube with parameters up to `bound`, in a fixed order.
pub fn enumerate_tubes(bound: i64) -> Vec<TubeDescriptor> {
    let mut tubes = vec![TubeDescriptor::S, TubeDescriptor::L];
    tubes.extend((1..=bound).step_by(2).map(TubeDescriptor::P));
    for q in 1..=bound {
        for p in 0..=q {
            tubes.push(TubeDescriptor::F(p, q));
        }
    }
    tubes.extend((2..=bound).map(TubeDescriptor::SQuot));
    if bound >= 3 {
        tubes.push(TubeDescriptor::LQuot3);
    }
    tubes
}

pub fn admissible_partners(
    tube: &TubeDescriptor,
    bound: i64,
) -> Vec<(TubeDescriptor, GluingCount)> {
    enumerate_tubes(bound)
        .into_iter()
        .filter_map(|other| match count_diffeo_classes(tube, &other) {
            Ok(c) if c.count > 0 => Some((other, c)),
            _ => None,
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CircleBaseResult {
    pub trivial_bundle: bool,
    pub nontrivial_bundle_exists: bool,
}

/// Principal `SU(3)/U_{k,l}`-bundles over a circle: the product always
/// exists, and a twisted one exists iff `N(U_{k,l})/U_{k,l}` is disconnected.
pub fn classify_circle_base(k: i64, l: i64) -> Result<CircleBaseResult> {
    let circle = CircleSubgroup::canonicalize(k, l)?;
    Ok(CircleBaseResult {
        trivial_bundle: true,
        nontrivial_bundle_exists: circle.class() == CircleClass::RootType,
    })
}

/// Agrees with [`classify_circle_base`] but goes through the normalizer count.
pub fn circle_base_from_normalizer(k: i64, l: i64) -> Result<CircleBaseResult> {
    let circle = CircleSubgroup::canonicalize(k, l)?;
    Ok(CircleBaseResult {
        trivial_bundle: true,
        nontrivial_bundle_exists: normalizer_components(&circle).component_count == 2,
    })
}

/// Known manifolds realised by particular tube pairs (in either order).
pub fn named_example(t1: &TubeDescriptor, t2: &TubeDescriptor) -> Option<&'static str> {
    use TubeDescriptor::*;
    let lookup = |a: &TubeDescriptor, b: &TubeDescriptor| match (a, b) {
        (P(1), P(1)) => Some("Gr2(C4)"),
        (P(1), S) => Some("HP2"),
        (P(1), L) => Some("G2/SO(4)"),
        (F(1, 1), P(3)) => Some("CP2 x CP2"),
        (L, S) => Some("SU(3)"),
        _ => None,
    };
    lookup(t1, t2).or_else(|| lookup(t2, t1))
}
