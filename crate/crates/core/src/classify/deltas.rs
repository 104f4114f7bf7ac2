//! Cell values of the classification tables written directly as Kronecker
//! delta expressions in the tube parameters. Used as an oracle for the rule
//! engine in [`super::count_diffeo_classes`].

use super::{canonical_weight_label, TubeDescriptor};

fn delta(a: i64, b: i64) -> u8 {
    u8::from(a == b)
}

fn label(p: i64, q: i64) -> (i64, i64) {
    canonical_weight_label(p, q).expect("table labels are nonzero")
}

fn flag_matches(row: (i64, i64), col: (i64, i64)) -> u8 {
    let (row, col) = (label(row.0, row.1), label(col.0, col.1));
    delta(row.0, col.0) * delta(row.1, col.1)
}

/// Singular stabilizers SU(2), U(2), SO(3) on both sides.
pub fn connected_cell(row: &TubeDescriptor, col: &TubeDescriptor) -> Option<u8> {
    use TubeDescriptor::*;
    Some(match (row, col) {
        (S | L, S | L) => 1,
        (S | L, P(l)) => delta(*l, 1),
        (P(m), S | L) => delta(*m, 1),
        (P(m), P(l)) => delta(*l, *m) + delta(*l, 1) * delta(*m, 1),
        _ => return None,
    })
}

/// A flag tube `F(p, q)` with `gcd(p, q) = 1` against any connected tube.
pub fn flag_cell(row: &TubeDescriptor, col: &TubeDescriptor) -> Option<u8> {
    use TubeDescriptor::*;
    let F(p, q) = *row else { return None };
    Some(match *col {
        F(l, m) => flag_matches((p, q), (l, m)),
        P(l) => flag_matches((p, q), ((l - 1) / 2, 1)),
        L | S => flag_matches((p, q), (0, 1)),
        _ => return None,
    })
}

/// A flag tube with `gcd(p, q) ≠ 1` against the tubes with disconnected
/// principal stabilizer.
pub fn nonconnected_cell(row: &TubeDescriptor, col: &TubeDescriptor) -> Option<u8> {
    use TubeDescriptor::*;
    let F(p, q) = *row else { return None };
    Some(match *col {
        SQuot(h) => flag_matches((p, q), (0, h)),
        LQuot3 => flag_matches((p, q), (0, 3)),
        F(l, m) => flag_matches((p, q), (l, m)),
        _ => return None,
    })
}
