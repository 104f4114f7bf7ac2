//! Exact calculus on the diagonal Cartan subalgebra of su(3): the A₂ root
//! system, the Weyl group S₃, circle subgroups `U_{k,l}` and their
//! normalizers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::liealg::{real_coords, AlgebraElement, GroupMatrix, Tolerances};
use crate::scalar::Real;

/// A Cartan element `a·u + b·u′`, i.e. the diagonal `diag(ia, i(b−a), −ib)`.
///
/// The Gram matrix of `{u, u′}` under `−Tr` is `[[2, −1], [−1, 2]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanVector<Q> {
    pub a: Q,
    pub b: Q,
}

impl<Q: Clone + Zero + One + Sub<Output = Q> + Neg<Output = Q>> CartanVector<Q> {
    pub fn new(a: Q, b: Q) -> Self {
        Self { a, b }
    }

    pub fn u() -> Self {
        Self::new(Q::one(), Q::zero())
    }

    pub fn u_prime() -> Self {
        Self::new(Q::zero(), Q::one())
    }

    /// `v = u + 2u′`.
    pub fn v() -> Self {
        Self::new(Q::one(), Q::one() + Q::one())
    }

    /// Diagonal entries divided by `i`.
    pub fn triple(&self) -> [Q; 3] {
        [
            self.a.clone(),
            self.b.clone() - self.a.clone(),
            -self.b.clone(),
        ]
    }

    /// Inverse of [`Self::triple`]; the third entry is implied by tracelessness.
    pub fn from_triple(t: &[Q; 3]) -> Self {
        Self::new(t[0].clone(), -t[2].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `⟨x, y⟩ = xᵀ [[2, −1], [−1, 2]] y`.
    pub fn inner(&self, other: &Self) -> Q {
        let two = Q::one() + Q::one();
        two.clone() * self.a.clone() * other.a.clone()
            - self.a.clone() * other.b.clone()
            - self.b.clone() * other.a.clone()
            + two * self.b.clone() * other.b.clone()
    }
}

impl<Q: Clone + Add<Output = Q>> Add for CartanVector<Q> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl<Q: Clone + Sub<Output = Q>> Sub for CartanVector<Q> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl<Q: Clone + Mul<Output = Q>> Mul<Q> for CartanVector<Q> {
    type Output = Self;
    fn mul(self, rhs: Q) -> Self {
        Self {
            a: self.a * rhs.clone(),
            b: self.b * rhs,
        }
    }
}

impl CartanVector<Rational64> {
    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(Rational64::from_integer(a), Rational64::from_integer(b))
    }

    pub fn to_algebra<T: Real>(&self) -> AlgebraElement<T> {
        let f = |q: &Rational64| *q.numer() as f64 / *q.denom() as f64;
        let (a, b) = (f(&self.a), f(&self.b));
        AlgebraElement::u() * T::lit(a) + AlgebraElement::u_prime() * T::lit(b)
    }

    /// The circle subgroup whose Lie algebra is the line `z^⊥` in the Cartan
    /// subalgebra. Solved exactly: `G z = (g₁, g₂)` and `x = (g₂, −g₁)`.
    pub fn perp_line(&self) -> Result<CircleSubgroup> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let two = Rational64::from_integer(2);
        let g1 = two * self.a - self.b;
        let g2 = two * self.b - self.a;
        let x = CartanVector::new(g2, -g1);
        let (a, b) = primitive_integer_direction(&x);
        let t = CartanVector::new(a, b).triple();
        CircleSubgroup::canonicalize(t[0], t[1])
    }
}

/// Scales a nonzero rational vector to a coprime integer vector.
fn primitive_integer_direction(x: &CartanVector<Rational64>) -> (i64, i64) {
    let den = x.a.denom().lcm(x.b.denom());
    let a = (x.a * den).to_integer();
    let b = (x.b * den).to_integer();
    let g = a.gcd(&b);
    (a / g, b / g)
}

/// A Weyl group element (permutation of the diagonal) combined with a global
/// sign. The sign accounts for `U_{k,l} = U_{−k,−l}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub perm: [usize; 3],
    pub sign: i8,
}

pub const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

impl WeylElement {
    /// The six permutations with sign `+1`, i.e. W ≅ S₃.
    pub fn weyl_group() -> impl Iterator<Item = WeylElement> {
        PERMUTATIONS
            .into_iter()
            .map(|perm| WeylElement { perm, sign: 1 })
    }

    /// All twelve elements of W × {±1}.
    pub fn with_signs() -> impl Iterator<Item = WeylElement> {
        [1i8, -1].into_iter().flat_map(|sign| {
            PERMUTATIONS
                .into_iter()
                .map(move |perm| WeylElement { perm, sign })
        })
    }

    pub fn apply<Q: Clone + Neg<Output = Q>>(&self, t: &[Q; 3]) -> [Q; 3] {
        let pick = |i: usize| {
            let x = t[self.perm[i]].clone();
            if self.sign < 0 {
                -x
            } else {
                x
            }
        };
        [pick(0), pick(1), pick(2)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CircleClass {
    /// Triple contains 0: conjugate to `U_{1,−1}` (regular element).
    RootType,
    /// Triple has a repeated entry: conjugate to `U_{1,1}`.
    SingularType,
    Generic,
}

impl fmt::Display for CircleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CircleClass::RootType => "RootType",
            CircleClass::SingularType => "SingularType",
            CircleClass::Generic => "Generic",
        };
        f.write_str(name)
    }
}

/// A circle subgroup `U_{k,l}` of the maximal torus, stored in canonical form:
/// the lexicographically greatest `(k, l)` over the twelve images of the
/// triple `(k, l, −k−l)` under permutations and global sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CircleSubgroup {
    k: i64,
    l: i64,
    class: CircleClass,
}

impl CircleSubgroup {
    pub fn canonicalize(k: i64, l: i64) -> Result<Self> {
        if k == 0 && l == 0 {
            return Err(Error::ZeroPair);
        }
        let g = k.gcd(&l);
        let triple = [k / g, l / g, -(k + l) / g];
        let best = WeylElement::with_signs()
            .map(|w| w.apply(&triple))
            .map(|t| (t[0], t[1]))
            .max()
            .expect("twelve images");
        Ok(Self {
            k: best.0,
            l: best.1,
            class: classify_triple(&triple),
        })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn class(&self) -> CircleClass {
        self.class
    }

    pub fn triple(&self) -> [i64; 3] {
        [self.k, self.l, -(self.k + self.l)]
    }

    pub fn generator<T: Real>(&self) -> AlgebraElement<T> {
        AlgebraElement::circle_generator(self.k, self.l)
    }
}

impl fmt::Display for CircleSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U({},{})", self.k, self.l)
    }
}

fn classify_triple(t: &[i64; 3]) -> CircleClass {
    if t.contains(&0) {
        CircleClass::RootType
    } else if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
        CircleClass::SingularType
    } else {
        CircleClass::Generic
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IdentityComponent {
    /// The maximal torus T².
    Torus,
    /// `S(U(2)×U(1)) ≅ U(2)`.
    U2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct NormalizerInfo {
    pub identity_component: IdentityComponent,
    pub component_count: usize,
}

/// Number of permutations fixing the triple up to sign.
fn line_preserving_permutations(t: &[i64; 3]) -> usize {
    let neg = [-t[0], -t[1], -t[2]];
    WeylElement::weyl_group()
        .map(|w| w.apply(t))
        .filter(|img| *img == *t || *img == neg)
        .count()
}

/// Normalizer of `U_{k,l}` in SU(3), by counting Weyl elements that preserve
/// the line of the generator.
pub fn normalizer_components(c: &CircleSubgroup) -> NormalizerInfo {
    let count = line_preserving_permutations(&c.triple());
    let identity_component = match c.class {
        CircleClass::SingularType => IdentityComponent::U2,
        _ => IdentityComponent::Torus,
    };
    let divisor = match identity_component {
        IdentityComponent::U2 => 2,
        IdentityComponent::Torus => 1,
    };
    NormalizerInfo {
        identity_component,
        component_count: count / divisor,
    }
}

/// Component count of the normalizer of `U_{k,l} × Z_h`. For the singular
/// circle with `h > 1` the group contains regular elements, which cuts the
/// normalizer down to `T² ∪ τT²`.
pub fn normalizer_components_nonconnected(c: &CircleSubgroup, h: u64) -> usize {
    match c.class {
        CircleClass::SingularType if h > 1 => 2,
        _ => normalizer_components(c).component_count,
    }
}

/// The Weyl representative for the transposition of the first two diagonal
/// entries: upper-left block `[[0, 1], [−1, 0]]`, lower-right entry 1.
pub fn tau_matrix<T: Real>() -> GroupMatrix<T> {
    GroupMatrix::from_real_rows([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
}

/// Dimension of the normalizer of `U_{k,l}`, computed numerically as the
/// dimension of `{X : [X, H] ∈ span H}` for the generator `H`.
pub fn normalizer_dim_numeric<T: Real>(c: &CircleSubgroup, tol: &Tolerances<T>) -> Result<usize> {
    let h = c.generator::<T>();
    let hh = h.inner(&h);
    crate::liealg::stabilizer_dim_linear(
        |x| {
            let br = x.bracket(&h);
            let along = br.inner(&h) / hh;
            real_coords((br - h * along).matrix())
        },
        tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn gram_matrix() {
        type V = CartanVector<Rational64>;
        assert_eq!(V::u().inner(&V::u()), q(2, 1));
        assert_eq!(V::u_prime().inner(&V::u_prime()), q(2, 1));
        assert_eq!(V::u().inner(&V::u_prime()), q(-1, 1));
        assert_eq!(V::u().inner(&V::v()), q(0, 1));
    }

    #[test]
    fn gram_matrix_over_integers() {
        let u = CartanVector::<i64>::u();
        assert_eq!(u.inner(&CartanVector::v()), 0);
        assert_eq!(CartanVector::<i64>::v().triple(), [1, 1, -2]);
    }

    #[test]
    fn canonicalize_examples() {
        let c = CircleSubgroup::canonicalize(2, -2).unwrap();
        assert_eq!(c, CircleSubgroup::canonicalize(1, -1).unwrap());
        assert_eq!(c.class(), CircleClass::RootType);
        assert_eq!(CircleSubgroup::canonicalize(1, 0).unwrap(), c);
        let s = CircleSubgroup::canonicalize(2, -1).unwrap();
        assert_eq!(s.class(), CircleClass::SingularType);
        assert_eq!(s, CircleSubgroup::canonicalize(1, 1).unwrap());
        assert_eq!((s.k(), s.l()), (2, -1));
        assert_eq!((c.k(), c.l()), (1, 0));
        assert_eq!(CircleSubgroup::canonicalize(0, 0), Err(Error::ZeroPair));
    }

    #[test]
    fn normalizer_examples() {
        let n = |k, l| normalizer_components(&CircleSubgroup::canonicalize(k, l).unwrap());
        assert_eq!(
            n(1, -1),
            NormalizerInfo {
                identity_component: IdentityComponent::Torus,
                component_count: 2
            }
        );
        assert_eq!(
            n(1, 1),
            NormalizerInfo {
                identity_component: IdentityComponent::U2,
                component_count: 1
            }
        );
        assert_eq!(
            n(3, 1),
            NormalizerInfo {
                identity_component: IdentityComponent::Torus,
                component_count: 1
            }
        );
    }

    #[test]
    fn nonconnected_normalizer_examples() {
        let c = |k, l| CircleSubgroup::canonicalize(k, l).unwrap();
        assert_eq!(normalizer_components_nonconnected(&c(1, 1), 2), 2);
        assert_eq!(normalizer_components_nonconnected(&c(1, -1), 3), 2);
        assert_eq!(normalizer_components_nonconnected(&c(1, 1), 1), 1);
        assert_eq!(normalizer_components_nonconnected(&c(3, 1), 4), 1);
    }

    #[test]
    fn perp_line_examples() {
        let half = q(1, 2);
        let h = |m: i64| CartanVector::<Rational64>::u() * half + CartanVector::v() * q(m, 6);
        let m1 = h(1).perp_line().unwrap();
        assert_eq!(m1, CircleSubgroup::canonicalize(0, 1).unwrap());
        let m3 = h(3).perp_line().unwrap();
        assert_eq!(m3.class(), CircleClass::SingularType);
        assert_eq!(m3, CircleSubgroup::canonicalize(1, 1).unwrap());
        let z2 = CartanVector::<Rational64>::new(q(2, 3), q(1, 3));
        let p = z2.perp_line().unwrap();
        assert_eq!(p.class(), CircleClass::RootType);
        assert_eq!(
            CartanVector::<Rational64>::from_ints(0, 0).perp_line(),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn tau_reflects_the_root_direction() {
        let tau = tau_matrix::<f64>();
        assert!(tau.group_deviation() < 1e-15);
        let u = AlgebraElement::<f64>::u();
        assert_eq!(u.adjoint_by(&tau), -u);
        let v = AlgebraElement::<f64>::v();
        assert_eq!(v.adjoint_by(&tau), v);
    }

    #[test]
    fn exact_and_numeric_inner_products_agree() {
        let x = CartanVector::new(q(2, 3), q(-5, 7));
        let y = CartanVector::new(q(1, 2), q(3, 1));
        let exact = x.inner(&y);
        let numeric = x.to_algebra::<f64>().inner(&y.to_algebra());
        let exact_f = *exact.numer() as f64 / *exact.denom() as f64;
        assert!((numeric - exact_f).abs() < 1e-12);
    }
}
