//! Concrete pair families and the algebraic sources they are built from.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::extensions::dynamical::DynamicalPair;
use crate::qcs::QCycleSet;
use crate::table::OpTable;

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: OpTable,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(table: OpTable) -> Result<Self> {
        let n = table.degree();
        if first_non_associative(&table).is_some() {
            return Err(Error::NotAGroup("not associative"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table.get(e, x) == x && table.get(x, e) == x))
            .ok_or(Error::NotAGroup("no identity"))?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| table.get(x, y) == identity)
                .ok_or(Error::NotAGroup("missing inverse"))?;
            inverse.push(inv);
        }
        Ok(FiniteGroup {
            table,
            identity,
            inverse,
        })
    }

    /// `ℤ/m` under addition.
    pub fn cyclic(m: usize) -> Result<Self> {
        Self::new(OpTable::from_fn(m, |a, b| (a + b) % m)?)
    }

    /// Sym(3) on the permutations of `{0,1,2}` in lexicographic order, with
    /// `ab` meaning `b` applied first.
    pub fn s3() -> Self {
        let perms = crate::perm::all_perms(3);
        let table = OpTable::from_fn(6, |a, b| {
            let c = perms[a].compose(&perms[b]).expect("same degree");
            perms.iter().position(|p| *p == c).expect("closed")
        })
        .expect("in range");
        Self::new(table).expect("Sym(3) is a group")
    }

    pub fn order(&self) -> usize {
        self.table.degree()
    }

    pub fn table(&self) -> &OpTable {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Checks `f(ab) = f(a)f(b)`.
    pub fn check_endomorphism(&self, f: &[usize]) -> Result<()> {
        let n = self.order();
        if f.len() != n {
            return Err(Error::ShapeMismatch {
                expected: n,
                found: f.len(),
            });
        }
        if let Some(&value) = f.iter().find(|&&v| v >= n) {
            return Err(Error::OutOfRange { value, degree: n });
        }
        for a in 0..n {
            for b in 0..n {
                if f[self.mul(a, b)] != self.mul(f[a], f[b]) {
                    return Err(Error::NotEndomorphism { a, b });
                }
            }
        }
        Ok(())
    }
}

fn first_non_associative(t: &OpTable) -> Option<(usize, usize, usize)> {
    let n = t.degree();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if t.get(t.get(x, y), z) != t.get(x, t.get(y, z)) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// `a·b = a⁻¹ b f(a)`, `a:b = f(b)` for a group and an endomorphism `f`.
pub fn semibrace_qcs(group: &FiniteGroup, f: &[usize]) -> Result<QCycleSet> {
    group.check_endomorphism(f)?;
    QCycleSet::from_fns(
        group.order(),
        |a, b| group.mul(group.mul(group.inv(a), b), f[a]),
        |_, b| f[b],
    )
}

/// Checks associativity and `xyz = xzyz`.
pub fn check_left_quasi_normal(sg: &OpTable) -> Result<()> {
    if let Some((x, y, z)) = first_non_associative(sg) {
        return Err(Error::NotAssociative { x, y, z });
    }
    let n = sg.degree();
    let m = |a, b| sg.get(a, b);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if m(m(x, y), z) != m(m(m(x, z), y), z) {
                    return Err(Error::NotLeftQuasiNormal { x, y, z });
                }
            }
        }
    }
    Ok(())
}

/// `x·y = y`, `x:y = yx` over a left quasi-normal semigroup.
pub fn quasinormal_qcs(sg: &OpTable) -> Result<QCycleSet> {
    check_left_quasi_normal(sg)?;
    QCycleSet::from_fns(sg.degree(), |_, y| y, |x, y| sg.get(y, x))
}

/// `α(s, t) = x⁻¹t`, `α′(s, t) = f(t)` over the semi-brace q-cycle set, with
/// the group itself as fiber.
pub fn semibrace_pair(group: &FiniteGroup, f: &[usize]) -> Result<DynamicalPair> {
    let base = semibrace_qcs(group, f)?;
    DynamicalPair::from_fns(
        base,
        group.order(),
        |x, _, _, t| group.mul(group.inv(x), t),
        |_, _, _, t| f[t],
    )
}

/// `α(s, t) = t`, `α′(s, t) = tx` over the quasi-normal q-cycle set, with the
/// semigroup itself as fiber.
pub fn quasinormal_pair(sg: &OpTable) -> Result<DynamicalPair> {
    let base = quasinormal_qcs(sg)?;
    DynamicalPair::from_fns(base, sg.degree(), |_, _, _, t| t, |x, _, _, t| sg.get(t, x))
}

/// `ℤ/m₁ × … × ℤ/mₖ`, elements encoded in mixed radix with the last
/// coordinate fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    moduli: Vec<usize>,
}

impl AbelianGroup {
    pub fn new(moduli: &[usize]) -> Result<Self> {
        if moduli.contains(&0) {
            return Err(Error::NotAGroup("zero modulus"));
        }
        Ok(AbelianGroup {
            moduli: moduli.to_vec(),
        })
    }

    pub fn moduli(&self) -> &[usize] {
        &self.moduli
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().product()
    }

    pub fn decode(&self, mut a: usize) -> Vec<usize> {
        let mut out = alloc::vec![0; self.moduli.len()];
        for (slot, &m) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = a % m;
            a /= m;
        }
        out
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        coords
            .iter()
            .zip(&self.moduli)
            .fold(0, |acc, (&c, &m)| acc * m + c % m)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (a, b) = (self.decode(a), self.decode(b));
        let sum: Vec<usize> = a
            .iter()
            .zip(&b)
            .zip(&self.moduli)
            .map(|((x, y), m)| (x + y) % m)
            .collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let a = self.decode(a);
        let neg: Vec<usize> = a.iter().zip(&self.moduli).map(|(x, m)| (m - x) % m).collect();
        self.encode(&neg)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    fn check(&self, a: usize) -> Result<usize> {
        if a < self.order() {
            Ok(a)
        } else {
            Err(Error::OutOfRange {
                value: a,
                degree: self.order(),
            })
        }
    }
}

/// `α(s, t) = t + f(x,y)`, `α′(s, t) = t + f′(x,y)` where `f` is `a` on the
/// diagonal and `b` off it (likewise `f′` with `a′, b′`).
pub fn constant_cocycle_pair(
    x: &QCycleSet,
    group: &AbelianGroup,
    a: usize,
    b: usize,
    a2: usize,
    b2: usize,
) -> Result<DynamicalPair> {
    if !x.is_cycle_set() {
        return Err(Error::NotCycleSet);
    }
    let (a, b, a2, b2) = (group.check(a)?, group.check(b)?, group.check(a2)?, group.check(b2)?);
    DynamicalPair::from_fns(
        x.clone(),
        group.order(),
        |p, q, _, t| group.add(t, if p == q { a } else { b }),
        |p, q, _, t| group.add(t, if p == q { a2 } else { b2 }),
    )
}

/// The pair over the trivial cycle set of size `n` with fiber `G × G`, the
/// point `(s₁, s₂)` stored at `s₁·|G| + s₂`.
pub fn gxg_pair(n: usize, group: &AbelianGroup) -> Result<DynamicalPair> {
    let g = group.order();
    let split = |s: usize| (s / g, s % g);
    let join = |a: usize, b: usize| a * g + b;
    DynamicalPair::from_fns(
        QCycleSet::trivial(n),
        g * g,
        |x, y, s, t| {
            let ((s1, s2), (t1, t2)) = (split(s), split(t));
            if x == y {
                join(group.sub(group.add(t1, t2), s2), t2)
            } else {
                join(t1, group.add(t2, s1))
            }
        },
        |x, y, s, t| {
            let ((s1, s2), (t1, t2)) = (split(s), split(t));
            if x == y {
                join(group.add(group.sub(t1, t2), s2), t2)
            } else {
                join(t1, group.add(t2, s1))
            }
        },
    )
}

/// A point `(i, (a, b))` of the extension of the cycle set on `ℤ` with
/// `x·y = y − min(0, x)` by the Klein four-group.
pub type ZPoint = (i64, (u8, u8));

/// The extension operation; `·` and `:` coincide.
pub fn z_example_op(p: ZPoint, q: ZPoint) -> ZPoint {
    let (i, (a, b)) = p;
    let (j, (c, d)) = q;
    let fiber = if i == j {
        (c, (d + 2 - (a + 2 - c) % 2) % 2)
    } else {
        ((c + 2 - b) % 2, d)
    };
    (j - i.min(0), fiber)
}

/// Pointwise evidence that the extension over `ℤ` is degenerate while the
/// two points with equal squares still have different `σ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZExampleWitness {
    pub square_of_minus_two: ZPoint,
    pub square_of_minus_one: ZPoint,
    pub sample: ZPoint,
    pub sigma_minus_two_at_sample: ZPoint,
    pub sigma_minus_one_at_sample: ZPoint,
}

impl ZExampleWitness {
    pub fn squares_collide(&self) -> bool {
        self.square_of_minus_two == self.square_of_minus_one
    }

    pub fn sigmas_differ(&self) -> bool {
        self.sigma_minus_two_at_sample != self.sigma_minus_one_at_sample
    }
}

pub fn z_example_witness() -> ZExampleWitness {
    let p = (-2, (0, 0));
    let q = (-1, (0, 0));
    let sample = (5, (0, 0));
    ZExampleWitness {
        square_of_minus_two: z_example_op(p, p),
        square_of_minus_one: z_example_op(q, q),
        sample,
        sigma_minus_two_at_sample: z_example_op(p, sample),
        sigma_minus_one_at_sample: z_example_op(q, sample),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::dynamical::{build_extension, extension_equivalence};
    use crate::solution::SolutionMap;
    use alloc::vec;

    #[test]
    fn group_checks() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(z4.inv(1), 3);
        let s3 = FiniteGroup::s3();
        assert_eq!(s3.identity(), 0);
        let not_group = OpTable::from_fn(2, |_, _| 0).unwrap();
        assert!(matches!(FiniteGroup::new(not_group), Err(Error::NotAGroup(_))));
        assert_eq!(
            z4.check_endomorphism(&[0, 1, 1, 0]),
            Err(Error::NotEndomorphism { a: 1, b: 1 })
        );
    }

    #[test]
    fn semibrace_pairs() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let d = semibrace_pair(&z4, &[0, 0, 0, 0]).unwrap();
        let e = build_extension(&d).unwrap();
        assert!(!e.is_regular());
        assert!(extension_equivalence(&d));

        let z3 = FiniteGroup::cyclic(3).unwrap();
        let e = build_extension(&semibrace_pair(&z3, &[0, 1, 2]).unwrap()).unwrap();
        assert!(e.is_regular());
    }

    #[test]
    fn semibrace_extension_solution_formula() {
        let g = FiniteGroup::s3();
        let f = [0, 2, 2, 0, 0, 2];
        let d = semibrace_pair(&g, &f).unwrap();
        let e = build_extension(&d).unwrap();
        assert!(!e.is_regular());
        let m = g.order();
        let expected = SolutionMap::from_fn(m * m, |p, q| {
            let ((x, s), (y, t)) = ((p / m, p % m), (q / m, q % m));
            let first = (g.mul(g.mul(x, y), g.inv(f[x])), g.mul(x, t));
            let second = (f[x], f[s]);
            (first.0 * m + first.1, second.0 * m + second.1)
        })
        .unwrap();
        assert_eq!(e.to_solution(), expected);
    }

    #[test]
    fn quasinormal_sources() {
        let left_zero = OpTable::from_fn(2, |x, _| x).unwrap();
        let d = quasinormal_pair(&left_zero).unwrap();
        assert!(d.verify().ok());
        // xy = x+1 mod 3 is not associative
        let bad = OpTable::from_fn(3, |x, _| (x + 1) % 3).unwrap();
        assert!(matches!(quasinormal_qcs(&bad), Err(Error::NotAssociative { .. })));
        let rectangular = OpTable::from_fn(4, |x, y| (x & 2) | (y & 1)).unwrap();
        assert!(check_left_quasi_normal(&rectangular).is_ok());
        // in Z/2, xyz = x+y+z but xzyz = x+y
        let z2 = OpTable::from_fn(2, |x, y| (x + y) % 2).unwrap();
        assert!(matches!(
            quasinormal_qcs(&z2),
            Err(Error::NotLeftQuasiNormal { .. })
        ));
    }

    #[test]
    fn abelian_group_arithmetic() {
        let g = AbelianGroup::new(&[2, 3]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.decode(5), vec![1, 2]);
        assert_eq!(g.encode(&[1, 2]), 5);
        assert_eq!(g.add(5, 5), g.encode(&[0, 1]));
        assert_eq!(g.add(g.neg(4), 4), 0);
        assert!(AbelianGroup::new(&[0]).is_err());
    }

    #[test]
    fn constant_cocycle() {
        let z3 = AbelianGroup::new(&[3]).unwrap();
        let x = QCycleSet::trivial(2);
        let d = constant_cocycle_pair(&x, &z3, 1, 2, 0, 1).unwrap();
        assert!(d.verify().ok());
        let e = build_extension(&d).unwrap();
        assert!(!e.is_cycle_set());
        let zero = constant_cocycle_pair(&x, &z3, 0, 0, 0, 0).unwrap();
        assert_eq!(zero, crate::extensions::trivial_pair(x, 3).unwrap());
        let non_cycle = crate::fixtures::z3_alpha();
        assert_eq!(
            constant_cocycle_pair(&non_cycle, &z3, 0, 0, 0, 0),
            Err(Error::NotCycleSet)
        );
    }

    #[test]
    fn gxg() {
        let d = gxg_pair(2, &AbelianGroup::new(&[3]).unwrap()).unwrap();
        assert!(d.verify().ok());
        let e = build_extension(&d).unwrap();
        assert_eq!(e.n(), 18);
        assert!(!e.is_cycle_set());
        // over Z/2 both operations agree
        let e2 = build_extension(&gxg_pair(2, &AbelianGroup::new(&[2]).unwrap()).unwrap()).unwrap();
        assert_eq!(e2.n(), 8);
        assert!(e2.is_cycle_set());
    }

    #[test]
    fn z_witness() {
        let w = z_example_witness();
        assert_eq!(w.square_of_minus_two, (0, (0, 0)));
        assert_eq!(w.square_of_minus_one, (0, (0, 0)));
        assert_eq!(w.sigma_minus_two_at_sample.0, 7);
        assert_eq!(w.sigma_minus_one_at_sample.0, 6);
        assert!(w.squares_collide() && w.sigmas_differ());
    }
}
