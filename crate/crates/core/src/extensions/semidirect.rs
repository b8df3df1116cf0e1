use crate::error::{Error, Result};
use crate::iso::is_automorphism;
use crate::perm::Perm;
use crate::qcs::QCycleSet;

/// The product on `X × S`, point `(x, s)` at `x·|S| + s`:
/// `(x,s)·(y,t) = (x·y, θ_{x·y}(s)·θ_{y:x}(t))` and
/// `(x,s):(y,t) = (x:y, θ_{x:y}(s):θ_{y·x}(t))`.
///
/// Each `θ_x` must be an automorphism of `S` and `θ_{x·y}θ_x = θ_{y:x}θ_y`.
pub fn semidirect_product(x: &QCycleSet, s: &QCycleSet, theta: &[Perm]) -> Result<QCycleSet> {
    let (n, m) = (x.n(), s.n());
    if theta.len() != n {
        return Err(Error::ShapeMismatch {
            expected: n,
            found: theta.len(),
        });
    }
    for (p, th) in theta.iter().enumerate() {
        if th.degree() != m {
            return Err(Error::DegreeMismatch {
                left: m,
                right: th.degree(),
            });
        }
        if !is_automorphism(s, th) {
            return Err(Error::NotAutomorphism { x: p });
        }
    }
    for a in 0..n {
        for b in 0..n {
            let l = theta[x.dot(a, b)].compose(&theta[a])?;
            let r = theta[x.colon(b, a)].compose(&theta[b])?;
            if l != r {
                return Err(Error::CompatibilityFailed { x: a, y: b });
            }
        }
    }
    QCycleSet::from_fns(
        n * m,
        |p, q| {
            let ((a, u), (b, v)) = ((p / m, p % m), (q / m, q % m));
            let fiber = s.dot(theta[x.dot(a, b)].apply(u), theta[x.colon(b, a)].apply(v));
            x.dot(a, b) * m + fiber
        },
        |p, q| {
            let ((a, u), (b, v)) = ((p / m, p % m), (q / m, q % m));
            let fiber = s.colon(theta[x.colon(a, b)].apply(u), theta[x.dot(b, a)].apply(v));
            x.colon(a, b) * m + fiber
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::iso::are_isomorphic;
    use alloc::vec;
    use alloc::vec::Vec;

    #[test]
    fn order_nine_example() {
        let (x, y, theta) = fixtures::semidirect_nine_parts();
        let p = semidirect_product(&x, &y, &theta).unwrap();
        assert_eq!(p.n(), 9);
        assert!(!p.is_regular());
    }

    #[test]
    fn identity_theta_is_direct_product() {
        let x = fixtures::z3_alpha();
        let s = fixtures::shift(2, 1).unwrap();
        let id = vec![Perm::identity(2); 3];
        let p = semidirect_product(&x, &s, &id).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                let expected = x.dot(a / 2, b / 2) * 2 + s.dot(a % 2, b % 2);
                assert_eq!(p.dot(a, b), expected);
                let expected = x.colon(a / 2, b / 2) * 2 + s.colon(a % 2, b % 2);
                assert_eq!(p.colon(a, b), expected);
            }
        }
    }

    #[test]
    fn one_point_base() {
        let s = fixtures::z3_alpha();
        let p = semidirect_product(&QCycleSet::trivial(1), &s, &[Perm::identity(3)]).unwrap();
        assert_eq!(p, s);
        assert!(are_isomorphic(&p, &s).is_some());
    }

    #[test]
    fn rejects_bad_theta() {
        let x = QCycleSet::trivial(2);
        let s = fixtures::z3_alpha();
        let swap02 = Perm::transposition(3, 0, 2).unwrap();
        assert_eq!(
            semidirect_product(&x, &s, &[swap02.clone(), swap02]),
            Err(Error::NotAutomorphism { x: 0 })
        );
        // over the trivial base compatibility says θ₀ and θ₁ commute
        let s3 = QCycleSet::trivial(3);
        let theta: Vec<Perm> = vec![
            Perm::transposition(3, 0, 1).unwrap(),
            Perm::transposition(3, 1, 2).unwrap(),
        ];
        assert_eq!(
            semidirect_product(&x, &s3, &theta),
            Err(Error::CompatibilityFailed { x: 0, y: 1 })
        );
    }
}
