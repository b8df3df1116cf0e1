//! Concrete q-cycle sets, solutions and pairs with expected properties.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::extensions::{
    build_extension, constant_cocycle_pair, gxg_pair, is_simple, quasinormal_pair, quasinormal_qcs,
    semibrace_pair, semibrace_qcs, semidirect_product, z_example_witness, AbelianGroup,
    DynamicalPair, FiniteGroup, ZExampleWitness,
};
use crate::perm::Perm;
use crate::qcs::{verify_qcycle, QCycleSet};
use crate::solution::SolutionMap;
use crate::table::OpTable;

/// `x·y = y + k`, `x:y = y` on `ℤ/m`.
pub fn shift(m: usize, k: usize) -> Result<QCycleSet> {
    QCycleSet::from_fns(m, |_, y| (y + k) % m, |_, y| y)
}

/// On `ℤ/3` with `α = (0 1)`: `x·y = α(y)` and `x:y = y` for `x ∈ {0,1}`,
/// `2·y = y` and `2:y = α(y)`.
pub fn z3_alpha() -> QCycleSet {
    let alpha = [1, 0, 2];
    QCycleSet::from_fns(
        3,
        |x, y| if x < 2 { alpha[y] } else { y },
        |x, y| if x < 2 { y } else { alpha[y] },
    )
    .expect("valid")
}

/// `x·y = y`, `x:y = k`.
pub fn constant_k(n: usize, k: usize) -> Result<QCycleSet> {
    if k >= n {
        return Err(Error::OutOfRange { value: k, degree: n });
    }
    QCycleSet::from_fns(n, |_, y| y, |_, _| k)
}

/// `({0,1}, min)`.
pub fn meet_semilattice() -> OpTable {
    OpTable::from_fn(2, usize::min).expect("n > 0")
}

/// `xy = x`.
pub fn left_zero_semigroup(n: usize) -> Result<OpTable> {
    OpTable::from_fn(n, |x, _| x)
}

/// A simple irretractable q-cycle set on four points.
pub fn simple_four() -> QCycleSet {
    QCycleSet::from_rows(
        &[vec![0, 3, 2, 1], vec![3, 1, 2, 0], vec![1, 3, 2, 0], vec![1, 0, 2, 3]],
        &[vec![0, 1, 2, 3], vec![0, 1, 2, 3], vec![1, 3, 2, 0], vec![0, 1, 2, 3]],
    )
    .expect("valid")
}

/// Sym(3) → ⟨(0 1)⟩ sending each permutation to its sign, as indices into
/// [`FiniteGroup::s3`].
pub fn s3_sign_projection() -> Vec<usize> {
    let perms = crate::perm::all_perms(3);
    let t = Perm::transposition(3, 0, 1).expect("in range");
    let t_index = perms.iter().position(|p| *p == t).expect("present");
    perms
        .iter()
        .map(|p| {
            let odd = p.cycle_type().iter().filter(|&&len| len % 2 == 0).count() % 2 == 1;
            if odd {
                t_index
            } else {
                0
            }
        })
        .collect()
}

/// Base, fiber and `θ` of the order-9 semidirect product.
pub fn semidirect_nine_parts() -> (QCycleSet, QCycleSet, Vec<Perm>) {
    let x = QCycleSet::from_fns(3, |_, y| y, |_, y| if y == 2 { 2 } else { 0 }).expect("valid");
    let swap = Perm::transposition(3, 0, 1).expect("in range");
    (x, QCycleSet::trivial(3), vec![swap.clone(), swap, Perm::identity(3)])
}

pub fn semidirect_nine() -> QCycleSet {
    let (x, y, theta) = semidirect_nine_parts();
    semidirect_product(&x, &y, &theta).expect("valid")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Valid,
    Order(usize),
    Regular,
    NonDegenerate,
    CycleSet,
    SquaringMapsCoincide,
    Simple,
    Braided,
    LeftNonDegenerate,
    RightNonDegenerate,
    SolutionBijective,
    PowerEq(u32, u32),
    PairVerifies,
    ExtensionValid,
    ExtensionRegular,
    ExtensionCycleSet,
    ExtensionPowerEq(u32, u32),
    ExtensionSolutionMatches,
    SquaresCollide,
    SigmasDiffer,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Valid => write!(f, "valid"),
            Property::Order(k) => write!(f, "order = {k}"),
            Property::Regular => write!(f, "regular"),
            Property::NonDegenerate => write!(f, "non-degenerate"),
            Property::CycleSet => write!(f, "cycle set"),
            Property::SquaringMapsCoincide => write!(f, "q = q'"),
            Property::Simple => write!(f, "simple"),
            Property::Braided => write!(f, "braided"),
            Property::LeftNonDegenerate => write!(f, "left non-degenerate"),
            Property::RightNonDegenerate => write!(f, "right non-degenerate"),
            Property::SolutionBijective => write!(f, "r bijective"),
            Property::PowerEq(a, 0) => write!(f, "r^{a} = id"),
            Property::PowerEq(a, b) => write!(f, "r^{a} = r^{b}"),
            Property::PairVerifies => write!(f, "pair verifies"),
            Property::ExtensionValid => write!(f, "extension valid"),
            Property::ExtensionRegular => write!(f, "extension regular"),
            Property::ExtensionCycleSet => write!(f, "extension is a cycle set"),
            Property::ExtensionPowerEq(a, b) => write!(f, "extension r^{a} = r^{b}"),
            Property::ExtensionSolutionMatches => write!(f, "extension solution matches closed form"),
            Property::SquaresCollide => write!(f, "q(-2,(0,0)) = q(-1,(0,0))"),
            Property::SigmasDiffer => write!(f, "sigma(-2,(0,0)) != sigma(-1,(0,0))"),
        }
    }
}

/// `Unknown` records a property that is observed but not asserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    Holds(bool),
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub property: Property,
    pub expected: Expected,
    pub anchor: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    QCycleSet(QCycleSet),
    Solution(SolutionMap),
    /// A pair, optionally with the solution its extension should produce.
    Pair(DynamicalPair, Option<SolutionMap>),
    ZWitness(ZExampleWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub params: String,
    pub structure: Structure,
    pub claims: Vec<Claim>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub property: Property,
    pub expected: Expected,
    /// `None` when the property does not apply to the structure.
    pub observed: Option<bool>,
    pub anchor: &'static str,
}

impl ClaimOutcome {
    pub fn passed(&self) -> bool {
        match self.expected {
            Expected::Holds(b) => self.observed == Some(b),
            Expected::Unknown => self.observed.is_some(),
        }
    }
}

impl fmt::Display for ClaimOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        let expected = match self.expected {
            Expected::Holds(b) => format!("{b}"),
            Expected::Unknown => String::from("unknown"),
        };
        let observed = self.observed.map_or(String::from("n/a"), |b| format!("{b}"));
        write!(
            f,
            "{status}: {} expected {expected} observed {observed} [{}]",
            self.property, self.anchor
        )
    }
}

fn qcs_property(x: &QCycleSet, p: Property) -> Option<bool> {
    Some(match p {
        Property::Valid => verify_qcycle(x.dot_table(), x.colon_table()).ok()?.ok(),
        Property::Order(k) => x.n() == k,
        Property::Regular => x.is_regular(),
        Property::NonDegenerate => x.is_nondegenerate(),
        Property::CycleSet => x.is_cycle_set(),
        Property::SquaringMapsCoincide => {
            let (q, q2) = x.squaring_maps();
            q == q2
        }
        Property::Simple => is_simple(x).ok()?,
        Property::PowerEq(_, _)
        | Property::SolutionBijective
        | Property::Braided
        | Property::LeftNonDegenerate
        | Property::RightNonDegenerate => return solution_property(&x.to_solution(), p),
        _ => return None,
    })
}

fn solution_property(s: &SolutionMap, p: Property) -> Option<bool> {
    Some(match p {
        Property::Braided => s.is_braided(),
        Property::LeftNonDegenerate => s.is_left_nondegenerate(),
        Property::RightNonDegenerate => s.is_right_nondegenerate(),
        Property::SolutionBijective => s.is_bijective(),
        Property::PowerEq(a, b) => s.power_eq(a, b),
        _ => return None,
    })
}

fn pair_property(d: &DynamicalPair, formula: Option<&SolutionMap>, p: Property) -> Option<bool> {
    if p == Property::PairVerifies {
        return Some(d.verify().ok());
    }
    let e = build_extension(d).ok();
    Some(match p {
        Property::ExtensionValid => match &e {
            Some(e) => verify_qcycle(e.dot_table(), e.colon_table()).ok()?.ok(),
            None => false,
        },
        Property::ExtensionRegular => e?.is_regular(),
        Property::ExtensionCycleSet => e?.is_cycle_set(),
        Property::ExtensionPowerEq(a, b) => e?.to_solution().power_eq(a, b),
        Property::ExtensionSolutionMatches => e?.to_solution() == *formula?,
        _ => return None,
    })
}

impl Fixture {
    pub fn evaluate(&self, p: Property) -> Option<bool> {
        match &self.structure {
            Structure::QCycleSet(x) => qcs_property(x, p),
            Structure::Solution(s) => solution_property(s, p),
            Structure::Pair(d, formula) => pair_property(d, formula.as_ref(), p),
            Structure::ZWitness(w) => match p {
                Property::SquaresCollide => Some(w.squares_collide()),
                Property::SigmasDiffer => Some(w.sigmas_differ()),
                _ => None,
            },
        }
    }

    pub fn check(&self) -> Vec<ClaimOutcome> {
        self.claims
            .iter()
            .map(|c| ClaimOutcome {
                property: c.property,
                expected: c.expected,
                observed: self.evaluate(c.property),
                anchor: c.anchor,
            })
            .collect()
    }

    /// The q-cycle set this fixture stands for, if any: the structure
    /// itself, the one encoded by a solution, or a pair's extension.
    pub fn qcycle_set(&self) -> Option<QCycleSet> {
        match &self.structure {
            Structure::QCycleSet(x) => Some(x.clone()),
            Structure::Solution(s) => s.to_qcycle_set().ok(),
            Structure::Pair(d, _) => build_extension(d).ok(),
            Structure::ZWitness(_) => None,
        }
    }
}

fn holds(property: Property, anchor: &'static str) -> Claim {
    Claim {
        property,
        expected: Expected::Holds(true),
        anchor,
    }
}

fn fails(property: Property, anchor: &'static str) -> Claim {
    Claim {
        property,
        expected: Expected::Holds(false),
        anchor,
    }
}

fn semibrace_solution(g: &FiniteGroup, f: &[usize]) -> SolutionMap {
    // r((x,s),(y,t)) = ((x y f(x)⁻¹, x t), (f(x), f(s)))
    let m = g.order();
    SolutionMap::from_fn(m * m, |p, q| {
        let ((x, s), (y, t)) = ((p / m, p % m), (q / m, q % m));
        let first = g.mul(g.mul(x, y), g.inv(f[x])) * m + g.mul(x, t);
        (first, f[x] * m + f[s])
    })
    .expect("in range")
}

fn quasinormal_solution(sg: &OpTable) -> SolutionMap {
    // r((x,s),(y,t)) = ((y,t), (xy, sy))
    let m = sg.degree();
    SolutionMap::from_fn(m * m, |p, q| {
        let ((x, s), (y, t)) = ((p / m, p % m), (q / m, q % m));
        (y * m + t, sg.get(x, y) * m + sg.get(s, y))
    })
    .expect("in range")
}

pub fn fixture_catalog() -> Vec<Fixture> {
    let mut out = Vec::new();
    let qcs = |name, params: String, x: QCycleSet, claims| Fixture {
        name,
        params,
        structure: Structure::QCycleSet(x),
        claims,
    };

    out.push(qcs(
        "shift",
        String::from("m=4 k=1"),
        shift(4, 1).expect("valid"),
        vec![
            holds(Property::Valid, "shift on Z/m is a q-cycle set"),
            holds(Property::Regular, "shift on Z/m is regular"),
            holds(Property::SolutionBijective, "shift solution r(x,y)=(y-k,x) is bijective"),
        ],
    ));
    out.push(qcs(
        "z3-transposition",
        String::from("alpha=(0 1)"),
        z3_alpha(),
        vec![
            holds(Property::Valid, "Z/3 transposition example is a q-cycle set"),
            holds(Property::Regular, "Z/3 transposition example is regular"),
            holds(Property::NonDegenerate, "q=[1,0,2] and q'=id are bijective"),
            holds(Property::PowerEq(4, 0), "Z/3 transposition solution has r^4 = id"),
        ],
    ));
    out.push(qcs(
        "constant-k",
        String::from("n=3 k=0"),
        constant_k(3, 0).expect("valid"),
        vec![
            holds(Property::Valid, "constant-k example is a q-cycle set"),
            fails(Property::Regular, "constant-k example with n>1 is not regular"),
            holds(Property::PowerEq(3, 2), "constant-k solution has r^3 = r^2"),
        ],
    ));
    let semilattice = meet_semilattice();
    out.push(qcs(
        "quasi-normal",
        String::from("semigroup=({0,1},min)"),
        quasinormal_qcs(&semilattice).expect("quasi-normal"),
        vec![
            holds(Property::Valid, "left quasi-normal semigroup gives a q-cycle set"),
            holds(Property::PowerEq(5, 3), "left quasi-normal solution has r^5 = r^3"),
        ],
    ));
    out.push(Fixture {
        name: "semilattice-solution",
        params: String::from("r(x,y)=(y,min(x,y)) on {0,1}"),
        structure: Structure::Solution(SolutionMap::from_fn(2, |x, y| (y, x.min(y))).expect("in range")),
        claims: vec![
            holds(Property::Braided, "r(x,y)=(y,xy) is a solution"),
            holds(Property::LeftNonDegenerate, "r(x,y)=(y,xy) is left non-degenerate"),
            fails(Property::RightNonDegenerate, "rho is not bijective on the semilattice"),
            fails(Property::SolutionBijective, "r is not bijective on the semilattice"),
        ],
    });

    let z3 = FiniteGroup::cyclic(3).expect("group");
    let z4 = FiniteGroup::cyclic(4).expect("group");
    let s3 = FiniteGroup::s3();
    let sign = s3_sign_projection();
    let semibrace_cases: [(&'static str, String, &FiniteGroup, Vec<usize>, bool, Expected); 4] = [
        ("semibrace-z3-identity", String::from("B=Z/3 f=id"), &z3, vec![0, 1, 2], true, Expected::Holds(true)),
        ("semibrace-z4-zero", String::from("B=Z/4 f=0"), &z4, vec![0; 4], false, Expected::Holds(true)),
        ("semibrace-z3-negation", String::from("B=Z/3 f=-id"), &z3, vec![0, 2, 1], true, Expected::Unknown),
        ("semibrace-s3-sign", String::from("B=Sym(3) f=sign"), &s3, sign.clone(), false, Expected::Holds(true)),
    ];
    for (name, params, g, f, regular, q_eq) in semibrace_cases {
        out.push(qcs(
            name,
            params,
            semibrace_qcs(g, &f).expect("endomorphism"),
            vec![
                holds(Property::Valid, "semi-brace data gives a q-cycle set"),
                Claim {
                    property: Property::Regular,
                    expected: Expected::Holds(regular),
                    anchor: "semi-brace q-cycle set is regular iff f is bijective",
                },
                Claim {
                    property: Property::SquaringMapsCoincide,
                    expected: q_eq,
                    anchor: "squaring maps coincide for idempotent f",
                },
            ],
        ));
    }

    out.push(qcs(
        "simple-four",
        String::from("four points"),
        simple_four(),
        vec![
            holds(Property::Valid, "four-point example is a q-cycle set"),
            holds(Property::Simple, "four-point example is simple"),
        ],
    ));

    let pair = |name, params: String, d: DynamicalPair, formula, claims| Fixture {
        name,
        params,
        structure: Structure::Pair(d, formula),
        claims,
    };
    let z3a = AbelianGroup::new(&[3]).expect("group");
    out.push(pair(
        "constant-cocycle",
        String::from("X=trivial(2) A=Z/3 (a,b,a',b')=(1,2,0,1)"),
        constant_cocycle_pair(&QCycleSet::trivial(2), &z3a, 1, 2, 0, 1).expect("cycle set"),
        None,
        vec![
            holds(Property::PairVerifies, "constant cocycle gives a dynamical pair"),
            holds(Property::ExtensionValid, "constant cocycle extension is a q-cycle set"),
            holds(Property::ExtensionRegular, "translations are bijective"),
            fails(Property::ExtensionCycleSet, "a != a' separates the two operations"),
        ],
    ));
    out.push(pair(
        "gxg",
        String::from("X=trivial(2) G=Z/3"),
        gxg_pair(2, &z3a).expect("pair"),
        None,
        vec![
            holds(Property::PairVerifies, "G x G data gives a dynamical pair"),
            holds(Property::ExtensionValid, "G x G extension is a q-cycle set"),
            holds(Property::ExtensionRegular, "alpha' rows are bijective"),
            fails(Property::ExtensionCycleSet, "G x G extension is not a cycle set"),
        ],
    ));
    out.push(pair(
        "semibrace-pair-s3-sign",
        String::from("B=Sym(3) f=sign"),
        semibrace_pair(&s3, &sign).expect("pair"),
        Some(semibrace_solution(&s3, &sign)),
        vec![
            holds(Property::PairVerifies, "semi-brace data gives a dynamical pair"),
            holds(Property::ExtensionValid, "semi-brace extension is a q-cycle set"),
            fails(Property::ExtensionRegular, "semi-brace extension is regular iff f is bijective"),
            holds(Property::ExtensionSolutionMatches, "semi-brace extension solution closed form"),
        ],
    ));
    out.push(pair(
        "semibrace-pair-z3-identity",
        String::from("B=Z/3 f=id"),
        semibrace_pair(&z3, &[0, 1, 2]).expect("pair"),
        Some(semibrace_solution(&z3, &[0, 1, 2])),
        vec![
            holds(Property::PairVerifies, "semi-brace data gives a dynamical pair"),
            holds(Property::ExtensionRegular, "semi-brace extension is regular iff f is bijective"),
            holds(Property::ExtensionSolutionMatches, "semi-brace extension solution closed form"),
        ],
    ));
    out.push(pair(
        "quasinormal-pair",
        String::from("semigroup=({0,1},min)"),
        quasinormal_pair(&semilattice).expect("pair"),
        Some(quasinormal_solution(&semilattice)),
        vec![
            holds(Property::PairVerifies, "quasi-normal data gives a dynamical pair"),
            holds(Property::ExtensionValid, "quasi-normal extension is a q-cycle set"),
            fails(Property::ExtensionRegular, "quasi-normal extension need not be regular"),
            holds(Property::ExtensionPowerEq(5, 3), "quasi-normal extension solution has r^5 = r^3"),
            holds(Property::ExtensionSolutionMatches, "quasi-normal extension solution closed form"),
        ],
    ));
    out.push(qcs(
        "semidirect-nine",
        String::from("theta(0)=theta(1)=(0 1) theta(2)=id"),
        semidirect_nine(),
        vec![
            holds(Property::Valid, "semidirect product is a q-cycle set"),
            holds(Property::Order(9), "semidirect product has order 9"),
            fails(Property::Regular, "order-9 semidirect product is not regular"),
        ],
    ));
    out.push(Fixture {
        name: "z-example-witness",
        params: String::from("X=Z x.y=y-min(0,x) S=Z/2xZ/2 sample=(5,(0,0))"),
        structure: Structure::ZWitness(z_example_witness()),
        claims: vec![
            holds(Property::SquaresCollide, "extension over Z is degenerate"),
            holds(Property::SigmasDiffer, "the colliding points are not retract-equivalent"),
        ],
    });
    out
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixture_catalog().into_iter().find(|f| f.name == name)
}
