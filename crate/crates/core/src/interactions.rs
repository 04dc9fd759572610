//! Several variable sets: the total operator, per-component momenta, the
//! pair invariants built from them and the quartic interaction.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::internal::{InternalError, SunGeneratorSet};
use crate::lorentz::{self, Generator, GeneratorSet, LorentzError, Variant};
use crate::report::{CommutationEntry, CommutationReport};
use crate::symcore::{GaussianRational, Monomial, VariableId, WeylOperator};

type Op = WeylOperator;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InteractionError {
    SameSet(u16),
    TooFewSets(u16),
    IndexOutOfRange,
    Lorentz(LorentzError),
    Internal(InternalError),
}

impl fmt::Display for InteractionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InteractionError::SameSet(m) => write!(f, "interaction needs two distinct sets, got {m} twice"),
            InteractionError::TooFewSets(n) => write!(f, "need at least one variable set, got {n}"),
            InteractionError::IndexOutOfRange => f.write_str("index out of range"),
            InteractionError::Lorentz(e) => write!(f, "{e}"),
            InteractionError::Internal(e) => write!(f, "{e}"),
        }
    }
}

impl From<LorentzError> for InteractionError {
    fn from(e: LorentzError) -> Self {
        InteractionError::Lorentz(e)
    }
}

impl From<InternalError> for InteractionError {
    fn from(e: InternalError) -> Self {
        InteractionError::Internal(e)
    }
}

/// `(internal index, set index)`.
pub type Slot = (u16, u16);

/// Enough information to rebuild an invariant operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    /// `u1(a) v2(b) − v1(a) u2(b)`.
    I { a: Slot, b: Slot },
    /// Barred counterpart of `I`.
    IBar { a: Slot, b: Slot },
    /// `u1(a) v̄1(b) − v1(a) ū1(b)`.
    X2 { a: Slot, b: Slot },
    /// `I(j, n : ī, m) + Ī(ī, m : j, n)`; `n_prime` records how the unnamed
    /// set index in the definition was read.
    J { i: u16, j: u16, m: u16, n: u16, n_prime: u16 },
    /// `Σ_{i,j} J(i, j̄ : m, m′) J(j, ī : m′, m)`.
    Quartic { m: u16, m_prime: u16, dim: u16 },
}

impl Construction {
    pub fn replay(&self) -> Op {
        match *self {
            Construction::I { a, b } => pair(a, b, false, false),
            Construction::IBar { a, b } => pair(a, b, true, true),
            Construction::X2 { a, b } => pair_x2(a, b),
            Construction::J { i, j, m, n_prime, n } => {
                pair((j, n_prime), (i, m), false, false) + pair((i, m), (j, n), true, true)
            }
            Construction::Quartic { m, m_prime, dim } => {
                let mut out = Op::zero();
                for i in 1..=dim {
                    for j in 1..=dim {
                        let left = build_j(i, j, m, m_prime).operator;
                        let right = build_j(j, i, m_prime, m).operator;
                        out += left.multiply(&right);
                    }
                }
                out
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Construction::I { a, b } => format!("I(1,{},{} : 2,{},{})", a.0, a.1, b.0, b.1),
            Construction::IBar { a, b } => format!("Ibar(1,{},{} : 2,{},{})", a.0, a.1, b.0, b.1),
            Construction::X2 { a, b } => format!("X2({},{} : {},{})", a.0, a.1, b.0, b.1),
            Construction::J { i, j, m, n, n_prime } => format!("J({i},{j} : {m},{n}) [n'={n_prime}]"),
            Construction::Quartic { m, m_prime, dim } => format!("V({m},{m_prime}) [n={dim}]"),
        }
    }
}

/// An operator together with the construction that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantOperator {
    pub record: Construction,
    pub operator: Op,
}

impl InvariantOperator {
    fn new(record: Construction) -> Self {
        let operator = record.replay();
        InvariantOperator { record, operator }
    }

    pub fn replays_exactly(&self) -> bool {
        self.record.replay() == self.operator
    }
}

fn product(x: VariableId, y: VariableId) -> Op {
    Op::term(GaussianRational::from_integer(1), Monomial::new(alloc::vec![(x, 1)], alloc::vec![]))
        .multiply(&Op::var(y))
}

fn pair(a: Slot, b: Slot, bar_a: bool, bar_b: bool) -> Op {
    let u1 = VariableId::u(1, a.0, a.1).with_conj(bar_a);
    let v1 = VariableId::v(1, a.0, a.1).with_conj(bar_a);
    let u2 = VariableId::u(2, b.0, b.1).with_conj(bar_b);
    let v2 = VariableId::v(2, b.0, b.1).with_conj(bar_b);
    product(u1, v2) - product(v1, u2)
}

fn pair_x2(a: Slot, b: Slot) -> Op {
    let (ua, va) = (VariableId::u(1, a.0, a.1), VariableId::v(1, a.0, a.1));
    let (ub, vb) = (VariableId::u(1, b.0, b.1).bar(), VariableId::v(1, b.0, b.1).bar());
    product(ua, vb) - product(va, ub)
}

pub fn build_i(a: Slot, b: Slot) -> InvariantOperator {
    InvariantOperator::new(Construction::I { a, b })
}

pub fn build_i_bar(a: Slot, b: Slot) -> InvariantOperator {
    InvariantOperator::new(Construction::IBar { a, b })
}

pub fn build_x2(a: Slot, b: Slot) -> InvariantOperator {
    InvariantOperator::new(Construction::X2 { a, b })
}

/// `J(i, j̄ : m, n)`.
pub fn build_j(i: u16, j: u16, m: u16, n: u16) -> InvariantOperator {
    InvariantOperator::new(Construction::J { i, j, m, n, n_prime: n })
}

/// The four pair bilinears for internal indices `j, i` and sets `n, m`.
pub fn build_pair_invariants(j: u16, n: u16, i: u16, m: u16) -> [InvariantOperator; 4] {
    [build_i((j, n), (i, m)), build_i_bar((j, n), (i, m)), build_x2((j, n), (i, m)), build_j(i, j, m, n)]
}

/// The printed translation generator restricted to one internal index and
/// one set.
pub fn build_per_component_momentum(mu: usize, i: u16, m: u16) -> Result<Op, InteractionError> {
    if mu > 3 || i == 0 || m == 0 {
        return Err(InteractionError::IndexOutOfRange);
    }
    let t = lorentz::templates(Variant::AsPrinted)?;
    Ok(t[Generator::momentum(mu).index()].expand_component(i, m))
}

/// `−i P2(i, m)` written out term by term, independent of the templates.
pub fn minus_i_p2_component(i: u16, m: u16) -> Op {
    let one = GaussianRational::from_integer(1);
    let (u1, v1, u2, v2) = (VariableId::u(1, i, m), VariableId::v(1, i, m), VariableId::u(2, i, m), VariableId::v(2, i, m));
    Op::var_deriv(one.clone(), u1, u2.bar())
        + Op::var_deriv(one.clone(), v1, v2.bar())
        + Op::var_deriv(one.clone(), u1.bar(), u2)
        + Op::var_deriv(one, v1.bar(), v2)
}

fn minus_i() -> GaussianRational {
    GaussianRational::from_parts(0, 1, -1, 1)
}

/// The three momentum-transfer identities for every index choice, with
/// the momenta multiplied by `lambda`.
pub fn verify_pair_identities(dim: u16, sets: u16, lambda: &GaussianRational) -> Result<CommutationReport, InteractionError> {
    let mut entries = Vec::new();
    let p2 = |i: u16, m: u16| -> Result<Op, InteractionError> {
        Ok(build_per_component_momentum(2, i, m)?.scale(&(minus_i() * lambda.clone())))
    };
    let neg = |op: Op| -op;
    for m in 1..=sets {
        for n in 1..=sets {
            for i in 1..=dim {
                for j in 1..=dim {
                    let idx = format!("{i}.{j}.{m}.{n}");
                    let lhs1 = p2(i, m)?.apply(&build_i((j, n), (i, m)).operator).expect("polynomial");
                    let rhs1 = build_x2((j, n), (i, m)).operator.scale(lambda);
                    entries.push(CommutationEntry::new(format!("transfer.I.{idx}"), "A-13", rhs1, lhs1));
                    let lhs2 = p2(i, m)?.apply(&build_i_bar((j, n), (i, m)).operator).expect("polynomial");
                    let rhs2 = neg(build_x2((i, m), (j, n)).operator.scale(lambda));
                    entries.push(CommutationEntry::new(format!("transfer.Ibar.{idx}"), "A-13", rhs2, lhs2));
                    let lhs3 = p2(j, n)?.apply(&build_i_bar((i, m), (j, n)).operator).expect("polynomial");
                    let rhs3 = neg(build_x2((j, n), (i, m)).operator.scale(lambda));
                    entries.push(CommutationEntry::new(format!("transfer.Ibar2.{idx}"), "A-13", rhs3, lhs3));
                }
            }
        }
    }
    Ok(CommutationReport::from_entries(entries))
}

/// `Σ_{i,m} P_μ(i, m)` equals the total translation generator for each μ.
pub fn verify_momentum_components(dim: u16, sets: u16) -> Result<CommutationReport, InteractionError> {
    let all: Vec<u16> = (1..=sets).collect();
    let total = GeneratorSet::for_sets(dim, &all, Variant::AsPrinted)?;
    let mut entries = Vec::new();
    for mu in 0..4 {
        let mut sum = Op::zero();
        for m in 1..=sets {
            for i in 1..=dim {
                sum += build_per_component_momentum(mu, i, m)?;
            }
        }
        entries.push(CommutationEntry::new(format!("components.P{mu}"), "A-9", total.p(mu).clone(), sum));
    }
    for m in 1..=sets {
        for i in 1..=dim {
            let written = minus_i_p2_component(i, m);
            let derived = build_per_component_momentum(2, i, m)?.scale(&minus_i());
            entries.push(CommutationEntry::new(format!("components.P2form.{i}.{m}"), "A-11", written, derived));
        }
    }
    Ok(CommutationReport::from_entries(entries))
}

fn all_sets(sets: u16) -> Result<Vec<u16>, InteractionError> {
    if sets == 0 {
        return Err(InteractionError::TooFewSets(sets));
    }
    Ok((1..=sets).collect())
}

/// `[P_μ^total, op] = 0` for all four μ.
pub fn verify_zero_total_momentum(op: &InvariantOperator, dim: u16, sets: u16) -> Result<CommutationReport, InteractionError> {
    let total = GeneratorSet::for_sets(dim, &all_sets(sets)?, Variant::AsPrinted)?;
    let name = op.record.describe();
    let anchor = match op.record {
        Construction::Quartic { .. } => "A-10",
        _ => "A-15",
    };
    let entries = (0..4)
        .map(|mu| CommutationEntry::new(format!("[P{mu},{name}]"), anchor, Op::zero(), total.p(mu).commutator(&op.operator)))
        .collect();
    Ok(CommutationReport::from_entries(entries))
}

/// `V(m, m′)`.
pub fn build_quartic_v(m: u16, m_prime: u16, dim: u16) -> Result<InvariantOperator, InteractionError> {
    if m == m_prime {
        return Err(InteractionError::SameSet(m));
    }
    if dim == 0 || m == 0 || m_prime == 0 {
        return Err(InteractionError::IndexOutOfRange);
    }
    Ok(InvariantOperator::new(Construction::Quartic { m, m_prime, dim }))
}

/// Pair interaction choice for the total operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairPotential {
    None,
    Quartic,
}

/// `Σ_m O(m) + Σ_{m ≠ m′} V(m, m′)`.
pub fn build_total_operator(dim: u16, sets: u16, potential: PairPotential) -> Result<Op, InteractionError> {
    let mut out = Op::zero();
    for m in all_sets(sets)? {
        out += lorentz::single_particle_operator(dim, m)?;
    }
    if potential == PairPotential::Quartic {
        for m in 1..=sets {
            for mp in 1..=sets {
                if m != mp {
                    out += build_quartic_v(m, mp, dim)?.operator;
                }
            }
        }
    }
    Ok(out)
}

/// Exchange the variables of sets `a` and `b`.
pub fn swap_sets(op: &Op, a: u16, b: u16) -> Op {
    op.relabel(|v| {
        let mut w = v;
        if v.set == a {
            w.set = b;
        } else if v.set == b {
            w.set = a;
        }
        w
    })
}

/// `[T^α, V] = 0` for the set-summed SU(n) generators.
pub fn verify_sun_invariance_of_v(v: &InvariantOperator, sun: &SunGeneratorSet) -> CommutationReport {
    let name = v.record.describe();
    let entries = sun
        .ops
        .iter()
        .enumerate()
        .map(|(a, t)| {
            CommutationEntry::new(format!("[{},{name}]", sun.basis.label(a)), "A-16", Op::zero(), t.commutator(&v.operator))
        })
        .collect();
    CommutationReport::from_entries(entries)
}

/// `op − hermitian_counterpart(op)`.
pub fn hermiticity_residual(op: &Op) -> Op {
    op.clone() - op.hermitian_counterpart()
}
