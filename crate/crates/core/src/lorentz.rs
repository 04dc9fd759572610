//! The single-particle oscillator operator and the ten inhomogeneous Lorentz
//! generators realized as first-order operators on the u/v alphabet.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::race::OnceBox;

use crate::report::{CommutationEntry, CommutationReport};
use crate::symcore::{GaussianRational, Kind, Monomial, SymError, VariableId, WeylOperator};

type Op = WeylOperator;

/// Which reading of the printed generator formulas to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    AsPrinted,
    Corrected,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::AsPrinted => "as_printed",
            Variant::Corrected => "corrected",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "as_printed" | "as-printed" | "printed" => Ok(Variant::AsPrinted),
            "corrected" => Ok(Variant::Corrected),
            other => Err(format!("unknown generator variant `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    J1,
    J2,
    J3,
    K1,
    K2,
    K3,
    P0,
    P1,
    P2,
    P3,
}

impl Generator {
    pub const ALL: [Generator; 10] = [
        Generator::J1,
        Generator::J2,
        Generator::J3,
        Generator::K1,
        Generator::K2,
        Generator::K3,
        Generator::P0,
        Generator::P1,
        Generator::P2,
        Generator::P3,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i).copied()
    }

    pub fn label(self) -> &'static str {
        ["J1", "J2", "J3", "K1", "K2", "K3", "P0", "P1", "P2", "P3"][self.index()]
    }

    pub fn is_translation(self) -> bool {
        self.index() >= 6
    }

    pub fn rotation(k: usize) -> Self {
        Self::ALL[k - 1]
    }

    pub fn boost(k: usize) -> Self {
        Self::ALL[k + 2]
    }

    pub fn momentum(mu: usize) -> Self {
        Self::ALL[mu + 6]
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Block selector for a template symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockSel {
    /// Summed over both blocks together with the partner symbol.
    Each,
    Fixed(u8),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    pub kind: Kind,
    pub conj: bool,
    pub block: BlockSel,
}

impl Slot {
    const fn new(kind: Kind, conj: bool, block: BlockSel) -> Self {
        Slot { kind, conj, block }
    }

    fn resolve(self, b: u8, i: u16, set: u16) -> VariableId {
        let block = match self.block {
            BlockSel::Each => b,
            BlockSel::Fixed(x) => x,
        };
        VariableId::osc(self.kind, block, i, set).with_conj(self.conj)
    }
}

/// `sign · var · ∂_deriv`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TemplateTerm {
    pub sign: i8,
    pub var: Slot,
    pub deriv: Slot,
}

/// A generator written as a prefactor times four signed `x ∂_y` terms,
/// summed over the internal index (and over the block when a slot says so).
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorTemplate {
    pub prefactor: GaussianRational,
    pub terms: [TemplateTerm; 4],
}

impl GeneratorTemplate {
    pub fn expand(&self, n: u16, set: u16) -> Op {
        (1..=n).map(|i| self.expand_component(i, set)).sum()
    }

    /// The restriction of `expand` to one internal index.
    pub fn expand_component(&self, i: u16, set: u16) -> Op {
        let summed = self
            .terms
            .iter()
            .any(|t| t.var.block == BlockSel::Each || t.deriv.block == BlockSel::Each);
        let blocks: &[u8] = if summed { &[1, 2] } else { &[1] };
        let mut out = Op::zero();
        for &b in blocks {
            for t in &self.terms {
                let c = self.prefactor.clone() * GaussianRational::from_integer(t.sign as i64);
                out.add_term(
                    Monomial::new(vec_one(t.var.resolve(b, i, set)), vec_one(t.deriv.resolve(b, i, set))),
                    c,
                );
            }
        }
        out
    }

    /// Apply an edit: bit `t` of `flips` negates term `t`, bit `t` of `swaps`
    /// exchanges its variable and derivative symbols.
    pub fn edited(&self, edit: Edit) -> Self {
        let mut out = self.clone();
        for (t, term) in out.terms.iter_mut().enumerate() {
            if edit.flips & (1 << t) != 0 {
                term.sign = -term.sign;
            }
            if edit.swaps & (1 << t) != 0 {
                core::mem::swap(&mut term.var, &mut term.deriv);
            }
        }
        out
    }
}

fn vec_one(v: VariableId) -> Vec<(VariableId, u32)> {
    alloc::vec![(v, 1)]
}

/// Sign flips and variable/derivative swaps as 4-bit masks over the terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edit {
    pub flips: u8,
    pub swaps: u8,
}

impl Edit {
    pub fn cost(self) -> u32 {
        self.flips.count_ones() + self.swaps.count_ones()
    }

    pub fn flipped_terms(self) -> Vec<usize> {
        (0..4).filter(|t| self.flips & (1 << t) != 0).map(|t| t + 1).collect()
    }

    pub fn swapped_terms(self) -> Vec<usize> {
        (0..4).filter(|t| self.swaps & (1 << t) != 0).map(|t| t + 1).collect()
    }

    /// All 256 edits, cheapest first.
    fn all() -> Vec<Edit> {
        let mut edits: Vec<Edit> =
            (0u8..16).flat_map(|flips| (0u8..16).map(move |swaps| Edit { flips, swaps })).collect();
        edits.sort_by_key(|e| (e.cost(), *e));
        edits
    }
}

const U: Kind = Kind::U;
const V: Kind = Kind::V;
const E: BlockSel = BlockSel::Each;
const B1: BlockSel = BlockSel::Fixed(1);
const B2: BlockSel = BlockSel::Fixed(2);

const fn term(sign: i8, var: (Kind, bool, BlockSel), deriv: (Kind, bool, BlockSel)) -> TemplateTerm {
    TemplateTerm {
        sign,
        var: Slot::new(var.0, var.1, var.2),
        deriv: Slot::new(deriv.0, deriv.1, deriv.2),
    }
}

fn q(re: i64, im: i64, den: i64) -> GaussianRational {
    GaussianRational::from_parts(re, den, im, den)
}

/// The generator formulas exactly as printed, in `Generator::ALL` order.
pub fn printed_templates() -> [GeneratorTemplate; 10] {
    let same = |s: [i8; 4], pairs: [(Kind, Kind); 4], conj: [bool; 4]| -> [TemplateTerm; 4] {
        core::array::from_fn(|t| term(s[t], (pairs[t].0, conj[t], E), (pairs[t].1, conj[t], E)))
    };
    let cross = |s: [i8; 4], pairs: [(Kind, Kind); 4]| -> [TemplateTerm; 4] {
        let conj = [false, false, true, true];
        core::array::from_fn(|t| term(s[t], (pairs[t].0, conj[t], B1), (pairs[t].1, !conj[t], B2)))
    };
    let flip = [(U, V), (V, U), (U, V), (V, U)];
    let diag = [(U, U), (V, V), (U, U), (V, V)];
    let plain = [false, false, true, true];
    let g = |prefactor: GaussianRational, terms: [TemplateTerm; 4]| GeneratorTemplate { prefactor, terms };
    [
        g(q(1, 0, 2), same([1, 1, -1, -1], flip, plain)),
        g(q(0, 1, 2), same([1, 1, -1, -1], flip, plain)),
        g(q(1, 0, 2), same([1, -1, -1, 1], diag, plain)),
        g(q(0, 1, 2), same([1, 1, 1, 1], flip, plain)),
        g(q(-1, 0, 2), same([-1, 1, 1, -1], flip, plain)),
        g(q(0, 1, 2), same([1, -1, 1, -1], diag, plain)),
        g(q(1, 0, 1), cross([1, -1, -1, 1], [(U, V), (V, U), (U, V), (V, U)])),
        g(q(1, 0, 1), cross([-1, 1, 1, -1], [(U, U), (V, V), (U, U), (V, V)])),
        g(q(0, 1, 1), cross([1, 1, 1, 1], [(U, U), (V, V), (U, U), (V, V)])),
        g(q(1, 0, 1), cross([1, 1, -1, -1], [(U, V), (V, U), (U, V), (V, U)])),
    ]
}

fn anchor(a: Generator, b: Generator) -> &'static str {
    match (a.is_translation(), b.is_translation()) {
        (false, false) => "A-3a",
        (true, true) => "A-3c",
        _ => "A-3b",
    }
}

fn levi(i: usize, j: usize) -> Option<(i64, usize)> {
    match (i, j) {
        (1, 2) => Some((1, 3)),
        (2, 3) => Some((1, 1)),
        (3, 1) => Some((1, 2)),
        (2, 1) => Some((-1, 3)),
        (3, 2) => Some((-1, 1)),
        (1, 3) => Some((-1, 2)),
        _ => None,
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Class {
    J(usize),
    K(usize),
    P0,
    P(usize),
}

fn class(g: Generator) -> Class {
    let i = g.index();
    match i {
        0..=2 => Class::J(i + 1),
        3..=5 => Class::K(i - 2),
        6 => Class::P0,
        _ => Class::P(i - 6),
    }
}

/// Right-hand side of `[a, b]` as `Σ c · i · G`, i.e. a list of
/// `(c, G)` with an implicit factor of `i`.
fn structure(a: Generator, b: Generator) -> Vec<(i64, Generator)> {
    use Class::*;
    let direct = match (class(a), class(b)) {
        (J(i), J(j)) => Some(levi(i, j).map(|(s, k)| (s, Generator::rotation(k)))),
        (J(i), K(j)) => Some(levi(i, j).map(|(s, k)| (s, Generator::boost(k)))),
        (K(i), K(j)) => Some(levi(i, j).map(|(s, k)| (-s, Generator::rotation(k)))),
        (J(i), P(j)) => Some(levi(i, j).map(|(s, k)| (s, Generator::momentum(k)))),
        (K(i), P(j)) => Some((i == j).then_some((1, Generator::P0))),
        (J(_), P0) => Some(None),
        (K(i), P0) => Some(Some((1, Generator::momentum(i)))),
        (P(_), P(_)) | (P(_), P0) | (P0, P0) => Some(None),
        _ => None,
    };
    match direct {
        Some(rhs) => rhs.into_iter().collect(),
        None => structure(b, a).into_iter().map(|(c, g)| (-c, g)).collect(),
    }
}

fn expected(a: Generator, b: Generator, ops: &[Op; 10]) -> Op {
    let mut out = Op::zero();
    for (c, g) in structure(a, b) {
        out += ops[g.index()].scale(&GaussianRational::from_parts(0, 1, c, 1));
    }
    out
}

pub fn pair_label(a: Generator, b: Generator) -> String {
    format!("[{},{}]", a.label(), b.label())
}

fn pairs() -> impl Iterator<Item = (Generator, Generator)> {
    (0..10).flat_map(|a| (a + 1..10).map(move |b| (Generator::ALL[a], Generator::ALL[b])))
}

/// Every table check for an array of generator operators.
fn table(ops: &[Op; 10]) -> CommutationReport {
    let entries = pairs()
        .map(|(a, b)| {
            let computed = ops[a.index()].commutator(&ops[b.index()]);
            CommutationEntry::new(pair_label(a, b), anchor(a, b), expected(a, b, ops), computed)
        })
        .collect();
    CommutationReport::from_entries(entries)
}

/// Outcome of repairing one printed generator.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrectionRecord {
    pub generator: Generator,
    pub printed: GeneratorTemplate,
    pub corrected: GeneratorTemplate,
    pub edit: Edit,
    /// Distinct candidate operators tried across the search stage.
    pub candidates_examined: usize,
    /// Distinct operators that satisfy the whole table.
    pub solutions: usize,
}

impl CorrectionRecord {
    pub fn describe(&self) -> String {
        format!(
            "{}: flipped terms {:?}, swapped terms {:?} ({} of {} candidates satisfy the table)",
            self.generator,
            self.edit.flipped_terms(),
            self.edit.swapped_terms(),
            self.solutions,
            self.candidates_examined
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorrectionError {
    NoSolution,
    Ambiguous(usize),
}

impl fmt::Display for CorrectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorrectionError::NoSolution => f.write_str("no single-generator edit satisfies the commutation table"),
            CorrectionError::Ambiguous(k) => write!(f, "{k} distinct minimal edits satisfy the commutation table"),
        }
    }
}

fn candidate_passes(ops: &[Op; 10], cache: &[[Option<Op>; 10]; 10], g: Generator) -> bool {
    let involving = pairs().filter(|&(a, b)| a == g || b == g);
    let others = pairs().filter(|&(a, b)| a != g && b != g);
    for (a, b) in involving.chain(others) {
        let computed = if a == g || b == g {
            ops[a.index()].commutator(&ops[b.index()])
        } else {
            cache[a.index()][b.index()].clone().unwrap_or_default()
        };
        if computed != expected(a, b, ops) {
            return false;
        }
    }
    true
}

/// Search single-generator edits of the printed formulas, first among the
/// rotation/boost generators with translations held fixed, then among the
/// translations. Among operators satisfying the full table the cheapest
/// edit wins; a tie between distinct operators is an error.
pub fn derive_corrections() -> Result<Vec<CorrectionRecord>, CorrectionError> {
    let templates = printed_templates();
    let printed: [Op; 10] = core::array::from_fn(|k| templates[k].expand(1, 1));
    if table(&printed).all_pass() {
        return Ok(Vec::new());
    }
    let mut cache: [[Option<Op>; 10]; 10] = Default::default();
    for (a, b) in pairs() {
        cache[a.index()][b.index()] = Some(printed[a.index()].commutator(&printed[b.index()]));
    }
    for stage in [&Generator::ALL[..6], &Generator::ALL[6..]] {
        let mut examined = 0usize;
        let mut found: Vec<(u32, Generator, Edit, Op)> = Vec::new();
        for &g in stage {
            let mut seen: Vec<Op> = alloc::vec![printed[g.index()].clone()];
            for edit in Edit::all() {
                let op = templates[g.index()].edited(edit).expand(1, 1);
                if seen.contains(&op) {
                    continue;
                }
                seen.push(op.clone());
                examined += 1;
                let mut ops = printed.clone();
                ops[g.index()] = op.clone();
                if candidate_passes(&ops, &cache, g) {
                    found.push((edit.cost(), g, edit, op));
                }
            }
        }
        if found.is_empty() {
            continue;
        }
        found.sort_by_key(|f| (f.0, f.1, f.2));
        let best = found[0].0;
        let tied = found.iter().filter(|f| f.0 == best).count();
        if tied > 1 {
            return Err(CorrectionError::Ambiguous(tied));
        }
        let (_, g, edit, _) = found[0].clone();
        return Ok(alloc::vec![CorrectionRecord {
            generator: g,
            printed: templates[g.index()].clone(),
            corrected: templates[g.index()].edited(edit),
            edit,
            candidates_examined: examined,
            solutions: found.len(),
        }]);
    }
    Err(CorrectionError::NoSolution)
}

static CORRECTIONS: OnceBox<Result<Vec<CorrectionRecord>, CorrectionError>> = OnceBox::new();

/// Cached result of `derive_corrections`.
pub fn corrections() -> &'static Result<Vec<CorrectionRecord>, CorrectionError> {
    CORRECTIONS.get_or_init(|| Box::new(derive_corrections()))
}

/// Templates for a variant; the corrected set applies the derived edits.
pub fn templates(variant: Variant) -> Result<[GeneratorTemplate; 10], LorentzError> {
    let mut t = printed_templates();
    if variant == Variant::Corrected {
        let fixes = corrections().as_ref().map_err(|e| LorentzError::Correction(e.clone()))?;
        for fix in fixes {
            t[fix.generator.index()] = fix.corrected.clone();
        }
    }
    Ok(t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LorentzError {
    InvalidDimension(u16),
    NoSets,
    Correction(CorrectionError),
}

impl fmt::Display for LorentzError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LorentzError::InvalidDimension(n) => write!(f, "internal dimension must be at least 1, got {n}"),
            LorentzError::NoSets => f.write_str("at least one variable set is required"),
            LorentzError::Correction(e) => write!(f, "generator correction failed: {e}"),
        }
    }
}

/// The ten generators, summed over the listed variable sets.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet {
    pub n: u16,
    pub sets: Vec<u16>,
    pub variant: Variant,
    ops: [Op; 10],
}

impl GeneratorSet {
    pub fn build(n: u16, variant: Variant) -> Result<Self, LorentzError> {
        Self::for_sets(n, &[1], variant)
    }

    pub fn for_sets(n: u16, sets: &[u16], variant: Variant) -> Result<Self, LorentzError> {
        if n < 1 {
            return Err(LorentzError::InvalidDimension(n));
        }
        if sets.is_empty() {
            return Err(LorentzError::NoSets);
        }
        let t = templates(variant)?;
        let ops = core::array::from_fn(|k| sets.iter().map(|&m| t[k].expand(n, m)).sum());
        Ok(GeneratorSet { n, sets: sets.to_vec(), variant, ops })
    }

    pub fn get(&self, g: Generator) -> &Op {
        &self.ops[g.index()]
    }

    pub fn j(&self, k: usize) -> &Op {
        self.get(Generator::rotation(k))
    }

    pub fn k(&self, k: usize) -> &Op {
        self.get(Generator::boost(k))
    }

    pub fn p(&self, mu: usize) -> &Op {
        self.get(Generator::momentum(mu))
    }

    pub fn iter(&self) -> impl Iterator<Item = (Generator, &Op)> {
        Generator::ALL.iter().map(move |&g| (g, &self.ops[g.index()]))
    }

    pub fn operators(&self) -> &[Op; 10] {
        &self.ops
    }

    /// Copy with every translation generator multiplied by `lambda`.
    pub fn with_scaled_translations(&self, lambda: &GaussianRational) -> Self {
        let mut out = self.clone();
        for mu in 0..4 {
            let k = Generator::momentum(mu).index();
            out.ops[k] = out.ops[k].scale(lambda);
        }
        out
    }
}

pub fn build_sl2_generators(n: u16, variant: Variant) -> Result<[Op; 6], LorentzError> {
    let set = GeneratorSet::build(n, variant)?;
    Ok(core::array::from_fn(|k| set.ops[k].clone()))
}

pub fn build_translations(n: u16) -> Result<[Op; 4], LorentzError> {
    let set = GeneratorSet::build(n, Variant::AsPrinted)?;
    Ok(core::array::from_fn(|k| set.ops[k + 6].clone()))
}

/// All 45 generator pairs compared against the Lie-algebra table.
pub fn verify_commutation_table(gens: &GeneratorSet) -> CommutationReport {
    table(&gens.ops)
}

/// `[op, G] = 0` for each of the ten generators.
pub fn verify_invariance(op: &Op, gens: &GeneratorSet) -> CommutationReport {
    let entries = gens
        .iter()
        .map(|(g, gen)| {
            CommutationEntry::new(format!("[O,{}]", g.label()), "A-2", Op::zero(), op.commutator(gen))
        })
        .collect();
    CommutationReport::from_entries(entries)
}

fn pairing(i: u16, set: u16) -> [(i64, VariableId, VariableId); 4] {
    let (u1, v1, u2, v2) = (VariableId::u(1, i, set), VariableId::v(1, i, set), VariableId::u(2, i, set), VariableId::v(2, i, set));
    [(1, u1, v2), (-1, v1, u2), (1, u1.bar(), v2.bar()), (-1, v1.bar(), u2.bar())]
}

/// The single-particle operator on variable set `set`.
pub fn single_particle_operator(n: u16, set: u16) -> Result<Op, LorentzError> {
    if n < 1 {
        return Err(LorentzError::InvalidDimension(n));
    }
    let mut out = Op::zero();
    for i in 1..=n {
        for (s, a, b) in pairing(i, set) {
            let c = GaussianRational::from_integer(s);
            out.add_term(Monomial::new(Vec::new(), pair_powers(a, b)), -c.clone());
            out.add_term(Monomial::new(pair_powers(a, b), Vec::new()), c);
        }
    }
    Ok(out)
}

fn pair_powers(a: VariableId, b: VariableId) -> Vec<(VariableId, u32)> {
    alloc::vec![(a, 1), (b, 1)]
}

pub fn build_single_particle_operator(n: u16) -> Result<Op, LorentzError> {
    single_particle_operator(n, 1)
}

/// Multiplicative (derivative-free) part of an operator.
pub fn multiplicative_part(op: &Op) -> Op {
    Op::from_terms(op.terms().filter(|(m, _)| m.is_polynomial()).map(|(m, c)| (m.clone(), c.clone())))
}

/// Real symmetric matrix `M` with `p(z) = xᵀ M x`, where `x` lists
/// `(Re z, Im z)` for each unconjugated variable in `vars`.
pub fn real_quadratic_form(p: &Op, vars: &[VariableId]) -> Result<Vec<Vec<BigRational>>, SymError> {
    let dim = 2 * vars.len();
    let mut acc: Vec<Vec<GaussianRational>> = alloc::vec![alloc::vec![GaussianRational::zero(); dim]; dim];
    let position = |v: VariableId| vars.iter().position(|&w| w == v.base()).ok_or(SymError::Unassigned(v));
    // z = x + i·s·y with s = −1 for a conjugated symbol.
    let parts = |v: VariableId| -> Result<[(usize, GaussianRational); 2], SymError> {
        let k = position(v)?;
        let s = if v.conjugated { -1 } else { 1 };
        Ok([(2 * k, GaussianRational::one()), (2 * k + 1, GaussianRational::from_parts(0, 1, s, 1))])
    };
    for (m, c) in p.terms() {
        if !m.is_polynomial() || m.var_degree() != 2 {
            return Err(SymError::NotPolynomial);
        }
        let factors: Vec<VariableId> = m.vars().iter().flat_map(|&(v, e)| core::iter::repeat_n(v, e as usize)).collect();
        for (ra, ca) in parts(factors[0])? {
            for (rb, cb) in parts(factors[1])? {
                let w = c.clone() * ca.clone() * cb;
                let (lo, hi) = if ra <= rb { (ra, rb) } else { (rb, ra) };
                acc[lo][hi] = acc[lo][hi].clone() + w;
            }
        }
    }
    let half = BigRational::new(1.into(), 2.into());
    let mut out = alloc::vec![alloc::vec![BigRational::zero(); dim]; dim];
    for a in 0..dim {
        for b in a..dim {
            let w = &acc[a][b];
            if !w.im().is_zero() {
                return Err(SymError::NotPolynomial);
            }
            if a == b {
                out[a][a] = w.re().clone();
            } else {
                out[a][b] = w.re() * &half;
                out[b][a] = out[a][b].clone();
            }
        }
    }
    Ok(out)
}

/// Unconjugated variables of one set in `VariableId` order.
pub fn set_variables(n: u16, set: u16) -> Vec<VariableId> {
    let mut out = Vec::new();
    for b in 1..=2u8 {
        for i in 1..=n {
            out.push(VariableId::u(b, i, set));
            out.push(VariableId::v(b, i, set));
        }
    }
    out.sort();
    out
}

/// Inertia `(positive, negative)` of the real quadratic form carried by the
/// multiplicative part of the single-particle operator.
pub fn potential_signature(n: u16) -> Result<(usize, usize), LorentzError> {
    let op = build_single_particle_operator(n)?;
    let form = real_quadratic_form(&multiplicative_part(&op), &set_variables(n, 1))
        .expect("single-particle potential is a real quadratic form");
    let (pos, neg, _) = crate::linalg::symmetric_inertia(&form);
    Ok((pos, neg))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn search_repairs_only_the_second_rotation() {
        let fixes = corrections().as_ref().unwrap();
        assert_eq!(fixes.len(), 1);
        assert_eq!(fixes[0].generator, Generator::J2);
        assert_eq!(fixes[0].edit, Edit { flips: 0b1001, swaps: 0 });
        assert_eq!(fixes[0].solutions, 1);
    }

    #[test]
    fn printed_rotations_one_and_two_commute() {
        let g = GeneratorSet::build(1, Variant::AsPrinted).unwrap();
        assert_eq!(*g.j(2), g.j(1).scale(&GaussianRational::i()));
        assert!(g.j(1).commutator(g.j(2)).is_zero());
    }

    #[test]
    fn corrected_table_passes_and_printed_fails() {
        let g = GeneratorSet::build(2, Variant::Corrected).unwrap();
        let r = verify_commutation_table(&g);
        assert_eq!(r.len(), 45);
        assert!(r.all_pass(), "{:?}", r.failing_labels());
        let p = verify_commutation_table(&GeneratorSet::build(2, Variant::AsPrinted).unwrap());
        assert_eq!(p.failing_labels().len(), 10);
    }

    #[test]
    fn boost_pair_closes_on_rotation() {
        let g = GeneratorSet::build(1, Variant::Corrected).unwrap();
        let rhs = g.j(3).scale(&GaussianRational::from_parts(0, 1, -1, 1));
        assert_eq!(g.k(1).commutator(g.k(2)), rhs);
    }

    #[test]
    fn operator_shape_and_invariance() {
        let o = build_single_particle_operator(1).unwrap();
        assert_eq!(o.term_count(), 8);
        assert_eq!(o.bidegrees().into_iter().collect::<Vec<_>>(), [(0, 2), (2, 0)]);
        assert_eq!(o.apply(&Op::one()).unwrap(), multiplicative_part(&o));
        let g = GeneratorSet::build(1, Variant::Corrected).unwrap();
        assert!(verify_invariance(&o, &g).all_pass());
        let lone = Op::var(VariableId::u(1, 1, 1));
        assert!(!verify_invariance(&lone, &g).all_pass());
    }

    #[test]
    fn time_translation_on_block_two() {
        let p = build_translations(1).unwrap();
        let image = p[0].apply(&Op::var(VariableId::u(2, 1, 1))).unwrap();
        assert_eq!(image, Op::var(VariableId::v(1, 1, 1).bar()));
    }

    #[test]
    fn signature_is_balanced() {
        assert_eq!(potential_signature(1).unwrap(), (4, 4));
        assert_eq!(potential_signature(2).unwrap(), (8, 8));
    }
}
