//! Variable identifiers for the complex alphabet.

use core::fmt;
use core::str::FromStr;

/// Which variable system a symbol belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// The u/v oscillator variables `u_{bi}^{(m)}`, `v_{bi}^{(m)}`.
    Oscillator,
    /// The two-variable U(2) worked example (`u_1`, `u_2`).
    Example,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    U,
    V,
}

impl Kind {
    pub fn letter(self) -> char {
        match self {
            Kind::U => 'u',
            Kind::V => 'v',
        }
    }
}

/// One complex variable or its conjugate.
///
/// Field order fixes the canonical total order used by every normal form:
/// family, set, block, internal index, letter, then the conjugation flag.
/// Families that do not use `block` or `set` pin them to 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VariableId {
    pub family: Family,
    pub set: u16,
    pub block: u8,
    pub internal: u16,
    pub kind: Kind,
    pub conjugated: bool,
}

impl VariableId {
    /// `u_{block,internal}^{(set)}` or `v_{...}` (unconjugated).
    pub const fn osc(kind: Kind, block: u8, internal: u16, set: u16) -> Self {
        VariableId { family: Family::Oscillator, set, block, internal, kind, conjugated: false }
    }

    pub const fn u(block: u8, internal: u16, set: u16) -> Self {
        Self::osc(Kind::U, block, internal, set)
    }

    pub const fn v(block: u8, internal: u16, set: u16) -> Self {
        Self::osc(Kind::V, block, internal, set)
    }

    /// Example-family `u_index`.
    pub const fn example(index: u16) -> Self {
        VariableId { family: Family::Example, set: 1, block: 1, internal: index, kind: Kind::U, conjugated: false }
    }

    pub const fn bar(self) -> Self {
        VariableId { conjugated: !self.conjugated, ..self }
    }

    pub const fn with_conj(self, conjugated: bool) -> Self {
        VariableId { conjugated, ..self }
    }

    /// The unconjugated partner.
    pub const fn base(self) -> Self {
        self.with_conj(false)
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conjugated {
            f.write_str("~")?;
        }
        match self.family {
            Family::Oscillator => {
                write!(f, "{}{}.{}.{}", self.kind.letter(), self.block, self.internal, self.set)
            }
            Family::Example => write!(f, "e{}{}", self.kind.letter(), self.internal),
        }
    }
}

impl fmt::Debug for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for VariableId {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        let (conjugated, s) = match s.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let kind_of = |c: char| match c {
            'u' => Ok(Kind::U),
            'v' => Ok(Kind::V),
            _ => Err(()),
        };
        if let Some(rest) = s.strip_prefix('e') {
            let mut chars = rest.chars();
            let kind = kind_of(chars.next().ok_or(())?)?;
            let internal: u16 = chars.as_str().parse().map_err(|_| ())?;
            return Ok(VariableId {
                family: Family::Example,
                set: 1,
                block: 1,
                internal,
                kind,
                conjugated,
            });
        }
        let mut chars = s.chars();
        let kind = kind_of(chars.next().ok_or(())?)?;
        let mut parts = chars.as_str().split('.');
        let block: u8 = parts.next().ok_or(())?.parse().map_err(|_| ())?;
        let internal: u16 = parts.next().ok_or(())?.parse().map_err(|_| ())?;
        let set: u16 = parts.next().ok_or(())?.parse().map_err(|_| ())?;
        if parts.next().is_some() {
            return Err(());
        }
        Ok(VariableId { family: Family::Oscillator, set, block, internal, kind, conjugated })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn names_round_trip() {
        for v in [VariableId::u(1, 2, 3), VariableId::v(2, 1, 1).bar(), VariableId::example(2).bar()] {
            assert_eq!(v.to_string().parse::<VariableId>(), Ok(v));
        }
        assert_eq!(VariableId::u(2, 1, 1).bar().to_string(), "~u2.1.1");
    }

    #[test]
    fn conjugate_sorts_next_to_partner() {
        let u = VariableId::u(1, 1, 1);
        let v = VariableId::v(1, 1, 1);
        assert!(u < u.bar());
        assert!(u.bar() < v);
    }
}
