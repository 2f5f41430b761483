use std::fmt;

/// An arc label. Labels of arcs leaving one node are pairwise distinct
/// (local orientation); the total order is used for deterministic
/// tie-breaking in searches.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// CCW position of the arc at its source, 1-based.
    Basic(usize),
    /// CCW position at the source plus the position of the reverse arc at
    /// the target.
    LookBack(usize, usize),
    /// CCW position plus one convexity bit per arc at the source: bit `j`
    /// is true iff the CCW angle from this arc to the `j+1`-th arc is
    /// reflex (> pi).
    AngleType(usize, Vec<bool>),
    /// Opaque token for hand-built graphs.
    Generic(String),
}

impl Label {
    /// Parses the serialized form: `b3`, `lb4,2`, `at3;0110`, `g<text>`.
    pub fn parse(s: &str) -> Option<Label> {
        if let Some(rest) = s.strip_prefix("lb") {
            let (a, b) = rest.split_once(',')?;
            return Some(Label::LookBack(a.parse().ok()?, b.parse().ok()?));
        }
        if let Some(rest) = s.strip_prefix("at") {
            let (slot, bits) = rest.split_once(';')?;
            let bits: Option<Vec<bool>> = bits
                .chars()
                .map(|c| match c {
                    '0' => Some(false),
                    '1' => Some(true),
                    _ => None,
                })
                .collect();
            return Some(Label::AngleType(slot.parse().ok()?, bits?));
        }
        if let Some(rest) = s.strip_prefix('b') {
            if let Ok(slot) = rest.parse() {
                return Some(Label::Basic(slot));
            }
        }
        s.strip_prefix('g').map(|rest| Label::Generic(rest.to_string()))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Basic(slot) => write!(f, "b{slot}"),
            Label::LookBack(a, b) => write!(f, "lb{a},{b}"),
            Label::AngleType(slot, bits) => {
                write!(f, "at{slot};")?;
                for &b in bits {
                    write!(f, "{}", if b { '1' } else { '0' })?;
                }
                Ok(())
            }
            Label::Generic(s) => write!(f, "g{s}"),
        }
    }
}
