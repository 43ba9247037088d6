use std::fmt;

use crate::error::{Error, Result};

use super::ModeLabel;

/// Two-level atom factor. `Excited` is the `+1` eigenstate of `sigma_3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AtomLevel {
    Ground,
    Excited,
}

impl AtomLevel {
    pub const ALL: [AtomLevel; 2] = [AtomLevel::Ground, AtomLevel::Excited];

    pub fn index(self) -> usize {
        match self {
            AtomLevel::Ground => 0,
            AtomLevel::Excited => 1,
        }
    }

    pub fn sign(self) -> f64 {
        match self {
            AtomLevel::Ground => -1.0,
            AtomLevel::Excited => 1.0,
        }
    }
}

impl fmt::Display for AtomLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AtomLevel::Ground => "-",
            AtomLevel::Excited => "+",
        })
    }
}

/// Labels of one basis vector `|mode, n[, atom]>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisIndex {
    pub mode: usize,
    pub n: usize,
    pub atom: Option<AtomLevel>,
}

impl BasisIndex {
    pub fn new(mode: usize, n: usize) -> Self {
        Self { mode, n, atom: None }
    }

    pub fn with_atom(mode: usize, n: usize, atom: AtomLevel) -> Self {
        Self { mode, n, atom: Some(atom) }
    }
}

/// Truncated Hilbert space `span{|mode k>} (x) span{|n>, n <= nmax} [(x) atom]`.
///
/// Flat index ordering: modes in the given order, `n` ascending inside each
/// mode block, atom level as the slowest axis. The dimension is
/// `M (nmax + 1)` (times 2 with an atom), linear in the number of modes.
#[derive(Debug, Clone, PartialEq)]
pub struct HilbertLayout {
    modes: Vec<ModeLabel>,
    nmax: usize,
    atom: bool,
}

impl HilbertLayout {
    pub fn new(modes: Vec<ModeLabel>, nmax: usize, with_atom: bool) -> Result<Self> {
        if modes.is_empty() {
            return Err(Error::EmptyModeSet);
        }
        if nmax < 1 {
            return Err(Error::TruncationTooSmall(nmax));
        }
        for (i, m) in modes.iter().enumerate() {
            if modes[..i].contains(m) {
                return Err(Error::DuplicateMode(m.to_string()));
            }
        }
        Ok(Self { modes, nmax, atom: with_atom })
    }

    pub fn modes(&self) -> &[ModeLabel] {
        &self.modes
    }

    pub fn mode(&self, k: usize) -> Result<&ModeLabel> {
        self.modes
            .get(k)
            .ok_or_else(|| Error::IndexOutOfRange(format!("mode {k} (layout has {} modes)", self.modes.len())))
    }

    pub fn mode_count(&self) -> usize {
        self.modes.len()
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    pub fn fock_dim(&self) -> usize {
        self.nmax + 1
    }

    pub fn has_atom(&self) -> bool {
        self.atom
    }

    pub fn atom_levels(&self) -> usize {
        if self.atom {
            2
        } else {
            0
        }
    }

    /// Size of one atom sector, `M (nmax + 1)`.
    pub fn field_dim(&self) -> usize {
        self.modes.len() * self.fock_dim()
    }

    pub fn dim(&self) -> usize {
        self.field_dim() * self.atom_levels().max(1)
    }

    /// Same modes and atom factor, different truncation.
    pub fn with_nmax(&self, nmax: usize) -> Result<Self> {
        Self::new(self.modes.clone(), nmax, self.atom)
    }

    pub fn without_atom(&self) -> Self {
        Self { atom: false, ..self.clone() }
    }

    pub fn with_atom(&self) -> Self {
        Self { atom: true, ..self.clone() }
    }

    pub fn flatten(&self, idx: BasisIndex) -> Result<usize> {
        if idx.mode >= self.modes.len() {
            return Err(Error::IndexOutOfRange(format!("mode {} >= {}", idx.mode, self.modes.len())));
        }
        if idx.n > self.nmax {
            return Err(Error::IndexOutOfRange(format!("n = {} > nmax = {}", idx.n, self.nmax)));
        }
        let atom = match (idx.atom, self.atom) {
            (None, false) => 0,
            (Some(level), true) => level.index(),
            (Some(_), false) => return Err(Error::NoAtomFactor),
            (None, true) => {
                return Err(Error::IndexOutOfRange("layout has an atom factor; atom level required".into()))
            }
        };
        Ok(self.flat_unchecked(idx.mode, idx.n, atom))
    }

    pub(crate) fn flat_unchecked(&self, mode: usize, n: usize, atom: usize) -> usize {
        atom * self.field_dim() + mode * self.fock_dim() + n
    }

    pub fn unflatten(&self, flat: usize) -> Result<BasisIndex> {
        if flat >= self.dim() {
            return Err(Error::IndexOutOfRange(format!("flat index {flat} >= dimension {}", self.dim())));
        }
        let fd = self.field_dim();
        let atom = if self.atom { Some(AtomLevel::ALL[flat / fd]) } else { None };
        let rem = flat % fd;
        Ok(BasisIndex { mode: rem / self.fock_dim(), n: rem % self.fock_dim(), atom })
    }

    /// All basis labels in flat-index order.
    pub fn basis(&self) -> impl Iterator<Item = BasisIndex> + '_ {
        (0..self.dim()).map(move |i| self.unflatten(i).expect("in range"))
    }

    /// Flat indices of `self` inside `larger`, a layout with the same modes and
    /// atom factor but a higher truncation.
    pub fn embedding_in(&self, larger: &HilbertLayout) -> Result<Vec<usize>> {
        if larger.modes != self.modes || larger.atom != self.atom || larger.nmax < self.nmax {
            return Err(Error::LayoutMismatch("target layout does not contain this layout".into()));
        }
        Ok(self.basis().map(|b| larger.flatten(b).expect("contained")).collect())
    }

    /// Flat indices with `n <= nmax - 1`.
    pub fn interior_indices(&self) -> Vec<usize> {
        self.basis().enumerate().filter(|(_, b)| b.n < self.nmax).map(|(i, _)| i).collect()
    }
}

/// Convenience wrapper for [`HilbertLayout::new`].
pub fn build_layout(modes: Vec<ModeLabel>, nmax: usize, with_atom: bool) -> Result<HilbertLayout> {
    HilbertLayout::new(modes, nmax, with_atom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn modes(m: usize) -> Vec<ModeLabel> {
        (0..m).map(|k| ModeLabel::abstract_mode(1.0 + k as f64, 0).unwrap()).collect()
    }

    #[test]
    fn dimensions() {
        assert_eq!(build_layout(modes(4), 3, false).unwrap().dim(), 16);
        assert_eq!(build_layout(modes(2), 5, true).unwrap().dim(), 24);
        assert_eq!(build_layout(modes(1), 0, false), Err(Error::TruncationTooSmall(0)));
        assert_eq!(build_layout(vec![], 2, false), Err(Error::EmptyModeSet));
    }

    #[test]
    fn duplicate_mode_is_named() {
        let mut m = modes(2);
        m.push(m[1]);
        match build_layout(m, 2, false) {
            Err(Error::DuplicateMode(msg)) => assert!(msg.contains("omega=2")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn declared_ordering() {
        let l = build_layout(modes(2), 2, false).unwrap();
        assert_eq!(l.flatten(BasisIndex::new(1, 2)).unwrap(), 5);
        let la = build_layout(modes(2), 2, true).unwrap();
        assert_eq!(la.flatten(BasisIndex::with_atom(0, 0, AtomLevel::Excited)).unwrap(), 6);
        assert_eq!(la.flatten(BasisIndex::new(0, 0)).map_err(|_| ()), Err(()));
        assert_eq!(l.flatten(BasisIndex::with_atom(0, 0, AtomLevel::Ground)), Err(Error::NoAtomFactor));
        assert!(l.flatten(BasisIndex::new(0, 3)).is_err());
        assert!(l.unflatten(6).is_err());
    }

    #[test]
    fn index_bijection() {
        for atom in [false, true] {
            let l = build_layout(modes(3), 4, atom).unwrap();
            for i in 0..l.dim() {
                assert_eq!(l.flatten(l.unflatten(i).unwrap()).unwrap(), i);
            }
        }
    }
}
