use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest palette a [`ColorSet`] can hold.
pub const MAX_PALETTE: usize = 256;

const WORDS: usize = MAX_PALETTE / 64;

/// A color in `1..=k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Color(u16);

impl Color {
    /// Panics on 0 or on values past [`MAX_PALETTE`].
    pub fn new(value: usize) -> Self {
        assert!(
            (1..=MAX_PALETTE).contains(&value),
            "color {value} outside 1..={MAX_PALETTE}"
        );
        Color(value as u16)
    }

    pub fn try_new(value: usize) -> Option<Self> {
        (1..=MAX_PALETTE).contains(&value).then_some(Color(value as u16))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Fixed-width bit set over colors `1..=MAX_PALETTE`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ColorSet([u64; WORDS]);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet([0; WORDS]);

    /// `[k] = {1, ..., k}`.
    pub fn palette(k: usize) -> Self {
        assert!(k <= MAX_PALETTE);
        let mut s = ColorSet::EMPTY;
        for c in 1..=k {
            s.insert(Color::new(c));
        }
        s
    }

    #[inline]
    fn slot(c: Color) -> (usize, u64) {
        let i = c.get() - 1;
        (i / 64, 1u64 << (i % 64))
    }

    #[inline]
    pub fn insert(&mut self, c: Color) -> bool {
        let (w, bit) = Self::slot(c);
        let fresh = self.0[w] & bit == 0;
        self.0[w] |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, c: Color) -> bool {
        let (w, bit) = Self::slot(c);
        let present = self.0[w] & bit != 0;
        self.0[w] &= !bit;
        present
    }

    #[inline]
    pub fn contains(&self, c: Color) -> bool {
        let (w, bit) = Self::slot(c);
        self.0[w] & bit != 0
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &ColorSet) -> ColorSet {
        ColorSet(std::array::from_fn(|i| self.0[i] | other.0[i]))
    }

    pub fn intersection(&self, other: &ColorSet) -> ColorSet {
        ColorSet(std::array::from_fn(|i| self.0[i] & other.0[i]))
    }

    pub fn difference(&self, other: &ColorSet) -> ColorSet {
        ColorSet(std::array::from_fn(|i| self.0[i] & !other.0[i]))
    }

    pub fn is_disjoint(&self, other: &ColorSet) -> bool {
        self.intersection(other).is_empty()
    }

    pub fn min(&self) -> Option<Color> {
        self.iter().next()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(Color((w * 64 + b + 1) as u16))
            })
        })
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(Color::get)).finish()
    }
}

/// Colors with multiplicities. `counts[c]` is the multiplicity of color `c`;
/// trailing zeros are trimmed so equal multisets compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ColorMultiset {
    counts: Vec<u32>,
}

impl ColorMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Color, u32)>>(pairs: I) -> Self {
        let mut s = Self::new();
        for (c, t) in pairs {
            s.add_many(c, t);
        }
        s
    }

    pub fn add(&mut self, c: Color) {
        self.add_many(c, 1);
    }

    pub fn add_many(&mut self, c: Color, times: u32) {
        if times == 0 {
            return;
        }
        if self.counts.len() <= c.get() {
            self.counts.resize(c.get() + 1, 0);
        }
        self.counts[c.get()] += times;
    }

    /// mult(x).
    pub fn mult(&self, c: Color) -> u32 {
        self.counts.get(c.get()).copied().unwrap_or(0)
    }

    /// ‖S‖, the cardinality counted with multiplicity.
    pub fn cardinality(&self) -> u64 {
        self.counts.iter().map(|&t| u64::from(t)).sum()
    }

    /// Distinct members.
    pub fn support(&self) -> ColorSet {
        self.iter().map(|(c, _)| c).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&t| t == 0)
    }

    /// `S1 ⊎ S2`: multiplicities add.
    pub fn join(&self, other: &ColorMultiset) -> ColorMultiset {
        let len = self.counts.len().max(other.counts.len());
        let counts = (0..len)
            .map(|i| self.counts.get(i).unwrap_or(&0) + other.counts.get(i).unwrap_or(&0))
            .collect();
        ColorMultiset { counts }
    }

    /// `(color, multiplicity)` for every member, ascending by color.
    pub fn iter(&self) -> impl Iterator<Item = (Color, u32)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|&(_, &t)| t > 0)
            .map(|(c, &t)| (Color::new(c), t))
    }
}

impl From<ColorSet> for ColorMultiset {
    fn from(set: ColorSet) -> Self {
        ColorMultiset::from_pairs(set.iter().map(|c| (c, 1)))
    }
}

impl FromIterator<Color> for ColorMultiset {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorMultiset::new();
        for c in iter {
            s.add(c);
        }
        s
    }
}
