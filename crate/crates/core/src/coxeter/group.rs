use std::collections::HashMap;
use std::fmt;

use super::roots::RootSystem;
use super::{CoxeterError, CoxeterMatrix};

/// Index of a group element in ShortLex order. Id 0 is the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElementId(pub u32);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Default cap on the group order accepted by [`build_group`].
pub const DEFAULT_MAX_ORDER: usize = 2_000_000;

/// Fully enumerated finite Coxeter group.
///
/// Elements are numbered breadth-first in ShortLex order of their normal
/// forms, so ids are sorted by length.
#[derive(Clone, Debug)]
pub struct GroupTable {
    matrix: CoxeterMatrix,
    num_positive_roots: usize,
    length: Vec<u16>,
    left_desc: Vec<u8>,
    right_desc: Vec<u8>,
    inverse: Vec<u32>,
    /// `left[x * rank + s]` is `s x`.
    left: Vec<u32>,
    /// `right[x * rank + s]` is `x s`.
    right: Vec<u32>,
    /// First letter of the normal form and the element obtained by removing it.
    first: Vec<u8>,
    tail: Vec<u32>,
    longest: u32,
}

pub fn build_group(m: &CoxeterMatrix) -> Result<GroupTable, CoxeterError> {
    build_group_with_limit(m, DEFAULT_MAX_ORDER)
}

pub fn build_group_with_limit(m: &CoxeterMatrix, max_order: usize) -> Result<GroupTable, CoxeterError> {
    let roots = RootSystem::build(m)?;
    let n = m.rank();
    let nroots = roots.num_positive();

    // Elements are identified by their left inversion sets
    // N(w) = { beta > 0 : w^-1 beta < 0 }, one bit per positive root.
    let act = |s: usize, set: u128| -> u128 {
        let mut out = 0u128;
        let mut bits = set;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if let Some(img) = roots.reflection_image(s, b) {
                out |= 1u128 << img;
            }
        }
        out
    };
    // N(s w) = s(N(w) \ {alpha_s}) if alpha_s in N(w), else {alpha_s} + s N(w).
    let mult = |s: usize, set: u128| -> u128 {
        let bit = 1u128 << s;
        if set & bit != 0 {
            act(s, set & !bit)
        } else {
            act(s, set) | bit
        }
    };
    let simple_mask: u128 = (1u128 << n) - 1;

    let mut ids: HashMap<u128, u32> = HashMap::new();
    let mut sets: Vec<u128> = vec![0];
    let mut first: Vec<u8> = vec![u8::MAX];
    let mut tail: Vec<u32> = vec![0];
    let mut length: Vec<u16> = vec![0];
    ids.insert(0, 0);
    let mut level: Vec<u32> = vec![0];
    let mut depth = 0u16;
    while !level.is_empty() {
        let mut fresh: HashMap<u128, (u8, u32)> = HashMap::new();
        for &x in &level {
            let nx = sets[x as usize];
            for s in 0..n {
                if nx & (1u128 << s) != 0 {
                    continue;
                }
                let y = mult(s, nx);
                if ids.contains_key(&y) || fresh.contains_key(&y) {
                    continue;
                }
                let f = (y & simple_mask).trailing_zeros() as usize;
                let parent = ids[&mult(f, y)];
                fresh.insert(y, (f as u8, parent));
            }
        }
        let mut fresh: Vec<(u8, u32, u128)> = fresh.into_iter().map(|(y, (f, p))| (f, p, y)).collect();
        fresh.sort_unstable();
        depth += 1;
        level.clear();
        for (f, p, y) in fresh {
            let id = sets.len() as u32;
            if sets.len() >= max_order {
                return Err(CoxeterError::GroupTooLarge { limit: max_order });
            }
            ids.insert(y, id);
            sets.push(y);
            first.push(f);
            tail.push(p);
            length.push(depth);
            level.push(id);
        }
    }

    let size = sets.len();
    let mut left = vec![0u32; size * n];
    let mut left_desc = vec![0u8; size];
    for x in 0..size {
        assert_eq!(
            sets[x].count_ones() as u16,
            length[x],
            "length differs from inversion count"
        );
        for s in 0..n {
            left[x * n + s] = ids[&mult(s, sets[x])];
        }
        left_desc[x] = (sets[x] & simple_mask) as u8;
    }
    drop(ids);
    drop(sets);

    let mut table = GroupTable {
        matrix: m.clone(),
        num_positive_roots: nroots,
        length,
        left_desc,
        right_desc: vec![0; size],
        inverse: vec![0; size],
        left,
        right: vec![0; size * n],
        first,
        tail,
        longest: (size - 1) as u32,
    };
    for x in 0..size {
        let mut cur = 0u32;
        for s in table.word(ElementId(x as u32)) {
            cur = table.left[cur as usize * n + s];
        }
        table.inverse[x] = cur;
    }
    for x in 0..size {
        let xi = table.inverse[x] as usize;
        table.right_desc[x] = table.left_desc[xi];
        for s in 0..n {
            table.right[x * n + s] = table.inverse[table.left[xi * n + s] as usize];
        }
    }
    let max_len = table.length[size - 1];
    assert_eq!(
        table.length.iter().filter(|&&l| l == max_len).count(),
        1,
        "finite Coxeter group must have a unique longest element"
    );
    Ok(table)
}

impl GroupTable {
    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn name(&self) -> &str {
        self.matrix.name()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn size(&self) -> usize {
        self.length.len()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.num_positive_roots
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = ElementId> + ExactSizeIterator {
        (0..self.size() as u32).map(ElementId)
    }

    pub fn identity(&self) -> ElementId {
        ElementId::IDENTITY
    }

    pub fn longest(&self) -> ElementId {
        ElementId(self.longest)
    }

    #[inline]
    pub fn length(&self, x: ElementId) -> u32 {
        self.length[x.index()] as u32
    }

    /// Left descent set as a bitmask over generators.
    #[inline]
    pub fn left_descents(&self, x: ElementId) -> u8 {
        self.left_desc[x.index()]
    }

    #[inline]
    pub fn right_descents(&self, x: ElementId) -> u8 {
        self.right_desc[x.index()]
    }

    /// `LR(x)`: left descents in the low byte, right descents in the high byte.
    #[inline]
    pub fn lr_descents(&self, x: ElementId) -> u16 {
        self.left_desc[x.index()] as u16 | (self.right_desc[x.index()] as u16) << 8
    }

    #[inline]
    pub fn is_left_descent(&self, s: usize, x: ElementId) -> bool {
        self.left_desc[x.index()] >> s & 1 == 1
    }

    #[inline]
    pub fn is_right_descent(&self, x: ElementId, s: usize) -> bool {
        self.right_desc[x.index()] >> s & 1 == 1
    }

    /// `s x`.
    #[inline]
    pub fn lmul(&self, s: usize, x: ElementId) -> ElementId {
        ElementId(self.left[x.index() * self.rank() + s])
    }

    /// `x s`.
    #[inline]
    pub fn rmul(&self, x: ElementId, s: usize) -> ElementId {
        ElementId(self.right[x.index() * self.rank() + s])
    }

    #[inline]
    pub fn inverse(&self, x: ElementId) -> ElementId {
        ElementId(self.inverse[x.index()])
    }

    /// ShortLex normal form, as 0-based generator indices.
    pub fn word(&self, x: ElementId) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.length(x) as usize);
        let mut cur = x.index();
        while cur != 0 {
            w.push(self.first[cur] as usize);
            cur = self.tail[cur] as usize;
        }
        w
    }

    /// The product of the generators in `word`, read left to right.
    pub fn element_from_word(&self, word: &[usize]) -> Result<ElementId, CoxeterError> {
        let mut cur = ElementId::IDENTITY;
        for &s in word.iter().rev() {
            if s >= self.rank() {
                return Err(CoxeterError::BadGenerator { generator: s, rank: self.rank() });
            }
            cur = self.lmul(s, cur);
        }
        Ok(cur)
    }

    /// Normal form with 1-based generator digits, `e` for the identity.
    pub fn word_string(&self, x: ElementId) -> String {
        let w = self.word(x);
        if w.is_empty() {
            return "e".into();
        }
        w.iter().map(|s| char::from(b'1' + *s as u8)).collect()
    }

    /// Number of elements of each length `0..=l(w0)`.
    pub fn length_distribution(&self) -> Vec<usize> {
        let mut d = vec![0; self.length(self.longest()) as usize + 1];
        for &l in &self.length {
            d[l as usize] += 1;
        }
        d
    }
}
