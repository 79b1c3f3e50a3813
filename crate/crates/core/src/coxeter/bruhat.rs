use super::{ElementId, GroupTable};

/// Bruhat order test by descent recursion: for `s` in `L(y)`,
/// `x <= y` iff `min(x, sx) <= sy`.
pub fn bruhat_leq(g: &GroupTable, mut x: ElementId, mut y: ElementId) -> bool {
    loop {
        let (lx, ly) = (g.length(x), g.length(y));
        if lx >= ly {
            return x == y;
        }
        if lx == 0 {
            return true;
        }
        let s = g.left_descents(y).trailing_zeros() as usize;
        y = g.lmul(s, y);
        if g.is_left_descent(s, x) {
            x = g.lmul(s, x);
        }
    }
}

/// Every lower Bruhat interval `[e, y]` as a bitset, for O(1) comparisons.
///
/// Memory is `|W|^2 / 8` bytes (26 MB for H4).
#[derive(Clone, Debug)]
pub struct BruhatIntervals {
    size: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BruhatIntervals {
    pub fn new(g: &GroupTable) -> Self {
        let size = g.size();
        let words = size.div_ceil(64);
        let mut bits = vec![0u64; size * words];
        bits[0] = 1;
        for y in g.elements().skip(1) {
            // [e, y] = [e, u] + s[e, u] where y = s u > u.
            let s = g.left_descents(y).trailing_zeros() as usize;
            let u = g.lmul(s, y).index();
            let (head, tail) = bits.split_at_mut(y.index() * words);
            let src = &head[u * words..(u + 1) * words];
            let dst = &mut tail[..words];
            dst.copy_from_slice(src);
            for (wi, &word) in src.iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let b = wi * 64 + w.trailing_zeros() as usize;
                    w &= w - 1;
                    let sx = g.lmul(s, ElementId(b as u32)).index();
                    dst[sx / 64] |= 1 << (sx % 64);
                }
            }
        }
        BruhatIntervals { size, words, bits }
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        let row = y.index() * self.words;
        self.bits[row + x.index() / 64] >> (x.index() % 64) & 1 == 1
    }

    /// The bitset of `[e, y]`, one bit per element id.
    pub fn lower_bits(&self, y: ElementId) -> &[u64] {
        let row = y.index() * self.words;
        &self.bits[row..row + self.words]
    }

    pub fn lower(&self, y: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        iter_bits(self.lower_bits(y))
    }

    pub fn interval_size(&self, y: ElementId) -> usize {
        self.lower_bits(y).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn group_size(&self) -> usize {
        self.size
    }
}

pub(crate) fn iter_bits(bits: &[u64]) -> impl Iterator<Item = ElementId> + '_ {
    bits.iter().enumerate().flat_map(|(wi, &word)| {
        let mut w = word;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros();
            w &= w - 1;
            Some(ElementId(wi as u32 * 64 + b))
        })
    })
}
