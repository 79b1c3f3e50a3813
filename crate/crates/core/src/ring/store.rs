use std::collections::HashMap;
use std::hash::Hash;

/// Interning table: each distinct value is kept once and addressed by a
/// `u32` handle. Equal handles mean equal values.
#[derive(Clone, Debug)]
pub struct PolyStore<T> {
    items: Vec<T>,
    index: HashMap<T, u32>,
}

impl<T: Clone + Eq + Hash> Default for PolyStore<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Clone + Eq + Hash> PolyStore<T> {
    pub fn new() -> Self {
        PolyStore {
            items: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn intern(&mut self, value: T) -> u32 {
        if let Some(&h) = self.index.get(&value) {
            return h;
        }
        let h = u32::try_from(self.items.len()).expect("more than 2^32 distinct polynomials");
        self.items.push(value.clone());
        self.index.insert(value, h);
        h
    }

    pub fn lookup(&self, value: &T) -> Option<u32> {
        self.index.get(value).copied()
    }

    #[inline]
    pub fn get(&self, handle: u32) -> &T {
        &self.items[handle as usize]
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.items.iter()
    }

    /// Interns every value of `other`, returning the handle translation.
    pub fn merge(&mut self, other: &PolyStore<T>) -> Vec<u32> {
        other.items.iter().map(|p| self.intern(p.clone())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::QPoly;

    #[test]
    fn equal_values_share_a_handle() {
        let mut s = PolyStore::new();
        let a = s.intern(QPoly::from_coeffs(vec![1, 1]));
        let b = s.intern(QPoly::one());
        let c = s.intern(QPoly::from_coeffs(vec![1, 1]));
        assert_eq!(a, c);
        assert_ne!(a, b);
        assert_eq!(s.len(), 2);
        assert_eq!(s.get(b), &QPoly::one());
    }

    #[test]
    fn merge_is_monotone() {
        let mut s = PolyStore::new();
        s.intern(1i64);
        s.intern(2);
        let mut t = PolyStore::new();
        t.intern(2i64);
        t.intern(3);
        let map = s.merge(&t);
        assert_eq!(map, vec![1, 2]);
        assert_eq!(s.len(), 3);
    }
}
