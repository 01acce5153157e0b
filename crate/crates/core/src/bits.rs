//! Subsets of small carriers as `u64` bitmasks over the canonical element order.

/// A subset of a carrier with at most [`MAX_CARRIER`] elements.
pub type Mask = u64;

/// Largest carrier a mask can index.
pub const MAX_CARRIER: usize = 64;

#[inline]
pub fn bit(i: usize) -> Mask {
    1u64 << i
}

#[inline]
pub fn contains(mask: Mask, i: usize) -> bool {
    mask & bit(i) != 0
}

/// The mask with the low `n` bits set.
#[inline]
pub fn full(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

#[inline]
pub fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

/// Iterates the set positions of `mask` in increasing order.
pub fn ones(mask: Mask) -> Ones {
    Ones(mask)
}

#[derive(Clone, Copy, Debug)]
pub struct Ones(Mask);

impl Iterator for Ones {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Ones {}

pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Mask {
    it.into_iter().fold(0, |m, i| m | bit(i))
}

/// Renders a subset as `{a,b}` using the supplied element labels.
pub fn render(mask: Mask, labels: &[String]) -> String {
    let parts: Vec<&str> = ones(mask).map(|i| labels[i].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_iterates_in_order() {
        assert_eq!(ones(0b1011_0010).collect::<Vec<_>>(), vec![1, 4, 5, 7]);
        assert_eq!(ones(0).count(), 0);
        assert_eq!(ones(u64::MAX).count(), 64);
    }

    #[test]
    fn full_masks() {
        assert_eq!(full(0), 0);
        assert_eq!(full(3), 0b111);
        assert_eq!(full(64), u64::MAX);
    }

    #[test]
    fn render_uses_labels() {
        let labels = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        assert_eq!(render(0b101, &labels), "{a,c}");
        assert_eq!(render(0, &labels), "{}");
    }
}
