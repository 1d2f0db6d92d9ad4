//! Items and input instances.
//!
//! An instance is an ordered sequence; the order is semantically binding.
//! Offline solutions must assign items in exactly this order, so there is
//! no notion of permuting an instance anywhere in this crate.

use crate::color::Color;
use crate::size::Size;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeSet;

/// One input item: a size, a color, and its 1-based position in the instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Item {
    pub index: usize,
    pub color: Color,
    pub size: Size,
}

/// An ordered sequence of items with consecutive indices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Instance {
    items: Vec<Item>,
}

impl Instance {
    pub fn new(items: Vec<(Color, Size)>) -> Instance {
        let items = items
            .into_iter()
            .enumerate()
            .map(|(pos, (color, size))| Item {
                index: pos + 1,
                color,
                size,
            })
            .collect();
        Instance { items }
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Looks up an item by its 1-based index.
    pub fn get(&self, index: usize) -> Option<&Item> {
        if index == 0 {
            return None;
        }
        self.items.get(index - 1)
    }

    /// Distinct colors in ascending token order.
    pub fn palette(&self) -> Vec<&Color> {
        let set: BTreeSet<&Color> = self.items.iter().map(|it| &it.color).collect();
        set.into_iter().collect()
    }

    pub fn total_size(&self) -> BigRational {
        self.items
            .iter()
            .fold(BigRational::zero(), |acc, it| acc + it.size.value())
    }

    pub fn all_zero_size(&self) -> bool {
        self.items.iter().all(|it| it.size.is_zero())
    }
}
