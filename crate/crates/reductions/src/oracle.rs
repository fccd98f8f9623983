use std::cell::Cell;

/// Read access to an input string that counts how many symbols were read.
pub struct Reader<'a, T> {
    data: &'a [T],
    reads: Cell<usize>,
}

impl<'a, T: Clone> Reader<'a, T> {
    pub fn new(data: &'a [T]) -> Self {
        Reader { data, reads: Cell::new(0) }
    }

    pub fn get(&self, i: usize) -> T {
        self.reads.set(self.reads.get() + 1);
        self.data[i].clone()
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn reads(&self) -> usize {
        self.reads.get()
    }

    pub fn reset(&self) {
        self.reads.set(0);
    }
}
