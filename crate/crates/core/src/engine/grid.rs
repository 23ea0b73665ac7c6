//! Lazily allocated tiled storage for one 32-bit word per cell.
//!
//! Cells are addressed by axial `(x, y)`. The directory is a dense square of
//! optional 64x64 tiles centred on the origin; it grows by doubling. Unvisited
//! tiles cost one null pointer.
//!
//! Word layout:
//!
//! ```text
//! live: bit 31 set | generation in bits 3..31 | parent direction in bits 0..3 (7 = none)
//! dead: bit 31 clear | last live neighbor direction in bits 3..6 | live neighbor count in bits 0..3
//! ```

pub(crate) const LIVE: u32 = 1 << 31;
pub(crate) const NO_PARENT: u32 = 7;
pub(crate) const MAX_GENERATION: u32 = (1 << 28) - 1;

const SHIFT: i32 = 6;
const TILE: usize = 1 << (2 * SHIFT);
const MASK: i32 = (1 << SHIFT) - 1;

#[inline]
pub(crate) fn is_live(w: u32) -> bool {
    w & LIVE != 0
}

#[inline]
pub(crate) fn live_word(generation: u32, parent_dir: u32) -> u32 {
    LIVE | (generation << 3) | parent_dir
}

#[inline]
pub(crate) fn generation_of(w: u32) -> u32 {
    (w & !LIVE) >> 3
}

#[inline]
pub(crate) fn dir_of(w: u32) -> u32 {
    w & 7
}

/// For a dead word: the number of live neighbors.
#[inline]
pub(crate) fn dead_count(w: u32) -> u32 {
    w & 7
}

/// For a dead word: the direction of the most recently born neighbor.
#[inline]
pub(crate) fn dead_toucher(w: u32) -> u32 {
    (w >> 3) & 7
}

#[derive(Clone, Debug)]
pub(crate) struct TileGrid {
    half: i32,
    side: usize,
    tiles: Vec<Option<Box<[u32]>>>,
}

impl TileGrid {
    pub(crate) fn new() -> TileGrid {
        TileGrid {
            half: 1,
            side: 2,
            tiles: vec![None; 4],
        }
    }

    #[inline]
    fn slot(&self, x: i32, y: i32) -> Option<usize> {
        let tx = ((x >> SHIFT) + self.half) as u32;
        let ty = ((y >> SHIFT) + self.half) as u32;
        if tx < self.side as u32 && ty < self.side as u32 {
            Some(ty as usize * self.side + tx as usize)
        } else {
            None
        }
    }

    #[inline]
    fn local(x: i32, y: i32) -> usize {
        (((y & MASK) << SHIFT) | (x & MASK)) as usize
    }

    #[inline]
    pub(crate) fn get(&self, x: i32, y: i32) -> u32 {
        match self.slot(x, y).and_then(|s| self.tiles[s].as_deref()) {
            Some(tile) => tile[Self::local(x, y)],
            None => 0,
        }
    }

    /// Mutable access; the coordinate must be covered (see [`ensure_radius`]).
    #[inline]
    pub(crate) fn get_mut(&mut self, x: i32, y: i32) -> &mut u32 {
        let slot = self.slot(x, y).expect("grid radius not reserved");
        let tile = self.tiles[slot].get_or_insert_with(|| vec![0u32; TILE].into_boxed_slice());
        &mut tile[Self::local(x, y)]
    }

    /// The tile holding `(x, y)` and the cell's index in it, if the cell is
    /// not on the tile's border (so all its neighbors share the tile).
    #[inline]
    pub(crate) fn interior(&self, x: i32, y: i32) -> Option<(&[u32], usize)> {
        if !Self::is_interior(x, y) {
            return None;
        }
        let tile = self.tiles[self.slot(x, y)?].as_deref()?;
        Some((tile, Self::local(x, y)))
    }

    /// Mutable form of [`interior`](Self::interior); allocates the tile. The
    /// coordinate must be covered.
    #[inline]
    pub(crate) fn interior_mut(&mut self, x: i32, y: i32) -> Option<(&mut [u32], usize)> {
        if !Self::is_interior(x, y) {
            return None;
        }
        let slot = self.slot(x, y).expect("grid radius not reserved");
        let tile = self.tiles[slot].get_or_insert_with(|| vec![0u32; TILE].into_boxed_slice());
        Some((tile, Self::local(x, y)))
    }

    #[inline]
    fn is_interior(x: i32, y: i32) -> bool {
        let (lx, ly) = (x & MASK, y & MASK);
        lx > 0 && lx < MASK && ly > 0 && ly < MASK
    }

    /// Index offset of a neighbor inside a tile.
    #[inline]
    pub(crate) fn local_offset(dx: i32, dy: i32) -> isize {
        ((dy << SHIFT) + dx) as isize
    }

    /// Makes every coordinate with `|x|, |y| <= r` addressable.
    pub(crate) fn ensure_radius(&mut self, r: i32) {
        let needed = (r >> SHIFT) + 1;
        if needed <= self.half {
            return;
        }
        let mut half = self.half;
        while half < needed {
            half *= 2;
        }
        let side = 2 * half as usize;
        let mut tiles: Vec<Option<Box<[u32]>>> = vec![None; side * side];
        let shift = (half - self.half) as usize;
        for (i, tile) in self.tiles.drain(..).enumerate() {
            if tile.is_some() {
                let (tx, ty) = (i % self.side + shift, i / self.side + shift);
                tiles[ty * side + tx] = tile;
            }
        }
        self.half = half;
        self.side = side;
        self.tiles = tiles;
    }

    /// All live words with their coordinates, in storage order.
    pub(crate) fn live_words(&self) -> impl Iterator<Item = (i32, i32, u32)> + '_ {
        let side = self.side;
        let half = self.half;
        self.tiles.iter().enumerate().flat_map(move |(i, tile)| {
            let ox = ((i % side) as i32 - half) << SHIFT;
            let oy = ((i / side) as i32 - half) << SHIFT;
            tile.as_deref()
                .into_iter()
                .flat_map(|t| t.iter().enumerate())
                .filter(|(_, &w)| is_live(w))
                .map(move |(j, &w)| (ox + (j as i32 & MASK), oy + (j as i32 >> SHIFT), w))
        })
    }

    pub(crate) fn allocated_bytes(&self) -> usize {
        self.tiles.iter().flatten().count() * TILE * 4
            + self.tiles.len() * std::mem::size_of::<usize>()
    }
}
