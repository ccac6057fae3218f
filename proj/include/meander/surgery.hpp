#pragma once

#include <utility>

#include "meander/perm.hpp"

namespace meander {

// curve positions (0-based, inclusive) occupied by values lo..hi;
// throws not_disk_error when they are not contiguous
std::pair<int, int> block_span(const seq_t& seq, int lo, int hi);

// Whether the disk [lo..hi] induces the global line orientation. Decided by
// where the entry/exit stubs attach: odd width is always left; for even
// width the stub values around the block settle it, nesting breaking the
// tie when both stubs leave on the same side.
bool frame_left(const seq_t& seq, int lo, int hi);

// the restriction of the meander to the disk, as an order-(hi-lo+1) meander;
// reads the block in curve order and complements when the frame is right
seq_t pattern_of(const seq_t& seq, int lo, int hi);

// collapse the disk to a point (odd width) or a cup (even width); the cup
// keeps the frame orientation, so in host coordinates it may read reversed
seq_t cut(const seq_t& seq, int lo, int hi);

// inverse surgery: replace an elementary disk (width 1 or 2) by guest;
// guest order must match the width's parity
seq_t insert(const seq_t& host, int lo, int hi, const seq_t& guest);

}  // namespace meander
