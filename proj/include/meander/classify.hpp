#pragma once

#include "meander/perm.hpp"

namespace meander {

enum class meander_kind { irreducible, snake, composite };

struct classification {
    meander_kind kind = meander_kind::irreducible;
    bool inverse = false;  // snake direction; meaningful only for snakes
};

// Total classification: identity/reversal of order >= 3 are the snakes
// (orders 1-2 count as irreducible); no disk class of width strictly between
// 2 and n means irreducible; an articulation class means composite. The
// remaining combination (prime but neither) cannot occur on valid meanders.
classification classify(const seq_t& seq);

}  // namespace meander
