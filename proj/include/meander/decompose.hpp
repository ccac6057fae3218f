#pragma once

#include <string>
#include <vector>

#include "meander/disks.hpp"
#include "meander/perm.hpp"

namespace meander {

// Construction tree: black nodes carry irreducible factors, white ones
// snakes; ord is the factor's order. A child of order k was inserted into
// its parent and contributes k-2 (even) or k-1 (odd) extra crossings, so
// ord(root) + sum of contributions recovers the decomposed meander's order.
struct tree_node {
    bool black = false;
    int ord = 0;
    std::vector<tree_node> children;
};

// articulation classes whose restriction is prime; pairwise disjoint
// (asserted), sorted by lo. Requires a composite meander.
std::vector<disk> select_s(const seq_t& seq);

// Canonical decomposition: repeatedly cut the selected classes right to
// left until the remainder is prime. Cut factors become children of the
// factor whose later cut swallows their collapsed marker; leftovers attach
// to the root. Child order follows marker position, so the result is
// deterministic.
tree_node decompose(const seq_t& seq);

bool root_black(const seq_t& seq);

// ord(root) + sum over non-root nodes of ord-2+(ord mod 2)
int tree_ord(const tree_node& t);

// nested {"color":...,"ord":...,"children":[...]} with stable child order
std::string tree_json(const tree_node& t);

}  // namespace meander
