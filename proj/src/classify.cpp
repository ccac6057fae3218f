#include "meander/classify.hpp"

#include "meander/disks.hpp"

namespace meander {

classification classify(const seq_t& seq) {
    const int n = static_cast<int>(seq.size());
    const bool ident = is_identity(seq);
    if (ident || is_reversal(seq)) {
        if (n >= 3) return {meander_kind::snake, !ident};
        return {meander_kind::irreducible, false};
    }
    bool mid_width = false;
    for (const disk& d : disk_classes(seq, 3))
        if (d.width() < n) {
            mid_width = true;
            break;
        }
    if (!mid_width) return {meander_kind::irreducible, false};
    if (!articulation_classes(seq).empty()) return {meander_kind::composite, false};
    throw integrity_error("prime non-snake non-irreducible meander: impossible");
}

}  // namespace meander
