#include "meander/census.hpp"

#include <mutex>

#include "meander/classify.hpp"
#include "meander/decompose.hpp"
#include "meander/disks.hpp"
#include "meander/enumerate.hpp"

namespace meander {

census_result run_census(int n, int threads, bool with_roots) {
    if (n < 1 || n > max_census_order)
        throw range_error("census order outside the supported 1..14 range");
    census_result total;
    total.n = n;
    std::mutex mu;
    for_each_prefix_task(n, threads, [&](const prefix_task& t) {
        census_result local;
        seq_t seq(n);
        enumerate_prefix(n, t, [&](const int* s, int order) {
            seq.assign(s, s + order);
            ++local.total;
            const classification c = classify(seq);
            switch (c.kind) {
                case meander_kind::irreducible: ++local.irreducible; break;
                case meander_kind::snake: ++local.snake; break;
                case meander_kind::composite: ++local.composite; break;
            }
            const int ncups = static_cast<int>(cups(seq).size());
            ++local.cups_hist[ncups];
            if (c.kind == meander_kind::irreducible) ++local.irr_by_cups[ncups];
            if (with_roots) {
                if (root_black(seq))
                    ++local.black_started;
                else
                    ++local.white_started;
            }
            return true;
        });
        std::lock_guard<std::mutex> lk(mu);
        total.total += local.total;
        total.irreducible += local.irreducible;
        total.snake += local.snake;
        total.composite += local.composite;
        total.black_started += local.black_started;
        total.white_started += local.white_started;
        for (auto [k, v] : local.cups_hist) total.cups_hist[k] += v;
        for (auto [k, v] : local.irr_by_cups) total.irr_by_cups[k] += v;
    });
    return total;
}

}  // namespace meander
