#include "meander/decompose.hpp"

#include <algorithm>
#include <sstream>

#include "meander/classify.hpp"
#include "meander/surgery.hpp"

namespace meander {

std::vector<disk> select_s(const seq_t& seq) {
    if (classify(seq).kind != meander_kind::composite)
        throw std::invalid_argument("select_s requires a composite meander");
    std::vector<disk> out;
    for (const disk& d : articulation_classes(seq))
        if (classify(pattern_of(seq, d.lo, d.hi)).kind != meander_kind::composite)
            out.push_back(d);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (!(out[j].lo > out[i].hi || out[i].lo > out[j].hi))
                throw integrity_error("selected prime classes overlap");
    return out;  // articulation_classes already sorts by lo
}

namespace {

struct marker {
    int value;  // current label of the collapsed factor (point or cup start)
    int width;  // 1 or 2
    tree_node node;
};

}  // namespace

tree_node decompose(const seq_t& seq) {
    seq_t cur = seq;
    std::vector<marker> pending;
    while (classify(cur).kind == meander_kind::composite) {
        const std::vector<disk> sel = select_s(cur);
        if (sel.empty()) throw integrity_error("composite meander with empty selection");
        for (auto it = sel.rbegin(); it != sel.rend(); ++it) {
            const int lo = it->lo, hi = it->hi;
            const int w = hi - lo + 1;
            const classification pc = classify(pattern_of(cur, lo, hi));
            tree_node node;
            node.black = (pc.kind == meander_kind::irreducible);
            node.ord = w;
            for (const marker& mk : pending) {
                const bool head_in = lo <= mk.value && mk.value <= hi;
                const bool tail_in = lo <= mk.value + mk.width - 1 && mk.value + mk.width - 1 <= hi;
                if (head_in != tail_in) throw integrity_error("marker straddles a cut");
                if (head_in) node.children.push_back(mk.node);
            }
            std::erase_if(pending, [&](const marker& mk) { return lo <= mk.value && mk.value <= hi; });
            cur = cut(cur, lo, hi);
            const int shift = (w % 2 == 1) ? w - 1 : w - 2;
            for (marker& mk : pending)
                if (mk.value > hi) mk.value -= shift;
            pending.push_back({lo, (w % 2 == 1) ? 1 : 2, std::move(node)});
            std::sort(pending.begin(), pending.end(),
                      [](const marker& a, const marker& b) { return a.value < b.value; });
        }
    }
    const classification rc = classify(cur);
    tree_node root;
    root.black = (rc.kind == meander_kind::irreducible);
    root.ord = static_cast<int>(cur.size());
    for (marker& mk : pending) root.children.push_back(std::move(mk.node));
    return root;
}

bool root_black(const seq_t& seq) { return decompose(seq).black; }

int tree_ord(const tree_node& t) {
    int total = t.ord;
    const auto rec = [&](const tree_node& v, const auto& self) -> void {
        for (const tree_node& c : v.children) {
            total += c.ord - 2 + c.ord % 2;
            self(c, self);
        }
    };
    rec(t, rec);
    return total;
}

namespace {

void node_json(const tree_node& t, std::ostringstream& os) {
    os << "{\"color\":\"" << (t.black ? "black" : "white") << "\",\"ord\":" << t.ord
       << ",\"children\":[";
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) os << ",";
        node_json(t.children[i], os);
    }
    os << "]}";
}

}  // namespace

std::string tree_json(const tree_node& t) {
    std::ostringstream os;
    node_json(t, os);
    return os.str();
}

}  // namespace meander
