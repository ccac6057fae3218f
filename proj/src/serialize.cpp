#include "meander/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace meander {

std::string jsonl_line(const seq_t& seq) {
    std::ostringstream out;
    out << "{\"n\":" << seq.size() << ",\"perm\":[";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out << ',';
        out << seq[i];
    }
    out << "]}";
    return out.str();
}

namespace {

[[noreturn]] void line_fail(std::size_t lineno, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

std::vector<seq_t> parse_jsonl(std::istream& in) {
    std::vector<seq_t> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            line_fail(lineno, e.what());
        }
        if (!j.is_object() || !j.contains("n") || !j.contains("perm"))
            line_fail(lineno, "expected an object with \"n\" and \"perm\"");
        if (!j["n"].is_number_integer() || !j["perm"].is_array())
            line_fail(lineno, "\"n\" must be an integer and \"perm\" an array");
        seq_t seq;
        for (const auto& v : j["perm"]) {
            if (!v.is_number_integer()) line_fail(lineno, "\"perm\" entries must be integers");
            seq.push_back(v.get<int>());
        }
        if (static_cast<std::size_t>(j["n"].get<long long>()) != seq.size())
            line_fail(lineno, "\"n\" disagrees with the \"perm\" length");
        try {
            if (!validate(seq)) line_fail(lineno, "arcs self-intersect");
        } catch (const not_permutation_error& e) {
            line_fail(lineno, e.what());
        }
        out.push_back(std::move(seq));
    }
    return out;
}

std::vector<seq_t> parse_jsonl_string(const std::string& text) {
    std::istringstream in(text);
    return parse_jsonl(in);
}

namespace {

constexpr int kSpacing = 40;  // distance between adjacent crossings
constexpr int kMargin = 20;

int xpos(int p) { return kMargin + kSpacing * p; }  // p = 0..n+1, crossings at 1..n

void emit_arc(std::ostream& out, int pa, int pb, bool upper) {
    const int xa = xpos(std::min(pa, pb));
    const int xb = xpos(std::max(pa, pb));
    const int r = (xb - xa) / 2;
    out << "<path d=\"M " << xa << " 0 A " << r << ' ' << r << " 0 0 " << (upper ? 1 : 0)
        << ' ' << xb << " 0\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
}

}  // namespace

std::string svg_document(const seq_t& seq) {
    if (!validate(seq)) throw not_meander_error("arcs self-intersect");
    const arch_diagram d = to_arches(seq);
    const int n = d.n;

    int up_span = std::max(d.start_label, d.finish_below ? 0 : n + 1 - d.finish_label);
    int low_span = d.finish_below ? n + 1 - d.finish_label : 0;
    for (const auto& [a, b] : d.upper) up_span = std::max(up_span, std::abs(b - a));
    for (const auto& [a, b] : d.lower) low_span = std::max(low_span, std::abs(b - a));

    const int width = 2 * kMargin + kSpacing * (n + 1);
    const int above = (up_span * kSpacing) / 2 + kMargin;
    const int below = (low_span * kSpacing) / 2 + kMargin + 18;  // room for labels
    const int cy = above;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << above + below << "\" viewBox=\"0 0 " << width << ' ' << above + below << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << above + below
        << "\" fill=\"white\"/>\n";
    out << "<line x1=\"0\" y1=\"" << cy << "\" x2=\"" << width << "\" y2=\"" << cy
        << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    out << "<g transform=\"translate(0 " << cy << ")\">\n";
    emit_arc(out, 0, d.start_label, true);
    for (const auto& [a, b] : d.lower) emit_arc(out, a, b, false);
    for (const auto& [a, b] : d.upper) emit_arc(out, a, b, true);
    emit_arc(out, d.finish_label, n + 1, !d.finish_below);
    for (int p = 1; p <= n; ++p)
        out << "<circle cx=\"" << xpos(p) << "\" cy=\"0\" r=\"3\" fill=\"black\"/>\n";
    out << "</g>\n";
    for (int p = 1; p <= n; ++p)
        out << "<text x=\"" << xpos(p) << "\" y=\"" << above + below - 6
            << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" << p
            << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace meander
