#include "tightcalc/multicurve.hpp"

#include <algorithm>
#include <charconv>

#include "tightcalc/slope.hpp"

namespace tightcalc::multicurve {

namespace {

std::vector<std::int64_t> parse_list(std::string_view text, std::size_t expected) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty())
            throw ParseError("not an integer: '" + std::string(piece) + "'");
        if (v < 0) throw ParseError("negative count: '" + std::string(piece) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (out.size() != expected)
        throw ParseError("expected " + std::to_string(expected) + " values in '" + std::string(text) + "'");
    return out;
}

}  // namespace

BoundaryData BoundaryData::parse(std::string_view text) {
    auto v = parse_list(text, 3);
    return {v[0], v[1], v[2]};
}

std::string BoundaryData::str() const {
    return std::to_string(k1) + "," + std::to_string(k2) + "," + std::to_string(k3);
}

std::string MulticurveCoordinates::str() const {
    return "(" + std::to_string(n12) + "," + std::to_string(n13) + "," + std::to_string(n23) + "|" +
           std::to_string(b1) + "," + std::to_string(b2) + "," + std::to_string(b3) + ")";
}

MulticurveCoordinates MulticurveCoordinates::parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw ParseError("coordinates must look like (n12,n13,n23|b1,b2,b3)");
    text = text.substr(1, text.size() - 2);
    auto bar = text.find('|');
    if (bar == std::string_view::npos) throw ParseError("missing '|' in coordinates");
    auto n = parse_list(text.substr(0, bar), 3);
    auto b = parse_list(text.substr(bar + 1), 3);
    return {n[0], n[1], n[2], b[0], b[1], b[2], std::nullopt};
}

bool satisfies_endpoints(const BoundaryData& bd, const MulticurveCoordinates& m) {
    for (auto v : m.tuple()) {
        if (v < 0) return false;
    }
    return m.n12 + m.n13 + 2 * m.b1 == 2 * bd.k1 && m.n12 + m.n23 + 2 * m.b2 == 2 * bd.k2 &&
           m.n13 + m.n23 + 2 * m.b3 == 2 * bd.k3;
}

std::vector<MulticurveCoordinates> enumerate(const BoundaryData& bd, bool allow_boundary_parallel) {
    if (bd.k1 < 0 || bd.k2 < 0 || bd.k3 < 0) throw DomainError("boundary data must be nonnegative");
    std::vector<MulticurveCoordinates> out;
    const std::int64_t top1 = allow_boundary_parallel ? bd.k1 : 0;
    const std::int64_t top2 = allow_boundary_parallel ? bd.k2 : 0;
    const std::int64_t top3 = allow_boundary_parallel ? bd.k3 : 0;
    for (std::int64_t b1 = 0; b1 <= top1; ++b1) {
        for (std::int64_t b2 = 0; b2 <= top2; ++b2) {
            for (std::int64_t b3 = 0; b3 <= top3; ++b3) {
                // Half the free endpoints on each circle; the three arc counts
                // are then forced: n12 = e1 + e2 - e3 and so on.
                const std::int64_t e1 = bd.k1 - b1, e2 = bd.k2 - b2, e3 = bd.k3 - b3;
                MulticurveCoordinates m{e1 + e2 - e3, e1 + e3 - e2, e2 + e3 - e1, b1, b2, b3, std::nullopt};
                if (m.n12 >= 0 && m.n13 >= 0 && m.n23 >= 0) out.push_back(m);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const MulticurveCoordinates& a, const MulticurveCoordinates& b) { return a.tuple() < b.tuple(); });
    return out;
}

bool is_tight_candidate(const MulticurveCoordinates& m) { return m.b1 == 0 && m.b2 == 0 && m.b3 == 0; }

std::size_t count(const BoundaryData& bd, bool allow_boundary_parallel) {
    return enumerate(bd, allow_boundary_parallel).size();
}

}  // namespace tightcalc::multicurve
