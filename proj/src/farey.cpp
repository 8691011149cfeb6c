#include "tightcalc/farey.hpp"

#include <sstream>

namespace tightcalc::farey {

std::string FareyPath::str() const {
    std::string out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) out += ", ";
        out += vertices[i].str();
    }
    return out;
}

FareyPath FareyPath::parse(std::string_view text) {
    FareyPath path;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        path.vertices.push_back(Slope::parse(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return path;
}

bool is_increasing_edge_path(const FareyPath& path) {
    const auto& v = path.vertices;
    if (v.empty()) return false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i].is_infinite()) return false;
        if (!(v[i] < v[i + 1]) || !is_edge(v[i], v[i + 1])) return false;
    }
    return true;
}

SlopeInterval::SlopeInterval(Slope lower, Slope upper)
    : lower_(std::move(lower)), upper_(std::move(upper)), wraps_(upper_ < lower_) {
    if (lower_ == upper_) throw DomainError("degenerate interval at " + lower_.str());
}

bool SlopeInterval::contains(const Slope& x) const {
    if (!wraps_) return lower_ < x && x < upper_;
    return lower_ < x || x < upper_;
}

Integer intersection_number(const Slope& a, const Slope& b) {
    return abs(a.numerator() * b.denominator() - a.denominator() * b.numerator());
}

bool is_edge(const Slope& a, const Slope& b) { return intersection_number(a, b) == 1; }

Slope successor(const Slope& b) {
    if (b.is_infinite()) throw DomainError("successor is undefined at inf");
    const Integer& beta = b.numerator();
    const Integer& alpha = b.denominator();
    if (alpha == 1) return Slope::integer(beta + 1);
    // beta' * alpha - beta * alpha' = 1 forces beta * alpha' = -1 (mod alpha).
    // The quotient decreases as alpha' grows, so take alpha' in [1, alpha).
    ExtendedGcd e = extended_gcd(beta, alpha);
    Integer alpha_prime = (-e.x) % alpha;
    if (alpha_prime <= 0) alpha_prime += alpha;
    Integer beta_prime = (1 + beta * alpha_prime) / alpha;
    return Slope(beta_prime, alpha_prime);
}

Slope greatest_neighbor_below(const Slope& a, const Slope& upper) {
    if (!(a < upper)) throw DomainError("interval (" + a.str() + ", " + upper.str() + ") is empty");
    // Neighbors of a above a are (p' + t p) / (q' + t q) for t >= 0, with p'/q'
    // the successor; they decrease strictly toward a, so we want the least t
    // that lands below `upper`.
    Slope first = successor(a);
    if (first < upper) return first;
    const Integer& p = a.numerator();
    const Integer& q = a.denominator();
    const Integer& pp = first.numerator();
    const Integer& qq = first.denominator();
    const Integer& u = upper.numerator();
    const Integer& v = upper.denominator();
    // (pp + t p) v < u (qq + t q)  <=>  t (u q - p v) > pp v - u qq
    Integer gap = u * q - p * v;
    Integer t = floor_div(pp * v - u * qq, gap) + 1;
    if (t < 0) t = 0;
    return Slope(pp + t * p, qq + t * q);
}

FareyPath shortest_increasing_path(const Slope& from, const Slope& to) {
    if (!(from < to)) throw DomainError("increasing path needs " + from.str() + " < " + to.str());
    // Farey edges never cross, so every increasing path from x toward `to`
    // must visit the furthest neighbor of x not past `to`; greedy is optimal.
    FareyPath path;
    path.vertices.push_back(from);
    Slope current = from;
    while (current != to) {
        current = is_edge(current, to) ? to : greatest_neighbor_below(current, to);
        path.vertices.push_back(current);
    }
    return path;
}

Slope mediant(const Slope& a, const Slope& b) {
    if (!is_edge(a, b)) throw DomainError(a.str() + " and " + b.str() + " are not joined by an edge");
    return Slope(a.numerator() + b.numerator(), a.denominator() + b.denominator());
}

}  // namespace tightcalc::farey
