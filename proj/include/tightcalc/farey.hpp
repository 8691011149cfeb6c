#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tightcalc/slope.hpp"

// Combinatorics of the Farey tessellation: vertices are Q u {inf}, and p/q,
// r/s span an edge exactly when |ps - qr| = 1.

namespace tightcalc::farey {

/// Vertices of a strictly increasing edge path; inf may appear only last.
struct FareyPath {
    std::vector<Slope> vertices;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    std::string str() const;
    static FareyPath parse(std::string_view text);

    friend bool operator==(const FareyPath&, const FareyPath&) = default;
};

/// True when the path is nonempty, strictly increasing, uses Farey edges,
/// and only ever visits inf as its final vertex.
bool is_increasing_edge_path(const FareyPath& path);

/**
 * Open interval of slopes.
 *
 * When lower < upper this is the ordinary interval (lower, upper). When
 * upper < lower the interval wraps through infinity, i.e.
 * (lower, +inf] u [-inf, upper).
 */
class SlopeInterval {
public:
    SlopeInterval(Slope lower, Slope upper);

    const Slope& lower() const { return lower_; }
    const Slope& upper() const { return upper_; }
    bool wraps() const { return wraps_; }
    bool contains(const Slope& x) const;

private:
    Slope lower_;
    Slope upper_;
    bool wraps_;
};

Integer intersection_number(const Slope& a, const Slope& b);

bool is_edge(const Slope& a, const Slope& b);

/// Greatest finite b' with an edge to b and b' > b, i.e. the largest
/// rational with det(b', b) = 1 and positive denominator. Rejects inf.
Slope successor(const Slope& b);

/// Maximal slope in the open interval (a, upper) with an edge to a.
/// Throws DomainError unless a < upper.
Slope greatest_neighbor_below(const Slope& a, const Slope& upper);

/// Shortest strictly increasing edge path from `from` to `to`.
FareyPath shortest_increasing_path(const Slope& from, const Slope& to);

/// Farey sum of an edge; throws DomainError when a, b are not joined.
Slope mediant(const Slope& a, const Slope& b);

}  // namespace tightcalc::farey
