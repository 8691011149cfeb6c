#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Arc-weight coordinates for dividing sets on the 3-punctured sphere S with
// boundary circles c1, c2, c3. Closed components are never recorded: an
// essential closed curve on S is boundary parallel and makes the structure
// overtwisted.

namespace tightcalc::multicurve {

/// Boundary circle c_i carries 2 k_i endpoints.
struct BoundaryData {
    std::int64_t k1 = 0;
    std::int64_t k2 = 0;
    std::int64_t k3 = 0;

    /// Parses "k1,k2,k3".
    static BoundaryData parse(std::string_view text);
    std::string str() const;

    friend bool operator==(const BoundaryData&, const BoundaryData&) = default;
};

struct MulticurveCoordinates {
    std::int64_t n12 = 0;  ///< arcs from c1 to c2
    std::int64_t n13 = 0;
    std::int64_t n23 = 0;
    std::int64_t b1 = 0;  ///< boundary-parallel arcs with both ends on c1
    std::int64_t b2 = 0;
    std::int64_t b3 = 0;
    /// Dehn twist counts along c1, c2, c3 distinguishing relative isotopy
    /// classes; enumeration leaves this unset.
    std::optional<std::array<std::int64_t, 3>> twists;

    /// "(n12,n13,n23|b1,b2,b3)".
    std::string str() const;
    static MulticurveCoordinates parse(std::string_view text);

    std::array<std::int64_t, 6> tuple() const { return {n12, n13, n23, b1, b2, b3}; }

    friend bool operator==(const MulticurveCoordinates&, const MulticurveCoordinates&) = default;
};

/// n12 + n13 + 2 b1 = 2 k1 and the two cyclic analogues.
bool satisfies_endpoints(const BoundaryData& bd, const MulticurveCoordinates& m);

/// Every coordinate vector meeting the endpoint equations, ordered
/// lexicographically on (n12, n13, n23, b1, b2, b3). With
/// allow_boundary_parallel false all b_i are zero.
std::vector<MulticurveCoordinates> enumerate(const BoundaryData& bd, bool allow_boundary_parallel);

/// No boundary-parallel arcs.
bool is_tight_candidate(const MulticurveCoordinates& m);

std::size_t count(const BoundaryData& bd, bool allow_boundary_parallel);

}  // namespace tightcalc::multicurve
