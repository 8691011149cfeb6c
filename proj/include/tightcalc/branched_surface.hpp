#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tightcalc/slope.hpp"

namespace tightcalc::branched {

using SectorId = std::string;
using Weight = std::int64_t;

struct SectorRecord {
    SectorId id;
    std::int64_t cusped_euler = 0;  ///< corner-corrected Euler contribution
    bool boundary = false;          ///< sector touches the boundary of the surface

    friend bool operator==(const SectorRecord&, const SectorRecord&) = default;
};

/// A component c of L - Q. The branching direction points out of out1 and
/// out2 and into `in`, giving the branch equation w(out1) + w(out2) = w(in).
struct BranchCurveRecord {
    SectorId out1;
    SectorId out2;
    SectorId in;

    friend bool operator==(const BranchCurveRecord&, const BranchCurveRecord&) = default;
    friend auto operator<=>(const BranchCurveRecord&, const BranchCurveRecord&) = default;
};

enum class CurveRole { out1, out2, in };

/// One sector's side of a branch curve that was cut open by amputation.
struct BoundaryCurveRecord {
    SectorId sector;
    CurveRole role = CurveRole::in;

    friend bool operator==(const BoundaryCurveRecord&, const BoundaryCurveRecord&) = default;
    friend auto operator<=>(const BoundaryCurveRecord&, const BoundaryCurveRecord&) = default;
};

enum class BoundaryClass { essential, disk_bounding };

struct VerticalAnnulusRecord {
    std::string id;
    std::int64_t degree = 0;
    BoundaryClass first = BoundaryClass::essential;
    BoundaryClass second = BoundaryClass::essential;

    friend bool operator==(const VerticalAnnulusRecord&, const VerticalAnnulusRecord&) = default;
};

/**
 * Combinatorial branched surface: sectors, branch curves and the boundary
 * incidences produced by amputation. `boundary_curves` is kept sorted so
 * that structurally equal surfaces compare equal.
 */
struct BranchedSurface {
    std::vector<SectorRecord> sectors;
    std::vector<BranchCurveRecord> branch_curves;
    std::vector<BoundaryCurveRecord> boundary_curves;
    std::vector<VerticalAnnulusRecord> vertical_annuli;

    bool empty() const { return sectors.empty(); }
    bool has_sector(const SectorId& id) const;
    const SectorRecord* find_sector(const SectorId& id) const;
    /// Sector ids in lexicographic order.
    std::vector<SectorId> sorted_ids() const;

    friend bool operator==(const BranchedSurface&, const BranchedSurface&) = default;
};

struct Violation {
    std::string what;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Structural problems: duplicate or empty ids, dangling references.
std::vector<Violation> validate_surface(const BranchedSurface& surface);

/// Integer weight per sector, keyed (and hence ordered) by sector id.
using WeightFunction = std::map<SectorId, Weight>;

/// Throws DomainError when the domain of `w` differs from the sector set.
bool check_weights(const BranchedSurface& surface, const WeightFunction& w);

enum class Positivity { nonnegative, positive };

/// All weight functions satisfying the branch equations with every value
/// in [0, max_weight] (or [1, max_weight]), lexicographic by sector id.
std::vector<WeightFunction> enumerate_weights(const BranchedSurface& surface, Weight max_weight,
                                              Positivity positivity);

WeightFunction scale_weights(const WeightFunction& w, Weight factor);

/// Sum over sectors of w(B) * cusped_euler(B). Throws on invalid w.
Integer carried_euler(const BranchedSurface& surface, const WeightFunction& w);

/// Removes the named sectors. Curves touching a removed sector are cut and
/// their surviving sides become boundary curve records.
BranchedSurface amputate(const BranchedSurface& surface, const std::set<SectorId>& sector_ids);

struct DegreeViolation {
    std::string annulus;
    std::string reason;

    friend bool operator==(const DegreeViolation&, const DegreeViolation&) = default;
};

/// An annulus is consistent only as {deg 0, essential/essential} or
/// {deg 1, disk/disk}; everything else is reported.
std::vector<DegreeViolation> check_degree_consistency(const std::vector<VerticalAnnulusRecord>& records);

/// Number of tangencies of the contact plane along a boundary circle.
std::int64_t tangency_count(const VerticalAnnulusRecord& annulus);

// Predicates for the reduced form of a branched surface carried by a
// family of weight functions: no boundary, sufficiently positive weights,
// and weights unbounded on every sector (approximated by a threshold).
struct SimplificationReport {
    bool without_boundary = true;
    std::vector<SectorId> insufficiently_positive;  ///< some weight < threshold
    std::vector<SectorId> bounded;                  ///< sup of weights <= threshold

    bool reduced() const {
        return without_boundary && insufficiently_positive.empty() && bounded.empty();
    }
};

SimplificationReport check_simplified(const BranchedSurface& surface, const std::vector<WeightFunction>& family,
                                      Weight positivity_threshold, Weight sup_threshold);

std::string to_string(CurveRole role);
std::string to_string(BoundaryClass c);
CurveRole parse_curve_role(const std::string& text);
BoundaryClass parse_boundary_class(const std::string& text);

}  // namespace tightcalc::branched
