#include "tightcalc/branched_surface.hpp"

#include <algorithm>
#include <unordered_map>

namespace tightcalc::branched {

bool BranchedSurface::has_sector(const SectorId& id) const { return find_sector(id) != nullptr; }

const SectorRecord* BranchedSurface::find_sector(const SectorId& id) const {
    auto it = std::find_if(sectors.begin(), sectors.end(), [&](const SectorRecord& s) { return s.id == id; });
    return it == sectors.end() ? nullptr : &*it;
}

std::vector<SectorId> BranchedSurface::sorted_ids() const {
    std::vector<SectorId> ids;
    ids.reserve(sectors.size());
    for (const auto& s : sectors) ids.push_back(s.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<Violation> validate_surface(const BranchedSurface& surface) {
    std::vector<Violation> out;
    std::set<SectorId> seen;
    for (const auto& s : surface.sectors) {
        if (s.id.empty()) out.push_back({"sector with empty id"});
        if (!seen.insert(s.id).second) out.push_back({"duplicate sector id '" + s.id + "'"});
    }
    for (std::size_t i = 0; i < surface.branch_curves.size(); ++i) {
        const auto& c = surface.branch_curves[i];
        const std::pair<const SectorId*, CurveRole> ends[] = {
            {&c.out1, CurveRole::out1}, {&c.out2, CurveRole::out2}, {&c.in, CurveRole::in}};
        for (const auto& [id, role] : ends) {
            if (!seen.count(*id)) {
                out.push_back({"branch curve " + std::to_string(i) + " (" + to_string(role) +
                               ") references unknown sector '" + *id + "'"});
            }
        }
    }
    for (const auto& b : surface.boundary_curves) {
        if (!seen.count(b.sector)) out.push_back({"boundary curve references unknown sector '" + b.sector + "'"});
    }
    std::set<std::string> annuli;
    for (const auto& a : surface.vertical_annuli) {
        if (!annuli.insert(a.id).second) out.push_back({"duplicate vertical annulus id '" + a.id + "'"});
    }
    return out;
}

bool check_weights(const BranchedSurface& surface, const WeightFunction& w) {
    if (w.size() != surface.sectors.size())
        throw DomainError("weight function has " + std::to_string(w.size()) + " entries for " +
                          std::to_string(surface.sectors.size()) + " sectors");
    for (const auto& s : surface.sectors) {
        if (!w.count(s.id)) throw DomainError("no weight for sector '" + s.id + "'");
    }
    return std::all_of(surface.branch_curves.begin(), surface.branch_curves.end(), [&](const BranchCurveRecord& c) {
        return w.at(c.out1) + w.at(c.out2) == w.at(c.in);
    });
}

namespace {

struct IndexedCurve {
    std::size_t out1, out2, in;
};

}  // namespace

std::vector<WeightFunction> enumerate_weights(const BranchedSurface& surface, Weight max_weight,
                                              Positivity positivity) {
    if (max_weight < 0) throw DomainError("max_weight must be nonnegative");
    const std::vector<SectorId> ids = surface.sorted_ids();
    std::unordered_map<SectorId, std::size_t> index;
    for (std::size_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);

    // Each curve is checked once its last sector (in id order) is assigned.
    std::vector<std::vector<IndexedCurve>> due(ids.size());
    for (const auto& c : surface.branch_curves) {
        IndexedCurve ic{index.at(c.out1), index.at(c.out2), index.at(c.in)};
        due[std::max({ic.out1, ic.out2, ic.in})].push_back(ic);
    }

    const Weight lo = positivity == Positivity::positive ? 1 : 0;
    std::vector<WeightFunction> result;
    if (lo > max_weight && !ids.empty()) return result;

    std::vector<Weight> values(ids.size(), lo);
    auto emit = [&] {
        WeightFunction w;
        for (std::size_t i = 0; i < ids.size(); ++i) w.emplace_hint(w.end(), ids[i], values[i]);
        result.push_back(std::move(w));
    };
    auto satisfied = [&](std::size_t i) {
        return std::all_of(due[i].begin(), due[i].end(), [&](const IndexedCurve& c) {
            return values[c.out1] + values[c.out2] == values[c.in];
        });
    };
    if (ids.empty()) {
        emit();
        return result;
    }
    // Iterative depth-first search; values[depth] is the candidate at depth.
    std::size_t depth = 0;
    values[0] = lo - 1;
    while (true) {
        if (++values[depth] > max_weight) {
            if (depth == 0) break;
            --depth;
            continue;
        }
        if (!satisfied(depth)) continue;
        if (depth + 1 == ids.size()) {
            emit();
        } else {
            ++depth;
            values[depth] = lo - 1;
        }
    }
    return result;
}

WeightFunction scale_weights(const WeightFunction& w, Weight factor) {
    if (factor < 1) throw DomainError("scale factor must be positive");
    WeightFunction out;
    for (const auto& [id, value] : w) {
        Weight scaled;
        if (__builtin_mul_overflow(value, factor, &scaled)) throw DomainError("weight overflow scaling '" + id + "'");
        out.emplace_hint(out.end(), id, scaled);
    }
    return out;
}

Integer carried_euler(const BranchedSurface& surface, const WeightFunction& w) {
    if (!check_weights(surface, w)) throw DomainError("weight function violates a branch equation");
    Integer chi = 0;
    for (const auto& s : surface.sectors) chi += Integer(w.at(s.id)) * s.cusped_euler;
    return chi;
}

BranchedSurface amputate(const BranchedSurface& surface, const std::set<SectorId>& sector_ids) {
    if (sector_ids.empty()) throw DomainError("amputation needs at least one sector");
    for (const auto& id : sector_ids) {
        if (!surface.has_sector(id)) throw DomainError("cannot amputate unknown sector '" + id + "'");
    }
    auto removed = [&](const SectorId& id) { return sector_ids.count(id) != 0; };

    BranchedSurface out;
    out.vertical_annuli = surface.vertical_annuli;
    for (const auto& s : surface.sectors) {
        if (!removed(s.id)) out.sectors.push_back(s);
    }
    for (const auto& b : surface.boundary_curves) {
        if (!removed(b.sector)) out.boundary_curves.push_back(b);
    }
    for (const auto& c : surface.branch_curves) {
        if (!removed(c.out1) && !removed(c.out2) && !removed(c.in)) {
            out.branch_curves.push_back(c);
            continue;
        }
        if (!removed(c.out1)) out.boundary_curves.push_back({c.out1, CurveRole::out1});
        if (!removed(c.out2)) out.boundary_curves.push_back({c.out2, CurveRole::out2});
        if (!removed(c.in)) out.boundary_curves.push_back({c.in, CurveRole::in});
    }
    std::sort(out.boundary_curves.begin(), out.boundary_curves.end());
    for (auto& s : out.sectors) {
        for (const auto& b : out.boundary_curves) {
            if (b.sector == s.id) s.boundary = true;
        }
    }
    return out;
}

std::vector<DegreeViolation> check_degree_consistency(const std::vector<VerticalAnnulusRecord>& records) {
    std::vector<DegreeViolation> out;
    for (const auto& r : records) {
        const bool any_disk = r.first == BoundaryClass::disk_bounding || r.second == BoundaryClass::disk_bounding;
        const bool any_essential = r.first == BoundaryClass::essential || r.second == BoundaryClass::essential;
        if (r.degree < 0) out.push_back({r.id, "negative degree"});
        if (r.degree == 0 && any_disk) out.push_back({r.id, "degree 0 with a disk-bounding boundary component"});
        if (r.degree == 1 && any_essential) out.push_back({r.id, "degree 1 with an essential boundary component"});
        if (r.degree >= 2) out.push_back({r.id, "degree " + std::to_string(r.degree) + " is neither 0 nor 1"});
        if (any_disk && any_essential) out.push_back({r.id, "mixed boundary classes"});
    }
    return out;
}

std::int64_t tangency_count(const VerticalAnnulusRecord& annulus) {
    if (annulus.degree < 0) throw DomainError("negative degree on annulus '" + annulus.id + "'");
    return 2 * annulus.degree;
}

SimplificationReport check_simplified(const BranchedSurface& surface, const std::vector<WeightFunction>& family,
                                      Weight positivity_threshold, Weight sup_threshold) {
    SimplificationReport report;
    report.without_boundary = surface.boundary_curves.empty() &&
                              std::none_of(surface.sectors.begin(), surface.sectors.end(),
                                           [](const SectorRecord& s) { return s.boundary; });
    for (const auto& w : family) {
        if (!check_weights(surface, w)) throw DomainError("family contains an invalid weight function");
    }
    for (const auto& id : surface.sorted_ids()) {
        bool positive = true;
        bool unbounded = false;
        for (const auto& w : family) {
            const Weight v = w.at(id);
            if (v < positivity_threshold) positive = false;
            if (v > sup_threshold) unbounded = true;
        }
        if (!positive) report.insufficiently_positive.push_back(id);
        if (!unbounded) report.bounded.push_back(id);
    }
    return report;
}

std::string to_string(CurveRole role) {
    switch (role) {
        case CurveRole::out1: return "out1";
        case CurveRole::out2: return "out2";
        case CurveRole::in: return "in";
    }
    return "?";
}

std::string to_string(BoundaryClass c) { return c == BoundaryClass::essential ? "essential" : "disk"; }

CurveRole parse_curve_role(const std::string& text) {
    if (text == "out1") return CurveRole::out1;
    if (text == "out2") return CurveRole::out2;
    if (text == "in") return CurveRole::in;
    throw ParseError("unknown curve role '" + text + "'");
}

BoundaryClass parse_boundary_class(const std::string& text) {
    if (text == "essential") return BoundaryClass::essential;
    if (text == "disk" || text == "disk-bounding" || text == "disk_bounding") return BoundaryClass::disk_bounding;
    throw ParseError("unknown boundary class '" + text + "'");
}

}  // namespace tightcalc::branched
