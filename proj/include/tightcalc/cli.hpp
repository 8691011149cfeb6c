#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tightcalc/branched_surface.hpp"

namespace tightcalc::cli {

enum ExitStatus : int {
    exit_ok = 0,
    exit_domain_error = 1,  ///< infeasible normalization, invalid weights, failed validation
    exit_usage_error = 2,   ///< bad flags, unreadable or malformed input
};

/// Reading a branched surface document can fail in three distinct ways.
class SurfaceLoadError : public std::runtime_error {
public:
    enum class Kind { io, parse, validation };
    SurfaceLoadError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Reads and validates a branched surface document.
branched::BranchedSurface load_surface(const std::string& path);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tightcalc::cli
