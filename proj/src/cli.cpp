#include "tightcalc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tightcalc/farey.hpp"
#include "tightcalc/json_io.hpp"
#include "tightcalc/multicurve.hpp"
#include "tightcalc/seifert.hpp"

namespace tightcalc::cli {

using io::Json;

namespace {

enum class Format { text, json };

/// Left-aligned columns separated by two spaces.
class Table {
public:
    explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& os) const {
        std::vector<std::size_t> width;
        for (const auto& row : rows_) {
            if (width.size() < row.size()) width.resize(row.size(), 0);
            for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
        }
        for (const auto& row : rows_) {
            std::string line;
            for (std::size_t i = 0; i < row.size(); ++i) {
                line += row[i];
                if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
            }
            os << line << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SurfaceLoadError(SurfaceLoadError::Kind::io, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SurfaceLoadError(SurfaceLoadError::Kind::parse, origin + ": " + e.what());
    }
}

/// Inline JSON when the argument starts with '{', otherwise a file path.
branched::WeightFunction load_weights(const std::string& arg) {
    const bool inline_doc = !arg.empty() && arg.front() == '{';
    Json j = parse_json_text(inline_doc ? arg : read_file(arg), inline_doc ? "weights" : arg);
    try {
        return io::weights_from_json(j);
    } catch (const ParseError& e) {
        throw SurfaceLoadError(SurfaceLoadError::Kind::parse, e.what());
    }
}

std::set<std::string> split_ids(const std::string& list) {
    std::set<std::string> ids;
    std::stringstream ss(list);
    std::string id;
    while (std::getline(ss, id, ',')) {
        if (!id.empty()) ids.insert(id);
    }
    return ids;
}

void print_weights_table(std::ostream& out, const std::vector<std::string>& ids,
                         const std::vector<branched::WeightFunction>& solutions) {
    std::vector<std::string> header{"#"};
    header.insert(header.end(), ids.begin(), ids.end());
    Table table(std::move(header));
    for (std::size_t i = 0; i < solutions.size(); ++i) {
        std::vector<std::string> row{std::to_string(i + 1)};
        for (const auto& id : ids) row.push_back(std::to_string(solutions[i].at(id)));
        table.add(std::move(row));
    }
    table.print(out);
}

void print_surface_summary(std::ostream& out, const branched::BranchedSurface& s) {
    out << "sectors: " << s.sectors.size() << '\n';
    Table sectors({"id", "cusped_euler", "boundary"});
    for (const auto& r : s.sectors) sectors.add({r.id, std::to_string(r.cusped_euler), yes_no(r.boundary)});
    sectors.print(out);
    out << "branch curves: " << s.branch_curves.size() << '\n';
    for (const auto& c : s.branch_curves) out << "  " << c.out1 << " + " << c.out2 << " -> " << c.in << '\n';
    out << "boundary curves: " << s.boundary_curves.size() << '\n';
    for (const auto& b : s.boundary_curves) out << "  " << b.sector << " (" << branched::to_string(b.role) << ")\n";
}

void print_report_text(std::ostream& out, const seifert::AnalysisReport& r) {
    Table head({"triple", r.input.str()});
    head.add({"normalized", r.normalized.str()});
    head.add({"euler number", to_string(r.euler)});
    head.add({"sum 1/alpha", to_string(r.inverse_alpha_sum)});
    head.add({"torus bundle", yes_no(r.torus_bundle)});
    head.add({"limit slope", r.limit.str()});
    head.add({"duals", r.dual1.str() + ", " + r.dual2.str()});
    if (r.family) {
        head.add({"family", "r1 = " + r.family->r1.str() + ", r2 = " + r.family->r2.str() +
                                ", step = " + to_string(r.family->step)});
    } else {
        head.add({"family", "none"});
    }
    head.add({"interval", r.wrapped_interval ? "wrapped (zero-twisting torus exists)" : "ordinary"});
    head.print(out);
    if (!r.rows.empty()) {
        out << '\n';
        Table rows({"k", "k1", "k2", "s_k", "det", "edge", "coprime"});
        for (const auto& row : r.rows) {
            rows.add({to_string(row.k), row.k1.str(), row.k2.str(), row.s_k.str(), row.determinant.str(),
                      yes_no(row.edge), yes_no(row.coprime)});
        }
        rows.print(out);
    }
    if (r.constant_determinant || r.converges_from_above) {
        out << '\n';
        Table tail({"constant determinant", r.constant_determinant ? r.constant_determinant->str() : "no"});
        if (r.converges_from_above) tail.add({"converges from above", yes_no(*r.converges_from_above)});
        tail.print(out);
    }
    out << "verdict: " << seifert::to_string(r.verdict) << '\n';
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    Format format = Format::text;

    void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

}  // namespace

branched::BranchedSurface load_surface(const std::string& path) {
    Json j = parse_json_text(read_file(path), path);
    branched::BranchedSurface surface;
    try {
        surface = io::surface_from_json(j);
    } catch (const ParseError& e) {
        throw SurfaceLoadError(SurfaceLoadError::Kind::parse, path + ": " + e.what());
    }
    auto violations = branched::validate_surface(surface);
    if (!violations.empty()) {
        std::string msg = path + ": invalid branched surface";
        for (const auto& v : violations) msg += "\n  " + v.what;
        throw SurfaceLoadError(SurfaceLoadError::Kind::validation, msg);
    }
    return surface;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx{out, err};
    CLI::App app{"Exact slope and weight calculator for branched surfaces, Farey paths and small Seifert spaces",
                 "tightcalc"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    std::function<int()> action;

    // farey
    auto* farey_cmd = app.add_subcommand("farey", "Farey tessellation queries");
    farey_cmd->require_subcommand(1);
    std::string a_text, b_text, slope_text, from_text, to_text, upper_text;
    {
        auto* cmd = farey_cmd->add_subcommand("intersect", "Intersection number |ps - qr|");
        cmd->add_option("--a", a_text)->required();
        cmd->add_option("--b", b_text)->required();
        cmd->callback([&] {
            action = [&] {
                Slope a = Slope::parse(a_text), b = Slope::parse(b_text);
                Integer n = farey::intersection_number(a, b);
                if (ctx.format == Format::json)
                    ctx.emit({{"a", a.str()}, {"b", b.str()}, {"intersection_number", io::integer_to_json(n)}});
                else
                    out << n.str() << '\n';
                return exit_ok;
            };
        });
    }
    {
        auto* cmd = farey_cmd->add_subcommand("edge", "Whether two slopes span a Farey edge");
        cmd->add_option("--a", a_text)->required();
        cmd->add_option("--b", b_text)->required();
        cmd->callback([&] {
            action = [&] {
                Slope a = Slope::parse(a_text), b = Slope::parse(b_text);
                bool e = farey::is_edge(a, b);
                if (ctx.format == Format::json)
                    ctx.emit({{"a", a.str()}, {"b", b.str()}, {"edge", e}});
                else
                    out << (e ? "true" : "false") << '\n';
                return exit_ok;
            };
        });
    }
    {
        auto* cmd = farey_cmd->add_subcommand("successor", "Greatest slope above x with an edge to x");
        cmd->add_option("--slope", slope_text)->required();
        cmd->callback([&] {
            action = [&] {
                Slope x = Slope::parse(slope_text);
                Slope s = farey::successor(x);
                if (ctx.format == Format::json)
                    ctx.emit({{"slope", x.str()}, {"successor", s.str()}});
                else
                    out << s.str() << '\n';
                return exit_ok;
            };
        });
    }
    {
        auto* cmd = farey_cmd->add_subcommand("below", "Greatest neighbor of --a inside (a, upper)");
        cmd->add_option("--a", a_text)->required();
        cmd->add_option("--upper", upper_text)->required();
        cmd->callback([&] {
            action = [&] {
                Slope a = Slope::parse(a_text), u = Slope::parse(upper_text);
                Slope s = farey::greatest_neighbor_below(a, u);
                if (ctx.format == Format::json)
                    ctx.emit({{"a", a.str()}, {"upper", u.str()}, {"neighbor", s.str()}});
                else
                    out << s.str() << '\n';
                return exit_ok;
            };
        });
    }
    {
        auto* cmd = farey_cmd->add_subcommand("path", "Shortest increasing Farey path");
        cmd->add_option("--from", from_text)->required();
        cmd->add_option("--to", to_text)->required();
        cmd->callback([&] {
            action = [&] {
                Slope from = Slope::parse(from_text), to = Slope::parse(to_text);
                farey::FareyPath p = farey::shortest_increasing_path(from, to);
                if (ctx.format == Format::json)
                    ctx.emit({{"from", from.str()}, {"to", to.str()}, {"length", p.length()}, {"path", io::path_to_json(p)}});
                else
                    out << p.str() << '\n';
                return exit_ok;
            };
        });
    }
    {
        auto* cmd = farey_cmd->add_subcommand("mediant", "Farey sum of an edge");
        cmd->add_option("--a", a_text)->required();
        cmd->add_option("--b", b_text)->required();
        cmd->callback([&] {
            action = [&] {
                Slope a = Slope::parse(a_text), b = Slope::parse(b_text);
                Slope m = farey::mediant(a, b);
                if (ctx.format == Format::json)
                    ctx.emit({{"a", a.str()}, {"b", b.str()}, {"mediant", m.str()}});
                else
                    out << m.str() << '\n';
                return exit_ok;
            };
        });
    }

    // weights
    auto* weights_cmd = app.add_subcommand("weights", "Weight functions on a branched surface");
    weights_cmd->require_subcommand(1);
    std::string input_path, weights_arg;
    branched::Weight max_weight = 0, factor = 1;
    bool positive = false;
    {
        auto* cmd = weights_cmd->add_subcommand("solve", "Enumerate bounded solutions of the branch equations");
        cmd->add_option("--input", input_path, "Branched surface document")->required();
        cmd->add_option("--max", max_weight, "Largest weight")->required()->check(CLI::NonNegativeNumber);
        cmd->add_flag("--positive", positive, "Require every weight >= 1");
        cmd->callback([&] {
            action = [&] {
                auto surface = load_surface(input_path);
                auto pos = positive ? branched::Positivity::positive : branched::Positivity::nonnegative;
                auto solutions = branched::enumerate_weights(surface, max_weight, pos);
                auto ids = surface.sorted_ids();
                if (ctx.format == Format::json) {
                    Json sols = Json::array();
                    for (const auto& w : solutions) sols.push_back(io::weights_to_json(w));
                    ctx.emit({{"sectors", ids},
                              {"max_weight", max_weight},
                              {"positivity", positive ? "positive" : "nonnegative"},
                              {"count", solutions.size()},
                              {"solutions", std::move(sols)}});
                } else {
                    print_weights_table(out, ids, solutions);
                    out << solutions.size() << " solution(s)\n";
                }
                return exit_ok;
            };
        });
    }
    {
        auto* cmd = weights_cmd->add_subcommand("check", "Check a weight function against the branch equations");
        cmd->add_option("--input", input_path, "Branched surface document")->required();
        cmd->add_option("--weights", weights_arg, "Weight map: inline JSON or a file")->required();
        cmd->callback([&] {
            action = [&] {
                auto surface = load_surface(input_path);
                auto w = load_weights(weights_arg);
                bool valid = branched::check_weights(surface, w);
                if (ctx.format == Format::json)
                    ctx.emit({{"weights", io::weights_to_json(w)}, {"valid", valid}});
                else
                    out << (valid ? "valid" : "invalid") << '\n';
                if (!valid) err << "weight function violates a branch equation\n";
                return valid ? exit_ok : exit_domain_error;
            };
        });
    }
    {
        auto* cmd = weights_cmd->add_subcommand("euler", "Euler characteristic of the carried surface");
        cmd->add_option("--input", input_path, "Branched surface document")->required();
        cmd->add_option("--weights", weights_arg, "Weight map: inline JSON or a file")->required();
        cmd->callback([&] {
            action = [&] {
                auto surface = load_surface(input_path);
                auto w = load_weights(weights_arg);
                Integer chi = branched::carried_euler(surface, w);
                if (ctx.format == Format::json)
                    ctx.emit({{"weights", io::weights_to_json(w)}, {"euler_characteristic", io::integer_to_json(chi)}});
                else
                    out << chi.str() << '\n';
                return exit_ok;
            };
        });
    }
    {
        auto* cmd = weights_cmd->add_subcommand("scale", "Multiply a weight function by a positive integer");
        cmd->add_option("--weights", weights_arg, "Weight map: inline JSON or a file")->required();
        cmd->add_option("--factor", factor)->required();
        cmd->callback([&] {
            action = [&] {
                auto w = branched::scale_weights(load_weights(weights_arg), factor);
                if (ctx.format == Format::json) {
                    ctx.emit(io::weights_to_json(w));
                } else {
                    Table t({"sector", "weight"});
                    for (const auto& [id, v] : w) t.add({id, std::to_string(v)});
                    t.print(out);
                }
                return exit_ok;
            };
        });
    }

    // amputate
    std::string sector_list;
    {
        auto* cmd = app.add_subcommand("amputate", "Remove sectors, turning cut curves into boundary");
        cmd->add_option("--input", input_path, "Branched surface document")->required();
        cmd->add_option("--sectors", sector_list, "Comma-separated sector ids")->required();
        cmd->callback([&] {
            action = [&] {
                auto surface = load_surface(input_path);
                auto result = branched::amputate(surface, split_ids(sector_list));
                if (ctx.format == Format::json)
                    ctx.emit(io::surface_to_json(result));
                else
                    print_surface_summary(out, result);
                return exit_ok;
            };
        });
    }

    // degree-check
    {
        auto* cmd = app.add_subcommand("degree-check", "Check vertical annulus degrees against boundary classes");
        cmd->add_option("--input", input_path, "Branched surface document")->required();
        cmd->callback([&] {
            action = [&] {
                auto surface = load_surface(input_path);
                auto violations = branched::check_degree_consistency(surface.vertical_annuli);
                if (ctx.format == Format::json) {
                    Json annuli = Json::array();
                    for (const auto& a : surface.vertical_annuli) {
                        annuli.push_back({{"id", a.id},
                                          {"degree", a.degree},
                                          {"boundary_classes", {branched::to_string(a.first), branched::to_string(a.second)}},
                                          {"tangencies", a.degree >= 0 ? Json(branched::tangency_count(a)) : Json(nullptr)}});
                    }
                    Json v = Json::array();
                    for (const auto& x : violations) v.push_back({{"annulus", x.annulus}, {"reason", x.reason}});
                    ctx.emit({{"annuli", std::move(annuli)}, {"violations", std::move(v)}, {"consistent", violations.empty()}});
                } else {
                    Table t({"annulus", "degree", "classes", "tangencies"});
                    for (const auto& a : surface.vertical_annuli) {
                        t.add({a.id, std::to_string(a.degree),
                               branched::to_string(a.first) + "/" + branched::to_string(a.second),
                               a.degree >= 0 ? std::to_string(branched::tangency_count(a)) : "-"});
                    }
                    t.print(out);
                    for (const auto& x : violations) out << "violation: " << x.annulus << ": " << x.reason << '\n';
                    out << (violations.empty() ? "consistent" : "inconsistent") << '\n';
                }
                return exit_ok;
            };
        });
    }

    // seifert
    std::string triple_text, kmax_text = "5";
    {
        auto* cmd = app.add_subcommand("seifert", "Slope analysis of a small Seifert space");
        cmd->add_option("--triple", triple_text, "Invariants \"(b1/a1, b2/a2, b3/a3)\"")->required();
        cmd->add_option("--kmax", kmax_text, "Largest k to tabulate (rational)");
        cmd->callback([&] {
            action = [&] {
                auto triple = seifert::SeifertTriple::parse(triple_text);
                Rational kmax = parse_rational(kmax_text);
                auto report = seifert::analyze(triple, kmax);
                if (ctx.format == Format::json)
                    ctx.emit(io::report_to_json(report));
                else
                    print_report_text(out, report);
                return exit_ok;
            };
        });
    }

    // multicurve
    std::string boundary_text;
    bool allow_bp = false;
    {
        auto* cmd = app.add_subcommand("multicurve", "Dividing sets on the 3-punctured sphere");
        cmd->add_option("--boundary", boundary_text, "Half endpoint counts \"k1,k2,k3\"")->required();
        cmd->add_flag("--allow-bp", allow_bp, "Allow boundary-parallel arcs");
        cmd->callback([&] {
            action = [&] {
                auto bd = multicurve::BoundaryData::parse(boundary_text);
                auto curves = multicurve::enumerate(bd, allow_bp);
                if (ctx.format == Format::json) {
                    Json list = Json::array();
                    for (const auto& m : curves) list.push_back(io::multicurve_to_json(m));
                    ctx.emit({{"boundary", bd.str()},
                              {"allow_boundary_parallel", allow_bp},
                              {"count", curves.size()},
                              {"multicurves", std::move(list)}});
                } else {
                    Table t({"coordinates", "tight candidate"});
                    for (const auto& m : curves) t.add({m.str(), yes_no(multicurve::is_tight_candidate(m))});
                    t.print(out);
                    out << curves.size() << " multicurve(s)\n";
                }
                return exit_ok;
            };
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << '\n';
        return exit_usage_error;
    }
    ctx.format = format == "json" ? Format::json : Format::text;
    if (!action) {
        err << "error: no command given\n";
        return exit_usage_error;
    }
    try {
        return action();
    } catch (const SurfaceLoadError& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == SurfaceLoadError::Kind::validation ? exit_domain_error : exit_usage_error;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_usage_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain_error;
    }
}

}  // namespace tightcalc::cli
