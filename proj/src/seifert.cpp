#include "tightcalc/seifert.hpp"

#include <stdexcept>

#include "tightcalc/farey.hpp"

namespace tightcalc::seifert {

using tightcalc::to_string;

namespace {

Integer as_integer(const Rational& r, const char* what) {
    if (boost::multiprecision::denominator(r) != 1)
        throw DomainError(std::string(what) + " is not an integer: " + to_string(r));
    return boost::multiprecision::numerator(r);
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

void require_admissible(const GcsFamily& f, const Rational& k) {
    if (!f.is_admissible(k)) throw DomainError("k = " + to_string(k) + " is not admissible for this family");
}

}  // namespace

SeifertTriple::SeifertTriple(std::array<Slope, 3> inv) : invariants(std::move(inv)) {
    for (const auto& s : invariants) {
        if (s.is_infinite()) throw DomainError("Seifert invariants must be finite");
    }
}

bool SeifertTriple::is_normalized() const {
    const Rational zero(0), one(1), minus_two(-2);
    const Rational r1 = invariants[0].value(), r2 = invariants[1].value(), r3 = invariants[2].value();
    return zero < r1 && r1 < one && zero < r2 && r2 < one && minus_two < r3 && r3 < zero;
}

SeifertTriple SeifertTriple::parse(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '(')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == ')')) text.remove_suffix(1);
    std::array<Slope, 3> inv;
    std::size_t field = 0, start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        if (field == 3) throw ParseError("expected three invariants in '" + std::string(text) + "'");
        inv[field] = Slope::parse(piece);
        if (inv[field].is_infinite()) throw ParseError("Seifert invariants must be finite");
        ++field;
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (field != 3) throw ParseError("expected three invariants in '" + std::string(text) + "'");
    return SeifertTriple(std::move(inv));
}

std::string SeifertTriple::str() const {
    return "(" + invariants[0].str() + ", " + invariants[1].str() + ", " + invariants[2].str() + ")";
}

Rational euler_number(const SeifertTriple& t) {
    return t.invariants[0].value() + t.invariants[1].value() + t.invariants[2].value();
}

SeifertTriple normalize(const SeifertTriple& t) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (t.alpha(i) < 2)
            throw LensSpaceDegeneration("lens-space degeneration: invariant " + std::to_string(i + 1) + " = " +
                                        t.invariants[i].str() + " has multiplicity < 2");
    }
    Integer shift = 0;
    std::array<Slope, 3> out;
    for (std::size_t i = 0; i < 2; ++i) {
        Integer n = floor_div(t.beta(i), t.alpha(i));
        shift += n;
        out[i] = Slope(t.beta(i) - n * t.alpha(i), t.alpha(i));
    }
    out[2] = Slope(t.beta(2) + shift * t.alpha(2), t.alpha(2));
    const Rational third = out[2].value();
    if (!(Rational(-2) < third && third < Rational(0)))
        throw NormalizationError("cannot normalize " + t.str() + ": third invariant becomes " + out[2].str() +
                                     ", outside (-2, 0)",
                                 out[2]);
    return SeifertTriple(std::move(out));
}

std::pair<Slope, Slope> dual_invariants(const SeifertTriple& t) {
    return {farey::successor(t.invariants[0]), farey::successor(t.invariants[1])};
}

std::vector<Rational> GcsFamily::admissible(const Rational& k_max) const {
    std::vector<Rational> out;
    if (k_max < 0) return out;
    const Integer top = floor_div(boost::multiprecision::numerator(k_max) * gcd, boost::multiprecision::denominator(k_max));
    for (Integer m = 0; m <= top; ++m) {
        Rational k = k_at(m);
        if (is_admissible(k)) out.push_back(k);
    }
    return out;
}

bool GcsFamily::is_admissible(const Rational& k) const {
    if (k < 0) return false;
    if (boost::multiprecision::denominator(k * gcd) != 1) return false;
    return boost::multiprecision::denominator(k * base.alpha(1)) == 1 &&
           boost::multiprecision::denominator(k * base.alpha(0)) == 1;
}

Integer GcsFamily::k1(const Rational& k) const { return as_integer(k * base.alpha(1) + r1, "k1"); }

Integer GcsFamily::k2(const Rational& k) const { return as_integer(k * base.alpha(0) + r2, "k2"); }

std::optional<GcsFamily> gcs_family(const SeifertTriple& t) {
    if (!t.is_normalized()) throw DomainError(t.str() + " is not normalized");
    auto [d1, d2] = dual_invariants(t);
    const Integer& a1 = t.alpha(0);
    const Integer& a2 = t.alpha(1);
    // r1 a1 - r2 a2 = a2' - a1'
    const Integer c = d2.denominator() - d1.denominator();
    ExtendedGcd e = extended_gcd(a1, a2);
    if (c % e.g != 0) return std::nullopt;
    const Integer scale = c / e.g;
    const Integer r1_0 = e.x * scale;
    const Integer r2_0 = -e.y * scale;
    const Integer step1 = a2 / e.g;
    const Integer step2 = a1 / e.g;
    Integer shift = ceil_div(-r1_0, step1);
    Integer need2 = ceil_div(-r2_0, step2);
    if (need2 > shift) shift = need2;
    GcsFamily f{t, d1, d2, r1_0 + shift * step1, r2_0 + shift * step2, e.g};
    if (f.r1 * a1 + d1.denominator() != f.r2 * a2 + d2.denominator())
        throw std::logic_error("particular solution does not solve k1 a1 + a1' = k2 a2 + a2'");
    return f;
}

RawSlope raw_slope_sk(const GcsFamily& f, const Rational& k) {
    require_admissible(f, k);
    const SeifertTriple& t = f.base;
    const Integer& a1 = t.alpha(0);
    const Integer& a2 = t.alpha(1);
    const Integer& b1 = t.beta(0);
    const Integer& b2 = t.beta(1);
    const Integer& b1p = f.dual1.numerator();
    const Integer& a1p = f.dual1.denominator();
    const Integer& b2p = f.dual2.numerator();
    const Integer& a2p = f.dual2.denominator();

    const Integer k1 = f.k1(k);
    const Integer k2 = f.k2(k);
    RawSlope direct{1 - (k1 * b1 + b1p) - (k2 * b2 + b2p), k1 * a1 + a1p};
    const Integer other_den = k2 * a2 + a2p;

    const Integer slope_term = as_integer(k * (-a2 * b1 - a1 * b2), "k-coefficient of the numerator");
    const Integer den_term = as_integer(k * (a1 * a2), "k-coefficient of the denominator");
    RawSlope expanded{slope_term + (1 - f.r1 * b1 - b1p - f.r2 * b2 - b2p), den_term + f.r1 * a1 + a1p};

    if (direct.numerator != expanded.numerator || direct.denominator != expanded.denominator)
        throw std::logic_error("direct and expanded forms of s_k disagree at k = " + to_string(k));
    if (direct.denominator != other_den)
        throw std::logic_error("the two denominators of s_k disagree at k = " + to_string(k));
    return direct;
}

Slope slope_sk(const GcsFamily& f, const Rational& k) {
    RawSlope raw = raw_slope_sk(f, k);
    return Slope(raw.numerator, raw.denominator);
}

Slope limit_slope(const SeifertTriple& t) { return Slope(Rational(-t.invariants[0].value() - t.invariants[1].value())); }

Integer gcs_determinant(const GcsFamily& f, const Rational& k) {
    RawSlope raw = raw_slope_sk(f, k);
    return f.base.alpha(2) * raw.numerator - f.base.beta(2) * raw.denominator;
}

bool check_rel_prime(const GcsFamily& f, const Rational& k) {
    RawSlope raw = raw_slope_sk(f, k);
    return gcd(raw.numerator, raw.denominator) == 1;
}

bool check_edge_to_sk(const GcsFamily& f, const Rational& k) {
    const Slope s = slope_sk(f, k);
    const Slope& third = f.base.invariants[2];
    return third < s && farey::is_edge(third, s);
}

bool is_torus_bundle(const SeifertTriple& t) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (t.alpha(i) < 2) throw LensSpaceDegeneration("multiplicity < 2 in " + t.str());
    }
    const Integer& a1 = t.alpha(0);
    const Integer& a2 = t.alpha(1);
    const Integer& a3 = t.alpha(2);
    const bool sum_is_one = Rational(Integer(1), a1) + Rational(Integer(1), a2) + Rational(Integer(1), a3) == 1;
    const bool identity = (a1 * a2 - a1 - a2) * a3 == a1 * a2;
    if (sum_is_one != identity) throw std::logic_error("torus bundle criteria disagree for " + t.str());
    return sum_is_one;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::gcs_finite: return "GCS finite";
        case Verdict::no_family: return "GCS finite (no solutions k1, k2)";
        case Verdict::torus_bundle_candidate: return "torus-bundle candidate";
        case Verdict::edge_fails: return "edge condition fails for large k";
    }
    return "?";
}

Verdict parse_verdict(std::string_view text) {
    for (Verdict v : {Verdict::gcs_finite, Verdict::no_family, Verdict::torus_bundle_candidate, Verdict::edge_fails}) {
        if (to_string(v) == text) return v;
    }
    throw ParseError("unknown verdict '" + std::string(text) + "'");
}

AnalysisReport analyze(const SeifertTriple& t, const Rational& k_max) {
    AnalysisReport report;
    report.input = t;
    report.normalized = normalize(t);
    const SeifertTriple& n = report.normalized;
    report.euler = euler_number(n);
    report.inverse_alpha_sum =
        Rational(Integer(1), n.alpha(0)) + Rational(Integer(1), n.alpha(1)) + Rational(Integer(1), n.alpha(2));
    report.torus_bundle = is_torus_bundle(n);
    report.limit = limit_slope(n);
    std::tie(report.dual1, report.dual2) = dual_invariants(n);
    report.wrapped_interval = report.limit < n.invariants[2];

    std::optional<GcsFamily> family = gcs_family(n);
    if (family) {
        report.family = FamilySummary{family->r1, family->r2, family->step()};
        for (const Rational& k : family->admissible(k_max)) {
            SkRow row;
            row.k = k;
            row.k1 = family->k1(k);
            row.k2 = family->k2(k);
            row.s_k = slope_sk(*family, k);
            row.determinant = gcs_determinant(*family, k);
            row.edge = check_edge_to_sk(*family, k);
            row.coprime = check_rel_prime(*family, k);
            report.rows.push_back(std::move(row));
        }
    }

    if (report.euler != 0) {
        report.verdict = Verdict::gcs_finite;
        return report;
    }

    if (!report.rows.empty()) {
        const Integer d = report.rows.front().determinant;
        bool constant = true;
        bool converges = true;
        const Rational s = report.limit.value();
        for (std::size_t i = 0; i < report.rows.size(); ++i) {
            const SkRow& row = report.rows[i];
            if (row.determinant != d) constant = false;
            RawSlope raw = raw_slope_sk(*family, row.k);
            if (row.s_k.value() - s != Rational(d, n.alpha(2) * raw.denominator)) converges = false;
            if (!(report.limit < row.s_k)) converges = false;
            if (i > 0 && !(row.s_k < report.rows[i - 1].s_k)) converges = false;
        }
        if (constant) report.constant_determinant = d;
        report.converges_from_above = constant && converges;
    }
    if (!family)
        report.verdict = Verdict::no_family;
    else
        report.verdict = report.torus_bundle ? Verdict::torus_bundle_candidate : Verdict::edge_fails;
    return report;
}

}  // namespace tightcalc::seifert
