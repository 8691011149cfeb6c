#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tightcalc/slope.hpp"

namespace tightcalc::seifert {

/// Raised when the convention 0 < b1/a1, b2/a2 < 1, -2 < b3/a3 < 0 cannot be met.
class NormalizationError : public DomainError {
public:
    NormalizationError(const std::string& what, Slope offending)
        : DomainError(what), offending_(std::move(offending)) {}
    const Slope& offending() const { return offending_; }

private:
    Slope offending_;
};

/// Some a_i = 1: the manifold is a lens space, not a small Seifert space.
class LensSpaceDegeneration : public DomainError {
public:
    using DomainError::DomainError;
};

/// Seifert invariants (b1/a1, b2/a2, b3/a3) of a Seifert fibered space over
/// S^2 with three singular fibers. Each slope is finite with a_i >= 1.
struct SeifertTriple {
    std::array<Slope, 3> invariants;

    SeifertTriple() = default;
    explicit SeifertTriple(std::array<Slope, 3> inv);
    SeifertTriple(Slope a, Slope b, Slope c) : SeifertTriple(std::array<Slope, 3>{std::move(a), std::move(b), std::move(c)}) {}

    const Integer& alpha(std::size_t i) const { return invariants.at(i).denominator(); }
    const Integer& beta(std::size_t i) const { return invariants.at(i).numerator(); }

    bool is_normalized() const;

    /// Parses "(b1/a1, b2/a2, b3/a3)"; the parentheses are optional.
    static SeifertTriple parse(std::string_view text);
    std::string str() const;

    friend bool operator==(const SeifertTriple&, const SeifertTriple&) = default;
};

Rational euler_number(const SeifertTriple& t);

/// Shifts b1, b2 into (0, a_i) and moves the integer parts into b3.
SeifertTriple normalize(const SeifertTriple& t);

/// (successor(b1/a1), successor(b2/a2)).
std::pair<Slope, Slope> dual_invariants(const SeifertTriple& t);

/**
 * Solutions of k1 a1 + a1' = k2 a2 + a2', written k1 = k a2 + r1 and
 * k2 = k a1 + r2 for k a nonnegative multiple of 1/gcd(a1, a2).
 */
struct GcsFamily {
    SeifertTriple base;
    Slope dual1;
    Slope dual2;
    Integer r1;
    Integer r2;
    Integer gcd;  ///< gcd(a1, a2); the step in k is 1/gcd

    Rational step() const { return Rational(Integer(1), gcd); }
    /// k = m / gcd.
    Rational k_at(const Integer& m) const { return Rational(m, gcd); }
    /// All admissible k in [0, k_max], ascending.
    std::vector<Rational> admissible(const Rational& k_max) const;
    bool is_admissible(const Rational& k) const;
    Integer k1(const Rational& k) const;
    Integer k2(const Rational& k) const;
};

/// Empty when gcd(a1, a2) does not divide a2' - a1'. The particular solution
/// is the one with r1 minimal among solutions with r1, r2 >= 0.
std::optional<GcsFamily> gcs_family(const SeifertTriple& t);

/// Numerator and denominator of s_k exactly as the formula produces them,
/// before any reduction.
struct RawSlope {
    Integer numerator;
    Integer denominator;
};

/// Evaluates both written forms of s_k and both expressions for its
/// denominator; throws std::logic_error if they ever disagree.
RawSlope raw_slope_sk(const GcsFamily& f, const Rational& k);

Slope slope_sk(const GcsFamily& f, const Rational& k);

/// -b1/a1 - b2/a2.
Slope limit_slope(const SeifertTriple& t);

/// a3 * num(s_k) - b3 * den(s_k) on the unreduced fraction.
Integer gcs_determinant(const GcsFamily& f, const Rational& k);

bool check_rel_prime(const GcsFamily& f, const Rational& k);

/// s_k > b3/a3 and s_k is joined to b3/a3 by a Farey edge.
bool check_edge_to_sk(const GcsFamily& f, const Rational& k);

/// 1/a1 + 1/a2 + 1/a3 == 1.
bool is_torus_bundle(const SeifertTriple& t);

enum class Verdict {
    gcs_finite,              ///< e != 0
    no_family,               ///< e = 0 but k1 a1 + a1' = k2 a2 + a2' has no solution
    torus_bundle_candidate,  ///< e = 0 and sum 1/a_i = 1
    edge_fails,              ///< e = 0, sum 1/a_i != 1
};

std::string to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

struct SkRow {
    Rational k;
    Integer k1;
    Integer k2;
    Slope s_k;
    Integer determinant;
    bool edge = false;
    bool coprime = false;

    friend bool operator==(const SkRow&, const SkRow&) = default;
};

struct FamilySummary {
    Integer r1;
    Integer r2;
    Rational step;

    friend bool operator==(const FamilySummary&, const FamilySummary&) = default;
};

struct AnalysisReport {
    SeifertTriple input;
    SeifertTriple normalized;
    Rational euler;
    Rational inverse_alpha_sum;
    bool torus_bundle = false;
    Slope limit;
    Slope dual1;
    Slope dual2;
    std::optional<FamilySummary> family;
    std::vector<SkRow> rows;
    /// (b3/a3, s) wraps through infinity, i.e. s < b3/a3: a zero-twisting
    /// torus would exist.
    bool wrapped_interval = false;
    /// e = 0 only: the determinant is the same for every row.
    std::optional<Integer> constant_determinant;
    /// e = 0 only: s_k - s = D / (a3 den_k) on every row and s_k decreases.
    std::optional<bool> converges_from_above;
    Verdict verdict = Verdict::gcs_finite;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyze(const SeifertTriple& t, const Rational& k_max);

}  // namespace tightcalc::seifert
