#pragma once

#include "freeshift/rauzy.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace freeshift {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p", "p/q" and "-p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);
/// "p" for integers, "p/q" in lowest terms otherwise.
std::string format_rational(const Rational& q);

/// Vertex weights mu and edge weights m, indexed like the graph.
struct MeasuredRauzyGraph {
    RauzyGraph graph;
    std::vector<Rational> mu;
    std::vector<Rational> m;

    bool full_support() const;
    bool integral() const;
    friend bool operator==(const MeasuredRauzyGraph&, const MeasuredRauzyGraph&) = default;
};

struct BalanceViolation {
    /// "out" and "in" are the per-(vertex, letter) sums, "bar" is m(e) = m(ē),
    /// "sign" a negative weight, "size" a table of the wrong length.
    std::string kind;
    std::string where;
    Rational lhs;
    Rational rhs;
};

std::vector<BalanceViolation> validate_balance(const MeasuredRauzyGraph& g);

class UnbalancedHint : public std::invalid_argument {
public:
    explicit UnbalancedHint(std::vector<BalanceViolation> violations);
    const std::vector<BalanceViolation>& violations() const { return violations_; }

private:
    std::vector<BalanceViolation> violations_;
};

/// Column order of the homogeneous system: mu(v) for every vertex, then m(e).
std::vector<std::vector<Integer>> balance_matrix(const RauzyGraph& g);

/// Basis of the rational kernel of an integer matrix, each vector scaled to a
/// primitive integer vector. Free columns are taken in increasing order.
std::vector<std::vector<Integer>> integer_kernel(const std::vector<std::vector<Integer>>& rows, std::size_t columns);

/// Some λ with K λ ≥ 1 coordinatewise, where K has the given columns; nullopt
/// if infeasible. Exact phase-one simplex with Bland's rule.
std::optional<std::vector<Rational>> positive_combination(const std::vector<std::vector<Integer>>& basis,
                                                          std::size_t dimension);

struct IntegerSolution {
    /// Absent when the graph has no full-support solution.
    std::optional<MeasuredRauzyGraph> measured;
    /// "hint" or "kernel".
    std::string route;
    std::size_t kernel_dimension = 0;
};

/// Integer-valued full-support solution of the balance system. A balanced
/// full-support hint is scaled by the lcm of its denominators; otherwise the
/// kernel is searched for a strictly positive vector, returned with gcd 1.
/// Throws UnbalancedHint when the hint violates the balance equations.
IntegerSolution integer_solution(const RauzyGraph& g, const std::optional<MeasuredRauzyGraph>& hint = std::nullopt);

} // namespace freeshift
