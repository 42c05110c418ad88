#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fanogw/entry_polynomial.hpp"

namespace fanogw {

// Genus-0 invariant of an index-1 Fano threefold whose algebraic cohomology
// is generated by H. One-pointed: <tau_k H^m>_d. Two-pointed:
// <H^p, tau_k H^m>_d (descendant on the last insertion).
struct InvariantKey {
  int arity = 1;
  int level = 0;
  std::vector<int> powers;
  int degree = 1;

  static InvariantKey one_point(int level, int m, int degree) { return {1, level, {m}, degree}; }
  static InvariantKey two_point(int p, int level, int m, int degree) { return {2, level, {p, m}, degree}; }

  // Codimensions plus descendant level must equal the virtual dimension
  // 3 + d + arity - 3 = d + arity.
  bool satisfies_gate() const {
    int codim = 0;
    for (int p : powers) codim += p;
    return codim + level == degree + arity;
  }

  bool in_range() const {
    for (int p : powers)
      if (p < 0 || p > 3) return false;
    return level >= 0 && degree >= 1 && static_cast<int>(powers.size()) == arity;
  }

  std::string to_string() const {
    auto power = [](int p) { return p == 0 ? std::string("1") : (p == 1 ? "H" : "H^" + std::to_string(p)); };
    std::string tau = level == 0 ? "" : (level == 1 ? "tau " : "tau_" + std::to_string(level) + " ");
    std::string s = "<";
    if (arity == 2) s += power(powers.at(0)) + ", ";
    return s + tau + power(powers.back()) + ">_" + std::to_string(degree);
  }
};

struct EngineOptions {
  // With the gate disabled the splitting sum runs over every basis class
  // and prime symbols ignore the dimension constraint. Only useful as a
  // negative control: outputs then stop matching the known expressions.
  bool enforce_dimension_gate = true;
};

// Expresses descendant invariants as polynomials in the counting-matrix
// entries. Every returned polynomial g is normalized by the anticanonical
// degree: the invariant equals deg * g, so relations are independent of
// the variety and the I-series coefficients are the g's themselves.
//
// Two-point descendants are reduced by the divisor axiom on a third H
// insertion plus topological recursion:
//
//   d <H^a, tau_k H^b>_d = sum_{d2=1..d} a_{e,a} <H^e, tau_{k-1} H^b>_{d2}
//                          - <H^a, tau_{k-1} H^{b+1}>_d,   e = d2 - d + 1 + a
//
// where a_{a+1,a} = 1 accounts for the degree-zero splitting. One-point
// invariants use the divisor axiom once more:
//
//   <tau_k H^m>_d = (1/d) sum_{i=0..k} (-1)^i / d^i <H, tau_{k-i} H^{m+i}>_d.
class RelationEngine {
 public:
  explicit RelationEngine(EngineOptions options = {}) : options_(options) {}

  // Prime two-point symbol <H^p, H^m>_d / deg = a_{3-p,m} / d when p + m = d + 2.
  EntryPolynomial two_point_symbol(int p, int m, int d) const {
    if (p < 0 || p > 3 || m < 0 || m > 3 || d < 1) return {};
    if (options_.enforce_dimension_gate && p + m != d + 2) return {};
    return Rational(1, d) * EntryPolynomial::entry(3 - p, m);
  }

  // <H^a, tau_k H^b>_d / deg
  const EntryPolynomial& two_point(int a, int k, int b, int d) {
    auto key = std::make_tuple(a, k, b, d);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    EntryPolynomial value = compute_two_point(a, k, b, d);
    return memo_.emplace(key, std::move(value)).first->second;
  }

  // <tau_k H^m>_d / deg
  EntryPolynomial one_point(int k, int m, int d) {
    if (k + m != d + 1)
      throw GateViolation(InvariantKey::one_point(k, m, d).to_string() + " violates k + m = d + 1");
    if (m < 0 || m > 3 || k < 0 || d < 1)
      throw GateViolation(InvariantKey::one_point(k, m, d).to_string() + " is outside the threefold range");
    EntryPolynomial sum;
    Rational weight(1, d);
    for (int i = 0; i <= k; ++i) {
      sum = sum + weight * two_point(1, k - i, m + i, d);
      weight = weight * Rational(-1, d);
    }
    return sum;
  }

  // Value of any in-range key (zero for gate violations).
  EntryPolynomial evaluate(const InvariantKey& key) {
    if (!key.in_range() || (options_.enforce_dimension_gate && !key.satisfies_gate())) return {};
    if (key.arity == 1) return one_point(key.level, key.powers[0], key.degree);
    return two_point(key.powers[0], key.level, key.powers[1], key.degree);
  }

  // (unit, H) coefficients of I_d for d = 0..d_max; the H^j coefficient of
  // I_d is <tau_{d+j-2} H^{3-j}>_d / deg.
  std::vector<std::pair<EntryPolynomial, EntryPolynomial>> symbolic_iseries(int d_max) {
    std::vector<std::pair<EntryPolynomial, EntryPolynomial>> out;
    for (int d = 0; d <= d_max; ++d) {
      if (d == 0) {
        out.emplace_back(EntryPolynomial::constant(Rational(1)), EntryPolynomial{});
        continue;
      }
      EntryPolynomial unit = d >= 2 ? one_point(d - 2, 3, d) : EntryPolynomial{};
      out.emplace_back(std::move(unit), one_point(d - 1, 2, d));
    }
    return out;
  }

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  EntryPolynomial compute_two_point(int a, int k, int b, int d) {
    if (a < 0 || a > 3 || b < 0 || b > 3 || k < 0 || d < 1) return {};
    if (options_.enforce_dimension_gate && a + k + b != d + 2) return {};
    if (k == 0) return two_point_symbol(a, b, d);

    EntryPolynomial sum;
    for (int d2 = 1; d2 <= d; ++d2) {
      if (options_.enforce_dimension_gate) {
        const int e = d2 - d + 1 + a;
        if (e < 0 || e > 3) continue;
        EntryPolynomial weight = EntryPolynomial::entry(e, a);
        if (!weight.is_zero()) sum = sum + weight * two_point(e, k - 1, b, d2);
      } else {
        for (int e = 0; e <= 3; ++e) {
          EntryPolynomial weight = EntryPolynomial::entry(e, a);
          if (!weight.is_zero()) sum = sum + weight * two_point(e, k - 1, b, d2);
        }
      }
    }
    sum = sum - two_point(a, k - 1, b + 1, d);
    return Rational(1, d) * sum;
  }

  EngineOptions options_;
  std::map<std::tuple<int, int, int, int>, EntryPolynomial> memo_;
};

// <H^p, H^m>_d / deg
inline EntryPolynomial two_point_symbol(int p, int m, int d) { return RelationEngine().two_point_symbol(p, m, d); }

// f_k^d / deg for <tau_k H^m>_d
inline EntryPolynomial one_point_relation(int k, int m, int d) { return RelationEngine().one_point(k, m, d); }

inline std::vector<std::pair<EntryPolynomial, EntryPolynomial>> symbolic_iseries(int d_max) {
  if (d_max < 1) throw InvalidInput("symbolic_iseries needs d_max >= 1");
  return RelationEngine().symbolic_iseries(d_max);
}

}  // namespace fanogw
