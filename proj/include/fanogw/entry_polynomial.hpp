#pragma once

#include <array>
#include <ostream>
#include <string>

#include "fanogw/sparse_polynomial.hpp"

namespace fanogw {

// The five independent counting-matrix entries. Every other a_ij is 0, 1 or
// one of these via the anti-diagonal symmetry a_ij = a_{3-j,3-i}.
enum class Entry : int { a01 = 0, a11 = 1, a02 = 2, a12 = 3, a03 = 4 };

inline constexpr std::array<Entry, 5> kEntries{Entry::a01, Entry::a11, Entry::a02, Entry::a12, Entry::a03};

inline const char* entry_name(Entry e) {
  static constexpr const char* names[] = {"a01", "a11", "a02", "a12", "a03"};
  return names[static_cast<int>(e)];
}

// Row and column of the representative above the anti-diagonal.
inline std::pair<int, int> entry_position(Entry e) {
  static constexpr std::pair<int, int> pos[] = {{0, 1}, {1, 1}, {0, 2}, {1, 2}, {0, 3}};
  return pos[static_cast<int>(e)];
}

// Degree of the curves an entry counts: j - i + 1.
inline int entry_curve_degree(Entry e) {
  auto [i, j] = entry_position(e);
  return j - i + 1;
}

using EntryValues = std::array<Rational, 5>;

// Polynomial over Q in a01, a11, a02, a12, a03.
class EntryPolynomial : public SparsePolynomial<std::array<int, 5>> {
 public:
  using Base = SparsePolynomial<std::array<int, 5>>;

  EntryPolynomial() = default;
  EntryPolynomial(const Base& b) : Base(b) {}  // NOLINT(implicit)

  static EntryPolynomial constant(const Rational& c) {
    EntryPolynomial p;
    p.add_term({0, 0, 0, 0, 0}, c);
    return p;
  }

  static EntryPolynomial variable(Entry e) {
    EntryPolynomial p;
    Monomial m{};
    m[static_cast<int>(e)] = 1;
    p.add_term(m, Rational(1));
    return p;
  }

  // Structural value of a_ij for any integer indices: 0 below the
  // subdiagonal, 1 on it, 0 at the corners a00/a33 and outside 0..3,
  // otherwise the independent indeterminate it is equal to.
  static EntryPolynomial entry(int i, int j) {
    int curve = j - i + 1;
    if (curve < 0) return {};
    if (curve == 0) return constant(Rational(1));
    if (i < 0 || j < 0 || i > 3 || j > 3) return {};
    for (Entry e : kEntries) {
      auto [r, c] = entry_position(e);
      if ((r == i && c == j) || (3 - c == i && 3 - r == j)) return variable(e);
    }
    return {};  // a00, a33
  }

  Rational evaluate(const EntryValues& values) const {
    Rational total;
    for (const auto& [m, c] : terms()) {
      Rational t = c;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (m[k] != 0) t *= values[k].pow(m[k]);
      total += t;
    }
    return total;
  }

  // Replace one indeterminate by a polynomial.
  EntryPolynomial substitute(Entry var, const EntryPolynomial& replacement) const {
    const int k = static_cast<int>(var);
    EntryPolynomial result;
    std::vector<EntryPolynomial> powers{constant(Rational(1))};
    for (const auto& [m, c] : terms()) {
      while (static_cast<int>(powers.size()) <= m[k]) powers.push_back(powers.back() * replacement);
      Monomial rest = m;
      rest[k] = 0;
      EntryPolynomial term;
      term.add_term(rest, c);
      result += term * powers[m[k]];
    }
    return result;
  }

  int degree_in(Entry var) const {
    int d = -1;
    for (const auto& [m, c] : terms()) d = std::max(d, m[static_cast<int>(var)]);
    return d;
  }

  // Coefficient of var^power as a polynomial in the remaining indeterminates.
  EntryPolynomial coefficient_of(Entry var, int power) const {
    const int k = static_cast<int>(var);
    EntryPolynomial r;
    for (const auto& [m, c] : terms()) {
      if (m[k] != power) continue;
      Monomial rest = m;
      rest[k] = 0;
      r.add_term(rest, c);
    }
    return r;
  }

  // Sum of curve degrees of the entries in a monomial.
  static int weight(const Monomial& m) {
    int w = 0;
    for (Entry e : kEntries) w += m[static_cast<int>(e)] * entry_curve_degree(e);
    return w;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms().rbegin(); it != terms().rend(); ++it) {
      const auto& [m, c] = *it;
      bool neg = c.sign() < 0;
      Rational a = c.abs();
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      std::string mono;
      for (Entry e : kEntries) {
        int p = m[static_cast<int>(e)];
        if (p == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += entry_name(e);
        if (p > 1) mono += "^" + std::to_string(p);
      }
      if (mono.empty()) {
        out += a.to_string();
      } else {
        if (!(a.numerator() == 1)) out += a.numerator().get_str() + "*";
        out += mono;
        if (!(a.denominator() == 1)) out += "/" + a.denominator().get_str();
      }
    }
    return out;
  }

  friend EntryPolynomial operator*(const EntryPolynomial& a, const EntryPolynomial& b) {
    return EntryPolynomial(static_cast<const Base&>(a) * static_cast<const Base&>(b));
  }
  friend EntryPolynomial operator*(const Rational& c, const EntryPolynomial& a) {
    return EntryPolynomial(c * static_cast<const Base&>(a));
  }
  friend EntryPolynomial operator+(const EntryPolynomial& a, const EntryPolynomial& b) {
    return EntryPolynomial(static_cast<const Base&>(a) + static_cast<const Base&>(b));
  }
  friend EntryPolynomial operator-(const EntryPolynomial& a, const EntryPolynomial& b) {
    return EntryPolynomial(static_cast<const Base&>(a) - static_cast<const Base&>(b));
  }

  friend std::ostream& operator<<(std::ostream& os, const EntryPolynomial& p) { return os << p.to_string(); }
};

}  // namespace fanogw
