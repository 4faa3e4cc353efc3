#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace glc {

// Exponent vector. Total degree = sum of entries (standard grading).
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
  // the unit monomial; a named factory so Monomial({k}) can never pick it
  static Monomial zeros(std::size_t nvars) {
    Monomial m;
    m.e.assign(nvars, 0);
    return m;
  }

  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
  std::size_t nvars() const { return e.size(); }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  Monomial operator*(const Monomial& o) const {
    Monomial m(*this);
    for (std::size_t i = 0; i < e.size(); ++i) m.e[i] += o.e[i];
    return m;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  // quotient o / this, caller guarantees divisibility
  Monomial quotient_into(const Monomial& o) const {
    Monomial m(o);
    for (std::size_t i = 0; i < e.size(); ++i) m.e[i] -= e[i];
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a);
    for (std::size_t i = 0; i < m.e.size(); ++i)
      if (b.e[i] > m.e[i]) m.e[i] = b.e[i];
    return m;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial m(a);
    for (std::size_t i = 0; i < m.e.size(); ++i)
      if (b.e[i] < m.e[i]) m.e[i] = b.e[i];
    return m;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
  }

  bool is_one() const {
    for (int x : e)
      if (x != 0) return false;
    return true;
  }
};

enum class MonomialOrder { GrevLex, Lex, GrLex };

// all monomials of total degree d, deterministic order
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

// returns <0, 0, >0 as a < b, a == b, a > b in the given order
int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder ord);

inline bool mono_lt(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  return mono_cmp(a, b, ord) < 0;
}

}  // namespace glc
