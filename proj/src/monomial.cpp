#include "glc/monomial.hpp"

namespace glc {

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur = Monomial::zeros(nvars);
  // lexicographic enumeration by recursion on the first variable
  auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
    if (i + 1 == nvars || nvars == 0) {
      if (nvars == 0) {
        if (rem == 0) out.push_back(cur);
        return;
      }
      cur.e[i] = rem;
      out.push_back(cur);
      cur.e[i] = 0;
      return;
    }
    for (int k = rem; k >= 0; --k) {
      cur.e[i] = k;
      self(self, i + 1, rem - k);
    }
    cur.e[i] = 0;
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  const std::size_t n = a.e.size();
  switch (ord) {
    case MonomialOrder::Lex: {
      for (std::size_t i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    }
    case MonomialOrder::GrLex: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      for (std::size_t i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    }
    case MonomialOrder::GrevLex: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      // smaller in the *last* differing exponent wins (reverse lex on reversed sign)
      for (std::size_t i = n; i-- > 0;)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

}  // namespace glc
