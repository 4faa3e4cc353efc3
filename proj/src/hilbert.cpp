#include "glc/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "glc/field.hpp"

namespace glc {

void LaurentZ::add(int d, long long v) {
  if (v == 0) return;
  auto it = c.find(d);
  if (it == c.end()) {
    c.emplace(d, v);
  } else {
    it->second += v;
    if (it->second == 0) c.erase(it);
  }
}

LaurentZ LaurentZ::operator+(const LaurentZ& o) const {
  LaurentZ r = *this;
  for (auto [d, v] : o.c) r.add(d, v);
  return r;
}

LaurentZ LaurentZ::operator-(const LaurentZ& o) const {
  LaurentZ r = *this;
  for (auto [d, v] : o.c) r.add(d, -v);
  return r;
}

LaurentZ LaurentZ::shifted(int d) const {
  LaurentZ r;
  for (auto [e, v] : c) r.c.emplace(e + d, v);
  return r;
}

long long LaurentZ::at(int d) const {
  auto it = c.find(d);
  return it == c.end() ? 0 : it->second;
}

long long LaurentZ::eval_at_one() const {
  long long s = 0;
  for (auto [d, v] : c) s += v;
  return s;
}

std::string LaurentZ::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [d, v] : c) {
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    long long a = v < 0 ? -v : v;
    if (a != 1 || d == 0) os << a;
    if (d != 0) {
      if (a != 1) os << "*";
      os << "t";
      if (d != 1) os << "^" << d;
    }
    first = false;
  }
  return os.str();
}

HilbertSeries HilbertSeries::reduced() const {
  HilbertSeries r = *this;
  while (r.denom > 0 && !r.num.is_zero() && r.num.eval_at_one() == 0) {
    // divide by (1-t): b_d = a_d + b_{d-1}, scanning upward
    LaurentZ q;
    long long carry = 0;
    int lo = r.num.c.begin()->first;
    int hi = r.num.c.rbegin()->first;
    for (int d = lo; d <= hi; ++d) {
      carry += r.num.at(d);
      q.add(d, carry);
    }
    if (carry != 0) throw Error("numerator not divisible by (1-t)");
    r.num = std::move(q);
    --r.denom;
  }
  if (r.num.is_zero()) r.denom = 0;
  return r;
}

long long HilbertSeries::coeff(int j) const {
  long long s = 0;
  for (auto [d, v] : num.c)
    if (j - d >= 0) s += v * monomial_count(j - d, denom);
  return s;
}

int HilbertSeries::pole_order() const {
  if (num.is_zero()) return -1;
  return reduced().denom;
}

bool HilbertSeries::operator==(const HilbertSeries& o) const {
  HilbertSeries a = reduced(), b = o.reduced();
  return a.denom == b.denom && a.num == b.num;
}

std::string HilbertSeries::str() const {
  HilbertSeries r = reduced();
  std::ostringstream os;
  bool paren = r.num.c.size() > 1;
  os << (paren ? "(" : "") << r.num.str() << (paren ? ")" : "");
  if (r.denom > 0) {
    os << " / (1-t)";
    if (r.denom > 1) os << "^" << r.denom;
  }
  return os.str();
}

long long monomial_count(int d, int k) {
  if (d < 0) return 0;
  if (k == 0) return d == 0 ? 1 : 0;
  // C(d + k - 1, k - 1)
  long long r = 1;
  for (int i = 1; i <= k - 1; ++i) r = r * (d + i) / i;
  return r;
}

namespace {

// drop monomials divisible by another in the list
std::vector<Monomial> minimal_gens(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool dom = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        dom = true;
        break;
      }
    if (!dom) out.push_back(m);
  }
  return out;
}

}  // namespace

LaurentZ monomial_quotient_numerator(std::size_t nvars, std::vector<Monomial> gens) {
  gens = minimal_gens(std::move(gens));
  LaurentZ one;
  one.add(0, 1);
  if (gens.empty()) return one;
  for (const auto& m : gens)
    if (m.is_one()) return LaurentZ{};

  bool all_linear = true;
  for (const auto& m : gens)
    if (m.degree() > 1) {
      all_linear = false;
      break;
    }
  if (all_linear) {
    // S/(subset of variables): numerator (1-t)^#gens
    LaurentZ r = one;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      LaurentZ next = r - r.shifted(1);
      r = std::move(next);
    }
    return r;
  }

  // pivot: most frequent variable among generators of degree >= 2
  std::vector<int> freq(nvars, 0);
  for (const auto& m : gens)
    if (m.degree() >= 2)
      for (std::size_t i = 0; i < nvars; ++i)
        if (m.e[i] > 0) ++freq[i];
  std::size_t x = std::max_element(freq.begin(), freq.end()) - freq.begin();

  // J + (x)
  std::vector<Monomial> plus;
  Monomial xm = Monomial::zeros(nvars);
  xm.e[x] = 1;
  plus.push_back(xm);
  for (const auto& m : gens)
    if (m.e[x] == 0) plus.push_back(m);

  // J : x
  std::vector<Monomial> colon;
  for (const auto& m : gens) {
    Monomial q = m;
    if (q.e[x] > 0) --q.e[x];
    colon.push_back(q);
  }

  return monomial_quotient_numerator(nvars, std::move(plus)) +
         monomial_quotient_numerator(nvars, std::move(colon)).shifted(1);
}

int monomial_quotient_dim(std::size_t nvars, const std::vector<Monomial>& gens) {
  for (const auto& m : gens)
    if (m.is_one()) return -1;
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
    bool ok = true;
    for (const auto& m : gens) {
      bool inside = true;  // supp(m) subset of mask?
      for (std::size_t i = 0; i < nvars && inside; ++i)
        if (m.e[i] > 0 && !(mask >> i & 1)) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace glc
