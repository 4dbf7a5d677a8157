#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "cliffkin/cliffkin.hpp"

namespace cliffkin {

inline void PrintTo(const AlgebraSignature& s, std::ostream* os) { *os << to_string(s); }

}  // namespace cliffkin

namespace cliffkin::testing {

/// Product of two blades by literal index-list manipulation: concatenate, bubble sort
/// counting swaps, then contract equal neighbours with the metric.
inline std::pair<int, Blade> naive_blade_product(Blade a, Blade b, const AlgebraSignature& sig) {
  std::vector<int> idx = a.indices();
  for (int i : b.indices()) idx.push_back(i);
  int sign = 1;
  for (std::size_t pass = 0; pass < idx.size(); ++pass)
    for (std::size_t k = 0; k + 1 < idx.size(); ++k)
      if (idx[k] > idx[k + 1]) {
        std::swap(idx[k], idx[k + 1]);
        sign = -sign;
      }
  std::vector<int> out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k + 1 < idx.size() && idx[k] == idx[k + 1]) {
      int i = idx[k];
      sign *= i <= sig.p ? 1 : (i <= sig.p + sig.q ? -1 : 0);
      ++k;
    } else {
      out.push_back(idx[k]);
    }
  }
  std::uint32_t mask = 0;
  for (int i : out) mask |= std::uint32_t{1} << (i - 1);
  return {sign, Blade(mask)};
}

/// Metric b(x, y) on coordinate vectors, read straight off the signature.
inline Rational metric(const AlgebraSignature& sig, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational s = 0;
  for (int i = 1; i <= sig.n(); ++i) {
    int sq = i <= sig.p ? 1 : (i <= sig.p + sig.q ? -1 : 0);
    s += sq * x[i - 1] * y[i - 1];
  }
  return s;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int max_num = 5, int max_den = 4) {
    Rational r(integer(-max_num, max_num), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (r != 0) return r;
    }
  }

  std::vector<Rational> coords(int n) {
    std::vector<Rational> v;
    for (int i = 0; i < n; ++i) v.push_back(rational());
    return v;
  }

  RationalMultivector multivector(const AlgebraSignature& sig, int max_terms = 6) {
    RationalMultivector m(sig);
    auto blades = all_blades(sig);
    int terms = integer(0, max_terms);
    for (int t = 0; t < terms; ++t)
      m.add(blades[integer(0, static_cast<int>(blades.size()) - 1)], rational());
    return m;
  }

  RationalMultivector even_multivector(const AlgebraSignature& sig, int max_terms = 6) {
    return even_part(multivector(sig, max_terms));
  }

  RationalMultivector vector(const AlgebraSignature& sig) { return RationalMultivector::vector(sig, coords(sig.n())); }

  /// Random coordinates with b(w, w) != 0.
  std::vector<Rational> anisotropic(const AlgebraSignature& sig) {
    for (;;) {
      auto w = coords(sig.n());
      if (metric(sig, w, w) != 0) return w;
    }
  }

  /// Vector with b(x, x) = sign, obtained by reflecting a basis generator of that square.
  std::vector<Rational> unit_vector(const AlgebraSignature& sig, int sign) {
    int lo = sign > 0 ? 1 : sig.p + 1;
    int hi = sign > 0 ? sig.p : sig.p + sig.q;
    std::vector<Rational> x(sig.n(), Rational(0));
    x[integer(lo, hi) - 1] = 1;
    int reflections = integer(1, 3);
    for (int k = 0; k < reflections; ++k) {
      auto w = anisotropic(sig);
      Rational f = 2 * metric(sig, x, w) / metric(sig, w, w);
      for (int i = 0; i < sig.n(); ++i) x[i] -= f * w[i];
    }
    return x;
  }

  /// Product of pairs of unit vectors of equal square, so N = 1.
  RationalMultivector spin(const AlgebraSignature& sig, int max_pairs = 2) {
    RationalMultivector g = RationalMultivector::one(sig);
    int pairs = integer(1, max_pairs);
    for (int k = 0; k < pairs; ++k) {
      int sign = sig.p == 0 ? -1 : (sig.q == 0 ? 1 : (integer(0, 1) ? 1 : -1));
      g = g * RationalMultivector::vector(sig, unit_vector(sig, sign)) *
          RationalMultivector::vector(sig, unit_vector(sig, sign));
    }
    return g;
  }

  /// Odd number of unit vectors with overall N = 1.
  RationalMultivector odd_pin(const AlgebraSignature& sig) {
    // A single unit vector with b = -1 has N = 1.
    if (sig.q == 0) throw Error("odd Pin elements of norm 1 need a negative generator");
    return spin(sig) * RationalMultivector::vector(sig, unit_vector(sig, -1));
  }

  /// Product of 1..max_factors random anisotropic vectors.
  VersorWitness versor(const AlgebraSignature& sig, int max_factors = 4) {
    std::vector<RationalMultivector> factors;
    int count = integer(1, max_factors);
    for (int k = 0; k < count; ++k) factors.push_back(RationalMultivector::vector(sig, anisotropic(sig)));
    return make_versor(sig, std::move(factors));
  }

  Polynomial polynomial(const std::vector<std::string>& vars, int max_terms = 4, int max_degree = 3) {
    Polynomial p;
    int terms = integer(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      Polynomial m(rational());
      int deg = integer(0, max_degree);
      for (int d = 0; d < deg; ++d) m *= Polynomial::variable(vars[integer(0, static_cast<int>(vars.size()) - 1)]);
      p += m;
    }
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cliffkin::testing
