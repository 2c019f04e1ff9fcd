#pragma once

// Sparse multivariate polynomials over exact int64 coefficients, either in
// Z (p = 0) or GF(p). Monomial order is degree-reverse-lexicographic over a
// fixed variable enumeration (index 0 is the largest variable).

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pbb/error.hpp"

namespace pbb {

struct Ring {
  int nvars = 0;
  uint64_t p = 0;  // 0 = integers
  bool operator==(const Ring&) const = default;
};

struct Monomial {
  std::vector<uint8_t> e;
  int deg = 0;

  static Monomial one(int nvars) { return {std::vector<uint8_t>(nvars, 0), 0}; }
  static Monomial var(int nvars, int i, int k = 1) {
    Monomial m = one(nvars);
    m.e[i] = (uint8_t)k;
    m.deg = k;
    return m;
  }
  bool is_one() const { return deg == 0; }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

// <0, 0, >0 as a precedes/equals/succeeds b in degrevlex (a "smaller" means
// a comes later; we sort polynomials descending).
int cmp_degrevlex(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
uint64_t support_mask(const Monomial& a);

struct Term {
  Monomial m;
  long long c = 0;
};

class Poly {
public:
  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly constant(const Ring& r, long long c);
  static Poly variable(const Ring& r, int i);
  // Sorts, combines, normalizes coefficients.
  static Poly from_terms(const Ring& r, std::vector<Term> ts);

  bool is_zero() const { return ts_.empty(); }
  const std::vector<Term>& terms() const { return ts_; }
  const Term& lead() const { return ts_.front(); }
  int degree() const { return ts_.empty() ? -1 : ts_.front().m.deg; }
  size_t size() const { return ts_.size(); }

  bool operator==(const Poly& o) const;

private:
  friend Poly add(const Ring&, const Poly&, const Poly&);
  friend Poly sub(const Ring&, const Poly&, const Poly&);
  friend Poly neg(const Ring&, const Poly&);
  friend Poly mul(const Ring&, const Poly&, const Poly&);
  friend Poly mul_term(const Ring&, const Poly&, const Monomial&, long long);
  friend Poly scale(const Ring&, const Poly&, long long);
  std::vector<Term> ts_;  // sorted descending in degrevlex, nonzero coeffs
};

long long coeff_normalize(const Ring& r, long long c);
long long mod_inverse(uint64_t p, long long a);

Poly add(const Ring& r, const Poly& a, const Poly& b);
Poly sub(const Ring& r, const Poly& a, const Poly& b);
Poly neg(const Ring& r, const Poly& a);
Poly mul(const Ring& r, const Poly& a, const Poly& b);
Poly mul_term(const Ring& r, const Poly& a, const Monomial& m, long long c);
Poly scale(const Ring& r, const Poly& a, long long c);

// Map a Z-polynomial into GF(p) (same variable universe).
Poly to_field(const Ring& rz, const Poly& a, uint64_t p);

// Substitute values for every variable; exact integer result.
long long eval_all(const Ring& r, const Poly& a,
                   const std::vector<long long>& values);

// ---- variable naming for the bracket ring ---------------------------------

// Variables: letters A..F with subscripts (x,y), row-major, then delta last.
// id(letter, x, y) = letter*m^2 + (x-1)*m + (y-1); delta id = 6*m^2.
struct BracketVars {
  int m = 0;
  int count() const { return 6 * m * m + 1; }
  int delta_id() const { return 6 * m * m; }
  int id(int letter, int x, int y) const {
    return letter * m * m + (x - 1) * m + (y - 1);
  }
  std::string name(int id) const;
  Ring ring(uint64_t p = 0) const { return Ring{count(), p}; }
};

std::string poly_to_string(const Ring& r, const Poly& a,
                           const std::function<std::string(int)>& var_name);
std::string poly_to_string(const BracketVars& v, const Poly& a);
// Parses the text form, e.g. "3*A[1,2]^2*delta - 1".
Poly poly_parse(const Ring& r, const BracketVars& v, const std::string& text);

}  // namespace pbb
