#include "pbb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pbb {

int cmp_degrevlex(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = (int)a.e.size() - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (size_t i = 0; i < m.e.size(); ++i) {
    int v = m.e[i] + b.e[i];
    if (v > 255) throw Error(ErrorKind::DomainMismatch, "exponent overflow");
    m.e[i] = (uint8_t)v;
  }
  m.deg = a.deg + b.deg;
  return m;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial m = b;
  for (size_t i = 0; i < m.e.size(); ++i) m.e[i] = (uint8_t)(b.e[i] - a.e[i]);
  m.deg = b.deg - a.deg;
  return m;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  m.deg = 0;
  for (size_t i = 0; i < m.e.size(); ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    m.deg += m.e[i];
  }
  return m;
}

uint64_t support_mask(const Monomial& a) {
  uint64_t mask = 0;
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i]) mask |= 1ull << (i & 63);
  return mask;
}

long long coeff_normalize(const Ring& r, long long c) {
  if (r.p == 0) return c;
  long long p = (long long)r.p;
  c %= p;
  if (c < 0) c += p;
  return c;
}

long long mod_inverse(uint64_t p, long long a) {
  long long t = 0, nt = 1, r = (long long)p, nr = a % (long long)p;
  if (nr < 0) nr += (long long)p;
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw Error(ErrorKind::DomainMismatch, "not invertible mod p");
  t %= (long long)p;
  if (t < 0) t += (long long)p;
  return t;
}

Poly Poly::constant(const Ring& r, long long c) {
  return from_terms(r, {{Monomial::one(r.nvars), c}});
}

Poly Poly::variable(const Ring& r, int i) {
  return from_terms(r, {{Monomial::var(r.nvars, i), 1}});
}

Poly Poly::from_terms(const Ring& r, std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
    return cmp_degrevlex(a.m, b.m) > 0;
  });
  Poly p;
  for (auto& t : ts) {
    if ((int)t.m.e.size() != r.nvars)
      throw Error(ErrorKind::DomainMismatch, "wrong variable universe");
    if (!p.ts_.empty() && p.ts_.back().m == t.m) {
      p.ts_.back().c += t.c;
      p.ts_.back().c = coeff_normalize(r, p.ts_.back().c);
      if (p.ts_.back().c == 0) p.ts_.pop_back();
    } else {
      t.c = coeff_normalize(r, t.c);
      if (t.c != 0) p.ts_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::operator==(const Poly& o) const {
  if (ts_.size() != o.ts_.size()) return false;
  for (size_t i = 0; i < ts_.size(); ++i)
    if (ts_[i].c != o.ts_[i].c || !(ts_[i].m == o.ts_[i].m)) return false;
  return true;
}

Poly add(const Ring& r, const Poly& a, const Poly& b) {
  Poly out;
  size_t i = 0, j = 0;
  while (i < a.ts_.size() && j < b.ts_.size()) {
    int c = cmp_degrevlex(a.ts_[i].m, b.ts_[j].m);
    if (c > 0) {
      out.ts_.push_back(a.ts_[i++]);
    } else if (c < 0) {
      out.ts_.push_back(b.ts_[j++]);
    } else {
      long long s = coeff_normalize(r, a.ts_[i].c + b.ts_[j].c);
      if (s != 0) out.ts_.push_back({a.ts_[i].m, s});
      ++i;
      ++j;
    }
  }
  while (i < a.ts_.size()) out.ts_.push_back(a.ts_[i++]);
  while (j < b.ts_.size()) out.ts_.push_back(b.ts_[j++]);
  return out;
}

Poly neg(const Ring& r, const Poly& a) {
  Poly out = a;
  for (auto& t : out.ts_) t.c = coeff_normalize(r, -t.c);
  return out;
}

Poly sub(const Ring& r, const Poly& a, const Poly& b) {
  return add(r, a, neg(r, b));
}

Poly mul_term(const Ring& r, const Poly& a, const Monomial& m, long long c) {
  c = coeff_normalize(r, c);
  if (c == 0) return Poly::zero();
  Poly out;
  out.ts_.reserve(a.ts_.size());
  for (const Term& t : a.ts_) {
    long long nc;
    if (r.p) {
      nc = (long long)((__int128)t.c * c % (long long)r.p);
    } else {
      __int128 wide = (__int128)t.c * c;
      nc = (long long)wide;
      if ((__int128)nc != wide)
        throw Error(ErrorKind::DomainMismatch, "integer coefficient overflow");
    }
    nc = coeff_normalize(r, nc);
    if (nc != 0) out.ts_.push_back({mono_mul(t.m, m), nc});
  }
  return out;
}

Poly mul(const Ring& r, const Poly& a, const Poly& b) {
  std::vector<Term> ts;
  ts.reserve(a.ts_.size() * b.ts_.size());
  for (const Term& t : b.ts_) {
    Poly part = mul_term(r, a, t.m, t.c);
    for (auto& q : part.ts_) ts.push_back(std::move(q));
  }
  return Poly::from_terms(r, std::move(ts));
}

Poly scale(const Ring& r, const Poly& a, long long c) {
  return mul_term(r, a, Monomial::one(r.nvars), c);
}

Poly to_field(const Ring& rz, const Poly& a, uint64_t p) {
  Ring rp{rz.nvars, p};
  std::vector<Term> ts = a.terms();
  return Poly::from_terms(rp, std::move(ts));
}

long long eval_all(const Ring& r, const Poly& a,
                   const std::vector<long long>& values) {
  if ((int)values.size() != r.nvars)
    throw Error(ErrorKind::DomainMismatch, "wrong number of values");
  long long total = 0;
  for (const Term& t : a.terms()) {
    long long v = t.c;
    for (int i = 0; i < r.nvars; ++i)
      for (int k = 0; k < t.m.e[i]; ++k) v *= values[i];
    total += v;
  }
  return total;
}

std::string BracketVars::name(int vid) const {
  if (vid == delta_id()) return "delta";
  int letter = vid / (m * m);
  int rest = vid % (m * m);
  int x = rest / m + 1, y = rest % m + 1;
  std::ostringstream os;
  os << (char)('A' + letter) << "[" << x << "," << y << "]";
  return os.str();
}

std::string poly_to_string(const Ring& r, const Poly& a,
                           const std::function<std::string(int)>& var_name) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : a.terms()) {
    long long c = t.c;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      c = std::llabs(c);
    }
    first = false;
    bool printed = false;
    if (c != 1 || t.m.is_one()) {
      os << c;
      printed = true;
    }
    for (int i = 0; i < r.nvars; ++i) {
      if (!t.m.e[i]) continue;
      if (printed) os << "*";
      os << var_name(i);
      if (t.m.e[i] > 1) os << "^" << (int)t.m.e[i];
      printed = true;
    }
  }
  return os.str();
}

std::string poly_to_string(const BracketVars& v, const Poly& a) {
  return poly_to_string(v.ring(), a, [&](int i) { return v.name(i); });
}

Poly poly_parse(const Ring& r, const BracketVars& v, const std::string& text) {
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  std::vector<Term> ts;
  skip();
  bool expect_term = true;
  long long sign = 1;
  while (i < text.size()) {
    skip();
    if (i >= text.size()) break;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -sign : sign;
      ++i;
      expect_term = true;
      continue;
    }
    if (!expect_term)
      throw Error(ErrorKind::SyntaxError, "expected + or - between terms");
    long long coeff = 1;
    Monomial m = Monomial::one(r.nvars);
    bool any = false;
    while (true) {
      skip();
      if (i < text.size() && std::isdigit((unsigned char)text[i])) {
        long long c = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i]))
          c = c * 10 + (text[i++] - '0');
        coeff *= c;
        any = true;
      } else if (i < text.size() &&
                 (std::isalpha((unsigned char)text[i]))) {
        int vid;
        if (text.compare(i, 5, "delta") == 0) {
          vid = v.delta_id();
          i += 5;
        } else {
          char L = (char)std::toupper((unsigned char)text[i]);
          if (L < 'A' || L > 'F')
            throw Error(ErrorKind::SyntaxError, "unknown variable letter");
          ++i;
          skip();
          if (i >= text.size() || text[i] != '[')
            throw Error(ErrorKind::SyntaxError, "expected [x,y] subscript");
          ++i;
          auto read_int = [&] {
            skip();
            int val = 0;
            if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
              throw Error(ErrorKind::SyntaxError, "expected subscript digit");
            while (i < text.size() && std::isdigit((unsigned char)text[i]))
              val = val * 10 + (text[i++] - '0');
            return val;
          };
          int x = read_int();
          skip();
          if (i >= text.size() || text[i] != ',')
            throw Error(ErrorKind::SyntaxError, "expected ',' in subscript");
          ++i;
          int y = read_int();
          skip();
          if (i >= text.size() || text[i] != ']')
            throw Error(ErrorKind::SyntaxError, "expected ']' in subscript");
          ++i;
          if (x < 1 || x > v.m || y < 1 || y > v.m)
            throw Error(ErrorKind::SyntaxError, "subscript out of range");
          vid = v.id(L - 'A', x, y);
        }
        int exp = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          skip();
          exp = 0;
          if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
            throw Error(ErrorKind::SyntaxError, "expected exponent");
          while (i < text.size() && std::isdigit((unsigned char)text[i]))
            exp = exp * 10 + (text[i++] - '0');
        }
        m = mono_mul(m, Monomial::var(r.nvars, vid, exp));
        any = true;
      } else {
        break;
      }
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any) throw Error(ErrorKind::SyntaxError, "expected term");
    ts.push_back({std::move(m), sign * coeff});
    sign = 1;
    expect_term = false;
  }
  if (expect_term && !ts.empty())
    throw Error(ErrorKind::SyntaxError, "dangling sign");
  return Poly::from_terms(r, std::move(ts));
}

}  // namespace pbb
