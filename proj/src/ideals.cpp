#include "pbb/ideals.hpp"

#include <sstream>

namespace pbb {

namespace {

enum Sub { X, Y, Z, XcY, ZsY, YsX, ZsX, XcZ, YcZ };
enum Letter { A, B, C, D, E, F };

struct Factor {
  int letter;
  Sub s1, s2;
};

struct TTerm {
  int coeff;        // +1 or -1
  bool delta;       // multiply by the circle value
  std::vector<Factor> fs;
};

struct Template {
  int arity;  // 1, 2 or 3
  std::vector<TTerm> terms;
};

// Shorthand builders.
TTerm t(int c, std::initializer_list<Factor> fs) { return {c, false, fs}; }
TTerm td(int c, std::initializer_list<Factor> fs) { return {c, true, fs}; }

// P1 = (x,y), P2 = (y,z), P3 = (x o y, z * y): one side of the triangle;
// Q1 = (x,z), Q2 = (y*x, z*x), Q3 = (x o z, y o z): the other.
Factor P1(int L) { return {L, X, Y}; }
Factor P2(int L) { return {L, Y, Z}; }
Factor P3(int L) { return {L, XcY, ZsY}; }
Factor Q1(int L) { return {L, X, Z}; }
Factor Q2(int L) { return {L, YsX, ZsX}; }
Factor Q3(int L) { return {L, XcZ, YcZ}; }

std::vector<Template> triangle_templates(bool both_sided_monomials) {
  // Common to both variants: the twelve equation relations.
  std::vector<Template> ts;
  auto add3 = [&](std::initializer_list<TTerm> terms) {
    ts.push_back({3, terms});
  };
  add3({t(1, {P1(A), P2(A), P3(A)}), t(1, {P1(C), P2(C), P3(A)}),
        t(-1, {Q1(A), Q2(A), Q3(A)}), t(-1, {Q1(A), Q2(C), Q3(C)})});
  add3({t(1, {P1(A), P2(B), P3(B)}), t(1, {P1(C), P2(B), P3(C)}),
        t(-1, {Q1(B), Q2(B), Q3(A)}), t(-1, {Q1(C), Q2(B), Q3(C)})});
  add3({t(1, {P1(B), P2(A), P3(B)}), t(1, {P1(B), P2(C), P3(C)}),
        t(-1, {Q1(B), Q2(A), Q3(B)}), t(-1, {Q1(C), Q2(C), Q3(B)})});
  add3({t(1, {P1(A), P2(C), P3(A)}), t(1, {P1(C), P2(A), P3(A)}),
        t(-1, {Q1(C), Q2(A), Q3(A)})});
  add3({t(1, {P1(A), P2(A), P3(C)}), t(-1, {Q1(A), Q2(A), Q3(C)}),
        t(-1, {Q1(A), Q2(C), Q3(A)})});
  add3({t(1, {P1(A), P2(C), P3(B)}), t(-1, {Q1(B), Q2(B), Q3(C)}),
        t(-1, {Q1(C), Q2(B), Q3(A)})});
  add3({t(1, {P1(B), P2(C), P3(B)}), t(1, {P1(B), P2(A), P3(C)}),
        t(-1, {Q1(B), Q2(A), Q3(C)})});
  add3({t(1, {P1(A), P2(B), P3(C)}), t(1, {P1(C), P2(B), P3(B)}),
        t(-1, {Q1(B), Q2(C), Q3(A)})});
  add3({t(1, {P1(C), P2(A), P3(B)}), t(-1, {Q1(B), Q2(C), Q3(B)}),
        t(-1, {Q1(C), Q2(A), Q3(B)})});
  add3({t(1, {P1(C), P2(C), P3(B)}), t(-1, {Q1(B), Q2(C), Q3(C)})});
  add3({t(1, {P1(A), P2(C), P3(C)}), t(-1, {Q1(C), Q2(C), Q3(A)})});
  add3({t(1, {P1(C), P2(A), P3(C)}), t(-1, {Q1(C), Q2(A), Q3(C)})});

  if (both_sided_monomials) {
    // Variant 1 extras: eight pure monomials.
    add3({t(1, {P1(B), P2(C), P3(A)})});
    add3({t(1, {P1(C), P2(B), P3(A)})});
    add3({t(1, {P1(B), P2(B), P3(C)})});
    add3({t(1, {P1(C), P2(C), P3(C)})});
    add3({t(1, {Q1(A), Q2(B), Q3(C)})});
    add3({t(1, {Q1(A), Q2(C), Q3(B)})});
    add3({t(1, {Q1(C), Q2(B), Q3(B)})});
    add3({t(1, {Q1(C), Q2(C), Q3(C)})});
    // The two long relations, with the vertex-carrying terms omitted (they
    // vanish separately).
    add3({t(1, {P1(A), P2(A), P3(B)}), t(-1, {Q1(A), Q2(B), Q3(A)}),
          t(-1, {Q1(A), Q2(A), Q3(B)}), td(-1, {Q1(A), Q2(B), Q3(B)}),
          t(-1, {Q1(B), Q2(B), Q3(B)})});
    add3({t(1, {Q1(B), Q2(A), Q3(A)}), t(-1, {P1(B), P2(A), P3(A)}),
          t(-1, {P1(A), P2(B), P3(A)}), td(-1, {P1(B), P2(B), P3(A)}),
          t(-1, {P1(B), P2(B), P3(B)})});
  } else {
    // Variant 2: only the all-vertex monomials vanish outright.
    add3({t(1, {P1(C), P2(C), P3(C)})});
    add3({t(1, {Q1(C), Q2(C), Q3(C)})});
    add3({t(1, {P1(A), P2(A), P3(B)}), t(-1, {Q1(A), Q2(B), Q3(A)}),
          t(-1, {Q1(A), Q2(A), Q3(B)}), td(-1, {Q1(A), Q2(B), Q3(B)}),
          t(-1, {Q1(B), Q2(B), Q3(B)}), t(-1, {Q1(A), Q2(B), Q3(C)}),
          t(-1, {Q1(A), Q2(C), Q3(B)}), t(-1, {Q1(C), Q2(B), Q3(B)})});
    add3({t(1, {Q1(B), Q2(A), Q3(A)}), t(-1, {P1(B), P2(A), P3(A)}),
          t(-1, {P1(A), P2(B), P3(A)}), td(-1, {P1(B), P2(B), P3(A)}),
          t(-1, {P1(B), P2(B), P3(B)}), t(-1, {P1(B), P2(C), P3(A)}),
          t(-1, {P1(C), P2(B), P3(A)}), t(-1, {P1(B), P2(B), P3(C)})});
  }
  return ts;
}

std::vector<Template> templates_for(int variant) {
  std::vector<Template> ts;
  Factor Axx{A, X, X}, Bxx{B, X, X}, Cxx{C, X, X};
  Factor Dxx{D, X, X}, Exx{E, X, X}, Fxx{F, X, X};
  Factor Axy{A, X, Y}, Bxy{B, X, Y}, Cxy{C, X, Y};
  Factor Dxy{D, X, Y}, Exy{E, X, Y}, Fxy{F, X, Y};
  if (variant == 1) {
    ts.push_back({1, {td(1, {Axx}), t(1, {Bxx}), t(-1, {})}});
    ts.push_back({1, {td(1, {Dxx}), t(1, {Exx}), t(-1, {})}});
    ts.push_back({1, {t(1, {Cxx})}});
    ts.push_back({1, {t(1, {Fxx})}});
    ts.push_back({2, {t(1, {Axy, Fxy})}});
    ts.push_back({2, {t(1, {Cxy, Dxy})}});
    ts.push_back({2, {t(1, {Bxy, Fxy})}});
    ts.push_back({2, {t(1, {Cxy, Exy})}});
    ts.push_back({2, {t(1, {Axy, Dxy}), t(-1, {Bxy, Exy})}});
    ts.push_back({2, {t(1, {Axy, Dxy}), t(1, {Cxy, Fxy}), t(-1, {})}});
    ts.push_back({2, {td(1, {Axy, Dxy}), t(1, {Axy, Exy}), t(1, {Bxy, Dxy})}});
    auto tri = triangle_templates(true);
    ts.insert(ts.end(), tri.begin(), tri.end());
  } else if (variant == 2) {
    ts.push_back({1, {td(1, {Axx}), t(1, {Bxx}), t(1, {Cxx}), t(-1, {})}});
    ts.push_back({1, {td(1, {Dxx}), t(1, {Exx}), t(1, {Fxx}), t(-1, {})}});
    ts.push_back({2, {t(1, {Axy, Fxy}), t(1, {Cxy, Dxy})}});
    ts.push_back({2, {t(1, {Bxy, Fxy}), t(1, {Cxy, Exy})}});
    ts.push_back({2, {t(1, {Axy, Dxy}), t(-1, {Bxy, Exy})}});
    ts.push_back({2, {t(1, {Axy, Dxy}), t(1, {Cxy, Fxy}), t(-1, {})}});
    ts.push_back({2, {td(1, {Axy, Dxy}), t(1, {Axy, Exy}), t(1, {Bxy, Dxy})}});
    auto tri = triangle_templates(false);
    ts.insert(ts.end(), tri.begin(), tri.end());
  } else {
    throw Error(ErrorKind::InvalidVariant, "variant must be 1 or 2");
  }
  return ts;
}

int resolve(const Biquandle& b, Sub s, int x, int y, int z) {
  switch (s) {
    case X: return x;
    case Y: return y;
    case Z: return z;
    case XcY: return b.circ(x, y);
    case ZsY: return b.star(z, y);
    case YsX: return b.star(y, x);
    case ZsX: return b.star(z, x);
    case XcZ: return b.circ(x, z);
    case YcZ: return b.circ(y, z);
  }
  return 0;
}

}  // namespace

long long expected_generator_count(int variant, int m) {
  long long mm = (long long)m * m, mmm = mm * m;
  if (variant == 1) return 4 * m + 7 * mm + 22 * mmm;
  if (variant == 2) return 2 * m + 5 * mm + 16 * mmm;
  throw Error(ErrorKind::InvalidVariant, "variant must be 1 or 2");
}

IdealSpec build_ideal(const Biquandle& b, int variant, long long delta,
                      bool delta_symbolic) {
  if (!b.valid())
    throw Error(ErrorKind::MalformedTable, "biquandle axioms do not hold");
  IdealSpec spec;
  spec.variant = variant;
  spec.delta = delta;
  spec.delta_symbolic = delta_symbolic;
  spec.vars.m = b.size();
  spec.ring = spec.vars.ring();
  spec.biquandle_hash = b.hash();

  auto ts = templates_for(variant);
  int m = b.size();
  for (const Template& tpl : ts) {
    int count = 0;
    auto emit = [&](int x, int y, int z) {
      std::vector<Term> terms;
      for (const TTerm& tt : tpl.terms) {
        Monomial mono = Monomial::one(spec.ring.nvars);
        for (const Factor& f : tt.fs) {
          int sx = resolve(b, f.s1, x, y, z);
          int sy = resolve(b, f.s2, x, y, z);
          mono = mono_mul(mono,
                          Monomial::var(spec.ring.nvars,
                                        spec.vars.id(f.letter, sx, sy)));
        }
        long long c = tt.coeff;
        if (tt.delta) {
          if (delta_symbolic)
            mono = mono_mul(mono, Monomial::var(spec.ring.nvars,
                                                spec.vars.delta_id()));
          else
            c *= delta;
        }
        terms.push_back({std::move(mono), c});
      }
      spec.gens.push_back(Poly::from_terms(spec.ring, std::move(terms)));
      ++count;
    };
    if (tpl.arity == 1) {
      for (int x = 1; x <= m; ++x) emit(x, 0, 0);
    } else if (tpl.arity == 2) {
      for (int x = 1; x <= m; ++x)
        for (int y = 1; y <= m; ++y) emit(x, y, 0);
    } else {
      for (int x = 1; x <= m; ++x)
        for (int y = 1; y <= m; ++y)
          for (int z = 1; z <= m; ++z) emit(x, y, z);
    }
    spec.family_counts.push_back(count);
  }
  return spec;
}

std::string IdealSpec::manifest() const {
  std::ostringstream os;
  os << "ideal1:bq=" << hex64(biquandle_hash) << ";j=" << variant
     << ";delta=" << (delta_symbolic ? std::string("symbolic")
                                     : std::to_string(delta))
     << ";m=" << vars.m << ";order=degrevlex;gens="
     << gens.size() << ";fams=";
  for (int c : family_counts) os << c << ".";
  return os.str();
}

}  // namespace pbb
