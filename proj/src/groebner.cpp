#include "pbb/groebner.hpp"

#include <algorithm>
#include <set>

namespace pbb {

namespace {

// Non-owning view of a monic reducer.
struct RedView {
  const Poly* p;
  const Monomial* lm;
  uint64_t mask;
  int sugar;
};

// Full normal form against monic reducers.
Poly reduce_full(const Ring& r, Poly p, const std::vector<RedView>& basis,
                 int* sugar_io = nullptr) {
  std::vector<Term> done;
  int sugar = sugar_io ? *sugar_io : 0;
  while (!p.is_zero()) {
    const Term& t = p.lead();
    uint64_t tmask = support_mask(t.m);
    const RedView* red = nullptr;
    for (const RedView& b : basis) {
      if ((b.mask & ~tmask) != 0) continue;
      if (divides(*b.lm, t.m)) {
        red = &b;
        break;
      }
    }
    if (!red) {
      done.push_back(t);
      std::vector<Term> rest(p.terms().begin() + 1, p.terms().end());
      p = Poly::from_terms(r, std::move(rest));
      continue;
    }
    Monomial q = mono_div(t.m, *red->lm);
    p = sub(r, p, mul_term(r, *red->p, q, t.c));
    if (sugar_io) sugar = std::max(sugar, q.deg + red->sugar);
  }
  if (sugar_io) *sugar_io = sugar;
  return Poly::from_terms(r, std::move(done));
}

Poly make_monic(const Ring& r, const Poly& p) {
  if (p.is_zero()) return p;
  if (p.lead().c == 1) return p;
  long long inv = mod_inverse(r.p, p.lead().c);
  return scale(r, p, inv);
}

struct Pair {
  int i, j;
  Monomial lcm;
  int sugar;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = cmp_degrevlex(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

std::vector<RedView> views_of(const std::vector<Poly>& ps,
                              const std::vector<Monomial>& lms,
                              const std::vector<uint64_t>& masks,
                              const std::vector<int>& sugars, int skip = -1) {
  std::vector<RedView> out;
  out.reserve(ps.size());
  for (size_t i = 0; i < ps.size(); ++i) {
    if ((int)i == skip || ps[i].is_zero()) continue;
    out.push_back({&ps[i], &lms[i], masks[i], sugars[i]});
  }
  return out;
}

}  // namespace

GroebnerBasis buchberger(const Ring& ring, std::vector<Poly> gens,
                         const ProgressFn& progress) {
  if (ring.p == 0)
    throw Error(ErrorKind::DomainMismatch,
                "Groebner bases are computed over a prime field");

  // Input pre-reduction to a pairwise-reduced monic generating set.
  {
    std::vector<Poly> gs;
    for (Poly& g : gens)
      if (!g.is_zero()) gs.push_back(make_monic(ring, g));
    std::sort(gs.begin(), gs.end(), [](const Poly& a, const Poly& b) {
      return cmp_degrevlex(a.lead().m, b.lead().m) < 0;
    });
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<Monomial> lms;
      std::vector<uint64_t> masks;
      std::vector<int> sugars;
      for (const Poly& g : gs) {
        lms.push_back(g.is_zero() ? Monomial::one(ring.nvars) : g.lead().m);
        masks.push_back(g.is_zero() ? ~0ull : support_mask(g.lead().m));
        sugars.push_back(g.degree());
      }
      for (size_t k = 0; k < gs.size(); ++k) {
        if (gs[k].is_zero()) continue;
        auto others = views_of(gs, lms, masks, sugars, (int)k);
        Poly r = make_monic(ring, reduce_full(ring, gs[k], others));
        if (!(r == gs[k])) {
          changed = true;
          gs[k] = std::move(r);
          if (gs[k].is_zero()) {
            lms[k] = Monomial::one(ring.nvars);
            masks[k] = ~0ull;
          } else {
            lms[k] = gs[k].lead().m;
            masks[k] = support_mask(lms[k]);
          }
          sugars[k] = gs[k].degree();
        }
      }
    }
    gens.clear();
    for (Poly& g : gs)
      if (!g.is_zero()) gens.push_back(std::move(g));
  }

  std::vector<Poly> basis;
  std::vector<Monomial> lms;
  std::vector<uint64_t> masks;
  std::vector<int> sugars;
  auto add_elt = [&](Poly p, int sugar) {
    p = make_monic(ring, p);
    lms.push_back(p.lead().m);
    masks.push_back(support_mask(p.lead().m));
    sugars.push_back(sugar);
    basis.push_back(std::move(p));
  };

  std::multiset<Pair, PairLess> pairs;
  auto update = [&](int t) {
    const Monomial& lt = lms[t];
    for (auto it = pairs.begin(); it != pairs.end();) {
      if (divides(lt, it->lcm)) {
        Monomial l_it = mono_lcm(lms[it->i], lt);
        Monomial l_jt = mono_lcm(lms[it->j], lt);
        if (cmp_degrevlex(l_it, it->lcm) != 0 &&
            cmp_degrevlex(l_jt, it->lcm) != 0) {
          it = pairs.erase(it);
          continue;
        }
      }
      ++it;
    }
    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
      bool drop = false;
    };
    std::vector<Cand> cands;
    cands.reserve(t);
    for (int i = 0; i < t; ++i) {
      Monomial l = mono_lcm(lms[i], lt);
      bool coprime = l.deg == lms[i].deg + lt.deg;
      cands.push_back({i, std::move(l), coprime});
    }
    for (size_t a = 0; a < cands.size(); ++a)
      for (size_t b = 0; b < cands.size(); ++b) {
        if (a == b || cands[a].drop || cands[b].drop) continue;
        if (divides(cands[b].lcm, cands[a].lcm) &&
            cmp_degrevlex(cands[b].lcm, cands[a].lcm) != 0)
          cands[a].drop = true;
      }
    for (size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].drop) continue;
      for (size_t b = a + 1; b < cands.size(); ++b) {
        if (cands[b].drop) continue;
        if (cmp_degrevlex(cands[a].lcm, cands[b].lcm) == 0) {
          if (cands[b].coprime) cands[a].drop = true;
          else cands[b].drop = true;
        }
      }
      if (cands[a].drop) continue;
    }
    for (const Cand& c : cands) {
      if (c.drop || c.coprime) continue;
      int sugar = std::max(sugars[c.i] + c.lcm.deg - lms[c.i].deg,
                           sugars[t] + c.lcm.deg - lt.deg);
      pairs.insert({c.i, t, c.lcm, sugar});
    }
  };

  for (Poly& g : gens) {
    int s = g.degree();
    add_elt(std::move(g), s);
    update((int)basis.size() - 1);
  }

  size_t reductions = 0;
  while (!pairs.empty()) {
    Pair pr = *pairs.begin();
    pairs.erase(pairs.begin());

    Monomial qi = mono_div(pr.lcm, lms[pr.i]);
    Monomial qj = mono_div(pr.lcm, lms[pr.j]);
    Poly s = sub(ring, mul_term(ring, basis[pr.i], qi, 1),
                 mul_term(ring, basis[pr.j], qj, 1));
    int sugar = pr.sugar;
    auto view = views_of(basis, lms, masks, sugars);
    Poly nf = reduce_full(ring, std::move(s), view, &sugar);
    ++reductions;
    if (progress && reductions % 64 == 0)
      progress({pairs.size(), basis.size(), pr.sugar, reductions});
    if (!nf.is_zero()) {
      add_elt(std::move(nf), sugar);
      update((int)basis.size() - 1);
    }
  }

  // Reduce to the unique reduced basis.
  std::vector<bool> keep(basis.size(), true);
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = 0; b < basis.size(); ++b) {
      if (a == b || !keep[a] || !keep[b]) continue;
      if (divides(basis[b].lead().m, basis[a].lead().m)) {
        if (cmp_degrevlex(basis[b].lead().m, basis[a].lead().m) == 0 && b > a)
          continue;
        keep[a] = false;
      }
    }
  std::vector<Poly> kept;
  for (size_t a = 0; a < basis.size(); ++a)
    if (keep[a]) kept.push_back(std::move(basis[a]));
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Monomial> klm;
    std::vector<uint64_t> kmask;
    std::vector<int> ksug;
    for (const Poly& g : kept) {
      klm.push_back(g.lead().m);
      kmask.push_back(support_mask(g.lead().m));
      ksug.push_back(0);
    }
    for (size_t a = 0; a < kept.size(); ++a) {
      auto others = views_of(kept, klm, kmask, ksug, (int)a);
      Poly r = make_monic(ring, reduce_full(ring, kept[a], others));
      if (!(r == kept[a])) {
        kept[a] = std::move(r);
        klm[a] = kept[a].lead().m;
        kmask[a] = support_mask(klm[a]);
        changed = true;
      }
    }
  }
  std::sort(kept.begin(), kept.end(), [](const Poly& a, const Poly& b) {
    return cmp_degrevlex(a.lead().m, b.lead().m) < 0;
  });
  GroebnerBasis G;
  G.ring = ring;
  G.g = std::move(kept);
  return G;
}

Poly normal_form(const Poly& p, const GroebnerBasis& G) {
  std::vector<RedView> basis;
  basis.reserve(G.g.size());
  for (const Poly& g : G.g)
    basis.push_back({&g, &g.lead().m, support_mask(g.lead().m), 0});
  return reduce_full(G.ring, p, basis);
}

Membership certify_nonmembership(const Ring& ring_z, const Poly& p,
                                 const std::vector<Poly>& gens, uint64_t prime,
                                 Poly* nf_out, const ProgressFn& progress) {
  std::vector<Poly> gens_p;
  for (const Poly& g : gens) {
    Poly gp = to_field(ring_z, g, prime);
    if (!gp.is_zero()) gens_p.push_back(std::move(gp));
  }
  Ring rp{ring_z.nvars, prime};
  GroebnerBasis G = buchberger(rp, std::move(gens_p), progress);
  Poly nf = normal_form(to_field(ring_z, p, prime), G);
  if (nf_out) *nf_out = nf;
  return nf.is_zero() ? Membership::InconclusiveMemberModP
                      : Membership::NotInIdealOverZ;
}

}  // namespace pbb
