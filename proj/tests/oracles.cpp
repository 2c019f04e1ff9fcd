#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pbb::oracle {

uint64_t coloring_count_bruteforce(const OrientedDiagram& d,
                                   const Biquandle& b) {
  int s = d.semiarc_count();
  int m = b.size();
  uint64_t total = 1;
  for (int i = 0; i < s; ++i) total *= m;
  uint64_t count = 0;
  Coloring f(s, 1);
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t acc = code;
    for (int i = 0; i < s; ++i) {
      f[i] = (uint8_t)(acc % m + 1);
      acc /= m;
    }
    if (coloring_valid(d, b, f)) ++count;
  }
  return count;
}

namespace {

// The 8 half-edge symmetries at a vertex: swap the two pairs and/or flip
// within each pair.
int map_slot(int slot, int sym) {
  bool swap_pairs = sym & 1, flip_a = sym & 2, flip_b = sym & 4;
  int pair = slot / 2, idx = slot % 2;
  if ((pair == 0 && flip_a) || (pair == 1 && flip_b)) idx ^= 1;
  if (swap_pairs) pair ^= 1;
  return pair * 2 + idx;
}

}  // namespace

bool isomorphic_bruteforce(const FramedGraph& a, const FramedGraph& b) {
  if (a.vertices() != b.vertices() || a.free_circles() != b.free_circles())
    return false;
  int n = a.vertices();
  if (n == 0) return true;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> syms(n, 0);
  do {
    // iterate sym vectors in odometer fashion
    std::fill(syms.begin(), syms.end(), 0);
    while (true) {
      auto image = [&](int h) {
        int v = FramedGraph::vertex_of(h), s = h % 4;
        return 4 * perm[v] + map_slot(s, syms[v]);
      };
      bool ok = true;
      for (int h = 0; h < 4 * n && ok; ++h)
        if (image(a.mate(h)) != b.mate(image(h))) ok = false;
      if (ok) return true;
      int k = 0;
      while (k < n && syms[k] == 7) syms[k++] = 0;
      if (k == n) break;
      syms[k]++;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::optional<bool> macaulay_member(const Ring& ring, const Poly& probe,
                                    const std::vector<Poly>& gens,
                                    int degree_cap) {
  if (probe.is_zero()) return true;
  long long p = (long long)ring.p;
  {
    const int cap = degree_cap;
    // Enumerate monomials of degree <= cap.
    std::map<std::vector<uint8_t>, int> index;
    std::vector<Monomial> monos;
    std::vector<uint8_t> e(ring.nvars, 0);
    std::function<void(int, int)> gen = [&](int var, int left) {
      if (var == ring.nvars) {
        Monomial m{e, cap - left};
        index[m.e] = (int)monos.size();
        monos.push_back(std::move(m));
        return;
      }
      for (int k = 0; k <= left; ++k) {
        e[var] = (uint8_t)k;
        gen(var + 1, left - k);
      }
      e[var] = 0;
    };
    gen(0, cap);

    // Row-reduced span of {m * g}.
    std::vector<std::vector<long long>> rows;  // echelon, leading col marked
    std::vector<int> lead_col;
    auto reduce_vec = [&](std::vector<long long>& v) {
      for (size_t r = 0; r < rows.size(); ++r) {
        long long c = v[lead_col[r]] % p;
        if (c == 0) continue;
        long long factor = c;  // rows are monic at lead
        for (size_t i = 0; i < v.size(); ++i) {
          v[i] = ((v[i] - (__int128)factor * rows[r][i]) % p + p) % p;
        }
      }
    };
    auto add_row = [&](std::vector<long long> v) {
      reduce_vec(v);
      int lc = -1;
      for (size_t i = 0; i < v.size(); ++i)
        if (v[i] % p != 0) {
          lc = (int)i;
          break;
        }
      if (lc < 0) return;
      long long inv = mod_inverse(ring.p, v[lc]);
      for (auto& x : v) x = (__int128)x * inv % p;
      rows.push_back(std::move(v));
      lead_col.push_back(lc);
    };
    auto to_vec = [&](const Poly& q) {
      std::vector<long long> v(monos.size(), 0);
      for (const Term& t : q.terms()) v[index.at(t.m.e)] = ((t.c % p) + p) % p;
      return v;
    };
    for (const Poly& g : gens) {
      if (g.is_zero()) continue;
      for (const Monomial& m : monos) {
        if (m.deg + g.degree() > cap) continue;
        add_row(to_vec(mul_term(ring, g, m, 1)));
      }
    }
    std::vector<long long> v = to_vec(probe);
    reduce_vec(v);
    if (std::all_of(v.begin(), v.end(), [&](long long x) { return x % p == 0; }))
      return true;
  }
  return std::nullopt;
}

Biquandle random_biquandle(std::mt19937_64& rng, int m) {
  while (true) {
    int family = (int)(rng() % 3);
    if (family == 0) {
      // constant action by a permutation
      std::vector<int> s(m);
      std::iota(s.begin(), s.end(), 1);
      std::shuffle(s.begin(), s.end(), rng);
      std::vector<int> t(m * m);
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) t[x * m + y] = s[x];
      Biquandle b(m, t, t);
      if (b.valid()) return b;
    } else if (family == 1) {
      // affine pair over Z_m: x o y = a x + b y + c, x * y = d x + e y + f
      int a = 1 + (int)(rng() % (m - 1 ? m - 1 : 1));
      int d = 1 + (int)(rng() % (m - 1 ? m - 1 : 1));
      int bb = (int)(rng() % m), ee = (int)(rng() % m);
      int c = (int)(rng() % m), ff = (int)(rng() % m);
      auto mk = [&](int p, int q, int r) {
        std::vector<int> t(m * m);
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y)
            t[x * m + y] = ((p * x + q * y + r) % m + m) % m + 1;
        return t;
      };
      try {
        Biquandle b(m, mk(a, bb, c), mk(d, ee, ff));
        if (b.valid()) return b;
      } catch (const Error&) {
      }
    } else {
      return Biquandle::trivial(m);
    }
  }
}

FramedGraph random_framed_graph(std::mt19937_64& rng, int max_vertices) {
  int nv = (int)(rng() % (max_vertices + 1));
  std::vector<int> halves(4 * nv);
  std::iota(halves.begin(), halves.end(), 0);
  std::shuffle(halves.begin(), halves.end(), rng);
  std::vector<int> mate(4 * nv);
  for (size_t i = 0; i < halves.size(); i += 2) {
    mate[halves[i]] = halves[i + 1];
    mate[halves[i + 1]] = halves[i];
  }
  return FramedGraph(nv, std::move(mate), (int)(rng() % 3));
}

}  // namespace pbb::oracle
