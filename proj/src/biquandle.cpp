#include "pbb/biquandle.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace pbb {

Biquandle::Biquandle(int m, std::vector<int> circ, std::vector<int> star)
    : m_(m) {
  if (m <= 0 || (int)circ.size() != m * m || (int)star.size() != m * m)
    throw Error(ErrorKind::MalformedTable, "tables must be m x m");
  for (int v : circ)
    if (v < 1 || v > m)
      throw Error(ErrorKind::MalformedTable, "table entry out of range");
  for (int v : star)
    if (v < 1 || v > m)
      throw Error(ErrorKind::MalformedTable, "table entry out of range");
  circ_.assign(circ.begin(), circ.end());
  star_.assign(star.begin(), star.end());

  AxiomReport rep = verify();
  valid_ = rep.pass();
  if (!valid_) return;

  alpha_inv_.assign(m * m, 0);
  beta_inv_.assign(m * m, 0);
  for (int u = 1; u <= m; ++u)
    for (int w = 1; w <= m; ++w) {
      alpha_inv_[(u - 1) * m + (this->star(w, u) - 1)] = (uint8_t)w;
      beta_inv_[(u - 1) * m + (this->circ(w, u) - 1)] = (uint8_t)w;
    }
  sinv_x_.assign(m * m, 0);
  sinv_y_.assign(m * m, 0);
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= m; ++y) {
      int a = this->star(y, x), b = this->circ(x, y);
      sinv_x_[(a - 1) * m + (b - 1)] = (uint8_t)x;
      sinv_y_[(a - 1) * m + (b - 1)] = (uint8_t)y;
    }
}

AxiomReport Biquandle::verify() const {
  AxiomReport rep;
  rep.r1 = rep.r2 = rep.r3 = rep.r4 = true;
  int m = m_;
  for (int x = 1; x <= m && rep.r1; ++x) {
    if (circ(x, x) != star(x, x)) {
      rep.r1 = false;
      rep.failures.push_back({"R1", {x}});
    }
  }
  for (int y = 1; y <= m; ++y) {
    std::set<int> sa, sb;
    for (int x = 1; x <= m; ++x) {
      sa.insert(star(x, y));
      sb.insert(circ(x, y));
    }
    if ((int)sa.size() != m || (int)sb.size() != m) {
      rep.r2 = false;
      rep.failures.push_back({"R2", {y}});
      break;
    }
  }
  {
    std::set<std::pair<int, int>> img;
    for (int x = 1; x <= m; ++x)
      for (int y = 1; y <= m; ++y) img.insert({star(y, x), circ(x, y)});
    if ((int)img.size() != m * m) {
      rep.r3 = false;
      rep.failures.push_back({"R3", {}});
    }
  }
  for (int x = 1; x <= m && rep.r4; ++x)
    for (int y = 1; y <= m && rep.r4; ++y)
      for (int z = 1; z <= m; ++z) {
        if (circ(circ(x, z), circ(y, z)) != circ(circ(x, y), star(z, y))) {
          rep.r4 = false;
          rep.failures.push_back({"R4.1", {x, y, z}});
          break;
        }
        if (star(circ(y, z), circ(x, z)) != circ(star(y, x), star(z, x))) {
          rep.r4 = false;
          rep.failures.push_back({"R4.2", {x, y, z}});
          break;
        }
        if (star(star(z, x), star(y, x)) != star(star(z, y), circ(x, y))) {
          rep.r4 = false;
          rep.failures.push_back({"R4.3", {x, y, z}});
          break;
        }
      }
  return rep;
}

void Biquandle::require_valid() const {
  if (!valid_)
    throw Error(ErrorKind::MalformedTable, "biquandle axioms do not hold");
}

std::pair<int, int> Biquandle::crossing_map(int sign, int under_in,
                                            int over_in) const {
  require_valid();
  if (sign > 0) {
    int over_out = alpha_inv_[(under_in - 1) * m_ + (over_in - 1)];
    int under_out = circ(under_in, over_out);
    return {under_out, over_out};
  }
  int under_out = beta_inv_[(over_in - 1) * m_ + (under_in - 1)];
  int over_out = star(over_in, under_out);
  return {under_out, over_out};
}

std::pair<int, int> Biquandle::crossing_map_rev(int sign, int under_out,
                                                int over_out) const {
  require_valid();
  if (sign > 0) {
    int under_in = beta_inv_[(over_out - 1) * m_ + (under_out - 1)];
    int over_in = star(over_out, under_in);
    return {under_in, over_in};
  }
  int over_in = alpha_inv_[(under_out - 1) * m_ + (over_out - 1)];
  int under_in = circ(under_out, over_in);
  return {under_in, over_in};
}

std::pair<int, int> Biquandle::subscript(int sign, int under_in,
                                         int over_in) const {
  auto [under_out, over_out] = crossing_map(sign, under_in, over_in);
  if (sign > 0) return {under_in, over_out};
  return {under_out, over_in};
}

uint64_t Biquandle::hash() const {
  std::ostringstream os;
  os << "bq1:m=" << m_ << ";c=";
  for (uint8_t v : circ_) os << (int)v << ".";
  os << ";s=";
  for (uint8_t v : star_) os << (int)v << ".";
  return fnv1a(os.str());
}

std::string Biquandle::to_json() const {
  nlohmann::json j;
  j["m"] = m_;
  auto rows = [&](const std::vector<uint8_t>& t) {
    std::vector<std::vector<int>> r(m_, std::vector<int>(m_));
    for (int x = 0; x < m_; ++x)
      for (int y = 0; y < m_; ++y) r[x][y] = t[x * m_ + y];
    return r;
  };
  j["circ"] = rows(circ_);
  j["star"] = rows(star_);
  return j.dump();
}

Biquandle Biquandle::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("m") || !j.contains("circ") || !j.contains("star"))
    throw Error(ErrorKind::MalformedTable, "need fields m, circ, star");
  int m = j["m"].get<int>();
  auto flat = [&](const nlohmann::json& rows) {
    std::vector<int> out;
    for (const auto& row : rows)
      for (const auto& v : row) out.push_back(v.get<int>());
    return out;
  };
  return Biquandle(m, flat(j["circ"]), flat(j["star"]));
}

Biquandle Biquandle::from_matrix_text(const std::string& text) {
  std::istringstream is(text);
  int m;
  if (!(is >> m)) throw Error(ErrorKind::SyntaxError, "expected m");
  std::vector<int> vals;
  int v;
  while (is >> v) vals.push_back(v);
  if ((int)vals.size() != 2 * m * m)
    throw Error(ErrorKind::MalformedTable, "expected 2*m*m table entries");
  return Biquandle(m, {vals.begin(), vals.begin() + m * m},
                   {vals.begin() + m * m, vals.end()});
}

Biquandle Biquandle::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{') return from_json_text(text);
  return from_matrix_text(text);
}

Biquandle Biquandle::trivial(int m) {
  std::vector<int> t(m * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) t[x * m + y] = x + 1;
  return Biquandle(m, t, t);
}

// ---- colorings ---------------------------------------------------------

bool coloring_valid(const OrientedDiagram& d, const Biquandle& b,
                    const Coloring& f) {
  if ((int)f.size() != d.semiarc_count()) return false;
  for (uint8_t c : f)
    if (c < 1 || c > b.size()) return false;
  for (int id : d.crossing_ids()) {
    const CrossingEnds& e = d.crossing(id);
    auto [uo, oo] = b.crossing_map(e.sign, f[e.under_in], f[e.over_in]);
    if (f[e.under_out] != uo || f[e.over_out] != oo) return false;
  }
  return true;
}

namespace {

struct Solver {
  const OrientedDiagram& d;
  const Biquandle& b;
  std::vector<const CrossingEnds*> crossings;
  std::vector<Coloring> out;
  std::vector<int> col;  // 0 = unset

  Solver(const OrientedDiagram& dd, const Biquandle& bb) : d(dd), b(bb) {
    for (int id : d.crossing_ids()) crossings.push_back(&d.crossing(id));
  }

  bool set(int arc, int c, std::vector<int>& trail) {
    if (col[arc] == c) return true;
    if (col[arc] != 0) return false;
    col[arc] = c;
    trail.push_back(arc);
    return true;
  }

  // Fill whatever is forced; false on contradiction.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const CrossingEnds* e : crossings) {
        int ui = col[e->under_in], oi = col[e->over_in];
        int uo = col[e->under_out], oo = col[e->over_out];
        int known = (ui != 0) + (oi != 0) + (uo != 0) + (oo != 0);
        if (known < 2 || known == 4) {
          if (known == 4) {
            auto [u2, o2] = b.crossing_map(e->sign, ui, oi);
            if (u2 != uo || o2 != oo) return false;
          }
          continue;
        }
        int ui2 = ui, oi2 = oi, uo2 = uo, oo2 = oo;
        if (ui && oi) {
          auto [u2, o2] = b.crossing_map(e->sign, ui, oi);
          uo2 = u2;
          oo2 = o2;
        } else if (uo && oo) {
          auto [u2, o2] = b.crossing_map_rev(e->sign, uo, oo);
          ui2 = u2;
          oi2 = o2;
        } else if (e->sign > 0 && ui && oo) {
          oi2 = b.star(oo, ui);
          uo2 = b.circ(ui, oo);
        } else if (e->sign < 0 && uo && oi) {
          ui2 = b.circ(uo, oi);
          oo2 = b.star(oi, uo);
        } else if (e->sign > 0 && oi && uo) {
          // (over_in, under_out) = S(under_in, over_out).
          auto [x, y] = b.s_inverse(oi, uo);
          ui2 = x;
          oo2 = y;
        } else if (e->sign < 0 && ui && oo) {
          // (over_out, under_in) = S(under_out, over_in).
          auto [x, y] = b.s_inverse(oo, ui);
          uo2 = x;
          oi2 = y;
        } else {
          continue;  // diagonal pair, not functionally determined
        }
        if (!set(e->under_in, ui2, trail) || !set(e->over_in, oi2, trail) ||
            !set(e->under_out, uo2, trail) || !set(e->over_out, oo2, trail))
          return false;
        changed = true;
      }
    }
    return true;
  }

  void search() {
    int arc = -1;
    for (int i = 0; i < (int)col.size(); ++i)
      if (col[i] == 0) {
        arc = i;
        break;
      }
    if (arc < 0) {
      Coloring f(col.begin(), col.end());
      out.push_back(std::move(f));
      return;
    }
    for (int c = 1; c <= b.size(); ++c) {
      std::vector<int> trail;
      col[arc] = c;
      trail.push_back(arc);
      if (propagate(trail)) search();
      for (int a : trail) col[a] = 0;
    }
  }
};

}  // namespace

std::vector<Coloring> enumerate_colorings(const OrientedDiagram& d,
                                          const Biquandle& b) {
  if (!b.valid())
    throw Error(ErrorKind::MalformedTable, "biquandle axioms do not hold");
  Solver s(d, b);
  s.col.assign(d.semiarc_count(), 0);
  s.search();
  std::sort(s.out.begin(), s.out.end());
  return s.out;
}

}  // namespace pbb
