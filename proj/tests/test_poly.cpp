#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pbb/poly.hpp"

using namespace pbb;

TEST_CASE("ring arithmetic basics", "[poly]") {
  Ring r{2, 0};
  Poly x = Poly::variable(r, 0);
  Poly one = Poly::constant(r, 1);
  // (x + 1) + (-x) = 1
  CHECK(add(r, add(r, x, one), neg(r, x)) == one);

  BracketVars v{1};
  Ring br = v.ring();
  Poly a = Poly::variable(br, v.id(0, 1, 1));  // A[1,1]
  Poly b = Poly::variable(br, v.id(1, 1, 1));  // B[1,1]
  // (A+B)(A-B) = A^2 - B^2
  Poly lhs = mul(br, add(br, a, b), sub(br, a, b));
  Poly rhs = sub(br, mul(br, a, a), mul(br, b, b));
  CHECK(lhs == rhs);

  // delta * (A * D) over GF(2)
  Ring br2 = v.ring(2);
  Poly d = Poly::variable(br2, v.id(3, 1, 1));
  Poly del = Poly::variable(br2, v.delta_id());
  Poly prod = mul(br2, del, mul(br2, Poly::variable(br2, v.id(0, 1, 1)), d));
  CHECK(poly_to_string(v, prod) == "A[1,1]*D[1,1]*delta");
  CHECK(add(br2, prod, prod).is_zero());
}

TEST_CASE("degrevlex order", "[poly]") {
  Ring r{3, 0};
  Monomial x = Monomial::var(3, 0), y = Monomial::var(3, 1),
           z = Monomial::var(3, 2);
  CHECK(cmp_degrevlex(x, y) > 0);
  CHECK(cmp_degrevlex(y, z) > 0);
  CHECK(cmp_degrevlex(mono_mul(x, x), y) > 0);        // degree first
  CHECK(cmp_degrevlex(mono_mul(x, y), mono_mul(x, z)) > 0);
  CHECK(cmp_degrevlex(mono_mul(x, z), mono_mul(y, y)) < 0);  // revlex tie rule
  CHECK(cmp_degrevlex(x, x) == 0);
  CHECK(divides(x, mono_mul(x, y)));
  CHECK_FALSE(divides(mono_mul(x, x), mono_mul(x, y)));
  CHECK(mono_lcm(mono_mul(x, y), mono_mul(y, z)).deg == 3);
}

TEST_CASE("coefficient normalization over a prime field", "[poly]") {
  Ring r{1, 7};
  Poly p = Poly::from_terms(r, {{Monomial::var(1, 0), 9}, {Monomial::one(1), -1}});
  CHECK(p.lead().c == 2);
  CHECK(mod_inverse(7, 3) == 5);
  CHECK_THROWS_AS(mod_inverse(7, 0), Error);
}

TEST_CASE("text form round trips", "[poly][io]") {
  BracketVars v{2};
  Ring r = v.ring();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    std::vector<Term> ts;
    int terms = 1 + rng() % 4;
    for (int t = 0; t < terms; ++t) {
      Monomial m = Monomial::one(r.nvars);
      int deg = rng() % 4;
      for (int k = 0; k < deg; ++k)
        m = mono_mul(m, Monomial::var(r.nvars, rng() % r.nvars));
      ts.push_back({std::move(m), (long long)(rng() % 9) - 4});
    }
    Poly p = Poly::from_terms(r, std::move(ts));
    CHECK(poly_parse(r, v, poly_to_string(v, p)) == p);
  }
  CHECK(poly_parse(r, v, "3*A[1,2]^2*delta - 1") ==
        Poly::from_terms(r, {{mono_mul(mono_mul(Monomial::var(r.nvars, v.id(0, 1, 2)),
                                                Monomial::var(r.nvars, v.id(0, 1, 2))),
                              Monomial::var(r.nvars, v.delta_id())),
                              3},
                             {Monomial::one(r.nvars), -1}}));
  CHECK(poly_to_string(v, Poly::zero()) == "0");
  CHECK(poly_parse(r, v, "0").is_zero());
}

TEST_CASE("evaluation", "[poly]") {
  Ring r{2, 0};
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
  Poly p = add(r, mul(r, x, y), Poly::constant(r, 3));  // xy + 3
  CHECK(eval_all(r, p, {2, 5}) == 13);
}
