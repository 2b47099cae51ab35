#include <map>

#include "diracwm/spinor.hpp"
#include "doctest.h"

using namespace diracwm;

namespace {

const RootType kTypes[] = {RootType::A1, RootType::A1xA1, RootType::A2, RootType::B2};

std::vector<std::vector<int>> levis(std::size_t rank) {
  std::vector<std::vector<int>> s{{}};
  for (int i = 0; i < static_cast<int>(rank); ++i) s.push_back({i});
  if (rank == 2) s.push_back({0, 1});
  return s;
}

}  // namespace

TEST_CASE("spin basis examples") {
  auto rd = root_system(RootType::A1);
  auto b = spin_basis(borel(rd));
  REQUIRE(b.size() == 2);
  CHECK(b[0].roots.empty());
  CHECK(b[0].weight == Weight({Rational(-1)}));
  CHECK(b[0].parity == 0);
  CHECK(b[1].weight == Weight({Rational(1)}));
  CHECK(b[1].parity == 1);
  auto a2 = root_system(RootType::A2);
  CHECK(spin_basis(borel(a2)).size() == 8);
  auto trivial = spin_basis(parabolic(a2, {0, 1}));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].weight == Weight::zero(2));
  CHECK(trivial[0].parity == 0);
  // Lexicographic order of increasing sequences.
  auto lex = spin_basis(borel(a2));
  std::vector<std::vector<std::size_t>> expect{{}, {0}, {0, 1}, {0, 1, 2}, {0, 2}, {1}, {1, 2}, {2}};
  for (std::size_t i = 0; i < lex.size(); ++i) CHECK(lex[i].roots == expect[i]);
}

TEST_CASE("Clifford examples on A1") {
  auto g = lie_algebra(RootType::A1);
  SpinModule s(g, borel(g->root_datum_ptr()));
  std::vector<Rational> top{0, 1};
  auto fe = s.clifford_act(g->f_index(0), top);
  CHECK(fe == std::vector<Rational>{2, 0});
  auto ee = s.clifford_act(g->e_index(0), top);
  CHECK(ee == std::vector<Rational>{0, 0});
  CHECK_THROWS(s.clifford(g->h_index(0)));
}

TEST_CASE("wedge sign on A2") {
  auto g = lie_algebra(RootType::A2);
  SpinModule s(g, borel(g->root_datum_ptr()));
  // e_{a1} ^ (e_{a2}) = +(e_{a1} ^ e_{a2}); e_{a2} ^ (e_{a1}) = -(e_{a1} ^ e_{a2}).
  std::vector<Rational> v(s.dim());
  v[s.index_of({1})] = 1;
  auto w = s.clifford_act(g->e_index(0), v);
  CHECK(w[s.index_of({0, 1})] == 1);
  std::vector<Rational> v2(s.dim());
  v2[s.index_of({0})] = 1;
  CHECK(s.clifford_act(g->e_index(1), v2)[s.index_of({0, 1})] == -1);
}

TEST_CASE("Clifford relation, parity and weights") {
  for (auto t : kTypes) {
    auto g = lie_algebra(t);
    for (auto& lv : levis(g->rank())) {
      auto pd = parabolic(g->root_datum_ptr(), lv);
      SpinModule s(g, pd);
      CHECK(s.dim() == (std::size_t(1) << pd.dim_u()));
      std::vector<std::size_t> sb;
      for (std::size_t k = 0; k < g->dim(); ++k)
        if (s.in_s(k)) sb.push_back(k);
      CHECK(sb.size() == 2 * pd.dim_u());
      for (auto v : sb) {
        const Matrix& m = s.clifford(v);
        for (std::size_t r = 0; r < s.dim(); ++r)
          for (std::size_t c = 0; c < s.dim(); ++c) {
            if (m(r, c) == 0) continue;
            CHECK(s.basis()[r].parity != s.basis()[c].parity);
            CHECK(s.basis()[r].weight == s.basis()[c].weight + g->weight(v));
          }
        for (auto w : sb) {
          Matrix anti = s.clifford(v) * s.clifford(w) + s.clifford(w) * s.clifford(v);
          Rational form = g->form(g->basis(v), g->basis(w));
          CHECK(anti == Matrix::identity(s.dim()) * (2 * form));
        }
      }
    }
  }
}

TEST_CASE("spin character") {
  auto a1 = root_system(RootType::A1);
  auto [p, m] = spin_character(borel(a1));
  CHECK(p(Weight({Rational(-1)})) == 1);
  CHECK(p(Weight({Rational(1)})) == 0);
  CHECK(m(Weight({Rational(1)})) == 1);
  auto a2 = root_system(RootType::A2);
  auto [p0, m0] = spin_character(parabolic(a2, {0, 1}));
  CHECK(p0(Weight::zero(2)) == 1);
  CHECK(m0.support->empty());
  auto pd = parabolic(a2, {0});
  auto [pp, mm] = spin_character(pd);
  CHECK(pp.support->size() == 2);
  CHECK(mm.support->size() == 2);
  // Alternating sum equals prod_{beta in u} (1 - X^beta) times X^{rho(ubar)}.
  for (auto t : kTypes) {
    auto rd = root_system(t);
    for (auto& lv : levis(rd->rank())) {
      auto q = parabolic(rd, lv);
      std::map<Weight, long long> prod{{q.rho_ubar(), 1}};
      for (auto b : q.nilradical_roots()) {
        std::map<Weight, long long> next;
        for (auto& [w, c] : prod) {
          next[w] += c;
          next[w + rd->root_weight(b)] -= c;
        }
        prod = next;
      }
      auto [sp, sm] = spin_character(q);
      for (auto& [w, c] : prod) CHECK(sp(w) - sm(w) == c);
      if (lv.empty())
        for (auto& [w, c] : prod) {
          auto [a, b] = spin_character(q);
          CHECK(a(w) + b(w) == a(-1 * w) + b(-1 * w));
        }
    }
  }
}
