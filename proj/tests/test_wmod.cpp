#include <random>
#include <thread>

#include "diracwm/wmod.hpp"
#include "doctest.h"
#include "golden.hpp"
#include "oracles.hpp"

using namespace diracwm;
using golden::q;
using golden::wt;

namespace {

// Every weight of the box base + sum k_i alpha_i, |k_i| <= r.
std::vector<Weight> box(const RootDatum& rd, const Weight& base, int r) {
  return window_weights(rd, {base, r}, Weight::zero(rd.rank()));
}

void check_bracket_compatible(const WeightModule& m, const std::vector<Weight>& ws) {
  const auto& g = m.algebra();
  for (const auto& lam : ws)
    for (std::size_t x = 0; x < g.dim(); ++x)
      for (std::size_t y = 0; y < g.dim(); ++y) {
        if (!m.defines(x) || !m.defines(y)) continue;
        const auto& br = g.bracket_basis(x, y);
        bool ok = true;
        for (std::size_t k = 0; k < g.dim(); ++k)
          if (br.c[k] != 0 && !m.defines(k)) ok = false;
        if (!ok) continue;
        Matrix lhs = m.block_action(x, lam + g.weight(y)) * m.block_action(y, lam) -
                     m.block_action(y, lam + g.weight(x)) * m.block_action(x, lam);
        Matrix rhs = br.is_zero() ? Matrix(lhs.rows(), lhs.cols()) : m.block_action(br, lam);
        CHECK_MESSAGE(lhs == rhs, m.describe() << " at " << lam.str() << " [" << g.label(x) << "," << g.label(y) << "]");
      }
}

}  // namespace

TEST_CASE("Verma block dimensions are Kostant partition counts") {
  for (auto t : {RootType::A1, RootType::A1xA1, RootType::A2, RootType::B2}) {
    auto g = lie_algebra(t);
    const auto& rd = g->root_datum();
    Weight lam = t == RootType::A1 ? wt({q(1, 3)}) : wt({q(1, 3), q(-2)});
    auto m = verma(g, lam);
    for (const auto& mu : box(rd, lam, 5)) {
      auto k = rd.root_coords(lam - mu);
      std::vector<int> target;
      for (auto& c : k) target.push_back(static_cast<int>(c.get_num().get_si()));
      CHECK(m->block_dim(mu) == static_cast<std::size_t>(oracle::partition_count(rd.positive_roots(), target)));
    }
    CHECK(m->block_dim(lam + wt(t == RootType::A1 ? std::initializer_list<Rational>{q(1, 2)}
                                                  : std::initializer_list<Rational>{q(1, 2), 0})) == 0);
  }
  auto a2 = lie_algebra(RootType::A2);
  CHECK(verma(a2, wt({0, 0}))->block_dim(wt({-1, -1})) == 2);
}

TEST_CASE("Verma action matches the sl(2) closed form") {
  auto g = lie_algebra(RootType::A1);
  for (Rational l : {q(0), q(3), q(-1), q(5, 7)}) {
    auto m = verma(g, wt({l}));
    for (int k = 0; k <= 6; ++k) {
      Weight lam = wt({l - 2 * k});
      CHECK(m->block_dim(lam) == 1);
      if (k > 0) CHECK(m->block_action(g->e_index(0), lam)(0, 0) == oracle::sl2_verma_e(l, k));
      CHECK(m->block_action(g->f_index(0), lam)(0, 0) == 1);
      CHECK(m->block_action(g->h_index(0), lam)(0, 0) == l - 2 * k);
    }
  }
  auto m0 = verma(g, wt({0}));
  CHECK(m0->block_action(g->e_index(0), wt({-2}))(0, 0) == 0);
  CHECK(m0->block_action(g->e_index(0), wt({-4}))(0, 0) == -2);
  CHECK(m0->block_action(g->e_index(0), wt({0})).rows() == 0);
}

TEST_CASE("cuspidal sl(2) family") {
  auto g = lie_algebra(RootType::A1);
  CuspidalSL2 F(g, q(1, 2), q(1, 2));
  for (int k = -6; k <= 6; ++k) {
    CHECK(F.block_dim(wt({2 * k})) == 1);
    CHECK(F.block_dim(wt({2 * k + 1})) == 0);
  }
  CHECK(F.block_action(g->e_index(0), wt({0}))(0, 0) == q(1, 2));
  CHECK(F.block_action(g->h_index(0), wt({0}))(0, 0) == 0);
  CHECK(F.coset_anchor() == wt({0}));
  CHECK_THROWS_AS(CuspidalSL2(g, q(2), q(1, 2)), PreconditionError);
  CHECK_THROWS_AS(CuspidalSL2(g, q(1, 2), q(-1)), PreconditionError);
  // e and f act bijectively between one-dimensional blocks.
  for (const auto& lam : box(g->root_datum(), wt({0}), 8)) {
    CHECK(F.block_action(g->e_index(0), lam)(0, 0) != 0);
    CHECK(F.block_action(g->f_index(0), lam)(0, 0) != 0);
  }
}

TEST_CASE("parabolic induction from a cuspidal Levi module") {
  auto g = lie_algebra(RootType::A2);
  const auto& rd = g->root_datum();
  auto V = std::make_shared<const CuspidalSL2>(g, q(1, 2), q(1, 3), 0, std::vector<Rational>{q(1, 4)});
  auto pd = parabolic(g->root_datum_ptr(), {0});
  auto M = induce_parabolic(pd, V);
  // dim M_lam = sum over ubar monomials f_{a2}^a f_{a1+a2}^b of dim V_{lam + a a2 + b (a1+a2)}.
  for (const auto& lam : box(rd, V->coset_anchor(), 3)) {
    std::size_t expect = 0;
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; b <= 8; ++b)
        expect += V->block_dim(lam + Rational(a) * rd.root_weight(1) + Rational(b) * rd.root_weight(2));
    CHECK(M->block_dim(lam) == expect);
  }
  check_bracket_compatible(*M, box(rd, V->coset_anchor() - rd.root_weight(1), 1));
  // V is not a module over the other Levi.
  CHECK_THROWS_AS(induce_parabolic(parabolic(g->root_datum_ptr(), {1}), V), std::invalid_argument);
}

TEST_CASE("simple highest weight modules") {
  auto g = lie_algebra(RootType::A1);
  SimpleHW L0(g, wt({0}));
  CHECK(L0.block_dim(wt({0})) == 1);
  CHECK(L0.block_dim(wt({-2})) == 0);
  CHECK(L0.block_dim(wt({2})) == 0);
  for (Rational l : {q(3), q(-1), q(2, 3), q(4)}) {
    SimpleHW L(g, wt({l}));
    for (int k = -2; k <= 8; ++k) CHECK(L.block_dim(wt({l - 2 * k})) == std::size_t(oracle::sl2_simple_dim(l, k)));
  }
  // Classical dimensions: adjoint of sl(3), vector and spin of so(5).
  struct Row {
    RootType t;
    Weight lam;
    std::size_t total, zero;
  };
  for (auto r : {Row{RootType::A2, wt({1, 1}), 8, 2}, Row{RootType::B2, wt({1, 0}), 5, 1},
                 Row{RootType::B2, wt({0, 1}), 4, 0}, Row{RootType::A1xA1, wt({1, 2}), 6, 0},
                 Row{RootType::A2, wt({2, 0}), 6, 0}}) {
    auto ga = lie_algebra(r.t);
    SimpleHW L(ga, r.lam);
    std::size_t total = 0;
    for (const auto& mu : box(ga->root_datum(), r.lam, 4)) total += L.block_dim(mu);
    CHECK(total == r.total);
    CHECK(L.block_dim(Weight::zero(2)) == r.zero);
  }
}

TEST_CASE("Shapovalov form") {
  auto g = lie_algebra(RootType::A1);
  CHECK(shapovalov_gram(g, wt({0}), wt({-2}))(0, 0) == 0);
  CHECK(shapovalov_gram(g, wt({3}), wt({1}))(0, 0) == 3);
  CHECK(shapovalov_gram(g, wt({3}), wt({3}))(0, 0) == 1);
  CHECK(shapovalov_gram(g, wt({3}), wt({5})).rows() == 0);
  for (int k = 0; k <= 5; ++k) CHECK(shapovalov_gram(g, wt({q(7, 2)}), wt({q(7, 2) - 2 * k}))(0, 0) == oracle::sl2_shapovalov(q(7, 2), k));
  for (auto t : {RootType::A2, RootType::B2}) {
    auto ga = lie_algebra(t);
    SimpleHW L(ga, wt({q(1), q(-1, 2)}));
    for (const auto& mu : box(ga->root_datum(), wt({q(1), q(-1, 2)}), 2)) {
      Matrix G = L.gram(mu);
      CHECK(G == G.transpose());
      CHECK(rank(G) == L.block_dim(mu));
      CHECK(L.block_dim(mu) <= L.verma_module()->block_dim(mu));
    }
  }
}

TEST_CASE("duals") {
  for (const auto& c : golden::cases(2)) {
    if (c.module->kind() == ModuleKind::Cuspidal && c.module->algebra().rank() > 1) continue;
    DualModule d(c.module);
    DualModule dd(std::make_shared<const DualModule>(c.module));
    const auto& g = c.module->algebra();
    for (const auto& lam : box(g.root_datum(), c.window.base, c.window.radius)) {
      CHECK(d.block_dim(lam) == c.module->block_dim(lam));
      for (std::size_t x = 0; x < g.dim(); ++x) {
        if (!c.module->defines(x)) continue;
        CHECK(dd.block_action(x, lam) == c.module->block_action(x, lam));
      }
    }
  }
}

TEST_CASE("twist by zero and by opposite exponents") {
  auto g = lie_algebra(RootType::A1);
  auto F = std::make_shared<const CuspidalSL2>(g, q(1, 2), q(1, 2));
  std::vector<std::vector<int>> gam{{-1}};
  TwistModule t0(F, gam, {q(0)});
  auto t = std::make_shared<const TwistModule>(F, gam, std::vector<Rational>{q(1, 3)});
  TwistModule back(t, gam, {q(-1, 3)});
  CHECK(t->shift() == wt({q(-2, 3)}));
  for (const auto& lam : box(g->root_datum(), wt({0}), 6))
    for (std::size_t x = 0; x < g->dim(); ++x) {
      CHECK(t0.block_action(x, lam) == F->block_action(x, lam));
      CHECK(back.block_action(x, lam) == F->block_action(x, lam));
    }
  CHECK_THROWS_AS(TwistModule(F, {{-1}, {1}}, {q(1), q(1)}), PreconditionError);
  auto a2 = lie_algebra(RootType::A2);
  CHECK_THROWS_AS(TwistModule(verma(a2, wt({0, 0})), {{1, 0}, {0, 1}}, {q(1), q(1)}), PreconditionError);
  // A Verma module is not e-bijective.
  // e kills the highest weight vector of a Verma module, so M(1/2) is not e-bijective.
  TwistModule bad(verma(g, wt({q(1, 2)})), gam, {q(1)});
  CHECK_THROWS_AS(bad.block_action(g->f_index(0), wt({q(-3, 2)})), PreconditionError);
}

TEST_CASE("integer twists are literal conjugation") {
  auto g = lie_algebra(RootType::A1);
  auto F = std::make_shared<const CuspidalSL2>(g, q(1, 3), q(3, 4));
  const std::size_t e = g->e_index(0);
  for (int n = 0; n <= 4; ++n) {
    TwistModule t(F, {{-1}}, {q(n)});
    CHECK(t.shift() == wt({q(-2 * n)}));
    for (const auto& lam : box(g->root_datum(), F->coset_anchor(), 5))
      for (std::size_t x = 0; x < g->dim(); ++x) {
        // e^n x e^{-n} on the old block lam - shift.
        Weight old = lam - t.shift();
        Weight cur = old;
        Matrix acc = Matrix::identity(1);
        for (int s = 0; s < n; ++s) {
          cur -= g->weight(e);
          acc = *inverse(F->block_action(e, cur)) * acc;
        }
        acc = F->block_action(x, cur) * acc;
        cur += g->weight(x);
        for (int s = 0; s < n; ++s) {
          acc = F->block_action(e, cur) * acc;
          cur += g->weight(e);
        }
        CHECK(t.block_action(x, lam) == acc);
      }
  }
}

TEST_CASE("half-integral twist of F(1/2,1/2) and loss of cuspidality") {
  auto g = lie_algebra(RootType::A1);
  auto F = std::make_shared<const CuspidalSL2>(g, q(1, 2), q(1, 2));
  TwistModule t(F, {{-1}}, {q(1, 2)});
  const std::size_t e = g->e_index(0), f = g->f_index(0);
  // Same character and Casimir data as F_(0,1) = F_(1,0) on weights 2k - 1.
  // Theta fixes e, so e stays bijective and the f blocks degenerate instead:
  // f vanishes at weights -1 and 3, leaving L(1) as a subquotient.
  for (int k = -6; k <= 6; ++k) {
    Weight lam = wt({q(2 * k - 1)});
    REQUIRE(t.block_dim(lam) == 1);
    CHECK(t.block_dim(lam + wt({1})) == 0);
    Rational ef = t.block_action(e, lam - wt({2}))(0, 0) * t.block_action(f, lam)(0, 0);
    Rational fe = t.block_action(f, lam + wt({2}))(0, 0) * t.block_action(e, lam)(0, 0);
    CHECK(ef == Rational(k * (2 - k)));
    CHECK(fe == Rational((1 - k) * (k + 1)));
    CHECK(t.block_action(e, lam)(0, 0) != 0);
    CHECK((t.block_action(f, lam)(0, 0) == 0) == (k == 0 || k == 2));
  }
  CHECK(!root_vectors_injective(t, box(g->root_datum(), wt({-1}), 6)));
  CHECK(!t.is_cuspidal());
  TwistModule generic(F, {{-1}}, {q(1, 3)});
  CHECK(generic.is_cuspidal());
}

TEST_CASE("bracket compatibility of all golden constructors") {
  for (const auto& c : golden::cases(2)) {
    INFO(c.name);
    check_bracket_compatible(*c.module, box(c.module->root_datum(), c.window.base, 2));
  }
}

TEST_CASE("concurrent block requests agree") {
  auto g = lie_algebra(RootType::B2);
  auto m = verma(g, wt({0, 0}));
  std::vector<Weight> ws = box(g->root_datum(), wt({-2, -2}), 2);
  std::vector<std::thread> pool;
  std::vector<std::vector<Matrix>> got(4);
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (const auto& lam : ws) got[t].push_back(m->block_action(g->e_index(1), lam));
    });
  for (auto& th : pool) th.join();
  auto fresh = verma(g, wt({0, 0}));
  for (std::size_t i = 0; i < ws.size(); ++i) {
    Matrix ref = fresh->block_action(g->e_index(1), ws[i]);
    for (int t = 0; t < 4; ++t) CHECK(got[t][i] == ref);
  }
}
