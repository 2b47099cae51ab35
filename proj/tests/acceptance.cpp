// Acceptance runner: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "diracwm/cli.hpp"
#include "diracwm/cohomology.hpp"
#include "diracwm/eppair.hpp"
#include "diracwm/index.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace diracwm;
using golden::q;
using golden::wt;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;   // summary on success
  std::string first;  // first failure
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      first = what;
    }
  }
};

std::vector<std::vector<int>> levis(std::size_t rank) {
  std::vector<std::vector<int>> s{{}};
  for (int i = 0; i < static_cast<int>(rank); ++i) s.push_back({i});
  if (rank == 2) s.push_back({0, 1});
  return s;
}

std::vector<Weight> plain(const RootDatum& rd, const Window& w) { return window_weights(rd, w, Weight::zero(rd.rank())); }

// ---------------------------------------------------------------- 1

Outcome cuspidal_dirac_vanishes() {
  Outcome o;
  auto g = lie_algebra(RootType::A1);
  auto F = std::make_shared<const CuspidalSL2>(g, q(1, 2), q(1, 2));
  auto b = borel(g->root_datum_ptr());
  SpinModule s(g, b);
  std::size_t blocks = 0;
  for (const auto& lam : window_weights(g->root_datum(), {wt({0}), 12}, b.rho_ubar())) {
    auto blk = dirac_block(*F, s, lam);
    if (blk.parity.empty()) continue;
    ++blocks;
    auto h = dirac_cohomology(blk);
    o.require(h.plus == 0 && h.minus == 0, "nonzero Dirac cohomology at " + lam.str());
  }
  o.require(blocks == 25, "expected 25 nonzero blocks, got " + std::to_string(blocks));
  o.note = std::to_string(blocks) + " blocks of F(1/2, 1/2), all (0, 0)";
  return o;
}

// ---------------------------------------------------------------- 2

Outcome induced_from_cuspidal_vanishes() {
  Outcome o;
  auto a2 = lie_algebra(RootType::A2);
  auto V = std::make_shared<const CuspidalSL2>(a2, q(1, 2), q(1, 3), 0, std::vector<Rational>{q(0)});
  auto M = induce_parabolic(parabolic(a2->root_datum_ptr(), {0}), V);
  auto b = borel(a2->root_datum_ptr());
  const Window w{V->coset_anchor(), 6};
  SpinModule s(a2, b);
  std::size_t blocks = 0, coh = 0;
  for (const auto& lam : window_weights(a2->root_datum(), w, b.rho_ubar())) {
    auto blk = dirac_block(*M, s, lam);
    if (!blk.parity.empty()) ++blocks;
    auto h = dirac_cohomology(blk);
    o.require(h.plus == 0 && h.minus == 0, "nonzero Dirac cohomology at " + lam.str());
  }
  for (const auto& lam : plain(a2->root_datum(), w)) {
    auto h = lie_cohomology(*M, b, lam, Direction::UCohomology);
    for (std::size_t p = 0; p < h.size(); ++p) {
      o.require(h[p] == 0, "H^" + std::to_string(p) + "(n, M) nonzero at " + lam.str());
      ++coh;
    }
  }
  o.require(blocks > 0, "no nonzero Dirac blocks in the window");
  o.note = "A2, Levi {a1}: " + std::to_string(blocks) + " Dirac blocks and " + std::to_string(coh) +
           " cohomology groups H^i(n, M_p(V)) vanish";
  return o;
}

// ---------------------------------------------------------------- 3

Outcome correspondence() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& c : golden::cases(2)) {
    const auto& rd = c.module->root_datum();
    for (const auto& lv : levis(rd.rank())) {
      auto pd = parabolic(c.module->algebra().root_datum_ptr(), lv);
      for (const auto& lam : window_weights(rd, c.window, pd.rho_ubar())) {
        auto r = correspondence_check(*c.module, pd, lam);
        o.require(r.ok, c.name + " at " + lam.str() + ": " + r.first_mismatch);
        ++n;
      }
    }
  }
  o.note = std::to_string(n) + " (module, parabolic, weight) blocks with C = d and C- = -2 boundary";
  return o;
}

// ---------------------------------------------------------------- 4

Outcome index_identities() {
  Outcome o;
  auto a1 = lie_algebra(RootType::A1);
  auto a2 = lie_algebra(RootType::A2);
  std::vector<std::pair<std::string, ModulePtr>> ms{
      {"A1 M(0)", verma(a1, wt({0}))},
      {"A1 M(-rho)", verma(a1, wt({-1}))},
      {"A1 L(0)", std::make_shared<const SimpleHW>(a1, wt({0}))},
      {"A1 L(3)", std::make_shared<const SimpleHW>(a1, wt({3}))},
      {"A2 M(0)", verma(a2, wt({0, 0}))},
      {"A2 L(0)", std::make_shared<const SimpleHW>(a2, wt({0, 0}))},
  };
  std::size_t checks = 0;
  for (const auto& [name, m] : ms) {
    const auto& rd = m->root_datum();
    auto b = borel(m->algebra().root_datum_ptr());
    auto rep = verify_index_identities(m, b, window_weights(rd, {Weight::zero(rd.rank()), 8}, b.rho_ubar()));
    for (const auto& ch : rep.checks) {
      bool must = ch.id != 'e' || m->kind() == ModuleKind::Induced;
      o.require(!must || ch.applicable, name + ": check (" + std::string(1, ch.id) + ") not applicable");
      o.require(!ch.applicable || ch.ok, name + ": check (" + std::string(1, ch.id) + ") " + ch.detail);
      if (ch.applicable) ++checks;
    }
  }
  o.note = std::to_string(checks) + " identity checks over 6 modules, Borel, radius 8";
  return o;
}

// ---------------------------------------------------------------- 5

Outcome cuspidal_index() {
  Outcome o;
  auto g = lie_algebra(RootType::A1);
  auto b = borel(g->root_datum_ptr());
  const std::vector<std::pair<Rational, Rational>> mus{
      {q(1, 2), q(1, 2)},  {q(1, 3), q(2, 5)}, {q(1, 3), q(1, 3)},   {q(-1, 2), q(3, 2)},  {q(2, 3), q(-1, 4)},
      {q(5, 7), q(1, 7)},  {q(-3, 5), q(-2, 5)}, {q(7, 2), q(1, 3)}, {q(1, 10), q(9, 10)}, {q(-11, 3), q(5, 6)}};
  for (const auto& [m0, m1] : mus) {
    auto F = std::make_shared<const CuspidalSL2>(g, m0, m1);
    auto idx = spin_index(F, b);
    o.require(idx.support && idx.support->empty(), F->describe() + ": empty support not certified");
    for (const auto& lam : window_weights(g->root_datum(), {F->coset_anchor(), 8}, b.rho_ubar()))
      o.require(idx(lam) == 0, F->describe() + ": index nonzero at " + lam.str());
  }
  o.note = "10 parameters, index 0 on radius 8, support certified empty";
  return o;
}

// ---------------------------------------------------------------- 6

// Independent sl(2) block dimensions from closed forms.
struct Sl2Model {
  enum Kind { Verma, Simple, Cusp } kind;
  Rational lam;  // highest weight, or the coset anchor for Cusp
  long dim(const Rational& nu) const {
    Rational d = lam - nu;
    if (kind == Cusp) return d.get_den() == 1 && d.get_num() % 2 == 0 ? 1 : 0;
    if (d.get_den() != 1 || d < 0 || d.get_num() % 2 != 0) return 0;
    int k = static_cast<int>(d.get_num().get_si() / 2);
    return kind == Verma ? 1 : oracle::sl2_simple_dim(lam, k);
  }
};

// EP(M(l), N) = dim N_l - dim N_{l+2}; L(l) = M(l) - M(-l-2) for l dominant integral.
long oracle_ep(const Sl2Model& m, const Sl2Model& n) {
  auto verma_ep = [&](const Rational& l) { return n.dim(l) - n.dim(l + 2); };
  if (m.kind == Sl2Model::Verma) return verma_ep(m.lam);
  auto orbit = oracle::sl2_dot_orbit(m.lam);
  bool dominant = m.lam.get_den() == 1 && m.lam >= 0;
  return dominant ? verma_ep(orbit[0]) - verma_ep(orbit[1]) : verma_ep(m.lam);
}

Outcome ep_equals_index_pairing() {
  Outcome o;
  auto g = lie_algebra(RootType::A1);
  const Window w{wt({0}), 4};
  struct Named {
    std::string name;
    ModulePtr m;
    Sl2Model model;
  };
  std::vector<Named> left{{"M(0)", verma(g, wt({0})), {Sl2Model::Verma, q(0)}},
                          {"M(-a)", verma(g, wt({-2})), {Sl2Model::Verma, q(-2)}},
                          {"L(0)", std::make_shared<const SimpleHW>(g, wt({0})), {Sl2Model::Simple, q(0)}},
                          {"L(3)", std::make_shared<const SimpleHW>(g, wt({3})), {Sl2Model::Simple, q(3)}}};
  std::vector<Named> right{{"M(0)", left[0].m, left[0].model},
                           {"L(0)", left[2].m, left[2].model},
                           {"F(1/2,1/2)", std::make_shared<const CuspidalSL2>(g, q(1, 2), q(1, 2)), {Sl2Model::Cusp, q(0)}}};
  std::map<std::string, long> expected{{"M(0)|M(0)", 1}, {"M(0)|L(0)", 1}, {"M(-a)|L(0)", -1}, {"L(0)|L(0)", 2}};
  std::size_t n = 0;
  for (const auto& a : left)
    for (const auto& b : right) {
      const std::string key = a.name + "|" + b.name;
      auto r = verify_main2(a.m, b.m, w);
      o.require(r.compared, key + ": not compared (" + r.status + ")");
      o.require(r.ok, key + ": EP " + std::to_string(r.ep.value) + " vs index pairing " + std::to_string(r.index_value));
      long orc = oracle_ep(a.model, b.model);
      o.require(r.ep.value == orc, key + ": EP " + std::to_string(r.ep.value) + " vs oracle " + std::to_string(orc));
      if (auto it = expected.find(key); it != expected.end())
        o.require(r.ep.value == it->second, key + ": expected " + std::to_string(it->second));
      if (b.model.kind == Sl2Model::Cusp) o.require(r.ep.value == 0, key + ": EP with F must vanish");
      ++n;
    }
  auto a2 = lie_algebra(RootType::A2);
  ModulePtr L0 = std::make_shared<const SimpleHW>(a2, wt({0, 0}));
  auto r = verify_main2(L0, L0, {wt({0, 0}), 3});
  o.require(r.compared && r.ok, "A2 L(0)|L(0): " + r.status);
  o.note = std::to_string(n) + " A1 pairs equal to the index pairing and the sl(2) oracle; A2 L(0)|L(0) = " +
           std::to_string(r.ep.value);
  return o;
}

// ---------------------------------------------------------------- 7

Outcome twisting() {
  Outcome o;
  auto g = lie_algebra(RootType::A1);
  const std::size_t e = g->e_index(0), f = g->f_index(0);
  std::size_t compared = 0;
  for (auto F : {std::make_shared<const CuspidalSL2>(g, q(1, 2), q(1, 2)),
                 std::make_shared<const CuspidalSL2>(g, q(1, 3), q(3, 4))}) {
    for (int n = 0; n <= 4; ++n) {
      TwistModule t(F, {{-1}}, {q(n)});
      for (const auto& lam : plain(g->root_datum(), {t.coset_anchor(), 6}))
        for (std::size_t x = 0; x < g->dim(); ++x) {
          // e^n x e^{-n} applied on the old block lam - shift.
          Weight cur = lam - t.shift();
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
          o.require(t.block_action(x, lam) == acc, t.describe() + " differs from conjugation at " + lam.str());
          ++compared;
        }
    }
  }
  // x = 1/2 on F(1/2, 1/2): compare with the monomial model F_(1,0) on v_k of
  // weight 1 + 2k, where e v_k = -k v_{k+1} and f v_k = (1 + k) v_{k-1}.
  auto F = std::make_shared<const CuspidalSL2>(g, q(1, 2), q(1, 2));
  TwistModule t(F, {{-1}}, {q(1, 2)});
  for (int k = -8; k <= 8; ++k) {
    Weight lam = wt({q(1 + 2 * k)});
    Rational e_k = -k, f_k = 1 + k, e_km1 = -(k - 1), f_kp1 = 2 + k;
    o.require(t.block_dim(lam) == 1, "character differs at " + lam.str());
    Rational ef = t.block_action(e, lam - wt({2}))(0, 0) * t.block_action(f, lam)(0, 0);
    Rational fe = t.block_action(f, lam + wt({2}))(0, 0) * t.block_action(e, lam)(0, 0);
    o.require(ef == f_k * e_km1, "e f differs from F_(1,0) at " + lam.str());
    o.require(fe == e_k * f_kp1, "f e differs from F_(1,0) at " + lam.str());
  }
  auto box = plain(g->root_datum(), {wt({-1}), 6});
  o.require(!root_vectors_injective(t, box), "twisted module has no non-injective root vector block");
  o.require(!t.is_cuspidal(), "twisted module still reported cuspidal");
  std::string witness;
  for (const auto& lam : box)
    for (std::size_t x : {e, f})
      if (witness.empty() && t.block_dim(lam) && t.block_action(x, lam).is_zero())
        witness = g->label(x) + " at " + lam.str();
  o.note = std::to_string(compared) + " conjugation blocks (x = 0..4); x = 1/2 matches F_(1,0) in e f, f e on radius 8; "
           "non-injective root vector " + witness;
  return o;
}

// ---------------------------------------------------------------- 8

Outcome duality() {
  Outcome o;
  std::size_t blocks = 0;
  for (const auto& c : golden::cases(2)) {
    auto d = std::make_shared<const DualModule>(c.module);
    DualModule dd(d);
    const auto& g = c.module->algebra();
    for (const auto& lam : plain(g.root_datum(), c.window)) {
      o.require(dd.block_dim(lam) == c.module->block_dim(lam), c.name + ": dimension at " + lam.str());
      for (std::size_t x = 0; x < g.dim(); ++x)
        if (c.module->defines(x))
          o.require(dd.block_action(x, lam) == c.module->block_action(x, lam),
                    c.name + ": double dual differs at " + lam.str() + " for " + g.label(x));
      ++blocks;
    }
    for (const auto& lv : levis(g.rank())) {
      auto pd = parabolic(g.root_datum_ptr(), lv);
      auto im = spin_index(c.module, pd), id = spin_index(d, pd);
      for (const auto& lam : window_weights(g.root_datum(), c.window, pd.rho_ubar()))
        o.require(im(lam) == id(lam), c.name + ": index of the dual differs at " + lam.str());
    }
  }
  o.note = std::to_string(blocks) + " golden blocks; indices agree for every parabolic";
  return o;
}

// ---------------------------------------------------------------- 9

Outcome structure() {
  Outcome o;
  std::size_t triples = 0, blocks = 0, brackets = 0, bounds = 0;
  for (auto t : {RootType::A1, RootType::A1xA1, RootType::A2, RootType::B2}) {
    auto g = lie_algebra(t);
    const std::size_t n = g->dim();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          auto x = g->basis(a), y = g->basis(b), z = g->basis(c);
          auto j = g->bracket(x, g->bracket(y, z)) + g->bracket(y, g->bracket(z, x)) + g->bracket(z, g->bracket(x, y));
          o.require(j.is_zero(), "Jacobi fails on " + to_string(t));
          ++triples;
        }
  }
  for (const auto& c : golden::cases(2)) {
    const auto& m = *c.module;
    const auto& g = m.algebra();
    const auto& rd = m.root_datum();
    // Bracket compatibility on the module blocks.
    for (const auto& lam : plain(rd, c.window))
      for (std::size_t x = 0; x < g.dim(); ++x)
        for (std::size_t y = 0; y < g.dim(); ++y) {
          if (!m.defines(x) || !m.defines(y)) continue;
          const auto& br = g.bracket_basis(x, y);
          bool inside = true;
          for (std::size_t k = 0; k < g.dim(); ++k)
            if (br.c[k] != 0 && !m.defines(k)) inside = false;
          if (!inside) continue;
          Matrix lhs = m.block_action(x, lam + g.weight(y)) * m.block_action(y, lam) -
                       m.block_action(y, lam + g.weight(x)) * m.block_action(x, lam);
          Matrix rhs = br.is_zero() ? Matrix(lhs.rows(), lhs.cols()) : m.block_action(br, lam);
          o.require(lhs == rhs, c.name + ": [" + g.label(x) + ", " + g.label(y) + "] at " + lam.str());
          ++brackets;
        }
    for (const auto& lv : levis(rd.rank())) {
      auto pd = parabolic(g.root_datum_ptr(), lv);
      SpinModule s(m.algebra_ptr(), pd);
      for (const auto& lam : plain(rd, c.window))
        for (auto dir : {Direction::UbarCohomology, Direction::UCohomology, Direction::UHomology,
                         Direction::UbarHomology}) {
          auto cx = ce_complex(m, pd, lam, dir);
          for (std::size_t p = 0; p + 1 <= cx.top(); ++p) {
            const Matrix& a = cx.cochain() ? cx.differential[p] : cx.differential[p + 1];
            const Matrix& b = cx.cochain() ? cx.differential[p + 1] : cx.differential[p];
            if (a.rows() && a.cols() && b.rows() && b.cols())
              o.require((b * a).is_zero(), c.name + ": d^2 != 0 (" + to_string(dir) + ") at " + lam.str());
          }
        }
      for (const auto& lam : window_weights(rd, c.window, pd.rho_ubar())) {
        auto blk = dirac_block(m, s, lam);
        o.require((blk.C * blk.C).is_zero(), c.name + ": C^2 != 0 at " + lam.str());
        o.require((blk.Cminus * blk.Cminus).is_zero(), c.name + ": (C-)^2 != 0 at " + lam.str());
        ++blocks;
        if (!m.has_infinitesimal_character()) continue;
        auto h = dirac_cohomology(blk);
        std::size_t co = 0, ho = 0;
        for (auto v : lie_cohomology(m, pd, lam - pd.rho_ubar(), Direction::UbarCohomology)) co += v;
        for (auto v : lie_cohomology(m, pd, lam - pd.rho_ubar(), Direction::UHomology)) ho += v;
        o.require(h.plus + h.minus <= co && h.plus + h.minus <= ho,
                  c.name + ": Dirac cohomology exceeds nilradical (co)homology at " + lam.str());
        ++bounds;
      }
    }
  }
  o.note = std::to_string(triples) + " Jacobi triples, " + std::to_string(brackets) + " bracket checks, " +
           std::to_string(blocks) + " Dirac blocks, " + std::to_string(bounds) + " injectivity bounds";
  return o;
}

// ---------------------------------------------------------------- 10

Outcome determinism() {
  Outcome o;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(DIRACWM_CONFIG_DIR))
    if (e.path().extension() == ".ini") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    auto cfg = cli::parse_config(ss.str());
    for (auto fmt : {cli::Format::Csv, cli::Format::Jsonl}) {
      std::string ref;
      for (unsigned workers : {1u, 8u, 1u, 8u}) {
        auto bytes = cli::emit_report(cli::execute(cfg, workers), fmt);
        if (ref.empty()) ref = bytes;
        o.require(bytes == ref, p.filename().string() + ": output changes at " + std::to_string(workers) + " workers");
      }
    }
  }
  o.require(files.size() >= 8, "golden configs missing");
  o.note = std::to_string(files.size()) + " configs, csv and jsonl, two runs each at 1 and 8 workers";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
    double budget_s;  // runtime target, 0 for none
  };
  const std::vector<Criterion> all{
      {1, "cuspidal F(1/2,1/2) has no Dirac cohomology", cuspidal_dirac_vanishes, 1},
      {2, "M_p(V) from a cuspidal Levi module has no Dirac cohomology", induced_from_cuspidal_vanishes, 30},
      {3, "Dirac operators equal the Chevalley-Eilenberg differentials", correspondence, 0},
      {4, "index identities", index_identities, 0},
      {5, "cuspidal index vanishing", cuspidal_index, 0},
      {6, "EP equals the index pairing", ep_equals_index_pairing, 120},
      {7, "twisting functor oracle", twisting, 0},
      {8, "duality", duality, 0},
      {9, "structural properties", structure, 0},
      {10, "deterministic output", determinism, 0},
  };
  bool all_ok = true;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.first = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && s > c.budget_s) o.require(false, "runtime target exceeded");
    std::ostringstream t;
    t << std::fixed << std::setprecision(2) << s << " s";
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << (o.ok ? o.note : o.first) << " ("
              << t.str() << ")" << std::endl;
    all_ok = all_ok && o.ok;
  }
  return all_ok ? 0 : 1;
}
