#include "diracwm/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "diracwm/cohomology.hpp"
#include "diracwm/eppair.hpp"
#include "diracwm/index.hpp"
#include "diracwm/liestruct.hpp"

namespace diracwm::cli {

ConfigError::ConfigError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("config:" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string to_string(Command c) {
  switch (c) {
    case Command::Describe: return "describe";
    case Command::Cohomology: return "cohomology";
    case Command::Dirac: return "dirac";
    case Command::Index: return "index";
    case Command::Pair: return "pair";
    case Command::Verify: return "verify";
  }
  return "?";
}

std::optional<Command> parse_command(const std::string& s) {
  for (auto c : {Command::Describe, Command::Cohomology, Command::Dirac, Command::Index, Command::Pair,
                 Command::Verify})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

namespace {

// ---------------------------------------------------------------- parsing

struct Entry {
  std::string value;
  std::size_t line, column;  // of the value
  std::size_t key_column;
};

struct Section {
  std::string name;  // "algebra", ..., or "module"
  std::string arg;   // module name
  std::size_t line;
  std::map<std::string, Entry> keys;
  std::set<std::string> used;
};

bool is_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Trims in place and returns the number of characters removed on the left.
std::size_t trim(std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    s.clear();
    return 0;
  }
  auto e = s.find_last_not_of(" \t\r");
  s = s.substr(b, e - b + 1);
  return b;
}

std::vector<Section> tokenize(const std::string& text) {
  std::vector<Section> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t ln = 0;
  while (std::getline(in, raw)) {
    ++ln;
    std::string line = raw.substr(0, raw.find('#'));
    std::size_t off = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(ln, off + 1, "section header missing ']'");
      std::string h = line.substr(1, line.size() - 2);
      trim(h);
      Section s{"", "", ln, {}, {}};
      auto sp = h.find_first_of(" \t");
      if (sp == std::string::npos) {
        s.name = h;
      } else {
        s.name = h.substr(0, sp);
        s.arg = h.substr(sp);
        trim(s.arg);
      }
      static const std::set<std::string> known{"algebra", "parabolic", "window", "command", "module"};
      if (!known.count(s.name)) throw ConfigError(ln, off + 2, "unknown section '" + h + "'");
      if (s.name == "module") {
        if (!is_ident(s.arg)) throw ConfigError(ln, off + 2, "module section needs a name: [module NAME]");
        for (const auto& o : out)
          if (o.name == "module" && o.arg == s.arg)
            throw ConfigError(ln, off + 2, "duplicate module '" + s.arg + "'");
      } else {
        if (!s.arg.empty()) throw ConfigError(ln, off + 2, "section [" + s.name + "] takes no name");
        for (const auto& o : out)
          if (o.name == s.name) throw ConfigError(ln, off + 2, "duplicate section [" + s.name + "]");
      }
      out.push_back(std::move(s));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(ln, off + 1, "expected 'key = value'");
    std::string key = line.substr(0, eq);
    trim(key);
    std::string value = line.substr(eq + 1);
    std::size_t voff = off + eq + 1 + trim(value);
    if (!is_ident(key)) throw ConfigError(ln, off + 1, "malformed key '" + key + "'");
    if (value.empty()) throw ConfigError(ln, voff + 1, "missing value for '" + key + "'");
    if (out.empty()) throw ConfigError(ln, off + 1, "key '" + key + "' outside any section");
    auto& keys = out.back().keys;
    if (keys.count(key)) throw ConfigError(ln, off + 1, "duplicate key '" + key + "'");
    keys[key] = {value, ln, voff + 1, off + 1};
  }
  return out;
}

Rational rational_of(const Entry& e, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw ConfigError(e.line, e.column, "malformed rational '" + text + "'");
  }
}

Rational rational_of(const Entry& e) { return rational_of(e, e.value); }

int int_of(const Entry& e, const std::string& text) {
  Rational r = rational_of(e, text);
  if (!is_integer(r) || !r.get_num().fits_sint_p()) throw ConfigError(e.line, e.column, "expected an integer, got '" + text + "'");
  return static_cast<int>(r.get_num().get_si());
}

std::vector<std::string> list_items(const Entry& e) {
  const std::string& v = e.value;
  if (v.size() < 2 || v.front() != '[' || v.back() != ']')
    throw ConfigError(e.line, e.column, "expected a bracketed list like [1, 0]");
  std::string inner = v.substr(1, v.size() - 2);
  trim(inner);
  std::vector<std::string> out;
  if (inner.empty()) return out;
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) {
    trim(item);
    if (item.empty()) throw ConfigError(e.line, e.column, "empty list element");
    out.push_back(item);
  }
  if (inner.back() == ',') throw ConfigError(e.line, e.column, "empty list element");
  return out;
}

std::vector<Rational> rationals_of(const Entry& e) {
  std::vector<Rational> out;
  for (const auto& s : list_items(e)) out.push_back(rational_of(e, s));
  return out;
}

std::vector<int> ints_of(const Entry& e) {
  std::vector<int> out;
  for (const auto& s : list_items(e)) out.push_back(int_of(e, s));
  return out;
}

std::size_t rank_of(RootType t) { return t == RootType::A1 ? 1 : 2; }

class Reader {
 public:
  explicit Reader(Section& s) : s_(s) {}
  const Entry* get(const std::string& key) {
    auto it = s_.keys.find(key);
    if (it == s_.keys.end()) return nullptr;
    s_.used.insert(key);
    return &it->second;
  }
  const Entry& need(const std::string& key) {
    if (const Entry* e = get(key)) return *e;
    throw ConfigError(s_.line, 1, "section " + title() + " is missing '" + key + "'");
  }
  // Any key not consumed is unknown for this section.
  void finish() const {
    for (const auto& [k, e] : s_.keys)
      if (!s_.used.count(k)) throw ConfigError(e.line, e.key_column, "unknown key '" + k + "' in " + title());
  }
  std::string title() const { return "[" + s_.name + (s_.arg.empty() ? "" : " " + s_.arg) + "]"; }

 private:
  Section& s_;
};

void check_levi(const Entry& e, const std::vector<int>& levi, std::size_t rank) {
  std::set<int> seen;
  for (int i : levi) {
    if (i < 1 || i > static_cast<int>(rank))
      throw ConfigError(e.line, e.column, "simple root index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
    if (!seen.insert(i).second) throw ConfigError(e.line, e.column, "repeated simple root " + std::to_string(i));
  }
}

Weight weight_of(const Entry& e, std::size_t rank) {
  auto c = rationals_of(e);
  if (c.size() != rank)
    throw ConfigError(e.line, e.column, "weight needs " + std::to_string(rank) + " coordinates");
  return Weight(std::move(c));
}

ModuleSpec read_module(Section& s, std::size_t rank) {
  Reader r(s);
  ModuleSpec m;
  m.name = s.arg;
  const Entry& k = r.need("kind");
  m.kind = k.value;
  if (m.kind == "verma" || m.kind == "simple_hw") {
    m.lambda = weight_of(r.need("lambda"), rank);
  } else if (m.kind == "cuspidal_sl2") {
    m.mu0 = rational_of(r.need("mu0"));
    m.mu1 = rational_of(r.need("mu1"));
    if (rank > 1) {
      const Entry& re = r.need("root");
      m.root = int_of(re, re.value);
      if (*m.root < 1 || *m.root > static_cast<int>(rank))
        throw ConfigError(re.line, re.column, "root must be a simple root index in 1.." + std::to_string(rank));
      const Entry& ce = r.need("center");
      m.center = rationals_of(ce);
      if (m.center->size() != rank - 1)
        throw ConfigError(ce.line, ce.column, "center needs " + std::to_string(rank - 1) + " coordinates");
    }
  } else if (m.kind == "dual-of") {
    m.of = r.need("of").value;
  } else if (m.kind == "twist-of") {
    m.of = r.need("of").value;
    const Entry& ge = r.need("gamma");
    m.gamma = ints_of(ge);
    if (m.gamma->size() != rank || std::all_of(m.gamma->begin(), m.gamma->end(), [](int v) { return v == 0; }))
      throw ConfigError(ge.line, ge.column, "gamma must be a nonzero root in simple-root coordinates");
    m.x = rational_of(r.need("x"));
  } else if (m.kind == "induced") {
    m.of = r.need("of").value;
    const Entry& le = r.need("levi");
    m.levi = ints_of(le);
    check_levi(le, *m.levi, rank);
  } else {
    throw ConfigError(k.line, k.column, "unknown module kind '" + m.kind + "'");
  }
  r.finish();
  return m;
}

CommandSpec read_command(Section& s) {
  Reader r(s);
  CommandSpec c;
  const Entry& ne = r.need("name");
  auto cmd = parse_command(ne.value);
  if (!cmd) throw ConfigError(ne.line, ne.column, "unknown command '" + ne.value + "'");
  c.name = *cmd;
  c.module = r.need("module").value;
  if (c.name == Command::Verify) {
    const Entry& se = r.need("suite");
    c.suite = se.value;
    if (se.value != "ep-index" && se.value != "index" && se.value != "correspondence")
      throw ConfigError(se.line, se.column, "suite must be ep-index, index or correspondence");
  }
  if (c.name == Command::Pair || (c.name == Command::Verify && c.suite == "ep-index")) c.other = r.need("other").value;
  if (c.name == Command::Cohomology) {
    const Entry& de = r.need("direction");
    c.direction = de.value;
    try {
      parse_direction(de.value);
    } catch (const std::exception&) {
      throw ConfigError(de.line, de.column, "unknown direction '" + de.value + "'");
    }
  }
  r.finish();
  return c;
}

}  // namespace

JobConfig parse_config(const std::string& text) {
  auto sections = tokenize(text);
  auto find = [&](const std::string& name) -> Section& {
    for (auto& s : sections)
      if (s.name == name) return s;
    throw ConfigError(0, 0, "missing section [" + name + "]");
  };
  JobConfig cfg;
  {
    Section& s = find("algebra");
    Reader r(s);
    const Entry& t = r.need("type");
    try {
      cfg.algebra = build_root_system(t.value)->type();
    } catch (const std::invalid_argument&) {
      throw ConfigError(t.line, t.column, "unknown algebra type '" + t.value + "'");
    }
    r.finish();
  }
  const std::size_t rank = rank_of(cfg.algebra);
  {
    Section& s = find("parabolic");
    Reader r(s);
    const Entry& e = r.need("levi");
    cfg.levi = ints_of(e);
    check_levi(e, cfg.levi, rank);
    r.finish();
  }
  {
    Section& s = find("window");
    Reader r(s);
    cfg.window_base = weight_of(r.need("base"), rank);
    const Entry& re = r.need("radius");
    cfg.window_radius = int_of(re, re.value);
    if (cfg.window_radius <= 0) throw ConfigError(re.line, re.column, "window radius must be positive");
    r.finish();
  }
  std::map<std::string, std::size_t> line_of;
  for (auto& s : sections)
    if (s.name == "module") {
      cfg.modules.push_back(read_module(s, rank));
      line_of[s.arg] = s.line;
    }
  if (cfg.modules.empty()) throw ConfigError(0, 0, "no [module NAME] section");
  Section& cs = find("command");
  cfg.command = read_command(cs);

  // References must resolve, without cycles.
  std::map<std::string, const ModuleSpec*> by_name;
  for (const auto& m : cfg.modules) by_name[m.name] = &m;
  for (const auto& m : cfg.modules) {
    std::set<std::string> seen{m.name};
    const ModuleSpec* cur = &m;
    while (cur->of) {
      auto it = by_name.find(*cur->of);
      if (it == by_name.end()) throw ConfigError(line_of[cur->name], 1, "module '" + *cur->of + "' is not defined");
      if (!seen.insert(*cur->of).second)
        throw ConfigError(line_of[m.name], 1, "module '" + m.name + "' refers to itself");
      cur = it->second;
    }
  }
  for (const auto* ref : {&cfg.command.module, cfg.command.other ? &*cfg.command.other : nullptr})
    if (ref && !by_name.count(*ref)) throw ConfigError(cs.line, 1, "module '" + *ref + "' is not defined");
  return cfg;
}

namespace {

std::string list_str(const std::vector<Rational>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + diracwm::to_string(v[i]);
  return s + "]";
}

std::string list_str(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

std::string render_config(const JobConfig& cfg) {
  std::ostringstream os;
  os << "[algebra]\ntype = " << diracwm::to_string(cfg.algebra) << "\n\n";
  os << "[parabolic]\nlevi = " << list_str(cfg.levi) << "\n\n";
  os << "[window]\nbase = " << list_str(cfg.window_base.coords()) << "\nradius = " << cfg.window_radius << "\n";
  for (const auto& m : cfg.modules) {
    os << "\n[module " << m.name << "]\nkind = " << m.kind << "\n";
    if (m.lambda) os << "lambda = " << list_str(m.lambda->coords()) << "\n";
    if (m.mu0) os << "mu0 = " << diracwm::to_string(*m.mu0) << "\n";
    if (m.mu1) os << "mu1 = " << diracwm::to_string(*m.mu1) << "\n";
    if (m.root) os << "root = " << *m.root << "\n";
    if (m.center) os << "center = " << list_str(*m.center) << "\n";
    if (m.of) os << "of = " << *m.of << "\n";
    if (m.gamma) os << "gamma = " << list_str(*m.gamma) << "\n";
    if (m.x) os << "x = " << diracwm::to_string(*m.x) << "\n";
    if (m.levi) os << "levi = " << list_str(*m.levi) << "\n";
  }
  const auto& c = cfg.command;
  os << "\n[command]\nname = " << to_string(c.name) << "\nmodule = " << c.module << "\n";
  if (c.other) os << "other = " << *c.other << "\n";
  if (c.direction) os << "direction = " << *c.direction << "\n";
  if (c.suite) os << "suite = " << *c.suite << "\n";
  return os.str();
}

// ---------------------------------------------------------------- execution

namespace {

std::vector<int> zero_based(const std::vector<int>& levi) {
  std::vector<int> out;
  for (int i : levi) out.push_back(i - 1);
  std::sort(out.begin(), out.end());
  return out;
}

class Builder {
 public:
  explicit Builder(const JobConfig& cfg) : cfg_(cfg), g_(lie_algebra(cfg.algebra)) {}

  ModulePtr build(const std::string& name) {
    if (auto it = built_.find(name); it != built_.end()) return it->second;
    const ModuleSpec& s =
        *std::find_if(cfg_.modules.begin(), cfg_.modules.end(), [&](const ModuleSpec& m) { return m.name == name; });
    ModulePtr m;
    try {
      m = make(s);
    } catch (const PreconditionError& e) {
      throw PreconditionError("module " + name + ": " + e.what());
    }
    built_[name] = m;
    return m;
  }

  const std::shared_ptr<const LieAlgebra>& algebra() const { return g_; }

 private:
  ModulePtr make(const ModuleSpec& s) {
    if (s.kind == "verma") return verma(g_, *s.lambda);
    if (s.kind == "simple_hw") return std::make_shared<const SimpleHW>(g_, *s.lambda);
    if (s.kind == "cuspidal_sl2")
      return std::make_shared<const CuspidalSL2>(g_, *s.mu0, *s.mu1, s.root ? *s.root - 1 : 0,
                                                 s.center.value_or(std::vector<Rational>{}));
    ModulePtr inner = build(*s.of);
    if (s.kind == "dual-of") return std::make_shared<const DualModule>(inner);
    if (s.kind == "twist-of")
      return std::make_shared<const TwistModule>(inner, std::vector<std::vector<int>>{*s.gamma},
                                                 std::vector<Rational>{*s.x});
    return induce_parabolic(parabolic(g_->root_datum_ptr(), zero_based(*s.levi)), inner);
  }

  const JobConfig& cfg_;
  std::shared_ptr<const LieAlgebra> g_;
  std::map<std::string, ModulePtr> built_;
};

// Runs f on every weight with at most `workers` threads; results keep the
// input order. The error of the lowest failing index is rethrown, tagged
// with its weight, so failures are reported identically at any worker count.
template <class T>
std::vector<T> parallel_map(const std::vector<Weight>& ws, unsigned workers, const std::function<T(const Weight&)>& f) {
  std::vector<T> out(ws.size());
  std::vector<std::exception_ptr> errs(ws.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto run = [&] {
    for (std::size_t i; !stop && (i = next++) < ws.size();) {
      try {
        out[i] = f(ws[i]);
      } catch (...) {
        errs[i] = std::current_exception();
        stop = true;
      }
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(ws.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (errs[i]) {
      try {
        std::rethrow_exception(errs[i]);
      } catch (const PreconditionError& e) {
        throw PreconditionError("at weight " + ws[i].str() + ": " + e.what());
      }
    }
  return out;
}

using Row = std::optional<Record>;

void collect(Report& rep, std::vector<Row> rows) {
  for (auto& r : rows)
    if (r) rep.records.push_back(std::move(*r));
}

std::string join_audit(const std::vector<std::string>& audit) {
  std::string s;
  for (auto a : audit) {
    trim(a);
    s += (s.empty() ? "" : "; ") + a;
  }
  return s;
}

}  // namespace

Report execute(const JobConfig& cfg, unsigned workers) {
  Builder b(cfg);
  const auto& g = b.algebra();
  const RootDatum& rd = g->root_datum();
  const ParabolicDatum pd = parabolic(g->root_datum_ptr(), zero_based(cfg.levi));
  const Window win{cfg.window_base, cfg.window_radius};
  const CommandSpec& c = cfg.command;
  ModulePtr m = b.build(c.module);
  ModulePtr other = c.other ? b.build(*c.other) : nullptr;

  Report rep;
  rep.rank = rd.rank();
  // Module weights live on the plain window; Dirac and index weights on the
  // window shifted by rho(ubar), where M-weights mu + rho(ubar) land.
  const auto plain = window_weights(rd, win, Weight::zero(rd.rank()));
  const auto shifted = window_weights(rd, win, pd.rho_ubar());

  switch (c.name) {
    case Command::Describe: {
      rep.weighted = true;
      rep.columns = {"dim"};
      collect(rep, parallel_map<Row>(plain, workers, [&](const Weight& w) -> Row {
                std::size_t d = m->block_dim(w);
                if (!d) return std::nullopt;
                return Record{w, {static_cast<long long>(d)}};
              }));
      break;
    }
    case Command::Cohomology: {
      const Direction dir = parse_direction(*c.direction);
      rep.weighted = true;
      for (std::size_t p = 0; p <= pd.dim_u(); ++p) rep.columns.push_back("h" + std::to_string(p));
      collect(rep, parallel_map<Row>(plain, workers, [&](const Weight& w) -> Row {
                auto cx = ce_complex(*m, pd, w, dir);
                bool empty = std::all_of(cx.basis.begin(), cx.basis.end(), [](const auto& v) { return v.empty(); });
                if (empty) return std::nullopt;
                Record r{w, {}};
                for (auto h : homology_dims(cx)) r.values.emplace_back(static_cast<long long>(h));
                return r;
              }));
      break;
    }
    case Command::Dirac: {
      auto spin = std::make_shared<const SpinModule>(g, pd);
      rep.weighted = true;
      rep.columns = {"dim_plus", "dim_minus"};
      collect(rep, parallel_map<Row>(shifted, workers, [&](const Weight& w) -> Row {
                auto blk = dirac_block(*m, *spin, w);
                if (blk.parity.empty()) return std::nullopt;
                auto h = dirac_cohomology(blk);
                return Record{w, {static_cast<long long>(h.plus), static_cast<long long>(h.minus)}};
              }));
      break;
    }
    case Command::Index: {
      auto idx = spin_index(m, pd);
      rep.weighted = true;
      rep.columns = {"value"};
      collect(rep, parallel_map<Row>(shifted, workers, [&](const Weight& w) -> Row {
                long long v = idx(w);
                if (!v) return std::nullopt;
                return Record{w, {v}};
              }));
      break;
    }
    case Command::Pair: {
      auto r = ep_pair(m, other, win);
      rep.columns = {"value", "method", "audit"};
      rep.records.push_back({std::nullopt, {r.value, to_string(r.method), join_audit(r.audit)}});
      break;
    }
    case Command::Verify: {
      if (*c.suite == "ep-index") {
        auto r = verify_main2(m, other, win);
        rep.columns = {"ep", "method", "index_pair", "index_certified", "equal", "status", "corollary"};
        std::string cor = !r.corollary_applicable ? "n/a" : r.corollary_ok ? "holds" : "fails";
        rep.records.push_back({std::nullopt,
                               {r.ep.value, to_string(r.ep.method), r.index_value, r.index_certified, r.ok, r.status, cor}});
        rep.verified = r.ok && (!r.corollary_applicable || r.corollary_ok);
      } else if (*c.suite == "index") {
        auto r = verify_index_identities(m, pd, shifted);
        rep.columns = {"id", "check", "applicable", "ok", "detail"};
        for (const auto& ch : r.checks)
          rep.records.push_back({std::nullopt, {std::string(1, ch.id), ch.name, ch.applicable, ch.ok, ch.detail}});
        rep.verified = r.ok();
      } else {
        rep.weighted = true;
        rep.columns = {"ok", "mismatch"};
        collect(rep, parallel_map<Row>(shifted, workers, [&](const Weight& w) -> Row {
                  auto r = correspondence_check(*m, pd, w);
                  return Record{w, {r.ok, r.first_mismatch}};
                }));
        rep.verified = std::all_of(rep.records.begin(), rep.records.end(),
                                   [](const Record& r) { return std::get<bool>(r.values[0]); });
      }
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------- output

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "jsonl") return Format::Jsonl;
  throw std::invalid_argument("unknown format '" + s + "' (expected csv or jsonl)");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string csv_value(const Value& v) {
  if (auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return csv_field(std::get<std::string>(v));
}

}  // namespace

std::string emit_report(const Report& r, Format f) {
  std::string out;
  if (f == Format::Csv) {
    std::vector<std::string> head;
    if (r.weighted)
      for (std::size_t i = 1; i <= r.rank; ++i) head.push_back("w" + std::to_string(i));
    head.insert(head.end(), r.columns.begin(), r.columns.end());
    for (std::size_t i = 0; i < head.size(); ++i) out += (i ? "," : "") + head[i];
    out += "\n";
    for (const auto& rec : r.records) {
      std::string line;
      if (rec.weight)
        for (const auto& x : rec.weight->coords()) line += (line.empty() ? "" : ",") + diracwm::to_string(x);
      for (std::size_t i = 0; i < rec.values.size(); ++i)
        line += (line.empty() && i == 0 && !rec.weight ? "" : ",") + csv_value(rec.values[i]);
      out += line + "\n";
    }
    return out;
  }
  for (const auto& rec : r.records) {
    nlohmann::ordered_json j;
    if (rec.weight) {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& x : rec.weight->coords()) arr.push_back(diracwm::to_string(x));
      j["weight"] = arr;
    }
    for (std::size_t i = 0; i < rec.values.size(); ++i)
      std::visit([&](const auto& v) { j[r.columns[i]] = v; }, rec.values[i]);
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace diracwm::cli
