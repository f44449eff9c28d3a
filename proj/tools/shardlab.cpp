// shardlab: build, verify and export shard structures of finite Coxeter groups.
// Exit codes: 0 success, 1 a verification check failed, 2 usage or configuration error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include "shardlab/cambrian.hpp"
#include "shardlab/geometry.hpp"
#include "shardlab/pipeline.hpp"
#include "shardlab/triangulation.hpp"

using namespace shardlab;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Above this order the pulled triangulations and the shard order chain counts are skipped by verify.
constexpr int kTriangulationLimit = 400;
// Geometry checks run for ranks up to this bound.
constexpr int kGeometryRank = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string type;
  std::string coxeter_element;
  std::vector<std::string> contract;
  std::string geometry = "on";
  std::string format;
  std::string out;
  int jobs = 1;
};

// Everything derived from a RunConfig; congruence fields are empty when not requested.
struct Pipeline {
  RunConfig cfg;
  GroupBundle b;
  std::optional<CambrianData> cambrian;
  std::vector<int> contract_generators;
  std::optional<Congruence> theta;

  bool geometry_on() const { return cfg.geometry == "on" && b.g().type().field() != FieldKind::combinatorial; }
};

Pipeline make_pipeline(const RunConfig& cfg) {
  Pipeline p{cfg, {}, std::nullopt, {}, std::nullopt};
  try {
    p.b = GroupBundle::build(cfg.type);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--type: ") + e.what());
  }
  const auto& g = p.b.g();
  if (!cfg.coxeter_element.empty()) {
    std::vector<int> order;
    try {
      order = parse_coxeter_order(cfg.coxeter_element, g.rank());
    } catch (const std::exception& e) {
      throw UsageError(std::string("--coxeter-element: ") + e.what());
    }
    p.cambrian = cambrian_congruence(g, p.b.shards, p.b.digraph, order);
  }
  for (const auto& word : cfg.contract) {
    int j = 0;
    try {
      j = element_from_word(g, word);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--contract: ") + e.what());
    }
    if (!p.b.weak->is_join_irreducible(j)) throw UsageError("--contract: '" + word + "' is not join-irreducible");
    p.contract_generators.push_back(j);
  }
  if (!p.contract_generators.empty()) {
    std::vector<int> gens = p.contract_generators;
    if (p.cambrian) gens.insert(gens.end(), p.cambrian->generators.begin(), p.cambrian->generators.end());
    p.theta = generate_congruence(p.b.shards, p.b.digraph, gens);
  } else if (p.cambrian) {
    p.theta = p.cambrian->theta;
  }
  return p;
}

std::vector<int> descent_polynomial(const CoxeterGroup& g) {
  std::vector<int> out(g.rank() + 1, 0);
  for (int w = 0; w < g.size(); ++w) ++out[g.descents(w).size()];
  return out;
}

std::vector<int> bits_to_vector(const Bits& b) {
  std::vector<int> out;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::string> element_labels(const CoxeterGroup& g, const std::vector<int>& elems) {
  std::vector<std::string> out;
  for (int w : elems) out.push_back(g.word_string(w));
  return out;
}

std::vector<int> all_elements(const CoxeterGroup& g) {
  std::vector<int> v(g.size());
  for (int i = 0; i < g.size(); ++i) v[i] = i;
  return v;
}

// ---------------------------------------------------------------- reports

json group_json(const Pipeline& p) {
  const auto& g = p.b.g();
  json elems = json::array();
  for (int w = 0; w < g.size(); ++w)
    elems.push_back({{"id", w}, {"word", g.word_string(w)}, {"length", g.length(w)}, {"descents", g.descents(w)}});
  return {{"type", g.type().name()}, {"rank", g.rank()}, {"size", g.size()}, {"coxeter_matrix", g.type().coxeter_matrix()},
          {"elements", elems}};
}

json weak_json(const Pipeline& p) {
  const auto& w = *p.b.weak;
  json covers = json::array();
  for (const auto& c : w.covers()) covers.push_back({c.lower, c.upper, c.hyperplane});
  std::vector<int> jis;
  for (int r = 0; r < w.size(); ++r)
    if (w.is_join_irreducible(r)) jis.push_back(r);
  return {{"size", w.size()}, {"covers", covers}, {"join_irreducibles", jis}};
}

json shards_json(const Pipeline& p) {
  const auto& sh = *p.b.shards;
  json table = json::array();
  for (int s = 0; s < sh.size(); ++s)
    table.push_back({{"id", s}, {"ji", sh.shard(s).ji}, {"hyperplane", sh.shard(s).hyperplane}, {"covers", sh.shard(s).covers.size()}});
  json arrows = json::array();
  for (auto [a, b] : p.b.digraph.arrows) arrows.push_back({a, b});
  return {{"shards", table}, {"digraph", {{"arrows", arrows}, {"acyclic", p.b.digraph.acyclic}}}};
}

json shard_order_json(const Pipeline& p) {
  const auto& o = *p.b.order;
  json elems = json::array();
  for (int r = 0; r < o.size(); ++r) elems.push_back({{"element", r}, {"rank", o.rank(r)}, {"label_set", bits_to_vector(o.label(r))}});
  return {{"elements", elems},
          {"rank_polynomial", o.rank_generating_polynomial()},
          {"mobius", o.mobius_direct()},
          {"maximal_chains", o.maximal_chains_direct()}};
}

json congruence_json(const Pipeline& p) {
  const Congruence& t = *p.theta;
  std::vector<int> classes(t.weak().size());
  for (int r = 0; r < t.weak().size(); ++r) classes[r] = t.class_of(r);
  return {{"num_classes", t.num_classes()},
          {"class_of", classes},
          {"bottoms", t.bottoms()},
          {"contracted_join_irreducibles", t.contracted_join_irreducibles()}};
}

json nc_json(const Pipeline& p) {
  const auto& g = p.b.g();
  const NCLattice nc(g, p.cambrian->c);
  json elems = json::array();
  for (int i = 0; i < nc.size(); ++i) elems.push_back({{"element", nc.elements()[i]}, {"word", g.word_string(nc.elements()[i])}, {"rank", nc.rank(i)}});
  return {{"c", g.word_string(p.cambrian->c)},
          {"elements", elems},
          {"mobius", nc.mobius_direct()},
          {"sortables", p.cambrian->sortables}};
}

json triangulation_json(const PulledTriangulation& t) {
  json simplices = json::array();
  for (const auto& s : t.maximal) simplices.push_back(s);
  return {{"f_vector", t.f_vector()}, {"maximal_simplices", simplices}};
}

template <class F>
std::size_t psi_size(const Pipeline& p) {
  ShardGeometry<F> geo(p.b.g(), p.b.shards);
  std::set<std::string> keys;
  for (int w = 0; w < p.b.g().size(); ++w) keys.insert(geo.psi(w).key());
  return keys.size();
}

std::optional<std::size_t> psi_size_if_geometric(const Pipeline& p) {
  if (!p.geometry_on()) return std::nullopt;
  if (p.b.g().type().field() == FieldKind::sqrt5) return psi_size<QSqrt5>(p);
  return psi_size<Rational>(p);
}

// ---------------------------------------------------------------- verify

struct Check {
  std::string suite;
  std::string name;  // the statement being instantiated
  std::function<std::string()> run;  // empty string on success; "skip: ..." to skip
};

struct Outcome {
  std::string status;  // pass, fail, skip
  std::string message;
  double seconds = 0;
};

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

std::vector<Check> group_checks(const Pipeline& p, std::vector<std::pair<std::string, std::string>>& facts) {
  const auto& b = p.b;
  const auto& g = b.g();
  std::vector<Check> out;
  out.push_back({"weak", "the weak order is a lattice", [&] { return expect(b.weak->poset().is_lattice(), "not a lattice"); }});
  out.push_back({"weak", "canonical join representations join to the element and consist of join-irreducibles", [&] {
                   for (int w = 0; w < g.size(); ++w) {
                     const auto can = b.weak->canonical_join_rep(w);
                     if (b.weak->join_of(can) != w) return "Can(" + g.word_string(w) + ") does not join to it";
                     for (int j : can)
                       if (!b.weak->is_join_irreducible(j)) return "Can(" + g.word_string(w) + ") has a reducible joinand";
                   }
                   return std::string();
                 }});
  out.push_back({"shards", "shards correspond bijectively to join-irreducible elements", [&] {
                   std::set<int> seen;
                   for (int s = 0; s < b.shards->size(); ++s) seen.insert(b.shards->shard(s).ji);
                   int jis = 0;
                   for (int r = 0; r < g.size(); ++r) jis += b.weak->is_join_irreducible(r);
                   return expect(static_cast<int>(seen.size()) == b.shards->size() && jis == b.shards->size(),
                                 "shard count differs from join-irreducible count");
                 }});
  out.push_back({"shards", "the shard digraph is acyclic", [&] { return expect(b.digraph.acyclic, "directed cycle found"); }});
  out.push_back({"shard_order", "the shard intersection order is a graded lattice ranked by descents", [&] {
                   const Poset& po = b.order->poset();
                   if (!po.is_lattice()) return std::string("not a lattice");
                   for (int w = 0; w < g.size(); ++w)
                     if (b.order->rank(w) != static_cast<int>(g.descents(w).size())) return "rank of " + g.word_string(w);
                   return expect(po.is_graded(), "not graded");
                 }});
  out.push_back({"shard_order", "the rank generating function is the descent generating function", [&] {
                   const auto poly = b.order->rank_generating_polynomial();
                   const auto d = descent_polynomial(g);
                   return expect(std::equal(poly.begin(), poly.end(), d.begin(), d.end()), "polynomials differ");
                 }});
  out.push_back({"shard_order", "the shard intersection order is atomic and coatomic",
                 [&] { return expect(b.order->poset().is_atomic() && b.order->poset().is_coatomic(), "not atomic and coatomic"); }});
  out.push_back({"shard_order", "the shard intersection order is weaker than the weak order", [&] {
                   for (int u = 0; u < g.size(); ++u)
                     for (int v = 0; v < g.size(); ++v)
                       if (b.order->preceq(u, v) && !b.weak->leq(u, v)) return g.word_string(u) + " vs " + g.word_string(v);
                   return std::string();
                 }});
  const auto mobius = b.order->mobius_direct();
  const auto chains = b.order->maximal_chains_direct();
  facts.emplace_back("mobius", std::to_string(mobius));
  facts.emplace_back("MC", std::to_string(chains));
  out.push_back({"shard_order", "the Mobius number is the alternating sum over standard parabolic subgroups",
                 [&, mobius] { return expect(mobius == b.order->mobius_parabolic(), "values differ"); }});
  out.push_back({"shard_order", "maximal chains satisfy the parabolic recursion",
                 [&, chains] { return expect(chains == b.order->maximal_chains_recursive(), "values differ"); }});
  out.push_back({"triangulation", "the pulled triangulation has the chain f-vector of the shard order", [&] {
                   if (g.size() > kTriangulationLimit) return std::string("skip: group too large");
                   const auto tri = zonotope_triangulation(*b.weak);
                   if (tri.f_vector() != b.order->poset().chain_f_vector()) return std::string("f-vectors differ");
                   const auto id = generate_congruence(b.shards, b.digraph, {});
                   return expect(check_delta(id, *b.order, tri).all(), "delta is not a bijection onto the triangulation");
                 }});
  return out;
}

template <class F>
std::vector<Check> geometry_checks(const Pipeline& p) {
  std::vector<Check> out;
  const auto& b = p.b;
  auto geo = std::make_shared<ShardGeometry<F>>(b.g(), b.shards);
  out.push_back({"geometry", "geometric shards agree with combinatorial shards",
                 [geo] { return expect(geo->partition_agrees(), "shard partitions differ"); }});
  out.push_back({"geometry", "Psi realises the shard intersection order", [geo, &b] {
                   return expect(check_psi(*geo, *b.order).all(), "psi validator failed");
                 }});
  out.push_back({"geometry", "lower-facet intervals partition the faces of the fan", [geo] {
                   return expect(check_shelling_partition(geo->arrangement()).partition, "not a partition");
                 }});
  if (p.theta) {
    const Congruence* t = &*p.theta;
    out.push_back({"geometry", "the quotient fan has one cone per congruence class", [geo, t] {
                     const auto rep = check_quotient_fan(geo->arrangement(), *t, quotient_complex(*t));
                     return expect(rep.classes_are_cones && rep.intervals && rep.matches_cell_complex, "quotient fan mismatch");
                   }});
  }
  if (p.cambrian && p.contract_generators.empty() && is_bipartite(b.g(), p.cambrian->c)) {
    const CambrianData* cd = &*p.cambrian;
    out.push_back({"geometry", "restricting the bipartite Cambrian fan preserves its intersection order",
                   [geo, cd, &b] { return expect(check_bipartite_restriction(b.g(), *geo, *cd), "restriction mismatch"); }});
  }
  return out;
}

std::vector<Check> congruence_checks(const Pipeline& p, std::vector<std::pair<std::string, std::string>>& facts) {
  std::vector<Check> out;
  const auto& b = p.b;
  const Congruence& t = *p.theta;
  facts.emplace_back("classes", std::to_string(t.num_classes()));
  out.push_back({"congruence", "classes are intervals with order-preserving projections", [&t] {
                   const auto v = t.validate();
                   return v;
                 }});
  out.push_back({"congruence", "shard digraph closure equals lattice congruence closure", [&] {
                   std::vector<int> gens = p.contract_generators;
                   if (p.cambrian) gens.insert(gens.end(), p.cambrian->generators.begin(), p.cambrian->generators.end());
                   std::vector<std::pair<int, int>> seeds;
                   for (int j : gens) seeds.emplace_back(j, b.weak->j_star(j));
                   const auto gc = generic_congruence_closure(*b.weak, seeds);
                   if (!gc.converged) return std::string("generic closure did not converge");
                   for (int x = 0; x < b.weak->size(); ++x)
                     for (int y = 0; y < b.weak->size(); ++y)
                       if ((gc.class_of[x] == gc.class_of[y]) != (t.class_of(x) == t.class_of(y))) return std::string("closures differ");
                   return std::string();
                 }});
  const bool small = b.g().size() <= kTriangulationLimit;
  if (small) {
    const QuotientShardOrder q(t, *b.order);
    facts.emplace_back("MC_quotient", std::to_string(q.poset().maximal_chain_count()));
  }
  out.push_back({"triangulation", "the quotient triangulation has the chain f-vector of the quotient shard order", [&t, &b, small] {
                   if (!small) return std::string("skip: group too large");
                   const QuotientShardOrder q(t, *b.order);
                   const auto tri = quotient_triangulation(t);
                   if (tri.f_vector() != q.poset().chain_f_vector()) return std::string("f-vectors differ");
                   return expect(check_delta(t, *b.order, tri).all(), "delta is not a bijection onto the triangulation");
                 }});
  if (p.cambrian && p.contract_generators.empty()) {
    const CambrianData& cd = *p.cambrian;
    auto nc = std::make_shared<NCLattice>(b.g(), cd.c);
    facts.emplace_back("sortables", std::to_string(cd.sortables.size()));
    facts.emplace_back("nc", std::to_string(nc->size()));
    facts.emplace_back("nc_mobius", std::to_string(nc->mobius_direct()));
    out.push_back({"cambrian", "noncrossing partitions form a lattice",
                   [nc] { return expect(nc->poset().is_lattice(), "not a lattice"); }});
    out.push_back({"cambrian", "c-sortable elements under the shard order are isomorphic to noncrossing partitions", [nc, &cd, &b] {
                     const auto rep = verify_isomorphism(b.g(), *b.order, cd, *nc);
                     return rep.all() ? std::string() : (rep.failures.empty() ? std::string("isomorphism failed") : rep.failures.front());
                   }});
  }
  return out;
}

std::vector<Outcome> run_checks(const std::vector<Check>& checks, int jobs) {
  std::vector<Outcome> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      Outcome& o = results[i];
      try {
        const std::string msg = checks[i].run();
        if (msg.empty()) o.status = "pass";
        else if (msg.rfind("skip: ", 0) == 0) o = {"skip", msg.substr(6)};
        else o = {"fail", msg};
      } catch (const std::exception& e) {
        o = {"fail", std::string("exception: ") + e.what()};
      }
      o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(checks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Timings are omitted so that reports are byte-identical across runs.
std::string junit_xml(const std::string& type, const std::vector<Check>& checks, const std::vector<Outcome>& res) {
  int failures = 0, skipped = 0;
  for (const auto& r : res) {
    failures += r.status == "fail";
    skipped += r.status == "skip";
  }
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<testsuite name=\"shardlab " << xml_escape(type) << "\" tests=\"" << checks.size() << "\" failures=\"" << failures
     << "\" skipped=\"" << skipped << "\">\n";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    os << "  <testcase classname=\"" << xml_escape(checks[i].suite) << "\" name=\"" << xml_escape(checks[i].name) << "\"";
    if (res[i].status == "pass") {
      os << "/>\n";
      continue;
    }
    os << ">\n    <" << (res[i].status == "fail" ? "failure" : "skipped") << " message=\"" << xml_escape(res[i].message)
       << "\"/>\n  </testcase>\n";
  }
  os << "</testsuite>\n";
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f << content;
}

std::filesystem::path out_dir(const RunConfig& cfg) {
  std::filesystem::path dir(cfg.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw UsageError("--out: " + ec.message());
  return dir;
}

int cmd_verify(const RunConfig& cfg) {
  const Pipeline p = make_pipeline(cfg);
  std::vector<std::pair<std::string, std::string>> facts;
  auto checks = group_checks(p, facts);
  if (p.theta) {
    auto more = congruence_checks(p, facts);
    checks.insert(checks.end(), more.begin(), more.end());
  }
  if (p.geometry_on() && p.b.g().rank() <= kGeometryRank) {
    auto more = p.b.g().type().field() == FieldKind::sqrt5 ? geometry_checks<QSqrt5>(p) : geometry_checks<Rational>(p);
    checks.insert(checks.end(), more.begin(), more.end());
  }
  const auto res = run_checks(checks, cfg.jobs);
  const bool ok = std::none_of(res.begin(), res.end(), [](const Outcome& o) { return o.status == "fail"; });

  if (cfg.format == "json") {
    json j = {{"type", p.b.g().type().name()}, {"pass", ok}};
    for (const auto& [k, v] : facts) j["facts"][k] = v;
    for (std::size_t i = 0; i < checks.size(); ++i)
      j["checks"].push_back({{"suite", checks[i].suite}, {"name", checks[i].name}, {"status", res[i].status}, {"message", res[i].message}});
    std::cout << j.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < checks.size(); ++i) {
      std::cout << (res[i].status == "pass" ? "PASS" : res[i].status == "fail" ? "FAIL" : "SKIP") << "  [" << checks[i].suite << "] "
                << checks[i].name;
      if (!res[i].message.empty()) std::cout << ": " << res[i].message;
      std::cout << "\n";
    }
    std::cout << "type=" << p.b.g().type().name();
    for (const auto& [k, v] : facts) std::cout << " " << k << "=" << v;
    std::cout << "\n" << (ok ? "verify: pass" : "verify: FAIL") << "\n";
  }
  if (!cfg.out.empty()) write_file(out_dir(cfg) / "junit.xml", junit_xml(p.b.g().type().name(), checks, res));
  return ok ? 0 : kExitFail;
}

int cmd_build(const RunConfig& cfg) {
  const Pipeline p = make_pipeline(cfg);
  const auto& g = p.b.g();
  json summary = {{"type", g.type().name()}, {"elements", g.size()}, {"shards", p.b.shards->size()}};
  if (const auto psi = psi_size_if_geometric(p)) summary["psi"] = *psi;
  if (p.theta) summary["classes"] = p.theta->num_classes();
  if (p.cambrian) summary["sortables"] = p.cambrian->sortables.size();

  if (!cfg.out.empty()) {
    const auto dir = out_dir(cfg);
    write_file(dir / "group.json", group_json(p).dump(2) + "\n");
    write_file(dir / "weak_order.json", weak_json(p).dump(2) + "\n");
    write_file(dir / "shards.json", shards_json(p).dump(2) + "\n");
    write_file(dir / "shard_order.json", shard_order_json(p).dump(2) + "\n");
    if (p.theta) write_file(dir / "congruence.json", congruence_json(p).dump(2) + "\n");
    if (p.cambrian) write_file(dir / "nc.json", nc_json(p).dump(2) + "\n");
    if (g.size() <= kTriangulationLimit) {
      const auto tri = p.theta ? quotient_triangulation(*p.theta) : zonotope_triangulation(*p.b.weak);
      write_file(dir / "triangulation.json", triangulation_json(tri).dump(2) + "\n");
    }
    write_file(dir / "summary.json", summary.dump(2) + "\n");
  }
  if (cfg.format == "json") {
    std::cout << summary.dump(2) << "\n";
  } else {
    std::cout << "type=" << g.type().name() << " elements=" << g.size() << " shards=" << p.b.shards->size();
    if (summary.contains("psi")) std::cout << " psi=" << summary["psi"].get<std::size_t>();
    if (p.theta) std::cout << " classes=" << p.theta->num_classes();
    if (p.cambrian) std::cout << " sortables=" << p.cambrian->sortables.size();
    std::cout << "\n";
  }
  return 0;
}

std::string export_dot(const Pipeline& p, const std::string& what) {
  const auto& g = p.b.g();
  if (what == "weak") return p.b.weak->poset().to_dot(element_labels(g, all_elements(g)), "weak");
  if (what == "shard_order") return p.b.order->poset().to_dot(element_labels(g, all_elements(g)), "shard_order");
  if (what == "nc") {
    if (!p.cambrian) throw UsageError("export nc needs --coxeter-element");
    const NCLattice nc(g, p.cambrian->c);
    return nc.poset().to_dot(element_labels(g, nc.elements()), "nc");
  }
  if (what == "digraph") {
    const auto& sh = *p.b.shards;
    std::ostringstream os;
    os << "digraph shards {\n";
    for (int s = 0; s < sh.size(); ++s) os << "  s" << s << " [label=\"" << g.word_string(sh.shard(s).ji) << "\"];\n";
    for (auto [a, b] : p.b.digraph.arrows) os << "  s" << a << " -> s" << b << ";\n";
    os << "}\n";
    return os.str();
  }
  if (what == "triangulation") {
    const auto tri = p.theta ? quotient_triangulation(*p.theta) : zonotope_triangulation(*p.b.weak);
    std::ostringstream os;
    os << "graph triangulation {\n";
    std::set<std::pair<int, int>> edges;
    for (const auto& s : tri.simplices)
      if (s.size() == 2) edges.insert({s[0], s[1]});
    for (auto [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
  }
  throw UsageError("unknown export target '" + what + "'");
}

std::string export_json(const Pipeline& p, const std::string& what) {
  if (what == "weak") return weak_json(p).dump(2) + "\n";
  if (what == "shard_order") return shard_order_json(p).dump(2) + "\n";
  if (what == "digraph") return shards_json(p).dump(2) + "\n";
  if (what == "nc") {
    if (!p.cambrian) throw UsageError("export nc needs --coxeter-element");
    return nc_json(p).dump(2) + "\n";
  }
  if (what == "triangulation")
    return triangulation_json(p.theta ? quotient_triangulation(*p.theta) : zonotope_triangulation(*p.b.weak)).dump(2) + "\n";
  throw UsageError("unknown export target '" + what + "'");
}

int cmd_export(const RunConfig& cfg, const std::string& what) {
  const Pipeline p = make_pipeline(cfg);
  const bool as_json = cfg.format == "json";
  const std::string body = as_json ? export_json(p, what) : export_dot(p, what);
  if (cfg.out.empty()) {
    std::cout << body;
  } else {
    write_file(out_dir(cfg) / (what + (as_json ? ".json" : ".dot")), body);
  }
  return 0;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--type", cfg.type, "Coxeter type, e.g. A3, B3, H3, I2(5), A1xA2")->required();
  sub->add_option("--coxeter-element", cfg.coxeter_element, "Coxeter element as an ordering of generators, e.g. s1,s3,s2");
  sub->add_option("--contract", cfg.contract, "join-irreducible to contract, as a reduced word (repeatable; ';' separates several)")
      ->delimiter(';');
  sub->add_option("--geometry", cfg.geometry, "run exact geometry checks")->check(CLI::IsMember({"on", "off"}));
  sub->add_option("--out", cfg.out, "output directory");
  sub->add_option("--jobs", cfg.jobs, "number of worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shardlab: shards, shard intersection orders, congruences and Cambrian structures"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string what;

  auto* build = app.add_subcommand("build", "build the pipeline and write reports");
  add_common(build, cfg);
  build->add_option("--format", cfg.format, "stdout format")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "run every applicable check");
  add_common(verify, cfg);
  verify->add_option("--format", cfg.format, "stdout format")->check(CLI::IsMember({"text", "json"}));

  auto* exp = app.add_subcommand("export", "export one structure as DOT or JSON");
  add_common(exp, cfg);
  exp->add_option("what", what, "weak | shard_order | nc | digraph | triangulation")
      ->required()
      ->check(CLI::IsMember({"weak", "shard_order", "nc", "digraph", "triangulation"}));
  exp->add_option("--format", cfg.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*build) return cmd_build(cfg);
    if (*verify) return cmd_verify(cfg);
    return cmd_export(cfg, what);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
