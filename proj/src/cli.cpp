#include "qshell/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "qshell/errors.hpp"
#include "qshell/field.hpp"
#include "qshell/homology.hpp"
#include "qshell/io.hpp"
#include "qshell/qcomplex.hpp"
#include "qshell/qmatroid.hpp"
#include "qshell/subspace.hpp"

namespace qshell::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string json_path;
  std::string format = "text";
  std::optional<std::size_t> max_subspaces;
  int max_q = 9;

  std::size_t cap() const {
    if (max_subspaces) return *max_subspaces;
    if (const char* env = std::getenv("QSHELL_MAX_SUBSPACES"); env && *env) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (*end != '\0' || v == 0) throw UsageError(std::string("QSHELL_MAX_SUBSPACES is not a positive integer: ") + env);
      return static_cast<std::size_t>(v);
    }
    return kDefaultMaxSubspaces;
  }

  json parameters() const {
    json p;
    p["max_subspaces"] = cap();
    p["max_q"] = max_q;
    return p;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--json", c.json_path, "Also write the JSON report to this file");
  cmd->add_option("--format", c.format, "Report format on stdout")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--max-subspaces", c.max_subspaces, "Refuse ambients with more subspaces (env QSHELL_MAX_SUBSPACES)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-q", c.max_q, "Largest accepted field order")->check(CLI::Range(2, Field::kMaxOrder));
}

// Bounds are checked before anything is enumerated.
Ambient bounded_ambient(int q, int n, const Common& c) {
  if (n < 1) throw UsageError("n must be at least 1");
  if (q > c.max_q) throw UsageError("q = " + std::to_string(q) + " exceeds --max-q " + std::to_string(c.max_q));
  try {
    prime_power(q);
  } catch (const std::invalid_argument&) {
    throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  }
  if (n > 64) throw ResourceCapExceeded("n = " + std::to_string(n) + " is far beyond any enumerable ambient");
  const mpz_class total = count_all_subspaces(n, q);
  if (total > mpz_class(static_cast<unsigned long>(c.cap())))
    throw ResourceCapExceeded("F_" + std::to_string(q) + "^" + std::to_string(n) + " has " + total.get_str() +
                              " subspaces, above the cap of " + std::to_string(c.cap()) + " (see --max-subspaces)");
  return Ambient(q, n);
}

void check_loaded(const Ambient& amb, const Common& c) { bounded_ambient(amb.q(), amb.n(), c); }

json big(const mpz_class& x) {
  if (x.fits_ulong_p()) return x.get_ui();
  return x.get_str();
}

json homology_json(const HomologyReport& h) {
  json degrees = json::array();
  for (const auto& d : h.truncated().degrees) {
    json t = json::array();
    for (const auto& f : d.torsion) t.push_back(big(f));
    degrees.push_back({{"p", d.p}, {"betti", d.betti}, {"torsion", t}});
  }
  return degrees;
}

std::string homology_text(const HomologyReport& h) {
  std::ostringstream s;
  bool any = false;
  for (const auto& d : h.degrees) {
    if (d.zero()) continue;
    s << (any ? ", " : "") << "H~_" << d.p << " = ";
    bool first = true;
    if (d.betti) {
      s << "Z^" << d.betti;
      first = false;
    }
    for (const auto& f : d.torsion) {
      s << (first ? "" : " + ") << "Z/" << f.get_str();
      first = false;
    }
    any = true;
  }
  if (!any) s << "all reduced homology vanishes";
  return s.str();
}

json counts_json(const OrderComplex& k) {
  json f = json::array();
  for (int p = 0; p <= k.dim(); ++p) f.push_back(k.count(p));
  return f;
}

std::string counts_text(const OrderComplex& k) {
  std::string s = "(";
  for (int p = 0; p <= k.dim(); ++p) s += (p ? ", " : "") + std::to_string(k.count(p));
  return s + ")";
}

json header(const std::string& command, json parameters) {
  json r;
  r["tool"] = kVersion;
  r["command"] = command;
  r["parameters"] = std::move(parameters);
  return r;
}

int finish(const json& report, const std::string& text, const Common& c, std::ostream& out, int code) {
  const std::string dumped = report.dump(2) + "\n";
  if (!c.json_path.empty()) {
    std::ofstream f(c.json_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + c.json_path);
    f << dumped;
  }
  if (c.format == "json")
    out << dumped;
  else
    out << text;
  return code;
}

// ---------------------------------------------------------------- commands

int cmd_sphere_homology(int n, int q, const Common& c, std::ostream& out) {
  const Ambient amb = bounded_ambient(q, n, c);
  check_homology_limits(sphere_chain_counts(n, q));
  const Poset poset = inclusion_poset(q_sphere(amb, c.cap()).puncture());
  const auto k = order_complex(poset);
  const auto computed = reduced_homology(k);
  const auto expected = expected_sphere_homology(n, q);
  const bool euler = euler_check(k, computed);
  const bool match = same_homology(computed, expected);

  json params = c.parameters();
  params["n"] = n;
  params["q"] = q;
  json r = header("sphere-homology", params);
  r["q"] = q;
  r["n"] = n;
  r["complex"] = "sphere";
  r["degrees"] = homology_json(computed);
  r["euler_ok"] = euler;
  r["expected"] = homology_json(expected);
  r["match"] = match;
  r["simplex_counts"] = counts_json(k);

  std::ostringstream t;
  t << kVersion << "  sphere-homology q=" << q << " n=" << n << "\n"
    << "order complex simplex counts: " << counts_text(k) << "\n"
    << "computed: " << homology_text(computed) << "\n"
    << "expected: " << homology_text(expected) << "\n"
    << "euler characteristic: " << (euler ? "consistent" : "INCONSISTENT") << "\n"
    << (match && euler ? "match" : "MISMATCH") << "\n";
  return finish(r, t.str(), c, out, match && euler ? kOk : kMismatch);
}

json violations_json(const AxiomReport& report, std::size_t limit = 10) {
  json checks = json::array();
  for (const auto& chk : report.checks) {
    json v = json::array();
    for (std::size_t i = 0; i < chk.violations.size() && i < limit; ++i) {
      json w = json::array();
      for (const auto& s : chk.violations[i].witnesses) w.push_back(format_subspace(s));
      v.push_back({{"witnesses", w}, {"detail", chk.violations[i].detail}});
    }
    checks.push_back({{"axiom", chk.axiom}, {"passed", chk.passed()}, {"violation_count", chk.violations.size()}, {"violations", v}});
  }
  return checks;
}

std::string violations_text(const AxiomReport& report) {
  std::ostringstream t;
  for (const auto& chk : report.checks) {
    t << "  (" << chk.axiom << ") " << (chk.passed() ? "ok" : "VIOLATED");
    if (!chk.passed()) {
      const auto& v = chk.violations.front();
      t << " [" << chk.violations.size() << "]: " << v.detail;
      for (std::size_t i = 0; i < v.witnesses.size(); ++i) t << (i ? ", " : "; witnesses ") << format_subspace(v.witnesses[i]);
    }
    t << "\n";
  }
  return t.str();
}

int cmd_matroid_shell(const std::vector<int>& uniform, const std::string& table_path, const Common& c, std::ostream& out) {
  json params = c.parameters();
  std::optional<RankOracle> m;
  if (!uniform.empty()) {
    const int k = uniform[0], n = uniform[1], q = uniform[2];
    if (k < 1 || k > n) throw UsageError("--uniform needs 1 <= k <= n");
    const Ambient amb = bounded_ambient(q, n, c);
    m = uniform_matroid(k, std::make_shared<const SubspaceIndex>(amb, c.cap()));
    params["uniform"] = {{"k", k}, {"n", n}, {"q", q}};
  } else {
    try {
      m = read_rank_table(table_path, c.cap());
    } catch (const ParseError& e) {
      throw AxiomViolation(std::string("malformed rank table: ") + e.what());
    }
    check_loaded(m->ambient(), c);
    params["rank_table"] = table_path;
  }
  const Ambient& amb = m->ambient();
  json r = header("matroid-shell", params);
  r["q"] = amb.q();
  r["n"] = amb.n();
  r["complex"] = uniform.empty() ? "file" : "uniform";

  const AxiomReport axioms = verify_rank_axioms(*m);
  r["rank_axioms"] = violations_json(axioms);
  std::ostringstream t;
  t << kVersion << "  matroid-shell q=" << amb.q() << " n=" << amb.n() << "\n";
  if (!axioms.ok()) {
    t << "rank function is not a q-matroid:\n" << violations_text(axioms);
    return finish(r, t.str(), c, out, kAxiomViolation);
  }

  const QComplex delta = independent_spaces(*m);
  const ShellingOrder order = shelling_via_order(delta);
  const int t_count = static_cast<int>(order.size());
  const auto cert = is_shelling(delta, order);
  r["faces"] = delta.size();
  r["facets"] = t_count;
  r["rank"] = m->matroid_rank();
  json facets = json::array();
  for (const auto& f : order) facets.push_back(format_subspace(f));
  r["order"] = facets;
  r["is_shelling"] = cert.is_shelling;

  t << "rank " << m->matroid_rank() << ", " << delta.size() << " independent spaces, " << t_count << " bases\n";
  bool ok = cert.is_shelling;
  if (cert.is_shelling) {
    json witness = json::array();
    for (int j = 1; j < t_count; ++j) {
      json row = json::array();
      for (int k : cert.witness[j]) row.push_back(k + 1);
      witness.push_back({{"j", j + 1}, {"k", row}});
    }
    r["witness"] = witness;
    t << "tower-sorted bases form a shelling; every pair (i, j) has a witness k\n";

    const auto partition = verify_interval_partition(delta, order);
    json sizes = json::array();
    for (const auto& iv : partition.partition.intervals) sizes.push_back(iv.size());
    r["interval_partition"] = {{"ok", partition.ok}, {"violation", partition.violation}, {"interval_sizes", sizes},
                               {"nonempty_restriction_sets", partition.partition.restriction_sets.size()}};
    t << "interval partition: " << (partition.ok ? "ok" : "FAILED: " + partition.violation) << "\n";
    ok = ok && partition.ok;

    const auto hyp = acyclicity_hypothesis(amb, order, t_count);
    json hyp_j = json::array();
    std::size_t hyp_holds = 0;
    for (std::size_t i = 0; i < hyp.size(); ++i) {
      hyp_j.push_back(static_cast<bool>(hyp[i]));
      hyp_holds += hyp[i];
    }
    r["acyclicity_hypothesis"] = hyp_j;
    json links = json::array();
    std::size_t link_holds = 0;
    for (int i = 1; i < t_count; ++i) {
      const bool l = sphere_link_check(amb, order, i);
      links.push_back(l);
      link_holds += l;
    }
    r["sphere_links"] = links;
    t << "acyclicity hypothesis holds at " << hyp_holds << " of " << hyp.size() << " positions i >= 2\n"
      << "link is a full sphere at " << link_holds << " of " << (t_count > 0 ? t_count - 1 : 0) << " positions i >= 2\n";
  } else {
    const auto [i, j] = *cert.violation;
    r["violation"] = {{"i", i + 1}, {"j", j + 1}};
    t << "NOT a shelling: no witness for i=" << i + 1 << ", j=" << j + 1 << "\n";
  }
  return finish(r, t.str(), c, out, ok ? kOk : kMismatch);
}

int cmd_verify(const std::string& independents, const std::string& bases_path, const std::string& table, const Common& c,
               std::ostream& out) {
  json params = c.parameters();
  std::ostringstream t;
  t << kVersion << "  verify\n";
  AxiomReport report;
  json r;
  std::optional<json> exchange;
  bool exchange_ok = true;

  if (!table.empty()) {
    params["rank_table"] = table;
    const RankOracle m = read_rank_table(table, c.cap());
    check_loaded(m.ambient(), c);
    r = header("verify", params);
    r["q"] = m.ambient().q();
    r["n"] = m.ambient().n();
    report = verify_rank_axioms(m);
    if (report.ok()) {
      const Ambient& amb = m.ambient();
      const auto family = bases(m).bases;
      std::size_t triples = 0, failures = 0;
      json first_failure;
      for (const auto& b1 : family)
        for (const auto& b2 : family) {
          if (b1 == b2) continue;
          for (const auto& y : amb.elements(b2)) {
            if (amb.contains(b1, y)) continue;
            ++triples;
            bool holds = false;
            try {
              holds = exchange_holds(m, b1, b2, y, dual_basis_exchange(m, b1, b2, y));
            } catch (const AxiomViolation&) {
            }
            if (!holds && failures++ == 0)
              first_failure = {{"b1", format_subspace(b1)}, {"b2", format_subspace(b2)}, {"y", format_vector(y)}};
          }
        }
      exchange = json{{"triples", triples}, {"failures", failures}};
      if (failures) (*exchange)["first_failure"] = first_failure;
      exchange_ok = failures == 0;
      t << "rank axioms (r1)-(r3): ok\n"
        << "dual basis exchange: " << triples - failures << " of " << triples << " triples (B1, B2, y) verified\n";
    } else {
      t << "rank axioms:\n" << violations_text(report);
    }
  } else {
    const bool is_bases = !bases_path.empty();
    const std::string& path = is_bases ? bases_path : independents;
    params[is_bases ? "bases" : "independents"] = path;
    const SubspaceList list = read_subspace_list(path);
    check_loaded(list.ambient, c);
    const SubspaceIndex idx(list.ambient, c.cap());
    r = header("verify", params);
    r["q"] = list.ambient.q();
    r["n"] = list.ambient.n();
    if (is_bases) {
      BasisFamily fam{list.subspaces};
      std::sort(fam.bases.begin(), fam.bases.end(), CanonicalLess{});
      if (fam.bases.empty()) throw ParseError(path + ": no bases listed");
      report = verify_basis_axioms(idx, fam);
    } else {
      report = verify_independence_axioms(idx, list.subspaces);
    }
    t << (is_bases ? "basis axioms (b1)-(b4), " : "independence axioms (i1)-(i4), ") << list.subspaces.size()
      << " subspaces:\n"
      << violations_text(report);
  }
  r["axioms"] = violations_json(report);
  if (exchange) r["exchange"] = *exchange;
  const bool ok = report.ok() && exchange_ok;
  r["ok"] = ok;
  t << (ok ? "valid" : "INVALID") << "\n";
  return finish(r, t.str(), c, out, ok ? kOk : kAxiomViolation);
}

// ------------------------------------------------------------ explore-links

struct Candidate {
  std::string name;
  QComplex complex;
  ShellingOrder order;
};

// Searches the least ell such that every later link is a full sphere and the
// punctured prefix is acyclic; reports the predicted top Betti number.
json explore_order(const Candidate& cand, const ShellingOrder& order, bool full) {
  const Ambient& amb = cand.complex.ambient();
  const int t = static_cast<int>(order.size());
  json r;
  const auto cert = is_shelling(cand.complex, order);
  r["is_shelling"] = cert.is_shelling;
  if (!cert.is_shelling) return r;

  std::vector<bool> links(static_cast<std::size_t>(t), false);
  for (int i = 1; i < t; ++i) links[i] = sphere_link_check(amb, order, i);
  if (full) {
    json l = json::array();
    for (int i = 1; i < t; ++i) l.push_back(static_cast<bool>(links[i]));
    r["sphere_links"] = l;
  }
  int first_ell = t;
  while (first_ell > 1 && links[first_ell - 1]) --first_ell;

  std::optional<int> ell;
  std::string how;
  for (int e = first_ell; e <= t && !ell; ++e) {
    const PuncturedComplex prefix = prefix_complex(amb, order, e).puncture();
    const ConeResult cone = cone_apex(prefix);
    if (cone.kind == ConeResult::Kind::apex) {
      ell = e;
      how = "cone";
    } else if (finite_space_homology(prefix).acyclic()) {
      ell = e;
      how = "acyclic";
    }
  }
  r["links_pass_after"] = first_ell;
  if (!ell) {
    r["hypothesis"] = false;
    return r;
  }
  const int d = cand.complex.dim();
  mpz_class cd;
  mpz_ui_pow_ui(cd.get_mpz_t(), static_cast<unsigned long>(amb.q()), static_cast<unsigned long>(d) * (d - 1) / 2);
  const mpz_class predicted = mpz_class(static_cast<unsigned long>(t - *ell)) * cd;
  const auto h = finite_space_homology(cand.complex.puncture());
  r["hypothesis"] = true;
  r["ell"] = *ell;
  r["prefix_contractible_by"] = how;
  r["predicted_betti_top"] = {{"p", d - 1}, {"betti", big(predicted)}};
  r["computed_betti_top"] = {{"p", d - 1}, {"betti", h.betti(d - 1)}};
  r["computed_betti_0"] = h.betti(0);
  r["prediction_matches"] = mpz_class(static_cast<unsigned long>(h.betti(d - 1))) == predicted;
  if (full) r["homology"] = homology_json(h);
  return r;
}

int cmd_explore_links(const std::vector<std::string>& files, const std::vector<int>& sphere, const std::vector<int>& apex,
                      const std::string& order_kind, int random_orders, std::uint64_t seed, const Common& c, std::ostream& out) {
  json params = c.parameters();
  params["order"] = order_kind;
  params["random_orders"] = random_orders;
  params["seed"] = seed;
  std::vector<Candidate> cands;
  for (const auto& path : files) {
    const SubspaceList list = read_subspace_list(path);
    check_loaded(list.ambient, c);
    QComplex complex = QComplex::closure(list.ambient, list.subspaces);
    ShellingOrder order;
    for (const auto& s : list.subspaces) {
      const auto& f = complex.facets();
      if (std::find(f.begin(), f.end(), s) != f.end() && std::find(order.begin(), order.end(), s) == order.end()) order.push_back(s);
    }
    cands.push_back({path, std::move(complex), std::move(order)});
  }
  if (!sphere.empty()) {
    const int n = sphere[0], q = sphere[1];
    params["sphere"] = {{"n", n}, {"q", q}};
    const Ambient amb = bounded_ambient(q, n, c);
    if (n < 2) throw UsageError("--sphere needs n >= 2");
    Vector a(static_cast<std::size_t>(n));
    if (apex.empty()) {
      a[0] = 1;
    } else {
      if (static_cast<int>(apex.size()) != n) throw UsageError("--apex needs n entries");
      for (int i = 0; i < n; ++i) {
        if (apex[i] < 0 || apex[i] >= q) throw UsageError("--apex entries must lie in [0, q)");
        a[i] = static_cast<Elem>(apex[i]);
      }
      if (a.is_zero()) throw UsageError("--apex must be nonzero");
    }
    params["apex"] = format_vector(a);
    cands.push_back({"sphere n=" + std::to_string(n) + " q=" + std::to_string(q), q_sphere(amb, c.cap()), sphere_shelling(amb, a).order});
  }
  if (cands.empty()) throw UsageError("explore-links needs --from-file or --sphere");

  json r = header("explore-links", params);
  json entries = json::array();
  std::ostringstream t;
  t << kVersion << "  explore-links\n";
  std::mt19937_64 rng(seed);
  for (auto& cand : cands) {
    const Ambient& amb = cand.complex.ambient();
    json e;
    e["name"] = cand.name;
    e["q"] = amb.q();
    e["n"] = amb.n();
    e["faces"] = cand.complex.size();
    e["facets"] = cand.complex.facets().size();
    e["pure"] = cand.complex.is_pure();
    t << cand.name << ": " << cand.complex.size() << " faces, " << cand.complex.facets().size() << " facets";
    if (cand.complex.empty() || !cand.complex.is_pure()) {
      t << ", not pure; skipped\n";
      entries.push_back(e);
      continue;
    }
    ShellingOrder order = order_kind == "sorted" ? shelling_via_order(cand.complex) : cand.order;
    json ord = json::array();
    for (const auto& f : order) ord.push_back(format_subspace(f));
    e["dim"] = cand.complex.dim();
    e["order"] = ord;
    json res = explore_order(cand, order, true);
    t << ", dim " << cand.complex.dim() << "\n  given order: ";
    if (!res["is_shelling"].get<bool>())
      t << "not a shelling\n";
    else if (!res["hypothesis"].get<bool>())
      t << "shelling; no ell with sphere links after it and acyclic prefix\n";
    else
      t << "shelling; hypothesis holds with ell=" << res["ell"].get<int>() << " (prefix " << res["prefix_contractible_by"].get<std::string>()
        << "), predicted betti_" << cand.complex.dim() - 1 << " = " << res["predicted_betti_top"]["betti"].dump() << ", computed "
        << res["computed_betti_top"]["betti"].dump() << "\n";
    e["given"] = res;

    if (random_orders > 0) {
      int shellings = 0, holds = 0, matches = 0;
      ShellingOrder shuffled = order;
      for (int trial = 0; trial < random_orders; ++trial) {
        // Fisher-Yates with a fixed reduction so results are portable.
        for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng() % i]);
        const json rr = explore_order(cand, shuffled, false);
        if (!rr["is_shelling"].get<bool>()) continue;
        ++shellings;
        if (!rr["hypothesis"].get<bool>()) continue;
        ++holds;
        matches += rr["prediction_matches"].get<bool>();
      }
      e["random"] = {{"orders", random_orders}, {"shellings", shellings}, {"hypothesis_holds", holds}, {"prediction_matches", matches}};
      t << "  " << random_orders << " random orders: " << shellings << " shellings, hypothesis holds for " << holds << ", prediction matches "
        << matches << "\n";
    }
    entries.push_back(e);
  }
  r["candidates"] = entries;
  return finish(r, t.str(), c, out, kOk);
}

int cmd_homology(const std::string& path, const Common& c, std::ostream& out) {
  const SubspaceList list = read_subspace_list(path);
  check_loaded(list.ambient, c);
  bool added = false;
  const QComplex complex = QComplex::closure(list.ambient, list.subspaces, &added);
  const Poset poset = inclusion_poset(complex.puncture());
  check_homology_limits(poset);
  const auto k = order_complex(poset);
  const auto h = reduced_homology(k);
  const bool euler = euler_check(k, h);

  json params = c.parameters();
  params["from_file"] = path;
  json r = header("homology", params);
  r["q"] = list.ambient.q();
  r["n"] = list.ambient.n();
  r["complex"] = "file";
  r["degrees"] = homology_json(h);
  r["euler_ok"] = euler;
  r["faces"] = complex.size();
  r["closure_added"] = added;
  r["simplex_counts"] = counts_json(k);

  std::ostringstream t;
  t << kVersion << "  homology " << path << "\n"
    << complex.size() << " faces" << (added ? " (after downward closure)" : "") << ", order complex simplex counts " << counts_text(k) << "\n"
    << homology_text(h) << "\n"
    << "euler characteristic: " << (euler ? "consistent" : "INCONSISTENT") << "\n";
  return finish(r, t.str(), c, out, euler ? kOk : kMismatch);
}

int cmd_emit(const std::vector<int>& uniform, const std::string& table, const std::string& independents, const std::string& bases_path,
             const Common& c, std::ostream& out) {
  const int k = uniform[0], n = uniform[1], q = uniform[2];
  if (k < 1 || k > n) throw UsageError("--uniform needs 1 <= k <= n");
  const Ambient amb = bounded_ambient(q, n, c);
  const RankOracle m = uniform_matroid(k, std::make_shared<const SubspaceIndex>(amb, c.cap()));
  auto open = [](const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    return f;
  };
  if (!table.empty()) {
    auto f = open(table);
    write_rank_table(f, m);
  }
  if (!independents.empty()) {
    auto f = open(independents);
    write_subspace_list(f, amb, independent_spaces(m).faces());
  }
  if (!bases_path.empty()) {
    auto f = open(bases_path);
    write_subspace_list(f, amb, bases(m).bases);
  }
  out << "wrote U_" << q << "(" << k << "," << n << ")\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact shelling and homology computations for q-complexes and q-matroids", "qshell"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;
  int n = 0, q = 0;
  std::vector<int> uniform, sphere, apex;
  std::string rank_table, independents, bases_path, from_file, order_kind = "file";
  std::vector<std::string> files;
  int random_orders = 0;
  std::uint64_t seed = 1;

  auto* sh = app.add_subcommand("sphere-homology", "Homology of the punctured q-sphere against the closed form");
  sh->add_option("--n", n, "Ambient dimension")->required();
  sh->add_option("--q", q, "Field order")->required();
  add_common(sh, common);

  auto* ms = app.add_subcommand("matroid-shell", "Shell the independence complex of a q-matroid");
  auto* ms_u = ms->add_option("--uniform", uniform, "k n q of a uniform q-matroid")->expected(3);
  auto* ms_t = ms->add_option("--rank-table", rank_table, "Rank table file");
  ms_u->excludes(ms_t);
  add_common(ms, common);

  auto* vf = app.add_subcommand("verify", "Check q-matroid axioms of a family or rank table");
  auto* vf_i = vf->add_option("--independents", independents, "Subspace list of independent spaces");
  auto* vf_b = vf->add_option("--bases", bases_path, "Subspace list of bases");
  auto* vf_t = vf->add_option("--rank-table", rank_table, "Rank table file");
  vf_i->excludes(vf_b, vf_t);
  vf_b->excludes(vf_t);
  add_common(vf, common);

  auto* ex = app.add_subcommand("explore-links", "Search facet orders for the sphere-link hypothesis");
  ex->add_option("--from-file", files, "Facet list files (repeatable)");
  ex->add_option("--sphere", sphere, "n q of a q-sphere")->expected(2);
  ex->add_option("--apex", apex, "Vector the sphere shelling lists first (default e_1)")->expected(1, 64);
  ex->add_option("--order", order_kind, "Facet order: as given, or tower-sorted")->check(CLI::IsMember({"file", "sorted"}));
  ex->add_option("--random-orders", random_orders, "Also test this many random facet orders")->check(CLI::NonNegativeNumber);
  ex->add_option("--seed", seed, "Seed for random orders");
  add_common(ex, common);

  auto* ho = app.add_subcommand("homology", "Homology of a q-complex read from a file");
  ho->add_option("--from-file", from_file, "Subspace list; closed downward on load")->required();
  add_common(ho, common);

  auto* em = app.add_subcommand("emit", "Write input files for a uniform q-matroid");
  em->add_option("--uniform", uniform, "k n q")->expected(3)->required();
  em->add_option("--rank-table", rank_table, "Rank table output path");
  em->add_option("--independents", independents, "Independent spaces output path");
  em->add_option("--bases", bases_path, "Bases output path");
  add_common(em, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sh) return cmd_sphere_homology(n, q, common, out);
    if (*ms) {
      if (uniform.empty() && rank_table.empty()) throw UsageError("matroid-shell needs --uniform or --rank-table");
      return cmd_matroid_shell(uniform, rank_table, common, out);
    }
    if (*vf) {
      if (independents.empty() && bases_path.empty() && rank_table.empty())
        throw UsageError("verify needs --independents, --bases or --rank-table");
      try {
        return cmd_verify(independents, bases_path, rank_table, common, out);
      } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseFailure;
      }
    }
    if (*ex) return cmd_explore_links(files, sphere, apex, order_kind, random_orders, seed, common, out);
    if (*ho) return cmd_homology(from_file, common, out);
    if (*em) return cmd_emit(uniform, rank_table, independents, bases_path, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceCapExceeded& e) {
    err << "resource cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const AxiomViolation& e) {
    err << "axiom violation: " << e.what() << "\n";
    return kAxiomViolation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace qshell::cli
