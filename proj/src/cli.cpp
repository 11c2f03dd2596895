#include "wallcross/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "wallcross/coha.hpp"
#include "wallcross/gln.hpp"
#include "wallcross/qtorus.hpp"
#include "wallcross/stability.hpp"

namespace wallcross {

namespace {

using nlohmann::json;

constexpr const char* kSchemaVersion = "1";

struct Options {
  std::string input;
  std::string output = "-";
  std::string format = "json";
  int max_height = 10;
  bool force = false;
  std::uint64_t seed = 0;
  std::string suite;
};

// ---- input parsing ---------------------------------------------------

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& location) {
  if (!j.is_object())
    fail(ErrorCode::InvalidInput, location + " must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key))
      fail(ErrorCode::InvalidInput,
           "unknown field \"" + key + "\" in " + location);
}

const json& require(const json& j, const std::string& key,
                    const std::string& location) {
  if (!j.contains(key))
    fail(ErrorCode::InvalidInput,
         "missing field \"" + key + "\" in " + location);
  return j.at(key);
}

Rat json_rat(const json& j, const std::string& location) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const Error& e) {
      fail(ErrorCode::InvalidInput, location + ": " + e.detail());
    }
  }
  fail(ErrorCode::InvalidInput,
       location + " must be an integer or a \"p/q\" string");
}

std::int64_t json_int(const json& j, const std::string& location) {
  if (!j.is_number_integer())
    fail(ErrorCode::InvalidInput, location + " must be an integer");
  return j.get<std::int64_t>();
}

GaussianRat json_gaussian(const json& j, const std::string& location) {
  check_keys(j, {"re", "im"}, location);
  return GaussianRat(json_rat(require(j, "re", location), location + ".re"),
                     json_rat(require(j, "im", location), location + ".im"));
}

LatticeVector json_vector(const json& j, int rank,
                          const std::string& location) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    fail(ErrorCode::InvalidInput,
         location + " must be an integer array of length " +
             std::to_string(rank));
  std::vector<std::int64_t> coords;
  coords.reserve(rank);
  for (const auto& c : j) coords.push_back(json_int(c, location));
  return LatticeVector(std::move(coords));
}

// Either "k": rank-2 shorthand with gram [[0,k],[-k,0]], or a full
// "lattice" object.
ChargeLattice parse_lattice(const json& doc) {
  bool has_k = doc.contains("k");
  bool has_lattice = doc.contains("lattice");
  if (has_k == has_lattice)
    fail(ErrorCode::InvalidInput,
         "problem must carry exactly one of \"k\" or \"lattice\"");
  if (has_k) {
    std::int64_t k = json_int(doc.at("k"), "k");
    return make_lattice(2, {{0, k}, {-k, 0}});
  }
  const json& L = doc.at("lattice");
  check_keys(L, {"rank", "gram"}, "lattice");
  int rank = static_cast<int>(json_int(require(L, "rank", "lattice"), "rank"));
  const json& gram = require(L, "gram", "lattice");
  if (!gram.is_array() || static_cast<int>(gram.size()) != rank)
    fail(ErrorCode::InvalidInput, "lattice.gram must be a rank x rank array");
  std::vector<std::vector<std::int64_t>> g;
  for (const auto& row : gram) {
    if (!row.is_array() || static_cast<int>(row.size()) != rank)
      fail(ErrorCode::InvalidInput, "lattice.gram must be a rank x rank array");
    std::vector<std::int64_t> r;
    for (const auto& c : row) r.push_back(json_int(c, "lattice.gram"));
    g.push_back(std::move(r));
  }
  return make_lattice(rank, std::move(g));
}

TruncationCone parse_cone(const json& doc, int rank, int max_height) {
  if (!doc.contains("cone")) {
    if (rank != 2)
      fail(ErrorCode::InvalidInput,
           "an explicit \"cone\" is required for rank != 2");
    return first_quadrant_cone(max_height);
  }
  const json& C = doc.at("cone");
  check_keys(C, {"generators", "height"}, "cone");
  const json& gens = require(C, "generators", "cone");
  if (!gens.is_array() || gens.empty())
    fail(ErrorCode::InvalidInput, "cone.generators must be a nonempty array");
  std::vector<LatticeVector> generators;
  for (const auto& g : gens)
    generators.push_back(json_vector(g, rank, "cone.generators[]"));
  const json& h = require(C, "height", "cone");
  if (!h.is_array() || static_cast<int>(h.size()) != rank)
    fail(ErrorCode::InvalidInput, "cone.height must have one entry per rank");
  std::vector<std::int64_t> height;
  for (const auto& c : h) height.push_back(json_int(c, "cone.height"));
  return TruncationCone(std::move(generators), std::move(height), max_height);
}

CentralCharge parse_charge(const json& doc, int rank, const std::string& key) {
  if (!doc.contains(key)) {
    if (key == "charge" && rank == 2)
      return CentralCharge({GaussianRat(Rat(1), Rat(0)),
                            GaussianRat(Rat(0), Rat(1))});
    fail(ErrorCode::InvalidInput, "missing field \"" + key + "\"");
  }
  const json& Z = doc.at(key);
  if (!Z.is_array() || static_cast<int>(Z.size()) != rank)
    fail(ErrorCode::InvalidInput,
         "\"" + key + "\" must list one Gaussian value per basis vector");
  std::vector<GaussianRat> values;
  for (const auto& v : Z) values.push_back(json_gaussian(v, key + "[]"));
  return CentralCharge(std::move(values));
}

OmegaTable parse_omega(const json& doc, int rank, const std::string& key) {
  const json& arr = require(doc, key, "problem");
  if (!arr.is_array())
    fail(ErrorCode::InvalidInput, "\"" + key + "\" must be an array");
  OmegaTable table;
  for (const auto& entry : arr) {
    check_keys(entry, {"gamma", "omega"}, key + "[]");
    LatticeVector gamma =
        json_vector(require(entry, "gamma", key), rank, key + "[].gamma");
    Rat value = json_rat(require(entry, "omega", key), key + "[].omega");
    if (table.count(gamma))
      fail(ErrorCode::InvalidInput,
           "duplicate gamma " + vec_to_string(gamma) + " in \"" + key + "\"");
    table[gamma] = value;
  }
  return table;
}

json load_problem(const Options& opt, const std::string& expected_kind,
                  const std::set<std::string>& allowed) {
  if (opt.input.empty())
    fail(ErrorCode::InvalidInput, "this subcommand requires --input");
  std::ifstream in(opt.input);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open input file " + opt.input);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("JSON parse error: ") + e.what());
  }
  std::set<std::string> all = allowed;
  all.insert("schema_version");
  all.insert("kind");
  check_keys(doc, all, "problem");
  std::string version =
      require(doc, "schema_version", "problem").get<std::string>();
  if (version != kSchemaVersion)
    fail(ErrorCode::InvalidInput,
         "unsupported schema_version \"" + version + "\"");
  std::string kind = require(doc, "kind", "problem").get<std::string>();
  if (kind != expected_kind)
    fail(ErrorCode::InvalidInput, "problem kind \"" + kind +
                                      "\" does not match subcommand \"" +
                                      expected_kind + "\"");
  return doc;
}

// ---- output ----------------------------------------------------------

json gaussian_json(const GaussianRat& z) {
  return json{{"re", rat_to_string(z.re)}, {"im", rat_to_string(z.im)}};
}

json vector_json(const LatticeVector& v) {
  json a = json::array();
  for (auto c : v.coords) a.push_back(c);
  return a;
}

json poly_json(const Poly& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i)
    a.push_back(rat_to_string(p.coefficient(i)));
  return a;
}

// Omega tables sorted by height then lexicographic gamma.
json omega_json(const OmegaTable& table, const TruncationCone& cone) {
  std::vector<std::pair<std::int64_t, LatticeVector>> order;
  for (const auto& [gamma, value] : table)
    if (value != 0) order.emplace_back(cone.height(gamma), gamma);
  std::sort(order.begin(), order.end());
  json out = json::array();
  for (const auto& [h, gamma] : order)
    out.push_back(json{{"gamma", vector_json(gamma)},
                       {"omega", rat_to_string(table.at(gamma))}});
  return out;
}

void write_document(const Options& opt, const std::string& text,
                    std::ostream& out) {
  if (opt.output == "-" || opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.output);
  if (!f)
    fail(ErrorCode::InvalidInput, "cannot open output file " + opt.output);
  f << text;
}

std::string csv_escape(const std::string& s) { return s; }

std::string omega_csv(const json& omega_entries) {
  std::ostringstream os;
  bool wrote_header = false;
  for (const auto& entry : omega_entries) {
    if (!wrote_header) {
      for (std::size_t i = 0; i < entry.at("gamma").size(); ++i)
        os << "gamma_" << i << ",";
      os << "omega\n";
      wrote_header = true;
    }
    for (const auto& c : entry.at("gamma"))
      os << c.get<std::int64_t>() << ",";
    os << csv_escape(entry.at("omega").get<std::string>()) << "\n";
  }
  if (!wrote_header) os << "omega\n";
  return os.str();
}

// ---- shared construction ----------------------------------------------

std::vector<RayFactor> rays_from_omega(const OmegaTable& omega,
                                       const CentralCharge& Z) {
  std::map<LatticeVector, RayFactor> rays;
  for (const auto& [gamma, value] : omega) {
    if (value == 0) continue;
    if (gamma.is_zero())
      fail(ErrorCode::InvalidInput, "omega table contains gamma = 0");
    LatticeVector g0 = gamma.primitive_part();
    auto [it, inserted] = rays.try_emplace(g0, RayFactor{g0, {}});
    it->second.omega[gamma.content()] = value;
  }
  std::vector<RayFactor> factors;
  factors.reserve(rays.size());
  for (auto& [g0, rf] : rays) factors.push_back(std::move(rf));
  std::sort(factors.begin(), factors.end(),
            [&](const RayFactor& a, const RayFactor& b) {
              GaussianRat za = Z(a.gamma0), zb = Z(b.gamma0);
              if (same_ray(za, zb))
                fail(ErrorCode::DegenerateCharge,
                     "distinct rays share a central-charge direction");
              return clockwise_before(za, zb);
            });
  return factors;
}

// ---- subcommands -------------------------------------------------------

int cmd_factorize(const Options& opt, std::ostream& out) {
  json doc = load_problem(opt, "factorize",
                          {"k", "lattice", "cone", "charge", "factors"});
  ChargeLattice lattice = parse_lattice(doc);
  TruncationCone cone = parse_cone(doc, lattice.rank(), opt.max_height);
  CentralCharge Z = parse_charge(doc, lattice.rank(), "charge");

  const json& factors = require(doc, "factors", "problem");
  if (!factors.is_array() || factors.empty())
    fail(ErrorCode::InvalidInput, "\"factors\" must be a nonempty array");
  std::vector<GroupElement> elements;
  for (const auto& f : factors) {
    if (f.contains("a") || f.contains("b")) {
      check_keys(f, {"a", "b", "power"}, "factors[]");
      if (!doc.contains("k"))
        fail(ErrorCode::InvalidInput,
             "T-factor entries need the rank-2 \"k\" lattice form");
      std::int64_t a = json_int(require(f, "a", "factors[]"), "factors[].a");
      std::int64_t b = json_int(require(f, "b", "factors[]"), "factors[].b");
      std::int64_t power =
          f.contains("power") ? json_int(f.at("power"), "factors[].power") : 1;
      GroupElement T =
          t_factor(a, b, json_int(doc.at("k"), "k"), lattice, cone);
      elements.push_back(group_pow(T, power));
    } else {
      check_keys(f, {"gamma0", "omega"}, "factors[]");
      LatticeVector g0 = json_vector(require(f, "gamma0", "factors[]"),
                                     lattice.rank(), "factors[].gamma0");
      const json& om = require(f, "omega", "factors[]");
      RayFactor rf{g0, {}};
      for (const auto& [n_str, value] : om.items()) {
        std::int64_t n = 0;
        try {
          n = std::stoll(n_str);
        } catch (...) {
          fail(ErrorCode::InvalidInput,
               "omega keys must be positive integers, got \"" + n_str + "\"");
        }
        if (n <= 0)
          fail(ErrorCode::InvalidInput, "omega keys must be positive integers");
        rf.omega[n] = json_rat(value, "factors[].omega");
      }
      elements.push_back(ray_exp(rf, lattice, cone));
    }
  }
  GroupElement F = compose(elements);
  OrderedFactorization fact = factorize(F, Z, cone);
  json result{{"kind", "factorize"},
              {"max_height", opt.max_height},
              {"omega", omega_json(fact.omega_table(), cone)}};
  if (opt.format == "csv")
    write_document(opt, omega_csv(result.at("omega")), out);
  else
    write_document(opt, result.dump(2) + "\n", out);
  return 0;
}

int cmd_wcf(const Options& opt, std::ostream& out) {
  json doc = load_problem(
      opt, "wcf", {"k", "lattice", "cone", "charge", "omega", "new_charge"});
  ChargeLattice lattice = parse_lattice(doc);
  TruncationCone cone = parse_cone(doc, lattice.rank(), opt.max_height);
  CentralCharge Z = parse_charge(doc, lattice.rank(), "charge");
  CentralCharge Z_new =
      doc.contains("new_charge") ? parse_charge(doc, lattice.rank(), "new_charge")
                                 : Z;
  OmegaTable omega = parse_omega(doc, lattice.rank(), "omega");
  OrderedFactorization fact(lattice, cone, Z, rays_from_omega(omega, Z));
  OrderedFactorization moved = refactorize(fact, Z_new);
  json result{{"kind", "wcf"},
              {"max_height", opt.max_height},
              {"omega", omega_json(moved.omega_table(), cone)}};
  if (opt.format == "csv")
    write_document(opt, omega_csv(result.at("omega")), out);
  else
    write_document(opt, result.dump(2) + "\n", out);
  return 0;
}

struct SuiteOutcome {
  std::int64_t mismatches = 0;
  json first_mismatch;
};

void record_mismatch(SuiteOutcome& s, json info) {
  if (s.mismatches == 0) s.first_mismatch = std::move(info);
  ++s.mismatches;
}

void compare_lie(SuiteOutcome& s, const LieSeries& lhs, const LieSeries& rhs) {
  std::set<LatticeVector> keys;
  for (const auto& [v, c] : lhs.terms()) keys.insert(v);
  for (const auto& [v, c] : rhs.terms()) keys.insert(v);
  for (const auto& v : keys) {
    Rat a = lhs.coefficient(v), b = rhs.coefficient(v);
    if (a != b)
      record_mismatch(s, json{{"gamma", vector_json(v)},
                              {"lhs", rat_to_string(a)},
                              {"rhs", rat_to_string(b)}});
  }
}

SuiteOutcome suite_pentagon_k1(int D) {
  auto L = make_lattice(2, {{0, 1}, {-1, 0}});
  auto cone = first_quadrant_cone(D);
  GroupElement T10 = t_factor(1, 0, 1, L, cone);
  GroupElement T01 = t_factor(0, 1, 1, L, cone);
  GroupElement T11 = t_factor(1, 1, 1, L, cone);
  SuiteOutcome s;
  compare_lie(s, compose(T10, T01).log(), compose({T01, T11, T10}).log());
  return s;
}

SuiteOutcome suite_sw_k2(int D) {
  auto L = make_lattice(2, {{0, 2}, {-2, 0}});
  auto cone = first_quadrant_cone(D);
  CentralCharge Z({GaussianRat(Rat(1), Rat(0)), GaussianRat(Rat(0), Rat(1))});
  GroupElement F =
      compose(t_factor(1, 0, 2, L, cone), t_factor(0, 1, 2, L, cone));
  OmegaTable got = factorize(F, Z, cone).omega_table();
  OmegaTable expected;
  for (std::int64_t n = 0;; ++n) {
    LatticeVector a{n, n + 1}, b{n + 1, n};
    if (cone.height(a) > D) break;
    expected[a] = 1;
    expected[b] = 1;
  }
  if (cone.height(LatticeVector{1, 1}) <= D) expected[LatticeVector{1, 1}] = -2;
  SuiteOutcome s;
  std::set<LatticeVector> keys;
  for (const auto& [v, c] : got) keys.insert(v);
  for (const auto& [v, c] : expected) keys.insert(v);
  for (const auto& v : keys) {
    Rat g = got.count(v) ? got.at(v) : Rat(0);
    Rat e = expected.count(v) ? expected.at(v) : Rat(0);
    if (g != e)
      record_mismatch(s, json{{"gamma", vector_json(v)},
                              {"lhs", rat_to_string(g)},
                              {"rhs", rat_to_string(e)}});
  }
  return s;
}

json qrational_json(const QRational& r) {
  return json{{"num", poly_json(r.num())}, {"den", poly_json(r.den())}};
}

SuiteOutcome suite_qpentagon(int D) {
  auto L = make_lattice(2, {{0, 1}, {-1, 0}});
  auto cone = first_quadrant_cone(D);
  QTorusSeries E10 = quantum_dilog(LatticeVector{1, 0}, L, cone);
  QTorusSeries E01 = quantum_dilog(LatticeVector{0, 1}, L, cone);
  QTorusSeries E11 = quantum_dilog(LatticeVector{1, 1}, L, cone);
  QTorusSeries lhs = E10 * E01;
  QTorusSeries rhs = E01 * E11 * E10;
  SuiteOutcome s;
  std::set<LatticeVector> keys;
  for (const auto& [v, c] : lhs.terms()) keys.insert(v);
  for (const auto& [v, c] : rhs.terms()) keys.insert(v);
  for (const auto& v : keys) {
    QRational a = lhs.coefficient(v), b = rhs.coefficient(v);
    if (a != b)
      record_mismatch(s, json{{"gamma", vector_json(v)},
                              {"lhs", qrational_json(a)},
                              {"rhs", qrational_json(b)}});
  }
  return s;
}

SuiteOutcome suite_qc_limit(int D) {
  auto L = make_lattice(2, {{0, 1}, {-1, 0}});
  auto cone = first_quadrant_cone(D);
  SuiteOutcome s;
  std::vector<LatticeVector> gammas = {LatticeVector{1, 0}, LatticeVector{0, 1},
                                       LatticeVector{1, 1}};
  for (const auto& gamma : gammas) {
    QTorusSeries E = quantum_dilog(gamma, L, cone);
    // The dilog itself must not survive the limit.
    bool raised = false;
    try {
      qc_limit(E);
    } catch (const Error& e) {
      raised = e.code() == ErrorCode::PoleAtMinusOne;
    }
    if (!raised)
      record_mismatch(s, json{{"gamma", vector_json(gamma)},
                              {"lhs", "no PoleAtMinusOne"},
                              {"rhs", "PoleAtMinusOne"}});
    GroupElement T = t_factor(gamma.coords[0], gamma.coords[1], 1, L, cone);
    for (int i = 0; i < 2; ++i) {
      LatticeVector mu = L.basis_vector(i);
      QTorusSeries ehat_mu = q_generator(L, cone, mu);
      QTorusSeries conj =
          conjugate(q_pow(E, kConjugationOrientation), ehat_mu);
      ConeSeries classical = qc_limit(conj);
      ConeSeries direct = T.apply(ConeSeries::term(L, cone, mu, Rat(1)));
      compare_lie(s, classical, direct);
    }
  }
  return s;
}

int cmd_identity(const Options& opt, std::ostream& out) {
  SuiteOutcome s;
  if (opt.suite == "pentagon-k1")
    s = suite_pentagon_k1(opt.max_height);
  else if (opt.suite == "sw-k2")
    s = suite_sw_k2(opt.max_height);
  else if (opt.suite == "qpentagon")
    s = suite_qpentagon(opt.max_height);
  else if (opt.suite == "qc-limit")
    s = suite_qc_limit(opt.max_height);
  else
    fail(ErrorCode::InvalidInput,
         "unknown suite \"" + opt.suite +
             "\" (expected pentagon-k1, sw-k2, qpentagon, or qc-limit)");
  json result{{"kind", "identity"},
              {"suite", opt.suite},
              {"max_height", opt.max_height},
              {"mismatched_coefficients", s.mismatches},
              {"pass", s.mismatches == 0}};
  if (s.mismatches > 0) result["first_mismatch"] = s.first_mismatch;
  write_document(opt, result.dump(2) + "\n", out);
  return s.mismatches == 0 ? 0 : 1;
}

int cmd_qdilog(const Options& opt, std::ostream& out) {
  json doc = load_problem(opt, "qdilog", {"k", "lattice", "cone", "gamma"});
  ChargeLattice lattice = parse_lattice(doc);
  TruncationCone cone = parse_cone(doc, lattice.rank(), opt.max_height);
  LatticeVector gamma =
      json_vector(require(doc, "gamma", "problem"), lattice.rank(), "gamma");
  QTorusSeries E = quantum_dilog(gamma, lattice, cone);
  json terms = json::array();
  for (const auto& [v, c] : E.terms())
    terms.push_back(json{{"gamma", vector_json(v)},
                         {"num", poly_json(c.num())},
                         {"den", poly_json(c.den())}});
  json result{{"kind", "qdilog"},
              {"gamma", vector_json(gamma)},
              {"max_height", opt.max_height},
              {"terms", terms}};
  write_document(opt, result.dump(2) + "\n", out);
  return 0;
}

int cmd_coha_hilbert(const Options& opt, std::ostream& out) {
  json doc =
      load_problem(opt, "coha-hilbert", {"d", "n_max", "m_min", "m_max"});
  int d = static_cast<int>(json_int(require(doc, "d", "problem"), "d"));
  int n_max =
      static_cast<int>(json_int(require(doc, "n_max", "problem"), "n_max"));
  std::int64_t m_min = json_int(require(doc, "m_min", "problem"), "m_min");
  std::int64_t m_max = json_int(require(doc, "m_max", "problem"), "m_max");
  if (d < 0) fail(ErrorCode::InvalidInput, "d must be >= 0");
  if (n_max < 0 || n_max > 6)
    fail(ErrorCode::InvalidInput, "n_max must be between 0 and 6");
  if (m_min > m_max) fail(ErrorCode::InvalidInput, "empty m window");
  HilbertTable table = coha_hilbert(d, n_max, m_min, m_max);
  json entries = json::array();
  for (const auto& e : table.entries)
    entries.push_back(json{{"n", e.n},
                           {"m", e.m},
                           {"dim", e.dim_partitions},
                           {"dim_series", e.dim_series}});
  json result{{"kind", "coha-hilbert"},
              {"d", d},
              {"entries", entries},
              {"match", table.match}};
  if (opt.format == "csv") {
    std::ostringstream os;
    os << "n,m,dim,dim_series\n";
    for (const auto& e : table.entries)
      os << e.n << "," << e.m << "," << e.dim_partitions << ","
         << e.dim_series << "\n";
    write_document(opt, os.str(), out);
  } else {
    write_document(opt, result.dump(2) + "\n", out);
  }
  return table.match ? 0 : 1;
}

int cmd_gln_walk(const Options& opt, std::ostream& out) {
  json doc = load_problem(opt, "gln-walk", {"n", "a", "waypoints"});
  int n = static_cast<int>(json_int(require(doc, "n", "problem"), "n"));
  if (n < 2 || n > 16) fail(ErrorCode::InvalidInput, "n must be in [2, 16]");
  const json& aj = require(doc, "a", "problem");
  if (!aj.is_array() || static_cast<int>(aj.size()) != n)
    fail(ErrorCode::InvalidInput, "\"a\" must be an n x n matrix");
  std::vector<std::vector<Rat>> a;
  for (const auto& row : aj) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail(ErrorCode::InvalidInput, "\"a\" must be an n x n matrix");
    std::vector<Rat> r;
    for (const auto& c : row) r.push_back(json_rat(c, "a[][]"));
    a.push_back(std::move(r));
  }
  const json& wj = require(doc, "waypoints", "problem");
  if (!wj.is_array() || wj.size() < 2)
    fail(ErrorCode::InvalidInput, "\"waypoints\" needs at least two entries");
  std::vector<std::vector<GaussianRat>> waypoints;
  for (const auto& w : wj) {
    if (!w.is_array() || static_cast<int>(w.size()) != n)
      fail(ErrorCode::InvalidInput,
           "each waypoint must list n marked points");
    std::vector<GaussianRat> z;
    for (const auto& p : w) z.push_back(json_gaussian(p, "waypoints[][]"));
    waypoints.push_back(std::move(z));
  }
  GlnPath path{make_gln_config(n, waypoints.front(), a), std::move(waypoints)};
  GlnTransportResult res = gln_transport_detailed(path);
  bool closed = path.waypoints.back() == path.waypoints.front();
  bool trivial = closed && res.config.a == path.initial.a;
  json crossings = json::array();
  for (const auto& c : res.crossings)
    crossings.push_back(json{{"segment", c.segment},
                             {"i", c.i},
                             {"j", c.j},
                             {"k", c.k},
                             {"direction", c.direction}});
  json matrix = json::array();
  for (const auto& row : res.config.a) {
    json r = json::array();
    for (const auto& c : row) r.push_back(rat_to_string(c));
    matrix.push_back(std::move(r));
  }
  json result{{"kind", "gln-walk"},
              {"closed", closed},
              {"crossings", crossings},
              {"final_matrix", matrix}};
  if (closed) result["monodromy_trivial"] = trivial;
  write_document(opt, result.dump(2) + "\n", out);
  return (closed && !trivial) ? 1 : 0;
}

int cmd_support_check(const Options& opt, std::ostream& out) {
  json doc = load_problem(
      opt, "support-check", {"k", "lattice", "charge", "omega", "C", "qform"});
  ChargeLattice lattice = parse_lattice(doc);
  CentralCharge Z = parse_charge(doc, lattice.rank(), "charge");
  OmegaTable omega = parse_omega(doc, lattice.rank(), "omega");
  std::optional<std::vector<std::vector<Rat>>> qform;
  if (doc.contains("qform")) {
    const json& qj = doc.at("qform");
    int n = lattice.rank();
    if (!qj.is_array() || static_cast<int>(qj.size()) != n)
      fail(ErrorCode::InvalidInput, "\"qform\" must be an n x n matrix");
    std::vector<std::vector<Rat>> Q;
    for (const auto& row : qj) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        fail(ErrorCode::InvalidInput, "\"qform\" must be an n x n matrix");
      std::vector<Rat> r;
      for (const auto& c : row) r.push_back(json_rat(c, "qform[][]"));
      Q.push_back(std::move(r));
    }
    qform = std::move(Q);
  }
  Rat C = json_rat(require(doc, "C", "problem"), "C");
  StabilityData sd = make_stability_data(lattice, Z, omega, qform);
  SupportReport report = support_check(sd, C);
  json verdicts = json::array();
  for (const auto& v : report.verdicts)
    verdicts.push_back(json{{"gamma", vector_json(v.gamma)},
                            {"norm2", rat_to_string(v.norm2)},
                            {"bound2", rat_to_string(v.bound2)},
                            {"pass", v.pass}});
  json result{{"kind", "support-check"},
              {"C", rat_to_string(C)},
              {"pass", report.pass},
              {"verdicts", verdicts}};
  if (sd.qform) {
    QFormReport qr = qform_check(sd);
    result["qform"] = json{{"negative_on_kernel", qr.negative_on_kernel},
                           {"nonnegative_on_support", qr.nonnegative_on_support},
                           {"pass", qr.pass}};
  }
  if (opt.format == "csv") {
    std::ostringstream os;
    bool wrote_header = false;
    for (const auto& v : report.verdicts) {
      if (!wrote_header) {
        for (std::size_t i = 0; i < v.gamma.coords.size(); ++i)
          os << "gamma_" << i << ",";
        os << "norm2,bound2,pass\n";
        wrote_header = true;
      }
      for (auto c : v.gamma.coords) os << c << ",";
      os << rat_to_string(v.norm2) << "," << rat_to_string(v.bound2) << ","
         << (v.pass ? "true" : "false") << "\n";
    }
    if (!wrote_header) os << "pass\n";
    write_document(opt, os.str(), out);
  } else {
    write_document(opt, result.dump(2) + "\n", out);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact wall-crossing factorizations and BPS invariants"};
  app.require_subcommand(1);

  Options opt;
  std::string subcommand;
  auto add_common = [&](CLI::App* sub, bool with_input, bool with_format) {
    sub->add_option("--max-height", opt.max_height,
                    "series truncation height D")
        ->default_val(10);
    sub->add_flag("--force", opt.force, "allow D > 64");
    sub->add_option("--output", opt.output, "output file or - for stdout")
        ->default_val("-");
    sub->add_option("--seed", opt.seed, "seed for randomized suites");
    if (with_input) sub->add_option("--input", opt.input, "problem JSON file");
    if (with_format)
      sub->add_option("--format", opt.format, "json or csv")
          ->default_val("json")
          ->check(CLI::IsMember({"json", "csv"}));
    sub->callback([&, sub] { subcommand = sub->get_name(); });
  };

  add_common(app.add_subcommand("factorize",
                                "clockwise factorization of a group element"),
             true, true);
  add_common(app.add_subcommand(
                 "wcf", "wall-crossing: move an omega table to a new charge"),
             true, true);
  CLI::App* identity =
      app.add_subcommand("identity", "named exact identity suites");
  identity->add_option("--suite", opt.suite,
                       "pentagon-k1, sw-k2, qpentagon, or qc-limit")
      ->required();
  add_common(identity, false, false);
  add_common(app.add_subcommand("qdilog", "quantum dilogarithm series"), true,
             false);
  add_common(app.add_subcommand("coha-hilbert",
                                "bigraded dimensions of the d-loop CoHA"),
             true, true);
  add_common(app.add_subcommand("gln-walk",
                                "transport a gl(n) matrix along a path"),
             true, false);
  add_common(app.add_subcommand("support-check",
                                "exact Support Property verdicts"),
             true, true);

  std::vector<const char*> argv;
  argv.push_back("wallcross");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()),
              const_cast<char**>(argv.data()));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (opt.max_height < 1)
      fail(ErrorCode::InvalidInput, "--max-height must be at least 1");
    if (opt.max_height > 64 && !opt.force)
      fail(ErrorCode::InvalidInput,
           "--max-height above 64 requires --force");
    if (subcommand == "factorize") return cmd_factorize(opt, out);
    if (subcommand == "wcf") return cmd_wcf(opt, out);
    if (subcommand == "identity") return cmd_identity(opt, out);
    if (subcommand == "qdilog") return cmd_qdilog(opt, out);
    if (subcommand == "coha-hilbert") return cmd_coha_hilbert(opt, out);
    if (subcommand == "gln-walk") return cmd_gln_walk(opt, out);
    if (subcommand == "support-check") return cmd_support_check(opt, out);
    err << "no subcommand selected\n";
    return 2;
  } catch (const Error& e) {
    json doc{{"error", error_code_name(e.code())},
             {"detail", e.detail()},
             {"location", subcommand}};
    out << doc.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    json doc{{"error", "InternalError"},
             {"detail", e.what()},
             {"location", subcommand}};
    out << doc.dump(2) << "\n";
    return 2;
  }
}

}  // namespace wallcross
