#include "cli.hpp"

#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "augtopo/calculus.hpp"
#include "augtopo/complex_io.hpp"
#include "augtopo/corpus.hpp"
#include "augtopo/homology.hpp"
#include "augtopo/kunneth.hpp"
#include "augtopo/manifold.hpp"
#include "augtopo/random_complex.hpp"
#include "augtopo/stanley_reisner.hpp"

namespace augtopo::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string ring = "Z";
  std::string out = "json";
  std::vector<std::string> inputs;
  std::string simplex;
  std::string universe;
  std::string sub;
  int truncate = 10;
  int k = 2;
  int random = 0;
  std::optional<std::uint64_t> seed;
  bool cohomology = false;
  bool no_tor = false;
};

Complex load(const std::string& input) {
  if (input.rfind("corpus:", 0) == 0) return corpus(input.substr(7));
  return read_complex_file(input);
}

Simplex parse_ids(const std::string& text) {
  std::vector<int> ids;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const auto b = tok.find_first_not_of(" {}[]");
    const auto e = tok.find_last_not_of(" {}[]");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw TopologyError("bad vertex id '" + tok + "'");
    ids.push_back(v);
  }
  return Simplex(ids);
}

json simplex_json(Simplex s) { return s.vertices(); }

json dim_json(const Complex& c) {
  if (c.is_void()) return "-inf";
  return c.dim().value();
}

std::string tristate_text(Tristate t) { return to_string(t); }

json report_json(const ManifoldReport& r) {
  json comps = json::array();
  for (const Complex& c : r.components) comps.push_back(to_json(c));
  json orient = r.orientable == Tristate::Undefined ? json(nullptr) : json(r.orientable == Tristate::True);
  return {{"ring", r.ring.name()},
          {"is_pseudomanifold", r.is_pseudo},
          {"is_quasi_manifold", r.is_quasi},
          {"is_homology_manifold", r.is_homology_manifold},
          {"is_homology_sphere", r.is_homology_sphere},
          {"boundary", to_json(r.boundary)},
          {"boundary_raw_was_closed", r.boundary_raw_was_closed},
          {"orientable", orient},
          {"boundary_components", comps}};
}

std::string bigints(const std::vector<BigInt>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i].str();
  return out;
}

json bigint_array(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const BigInt& x : v) {
    if (boost::multiprecision::abs(x) < BigInt(std::numeric_limits<std::int64_t>::max()))
      out.push_back(static_cast<std::int64_t>(x));
    else
      out.push_back(x.str());
  }
  return out;
}

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out) : text_(o.out == "text"), out_(out) {}
  bool text() const { return text_; }
  void emit(json body) {
    json j{{"schema", 1}};
    for (auto& [k, v] : body.items()) j[k] = v;
    out_ << j.dump(2) << '\n';
  }
  std::ostream& stream() { return out_; }

 private:
  bool text_;
  std::ostream& out_;
};

void require_inputs(const Options& o, std::size_t n) {
  if (o.inputs.size() != n)
    throw TopologyError("expected " + std::to_string(n) + " input(s), got " + std::to_string(o.inputs.size()));
}

// Commands -----------------------------------------------------------------

int cmd_info(const Options& o, Emitter& e) {
  require_inputs(o, 1);
  const Complex c = load(o.inputs[0]);
  json f = json::array();
  for (auto x : f_vector(c)) f.push_back(x);
  json body{{"command", "info"},
            {"complex", to_json(c)},
            {"dim", dim_json(c)},
            {"f_vector", f},
            {"num_vertices", c.num_vertices()},
            {"num_facets", c.facets().size()}};
  if (!c.is_void()) {
    body["pure"] = is_pure(c);
    body["strongly_connected"] = is_strongly_connected(c);
    body["cone_points"] = simplex_json(cone_points(c));
  }
  if (e.text()) {
    e.stream() << "dim " << to_string(c.dim()) << "\nvertices " << c.num_vertices() << "\nf-vector";
    for (auto x : f_vector(c)) e.stream() << ' ' << x;
    e.stream() << '\n' << to_text(c);
    return kOk;
  }
  e.emit(std::move(body));
  return kOk;
}

int cmd_homology(const Options& o, Emitter& e) {
  require_inputs(o, 1);
  const CoefficientRing ring = CoefficientRing::parse(o.ring);
  const Complex c = load(o.inputs[0]);
  const Complex sub = o.sub.empty() ? Complex::void_complex() : load(o.sub);
  GradedModule h = homology_pair(c, sub, ring);
  if (o.cohomology) h = cohomology_from_homology(homology_pair(c, sub, CoefficientRing::integers()), ring);
  if (e.text()) {
    e.stream() << to_string(h) << '\n';
    return kOk;
  }
  e.emit({{"command", o.cohomology ? "cohomology" : "homology"}, {"ring", ring.name()}, {"modules", to_json(h)}});
  return kOk;
}

int cmd_boundary(const Options& o, Emitter& e) {
  require_inputs(o, 1);
  const CoefficientRing ring = CoefficientRing::parse(o.ring);
  const BoundaryResult bd = boundary_detailed(load(o.inputs[0]), ring);
  if (e.text()) {
    e.stream() << to_text(bd.complex);
    if (!bd.raw_was_closed) e.stream() << "# raw boundary set was not closed downward\n";
    return kOk;
  }
  e.emit({{"command", "boundary"},
          {"ring", ring.name()},
          {"boundary", to_json(bd.complex)},
          {"raw_was_closed", bd.raw_was_closed}});
  return kOk;
}

int cmd_classify(const Options& o, Emitter& e) {
  require_inputs(o, 1);
  const CoefficientRing ring = CoefficientRing::parse(o.ring);
  const ManifoldReport r = classify(load(o.inputs[0]), ring);
  if (e.text()) {
    e.stream() << "pseudomanifold " << r.is_pseudo << "\nquasi-manifold " << r.is_quasi << "\nhomology manifold "
               << r.is_homology_manifold << "\nhomology sphere " << r.is_homology_sphere << "\norientable "
               << tristate_text(r.orientable) << "\nboundary components " << r.components.size() << '\n';
    return kOk;
  }
  json body = report_json(r);
  body["command"] = "classify";
  e.emit(std::move(body));
  return kOk;
}

int cmd_ring(const Options& o, Emitter& e) {
  require_inputs(o, 1);
  const CoefficientRing ring = CoefficientRing::parse(o.ring);
  const Complex c = load(o.inputs[0]);
  std::optional<Simplex> universe;
  if (!o.universe.empty()) universe = parse_ids(o.universe);
  const MonomialIdeal ideal = stanley_reisner_ideal(c, universe);
  const HilbertData h = hilbert_function(c, o.truncate);
  json gens = json::array();
  for (Simplex g : ideal.generators) gens.push_back(simplex_json(g));
  json body{{"command", "ring"},
            {"ring", ring.name()},
            {"generators", gens},
            {"hilbert", bigint_array(h.coefficients)},
            {"h_numerator", bigint_array(h.numerator)},
            {"denominator_power", h.denominator_power},
            {"krull_dimension", h.krull_dimension ? json(*h.krull_dimension) : json(nullptr)}};
  if (!c.is_void()) {
    body["cohen_macaulay"] = is_cohen_macaulay(c, ring);
    body["buchsbaum"] = is_buchsbaum(c, ring);
    body["gorenstein"] = is_gorenstein(c, ring);
    if (o.k - 1 < c.num_vertices() || o.k == 1) {
      body["k"] = o.k;
      body["k_cohen_macaulay"] = is_k_cohen_macaulay(c, o.k, ring);
    }
  }
  if (e.text()) {
    e.stream() << "generators";
    for (Simplex g : ideal.generators) e.stream() << ' ' << to_string(g);
    e.stream() << "\nhilbert " << bigints(h.coefficients) << '\n';
    for (const char* key : {"cohen_macaulay", "buchsbaum", "gorenstein", "k_cohen_macaulay"})
      if (body.contains(key)) e.stream() << key << ' ' << body[key].get<bool>() << '\n';
    return kOk;
  }
  e.emit(std::move(body));
  return kOk;
}

int cmd_binary(const Options& o, Emitter& e, const std::string& name) {
  require_inputs(o, 2);
  const Complex a = load(o.inputs[0]), b = load(o.inputs[1]);
  const Complex r = name == "join" ? join(a, b) : product_ordered(a, b);
  if (e.text()) {
    e.stream() << to_text(r);
    return kOk;
  }
  e.emit({{"command", name}, {"complex", to_json(r)}});
  return kOk;
}

int cmd_local(const Options& o, Emitter& e, const std::string& name) {
  require_inputs(o, 1);
  const Complex c = load(o.inputs[0]);
  const Simplex s = parse_ids(o.simplex);
  const Complex r = name == "link" ? link(c, s) : costar(c, s);
  if (e.text()) {
    e.stream() << to_text(r);
    return kOk;
  }
  e.emit({{"command", name}, {"simplex", simplex_json(s)}, {"complex", to_json(r)}});
  return kOk;
}

// Verification ---------------------------------------------------------------

struct Batch {
  int instances = 0;
  json failures = json::array();
  void record(bool ok, json witness) {
    ++instances;
    if (!ok) failures.push_back(std::move(witness));
  }
};

Complex small_random(std::mt19937_64& rng, int max_vertices, int max_size) {
  if (uniform_int(rng, 0, 9) == 0) return Complex::empty_simplex();
  const int n = uniform_int(rng, 1, max_vertices);
  return random_complex(rng, n, max_size, uniform_int(rng, 1, 4));
}

std::vector<Complex> load_all(const Options& o) {
  std::vector<Complex> out;
  for (const auto& in : o.inputs) out.push_back(load(in));
  return out;
}

void verify_ez(const Options& o, std::mt19937_64& rng, Batch& batch) {
  auto check = [&](const Complex& a, const Complex& b) {
    const EzVerification v = verify_ez_join(a, b);
    json w{{"left", to_json(a)}, {"right", to_json(b)}, {"commutes", v.commutes}, {"invertible", v.invertible}};
    if (v.failing_degree) w["degree"] = *v.failing_degree;
    batch.record(v.commutes && v.invertible, std::move(w));
  };
  if (o.random > 0) {
    for (int i = 0; i < o.random; ++i) {
      const Complex a = small_random(rng, 5, 4);
      const Complex b = small_random(rng, 5, 4);
      check(a, b);
    }
    return;
  }
  const auto cs = load_all(o);
  if (cs.size() != 2) throw TopologyError("ez-join takes two complexes");
  check(cs[0], cs[1]);
}

std::pair<ComplexPair, ComplexPair> pairs_from_inputs(const Options& o) {
  const auto cs = load_all(o);
  if (cs.size() == 2) return {{cs[0], Complex::void_complex()}, {cs[1], Complex::void_complex()}};
  if (cs.size() == 4) return {{cs[0], cs[1]}, {cs[2], cs[3]}};
  throw TopologyError("expected 2 complexes or 4 (whole, sub, whole, sub)");
}

json pair_json(const ComplexPair& p) { return {{"whole", to_json(p.whole)}, {"sub", to_json(p.sub)}}; }

void verify_kunneth(const Options& o, std::mt19937_64& rng, Batch& batch, bool product) {
  const CoefficientRing ring = CoefficientRing::parse(o.ring);
  auto check = [&](const ComplexPair& x, const ComplexPair& y) {
    const KunnethReport r = product ? kunneth_product_verify(x, y, ring) : kunneth_join_verify(x, y, ring, !o.no_tor);
    json w{{"x", pair_json(x)},
           {"y", pair_json(y)},
           {"predicted", to_json(r.predicted)},
           {"computed", to_json(r.computed)},
           {"mismatched_degrees", r.mismatched_degrees}};
    if (product) w["case"] = to_string(product_case(x, y));
    batch.record(r.agrees, std::move(w));
  };
  if (o.random > 0) {
    for (int i = 0; i < o.random; ++i) {
      const int nv = product ? 4 : 5;
      const int size = product ? 3 : 4;
      const Complex a = small_random(rng, nv, size);
      const Complex b = small_random(rng, nv, size);
      check({a, random_subcomplex(rng, a)}, {b, random_subcomplex(rng, b)});
    }
    return;
  }
  const auto [x, y] = pairs_from_inputs(o);
  check(x, y);
}

void verify_link_formula(const Options& o, std::mt19937_64& rng, Batch& batch) {
  const CoefficientRing ring = CoefficientRing::parse(o.ring);
  auto check = [&](const Complex& a, const Complex& b, Simplex s1, Simplex s2) {
    const LinkFormulaReport r = link_formula_verify(a, b, s1, s2, ring);
    batch.record(r.agrees, {{"left", to_json(a)},
                            {"right", to_json(b)},
                            {"s1", simplex_json(s1)},
                            {"s2", simplex_json(s2)},
                            {"product_link", to_json(r.product_link)},
                            {"predicted", to_json(r.predicted)},
                            {"join_link", to_json(r.join_link)}});
  };
  if (o.random > 0) {
    for (int i = 0; i < o.random; ++i) {
      const Complex a = random_complex(rng, uniform_int(rng, 1, 4), 3, uniform_int(rng, 1, 3));
      const Complex b = random_complex(rng, uniform_int(rng, 1, 4), 3, uniform_int(rng, 1, 3));
      const Simplex s1 = a.faces()[std::size_t(uniform_int(rng, 0, int(a.num_faces()) - 1))];
      const Simplex s2 = b.faces()[std::size_t(uniform_int(rng, 0, int(b.num_faces()) - 1))];
      check(a, b, s1, s2);
    }
    return;
  }
  const auto cs = load_all(o);
  if (cs.size() != 2) throw TopologyError("link-formula takes two complexes");
  if (cs[0].is_void() || cs[1].is_void()) throw TopologyError("link-formula needs non-void complexes");
  for (Simplex s1 : cs[0].faces())
    for (Simplex s2 : cs[1].faces()) check(cs[0], cs[1], s1, s2);
}

void verify_boundary(const Options& o, std::mt19937_64& rng, Batch& batch) {
  const CoefficientRing ring = CoefficientRing::parse(o.ring);
  auto check = [&](const Complex& a, const Complex& b) {
    const FormulaCheck j = verify_boundary_formula_join(a, b, ring);
    json w{{"left", to_json(a)}, {"right", to_json(b)}, {"form", "join"}};
    if (j.witness) w["witness"] = simplex_json(*j.witness);
    batch.record(j.holds, w);
    const FormulaCheck p = verify_boundary_formula_point_product(b, ring);
    json wp{{"factor", to_json(b)}, {"form", "point-product"}};
    if (p.witness) wp["witness"] = simplex_json(*p.witness);
    batch.record(p.holds, wp);
  };
  if (o.random > 0) {
    static const char* names[] = {"empty", "point", "s0", "ball1", "s1_3", "s1_4", "moebius5", "cylinder", "b2"};
    for (int i = 0; i < o.random; ++i) {
      const Complex a = corpus(names[uniform_int(rng, 0, 8)]);
      const Complex b = corpus(names[uniform_int(rng, 0, 5)]);
      if (!is_homology_manifold(a, ring) || !is_homology_manifold(b, ring)) continue;
      check(a, b);
    }
    return;
  }
  const auto cs = load_all(o);
  if (cs.size() != 2) throw TopologyError("boundary-formula takes two complexes");
  check(cs[0], cs[1]);
}

void verify_calculus(const Options& o, std::mt19937_64& rng, Batch& batch) {
  auto check = [&](const Complex& a, const Complex& b) {
    const auto failures = check_calculus_identities(a, b);
    json f = json::array();
    for (const auto& x : failures) f.push_back({{"identity", x.identity}, {"detail", x.detail}});
    batch.record(failures.empty(), {{"a", to_json(a)}, {"b", to_json(b)}, {"failures", f}});
  };
  if (o.random > 0) {
    for (int i = 0; i < o.random; ++i) {
      const int n = uniform_int(rng, 1, 6);
      check(random_complex(rng, n, 4, uniform_int(rng, 1, 5)), random_complex(rng, n, 4, uniform_int(rng, 1, 5)));
    }
    return;
  }
  const auto cs = load_all(o);
  if (cs.empty() || cs.size() > 2) throw TopologyError("calculus-identities takes one or two complexes");
  check(cs[0], cs.size() == 2 ? cs[1] : cs[0]);
}

int cmd_verify(const Options& o, Emitter& e, const std::string& check) {
  if (o.random > 0 && !o.seed) throw TopologyError("--random needs --seed");
  if (o.random > 0 && !o.inputs.empty()) throw TopologyError("give either input complexes or --random, not both");
  if (o.random <= 0 && o.inputs.empty()) throw TopologyError("no instances: pass complexes or --random N --seed S");
  std::mt19937_64 rng(o.seed.value_or(0));
  Batch batch;
  if (check == "ez-join")
    verify_ez(o, rng, batch);
  else if (check == "kunneth-join")
    verify_kunneth(o, rng, batch, false);
  else if (check == "kunneth-product")
    verify_kunneth(o, rng, batch, true);
  else if (check == "link-formula")
    verify_link_formula(o, rng, batch);
  else if (check == "boundary-formula")
    verify_boundary(o, rng, batch);
  else
    verify_calculus(o, rng, batch);
  const bool ok = batch.failures.empty();
  if (e.text()) {
    e.stream() << check << ": " << (ok ? "PASS" : "FAIL") << " (" << batch.instances - int(batch.failures.size())
               << "/" << batch.instances << ")\n";
  } else {
    e.emit({{"command", "verify"},
            {"check", check},
            {"ring", o.ring},
            {"instances", batch.instances},
            {"passed", ok},
            {"failures", batch.failures}});
  }
  return ok ? kOk : kVerificationFailed;
}

void add_common(CLI::App* app, Options& o, bool with_ring = true) {
  if (with_ring) app->add_option("--ring", o.ring, "Z, Q or Zp:<p>");
  app->add_option("--out", o.out, "json or text")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"augmented simplicial complexes: homology, manifolds, Stanley-Reisner properties"};
  app.require_subcommand(1);
  Options o;

  auto* info = app.add_subcommand("info", "dimension, f-vector, facets");
  info->add_option("input", o.inputs, "file path or corpus:<name>")->required();
  add_common(info, o, false);

  auto* hom = app.add_subcommand("homology", "augmental homology (relative with --sub)");
  hom->add_option("input", o.inputs)->required();
  hom->add_option("--sub", o.sub, "subcomplex for relative homology");
  hom->add_flag("--cohomology", o.cohomology, "cohomology via universal coefficients");
  add_common(hom, o);

  auto* bd = app.add_subcommand("boundary", "manifold boundary Bd_G");
  bd->add_option("input", o.inputs)->required();
  add_common(bd, o);

  auto* cls = app.add_subcommand("classify", "manifold classification report");
  cls->add_option("input", o.inputs)->required();
  add_common(cls, o);

  auto* ring = app.add_subcommand("ring", "Stanley-Reisner data and ring predicates");
  ring->add_option("input", o.inputs)->required();
  ring->add_option("--truncate", o.truncate, "Hilbert function degree bound")->check(CLI::NonNegativeNumber);
  ring->add_option("--universe", o.universe, "vertex universe, e.g. \"1,2,3\"");
  ring->add_option("--k", o.k, "k for the k-CM test")->check(CLI::PositiveNumber);
  add_common(ring, o);

  auto* jn = app.add_subcommand("join", "simplicial join");
  jn->add_option("inputs", o.inputs)->required()->expected(2);
  add_common(jn, o, false);

  auto* pr = app.add_subcommand("product", "ordered simplicial product");
  pr->add_option("inputs", o.inputs)->required()->expected(2);
  add_common(pr, o, false);

  auto* lk = app.add_subcommand("link", "link of a simplex");
  lk->add_option("input", o.inputs)->required();
  lk->add_option("--simplex", o.simplex, "vertex ids, e.g. \"1,2\"; empty for the empty simplex");
  add_common(lk, o, false);

  auto* cs = app.add_subcommand("cost", "costar of a simplex");
  cs->add_option("input", o.inputs)->required();
  cs->add_option("--simplex", o.simplex);
  add_common(cs, o, false);

  auto* ver = app.add_subcommand("verify", "self-verification suites");
  ver->require_subcommand(1);
  std::map<CLI::App*, std::string> checks;
  for (const char* name : {"ez-join", "kunneth-join", "kunneth-product", "link-formula", "boundary-formula",
                           "calculus-identities"}) {
    auto* sub = ver->add_subcommand(name);
    sub->add_option("inputs", o.inputs, "instance complexes");
    sub->add_option("--random", o.random, "number of random instances")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", o.seed, "seed for --random");
    if (std::string(name) == "kunneth-join") sub->add_flag("--no-tor", o.no_tor, "drop the Tor terms (negative control)");
    add_common(sub, o);
    checks[sub] = name;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Emitter emitter(o, out);
  try {
    if (*info) return cmd_info(o, emitter);
    if (*hom) return cmd_homology(o, emitter);
    if (*bd) return cmd_boundary(o, emitter);
    if (*cls) return cmd_classify(o, emitter);
    if (*ring) return cmd_ring(o, emitter);
    if (*jn) return cmd_binary(o, emitter, "join");
    if (*pr) return cmd_binary(o, emitter, "product");
    if (*lk) return cmd_local(o, emitter, "link");
    if (*cs) return cmd_local(o, emitter, "cost");
    for (const auto& [sub, name] : checks)
      if (*sub) return cmd_verify(o, emitter, name);
  } catch (const TopologyError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace augtopo::cli
