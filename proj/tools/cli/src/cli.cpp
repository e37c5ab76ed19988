#include <cliffalg_cli/cli.hpp>

#include <cliffalg/degeneration.hpp>
#include <cliffalg/json_io.hpp>
#include <cliffalg/lie_structure.hpp>
#include <cliffalg/lipschitz.hpp>
#include <cliffalg/local_models.hpp>
#include <cliffalg/plethysm.hpp>
#include <cliffalg/random.hpp>
#include <cliffalg/spinor.hpp>
#include <cliffalg_selftest/criteria.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cliffalg::cli {

namespace {

namespace jio = cliffalg::json_io;
using json = nlohmann::json;

struct Options {
  std::string input;
  std::uint64_t seed = 1;
  int trials = 1;
  int L = 0;
  std::string halfspin = "+";
  std::string at = "0";
  int m = 0;
  bool random = false;
  bool timing = false;
  std::vector<int> only;
  std::string type;
  int l = 0;
  std::string which;
};

struct Report {
  std::string verdict = "pass";
  json payload = json::object();
};

/// Usage problems detected after argument parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

Report failed(json payload, json counterexample) {
  payload["counterexample"] = std::move(counterexample);
  return {"fail", std::move(payload)};
}

json read_input(const Options& o, std::istream& in) {
  if (o.input.empty()) throw UsageError("this subcommand needs --input FILE|-|JSON");
  std::string text;
  if (o.input == "-") {
    std::ostringstream s;
    s << in.rdbuf();
    text = s.str();
  } else if (o.input.front() == '{' || o.input.front() == '[') {
    text = o.input;
  } else {
    std::ifstream f(o.input);
    if (!f) throw UsageError("cannot open input file \"" + o.input + "\"");
    std::ostringstream s;
    s << f.rdbuf();
    text = s.str();
  }
  return jio::parse(text);
}

void log_seed(const Options& o, std::ostream& err) { err << "seed = " << o.seed << "\n"; }

// ---- form ----

QuotientLieAlgebra<Rational> constants_from_json(const json& j) {
  QuotientLieAlgebra<Rational> L;
  if (!j.contains("m") || !j.at("m").is_number_integer()) throw ParseError("missing integer field \"m\"");
  L.m = j.at("m").get<int>();
  if (L.m < 2 || L.m > 16) throw ParseError("\"m\" must be in 2..16");
  L.labels = detail::pair_labels(L.m);
  const int n = L.dim();
  L.constants.assign(static_cast<std::size_t>(n) * n * n, Rational(0));
  for (const auto& e : j.at("constants")) {
    if (!e.is_array() || e.size() != 4) throw ParseError("each constant is [a, b, c, coefficient]");
    const int a = e[0].get<int>(), b = e[1].get<int>(), c = e[2].get<int>();
    if (std::min({a, b, c}) < 0 || std::max({a, b, c}) >= n) throw ParseError("constant index out of range");
    L.at(a, b, c) = jio::rational_from_json(e[3]);
  }
  return L;
}

Report form_reconstruct(const Options& o, std::istream& in, std::ostream& err) {
  Report r;
  if (o.random) {
    log_seed(o, err);
    const int m = o.m == 0 ? 5 : o.m;
    if (m < 3 || m > 12) throw UsageError("--m must be in 3..12 for form reconstruct");
    Rng rng(o.seed);
    r.payload = {{"seed", o.seed}, {"m", m}, {"trials", o.trials}};
    json cases = json::array();
    for (int t = 0; t < o.trials; ++t) {
      const SpaceQ V = random_space(rng, m);
      const SpaceQ W = reconstruct_form(structure_constants(V));
      cases.push_back({{"Q", jio::to_json(V)}, {"recovered", jio::to_json(W)}, {"match", W == V}});
      if (!(W == V)) return failed(r.payload, cases.back());
    }
    r.payload["recovered"] = cases.front().at("recovered");
    r.payload["cases"] = cases;
    return r;
  }
  const json j = read_input(o, in);
  try {
    if (j.contains("constants")) {
      const SpaceQ W = reconstruct_form(constants_from_json(j));
      r.payload = {{"m", W.dim()}, {"recovered", jio::to_json(W)}};
    } else {
      const SpaceQ V = jio::space_from_json(j);
      const SpaceQ W = reconstruct_form(structure_constants(V));
      r.payload = {{"m", V.dim()}, {"recovered", jio::to_json(W)}, {"match", W == V}};
      if (!(W == V)) return failed(r.payload, jio::to_json(V));
    }
  } catch (const InconsistentConstants& e) {
    return failed({{"m", j.value("m", 0)}}, e.what());
  }
  return r;
}

Report form_tensor(const Options& o, std::istream& in, std::ostream&) {
  const json j = read_input(o, in);
  Report r;
  if (j.contains("Q")) {
    const SpaceQ V = jio::space_from_json(j);
    if (V.dim() < 3 || V.dim() > 12) throw UsageError("form tensor needs 3 <= m <= 12");
    const auto T = theta_tensor(V);
    const SpaceQ W = reconstruct_from_tensor(T, V.dim());
    r.payload = {{"m", V.dim()}, {"tensor", jio::to_json(T)}, {"recovered", jio::to_json(W)}, {"match", W == V}};
    if (!(W == V)) return failed(r.payload, jio::to_json(V));
    return r;
  }
  const auto T = jio::tensor_from_json(j);
  int m = j.value("m", 0);
  if (m == 0)
    while ((1 << std::max(m - 1, 0)) < T.dim) ++m;
  if (m < 3 || (1 << (m - 1)) != T.dim) throw ParseError("tensor dimension is not 2^(m-1) for some m >= 3");
  if (T.basis.empty()) {
    auto U = T;
    U.basis = even_blades(m);
    try {
      r.payload = {{"m", m}, {"recovered", jio::to_json(reconstruct_from_tensor(U, m))}};
    } catch (const InconsistentConstants& e) {
      return failed({{"m", m}}, e.what());
    }
    return r;
  }
  try {
    r.payload = {{"m", m}, {"recovered", jio::to_json(reconstruct_from_tensor(T, m))}};
  } catch (const InconsistentConstants& e) {
    return failed({{"m", m}}, e.what());
  }
  return r;
}

// ---- spinor ----

SpinType spin_type(const std::string& s) {
  if (s == "B" || s == "b") return SpinType::B;
  if (s == "D" || s == "d") return SpinType::D;
  throw UsageError("spin type must be B or D");
}

int sign_of(const std::string& s) {
  if (s == "+") return +1;
  if (s == "-") return -1;
  throw UsageError("--halfspin must be + or -");
}

Report spinor_check(const Options& o, std::istream&, std::ostream&) {
  const SpinType t = spin_type(o.type);
  if (o.l < 1 || o.l > 6) throw UsageError("l must be in 1..6");
  const WittDecomposition W(o.l, t == SpinType::B);
  const auto iso = even_algebra_isomorphism_check(W);
  Report r;
  r.payload = {{"type", t == SpinType::B ? "B" : "D"},
               {"l", o.l},
               {"isomorphism",
                {{"source_dim", iso.source_dim},
                 {"target_dim", iso.target_dim},
                 {"image_rank", iso.image_rank},
                 {"relations_hold", iso.relations_hold},
                 {"homomorphism_holds", iso.homomorphism_holds},
                 {"blocks_hold", iso.blocks_hold},
                 {"bijective", iso.bijective()}}}};
  bool ok = iso.bijective();
  if (t == SpinType::D) {
    if (o.l >= 2) {
      const auto res = restrict_even_to_odd(o.l);
      r.payload["restriction"] = {{"embedding_holds", res.embedding_holds},
                                  {"plus_matches", res.restricted_plus == res.target},
                                  {"minus_matches", res.restricted_minus == res.target},
                                  {"ok", res.ok()}};
      ok = ok && res.ok();
    }
    const auto ci = central_involution_check(o.l);
    r.payload["central_involution"] = {{"square_is_one", ci.square_is_one},
                                       {"anticommutes", ci.anticommutes},
                                       {"c", ci.c ? jio::to_json(*ci.c) : json(nullptr)},
                                       {"ok", ci.ok()}};
    ok = ok && ci.ok();
  }
  if (!ok) return failed(r.payload, iso.failure ? json(*iso.failure) : json("see report fields"));
  return r;
}

Report spinor_weights(const Options& o, std::istream&, std::ostream&) {
  const SpinType t = spin_type(o.type);
  if (o.l < 1 || o.l > 16) throw UsageError("l must be in 1..16");
  const auto sw = spinor_module_weights(t, o.l);
  Report r;
  r.payload = {{"type", t == SpinType::B ? "B" : "D"}, {"l", o.l}};
  const WeightMultiset* W = &sw.all;
  if (t == SpinType::D) {
    W = sign_of(o.halfspin) > 0 ? &sw.plus : &sw.minus;
    r.payload["halfspin"] = o.halfspin;
  }
  r.payload["dim"] = W->total();
  r.payload["weights"] = jio::to_json(*W);
  r.payload["tsv"] = to_tsv(*W);
  return r;
}

// ---- lipschitz ----

MultivectorQ lipschitz_sample(Rng& rng, const SpaceQ& V) {
  MultivectorQ x = MultivectorQ::one();
  const int factors = static_cast<int>(rng.integer(1, 3));
  for (int f = 0; f < factors; ++f) {
    const MultivectorQ y = rng.coin() ? random_vector(rng, V.dim())
                                      : MultivectorQ::scalar(rng.rational(3, 2)) +
                                            geometric_product(random_vector(rng, V.dim()), random_vector(rng, V.dim()), V);
    x = geometric_product(x, y, V);
  }
  return x;
}

json infinitesimal_json(const InfinitesimalReport& rep) {
  json spin = json::array();
  for (const auto& X : rep.spin_basis) spin.push_back(jio::to_json(X));
  return {{"m", rep.m},
          {"solution_dim", rep.solution_dim()},
          {"equals_cl_plus_le2", rep.equals_cl_plus_le2},
          {"spin_dim", rep.spin_dim()},
          {"spin_basis", spin}};
}

Report lipschitz_test(const Options& o, std::istream& in, std::ostream& err) {
  Report r;
  if (o.random) {
    log_seed(o, err);
    const int m = o.m == 0 ? 4 : o.m;
    if (m < 1 || m > 6) throw UsageError("--m must be in 1..6 for lipschitz test");
    Rng rng(o.seed);
    int checked = 0;
    r.payload = {{"seed", o.seed}, {"m", m}, {"trials", o.trials}};
    for (int t = 0; t < o.trials; ++t) {
      const SpaceQ V = t % 2 ? random_space_with_corank(rng, m, 1) : random_space(rng, m);
      const auto x = lipschitz_sample(rng, V);
      if (x.is_zero()) continue;
      const DoubledAlgebra D(V);
      const auto rx = reverse(x, V);
      const auto n1 = geometric_product(x, rx, V);
      const bool ok = is_lipschitz(x, D) && is_lipschitz(rx, D) && is_scalar(n1) && n1 == geometric_product(rx, x, V);
      if (!ok) return failed(r.payload, {{"space", jio::to_json(V)}, {"x", jio::to_json(x)}});
      ++checked;
    }
    r.payload["checked"] = checked;
    return r;
  }
  const json j = read_input(o, in);
  if (!j.contains("space")) throw ParseError("lipschitz input needs \"space\" (and optionally \"x\")");
  const SpaceQ V = jio::space_from_json(j.at("space"));
  if (V.dim() > 7) throw UsageError("lipschitz test supports m <= 7");
  if (!j.contains("x")) {
    const auto rep = infinitesimal_lipschitz(V);
    r.payload = infinitesimal_json(rep);
    if (!rep.equals_cl_plus_le2) return failed(r.payload, jio::to_json(V));
    return r;
  }
  const auto x = jio::multivector_from_json(j.at("x"));
  if (x.max_index() > V.dim()) throw UsageError("x uses generators beyond m");
  r.payload = jio::to_json(classify_lipschitz(x, V));
  return r;
}

// ---- degenerate ----

Polynomial shift(const Polynomial& p, const Rational& c) {
  // p(t + c) by Horner.
  const Polynomial tc{c, Rational(1)};
  Polynomial acc;
  const auto& a = p.coefficients();
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * tc + Polynomial(*it);
  return acc;
}

Report degenerate_analyze(const Options& o, std::istream& in, std::ostream&) {
  QuadraticFamily F = QuadraticFamily::identity(1);
  if (!o.input.empty()) {
    F = jio::family_from_json(read_input(o, in));
  } else {
    const int m = o.m == 0 ? 3 : o.m;
    if (m < 1 || m > 11) throw UsageError("--m must be in 1..11");
    std::vector<RationalFunction> d(m, RationalFunction(1));
    d.back() = RationalFunction(Polynomial::t());
    F = QuadraticFamily::diagonal(d);
  }
  if (F.dim() > 11) throw UsageError("degenerate analyze supports m <= 11");
  const Rational c = parse_rational(o.at);
  if (sgn(c) != 0) {
    auto g = F.gram();
    for (auto& row : g)
      for (auto& f : row) f = RationalFunction(shift(f.numerator(), c), shift(f.denominator(), c));
    F = QuadraticFamily(F.dim(), g);
  }
  Report r;
  try {
    const auto w = certify_specialization(F);
    r.payload = jio::to_json(w);
    r.payload["at"] = jio::to_json(c);
    if (!w.valid()) return failed(r.payload, "certificate conditions fail; see report fields");
  } catch (const DegenerateFamily& e) {
    return failed({{"at", jio::to_json(c)}, {"family", jio::to_json(F)}}, e.what());
  } catch (const PoleError& e) {
    return failed({{"at", jio::to_json(c)}, {"family", jio::to_json(F)}}, e.what());
  }
  return r;
}

// ---- plethysm ----

Report plethysm_verify(const Options& o, std::istream&, std::ostream&) {
  const PlethysmCase which = parse_plethysm_case(o.which);
  const int sign = sign_of(o.halfspin);
  const auto rep = verify_plethysm(which);
  const auto& d = rep.halfspin(sign);
  Report r;
  r.payload = {{"case", to_string(which)},
               {"subalgebra", rep.subalgebra},
               {"l", rep.l},
               {"defining_highest_weight", jio::to_json(rep.defining_highest_weight)},
               {"defining_dim", rep.defining_dim.get_si()},
               {"halfspin", o.halfspin},
               {"rho", jio::to_json(rep.rho)},
               {"constituents", jio::to_json(d)},
               {"halfspin_agree", rep.halfspin_agree},
               {"irreducible", d.irreducible()}};
  const long expected = 1L << (rep.l - 1);
  bool ok = d.irreducible() && d.constituents[0].dim == expected;
  if (ok) r.payload["highest_weight_is_rho"] = d.constituents[0].highest_weight == rep.rho;
  if (which == PlethysmCase::G2) ok = ok && d.constituents[0].highest_weight == rep.rho;
  if (!ok) return failed(r.payload, jio::to_json(d));
  return r;
}

// ---- localmodel ----

Report localmodel_simple(const Options& o, std::istream& in, std::ostream&) {
  const json j = read_input(o, in);
  const MatrixTuple T = jio::tuple_from_json(j.contains("tuple") ? j.at("tuple") : j);
  const auto ws = word_span(T);
  Report r;
  r.payload = {{"g", T.g},
               {"n", T.n},
               {"span_dim", ws.dim},
               {"rounds", ws.rounds},
               {"generates_full_algebra", ws.dim == T.n * T.n}};
  if (j.contains("v")) {
    std::vector<Rational> v;
    for (const auto& e : j.at("v")) v.push_back(jio::rational_from_json(e));
    r.payload["cyclic"] = is_cyclic_vector(T, v);
  }
  if (ws.dim != T.n * T.n) return failed(r.payload, {{"span_dim", ws.dim}, {"expected", T.n * T.n}});
  return r;
}

Report localmodel_sequiv(const Options& o, std::istream& in, std::ostream&) {
  const json j = read_input(o, in);
  if (!j.contains("a") || !j.contains("b")) throw ParseError("sequiv input needs tuples \"a\" and \"b\"");
  const MatrixTuple a = jio::tuple_from_json(j.at("a")), b = jio::tuple_from_json(j.at("b"));
  if (a.g != b.g || a.n != b.n) throw UsageError("tuples have different shapes");
  const int L = o.L > 0 ? o.L : a.n * a.n;
  const auto fa = trace_fingerprint(a, L), fb = trace_fingerprint(b, L);
  Report r;
  r.payload = {{"L", L}, {"words", fa.traces.size()}, {"s_equivalent", fa == fb}};
  for (std::size_t k = 0; k < fa.traces.size(); ++k)
    if (fa.traces[k].second != fb.traces[k].second)
      return failed(r.payload, {{"word", fa.traces[k].first},
                                {"trace_a", jio::to_json(fa.traces[k].second)},
                                {"trace_b", jio::to_json(fb.traces[k].second)}});
  return r;
}

Report localmodel_centralizer(const Options& o, std::istream& in, std::ostream&) {
  const json j = read_input(o, in);
  const MatrixTuple T = jio::tuple_from_json(j.contains("tuple") ? j.at("tuple") : j);
  std::vector<MatrixQ> h;
  if (j.contains("h") && j.at("h").is_array()) {
    for (const auto& m : j.at("h")) h.push_back(jio::matrix_from_json(m));
  } else {
    h = sl_basis(T.n);
  }
  const auto basis = centralizer_basis(T, h);
  Report r;
  r.payload = {{"centralizer_dim", basis.size()}, {"h_dim", h.size()}, {"free", basis.empty()}};
  if (!basis.empty()) return failed(r.payload, jio::to_json(basis.front()));
  return r;
}

// ---- selftest ----

Report selftest_run(const Options& o, std::istream&, std::ostream& err) {
  log_seed(o, err);
  Report r;
  json list = json::array();
  bool all = true;
  json first_failure;
  for (const auto& c : selftest::criteria()) {
    if (!o.only.empty() && std::find(o.only.begin(), o.only.end(), c.id) == o.only.end()) continue;
    const auto res = selftest::run_criterion(c, o.seed);
    err << "criterion " << c.id << " " << (res.passed() ? "PASS" : "FAIL") << " " << c.title << " (" << res.seconds
        << " s)\n";
    json e = {{"id", c.id}, {"title", c.title}, {"passed", res.passed()}, {"detail", res.outcome.detail}};
    if (o.timing) e["seconds"] = res.seconds;
    if (!res.outcome.counterexample.is_null()) e["counterexample"] = res.outcome.counterexample;
    if (!res.passed() && first_failure.is_null())
      first_failure = {{"id", c.id}, {"detail", res.outcome.detail}, {"within_budget", res.within_budget()},
                       {"counterexample", res.outcome.counterexample}};
    all = all && res.passed();
    list.push_back(std::move(e));
  }
  r.payload = {{"seed", o.seed}, {"criteria", list}};
  if (!all) return failed(r.payload, first_failure);
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Clifford algebra, spinor and plethysm verifications", "cliffalg"};
  app.require_subcommand(1);
  Options o;

  const auto add_input = [&](CLI::App* c) { c->add_option("--input", o.input, "JSON input: file path, - for stdin, or inline JSON"); };
  const auto add_seeded = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "Random seed");
    c->add_option("--trials", o.trials, "Number of random trials")->check(CLI::Range(1, 100000));
  };

  auto* form = app.add_subcommand("form", "Quadratic form <-> even Lie structure")->require_subcommand(1);
  auto* form_rec = form->add_subcommand("reconstruct", "Recover Q from L'_q structure constants");
  add_input(form_rec);
  add_seeded(form_rec);
  form_rec->add_flag("--random", o.random, "Round-trip random forms instead of reading input");
  form_rec->add_option("--m", o.m, "Dimension for --random");
  auto* form_ten = form->add_subcommand("tensor", "Even Clifford multiplication tensor and its inverse");
  add_input(form_ten);

  auto* spinor = app.add_subcommand("spinor", "Spinor modules")->require_subcommand(1);
  auto* sp_check = spinor->add_subcommand("check", "Matrix identification, restriction and central involution");
  sp_check->add_option("type", o.type, "B or D")->required();
  sp_check->add_option("l", o.l, "Rank")->required();
  auto* sp_weights = spinor->add_subcommand("weights", "Spin or half-spin weights");
  sp_weights->add_option("type", o.type, "B or D")->required();
  sp_weights->add_option("l", o.l, "Rank")->required();
  sp_weights->add_option("--halfspin", o.halfspin, "Half-spin sign for type D (+ or -)");

  auto* lip = app.add_subcommand("lipschitz", "Clifford-Lipschitz monoid")->require_subcommand(1);
  auto* lip_test = lip->add_subcommand("test", "Classify x, or the infinitesimal space when x is absent");
  add_input(lip_test);
  add_seeded(lip_test);
  lip_test->add_flag("--random", o.random, "Check the monoid axioms on random products");
  lip_test->add_option("--m", o.m, "Dimension for --random");

  auto* deg = app.add_subcommand("degenerate", "Degenerations of matrix algebras")->require_subcommand(1);
  auto* deg_an = deg->add_subcommand("analyze", "Certify a quadratic family as a specialization");
  add_input(deg_an);
  deg_an->add_option("--m", o.m, "Use diag(1, ..., 1, t) of this size when no input is given");
  deg_an->add_option("--at", o.at, "Specialization point c (the family is read at t = c)");

  auto* pl = app.add_subcommand("plethysm", "Half-spin restrictions")->require_subcommand(1);
  auto* pl_ver = pl->add_subcommand("verify", "Restrict half-spin weights and identify the irreducible");
  pl_ver->add_option("case", o.which, "g2, f4 or c3")->required();
  pl_ver->add_option("--halfspin", o.halfspin, "Half-spin sign (+ or -)");

  auto* lm = app.add_subcommand("localmodel", "Matrix tuples")->require_subcommand(1);
  auto* lm_simple = lm->add_subcommand("simple", "Does the tuple generate M_n");
  add_input(lm_simple);
  auto* lm_seq = lm->add_subcommand("sequiv", "Compare trace fingerprints of two tuples");
  add_input(lm_seq);
  lm_seq->add_option("--L", o.L, "Word length bound (default n^2)")->check(CLI::Range(1, 64));
  auto* lm_cen = lm->add_subcommand("centralizer", "Centralizer dimension inside a Lie subalgebra");
  add_input(lm_cen);

  auto* st = app.add_subcommand("selftest", "Run the acceptance criteria");
  st->add_option("--seed", o.seed, "Random seed");
  st->add_flag("--timing", o.timing, "Include per-criterion timings");
  st->add_option("--only", o.only, "Run only these criterion ids");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    out << json{{"verdict", "error"}, {"error", e.what()}}.dump(2) << "\n";
    return kUsage;
  }

  struct Leaf {
    CLI::App* app;
    const char* name;
    Report (*fn)(const Options&, std::istream&, std::ostream&);
  };
  const Leaf leaves[] = {
      {form_rec, "form reconstruct", form_reconstruct},   {form_ten, "form tensor", form_tensor},
      {sp_check, "spinor check", spinor_check},           {sp_weights, "spinor weights", spinor_weights},
      {lip_test, "lipschitz test", lipschitz_test},       {deg_an, "degenerate analyze", degenerate_analyze},
      {pl_ver, "plethysm verify", plethysm_verify},       {lm_simple, "localmodel simple", localmodel_simple},
      {lm_seq, "localmodel sequiv", localmodel_sequiv},   {lm_cen, "localmodel centralizer", localmodel_centralizer},
      {st, "selftest", selftest_run},
  };
  for (const auto& leaf : leaves) {
    if (!leaf.app->parsed()) continue;
    json doc = {{"subcommand", leaf.name}};
    const auto start = std::chrono::steady_clock::now();
    int code = kPass;
    try {
      Report r = leaf.fn(o, in, err);
      doc["verdict"] = r.verdict;
      doc["payload"] = std::move(r.payload);
      code = r.verdict == "pass" ? kPass : kFail;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      doc["verdict"] = "error";
      doc["error"] = e.what();
      code = kUsage;
    }
    if (o.timing) doc["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    out << doc.dump(2) << "\n";
    return code;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace cliffalg::cli
