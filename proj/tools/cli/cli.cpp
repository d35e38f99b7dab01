#include "cli/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cubulate/bbf.hpp"
#include "cubulate/cube_complex.hpp"
#include "cubulate/embedding.hpp"
#include "cubulate/error.hpp"
#include "cubulate/fixtures.hpp"
#include "cubulate/hhs.hpp"
#include "cubulate/json_io.hpp"
#include "cubulate/median.hpp"
#include "cubulate/rng.hpp"

namespace cubulate::cli {

namespace {

using io::Json;
using io::to_json;

struct Options {
  std::string kind;
  std::string in;
  std::string out;
  std::string config;
  std::string sets;
  std::string family;
  std::string format = "json";
  std::optional<std::string> k, l, d, c, s, r;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  int n = 9;
  int axes = 3;
  int dim = 3;
  int length = 120;
  int rows = 0;
  int cols = 0;
};

// Outcome of a subcommand: report plus exit code.
struct Outcome {
  Json report;
  int code = exit_ok;
};

const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::malformed_input: return "malformed_input";
    case ErrorCode::disconnected: return "disconnected";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::guard_exceeded: return "guard_exceeded";
    case ErrorCode::not_convex: return "not_convex";
    case ErrorCode::not_median: return "not_median";
    case ErrorCode::invariant: return "invariant";
  }
  return "unknown";
}

// Fills unset numeric options from the --config document.
void merge_config(Options& o) {
  if (o.config.empty()) return;
  const Json cfg = io::read_json_file(o.config);
  if (!cfg.is_object()) throw Error(ErrorCode::malformed_input, "config: expected an object");
  auto text = [&](const char* key, std::optional<std::string>& slot) {
    if (slot || !cfg.contains(key)) return;
    slot = io::rational_from_json(cfg.at(key)).to_string();
  };
  text("K", o.k);
  text("L", o.l);
  text("D", o.d);
  text("C", o.c);
  text("s", o.s);
  text("R", o.r);
  if (!o.seed && cfg.contains("seed")) {
    if (!cfg.at("seed").is_number_unsigned()) throw Error(ErrorCode::malformed_input, "config.seed: expected a non-negative integer");
    o.seed = cfg.at("seed").get<std::uint64_t>();
  }
  if (!o.samples && cfg.contains("samples")) {
    if (!cfg.at("samples").is_number_integer()) throw Error(ErrorCode::malformed_input, "config.samples: expected an integer");
    o.samples = cfg.at("samples").get<int>();
  }
}

std::optional<Rational> rational_option(const std::optional<std::string>& v) {
  if (!v) return std::nullopt;
  return Rational::parse(*v);
}

Json load_input(const Options& o) {
  if (o.in.empty()) throw Error(ErrorCode::malformed_input, "--in is required");
  return io::read_json_file(o.in);
}

std::vector<std::pair<Vertex, Vertex>> sample_pairs(int n, int count, SeededRng rng) {
  std::vector<std::pair<Vertex, Vertex>> out;
  if (n < 2) return out;
  for (int i = 0; i < count; ++i) {
    const Vertex x = rng.uniform(0, n - 1);
    Vertex y = rng.uniform(0, n - 2);
    if (y >= x) ++y;
    out.emplace_back(x, y);
  }
  return out;
}

Json pairs_json(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  Json out = Json::array();
  for (const auto& [x, y] : pairs) out.push_back({x, y});
  return out;
}

Json parameters_json(const EmbeddingParameters& p) {
  return {{"D", to_json(p.d)}, {"K", to_json(p.k)}, {"L", to_json(p.l)}};
}

ColouredSystem coloured_system(const Hierarchy& h, const Options& o) {
  EmbeddingParameters p = default_parameters(h.e());
  if (auto d = rational_option(o.d)) {
    p.d = *d;
    p.k = Rational(101) * p.d + 1;
  }
  if (auto k = rational_option(o.k)) p.k = *k;
  if (auto l = rational_option(o.l)) p.l = *l;
  return build_coloured_system(h, find_bbf_colouring(h), p);
}

Outcome gen_fixture(const Options& o) {
  const std::uint64_t seed = o.seed.value_or(1);
  const std::string& k = o.kind;
  Json doc;
  if (k == "product-lines") {
    doc = to_json(fixtures::product_lines_instance(o.n));
  } else if (k == "tree-with-axes") {
    doc = to_json(fixtures::random_tree_with_axes(o.n, o.axes, seed));
  } else if (k == "spine") {
    doc = to_json(fixtures::spine_with_axes(o.axes, o.length));
  } else if (k == "cube-walls") {
    doc = to_json(fixtures::cube_wallspace(o.dim));
  } else if (k == "hypercube") {
    doc = to_json(fixtures::hypercube(o.dim));
  } else if (k == "grid") {
    doc = to_json(fixtures::grid_graph(o.rows > 0 ? o.rows : o.n, o.cols > 0 ? o.cols : o.n));
  } else if (k == "cycle") {
    doc = to_json(fixtures::cycle_graph(o.n));
  } else if (k == "random-tree") {
    SeededRng rng = SeededRng(seed).split("gen-fixture");
    doc = to_json(fixtures::random_tree(o.n, rng));
  } else if (k == "adversarial-p1") {
    doc = to_json(fixtures::adversarial_p1_system());
  } else if (k == "chain") {
    doc = to_json(fixtures::chain_system());
  } else if (k == "tripod") {
    doc = to_json(fixtures::tripod_system(o.length));
  } else {
    throw Error(ErrorCode::malformed_input, "unknown fixture kind '" + k + "'");
  }
  return {doc, exit_ok};
}

Json axiom_report_json(const AxiomReport& a) {
  Json p0 = Json::array();
  for (const auto& [i, j] : a.p0_violations) p0.push_back({i, j});
  Json p1 = Json::array();
  for (const AxiomTriple& t : a.p1_violations) {
    p1.push_back({{"i", t.i}, {"j", t.j}, {"k", t.k}, {"via_j", t.via_j}, {"via_k", t.via_k}});
  }
  return {{"least_theta", a.least_theta}, {"max_projection_diameter", a.max_projection_diameter}, {"p0_violations", p0},
          {"p1_violations", p1}, {"holds", a.holds()}};
}

Outcome validate(const Options& o) {
  const Json doc = load_input(o);
  if (doc.is_object() && doc.contains("pieces")) {
    const ProjectionSystem s = io::projection_system_from_json(doc);
    const AxiomReport a = verify_projection_axioms(s);
    Json report{{"kind", "projection-system"}, {"theta", to_json(s.theta)}, {"axioms", axiom_report_json(a)}};
    return {report, a.holds() ? exit_ok : exit_defects};
  }
  const Hierarchy h(io::instance_from_json(doc));
  const InstanceDiagnostics diag = validate_instance(h);
  Json defects = Json::array();
  for (const Defect& d : diag.defects) defects.push_back({{"axiom", d.axiom}, {"message", d.message}, {"witness", d.witness}});
  Json report{{"kind", "instance"},
              {"E", to_json(h.e())},
              {"clean", diag.clean()},
              {"least_E", diag.least_e},
              {"lipschitz_constant", diag.lipschitz_constant},
              {"domains", h.domain_count()},
              {"defects", defects}};
  return {report, diag.clean() ? exit_ok : exit_defects};
}

Outcome median_check(const Options& o) {
  const UnitGraph g = io::graph_from_json(load_input(o));
  const MedianVerdict v = is_median_graph(g);
  Json report{{"vertices", g.size()}, {"edges", g.edges().size()}, {"is_median", v.is_median}};
  if (v.witness) {
    report["witness"] = *v.witness;
    report["witness_median_count"] = v.witness_median_count;
  } else {
    const CubeSkeleton c = hyperplane_decomposition(MedianAlgebra::verified(g));
    report["hyperplanes"] = c.hyperplanes().size();
    report["dimension"] = c.dimension();
  }
  return {report, v.is_median ? exit_ok : exit_defects};
}

Outcome dual(const Options& o) {
  const Wallspace w = io::wallspace_from_json(load_input(o));
  const DualComplex dc = dual_cube_complex(w);
  Json report = to_json(dc.skeleton);
  Json orientations = Json::array();
  for (const Orientation& x : dc.orientations) {
    std::string bits;
    for (std::uint8_t b : x) bits.push_back(b ? '1' : '0');
    orientations.push_back(bits);
  }
  report["orientations"] = std::move(orientations);
  report["vertices"] = dc.skeleton.graph().size();
  return {report, exit_ok};
}

Outcome build_quasitree(const Options& o) {
  ProjectionSystem s = io::projection_system_from_json(load_input(o));
  const AxiomReport a = verify_projection_axioms(s);
  if (!a.holds()) return {Json{{"axioms", axiom_report_json(a)}}, exit_defects};
  const auto k = rational_option(o.k);
  if (!k) throw Error(ErrorCode::malformed_input, "build-quasitree needs --K");
  const QuasiTreeSpace q(std::move(s), *k, rational_option(o.l).value_or(1));
  Json report = to_json(q);
  report["least_theta"] = q.least_theta();
  report["connected"] = q.connected();
  report["attachments"] = q.attachments().size();
  return {report, exit_ok};
}

Outcome df_check(const Options& o) {
  const Json doc = load_input(o);
  const std::uint64_t seed = o.seed.value_or(1);
  const int samples = o.samples.value_or(100);
  if (doc.is_object() && doc.contains("pieces")) {
    ProjectionSystem s = io::projection_system_from_json(doc);
    const auto k = rational_option(o.k);
    if (!k) throw Error(ErrorCode::malformed_input, "df-check on a projection system needs --K");
    const QuasiTreeSpace q(std::move(s), *k, rational_option(o.l).value_or(1));
    const auto pairs = sample_pairs(q.size(), samples, SeededRng(seed).split("df-check"));
    const std::optional<Rational> k_prime = find_lower_threshold(q, pairs);
    const DistanceFormulaReport rep = check_bbf_distance_formula(q, k_prime.value_or(q.k() * 20 + 1), pairs);
    Json report{{"kind", "quasitree"},
                {"K", to_json(rep.k)},
                {"K_prime", to_json(rep.k_prime)},
                {"K_prime_found", k_prime.has_value()},
                {"lower_failures", rep.lower_failures},
                {"upper_failures", rep.upper_failures},
                {"max_lower_ratio", rep.max_lower_ratio},
                {"max_upper_ratio", rep.max_upper_ratio},
                {"samples", pairs_json(pairs)}};
    const bool ok = k_prime && rep.lower_failures == 0 && rep.upper_failures == 0;
    return {report, ok ? exit_ok : exit_defects};
  }
  const Hierarchy h(io::instance_from_json(doc));
  const Rational s = rational_option(o.s).value_or(max(Rational(100) * h.e(), Rational(1)));
  const auto pairs = sample_pairs(h.ambient().size(), samples, SeededRng(seed).split("df-check"));
  const DistanceFormulaFit fit = distance_formula_fit(h, s, pairs);
  Json rows = Json::array();
  for (const auto& x : fit.samples) rows.push_back({x.x, x.y, x.distance, x.sum});
  Json report{{"kind", "instance"}, {"s", to_json(fit.s)}, {"A", fit.a}, {"B", fit.b}, {"samples", rows}};
  return {report, exit_ok};
}

Outcome psi(const Options& o) {
  const Hierarchy h(io::instance_from_json(load_input(o)));
  const ColouredSystem cs = coloured_system(h, o);
  const PsiImage image = psi_map(cs);
  const std::uint64_t seed = o.seed.value_or(1);
  const int samples = o.samples.value_or(200);
  const int n = h.ambient().size();
  const auto pairs = sample_pairs(n, samples, SeededRng(seed).split("psi-pairs"));
  std::vector<std::array<Vertex, 3>> triples;
  SeededRng rng = SeededRng(seed).split("psi-triples");
  for (int i = 0; i < samples; ++i) triples.push_back({rng.uniform(0, n - 1), rng.uniform(0, n - 1), rng.uniform(0, n - 1)});

  const EmbeddingReport emb = measure_embedding(cs, image, pairs);
  const QuasimedianReport qm = quasimedian_defect(cs, image, triples);
  Json histogram = Json::array();
  for (const auto& [defect, count] : qm.histogram) histogram.push_back({to_json(defect), count});
  Json colours = Json::array();
  for (int i = 0; i < cs.colours(); ++i) {
    colours.push_back({{"domains", cs.colouring.classes[i]},
                       {"least_theta", cs.quasitrees[i].least_theta()},
                       {"vertices", cs.quasitrees[i].size()},
                       {"connected", cs.quasitrees[i].connected()},
                       {"exact_median", static_cast<bool>(qm.exact_median[i])}});
  }
  Json tri = Json::array();
  for (const auto& t : triples) tri.push_back(t);
  Json report{{"parameters", parameters_json(cs.parameters)},
              {"colours", colours},
              {"basepoint", {{"max_slack", to_json(cs.max_basepoint_slack)}, {"violations", cs.basepoint_violations.size()}}},
              {"embedding",
               {{"kappa", emb.kappa}, {"kappa_upper", emb.kappa_upper}, {"kappa_lower", emb.kappa_lower}, {"additive", emb.additive}}},
              {"quasimedian", {{"max_defect", to_json(qm.max_defect)}, {"histogram", histogram}}},
              {"psi", image.psi},
              {"orbit", cs.orbit},
              {"samples", pairs_json(pairs)},
              {"triples", tri}};
  return {report, exit_ok};
}

Json promotion_json(const PromotionResult& p) {
  return {{"product_size", p.product.size()},
          {"points", p.points.size()},
          {"closure", p.connect.closure.size()},
          {"skeleton", to_json(p.skeleton)},
          {"dimension", p.skeleton.dimension()},
          {"hausdorff", p.hausdorff},
          {"one_connected", p.one_connected},
          {"median_closed", p.median_closed},
          {"isometric", p.isometric}};
}

bool promotion_ok(const PromotionResult& p) { return p.one_connected && p.median_closed && p.isometric; }

Outcome promote(const Options& o) {
  const Json doc = load_input(o);
  if (doc.is_object() && doc.contains("factors")) {
    std::vector<UnitGraph> factors;
    for (const Json& f : doc.at("factors")) factors.push_back(io::graph_from_json(f));
    const VertexSet points = make_vertex_set(doc.at("points").get<std::vector<Vertex>>());
    std::optional<Rational> c = rational_option(o.c);
    if (!c && doc.contains("C")) c = io::rational_from_json(doc.at("C"));
    if (!c || !c->is_integer()) throw Error(ErrorCode::malformed_input, "promote needs an integer C");
    const PromotionResult p = promote_to_cube_complex(std::move(factors), points, static_cast<int>(c->num()));
    Json report = promotion_json(p);
    report["C"] = c->num();
    return {report, promotion_ok(p) ? exit_ok : exit_defects};
  }
  const Hierarchy h(io::instance_from_json(doc));
  const ColouredSystem cs = coloured_system(h, o);
  const PsiImage image = psi_map(cs);
  const Pipeline p = build_pipeline(cs, image, o.seed.value_or(1));
  Json trees = Json::array();
  for (const TreeApproximation& t : p.trees) {
    trees.push_back({{"vertices", t.tree.size()},
                     {"root", t.root},
                     {"multiplicative", t.multiplicative},
                     {"additive", t.additive},
                     {"exhaustive", t.exhaustive}});
  }
  Json report = promotion_json(p.promotion);
  report["C"] = p.c;
  report["colours"] = cs.colours();
  report["trees"] = trees;
  report["phi"] = p.phi;
  report["parameters"] = parameters_json(cs.parameters);
  return {report, promotion_ok(p.promotion) ? exit_ok : exit_defects};
}

std::vector<VertexSet> load_sets(const std::string& path, const char* key) {
  if (path.empty()) throw Error(ErrorCode::malformed_input, std::string("--") + key + " is required");
  const Json doc = io::read_json_file(path);
  const Json& list = doc.is_object() ? doc.at(key) : doc;
  std::vector<VertexSet> out;
  for (const Json& s : list) out.push_back(make_vertex_set(s.get<std::vector<Vertex>>()));
  return out;
}

Outcome helly(const Options& o) {
  const Hierarchy h(io::instance_from_json(load_input(o)));
  const std::vector<VertexSet> sets = load_sets(o.sets, "sets");
  const auto r = rational_option(o.r);
  if (!r) throw Error(ErrorCode::malformed_input, "helly needs --R");
  const ColouredSystem cs = coloured_system(h, o);
  const Pipeline p = build_pipeline(cs, psi_map(cs), o.seed.value_or(1));
  const CoarseHellyResult res = coarse_helly_experiment(cs, p, sets, *r);
  Json report{{"R", to_json(*r)},
              {"center", res.center},
              {"r", res.r},
              {"inflation", res.inflation},
              {"helly_point", res.helly_point},
              {"pullback_distance", res.pullback_distance},
              {"sets", sets}};
  return {report, exit_ok};
}

Outcome pack(const Options& o) {
  const Hierarchy h(io::instance_from_json(load_input(o)));
  const std::vector<VertexSet> family = load_sets(o.family, "family");
  const auto r = rational_option(o.r);
  if (!r) throw Error(ErrorCode::malformed_input, "pack needs --R");
  const PackingResult res = bounded_packing_count(h, family, *r);
  Json report{{"R", to_json(*r)}, {"N", res.n}, {"members", res.members}, {"exact", res.exact}};
  return {report, exit_ok};
}

// Two-column rendering of the scalar top-level fields.
std::string render_table(const Json& report) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& [key, value] : report.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : report.items()) {
    os << key << std::string(width - key.size() + 2, ' ');
    if (value.is_array()) {
      os << "[" << value.size() << " entries]";
    } else if (value.is_object()) {
      os << "{" << value.size() << " fields}";
    } else {
      os << value.dump();
    }
    os << "\n";
  }
  return os.str();
}

void emit(const Json& report, const Options& o, std::ostream& out) {
  if (!o.out.empty()) {
    io::write_json_file(o.out, report);
  } else if (o.format == "table") {
    out << render_table(report);
  } else {
    out << io::dump(report);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"cubulate: median graphs, cube complexes and hierarchy experiments", "cubulate"};
  app.require_subcommand(1, 1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the report here (atomically) instead of stdout");
    sub->add_option("--config", o.config, "JSON with K, L, D, C, seed, samples");
    sub->add_option("--seed", o.seed, "Sampling seed");
    sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  };
  auto input = [&](CLI::App* sub) { sub->add_option("--in", o.in, "Input JSON")->required(); };
  auto embedding = [&](CLI::App* sub) {
    sub->add_option("--K", o.k, "Attachment threshold");
    sub->add_option("--L", o.l, "Attachment edge length");
    sub->add_option("--D", o.d, "Hierarchy path constant");
  };

  using Handler = std::function<Outcome(const Options&)>;
  std::vector<std::pair<CLI::App*, Handler>> handlers;

  CLI::App* gen = app.add_subcommand("gen-fixture", "Emit a fixture");
  gen->add_option("kind", o.kind,
                  "product-lines | tree-with-axes | spine | cube-walls | hypercube | grid | cycle | random-tree | adversarial-p1 | chain | tripod")
      ->required();
  gen->add_option("--n", o.n, "Size parameter");
  gen->add_option("--axes", o.axes, "Number of axes");
  gen->add_option("--d", o.dim, "Cube dimension");
  gen->add_option("--length", o.length, "Axis or leg length");
  gen->add_option("--rows", o.rows);
  gen->add_option("--cols", o.cols);
  common(gen);
  handlers.emplace_back(gen, gen_fixture);

  CLI::App* val = app.add_subcommand("validate", "Check an HHS instance or projection system");
  input(val);
  common(val);
  handlers.emplace_back(val, validate);

  CLI::App* med = app.add_subcommand("median-check", "Test whether a graph is median");
  input(med);
  common(med);
  handlers.emplace_back(med, median_check);

  CLI::App* du = app.add_subcommand("dual", "Dual cube complex of a wallspace");
  input(du);
  common(du);
  handlers.emplace_back(du, dual);

  CLI::App* bq = app.add_subcommand("build-quasitree", "Build the quasitree of a projection system");
  input(bq);
  bq->add_option("--K", o.k, "Attachment threshold");
  bq->add_option("--L", o.l, "Attachment edge length");
  common(bq);
  handlers.emplace_back(bq, build_quasitree);

  CLI::App* df = app.add_subcommand("df-check", "Distance formula measurements");
  input(df);
  df->add_option("--s", o.s, "Threshold");
  df->add_option("--samples", o.samples, "Sampled pairs");
  df->add_option("--K", o.k, "Attachment threshold (projection systems)");
  df->add_option("--L", o.l, "Attachment edge length (projection systems)");
  common(df);
  handlers.emplace_back(df, df_check);

  CLI::App* ps = app.add_subcommand("psi", "Embed into the product of colour quasitrees");
  input(ps);
  embedding(ps);
  ps->add_option("--samples", o.samples, "Sampled pairs and triples");
  common(ps);
  handlers.emplace_back(ps, psi);

  CLI::App* pr = app.add_subcommand("promote", "Promote a point set in a product of trees to a cube complex");
  input(pr);
  embedding(pr);
  pr->add_option("--C", o.c, "Connectivity constant");
  common(pr);
  handlers.emplace_back(pr, promote);

  CLI::App* he = app.add_subcommand("helly", "Coarse Helly experiment");
  input(he);
  embedding(he);
  he->add_option("--sets", o.sets, "JSON list of ambient vertex sets")->required();
  he->add_option("--R", o.r, "Closeness constant")->required();
  common(he);
  handlers.emplace_back(he, helly);

  CLI::App* pk = app.add_subcommand("pack", "Largest pairwise R-close subfamily");
  input(pk);
  pk->add_option("--family", o.family, "JSON list of disjoint ambient vertex sets")->required();
  pk->add_option("--R", o.r, "Closeness constant")->required();
  common(pk);
  handlers.emplace_back(pk, pack);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_usage;
  }

  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    try {
      merge_config(o);
      const Outcome result = handler(o);
      emit(result.report, o, out);
      return result.code;
    } catch (const Error& e) {
      err << sub->get_name() << ": " << e.what() << "\n";
      if (e.code() == ErrorCode::malformed_input) return exit_malformed;
      const Json report{{"error", {{"code", code_name(e.code())}, {"message", e.what()}, {"witness", e.witness()}}}};
      try {
        emit(report, o, out);
      } catch (const Error&) {
      }
      return exit_defects;
    } catch (const Json::exception& e) {
      err << sub->get_name() << ": malformed input: " << e.what() << "\n";
      return exit_malformed;
    }
  }
  err << app.help();
  return exit_usage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("cubulate");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cubulate::cli
