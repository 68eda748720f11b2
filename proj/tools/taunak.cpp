// taunak: command-line front end.
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "taunak/category.hpp"
#include "taunak/io.hpp"
#include "taunak/picture.hpp"
#include "taunak/smc.hpp"
#include "taunak/tors.hpp"

using namespace taunak;

namespace {

constexpr int kOk = 0, kInvalid = 1, kFailed = 2;

struct Config {
  int n = 0;
  std::vector<int> kupisch;
  std::string algebra_file;
  std::string out;
  std::string format = "json";
  int parallel = 1;
};

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AlgebraSpec load_spec(const Config& c) {
  if (!c.algebra_file.empty()) return load_spec_file(c.algebra_file);
  if (c.n == 0 && c.kupisch.empty()) throw InvalidInput("give --n and --kupisch, or --algebra");
  return validate_spec(c.n, c.kupisch);
}

// "M(1,2) M(2,1)" or repeated values; separators are whitespace, ';' and '⊔'.
std::vector<Indec> parse_list(const std::vector<std::string>& raw) {
  std::vector<Indec> out;
  for (std::string s : raw) {
    for (const std::string sep : {"⊔", ";"})
      for (size_t p; (p = s.find(sep)) != std::string::npos;) s.replace(p, sep.size(), " ");
    std::istringstream in(s);
    for (std::string tok; in >> tok;) out.push_back(parse_indec(tok));
  }
  return out;
}

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw InvalidInput("format '" + c.format + "' is not available for this command");
}

json stt_graph_json(const ExchangeGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"at", e.at}, {"replacement", e.replacement}, {"left", e.left}});
  return {{"count", g.vertices.size()}, {"vertices", g.vertices}, {"edges", edges}};
}

std::string stt_graph_dot(const ExchangeGraph& g) {
  std::ostringstream os;
  os << "digraph stt {\n";
  for (size_t v = 0; v < g.vertices.size(); ++v) os << "  v" << v << " [label=\"" << format_pair(g.vertices[v]) << "\"];\n";
  for (const auto& e : g.edges)
    if (e.left) os << "  v" << e.from << " -> v" << e.to << " [label=\"" << format_signed(e.at) << "\"];\n";
  os << "}\n";
  return os.str();
}

json hasse_json(const TorsLattice& lat) {
  json arrows = json::array();
  for (const auto& a : lat.arrows) arrows.push_back({{"from", a.from}, {"to", a.to}, {"label", a.label}});
  json xs = json::array();
  for (int v = 0; v < lat.size(); ++v) xs.push_back(x_of(lat, v));
  return {{"top", lat.top}, {"bottom", lat.bottom}, {"vertices", lat.vertices}, {"smc", xs}, {"arrows", arrows}};
}

struct Verdict {
  std::string name;
  bool ok = true;
  std::string detail;
};

std::vector<Verdict> verify_all(const AlgebraSpec& s, int workers) {
  std::vector<Verdict> out;
  Nakayama a(s);
  auto patterns = enumerate_maximal_patterns(s, workers);
  const auto& lat = build_lattice_cached(a);
  {
    std::set<SemibrickPair> xs, ps;
    for (int v = 0; v < lat.size(); ++v) xs.insert(x_of(lat, v));
    for (const auto& p : patterns) ps.insert(canonical(pair_of(p)));
    out.push_back({"smc_bijection", xs == ps && static_cast<int>(xs.size()) == lat.size(),
                   std::to_string(ps.size()) + " patterns, " + std::to_string(lat.size()) + " torsion classes"});
  }
  {
    bool ok = true;
    for (const auto& p : patterns) ok = ok && is_2smc(s, pair_of(p)).agree();
    out.push_back({"smc_characterizations", ok, ""});
  }
  ClusterCategory cat(s);
  {
    bool ok = true;
    std::string detail;
    for (const auto& w : cat.objects()) {
      if (w.rank() == 0) continue;
      const auto& local = build_lattice_cached(w.local);
      for (int v = 0; v < local.size(); ++v) {
        MorphW f{w.simples, realize(a, w, local.vertices[v])};
        std::set<SignedIndec> want, got;
        for (const auto& x : x_of(local, v).signed_members()) want.insert(realize(a, w, x));
        for (const auto& g : cat.last_factors(f)) got.insert(cat.br_inverse(g));
        if (want != got && ok) detail = format_morphism(f);
        ok = ok && want == got;
      }
    }
    out.push_back({"last_factors", ok, detail});
  }
  {
    auto r = check_cubical(cat, s.n <= 4);
    out.push_back({"cubical", r.ok(), r.violation});
  }
  {
    auto r = verify_presentation(s, workers);
    out.push_back({"picture_group", r.ok(), r.failures.empty() ? "" : r.failures.front()});
  }
  {
    auto c = build_cube_complex(cat, workers);
    std::string detail;
    for (const auto& l : c.links)
      if (!l.ok() && detail.empty()) detail = l.detail;
    out.push_back({"flag_links", c.flag(), detail});
  }
  return out;
}

class Output {
 public:
  explicit Output(const Config& c) : path_(c.out) {}
  void write(const std::string& text) {
    if (path_.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream f(path_);
    if (!f) throw InvalidInput("cannot write " + path_);
    f << text;
  }
  void write(const json& j) { write(j.dump(2) + "\n"); }

 private:
  std::string path_;
};

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Tau-tilting combinatorics of Nakayama algebras"};
  app.add_option("--n", cfg.n, "number of vertices");
  app.add_option("--kupisch", cfg.kupisch, "Kupisch series, comma separated")->delimiter(',');
  app.add_option("--algebra", cfg.algebra_file, "JSON spec file {\"n\":..,\"kupisch\":[..]}");
  app.add_option("--out", cfg.out, "write the result to this file");
  app.add_option("--format", cfg.format, "json, dot, tikz or text")
      ->check(CLI::IsMember({"json", "dot", "tikz", "text"}));
  app.add_option("--parallel", cfg.parallel, "worker count")->check(CLI::PositiveNumber);
  app.require_subcommand(1);
  app.fallthrough();

  auto* info = app.add_subcommand("info", "spec summary");
  auto* bricks = app.add_subcommand("bricks", "list bricks");
  auto* arcs_cmd = app.add_subcommand("arcs", "list arcs");

  auto* smc = app.add_subcommand("smc", "2-simple-minded collections");
  smc->require_subcommand(1);
  auto* smc_enum = smc->add_subcommand("enumerate", "all maximal admissible arc patterns");
  std::vector<std::string> positive, negative;
  std::string at;
  auto* smc_check = smc->add_subcommand("check", "test a semibrick pair");
  smc_check->add_option("--positive", positive, "bricks of S_p");
  smc_check->add_option("--negative", negative, "bricks of S_n");
  auto* smc_mut = smc->add_subcommand("mutate", "left mutation of a 2-smc");
  smc_mut->add_option("--positive", positive, "bricks of S_p");
  smc_mut->add_option("--negative", negative, "bricks of S_n");
  smc_mut->add_option("--at", at, "brick of S_p to mutate at")->required();

  auto* stt = app.add_subcommand("stt", "support tau-tilting pairs");
  stt->require_subcommand(1);
  auto* stt_graph = stt->add_subcommand("graph", "exchange graph");

  auto* tors = app.add_subcommand("tors", "lattice of torsion classes");
  tors->require_subcommand(1);
  auto* tors_hasse = tors->add_subcommand("hasse", "brick-labeled Hasse diagram");
  auto* tors_poly = tors->add_subcommand("polygons", "polygons of the lattice");
  auto* tors_mgs = tors->add_subcommand("mgs", "maximal green sequences");

  auto* group = app.add_subcommand("group", "picture group");
  group->require_subcommand(1);
  std::string style = "polygon";
  auto* group_present = group->add_subcommand("present", "presentation");
  group_present->add_option("--style", style, "polygon, path, mgs or coset")
      ->check(CLI::IsMember({"polygon", "path", "mgs", "coset"}));
  auto* group_verify = group->add_subcommand("verify", "check the presentation in the brick algebra");

  auto* complex = app.add_subcommand("complex", "cube complex of the category");
  complex->require_subcommand(1);
  auto* complex_build = complex->add_subcommand("build", "cube and cell counts");
  auto* complex_cat0 = complex->add_subcommand("check-cat0", "flag condition on every link");

  auto* verify = app.add_subcommand("verify", "cross-pipeline checks");
  bool verify_every = false;
  verify->add_flag("--all", verify_every, "run every check")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    const AlgebraSpec spec = load_spec(cfg);
    const Nakayama alg(spec);
    Output out(cfg);

    if (info->parsed()) {
      require_format(cfg, {"json", "text"});
      json j{{"spec", spec},
             {"name", spec.name()},
             {"linear", spec.linear()},
             {"indecomposables", alg.indecomposables().size()},
             {"bricks", alg.bricks().size()},
             {"projectives", alg.projectives()}};
      if (cfg.format == "text") {
        std::ostringstream os;
        os << spec.name() << ": " << alg.indecomposables().size() << " indecomposables, " << alg.bricks().size()
           << " bricks\n";
        out.write(os.str());
      } else {
        out.write(j);
      }
      return kOk;
    }
    if (bricks->parsed()) {
      require_format(cfg, {"json", "text"});
      if (cfg.format == "text") {
        std::string s;
        for (auto b : alg.bricks()) s += format_indec(b) + "\n";
        out.write(s);
      } else {
        out.write(json(alg.bricks()));
      }
      return kOk;
    }
    if (arcs_cmd->parsed()) {
      require_format(cfg, {"json", "text"});
      json j = json::array();
      std::string text;
      for (auto a : arcs(spec)) {
        j.push_back({{"source", a.source},
                     {"length", a.length},
                     {"target", target(spec, a)},
                     {"loop", is_loop(spec, a)},
                     {"brick", module_of(a)}});
        text += std::to_string(a.source) + " -> " + std::to_string(target(spec, a)) + "  " +
                format_indec(module_of(a)) + "\n";
      }
      cfg.format == "text" ? out.write(text) : out.write(j);
      return kOk;
    }
    if (smc_enum->parsed()) {
      require_format(cfg, {"json", "tikz", "text"});
      auto patterns = enumerate_maximal_patterns(spec, cfg.parallel);
      if (cfg.format == "tikz") {
        std::string s;
        for (const auto& p : patterns) s += "% " + format_pair(pair_of(p)) + "\n" + pattern_tikz(spec, p);
        out.write(s);
      } else if (cfg.format == "text") {
        std::string s;
        for (const auto& p : patterns) s += format_pair(pair_of(p)) + "\n";
        out.write(s);
      } else {
        json list = json::array();
        for (const auto& p : patterns) {
          json entry = p;
          entry["smc"] = pair_of(p);
          list.push_back(entry);
        }
        out.write(json{{"count", patterns.size()}, {"patterns", list}});
      }
      return kOk;
    }
    if (smc_check->parsed()) {
      require_format(cfg, {"json", "tikz"});
      SemibrickPair p = canonical(SemibrickPair{parse_list(positive), parse_list(negative)});
      for (auto b : p.positive) if (!alg.valid(b)) throw InvalidInput("not a module: " + format_indec(b));
      for (auto b : p.negative) if (!alg.valid(b)) throw InvalidInput("not a module: " + format_indec(b));
      auto sb = is_semibrick_pair(alg, p);
      auto mc = is_mutation_compatible(alg, p);
      Completion c = sb ? is_completable(spec, p) : Completion{};
      if (cfg.format == "tikz") {
        if (!c.completion) throw InvalidInput("no completion to draw");
        out.write(pattern_tikz(spec, pattern_of(*c.completion)));
        return kOk;
      }
      json j{{"pair", p},
             {"semibrick_pair", sb.ok},
             {"mutation_compatible", sb.ok && mc.ok},
             {"completable", c.completable},
             {"completion", c.completion ? json(*c.completion) : json(nullptr)}};
      if (!sb.ok) j["reason"] = sb.reason;
      else if (!mc.ok) j["reason"] = mc.reason;
      if (sb.ok && p.size() == static_cast<size_t>(spec.n)) j["is_2smc"] = is_2smc(spec, p).value();
      out.write(j);
      return kOk;
    }
    if (smc_mut->parsed()) {
      require_format(cfg, {"json", "text"});
      SemibrickPair p = canonical(SemibrickPair{parse_list(positive), parse_list(negative)});
      auto v = is_2smc(spec, p);
      if (!v.value()) throw InvalidInput("not a 2-simple-minded collection: " + format_pair(p));
      auto m = mutate_smc(spec, p, parse_indec(at));
      cfg.format == "text" ? out.write(format_pair(m)) : out.write(json(m));
      return kOk;
    }
    if (stt_graph->parsed()) {
      require_format(cfg, {"json", "dot"});
      const auto& g = all_stt_cached(alg);
      cfg.format == "dot" ? out.write(stt_graph_dot(g)) : out.write(stt_graph_json(g));
      return kOk;
    }
    if (tors_hasse->parsed() || tors_poly->parsed() || tors_mgs->parsed()) {
      const auto& lat = build_lattice_cached(alg);
      if (tors_hasse->parsed()) {
        require_format(cfg, {"json", "dot"});
        cfg.format == "dot" ? out.write(lattice_dot(lat)) : out.write(hasse_json(lat));
      } else if (tors_poly->parsed()) {
        require_format(cfg, {"json"});
        out.write(polygons_json(lat));
      } else {
        require_format(cfg, {"json", "text"});
        auto seqs = maximal_green_sequences(lat);
        if (cfg.format == "text") {
          std::string s;
          for (const auto& w : seqs) s += format_word(word_of(w)) + "\n";
          out.write(s);
        } else {
          out.write(json(seqs));
        }
      }
      return kOk;
    }
    if (group_present->parsed()) {
      require_format(cfg, {"json", "text"});
      auto p = presentation(build_lattice_cached(alg), parse_style(style));
      cfg.format == "text" ? out.write(format_presentation(p)) : out.write(json(p));
      return kOk;
    }
    if (group_verify->parsed()) {
      require_format(cfg, {"json"});
      auto r = verify_presentation(spec, cfg.parallel);
      out.write(json{{"ok", r.ok()},
                     {"relations", r.relations},
                     {"generators", r.generators},
                     {"path_invariant", r.path_invariant},
                     {"cosets_distinct", r.cosets_distinct},
                     {"relations_checked", r.relations_checked},
                     {"failures", r.failures}});
      return r.ok() ? kOk : kFailed;
    }
    if (complex_build->parsed() || complex_cat0->parsed()) {
      ClusterCategory cat(spec);
      if (complex_build->parsed() && cfg.format == "dot") {
        out.write(complex_dot(cat));
        return kOk;
      }
      require_format(cfg, {"json"});
      auto c = build_cube_complex(cat, cfg.parallel);
      if (complex_build->parsed()) {
        out.write(complex_json(c));
        return kOk;
      }
      json failures = json::array();
      for (const auto& l : c.links)
        if (!l.ok()) failures.push_back({{"vertex", l.vertex}, {"detail", l.detail}});
      out.write(json{{"flag", c.flag()}, {"links", c.links.size()}, {"failures", failures}});
      return c.flag() ? kOk : kFailed;
    }
    if (verify->parsed()) {
      require_format(cfg, {"json", "text"});
      auto results = verify_all(spec, cfg.parallel);
      bool ok = true;
      json checks = json::object();
      std::string text;
      for (const auto& v : results) {
        ok = ok && v.ok;
        checks[v.name] = {{"ok", v.ok}, {"detail", v.detail}};
        text += std::string(v.ok ? "PASS " : "FAIL ") + v.name + (v.detail.empty() ? "" : ": " + v.detail) + "\n";
      }
      cfg.format == "text" ? out.write(text) : out.write(json{{"ok", ok}, {"checks", checks}});
      return ok ? kOk : kFailed;
    }
  } catch (const SpecError& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kInvalid;
}
