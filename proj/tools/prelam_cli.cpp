#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <prelam/prelam.hpp>

using namespace prelam;

namespace {

struct Failure {
  int code;
};

class Output {
 public:
  void open(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) fail(ErrorKind::Parse, "cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void line(const json& j) { stream() << j.dump() << "\n"; }

 private:
  std::ofstream file_;
};

json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Parse, "cannot read " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
}

bool is_presentation(const json& j) { return j.is_object() && (j.contains("edges") || j.contains("switches") || j.contains("points")); }

PlanarPresentation presentation_or_leafspace(const json& j) {
  if (is_presentation(j)) return presentation_from_json(j);
  return build_leaf_space(lamination_from_json(j)).presentation;
}

json arc_json(const Arc& a) { return json{{"arc", json::array({a.start.str(), a.end.str()})}}; }

json region_json(const RegionReport& r) {
  json boundary = json::array();
  for (auto& b : r.boundary) {
    if (auto* c = std::get_if<Chord>(&b)) boundary.push_back(json{{"chord", chord_to_json(*c)}});
    else boundary.push_back(arc_json(std::get<Arc>(b)));
  }
  json j{{"face", r.face}, {"kind", kind_name(r.kind)}, {"boundary", boundary}, {"full_circle", r.full_circle}};
  if (r.root) j["root"] = chord_to_json(*r.root);
  if (r.spec >= 0) j["spec"] = r.spec;
  return j;
}

json gap_json(const GapLabel& g) {
  json j{{"kind", kind_name(g.kind)}, {"lo", to_string(g.lo)}, {"hi", to_string(g.hi)}, {"r", to_string(g.r)}, {"phi", phi(g)}};
  if (g.kind == GapLabel::Kind::CantorCopy) {
    j["n"] = g.n;
    j["s"] = to_string(g.s);
  }
  if (g.kind == GapLabel::Kind::InterBlock) j["k"] = g.k;
  if (auto m = marked_point(g)) j["marked"] = to_string(m->x);
  return j;
}

std::uint64_t seed_of(long long s) {
  if (s < 0) fail(ErrorKind::DomainError, "seed must be non-negative");
  return static_cast<std::uint64_t>(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pre-laminations of the circle, their leaf spaces and the universal planar structure"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write output here instead of stdout");
  Output out;

  std::string file, file2;
  std::string eps_s, delta_s, res_s = "1/16", r_s;
  std::optional<int> budget;
  int depth = 8;
  std::vector<std::string> window{"-12", "12"};
  std::size_t bound = kDefaultIsoBound;
  bool with_log = false, with_report = false, counterexample = false;
  std::string family = "prong", mutation;
  int k = 3, m = 2, size = 512, max_switches = 20;
  long long seed = 0;

  auto add_file = [&](CLI::App* sc) { sc->add_option("file", file, "input JSON, - for stdin")->required(); };

  auto* validate_cmd = app.add_subcommand("validate", "check structural validity of a lamination, raw lamination or presentation");
  add_file(validate_cmd);
  auto* regions_cmd = app.add_subcommand("regions", "complementary regions of a lamination, one JSON line each");
  add_file(regions_cmd);
  auto* classify_cmd = app.add_subcommand("classify", "run the property suite");
  add_file(classify_cmd);
  classify_cmd->add_option("--eps", eps_s, "density resolution")->required();
  classify_cmd->add_option("--delta", delta_s, "accumulation threshold")->required();
  classify_cmd->add_option("--budget", budget, "override the exceptions budget");
  auto* complete_cmd = app.add_subcommand("complete", "annotate a raw lamination");
  add_file(complete_cmd);
  auto* leafspace_cmd = app.add_subcommand("leafspace", "presentation of the leaf space of a lamination");
  add_file(leafspace_cmd);
  auto* axioms_cmd = app.add_subcommand("check-axioms", "check the planar structure axioms of a presentation or leaf space");
  add_file(axioms_cmd);
  auto* iso_cmd = app.add_subcommand("isomorphic", "search an isomorphism between two presentations or leaf spaces");
  add_file(iso_cmd);
  iso_cmd->add_option("file2", file2, "second input")->required();
  iso_cmd->add_option("--bound", bound, "search node bound");
  auto* embed_cmd = app.add_subcommand("embed", "embed a presentation into the universal structure");
  add_file(embed_cmd);
  embed_cmd->add_flag("--log", with_log, "include the expansion log");
  auto* cantor_cmd = app.add_subcommand("cantor-slice", "gaps of one slice of the Cantor grid");
  cantor_cmd->add_option("--r", r_s, "level p/q")->required();
  cantor_cmd->add_option("--window", window, "lo hi")->expected(2);
  cantor_cmd->add_option("--depth", depth, "Cantor depth");
  cantor_cmd->add_flag("--report", with_report, "append the slice order report");
  auto* corpus_cmd = app.add_subcommand("corpus", "generated instances");
  corpus_cmd->require_subcommand(1);
  auto* gen_cmd = corpus_cmd->add_subcommand("gen", "emit one generated instance");
  gen_cmd->add_option("--family", family, "prong, shell-family, trivial, regular, random-raw or presentation")
      ->check(CLI::IsMember({"prong", "shell-family", "trivial", "regular", "random-raw", "presentation"}));
  gen_cmd->add_option("--k", k, "prong degree");
  gen_cmd->add_option("--m", m, "shell boundary size");
  gen_cmd->add_option("--resolution", res_s, "filler resolution");
  gen_cmd->add_option("--seed", seed, "seed");
  gen_cmd->add_option("--mutate", mutation, "share-star-edge, shrink-root, break-order or drop-annotation");
  gen_cmd->add_option("--delta", delta_s, "threshold used by shrink-root");
  gen_cmd->add_option("--max-switches", max_switches, "presentation size bound");
  gen_cmd->add_flag("--counterexample", counterexample, "random-raw with one region bounded by leaves only");
  auto* render_cmd = app.add_subcommand("render", "SVG picture of a lamination");
  add_file(render_cmd);
  render_cmd->add_option("--size", size, "canvas size in pixels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    out.open(out_path);
    if (*validate_cmd) {
      json j = read_json(file);
      std::string kind;
      if (is_presentation(j)) {
        validate(presentation_from_json(j));
        kind = "presentation";
      } else if (j.is_object() && j.contains("virtual")) {
        validate(raw_from_json(j));
        kind = "raw";
      } else {
        validate(lamination_from_json(j));
        kind = "lamination";
      }
      out.line(json{{"valid", true}, {"kind", kind}});
    } else if (*regions_cmd) {
      for (auto& r : regions(lamination_from_json(read_json(file)))) out.line(region_json(r));
    } else if (*classify_cmd) {
      AnnotatedLamination al = lamination_from_json(read_json(file));
      if (budget) al.exceptions = *budget;
      PropertyReport rep = classify(al, parse_rational(eps_s), parse_rational(delta_s));
      out.line(to_json(rep));
      if (!rep.pass()) throw Failure{1};
    } else if (*complete_cmd) {
      out.line(to_json(complete(raw_from_json(read_json(file)))));
    } else if (*leafspace_cmd) {
      out.line(to_json(build_leaf_space(lamination_from_json(read_json(file))).presentation));
    } else if (*axioms_cmd) {
      AxiomReport rep = check_axioms(presentation_or_leafspace(read_json(file)));
      out.line(to_json(rep));
      if (!rep.pass()) throw Failure{1};
    } else if (*iso_cmd) {
      json a = read_json(file), b = read_json(file2);
      if (!is_presentation(a) && !is_presentation(b)) {
        AnnotatedLamination l1 = lamination_from_json(a), l2 = lamination_from_json(b);
        auto isos = all_isomorphisms(build_leaf_space(l1).presentation, build_leaf_space(l2).presentation, bound);
        for (auto& iso : isos) {
          try {
            auto f = induced_circle_map(iso, l1, l2);
            json cm = json::object();
            for (auto& [x, y] : f) cm[x.str()] = y.str();
            out.line(json{{"isomorphic", true}, {"witness", to_json(iso)}, {"circle_map", cm}});
            return 0;
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotMonotone) throw;
          }
        }
        out.line(json{{"isomorphic", false}, {"orientation_reversing", !isos.empty()}});
        throw Failure{1};
      }
      auto iso = isomorphic(presentation_or_leafspace(a), presentation_or_leafspace(b), bound);
      if (!iso) {
        out.line(json{{"isomorphic", false}});
        throw Failure{1};
      }
      out.line(json{{"isomorphic", true}, {"witness", to_json(*iso)}});
    } else if (*embed_cmd) {
      PlanarPresentation p = presentation_or_leafspace(read_json(file));
      UniversalModel model;
      EmbeddingMap map = embed(p, model);
      EmbedVerdict v = verify_embedding(p, model, map);
      json j{{"pass", v.pass}, {"addresses", map.addresses()}, {"witnesses", v.witnesses}};
      if (with_log) j["log"] = model.log();
      out.line(j);
      if (!v.pass) throw Failure{1};
    } else if (*cantor_cmd) {
      Rational r = parse_rational(r_s), lo = parse_rational(window[0]), hi = parse_rational(window[1]);
      for (auto& g : slice_gaps(r, lo, hi, depth)) out.line(gap_json(g));
      if (with_report) {
        SliceOrderReport rep = slice_order_report(r, lo, hi, depth);
        json by_block = json::object();
        for (auto& [n, vals] : rep.psi_by_block) by_block[std::to_string(n)] = vals;
        out.line(json{{"report", {{"pass", rep.pass}, {"q_like", rep.q_like}, {"witnesses", rep.witnesses}, {"psi_by_block", by_block},
                                  {"left_of_centre", rep.left_of_centre}, {"right_of_centre", rep.right_of_centre}}}});
        if (!rep.pass) throw Failure{1};
      }
    } else if (*gen_cmd) {
      std::uint64_t s = seed_of(seed);
      Rational res = parse_rational(res_s);
      if (family == "presentation") {
        out.line(to_json(gen_presentation(s, max_switches)));
      } else if (family == "random-raw") {
        out.line(to_json(gen_random_raw(s, res, counterexample).raw));
      } else if (family == "regular") {
        auto [raw, c1, c2] = gen_regular_two_completions(res);
        out.line(json{{"raw", to_json(raw)}, {"completions", json::array({to_json(c1), to_json(c2)})}});
      } else {
        AnnotatedLamination al = family == "prong" ? gen_prong(k, res, s) : family == "shell-family" ? gen_shell_family(m, res, s) : gen_trivial(res, s);
        if (!mutation.empty()) al = mutate(al, parse_mutation(mutation), delta_s.empty() ? Rational(0) : parse_rational(delta_s));
        out.line(to_json(al));
      }
    } else if (*render_cmd) {
      RenderStyle style;
      style.size = size;
      out.stream() << render(lamination_from_json(read_json(file)), style);
    }
  } catch (const Failure& f) {
    return f.code;
  } catch (const Error& e) {
    out.line(json{{"error", kind_name(e.kind())}, {"message", e.what()}});
    return e.kind() == ErrorKind::PreconditionViolated ? 1 : 2;
  }
  return 0;
}
