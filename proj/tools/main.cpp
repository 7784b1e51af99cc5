// springer: command-line front end to the library.
//
// Exit status: 0 success, 1 usage, 2 domain error, 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <sstream>

#include "springer/action.hpp"
#include "springer/cache.hpp"
#include "springer/cells.hpp"
#include "springer/diagram.hpp"
#include "springer/error.hpp"
#include "springer/homology.hpp"
#include "springer/render.hpp"
#include "springer/skein.hpp"
#include "springer/specht.hpp"
#include "springer/subspace.hpp"
#include "springer/verify.hpp"

using namespace springer;
using nlohmann::json;

namespace {

constexpr int kVerificationFailure = 3;

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  int n = 0, k = 0, m = 0, n_max = 4;
  std::string a, b, sigma, klass, tie = "lex", format = "ascii", suite, top, bottom;
  bool all = false, primed = false, rewrite = false, via_presentation = false;
};

std::string str(long long v) { return std::to_string(v); }

template <class T>
json strings(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(std::to_string(x));
  return out;
}

Matching undotted(const std::string& text) { return parse_matching(text).base(); }
std::string codec(const Matching& m) { return format(DottedMatching::all_undotted(m)); }

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error(ErrorCode::SyntaxError, "not an integer: " + tok);
    }
  }
  return out;
}

void require_type(const HomClass& x, int n, int k) {
  if (x.is_zero()) return;
  if (x.n() != n || x.k() != k)
    throw Error(ErrorCode::TypeMismatch, "class has type (" + str(x.n() - x.k()) + "," + str(x.k()) + "), expected (" +
                                             str(n - k) + "," + str(k) + ")");
}

json matrix_json(const linalg::Matrix& mat) {
  json rows = json::array();
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(mat(r, c).get_str());
    rows.push_back(row);
  }
  return rows;
}

// Each command returns its result as JSON plus a text rendering.
struct Output {
  json data;
  std::string text;
  int status = 0;
};

Output run_enumerate(const Options& o) {
  Output out{json::array(), ""};
  for (const auto& a : enumerate(o.n, o.k)) {
    out.data.push_back(codec(a));
    out.text += codec(a) + "\n";
  }
  return out;
}

Output run_validate(const Options& o) {
  auto d = parse_matching(o.a);
  return {{{"valid", "true"}, {"matching", format(d)}, {"standard", d.is_standard() ? "true" : "false"}},
          format(d) + "\nvalid" + (d.is_standard() ? ", standard" : "") + "\n"};
}

Output run_complete(const Options& o) {
  auto c = format(complete(parse_matching(o.a)));
  return {{{"matching", c}}, c + "\n"};
}

Output run_restrict(const Options& o) {
  auto r = codec(restrict_to(undotted(o.a), o.k));
  return {{{"matching", r}}, r + "\n"};
}

Output run_tableau(const Options& o) {
  auto t = tableau_of(parse_matching(o.a));
  std::string text = "top:";
  for (int v : t.top) text += " " + str(v);
  text += "\nbottom:";
  for (int v : t.bottom) text += " " + str(v);
  return {{{"top", strings(t.top)}, {"bottom", strings(t.bottom)}}, text + "\n"};
}

Output run_matching(const Options& o) {
  StandardTableau t{parse_ints(o.top), parse_ints(o.bottom)};
  auto d = format(matching_of(t, o.k));
  return {{{"matching", d}}, d + "\n"};
}

Output run_glue(const Options& o) {
  auto g = glue(undotted(o.a), undotted(o.b));
  Output out{{{"circles", str(g.circle_count())}, {"lines", str(g.line_count())}, {"components", json::array()}}, ""};
  for (const auto& c : g.components) {
    out.data["components"].push_back({{"circle", c.circle ? "true" : "false"}, {"vertices", strings(c.vertices)}});
    out.text += c.circle ? "circle" : "line  ";
    for (int v : c.vertices) out.text += " " + str(v);
    out.text += "\n";
  }
  return out;
}

Output run_distance(const Options& o) {
  auto d = distance(undotted(o.a), undotted(o.b));
  if (!d) return {{{"distance", nullptr}}, "not compatible\n"};
  return {{{"distance", str(*d)}}, str(*d) + "\n"};
}

TieBreak tie_break(const std::string& name) {
  if (name == "lex") return TieBreak::Lex;
  if (name == "reverse") return TieBreak::ReverseLex;
  if (name == "random") return TieBreak::Random;
  throw Error(ErrorCode::DomainError, "unknown tie-break " + name);
}

Output run_order(const Options& o) {
  Output out{json::array(), ""};
  for (const auto& a : linear_order(o.n, o.k, tie_break(o.tie), o.seed)) {
    out.data.push_back(codec(a));
    out.text += codec(a) + "\n";
  }
  return out;
}

Output run_sequence(const Options& o) {
  auto seq = minimal_sequence(undotted(o.a), undotted(o.b));
  Output out{{{"length", str(seq.length())}, {"steps", json::array()}, {"directions", json::array()}}, ""};
  for (std::size_t t = 0; t < seq.steps.size(); ++t) {
    out.data["steps"].push_back(codec(seq.steps[t]));
    if (t > 0) {
      bool fwd = seq.forward[t - 1];
      out.data["directions"].push_back(fwd ? "->" : "<-");
      out.text += fwd ? "  -> " : "  <- ";
    } else {
      out.text += "     ";
    }
    out.text += codec(seq.steps[t]) + "\n";
  }
  out.text += "length " + str(seq.length()) + "\n";
  return out;
}

Output run_meet(const Options& o) {
  auto c = codec(meet(undotted(o.a), undotted(o.b)));
  return {{{"meet", c}}, c + "\n"};
}

Output run_intersect(const Options& o) {
  auto v = o.primed ? Variant::Primed : Variant::Plain;
  auto s = subspace_of(undotted(o.a), v).intersect(subspace_of(undotted(o.b), v));
  if (s.empty()) return {{{"empty", "true"}}, "empty\n"};
  return {{{"empty", "false"}, {"dimension", str(s.dimension())}, {"point", s.to_string()}},
          s.to_string() + "  (dimension " + str(s.dimension()) + ")\n"};
}

Output run_betti(const Options& o) {
  auto ranks = o.via_presentation ? presentation_betti(o.n, o.k) : betti(o.n, o.k);
  std::string text;
  for (std::size_t m = 0; m < ranks.size(); ++m) text += "H_" + str(2 * m) + ": " + str(ranks[m]) + "\n";
  return {{{"ranks", strings(ranks)}}, text};
}

Output run_reduce(const Options& o) {
  auto x = parse_class(o.klass);
  auto r = o.rewrite ? reduce_by_rewriting(x, o.seed) : reduce_to_class(x);
  return {{{"class", r.to_string()}}, r.to_string() + "\n"};
}

Output run_relations(const Options& o) {
  static const char* names[] = {"I", "II", "III"};
  Output out{json::array(), ""};
  for (const auto& r : typed_relation_instances(o.n, o.k, o.m)) {
    auto name = names[static_cast<int>(r.type)];
    out.data.push_back({{"type", name}, {"relation", r.value.to_string()}});
    out.text += std::string(name) + ": " + r.value.to_string() + "\n";
  }
  return out;
}

Output run_act(const Options& o) {
  auto x = parse_class(o.klass);
  require_type(x, o.n, o.k);
  auto y = act(parse_permutation(o.sigma, o.n), x);
  return {{{"class", y.to_string()}}, y.to_string() + "\n"};
}

Output run_matrix(const Options& o) {
  auto sigma = parse_permutation(o.sigma, o.n);
  auto mat = cached_rep_matrix(cache_dir(), sigma, o.k, o.m);
  json basis = json::array();
  std::string text;
  for (const auto& d : standard_basis(o.n, o.k, o.m)) {
    basis.push_back(format(d));
    text += "# " + format(d) + "\n";
  }
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    for (std::size_t c = 0; c < mat.cols(); ++c) text += (c ? " " : "") + mat(r, c).get_str();
    text += "\n";
  }
  return {{{"n", str(o.n)}, {"k", str(o.k)}, {"m", str(o.m)}, {"permutation", sigma.key()}, {"basis", basis},
           {"matrix", matrix_json(mat)}},
          text};
}

Output run_character(const Options& o) {
  auto rep = character_table_check(o.n, o.k);
  auto classes = partitions_of(o.n);
  Output out{{{"classes", json::array()}, {"traces", json::array()}, {"ok", rep.ok() ? "true" : "false"}}, ""};
  out.text = "class";
  for (const auto& c : classes) {
    std::string label;
    for (int p : c) label += (label.empty() ? "" : ",") + str(p);
    out.data["classes"].push_back(label);
    out.text += "  (" + label + ")";
  }
  out.text += "\n";
  for (std::size_t m = 0; m < rep.traces.size(); ++m) {
    out.data["traces"].push_back(strings(rep.traces[m]));
    out.text += "H_" + str(2 * m);
    for (auto t : rep.traces[m]) out.text += "  " + str(t);
    out.text += "\n";
  }
  for (const auto& f : rep.failures) out.text += "FAIL " + f + "\n";
  out.status = rep.ok() ? 0 : kVerificationFailure;
  return out;
}

Output run_chart(const Options& o) {
  auto chart = derive_chart(o.n, o.k);
  Output out{{{"entries", json::array()}, {"ok", chart.ok() ? "true" : "false"}}, ""};
  for (const auto& e : chart.entries) {
    auto n = str(static_cast<int>(e.kind));
    out.data["entries"].push_back(
        {{"case", n}, {"description", std::string(case_description(e.kind))}, {"i", str(e.i)}, {"input", format(e.input)}, {"output", e.output.to_string()}});
    out.text += "case " + n + "  s" + str(e.i) + " " + format(e.input) + "  ->  " + e.output.to_string() + "\n";
  }
  for (const auto& f : chart.failures) out.text += "FAIL " + f + "\n";
  out.status = chart.ok() ? 0 : kVerificationFailure;
  return out;
}

Output run_skein(const Options& o) {
  auto x = reduce_to_class(parse_class(o.klass));
  require_type(x, o.n, o.k);
  auto sigma = parse_permutation(o.sigma, o.n);
  calibrate(o.n_max);
  HomClass y(x.n(), x.k());
  for (const auto& [d, c] : x.terms()) y += skein_act(sigma, d) * c;
  bool agrees = y == act(sigma, x);
  Output out{{{"class", y.to_string()}, {"agrees", agrees ? "true" : "false"}},
             y.to_string() + "\n" + (agrees ? "agrees with the Specht route\n" : "DISAGREES with the Specht route\n")};
  out.status = agrees ? 0 : kVerificationFailure;
  return out;
}

Output run_calibrate(const Options& o) {
  auto skein = calibrate(o.n_max);
  const auto& gamma = gamma_calibration();
  Output out{{{"skein", skein.convention.label()}, {"skein_fits", str(skein.fitting.size())},
              {"gamma", gamma.convention.label()}, {"gamma_fits", str(gamma.fitting.size())}},
             ""};
  out.text = "skein: " + skein.convention.label() + " (" + str(skein.fitting.size()) + " fitting, n <= " +
             str(o.n_max) + ")\ngamma: " + gamma.convention.label() + " (" + str(gamma.fitting.size()) + " fitting)\n";
  if (skein.ambiguous()) out.text += "warning: skein convention not unique at this size\n";
  return out;
}

Output run_verify(const Options& o) {
  std::vector<SuiteResult> results;
  if (o.all || o.suite.empty())
    results = verify_all(o.n_max, o.seed);
  else
    results.push_back(run_suite(o.suite, o.n_max, o.seed));
  Output out{json::array(), ""};
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.ok;
    out.data.push_back({{"suite", r.name}, {"ok", r.ok ? "true" : "false"}, {"checks", str(r.checks)},
                        {"failure", r.first_failure}});
    out.text += std::string(r.ok ? "PASS " : "FAIL ") + r.name + " (" + str(r.checks) + " checks)" +
                (r.ok ? "" : ": " + r.first_failure) + "\n";
  }
  out.status = ok ? 0 : kVerificationFailure;
  return out;
}

Output run_render(const Options& o) {
  if (o.format != "ascii" && o.format != "svg") throw Error(ErrorCode::DomainError, "unknown format " + o.format);
  auto x = parse_class(o.a);
  bool single = x.terms().size() == 1 && x.terms().begin()->second == 1;
  std::string text;
  if (o.format == "svg")
    text = single ? render_svg(x.terms().begin()->first) : render_svg(x);
  else
    text = single ? render_ascii(x.terms().begin()->first) : render_ascii(x);
  return {{{"format", o.format}, {"document", text}}, text};
}

}  // namespace

int main(int argc, char** argv) {
  // Accept the single-dash spelling -nmax.
  std::vector<std::string> args(argv, argv + argc);
  for (auto& a : args)
    if (a == "-nmax") a = "--nmax";

  CLI::App app{"Two-row Springer fibers: matchings, homology and the symmetric group action"};
  app.require_subcommand(1);
  Options o;

  auto sub = [&](const char* name, const char* help, Output (*fn)(const Options&)) {
    auto* s = app.add_subcommand(name, help);
    s->add_flag("--json", o.json, "JSON output (numbers as strings)");
    s->add_option("--seed", o.seed, "seed for randomized choices");
    s->callback([fn, &o] {
      auto out = fn(o);
      if (o.json)
        std::cout << out.data.dump(2) << "\n";
      else
        std::cout << out.text;
      if (out.status) throw CLI::RuntimeError(out.status);
    });
    return s;
  };
  auto nk = [&](CLI::App* s) {
    s->add_option("-n", o.n, "number of points")->required();
    s->add_option("-k", o.k, "number of arcs")->required();
    return s;
  };
  auto pair = [&](CLI::App* s) {
    s->add_option("a", o.a, "first matching")->required();
    s->add_option("b", o.b, "second matching")->required();
    return s;
  };

  nk(sub("enumerate", "list B^{n-k,k}", run_enumerate));
  sub("validate", "check a matching", run_validate)->add_option("matching", o.a)->required();
  sub("complete", "complete a matching to n-k arcs", run_complete)->add_option("matching", o.a)->required();
  {
    auto* s = sub("restrict", "restrict a completed matching", run_restrict);
    s->add_option("matching", o.a)->required();
    s->add_option("-k", o.k, "target number of arcs")->required();
  }
  sub("tableau", "standard tableau of a standard dotted matching", run_tableau)->add_option("matching", o.a)->required();
  {
    auto* s = sub("matching", "standard dotted matching of a tableau", run_matching);
    s->add_option("--top", o.top, "top row, e.g. \"1 2 4\"")->required();
    s->add_option("--bottom", o.bottom, "bottom row")->required();
    s->add_option("-k", o.k, "number of arcs")->required();
  }
  pair(sub("glue", "components of the glued 1-manifold", run_glue));
  pair(sub("distance", "arrow distance", run_distance));
  nk(sub("order", "linear extension of the arrow order", run_order))
      ->add_option("--tie", o.tie, "lex, reverse or random")
      ->check(CLI::IsMember({"lex", "reverse", "random"}));
  pair(sub("sequence", "minimal sequence of arrow moves", run_sequence));
  pair(sub("meet", "common lower bound at additive distance", run_meet));
  pair(sub("intersect", "intersection of component subspaces", run_intersect))
      ->add_flag("--primed", o.primed, "use the primed subspaces");
  nk(sub("betti", "Betti numbers", run_betti))
      ->add_flag("--presentation", o.via_presentation, "compute as the Mayer-Vietoris cokernel");
  {
    auto* s = sub("reduce", "express a class in the standard basis", run_reduce);
    s->add_option("--class", o.klass)->required();
    s->add_flag("--rewrite", o.rewrite, "use relation rewriting instead of row reduction");
  }
  nk(sub("relations", "Type I, II and III relations in one grading", run_relations))
      ->add_option("-m", o.m, "half the degree")
      ->required();
  {
    auto* s = nk(sub("act", "permutation acting on a class", run_act));
    s->add_option("--sigma", o.sigma)->required();
    s->add_option("--class", o.klass)->required();
  }
  {
    auto* s = nk(sub("matrix", "representation matrix in the standard basis", run_matrix));
    s->add_option("-m", o.m, "half the degree")->required();
    s->add_option("--sigma", o.sigma)->required();
  }
  nk(sub("character", "traces on every conjugacy class", run_character));
  nk(sub("chart", "adjacent transpositions on standard generators", run_chart));
  {
    auto* s = nk(sub("skein", "action computed by resolving crossings", run_skein));
    s->add_option("--sigma", o.sigma)->required();
    s->add_option("--class", o.klass)->required();
    s->add_option("--nmax", o.n_max, "calibration size");
  }
  sub("calibrate", "fit the skein and gamma conventions", run_calibrate)->add_option("--nmax", o.n_max);
  {
    auto* s = sub("verify", "run invariant suites", run_verify);
    s->add_flag("--all", o.all, "every suite");
    s->add_option("--suite", o.suite)->check(CLI::IsMember(suite_names()));
    s->add_option("--nmax", o.n_max, "largest n checked");
  }
  {
    auto* s = sub("render", "draw a matching or class", run_render);
    s->add_option("input", o.a, "matching or class")->required();
    s->add_option("--format", o.format)->check(CLI::IsMember({"ascii", "svg"}));
  }

  std::vector<const char*> cargv;
  for (const auto& a : args) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::RuntimeError& e) {
    return e.get_exit_code();
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
