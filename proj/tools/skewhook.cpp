// Command-line front end: check, excited, verify, hooks.
//
// Exit status: 0 pass, 1 mathematical mismatch, 2 input error.

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "skewhook/json_io.hpp"
#include "skewhook/skewhook.hpp"

using namespace skewhook;

namespace {

struct RunSpec {
  std::string poset;
  std::string filter;
  int degree = 8;
  bool k_theoretic = false;
  bool heap_mode = false;
  unsigned long long seed = 1;
  std::string format = "text";
  bool debug = false;
};

void add_common(CLI::App *cmd, RunSpec &spec, bool with_filter) {
  cmd->add_option("--poset", spec.poset, "builder spec as JSON text or a file")->required();
  if (with_filter)
    cmd->add_option("--filter", spec.filter, "order filter: sub-partition, {\"elements\":..} or {\"cells\":..}");
  cmd->add_flag("--heap-mode", spec.heap_mode, "compute excitations and hooks from the heap structure");
  cmd->add_option("--format", spec.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--debug", spec.debug, "dump inversion roots and reduced-word normal forms");
}

ColoredPoset load(const RunSpec &spec) {
  ColoredPoset cp = colored_poset_from_json(read_json_arg(spec.poset));
  if (spec.heap_mode)
    cp = as_heap(std::move(cp));
  return cp;
}

ElementSet load_filter(const ColoredPoset &cp, const RunSpec &spec) {
  if (spec.filter.empty())
    return ElementSet{};
  return filter_from_json(cp, read_json_arg(spec.filter));
}

const char *mode_name(Mode m) { return m == Mode::Heap ? "heap" : "d-complete"; }

void dump_debug(const ColoredPoset &cp, std::ostream &os) {
  const auto ext = linear_extension(cp.poset);
  const auto beta = beta_roots(cp, ext);
  os << "inversion roots:\n";
  for (Element e : ext)
    os << "  " << cp.poset.label(e) << "  " << to_string(beta[e], cp.colors()) << "\n";
  const WeylWord w = word_for_subset(cp, cp.poset.all(), ext);
  os << "w_P = " << to_string(w) << "\n";
  os << "normal form = " << to_string(normal_form(w)) << "\n";
}

std::string labels_string(const ColoredPoset &cp, ElementSet s) { return set_string(cp.poset, s); }

int cmd_check(const RunSpec &spec) {
  const json j = read_json_arg(spec.poset);
  // A general poset may fail the axioms; report instead of building.
  if (!j.contains("shape") && !j.contains("shifted") && !j.contains("shifted_typeB") && !j.contains("swivel") &&
      !j.contains("tree") && !j.contains("heap")) {
    const Poset p = poset_from_json(j.contains("general") ? j.at("general") : j);
    const auto verdict = check_dcomplete(p);
    if (!verdict.ok()) {
      if (spec.format == "json") {
        json v = json::array();
        for (const auto &x : verdict.violations)
          v.push_back({{"axiom", x.axiom}, {"set", set_to_json(x.set)}, {"detail", x.detail}});
        std::cout << json{{"d_complete", false}, {"violations", v}}.dump(2) << "\n";
      } else {
        std::cout << "d-complete: no\n";
        for (const auto &x : verdict.violations)
          std::cout << "violation(" << x.axiom << "): " << x.detail << "\n";
      }
      return 1;
    }
  }
  ColoredPoset cp = load(spec);
  const auto verdict = check_dcomplete(cp.poset);
  const auto coloring = coloring_failures(cp);
  const bool ok = verdict.ok() && (cp.mode == Mode::Heap || coloring.empty());
  if (spec.format == "json") {
    json colors = json::object();
    for (Element e = 0; e < cp.size(); ++e)
      colors[std::to_string(e)] = cp.colors().name(cp.color[e]);
    json v = json::array();
    for (const auto &x : verdict.violations)
      v.push_back({{"axiom", x.axiom}, {"set", set_to_json(x.set)}, {"detail", x.detail}});
    std::cout << json{{"d_complete", verdict.ok()},
                      {"violations", v},
                      {"poset", poset_to_json(cp.poset)},
                      {"top_forest", set_to_json(cp.top_forest)},
                      {"coloring", colors},
                      {"colors", cp.colors().names()},
                      {"type", cp.colors().dynkin_type()},
                      {"mode", mode_name(cp.mode)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "poset: " << cp.kind << ", " << cp.size() << " elements\n";
    std::cout << "d-complete: " << (verdict.ok() ? "yes" : "no") << "\n";
    for (const auto &x : verdict.violations)
      std::cout << "violation(" << x.axiom << "): " << x.detail << "\n";
    std::cout << "top forest: " << labels_string(cp, cp.top_forest) << "\n";
    std::cout << "color graph: type " << cp.colors().dynkin_type() << " on colors";
    for (const auto &n : cp.colors().names())
      std::cout << " " << n;
    std::cout << "\nmode: " << mode_name(cp.mode) << "\ncoloring:\n";
    for (Element e = 0; e < cp.size(); ++e)
      std::cout << "  " << cp.poset.label(e) << " -> " << cp.colors().name(cp.color[e]) << "\n";
    if (cp.mode == Mode::DComplete)
      for (const auto &f : coloring)
        std::cout << "coloring failure: " << f << "\n";
  }
  if (spec.debug)
    dump_debug(cp, std::cerr);
  return ok ? 0 : 1;
}

int cmd_excited(const RunSpec &spec) {
  const ColoredPoset cp = load(spec);
  const ElementSet f = load_filter(cp, spec);
  const auto excited = enumerate_excited(cp, f);
  int status = 0;
  for (const auto &s : excited)
    if (peaks_direct(cp, s.diagram) != s.peaks)
      status = 1;
  if (spec.k_theoretic) {
    const auto kex = enumerate_k_excited(cp, f);
    std::size_t ordinary = 0;
    for (const auto &e : kex)
      ordinary += e.extra.empty();
    if (spec.format == "json") {
      json list = json::array();
      for (const auto &e : kex)
        list.push_back({{"diagram", set_to_json(e.diagram)},
                        {"ordinary", set_to_json(e.ordinary)},
                        {"extra", set_to_json(e.extra)}});
      std::cout << json{{"count", kex.size()}, {"ordinary", ordinary}, {"diagrams", list}}.dump(2) << "\n";
    } else {
      std::cout << kex.size() << " K-theoretical excited diagrams (" << ordinary << " ordinary)\n";
      for (const auto &e : kex)
        std::cout << "\n" << render(cp, e.diagram);
    }
  } else if (spec.format == "json") {
    json list = json::array();
    for (const auto &s : excited)
      list.push_back(state_to_json(s));
    std::cout << json{{"count", excited.size()}, {"diagrams", list}}.dump(2) << "\n";
  } else {
    std::cout << excited.size() << " excited diagrams\n";
    for (const auto &s : excited)
      std::cout << "\n" << render(cp, s.diagram, s.peaks);
  }
  if (spec.debug) {
    for (const auto &s : excited)
      std::cerr << set_string(cp.poset, s.diagram) << "  " << to_string(normal_form(word_for_subset(cp, s.diagram)))
                << "\n";
  }
  return status;
}

int cmd_hooks(const RunSpec &spec) {
  const ColoredPoset cp = load(spec);
  const HookTable t = hook_table(cp);
  if (spec.format == "json") {
    json lengths = json::object();
    for (Element e = 0; e < cp.size(); ++e)
      lengths[std::to_string(e)] = t.lengths[e];
    std::cout << json{{"hooks", hook_table_to_json(cp, t)}, {"lengths", lengths}}.dump(2) << "\n";
  } else {
    for (Element e : linear_extension(cp.poset))
      std::cout << cp.poset.label(e) << "  " << monomial_string(t.exponents[e], cp.colors().names()) << "  h="
                << t.lengths[e] << "\n";
  }
  if (spec.debug)
    dump_debug(cp, std::cerr);
  return 0;
}

int cmd_verify(const RunSpec &spec) {
  const ColoredPoset cp = load(spec);
  const ElementSet f = load_filter(cp, spec);
  const auto names = cp.colors().names();
  const auto excited = enumerate_excited(cp, f);
  const HookTable hooks = hook_table(cp);
  const RationalFn rhs = rhs_rational(cp, excited, hooks.exponents);
  const RationalFn closed = cancel_factors(rhs);

  struct Line {
    std::string name;
    bool ok;
    std::string detail;
  };
  std::vector<Line> lines;

  const TruncSeries lhs = lhs_series(cp, f, spec.degree);
  const TruncSeries rhs_series = expand(rhs, spec.degree);
  const auto diff = first_difference(lhs.poly, rhs_series.poly);
  lines.push_back({"main theorem to degree " + std::to_string(spec.degree), !diff,
                   diff ? "first difference at " + monomial_string(*diff, names) : ""});

  const TruncSeries lq = q_specialize(lhs);
  const TruncSeries rq = expand(q_specialize(rhs), spec.degree);
  lines.push_back({"q-specialization", lq.poly == rq.poly, ""});

  if (auto top = cp.max_color()) {
    const TruncSeries lt = trace_specialize(lhs, *top);
    const TruncSeries rt = expand(trace_specialize(rhs, *top), spec.degree, {0, 1});
    lines.push_back({"trace specialization", lt.poly == rt.poly, ""});
  }

  const mpz_class from_hooks = naruse_count(cp, f, excited, hooks.lengths);
  const mpz_class direct = linear_extensions_count(induced_subposet(cp.poset, cp.poset.all() - f));
  lines.push_back({"linear extensions", from_hooks == direct, from_hooks.get_str() + " vs " + direct.get_str()});

  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> dist(1, 9);
  std::vector<mpq_class> a;
  std::string weights;
  for (int i = 0; i < cp.colors().size(); ++i) {
    a.emplace_back(dist(rng));
    weights += (i ? "," : "") + a.back().get_str();
  }
  const mpq_class clhs = colored_extension_sum(cp, f, a);
  const mpq_class crhs = colored_hook_sum(cp, excited, hooks.exponents, a);
  lines.push_back({"colored hook formula (a=" + weights + ")", clhs == crhs, clhs.get_str() + " vs " + crhs.get_str()});

  bool all = true;
  for (const auto &l : lines)
    all = all && l.ok;
  if (spec.format == "json") {
    json checks = json::array();
    for (const auto &l : lines)
      checks.push_back({{"check", l.name}, {"pass", l.ok}, {"detail", l.detail}});
    std::cout << json{{"seed", spec.seed},
                      {"excited", excited.size()},
                      {"closed_form", to_string(closed, names)},
                      {"rhs", rational_to_json(closed, names)},
                      {"checks", checks},
                      {"pass", all}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "seed: " << spec.seed << "\n";
    std::cout << "excited diagrams: " << excited.size() << "\n";
    std::cout << "generating function: " << to_string(closed, names) << "\n";
    for (const auto &l : lines)
      std::cout << (l.ok ? "PASS " : "FAIL ") << l.name << (l.detail.empty() ? "" : ": " + l.detail) << "\n";
  }
  return all ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"d-complete posets, excited diagrams and skew hook formulas"};
  app.require_subcommand(1);
  RunSpec spec;

  auto *check = app.add_subcommand("check", "d-complete verdict, top forest, coloring");
  add_common(check, spec, false);
  auto *excited = app.add_subcommand("excited", "list (K-theoretical) excited diagrams");
  add_common(excited, spec, true);
  excited->add_flag("--k-theoretic", spec.k_theoretic, "include K-theoretical excitations");
  auto *verify = app.add_subcommand("verify", "check the skew hook identities for one filter");
  add_common(verify, spec, true);
  verify->add_option("--degree", spec.degree, "truncation degree")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", spec.seed, "seed for the colored-hook weights");
  auto *hooks = app.add_subcommand("hooks", "hook monomials and hook lengths");
  add_common(hooks, spec, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check)
      return cmd_check(spec);
    if (*excited)
      return cmd_excited(spec);
    if (*verify)
      return cmd_verify(spec);
    return cmd_hooks(spec);
  } catch (const InputError &e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
