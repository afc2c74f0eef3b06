#ifndef SKEIN_CLI_HPP
#define SKEIN_CLI_HPP

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "skein/evaluate.hpp"
#include "skein/families.hpp"
#include "skein/json_io.hpp"
#include "skein/oracle.hpp"
#include "skein/tails.hpp"

namespace skein::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

enum class Format { Text, Json };

struct RunConfig {
  Format format = Format::Text;
  std::string cache_path;
  std::string file;
  int color = 0;
  bool normalized = false;
  bool writhe_correct = false;
  bool oracle_check = false;
  bool check_evaluator = false;
  unsigned threads = 1;
  int k = 1;
  int l = 0;
  int n = 0;
  std::string family = "st";
  std::string colors = "1..8";
  int terms = 10;
  std::string compare;
  int order = 100;
  std::vector<int> args;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Parses "A..B" or a single integer.
inline std::pair<int, int> parse_range(const std::string& s) {
  try {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidArgument, "bad range '" + s + "'");
  }
}

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void value(const RationalFn& v, json extra = json::object()) {
    if (cfg_.format == Format::Json) {
      extra["value"] = value_to_json(v);
      out_ << extra.dump() << '\n';
      return;
    }
    out_ << value_to_text(v) << '\n';
    for (const auto& [key, x] : extra.items()) out_ << key << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << '\n';
  }

  int coeff(const std::string& which) {
    const auto& a = cfg_.args;
    if (which == "theta") {
      value(theta(a[0], a[1], a[2]));
    } else if (which == "tet") {
      const TetLabels t{a[0], a[1], a[2], a[3], a[4], a[5]};
      if (!t.admissible()) fail(ErrorKind::NotAdmissible, "labels " + t.to_string() + " are not admissible");
      value(tet(t));
    } else if (which == "sixj") {
      for (const auto& [x, y, z] : {std::tuple{a[0], a[1], a[5]}, std::tuple{a[3], a[4], a[5]}, std::tuple{a[0], a[3], a[2]},
                                    std::tuple{a[1], a[4], a[2]}}) {
        AdmissibleTriple::require(x, y, z);
      }
      value(sixj(a[0], a[1], a[2], a[3], a[4], a[5]));
    } else {
      value(delta_rf(a[0]));
    }
    return kOk;
  }

  int oracle_eval() {
    value(eval_diagram_bruteforce(parse_diagram(read_file(cfg_.file)), cfg_.color));
    return kOk;
  }

  int oracle_graph() {
    value(eval_graph_bruteforce(parse_graph(read_file(cfg_.file))));
    return kOk;
  }

  int eval() {
    const SingularDiagram d = parse_diagram(read_file(cfg_.file));
    EvalOptions opts;
    opts.normalized = cfg_.normalized;
    opts.writhe_correct = cfg_.writhe_correct;
    opts.threads = cfg_.threads;
    const RationalFn v = colored_jones(d, cfg_.color, opts);
    json extra = json::object();
    if (cfg_.oracle_check) {
      const bool ok = eval_diagram_bruteforce(d, cfg_.color) == colored_jones(d, cfg_.color, EvalOptions{});
      extra["oracle_check"] = ok ? "match" : "mismatch";
      value(v, extra);
      return ok ? kOk : kDomainError;
    }
    value(v, extra);
    return kOk;
  }

  int st() {
    const RationalFn v = cfg_.normalized ? st_invariant(cfg_.k, cfg_.l, cfg_.n) : st_unnormalized(cfg_.k, cfg_.l, cfg_.n);
    json extra = json::object();
    if (cfg_.check_evaluator) {
      const bool ok = colored_jones(st_diagram(cfg_.k, cfg_.l), 2 * cfg_.n) == st_unnormalized(cfg_.k, cfg_.l, cfg_.n);
      extra["evaluator_check"] = ok ? "match" : "mismatch";
      value(v, extra);
      return ok ? kOk : kDomainError;
    }
    value(v, extra);
    return kOk;
  }

  int tail() {
    if (cfg_.family != "st") fail(ErrorKind::InvalidArgument, "unknown family '" + cfg_.family + "'");
    const auto [lo, hi] = parse_range(cfg_.colors);
    if (lo < 0 || hi < lo + 1) fail(ErrorKind::InvalidArgument, "need at least two colors in increasing order");
    std::vector<RationalFn> values;
    std::vector<int> colors;
    for (int n = lo; n <= hi; ++n) {
      values.push_back(st_invariant(cfg_.k, cfg_.l, n));
      colors.push_back(n);
    }
    TailReport r = empirical_tail(values, cfg_.terms, colors);
    const int order = r.prefix.order();
    for (const auto& name : split_commas(cfg_.compare)) {
      if (name == "first") {
        compare_prefix(r, "first", tail_closed_first(cfg_.k, order));
      } else if (name == "second") {
        compare_prefix(r, "second", tail_closed_second(order));
      } else if (name == "psi") {
        compare_prefix(r, "psi", false_theta(3, 1, order));
      } else {
        fail(ErrorKind::InvalidArgument, "unknown candidate '" + name + "'");
      }
    }
    if (cfg_.format == Format::Json) {
      out_ << tail_report_to_json(r).dump() << '\n';
      return kOk;
    }
    out_ << "colors:";
    for (int c : r.colors) out_ << ' ' << c;
    out_ << "\nagree orders:";
    for (int a : r.agree_orders) out_ << ' ' << a;
    out_ << "\nprefix (" << r.prefix_terms << " terms): " << r.prefix << '\n';
    for (const auto& c : r.comparisons) out_ << comparison_to_text(c) << '\n';
    return kOk;
  }

  int verify_corollary_cmd() {
    const CorollaryReport r = verify_corollary(cfg_.order);
    if (cfg_.format == Format::Json) {
      out_ << corollary_to_json(r).dump() << '\n';
      return kOk;
    }
    out_ << "order: " << r.order << '\n';
    for (const auto& c : r.comparisons) out_ << comparison_to_text(c) << '\n';
    return kOk;
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

/// Runs one command line (without the program name). Usage errors exit 2,
/// domain errors exit 1.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"Colored Jones invariants of singular links via trivalent graph reduction", "skein"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache", cfg.cache_path, std::string("Coefficient cache file (default: $") + kCacheEnvVar + ")");

  auto* coeff = app.add_subcommand("coeff", "Recoupling coefficients");
  coeff->require_subcommand(1);
  std::string coeff_kind;
  for (const auto& [name, arity, help] : {std::tuple{"theta", 3, "theta(A,B,C)"}, std::tuple{"tet", 6, "Tet with labels A D E F C B"},
                                          std::tuple{"sixj", 6, "6j symbol A B I C D J"}, std::tuple{"delta", 1, "Delta_N"}}) {
    auto* sub = coeff->add_subcommand(name, help);
    sub->add_option("colors", cfg.args, "Colors")->required()->expected(arity);
    sub->callback([&coeff_kind, n = std::string(name)] { coeff_kind = n; });
  }

  auto* oracle = app.add_subcommand("oracle", "Brute-force Temperley-Lieb evaluation");
  oracle->require_subcommand(1);
  auto* oracle_eval = oracle->add_subcommand("eval", "Evaluate a diagram file");
  oracle_eval->add_option("--file", cfg.file, "Diagram JSON")->required();
  oracle_eval->add_option("--color", cfg.color, "Cable color")->required()->check(CLI::NonNegativeNumber);
  auto* oracle_graph = oracle->add_subcommand("graph", "Evaluate a colored graph file");
  oracle_graph->add_option("--file", cfg.file, "Graph JSON")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a diagram by graph reduction");
  eval->add_option("--file", cfg.file, "Diagram JSON")->required();
  eval->add_option("--color", cfg.color, "Color")->required()->check(CLI::NonNegativeNumber);
  eval->add_flag("--normalized", cfg.normalized, "Divide by Delta_color");
  eval->add_flag("--writhe-correct", cfg.writhe_correct, "Remove the framing monomial");
  eval->add_flag("--oracle-check", cfg.oracle_check, "Compare with the brute-force oracle");
  eval->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* st = app.add_subcommand("st", "Closed form for ST(k,l) at color 2n");
  st->add_option("--k", cfg.k, "Singular vertices")->required();
  st->add_option("--l", cfg.l, "Classical crossings")->required();
  st->add_option("--n", cfg.n, "Half color")->required();
  st->add_flag("--normalized", cfg.normalized, "Divide by Delta_2n");
  st->add_flag("--check-evaluator", cfg.check_evaluator, "Compare with the diagram evaluator");

  auto* tail = app.add_subcommand("tail", "Empirical tail of a family");
  tail->add_option("--family", cfg.family, "Family")->check(CLI::IsMember({"st"}));
  tail->add_option("--k", cfg.k, "Singular vertices")->required();
  tail->add_option("--l", cfg.l, "Classical crossings");
  tail->add_option("--colors", cfg.colors, "Half colors as A..B");
  tail->add_option("--terms", cfg.terms, "Whole q-coefficients kept")->check(CLI::PositiveNumber);
  tail->add_option("--compare", cfg.compare, "Candidates: first,second,psi");

  auto* series = app.add_subcommand("series", "q-series identities");
  series->require_subcommand(1);
  auto* corollary = series->add_subcommand("verify-corollary", "Compare both closed tail forms with Psi(q^3,q)");
  corollary->add_option("--order", cfg.order, "Whole q order")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  cfg.format = format == "json" ? Format::Json : Format::Text;
  if (cfg.cache_path.empty()) cfg.cache_path = cache_path_from_env();

  if (!cfg.cache_path.empty() && std::filesystem::exists(cfg.cache_path)) {
    try {
      cache_load(cfg.cache_path);
    } catch (const SkeinError& e) {
      err << "warning: " << e.what() << '\n';
    }
  }

  Runner r(cfg, out);
  int code = kOk;
  try {
    if (*coeff) {
      code = r.coeff(coeff_kind);
    } else if (*oracle_eval) {
      code = r.oracle_eval();
    } else if (*oracle_graph) {
      code = r.oracle_graph();
    } else if (*eval) {
      code = r.eval();
    } else if (*st) {
      code = r.st();
    } else if (*tail) {
      code = r.tail();
    } else if (*corollary) {
      code = r.verify_corollary_cmd();
    }
  } catch (const SkeinError& e) {
    err << e.what() << '\n';
    return kDomainError;
  }

  if (!cfg.cache_path.empty()) {
    try {
      cache_dump(cfg.cache_path);
    } catch (const SkeinError& e) {
      err << "warning: " << e.what() << '\n';
    }
  }
  return code;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace skein::cli

#endif  // SKEIN_CLI_HPP
