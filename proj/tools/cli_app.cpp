#include "cli_app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "eao/error.hpp"
#include "eao/json_io.hpp"
#include "eao/nullcone.hpp"
#include "eao/orbits.hpp"
#include "eao/verify.hpp"

namespace eao::cli {

namespace {

using json::Json;

struct Options {
  std::string input;
  std::string inline_json;
  std::optional<std::size_t> max_len;
  bool strict_rank1 = false;
  std::optional<std::size_t> n, p, q, k;
  std::optional<long> box;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::string suite;
};

[[noreturn]] void malformed(const std::string& detail) {
  throw Error(ErrorCode::malformed_input, detail);
}

Json read_input(const Options& opt, std::istream& in) {
  std::string text;
  if (!opt.inline_json.empty()) {
    text = opt.inline_json;
  } else if (!opt.input.empty() && opt.input != "-") {
    std::ifstream file(opt.input);
    if (!file) malformed("cannot open input file: " + opt.input);
    text.assign(std::istreambuf_iterator<char>(file), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

std::size_t require(const std::optional<std::size_t>& value, const char* name) {
  if (!value) malformed(std::string("missing required option --") + name);
  return *value;
}

void require_positive(std::size_t value, const char* name) {
  if (value == 0) malformed(std::string("--") + name + " must be positive");
}

Json tally_json(const verify::ConfigTally& t) {
  return {{"config", t.config},
          {"criterion", t.criterion},
          {"cells", t.cells},
          {"passes", t.passes},
          {"hard_failures", t.hard_failures},
          {"required_fraction", t.required_fraction},
          {"ok", t.ok()}};
}

Json report_json(const verify::VerifyReport& r) {
  Json configs = Json::array();
  for (const auto& t : r.configs) configs.push_back(tally_json(t));
  Json failures = Json::array();
  for (const auto& f : r.failure_log)
    failures.push_back({{"config", f.config},
                        {"index", f.index},
                        {"seed", f.seed},
                        {"hard", f.hard},
                        {"detail", f.detail}});
  return {{"suite", r.suite},       {"seed", r.seed},         {"trials", r.trials},
          {"cells", r.cells},       {"passes", r.passes},     {"failures", r.failures},
          {"ok", r.ok()},           {"configs", configs},     {"failure_log", failures}};
}

std::string seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  verify::VerifyOptions vo;
  vo.seed = opt.seed;
  vo.trials = opt.trials;
  vo.n = opt.n;
  vo.p = opt.p;
  vo.q = opt.q;
  vo.k = opt.k;
  std::vector<verify::VerifyReport> reports;
  if (opt.suite == "all") {
    reports = verify::run_all(vo);
  } else {
    const auto& names = verify::suite_names();
    if (std::find(names.begin(), names.end(), opt.suite) == names.end())
      malformed("unknown suite: " + opt.suite);
    reports.push_back(verify::run_suite(opt.suite, vo));
  }
  bool ok = true;
  double wall = 0;
  for (const auto& r : reports) {
    ok = ok && r.ok();
    wall += r.wall_seconds;
    err << "suite " << r.suite << ": " << r.passes << "/" << r.cells << " passes in "
        << seconds(r.wall_seconds) << " s\n";
  }
  if (reports.size() == 1) {
    out << report_json(reports.front()).dump() << '\n';
  } else {
    std::size_t cells = 0, passes = 0, failures = 0;
    Json suites = Json::array();
    for (const auto& r : reports) {
      cells += r.cells;
      passes += r.passes;
      failures += r.failures;
      suites.push_back(report_json(r));
    }
    const Json all = {{"suite", "all"},   {"seed", opt.seed},     {"cells", cells},
                      {"passes", passes}, {"failures", failures}, {"ok", ok},
                      {"suites", suites}};
    out << all.dump() << '\n';
    err << "total: " << passes << "/" << cells << " passes in " << seconds(wall) << " s\n";
  }
  return ok ? 0 : 1;
}

int dispatch(const std::string& name, const Options& opt, std::istream& in, std::ostream& out,
             std::ostream& err) {
  if (name == "verify") return cmd_verify(opt, out, err);

  if (name == "dims") {
    const std::size_t n = require(opt.n, "n"), p = require(opt.p, "p"), q = require(opt.q, "q");
    require_positive(n, "n");
    require_positive(p, "p");
    require_positive(q, "q");
    if (opt.box && *opt.box < static_cast<long>(n)) malformed("--box must be at least n");
    Json j = json::to_json(nullcone_summary(n, p, q));
    if (opt.box) {
      Json classes = Json::array();
      for (const auto& c : enumerate_maximal_unstable(n, p, q, *opt.box))
        classes.push_back({{"k", c.k}, {"weights", c.weights}});
      j["unstable_classes"] = classes;
    }
    out << j.dump() << '\n';
    return 0;
  }

  if (name == "sample") {
    const std::size_t n = require(opt.n, "n"), p = require(opt.p, "p"), q = require(opt.q, "q");
    const std::size_t k = require(opt.k, "k");
    require_positive(n, "n");
    require_positive(p, "p");
    require_positive(q, "q");
    if (k > n) malformed("--k must not exceed --n");
    out << json::to_json(sample_component(n, p, q, k, opt.seed)).dump() << '\n';
    return 0;
  }

  if (name == "certify") {
    const std::size_t k = require(opt.k, "k");
    const Point w = json::point_from_json(read_input(opt, in));
    if (w.r() != 1) malformed("certify requires r = 1");
    if (k > w.n()) malformed("--k must not exceed n");
    out << json::to_json(adapted_certificate(w, k)).dump() << '\n';
    return 0;
  }

  const Json input = read_input(opt, in);
  if (name == "invariants") {
    const Point w = json::point_from_json(input);
    if (w.r() == 1 && !opt.max_len) {
      out << json::to_json(evaluate_invariants(w)).dump() << '\n';
    } else {
      const std::size_t len = opt.max_len ? *opt.max_len : 2 * w.n() - 1;
      out << json::to_json(word_invariants(w, len)).dump() << '\n';
    }
    return 0;
  }
  if (name == "reconstruct") {
    const auto data = json::reconstruction_input_from_json(input);
    out << json::to_json(reconstruct_fiber_point(data.t, data.gamma, opt.strict_rank1)).dump()
        << '\n';
    return 0;
  }
  if (name == "classify") {
    const Point w = json::point_from_json(input);
    if (w.r() != 1) malformed("classify requires r = 1");
    out << json::to_json(component_interval(w)).dump() << '\n';
    return 0;
  }
  malformed("unknown subcommand: " + name);
}

int report_error(ErrorCode code, const std::string& detail, std::ostream& out, std::ostream& err) {
  int status = 1;
  if (code == ErrorCode::malformed_input || code == ErrorCode::shape_mismatch ||
      code == ErrorCode::invalid_argument) {
    code = ErrorCode::malformed_input;
    status = 2;
  }
  const Json j = {{"error", to_string(code)}, {"detail", detail}};
  out << j.dump() << '\n';
  err << "error: " << detail << '\n';
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Exact invariants, orbits and null cone of the enhanced adjoint action", "eao"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "JSON input file; standard input when omitted or '-'");
    sub->add_option("--json", opt.inline_json, "Inline JSON input");
  };
  auto add_shape = [&](CLI::App* sub) {
    sub->add_option("--n", opt.n);
    sub->add_option("--p", opt.p);
    sub->add_option("--q", opt.q);
  };

  auto* invariants = app.add_subcommand("invariants", "Evaluate the invariant vector of a point");
  add_input(invariants);
  invariants->add_option("--max-len", opt.max_len, "Maximal word length (default 2n-1)");

  auto* reconstruct =
      app.add_subcommand("reconstruct", "Rebuild a fiber point from spectrum and gamma data");
  add_input(reconstruct);
  reconstruct->add_flag("--strict-rank1", opt.strict_rank1, "Reject rank-zero X_k");

  auto* classify = app.add_subcommand("classify", "Component interval of a point");
  add_input(classify);

  auto* certify = app.add_subcommand("certify", "Flag-adapted membership certificate");
  add_input(certify);
  certify->add_option("--k", opt.k);

  auto* dims = app.add_subcommand("dims", "Null cone component dimensions");
  add_shape(dims);
  dims->add_option("--box", opt.box, "Also enumerate maximal unstable classes over this box");

  auto* sample = app.add_subcommand("sample", "Random point of a null cone component");
  add_shape(sample);
  sample->add_option("--k", opt.k);
  sample->add_option("--seed", opt.seed);

  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("--suite", opt.suite)->required();
  verify->add_option("--seed", opt.seed);
  verify->add_option("--trials", opt.trials, "Trials per parameter configuration");
  add_shape(verify);
  verify->add_option("--k", opt.k);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return report_error(ErrorCode::malformed_input, e.what(), out, err);
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return dispatch(name, opt, in, out, err);
  } catch (const Error& e) {
    return report_error(e.code(), e.what(), out, err);
  } catch (const nlohmann::json::exception& e) {
    return report_error(ErrorCode::malformed_input, e.what(), out, err);
  }
}

}  // namespace eao::cli
