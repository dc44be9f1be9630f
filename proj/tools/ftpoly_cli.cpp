// ftpoly: command-line front end over the C API.
//
//   ftpoly analyze <input> [--json] [--preprocess] [--max-dim N]
//   ftpoly export <input> --format ine|ext|json [--out PATH] [--preprocess] [--max-dim N]
//   ftpoly solve <input>
//   ftpoly check-lemmas [--count N] [--seed S] [--sizes 4,6]
//
// <input> is a file path, an inline list such as "3,3,4,2", or "-" for stdin.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ftpoly/ftpoly.h"

namespace {

enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kParse = 2,
  kDimensionCap = 3,
  kNoPartition = 4,
  kIo = 5,
};

struct InstanceDeleter {
  void operator()(ft_instance* p) const { ft_instance_free(p); }
};
struct PolytopeDeleter {
  void operator()(ft_polytope* p) const { ft_polytope_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { ft_string_free(p); }
};
using InstancePtr = std::unique_ptr<ft_instance, InstanceDeleter>;
using PolytopePtr = std::unique_ptr<ft_polytope, PolytopeDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_for(ft_status s) {
  switch (s) {
    case FT_OK: return kOk;
    case FT_ERR_PARSE:
    case FT_ERR_EMPTY:
    case FT_ERR_ODD_COUNT:
    case FT_ERR_OUT_OF_RANGE:
    case FT_ERR_INVALID_ARGUMENT: return kParse;
    case FT_ERR_DIMENSION_CAP:
    case FT_ERR_SCALE_CAP: return kDimensionCap;
    case FT_ERR_IO: return kIo;
    default: return kFailure;
  }
}

int report_error(ft_status s) {
  std::cerr << "ftpoly: " << ft_status_string(s);
  if (*ft_last_error()) std::cerr << ": " << ft_last_error();
  std::cerr << "\n";
  return exit_for(s);
}

bool read_input(const std::string& source, std::string& text) {
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source, std::ios::binary);
    if (!in) return false;
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
    return true;
  }
  text = source;
  return true;
}

// Command-line value wins, then FT_MAX_DIM, then the library default.
std::size_t resolve_max_dim(std::size_t flag) {
  if (flag != 0) return flag;
  if (const char* env = std::getenv("FT_MAX_DIM")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 0;
}

bool write_output(const std::string& path, const char* data) {
  if (path.empty() || path == "-") {
    std::fputs(data, stdout);
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << data;
  return static_cast<bool>(out);
}

ft_status parse_instance(const std::string& text, InstancePtr& out) {
  ft_instance* raw = nullptr;
  ft_status s = ft_instance_parse(text.c_str(), &raw);
  out.reset(raw);
  return s;
}

ft_status load_instance(const std::string& input, InstancePtr& out) {
  std::string text;
  if (!read_input(input, text)) {
    std::cerr << "ftpoly: cannot read " << input << "\n";
    return FT_ERR_IO;
  }
  return parse_instance(text, out);
}

int run_analyze(const std::string& input, bool json, bool preprocess, std::size_t max_dim) {
  InstancePtr inst;
  if (ft_status s = load_instance(input, inst); s != FT_OK) return report_error(s);
  ft_analyze_options opts{preprocess ? 1 : 0, resolve_max_dim(max_dim), json ? 1 : 0};
  char* report = nullptr;
  int ok = 0;
  if (ft_status s = ft_analyze(inst.get(), &opts, &report, &ok); s != FT_OK) return report_error(s);
  StringPtr hold(report);
  std::fputs(report, stdout);
  if (!ok) {
    std::cerr << "ftpoly: a verifier failed\n";
    return kFailure;
  }
  return kOk;
}

ft_status polytope_for(const std::string& text, bool preprocess, std::size_t max_dim, PolytopePtr& out) {
  ft_polytope* poly = nullptr;
  if (text.find("H-representation") != std::string::npos) {
    ft_status s = ft_polytope_from_ine(text.c_str(), max_dim, &poly);
    out.reset(poly);
    return s;
  }
  ft_instance* raw = nullptr;
  ft_status s = ft_instance_parse(text.c_str(), &raw);
  InstancePtr inst(raw);
  if (s != FT_OK) return s;
  ft_instance* shifted = nullptr;
  if ((s = ft_instance_translate_positive(inst.get(), &shifted, nullptr)) != FT_OK) return s;
  inst.reset(shifted);
  if (preprocess) {
    ft_instance* odd = nullptr;
    if ((s = ft_instance_oddify(inst.get(), &odd, nullptr)) != FT_OK) return s;
    inst.reset(odd);
  }
  s = ft_polytope_create(inst.get(), max_dim, &poly);
  out.reset(poly);
  return s;
}

int run_export(const std::string& input, const std::string& format, const std::string& path, bool preprocess,
               std::size_t max_dim) {
  std::string text;
  if (!read_input(input, text)) {
    std::cerr << "ftpoly: cannot read " << input << "\n";
    return kIo;
  }
  const std::size_t cap = resolve_max_dim(max_dim);
  char* out = nullptr;
  if (format == "json" && text.find("H-representation") == std::string::npos) {
    InstancePtr inst;
    if (ft_status s = parse_instance(text, inst); s != FT_OK) return report_error(s);
    ft_analyze_options opts{preprocess ? 1 : 0, cap, 1};
    if (ft_status s = ft_analyze(inst.get(), &opts, &out, nullptr); s != FT_OK) return report_error(s);
  } else {
    PolytopePtr poly;
    if (ft_status s = polytope_for(text, preprocess, cap, poly); s != FT_OK) return report_error(s);
    const ft_format f = format == "ine" ? FT_FORMAT_INE : format == "ext" ? FT_FORMAT_EXT : FT_FORMAT_JSON;
    if (ft_status s = ft_polytope_export(poly.get(), f, &out); s != FT_OK) return report_error(s);
  }
  StringPtr hold(out);
  if (!write_output(path, out)) {
    std::cerr << "ftpoly: cannot write " << path << "\n";
    return kIo;
  }
  return kOk;
}

int run_solve(const std::string& input) {
  InstancePtr inst;
  if (ft_status s = load_instance(input, inst); s != FT_OK) return report_error(s);
  char* text = nullptr;
  int yes = 0, consistent = 0;
  if (ft_status s = ft_solve(inst.get(), &text, &yes, &consistent); s != FT_OK) return report_error(s);
  StringPtr hold(text);
  std::fputs(text, stdout);
  if (!consistent) return kFailure;
  return yes ? kOk : kNoPartition;
}

int run_check(std::size_t count, std::uint64_t seed, const std::vector<std::size_t>& sizes) {
  char* summary = nullptr;
  int pass = 0;
  if (ft_status s = ft_check_lemmas(count, seed, sizes.data(), sizes.size(), &summary, &pass); s != FT_OK)
    return report_error(s);
  StringPtr hold(summary);
  std::fputs(summary, stdout);
  return pass ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex structure of the knapsack-cut cube relaxation of Exact Partition"};
  app.require_subcommand(1);

  std::string input;
  bool json = false, preprocess = false;
  std::size_t max_dim = 0;
  std::string format, out_path;
  std::size_t count = 100;
  std::uint64_t seed = 7;
  std::vector<std::size_t> sizes{4, 6};

  auto* analyze = app.add_subcommand("analyze", "Enumerate vertices, build the 1-skeleton, run all checks");
  analyze->add_option("input", input, "File, inline list, or - for stdin")->required();
  analyze->add_flag("--json", json, "Emit the report as JSON");
  analyze->add_flag("--preprocess", preprocess, "Add one to every element when s_max is even");
  analyze->add_option("--max-dim", max_dim, "Dimension cap on 2m (default 16, env FT_MAX_DIM)");

  auto* exporter = app.add_subcommand("export", "Write cdd .ine/.ext files or the JSON report");
  exporter->add_option("input", input, "File (instance or .ine), inline list, or -")->required();
  exporter->add_option("--format", format, "ine, ext or json")->required()->check(CLI::IsMember({"ine", "ext", "json"}));
  exporter->add_option("--out", out_path, "Output path (default stdout)");
  exporter->add_flag("--preprocess", preprocess, "Add one to every element when s_max is even");
  exporter->add_option("--max-dim", max_dim, "Dimension cap on 2m (default 16, env FT_MAX_DIM)");

  auto* solver = app.add_subcommand("solve", "Decide Exact Partition by brute force and cross-check ILP2");
  solver->add_option("input", input, "File, inline list, or - for stdin")->required();

  auto* checker = app.add_subcommand("check-lemmas", "Run all verifiers on random instances");
  checker->add_option("--count", count, "Instances per size");
  checker->add_option("--seed", seed, "Generator seed");
  checker->add_option("--sizes", sizes, "Comma-separated values of 2m")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  if (*analyze) return run_analyze(input, json, preprocess, max_dim);
  if (*exporter) return run_export(input, format, out_path, preprocess, max_dim);
  if (*solver) return run_solve(input);
  return run_check(count, seed, sizes);
}
