// Command-line front end. Talks to the library exclusively through the C
// interface; all numeric work happens behind that boundary.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "groupspec/groupspec.h"

namespace {

struct GroupHandle {
  gs_group* g = nullptr;
  ~GroupHandle() { gs_group_release(g); }
};

struct FunctionHandle {
  gs_function* f = nullptr;
  ~FunctionHandle() { gs_function_release(f); }
};

struct JsonString {
  char* s = nullptr;
  ~JsonString() { gs_string_free(s); }
};

int report_error(const std::string& context, int exit_code) {
  std::cerr << context << ": " << gs_last_error() << "\n";
  return exit_code;
}

bool write_output(const std::string& out_path, const char* json) {
  if (out_path.empty()) {
    std::cout << json << "\n";
    return true;
  }
  std::ofstream out(out_path);
  out << json << "\n";
  if (!out) {
    std::cerr << "cannot write '" << out_path << "'\n";
    return false;
  }
  return true;
}

bool load(gs_group* g, const std::string& path, const std::string& format, const std::string& kind,
          const std::string& subgroup, FunctionHandle& fh) {
  int64_t rows = 0, missing = 0;
  gs_status st = gs_function_load(g, path.c_str(), format.empty() ? nullptr : format.c_str(),
                                  kind.c_str(), subgroup.empty() ? nullptr : subgroup.c_str(), &fh.f,
                                  &rows, &missing);
  if (st != GS_OK) {
    std::cerr << path << ": " << gs_last_error() << "\n";
    return false;
  }
  if (missing > 0)
    std::cerr << "note: " << path << " supplied " << rows << " entries, " << missing
              << " defaulted to zero\n";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translation-invariant spectra of functions on finite groups"};
  app.require_subcommand(1);

  std::string group_spec, subgroup, input, input2, kind = "power", side = "left", format, out_path,
              binary_out;
  double tol = 0.0;

  CLI::App* transform = app.add_subcommand("transform", "Fourier transform of a function");
  transform->add_option("--group", group_spec, "group spec, e.g. sym:4")->required();
  transform->add_option("--subgroup", subgroup, "subgroup spec for coset input");
  transform->add_option("--format", format, "input format: csv or json");
  transform->add_flag_callback("--coset-left", [&] { kind = "coset-left"; },
                               "input is a function on left cosets");
  transform->add_option("--out", out_path, "write JSON here instead of stdout");
  transform->add_option("input", input, "function file")->required();

  CLI::App* spectra = app.add_subcommand("spectra", "invariant spectra");
  spectra->add_option("--group", group_spec)->required();
  spectra->add_option("--subgroup", subgroup, "subgroup spec (skew-restricted)");
  spectra->add_option("--kind", kind, "power|bispectrum|triple|skew|skew-restricted")->required();
  spectra->add_option("--side", side, "left|right");
  spectra->add_option("--format", format, "input format: csv or json");
  spectra->add_option("--out", out_path);
  spectra->add_option("--binary-out", binary_out, "also write the triple correlation as TC01 binary");
  spectra->add_option("input", input)->required();

  CLI::App* compare = app.add_subcommand("compare", "translation-equivalence decision");
  compare->add_option("--group", group_spec)->required();
  compare->add_option("--side", side, "left|right");
  compare->add_option("--tol", tol, "relative comparison tolerance");
  compare->add_option("--format", format);
  compare->add_option("--out", out_path);
  compare->add_option("input", input)->required();
  compare->add_option("input2", input2)->required();

  CLI::App* bench = app.add_subcommand("bench", "scalar-operation counters per spectrum");
  bench->add_option("--group", group_spec)->required();
  bench->add_option("--format", format);
  bench->add_option("--out", out_path);
  bench->add_option("input", input)->required();

  CLI::App* rank = app.add_subcommand("rank", "Fourier rank condition over right cosets");
  rank->add_option("--group", group_spec)->required();
  rank->add_option("--subgroup", subgroup)->required();
  rank->add_option("--tol", tol, "rank tolerance relative to the largest singular value");
  rank->add_option("--out", out_path);
  rank->add_option("input", input)->required();

  CLI::App* selftest = app.add_subcommand("selftest", "seeded randomized self-checks (GS_SEED)");
  selftest->add_option("--group", group_spec)->required();
  selftest->add_option("--out", out_path);

  bool is_compare = argc > 1 && std::strcmp(argv[1], "compare") == 0;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return is_compare && code != 0 ? 3 : code;
  }
  int err_exit = is_compare ? 3 : 1;

  GroupHandle gh;
  if (gs_group_create(group_spec.c_str(), &gh.g) != GS_OK) return report_error(group_spec, err_exit);

  if (transform->parsed()) {
    FunctionHandle fh;
    std::string k = kind == "coset-left" ? "coset-left" : "group";
    if (!load(gh.g, input, format, k, subgroup, fh)) return 1;
    JsonString js;
    if (gs_fourier_json(fh.f, &js.s) != GS_OK) return report_error("transform", 1);
    return write_output(out_path, js.s) ? 0 : 1;
  }

  if (spectra->parsed()) {
    std::string k = kind == "skew-restricted" ? "coset-left" : "group";
    FunctionHandle fh;
    if (!load(gh.g, input, format, k, subgroup, fh)) return 1;
    JsonString js;
    if (gs_spectra_json(fh.f, kind.c_str(), side.c_str(), &js.s) != GS_OK)
      return report_error("spectra", 1);
    if (!binary_out.empty()) {
      if (kind != "triple") {
        std::cerr << "--binary-out applies to --kind triple only\n";
        return 1;
      }
      if (gs_triple_binary(fh.f, binary_out.c_str()) != GS_OK) return report_error(binary_out, 1);
    }
    return write_output(out_path, js.s) ? 0 : 1;
  }

  if (compare->parsed()) {
    FunctionHandle f1, f2;
    if (!load(gh.g, input, format, "group", "", f1) || !load(gh.g, input2, format, "group", "", f2))
      return 3;
    int verdict = 2;
    JsonString js;
    if (gs_compare(f1.f, f2.f, side.c_str(), tol, &verdict, &js.s) != GS_OK)
      return report_error("compare", 3);
    if (!write_output(out_path, js.s)) return 3;
    return verdict;
  }

  if (bench->parsed()) {
    FunctionHandle fh;
    if (!load(gh.g, input, format, "group", "", fh)) return 1;
    JsonString js;
    if (gs_bench_json(fh.f, &js.s) != GS_OK) return report_error("bench", 1);
    return write_output(out_path, js.s) ? 0 : 1;
  }

  if (rank->parsed()) {
    FunctionHandle fh;
    if (!load(gh.g, input, format, "coset-right", subgroup, fh)) return 1;
    JsonString js;
    if (gs_rank_json(fh.f, tol, &js.s) != GS_OK) return report_error("rank", 1);
    return write_output(out_path, js.s) ? 0 : 1;
  }

  if (selftest->parsed()) {
    const char* env = std::getenv("GS_SEED");
    uint64_t seed = env ? std::strtoull(env, nullptr, 10) : 12345;
    JsonString js;
    if (gs_selftest_json(gh.g, seed, &js.s) != GS_OK) return report_error("selftest", 1);
    if (!write_output(out_path, js.s)) return 1;
    return std::strstr(js.s, "\"pass\":true") ? 0 : 1;
  }

  return 1;
}
