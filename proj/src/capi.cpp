#include "groupspec/groupspec.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <mutex>
#include <random>

#include "io.hpp"

using namespace gs;

struct gs_group {
  GroupPtr group;
  std::mutex mu;
  IrrepSetPtr irreps;  // built on first use

  IrrepSetPtr irrep_set() {
    std::lock_guard<std::mutex> lock(mu);
    if (!irreps) irreps = irreps_for(group);
    return irreps;
  }
};

struct gs_function {
  gs_group* owner = nullptr;
  bool is_coset = false;
  GroupFunction fn;
  CosetFunction coset;
};

namespace {

thread_local std::string t_last_error;

gs_status code_of(Errc c) {
  switch (c) {
    case Errc::InvalidArg: return GS_ERR_INVALID_ARG;
    case Errc::Parse: return GS_ERR_PARSE;
    case Errc::Unsupported: return GS_ERR_UNSUPPORTED;
    case Errc::Numeric: return GS_ERR_NUMERIC;
    case Errc::Io: return GS_ERR_IO;
    case Errc::Internal: return GS_ERR_INTERNAL;
  }
  return GS_ERR_INTERNAL;
}

template <typename Body>
gs_status guarded(Body&& body) noexcept {
  try {
    body();
    t_last_error.clear();
    return GS_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return GS_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown failure";
    return GS_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** json_out, const Json& j) {
  if (!json_out) fail(Errc::InvalidArg, "output pointer is null");
  *json_out = dup_string(dump_json(j));
  if (!*json_out) fail(Errc::Internal, "out of memory");
}

const GroupFunction& plain(gs_function* f) {
  if (!f) fail(Errc::InvalidArg, "function handle is null");
  if (f->is_coset) fail(Errc::InvalidArg, "operation expects a function on the whole group");
  return f->fn;
}

std::vector<Element> all_elements(const FiniteGroup& g) {
  std::vector<Element> zs(g.order());
  for (int i = 0; i < g.order(); ++i) zs[i] = i;
  return zs;
}

}  // namespace

extern "C" {

const char* gs_status_message(gs_status status) {
  switch (status) {
    case GS_OK: return "ok";
    case GS_ERR_INVALID_ARG: return "invalid argument";
    case GS_ERR_PARSE: return "parse error";
    case GS_ERR_UNSUPPORTED: return "unsupported";
    case GS_ERR_NUMERIC: return "numeric failure";
    case GS_ERR_IO: return "i/o error";
    case GS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gs_last_error(void) { return t_last_error.c_str(); }

void gs_string_free(char* s) { std::free(s); }

gs_status gs_group_create(const char* spec, gs_group** out) {
  return guarded([&] {
    if (!spec || !out) fail(Errc::InvalidArg, "null argument");
    auto g = new gs_group();
    try {
      g->group = parse_group_spec(spec);
    } catch (...) {
      delete g;
      throw;
    }
    *out = g;
  });
}

void gs_group_release(gs_group* g) { delete g; }

int64_t gs_group_order(const gs_group* g) { return g ? g->group->order() : 0; }

const char* gs_group_name(const gs_group* g) { return g ? g->group->name().c_str() : ""; }

gs_status gs_function_load(gs_group* g, const char* path, const char* format, const char* kind,
                           const char* subgroup, gs_function** out, int64_t* rows_out,
                           int64_t* missing_out) {
  return guarded([&] {
    if (!g || !path || !out) fail(Errc::InvalidArg, "null argument");
    std::string k = kind ? kind : "group";
    std::string fmt = format ? format : "";
    if (fmt.empty()) {
      std::string p = path;
      auto dot = p.rfind('.');
      std::string ext = dot == std::string::npos ? "" : p.substr(dot + 1);
      fmt = ext == "json" ? "json" : "csv";
    }
    std::ifstream in(path);
    if (!in) fail(Errc::Io, std::string("cannot open '") + path + "'");

    auto f = std::make_unique<gs_function>();
    f->owner = g;
    IngestInfo info;
    if (k == "group") {
      f->fn = fmt == "json" ? read_function_json(in, g->group, &info)
                            : read_function_csv(in, g->group, &info);
    } else if (k == "coset-left" || k == "coset-right") {
      if (fmt != "csv") fail(Errc::Unsupported, "coset functions load from CSV");
      if (!subgroup || !*subgroup) fail(Errc::InvalidArg, "coset functions need a subgroup spec");
      Subgroup h = parse_subgroup_spec(g->group, subgroup);
      CosetTransversal space =
          transversal(g->group, h, k == "coset-left" ? CosetKind::Left : CosetKind::Right);
      f->is_coset = true;
      f->coset = read_coset_csv(in, space, &info);
    } else {
      fail(Errc::InvalidArg, "unknown function kind '" + k + "'");
    }
    if (rows_out) *rows_out = info.rows;
    if (missing_out) *missing_out = info.missing;
    *out = f.release();
  });
}

gs_status gs_function_from_values(gs_group* g, const double* values, int64_t n, gs_function** out) {
  return guarded([&] {
    if (!g || !values || !out) fail(Errc::InvalidArg, "null argument");
    if (n != g->group->order()) fail(Errc::InvalidArg, "value count does not match group order");
    auto f = std::make_unique<gs_function>();
    f->owner = g;
    f->fn.group = g->group;
    f->fn.values.resize(n);
    for (int64_t i = 0; i < n; ++i) f->fn.values[i] = Cplx(values[2 * i], values[2 * i + 1]);
    validate(f->fn);
    *out = f.release();
  });
}

void gs_function_release(gs_function* f) { delete f; }

gs_status gs_fourier_json(gs_function* f, char** json_out) {
  return guarded([&] {
    if (!f) fail(Errc::InvalidArg, "function handle is null");
    IrrepSetPtr R = f->owner->irrep_set();
    OpCounter ops;
    Json j;
    if (f->is_coset) {
      if (f->coset.space.kind != CosetKind::Left)
        fail(Errc::Unsupported, "transform of a right-coset function: lift it or use the rank condition");
      j = fourier_json(coset_fourier(f->coset, R, ops));
    } else {
      j = fourier_json(fourier_transform(f->fn, R, ops));
    }
    emit(json_out, Json{{"group", f->owner->group->name()}, {"coefficients", j}, {"ops", counter_json(ops)}});
  });
}

gs_status gs_spectra_json(gs_function* f, const char* kind, const char* side, char** json_out) {
  return guarded([&] {
    if (!f || !kind) fail(Errc::InvalidArg, "null argument");
    std::string k = kind;
    std::string s = side ? side : "left";
    if (s != "left" && s != "right") fail(Errc::InvalidArg, "side must be 'left' or 'right'");
    bool right = s == "right";
    IrrepSetPtr R = f->owner->irrep_set();
    OpCounter ops;
    Json j;
    if (k == "power") {
      FourierCoefficients F = fourier_transform(plain(f), R, ops);
      j = power_json(right ? right_power_spectrum(F, ops) : power_spectrum(F, ops));
    } else if (k == "bispectrum") {
      FourierCoefficients F = fourier_transform(plain(f), R, ops);
      CGCache cache(R);
      j = bispectrum_json(right ? right_bispectrum(F, cache, BispectrumConvention::Plain, ops)
                                : bispectrum(F, cache, BispectrumConvention::Plain, ops));
    } else if (k == "triple") {
      if (right) fail(Errc::Unsupported, "the triple correlation has no right-handed variant here");
      j = triple_json(triple_correlation(plain(f), ops));
    } else if (k == "skew") {
      const GroupFunction& fn = plain(f);
      auto zs = all_elements(*fn.group);
      j = skew_json(right ? right_skew_spectrum(fn, R, zs, ops) : skew_spectrum(fn, R, zs, ops));
    } else if (k == "skew-restricted") {
      if (right) fail(Errc::Unsupported, "the restricted skew spectrum is left-handed");
      if (!f->is_coset) fail(Errc::InvalidArg, "skew-restricted expects a coset function");
      j = skew_json(restricted_skew_spectrum(f->coset, R, ops));
    } else {
      fail(Errc::InvalidArg, "unknown spectrum kind '" + k + "'");
    }
    j["side"] = s;
    j["ops"] = counter_json(ops);
    emit(json_out, j);
  });
}

gs_status gs_triple_binary(gs_function* f, const char* path) {
  return guarded([&] {
    if (!f || !path) fail(Errc::InvalidArg, "null argument");
    OpCounter ops;
    write_triple_binary(triple_correlation(plain(f), ops), path);
  });
}

gs_status gs_compare(gs_function* f1, gs_function* f2, const char* side, double tol, int* verdict_out,
                     char** json_out) {
  return guarded([&] {
    if (!f1 || !f2) fail(Errc::InvalidArg, "null argument");
    if (f1->owner->group.get() != f2->owner->group.get())
      fail(Errc::InvalidArg, "comparing functions on different groups");
    std::string s = side ? side : "left";
    if (s != "left" && s != "right") fail(Errc::InvalidArg, "side must be 'left' or 'right'");
    if (tol <= 0) tol = 1e-8;
    IrrepSetPtr R = f1->owner->irrep_set();
    OpCounter ops;
    CompareReport rep = skew_equivalent(plain(f1), plain(f2), R, s == "left" ? Side::Left : Side::Right,
                                        tol, ops);
    if (verdict_out) *verdict_out = static_cast<int>(rep.verdict);
    if (json_out) emit(json_out, compare_json(rep));
  });
}

gs_status gs_bench_json(gs_function* f, char** json_out) {
  return guarded([&] {
    if (!f) fail(Errc::InvalidArg, "function handle is null");
    const GroupFunction& fn = plain(f);
    IrrepSetPtr R = f->owner->irrep_set();

    OpCounter triple_ops;
    triple_correlation(fn, triple_ops);

    OpCounter bisp_ops;
    {
      FourierCoefficients F = fourier_transform(fn, R, bisp_ops);
      CGCache cache(R);
      bispectrum(F, cache, BispectrumConvention::Plain, bisp_ops);
    }

    OpCounter skew_ops;
    skew_spectrum(fn, R, all_elements(*fn.group), skew_ops);

    emit(json_out, Json{{"group", fn.group->name()},
                        {"order", fn.group->order()},
                        {"triple", counter_json(triple_ops)},
                        {"bispectrum", counter_json(bisp_ops)},
                        {"skew", counter_json(skew_ops)}});
  });
}

gs_status gs_rank_json(gs_function* f, double tol, char** json_out) {
  return guarded([&] {
    if (!f) fail(Errc::InvalidArg, "function handle is null");
    if (!f->is_coset || f->coset.space.kind != CosetKind::Right)
      fail(Errc::InvalidArg, "rank condition expects a coset-right function");
    if (tol <= 0) tol = 1e-8;
    emit(json_out, rank_json(rank_condition(f->coset, f->owner->irrep_set(), tol)));
  });
}

gs_status gs_selftest_json(gs_group* g, uint64_t seed, char** json_out) {
  return guarded([&] {
    if (!g) fail(Errc::InvalidArg, "group handle is null");
    IrrepSetPtr R = g->irrep_set();
    int n = g->group->order();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    auto random_fn = [&] {
      GroupFunction f;
      f.group = g->group;
      f.values.resize(n);
      for (int i = 0; i < n; ++i) f.values[i] = Cplx(unit(rng), unit(rng));
      return f;
    };

    OpCounter ops;
    GroupFunction f = random_fn(), h = random_fn();
    FourierCoefficients F = fourier_transform(f, R, ops);

    double roundtrip = (inverse_fourier(F, ops).values - f.values).cwiseAbs().maxCoeff();
    double parseval = std::abs(function_norm_sq(f) - coefficient_norm_sq(F));

    FourierCoefficients H = fourier_transform(h, R, ops);
    FourierCoefficients C = fourier_transform(convolve(f, h, ops), R, ops);
    double conv = 0;
    for (int r = 0; r < R->count(); ++r) {
      Eigen::MatrixXcd prod = F.blocks[r] * H.blocks[r];
      conv = std::max(conv, (C.blocks[r] - prod).norm() / (1.0 + prod.norm()));
    }

    double covariance = 0;
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int trial = 0; trial < 5; ++trial) {
      Element t = pick(rng);
      FourierCoefficients L = fourier_transform(left_translate(f, t), R, ops);
      for (int r = 0; r < R->count(); ++r)
        covariance = std::max(
            covariance, (L.blocks[r] - R->irreps[r].at(t) * F.blocks[r]).cwiseAbs().maxCoeff());
    }

    bool pass = roundtrip < 1e-10 && parseval < 1e-10 && conv < 1e-9 && covariance < 1e-10;
    emit(json_out, Json{{"group", g->group->name()},
                        {"seed", seed},
                        {"roundtrip", roundtrip},
                        {"parseval", parseval},
                        {"convolution", conv},
                        {"covariance", covariance},
                        {"pass", pass}});
  });
}

}  // extern "C"
