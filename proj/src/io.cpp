#include "io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <sstream>

namespace gs {
namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& text) {
  const char* p = text.c_str();
  char* end = nullptr;
  double v = std::strtod(p, &end);
  if (end == p || *end != '\0') fail(Errc::Parse, "bad numeric literal '" + text + "'");
  return v;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void escape_into(std::string& out, const std::string& s) {
  out.push_back('"');
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
}

void dump_into(std::string& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out.push_back('{');
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out.push_back(',');
        first = false;
        escape_into(out, it.key());
        out.push_back(':');
        dump_into(out, it.value());
      }
      out.push_back('}');
      break;
    }
    case Json::value_t::array: {
      out.push_back('[');
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out.push_back(',');
        dump_into(out, j[i]);
      }
      out.push_back(']');
      break;
    }
    case Json::value_t::string:
      escape_into(out, j.get_ref<const std::string&>());
      break;
    case Json::value_t::number_float:
      out += fmt17(j.get<double>());
      break;
    case Json::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      break;
    case Json::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      break;
    case Json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    default:
      out += "null";
  }
}

// Splits a CSV row into the quoted-or-bare key and the value text.
std::pair<std::string, std::string> split_row(const std::string& line, int lineno) {
  std::string s = trim(line);
  if (s.empty()) return {"", ""};
  if (s[0] == '"') {
    std::size_t close = s.find('"', 1);
    if (close == std::string::npos)
      fail(Errc::Parse, "unterminated quote on line " + std::to_string(lineno));
    std::string key = s.substr(1, close - 1);
    std::size_t comma = s.find(',', close + 1);
    if (comma == std::string::npos)
      fail(Errc::Parse, "missing value field on line " + std::to_string(lineno));
    return {key, trim(s.substr(comma + 1))};
  }
  std::size_t comma = s.find(',');
  if (comma == std::string::npos)
    fail(Errc::Parse, "missing value field on line " + std::to_string(lineno));
  return {trim(s.substr(0, comma)), trim(s.substr(comma + 1))};
}

}  // namespace

Cplx parse_complex(const std::string& text) {
  std::string s = trim(text);
  if (s.empty()) fail(Errc::Parse, "empty numeric field");
  if (s.back() == 'i' || s.back() == 'I') {
    std::string body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
      if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) {
      std::string im = body.empty() || body == "+" || body == "-" ? body + "1" : body;
      return Cplx(0.0, parse_double(im));
    }
    std::string re = body.substr(0, split);
    std::string im = body.substr(split);
    if (im == "+" || im == "-") im += "1";
    return Cplx(parse_double(re), parse_double(im));
  }
  return Cplx(parse_double(s), 0.0);
}

std::string format_complex(Cplx v) {
  std::string s = fmt17(v.real());
  std::string im = fmt17(v.imag());
  if (!im.empty() && im[0] != '-') s.push_back('+');
  s += im;
  s.push_back('i');
  return s;
}

std::string dump_json(const Json& j) {
  std::string out;
  dump_into(out, j);
  return out;
}

Element element_from_label(const FiniteGroup& g, const std::string& label) {
  if (g.family() == GroupFamily::Symmetric)
    return g.element_of(Permutation::from_one_line(label, g.parameter()));
  std::size_t pos = 0;
  int v = -1;
  try {
    v = std::stoi(label, &pos);
  } catch (const std::exception&) {
    fail(Errc::Parse, "bad element label '" + label + "'");
  }
  if (pos != label.size() || v < 0 || v >= g.order())
    fail(Errc::Parse, "bad element label '" + label + "' for " + g.name());
  return v;
}

GroupFunction read_function_csv(std::istream& in, const GroupPtr& g, IngestInfo* info) {
  GroupFunction f;
  f.group = g;
  f.values = Eigen::VectorXcd::Zero(g->order());
  std::vector<char> seen(g->order(), 0);
  IngestInfo local;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto [key, value] = split_row(line, lineno);
    if (key.empty() && value.empty()) continue;
    Element x = element_from_label(*g, key);
    if (seen[x]) fail(Errc::Parse, "duplicate key '" + key + "' on line " + std::to_string(lineno));
    seen[x] = 1;
    f.values[x] = parse_complex(value);
    ++local.rows;
  }
  local.missing = g->order() - local.rows;
  if (info) *info = local;
  validate(f);
  return f;
}

GroupFunction read_function_json(std::istream& in, const GroupPtr& g, IngestInfo* info) {
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Errc::Parse, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
    fail(Errc::Parse, "function JSON must be an object with a 'values' array");
  if (j.contains("group") && j["group"].get<std::string>() != g->name())
    fail(Errc::Parse, "function JSON was written for group " + j["group"].get<std::string>());
  GroupFunction f;
  f.group = g;
  f.values = Eigen::VectorXcd::Zero(g->order());
  std::vector<char> seen(g->order(), 0);
  IngestInfo local;
  for (const Json& row : j["values"]) {
    if (!row.is_object() || !row.contains("element") || !row.contains("value"))
      fail(Errc::Parse, "function JSON rows need 'element' and 'value'");
    Element x = element_from_label(*g, row["element"].get<std::string>());
    if (seen[x]) fail(Errc::Parse, "duplicate element '" + row["element"].get<std::string>() + "'");
    seen[x] = 1;
    const Json& v = row["value"];
    if (v.is_array() && v.size() == 2)
      f.values[x] = Cplx(v[0].get<double>(), v[1].get<double>());
    else if (v.is_number())
      f.values[x] = Cplx(v.get<double>(), 0.0);
    else if (v.is_string())
      f.values[x] = parse_complex(v.get<std::string>());
    else
      fail(Errc::Parse, "function value must be [re, im], a number, or an 'a+bi' string");
    ++local.rows;
  }
  local.missing = g->order() - local.rows;
  if (info) *info = local;
  validate(f);
  return f;
}

CosetFunction read_coset_csv(std::istream& in, const CosetTransversal& space, IngestInfo* info) {
  const FiniteGroup& g = *space.subgroup.parent;
  CosetFunction f;
  f.space = space;
  f.values = Eigen::VectorXcd::Zero(space.count());
  std::vector<char> seen(space.count(), 0);
  IngestInfo local;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto [key, value] = split_row(line, lineno);
    if (key.empty() && value.empty()) continue;
    int coset = space.coset_of[element_from_label(g, key)];
    if (seen[coset])
      fail(Errc::Parse, "two rows name the same coset (line " + std::to_string(lineno) + ")");
    seen[coset] = 1;
    f.values[coset] = parse_complex(value);
    ++local.rows;
  }
  local.missing = space.count() - local.rows;
  if (info) *info = local;
  validate(f);
  return f;
}

std::string function_csv(const GroupFunction& f) {
  std::string out;
  for (Element x = 0; x < f.group->order(); ++x) {
    out.push_back('"');
    out += f.group->label(x);
    out += "\",";
    out += format_complex(f.values[x]);
    out.push_back('\n');
  }
  return out;
}

static Json complex_json(Cplx v) { return Json::array({v.real(), v.imag()}); }

Json function_json(const GroupFunction& f) {
  Json rows = Json::array();
  for (Element x = 0; x < f.group->order(); ++x)
    rows.push_back(Json{{"element", f.group->label(x)}, {"value", complex_json(f.values[x])}});
  return Json{{"group", f.group->name()}, {"values", rows}};
}

Json coset_function_json(const CosetFunction& f) {
  const FiniteGroup& g = *f.space.subgroup.parent;
  Json rows = Json::array();
  for (int i = 0; i < f.space.count(); ++i)
    rows.push_back(Json{{"coset", g.label(f.space.reps[i])}, {"value", complex_json(f.values[i])}});
  return Json{{"group", g.name()},
              {"subgroup", f.space.subgroup.spec},
              {"kind", f.space.kind == CosetKind::Left ? "left" : "right"},
              {"values", rows}};
}

Json matrix_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json fourier_json(const FourierCoefficients& F) {
  Json arr = Json::array();
  for (int r = 0; r < F.irreps->count(); ++r)
    arr.push_back(Json{{"irrep", F.irreps->irreps[r].label}, {"matrix", matrix_json(F.blocks[r])}});
  return arr;
}

Json power_json(const PowerSpectrum& p) {
  Json arr = Json::array();
  for (int r = 0; r < p.irreps->count(); ++r)
    arr.push_back(Json{{"irrep", p.irreps->irreps[r].label}, {"matrix", matrix_json(p.blocks[r])}});
  return Json{{"kind", "power"}, {"group", p.irreps->group->name()}, {"blocks", arr}};
}

Json bispectrum_json(const Bispectrum& b) {
  Json arr = Json::array();
  for (int i1 = 0; i1 < b.irreps->count(); ++i1)
    for (int i2 = 0; i2 < b.irreps->count(); ++i2)
      arr.push_back(Json{{"irrep1", b.irreps->irreps[i1].label},
                         {"irrep2", b.irreps->irreps[i2].label},
                         {"matrix", matrix_json(b.entries[i1][i2])}});
  return Json{{"kind", "bispectrum"},
              {"group", b.irreps->group->name()},
              {"convention", b.convention == BispectrumConvention::Plain ? "plain" : "coupled"},
              {"entries", arr}};
}

Json triple_json(const TripleCorrelation& t) {
  return Json{{"kind", "triple"},
              {"group", t.group->name()},
              {"order", t.group->order()},
              {"matrix", matrix_json(t.values)}};
}

Json skew_json(const SkewSpectrum& s) {
  const FiniteGroup& g = *s.irreps->group;
  Json arr = Json::array();
  for (std::size_t zi = 0; zi < s.zs.size(); ++zi)
    for (int r = 0; r < s.irreps->count(); ++r)
      arr.push_back(Json{{"z", g.label(s.zs[zi])},
                         {"irrep", s.irreps->irreps[r].label},
                         {"matrix", matrix_json(s.entries[zi][r])}});
  return Json{{"kind", "skew"}, {"group", g.name()}, {"entries", arr}};
}

Json counter_json(const OpCounter& ops) {
  auto phase = [](const PhaseCount& c) {
    return Json{{"scalarMults", c.mults}, {"scalarAdds", c.adds}};
  };
  PhaseCount t = ops.total();
  return Json{{"scalarMults", t.mults},
              {"scalarAdds", t.adds},
              {"phases", Json{{"ft", phase(ops.ft)}, {"cg", phase(ops.cg)}, {"products", phase(ops.products)}}}};
}

Json compare_json(const CompareReport& rep) {
  const char* verdict = rep.verdict == Verdict::Equivalent  ? "equivalent"
                        : rep.verdict == Verdict::Distinct ? "distinct"
                                                           : "inconclusive";
  return Json{{"verdict", verdict},
              {"spectraEqual", rep.spectra_equal},
              {"invertible", Json::array({rep.invertible_1, rep.invertible_2})},
              {"maxResidual", rep.max_residual},
              {"tol", rep.tol}};
}

Json rank_json(const RankReport& rep) {
  Json rows = Json::array();
  for (const RankRow& r : rep.rows)
    rows.push_back(Json{{"irrep", r.label},
                        {"rank", r.rank},
                        {"expected", r.expected},
                        {"largestSingularValue", r.smax},
                        {"ok", r.ok}});
  return Json{{"kind", "rank-condition"}, {"tolerance", rep.tolerance}, {"allOk", rep.all_ok}, {"rows", rows}};
}

void write_triple_binary(const TripleCorrelation& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::Io, "cannot open '" + path + "' for writing");
  out.write("TC01", 4);
  std::uint64_t n = static_cast<std::uint64_t>(t.group->order());
  out.write(reinterpret_cast<const char*>(&n), sizeof(n));
  for (Eigen::Index i = 0; i < t.values.rows(); ++i)
    for (Eigen::Index j = 0; j < t.values.cols(); ++j) {
      double re = t.values(i, j).real(), im = t.values(i, j).imag();
      out.write(reinterpret_cast<const char*>(&re), sizeof(re));
      out.write(reinterpret_cast<const char*>(&im), sizeof(im));
    }
  if (!out) fail(Errc::Io, "failed writing '" + path + "'");
}

TripleCorrelation read_triple_binary(const std::string& path, const GroupPtr& g) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::Io, "cannot open '" + path + "'");
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "TC01", 4) != 0) fail(Errc::Parse, "bad magic in '" + path + "'");
  std::uint64_t n = 0;
  in.read(reinterpret_cast<char*>(&n), sizeof(n));
  if (!in || n != static_cast<std::uint64_t>(g->order()))
    fail(Errc::Parse, "size header does not match group order");
  TripleCorrelation t;
  t.group = g;
  t.values.resize(g->order(), g->order());
  for (Eigen::Index i = 0; i < t.values.rows(); ++i)
    for (Eigen::Index j = 0; j < t.values.cols(); ++j) {
      double re = 0, im = 0;
      in.read(reinterpret_cast<char*>(&re), sizeof(re));
      in.read(reinterpret_cast<char*>(&im), sizeof(im));
      t.values(i, j) = Cplx(re, im);
    }
  if (!in) fail(Errc::Parse, "truncated file '" + path + "'");
  return t;
}

}  // namespace gs
