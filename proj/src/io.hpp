#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "equivalence.hpp"
#include "homogeneous.hpp"

namespace gs {

using Json = nlohmann::ordered_json;
using Cplx = std::complex<double>;

// "a+bi" literals; plain reals and bare imaginary parts accepted.
Cplx parse_complex(const std::string& text);
std::string format_complex(Cplx v);  // always "re+imi", %.17g parts

// Deterministic serialization: insertion-ordered keys, floats as %.17g.
std::string dump_json(const Json& j);

struct IngestInfo {
  int rows = 0;
  int missing = 0;
};

// CSV rows `"<element label>",<value>`; dense JSON uses
// {"group": ..., "values": [{"element": ..., "value": [re, im]}]}.
// Duplicate keys are errors; absent elements default to 0 and are counted.
GroupFunction read_function_csv(std::istream& in, const GroupPtr& g, IngestInfo* info);
GroupFunction read_function_json(std::istream& in, const GroupPtr& g, IngestInfo* info);
// Rows `"<coset representative label>",<value>`; any member of a coset may
// stand for it, two rows landing in one coset are an error.
CosetFunction read_coset_csv(std::istream& in, const CosetTransversal& space, IngestInfo* info);

std::string function_csv(const GroupFunction& f);
Json function_json(const GroupFunction& f);
Json coset_function_json(const CosetFunction& f);

Json matrix_json(const Eigen::MatrixXcd& m);  // [[[re,im], ...], ...]
Json fourier_json(const FourierCoefficients& F);
Json power_json(const PowerSpectrum& p);
Json bispectrum_json(const Bispectrum& b);
Json triple_json(const TripleCorrelation& t);
Json skew_json(const SkewSpectrum& s);
Json counter_json(const OpCounter& ops);
Json compare_json(const CompareReport& rep);
Json rank_json(const RankReport& rep);

// Dense binary layout: magic "TC01", u64 group order, then row-major
// complex doubles (re, im interleaved), native endianness.
void write_triple_binary(const TripleCorrelation& t, const std::string& path);
TripleCorrelation read_triple_binary(const std::string& path, const GroupPtr& g);

Element element_from_label(const FiniteGroup& g, const std::string& label);

}  // namespace gs
