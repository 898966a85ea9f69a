#ifndef SCHURTAU_JSON_IO_HPP
#define SCHURTAU_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "schurtau/fredholm.hpp"
#include "schurtau/hirota.hpp"
#include "schurtau/measures.hpp"

namespace schurtau {

using json = nlohmann::json;

// Wire formats:
//   Partition       [2,1]
//   HalfInt         "k/2" with k the doubled value, e.g. "-1/2"
//   Complex         [re, im]
//   ParamSeq        {"1": [re,im], "2": [re,im], ...}
//   SigmaWeight     {"kind": "...", "u": ..., "values": {"-1/2": v, ...}}
//   LaurentWindow   {"N": n, "coeffs": [[re,im], ...]}  (k = -N..N)

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

std::string halfint_to_string(HalfInt k);
HalfInt halfint_from_string(const std::string& s);

json to_json(Complex z);
Complex complex_from_json(const json& j);

json to_json(const ParamSeq& t);
ParamSeq paramseq_from_json(const json& j);

json to_json(const SigmaWeight& s);
SigmaWeight sigma_from_json(const json& j, bool allow_nonstandard = false);

json to_json(const LaurentWindow& w);

json to_json(const MeasureTable& tab);

json to_json(const KernelMatrix& km);
// rows = x, header = y, complex entries "re+imj"
std::string kernel_to_csv(const KernelMatrix& km);

json to_json(const TauValue& tv);
json to_json(const HirotaCase& c);

}  // namespace schurtau

#endif
