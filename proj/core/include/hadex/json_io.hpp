#pragma once

#include <nlohmann/json.hpp>

#include "hadex/hadamard.hpp"
#include "hadex/matrix.hpp"
#include "hadex/mixture.hpp"
#include "hadex/nae.hpp"
#include "hadex/partition_algebra.hpp"
#include "hadex/rational.hpp"
#include "hadex/subset.hpp"

// JSON encodings shared by the CLI and the golden files.
//
// Rationals are bare JSON integers when the denominator is 1 and the value
// fits in 64 bits, otherwise strings "a/b" (or "a"). Matrices are
// {"rows": n, "cols": k, "data": [[...], ...]}. Subsets are sorted arrays of
// 1-based indices. Object keys come out in lexicographic order.
namespace hadex::json {

using nlohmann::json;

json encode(const Rational& r);
Rational decode_rational(const json& j);

json encode(const Vector& v);
Vector decode_vector(const json& j);

json encode(const Matrix& m);
Matrix decode_matrix(const json& j);

json encode(const SubsetIndex& s);
SubsetIndex decode_subset(const json& j, unsigned ground_size);

/// {"n": n, "moments": {"<mask>": value, ...}}, keys are decimal bitmasks.
json encode(const MomentVector& mu);
MomentVector decode_moments(const json& j);

json encode(const NaeReport& report);
json encode(const Partition& partition);
json encode(const IdentifiabilityReport& report);

}  // namespace hadex::json
