#include "hadex/json_io.hpp"

#include <string>

#include "hadex/error.hpp"

namespace hadex::json {

namespace {

std::size_t decode_count(const json& j, const char* field) {
  if (!j.contains(field)) throw ParseError(std::string("missing field \"") + field + "\"");
  const json& v = j.at(field);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ParseError(std::string("field \"") + field + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

json encode(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p()) return r.numerator().get_si();
  return r.to_string();
}

Rational decode_rational(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational::parse(std::to_string(j.get<std::uint64_t>()));
    return Rational(j.get<std::int64_t>());
  }
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected an integer or an \"a/b\" string, got " + j.dump());
}

json encode(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

Vector decode_vector(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
  Vector out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(decode_rational(x));
  return out;
}

json encode(const Matrix& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) data.push_back(encode(m.row_vector(i)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix decode_matrix(const json& j) {
  if (!j.is_object()) throw ParseError("matrix must be a JSON object");
  const std::size_t rows = decode_count(j, "rows");
  const std::size_t cols = decode_count(j, "cols");
  if (!j.contains("data") || !j.at("data").is_array()) {
    throw ParseError("matrix field \"data\" must be an array of rows");
  }
  const json& data = j.at("data");
  if (data.size() != rows) {
    throw ParseError("matrix declares " + std::to_string(rows) + " rows but data has " +
                     std::to_string(data.size()));
  }
  Matrix m(0, cols);
  for (const auto& row : data) {
    Vector v = decode_vector(row);
    if (v.size() != cols) {
      throw ParseError("matrix declares " + std::to_string(cols) +
                       " columns but a row has " + std::to_string(v.size()));
    }
    m.append_row(v);
  }
  return m;
}

json encode(const SubsetIndex& s) {
  json out = json::array();
  for (unsigned i : s) out.push_back(i + 1);
  return out;
}

SubsetIndex decode_subset(const json& j, unsigned ground_size) {
  if (!j.is_array()) throw ParseError("subset must be an array of 1-based indices");
  std::vector<unsigned> members;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 1 ||
        x.get<std::int64_t>() > static_cast<std::int64_t>(ground_size)) {
      throw ParseError("subset index " + x.dump() + " outside 1.." + std::to_string(ground_size));
    }
    members.push_back(static_cast<unsigned>(x.get<std::int64_t>() - 1));
  }
  return SubsetIndex::of(ground_size, members);
}

json encode(const MomentVector& mu) {
  json moments = json::object();
  for (std::size_t s = 0; s < mu.values().size(); ++s) {
    moments[std::to_string(s)] = encode(mu.values()[s]);
  }
  return {{"n", mu.n()}, {"moments", std::move(moments)}};
}

MomentVector decode_moments(const json& j) {
  if (!j.is_object()) throw ParseError("moment vector must be a JSON object");
  const std::size_t n = decode_count(j, "n");
  if (n > kMaxExtensionRows) {
    throw GuardError("moment vector over n = " + std::to_string(n) + " exceeds the guard n <= " +
                     std::to_string(kMaxExtensionRows));
  }
  if (!j.contains("moments") || !j.at("moments").is_object()) {
    throw ParseError("field \"moments\" must be an object keyed by decimal bitmasks");
  }
  const json& moments = j.at("moments");
  if (!moments.contains("0")) throw ParseError("the empty-set moment \"0\" is mandatory");
  const std::size_t count = std::size_t{1} << n;
  std::vector<Rational> values(count);
  std::vector<bool> seen(count, false);
  for (const auto& [key, value] : moments.items()) {
    std::size_t mask = 0;
    std::size_t used = 0;
    try {
      mask = std::stoull(key, &used);
    } catch (const std::exception&) {
      throw ParseError("moment key \"" + key + "\" is not a decimal bitmask");
    }
    if (used != key.size() || mask >= count || std::to_string(mask) != key) {
      throw ParseError("moment key \"" + key + "\" is not a bitmask over n = " +
                       std::to_string(n));
    }
    values[mask] = decode_rational(value);
    seen[mask] = true;
  }
  for (std::size_t s = 0; s < count; ++s) {
    if (!seen[s]) throw ParseError("missing moment for subset mask " + std::to_string(s));
  }
  return {static_cast<unsigned>(n), std::move(values)};
}

json encode(const NaeReport& report) {
  return {{"eps_bar", report.eps_bar},
          {"nae_condition", report.satisfied()},
          {"witness", encode(report.witness_columns)},
          {"witness_nae_rows", encode(report.nae_rows_of_witness)}};
}

json encode(const Partition& partition) {
  json blocks = json::array();
  for (const auto& b : partition.blocks) blocks.push_back(encode(b));
  return {{"ambient", partition.ambient},
          {"values", encode(partition.values)},
          {"blocks", std::move(blocks)}};
}

json encode(const IdentifiabilityReport& report) {
  return {{"k", report.k},
          {"rank", report.rank},
          {"full", report.full_rank},
          {"certificate", report.certificate ? encode(*report.certificate) : json(nullptr)},
          {"separated_rows", report.separated_rows}};
}

}  // namespace hadex::json
