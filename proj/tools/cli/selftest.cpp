#include "selftest.hpp"

#include <exception>
#include <functional>

#include "families.hpp"
#include "hadex/hadamard.hpp"
#include "hadex/json_io.hpp"
#include "hadex/mixture.hpp"
#include "hadex/nae.hpp"
#include "hadex/subspace.hpp"

namespace hadex::cli {

namespace {

using hadex::json::json;

Matrix parse_matrix(const char* text) { return hadex::json::decode_matrix(json::parse(text)); }

// The Fourier matrix of (Z/2)^2 in (|S|, bitmask) row order.
constexpr const char* kFourier4 =
    R"({"rows":4,"cols":4,"data":[[1,1,1,1],[1,-1,1,-1],[1,1,-1,-1],[1,-1,-1,1]]})";

// Matrices with two identical columns.
constexpr const char* kIdenticalColumns[] = {
    R"({"rows":1,"cols":2,"data":[[3,3]]})",
    R"({"rows":2,"cols":3,"data":[[1,1,2],[1,1,3]]})",
    R"({"rows":3,"cols":3,"data":[[0,1,0],["1/2",2,"1/2"],[5,-1,5]]})",
    R"({"rows":4,"cols":4,"data":[[1,2,3,2],[4,5,6,5],[7,8,9,8],["1/3","1/4","1/5","1/4"]]})",
};

struct Check {
  const char* name;
  std::function<bool(std::string&)> body;
};

std::vector<Check> checks() {
  std::vector<Check> out;

  out.push_back({"fourier row is the product of the two sign rows", [](std::string& d) {
                   const Vector got = hadamard_product(Vector{1, -1, 1, -1}, Vector{1, 1, -1, -1});
                   d = hadex::json::encode(got).dump();
                   return got == Vector{1, -1, -1, 1};
                 }});

  out.push_back({"gen hamming l=2 is the 2x4 sign matrix", [](std::string& d) {
                   const Matrix m = hamming_family(2);
                   d = hadex::json::encode(m).dump();
                   return m == parse_matrix(R"({"rows":2,"cols":4,"data":[[1,-1,1,-1],[1,1,-1,-1]]})");
                 }});

  out.push_back({"hamming l=2 extension is the 4x4 fourier matrix", [](std::string& d) {
                   const Matrix h = hadamard_extension(hamming_family(2));
                   d = hadex::json::encode(h).dump();
                   return h == parse_matrix(kFourier4);
                 }});

  out.push_back({"hamming l=2 extension has rank 4 by both routes", [](std::string& d) {
                   const Matrix m = hamming_family(2);
                   const auto fold = full_extension_rank(m);
                   const auto direct = materialized_extension_rank(m);
                   d = std::to_string(fold) + "/" + std::to_string(direct);
                   return fold == 4 && direct == 4;
                 }});

  out.push_back({"hamming l=2 greedy certificate is {1,2}", [](std::string& d) {
                   const GreedyResult r = greedy_min_rows(hamming_family(2));
                   const auto* rows = std::get_if<SubsetIndex>(&r);
                   d = rows ? hadex::json::encode(*rows).dump() : "not full rank";
                   return rows && *rows == SubsetIndex::of(2, {0, 1});
                 }});

  out.push_back({"hamming l=2 is full rank although eps_bar < -1", [](std::string& d) {
                   const NaeReport report = eps_bar(hamming_family(2));
                   d = hadex::json::encode(report).dump();
                   return report.eps_bar < -1;
                 }});

  out.push_back({"two identical columns have matrix rank 1", [](std::string& d) {
                   const Matrix a = parse_matrix(R"({"rows":3,"cols":2,"data":[[1,1],[2,2],["1/2","1/2"]]})");
                   d = std::to_string(matrix_rank(a));
                   return matrix_rank(a) == 1;
                 }});

  out.push_back({"identical columns are never full rank", [](std::string& d) {
                   for (const char* text : kIdenticalColumns) {
                     const Matrix m = parse_matrix(text);
                     if (full_extension_rank(m) >= m.cols() ||
                         materialized_extension_rank(m) >= m.cols() ||
                         identifiability_gate(m).full_rank) {
                       d = text;
                       return false;
                     }
                   }
                   return true;
                 }});

  out.push_back({"one varying row over three columns forces eps_bar <= -2", [](std::string& d) {
                   const Matrix m = parse_matrix(R"({"rows":3,"cols":3,"data":[[1,1,1],[0,1,2],[4,4,4]]})");
                   const NaeReport report = eps_bar(m);
                   d = hadex::json::encode(report).dump();
                   return report.eps_bar <= -2 && full_extension_rank(m) < 3;
                 }});

  out.push_back({"vandermonde family k<=6 has a k-1 row certificate", [](std::string& d) {
                   for (std::size_t k = 1; k <= 6; ++k) {
                     Vector row;
                     for (std::size_t j = 0; j < k; ++j) row.emplace_back(static_cast<std::int64_t>(j));
                     for (std::size_t copies : {k - 1, k + 1}) {
                       const Matrix m = vandermonde_family(row, copies);
                       const GreedyResult r = greedy_min_rows(m);
                       const auto* rows = std::get_if<SubsetIndex>(&r);
                       if (full_extension_rank(m) != k || !rows || rows->size() != k - 1) {
                         d = "k=" + std::to_string(k) + " copies=" + std::to_string(copies);
                         return false;
                       }
                     }
                   }
                   return true;
                 }});

  out.push_back({"three identical rows (0,1,2) restrict to rows {1,2}", [](std::string& d) {
                   const Matrix m = vandermonde_family(Vector{0, 1, 2}, 3);
                   const SubsetIndex rows = nae_restrict(m);
                   d = hadex::json::encode(rows).dump();
                   return rows == SubsetIndex::of(3, {0, 1});
                 }});

  out.push_back({"stairstep family k<=6 has eps_bar -1 and full rank", [](std::string& d) {
                   for (std::size_t k = 2; k <= 6; ++k) {
                     const Matrix m = stairstep_family(k);
                     if (eps_bar(m).eps_bar != -1 || full_extension_rank(m) != k) {
                       d = "k=" + std::to_string(k);
                       return false;
                     }
                   }
                   return true;
                 }});

  out.push_back({"gen stairstep k=3 matches its golden matrix", [](std::string& d) {
                   const Matrix m = stairstep_family(3);
                   d = hadex::json::encode(m).dump();
                   return m == parse_matrix(R"({"rows":2,"cols":3,"data":[["1/2",1,1],["1/2","1/2",1]]})");
                 }});

  out.push_back({"two-column mixture moments and pi recovery", [](std::string& d) {
                   const Matrix m = parse_matrix(R"({"rows":1,"cols":2,"data":[["1/4","3/4"]]})");
                   const MomentVector half = moment_map(MixtureParams(m, {Rational(1, 2), Rational(1, 2)}));
                   const MomentVector third = moment_map(MixtureParams(m, {Rational(1, 3), Rational(2, 3)}));
                   const Vector pi = recover_pi(m, third);
                   d = hadex::json::encode(pi).dump();
                   return half.values()[1] == Rational(1, 2) && third.values()[1] == Rational(7, 12) &&
                          pi == Vector{Rational(1, 3), Rational(2, 3)};
                 }});

  return out;
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  std::vector<SelftestCheck> results;
  for (auto& check : checks()) {
    SelftestCheck r{check.name, false, {}};
    try {
      r.pass = check.body(r.detail);
    } catch (const std::exception& e) {
      r.detail = std::string("threw: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace hadex::cli
