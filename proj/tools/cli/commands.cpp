#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "families.hpp"
#include "hadex/error.hpp"
#include "hadex/hadamard.hpp"
#include "hadex/json_io.hpp"
#include "hadex/mixture.hpp"
#include "hadex/nae.hpp"
#include "hadex/partition_algebra.hpp"
#include "hadex/subspace.hpp"
#include "selftest.hpp"

namespace hadex::cli {

namespace {

using hadex::json::json;
namespace codec = hadex::json;

struct Options {
  std::string input = "-";
  std::string format = "json";
  std::string family;
  std::size_t k = 0;
  std::size_t copies = 0;
  std::string row;
  unsigned l = 0;
  std::string cols;
  std::size_t block = 0;
  bool exhaustive = false;
  std::size_t size = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

json read_input(const Options& opts, std::istream& in) {
  if (opts.input == "-") return json::parse(in);
  std::ifstream file(opts.input);
  if (!file) throw ParseError("cannot open input file '" + opts.input + "'");
  return json::parse(file);
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("input needs a field \"") + name + "\"");
  }
  return j.at(name);
}

json cmd_gen(const Options& opts) {
  if (opts.family == "vandermonde") {
    Vector row;
    if (opts.row.empty()) {
      for (std::size_t j = 0; j < opts.k; ++j) row.emplace_back(static_cast<std::int64_t>(j));
    } else {
      for (const auto& s : split(opts.row, ',')) row.push_back(Rational::parse(s));
    }
    if (opts.k != 0 && row.size() != opts.k) {
      throw DomainError("vandermonde: --row has " + std::to_string(row.size()) +
                        " entries but --k is " + std::to_string(opts.k));
    }
    const std::size_t copies = opts.copies != 0 ? opts.copies : row.size() - 1;
    return codec::encode(vandermonde_family(row, copies));
  }
  if (opts.family == "hamming") return codec::encode(hamming_family(opts.l));
  if (opts.family == "stairstep") return codec::encode(stairstep_family(opts.k));
  throw ParseError("unknown family '" + opts.family + "' (expected vandermonde, hamming, stairstep)");
}

json cmd_rank(const Matrix& m) {
  const std::size_t rank = full_extension_rank(m);
  return {{"rank", rank}, {"full", rank == m.cols()}};
}

json cmd_minrows(const Matrix& m, const Options& opts) {
  json out;
  const GreedyResult greedy = greedy_min_rows(m);
  if (const auto* rows = std::get_if<SubsetIndex>(&greedy)) {
    out["greedy"] = codec::encode(*rows);
    out["rank"] = m.cols();
  } else {
    out["greedy"] = nullptr;
    out["rank"] = std::get<NotFullRank>(greedy).rank;
  }
  if (opts.exhaustive) {
    const std::size_t size =
        opts.size != 0 ? opts.size : (m.cols() > 0 ? m.cols() - 1 : 0);
    json list = json::array();
    for (const auto& s : exhaustive_min_rows(m, static_cast<unsigned>(size))) {
      list.push_back(codec::encode(s));
    }
    out["exhaustive"] = std::move(list);
  }
  return out;
}

json cmd_eps(const Matrix& m, const Options& opts) {
  if (opts.cols.empty()) return codec::encode(eps_bar(m));
  json indices = json::array();
  for (const auto& s : split(opts.cols, ',')) {
    try {
      indices.push_back(std::stoll(s));
    } catch (const std::exception&) {
      throw ParseError("--cols expects comma-separated 1-based indices, got '" + opts.cols + "'");
    }
  }
  const SubsetIndex cols = codec::decode_subset(indices, static_cast<unsigned>(m.cols()));
  return {{"cols", codec::encode(cols)},
          {"eps", eps(m, cols)},
          {"nae_rows", codec::encode(nae_rows(m, cols))}};
}

json cmd_nae_restrict(const Matrix& m, const Options& opts) {
  json out = {{"rows", codec::encode(nae_restrict(m))}};
  if (opts.exhaustive) {
    json list = json::array();
    for (const auto& s : exhaustive_nae_restrict(m)) list.push_back(codec::encode(s));
    out["exhaustive"] = std::move(list);
  }
  return out;
}

std::size_t block_index(const Options& opts) {
  if (opts.block == 0) throw ParseError("--block is required (1-based block index)");
  return opts.block - 1;
}

json cmd_invariant(const json& input) {
  const Vector v = codec::decode_vector(field(input, "v"));
  const Matrix spanning = codec::decode_matrix(field(input, "u"));
  if (spanning.cols() != v.size()) {
    throw DomainError("u has " + std::to_string(spanning.cols()) + " columns but v has length " +
                      std::to_string(v.size()));
  }
  const Subspace u = Subspace::row_space(spanning);
  const bool invariant = is_invariant(v, u);
  const bool respecting = respects(u, blocks_of(v));
  if (invariant != respecting) {
    throw std::logic_error("invariance and block-respect disagree");
  }
  return {{"invariant", invariant}, {"respects", respecting}};
}

json cmd_moments(const json& input) {
  MixtureParams params(codec::decode_matrix(field(input, "m")),
                       codec::decode_vector(field(input, "pi")));
  return codec::encode(moment_map(params));
}

json cmd_recover_pi(const json& input) {
  const Matrix m = codec::decode_matrix(field(input, "m"));
  const MomentVector moments = codec::decode_moments(field(input, "moments"));
  return {{"pi", codec::encode(recover_pi(m, moments))}};
}

std::pair<json, int> cmd_selftest() {
  json checks = json::array();
  bool all = true;
  for (const auto& c : run_selftest()) {
    json entry = {{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
    all = all && c.pass;
  }
  return {{{"checks", std::move(checks)}, {"pass", all}}, all ? kOk : kDomainError};
}

json error_object(const std::string& message, const std::string& witness) {
  json w = nullptr;
  if (!witness.empty()) {
    w = json::parse(witness, nullptr, false);
    if (w.is_discarded()) w = witness;
  }
  return {{"error", message}, {"witness", std::move(w)}};
}

void add_input(CLI::App* sub, Options& opts) {
  sub->add_option("-i,--input", opts.input, "Input JSON file ('-' for stdin)");
  sub->add_option("--format", opts.format, "Output format (only json)")
      ->check(CLI::IsMember({"json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opts;
  CLI::App app{"Hadamard extensions, NAE deficiency and mixture moments over exact rationals",
               "hadex"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate an example matrix family");
  gen->add_option("family", opts.family, "vandermonde | hamming | stairstep")->required();
  gen->add_option("--k", opts.k, "Column count (vandermonde, stairstep)");
  gen->add_option("--copies", opts.copies, "Number of identical rows (vandermonde)");
  gen->add_option("--row", opts.row, "Comma-separated distinct row entries (vandermonde)");
  gen->add_option("--l", opts.l, "Number of rows; k = 2^l (hamming)");
  gen->add_option("--format", opts.format, "Output format (only json)")->check(CLI::IsMember({"json"}));

  auto* hadext = app.add_subcommand("hadext", "Materialize the Hadamard extension H(m)");
  auto* rank = app.add_subcommand("rank", "Column rank of H(m)");
  auto* minrows = app.add_subcommand("minrows", "Rank-certifying row subsets");
  minrows->add_flag("--exhaustive", opts.exhaustive, "Also list every certifying subset of --size");
  minrows->add_option("--size", opts.size, "Subset size for --exhaustive (default k-1)");
  auto* eps_cmd = app.add_subcommand("eps", "Deficiency eps(m|^C) for --cols, else eps_bar");
  eps_cmd->add_option("--cols", opts.cols, "Comma-separated 1-based column indices");
  auto* nae_check = app.add_subcommand("nae-check", "eps_bar(m) and the NAE condition");
  auto* nae_restrict_cmd = app.add_subcommand("nae-restrict", "k-1 rows with eps_bar = -1");
  nae_restrict_cmd->add_flag("--exhaustive", opts.exhaustive, "Also list every such row set");
  auto* blocks = app.add_subcommand("blocks", "Value partition B(v) of {\"v\": [...]}");
  auto* project_cmd = app.add_subcommand("project", "Projection P_(i) as a Lagrange polynomial");
  project_cmd->add_option("--block", opts.block, "1-based block index")->required();
  auto* invariant = app.add_subcommand("invariant", "Invariance of span(u) under v and B(v)-respect");
  auto* moments = app.add_subcommand("moments", "Moment map of {\"m\": ..., \"pi\": ...}");
  auto* recover = app.add_subcommand("recover-pi", "Recover pi from {\"m\": ..., \"moments\": ...}");
  auto* selftest = app.add_subcommand("selftest", "Run the built-in golden checks");

  for (auto* sub : {hadext, rank, minrows, eps_cmd, nae_check, nae_restrict_cmd, blocks,
                    project_cmd, invariant, moments, recover}) {
    add_input(sub, opts);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hadex: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    json result;
    int code = kOk;
    if (gen->parsed()) {
      result = cmd_gen(opts);
    } else if (selftest->parsed()) {
      std::tie(result, code) = cmd_selftest();
    } else {
      const json input = read_input(opts, in);
      if (hadext->parsed()) {
        result = codec::encode(hadamard_extension(codec::decode_matrix(input)));
      } else if (rank->parsed()) {
        result = cmd_rank(codec::decode_matrix(input));
      } else if (minrows->parsed()) {
        result = cmd_minrows(codec::decode_matrix(input), opts);
      } else if (eps_cmd->parsed()) {
        result = cmd_eps(codec::decode_matrix(input), opts);
      } else if (nae_check->parsed()) {
        result = codec::encode(eps_bar(codec::decode_matrix(input)));
      } else if (nae_restrict_cmd->parsed()) {
        result = cmd_nae_restrict(codec::decode_matrix(input), opts);
      } else if (blocks->parsed()) {
        result = codec::encode(blocks_of(codec::decode_vector(field(input, "v"))));
      } else if (project_cmd->parsed()) {
        result = codec::encode(
            lagrange_projection(codec::decode_vector(field(input, "v")), block_index(opts)));
      } else if (invariant->parsed()) {
        result = cmd_invariant(input);
      } else if (moments->parsed()) {
        result = cmd_moments(input);
      } else if (recover->parsed()) {
        result = cmd_recover_pi(input);
      }
    }
    out << result.dump() << "\n";
    return code;
  } catch (const ParseError& e) {
    err << "hadex: malformed input: " << e.what() << "\n";
    return kUsageError;
  } catch (const json::exception& e) {
    err << "hadex: malformed input: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    out << error_object(e.what(), e.witness()).dump() << "\n";
    return kDomainError;
  } catch (const std::logic_error& e) {
    out << error_object(std::string("internal invariant failed: ") + e.what(), {}).dump() << "\n";
    return kDomainError;
  }
}

}  // namespace hadex::cli
