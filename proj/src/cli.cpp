#include "branchkit/cli.hpp"

#include "branchkit/branching.hpp"
#include "branchkit/core.hpp"
#include "branchkit/oracle.hpp"
#include "branchkit/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace branchkit::cli {

namespace {

using nlohmann::json;

enum class Format { Pretty, Json, Csv };

/// Raised for a mathematical disagreement; carries the diff already printed.
struct Mismatch {};

std::string paren(std::span<const Part> parts) { return "(" + to_string(parts) + ")"; }
std::string paren(const DominantWeight& weight) { return paren(weight.parts()); }

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

json parts_json(std::span<const Part> parts) { return json(std::vector<Part>(parts.begin(), parts.end())); }

json meta_json(const std::string& formula) { return json{{"version", kVersion}, {"formula", formula}}; }

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  return Format::Pretty;
}

std::int64_t resolve_max_dim(std::optional<std::int64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BRANCHKIT_MAX_DIM")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("BRANCHKIT_MAX_DIM is not an integer: '") + env + "'");
    }
  }
  return kDefaultMaxDim;
}

// ---------------------------------------------------------------- branch

void run_branch(const std::string& pair_text, const std::string& lambda_text,
                const std::optional<std::string>& mu_text, Format format, std::ostream& out) {
  const BranchPair pair = parse_pair(pair_text);
  const DominantWeight lambda = make_weight(pair.big(), parse_parts(lambda_text));

  if (mu_text) {
    const DominantWeight mu = make_weight(pair.small(), parse_parts(*mu_text));
    const Integer mult = multiplicity(pair, lambda, mu);
    switch (format) {
      case Format::Pretty:
        out << "m(" << paren(lambda) << ", " << paren(mu) << ") = " << to_decimal(mult) << "\n";
        break;
      case Format::Csv:
        out << "pair,lambda,mu,mult\n"
            << csv_field(to_string(pair)) << ',' << csv_field(to_string(lambda)) << ','
            << csv_field(to_string(mu)) << ',' << to_decimal(mult) << "\n";
        break;
      case Format::Json: {
        json record{{"pair", to_string(pair)},
                    {"lambda", parts_json(lambda.parts())},
                    {"rows", json::array({json{{"mu", parts_json(mu.parts())}, {"mult", to_decimal(mult)}}})},
                    {"dim_check", nullptr},
                    {"meta", meta_json("determinant")}};
        out << record.dump(2) << "\n";
        break;
      }
    }
    return;
  }

  const MultiplicityTable table = decompose(pair, lambda);
  const auto [lhs, rhs] = dimension_sum(table);
  const bool ok = lhs == rhs;
  switch (format) {
    case Format::Pretty: {
      out << to_string(pair) << "  lambda = " << paren(lambda) << "\n";
      std::size_t width = 2;
      for (const auto& row : table.rows) width = std::max(width, paren(row.mu).size());
      for (const auto& row : table.rows) {
        out << "  " << std::left << std::setw(static_cast<int>(width)) << paren(row.mu) << "  "
            << to_decimal(row.mult) << "\n";
      }
      out << "dimension check: " << to_decimal(lhs) << (ok ? " = " : " != ") << to_decimal(rhs)
          << (ok ? " OK" : " MISMATCH") << "\n";
      break;
    }
    case Format::Csv:
      out << "pair,lambda,mu,mult\n";
      for (const auto& row : table.rows) {
        out << csv_field(to_string(pair)) << ',' << csv_field(to_string(lambda)) << ','
            << csv_field(to_string(row.mu)) << ',' << to_decimal(row.mult) << "\n";
      }
      break;
    case Format::Json: {
      json rows = json::array();
      for (const auto& row : table.rows) {
        rows.push_back(json{{"mu", parts_json(row.mu.parts())}, {"mult", to_decimal(row.mult)}});
      }
      json record{{"pair", to_string(pair)},
                  {"lambda", parts_json(lambda.parts())},
                  {"rows", rows},
                  {"dim_check", json{{"lhs", to_decimal(lhs)}, {"rhs", to_decimal(rhs)}, {"ok", ok}}},
                  {"meta", meta_json("determinant")}};
      out << record.dump(2) << "\n";
      break;
    }
  }
  if (!ok) throw Mismatch{};
}

// ---------------------------------------------------------------- dim

void run_dim(const std::string& group_text, const std::string& lambda_text, const std::string& method,
             std::ostream& out, std::ostream& err) {
  const ClassicalGroup group = parse_group(group_text);
  const DominantWeight lambda = make_weight(group, parse_parts(lambda_text));
  if (method == "product") {
    out << to_decimal(weyl_dim_product(group, lambda)) << "\n";
  } else if (method == "det") {
    out << to_decimal(weyl_dim_det(group, lambda)) << "\n";
  } else {
    const Integer product = weyl_dim_product(group, lambda);
    const Integer det = weyl_dim_det(group, lambda);
    if (product == det) {
      out << to_decimal(product) << " = " << to_decimal(det) << " OK\n";
    } else {
      out << to_decimal(product) << " != " << to_decimal(det) << " MISMATCH\n";
      err << "product formula and determinant formula disagree\n";
      throw Mismatch{};
    }
  }
}

// ---------------------------------------------------------------- table

struct ReferenceTable {
  int number;
  std::vector<Part> lambda;
  std::vector<std::vector<Part>> mus;
  std::vector<std::pair<std::string, std::vector<long>>> rows;  // pair, expected
};

const ReferenceTable& reference_table(int number) {
  static const ReferenceTable table2{
      2,
      {2, 1, 0},
      {{0}, {1}, {2}},
      {{"Sp:6/Sp:2", {20, 16, 4}},
       {"SO:7/SO:3", {20, 20, 5}},
       {"SO:6/SO:2", {24, 16, 4}},
       {"SO:6/SO:3", {8, 12, 4}},
       {"SO:7/SO:2", {45, 25, 5}},
       {"GL:3/GL:1", {2, 4, 2}}}};
  static const ReferenceTable table3{
      3,
      {3, 1, 0, 0},
      {{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 0}, {3, 1}},
      {{"Sp:8/Sp:4", {45, 40, 10, 16, 4, 4, 1}},
       {"SO:9/SO:5", {45, 40, 10, 16, 4, 4, 1}},
       {"SO:8/SO:4", {45, 40, 10, 16, 4, 4, 1}}}};
  return number == 2 ? table2 : table3;
}

void run_table(int number, Format format, std::ostream& out, std::ostream& err) {
  const ReferenceTable& reference = reference_table(number);
  struct Row {
    std::string pair;
    std::vector<Integer> computed;
    std::vector<long> expected;
  };
  std::vector<Row> rows;
  bool all_ok = true;
  for (const auto& [pair_text, expected] : reference.rows) {
    const BranchPair pair = parse_pair(pair_text);
    const DominantWeight lambda = make_weight(pair.big(), reference.lambda);
    Row row{pair_text, {}, expected};
    for (const auto& mu : reference.mus) row.computed.push_back(multiplicity(pair, lambda, make_weight(pair.small(), mu)));
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (row.computed[k] != expected[k]) {
        all_ok = false;
        err << "mismatch: " << pair_text << " mu=" << paren(reference.mus[k]) << " computed "
            << to_decimal(row.computed[k]) << ", expected " << expected[k] << "\n";
      }
    }
    rows.push_back(std::move(row));
  }

  switch (format) {
    case Format::Pretty: {
      out << "Table " << number << ": lambda = " << paren(reference.lambda) << "\n";
      out << std::left << std::setw(12) << "pair";
      for (const auto& mu : reference.mus) out << std::right << std::setw(8) << paren(mu);
      out << "\n";
      for (const auto& row : rows) {
        out << std::left << std::setw(12) << row.pair;
        for (const auto& value : row.computed) out << std::right << std::setw(8) << to_decimal(value);
        out << "\n";
      }
      out << (all_ok ? "all entries match the reference values\n" : "MISMATCH against the reference values\n");
      break;
    }
    case Format::Csv:
      out << "pair,lambda,mu,mult\n";
      for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.computed.size(); ++k) {
          out << csv_field(row.pair) << ',' << csv_field(to_string(reference.lambda)) << ','
              << csv_field(to_string(reference.mus[k])) << ',' << to_decimal(row.computed[k]) << "\n";
        }
      }
      break;
    case Format::Json: {
      json mus = json::array();
      for (const auto& mu : reference.mus) mus.push_back(parts_json(mu));
      json table_rows = json::array();
      for (const auto& row : rows) {
        json computed = json::array(), expected = json::array();
        bool ok = true;
        for (std::size_t k = 0; k < row.computed.size(); ++k) {
          computed.push_back(to_decimal(row.computed[k]));
          expected.push_back(std::to_string(row.expected[k]));
          ok = ok && row.computed[k] == row.expected[k];
        }
        table_rows.push_back(json{{"pair", row.pair}, {"mults", computed}, {"expected", expected}, {"ok", ok}});
      }
      json record{{"table", number},
                  {"lambda", parts_json(reference.lambda)},
                  {"mus", mus},
                  {"rows", table_rows},
                  {"ok", all_ok},
                  {"meta", meta_json("determinant")}};
      out << record.dump(2) << "\n";
      break;
    }
  }
  if (!all_ok) throw Mismatch{};
}

// ---------------------------------------------------------------- verify

void run_verify(const std::string& pair_text, const std::string& lambda_text, bool with_oracle,
                std::optional<std::int64_t> max_dim_flag, std::ostream& out, std::ostream& err) {
  const BranchPair pair = parse_pair(pair_text);
  const DominantWeight lambda = make_weight(pair.big(), parse_parts(lambda_text));
  bool agree = true;

  if (pair.big().is_even_orthogonal() && pair.n() > 0 && lambda.padded(pair.n() - 1) > 0) {
    out << "note: lambda_n > 0 for an even orthogonal group; the determinant is compared against the "
           "representation with highest weight " << paren(lambda) << "\n";
  }

  // Nonzero exactly on the interlacing box, over every mu with mu_1 <= lambda_1.
  std::size_t scanned = 0;
  for (const auto& mu : dominant_weights_up_to(pair.small(), lambda.padded(0))) {
    const Integer value = determinant_multiplicity(pair, lambda, mu);
    ++scanned;
    if ((value != 0) != interlaces(pair, lambda, mu)) {
      agree = false;
      err << "zero set: mu=" << paren(mu) << " gives " << to_decimal(value) << " but interlacing says "
          << (interlaces(pair, lambda, mu) ? "nonzero" : "zero") << "\n";
    }
  }
  out << "zero set: " << scanned << " weights scanned\n";

  const MultiplicityTable table = decompose(pair, lambda, Evaluation::Full);
  const auto [lhs, rhs] = dimension_sum(table);
  out << "dimension sum: " << to_decimal(lhs) << (lhs == rhs ? " = " : " != ") << to_decimal(rhs) << "\n";
  agree = agree && lhs == rhs;

  if (has_corank_two_pattern(pair)) {
    bool products_match = true;
    for (const auto& row : table.rows) {
      const Integer product = product_formula(pair, lambda, row.mu);
      if (product != row.mult) {
        products_match = false;
        err << "product formula: mu=" << paren(row.mu) << " gives " << to_decimal(product)
            << ", determinant gives " << to_decimal(row.mult) << "\n";
      }
    }
    out << "product formula: " << (products_match ? "matches" : "differs") << "\n";
    agree = agree && products_match;
  }

  if (with_oracle) {
    OracleOptions options;
    options.max_dim = resolve_max_dim(max_dim_flag);
    const OracleDecomposition oracle = oracle_branching(pair, lambda, options);
    const MultiplicityTable folded = oracle.folded();
    if (folded.rows != table.rows) {
      agree = false;
      std::vector<DominantWeight> mus;
      for (const auto& row : table.rows) mus.push_back(row.mu);
      for (const auto& row : folded.rows) mus.push_back(row.mu);
      std::sort(mus.begin(), mus.end(), std::greater<>());
      mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
      for (const auto& mu : mus) {
        const Integer formula = table.at(mu), reference = folded.at(mu);
        if (formula != reference) {
          err << "oracle: mu=" << paren(mu) << " formula " << to_decimal(formula) << ", oracle "
              << to_decimal(reference) << "\n";
        }
      }
    }
    if (pair.small().is_even_orthogonal() && pair.m() > 0) {
      const bool symmetric = oracle.sign_symmetric();
      out << "oracle sign symmetry in mu_m: " << (symmetric ? "yes" : "no") << "\n";
      agree = agree && symmetric;
    }
    out << "oracle: " << oracle.rows.size() << " signed rows\n";
  }

  if (!agree) {
    out << "DISAGREE\n";
    throw Mismatch{};
  }
  out << "AGREE (" << table.rows.size() << " rows)\n";
}

// ---------------------------------------------------------------- compare

void run_compare(int n, int m, const std::string& lambda_text, const std::string& mu_text, std::ostream& out) {
  const std::vector<Part> lambda = parse_parts(lambda_text);
  const std::vector<Part> mu = parse_parts(mu_text);
  const ComparisonReport report = compare_pairs(n, m, lambda, mu);

  out << "n = " << n << ", m = " << m << ", lambda = " << paren(lambda) << ", mu = " << paren(mu) << "\n";
  for (const auto& value : report.values) {
    out << "  " << std::left << std::setw(14) << to_string(value.pair)
        << (value.mult ? to_decimal(*value.mult) : std::string("n/a (mu does not fit)")) << "\n";
  }
  const auto verdict = [&](const char* name, const ClauseVerdict& clause) {
    out << "  " << name << ": ";
    if (!clause.hypotheses) out << "hypotheses not met";
    else out << (clause.equal ? "equal" : "NOT EQUAL");
    out << "\n";
  };
  verdict("clause 1 (l(mu) <= 2m-n)    ", report.mu_length);
  verdict("clause 2 (l(lambda) <= 2m-n)", report.lambda_length);
  verdict("clause 3 (l(lambda) <= m)   ", report.symplectic_orthogonal);
  if (report.violated()) throw Mismatch{};
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact branching multiplicities for classical groups", "branchkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string pair_text, lambda_text, group_text, method = "both", format_text = "pretty";
  std::optional<std::string> mu_text;
  std::string compare_mu;
  std::optional<std::int64_t> max_dim;
  bool with_oracle = false;
  int table_number = 2;
  int n = 0, m = 0;

  const std::vector<std::string> formats{"pretty", "json", "csv"};

  auto* branch = app.add_subcommand("branch", "Multiplicity of one mu, or the full decomposition");
  branch->add_option("--pair", pair_text, "Pair, e.g. SO:7/SO:3")->required();
  branch->add_option("--lambda", lambda_text, "Highest weight of the big group, e.g. 2,1,0")->required();
  branch->add_option("--mu", mu_text, "Highest weight of the subgroup");
  branch->add_option("--format", format_text)->check(CLI::IsMember(formats));

  auto* dim = app.add_subcommand("dim", "Dimension of an irreducible representation");
  dim->add_option("--group", group_text, "Group, e.g. GL:3")->required();
  dim->add_option("--lambda", lambda_text, "Highest weight")->required();
  dim->add_option("--method", method)->check(CLI::IsMember({"product", "det", "both"}));

  auto* table = app.add_subcommand("table", "Recompute a reference table and check it");
  table->add_option("--paper", table_number, "Table number")->required()->check(CLI::IsMember({2, 3}));
  table->add_option("--format", format_text)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Cross-check the determinant formula");
  verify->add_option("--pair", pair_text)->required();
  verify->add_option("--lambda", lambda_text)->required();
  verify->add_flag("--oracle", with_oracle, "Also compare against the weight-multiplicity oracle");
  verify->add_option("--max-dim", max_dim, "Oracle dimension cap (default 50000)")->check(CLI::PositiveNumber);

  auto* compare = app.add_subcommand("compare", "Compare multiplicities across the four families");
  compare->add_option("--n", n)->required();
  compare->add_option("--m", m)->required();
  compare->add_option("--lambda", lambda_text)->required();
  compare->add_option("--mu", compare_mu)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  const Format format = parse_format(format_text);
  try {
    if (branch->parsed()) run_branch(pair_text, lambda_text, mu_text, format, out);
    else if (dim->parsed()) run_dim(group_text, lambda_text, method, out, err);
    else if (table->parsed()) run_table(table_number, format, out, err);
    else if (verify->parsed()) run_verify(pair_text, lambda_text, with_oracle, max_dim, out, err);
    else if (compare->parsed()) run_compare(n, m, lambda_text, compare_mu, out);
  } catch (const Mismatch&) {
    return kMismatch;
  } catch (const ScaleExceeded& error) {
    err << "error: " << error.what() << "\n";
    return kScaleExceeded;
  } catch (const NonIntegerResult& error) {
    err << "error: " << error.what() << "\n";
    return kMismatch;
  } catch (const ZeroSetMismatch& error) {
    err << "error: " << error.what() << "\n";
    return kMismatch;
  } catch (const NegativeRemainder& error) {
    err << "error: " << error.what() << "\n";
    return kMismatch;
  } catch (const Error& error) {
    err << "error: " << error.what() << "\n";
    return kUsage;
  }
  return kSuccess;
}

}  // namespace branchkit::cli
