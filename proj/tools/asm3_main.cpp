// Command-line surface: exact tables of refined weighted counts, generating
// function coefficients, kernel polynomials, and the library's verification
// suites, as csv or json streams.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "asm3/genfun.hpp"
#include "asm3/kernel.hpp"
#include "asm3/oracle.hpp"
#include "asm3/recurrences.hpp"
#include "asm3/verify.hpp"

namespace {

using asm3::Int;
using asm3::OddTrigPoly;
using asm3::Rat;
using asm3::RefinedRow;

enum class Col { num, str };

// Uniform tabular payload; cells are exact decimal / "p/q" strings.
// Col::num columns are emitted as json numbers, Col::str as json strings.
struct Sheet {
  std::vector<std::pair<std::string, Col>> cols;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit(const Sheet& sheet, const std::string& format, std::ostream& os) {
  if (format == "csv") {
    for (std::size_t c = 0; c < sheet.cols.size(); ++c) {
      if (c) os << ',';
      os << sheet.cols[c].first;
    }
    os << '\n';
    for (const auto& row : sheet.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) os << ',';
        os << csv_escape(row[c]);
      }
      os << '\n';
    }
    return;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : sheet.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (sheet.cols[c].second == Col::num) {
        obj[sheet.cols[c].first] = std::stoll(row[c]);
      } else {
        obj[sheet.cols[c].first] = row[c];
      }
    }
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

void append_row_records(Sheet& sheet, const RefinedRow& row) {
  for (unsigned r = 1; r <= row.n; ++r) {
    sheet.rows.push_back({std::to_string(row.n), std::to_string(r),
                          row.counts[r - 1].str()});
  }
}

int cmd_table(unsigned n_max, unsigned x, const std::string& format) {
  Sheet sheet{{{"n", Col::num}, {"r", Col::num}, {"count", Col::str}}, {}};
  if (x != 3 && n_max > asm3::oracle::kDpMaxOrder) {
    std::cerr << "table: weights other than 3 go through the enumeration "
                 "oracle, which supports orders up to "
              << asm3::oracle::kDpMaxOrder << "\n";
    return 2;
  }
  for (unsigned n = 1; n <= n_max; ++n) {
    const RefinedRow row =
        x == 3 ? asm3::genfun::row(n)
               : asm3::oracle::enumerate(n, x, asm3::oracle::Mode::dp);
    append_row_records(sheet, row);
  }
  emit(sheet, format, std::cout);
  return 0;
}

int cmd_genfun(unsigned n, bool normalized, const std::string& format) {
  Sheet sheet{{{"degree", Col::num}, {"coeff", Col::str}}, {}};
  if (normalized) {
    const std::vector<Rat> coeffs = asm3::genfun::normalized_coeffs(n);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      sheet.rows.push_back({std::to_string(d), asm3::rat_str(coeffs[d])});
    }
  } else {
    const RefinedRow row = asm3::genfun::row(n);
    for (std::size_t d = 0; d < row.counts.size(); ++d) {
      sheet.rows.push_back({std::to_string(d), row.counts[d].str()});
    }
  }
  emit(sheet, format, std::cout);
  return 0;
}

int cmd_fpoly(unsigned n, const std::string& method, const std::string& format) {
  if (n < 2) {
    std::cerr << "f-poly: the kernel polynomial is defined for orders >= 2\n";
    return 2;
  }
  OddTrigPoly f;
  if (method == "linear") {
    f = asm3::kernel::solve(n);
  } else {
    f = n % 2 == 0 ? asm3::kernel::f_even((n - 2) / 2)
                   : asm3::kernel::f_odd((n - 1) / 2);
  }
  Sheet sheet{{{"degree", Col::num}, {"coeff", Col::str}}, {}};
  for (const auto& [freq, coeff] : f.terms()) {
    sheet.rows.push_back({std::to_string(freq), asm3::rat_str(coeff)});
  }
  emit(sheet, format, std::cout);
  return 0;
}

int cmd_totals(unsigned n_max, const std::string& format) {
  Sheet sheet{{{"n", Col::num}, {"count", Col::str}}, {}};
  for (unsigned n = 1; n <= n_max; ++n) {
    sheet.rows.push_back({std::to_string(n), asm3::recur::total_weight(n).str()});
  }
  emit(sheet, format, std::cout);
  return 0;
}

int cmd_oracle(unsigned n, unsigned x, const std::string& mode,
               const std::string& format) {
  Sheet sheet{{{"n", Col::num}, {"r", Col::num}, {"count", Col::str}}, {}};
  const auto m = mode == "bruteforce" ? asm3::oracle::Mode::bruteforce
                                      : asm3::oracle::Mode::dp;
  try {
    append_row_records(sheet, asm3::oracle::enumerate(n, x, m));
  } catch (const asm3::OrderTooLarge& e) {
    std::cerr << "oracle: " << e.what() << "\n";
    return 2;
  }
  emit(sheet, format, std::cout);
  return 0;
}

int cmd_verify(const std::string& suite, unsigned nu_max, unsigned oracle_n_max,
               const std::string& format) {
  std::vector<asm3::checks::CheckResult> results;
  try {
    results = asm3::checks::run_suite(suite, {nu_max, oracle_n_max});
  } catch (const std::invalid_argument& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }
  Sheet sheet{{{"suite", Col::str},
               {"case-id", Col::str},
               {"status", Col::str},
               {"detail", Col::str}},
              {}};
  const asm3::checks::CheckResult* first_fail = nullptr;
  for (const auto& r : results) {
    sheet.rows.push_back(
        {r.suite, r.case_id, r.passed ? "pass" : "fail", r.detail});
    if (!r.passed && first_fail == nullptr) first_fail = &r;
  }
  std::stable_sort(sheet.rows.begin(), sheet.rows.end());
  emit(sheet, format, std::cout);
  if (first_fail != nullptr) {
    std::cerr << "first failure: " << first_fail->suite << " "
              << first_fail->case_id << ": " << first_fail->detail << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact 3-enumeration of alternating sign matrices"};
  app.require_subcommand(1);

  std::string format = "csv";
  const auto format_check = CLI::IsMember({"csv", "json"});

  unsigned table_n_max = 0;
  unsigned table_x = 3;
  CLI::App* table = app.add_subcommand(
      "table", "refined counts for all orders up to a bound");
  table->add_option("--n-max", table_n_max, "largest order")
      ->required()
      ->check(CLI::PositiveNumber);
  table->add_option("--x", table_x, "weight per -1 entry")
      ->check(CLI::PositiveNumber);
  table->add_option("--format", format, "output format")->check(format_check);

  unsigned genfun_n = 0;
  bool normalized = false;
  CLI::App* genfun = app.add_subcommand(
      "genfun", "generating function coefficients for one order");
  genfun->add_option("--n", genfun_n, "order")->required()->check(
      CLI::PositiveNumber);
  genfun->add_flag("--normalized", normalized,
                   "divide by the total, emitting exact fractions");
  genfun->add_option("--format", format, "output format")->check(format_check);

  unsigned fpoly_n = 0;
  std::string method = "closed";
  CLI::App* fpoly = app.add_subcommand(
      "f-poly", "kernel trig polynomial for one order");
  fpoly->add_option("--n", fpoly_n, "order (>= 2)")->required()->check(
      CLI::PositiveNumber);
  fpoly->add_option("--method", method, "closed form or linear solve")
      ->check(CLI::IsMember({"closed", "linear"}));
  fpoly->add_option("--format", format, "output format")->check(format_check);

  unsigned totals_n_max = 0;
  CLI::App* totals = app.add_subcommand(
      "totals", "total weighted counts up to a bound");
  totals->add_option("--n-max", totals_n_max, "largest order")
      ->required()
      ->check(CLI::PositiveNumber);
  totals->add_option("--format", format, "output format")->check(format_check);

  unsigned oracle_n = 0;
  unsigned oracle_x = 3;
  std::string mode = "dp";
  CLI::App* oracle = app.add_subcommand(
      "oracle", "refined counts by direct enumeration");
  oracle->add_option("--n", oracle_n, "order")->required()->check(
      CLI::PositiveNumber);
  oracle->add_option("--x", oracle_x, "weight per -1 entry")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--mode", mode, "enumeration strategy")
      ->check(CLI::IsMember({"bruteforce", "dp"}));
  oracle->add_option("--format", format, "output format")->check(format_check);

  std::string suite = "all";
  unsigned nu_max = 10;
  unsigned verify_n_max = 6;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the library's self-check suites");
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--nu-max", nu_max, "recurrence index bound");
  verify->add_option("--n-max", verify_n_max, "enumeration order bound")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "output format")->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(table)) return cmd_table(table_n_max, table_x, format);
    if (app.got_subcommand(genfun)) return cmd_genfun(genfun_n, normalized, format);
    if (app.got_subcommand(fpoly)) return cmd_fpoly(fpoly_n, method, format);
    if (app.got_subcommand(totals)) return cmd_totals(totals_n_max, format);
    if (app.got_subcommand(oracle)) {
      return cmd_oracle(oracle_n, oracle_x, mode, format);
    }
    if (app.got_subcommand(verify)) {
      return cmd_verify(suite, nu_max, verify_n_max, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
