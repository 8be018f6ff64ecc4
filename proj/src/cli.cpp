#include "colorful/cli.hpp"

#include "colorful/counts.hpp"
#include "colorful/number_theory.hpp"
#include "colorful/oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace colorful::cli {
namespace {

// Published reference values used by the verify subcommand's table
// regression (necklaces and bracelets, n = 1..40).
constexpr std::array<std::uint64_t, 40> kNecklaceTable = {
    // n = 1..10
    0, 1, 1, 2, 1, 4, 3, 8, 11, 20,
    // n = 11..20
    31, 64, 105, 202, 367, 696, 1285, 2452, 4599, 8776,
    // n = 21..30
    16651, 31838, 60787, 116640, 223697, 430396, 828525, 1598228, 3085465,
    5966000,
    // n = 31..40
    11545611, 22371000, 43383571, 84217616, 163617805, 318150720, 619094385,
    1205614054, 2349384031, 4581315968};

constexpr std::array<std::uint64_t, 40> kBraceletTable = {
    // n = 1..10
    0, 1, 1, 2, 1, 4, 3, 8, 8, 18,
    // n = 11..20
    21, 48, 63, 133, 205, 412, 685, 1354, 2385, 4644,
    // n = 21..30
    8496, 16431, 30735, 59344, 112531, 217246, 415628, 803210, 1545463,
    2991192,
    // n = 31..40
    5778267, 11201884, 21702708, 42141576, 81830748, 159140896, 309590883,
    602938099, 1174779397, 2290920128};

enum class SequenceKind {
  alpha,
  necklace,
  bracelet,
  classical_necklace,
  classical_bracelet,
};

struct CountRequest {
  SequenceKind kind = SequenceKind::necklace;
  bool exact_colors = false;
  bool exact_period = false;
  std::uint64_t colors = 0;  // 0 = not given
};

SequenceKind parse_kind(const std::string& name) {
  if (name == "alpha") return SequenceKind::alpha;
  if (name == "necklace") return SequenceKind::necklace;
  if (name == "bracelet") return SequenceKind::bracelet;
  if (name == "classical-necklace") return SequenceKind::classical_necklace;
  if (name == "classical-bracelet") return SequenceKind::classical_bracelet;
  throw std::invalid_argument("unknown kind: " + name);
}

bool is_colorful_kind(SequenceKind k) {
  return k == SequenceKind::necklace || k == SequenceKind::bracelet;
}

bool is_classical_kind(SequenceKind k) {
  return k == SequenceKind::classical_necklace ||
         k == SequenceKind::classical_bracelet;
}

void validate_request(const CountRequest& req) {
  if ((req.exact_colors || req.exact_period) && !is_colorful_kind(req.kind)) {
    throw std::invalid_argument(
        "--exact-colors/--exact-period apply only to necklace and bracelet");
  }
  if (req.exact_colors && req.exact_period) {
    throw std::invalid_argument(
        "--exact-colors and --exact-period cannot be combined");
  }
  if (is_classical_kind(req.kind) && req.colors == 0) {
    throw std::invalid_argument("classical kinds require --colors");
  }
  if (!is_classical_kind(req.kind) && req.colors != 0) {
    throw std::invalid_argument("--colors applies only to classical kinds");
  }
}

BigInt evaluate(const CountRequest& req, std::uint64_t n) {
  switch (req.kind) {
    case SequenceKind::alpha:
      return alpha(n);
    case SequenceKind::necklace:
      if (req.exact_colors) return exact_color_count(n, ObjectKind::necklace);
      if (req.exact_period) return exact_period_count(n, ObjectKind::necklace);
      return necklace_count(n);
    case SequenceKind::bracelet:
      if (req.exact_colors) return exact_color_count(n, ObjectKind::bracelet);
      if (req.exact_period) return exact_period_count(n, ObjectKind::bracelet);
      return bracelet_count(n);
    case SequenceKind::classical_necklace:
      return classical_necklace(n, req.colors);
    case SequenceKind::classical_bracelet:
      return classical_bracelet(n, req.colors);
  }
  throw std::logic_error("bad SequenceKind");
}

std::string column_name(const CountRequest& req, const std::string& base) {
  if (req.exact_colors) return base + "*";
  if (req.exact_period) return base + "~";
  if (is_classical_kind(req.kind)) {
    return base + "(c=" + std::to_string(req.colors) + ")";
  }
  return base;
}

std::vector<std::string> split_kinds(const std::string& list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("--kinds must name at least one kind");
  return out;
}

// ----- verify ---------------------------------------------------------

struct CheckResult {
  bool pass = true;
  std::string witness;
};

void report(std::ostream& out, const std::string& name, const CheckResult& r,
            int& failures) {
  if (r.pass) {
    out << "PASS  " << name << "\n";
  } else {
    out << "FAIL  " << name << ": " << r.witness << "\n";
    ++failures;
  }
}

CheckResult check_phi_sum() {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::uint64_t sum = 0;
    for (std::uint64_t d : divisors(n)) sum += euler_phi(d);
    if (sum != n) {
      return {false, "sum phi(d) over d | " + std::to_string(n) + " is " +
                         std::to_string(sum)};
    }
  }
  return {};
}

CheckResult check_moebius_sum() {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::int64_t sum = 0;
    for (std::uint64_t d : divisors(n)) sum += moebius(d);
    if (sum != (n == 1 ? 1 : 0)) {
      return {false, "sum mu(d) over d | " + std::to_string(n) + " is " +
                         std::to_string(sum)};
    }
  }
  return {};
}

CheckResult check_signed_phi_sum() {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::int64_t expected = (n % 2 == 0) ? 0 : -static_cast<std::int64_t>(n);
    std::int64_t actual = signed_phi_divisor_sum(n);
    if (actual != expected) {
      return {false, "n = " + std::to_string(n) + ": sum is " +
                         std::to_string(actual) + ", expected " +
                         std::to_string(expected)};
    }
  }
  return {};
}

CheckResult check_table(const std::array<std::uint64_t, 40>& table,
                        ObjectKind kind) {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    BigInt actual = (kind == ObjectKind::necklace) ? necklace_count(n)
                                                   : bracelet_count(n);
    if (actual != table[n - 1]) {
      return {false, "n = " + std::to_string(n) + ": formula gives " +
                         actual.str() + ", table says " +
                         std::to_string(table[n - 1])};
    }
  }
  return {};
}

CheckResult check_orbits(GroupKind gk, std::uint64_t max_n) {
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    BigInt scanned = orbit_count(n, gk);
    BigInt formula = (gk == GroupKind::rotations) ? necklace_count(n)
                                                  : bracelet_count(n);
    if (scanned != formula) {
      return {false, "n = " + std::to_string(n) + ": oracle counts " +
                         scanned.str() + " orbits, formula gives " +
                         formula.str()};
    }
  }
  return {};
}

CheckResult check_fixed_points(std::uint64_t max_n) {
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    for (const GroupElement& g : all_elements(n, GroupKind::dihedral)) {
      BigInt scanned = fixed_point_scan(n, g);
      BigInt formula = fixed_points(n, g);
      if (scanned != formula) {
        std::ostringstream w;
        w << "n = " << n << ", element (" << name_of(g.sigma) << ", eps "
          << int(g.eps) << ", shift " << g.shift << "): scan " << scanned
          << ", formula " << formula;
        return {false, w.str()};
      }
    }
  }
  return {};
}

// ----- subcommand bodies ----------------------------------------------

int run_count(const CountRequest& req, std::uint64_t n, std::ostream& out) {
  validate_request(req);
  require_positive(n, "count");
  out << evaluate(req, n).str() << "\n";
  return 0;
}

int run_table(const std::vector<std::string>& kind_names,
              const CountRequest& modifiers, std::uint64_t from,
              std::uint64_t to, const std::string& format, std::ostream& out) {
  if (from < 1 || from > to) {
    throw std::invalid_argument("need 1 <= from <= to");
  }
  std::vector<CountRequest> columns;
  for (const std::string& name : kind_names) {
    CountRequest req = modifiers;
    req.kind = parse_kind(name);
    if (!is_classical_kind(req.kind)) req.colors = 0;
    validate_request(req);
    columns.push_back(req);
  }
  if (format == "bfile" && columns.size() != 1) {
    throw std::invalid_argument("bfile output takes exactly one kind");
  }

  std::ostringstream text;
  if (format == "csv" || format == "markdown") {
    const char* sep = (format == "csv") ? "," : " | ";
    if (format == "markdown") text << "| ";
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i > 0) text << sep;
      text << column_name(columns[i], kind_names[i]);
    }
    if (format == "markdown") {
      text << " |\n|";
      for (std::size_t i = 0; i < columns.size(); ++i) text << " --- |";
    }
    text << "\n";
  } else if (format != "plain" && format != "bfile") {
    throw std::invalid_argument("unknown format: " + format);
  }

  for (std::uint64_t n = from; n <= to; ++n) {
    if (format == "bfile") {
      text << n << " " << evaluate(columns[0], n).str() << "\n";
      continue;
    }
    if (format == "markdown") text << "| ";
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i > 0) text << (format == "csv" ? "," : (format == "markdown" ? " | " : " "));
      text << evaluate(columns[i], n).str();
    }
    if (format == "markdown") text << " |";
    text << "\n";
  }
  out << text.str();
  return 0;
}

int run_verify(std::uint64_t max_n, std::optional<std::uint64_t> fixed_max_n,
               std::ostream& out) {
  if (max_n < 1) throw std::invalid_argument("--max-n must be >= 1");
  if (max_n > default_enumeration_cap) {
    throw CapExceeded("--max-n exceeds the enumeration cap of " +
                      std::to_string(default_enumeration_cap));
  }
  std::uint64_t fixed_n = fixed_max_n.value_or(std::min<std::uint64_t>(max_n, 12));
  if (fixed_n < 1 || fixed_n > default_enumeration_cap) {
    throw std::invalid_argument("--fixed-max-n out of range");
  }

  std::ostringstream text;
  int failures = 0;
  report(text, "totient divisor sum equals n (n <= 500)", check_phi_sum(),
         failures);
  report(text, "moebius divisor sum vanishes for n > 1 (n <= 500)",
         check_moebius_sum(), failures);
  report(text, "signed totient sum matches parity cases (n <= 500)",
         check_signed_phi_sum(), failures);
  report(text, "necklace counts match published table (n = 1..40)",
         check_table(kNecklaceTable, ObjectKind::necklace), failures);
  report(text, "bracelet counts match published table (n = 1..40)",
         check_table(kBraceletTable, ObjectKind::bracelet), failures);
  report(text,
         "oracle orbit counts match necklace formula (n <= " +
             std::to_string(max_n) + ")",
         check_orbits(GroupKind::rotations, max_n), failures);
  report(text,
         "oracle orbit counts match bracelet formula (n <= " +
             std::to_string(max_n) + ")",
         check_orbits(GroupKind::dihedral, max_n), failures);
  report(text,
         "per-element fixed-point scan matches closed form (n <= " +
             std::to_string(fixed_n) + ")",
         check_fixed_points(fixed_n), failures);

  if (failures == 0) {
    text << "all checks passed\n";
  } else {
    text << failures << " check(s) failed\n";
  }
  out << text.str();
  return failures == 0 ? 0 : 1;
}

int run_fixed(std::uint64_t n, const std::string& sigma_name, unsigned eps,
              std::uint64_t shift, std::ostream& out) {
  require_positive(n, "fixed");
  if (eps > 1) throw std::invalid_argument("--eps must be 0 or 1");
  GroupElement g(parse_s3(sigma_name), eps, shift, n);
  BigInt closed = fixed_points(n, g);
  if (n > default_enumeration_cap) {
    out << closed.str() << "\n";
    return 0;
  }
  BigInt scanned = fixed_point_scan(n, g);
  bool equal = (closed == scanned);
  out << closed.str() << " " << scanned.str() << " "
      << (equal ? "EQUAL" : "DIFFER") << "\n";
  return equal ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of colorful necklaces and bracelets in three colors"};
  app.name("colorful");
  app.require_subcommand(1);

  std::string kind_name = "necklace";
  std::string kinds_list;
  std::string format = "plain";
  std::string sigma_name;
  std::uint64_t n = 0, from = 0, to = 0, colors = 0, shift = 0;
  std::uint64_t max_n = 14;
  std::optional<std::uint64_t> fixed_max_n;
  unsigned eps = 0;
  bool exact_colors = false, exact_period = false;

  CLI::App* count = app.add_subcommand("count", "print one sequence value");
  count->add_option("--kind", kind_name,
                    "alpha, necklace, bracelet, classical-necklace, "
                    "classical-bracelet")
      ->required();
  count->add_option("--n", n, "bead count")->required();
  count->add_flag("--exact-colors", exact_colors,
                  "use exactly three colors (necklace/bracelet only)");
  count->add_flag("--exact-period", exact_period,
                  "count classes of exact period n (necklace/bracelet only)");
  count->add_option("--colors", colors, "color count for classical kinds");

  CLI::App* table = app.add_subcommand("table", "print a range of values");
  table->add_option("--kinds", kinds_list, "comma-separated kind list")
      ->required();
  table->add_option("--from", from, "first n")->required();
  table->add_option("--to", to, "last n")->required();
  table->add_option("--format", format, "plain, csv, markdown, or bfile");
  table->add_flag("--exact-colors", exact_colors);
  table->add_flag("--exact-period", exact_period);
  table->add_option("--colors", colors, "color count for classical kinds");

  CLI::App* verify = app.add_subcommand(
      "verify", "check the formulas against the brute-force oracle");
  verify->add_option("--max-n", max_n, "orbit-count check bound (default 14)");
  verify->add_option("--fixed-max-n", fixed_max_n,
                     "per-element check bound (default min(max-n, 12))");

  CLI::App* fixed = app.add_subcommand(
      "fixed", "closed-form and scanned fixed-point counts for one element");
  fixed->add_option("--n", n, "bead count")->required();
  fixed->add_option("--sigma", sigma_name, "id, t12, t13, t23, c, or c2")
      ->required();
  fixed->add_option("--eps", eps, "reflection exponent, 0 or 1")->required();
  fixed->add_option("--shift", shift, "rotation shift")->required();

  try {
    std::reverse(args.begin(), args.end());  // CLI11 wants reversed args
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*count) {
      CountRequest req{parse_kind(kind_name), exact_colors, exact_period, colors};
      return run_count(req, n, out);
    }
    if (*table) {
      CountRequest modifiers{SequenceKind::necklace, exact_colors, exact_period,
                             colors};
      return run_table(split_kinds(kinds_list), modifiers, from, to, format, out);
    }
    if (*verify) {
      return run_verify(max_n, fixed_max_n, out);
    }
    if (*fixed) {
      return run_fixed(n, sigma_name, eps, shift, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace colorful::cli
