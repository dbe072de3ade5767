#include "cli.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "oddevil/characterization.hpp"
#include "oddevil/morphic.hpp"
#include "oddevil/oracle.hpp"
#include "oddevil/sequences.hpp"
#include "oddevil/shevelev.hpp"
#include "oddevil/suites.hpp"
#include "oddevil/summation.hpp"

namespace oddevil::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::map<std::string, OutputFormat> kFormats = {
    {"plain", OutputFormat::kPlain}, {"csv", OutputFormat::kCsv}, {"bfile", OutputFormat::kBfile}};

std::string join(const std::vector<std::int64_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(values[i]);
  }
  return s;
}

std::string labeled(const char* label, const std::vector<std::int64_t>& values) {
  return values.empty() ? std::string(label) + ":\n" : std::string(label) + ": " + join(values) + "\n";
}

struct TermsArgs {
  std::int64_t radix = 2;
  std::int64_t cls = 1;
  std::int64_t count = 16;
  OutputFormat format = OutputFormat::kPlain;
  std::int64_t offset = 0;
  bool morphic = false;
  bool check = false;
};

struct SumArgs {
  std::int64_t radix = 2;
  std::int64_t cls = 1;
  std::int64_t upto = 0;
  bool check = false;
};

struct ShevelevArgs {
  std::string mode;
  std::vector<std::int64_t> positional;
  std::optional<std::int64_t> classify;
  std::vector<std::int64_t> verify;
  unsigned jobs = 1;
};

struct ConstructArgs {
  std::string method;
  std::string method_flag;
  std::optional<std::int64_t> length;
  std::optional<std::int64_t> search;
  OutputFormat format = OutputFormat::kPlain;
};

struct VerifyArgs {
  std::string suite;
  std::int64_t n_max = 0;
  unsigned jobs = 1;
};

void add_spec_options(CLI::App& cmd, std::int64_t& radix, std::int64_t& cls) {
  cmd.add_option("-d,--radix", radix, "Radix d >= 2")->capture_default_str();
  cmd.add_option("-j,--class", cls, "Residue class j in [0, d-1]; 1 with d=2 is odious")
      ->capture_default_str();
}

void add_format_option(CLI::App& cmd, OutputFormat& format) {
  cmd.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("plain");
}

CommandResult cmd_terms(const TermsArgs& a) {
  const Radix d(a.radix);
  if (a.count < 0) throw UsageError("--count must be >= 0");
  CommandResult res;
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(a.count));
  if (a.morphic) {
    for (auto letter : prefix(d, a.count)) values.push_back(letter);
  } else {
    const SequenceSpec spec(a.cls, d);
    for (std::int64_t n = 0; n < a.count; ++n) values.push_back(term(spec, n));
    if (a.check) {
      const bool same = oracle::terms(spec, a.count) == values;
      res.err = same ? "MATCH\n" : "MISMATCH\n";
      if (!same) res.exit_code = kExitFailure;
    }
  }
  res.out = render_terms(values, a.format, a.offset);
  return res;
}

CommandResult cmd_sum(const SumArgs& a) {
  const SequenceSpec spec(a.cls, Radix(a.radix));
  if (a.upto < 0) throw UsageError("--upto must be >= 0");
  CommandResult res;
  const SumValue closed = summatory(spec, a.upto);
  res.out = closed.str();
  if (a.check) {
    const SumValue brute = oracle::sum(spec, a.upto);
    if (brute == closed) {
      res.out += " MATCH";
    } else {
      res.out += " MISMATCH oracle=" + brute.str();
      res.exit_code = kExitFailure;
    }
  }
  res.out += '\n';
  return res;
}

std::string case_counts(const ShevelevReport& rep) {
  std::string s = "cases";
  for (auto c : kAllShevelevCases) {
    std::string label(name(c));
    if (c == ShevelevCase::kNone) label = "none";
    s += " " + label + "=" + std::to_string(rep.count(c));
  }
  return s;
}

CommandResult cmd_shevelev(const ShevelevArgs& a) {
  std::string mode = a.mode;
  std::vector<std::int64_t> args = a.positional;
  if (a.classify) {
    mode = "classify";
    args = {*a.classify};
  } else if (!a.verify.empty()) {
    mode = "verify";
    args = a.verify;
  }

  CommandResult res;
  if (mode == "classify") {
    if (args.size() != 1) throw UsageError("classify takes exactly one n");
    const std::int64_t n = args[0];
    if (n < 2) throw UsageError("classify needs n >= 2");
    const ShevelevCase c = classify_shevelev(n);
    res.out = std::string(name(c));
    if (c != ShevelevCase::kNone) {
      res.out += " S=" + odious_summatory(n).str() + " rhs=" + shevelev_rhs(c, n).str();
    }
    res.out += '\n';
    return res;
  }
  if (mode == "verify") {
    if (args.size() != 2) throw UsageError("verify takes lo and hi");
    if (args[0] < 2 || args[1] < args[0]) throw UsageError("verify needs 2 <= lo <= hi");
    const ShevelevReport rep = verify_shevelev(args[0], args[1], a.jobs);
    if (rep.passed()) {
      res.out = "PASS " + case_counts(rep) + "\n";
    } else {
      const auto& ce = *rep.report.first_counterexample;
      res.out = "FAIL n=" + std::to_string(ce.n) + " " + ce.detail + " " + case_counts(rep) + "\n";
      res.exit_code = kExitFailure;
    }
    return res;
  }
  throw UsageError("shevelev mode must be classify or verify");
}

CommandResult cmd_construct(const ConstructArgs& a) {
  std::string method = a.method_flag.empty() ? a.method : a.method_flag;
  std::optional<std::int64_t> length = a.length;
  if (a.search) {
    method = "search";
    length = a.search;
  }
  if (!length) throw UsageError("construct needs a length N");
  if (*length < 0) throw UsageError("N must be >= 0");

  CommandResult res;
  if (method == "parity" || method == "offset") {
    const SequencePair built = method == "parity" ? construct_parity(*length) : construct_offset(*length);
    std::vector<std::int64_t> a_prefix;
    std::vector<std::int64_t> b_prefix;
    for (std::int64_t n = 0; n < *length; ++n) {
      a_prefix.push_back(odious(n));
      b_prefix.push_back(evil(n));
    }
    const bool match = built.x == a_prefix && built.y == b_prefix;
    if (a.format == OutputFormat::kCsv) {
      for (std::size_t n = 0; n < built.x.size(); ++n) {
        res.out += std::to_string(n) + "," + std::to_string(built.x[n]) + "," + std::to_string(built.y[n]) + "\n";
      }
    } else {
      res.out = labeled("x", built.x) + labeled("y", built.y);
    }
    res.out += match ? "MATCH\n" : "MISMATCH\n";
    if (!match) res.exit_code = kExitFailure;
    return res;
  }
  if (method == "search") {
    if (*length < 1 || *length > kSearchBudget) {
      throw UsageError("search length must lie in [1, " + std::to_string(kSearchBudget) + "]");
    }
    const auto solutions = search_partition_solutions(*length);
    res.out = std::to_string(solutions.size()) + (solutions.size() == 1 ? " solution\n" : " solutions\n");
    for (const auto& s : solutions) res.out += labeled("x", s.x) + labeled("y", s.y);
    return res;
  }
  throw UsageError("construct method must be parity, offset or search");
}

CommandResult cmd_verify(const VerifyArgs& a) {
  const auto suite = parse_suite(a.suite);
  if (!suite) throw UsageError("suite must be relations, identities or all");
  if (a.n_max < 0) throw UsageError("n_max must be >= 0");
  if (a.jobs == 0) throw UsageError("--jobs must be >= 1");

  CommandResult res;
  std::size_t passed = 0;
  const auto reports = run_suite(*suite, a.n_max, a.jobs);
  for (const auto& r : reports) {
    if (r.passed()) {
      ++passed;
      res.out += "PASS " + r.identity + " [" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]\n";
    } else {
      const auto& ce = *r.first_counterexample;
      res.out += "FAIL " + r.identity + " n=" + std::to_string(ce.n) + " " + ce.detail + "\n";
    }
  }
  const bool all = passed == reports.size();
  res.out += std::to_string(passed) + "/" + std::to_string(reports.size()) + (all ? " PASS\n" : " FAIL\n");
  res.exit_code = all ? kExitOk : kExitFailure;
  return res;
}

}  // namespace

std::string render_terms(const std::vector<std::int64_t>& values, OutputFormat format,
                         std::int64_t index_offset) {
  if (format == OutputFormat::kPlain) return join(values) + "\n";
  const char sep = format == OutputFormat::kCsv ? ',' : ' ';
  std::string out;
  for (std::size_t n = 0; n < values.size(); ++n) {
    out += std::to_string(static_cast<std::int64_t>(n) + index_offset);
    out += sep;
    out += std::to_string(values[n]);
    out += '\n';
  }
  return out;
}

std::string render_bfile(const IndexedValues& records) {
  std::string out;
  for (const auto& [index, value] : records) {
    out += std::to_string(index) + " " + std::to_string(value) + "\n";
  }
  return out;
}

IndexedValues parse_bfile(std::string_view text) {
  IndexedValues records;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    if (eol == std::string_view::npos) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) + " is not newline-terminated");
    }
    const std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol + 1);

    const auto space = line.find(' ');
    if (space == std::string_view::npos || line.find(' ', space + 1) != std::string_view::npos) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) + " needs exactly one space");
    }
    auto parse_int = [&](std::string_view field) {
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw std::invalid_argument("b-file line " + std::to_string(line_no) + ": bad integer '" +
                                    std::string(field) + "'");
      }
      return v;
    };
    records.emplace_back(parse_int(line.substr(0, space)), parse_int(line.substr(space + 1)));
  }
  return records;
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Odious and evil numbers: generation, closed-form sums and identity checks", "oddevil"};
  app.require_subcommand(1);

  TermsArgs terms_args;
  auto* terms = app.add_subcommand("terms", "Print the first n members of a_{j,d}");
  add_spec_options(*terms, terms_args.radix, terms_args.cls);
  terms->add_option("-n,--count", terms_args.count, "Number of terms")->capture_default_str();
  add_format_option(*terms, terms_args.format);
  terms->add_option("--offset", terms_args.offset, "First index (1 matches OEIS A000069/A001969)")
      ->check(CLI::IsMember({0, 1}))
      ->capture_default_str();
  terms->add_flag("--morphic", terms_args.morphic, "Print the letters of t_d instead");
  terms->add_flag("--check", terms_args.check, "Compare against the brute-force filter");

  SumArgs sum_args;
  auto* sum = app.add_subcommand("sum", "Print a_{j,d}(0) + ... + a_{j,d}(N)");
  add_spec_options(*sum, sum_args.radix, sum_args.cls);
  sum->add_option("-N,--upto", sum_args.upto, "Last index N")->required();
  sum->add_flag("--check", sum_args.check, "Compare against brute-force accumulation");

  ShevelevArgs shev_args;
  auto* shev = app.add_subcommand("shevelev", "Classify n or verify the odious summatory cases");
  shev->add_option("mode", shev_args.mode, "classify | verify")
      ->check(CLI::IsMember({"classify", "verify"}));
  shev->add_option("args", shev_args.positional, "n, or lo hi");
  shev->add_option("--classify", shev_args.classify, "Classify n");
  shev->add_option("--verify", shev_args.verify, "Verify on [lo, hi]")->expected(2);
  shev->add_option("--jobs", shev_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

  ConstructArgs cons_args;
  auto* cons = app.add_subcommand("construct", "Build odious/evil prefixes from their characterizations");
  cons->add_option("METHOD", cons_args.method, "parity | offset | search")
      ->check(CLI::IsMember({"parity", "offset", "search"}));
  cons->add_option("LENGTH", cons_args.length, "Prefix length N");
  cons->add_option("--method", cons_args.method_flag, "parity | offset")
      ->check(CLI::IsMember({"parity", "offset"}));
  cons->add_option("-n,--count", cons_args.length, "Prefix length");
  cons->add_option("--search", cons_args.search, "Enumerate all solutions of length N");
  cons->add_option("--format", cons_args.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{
                                              {"plain", OutputFormat::kPlain}, {"csv", OutputFormat::kCsv}},
                                          CLI::ignore_case))
      ->default_str("plain");

  VerifyArgs ver_args;
  auto* ver = app.add_subcommand("verify", "Sweep identity suites over [0, n_max]");
  ver->add_option("suite", ver_args.suite, "relations | identities | all")
      ->required()
      ->check(CLI::IsMember({"relations", "identities", "all"}));
  ver->add_option("n_max", ver_args.n_max, "Upper end of the sweep")->required();
  ver->add_option("--jobs", ver_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  CommandResult res;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.exit_code = code == 0 ? kExitOk : kExitUsage;
    return res;
  }

  try {
    if (terms->parsed()) return cmd_terms(terms_args);
    if (sum->parsed()) return cmd_sum(sum_args);
    if (shev->parsed()) return cmd_shevelev(shev_args);
    if (cons->parsed()) return cmd_construct(cons_args);
    if (ver->parsed()) return cmd_verify(ver_args);
  } catch (const UsageError& e) {
    res = {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    res = {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
  } catch (const ResourceError& e) {
    res = {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
  } catch (const ArithmeticError& e) {
    res = {kExitFailure, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    res = {kExitFailure, "", std::string("error: ") + e.what() + "\n"};
  }
  return res;
}

}  // namespace oddevil::cli
