#pragma once

// Command-line front end. `run` is the whole program minus main(), so tests
// can drive it in-process with captured streams.
//
// Exit codes: 0 = yes / clean, 1 = no / mismatches found, 2 = error.

#include "rsq/rsq.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace rsq::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Builds one output line, either as a JSON object with fields in insertion
/// order or as space-separated key=value text. Integers are written as exact
/// decimal literals, so values beyond 64 bits stay valid JSON.
class RecordWriter {
 public:
  explicit RecordWriter(bool json) : json_(json) {}

  RecordWriter& integer(std::string_view key, const std::string& decimal) { return raw(key, decimal, decimal); }

  template <ExactInteger Int>
  RecordWriter& integer(std::string_view key, const Int& value) {
    return integer(key, to_string(value));
  }
  RecordWriter& integer(std::string_view key, std::int64_t value) { return integer(key, std::to_string(value)); }

  RecordWriter& boolean(std::string_view key, bool value) {
    return raw(key, value ? "true" : "false", value ? "yes" : "no");
  }

  RecordWriter& string(std::string_view key, std::string_view value) {
    return raw(key, nlohmann::json(std::string(value)).dump(), std::string(value));
  }

  RecordWriter& integers(std::string_view key, const std::vector<std::string>& decimals) {
    std::string joined;
    for (std::size_t i = 0; i < decimals.size(); ++i) {
      if (i) joined += ',';
      joined += decimals[i];
    }
    return raw(key, "[" + joined + "]", "(" + joined + ")");
  }

  RecordWriter& null(std::string_view key) { return raw(key, "null", "none"); }

  std::string str() const { return json_ ? "{" + body_ + "}" : body_; }

 private:
  RecordWriter& raw(std::string_view key, const std::string& json_value, const std::string& text_value) {
    if (!body_.empty()) body_ += json_ ? "," : " ";
    if (json_) {
      body_ += nlohmann::json(std::string(key)).dump() + ":" + json_value;
    } else {
      body_ += std::string(key) + "=" + text_value;
    }
    return *this;
  }

  bool json_;
  std::string body_;
};

template <ExactInteger Int>
std::vector<std::string> decimals(const ThreeSquareTriple<Int>& t) {
  return {to_string(t.b1), to_string(t.b2), to_string(t.b3)};
}

template <ExactInteger Int>
std::vector<std::string> decimals(const Representation<Int>& r) {
  return {to_string(r.a[0]), to_string(r.a[1]), to_string(r.a[2]), to_string(r.a[3])};
}

inline std::vector<std::string> decimals(const oracle::Quadruple& q) {
  return {std::to_string(q[0]), std::to_string(q[1]), std::to_string(q[2]), std::to_string(q[3])};
}

struct Options {
  bool json = false;
  std::uint64_t search_cap = kDefaultSearchCap;
};

namespace detail {

inline Integer parse_or_throw(const std::string& text, std::string_view what) {
  auto value = parse_integer<Integer>(text);
  if (!value) throw std::invalid_argument(std::string(what) + " is not an integer: '" + text + "'");
  return *value;
}

inline std::int64_t narrow_or_throw(const Integer& value, std::string_view what) {
  auto v = narrow<std::int64_t>(value);
  if (!v) throw CapacityError(std::string(what) + " = " + to_string(value) + " is outside the oracle's 64-bit range");
  return *v;
}

/// Prints the n/T record; solve additionally fills triple and representation.
inline int report_instance(const RestrictedTarget<Integer>& target, bool with_solution, const Options& opts,
                           std::ostream& out) {
  const Verdict<Integer> verdict = classify(target);
  RecordWriter rec(opts.json);
  rec.integer("n", target.n).integer("T", target.T).boolean("representable", verdict.representable);
  if (verdict.reason) rec.string("reason", to_string(*verdict.reason));
  rec.integer("m", verdict.m);
  if (with_solution && verdict.representable) {
    auto trace = solve_traced(target, opts.search_cap);
    if (!trace) throw ContractViolation("solve returned none for a representable instance");
    rec.integers("triple", decimals(trace->triple)).integers("representation", decimals(trace->representation));
  }
  out << rec.str() << '\n';
  return verdict.representable ? kExitYes : kExitNo;
}

inline int run_three_squares(const Integer& m, const Options& opts, std::ostream& out) {
  const bool ok = is_three_square(m);
  RecordWriter rec(opts.json);
  rec.integer("m", m).boolean("representable", ok);
  if (ok) rec.integers("triple", decimals(*represent_three_square(m, opts.search_cap)));
  out << rec.str() << '\n';
  return ok ? kExitYes : kExitNo;
}

inline int run_enumerate(const Integer& n_in, const Integer& T_in, std::optional<std::size_t> limit, bool count_only,
                         const Options& opts, std::ostream& out) {
  const std::int64_t n = narrow_or_throw(n_in, "n");
  const std::int64_t T = narrow_or_throw(T_in, "T");
  const auto found = oracle::enumerate(n, T, limit);
  if (count_only) {
    RecordWriter rec(opts.json);
    rec.integer("n", n).integer("T", T).integer("count", static_cast<std::int64_t>(found.size()));
    out << rec.str() << '\n';
  } else {
    for (const auto& q : found) {
      RecordWriter rec(opts.json);
      rec.integer("n", n).integer("T", T).integers("representation", decimals(q));
      out << rec.str() << '\n';
    }
  }
  return found.empty() ? kExitNo : kExitYes;
}

inline int run_verify(std::int64_t n_max, unsigned jobs, const Options& opts, std::ostream& out) {
  const VerificationReport report = verify_range(n_max, jobs, oracle::kDefaultOracleBound, opts.search_cap);
  for (const auto& m : report.mismatches) {
    RecordWriter rec(opts.json);
    rec.string("kind", "mismatch").integer("n", m.n).integer("T", m.T);
    rec.boolean("oracle_exists", m.oracle_exists).boolean("solver_decides", m.solver_decides);
    out << rec.str() << '\n';
  }
  for (const auto& w : report.invalid_witnesses) {
    RecordWriter rec(opts.json);
    rec.string("kind", "invalid_witness").integer("n", w.n).integer("T", w.T);
    if (w.representation) {
      rec.integers("representation", decimals(*w.representation));
    } else {
      rec.null("representation");
    }
    rec.string("detail", w.detail);
    out << rec.str() << '\n';
  }
  RecordWriter summary(opts.json);
  summary.integer("n_max", n_max)
      .integer("scanned_instances", static_cast<std::int64_t>(report.scanned_instances))
      .integer("mismatches", static_cast<std::int64_t>(report.mismatches.size()))
      .integer("invalid_witnesses", static_cast<std::int64_t>(report.invalid_witnesses.size()))
      .integer("elapsed_ms",
               static_cast<std::int64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count()))
      .boolean("passed", report.passed());
  out << summary.str() << '\n';
  return report.passed() ? kExitYes : kExitNo;
}

}  // namespace detail

/// args[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Four-square representations with a prescribed coordinate sum", "rsq"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_flag("--json", opts.json, "One JSON record per line");
  app.add_option("--search-cap", opts.search_cap, "Largest m the three-square search will attempt")
      ->check(CLI::Range(std::uint64_t{1}, kMaxSearchCap));

  std::string n_text;
  std::string T_text;
  std::string m_text;

  auto* decide_cmd = app.add_subcommand("decide", "Decide whether n has a representation with coordinate sum T");
  decide_cmd->add_option("n", n_text)->required();
  decide_cmd->add_option("T", T_text)->required();

  auto* solve_cmd = app.add_subcommand("solve", "Construct a representation of n with coordinate sum T");
  solve_cmd->add_option("n", n_text)->required();
  solve_cmd->add_option("T", T_text)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "List all representations by brute force");
  std::optional<std::size_t> limit;
  bool count_only = false;
  enum_cmd->add_option("n", n_text)->required();
  enum_cmd->add_option("T", T_text)->required();
  enum_cmd->add_option("--limit", limit, "Stop after K representations");
  enum_cmd->add_flag("--count-only", count_only, "Print only the number found");

  auto* three_cmd = app.add_subcommand("three-squares", "Decide and witness m as a sum of three squares");
  three_cmd->add_option("m", m_text)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check solver against brute force for all n <= N");
  std::int64_t n_max = 0;
  unsigned jobs = 1;
  verify_cmd->add_option("--n-max", n_max)->required()->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (*decide_cmd || *solve_cmd) {
      RestrictedTarget<Integer> target{detail::parse_or_throw(n_text, "n"), detail::parse_or_throw(T_text, "T")};
      return detail::report_instance(target, static_cast<bool>(*solve_cmd), opts, out);
    }
    if (*enum_cmd) {
      return detail::run_enumerate(detail::parse_or_throw(n_text, "n"), detail::parse_or_throw(T_text, "T"), limit,
                                   count_only, opts, out);
    }
    if (*three_cmd) return detail::run_three_squares(detail::parse_or_throw(m_text, "m"), opts, out);
    if (*verify_cmd) return detail::run_verify(n_max, jobs, opts, out);
  } catch (const CapacityError& e) {
    err << "rsq: capacity: " << e.what() << '\n';
    return kExitError;
  } catch (const ContractViolation& e) {
    err << "rsq: internal error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "rsq: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace rsq::cli
