#include "holo_cli/commands.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "holo/evaluation.hpp"
#include "holo/operators.hpp"
#include "holo/workbench.hpp"
#include "holo_cli/parse.hpp"
#include "holo_cli/suites.hpp"

namespace holo::cli {

std::string usage() {
  std::ostringstream os;
  os << "usage: holo <command> [args] [--session FILE] [--K k] [--seed S] [--trials N]\n"
        "            [--degree N] [--size N] [--diagonal r] [--dump FILE] [--load FILE]\n"
        "commands:\n"
        "  holonomy <word>        universal holonomy P(word), evaluated when periods are set\n"
        "  melnikov <word> <j>    component m_j of P(word)\n"
        "  tau <word>             triangularity index\n"
        "  toeplitz <word>        defining column S_0..S_K of T(P(word))\n"
        "  table                  Melnikov pairing table of the session orbit\n"
        "  orbitlength <j>        orbit length of M_j\n"
        "  verify <suite>         property suite:";
  for (const auto &n : suite_names())
    os << " " << n;
  os << "\n"
        "  example <name>         generic | triangle | lines | square stabilization\n"
        "  witness <polyfile>     random jet witness for the sum of the listed polynomials\n";
  return os.str();
}

namespace {

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string> &args, std::size_t from, std::size_t to) {
  std::string s;
  for (std::size_t k = from; k < to; ++k)
    s += (k > from ? " " : "") + args[k];
  return s;
}

int parse_index(const std::string &s, const std::string &what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception &) {
    throw UsageError("expected an integer " + what + ", got '" + s + "'");
  }
  if (used != s.size() || v < 1)
    throw UsageError("expected a positive integer " + what + ", got '" + s + "'");
  return v;
}

std::string read_file(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// Session periods re-indexed to truncation K.
PeriodSpec periods_at(const Session &s, int K) {
  PeriodSpec spec(s.m, K);
  if (s.periods)
    for (const auto &[key, g] : s.periods->assignments())
      if (key.second <= K)
        spec.assign(key.first, key.second, g);
  spec.fill_zero();
  return spec;
}

std::string k_tag(int K) { return "(K=" + std::to_string(K) + ")"; }

} // namespace

CommandResult run_command(const Session &session, const std::vector<std::string> &args,
                          const CommandOptions &opt) {
  if (args.empty())
    return {usage(), 2};
  const int K = opt.K.value_or(session.K);
  const std::uint64_t seed = opt.seed.value_or(session.seed);
  const std::string &cmd = args[0];
  std::ostringstream out;
  int code = 0;

  try {
    if (K < 1)
      throw UsageError("K must be >= 1");
    UniversalHolonomy engine(K);
    if (!opt.load.empty())
      load_cache(read_file(opt.load), engine);
    auto need = [&](std::size_t n, const std::string &form) {
      if (args.size() < n)
        throw UsageError("usage: holo " + form);
    };

    if (cmd == "holonomy") {
      need(2, "holonomy <word>");
      CommutatorExpr e = parse_expr(join(args, 1, args.size()));
      const auto &f = engine.of_expr(e);
      out << "P(" << e.to_string() << ") " << k_tag(K) << ":\n" << f.to_string();
      if (session.periods)
        out << "evaluated:\n" << evaluate_holonomy(f, periods_at(session, K)).to_string();
    } else if (cmd == "melnikov") {
      need(3, "melnikov <word> <j>");
      int j = parse_index(args.back(), "Melnikov index");
      if (j > K)
        throw UsageError("Melnikov index " + std::to_string(j) + " exceeds K = " +
                         std::to_string(K));
      CommutatorExpr e = parse_expr(join(args, 1, args.size() - 1));
      const DiffPoly &c = engine.of_expr(e).component(j);
      out << "m_" << j << "(" << e.to_string() << ") = " << c.to_string() << "\n";
      out << "lambda = " << extended_to_string(universal_length(c)) << ", bound "
          << extended_to_string(weight(e) == kPlusInfinity ? kMinusInfinity : j - weight(e) + 1)
          << "\n";
      if (session.periods) {
        Germ v = evaluate_poly(c, periods_at(session, K));
        out << "M_" << j << " = " << v.to_string() << " (" << germ_is_zero(v).to_string()
            << ")\n";
      }
    } else if (cmd == "tau") {
      need(2, "tau <word>");
      CommutatorExpr e = parse_expr(join(args, 1, args.size()));
      int tau = triangularity(engine.of_expr(e));
      out << "tau >= " << extended_to_string(weight(e)) << " " << k_tag(K) << "\n";
      out << "tau_K = " << extended_to_string(tau)
          << " (index of the truncated element, an upper bound for tau)\n";
      if (weight(e) != kPlusInfinity && tau < weight(e)) {
        out << "CHECK tau.weight-bound: FAIL — tau_K below the weight\n";
        code = 1;
      }
    } else if (cmd == "toeplitz") {
      need(2, "toeplitz <word>");
      CommutatorExpr e = parse_expr(join(args, 1, args.size()));
      out << "T(P(" << e.to_string() << ")) " << k_tag(K) << ":\n"
          << toeplitz_matrix(engine.of_expr(e)).to_string();
    } else if (cmd == "table") {
      if (!session.orbit)
        throw UsageError("table needs an [orbit] section in the session");
      auto table = melnikov_table(periods_at(session, K), *session.orbit, K, &engine);
      out << table.to_text() << table.to_rows();
      out << "verdicts relative to the listed orbit generators\n";
    } else if (cmd == "orbitlength") {
      need(2, "orbitlength <j>");
      if (!session.orbit)
        throw UsageError("orbitlength needs an [orbit] section in the session");
      int j = parse_index(args[1], "Melnikov index");
      if (j > K)
        throw UsageError("Melnikov index exceeds K");
      auto r = orbit_length(j, periods_at(session, K), *session.orbit, &engine);
      out << "orbit length of M_" << j << " = " << r.length << " " << k_tag(K);
      if (r.precision)
        out << ", vanishing certified to jet precision " << *r.precision;
      out << "\nrelative to the listed generators of O_1..O_" << session.orbit->depth() << "\n";
    } else if (cmd == "verify") {
      need(2, "verify <suite>");
      SuiteOptions so{K, opt.trials, seed, opt.degree, opt.size};
      std::vector<Check> checks;
      try {
        checks = run_suite(args[1], so);
      } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
      }
      int passed = 0;
      for (const auto &c : checks) {
        out << c.line() << "\n";
        passed += c.pass ? 1 : 0;
      }
      out << "SUMMARY: " << passed << "/" << checks.size() << " checks passed\n";
      code = passed == static_cast<int>(checks.size()) ? 0 : 1;
    } else if (cmd == "example") {
      need(2, "example <name>");
      ExampleTemplate t;
      try {
        t = template_by_name(args[1]);
      } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
      }
      auto rep = diagonal_stabilization(t, opt.diagonal, K, seed, opt.degree);
      std::string body = rep.to_string();
      // the report's last line is the verdict; CHECK lines go before it
      auto cut = body.rfind('\n', body.size() - 2);
      out << body.substr(0, cut + 1);
      for (const auto &row : rep.rows) {
        if (row.witness)
          out << Check{"row " + std::to_string(row.row), row.vanishes_after,
                       "witness M_" + std::to_string(row.row) + "(" + row.witness->expr +
                           ") != 0, then exact zero under the imposed condition"}
                     .line()
              << "\n";
        else
          out << Check{"row " + std::to_string(row.row), true, "exact zero"}.line() << "\n";
      }
      out << body.substr(cut + 1);
      code = rep.confirmed ? 0 : 1;
    } else if (cmd == "witness") {
      need(2, "witness <polyfile>");
      std::istringstream in(read_file(args[1]));
      std::vector<DiffPoly> summands;
      std::string line;
      int n = 0;
      while (std::getline(in, line)) {
        ++n;
        if (auto h = line.find('#'); h != std::string::npos)
          line.erase(h);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
          continue;
        summands.push_back(parse_diffpoly(line, n));
      }
      auto w = random_jet_witness(summands, opt.trials, seed);
      if (w) {
        out << w->to_string();
        out << Check{"witness", true, "found at trial " + std::to_string(w->trial)}.line()
            << "\n";
      } else {
        out << "not_found\n";
        out << Check{"witness", false,
                     "not_found after " + std::to_string(opt.trials) + " trials"}
                   .line()
            << "\n";
        code = 1;
      }
    } else {
      return {"unknown command '" + cmd + "'\n" + usage(), 2};
    }

    if (!opt.dump.empty()) {
      std::ofstream f(opt.dump);
      if (!f)
        throw UsageError("cannot write '" + opt.dump + "'");
      f << render_cache(engine);
    }
  } catch (const UsageError &e) {
    return {out.str() + "error: " + e.what() + "\n", 2};
  } catch (const ParseError &e) {
    return {out.str() + "error: " + e.what() + "\n", 2};
  } catch (const std::logic_error &e) {
    return {out.str() + "error: " + e.what() + "\n", 2};
  }
  return {out.str(), code};
}

} // namespace holo::cli
