#include "holo_cli/session.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <vector>

#include "holo_cli/parse.hpp"

namespace holo::cli {

PeriodSpec Session::filled_periods() const {
  PeriodSpec spec = periods ? *periods : PeriodSpec(m, K);
  spec.fill_zero();
  return spec;
}

namespace {

std::string trim(const std::string &s, int &lead) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) {
    lead = static_cast<int>(s.size());
    return {};
  }
  std::size_t b = s.find_last_not_of(" \t\r");
  lead = static_cast<int>(a);
  return s.substr(a, b - a + 1);
}

struct PendingPeriod {
  int line, column, order, generator;
  Germ value;
};

struct PendingLevel {
  int line, column, level;
  std::vector<CommutatorExpr> exprs;
};

} // namespace

Session parse_session(const std::string &text) {
  static const std::regex key_re(R"(^([A-Za-z]+)\s*=\s*(.*)$)");
  static const std::regex period_re(R"(^M\s*\[\s*(\d+)\s*\]\s*\[\s*d\s*(\d+)\s*\]\s*=(.*)$)");
  static const std::regex orbit_re(R"(^O\s*\[\s*(\d+)\s*\]\s*=(.*)$)");

  Session s;
  enum class Section { None, Config, Periods, Orbit } section = Section::None;
  std::vector<PendingPeriod> periods;
  std::vector<PendingLevel> levels;
  bool saw_periods = false, saw_orbit = false;
  std::set<std::string> config_keys;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    int lead = 0;
    std::string body = trim(raw, lead);
    if (body.empty())
      continue;
    if (body.front() == '[' && body.back() == ']' && body.find('=') == std::string::npos) {
      std::string name = body.substr(1, body.size() - 2);
      if (name == "config")
        section = Section::Config;
      else if (name == "periods")
        section = Section::Periods, saw_periods = true;
      else if (name == "orbit")
        section = Section::Orbit, saw_orbit = true;
      else
        throw ParseError(line, lead + 1, "unknown section [" + name + "]");
      continue;
    }
    std::smatch mt;
    switch (section) {
    case Section::None:
      throw ParseError(line, lead + 1, "content outside of a section");
    case Section::Config: {
      if (!std::regex_match(body, mt, key_re))
        throw ParseError(line, lead + 1, "expected 'key = value'");
      std::string key = mt[1], value = mt[2];
      int vcol = lead + static_cast<int>(mt.position(2)) + 1;
      if (!config_keys.insert(key).second)
        throw ParseError(line, lead + 1, "duplicate key '" + key + "'");
      unsigned long long v = 0;
      std::size_t used = 0;
      try {
        v = std::stoull(value, &used);
      } catch (const std::exception &) {
        throw ParseError(line, vcol, "expected a nonnegative integer");
      }
      if (used != value.size())
        throw ParseError(line, vcol + static_cast<int>(used), "trailing characters");
      if (key == "m" || key == "K") {
        if (v < 1 || v > 1023)
          throw ParseError(line, vcol, key + " must lie in 1..1023");
        (key == "m" ? s.m : s.K) = static_cast<int>(v);
      } else if (key == "seed") {
        s.seed = v;
      } else {
        throw ParseError(line, lead + 1, "unknown key '" + key + "' (expected m, K, seed)");
      }
      break;
    }
    case Section::Periods: {
      if (!std::regex_match(body, mt, period_re))
        throw ParseError(line, lead + 1, "expected 'M[j][d i] = <germ>'");
      int col = lead + static_cast<int>(mt.position(3));
      Germ g = parse_germ(mt[3], line, col);
      periods.push_back({line, lead + 1, std::stoi(mt[1]), std::stoi(mt[2]), std::move(g)});
      break;
    }
    case Section::Orbit: {
      if (!std::regex_match(body, mt, orbit_re))
        throw ParseError(line, lead + 1, "expected 'O[i] = <expr>, <expr>, ...'");
      int col = lead + static_cast<int>(mt.position(2));
      PendingLevel lv{line, lead + 1, std::stoi(mt[1]), {}};
      for (const auto &[piece, off] : split_top_level(mt[2]))
        lv.exprs.push_back(parse_expr(piece, line, col + off));
      levels.push_back(std::move(lv));
      break;
    }
    }
  }

  if (saw_periods) {
    PeriodSpec spec(s.m, s.K);
    for (auto &p : periods) {
      if (p.generator < 1 || p.generator > s.m)
        throw ParseError(p.line, p.column,
                         "generator d" + std::to_string(p.generator) + " outside 1.." +
                             std::to_string(s.m));
      if (p.order < 1 || p.order > s.K)
        throw ParseError(p.line, p.column, "Melnikov index " + std::to_string(p.order) +
                                               " outside 1.." + std::to_string(s.K));
      if (spec.has(p.generator, p.order))
        throw ParseError(p.line, p.column, "duplicate assignment to M[" +
                                               std::to_string(p.order) + "][d" +
                                               std::to_string(p.generator) + "]");
      spec.assign(p.generator, p.order, std::move(p.value));
    }
    s.periods = std::move(spec);
  }
  if (saw_orbit) {
    OrbitSpec orbit;
    std::set<int> seen;
    for (auto &lv : levels) {
      if (lv.level < 1)
        throw ParseError(lv.line, lv.column, "orbit level must be >= 1");
      if (!seen.insert(lv.level).second)
        throw ParseError(lv.line, lv.column,
                         "duplicate orbit level O[" + std::to_string(lv.level) + "]");
      for (const auto &e : lv.exprs)
        if (e.max_generator() > s.m)
          throw ParseError(lv.line, lv.column,
                           "generator in " + e.to_string() + " outside 1.." + std::to_string(s.m));
      try {
        orbit.set_level(lv.level, lv.exprs);
      } catch (const std::invalid_argument &e) {
        throw ParseError(lv.line, lv.column, e.what());
      }
    }
    s.orbit = std::move(orbit);
  }
  return s;
}

std::string render_session(const Session &s) {
  std::ostringstream os;
  os << "[config]\nm = " << s.m << "\nK = " << s.K << "\nseed = " << s.seed << "\n";
  if (s.periods) {
    os << "\n[periods]\n";
    for (const auto &[key, g] : s.periods->assignments())
      os << "M[" << key.second << "][d" << key.first << "] = " << g.to_string() << "\n";
  }
  if (s.orbit) {
    os << "\n[orbit]\n";
    for (int i = 1; i <= s.orbit->depth(); ++i) {
      const auto &lv = s.orbit->level(i);
      if (lv.empty())
        continue;
      os << "O[" << i << "] = ";
      for (std::size_t k = 0; k < lv.size(); ++k)
        os << (k ? ", " : "") << lv[k].to_string();
      os << "\n";
    }
  }
  return os.str();
}

Session load_session(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw std::runtime_error("cannot open session file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_session(ss.str());
}

std::string render_cache(const UniversalHolonomy &engine) {
  std::ostringstream os;
  os << "K = " << engine.truncation() << "\n";
  for (const auto &[key, f] : engine.cache())
    for (int j = 1; j <= f.truncation(); ++j)
      if (!f.component(j).is_zero())
        os << "H[" << key << "][" << j << "] = " << f.component(j).to_string() << "\n";
  return os.str();
}

void load_cache(const std::string &text, UniversalHolonomy &engine) {
  static const std::regex k_re(R"(^K\s*=\s*(\d+)\s*$)");
  static const std::regex entry_re(R"(^H\[(.*)\]\[(\d+)\]\s*=(.*)$)");
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::map<std::string, UniversalElt> loaded;
  std::vector<std::string> order;
  bool saw_k = false;
  while (std::getline(in, raw)) {
    ++line;
    int lead = 0;
    std::string body = trim(raw, lead);
    if (body.empty() || body.front() == '#')
      continue;
    std::smatch mt;
    if (std::regex_match(body, mt, k_re)) {
      if (std::stoi(mt[1]) != engine.truncation())
        throw ParseError(line, lead + 1, "cache truncation " + std::string(mt[1]) +
                                             " differs from session K = " +
                                             std::to_string(engine.truncation()));
      saw_k = true;
      continue;
    }
    if (!std::regex_match(body, mt, entry_re))
      throw ParseError(line, lead + 1, "expected 'H[expr][j] = <poly>'");
    if (!saw_k)
      throw ParseError(line, lead + 1, "missing 'K = n' header");
    // normalize the key through the expression parser
    std::string key = parse_expr(mt[1], line, lead + 2).to_string();
    int j = std::stoi(mt[2]);
    if (j < 1 || j > engine.truncation())
      throw ParseError(line, lead + 1, "component index outside 1.." +
                                           std::to_string(engine.truncation()));
    DiffPoly p = parse_diffpoly(mt[3], line, lead + static_cast<int>(mt.position(3)));
    auto it = loaded.find(key);
    if (it == loaded.end()) {
      it = loaded.emplace(key, UniversalElt::identity(engine.truncation())).first;
      order.push_back(key);
    }
    try {
      it->second.set_component(j, std::move(p));
    } catch (const std::invalid_argument &e) {
      throw ParseError(line, lead + 1, e.what());
    }
  }
  for (const auto &key : order)
    engine.insert(key, loaded.at(key));
}

} // namespace holo::cli
