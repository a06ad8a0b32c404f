#include "holo/holonomy.hpp"

#include <algorithm>
#include <sstream>

namespace holo {

UniversalElt generator_holonomy(int generator, int truncation) {
  std::vector<DiffPoly> comps;
  comps.reserve(static_cast<std::size_t>(truncation));
  for (int j = 1; j <= truncation; ++j)
    comps.push_back(DiffPoly::var(j, generator));
  return UniversalElt::from_components(std::move(comps));
}

UniversalHolonomy::UniversalHolonomy(int truncation) : truncation_(truncation) {
  if (truncation < 1)
    throw std::invalid_argument("truncation order must be >= 1");
}

const UniversalElt &UniversalHolonomy::of_generator(int generator) {
  auto it = generators_.find(generator);
  if (it == generators_.end())
    it = generators_.emplace(generator, generator_holonomy(generator, truncation_)).first;
  return it->second;
}

UniversalElt UniversalHolonomy::of_word(const Word &w) {
  return fold_word<DiffPoly>(w, truncation_,
                             [this](int g) { return of_generator(g); });
}

const UniversalElt &UniversalHolonomy::of_expr(const CommutatorExpr &e) {
  std::string key = e.to_string();
  if (auto it = expr_cache_.find(key); it != expr_cache_.end())
    return it->second;

  using Kind = CommutatorExpr::Kind;
  UniversalElt value;
  switch (e.kind()) {
  case Kind::Leaf:
    value = of_generator(e.generator());
    break;
  case Kind::Inverse:
    value = inverse(of_expr(e.children()[0]));
    break;
  case Kind::Product: {
    value = UniversalElt::identity(truncation_);
    for (const auto &c : e.children())
      value = compose(of_expr(c), value);
    break;
  }
  case Kind::Commutator: {
    UniversalElt a = of_expr(e.children()[0]);
    UniversalElt b = of_expr(e.children()[1]);
    // word a b a^-1 b^-1 folds to b^-1 o a^-1 o b o a
    value = group_commutator(inverse(b), inverse(a));
    break;
  }
  }
  return expr_cache_.emplace(std::move(key), std::move(value)).first->second;
}

void UniversalHolonomy::insert(const std::string &key, UniversalElt value) {
  if (value.truncation() != truncation_)
    throw std::invalid_argument("cached holonomy has a different truncation order");
  expr_cache_.insert_or_assign(key, std::move(value));
}

UniversalElt universal_holonomy(const Word &w, int truncation) {
  UniversalHolonomy engine(truncation);
  return engine.of_word(w);
}

UniversalElt universal_holonomy(const CommutatorExpr &e, int truncation) {
  UniversalHolonomy engine(truncation);
  return engine.of_expr(e);
}

int triangularity(const UniversalElt &f) {
  int tau = kPlusInfinity;
  for (int j = 1; j <= f.truncation(); ++j) {
    const auto &c = f.component(j);
    if (c.is_zero())
      continue;
    tau = std::min(tau, j - universal_length(c) + 1);
  }
  return tau;
}

StructureReport check_structure_theorem(const CommutatorExpr &e, int truncation) {
  UniversalHolonomy engine(truncation);
  return check_structure_theorem(e, engine);
}

StructureReport check_structure_theorem(const CommutatorExpr &e, UniversalHolonomy &engine) {
  StructureReport report;
  report.expression = e.to_string();
  report.weight = weight(e);
  report.truncation = engine.truncation();
  report.holds = true;
  const auto &f = engine.of_expr(e);
  for (int j = 1; j <= f.truncation(); ++j) {
    StructureRow row;
    row.order = j;
    row.length = universal_length(f.component(j));
    row.bound = report.weight == kPlusInfinity ? kMinusInfinity : j - report.weight + 1;
    // weight +inf means the identity: every component must vanish
    row.holds = row.length <= row.bound;
    report.holds = report.holds && row.holds;
    report.rows.push_back(row);
  }
  return report;
}

std::string StructureReport::to_string() const {
  std::ostringstream os;
  os << "structure " << expression << " weight=" << extended_to_string(weight)
     << " K=" << truncation << (holds ? " HOLDS" : " VIOLATED") << "\n";
  for (const auto &r : rows)
    os << "  j=" << r.order << " lambda=" << extended_to_string(r.length)
       << " bound=" << extended_to_string(r.bound) << (r.holds ? "" : "  <-- counterexample")
       << "\n";
  return os.str();
}

} // namespace holo
