#include "holo/liealg.hpp"

#include <sstream>
#include <stdexcept>

namespace holo {

GradedReport graded_consistency(const CommutatorExpr &e1, const CommutatorExpr &e2,
                                UniversalHolonomy &engine) {
  int k1 = weight(e1), k2 = weight(e2);
  if (k1 == kPlusInfinity || k2 == kPlusInfinity ||
      static_cast<long>(k1) + k2 > engine.truncation())
    throw std::invalid_argument("weight sum of " + e1.to_string() + " and " + e2.to_string() +
                                " exceeds truncation order " +
                                std::to_string(engine.truncation()));
  GradedReport r{e1.to_string(), e2.to_string(), k1, k2, k1 + k2, {}, {}, false};
  DiffPoly a = engine.of_expr(e1).component(k1);
  DiffPoly b = engine.of_expr(e2).component(k2);
  r.bracket = da_bracket(a, b);
  r.component = engine.of_expr(CommutatorExpr::commutator(e1, e2)).component(k1 + k2);
  r.holds = r.component == r.bracket;
  return r;
}

GradedReport graded_consistency(const CommutatorExpr &e1, const CommutatorExpr &e2,
                                int truncation) {
  UniversalHolonomy engine(truncation);
  return graded_consistency(e1, e2, engine);
}

std::string GradedReport::to_string() const {
  std::ostringstream os;
  os << "graded [" << left << ", " << right << "] order " << order << ": "
     << (holds ? "component = W(m_" + std::to_string(weight_left) + ", m_" +
                     std::to_string(weight_right) + ")"
               : "MISMATCH")
     << "\n";
  if (!holds)
    os << "  component: " << component.to_string() << "\n  bracket:   " << bracket.to_string()
       << "\n";
  return os.str();
}

} // namespace holo
