#include <cliffalg/lie_structure.hpp>

#include <stdexcept>

namespace cliffalg {

IntegralityReport integrality_report(const QuadraticSpace<RationalFunction>& family) {
  if (family.dim() < 3) throw PreconditionError("integrality witness needs m >= 3");
  const Rational origin(0);
  IntegralityReport report;
  const auto L = structure_constants(family);
  report.constants_regular = true;
  for (const auto& c : L.constants)
    if (!c.regular_at(origin)) {
      report.constants_regular = false;
      break;
    }
  report.form_regular = true;
  for (int i = 1; i <= family.dim() && report.form_regular; ++i)
    for (int j = 1; j <= family.dim(); ++j)
      if (!family.b(i, j).regular_at(origin)) {
        report.form_regular = false;
        break;
      }
  return report;
}

bool integrality_witness(const QuadraticSpace<RationalFunction>& family) {
  const IntegralityReport r = integrality_report(family);
  if (!r.agree())
    throw std::logic_error("integrality criteria disagree: structure constants " +
                           std::string(r.constants_regular ? "regular" : "singular") + ", form " +
                           std::string(r.form_regular ? "regular" : "singular"));
  return r.constants_regular;
}

}  // namespace cliffalg
