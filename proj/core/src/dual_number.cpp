#include <cliffalg/dual_number.hpp>

namespace cliffalg {

std::string DualNumber::to_string() const {
  return cliffalg::to_string(re) + " + " + cliffalg::to_string(eps) + "*eps";
}

}  // namespace cliffalg
