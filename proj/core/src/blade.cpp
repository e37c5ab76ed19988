#include <cliffalg/blade.hpp>
#include <cliffalg/error.hpp>

#include <algorithm>

namespace cliffalg {

Blade blade_of(std::span<const int> indices) {
  Blade b = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxGenerators) throw IndexOutOfRange("blade index " + std::to_string(i) + " out of range");
    if (contains(b, i)) throw PreconditionError("repeated index " + std::to_string(i) + " in blade");
    b |= generator_blade(i);
  }
  return b;
}

std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  for (; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string blade_name(Blade b) {
  if (b == 0) return "e0";
  const auto idx = blade_indices(b);
  const bool wide = idx.back() > 9;
  std::string out = "e";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (wide && k > 0) out += ',';
    out += std::to_string(idx[k]);
  }
  return out;
}

bool graded_lex_less(Blade a, Blade b) {
  if (grade(a) != grade(b)) return grade(a) < grade(b);
  return blade_indices(a) < blade_indices(b);
}

std::vector<Blade> blades_by_grade(int m) {
  if (m < 0 || m > kMaxGenerators) throw IndexOutOfRange("dimension out of range");
  std::vector<Blade> out;
  const Blade count = Blade{1} << m;
  out.reserve(count);
  for (Blade b = 0; b < count; ++b) out.push_back(b);
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

std::vector<Blade> even_blades(int m) {
  std::vector<Blade> all = blades_by_grade(m);
  std::erase_if(all, [](Blade b) { return !is_even_blade(b); });
  return all;
}

}  // namespace cliffalg
