#include "hydroform/real.hpp"

#include <cstdio>
#include <cstdlib>
#include <vector>

namespace hydroform {

std::string Real::str(size_t digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  if (digits == 0) {
    // ceil(bits * log10(2)) + 2 guard digits
    digits = static_cast<size_t>(static_cast<double>(prec()) * 0.30103) + 3;
  }
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_) < 0) return "nan";
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace hydroform
