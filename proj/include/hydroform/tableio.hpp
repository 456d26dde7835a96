#pragma once

#include <cstdio>
#include <string>

#include "hydroform/formfactor.hpp"

namespace hydroform::tableio {

/// %.17e rendering at double width; CSV columns use this fixed form, the
/// full-precision values are available through the JSON output paths.
inline std::string e17(const Real& x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17e", x.to_double());
  return buf;
}

inline std::string gos_csv_header(const formfactor::GosTable& t) {
  std::string line = "lnk,k,absF2";
  for (long l2 : t.l2_values) line += ",l2_" + std::to_string(l2);
  return line;
}

inline std::string gos_csv_row(const formfactor::GosTable& t, size_t i) {
  const auto& r = t.rows[i];
  std::string line = e17(r.lnk) + "," + e17(r.k) + "," + e17(r.absF2);
  for (const Real& p : r.l2_partials) line += "," + e17(p);
  return line;
}

inline std::string gos_csv(const formfactor::GosTable& t) {
  std::string out = gos_csv_header(t) + "\n";
  for (size_t i = 0; i < t.rows.size(); ++i) out += gos_csv_row(t, i) + "\n";
  return out;
}

}  // namespace hydroform::tableio
