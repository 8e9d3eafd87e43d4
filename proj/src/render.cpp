#include "sasaki/render.hpp"

namespace sasaki {

std::string format_frame_vector(const Vec3& v) {
  std::string out;
  for (int i = 0; i < kDim; ++i) {
    if (v[i] == 0) continue;
    Rational c = v[i];
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != 1) out += format_rational(c) + "\xC2\xB7";  // middle dot
    out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace sasaki
