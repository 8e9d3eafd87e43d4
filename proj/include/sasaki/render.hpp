#pragma once

#include <string>

#include "sasaki/tensor.hpp"

namespace sasaki {

// Frame vector as a linear combination, e.g. "-4·e1 + 2·e3"; "0" for the
// zero vector.
std::string format_frame_vector(const Vec3& v);

}  // namespace sasaki
