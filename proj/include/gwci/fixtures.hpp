#pragma once

#include "gwci/io.hpp"

namespace gwci::fixtures {

// g = x^2, y^3, z^5; I = (x^2y^4+y^3z^7, y^6, x^4y^2); resolution of length 3
ProblemFile pure_powers_a();

// g = x^2+yz, y^3, z^5; I = (x^2y^4+y^5z+xz^10, y^6, x^4y^2+x^2y^3z)
ProblemFile quadric_frame();

// k[x,y], g = x^2+y^2, y^3; I = (g1^2 g2, g1^4, g2^3), minimal resolution
ProblemFile plane_powers();

// g = x^2, y^3, z^5; I = (x^2y^8, y^8z^9, x^3z^14+x^5y^5); length 2
ProblemFile pure_powers_b();

// k[x,y], g = x, y; I = (x^2, xy)
ProblemFile linear_frame();

std::vector<std::pair<std::string, ProblemFile>> all();

} // namespace gwci::fixtures
