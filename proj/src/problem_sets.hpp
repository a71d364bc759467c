#pragma once

#include <vector>

#include "mvie/problem.hpp"

namespace mvie::detail {

std::vector<ProblemSpec> cec2006_problems();
std::vector<ProblemSpec> engineering_problems();

}  // namespace mvie::detail
