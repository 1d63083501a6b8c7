#include "twofold/platform.hpp"

#include <cmath>

namespace twofold::platform {

double exp(double x) { return std::exp(x); }
double expm1(double x) { return std::expm1(x); }
double log(double x) { return std::log(x); }
double log1p(double x) { return std::log1p(x); }

float exp(float x) { return std::exp(x); }
float expm1(float x) { return std::expm1(x); }
float log(float x) { return std::log(x); }
float log1p(float x) { return std::log1p(x); }

}  // namespace twofold::platform
