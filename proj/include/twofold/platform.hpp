#pragma once

// The host math library calls whose results the t-prefixed functions
// reproduce bitwise. Defined out of line so that a call with a constant
// argument is never folded at compile time by the compiler's own evaluator.

namespace twofold::platform {

double exp(double x);
double expm1(double x);
double log(double x);
double log1p(double x);

float exp(float x);
float expm1(float x);
float log(float x);
float log1p(float x);

}  // namespace twofold::platform
