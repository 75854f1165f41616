#ifndef GLNMOM_OSC_MATH_HPP
#define GLNMOM_OSC_MATH_HPP

// Elementary functions in the precision of the oscillatory path.

#include <cmath>

#include "glnmom/numerics.hpp"

#if defined(__SIZEOF_FLOAT128__) && !defined(GLNMOM_NO_FLOAT128)
#include <quadmath.h>
#endif

namespace glnmom {

#if defined(__SIZEOF_FLOAT128__) && !defined(GLNMOM_NO_FLOAT128)
inline osc_real osc_exp(osc_real x) { return expq(x); }
inline osc_real osc_log(osc_real x) { return logq(x); }
inline osc_real osc_log1p(osc_real x) { return log1pq(x); }
inline osc_real osc_sin(osc_real x) { return sinq(x); }
inline osc_real osc_fabs(osc_real x) { return fabsq(x); }
inline osc_real osc_pow(osc_real x, osc_real y) { return powq(x, y); }
#else
inline osc_real osc_exp(osc_real x) { return expl(x); }
inline osc_real osc_log(osc_real x) { return logl(x); }
inline osc_real osc_log1p(osc_real x) { return log1pl(x); }
inline osc_real osc_sin(osc_real x) { return sinl(x); }
inline osc_real osc_fabs(osc_real x) { return fabsl(x); }
inline osc_real osc_pow(osc_real x, osc_real y) { return powl(x, y); }
#endif

}  // namespace glnmom

#endif
