// Special functions backing the p-value formulas.

#ifndef BDPRNG_STS_SPECIAL_HPP
#define BDPRNG_STS_SPECIAL_HPP

namespace bdprng::sts {

// Regularized upper incomplete gamma Q(a, x).
double igamc(double a, double x);

// Standard normal CDF.
double normal_cdf(double x);

}  // namespace bdprng::sts

#endif
