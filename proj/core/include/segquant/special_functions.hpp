#ifndef SEGQUANT_SPECIAL_FUNCTIONS_HPP
#define SEGQUANT_SPECIAL_FUNCTIONS_HPP

namespace segquant {

/// Regularized incomplete beta I_x(a,b), evaluated by the modified-Lentz
/// continued fraction to absolute tolerance 1e-12, using the symmetry
/// I_x(a,b) = 1 - I_{1-x}(b,a) outside the fast-convergence region.
/// Throws NonConvergenceError after 300 iterations.
double regularized_incomplete_beta(double a, double b, double x);

/// Student-t CDF via the incomplete beta. df > 0.
double t_cdf(double t, double df);

/// F CDF via the incomplete beta. df1, df2 > 0.
double f_cdf(double f, double df1, double df2);

/// Two-sided p-value for a t statistic.
double two_sided_p_from_t(double t, double df);

} // namespace segquant

#endif
