#pragma once

namespace stefan {

// Confluent hypergeometric function M(a, b, z) (Kummer's function of the
// first kind), via the power series with all-positive-term routing:
// negative arguments are mapped through M(a,b,z) = e^z M(b-a, b, -z) so that
// the parameter families used by the similarity solutions are summed without
// sign-alternating cancellation.
//
// Throws std::domain_error when b is a non-positive integer or an input is
// non-finite, std::overflow_error when the value is not representable, and
// std::runtime_error if the series fails its convergence criterion.
double kummer_m(double a, double b, double z);

// d/dz M(a, b, z) = (a/b) M(a+1, b+1, z).
double kummer_m_derivative(double a, double b, double z);

// Repeated integral of the complementary error function:
//   i^0 erfc(z) = erfc(z),
//   i^n erfc(z) = integral of i^(n-1) erfc over [z, inf).
// Forward recurrence for z <= 1 (stable there); backward (Miller-style)
// recurrence normalized by erfc(z) for z > 1, where the forward direction
// loses digits to a growing contaminant mode.
//
// Throws std::domain_error for n < 0 or non-finite z.
double inerfc(int n, double z);

} // namespace stefan
