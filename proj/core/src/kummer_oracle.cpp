#include <stefan/verify.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace stefan {
namespace {

using boost::multiprecision::cpp_int;
using Float100 = boost::multiprecision::cpp_bin_float_100;

// Exact dyadic split: x = num / 2^shift with shift >= 0.
void split_dyadic(double x, cpp_int& num, int& shift) {
    if (x == 0.0) {
        num = 0;
        shift = 0;
        return;
    }
    int e = 0;
    const double m = std::frexp(x, &e); // x = m 2^e, |m| in [0.5, 1)
    num = static_cast<long long>(std::ldexp(m, 53)); // exact 53-bit integer
    shift = 53 - e;
    if (shift < 0) { // |x| >= 2^53: fold the excess into the integer
        num <<= -shift;
        shift = 0;
    }
}

double log10_of_ratio(const cpp_int& num, const cpp_int& den) {
    if (num == 0) return -std::numeric_limits<double>::infinity();
    const double bits = static_cast<double>(msb(abs(num))) -
                        static_cast<double>(msb(abs(den)));
    return bits * 0.30102999566398120;
}

} // namespace

double kummer_oracle(double a, double b, double z, int precision_digits) {
    if (precision_digits < 30)
        throw std::domain_error("kummer_oracle: precision_digits must be >= 30");
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(z))
        throw std::domain_error("kummer_oracle: non-finite argument");
    if (std::abs(z) > 60.0)
        throw std::domain_error("kummer_oracle: |z| must be <= 60");
    if (b <= 0.0 && b == std::floor(b))
        throw std::domain_error(
            "kummer_oracle: b must not be a non-positive integer");

    cpp_int A, B, Z;
    int sa = 0, sb = 0, sz = 0;
    split_dyadic(a, A, sa);
    split_dyadic(b, B, sb);
    split_dyadic(z, Z, sz);

    // All terms are kept as exact integers over one growing denominator:
    //   t_{n+1}/t_n = (a+n)/(b+n) * z/(n+1)
    //              = [(A + n 2^sa) Z 2^sb] / [(B + n 2^sb)(n+1) 2^(sa+sz)].
    cpp_int term_num = 1;
    cpp_int sum_num = 1;
    cpp_int den = 1;

    const double stop_log10 = -(precision_digits + 10.0);
    const int min_terms = static_cast<int>(std::ceil(std::abs(z))) + 1;
    constexpr int kMaxTerms = 3000;

    double max_mag = 0.0; // max log10 |partial sum|, cancellation witness
    int small_run = 0;
    bool converged = false;

    for (int n = 0; n < kMaxTerms; ++n) {
        cpp_int num_factor = (A + (cpp_int(n) << sa)) * Z;
        num_factor <<= sb;
        cpp_int den_factor = (B + (cpp_int(n) << sb)) * (n + 1);
        den_factor <<= (sa + sz);

        term_num *= num_factor;
        sum_num = sum_num * den_factor + term_num;
        den *= den_factor;

        max_mag = std::max(max_mag, log10_of_ratio(sum_num, den));

        const double term_mag = log10_of_ratio(term_num, den);
        const double sum_mag = log10_of_ratio(sum_num, den);
        if (term_mag - sum_mag <= stop_log10 && n + 1 >= min_terms) {
            if (++small_run >= 3) {
                converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
    }
    if (!converged)
        throw std::runtime_error("kummer_oracle: series did not settle within " +
                                 std::to_string(kMaxTerms) + " terms");

    const double final_mag = log10_of_ratio(sum_num, den);
    if (max_mag - final_mag > precision_digits - 17.0)
        throw std::runtime_error(
            "kummer_oracle: cancellation (" +
            std::to_string(max_mag - final_mag) +
            " digits) exceeds the certified precision margin; raise "
            "precision_digits");

    const Float100 value = Float100(sum_num) / Float100(den);
    return value.convert_to<double>();
}

} // namespace stefan
