#include <stefan/csv.hpp>

#include <charconv>
#include <string>

namespace stefan {
namespace {

// to_chars is locale-independent but may emit single-digit exponents; pad to
// the conventional two digits so output is printf-compatible byte for byte.
std::string pad_exponent(std::string s) {
    auto e = s.find('e');
    if (e == std::string::npos) return s;
    size_t digits_at = e + 1;
    if (digits_at < s.size() && (s[digits_at] == '-' || s[digits_at] == '+'))
        ++digits_at;
    if (s.size() - digits_at < 2) s.insert(digits_at, "0");
    return s;
}

} // namespace

std::string format_sci(double v) {
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::scientific, 11);
    (void)ec;
    return pad_exponent(std::string(buf, ptr));
}

std::string format_table(double v) {
    if (v == 0.0) v = 0.0;
    char buf[40];
    auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 4);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_short(double v) {
    if (v == 0.0) v = 0.0;
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return pad_exponent(std::string(buf, ptr));
}

} // namespace stefan
