#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <string>

namespace h1cube {

// cpp_rational keeps values in lowest terms with a positive denominator,
// which is exactly the canonical form the exact layer requires.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const BigRational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const BigRational& r) { return denominator(r) == 1; }

inline std::optional<BigInt> as_integer(const BigRational& r) {
    if (!is_integer(r)) return std::nullopt;
    return numerator(r);
}

template <typename T>
std::string to_string(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

inline BigRational rational_from_string(const std::string& s) {
    BigRational r;
    std::istringstream is(s);
    is >> r;
    return r;
}

}  // namespace h1cube
