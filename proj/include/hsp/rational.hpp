#ifndef HSP_RATIONAL_HPP
#define HSP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hsp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// All user-facing numbers are rendered as "p/q", denominator included even when 1,
// so text and JSON outputs can be compared byte-for-byte.
inline std::string rat_to_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int p(s.substr(0, slash));
  Int q(s.substr(slash + 1));
  if (q == 0) throw std::runtime_error("rational with zero denominator: " + s);
  return Rat(p, q);
}

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace hsp

#endif
