#include "cube/dyadic.hpp"

#include <cstddef>
#include <string>

namespace cube {

Dyadic Dyadic::parse(const std::string& s) {
  std::size_t sep = s.find("/2^");
  if (sep == std::string::npos) throw std::invalid_argument("Dyadic: expected \"num/2^k\"");
  std::size_t used = 0;
  long long num = std::stoll(s.substr(0, sep), &used);
  if (used != sep) throw std::invalid_argument("Dyadic: bad numerator");
  std::string exp = s.substr(sep + 3);
  int log_den = std::stoi(exp, &used);
  if (used != exp.size() || exp.empty()) throw std::invalid_argument("Dyadic: bad exponent");
  return from_ratio(num, log_den);
}

}  // namespace cube
