#include "abcensus/int128.hpp"

#include <algorithm>

namespace abcensus {

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string to_string(i128 v) {
  if (v < 0) return "-" + to_string(static_cast<u128>(-v));
  return to_string(static_cast<u128>(v));
}

}  // namespace abcensus
