#pragma once

#include "evtp/core/matrix.hpp"
#include "evtp/core/scalar.hpp"

namespace fixtures {

using evtp::Matrix;
using evtp::Rational;

inline Matrix<Rational> example1() {
  return Matrix<Rational>::from_rows({{10, 2, 2}, {3, 2, 1}, {7, 4, 6}});
}

inline Matrix<Rational> example2() {
  return Matrix<Rational>::from_rows({{8, 4, 1}, {4, 10, 3}, {-3, 5, 9}});
}

inline Matrix<Rational> parse_rows(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (const char* t : r) row.push_back(evtp::parse_rational(t));
    out.push_back(row);
  }
  return Matrix<Rational>::from_rows(out);
}

inline Matrix<Rational> example3() {
  return parse_rows({{"5.6", "1.2", "0.7", "0.5"},
                     {"6.6", "6.2", "4.1", "8.1"},
                     {"4.4", "4.4", "3.5", "8"},
                     {"1", "3.8", "3.4", "9"}});
}

inline const char* example3_json() {
  return R"({"rows": [["5.6", "1.2", "0.7", "0.5"],
                      ["6.6", "6.2", "4.1", "8.1"],
                      ["4.4", "4.4", "3.5", "8"],
                      ["1", "3.8", "3.4", "9"]]})";
}

// Printed second and third compounds of example3().
inline Matrix<Rational> example3_compound2() {
  return parse_rows({{"26.8", "18.34", "42.06", "0.58", "6.62", "3.62"},
                     {"19.36", "16.52", "42.6", "1.12", "7.4", "3.85"},
                     {"20.08", "18.34", "49.9", "1.42", "8.9", "4.6"},
                     {"1.76", "5.06", "17.16", "3.66", "13.96", "4.45"},
                     {"18.88", "18.34", "51.3", "5.5", "25.02", "9.36"},
                     {"12.32", "11.46", "31.6", "1.66", "9.2", "4.3"}});
}

inline Matrix<Rational> example3_compound3() {
  return parse_rows({{"15.656", "58.464", "15.438", "-2.602"},
                     {"22.008", "87.992", "25.676", "-3.532"},
                     {"4.168", "19.76", "7.69", "-0.45"},
                     {"-9.584", "-35.408", "-8.354", "2.386"}});
}

}  // namespace fixtures
