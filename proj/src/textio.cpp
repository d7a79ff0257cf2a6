#include "dirosc/textio.hpp"

#include <cstdio>

namespace dirosc {

std::string float17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace dirosc
