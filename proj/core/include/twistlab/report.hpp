#pragma once

#include <string>

namespace twistlab {

struct NamedResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

}  // namespace twistlab
