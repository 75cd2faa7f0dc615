#pragma once

#include <doctest.h>

#include "ktf/verify.hpp"

namespace ktf::testgen {

inline void require_pass(const CheckResult& r) {
  std::string detail = r.name;
  for (const auto& c : r.counterexamples) detail += "\n  " + c;
  CHECK_MESSAGE(r.pass, detail);
  CHECK_MESSAGE(r.cases > 0, r.name);
}

}  // namespace ktf::testgen
