#include "ktf/params.hpp"

#include <algorithm>

namespace ktf {

std::string to_string(ParamSet p) {
  switch (p) {
    case ParamSet::I0plus: return "I0plus";
    case ParamSet::I0minus: return "I0minus";
    case ParamSet::J0: return "J0";
    case ParamSet::I1: return "I1";
    case ParamSet::I2plus: return "I2plus";
    case ParamSet::I2minus: return "I2minus";
    case ParamSet::J2: return "J2";
    case ParamSet::I3: return "I3";
  }
  return "?";
}

long mod4(long n) { return ((n % 4) + 4) % 4; }

int residue_of(ParamSet p) {
  switch (p) {
    case ParamSet::I0plus:
    case ParamSet::I0minus:
    case ParamSet::J0: return 0;
    case ParamSet::I1: return 1;
    case ParamSet::I2plus:
    case ParamSet::I2minus:
    case ParamSet::J2: return 2;
    case ParamSet::I3: return 3;
  }
  return -1;
}

std::vector<long> enumerate(ParamSet p, long n) {
  std::vector<long> out;
  if (n < 0 || mod4(n) != residue_of(p)) return out;
  const long q = n / 4;
  switch (p) {
    case ParamSet::I0plus:
      for (long j = 0; j <= q - 1; ++j) out.push_back(3 + 4 * j);
      break;
    case ParamSet::I0minus:
      for (long j = 0; j <= q - 1; ++j) out.push_back(-(3 + 4 * j));
      break;
    case ParamSet::J0:
      for (long j = 0; j <= q - 1; ++j) out.push_back(1 + 4 * j);
      break;
    case ParamSet::I1:
      for (long j = 0; j <= q; ++j) {
        out.push_back(4 * j);
        if (j) out.push_back(-4 * j);
      }
      break;
    case ParamSet::I2plus:
      for (long j = 0; j <= q; ++j) out.push_back(1 + 4 * j);
      break;
    case ParamSet::I2minus:
      for (long j = 0; j <= q; ++j) out.push_back(-(1 + 4 * j));
      break;
    case ParamSet::J2:
      for (long j = 0; j <= q - 1; ++j) out.push_back(3 + 4 * j);
      break;
    case ParamSet::I3:
      for (long j = 0; j <= q; ++j) {
        out.push_back(2 + 4 * j);
        out.push_back(-(2 + 4 * j));
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_set(ParamSet p, const Rational& s, long n) {
  if (!is_integer(s)) return false;
  const auto v = enumerate(p, n);
  if (v.empty()) return false;
  if (s < v.front() || s > v.back()) return false;
  return std::binary_search(v.begin(), v.end(), to_long(s));
}

}  // namespace ktf
