#pragma once

#include <string>
#include <vector>

#include "ktf/exactnum.hpp"

namespace ktf {

// The special parameter sets, each attached to one residue of n mod 4:
//   I0± = {±(3+4j) : 0 <= j <= n/4-1}      J0 = {1+4j : 0 <= j <= n/4-1}
//   I1  = {±4j : 0 <= j <= [n/4]}
//   I2± = {±(1+4j) : 0 <= j <= [n/4]}      J2 = {3+4j : 0 <= j <= [n/4]-1}
//   I3  = {±(2+4j) : 0 <= j <= [n/4]}
enum class ParamSet { I0plus, I0minus, J0, I1, I2plus, I2minus, J2, I3 };

std::string to_string(ParamSet p);
long mod4(long n);
// Residue of n mod 4 the set belongs to.
int residue_of(ParamSet p);
// Sorted increasing; empty when n is in the wrong residue class (or n < 0).
std::vector<long> enumerate(ParamSet p, long n);
bool in_set(ParamSet p, const Rational& s, long n);

}  // namespace ktf
