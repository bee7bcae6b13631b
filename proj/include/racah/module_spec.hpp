#pragma once

#include "racah/rat.hpp"

#include <stdexcept>
#include <string>

namespace racah {

enum class Family { R, E, O };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::R: return "R";
    case Family::E: return "E";
    case Family::O: return "O";
  }
  return "?";
}

// Klein-four twist label; (1,1) is the identity.
struct Twist {
  int s1 = 1;
  int s2 = 1;
  bool operator==(const Twist&) const = default;
  bool is_identity() const { return s1 == 1 && s2 == 1; }
  std::string str() const {
    return "(" + std::to_string(s1) + "," + std::to_string(s2) + ")";
  }
};

// Names one catalog module: R_d(a,b,c), E_d(a,b,c)^eps or O_d(a,b,c).
struct ModuleSpec {
  Family family = Family::R;
  int d = 0;
  Rat a, b, c;
  Twist twist;  // meaningful for family E only

  ModuleSpec() = default;
  ModuleSpec(Family f, int d_, Rat a_, Rat b_, Rat c_, Twist t = {})
      : family(f), d(d_), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), twist(t) {
    if (d < 0) throw std::invalid_argument("ModuleSpec: d must be nonnegative");
    if (f == Family::E && d % 2 == 0)
      throw std::invalid_argument("ModuleSpec: family E requires odd d");
    if (f == Family::O && d % 2 != 0)
      throw std::invalid_argument("ModuleSpec: family O requires even d");
  }

  Rat half_d() const { return rat(d, 2); }
  std::string str() const {
    std::string s = family_name(family) + "_" + std::to_string(d) + "(" +
                    to_string(a) + "," + to_string(b) + "," + to_string(c) + ")";
    if (family == Family::E && !twist.is_identity()) s += "^" + twist.str();
    return s;
  }
};

}  // namespace racah
