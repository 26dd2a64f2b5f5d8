#include "theta/published.hpp"

#include <stdexcept>

namespace theta {

const std::vector<PublishedKnot>& published_knots() {
  static const std::vector<PublishedKnot> table = {
      {"3_1", "(q^(-2) + q^2 - L)*L"},
      {"3_1*", "(-q^2 + L + q^4*L)*(q^2*L^2)^(-1)"},
      {"6_2*",
       "-(L + q^8*L + q^4*(1 + 2*L) - q^2*(1 + L + L^2) - q^6*(1 + L + L^2))*(q^4*L^2)^(-1)"},
      {"5_2*", "(L + L^2 + q^4*L*(1 + L) - q^2*(1 + L + L^2))*(q^2*L^3)^(-1)"},
      {"8_20", "(L + q^8*L + q^4*L*(2 + L) - q^2*(1 + L^2) - q^6*(1 + L^2))*(q^4*L^2)^(-1)"},
  };
  return table;
}

const std::vector<PublishedTheta>& published_thetas() {
  static const std::vector<PublishedTheta> table = {
      {"L11n358{0,1}",
       "(E^2*L^4*(q-1)^2*q^6*(q+1)^2)^(-1) * (E*L + E*L*q^4 - 2*E*L*q^2 + L*q^2 - q^2)"
       " * (E*L + E*L*q^12 - E*L^2*q^10 - 2*E*L*q^10 - E*q^10 + 3*E*L^2*q^8 + 4*E*L*q^8"
       " + 2*E*q^8 - 4*E*L^2*q^6 - 6*E*L*q^6 - 2*E*q^6 + 3*E*L^2*q^4 + 4*E*L*q^4 + 2*E*q^4"
       " - E*L^2*q^2 - 2*E*L*q^2 - E*q^2 + L*q^6 - q^6)",
       ""},
      {"L11n418{0,0}",
       "(E^2*L^4*q^6*(q^2-1)^2)^(-1) * ( E^2*(q^2-1)^4*(L^2 + L^2*q^8 + L*(-L^2+L-2)*q^6"
       " + (4*L^2-L+1)*q^4 + L*(-L^2+L-2)*q^2) + E*(q^2-1)^2*q^4*(2*(L-1)*L + 2*(L-1)*L*q^4"
       " - (L^3-3*L^2+4*L-2)*q^2) + (L-1)^2*q^8 )",
       ""},
      {"L11a467{0,1}",
       "-(E^2*L^4*(q^2-1)^5)^(-1) * (q^(-2)-1)^3 * ( E^2*L*(q^2-1)^4*(L*(L+2) + L*(L+2)*q^8"
       " - (L^3+3*L^2+2*L+2)*q^6 + (L^3+4*L^2+6*L+1)*q^4 - (L^3+3*L^2+2*L+2)*q^2)"
       " + E*(L-1)*(q^2-1)^2*q^2*(L + L*q^8 - (L^2+1)*q^6 + L*(L+4)*q^4 - (L^2+1)*q^2)"
       " + (L-1)^2*q^8 )",
       ""},
      {"L11a527{0,0}",
       "-(E^2*L^4*(q^2-1)^5)^(-1) * (q^(-2)-1)^3 * ( E^2*(q^2-1)^4*(L^2*(L+2) + L^2*(L+2)*q^8"
       " - L*(L^3+3*L^2+L+3)*q^6 + (L^4+3*L^3+7*L^2+1)*q^4 - L*(L^3+3*L^2+L+3)*q^2)"
       " + E*(L-1)*(q^2-1)^2*q^4*(2*L + 2*L*q^4 - (L^2-2*L+2)*q^2) + (L-1)^2*q^8 )",
       "missing operator before the q^2 coefficient read as '-'"},
      {"L11n325{1,1}",
       "( L^(-3)*E^2*(q^2-1)^4*(q^2-L)*(L*q^2-1)*(q^4-(L+1)*q^2+1) - L^(-3)*( E*(L-1)*(q^2-1)^2"
       "*q^2*(L + L*q^8 - (L^2+1)*q^6 - (L-2)*L*q^4 - (L^2+1)*q^2) ) + (L^(-1)-1)^2*q^8 )"
       " * (E^2*(q^(-2)-1)^2*q^10)^(-1)",
       ""},
      {"L11n424{0,0}",
       "(E^2*(q^(-2)-1)^2*q^10)^(-1) * ( L^(-3)*E^2*(q^2-1)^4*(q^2-L)*(q^4-2*L*q^2+1)*(L*q^2-1)"
       " - L^(-3)*E*(L-1)*(q^2-1)^2*q^4*(2*L + 2*L*q^4 - (3*L^2+2)*q^2) + (L^(-1)-1)^2*q^8 )",
       ""},
      {"L10n79{1,1}",
       "(E^2*L^2*(q^(-2)-1)^2*q^10)^(-1) * ( -L^(-2)*E^2*(q^2-1)^4*(q^4+1)*(q^2-L)*(L*q^2-1)"
       " + L^(-2)*E*(L-1)*(q^2-1)^2*(q^4+q^2+1)*q^2*(L + L*q^4 - q^2) + (L^(-1)-1)^2*q^8 )",
       ""},
      {"L10n95{1,0}",
       "(E^2*L^2*(q^(-2)-1)^2*q^10)^(-1) * ( -L^(-2)*E^2*(q^2-1)^4*(L + L*q^8"
       " + (-2*L^2+L-1)*q^6 - (L^2-4*L+1)*q^4 + (-2*L^2+L-1)*q^2)"
       " + L^(-2)*E*(L-1)*(q^2-1)^2*q^4*(2*L + 2*L*q^4 + (2*L-3)*q^2) + (L^(-1)-1)^2*q^8 )",
       "unbalanced '(... - L^-2)' read as the factor -L^-2 in front of the E^2 term"},
      {"L11a404{1,1}",
       "(E^2*q^8*(q^2-1)^2)^(-1) * ( -E^2*(q^2-1)^4*(q^4-L*q^2+1)*(L + L*q^8 - (L^2+1)*q^6"
       " + L*(L+4)*q^4 - (L^2+1)*q^2) + E*(L-1)*(q^2-1)^2*q^4*(L + L*q^8 - (L^2+3)*q^6"
       " + (5*L+1)*q^4 - (L^2+3)*q^2) + (L-1)^2*q^8*(q^4-L*q^2+1) )",
       ""},
      {"L11a428{0,1}",
       "(E^2*q^8*(q^2-1)^2)^(-1) * ( -E^2*(q^2-1)^4*(q^4-L*q^2+1)*(L + L*q^8 - (L^2+1)*q^6"
       " + (4*L+1)*q^4 - (L^2+1)*q^2) - E*(L-1)*(q^2-1)^2*q^4*(q^8 + (1-3*L)*q^6"
       " + (L*(2*L-1)+1)*q^4 + (1-3*L)*q^2 + 1) + (L-1)^2*q^8*(q^4-L*q^2+1) )",
       ""},
      {"L10n76{1,1}",
       "(E^2*L^4*(q^(-2)-1)^2*q^8)^(-1) * ( -E^2*(L+1)*(q^2-1)^4*(q^2-L)*(L*q^2-1)"
       " + E*(L-1)*(q^2-1)^2*q^2*(L*(L+1) + L*(L+1)*q^4 - q^2) + (L-1)^2*q^6 )",
       ""},
      {"L11n425{1,0}",
       "(E^2*L^4*(q^(-2)-1)^2*q^8)^(-1) * ( -E^2*(L+1)*(q^2-1)^4*(L + L*q^4"
       " + (-2*L^2+L-1)*q^2) + E*(2*L^3-3*L+1)*(q^2-1)^2*q^4 + (L-1)^2*q^6 )",
       ""},
  };
  return table;
}

const PublishedTheta& published_theta(const std::string& name) {
  for (const auto& t : published_thetas())
    if (t.name == name) return t;
  throw std::out_of_range("no tabulated Theta value for " + name);
}

const std::vector<PublishedDifference>& published_differences() {
  static const std::vector<PublishedDifference> table = {
      {"L11n358{0,1}", "L11n418{0,0}",
       "(E-1)*(L-1)*(q-1)^2*(q+1)^2*(q^2-L)*(L*q^2-1)*(E*L^4*q^4)^(-1)"},
      {"L11a467{0,1}", "L11a527{0,0}",
       "(E-1)*(L-1)*(q-1)^2*(q+1)^2*(q^2-L)*(L*q^2-1)*(E*L^4*q^4)^(-1)"},
      {"L11n325{1,1}", "L11n424{0,0}",
       "-(E-1)*(L-1)*(q-1)^2*(q+1)^2*(q^2-L)*(L*q^2-1)*(E*L^3*q^4)^(-1)"},
      {"L10n79{1,1}", "L10n95{1,0}",
       "(E-1)*(L-1)*(q-1)^2*(q+1)^2*(L + L*q^4 + L*q^2 - q^2)*(E*L^4*q^4)^(-1)"},
      {"L11a404{1,1}", "L11a428{0,1}",
       "(E-1)*(L-1)*(L+1)*(q-1)^2*(q+1)^2*(q^4 - L*q^2 + 1)*(E*q^4)^(-1)"},
      {"L10n76{1,1}", "L11n425{1,0}", "(E-1)*(L-1)*(L+1)*(q-1)^2*(q+1)^2*(E*L^3*q^2)^(-1)"},
  };
  return table;
}

const std::vector<PublishedKnot>& external_homflypt() {
  static const std::vector<PublishedKnot> table = {
      {"unknot", "1"},
      {"4_1", "L^(-1) + L + 1 - q^2 - q^(-2)"},
      {"hopf", "(s - s^3)*d^(-1) + d*s"},
      {"solomon", "(s^3 - s^5)*d^(-1) + d*s^3 + d*s^3*(q^2 + q^(-2) - L)"},
  };
  return table;
}

}  // namespace theta
