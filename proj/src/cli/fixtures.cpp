#include <stdexcept>

#include "lnd/cli.hpp"

namespace lnd::cli {

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"tparam", "two-variable quasi-nice derivation over Q[t] with plinth ideal (1 - t)A",
       "# DX1 = t(1 - t), DX2 = -tX1 + 1 - t\n"
       "param t\n"
       "var X1 X2\n"
       "D X1 = t*(1 - t)\n"
       "D X2 = -t*X1 + 1 - t\n"
       "factor t mult 1\n"
       "factor 1 - t mult 1\n",
       "image-ideal", 2, {"t - 1"}, "2varquasi_PID", 0},
      {"wink1", "three-variable nice derivation over Q[a,b] with non-principal plinth ideal",
       "param a b\n"
       "var X Y Z\n"
       "D X = a\n"
       "D Y = b\n"
       "D Z = b*X - a*Y\n"
       "bounds 2 2\n",
       "verify", 1, {"b", "a", "a*Y - b*X"}, "", 0},
      {"inice", "two-variable nice derivation DX = a, DY = b over Q[a,b]",
       "param a b\n"
       "var X Y\n"
       "D X = a\n"
       "D Y = b\n",
       "image-ideal", 2, {"b^2", "a*b", "a^2"}, "inice", 0},
      {"pid3", "three-variable nice derivation over Q[t] with a linear kernel coordinate",
       "param t\n"
       "var X Y Z\n"
       "D X = 0\n"
       "D Y = t\n"
       "D Z = X\n",
       "image-ideal", 2, {"X^2", "t*X", "t^2"}, "pid-3var", 0},
      {"pid3b", "three-variable nice derivation over Q[t] whose kernel coordinate is X + Y",
       "param t\n"
       "var X Y Z\n"
       "D X = t\n"
       "D Y = -t\n"
       "D Z = X + Y\n",
       "image-ideal", 2, {"X^2 + 2*X*Y + Y^2", "t*X + t*Y", "t^2"}, "pid-3var", 0},
      {"slice1", "partial derivative DX = 1", "var X\nD X = 1\n", "image-ideal", 3, {"1"}, "slice", 0},
      {"fpf", "fixed point free nice derivation DX = t, DY = 1 - t",
       "param t\n"
       "var X Y\n"
       "D X = t\n"
       "D Y = 1 - t\n",
       "image-ideal", 2, {"1"}, "slice", 0},
      {"niceable", "quasi-nice derivation that becomes nice after X2 -> X2 + X1^2/2",
       "param t\n"
       "var X1 X2\n"
       "D X1 = t\n"
       "D X2 = -1 - t*X1\n",
       "image-ideal", 2, {"1"}, "slice", 0},
      {"nonlnd", "DX = X is not locally nilpotent", "var X\nD X = X\n", "check", 1, {}, "", 2},
  };
  return all;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw std::out_of_range("unknown fixture '" + std::string(name) + "'");
}

}  // namespace lnd::cli
