#include "isoprod/presets.hpp"

#include <stdexcept>

namespace isoprod {

namespace {

Orbit orbit(const FinAbGroup& g, std::string label, std::vector<std::int64_t> stab) {
  return Orbit{std::move(label), group_reduce(g, std::move(stab)), 0};
}

ProductQuotientSurface make_z3_2() {
  FinAbGroup g({3, 3});
  CurveWithAction c("C", 4, g,
                    {orbit(g, "E1", {1, 0}), orbit(g, "E2", {0, 1}), orbit(g, "E3", {2, 0}),
                     orbit(g, "E4", {0, 2})},
                    0);
  CurveWithAction d("D", 4, g,
                    {orbit(g, "F1", {1, 1}), orbit(g, "F2", {1, 2}), orbit(g, "F3", {2, 2}),
                     orbit(g, "F4", {2, 1})},
                    0);
  return ProductQuotientSurface(std::move(c), std::move(d));
}

ProductQuotientSurface make_z5_2() {
  FinAbGroup g({5, 5});
  CurveWithAction c("C", 6, g,
                    {orbit(g, "E1", {1, 0}), orbit(g, "E2", {0, 1}), orbit(g, "E3", {4, 4})}, 0);
  CurveWithAction d("D", 6, g,
                    {orbit(g, "F1", {1, 2}), orbit(g, "F2", {3, 4}), orbit(g, "F3", {1, 4})}, 0);
  return ProductQuotientSurface(std::move(c), std::move(d));
}

ProductQuotientSurface make_z2_3() {
  FinAbGroup g({2, 2, 2});
  CurveWithAction c("C", 3, g,
                    {orbit(g, "E1", {1, 0, 0}), orbit(g, "E2", {0, 1, 0}), orbit(g, "E3", {1, 1, 0}),
                     orbit(g, "E4", {0, 0, 1}), orbit(g, "E5", {0, 0, 1})},
                    0);
  CurveWithAction d("D", 5, g,
                    {orbit(g, "F1", {1, 0, 1}), orbit(g, "F2", {1, 0, 1}), orbit(g, "F3", {0, 1, 1}),
                     orbit(g, "F4", {0, 1, 1}), orbit(g, "F5", {1, 1, 1}), orbit(g, "F6", {1, 1, 1})},
                    0);
  return ProductQuotientSurface(std::move(c), std::move(d));
}

ProductQuotientSurface make_z2_4() {
  FinAbGroup g({2, 2, 2, 2});
  CurveWithAction c("C", 5, g,
                    {orbit(g, "E1", {1, 0, 0, 0}), orbit(g, "E2", {0, 1, 0, 0}),
                     orbit(g, "E3", {0, 0, 1, 0}), orbit(g, "E4", {0, 0, 0, 1}),
                     orbit(g, "E5", {1, 1, 1, 1})},
                    0);
  CurveWithAction d("D", 5, g,
                    {orbit(g, "F1", {1, 1, 0, 0}), orbit(g, "F2", {0, 1, 1, 0}),
                     orbit(g, "F3", {0, 0, 1, 1}), orbit(g, "F4", {1, 1, 1, 0}),
                     orbit(g, "F5", {0, 1, 1, 1})},
                    0);
  return ProductQuotientSurface(std::move(c), std::move(d));
}

}  // namespace

std::vector<std::string> preset_labels() { return {"z2^3", "z2^4", "z3^2", "z5^2"}; }

ProductQuotientSurface make_preset(const std::string& label) {
  if (label == "z3^2") return make_z3_2();
  if (label == "z5^2") return make_z5_2();
  if (label == "z2^3") return make_z2_3();
  if (label == "z2^4") return make_z2_4();
  throw std::invalid_argument("unknown preset: " + label);
}

}  // namespace isoprod
