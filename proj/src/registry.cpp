#include "hgl/scenario.hpp"

namespace hgl {

namespace {

// Ext^2(R/I^n, R) over k[U,V,W]/(V^2-UW): the period-2 counterexample
const char* kVeroneseExt2 = R"(# Ext^2(R/I^n, R) over the squares subring k[X^2, XY, Y^2]
char 32003
ring R vars U V W
rel V^2 - U*W
ideal I = U, V
functor ext i=2 first=quotient(I^n) second=R
range 2 12
fit max_period 6
audit dim spread
oracle on
)";

// the same lengths through the saturation route H^0_m(R/I^n)
const char* kVeroneseDuality = R"(# H^0_m(R/I^n) over the squares subring: the local-duality route
char 32003
ring R vars U V W
rel V^2 - U*W
ideal I = U, V
functor h0m i=0 first=quotient(I^n)
range 2 12
fit max_period 6
audit dim spread
oracle on
)";

// Tor_1(R/m^n, k) over k[x,y]: lengths n+1, degree = spread(m) - 1
const char* kKodiyalamTor = R"(# Tor_1(R/m^n, R/m) over k[x,y]
char 32003
ring R vars x y
ideal m = x, y
module kk = coker 1x2 [ x, y ]
functor tor i=1 first=quotient(m^n) second=kk
range 1 8
fit max_period 6
audit dim spread
)";

// R = k[t,X]/(t^2), I = (X), M = N = R/(t): lengths n, dim-branch equality
const char* kPlacekeeperTor = R"(# Tor_1(N/I^nN, M) over k[t,X]/(t^2) with M = N = R/(t)
char 32003
ring R vars t X
rel t^2
ideal I = X
module M = coker 1x1 [ t ]
functor tor i=1 first=quotient(I^n,M) second=M
range 1 8
fit max_period 6
audit dim spread
)";

// I = m in the squares subring: Ext^2(R/m^n, R) grows with degree exactly 2
const char* kCmDegree = R"(# Ext^2(R/m^n, R) over the squares subring, m the maximal ideal
char 32003
ring R vars U V W
rel V^2 - U*W
ideal m = U, V, W
functor ext i=2 first=quotient(m^n) second=R
range 1 8
fit max_period 6
audit dim spread
)";

// minimal generator counts of Ext^2(R/I^n, R): Top = Tor_0(k, -)
const char* kTopSoc = R"(# Top of Ext^2(R/I^n, R) over the squares subring
char 32003
ring R vars U V W
rel V^2 - U*W
ideal I = U, V
module kk = coker 1x3 [ U, V, W ]
functor ext i=2 first=quotient(I^n) second=R
compose tor j=0 with=kk
range 2 12
fit max_period 6
)";

}  // namespace

const std::vector<std::string>& builtin_scenario_names() {
  static const std::vector<std::string> names = {
      "veronese-ext2",   "veronese-duality", "kodiyalam-tor", "placekeeper-tor",
      "cm-degree",       "artin-rees-probe", "top-soc"};
  return names;
}

std::optional<std::string> builtin_scenario_text(const std::string& name) {
  if (name == "veronese-ext2") return std::string(kVeroneseExt2);
  if (name == "veronese-duality") return std::string(kVeroneseDuality);
  if (name == "kodiyalam-tor") return std::string(kKodiyalamTor);
  if (name == "placekeeper-tor") return std::string(kPlacekeeperTor);
  if (name == "cm-degree") return std::string(kCmDegree);
  if (name == "top-soc") return std::string(kTopSoc);
  return std::nullopt;
}

}  // namespace hgl
