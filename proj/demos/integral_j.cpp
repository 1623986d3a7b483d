// Which integers are critical j-invariants of rational quartics?
//
// v is one exactly when v = (u+3)^3 (u+27) / u for a rational u. Scanning u of
// bounded height and keeping the integral values turns up only u = +-3^k,
// k <= 6. Each hit is re-derived from v alone through cj_witnesses.

#include <cstdlib>
#include <iostream>
#include <map>
#include <numeric>

#include "eqcrit/moduli.hpp"

using namespace eqcrit;

int main(int argc, char** argv) {
  const long num_bound = argc > 1 ? std::atol(argv[1]) : 1000;
  const long den_bound = argc > 2 ? std::atol(argv[2]) : 30;
  std::map<Rational, Rational> hits;  // u -> v
  for (long d = 1; d <= den_bound; ++d)
    for (long n = -num_bound; n <= num_bound; ++n) {
      if (n == 0 || std::gcd(n, d) != 1) continue;
      const Rational u(n, d);
      const auto v = pi3(ProjValue<Rational>(u));
      if (v.value().den() == 1) hits.emplace(u, v.value());
    }

  bool ok = true;
  for (const auto& [u, v] : hits) {
    Integer m = abs(u.num());
    int k = 0;
    while (m % 3 == 0) m /= 3, ++k;
    const bool power_of_3 = u.den() == 1 && m == 1 && k <= 6;
    bool found = false;
    for (const auto& w : cj_witnesses(ProjValue<Rational>(v))) found = found || w == u;
    ok = ok && power_of_3 && found;
    std::cout << "u = " << u << "\tj_CV = " << v << (power_of_3 ? "" : "\t<- not +-3^k") << "\n";
  }
  std::cout << hits.size() << " integral values for |num u| <= " << num_bound << ", den u <= " << den_bound << "; "
            << (ok ? "all at u = +-3^k" : "unexpected u found") << "\n";
  return ok ? 0 : 1;
}
