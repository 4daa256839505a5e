#include "naive_oracle.hpp"

#include <vector>

namespace isoforge::testoracle {

std::optional<MorphismWitness> naiveSearch(const Structure& a,
                                           const Structure& b, MorphKind k) {
  const std::vector<Label> va(a.domain.begin(), a.domain.end());
  const std::vector<Label> vb(b.domain.begin(), b.domain.end());
  if (va.empty()) {
    MorphismWitness w;
    w.kind = k;
    if (verify(a, b, w)) return w;
    return std::nullopt;
  }
  if (vb.empty()) return std::nullopt;

  std::vector<std::size_t> odo(va.size(), 0);
  while (true) {
    MorphismWitness w;
    w.kind = k;
    for (std::size_t i = 0; i < va.size(); ++i) w.map[va[i]] = vb[odo[i]];
    if (verify(a, b, w)) return w;
    std::size_t i = va.size();
    while (i > 0) {
      --i;
      if (++odo[i] < vb.size()) break;
      odo[i] = 0;
      if (i == 0) return std::nullopt;
    }
  }
}

}  // namespace isoforge::testoracle
