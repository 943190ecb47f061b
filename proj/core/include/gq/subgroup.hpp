#pragma once

#include <cstdint>
#include <vector>

namespace gq {

// Closure of a subset of a finite abelian group under addition, starting from {zero}.
// `member` must be sized to the group order. For each generator g not already in the
// subgroup H, the update is H <- union over j of (H + j*g); each union at least
// doubles H, so total work is O(|H_final| * sum ord(g)) with few doublings.
template <class AddFn>
void abelian_close(std::vector<uint8_t>& member, std::vector<uint32_t>& list, uint32_t zero,
                   AddFn&& add, const std::vector<uint32_t>& gens) {
  if (!member[zero]) {
    member[zero] = 1;
    list.push_back(zero);
  }
  for (uint32_t g : gens) {
    if (member[g]) continue;
    std::vector<uint32_t> base = list;  // snapshot of the current subgroup
    uint32_t c = g;
    while (!member[c]) {
      for (uint32_t e : base) {
        uint32_t x = add(e, c);
        if (!member[x]) {
          member[x] = 1;
          list.push_back(x);
        }
      }
      c = add(c, g);
    }
  }
}

}  // namespace gq
