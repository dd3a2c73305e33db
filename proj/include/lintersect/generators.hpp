#ifndef LINTERSECT_GENERATORS_HPP
#define LINTERSECT_GENERATORS_HPP

#include "lintersect/family.hpp"

namespace lintersect {

/// A sharp family for the ordered bound together with the spec it is intersecting for.
struct GeneratedFamily {
  SetFamily family;
  IntersectionSpec spec;
};

/// {A ⊆ [n] : n ∉ A, |A| <= s} with L = {0..s-1}, in canonical ordered form.
/// Requires n >= 1 and 1 <= s <= n-1; throws std::invalid_argument otherwise.
GeneratedFamily gen_sharp_no_apex(int n, int s);

/// {G : n ∈ G, |G| <= s} ∪ {T : n ∉ T, |T| = s} with L = {0..s-1}, in canonical
/// ordered form; the first Sum_{i<s} C(n-1, i) members contain the apex.
GeneratedFamily gen_sharp_mixed(int n, int s);

}  // namespace lintersect

#endif  // LINTERSECT_GENERATORS_HPP
