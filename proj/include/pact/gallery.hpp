#ifndef PACT_GALLERY_HPP
#define PACT_GALLERY_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "pact/sampled.hpp"
#include "pact/system.hpp"

namespace pact::gallery {

// Cyclic words of length L over k symbols under the cyclic shift, with the
// first-disagreement metric d(u,v) = 2^{-min |i|} over positions read in
// [-floor(L/2), ceil(L/2)). A global action (every domain is everything).
FinitePartialSystem cyclic_shift_model(int k, int L, int window, int carrier_cap = 4096);

// The shift model restricted to the words starting with `pattern`.
FinitePartialSystem cylinder_restriction(int k, int L, int window, const std::string& pattern,
                                         int carrier_cap = 4096);

// Rotation on `len` points restricted to Y, with the discrete metric.
FinitePartialSystem cycle_restriction(int len, const std::vector<int>& Y, int window);

// f: 0 <-> 1, 2 fixed, restricted to {0, 2}.
FinitePartialSystem two_cycle_fix(int window);

// Translation on a long cycle restricted to a single point, sized so that
// X_n is empty for every stored n != 0.
FinitePartialSystem no_return_system(int size, int window);

// The planar two-branch horseshoe. Samples are the 2^depth periodic itinerary
// anchors of the invariant set plus a coarse grid over the two strips.
SampledPartialSystem horseshoe(int depth, int window, int grid_steps = 16);

// Periodic anchor of a forward itinerary (fixed point of the branch
// composite); independent of the sampling machinery.
Vec2 horseshoe_periodic_point(const std::vector<int>& itinerary);

// Forward strip itinerary of p (0 = lower strip, 1 = upper) until it leaves.
std::vector<int> horseshoe_itinerary(Vec2 p, int depth);

using GallerySystem = std::variant<FinitePartialSystem, SampledPartialSystem>;

// Builds a system from a selector like "cyclic-shift:k=2,L=10,window=8".
GallerySystem build(const std::string& selector);

struct CatalogEntry {
    std::string name;
    std::string params;
    std::string about;
};
std::vector<CatalogEntry> catalog();

} // namespace pact::gallery

#endif
