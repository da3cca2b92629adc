#pragma once

#include <string>
#include <vector>

#include "nervekit/category.hpp"

namespace nervekit {

/// A generated input. `fibrant` records whether every hom is a Kan complex.
struct Example {
  std::string name;
  RelativeSimplicialCategory rel;
  bool fibrant = false;
};

/// Builds a named example with homs truncated at dim.
///
/// Names:
///   bg:zN, bg:z2xz2          one object, hom the nerve of an abelian group
///   discrete:poset01|poset012|z2
///   poset:<n>:<a<b,...>      discrete category of a poset
///   two-object-interval      free-living arrow, hom a point
///   hom-simplex:<k>          two objects with hom(0,1) = Delta^k
///   bfrak:<n>, cfrak:<n>
/// An optional suffix /ids, /isos or /whole picks the subcategory.
/// Throws std::invalid_argument for unknown names.
Example build_example(const std::string& descriptor, int dim);

/// Names accepted by build_example, for listings.
std::vector<std::string> example_names();

/// One-object simplicial category on the nerve of an abelian group given by
/// its multiplication table.
SimplicialCategory group_category(const std::vector<std::vector<CellId>>& mult, int dim, std::string name);

}  // namespace nervekit
