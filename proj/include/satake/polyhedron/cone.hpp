#pragma once

#include "satake/polyhedron/inequalities.hpp"

namespace satake {

struct ConeGeometry {
  std::vector<IVec> extreme_rays;          // primitive, sorted
  std::vector<size_t> facet_rows;          // one row index per facet
  size_t facet_count = 0;
  bool minimal = false;                    // every row is a distinct facet
};

// Double description for a pointed cone {t : A t >= 0}.
ConeGeometry cone_geometry(const InequalitySystem& sys);

IVec primitive(const RVec& v);

}  // namespace satake
