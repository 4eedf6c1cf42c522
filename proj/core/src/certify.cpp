#include "petalgrid/conjugacy.hpp"
#include "petalgrid/invariants.hpp"

namespace petalgrid {

TorusPetalReport verify_torus_petal(int n, int s, Pipeline pipeline, int max_crossings) {
  check_torus_pair(n, s);
  TorusPetalReport r;
  r.n = n;
  r.s = s;
  r.petal = synthesize(n, s);
  r.length = r.petal.length();
  r.bound = petal_bound(n, s);

  const GridDiagram grid = build_petal_grid(r.petal);
  GridValidation check = validate_petal_grid(grid);
  r.grid_valid = check.valid;
  r.grid_violations = std::move(check.violations);
  r.closure_braid = torus_band_braid(n, s);
  r.expected = torus_alexander(n, s);

  bool ok = r.grid_valid && r.length == r.bound &&
            classify(r.petal) == PetalClass::strongly_braided;
  if (pipeline != Pipeline::burau && r.grid_valid) {
    const PlanarDiagram pd = to_planar_diagram(grid);
    r.crossings = static_cast<int>(pd.crossings.size());
    r.writhe = pd.writhe();
    r.from_pd = alexander_from_pd(pd, max_crossings);
    ok = ok && equal_up_to_units(*r.from_pd, r.expected);
  }
  if (pipeline != Pipeline::pd) {
    r.from_closure = alexander_from_closure(r.closure_braid);
    ok = ok && equal_up_to_units(*r.from_closure, r.expected);
  }
  if (pipeline != Pipeline::burau && !r.from_pd) ok = false;
  r.verdict = ok;
  return r;
}

}  // namespace petalgrid
