#pragma once

#include <string>

#include "ccn/braid_actions.hpp"
#include "ccn/report.hpp"

namespace ccn {

// R R^-1 = 1, the Yang-Baxter equation, the braid relation and the Hecke relation of the braiding.
Report verify_qybe(int N);

// Reflection equations for J^sigma and its inverse, Hecke relations of J^sigma and alpha^-1 J~,
// and agreement of the two constructions of J~.
Report verify_reflection(const GlParams& gp);

// Double braiding form of the coideal generators against the L-matrix contraction form.
Report verify_coideal_forms(const GlParams& gp, int wslots);

// T0 identities at every invariant locus found from seeded random base points.
Report verify_T0_identities(const AffineRepConfig& cfg, unsigned first_seed, int seeds);

// Newgen relations and their Hecke constraints in the polynomial representation.
Report verify_newgen(int n, int d, int r, unsigned seed);

// "q=2,qs=3/2" -> parameter point
NumericPoint parse_point(const std::string& text);

}  // namespace ccn
