#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kdefect/report.hpp"
#include "kdefect/universe.hpp"

namespace kdefect {

struct CheckOptions {
  bool long_mode = false;  // extends the f32 sweep to n = 11, 12
};

/// Generic exhaustive sweep: every triangle-free graph with n_lo <= n <=
/// n_hi must be (m,k)-colorable. Witness partitions are validated for every
/// graph and sampled into the report.
VerificationReport verify_colorable_sweep(std::string check_id, int n_lo, int n_hi, int m, int k,
                                          UniverseStore& store);

/// chi_1 <= 2 for every triangle-free graph on at most 8 vertices.
VerificationReport verify_small_orders_colorable(UniverseStore& store);

/// Exactly 4 triangle-free order-9 classes with chi_1 = 3, matching the
/// catalog G1..G4 by canonical key; all four (3,1)-critical and exactly
/// {G1, G4} (3,1)-edge-critical.
VerificationReport verify_order9_classification(UniverseStore& store);

/// Every triangle-free order-10 graph with chi_1 = 3 is isomorphic to G5
/// or has a vertex u* with G - u* isomorphic to some G_i; additionally no
/// triangle-free order-10 graph has chi_1 >= 4.
VerificationReport verify_order10_characterization(UniverseStore& store);

/// The (3,1)-critical triangle-free order-10 set is exactly {G5} and the
/// (3,1)-edge-critical set is exactly {G5, G1uK1, G4uK1}; edge-critical
/// members without isolated vertices are critical.
VerificationReport verify_critical_and_edge_critical_order10(UniverseStore& store);

/// Structural lemma checks over the triangle-free order-10 universe,
/// lemma_id in 4..13. Hypotheses quantify over all maximum-degree vertices
/// u (and all max-degree vertices z of H where applicable).
VerificationReport verify_structural_lemma(int lemma_id, UniverseStore& store);

/// chi_k(g) <= 1 + floor(max_degree/(k+1)) for every triangle-free graph
/// with n <= n_max and k <= k_max; records where the bound is tight.
VerificationReport verify_lovasz_bound(int n_max, int k_max, UniverseStore& store);

/// Every triangle-free graph with n <= 10 (n <= 12 in long mode) is
/// (2,2)-colorable.
VerificationReport verify_f32_lower_bound(UniverseStore& store, const CheckOptions& opts);

/// Check ids in canonical execution order; gated checks are included only
/// when include_gated is set (they are still run at default scope).
std::vector<std::string> all_check_ids();

/// Runs one check by id ("catalog", "small-orders", "order9", "order10",
/// "critical10", "lemma4".."lemma13", "lovasz", "f32"). Unknown ids throw
/// std::invalid_argument.
VerificationReport run_check(std::string_view check_id, UniverseStore& store,
                             const CheckOptions& opts = {});

}  // namespace kdefect
