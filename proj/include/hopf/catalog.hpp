#pragma once

#include "hopf/hopfcore.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hopf {

/// Names accepted by build_catalog: "Atilde", "A", "Agen", "D", "B",
/// "Atilde-rfree".
const std::vector<std::string>& catalog_names();

/// Parameter presets "0,0" and "6,3".
Parameters preset_parameters(const FieldSpec& field, std::string_view name);

/// Degree bound used when a catalog entry needs completion.
inline constexpr int kCatalogCompletionDegree = 12;

/// Builds a catalog presentation over `field` at parameters `pq`.
///
/// Presentations in the generators a, b, F, s = x + q*a, t = y + p*b need a
/// primitive cube root of unity; "Atilde-rfree" (generators a, b, x, y) and
/// "B" work over any supported field.
HopfPresentation build_catalog(std::string_view name, const FieldSpec& field, const Parameters& pq);

/// Generator order and weights of the F-presentation: a, b, F, s, t.
MonomialOrder f_presentation_order();
/// Generator order and weights of the r-free presentation: a, b, x, y.
MonomialOrder rfree_order();

}  // namespace hopf
