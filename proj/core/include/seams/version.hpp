#pragma once

namespace seams {

inline constexpr const char* kVersion = "0.1.0";

// Processing-parameter tag baked into every results-store key. Bump any
// component when the corresponding algorithm changes so stale cache entries
// stop matching: colorspace conversion / distance formula / adjacency rule.
inline constexpr const char* kParamsVersion = "lab-d65-v1.cie76-v1.adj4-v1";

}  // namespace seams
