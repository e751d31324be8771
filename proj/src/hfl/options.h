#ifndef HFL_OPTIONS_H_
#define HFL_OPTIONS_H_

namespace hfl {

inline constexpr int kDefaultEnumerationCap = 20;
inline constexpr int kDefaultUlaCap = 14;
// Subset scans keep one bit per subset; 2^28 bits is 32 MiB.
inline constexpr int kMaxEnumerationCap = 28;

struct ComputeOptions {
  // Largest n for exhaustive separator enumeration.
  int enumeration_cap = kDefaultEnumerationCap;
  // Largest n for the exact induced-subgraph ULA scan.
  int ula_cap = kDefaultUlaCap;
  // Worker threads for subset scans. Results do not depend on this value.
  int workers = 1;
};

}  // namespace hfl

#endif  // HFL_OPTIONS_H_
