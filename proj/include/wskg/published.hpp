#pragma once
#include <cstddef>

namespace wskg {

// Published reference rows (mass number, quantum numbers, radius, depth,
// binding energy). Comparison-only data: never used as computation inputs.
struct PublishedRow {
  long long A = 0;
  int n = 0, l = 0;
  double R0 = 0;    // fm, as published (4 decimals)
  double V0 = 0;    // MeV, as published (2 decimals)
  double Eb = 0;    // MeV, as published
};

inline constexpr PublishedRow published_table[] = {
    {40, 0, 1, 4.3946, 45.70, -107.8777},
    {56, 0, 1, 4.9162, 47.78, -127.5238},
    {56, 0, 2, 4.9162, 47.78, -17.5985},
    {66, 0, 2, 5.1930, 49.08, -50.3359},
    {92, 0, 2, 5.8010, 52.46, -101.8967},
    {140, 0, 3, 6.6724, 58.70, -92.5327},
    {208, 0, 4, 7.6136, 67.54, -105.0865},
    {208, 0, 5, 7.6136, 67.54, -33.6014},
};
inline constexpr std::size_t published_table_size =
    sizeof(published_table) / sizeof(published_table[0]);

}  // namespace wskg
