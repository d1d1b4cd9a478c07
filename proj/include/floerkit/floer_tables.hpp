#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace floerkit {

enum class Space { V, U, W2, AHI };

Space parse_space(const std::string& s);
std::string to_string(Space s);

struct SpectrumEntry {
  int eigenvalue = 0;
  std::optional<long> multiplicity;  // nullopt: not determined
};

struct SpectrumReport {
  Space space = Space::U;
  int g = 0;
  int n = 0;
  std::vector<SpectrumEntry> entries;  // ascending
  std::string paper_ref;
};

// Eigenvalues of the surface operator on V, U, W2: -(2g+n-2)..(2g+n-2) step 2,
// extremes with multiplicity 1. For AHI: f-gradings -n..n of AHI(K_n), g = 0.
SpectrumReport spectrum(Space space, int g, int n);

// Graded dimensions of AHI(K_1)^{tensor n}: (f, C(n, (n+f)/2)) for f = -n..n step 2.
std::vector<std::pair<int, std::uint64_t>> ahi_product(int n);

struct MeridionalSurface {
  int g = 0;
  int n = 0;
};

struct ThurstonReport {
  int bound = 0;
  std::size_t minimizer = 0;  // index of the first surface attaining the bound
  std::string statement;
  std::string paper_ref;
};

ThurstonReport thurston_bound(std::span<const MeridionalSurface> surfaces);

int dim_r(int g, int n);
long mb_bound(int g, int n, long betti_total);

struct CitedValue {
  std::string name;
  long value = 0;
  std::string paper_ref;
};

// Second Betti number of R_{g,n+2}, quoted rather than computed.
CitedValue b2_r(int g, int n);

}  // namespace floerkit
