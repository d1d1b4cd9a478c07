#include "floerkit/floer_tables.hpp"

#include <algorithm>

#include "floerkit/errors.hpp"

namespace floerkit {

Space parse_space(const std::string& s) {
  if (s == "V") return Space::V;
  if (s == "U") return Space::U;
  if (s == "W2" || s == "W") return Space::W2;
  if (s == "AHI") return Space::AHI;
  throw precondition_error("unknown space '" + s + "' (expected V, U, W2 or AHI)");
}

std::string to_string(Space s) {
  switch (s) {
    case Space::V: return "V";
    case Space::U: return "U";
    case Space::W2: return "W2";
    default: return "AHI";
  }
}

std::vector<std::pair<int, std::uint64_t>> ahi_product(int n) {
  require(n >= 1, "ahi_product needs n >= 1");
  require(n <= 62, "ahi_product: n above 62 overflows the table");
  // repeated convolution with the n = 1 vector {-1: 1, 1: 1}
  std::vector<std::uint64_t> row{1};
  for (int k = 1; k <= n; ++k) {
    std::vector<std::uint64_t> next(row.size() + 1, 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i] += row[i];
      next[i + 1] += row[i];
    }
    row = std::move(next);
  }
  std::vector<std::pair<int, std::uint64_t>> out;
  for (std::size_t i = 0; i < row.size(); ++i) out.emplace_back(-n + 2 * static_cast<int>(i), row[i]);
  return out;
}

SpectrumReport spectrum(Space space, int g, int n) {
  SpectrumReport rep;
  rep.space = space;
  rep.g = g;
  rep.n = n;
  require(g >= 0 && n >= 0, "g and n must be nonnegative");
  if (space == Space::AHI) {
    require(g == 0, "AHI table is indexed by n only (use g = 0)");
    for (auto [f, d] : ahi_product(n)) rep.entries.push_back({f, static_cast<long>(d)});
    rep.paper_ref = "AHI(K_n) is the n-th tensor power of AHI(K_1), which is 1-dimensional in "
                    "f-degrees +-1";
    return rep;
  }
  switch (space) {
    case Space::V:
      require(!(g == 0 && n == 1), "(g,n)=(0,1) is excluded: V_{0,1} = V'_{0,1} = 0");
      require(n % 2 == 1, "V requires n odd");
      rep.paper_ref = "eigenvalues of mu(Sigma) on V_{g,n} form the step-2 progression up to "
                      "2g+n-2; top and bottom eigenspaces are 1-dimensional for n >= 3";
      break;
    case Space::U:
      require(n >= 2, "U requires n >= 2");
      rep.paper_ref = "eigenvalues of mu(Sigma) on U_{g,n} are {-(2g+n-2),...,2g+n-2}; the "
                      "extreme eigenspaces are 1-dimensional";
      break;
    default:
      require(g >= 1, "W2 requires g >= 1");
      rep.paper_ref = "eigenvalues of mu(Sigma) on W_{g,n} are {-(2g+n-2),...,2g+n-2}; the "
                      "extreme eigenspaces are 1-dimensional";
      break;
  }
  const int top = 2 * g + n - 2;
  const bool extremes = space != Space::V || n >= 3;
  for (int e = -top; e <= top; e += 2) {
    SpectrumEntry entry{e, std::nullopt};
    if (extremes && (e == top || e == -top)) entry.multiplicity = 1;
    rep.entries.push_back(entry);
  }
  return rep;
}

ThurstonReport thurston_bound(std::span<const MeridionalSurface> surfaces) {
  require(!surfaces.empty(), "thurston_bound needs at least one surface");
  ThurstonReport rep;
  rep.bound = -1;
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    const auto& s = surfaces[i];
    require(s.g >= 0 && s.n >= 0, "surface genus and intersection count must be nonnegative");
    int v = 2 * s.g + s.n;
    if (rep.bound < 0 || v < rep.bound) {
      rep.bound = v;
      rep.minimizer = i;
    }
  }
  rep.statement = "AHI(L,i) = 0 for |i| > " + std::to_string(rep.bound) + "; AHI(L,+-" +
                  std::to_string(rep.bound) + ") != 0 when the surface minimizes 2g+n";
  rep.paper_ref = "AHI(L,i) vanishes for |i| > 2g+n and is nonzero at +-(2g+n) for a minimizing "
                  "meridional surface";
  return rep;
}

int dim_r(int g, int n) {
  require(g >= 0 && n >= 1, "dim_r needs g >= 0 and n >= 1");
  return 6 * g + 2 * n - 6;
}

long mb_bound(int g, int n, long betti_total) {
  require(g >= 0 && n >= 1, "mb_bound needs g >= 0 and n >= 1");
  require(betti_total >= 0, "total Betti number must be nonnegative");
  return 2 * betti_total;
}

CitedValue b2_r(int g, int n) {
  require(g >= 0 && n >= 0, "g and n must be nonnegative");
  return {"b2(R_{" + std::to_string(g) + "," + std::to_string(n + 2) + "})", n + 3,
          "quoted data point b_2(R_{g,n+2}) = n+3, not computed"};
}

}  // namespace floerkit
