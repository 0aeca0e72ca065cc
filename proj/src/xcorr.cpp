#include "costas/xcorr.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

#include "costas/parallel.hpp"

namespace costas {
namespace {

void require_same_length(std::span<const std::int32_t> f1, std::span<const std::int32_t> f2) {
  if (f1.size() != f2.size())
    throw std::invalid_argument("sequences have different lengths " + std::to_string(f1.size()) + " and " +
                                std::to_string(f2.size()));
  if (f1.empty()) throw std::invalid_argument("empty sequence");
}

// Running maximum over a block of scanned pairs.
struct Accum {
  std::uint32_t best = 0;
  std::uint64_t count = 0;
  std::vector<Witness> witnesses;
  std::uint64_t pairs = 0;
};

// Scratch row of 2n-1 counters indexed by v + n - 1; all zero between calls.
struct Scratch {
  std::vector<std::uint16_t> row;
  std::vector<int> hits;
};

template <bool Nonneg>
void scan_pair(const std::int32_t* a, const std::int32_t* b, int n, std::size_t ia, std::size_t ib,
               std::uint64_t weight, std::size_t cap, Accum& acc, Scratch& s) {
  std::uint16_t* row = s.row.data();
  const int off = n - 1;
  for (int u = Nonneg ? 0 : 1 - n; u <= n - 1; ++u) {
    const int lo = std::max(0, -u);
    const int hi = std::min(n, n - u);
    const std::int32_t* bu = b + u;
    std::uint32_t rmax = 0;
    for (int i = lo; i < hi; ++i) {
      const int d = bu[i] - a[i] + off;
      const std::uint32_t c = ++row[d];
      if (!Nonneg || d >= off) rmax = c > rmax ? c : rmax;
    }
    if (rmax > acc.best) {
      acc.best = rmax;
      acc.count = 0;
      acc.witnesses.clear();
    }
    if (rmax == acc.best) {
      s.hits.clear();
      for (int i = lo; i < hi; ++i) {
        const int d = bu[i] - a[i] + off;
        if (row[d] == rmax && (!Nonneg || d >= off)) s.hits.push_back(d);
        row[d] = 0;
      }
      acc.count += s.hits.size() * weight;
      if (acc.witnesses.size() < cap) {
        std::sort(s.hits.begin(), s.hits.end());
        for (int d : s.hits) {
          if (acc.witnesses.size() >= cap) break;
          acc.witnesses.push_back({ia, ib, u, d - off});
        }
      }
    } else {
      for (int i = lo; i < hi; ++i) row[bu[i] - a[i] + off] = 0;
    }
  }
}

void check_scan_size(int n) {
  if (n >= 65535) throw std::invalid_argument("sequence length too large for exhaustive scan");
}

std::string key_of(std::span<const std::int32_t> f) {
  return {reinterpret_cast<const char*>(f.data()), f.size_bytes()};
}

using IndexMap = std::vector<std::uint32_t>;

IndexMap compose(const IndexMap& g, const IndexMap& h) {
  IndexMap out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = g[h[i]];
  return out;
}

}  // namespace

std::uint32_t cross_correlation(std::span<const std::int32_t> f1, std::span<const std::int32_t> f2, int u, int v) {
  require_same_length(f1, f2);
  const int n = static_cast<int>(f1.size());
  if (u < 1 - n || u > n - 1 || v < 1 - n || v > n - 1)
    throw std::out_of_range("shift (" + std::to_string(u) + ", " + std::to_string(v) + ") outside [" +
                            std::to_string(1 - n) + ", " + std::to_string(n - 1) + "]^2");
  std::uint32_t count = 0;
  for (int x = std::max(1, 1 - u); x <= std::min(n, n - u); ++x)
    if (f1[x - 1] + v == f2[x + u - 1]) ++count;
  return count;
}

CorrelationTable::CorrelationTable(int n) : n_(n), counts_(static_cast<std::size_t>(2 * n - 1) * (2 * n - 1), 0) {
  if (n < 1) throw std::invalid_argument("correlation table needs n >= 1");
}

std::size_t CorrelationTable::index(int u, int v) const {
  if (u < 1 - n_ || u > n_ - 1 || v < 1 - n_ || v > n_ - 1) throw std::out_of_range("shift outside table");
  return static_cast<std::size_t>(u + n_ - 1) * (2 * n_ - 1) + static_cast<std::size_t>(v + n_ - 1);
}

std::uint32_t CorrelationTable::max() const { return *std::max_element(counts_.begin(), counts_.end()); }

std::uint64_t CorrelationTable::row_sum(int u) const {
  std::uint64_t sum = 0;
  for (int v = 1 - n_; v <= n_ - 1; ++v) sum += at(u, v);
  return sum;
}

CorrelationTable correlation_table(std::span<const std::int32_t> f1, std::span<const std::int32_t> f2) {
  require_same_length(f1, f2);
  const int n = static_cast<int>(f1.size());
  CorrelationTable table(n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) ++table.at(y - x, f2[y - 1] - f1[x - 1]);
  return table;
}

std::uint32_t max_cross_correlation(std::span<const std::int32_t> f1, std::span<const std::int32_t> f2) {
  require_same_length(f1, f2);
  const int n = static_cast<int>(f1.size());
  check_scan_size(n);
  Scratch s;
  s.row.assign(2 * n - 1, 0);
  Accum acc;
  scan_pair<false>(f1.data(), f2.data(), n, 0, 1, 1, 0, acc, s);
  return acc.best;
}

std::vector<IndexMap> family_symmetries(const Family& family) {
  const std::size_t m = family.members.size();
  const int n = m == 0 ? 0 : static_cast<int>(family.members.front().size());
  std::unordered_map<std::string, std::uint32_t> index;
  index.reserve(m * 2);
  for (std::size_t i = 0; i < m; ++i) index.emplace(key_of(family.members[i].view()), static_cast<std::uint32_t>(i));

  auto lookup_all = [&](auto transform) -> std::optional<IndexMap> {
    IndexMap map(m);
    std::vector<std::int32_t> img(n);
    for (std::size_t i = 0; i < m; ++i) {
      transform(family.members[i].values, img);
      auto it = index.find(key_of(img));
      if (it == index.end()) return std::nullopt;
      map[i] = it->second;
    }
    return map;
  };

  std::vector<IndexMap> gens;
  // reverse positions: x -> n+1-x
  if (auto g = lookup_all([&](const auto& f, auto& out) { std::reverse_copy(f.begin(), f.end(), out.begin()); }))
    gens.push_back(*g);
  // reverse values: y -> n+1-y
  if (auto g = lookup_all([&](const auto& f, auto& out) {
        for (int i = 0; i < n; ++i) out[i] = n + 1 - f[i];
      }))
    gens.push_back(*g);
  // inverse permutation (transpose)
  if (auto g = lookup_all([&](const auto& f, auto& out) {
        for (int i = 0; i < n; ++i) out[f[i] - 1] = i + 1;
      }))
    gens.push_back(*g);

  IndexMap id(m);
  for (std::size_t i = 0; i < m; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::vector<IndexMap> group{id};
  for (std::size_t k = 0; k < group.size(); ++k) {
    for (const auto& g : gens) {
      IndexMap next = compose(g, group[k]);
      if (std::find(group.begin(), group.end(), next) == group.end()) group.push_back(std::move(next));
    }
  }
  return group;
}

double estimate_family_work(const Family& family, const ScanOptions& options) {
  const double m = static_cast<double>(family.members.size());
  const double n = family.members.empty() ? 0.0 : static_cast<double>(family.members.front().size());
  if (options.restrict_nonneg) return m * (m - 1) * n * n / 2.0;
  if (!options.use_symmetry) return m * (m - 1) * n * n;
  const double order = static_cast<double>(family_symmetries(family).size());
  return m * (m - 1) * n * n / (2.0 * order);
}

FamilyMaxReport family_max(const Family& family, const ScanOptions& options) {
  const std::size_t m = family.members.size();
  if (m < 2) throw std::invalid_argument("family_max needs at least two members");
  const int n = static_cast<int>(family.members.front().size());
  check_scan_size(n);
  for (const auto& f : family.members)
    if (static_cast<int>(f.size()) != n) throw std::invalid_argument("family members have different lengths");
  {
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < m; ++i)
      if (!seen.emplace(key_of(family.members[i].view()), i).second)
        throw std::invalid_argument("family contains a repeated permutation");
  }

  const bool restricted = options.restrict_nonneg;
  const bool reduce = options.use_symmetry && !restricted;
  const std::vector<IndexMap> group = reduce ? family_symmetries(family) : std::vector<IndexMap>{};

  std::vector<Accum> rows(m);
  parallel_for(m, options.threads, [&](std::size_t a) {
    Accum& acc = rows[a];
    if (reduce) {
      for (const auto& g : group)
        if (g[a] < a) return;  // not the orbit minimum
    }
    Scratch s;
    s.row.assign(2 * n - 1, 0);
    const std::int32_t* fa = family.members[a].values.data();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> images;
    for (std::size_t b = 0; b < m; ++b) {
      if (b == a) continue;
      std::uint64_t weight = 1;
      if (reduce) {
        images.clear();
        for (const auto& g : group) {
          images.emplace_back(g[a], g[b]);
          images.emplace_back(g[b], g[a]);
        }
        const auto mine = std::make_pair(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
        if (*std::min_element(images.begin(), images.end()) != mine) continue;
        std::sort(images.begin(), images.end());
        weight = static_cast<std::uint64_t>(std::unique(images.begin(), images.end()) - images.begin());
      }
      const std::int32_t* fb = family.members[b].values.data();
      if (restricted)
        scan_pair<true>(fa, fb, n, a, b, weight, options.witness_cap, acc, s);
      else
        scan_pair<false>(fa, fb, n, a, b, weight, options.witness_cap, acc, s);
      ++acc.pairs;
    }
  });

  FamilyMaxReport report;
  report.family = family.name;
  report.family_size = m;
  report.restricted = restricted;
  report.symmetry_order = reduce ? group.size() : 1;
  for (const auto& acc : rows) {
    report.pairs_scanned += acc.pairs;
    if (acc.pairs > 0) report.value = std::max(report.value, acc.best);
  }
  for (const auto& acc : rows) {
    if (acc.pairs == 0 || acc.best != report.value) continue;
    report.occurrences += acc.count;
    for (const auto& w : acc.witnesses) {
      if (report.witnesses.size() >= options.witness_cap) break;
      report.witnesses.push_back(w);
    }
  }
  return report;
}

bool symmetry_check(const Field& field, const CostasPermutation& f1, const CostasPermutation& f2) {
  if (!f1.origin || !f2.origin) throw std::invalid_argument("symmetry_check needs Golomb-origin permutations");
  const int n = static_cast<int>(f1.size());
  const auto t12 = correlation_table(f1.view(), f2.view());
  const auto t21 = correlation_table(f2.view(), f1.view());
  const auto h1 = golomb_perm(field, {f1.origin->g1, field.inv(f1.origin->g2)});
  const auto h2 = golomb_perm(field, {f2.origin->g1, field.inv(f2.origin->g2)});
  const auto th = correlation_table(h1.view(), h2.view());
  for (int u = 1 - n; u <= n - 1; ++u) {
    for (int v = 1 - n; v <= n - 1; ++v) {
      if (t12.at(-u, v) != t21.at(u, -v)) return false;
      if (t12.at(u, -v) != th.at(u, v)) return false;
    }
  }
  return true;
}

}  // namespace costas
