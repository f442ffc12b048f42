#include "stein/matchings.hpp"

#include <algorithm>
#include <numeric>

#include "stein/error.hpp"

namespace stein {

Partition cycle_type(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> lengths;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[static_cast<std::size_t>(b[x])];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  return r;
}

Permutation coset_representative(const Partition& nu) {
  Permutation w;
  int offset = 0;
  for (int k : nu.parts()) {
    for (int j = 0; j < 2 * k; ++j) w.push_back(offset + (j + 1) % (2 * k));
    offset += 2 * k;
  }
  return w;
}

void for_each_hyperoctahedral(int n, const std::function<void(const Permutation&)>& f) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  Permutation k(static_cast<std::size_t>(2 * n));
  do {
    for (unsigned long flips = 0; flips < (1UL << n); ++flips) {
      for (int b = 0; b < n; ++b) {
        int f0 = static_cast<int>((flips >> b) & 1UL);
        k[2 * b] = 2 * sigma[b] + f0;
        k[2 * b + 1] = 2 * sigma[b] + (1 - f0);
      }
      f(k);
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

Matching base_matching(int n) {
  Matching m(static_cast<std::size_t>(2 * n));
  for (int x = 0; x < 2 * n; ++x) m[x] = x ^ 1;
  return m;
}

Matching image(const Permutation& w, const Matching& m) {
  Matching r(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) r[w[x]] = w[m[x]];
  return r;
}

Partition matching_distance(const Matching& a, const Matching& b) {
  std::vector<char> seen(a.size(), 0);
  std::vector<int> halves;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    std::size_t x = s;
    do {
      seen[x] = 1;
      std::size_t y = static_cast<std::size_t>(a[x]);
      seen[y] = 1;
      x = static_cast<std::size_t>(b[y]);
      ++len;
    } while (x != s);
    halves.push_back(len);
  }
  return Partition::from_unsorted(std::move(halves));
}

namespace {

void matchings_on(std::vector<int>& free_points, Matching& cur,
                  const std::function<void(const Matching&)>& f) {
  auto it = std::find_if(free_points.begin(), free_points.end(), [](int v) { return v >= 0; });
  if (it == free_points.end()) {
    f(cur);
    return;
  }
  int a = *it;
  *it = -1;
  for (auto jt = it + 1; jt != free_points.end(); ++jt) {
    if (*jt < 0) continue;
    int b = *jt;
    *jt = -1;
    cur[a] = b;
    cur[b] = a;
    matchings_on(free_points, cur, f);
    *jt = b;
  }
  *it = a;
}

}  // namespace

std::vector<Matching> all_matchings(int n) {
  std::vector<Matching> out;
  std::vector<int> pts(static_cast<std::size_t>(2 * n));
  std::iota(pts.begin(), pts.end(), 0);
  Matching cur(pts.size(), -1);
  matchings_on(pts, cur, [&](const Matching& m) { out.push_back(m); });
  return out;
}

std::vector<Matching> hook_neighbours(const Matching& base, int i) {
  int n = static_cast<int>(base.size()) / 2;
  if (i < 1 || i > n) throw ValidationError("hook neighbours need 1 <= i <= n");
  if (i == 1) return {base};
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < 2 * n; ++x)
    if (x < base[x]) pairs.emplace_back(x, base[x]);

  std::vector<Matching> out;
  std::vector<int> choose(static_cast<std::size_t>(n), 0);
  std::fill(choose.end() - i, choose.end(), 1);
  do {
    std::vector<int> pts;
    for (int b = 0; b < n; ++b)
      if (choose[b]) {
        pts.push_back(pairs[b].first);
        pts.push_back(pairs[b].second);
      }
    Matching cur = base;
    matchings_on(pts, cur, [&](const Matching& m) {
      Partition d = matching_distance(base, m);
      if (d.part(0) == i) out.push_back(m);
    });
  } while (std::next_permutation(choose.begin(), choose.end()));
  return out;
}

}  // namespace stein
