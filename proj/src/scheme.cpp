#include "stein/scheme.hpp"

#include <algorithm>
#include <string>

#include "stein/error.hpp"
#include "stein/spectral_sum.hpp"

namespace stein {

namespace {

std::string cell(int i, std::size_t x, std::size_t y) {
  return "R_" + std::to_string(i) + "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

// Exact singularity test by elimination.
bool singular(Matrix<Rational> a) {
  std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return true;
    if (p != c)
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return false;
}

BigInt hamming_intersection(int d, int q, int i, int j, int k) {
  // z at distance i from x and j from y, where dist(x, y) = k: a moves on the
  // d-k agreeing coordinates, e coordinates differ from both x and y.
  BigInt total = 0;
  for (int a = 0; a <= d - k; ++a) {
    int e = i + j - k - 2 * a;
    int b = i - a - e, c = j - a - e;
    if (e < 0 || b < 0 || c < 0 || b + c + e != k) continue;
    BigInt t = binomial(d - k, a) * ipow(BigInt(q - 1), static_cast<unsigned long>(a));
    t *= factorial(k) / (factorial(b) * factorial(c) * factorial(e));
    t *= ipow(BigInt(q - 2), static_cast<unsigned long>(e));
    total += t;
  }
  return total;
}

}  // namespace

BigInt AssociationScheme::intersection_number(int i, int j, int k) const {
  int n = n_classes;
  if (i < 0 || j < 0 || k < 0 || i > n || j > n || k > n) throw ValidationError("class index out of range");
  if (hamming) return hamming_intersection(hamming->first, hamming->second, i, j, k);
  auto w = static_cast<std::size_t>(n + 1);
  return intersection_table[(static_cast<std::size_t>(i) * w + static_cast<std::size_t>(j)) * w + static_cast<std::size_t>(k)];
}

AssociationScheme scheme_from_relations(const std::vector<RelationMatrix>& rel) {
  if (rel.empty()) throw ValidationError("scheme needs at least one relation");
  std::size_t N = rel[0].rows();
  int n = static_cast<int>(rel.size()) - 1;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    if (rel[i].rows() != N || rel[i].cols() != N)
      throw ValidationError("relation matrices must be square and of one size");
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t y = 0; y < N; ++y)
        if (rel[i](x, y) != 0 && rel[i](x, y) != 1) throw ValidationError("relation entries must be 0/1");
  }
  for (int i = 0; i <= n; ++i)
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t y = x + 1; y < N; ++y)
        if (rel[static_cast<std::size_t>(i)](x, y) != rel[static_cast<std::size_t>(i)](y, x))
          throw AxiomError(1, cell(i, x, y), "axiom 1 (symmetry) fails at " + cell(i, x, y));
  Matrix<int> which(N, N, -1);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      int count = 0;
      for (int i = 0; i <= n; ++i)
        if (rel[static_cast<std::size_t>(i)](x, y)) {
          ++count;
          which(x, y) = i;
        }
      if (count != 1) {
        std::string w = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
        throw AxiomError(2, w, "axiom 2 (disjoint cover) fails at " + w + " covered " + std::to_string(count) + " times");
      }
    }
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y)
      if ((which(x, y) == 0) != (x == y))
        throw AxiomError(3, cell(0, x, y), "axiom 3 (R_0 is the identity) fails at " + cell(0, x, y));

  auto w = static_cast<std::size_t>(n + 1);
  std::vector<long long> c(w * w * w, -1);
  std::vector<long long> cnt(w * w);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (std::size_t z = 0; z < N; ++z)
        ++cnt[static_cast<std::size_t>(which(x, z)) * w + static_cast<std::size_t>(which(z, y))];
      auto k = static_cast<std::size_t>(which(x, y));
      for (std::size_t ij = 0; ij < w * w; ++ij) {
        long long& slot = c[ij * w + k];
        if (slot < 0) slot = cnt[ij];
        else if (slot != cnt[ij]) {
          std::string wit = "i=" + std::to_string(ij / w) + " j=" + std::to_string(ij % w) + " k=" +
                            std::to_string(k) + " at (" + std::to_string(x) + "," + std::to_string(y) + ")";
          throw AxiomError(4, wit, "axiom 4 (constant intersection numbers) fails: " + wit);
        }
      }
    }

  AssociationScheme s;
  s.n_classes = n;
  s.x_size = static_cast<unsigned long>(N);
  for (long long v : c) s.intersection_table.emplace_back(static_cast<long>(v < 0 ? 0 : v));
  for (int i = 0; i <= n; ++i) s.valencies.push_back(s.intersection_number(i, i, 0));

  // Multiplication by D_1 on the basis {D_j}: column j holds the coordinates of D_1 D_j.
  if (n == 0) {
    s.multiplicities = {BigInt(1)};
    s.phi = Matrix<Rational>(1, 1, Rational(1));
    return s;
  }
  Matrix<Rational> m1(w, w);
  for (std::size_t k = 0; k < w; ++k)
    for (std::size_t j = 0; j < w; ++j) m1(k, j) = Rational(s.intersection_number(1, static_cast<int>(j), static_cast<int>(k)));

  long v1 = s.valencies[1].get_si();
  std::vector<long> theta;
  for (long t = v1; t >= -v1; --t) {
    Matrix<Rational> a = m1;
    for (std::size_t k = 0; k < w; ++k) a(k, k) -= Rational(t);
    if (singular(a)) theta.push_back(t);
  }
  if (theta.size() != w)
    throw CapabilityError("D_1 has " + std::to_string(theta.size()) + " distinct integer eigenvalues, need " +
                          std::to_string(w) + "; only schemes whose D_1 generates the Bose-Mesner algebra with rational spectrum are supported");

  s.phi = Matrix<Rational>(w, w);
  for (std::size_t i = 0; i < w; ++i) {
    std::vector<Rational> a(w, Rational(0));
    a[0] = 1;
    for (std::size_t k = 0; k < w; ++k) {
      if (k == i) continue;
      std::vector<Rational> next(w, Rational(0));
      for (std::size_t r = 0; r < w; ++r) {
        for (std::size_t j = 0; j < w; ++j) next[r] += m1(r, j) * a[j];
        next[r] -= Rational(theta[k]) * a[r];
        next[r] /= Rational(theta[i] - theta[k]);
      }
      a = std::move(next);
    }
    if (a[0].sign() <= 0) throw std::logic_error("idempotent with nonpositive trace");
    Rational mu = a[0] * Rational(s.x_size);
    if (!mu.is_integer()) throw CapabilityError("non-integral multiplicity " + mu.str());
    s.multiplicities.push_back(mu.num());
    for (std::size_t l = 0; l < w; ++l) {
      // D_l J_i = phi_l(i) J_i; the D_0 coordinate of D_l J_i is v_l a_l.
      Rational ph = Rational(s.valencies[l]) * a[l] / a[0];
      for (std::size_t k = 0; k < w; ++k) {
        Rational b = 0;
        for (std::size_t j = 0; j < w; ++j)
          b += Rational(s.intersection_number(static_cast<int>(l), static_cast<int>(j), static_cast<int>(k))) * a[j];
        if (b != ph * a[k]) throw std::logic_error("Lagrange idempotent is not an eigenvector");
      }
      s.phi(l, i) = ph;
    }
  }
  return s;
}

AssociationScheme hamming_scheme(int d, int q) {
  if (d < 1) throw ValidationError("Hamming scheme needs d >= 1");
  if (q < 2) throw ValidationError("Hamming scheme needs q >= 2");
  AssociationScheme s;
  s.n_classes = d;
  s.hamming = std::make_pair(d, q);
  s.x_size = ipow(BigInt(q), static_cast<unsigned long>(d));
  for (int i = 0; i <= d; ++i) {
    BigInt v = ipow(BigInt(q - 1), static_cast<unsigned long>(i)) * binomial(d, i);
    s.valencies.push_back(v);
    s.multiplicities.push_back(v);
  }
  s.phi = Matrix<Rational>(d + 1, d + 1);
  for (int sc = 0; sc <= d; ++sc)
    for (int i = 0; i <= d; ++i) {
      BigInt t = 0;
      for (int j = 0; j <= sc; ++j) {
        BigInt term = ipow(BigInt(q - 1), static_cast<unsigned long>(sc - j)) * binomial(i, j) * binomial(d - i, sc - j);
        t += (j % 2 ? -term : term);
      }
      s.phi(sc, i) = Rational(t);
    }
  return s;
}

std::vector<RelationMatrix> hamming_relations(int d, int q) {
  if (d < 1 || q < 2) throw ValidationError("Hamming relations need d >= 1, q >= 2");
  long N = 1;
  for (int k = 0; k < d; ++k) {
    N *= q;
    if (N > 4096) throw ResourceError("explicit Hamming relations limited to 4096 points");
  }
  std::vector<RelationMatrix> rel(static_cast<std::size_t>(d + 1), RelationMatrix(static_cast<std::size_t>(N), static_cast<std::size_t>(N), 0));
  for (long x = 0; x < N; ++x)
    for (long y = 0; y < N; ++y) {
      int dist = 0;
      for (long a = x, b = y, k = 0; k < d; ++k, a /= q, b /= q) dist += (a % q != b % q);
      rel[static_cast<std::size_t>(dist)](static_cast<std::size_t>(x), static_cast<std::size_t>(y)) = 1;
    }
  return rel;
}

std::vector<Rational> scheme_walk_probabilities(const AssociationScheme& sc, int s, int m) {
  int n = sc.n_classes;
  if (s < 0 || s > n) throw ValidationError("class index s out of range");
  if (m < 0) throw ValidationError("step count must be nonnegative");
  auto w = static_cast<std::size_t>(n + 1);
  SpectralData d;
  d.basis = Matrix<Rational>(w, w);
  Rational vs = Rational(sc.valencies[static_cast<std::size_t>(s)]);
  for (std::size_t i = 0; i < w; ++i) {
    d.weight.push_back(sc.plancherel(static_cast<int>(i)));
    d.eigen.push_back(sc.phi(static_cast<std::size_t>(s), i) / vs);
    for (std::size_t r = 0; r < w; ++r) d.basis(i, r) = sc.phi(r, i);
  }
  d.norm.assign(w, Rational(1));
  return spectral_sum(d, m);
}

std::vector<Rational> scheme_walk_bruteforce(const std::vector<RelationMatrix>& rel, int s, int m) {
  auto N = rel.at(0).rows();
  const auto& ds = rel.at(static_cast<std::size_t>(s));
  long vs = 0;
  for (std::size_t y = 0; y < N; ++y) vs += ds(0, y);
  std::vector<Rational> dist(N, Rational(0));
  dist[0] = 1;
  for (int step = 0; step < m; ++step) {
    std::vector<Rational> next(N, Rational(0));
    for (std::size_t x = 0; x < N; ++x) {
      if (dist[x].is_zero()) continue;
      Rational share = dist[x] / Rational(vs);
      for (std::size_t y = 0; y < N; ++y)
        if (ds(x, y)) next[y] += share;
    }
    dist = std::move(next);
  }
  std::vector<Rational> out(rel.size(), Rational(0));
  for (std::size_t y = 0; y < N; ++y)
    for (std::size_t r = 0; r < rel.size(); ++r)
      if (rel[r](0, y)) out[r] += dist[y];
  return out;
}

}  // namespace stein
