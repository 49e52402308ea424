#include "turan/forbidden.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "turan/intmath.hpp"

namespace turan {

std::string HornCertificate::to_json() const {
  nlohmann::json j;
  j["horn"] = horn.to_vector();
  j["centers"] = centers.to_vector();
  return j.dump();
}

VertexSet centers_of(const Graph& g, const VertexSet& horn) {
  if (!horn.any()) throw std::invalid_argument("centers_of: empty horn");
  VertexSet inter = g.full_set();
  horn.for_each([&](int v) { inter &= g.neighbors(v); });
  inter -= horn;  // horn vertices are never their own neighbors anyway
  return inter;
}

namespace {

struct HornSearch {
  const Graph& g;
  int l, t;
  std::vector<int> cand;  // vertices of degree >= t, ascending
  std::vector<int> horn;
  std::optional<HornCertificate> found;

  HornSearch(const Graph& graph, int ll, int tt) : g(graph), l(ll), t(tt) {
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) >= t) cand.push_back(v);
  }

  void emit(const VertexSet& inter) {
    HornCertificate cert;
    cert.horn = VertexSet(g.order());
    for (int v : horn) cert.horn.set(v);
    cert.centers = inter;
    found = std::move(cert);
  }

  // Extends the horn from cand[idx..); inter = common neighborhood so far.
  void extend(std::size_t idx, const VertexSet& inter) {
    if (found) return;
    if ((int)horn.size() == l) {
      if (inter.count() >= t) emit(inter);
      return;
    }
    for (std::size_t i = idx; i < cand.size() && !found; ++i) {
      int v = cand[i];
      if (inter.count_and(g.neighbors(v)) < t) continue;  // cheap filter first
      horn.push_back(v);
      extend(i + 1, inter & g.neighbors(v));
      horn.pop_back();
    }
  }

  std::optional<HornCertificate> run() {
    if (l == 2) {  // pair loop on and-ed adjacency bitsets
      for (std::size_t i = 0; i < cand.size(); ++i) {
        const Bitset& na = g.neighbors(cand[i]);
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
          if (na.count_and(g.neighbors(cand[j])) < t) continue;
          horn = {cand[i], cand[j]};
          emit(na & g.neighbors(cand[j]));
          return found;
        }
      }
      return std::nullopt;
    }
    extend(0, g.full_set());
    return found;
  }
};

}  // namespace

std::optional<HornCertificate> contains_biclique(const Graph& g, int l, int t) {
  if (l > t) std::swap(l, t);
  if (l < 1) throw std::invalid_argument("contains_biclique: l >= 1 required");
  if (l == 1) {
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) >= t) {
        HornCertificate cert;
        cert.horn = VertexSet(g.order());
        cert.horn.set(v);
        cert.centers = g.neighbors(v);
        return cert;
      }
    }
    return std::nullopt;
  }
  return HornSearch(g, l, t).run();
}

bool is_biclique_free(const Graph& g, int l, int t) {
  return !contains_biclique(g, l, t).has_value();
}

bool verify_certificate(const Graph& g, const HornCertificate& cert, int l, int t) {
  if (l > t) std::swap(l, t);
  if (cert.horn.count() != l || cert.centers.count() < t) return false;
  if (cert.horn.intersects(cert.centers)) return false;
  bool ok = true;
  cert.horn.for_each([&](int u) {
    if (!cert.centers.subset_of(g.neighbors(u))) ok = false;
  });
  return ok;
}

namespace {

// a joins the l-side, b is a center: look for l-1 further horn members among
// b's other neighbors with >= t common neighbors including a's side.
bool through_side(const Graph& g, int a, int b, int l, int t) {
  if (l == 1) return g.degree(a) >= t;
  VertexSet cand = g.neighbors(b);
  cand.reset(a);
  std::vector<int> cs = cand.to_vector();
  if ((int)cs.size() < l - 1) return false;
  std::vector<int> idx(l - 1);
  for (int i = 0; i < l - 1; ++i) idx[i] = i;
  int k = l - 1, nc = (int)cs.size();
  while (true) {
    VertexSet common = g.neighbors(a);
    for (int i = 0; i < k; ++i) common &= g.neighbors(cs[idx[i]]);
    if (common.count() >= t) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == nc - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool biclique_through_edge(const Graph& g, int u, int v, int l, int t) {
  if (l > t) std::swap(l, t);
  if (!g.has_edge(u, v)) throw std::invalid_argument("biclique_through_edge: edge absent");
  if (through_side(g, u, v, l, t)) return true;
  if (l != t && through_side(g, v, u, l, t)) return true;
  return false;
}

long long count_horn_incidences(const Graph& g, const VertexSet& x_set, int l) {
  if (l < 1) throw std::invalid_argument("count_horn_incidences: l >= 1 required");
  long long total = 0;
  for (int v = 0; v < g.order(); ++v)
    total += binom(g.neighbors(v).count_and(x_set), l);
  return total;
}

}  // namespace turan
