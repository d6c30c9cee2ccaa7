#include "glat/cohomology.hpp"

#include <algorithm>

#include "glat/errors.hpp"

namespace glat {

int h0(const GLattice& n) {
  std::vector<int> all(n.group->order());
  for (int i = 0; i < n.group->order(); ++i) all[i] = i;
  return fixed_basis(n, all).cols();
}

FiniteAbelianGroup h1(const GLattice& n) {
  const FiniteMatrixGroup& g = *n.group;
  const int N = g.order();
  const int r = n.rank;
  if (r == 0 || N == 1) return {};

  std::vector<int> gens = g.generator_element_indices();
  const int k = static_cast<int>(gens.size());
  if (k == 0) return {};
  const int kr = k * r;
  std::vector<int> slot(N, -1);
  for (int s = 0; s < k; ++s) slot[gens[s]] = s;

  // A cochain satisfying the (prefix, generator) cocycle constraints is
  // determined by its values on the generators: f(e) = 0 (the (e,e) pair)
  // and f(p*s) = f(p) + p.f(s) along each element's word. E[x] expresses
  // f(x) in terms of the stacked generator values.
  std::vector<IntMatrix> E(N);
  E[0] = IntMatrix(r, kr);
  for (int x = 1; x < N; ++x) {
    const auto& w = g.element_words[x];
    int last = g.index_of(g.generator_matrices[w.back()]);
    int p = g.mul[x][g.inv[last]];
    if (p >= x || slot[last] < 0) throw CheckFailed("element word out of order");
    IntMatrix e = E[p];
    const IntMatrix& ap = n.action[p];
    const int s = slot[last];
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (ap.at(i, j) != 0) e.at(i, s * r + j) += ap.at(i, j);
    E[x] = std::move(e);
  }

  // Cocycle condition over all pairs, written in generator coordinates.
  IntMatrix sys(N * N * r, kr);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      IntMatrix m = (E[g.mul[a][b]] - E[a]) - n.action[a] * E[b];
      const int base = (a * N + b) * r;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < kr; ++j)
          if (m.at(i, j) != 0) sys.at(base + i, j) = m.at(i, j);
    }
  IntMatrix z0 = kernel_basis(sys);  // kr x z

  // Back to 1-cochain coordinates: the cocycle lattice inside N^{|G|}.
  IntMatrix emb(N * r, kr);
  for (int x = 0; x < N; ++x)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < kr; ++j) emb.at(x * r + i, j) = E[x].at(i, j);
  IntMatrix cocycles = emb * z0;

  IntMatrix d0(N * r, r);
  IntMatrix id = IntMatrix::identity(r);
  for (int x = 0; x < N; ++x) {
    IntMatrix blk = n.action[x] - id;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) d0.at(x * r + i, j) = blk.at(i, j);
  }

  FiniteAbelianGroup q = quotient_structure(cocycles, d0);
  if (q.free_rank != 0)
    throw CheckFailed("H1 of a finite group action came out infinite");
  return q;
}

FiniteAbelianGroup h1_cyclic(const GLattice& n, int generator_element) {
  const FiniteMatrixGroup& g = *n.group;
  if (generator_element < 0 || generator_element >= g.order())
    throw InputError("cyclic generator index out of range");
  if (generated_subgroup(n.group, {generator_element}).order() != g.order())
    throw NotCyclic("element does not generate the group");
  if (n.rank == 0 || g.order() == 1) return {};
  IntMatrix norm(n.rank, n.rank);
  int e = 0;
  do {
    norm = norm + n.action[e];
    e = g.mul[e][generator_element];
  } while (e != 0);
  IntMatrix z = kernel_basis(norm);
  IntMatrix b = n.action[generator_element] - IntMatrix::identity(n.rank);
  FiniteAbelianGroup q = quotient_structure(z, b);
  if (q.free_rank != 0) throw CheckFailed("cyclic H1 came out infinite");
  return q;
}

bool CohomologyProfile::all_trivial() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const FiniteAbelianGroup& e) { return e.trivial(); });
}

CohomologyProfile h1_profile(const GLattice& n) {
  CohomologyProfile p;
  p.subgroups = subgroups(n.group);
  p.entries.reserve(p.subgroups.size());
  for (const auto& u : p.subgroups) p.entries.push_back(h1(restrict(n, u)));
  if (!p.entries.empty() && !p.entries.front().trivial())
    throw CheckFailed("H1 over the trivial subgroup must vanish");
  return p;
}

}  // namespace glat
