#include "glat/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "glat/cohomology.hpp"
#include "glat/errors.hpp"

namespace glat {

namespace {

void verify_action_table(const GLattice& n) {
  const FiniteMatrixGroup& g = *n.group;
  if (static_cast<int>(n.action.size()) != g.order())
    throw CheckFailed("action table size mismatch");
  if (!n.action[0].is_identity())
    throw InputError("action of the identity is not the identity matrix");
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j)
      if (!(n.action[g.mul[i][j]] == n.action[i] * n.action[j]))
        throw InputError("action is not a homomorphism at " + g.word_name(i) +
                         " * " + g.word_name(j));
}

}  // namespace

GLattice make_lattice(const GroupPtr& g,
                      const std::vector<std::pair<std::string, IntMatrix>>& action_gens,
                      std::vector<std::string> basis_labels, std::string name) {
  if (action_gens.size() != g->generator_names.size())
    throw InputError("action generator count does not match the group");
  std::vector<IntMatrix> gen_action(g->generator_names.size());
  std::vector<bool> seen(g->generator_names.size(), false);
  int rank = -1;
  for (const auto& [gname, m] : action_gens) {
    auto it = std::find(g->generator_names.begin(), g->generator_names.end(), gname);
    if (it == g->generator_names.end())
      throw InputError("action generator '" + gname + "' not a group generator");
    size_t gi = static_cast<size_t>(it - g->generator_names.begin());
    if (seen[gi]) throw InputError("duplicate action generator '" + gname + "'");
    seen[gi] = true;
    if (!m.is_square()) throw InputError("action of '" + gname + "' not square");
    if (rank >= 0 && m.rows() != rank)
      throw InputError("action generators have inconsistent ranks");
    rank = m.rows();
    mpz_class det = m.determinant();
    if (det != 1 && det != -1)
      throw NotUnimodular("action of '" + gname + "' has determinant " + det.get_str());
    gen_action[gi] = m;
  }
  if (rank < 0) rank = 0;  // trivial group, no generators

  GLattice n;
  n.group = g;
  n.rank = rank;
  n.basis_labels = std::move(basis_labels);
  n.name = std::move(name);
  if (!n.basis_labels.empty() && static_cast<int>(n.basis_labels.size()) != rank)
    throw InputError("basis label count does not match the rank");
  n.action.resize(g->order());
  for (int e = 0; e < g->order(); ++e) {
    IntMatrix m = IntMatrix::identity(rank);
    for (int gi : g->element_words[e]) m = m * gen_action[gi];
    n.action[e] = std::move(m);
  }
  verify_action_table(n);
  return n;
}

GLattice lattice_from_group_matrices(const GroupPtr& g, std::string name) {
  GLattice n;
  n.group = g;
  n.rank = g->degree;
  n.action = g->elements;
  n.name = std::move(name);
  verify_action_table(n);
  return n;
}

GLattice lattice_from_element_matrices(const GroupPtr& g,
                                       std::vector<IntMatrix> action,
                                       std::string name) {
  if (static_cast<int>(action.size()) != g->order())
    throw InputError("need one action matrix per group element");
  GLattice n;
  n.group = g;
  n.rank = action[0].rows();
  for (const IntMatrix& m : action)
    if (!m.is_square() || m.rows() != n.rank)
      throw InputError("action matrices must be square of one common rank");
  n.action = std::move(action);
  n.name = std::move(name);
  verify_action_table(n);
  return n;
}

GLattice change_group(const GLattice& n, const GroupPtr& g) {
  if (same_group(n.group, g)) return n;
  std::vector<int> phi = isomorphism_by_generator_names(g, n.group);
  GLattice r;
  r.group = g;
  r.rank = n.rank;
  r.basis_labels = n.basis_labels;
  r.name = n.name;
  r.action.resize(g->order());
  for (int e = 0; e < g->order(); ++e) r.action[e] = n.action[phi[e]];
  verify_action_table(r);
  return r;
}

GLattice permutation_lattice(const GroupPtr& g, const Subgroup& h) {
  if (!same_group(g, h.parent))
    throw GroupMismatch("subgroup belongs to a different group");
  const int n = g->order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int e = 0; e < n; ++e) {
    if (coset_of[e] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(e);
    for (int x : h.members) coset_of[g->mul[e][x]] = c;
  }
  const int rank = static_cast<int>(reps.size());

  GLattice m;
  m.group = g;
  m.rank = rank;
  m.name = "Z[G/" + subgroup_label(h) + "]";
  for (int c = 0; c < rank; ++c) m.basis_labels.push_back("[" + g->word_name(reps[c]) + "]");
  m.action.resize(n);
  for (int w = 0; w < n; ++w) {
    IntMatrix p(rank, rank);
    for (int c = 0; c < rank; ++c) p.at(coset_of[g->mul[w][reps[c]]], c) = 1;
    m.action[w] = std::move(p);
  }
  verify_action_table(m);
  return m;
}

GLattice augmentation_ideal(const GroupPtr& g) {
  const int n = g->order();
  const int rank = n - 1;
  GLattice m;
  m.group = g;
  m.rank = rank;
  m.name = "IG";
  for (int x = 1; x < n; ++x) m.basis_labels.push_back(g->word_name(x) + "-e");
  m.action.resize(n);
  // w * (x - e) = (wx - e) - (w - e), dropping vanishing terms.
  for (int w = 0; w < n; ++w) {
    IntMatrix a(rank, rank);
    for (int x = 1; x < n; ++x) {
      int wx = g->mul[w][x];
      if (wx != 0) a.at(wx - 1, x - 1) += 1;
      if (w != 0) a.at(w - 1, x - 1) -= 1;
    }
    m.action[w] = std::move(a);
  }
  verify_action_table(m);
  return m;
}

GLattice dual(const GLattice& n) {
  GLattice d;
  d.group = n.group;
  d.rank = n.rank;
  d.name = n.name.empty() ? "dual" : n.name + "*";
  for (const auto& l : n.basis_labels) d.basis_labels.push_back(l + "*");
  d.action.resize(n.action.size());
  for (size_t e = 0; e < n.action.size(); ++e)
    d.action[e] = n.action[n.group->inv[e]].transpose();
  verify_action_table(d);
  return d;
}

GLattice direct_sum(const GLattice& a, const GLattice& b) {
  if (!same_group(a.group, b.group))
    throw GroupMismatch("direct sum of lattices over different groups");
  GLattice s;
  s.group = a.group;
  s.rank = a.rank + b.rank;
  s.name = a.name + " + " + b.name;
  if (!a.basis_labels.empty() && !b.basis_labels.empty()) {
    s.basis_labels = a.basis_labels;
    s.basis_labels.insert(s.basis_labels.end(), b.basis_labels.begin(),
                          b.basis_labels.end());
  }
  s.action.resize(a.action.size());
  for (size_t e = 0; e < a.action.size(); ++e)
    s.action[e] = IntMatrix::block_diag(a.action[e], b.action[e]);
  verify_action_table(s);
  return s;
}

GLattice restrict(const GLattice& n, const Subgroup& u) {
  if (!same_group(n.group, u.parent))
    throw GroupMismatch("restricting along a subgroup of a different group");
  std::vector<int> gen_idx = subgroup_generators(u);
  std::vector<std::pair<std::string, IntMatrix>> gens;
  for (int e : gen_idx)
    gens.emplace_back(n.group->word_name(e), n.group->elements[e]);
  GroupPtr sub = generate(n.group->degree, gens);
  if (sub->order() != u.order())
    throw CheckFailed("restricted group has wrong order");

  GLattice r;
  r.group = sub;
  r.rank = n.rank;
  r.basis_labels = n.basis_labels;
  r.name = n.name.empty() ? "restriction" : n.name + "|" + subgroup_label(u);
  r.action.resize(sub->order());
  for (int e = 0; e < sub->order(); ++e) {
    int pe = n.group->index_of(sub->elements[e]);
    if (pe < 0) throw CheckFailed("restricted element missing from parent");
    r.action[e] = n.action[pe];
  }
  verify_action_table(r);
  return r;
}

IntMatrix fixed_basis(const GLattice& n, const std::vector<int>& members) {
  IntMatrix stacked(0, n.rank);
  IntMatrix id = IntMatrix::identity(n.rank);
  for (int x : members) {
    if (x == 0) continue;
    stacked = stacked.vstack(n.action[x] - id);
  }
  return kernel_basis(stacked);
}

std::pair<GLattice, IntMatrix> fixed_sublattice(const GLattice& n,
                                                const Subgroup& u) {
  if (!same_group(n.group, u.parent))
    throw GroupMismatch("fixed sublattice along a subgroup of a different group");
  if (!is_normal(u))
    throw NotNormal("fixed sublattice needs a normal subgroup to carry the action");
  IntMatrix f = fixed_basis(n, u.members);
  GLattice m;
  m.group = n.group;
  m.rank = f.cols();
  m.name = (n.name.empty() ? "N" : n.name) + "^" + subgroup_label(u);
  m.action.resize(n.action.size());
  for (size_t w = 0; w < n.action.size(); ++w) {
    auto aw = solve_integer(f, n.action[w] * f);
    if (!aw) throw CheckFailed("fixed sublattice is not stable under the group");
    m.action[w] = std::move(*aw);
  }
  verify_action_table(m);
  return {std::move(m), std::move(f)};
}

bool is_permutation_in_basis(const GLattice& n) {
  for (const auto& a : n.action)
    if (!a.is_permutation()) return false;
  return true;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  return a->degree == b->degree && a->elements == b->elements;
}

LatticeMorphismSpace morphism_space(const GLattice& a, const GLattice& b) {
  if (!same_group(a.group, b.group))
    throw GroupMismatch("morphism space over different groups");
  const int ra = a.rank, rb = b.rank;
  const auto gens = a.group->generator_element_indices();
  // Unknowns: X[i][k] at index i*ra + k. Constraints: X*A_g - B_g*X = 0.
  IntMatrix sys(static_cast<int>(gens.size()) * rb * ra, rb * ra);
  int row = 0;
  for (int ge : gens) {
    const IntMatrix& ag = a.action[ge];
    const IntMatrix& bg = b.action[ge];
    for (int i = 0; i < rb; ++i)
      for (int j = 0; j < ra; ++j) {
        for (int k = 0; k < ra; ++k) sys.at(row, i * ra + k) += ag.at(k, j);
        for (int k = 0; k < rb; ++k) sys.at(row, k * ra + j) -= bg.at(i, k);
        ++row;
      }
  }
  IntMatrix kb = kernel_basis(sys);
  LatticeMorphismSpace sp;
  sp.source_rank = ra;
  sp.target_rank = rb;
  for (int c = 0; c < kb.cols(); ++c) {
    IntMatrix x(rb, ra);
    for (int i = 0; i < rb; ++i)
      for (int k = 0; k < ra; ++k) x.at(i, k) = kb.at(i * ra + k, c);
    sp.basis.push_back(std::move(x));
  }
  for (const auto& x : sp.basis)
    for (int e = 0; e < a.group->order(); ++e)
      if (!(x * a.action[e] == b.action[e] * x))
        throw CheckFailed("morphism basis element fails to intertwine");
  return sp;
}

namespace {

// Packed GF(2) nonsingularity test.
bool nonsingular_mod2(const IntMatrix& x) {
  const int n = x.rows();
  const int words = (n + 63) / 64;
  std::vector<std::vector<uint64_t>> rows(n, std::vector<uint64_t>(words, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (mpz_odd_p(x.at(i, j).get_mpz_t()))
        rows[i][j / 64] |= uint64_t(1) << (j % 64);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (rows[i][c / 64] >> (c % 64) & 1) {
        p = i;
        break;
      }
    if (p < 0) return false;
    std::swap(rows[c], rows[p]);
    for (int i = c + 1; i < n; ++i)
      if (rows[i][c / 64] >> (c % 64) & 1)
        for (int w = 0; w < words; ++w) rows[i][w] ^= rows[c][w];
  }
  return true;
}

// |det| mod p must be 1 or p-1 for a unimodular matrix.
bool det_pm1_mod_p(const IntMatrix& x, long p) {
  const int n = x.rows();
  std::vector<std::vector<long>> m(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long v = mpz_fdiv_ui(x.at(i, j).get_mpz_t(), static_cast<unsigned long>(p));
      m[i][j] = v;
    }
  long det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] % p != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return false;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = p - det;
    }
    det = det * m[c][c] % p;
    // Scale row c by the inverse of the pivot.
    long inv = 1, base = m[c][c] % p, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int j = c; j < n; ++j) m[c][j] = m[c][j] * inv % p;
    for (int i = c + 1; i < n; ++i) {
      long f = m[i][c] % p;
      if (f == 0) continue;
      for (int j = c; j < n; ++j) m[i][j] = ((m[i][j] - f * m[c][j]) % p + p) % p;
    }
  }
  return det % p == 1 || det % p == p - 1;
}

}  // namespace

IsoSearchResult unimodular_combination_search(
    const std::vector<IntMatrix>& basis, const GLattice& a, const GLattice& b,
    int coeff_bound, long max_candidates) {
  IsoSearchResult res;
  if (a.rank != b.rank) {
    res.kind = IsoSearchResult::Unknown;
    res.search_exhausted = true;
    res.detail = "ranks differ, no square candidates";
    return res;
  }
  const int d = static_cast<int>(basis.size());
  const int r = a.rank;
  if (d == 0) {
    res.kind = IsoSearchResult::Unknown;
    res.search_exhausted = true;
    res.detail = r == 0 ? "" : "morphism space is zero";
    if (r == 0) {
      res.kind = IsoSearchResult::Proven;
      res.witness = IntMatrix::identity(0);
    }
    return res;
  }

  // Digit values in the order 0, 1, -1, 2, -2, ...
  std::vector<long> vals = {0};
  for (int v = 1; v <= coeff_bound; ++v) {
    vals.push_back(v);
    vals.push_back(-v);
  }
  const int base = static_cast<int>(vals.size());
  std::vector<int> digit(d, 0);
  IntMatrix x(r, r);

  auto bump = [&](int pos, long delta) {
    if (delta == 0) return;
    mpz_class dz(delta);
    const IntMatrix& m = basis[pos];
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (m.at(i, j) != 0)
          mpz_addmul(x.at(i, j).get_mpz_t(), dz.get_mpz_t(), m.at(i, j).get_mpz_t());
  };

  while (res.candidates_tried < max_candidates) {
    // Advance the odometer.
    int pos = 0;
    while (pos < d) {
      if (digit[pos] + 1 < base) {
        bump(pos, vals[digit[pos] + 1] - vals[digit[pos]]);
        ++digit[pos];
        break;
      }
      bump(pos, -vals[digit[pos]]);
      digit[pos] = 0;
      ++pos;
    }
    if (pos == d) {
      res.search_exhausted = true;
      break;
    }
    ++res.candidates_tried;

    if (!nonsingular_mod2(x)) continue;
    if (!det_pm1_mod_p(x, 3) || !det_pm1_mod_p(x, 5) || !det_pm1_mod_p(x, 7))
      continue;
    mpz_class det = x.determinant();
    if (det != 1 && det != -1) continue;
    for (int e = 0; e < a.group->order(); ++e)
      if (!(x * a.action[e] == b.action[e] * x))
        throw CheckFailed("search candidate fails to intertwine");
    res.kind = IsoSearchResult::Proven;
    res.witness = x;
    return res;
  }
  res.kind = IsoSearchResult::Unknown;
  return res;
}

IsoSearchResult equivariant_iso_search(const GLattice& a, const GLattice& b,
                                       int coeff_bound) {
  if (!same_group(a.group, b.group))
    throw GroupMismatch("isomorphism search over different groups");
  IsoSearchResult res;
  if (a.rank == b.rank && a.action == b.action) {
    res.kind = IsoSearchResult::Proven;
    res.witness = IntMatrix::identity(a.rank);
    res.detail = "identical action tables";
    return res;
  }
  if (a.rank != b.rank) {
    res.kind = IsoSearchResult::Refuted;
    res.detail = "ranks differ: " + std::to_string(a.rank) + " vs " +
                 std::to_string(b.rank);
    return res;
  }
  auto subs = subgroups(a.group);
  for (size_t si = 0; si < subs.size(); ++si) {
    int fa = fixed_basis(a, subs[si].members).cols();
    int fb = fixed_basis(b, subs[si].members).cols();
    if (fa != fb) {
      res.kind = IsoSearchResult::Refuted;
      res.detail = "fixed ranks differ at " + subgroup_label(subs[si]) + ": " +
                   std::to_string(fa) + " vs " + std::to_string(fb);
      return res;
    }
  }
  CohomologyProfile pa = h1_profile(a), pb = h1_profile(b);
  for (size_t si = 0; si < subs.size(); ++si)
    if (pa.entries[si] != pb.entries[si]) {
      res.kind = IsoSearchResult::Refuted;
      res.detail = "H1 differs at " + subgroup_label(subs[si]) + ": " +
                   pa.entries[si].to_string() + " vs " + pb.entries[si].to_string();
      return res;
    }
  CohomologyProfile da = h1_profile(dual(a)), db = h1_profile(dual(b));
  for (size_t si = 0; si < subs.size(); ++si)
    if (da.entries[si] != db.entries[si]) {
      res.kind = IsoSearchResult::Refuted;
      res.detail = "H1 of duals differs at " + subgroup_label(subs[si]) + ": " +
                   da.entries[si].to_string() + " vs " + db.entries[si].to_string();
      return res;
    }
  LatticeMorphismSpace sp = morphism_space(a, b);
  IsoSearchResult sr = unimodular_combination_search(sp.basis, a, b, coeff_bound,
                                                     kIsoSearchBudget);
  if (sr.kind == IsoSearchResult::Unknown && sr.detail.empty())
    sr.detail = sr.search_exhausted ? "bounded search exhausted"
                                    : "search budget reached";
  return sr;
}

}  // namespace glat
