#include "glat/resolutions.hpp"

#include <algorithm>
#include <sstream>

#include "glat/errors.hpp"
#include "glat/smith.hpp"

namespace glat {

namespace {

GLattice zero_lattice(const GroupPtr& g) {
  std::vector<IntMatrix> act(static_cast<size_t>(g->order()),
                             IntMatrix::identity(0));
  return lattice_from_element_matrices(g, std::move(act), "0");
}

// Smallest element of each left coset of u, in element-index order. Matches
// the basis order of permutation_lattice.
std::vector<int> coset_reps(const Subgroup& u) {
  const FiniteMatrixGroup& g = *u.parent;
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  std::vector<int> reps;
  for (int e = 0; e < g.order(); ++e) {
    if (seen[e]) continue;
    reps.push_back(e);
    for (int x : u.members) seen[g.mul[e][x]] = 1;
  }
  return reps;
}

// Factors are verified lattices; a block sum of homomorphisms needs no
// re-check, so this skips the full-table verification of direct_sum.
GLattice unchecked_direct_sum(const GLattice& a, const GLattice& b) {
  GLattice s;
  s.group = a.group;
  s.rank = a.rank + b.rank;
  s.action.resize(a.action.size());
  for (size_t e = 0; e < a.action.size(); ++e)
    s.action[e] = IntMatrix::block_diag(a.action[e], b.action[e]);
  return s;
}

void gen_multisets(size_t i, int remaining, const std::vector<int>& crank,
                   std::vector<int>& cur, std::vector<std::vector<int>>& out,
                   size_t cap, bool& complete) {
  if (out.size() >= cap) {
    complete = false;
    return;
  }
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (i == crank.size()) return;
  for (int c = 0; c * crank[i] <= remaining; ++c) {
    cur[i] = c;
    gen_multisets(i + 1, remaining - c * crank[i], crank, cur, out, cap,
                  complete);
    if (!complete) break;
  }
  cur[i] = 0;
}

// Multiplicity vectors over the coset ranks summing to total, in
// lexicographic order of counts; at most cap of them (complete reports
// whether the enumeration was cut off).
std::vector<std::vector<int>> multisets(int total,
                                        const std::vector<int>& crank,
                                        size_t cap, bool& complete) {
  std::vector<std::vector<int>> out;
  complete = true;
  if (total < 0) return out;
  std::vector<int> cur(crank.size(), 0);
  gen_multisets(0, total, crank, cur, out, cap, complete);
  return out;
}

std::string counts_description(const std::vector<int>& counts,
                               const std::vector<Subgroup>& reps) {
  std::vector<Subgroup> expanded;
  for (size_t v = 0; v < counts.size(); ++v)
    for (int c = 0; c < counts[v]; ++c) expanded.push_back(reps[v]);
  return summand_description(expanded);
}

}  // namespace

std::string summand_description(const std::vector<Subgroup>& summands) {
  if (summands.empty()) return "-";
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < summands.size()) {
    size_t j = i;
    while (j < summands.size() && summands[j].members == summands[i].members)
      ++j;
    if (!first) os << " + ";
    first = false;
    if (j - i > 1) os << (j - i) << " ";
    os << "Z[G/" << subgroup_label(summands[i]) << "]";
    i = j;
  }
  return os.str();
}

CoflasqueCover coflasque_cover(const GLattice& m) {
  const GroupPtr& g = m.group;
  std::vector<Subgroup> subs = subgroups(g);
  std::vector<int> rep_idx = subgroup_conjugacy_representatives(g, subs);

  CoflasqueCover out;
  out.m = m;
  GLattice p = zero_lattice(g);
  IntMatrix c(m.rank, 0);

  // Whole group first: summands for a large subgroup cover fixed points of
  // the smaller ones below it for free.
  for (auto it = rep_idx.rbegin(); it != rep_idx.rend(); ++it) {
    const Subgroup& u = subs[*it];
    IntMatrix fu = fixed_basis(m, u.members);
    if (fu.cols() == 0) continue;
    IntMatrix covered = c * fixed_basis(p, u.members);
    auto coords = solve_integer(fu, covered);
    if (!coords)
      throw CheckFailed("covered fixed points left the fixed lattice");
    SmithForm sf = smith_normal_form(*coords);
    IntMatrix w = unimodular_inverse(sf.left);
    std::vector<int> need;
    for (int i = 0; i < fu.cols(); ++i)
      if (!(i < sf.rank && sf.diag.at(i, i) == 1)) need.push_back(i);
    if (need.empty()) continue;
    std::vector<int> rc = coset_reps(u);
    GLattice block = permutation_lattice(g, u);
    for (int i : need) {
      // u-fixed generator; the identity coset of the new summand maps onto
      // it, so the quotient class it generates becomes covered.
      IntMatrix gen = fu * w.col(i);
      IntMatrix cols(m.rank, static_cast<int>(rc.size()));
      for (size_t j = 0; j < rc.size(); ++j) {
        IntMatrix v = m.act(rc[j]) * gen;
        for (int k = 0; k < m.rank; ++k)
          cols.at(k, static_cast<int>(j)) = v.at(k, 0);
      }
      c = c.hstack(cols);
      p = direct_sum(p, block);
      out.summands.push_back(u);
    }
  }

  p.name = summand_description(out.summands);
  p.basis_labels.clear();
  for (size_t si = 0; si < out.summands.size(); ++si)
    for (int r : coset_reps(out.summands[si]))
      p.basis_labels.push_back(std::to_string(si + 1) + ":[" +
                               g->word_name(r) + "]");
  out.p = std::move(p);
  out.cover = std::move(c);

  out.kernel_embedding = kernel_basis(out.cover);
  std::vector<IntMatrix> kact(static_cast<size_t>(g->order()));
  for (int e = 0; e < g->order(); ++e) {
    auto x = solve_integer(out.kernel_embedding,
                           out.p.action[e] * out.kernel_embedding);
    if (!x) throw CheckFailed("cover kernel is not stable under the action");
    kact[e] = std::move(*x);
  }
  out.kernel = lattice_from_element_matrices(
      g, std::move(kact),
      m.name.empty() ? "ker(cover)" : "ker(cover of " + m.name + ")");

  for (int e = 0; e < g->order(); ++e)
    if (!(out.cover * out.p.action[e] == m.action[e] * out.cover))
      throw CheckFailed("cover is not equivariant");
  for (const Subgroup& v : subs) {
    IntMatrix fm = fixed_basis(m, v.members);
    IntMatrix cov = out.cover * fixed_basis(out.p, v.members);
    if (!quotient_structure(fm, cov).trivial())
      throw CheckFailed("cover misses fixed points of " + subgroup_label(v));
  }
  FlasqueCheck cf = is_coflasque(out.kernel);
  if (!cf.holds)
    throw CheckFailed("cover kernel has nontrivial H1 at " +
                      subgroup_label(*cf.witness));
  return out;
}

FlasqueCheck is_coflasque(const GLattice& n) {
  CohomologyProfile prof = h1_profile(n);
  FlasqueCheck out;
  for (size_t i = 0; i < prof.entries.size(); ++i)
    if (!prof.entries[i].trivial()) {
      out.holds = false;
      out.witness = prof.subgroups[i];
      out.obstruction = prof.entries[i];
      return out;
    }
  out.holds = true;
  return out;
}

FlasqueCheck is_flasque(const GLattice& n) { return is_coflasque(dual(n)); }

FlasqueResolution flasque_resolution(const GLattice& m) {
  FlasqueResolution r;
  r.m = m;
  if (is_permutation_in_basis(m)) {
    r.s = m;
    r.f = zero_lattice(m.group);
    r.inject = IntMatrix::identity(m.rank);
    r.project = IntMatrix(0, m.rank);
    r.note = "already permutation in the given basis";
  } else {
    CoflasqueCover cc = coflasque_cover(dual(m));
    if (dual(cc.p).action != cc.p.action)
      throw CheckFailed("coset lattice is not self-dual");
    r.s = cc.p;
    r.f = dual(cc.kernel);
    r.f.name = m.name.empty() ? "F" : "F(" + m.name + ")";
    r.f.basis_labels.clear();
    if (dual(r.f).action != cc.kernel.action)
      throw CheckFailed("double dual drifted");
    r.inject = cc.cover.transpose();
    r.project = cc.kernel_embedding.transpose();
    r.summands = cc.summands;
    r.note = "built from the coflasque cover of the dual";
  }

  if (!is_permutation_in_basis(r.s))
    throw CheckFailed("middle term is not permutation");
  if (m.rank + r.f.rank != r.s.rank) throw CheckFailed("ranks do not add up");
  for (int e = 0; e < m.group->order(); ++e) {
    if (!(r.inject * m.action[e] == r.s.action[e] * r.inject))
      throw CheckFailed("injection is not equivariant");
    if (!(r.project * r.s.action[e] == r.f.action[e] * r.project))
      throw CheckFailed("projection is not equivariant");
  }
  if (!(r.project * r.inject).is_zero())
    throw CheckFailed("composite of the resolution maps is nonzero");
  SmithForm si = smith_normal_form(r.inject);
  if (si.rank != m.rank) throw CheckFailed("injection has a kernel");
  for (int i = 0; i < si.rank; ++i)
    if (si.diag.at(i, i) != 1)
      throw CheckFailed("image of the injection is not saturated");
  SmithForm sp = smith_normal_form(r.project);
  if (sp.rank != r.f.rank) throw CheckFailed("projection drops rank");
  for (int i = 0; i < sp.rank; ++i)
    if (sp.diag.at(i, i) != 1)
      throw CheckFailed("projection is not surjective");
  if (!(hermite_column(r.inject) == kernel_basis(r.project)))
    throw CheckFailed("image of the injection is not the kernel of the projection");
  return r;
}

SearchRecord padded_iso_search(const GLattice& a, const GLattice& b,
                               int rank_bound, int coeff_bound) {
  if (!same_group(a.group, b.group))
    throw GroupMismatch("padded search needs both lattices over one group");
  const GroupPtr& g = a.group;

  SearchRecord rec;
  rec.rank_bound = rank_bound;
  rec.coeff_bound = coeff_bound;
  rec.left_padding = "-";
  rec.right_padding = "-";

  std::vector<Subgroup> subs = subgroups(g);
  std::vector<int> rep_idx = subgroup_conjugacy_representatives(g, subs);
  const int nr = static_cast<int>(rep_idx.size());
  std::vector<Subgroup> reps;
  reps.reserve(rep_idx.size());
  for (int i : rep_idx) reps.push_back(subs[i]);

  std::vector<GLattice> cos(nr);
  std::vector<int> crank(nr);
  std::vector<std::vector<int>> rc(nr);
  for (int v = 0; v < nr; ++v) {
    cos[v] = permutation_lattice(g, reps[v]);
    crank[v] = cos[v].rank;
    rc[v] = coset_reps(reps[v]);
  }

  GLattice da = dual(a);
  std::vector<int> fa(nr), fb(nr);
  std::vector<IntMatrix> fad(nr), fbf(nr);
  std::vector<std::vector<IntMatrix>> fcos(nr, std::vector<IntMatrix>(nr));
  std::vector<std::vector<int>> fc(nr, std::vector<int>(nr));
  for (int u = 0; u < nr; ++u) {
    fa[u] = fixed_basis(a, reps[u].members).cols();
    fbf[u] = fixed_basis(b, reps[u].members);
    fb[u] = fbf[u].cols();
    fad[u] = fixed_basis(da, reps[u].members);
    for (int v = 0; v < nr; ++v) {
      fcos[u][v] = fixed_basis(cos[v], reps[u].members);
      fc[u][v] = fcos[u][v].cols();
    }
  }

  // Equivariant-map bases between the building blocks. Maps out of a coset
  // lattice Z[G/U] biject with u-fixed vectors of the target (the image of
  // the identity coset); maps into Z[G/V] biject with v-fixed dual vectors
  // (the coefficient functional of the identity coset).
  std::vector<IntMatrix> hom_ab = morphism_space(a, b).basis;
  std::vector<std::vector<IntMatrix>> hom_a_cos(nr), hom_cos_b(nr);
  std::vector<std::vector<std::vector<IntMatrix>>> hom_cos_cos(
      nr, std::vector<std::vector<IntMatrix>>(nr));
  for (int v = 0; v < nr; ++v)
    for (int col = 0; col < fad[v].cols(); ++col) {
      IntMatrix x(crank[v], a.rank);
      for (size_t cc = 0; cc < rc[v].size(); ++cc) {
        IntMatrix rowv =
            fad[v].col(col).transpose() * a.act(g->inv[rc[v][cc]]);
        for (int j = 0; j < a.rank; ++j)
          x.at(static_cast<int>(cc), j) = rowv.at(0, j);
      }
      hom_a_cos[v].push_back(std::move(x));
    }
  for (int u = 0; u < nr; ++u)
    for (int col = 0; col < fbf[u].cols(); ++col) {
      IntMatrix x(b.rank, crank[u]);
      for (size_t cc = 0; cc < rc[u].size(); ++cc) {
        IntMatrix colv = b.act(rc[u][cc]) * fbf[u].col(col);
        for (int i = 0; i < b.rank; ++i)
          x.at(i, static_cast<int>(cc)) = colv.at(i, 0);
      }
      hom_cos_b[u].push_back(std::move(x));
    }
  for (int u = 0; u < nr; ++u)
    for (int v = 0; v < nr; ++v)
      for (int col = 0; col < fcos[u][v].cols(); ++col) {
        IntMatrix x(crank[v], crank[u]);
        for (size_t cc = 0; cc < rc[u].size(); ++cc) {
          IntMatrix colv = cos[v].act(rc[u][cc]) * fcos[u][v].col(col);
          for (int i = 0; i < crank[v]; ++i)
            x.at(i, static_cast<int>(cc)) = colv.at(i, 0);
        }
        hom_cos_cos[u][v].push_back(std::move(x));
      }

  struct Blk {
    int rep;  // -1 = the core lattice
    int off;
  };
  bool all_exhausted = true;
  bool stopped = false;
  for (int t = std::max(a.rank, b.rank); t <= rank_bound && !stopped; ++t) {
    bool pc = true, qc = true;
    auto ps = multisets(t - a.rank, crank,
                        static_cast<size_t>(kPadPairBudget) + 1, pc);
    auto qs = multisets(t - b.rank, crank,
                        static_cast<size_t>(kPadPairBudget) + 1, qc);
    if (!pc || !qc) all_exhausted = false;
    for (const auto& pcounts : ps) {
      if (stopped) break;
      for (const auto& qcounts : qs) {
        if (rec.pairs_tried >= rec.pair_budget) {
          all_exhausted = false;
          stopped = true;
          break;
        }
        ++rec.pairs_tried;

        bool possible = true;
        for (int u = 0; u < nr && possible; ++u) {
          long l = fa[u], r = fb[u];
          for (int v = 0; v < nr; ++v) {
            l += static_cast<long>(pcounts[v]) * fc[u][v];
            r += static_cast<long>(qcounts[v]) * fc[u][v];
          }
          possible = (l == r);
        }
        if (!possible) continue;

        GLattice A = a, B = b;
        std::vector<Blk> ablocks = {{-1, 0}}, bblocks = {{-1, 0}};
        for (int v = 0; v < nr; ++v)
          for (int cnt = 0; cnt < pcounts[v]; ++cnt) {
            ablocks.push_back({v, A.rank});
            A = unchecked_direct_sum(A, cos[v]);
          }
        for (int v = 0; v < nr; ++v)
          for (int cnt = 0; cnt < qcounts[v]; ++cnt) {
            bblocks.push_back({v, B.rank});
            B = unchecked_direct_sum(B, cos[v]);
          }

        std::vector<IntMatrix> basis;
        for (const Blk& sb : ablocks)
          for (const Blk& tb : bblocks) {
            const std::vector<IntMatrix>& part =
                sb.rep < 0 && tb.rep < 0 ? hom_ab
                : sb.rep < 0             ? hom_a_cos[tb.rep]
                : tb.rep < 0             ? hom_cos_b[sb.rep]
                                         : hom_cos_cos[sb.rep][tb.rep];
            for (const IntMatrix& x : part) {
              IntMatrix full = IntMatrix::zero(B.rank, A.rank);
              for (int i = 0; i < x.rows(); ++i)
                for (int j = 0; j < x.cols(); ++j)
                  full.at(tb.off + i, sb.off + j) = x.at(i, j);
              basis.push_back(std::move(full));
            }
          }

        long remaining = rec.total_budget - rec.candidates_tried;
        if (remaining <= 0) {
          all_exhausted = false;
          stopped = true;
          break;
        }
        IsoSearchResult sr = unimodular_combination_search(
            basis, A, B, coeff_bound, std::min(rec.pair_cap, remaining));
        rec.candidates_tried += std::max(1L, sr.candidates_tried);
        if (sr.kind == IsoSearchResult::Proven) {
          rec.outcome = SearchRecord::Proven;
          rec.witness = sr.witness;
          rec.left_padding = counts_description(pcounts, reps);
          rec.right_padding = counts_description(qcounts, reps);
          rec.detail =
              "unimodular equivariant map at total rank " + std::to_string(t);
          return rec;
        }
        if (!sr.search_exhausted) all_exhausted = false;
      }
    }
  }
  rec.exhausted = all_exhausted;
  rec.detail = rec.pairs_tried == 0 ? "no padding pairs within the rank bound"
               : all_exhausted      ? "all padding pairs exhausted"
                                    : "search budget reached";
  return rec;
}

ObstructionReport stably_permutation_verdict(const GLattice& n,
                                             int rank_bound, int coeff_bound) {
  ObstructionReport rep;
  rep.lattice_name = n.name.empty() ? "lattice" : n.name;
  rep.profile = h1_profile(n);
  rep.profile_dual = h1_profile(dual(n));
  // Largest subgroup first, so the whole-group obstruction is the one
  // reported when several exist.
  for (size_t i = rep.profile.entries.size(); i-- > 0;) {
    if (!rep.profile.entries[i].trivial()) {
      rep.verdict = ObstructionReport::NotStablyPermutation;
      rep.witness = rep.profile.subgroups[i];
      rep.obstruction = rep.profile.entries[i];
      rep.witness_on_dual = false;
      return rep;
    }
    if (!rep.profile_dual.entries[i].trivial()) {
      rep.verdict = ObstructionReport::NotStablyPermutation;
      rep.witness = rep.profile_dual.subgroups[i];
      rep.obstruction = rep.profile_dual.entries[i];
      rep.witness_on_dual = true;
      return rep;
    }
  }
  rep.verdict = ObstructionReport::ConsistentWithStablyPermutation;
  if (rank_bound < 0) rank_bound = n.rank + 8;
  if (is_permutation_in_basis(n)) {
    SearchRecord sr;
    sr.rank_bound = rank_bound;
    sr.coeff_bound = coeff_bound;
    sr.outcome = SearchRecord::Proven;
    sr.witness = IntMatrix::identity(n.rank);
    sr.detail = "permutation in the given basis, no padding needed";
    rep.bounded_search = std::move(sr);
    return rep;
  }
  rep.bounded_search =
      padded_iso_search(n, zero_lattice(n.group), rank_bound, coeff_bound);
  return rep;
}

SimilarityReport similarity_verdict(const GLattice& a, const GLattice& b_in,
                                    int rank_bound, int coeff_bound) {
  SimilarityReport rep;
  GLattice b = change_group(b_in, a.group);
  if (!same_group(a.group, b_in.group))
    rep.detail = "groups identified through equally named generators";

  if (a.rank == b.rank && a.action == b.action) {
    rep.verdict = SimilarityReport::Similar;
    SearchRecord sr;
    sr.rank_bound = rank_bound < 0 ? a.rank + 8 : rank_bound;
    sr.coeff_bound = coeff_bound;
    sr.outcome = SearchRecord::Proven;
    sr.witness = IntMatrix::identity(a.rank);
    sr.detail = "identical action tables";
    rep.search = std::move(sr);
    return rep;
  }

  CohomologyProfile pa = h1_profile(a), pb = h1_profile(b);
  CohomologyProfile pad = h1_profile(dual(a)), pbd = h1_profile(dual(b));
  // Largest subgroup first, matching the obstruction scan.
  for (size_t i = pa.entries.size(); i-- > 0;) {
    if (pa.entries[i] != pb.entries[i]) {
      rep.verdict = SimilarityReport::NotSimilar;
      rep.witness = pa.subgroups[i];
      rep.invariant_a = pa.entries[i];
      rep.invariant_b = pb.entries[i];
      rep.witness_on_dual = false;
      return rep;
    }
    if (pad.entries[i] != pbd.entries[i]) {
      rep.verdict = SimilarityReport::NotSimilar;
      rep.witness = pa.subgroups[i];
      rep.invariant_a = pad.entries[i];
      rep.invariant_b = pbd.entries[i];
      rep.witness_on_dual = true;
      return rep;
    }
  }

  if (rank_bound < 0) rank_bound = std::max(a.rank, b.rank) + 8;
  SearchRecord sr = padded_iso_search(a, b, rank_bound, coeff_bound);
  rep.verdict = sr.outcome == SearchRecord::Proven ? SimilarityReport::Similar
                                                   : SimilarityReport::Unknown;
  rep.search = std::move(sr);
  return rep;
}

}  // namespace glat
