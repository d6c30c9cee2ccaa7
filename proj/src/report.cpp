#include <glat/report.hpp>

#include <glat/errors.hpp>
#include <glat/gallery.hpp>
#include <glat/group.hpp>

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

namespace glat {

namespace {

std::string bstr(bool b) { return b ? "true" : "false"; }

int element_order(const GroupPtr& g, int e) {
  int k = e, ord = 1;
  while (k != 0) {
    k = g->mul[k][e];
    ++ord;
  }
  return ord;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::string pad_index(int i, int count) {
  size_t width = std::to_string(count > 0 ? count - 1 : 0).size();
  std::string s = std::to_string(i);
  return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

// Sorted key=value lines.
struct KvDoc {
  std::vector<std::string> lines;
  void add(const std::string& k, const std::string& v) {
    lines.push_back(k + "=" + v);
  }
  std::string str() const {
    std::vector<std::string> s = lines;
    std::sort(s.begin(), s.end());
    std::string out;
    for (const auto& l : s) out += l + "\n";
    return out;
  }
};

// Left-aligned columns separated by two spaces.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> w;
  for (const auto& r : rows)
    for (size_t j = 0; j < r.size(); ++j) {
      if (j >= w.size()) w.push_back(0);
      w[j] = std::max(w[j], r[j].size());
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (size_t j = 0; j < r.size(); ++j) {
      line += r[j];
      if (j + 1 < r.size())
        line += std::string(w[j] - r[j].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::vector<std::vector<std::string>> profile_rows(
    const CohomologyProfile& p, const CohomologyProfile* dual) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head = {"#", "subgroup", "|U|", "H1(N)"};
  if (dual) head.push_back("H1(N*)");
  rows.push_back(std::move(head));
  int count = static_cast<int>(p.subgroups.size());
  for (int i = 0; i < count; ++i) {
    std::vector<std::string> r = {
        pad_index(i, count), subgroup_label(p.subgroups[i]),
        std::to_string(p.subgroups[i].members.size()),
        p.entries[i].to_string()};
    if (dual) r.push_back(dual->entries[i].to_string());
    rows.push_back(std::move(r));
  }
  return rows;
}

void kv_profile(KvDoc& kv, const CohomologyProfile& p,
                const CohomologyProfile* dual) {
  int count = static_cast<int>(p.subgroups.size());
  for (int i = 0; i < count; ++i) {
    std::string base = "profile.U" + pad_index(i, count);
    kv.add(base + ".generators", subgroup_label(p.subgroups[i]));
    kv.add(base + ".order",
           std::to_string(p.subgroups[i].members.size()));
    kv.add(base + ".h1", p.entries[i].to_string());
    if (dual) kv.add(base + ".h1dual", dual->entries[i].to_string());
  }
}

void human_search(std::ostringstream& os, const SearchRecord& s) {
  os << "== search ==\n";
  os << "rank bound = " << s.rank_bound << "\n";
  os << "coeff bound = " << s.coeff_bound << "\n";
  os << "total budget = " << s.total_budget << "\n";
  os << "pair cap = " << s.pair_cap << "\n";
  os << "pair budget = " << s.pair_budget << "\n";
  os << "pairs tried = " << s.pairs_tried << "\n";
  os << "candidates tried = " << s.candidates_tried << "\n";
  os << "exhausted = " << bstr(s.exhausted) << "\n";
  os << "outcome = " << (s.outcome == SearchRecord::Proven ? "Proven" : "Unknown") << "\n";
  os << "left padding = " << s.left_padding << "\n";
  os << "right padding = " << s.right_padding << "\n";
  if (!s.detail.empty()) os << "detail = " << s.detail << "\n";
  if (s.witness) os << "witness = " << s.witness->to_string() << "\n";
}

void kv_search(KvDoc& kv, const SearchRecord& s) {
  kv.add("search.rank_bound", std::to_string(s.rank_bound));
  kv.add("search.coeff_bound", std::to_string(s.coeff_bound));
  kv.add("search.total_budget", std::to_string(s.total_budget));
  kv.add("search.pair_cap", std::to_string(s.pair_cap));
  kv.add("search.pair_budget", std::to_string(s.pair_budget));
  kv.add("search.pairs_tried", std::to_string(s.pairs_tried));
  kv.add("search.candidates_tried", std::to_string(s.candidates_tried));
  kv.add("search.exhausted", bstr(s.exhausted));
  kv.add("search.outcome",
         s.outcome == SearchRecord::Proven ? "Proven" : "Unknown");
  kv.add("search.left_padding", s.left_padding);
  kv.add("search.right_padding", s.right_padding);
  if (!s.detail.empty()) kv.add("search.detail", s.detail);
  if (s.witness) kv.add("search.witness", s.witness->to_string());
}

const char* kNotStablyNote =
    "the witness subgroup has nontrivial first cohomology, which no stably "
    "permutation lattice admits; this verdict is conclusive";
const char* kConsistentNote =
    "all first cohomology vanishes on the lattice and its dual; this is "
    "necessary but not sufficient, so the verdict is not a proof of stable "
    "permutation equivalence";

std::string action_of_generator(const GLattice& n, size_t i) {
  int e = n.group->index_of(n.group->generator_matrices[i]);
  return n.action[e].to_string();
}

}  // namespace

std::string render_show(const GLattice& n, OutputFormat f) {
  std::vector<std::string> names = n.group->generator_names;
  std::vector<std::string> orders;
  for (size_t i = 0; i < names.size(); ++i) {
    int e = n.group->index_of(n.group->generator_matrices[i]);
    orders.push_back(std::to_string(element_order(n.group, e)));
  }
  if (f == OutputFormat::Kv) {
    KvDoc kv;
    kv.add("name", n.name);
    kv.add("rank", std::to_string(n.rank));
    kv.add("group.degree", std::to_string(n.group->degree));
    kv.add("group.order", std::to_string(n.group->order()));
    kv.add("generators", join(names, ","));
    kv.add("generator_orders", join(orders, ","));
    if (!n.basis_labels.empty()) kv.add("basis", join(n.basis_labels, ","));
    for (size_t i = 0; i < names.size(); ++i)
      kv.add("action." + names[i], action_of_generator(n, i));
    return kv.str();
  }
  std::ostringstream os;
  os << "name = " << n.name << "\n";
  os << "rank = " << n.rank << "\n";
  os << "group degree = " << n.group->degree << "\n";
  os << "group order = " << n.group->order() << "\n";
  os << "generators = " << join(names, ", ") << "\n";
  os << "generator orders = " << join(orders, ", ") << "\n";
  if (!n.basis_labels.empty())
    os << "basis = " << join(n.basis_labels, ", ") << "\n";
  for (size_t i = 0; i < names.size(); ++i)
    os << "action " << names[i] << " = " << action_of_generator(n, i) << "\n";
  return os.str();
}

std::string render_cohomology(const GLattice& n, bool all_subgroups,
                              int subgroup_index, bool with_dual,
                              OutputFormat f) {
  if (subgroup_index >= 0) {
    std::vector<Subgroup> subs = subgroups(n.group);
    if (subgroup_index >= static_cast<int>(subs.size()))
      throw InputError("subgroup index out of range (0.." +
                       std::to_string(subs.size() - 1) + ")");
    const Subgroup& u = subs[subgroup_index];
    FiniteAbelianGroup a = h1(restrict(n, u));
    FiniteAbelianGroup b;
    if (with_dual) b = h1(restrict(dual(n), u));
    if (f == OutputFormat::Kv) {
      KvDoc kv;
      kv.add("lattice", n.name);
      kv.add("subgroup.index", std::to_string(subgroup_index));
      kv.add("subgroup.generators", subgroup_label(u));
      kv.add("subgroup.order", std::to_string(u.members.size()));
      kv.add("h1", a.to_string());
      if (with_dual) kv.add("h1.dual", b.to_string());
      return kv.str();
    }
    std::ostringstream os;
    os << "lattice = " << n.name << "\n";
    os << "subgroup " << subgroup_index << " = " << subgroup_label(u) << "\n";
    os << "|U| = " << u.members.size() << "\n";
    os << "H1(U, N) = " << a.to_string() << "\n";
    if (with_dual) os << "H1(U, N*) = " << b.to_string() << "\n";
    return os.str();
  }

  CohomologyProfile prof, dprof;
  FiniteAbelianGroup full, full_dual;
  if (all_subgroups) {
    prof = h1_profile(n);
    full = prof.entries.back();
    if (with_dual) {
      dprof = h1_profile(dual(n));
      full_dual = dprof.entries.back();
    }
  } else {
    full = h1(n);
    if (with_dual) full_dual = h1(dual(n));
  }

  if (f == OutputFormat::Kv) {
    KvDoc kv;
    kv.add("lattice", n.name);
    kv.add("group.order", std::to_string(n.group->order()));
    kv.add("h1", full.to_string());
    if (with_dual) kv.add("h1.dual", full_dual.to_string());
    if (all_subgroups) kv_profile(kv, prof, with_dual ? &dprof : nullptr);
    return kv.str();
  }
  std::ostringstream os;
  os << "lattice = " << n.name << "\n";
  os << "group order = " << n.group->order() << "\n";
  if (all_subgroups)
    os << table(profile_rows(prof, with_dual ? &dprof : nullptr));
  os << "H1(W) = " << full.to_string() << "\n";
  if (with_dual) os << "H1(W, dual) = " << full_dual.to_string() << "\n";
  return os.str();
}

std::string render_flasque_summary(const GLattice& m,
                                   const FlasqueResolution& r,
                                   OutputFormat f) {
  std::string summ = summand_description(r.summands);
  if (f == OutputFormat::Kv) {
    KvDoc kv;
    kv.add("lattice", m.name);
    kv.add("rank", std::to_string(m.rank));
    kv.add("s.rank", std::to_string(r.s.rank));
    kv.add("s.summands", summ);
    kv.add("f.rank", std::to_string(r.f.rank));
    kv.add("exact", "verified");
    if (!r.note.empty()) kv.add("note", r.note);
    return kv.str();
  }
  std::ostringstream os;
  os << "lattice = " << m.name << "\n";
  os << "rank = " << m.rank << "\n";
  os << "s rank = " << r.s.rank << "\n";
  os << "s summands = " << summ << "\n";
  os << "f rank = " << r.f.rank << "\n";
  os << "exact = verified\n";
  if (!r.note.empty()) os << "note = " << r.note << "\n";
  return os.str();
}

std::string render_check_permutation(const GLattice& n, OutputFormat f) {
  bool ok = is_permutation_in_basis(n);
  if (f == OutputFormat::Kv) {
    KvDoc kv;
    kv.add("lattice", n.name);
    kv.add("permutation_in_basis", bstr(ok));
    return kv.str();
  }
  std::ostringstream os;
  os << "lattice = " << n.name << "\n";
  os << "permutation in basis = " << bstr(ok) << "\n";
  return os.str();
}

std::string render_flasque_check(const GLattice& n, const FlasqueCheck& c,
                                 bool flasque_side, OutputFormat f) {
  std::string label = flasque_side ? "flasque" : "coflasque";
  if (f == OutputFormat::Kv) {
    KvDoc kv;
    kv.add("lattice", n.name);
    kv.add(label, bstr(c.holds));
    if (c.witness) {
      kv.add("witness", subgroup_label(*c.witness));
      kv.add("obstruction", c.obstruction.to_string());
    }
    return kv.str();
  }
  std::ostringstream os;
  os << "lattice = " << n.name << "\n";
  os << label << " = " << bstr(c.holds) << "\n";
  if (c.witness) {
    os << "witness subgroup = " << subgroup_label(*c.witness) << "\n";
    os << "obstruction = " << c.obstruction.to_string() << "\n";
  }
  return os.str();
}

std::string render_obstruction(const GLattice& n, const ObstructionReport& r,
                               OutputFormat f) {
  bool refuted = r.verdict == ObstructionReport::NotStablyPermutation;
  std::string verdict =
      refuted ? "NotStablyPermutation" : "ConsistentWithStablyPermutation";
  if (f == OutputFormat::Kv) {
    KvDoc kv;
    kv.add("lattice", r.lattice_name);
    kv.add("rank", std::to_string(n.rank));
    kv.add("group.order", std::to_string(n.group->order()));
    kv_profile(kv, r.profile, &r.profile_dual);
    kv.add("verdict", verdict);
    kv.add("verdict.note", refuted ? kNotStablyNote : kConsistentNote);
    if (r.witness) {
      kv.add("verdict.witness", subgroup_label(*r.witness));
      kv.add("verdict.witness_side", r.witness_on_dual ? "dual" : "lattice");
      kv.add("verdict.obstruction", r.obstruction.to_string());
    }
    if (r.bounded_search) kv_search(kv, *r.bounded_search);
    return kv.str();
  }
  std::ostringstream os;
  os << "== lattice ==\n";
  os << "name = " << r.lattice_name << "\n";
  os << "rank = " << n.rank << "\n";
  os << "group order = " << n.group->order() << "\n";
  os << "== profile ==\n";
  os << table(profile_rows(r.profile, &r.profile_dual));
  os << "== verdict ==\n";
  os << "verdict = " << verdict << "\n";
  if (r.witness) {
    os << "witness subgroup = " << subgroup_label(*r.witness) << "\n";
    os << "witness side = " << (r.witness_on_dual ? "dual" : "lattice")
       << "\n";
    os << "obstruction = " << r.obstruction.to_string() << "\n";
  }
  os << "note = " << (refuted ? kNotStablyNote : kConsistentNote) << "\n";
  if (r.bounded_search) human_search(os, *r.bounded_search);
  return os.str();
}

std::string render_similarity(const GLattice& a, const GLattice& b,
                              const SimilarityReport& r, OutputFormat f) {
  std::string verdict = r.verdict == SimilarityReport::Similar ? "Similar"
                        : r.verdict == SimilarityReport::NotSimilar
                            ? "NotSimilar"
                            : "Unknown";
  if (f == OutputFormat::Kv) {
    KvDoc kv;
    kv.add("a", a.name);
    kv.add("a.rank", std::to_string(a.rank));
    kv.add("b", b.name);
    kv.add("b.rank", std::to_string(b.rank));
    kv.add("group.order", std::to_string(a.group->order()));
    kv.add("verdict", verdict);
    if (!r.detail.empty()) kv.add("detail", r.detail);
    if (r.witness) {
      kv.add("verdict.witness", subgroup_label(*r.witness));
      kv.add("verdict.witness_side", r.witness_on_dual ? "dual" : "lattice");
      kv.add("verdict.h1.a", r.invariant_a.to_string());
      kv.add("verdict.h1.b", r.invariant_b.to_string());
    }
    if (r.search) kv_search(kv, *r.search);
    return kv.str();
  }
  std::ostringstream os;
  os << "== lattices ==\n";
  os << "a = " << a.name << " (rank " << a.rank << ")\n";
  os << "b = " << b.name << " (rank " << b.rank << ")\n";
  os << "group order = " << a.group->order() << "\n";
  os << "== verdict ==\n";
  os << "verdict = " << verdict << "\n";
  if (r.witness) {
    os << "witness subgroup = " << subgroup_label(*r.witness) << "\n";
    os << "witness side = " << (r.witness_on_dual ? "dual" : "lattice")
       << "\n";
    os << "H1(a) = " << r.invariant_a.to_string() << "\n";
    os << "H1(b) = " << r.invariant_b.to_string() << "\n";
  }
  if (!r.detail.empty()) os << "detail = " << r.detail << "\n";
  if (r.search) human_search(os, *r.search);
  return os.str();
}

std::string theorem_b_report(OutputFormat f) {
  GLattice pi = torus_pi_lattice();
  GLattice w = torus_w_lattice();
  GLattice n1 = trepalin_lattice(1);
  GLattice n2 = trepalin_lattice(2);

  FiniteAbelianGroup h1pi = h1(pi);
  IsoSearchResult iso = equivariant_iso_search(pi, augmentation_ideal(pi.group));
  std::string iso_kind = iso.kind == IsoSearchResult::Proven ? "Proven"
                         : iso.kind == IsoSearchResult::Refuted ? "Refuted"
                                                                : "Unknown";

  FlasqueResolution fr = flasque_resolution(w);
  ObstructionReport wrep = stably_permutation_verdict(fr.f);
  std::string wverdict = wrep.verdict == ObstructionReport::NotStablyPermutation
                             ? "NotStablyPermutation"
                             : "ConsistentWithStablyPermutation";
  std::string woutcome =
      wrep.bounded_search
          ? (wrep.bounded_search->outcome == SearchRecord::Proven ? "Proven"
                                                                  : "Unknown")
          : "-";
  const char* external_note =
      "the consistent verdict is not a proof of stable permutation "
      "equivalence; the known negative answer for this lattice rests on an "
      "external classification and is not certified here";

  ObstructionReport rep1 = stably_permutation_verdict(n1);
  FiniteAbelianGroup h1n1 = rep1.profile.entries.back();
  FiniteAbelianGroup h1n2 = h1(n2);
  SimilarityReport sim = similarity_verdict(n1, n2);
  std::string simv = sim.verdict == SimilarityReport::Similar ? "Similar"
                     : sim.verdict == SimilarityReport::NotSimilar
                         ? "NotSimilar"
                         : "Unknown";
  bool cons1 = trepalin_sigma_s_consistency(1);
  bool cons2 = trepalin_sigma_s_consistency(2);
  bool cons3 = trepalin_sigma_s_consistency(3);

  if (f == OutputFormat::Kv) {
    KvDoc kv;
    kv.add("torus_pi.h1", h1pi.to_string());
    kv.add("torus_pi.augmentation_ideal_iso", iso_kind);
    kv.add("torus_w.s.rank", std::to_string(fr.s.rank));
    kv.add("torus_w.s.summands", summand_description(fr.summands));
    kv.add("torus_w.f.rank", std::to_string(fr.f.rank));
    kv.add("torus_w.f.profile_trivial", bstr(wrep.profile.all_trivial()));
    kv.add("torus_w.f.profile_dual_trivial",
           bstr(wrep.profile_dual.all_trivial()));
    kv.add("torus_w.f.verdict", wverdict);
    kv.add("torus_w.f.search.outcome", woutcome);
    kv.add("torus_w.note", external_note);
    kv.add("n1.h1", h1n1.to_string());
    kv.add("n1.verdict", rep1.verdict ==
                                 ObstructionReport::NotStablyPermutation
                             ? "NotStablyPermutation"
                             : "ConsistentWithStablyPermutation");
    if (rep1.witness) {
      kv.add("n1.witness", subgroup_label(*rep1.witness));
      kv.add("n1.obstruction", rep1.obstruction.to_string());
    }
    kv.add("n2.h1", h1n2.to_string());
    kv.add("similar.n1_n2", simv);
    if (sim.witness) kv.add("similar.witness", subgroup_label(*sim.witness));
    kv.add("consistency.n1", bstr(cons1));
    kv.add("consistency.n2", bstr(cons2));
    kv.add("consistency.n3", bstr(cons3));
    return kv.str();
  }

  std::ostringstream os;
  os << "== torus_pi ==\n";
  os << "H1(W) = " << h1pi.to_string() << "\n";
  os << "augmentation ideal isomorphism = " << iso_kind << "\n";
  os << "== torus_w ==\n";
  os << "s rank = " << fr.s.rank << "\n";
  os << "s summands = " << summand_description(fr.summands) << "\n";
  os << "f rank = " << fr.f.rank << "\n";
  os << "f H1 profile all trivial = " << bstr(wrep.profile.all_trivial())
     << "\n";
  os << "f dual H1 profile all trivial = "
     << bstr(wrep.profile_dual.all_trivial()) << "\n";
  os << "f verdict = " << wverdict << "\n";
  os << "f search outcome = " << woutcome << "\n";
  os << "note = " << external_note << "\n";
  os << "== N_1 ==\n";
  os << "H1(W) = " << h1n1.to_string() << "\n";
  os << "verdict = "
     << (rep1.verdict == ObstructionReport::NotStablyPermutation
             ? "NotStablyPermutation"
             : "ConsistentWithStablyPermutation")
     << "\n";
  if (rep1.witness) {
    os << "witness subgroup = " << subgroup_label(*rep1.witness) << "\n";
    os << "obstruction = " << rep1.obstruction.to_string() << "\n";
  }
  os << "== family ==\n";
  os << "H1(W) for N_2 = " << h1n2.to_string() << "\n";
  os << "similarity N_1 vs N_2 = " << simv << "\n";
  if (sim.witness)
    os << "witness subgroup = " << subgroup_label(*sim.witness) << "\n";
  os << "section consistency n=1,2,3 = " << bstr(cons1) << ", " << bstr(cons2)
     << ", " << bstr(cons3) << "\n";
  return os.str();
}

}  // namespace glat
