#include "glat/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "glat/errors.hpp"

namespace glat {

int FiniteMatrixGroup::index_of(const IntMatrix& m) const {
  auto it = index.find(m);
  return it == index.end() ? -1 : it->second;
}

std::string FiniteMatrixGroup::word_name(int e) const {
  const auto& w = element_words[e];
  if (w.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i)
    os << (i ? "*" : "") << generator_names[w[i]];
  return os.str();
}

bool FiniteMatrixGroup::is_abelian() const {
  const int n = order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mul[i][j] != mul[j][i]) return false;
  return true;
}

std::vector<int> FiniteMatrixGroup::generator_element_indices() const {
  std::vector<int> out;
  for (const auto& m : generator_matrices) {
    int e = index_of(m);
    if (e <= 0) continue;  // identity contributes nothing to words
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

GroupPtr generate(int degree,
                  const std::vector<std::pair<std::string, IntMatrix>>& gens,
                  int element_cap) {
  auto g = std::make_shared<FiniteMatrixGroup>();
  g->degree = degree;
  for (const auto& [name, m] : gens) {
    if (m.rows() != degree || m.cols() != degree)
      throw InputError("generator '" + name + "' is not " +
                       std::to_string(degree) + "x" + std::to_string(degree));
    mpz_class det = m.determinant();
    if (det != 1 && det != -1)
      throw NotUnimodular("generator '" + name + "' has determinant " +
                          det.get_str());
    g->generator_names.push_back(name);
    g->generator_matrices.push_back(m);
  }

  // Breadth-first closure; discovery order sorts words by (length, lex).
  IntMatrix id = IntMatrix::identity(degree);
  g->elements.push_back(id);
  g->element_words.push_back({});
  g->index.emplace(id, 0);
  for (size_t head = 0; head < g->elements.size(); ++head) {
    for (size_t gi = 0; gi < g->generator_matrices.size(); ++gi) {
      IntMatrix next = g->elements[head] * g->generator_matrices[gi];
      if (g->index.count(next)) continue;
      if (static_cast<int>(g->elements.size()) >= element_cap)
        throw NotFinite("group enumeration exceeded element cap " +
                        std::to_string(element_cap));
      std::vector<int> w = g->element_words[head];
      w.push_back(static_cast<int>(gi));
      g->index.emplace(next, static_cast<int>(g->elements.size()));
      g->elements.push_back(std::move(next));
      g->element_words.push_back(std::move(w));
    }
  }

  const int n = g->order();
  g->mul.assign(n, std::vector<int>(n, -1));
  g->inv.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = g->index_of(g->elements[i] * g->elements[j]);
      if (k < 0) throw CheckFailed("group not closed under multiplication");
      g->mul[i][j] = k;
      if (k == 0) g->inv[i] = j;
    }
  for (int i = 0; i < n; ++i)
    if (g->inv[i] < 0) throw CheckFailed("group element without inverse");
  return g;
}

bool Subgroup::contains(int e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

namespace {

std::vector<int> close_members(const FiniteMatrixGroup& g,
                               std::vector<int> seed) {
  std::set<int> have(seed.begin(), seed.end());
  have.insert(0);
  std::vector<int> queue(have.begin(), have.end());
  for (size_t head = 0; head < queue.size(); ++head)
    for (size_t j = 0; j < queue.size(); ++j) {
      for (int p : {g.mul[queue[head]][queue[j]], g.mul[queue[j]][queue[head]]})
        if (have.insert(p).second) queue.push_back(p);
    }
  return std::vector<int>(have.begin(), have.end());
}

}  // namespace

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& elems) {
  return Subgroup{g, close_members(*g, elems)};
}

std::vector<Subgroup> subgroups(const GroupPtr& g) {
  std::set<std::vector<int>> found;
  found.insert({0});
  // Seed with cyclic subgroups, then close under pairwise join.
  for (int e = 0; e < g->order(); ++e)
    found.insert(close_members(*g, {e}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(found.begin(), found.end());
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<int> join = snapshot[i];
        join.insert(join.end(), snapshot[j].begin(), snapshot[j].end());
        if (found.insert(close_members(*g, join)).second) grew = true;
      }
  }
  std::vector<Subgroup> out;
  for (const auto& m : found) out.push_back(Subgroup{g, m});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

std::vector<int> subgroup_conjugacy_representatives(
    const GroupPtr& g, const std::vector<Subgroup>& subs) {
  std::vector<int> reps;
  std::set<std::vector<int>> seen;
  for (size_t si = 0; si < subs.size(); ++si) {
    if (seen.count(subs[si].members)) continue;
    reps.push_back(static_cast<int>(si));
    for (int w = 0; w < g->order(); ++w) {
      std::vector<int> conj;
      conj.reserve(subs[si].members.size());
      for (int x : subs[si].members)
        conj.push_back(g->mul[g->mul[w][x]][g->inv[w]]);
      std::sort(conj.begin(), conj.end());
      seen.insert(std::move(conj));
    }
  }
  return reps;
}

bool is_normal(const Subgroup& u) {
  const FiniteMatrixGroup& g = *u.parent;
  for (int w = 0; w < g.order(); ++w)
    for (int x : u.members)
      if (!u.contains(g.mul[g.mul[w][x]][g.inv[w]])) return false;
  return true;
}

int cyclic_generator(const GroupPtr& g) {
  for (int e = 0; e < g->order(); ++e)
    if (static_cast<int>(close_members(*g, {e}).size()) == g->order()) return e;
  return -1;
}

GroupPtr direct_product_action(const GroupPtr& a, const GroupPtr& b,
                               int element_cap) {
  if (a->degree != b->degree)
    throw GroupMismatch("direct product factors have different degrees");
  for (int i = 0; i < a->order(); ++i)
    for (int j = 0; j < b->order(); ++j)
      if (!(a->elements[i] * b->elements[j] == b->elements[j] * a->elements[i]))
        throw NotCommuting("factors do not commute: " + a->word_name(i) +
                           " vs " + b->word_name(j));
  std::vector<std::pair<std::string, IntMatrix>> gens;
  std::set<std::string> used;
  for (size_t i = 0; i < a->generator_names.size(); ++i) {
    gens.emplace_back(a->generator_names[i], a->generator_matrices[i]);
    used.insert(a->generator_names[i]);
  }
  for (size_t i = 0; i < b->generator_names.size(); ++i) {
    std::string name = b->generator_names[i];
    while (used.count(name)) name += "'";
    used.insert(name);
    gens.emplace_back(name, b->generator_matrices[i]);
  }
  auto prod = generate(a->degree, gens, element_cap);
  auto mut = std::const_pointer_cast<FiniteMatrixGroup>(prod);
  mut->decomposition_note = "product of commuting factors of orders " +
                            std::to_string(a->order()) + " and " +
                            std::to_string(b->order());
  return prod;
}

FiniteAbelianGroup abelian_invariants(const GroupPtr& g) {
  if (!g->is_abelian()) throw NotAbelian("group is not abelian");
  const int n = g->order();
  // Present the group on all elements: x_i + x_j - x_{ij} = 0 for all pairs.
  IntMatrix rel(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int c = i * n + j;
      rel.at(i, c) += 1;
      rel.at(j, c) += 1;
      rel.at(g->mul[i][j], c) -= 1;
    }
  FiniteAbelianGroup inv = quotient_structure(IntMatrix::identity(n), rel);
  if (inv.free_rank != 0)
    throw CheckFailed("abelian invariants of a finite group came out infinite");
  if (inv.order() != n)
    throw CheckFailed("abelian invariants do not multiply to the group order");
  return inv;
}

std::vector<int> subgroup_generators(const Subgroup& u) {
  std::vector<int> gens;
  std::vector<int> closed = {0};
  for (int m : u.members) {
    if (std::binary_search(closed.begin(), closed.end(), m)) continue;
    gens.push_back(m);
    closed = close_members(*u.parent, gens);
  }
  return gens;
}

std::string subgroup_label(const Subgroup& u) {
  std::vector<int> gens = subgroup_generators(u);
  if (gens.empty()) return "<e>";
  std::ostringstream os;
  os << "<";
  for (size_t i = 0; i < gens.size(); ++i)
    os << (i ? "," : "") << u.parent->word_name(gens[i]);
  os << ">";
  return os.str();
}

std::vector<int> isomorphism_by_generator_names(const GroupPtr& a,
                                                const GroupPtr& b) {
  const int n = a->order();
  if (n != b->order())
    throw GroupMismatch("group orders differ: " + std::to_string(n) + " vs " +
                        std::to_string(b->order()));
  if (a->generator_names.size() != b->generator_names.size())
    throw GroupMismatch("generator counts differ");
  std::vector<int> bgen(a->generator_names.size());
  for (size_t i = 0; i < a->generator_names.size(); ++i) {
    auto it = std::find(b->generator_names.begin(), b->generator_names.end(),
                        a->generator_names[i]);
    if (it == b->generator_names.end())
      throw GroupMismatch("no generator named '" + a->generator_names[i] +
                          "' in the second group");
    size_t j = static_cast<size_t>(it - b->generator_names.begin());
    bgen[i] = b->index_of(b->generator_matrices[j]);
  }
  std::vector<int> phi(n);
  for (int e = 0; e < n; ++e) {
    int cur = 0;
    for (int gi : a->element_words[e]) cur = b->mul[cur][bgen[gi]];
    phi[e] = cur;
  }
  std::vector<char> hit(n, 0);
  for (int v : phi) {
    if (hit[v])
      throw GroupMismatch("generator names do not induce a bijection");
    hit[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (phi[a->mul[i][j]] != b->mul[phi[i]][phi[j]])
        throw GroupMismatch(
            "generator names do not respect the multiplication tables");
  return phi;
}

}  // namespace glat
