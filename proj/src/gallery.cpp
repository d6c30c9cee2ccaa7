#include <glat/gallery.hpp>

#include <glat/errors.hpp>
#include <glat/group.hpp>

#include <string>
#include <utility>
#include <vector>

namespace glat {

namespace {

IntMatrix torus_rho() { return IntMatrix{{0, 0, 1}, {-1, -1, -1}, {1, 0, 0}}; }

IntMatrix torus_sigma() {
  return IntMatrix{{-1, -1, -1}, {0, 0, 1}, {0, 1, 0}};
}

}  // namespace

GLattice torus_pi_lattice() {
  auto g = generate(3, {{"rho", torus_rho()}, {"sigma", torus_sigma()}});
  return lattice_from_group_matrices(g, "torus_pi");
}

GLattice torus_w_lattice() {
  IntMatrix neg{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
  auto g = generate(
      3, {{"rho", torus_rho()}, {"sigma", torus_sigma()}, {"g", neg}});
  return lattice_from_group_matrices(g, "torus_w");
}

// Basis index map for N_n: 0 = s, 1 = l, 1+k = l_k and 2n+1+k = l_-k for
// k = 1..2n, 4n+2 = l_0, 4n+3 = l_inf.
GLattice trepalin_lattice(int n) {
  if (n < 1) throw InputError("trepalin_lattice: n must be >= 1");
  const int rank = 4 * n + 4;
  const int l0 = 4 * n + 2, linf = 4 * n + 3;

  IntMatrix sig = IntMatrix::zero(rank, rank);
  sig.at(0, 0) = 1;
  sig.at(1, 0) = 2 * n + 1;
  for (int i = 2; i < rank; ++i) sig.at(i, 0) = -1;
  sig.at(1, 1) = 1;
  for (int k = 1; k <= 2 * n; ++k) {
    sig.at(1, 1 + k) = 1;
    sig.at(2 * n + 1 + k, 1 + k) = -1;
    sig.at(1, 2 * n + 1 + k) = 1;
    sig.at(1 + k, 2 * n + 1 + k) = -1;
  }
  sig.at(1, l0) = 1;
  sig.at(l0, l0) = -1;
  sig.at(1, linf) = 1;
  sig.at(linf, linf) = -1;

  IntMatrix gm = IntMatrix::identity(rank);
  for (int k = 1; k <= 2 * n; ++k) {
    gm.at(1 + k, 1 + k) = 0;
    gm.at(2 * n + 1 + k, 2 * n + 1 + k) = 0;
    gm.at(2 * n + 1 + k, 1 + k) = 1;
    gm.at(1 + k, 2 * n + 1 + k) = 1;
  }

  std::vector<std::string> labels(rank);
  labels[0] = "s";
  labels[1] = "l";
  for (int k = 1; k <= 2 * n; ++k) {
    labels[1 + k] = "l" + std::to_string(k);
    labels[2 * n + 1 + k] = "l-" + std::to_string(k);
  }
  labels[l0] = "l0";
  labels[linf] = "linf";

  auto w = generate(rank, {{"sigma", sig}, {"g", gm}});
  if (w->order() != 4)
    throw CheckFailed("trepalin_lattice: group is not C2 x C2");
  GLattice lat = lattice_from_group_matrices(w, "N_" + std::to_string(n));
  lat.basis_labels = std::move(labels);
  return lat;
}

IntMatrix trepalin_fixed_generators(int n) {
  if (n < 1) throw InputError("trepalin_fixed_generators: n must be >= 1");
  const int rank = 4 * n + 4;
  IntMatrix m = IntMatrix::zero(rank, 2 * n + 2);
  m.at(0, 0) = 2;
  for (int i = 2; i < rank; ++i) m.at(i, 0) = -1;
  m.at(1, 1) = 1;
  for (int k = 1; k <= 2 * n; ++k) {
    m.at(1 + k, 1 + k) = 1;
    m.at(2 * n + 1 + k, 1 + k) = -1;
  }
  return m;
}

bool trepalin_sigma_s_consistency(int n, long sigma_s_l_offset) {
  GLattice lat = trepalin_lattice(n);
  const int rank = lat.rank;
  int se = lat.group->generator_element_indices()[0];
  const IntMatrix& sig = lat.action[se];

  IntMatrix sigma_s = sig.col(0);
  sigma_s.at(1, 0) += sigma_s_l_offset;
  IntMatrix d = sigma_s;
  d.at(0, 0) -= 1;  // sigma(s) - s
  IntMatrix lhs = d + d;

  IntMatrix rhs = IntMatrix::zero(rank, 1);
  for (int idx = 2; idx < rank; ++idx) {
    IntMatrix t = sig.col(idx);
    t.at(idx, 0) -= 1;  // sigma(L) - L
    rhs = rhs + t;
  }
  return lhs == rhs;
}

}  // namespace glat
