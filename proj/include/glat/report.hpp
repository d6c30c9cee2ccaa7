#pragma once

// Deterministic report rendering. Human format prints sectioned lines and
// aligned tables; Kv prints sorted key=value lines with zero-padded
// subgroup keys, one fact per line.

#include <glat/cohomology.hpp>
#include <glat/lattice.hpp>
#include <glat/resolutions.hpp>

#include <string>

namespace glat {

enum class OutputFormat { Human, Kv };

std::string render_show(const GLattice& n, OutputFormat f);

// H1 over the full group, plus the per-subgroup profile (all_subgroups) or
// one selected subgroup (subgroup_index >= 0, in subgroups() order).
// with_dual adds the dual-lattice values. The two selectors are exclusive.
std::string render_cohomology(const GLattice& n, bool all_subgroups,
                              int subgroup_index, bool with_dual,
                              OutputFormat f);

std::string render_flasque_summary(const GLattice& m,
                                   const FlasqueResolution& r, OutputFormat f);

std::string render_check_permutation(const GLattice& n, OutputFormat f);

// flasque_side selects the label ("flasque" vs "coflasque").
std::string render_flasque_check(const GLattice& n, const FlasqueCheck& c,
                                 bool flasque_side, OutputFormat f);

std::string render_obstruction(const GLattice& n, const ObstructionReport& r,
                               OutputFormat f);

std::string render_similarity(const GLattice& a, const GLattice& b,
                              const SimilarityReport& r, OutputFormat f);

// The bundled end-to-end run over the built-in lattices: cohomology,
// flasque resolution and verdicts for the torus lattices, obstruction and
// similarity results for the conic-bundle family.
std::string theorem_b_report(OutputFormat f);

}  // namespace glat
