#pragma once

// Lattice definition files: JSON with fields name, rank, group.generators
// and action.generators (parallel lists of {name, matrix} with row-major
// integer matrices), and optional basis_labels. Matrix entries outside the
// signed 64-bit range are written as decimal strings; both forms are read.

#include <glat/lattice.hpp>

#include <iosfwd>
#include <string>

namespace glat {

// Parses a definition, regenerates the group from its named generators and
// extends the action along element words (the homomorphism property is
// verified). Malformed input raises ParseError naming the offending field.
GLattice read_lattice(std::istream& in, int element_cap = 10000);

// Reads from the named file, or standard input when path is "-".
GLattice read_lattice_file(const std::string& path, int element_cap = 10000);

std::string lattice_to_string(const GLattice& n);
void write_lattice(std::ostream& out, const GLattice& n);

}  // namespace glat
