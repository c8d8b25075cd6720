#ifndef KZL_IO_HPP
#define KZL_IO_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kzl/graphs.hpp"
#include "kzl/lattice.hpp"
#include "kzl/polynomial.hpp"

namespace kzl {

// Ideal files: `ring: x1..xn[,y1..yn]` header, then one polynomial per line,
// `#` comments.
struct IdealFile {
  RingPtr ring;
  std::vector<Polynomial> polynomials;
};
IdealFile read_ideal_file(const std::string& path);
IdealFile parse_ideal_text(const std::string& text);
void write_ideal_file(const std::string& path, const RingPtr& ring,
                      const std::vector<Polynomial>& polynomials);

// `ring:` header body, e.g. "x1..x3,y1..y3" or "t,x,y".
RingPtr parse_ring_names(const std::string& body);
std::string ring_names_header(const Ring& ring);

// Graph files: `graph n=<n>`, one `i j` edge per line, `#` comments.
Graph read_graph_file(const std::string& path);
Graph parse_graph_text(const std::string& text);
void write_graph_file(const std::string& path, const Graph& g);

// Poset files (`poset` header, `a < b` covers, optional `elements:` line)
// and explicit lattice files (`lattice` header, `elements:` line, covers).
using PosetOrLattice = std::variant<Poset, DistributiveLattice>;
PosetOrLattice read_poset_or_lattice_file(const std::string& path);
PosetOrLattice parse_poset_or_lattice_text(const std::string& text);

// Filtration files: `quotient: <ideal-file>` header (resolved relative to
// the filtration file), then one member per line: comma-separated linear
// forms, `0`, or `m` for the maximal ideal.
struct FiltrationFile {
  std::optional<std::string> quotient_path;
  struct Member {
    bool maximal = false;
    std::vector<std::string> forms;  // empty + !maximal means the zero ideal
  };
  std::vector<Member> members;
};
FiltrationFile read_filtration_file(const std::string& path);
FiltrationFile parse_filtration_text(const std::string& text);

// Monomial images for the toric kernel: ring header then one monomial/line.
struct ImagesFile {
  RingPtr ring;
  std::vector<Monomial> images;
};
ImagesFile read_images_file(const std::string& path);
ImagesFile parse_images_text(const std::string& text);

std::string read_text_file(const std::string& path);
std::string directory_of(const std::string& path);

}  // namespace kzl

#endif
