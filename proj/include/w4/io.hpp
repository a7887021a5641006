#ifndef W4_IO_HPP
#define W4_IO_HPP

#include <iosfwd>
#include <string>

#include "w4/multigraph.hpp"

namespace w4 {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Text format: '#' comment lines, then "n m", then m lines "u v"
/// (0 <= u,v < n, u != v), one line per parallel copy.
Multigraph read_graph(std::istream& in);
Multigraph read_graph_string(const std::string& text);
Multigraph read_graph_file(const std::string& path); // "-" reads stdin

/// Writes canonical edge order with a trailing newline.
void write_graph(std::ostream& out, const Multigraph& g);
std::string write_graph_string(const Multigraph& g);
void write_graph_file(const std::string& path, const Multigraph& g); // "-" writes stdout

} // namespace w4

#endif
