#pragma once

/*
 * On-disk format for bracket tables.
 *
 * An algebra document is a JSON object
 *
 *   {
 *     "arity": 2,
 *     "dim": 4,
 *     "basis_names": ["e1", "e2", "e3", "e4"],      (optional)
 *     "brackets": [
 *       {"args": [2, 4], "value": {"e3": "1"}},
 *       ...
 *     ]
 *   }
 *
 * Argument indices are 1-based and strictly increasing; values map basis
 * names (or 1-based indices rendered as strings) to exact rationals "p/q".
 * Unknown fields are rejected.  Rendering is canonical - fixed field order,
 * brackets sorted by argument tuple, value entries in basis order - so
 * saving a loaded canonical file reproduces it byte for byte.
 */

#include "nlie/algebra.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace nlie {

/// Rejection of a malformed algebra document.  For syntax errors line and
/// column locate the offending byte (1-based); for semantic errors they are
/// zero and the message names the offending field or tuple.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& message, int line = 0, int column = 0)
      : std::runtime_error(message), m_line(line), m_column(column) {}

  int line() const { return m_line; }
  int column() const { return m_column; }

private:
  int m_line;
  int m_column;
};

/// An algebra together with the basis labels used by its document form.
struct AlgebraFile {
  NLieAlgebra algebra;
  std::vector<std::string> basis_names;  ///< empty when the file names none
};

/// "e1", ..., "e<dim>".
std::vector<std::string> default_basis_names(int dim);

/// Parses a document; throws ParseError on malformed input.
AlgebraFile parse_algebra_text(const std::string& text);

/// Reads and parses a file; throws std::runtime_error if unreadable.
AlgebraFile load_algebra_file(const std::string& path);

/// Canonical document text (two-space indent, trailing newline).
std::string render_algebra_text(const AlgebraFile& file);

/// Writes the canonical document; throws std::runtime_error if unwritable.
void save_algebra_file(const std::string& path, const AlgebraFile& file);

}  // namespace nlie
