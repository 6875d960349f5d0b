/// @file io.hpp
/// @brief The instance file format: one self-describing JSON document per
///        instance, growing from a bare coalgebra to a ribbon structure via
///        optional keys.
///
/// Canonical form: 2-space-indented JSON with the key order produced by
/// emit_instance, rational scalars written as integers when the denominator
/// is 1 and as "p/q" strings otherwise, prime-field scalars as integers.
/// Round trip: emit(parse(text)) is byte-identical on canonical files, and
/// parse(emit(inst)) reproduces inst exactly.

#ifndef HOPFPI_IO_HPP
#define HOPFPI_IO_HPP

#include <stdexcept>
#include <string>

#include "hopfpi/crossed.hpp"

namespace hopfpi {

/// Malformed input: JSON syntax errors, schema violations, bad scalars,
/// invalid Cayley tables, dimension mismatches.  The message names the
/// offending key.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses an instance document.  Throws IoError on any malformed input.
Instance parse_instance(const std::string& text);

/// Reads and parses a file; throws IoError when the file cannot be read.
Instance load_instance(const std::string& path);

/// Serializes to the canonical text form (terminated by one newline).
std::string emit_instance(const Instance& inst);

}  // namespace hopfpi

#endif  // HOPFPI_IO_HPP
