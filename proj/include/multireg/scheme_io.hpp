#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "multireg/exact_linalg.hpp"
#include "multireg/fat_points.hpp"
#include "multireg/upset.hpp"

namespace multireg {

/// Malformed or invalid scheme document.
class SchemeFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parsed scheme file: the scheme plus the field named in its optional
/// "field" object (rational when absent).
struct SchemeFile {
  FatPointScheme scheme;
  Field field;
};

/// Parses
///   {"spaces":[n1,...,nk],
///    "points":[{"coords":[[...],...,[...]],"mult":m}, ...],
///    "field":{"mode":"rational"} | {"mode":"prime","p":P}}
/// "mult" defaults to 1 and "field" to rational. Throws SchemeFormatError.
SchemeFile parse_scheme(const std::string& text);
SchemeFile read_scheme_file(const std::string& path);

/// Compact JSON for a scheme, in the same format parse_scheme reads.
std::string scheme_to_json(const FatPointScheme& z);

/// {"corners":[[i1,...,ik],...]} with corners in lexicographic order.
std::string region_to_json(const UpSet& region);

/// "rational" or "prime:P" (P optional, default 2^31 - 1). Throws
/// SchemeFormatError for anything else.
Field parse_field_spec(const std::string& spec);

}  // namespace multireg
