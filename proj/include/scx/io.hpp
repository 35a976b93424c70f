#pragma once

#include <iosfwd>
#include <string>

#include "scx/complex.hpp"

namespace scx {

/// Facet file formats. Text: first line the vertex count, then one facet per
/// line as space-separated integers. Structured: a JSON object with integer
/// "n" and array-of-arrays "facets".
enum class FacetFormat { auto_detect, text, structured };

FacetFormat parse_facet_format(const std::string& s);
const char* facet_format_name(FacetFormat f);

/// Parse errors carry "<source>:<line>:" prefixes and throw validation_error.
Complex read_complex_text(std::istream& in, const std::string& source);
Complex read_complex_structured(std::istream& in, const std::string& source);

/// Reads a facet file, sniffing the format from the first non-space byte
/// ('{' means structured) unless one is forced.
Complex read_complex_file(const std::string& path, FacetFormat format = FacetFormat::auto_detect);

std::string to_facet_text(const Complex& k);
std::string to_facet_structured(const Complex& k);

void write_complex_file(const std::string& path, const Complex& k, FacetFormat format);

} // namespace scx
