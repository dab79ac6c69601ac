#pragma once

#include <iosfwd>
#include <string>

#include "recmat/presentation.hpp"

namespace recmat::io {

/// Presentation document: field tag, dim, optional state names, init, the
/// four shift matrices keyed 00/01/10/11, select. Canonical scalar strings,
/// whitespace-separated; round-trips bit-exactly.
void write_presentation(std::ostream& os, const Presentation& p);
std::string presentation_to_string(const Presentation& p);

Presentation read_presentation(std::istream& is);
Presentation presentation_from_string(const std::string& text);

Presentation load_presentation_file(const std::string& path);
void save_presentation_file(const std::string& path, const Presentation& p);

}  // namespace recmat::io
