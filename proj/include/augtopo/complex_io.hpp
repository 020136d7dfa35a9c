#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "augtopo/complex.hpp"

namespace augtopo {

/// {"void": bool, "facets": [[...]], "labels": {"id": "text"}}; labels only when present.
nlohmann::json to_json(const Complex& c);
Complex complex_from_json(const nlohmann::json& j);

/// One facet per line, '#' comments; a lone EMPTY is {∅ₒ}, a lone VOID is Void.
std::string to_text(const Complex& c);
Complex complex_from_text(const std::string& text);

/// Dispatches on content: a leading '{' means JSON, anything else the text format.
Complex parse_complex(const std::string& content);
Complex read_complex_file(const std::string& path);

}  // namespace augtopo
