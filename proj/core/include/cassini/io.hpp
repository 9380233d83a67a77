#pragma once

#include <string>
#include <string_view>

#include "cassini/geometry.hpp"
#include "cassini/intrusion.hpp"
#include "cassini/line_vulnerability.hpp"
#include "cassini/spacing.hpp"

namespace cassini::io {

// All parsers throw InputError carrying line/column or field-path context.

/// {"transmitters": [[x,y],...], "receivers": [[x,y],...]}
RadarSet parse_radar_set(std::string_view json_text);
std::string to_json(const RadarSet& radars);

/// {"width": W, "height": H}
RectField parse_field(std::string_view json_text);
/// "WxH", e.g. "100x100".
RectField parse_field_dims(std::string_view text);

/// {"h": ..., "order": ["R","T",...], "positions": [...], "vulnerability": ...}
/// "vulnerability" is optional on input.
LineDeployment parse_line_deployment(std::string_view json_text);
std::string to_json(const LineDeployment& dep, double vulnerability);

/// {"weight": ..., "path": [[x,y],...]}
PathResult parse_path_result(std::string_view json_text);
std::string to_json(const PathResult& result);

std::string to_json(const VulnerabilityReport& report);

/// True if the document looks like a line deployment rather than a radar set.
bool is_line_deployment(std::string_view json_text);

/// Places a line deployment along the horizontal line y = height / 2 of a field.
RadarSet radars_on_midline(const LineDeployment& dep, const RectField& field);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace cassini::io
