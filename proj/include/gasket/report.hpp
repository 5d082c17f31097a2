#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gasket/spectrum.hpp"
#include "json.hpp"

namespace gasket {

using Json = nlohmann::ordered_json;

/// Interval as {"lo": .., "hi": ..}.
Json to_json(const Interval& x);

/// Constants report: h(1..22), H(1..2), K1, Koebe factors and composites.
Json constants_report();
std::string constants_text(const Json& report);

/// `wall_time_s` is null when `meta` is false so that output is reproducible.
Json to_json(const DimBracket& b, bool meta = true);
std::string dim_text(const DimBracket& b);

Json to_json(const TailVerdict& v);

Json to_json(const SpectrumStep& s);
/// Throws ParseError on a malformed step object.
SpectrumStep step_from_json(const Json& j);

/// Step files are JSON arrays of step objects. Throws ParseError on malformed
/// input, std::runtime_error when the file cannot be read.
std::vector<SpectrumStep> steps_from_json(const Json& j);
std::vector<SpectrumStep> load_steps(const std::string& path);
Json steps_to_json(const std::vector<SpectrumStep>& steps);

Json to_json(const Certificate& c);
Json to_json(const ChainReport& r);
std::string chain_text(const ChainReport& r);
std::string certificates_csv(const std::vector<Certificate>& certs);
std::string steps_csv(const std::vector<SpectrumStep>& steps);

struct RenderOptions {
  int iterations = 1;
  int truncation = 12;   // finite stand-in for cofinite systems
  bool descartes = false;
  int descartes_count = 8;
  std::size_t max_disks = 500'000;
};

struct RenderResult {
  std::string svg;
  std::size_t disks = 0;  // image disks drawn, unit circle and Descartes circles excluded
};

/// Unit circle plus the images of the closed disk under all words of length
/// 1..iterations over F (cut at `truncation`). Throws BudgetExceeded past
/// max_disks and std::invalid_argument for iterations outside 0..4.
RenderResult render_svg(const Subsystem& F, const RenderOptions& opts);

}  // namespace gasket
